import os
import re
from datetime import datetime
from typing import Any, Dict, List, Optional

OUTPUT_DIR = "outputs"
REPORT_FILE = "ANALYSIS.md"


def ensure_dir(path: str):
    os.makedirs(path, exist_ok=True)


def write_file(path: str, content: str):
    with open(path, "w", encoding="utf-8") as f:
        f.write(content)


def report_name_from_polynomial(text: str) -> str:
    """Filesystem-safe folder name for a polynomial, e.g. "3x^4 - x" -> "3x4_minus_x"."""
    name = text.replace(" - ", "_minus_").replace(" + ", "_plus_").replace("/", "over")
    name = re.sub(r"[^a-zA-Z0-9_]", "", name.replace("-", "neg"))
    return name[:80] or "polynomial"


def _blocks_table(blocks: List[Dict[str, Any]]) -> str:
    if not blocks:
        return "No internal zero coefficients: every pair of neighbours is an alternation or a permanence.\n"
    lines = [
        "| Block | Zeros | Loss |",
        "|-------|-------|------|",
    ]
    for b in blocks:
        lines.append(f"| `{b['left_sign']} {'0 ' * b['zero_run']}{b['right_sign']}` | {b['zero_run']} | {b['loss']} |")
    return "\n".join(lines) + "\n"


def _budan_section(budan: Optional[Dict[str, Any]]) -> str:
    if not budan:
        return ""
    staircase = ""
    if budan.get("profile"):
        staircase = "\nSign variations along the interval:\n\n" + "\n".join(
            f"- v(P, {t}) = {v}" for t, v in budan["profile"]
        ) + "\n"
    return f"""
## Budan's Rule on ({budan['a']}, {budan['b']}]

| v(P, a) | v(P, b) | Bound | Parity |
|---------|---------|-------|--------|
| {budan['v_at_a']} | {budan['v_at_b']} | {budan['bound']} | {budan['parity']} |

The number of roots in the interval, counted with multiplicity, is at most {budan['bound']} and has the same parity.
{staircase}"""


def _exact_section(exact: Optional[Dict[str, int]]) -> str:
    if not exact:
        return ""
    return f"""
## Exact Root Counts (Sturm)

| Positive | Negative | Zero |
|----------|----------|------|
| {exact['positive']} | {exact['negative']} | {exact['zero']} |
"""


def _roots_section(roots: Optional[List[Dict[str, Any]]]) -> str:
    if roots is None:
        return ""
    if not roots:
        return "\n## Real Roots\n\nNo real roots.\n"
    lines = ["", "## Real Roots", "", "| Location | Multiplicity |", "|----------|--------------|"]
    for r in roots:
        where = f"x = {r['point']}" if "point" in r else f"({r['interval'][0]}, {r['interval'][1]}]"
        lines.append(f"| {where} | {r['multiplicity']} |")
    return "\n".join(lines) + "\n"


def generate_analysis_md(doc: Dict[str, Any]) -> str:
    """Markdown report for an analysis document dict."""
    descartes = doc["descartes"]
    de_gua = doc["de_gua"]
    newton = de_gua.get("newton_violations") or []
    newton_md = ""
    if newton:
        newton_md = (
            f"\nCoefficient test: a_i² < a_(i-1)·a_(i+1) at i = {', '.join(str(i) for i in newton)}, "
            "so some roots are certainly not real.\n"
        )

    return f"""# Sign Rule Analysis: `{doc['input']}`

Generated on: {datetime.now().strftime("%Y-%m-%d %H:%M")}

## Sign Counts

| Degree | Zero roots | Alternations v(P) | Permanences c(P) |
|--------|------------|-------------------|------------------|
| {doc['degree']} | {doc['z0']} | {doc['v']} | {doc['c']} |

## Descartes's Rule

- Positive roots: at most **{descartes['positive_upper']}**, with parity {descartes['positive_parity']}
- Negative roots: at most **{descartes['negative_upper']}**, with parity {descartes['negative_parity']}

## De Gua's Rule

Imaginary roots: at least **{de_gua['imaginary_lower']}**.

{_blocks_table(de_gua['blocks'])}{newton_md}{_budan_section(doc.get('budan'))}{_exact_section(doc.get('exact'))}{_roots_section(doc.get('roots'))}"""


def write_report(doc: Dict[str, Any], out_dir: Optional[str] = None) -> str:
    if out_dir is None:
        out_dir = os.path.join(OUTPUT_DIR, report_name_from_polynomial(doc["input"]))
    ensure_dir(out_dir)
    path = os.path.join(out_dir, REPORT_FILE)
    write_file(path, generate_analysis_md(doc))
    return path
