"""Command-line front end: analyze, budan, isolate, report, verify.

Run with `python -m src.cli <command> ...`. Polynomials are given either as
an expression ("3x^4 - x", "+7/2x^2 - 1") or as a bracketed coefficient list
in descending powers ("[1, 0, -1]"). Polynomials and endpoints may start with a
minus sign ("-x^3+1", "-1/2").
"""
import argparse
import json
import logging
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from src.acceptance import run_acceptance
from src.budan import budan_bound, variation_profile
from src.errors import ParseError, PolynomialError
from src.isolation import IsolatedRoot, isolate_real_roots, refine
from src.poly_core import Polynomial, require_nonconstant
from src.reports import write_report
from src.sign_rules import de_gua_blocks, descartes_report, newton_gap_violations
from src.sturm_oracle import exact_root_counts

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2
PROFILE_STEPS = 4
COMMANDS = ("analyze", "budan", "isolate", "report", "verify")
VALUE_OPTIONS = {"--width", "--out", "--seed", "--scale"}

TERM_RE = re.compile(
    r"""
    (?P<sign>[+-])?\s*
    (?P<coef>\d+(?:/\d+)?)?\s*
    (?P<star>\*)?\s*
    (?:(?P<var>[xX])(?:\s*\^\s*(?P<exp>\d+))?)?
    """,
    re.VERBOSE,
)
RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


# -----------------------------
# Parsing and formatting
# -----------------------------

def _rational_token(token: str, position: int) -> Fraction:
    if not RATIONAL_RE.match(token):
        raise ParseError(f"malformed coefficient {token!r}", position)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {token!r}", position)


def _parse_coefficient_list(text: str, offset: int) -> Polynomial:
    if not text.endswith("]"):
        raise ParseError("missing closing ']'", offset + len(text))
    inner = text[1:-1]
    if not inner.strip():
        return Polynomial(())
    coeffs: List[Fraction] = []
    pos = offset + 1
    for entry in inner.split(","):
        stripped = entry.strip()
        start = pos + (len(entry) - len(entry.lstrip()))
        if not stripped:
            raise ParseError("empty coefficient", start)
        coeffs.append(_rational_token(stripped, start))
        pos += len(entry) + 1
    # descending on input, ascending in storage
    return Polynomial(tuple(reversed(coeffs)))


def _parse_expression(text: str) -> Polynomial:
    terms: Dict[int, Fraction] = {}
    pos = 0
    n = len(text)
    first = True
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos == n:
            break
        m = TERM_RE.match(text, pos)
        sign, coef, star, var, exp = m.group("sign", "coef", "star", "var", "exp")
        if coef is None and var is None:
            bad = m.end()
            if bad == n:
                raise ParseError("expected a term", bad)
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        if star and var is None:
            raise ParseError("expected 'x' after '*'", m.end())
        if not first and sign is None:
            raise ParseError("expected '+' or '-' between terms", pos)
        value = _rational_token(coef, m.start("coef")) if coef else Fraction(1)
        if sign == "-":
            value = -value
        power = 0 if var is None else (int(exp) if exp else 1)
        terms[power] = terms.get(power, Fraction(0)) + value
        pos = m.end()
        first = False
    if not terms:
        return Polynomial(())
    coeffs = [Fraction(0)] * (max(terms) + 1)
    for power, value in terms.items():
        coeffs[power] = value
    return Polynomial(tuple(coeffs))


def parse_polynomial(text: str) -> Polynomial:
    """Parse expression syntax or a descending "[a_n, ..., a_0]" list."""
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    if stripped.startswith("["):
        return _parse_coefficient_list(stripped, offset)
    return _parse_expression(text)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"malformed rational {text!r}", 0)


def format_polynomial(p: Polynomial) -> str:
    """Descending-power text that parse_polynomial reads back unchanged."""
    if p.is_zero():
        return "0"
    parts: List[str] = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        coef = "" if (mag == 1 and i > 0) else str(mag)
        var = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        term = coef + var
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts)


# -----------------------------
# Analysis document
# -----------------------------

@dataclass
class AnalysisDocument:
    input: str
    degree: int
    z0: int
    v: int
    c: int
    descartes: Dict[str, int]
    de_gua: Dict[str, Any]
    budan: Optional[Dict[str, Any]] = None
    exact: Optional[Dict[str, int]] = None
    roots: Optional[List[Dict[str, Any]]] = None

    def to_dict(self) -> Dict[str, Any]:
        out = {
            "input": self.input,
            "degree": self.degree,
            "z0": self.z0,
            "v": self.v,
            "c": self.c,
            "descartes": dict(self.descartes),
            "de_gua": dict(self.de_gua),
        }
        for key in ("budan", "exact", "roots"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AnalysisDocument":
        return cls(
            input=data["input"],
            degree=data["degree"],
            z0=data["z0"],
            v=data["v"],
            c=data["c"],
            descartes=data["descartes"],
            de_gua=data["de_gua"],
            budan=data.get("budan"),
            exact=data.get("exact"),
            roots=data.get("roots"),
        )


def _root_entry(root: IsolatedRoot) -> Dict[str, Any]:
    if root.is_exact:
        return {"point": str(root.low), "multiplicity": root.multiplicity}
    return {"interval": [str(root.low), str(root.high)], "multiplicity": root.multiplicity}


def build_document(p: Polynomial) -> AnalysisDocument:
    require_nonconstant(p)
    report = descartes_report(p)
    counts = report.counts
    return AnalysisDocument(
        input=format_polynomial(p),
        degree=counts.degree,
        z0=counts.zero_roots,
        v=counts.alternations,
        c=counts.permanences,
        descartes={
            "positive_upper": report.positive_upper,
            "negative_upper": report.negative_upper,
            "positive_parity": report.positive_parity,
            "negative_parity": report.negative_parity,
        },
        de_gua={
            "imaginary_lower": report.imaginary_lower,
            "blocks": [
                {
                    "left_sign": str(b.left_sign),
                    "right_sign": str(b.right_sign),
                    "zero_run": b.zero_run_length,
                    "loss": b.loss,
                }
                for b in de_gua_blocks(p)
            ],
            "newton_violations": newton_gap_violations(p),
        },
    )


def cmd_analyze(p: Polynomial, exact: bool = False) -> AnalysisDocument:
    doc = build_document(p)
    if exact:
        counts = exact_root_counts(p)
        doc.exact = {"positive": counts.positive, "negative": counts.negative, "zero": counts.zero}
    return doc


def cmd_budan(p: Polynomial, a: Fraction, b: Fraction) -> AnalysisDocument:
    doc = build_document(p)
    rep = budan_bound(p, a, b)
    step = (b - a) / PROFILE_STEPS
    profile = variation_profile(p, [a + k * step for k in range(PROFILE_STEPS + 1)])
    doc.budan = {
        "a": str(rep.interval[0]),
        "b": str(rep.interval[1]),
        "v_at_a": rep.v_at_a,
        "v_at_b": rep.v_at_b,
        "bound": rep.bound,
        "parity": rep.parity,
        "profile": [[str(t), v] for t, v in profile],
    }
    return doc


def cmd_isolate(p: Polynomial, width: Optional[Fraction] = None) -> AnalysisDocument:
    doc = build_document(p)
    roots = isolate_real_roots(p)
    if width is not None:
        roots = [refine(r, p, width) for r in roots]
    doc.roots = [_root_entry(r) for r in roots]
    return doc


def render_text(doc: AnalysisDocument) -> str:
    lines = [
        f"polynomial        {doc.input}",
        f"degree            {doc.degree}",
        f"zero roots (z0)   {doc.z0}",
        f"alternations (v)  {doc.v}",
        f"permanences (c)   {doc.c}",
        "",
        "Descartes",
        f"  positive roots  <= {doc.descartes['positive_upper']} (parity {doc.descartes['positive_parity']})",
        f"  negative roots  <= {doc.descartes['negative_upper']} (parity {doc.descartes['negative_parity']})",
        "",
        "De Gua",
        f"  imaginary roots >= {doc.de_gua['imaginary_lower']}",
    ]
    for blk in doc.de_gua["blocks"]:
        lines.append(
            f"  block {blk['left_sign']} 0x{blk['zero_run']} {blk['right_sign']}   loss {blk['loss']}"
        )
    if doc.de_gua.get("newton_violations"):
        idx = ", ".join(str(i) for i in doc.de_gua["newton_violations"])
        lines.append(f"  a_i^2 < a_(i-1) a_(i+1) at i = {idx}: non-real roots present")
    if doc.budan is not None:
        bd = doc.budan
        lines += [
            "",
            f"Budan on ({bd['a']}, {bd['b']}]",
            f"  v(P, a) = {bd['v_at_a']}   v(P, b) = {bd['v_at_b']}",
            f"  roots   <= {bd['bound']} (parity {bd['parity']})",
        ]
        if bd.get("profile"):
            lines.append("  v(P, t): " + "  ".join(f"{t} -> {v}" for t, v in bd["profile"]))
    if doc.exact is not None:
        ex = doc.exact
        lines += ["", f"Exact (Sturm)  positive {ex['positive']}  negative {ex['negative']}  zero {ex['zero']}"]
    if doc.roots is not None:
        lines += ["", f"Real roots ({len(doc.roots)})"]
        for r in doc.roots:
            where = f"= {r['point']}" if "point" in r else f"in ({r['interval'][0]}, {r['interval'][1]}]"
            lines.append(f"  {where}   multiplicity {r['multiplicity']}")
    return "\n".join(lines)


# -----------------------------
# Entry point
# -----------------------------

def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signrules",
        description="Descartes, Fourier, De Gua and Budan root bounds with an exact Sturm oracle.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug output to stderr.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="Sign counts, Descartes bounds and De Gua losses.")
    p_an.add_argument("polynomial")
    p_an.add_argument("--exact", action="store_true", help="Add exact root counts from Sturm chains.")
    p_an.add_argument("--json", action="store_true", help="Emit the analysis document as JSON.")

    p_bd = sub.add_parser("budan", help="Budan bound on the roots in (a, b].")
    p_bd.add_argument("polynomial")
    p_bd.add_argument("a", type=parse_rational)
    p_bd.add_argument("b", type=parse_rational)
    p_bd.add_argument("--json", action="store_true")

    p_is = sub.add_parser("isolate", help="Isolate the distinct real roots.")
    p_is.add_argument("polynomial")
    p_is.add_argument("--width", type=parse_rational, default=None, help="Refine intervals to this width (p/q).")
    p_is.add_argument("--json", action="store_true")

    p_rp = sub.add_parser("report", help="Write a markdown analysis report.")
    p_rp.add_argument("polynomial")
    p_rp.add_argument("--exact", action="store_true")
    p_rp.add_argument("--width", type=parse_rational, default=None)
    p_rp.add_argument("--out", default=None, help="Output directory (default: outputs/<polynomial>).")

    p_vf = sub.add_parser("verify", help="Run the sign-rule property checks on a random corpus.")
    p_vf.add_argument("--seed", type=int, default=None)
    p_vf.add_argument("--scale", type=float, default=0.1, help="Fraction of the full corpus sizes to run.")
    p_vf.add_argument("--json", action="store_true")
    return parser


def _run_verify(args) -> int:
    results = run_acceptance(seed=args.seed, scale=args.scale)
    if args.json:
        print(json.dumps([r.to_dict() for r in results], indent=2))
    else:
        for r in results:
            status = "ok" if r.passed else "FAILED"
            print(f"{r.name:<28} {r.cases:>6} cases  {r.failed:>3} failures  {r.seconds:7.2f}s  {status}")
            for example in r.failures[:5]:
                print(f"    -> {example}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_DOMAIN_ERROR


def positionals_last(argv: Sequence[str]) -> List[str]:
    """Move a command's positional values behind "--".

    argparse reads "-1/2" or "-x^3+7x+6" as unknown options; after "--"
    they are plain values. Options and their arguments keep their place.
    """
    argv = list(argv)
    start = next((i + 1 for i, tok in enumerate(argv) if tok in COMMANDS), None)
    if start is None:
        return argv
    options: List[str] = []
    values: List[str] = []
    rest = iter(argv[start:])
    for tok in rest:
        if tok == "--":
            values.extend(rest)
            break
        if tok.startswith("--") or tok == "-h":
            options.append(tok)
            if tok in VALUE_OPTIONS:
                value = next(rest, None)
                if value is not None:
                    options.append(value)
        else:
            values.append(tok)
    return argv[:start] + options + (["--"] + values if values else [])


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(positionals_last(sys.argv[1:] if argv is None else argv))
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    if args.command == "verify":
        return _run_verify(args)

    if args.command == "budan" and args.a > args.b:
        parser.error(f"budan: a = {args.a} is greater than b = {args.b}")

    try:
        poly = parse_polynomial(args.polynomial)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    logger.debug("%s on %s", args.command, format_polynomial(poly))

    try:
        if args.command == "analyze":
            doc = cmd_analyze(poly, exact=args.exact)
        elif args.command == "budan":
            doc = cmd_budan(poly, args.a, args.b)
        elif args.command == "isolate":
            doc = cmd_isolate(poly, width=args.width)
        else:
            doc = cmd_analyze(poly, exact=args.exact)
            doc.roots = cmd_isolate(poly, width=args.width).roots
            path = write_report(doc.to_dict(), out_dir=args.out)
            print(path)
            return EXIT_OK
    except PolynomialError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR

    print(doc.to_json() if args.json else render_text(doc))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
