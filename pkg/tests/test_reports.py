import os
from fractions import Fraction

import pytest

from src.cli import cmd_analyze, cmd_budan, cmd_isolate, parse_polynomial
from src.reports import REPORT_FILE, generate_analysis_md, report_name_from_polynomial, write_report


@pytest.mark.parametrize(
    "text, name",
    [
        ("3x^4 - x", "3x4_minus_x"),
        ("x^2 + 1", "x2_plus_1"),
        ("-7/2x^2", "neg7over2x2"),
    ],
)
def test_report_name_from_polynomial(text, name):
    assert report_name_from_polynomial(text) == name


def test_markdown_has_the_core_sections():
    md = generate_analysis_md(cmd_analyze(parse_polynomial("3x^4 - x")).to_dict())
    assert md.startswith("# Sign Rule Analysis: `3x^4 - x`")
    assert "Generated on:" in md
    assert "| 4 | 1 | 1 | 0 |" in md
    assert "Imaginary roots: at least **2**." in md
    assert "| `+ 0 0 -` | 2 | 2 |" in md
    assert "Budan" not in md
    assert "Real Roots" not in md


def test_markdown_without_zero_blocks():
    md = generate_analysis_md(cmd_analyze(parse_polynomial("x^2 - 3x + 2")).to_dict())
    assert "No internal zero coefficients" in md


def test_markdown_flags_coefficient_gaps():
    md = generate_analysis_md(cmd_analyze(parse_polynomial("x^2 + 1")).to_dict())
    assert "at i = 1" in md


def test_markdown_optional_sections():
    p = parse_polynomial("x^2 - 1")
    doc = cmd_budan(p, Fraction(0), Fraction(2))
    doc.exact = {"positive": 1, "negative": 1, "zero": 0}
    doc.roots = cmd_isolate(p).roots
    md = generate_analysis_md(doc.to_dict())
    assert "## Budan's Rule on (0, 2]" in md
    assert "- v(P, 0) = 1" in md
    assert "## Exact Root Counts (Sturm)" in md
    assert "| (-2, 0] | 1 |" in md


def test_markdown_no_real_roots():
    p = parse_polynomial("x^2 + 1")
    doc = cmd_isolate(p)
    assert "No real roots." in generate_analysis_md(doc.to_dict())


def test_write_report(tmp_path):
    doc = cmd_analyze(parse_polynomial("x^2 - 1")).to_dict()
    path = write_report(doc, out_dir=str(tmp_path / "nested"))
    assert path == os.path.join(str(tmp_path / "nested"), REPORT_FILE)
    with open(path, "r", encoding="utf-8") as f:
        assert f.read().startswith("# Sign Rule Analysis")


def test_write_report_default_location(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    path = write_report(cmd_analyze(parse_polynomial("3x^4 - x")).to_dict())
    assert path == os.path.join("outputs", "3x4_minus_x", REPORT_FILE)
    assert (tmp_path / path).exists()
