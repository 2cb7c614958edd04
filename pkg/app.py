import os
import streamlit as st

from src.cli import cmd_analyze, cmd_budan, cmd_isolate, parse_polynomial, parse_rational
from src.errors import SignRulesError
from src.reports import (
    OUTPUT_DIR,
    REPORT_FILE,
    generate_analysis_md,
    report_name_from_polynomial,
    write_report,
)

st.title("Sign Rules Explorer")
st.caption("Descartes, Fourier, De Gua and Budan root bounds, checked against exact Sturm counts.")

text = st.text_input("Polynomial (e.g. 3x^4 - x, or [1, 0, -1])", value="x^3 - 7x + 6")

if "poly" not in st.session_state:
    st.session_state.poly = None
if "doc" not in st.session_state:
    st.session_state.doc = None

# results belong to the text that was analyzed
if st.session_state.get("analyzed_text") != text:
    st.session_state.poly = None
    st.session_state.doc = None

exact = st.checkbox("Exact root counts (Sturm)")

if st.button("Analyze"):
    try:
        st.session_state.poly = parse_polynomial(text)
        st.session_state.analyzed_text = text
        with st.spinner("Counting sign changes..."):
            st.session_state.doc = cmd_analyze(st.session_state.poly, exact=exact)
        st.success("Analysis done!")
    except SignRulesError as err:
        st.session_state.doc = None
        st.error(str(err))

doc = st.session_state.doc
if doc:
    st.subheader(f"P(X) = {doc.input}")
    col1, col2, col3, col4 = st.columns(4)
    col1.metric("Degree", doc.degree)
    col2.metric("Zero roots", doc.z0)
    col3.metric("Alternations v(P)", doc.v)
    col4.metric("Permanences c(P)", doc.c)

    st.write(f"**Positive roots:** at most {doc.descartes['positive_upper']} (parity {doc.descartes['positive_parity']})")
    st.write(f"**Negative roots:** at most {doc.descartes['negative_upper']} (parity {doc.descartes['negative_parity']})")
    st.write(f"**Imaginary roots:** at least {doc.de_gua['imaginary_lower']}")
    if doc.de_gua["blocks"]:
        st.table(doc.de_gua["blocks"])
    if doc.exact:
        st.write("**Exact counts:**", doc.exact)

    st.divider()
    st.subheader("Budan's rule")
    a_text = st.text_input("a", value="0")
    b_text = st.text_input("b", value="2")
    if st.button("Bound roots in (a, b]"):
        try:
            a, b = parse_rational(a_text), parse_rational(b_text)
            if a > b:
                st.warning("a must not be greater than b")
            else:
                bd = cmd_budan(st.session_state.poly, a, b).budan
                st.write(f"v(P, a) = {bd['v_at_a']}, v(P, b) = {bd['v_at_b']}")
                st.write(f"**At most {bd['bound']} root(s)**, parity {bd['parity']}")
                st.table([{"t": t, "v(P, t)": v} for t, v in bd["profile"]])
        except SignRulesError as err:
            st.error(str(err))

    st.divider()
    st.subheader("Real roots")
    width_text = st.text_input("Refine to width (optional, e.g. 1/1000)", value="")
    if st.button("Isolate Roots"):
        try:
            width = parse_rational(width_text) if width_text.strip() else None
            with st.spinner("Bisecting..."):
                roots = cmd_isolate(st.session_state.poly, width=width).roots
            if roots:
                for r in roots:
                    where = f"x = {r['point']}" if "point" in r else f"x in ({r['interval'][0]}, {r['interval'][1]}]"
                    st.write(f"- {where}, multiplicity {r['multiplicity']}")
            else:
                st.write("No real roots.")
        except SignRulesError as err:
            st.error(str(err))

    st.divider()
    if st.button("Generate Report"):
        try:
            with st.spinner("Writing report..."):
                full = cmd_analyze(st.session_state.poly, exact=True)
                full.roots = cmd_isolate(st.session_state.poly).roots
                path = write_report(full.to_dict())
                md = generate_analysis_md(full.to_dict())
                as_json = full.to_json()
            st.success(f"Generated: {path}")

            tab1, tab2 = st.tabs(["Report", "JSON"])
            with tab1:
                st.markdown(md)
                st.download_button(f"Download {REPORT_FILE}", md, REPORT_FILE, mime="text/markdown")
            with tab2:
                st.code(as_json, language="json")
                name = report_name_from_polynomial(full.input) + ".json"
                st.download_button(f"Download {name}", as_json, name, mime="application/json")
            st.caption(f"Reports are kept under {os.path.abspath(OUTPUT_DIR)}")
        except SignRulesError as err:
            st.error(str(err))
