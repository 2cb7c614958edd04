from streamlit.testing.v1 import AppTest

APP = "../app.py"


def analyzed(text: str) -> AppTest:
    at = AppTest.from_file(APP).run()
    at.text_input[0].set_value(text).run()
    at.button[0].click().run()
    return at


def test_analyze_stores_the_document():
    at = analyzed("x^2 - 1")
    assert not at.exception
    assert at.session_state["doc"].input == "x^2 - 1"


def test_editing_the_polynomial_drops_the_old_analysis():
    at = analyzed("x^2 - 1")
    at.text_input[0].set_value("x^2 + 1").run()
    assert at.session_state["doc"] is None
    assert at.session_state["poly"] is None
    # only the Analyze button remains
    assert len(at.button) == 1


def test_parse_error_is_shown():
    at = analyzed("3x^^2")
    assert at.session_state["doc"] is None
    assert "position 2" in at.error[0].value
