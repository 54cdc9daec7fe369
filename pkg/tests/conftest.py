import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from dahaknots.exactalg import LaurentQT, LaurentX, RatQT

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("HYPOTHESIS_MAX_EXAMPLES", "40")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

small_int = st.integers(min_value=-4, max_value=4)


@st.composite
def laurent_qt(draw, max_terms=3, exp=3):
    n = draw(st.integers(min_value=0, max_value=max_terms))
    terms = {}
    for _ in range(n):
        key = (draw(st.integers(-exp, exp)), draw(st.integers(-exp, exp)))
        terms[key] = draw(small_int)
    return LaurentQT(terms)


@st.composite
def ratqt(draw, nonzero=False):
    num = draw(laurent_qt())
    if nonzero and num.is_zero():
        num = LaurentQT.const(1)
    den = draw(laurent_qt(max_terms=2, exp=2))
    if den.is_zero():
        den = LaurentQT.const(1)
    return RatQT(num, den)


@st.composite
def laurent_x(draw, max_terms=3, exp=3):
    n = draw(st.integers(min_value=0, max_value=max_terms))
    return LaurentX({draw(st.integers(-exp, exp)): draw(ratqt()) for _ in range(n)})


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, detail = RESULTS[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
