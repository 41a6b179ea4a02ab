import pytest
from hypothesis import strategies as st

from padic_forking import Context, Vector

SMALL_CONTEXTS = [(2, 2, 2), (2, 3, 2), (2, 2, 3), (3, 2, 2), (3, 3, 2)]


@st.composite
def contexts(draw, choices=SMALL_CONTEXTS):
    return Context(*draw(st.sampled_from(choices)))


@st.composite
def vectors(draw, ctx):
    return Vector(ctx, tuple(draw(st.integers(-3 * ctx.modulus, 3 * ctx.modulus)) for _ in range(ctx.n)))


@st.composite
def context_and_vectors(draw, count, choices=SMALL_CONTEXTS):
    ctx = draw(contexts(choices))
    return ctx, [draw(vectors(ctx)) for _ in range(count)]


@pytest.fixture
def c3():
    """p=3, N=4, n=2."""
    return Context(3, 4, 2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
