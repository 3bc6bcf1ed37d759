import numpy as np
import pytest
from hypothesis import strategies as st

from frame_noise.model import make_case, validate

THETA1 = (2, 3, 2, 1, 3)
THETA2 = (3, 6, -3, 0, 2)


@pytest.fixture
def att1():
    return validate(THETA1, index=1)


@pytest.fixture
def att2():
    return validate(THETA2, index=2)


@pytest.fixture
def example1():
    return make_case("example1", [THETA1, THETA2], "fall")


@st.composite
def attacker_params(draw, max_width=3.0, sign=None):
    e = draw(st.floats(0.2, 4.0))
    p = e * draw(st.floats(0.05, 0.95))
    m = draw(st.floats(0.0, 2.0))
    if sign is None:
        m = m if draw(st.booleans()) else -m
    elif sign < 0:
        m = -m
    a = draw(st.floats(-3.0, 5.0))
    b = a + draw(st.one_of(st.just(0.0), st.floats(0.0, max_width)))
    return (p, e, m, a, b)


@st.composite
def chain_cases(draw, n_max=5, max_width=3.0, sign=None):
    n = draw(st.integers(1, n_max))
    params = [draw(attacker_params(max_width=max_width, sign=sign)) for _ in range(n)]
    return make_case("h", params)


def dense_trace(att, ts, n_shifts=2001):
    """Pointwise max and min of the shifted bump over a dense shift grid."""
    from frame_noise.model import eval_shifted

    s = np.linspace(att.a, att.b, n_shifts)
    vals = eval_shifted(att, s[:, None], np.asarray(ts, dtype=float)[None, :])
    return vals.max(axis=0), vals.min(axis=0)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record a named acceptance verdict, then assert it."""

    def check(name, ok, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        assert ok, f"{name}: {detail}"

    return check


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
