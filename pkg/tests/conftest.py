from fractions import Fraction

import pytest
from hypothesis import strategies as st

from superbranch import Partition, SuperWeight, natural_weight, twist

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def dominant_block(draw, k, base=None):
    top = draw(base if base is not None else st.integers(-4, 4).map(Fraction))
    gaps = draw(st.lists(st.integers(0, 3), min_size=max(k - 1, 0), max_size=max(k - 1, 0)))
    out = [top]
    for g in gaps:
        out.append(out[-1] - g)
    return tuple(out[:k])


@st.composite
def dominant_weights(draw, max_m=3, max_n=3, min_n=1, integral=False):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(min_n, max_n))
    base = st.integers(-4, 4).map(Fraction) if integral else rationals
    return SuperWeight(draw(dominant_block(m, base)), draw(dominant_block(n, base)) if n else ())


@st.composite
def partitions(draw, max_len=5, max_part=5):
    parts = draw(st.lists(st.integers(0, max_part), max_size=max_len))
    return Partition(sorted(parts, reverse=True))


@st.composite
def hook_partitions(draw, max_m=3, max_n=3):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    head = sorted(draw(st.lists(st.integers(0, 4), min_size=m, max_size=m)), reverse=True)
    tail_len = draw(st.integers(0, 3)) if head[-1] > 0 else 0
    cap = min(head[-1], n)
    tail = sorted(draw(st.lists(st.integers(0, cap), min_size=tail_len, max_size=tail_len)), reverse=True)
    return Partition(head + tail), m, n


@st.composite
def atypical_unitary_weights(draw, max_m=3, max_n=3):
    """Twists of polynomial weights that are atypical."""
    p, m, n = draw(hook_partitions(max_m, max_n).filter(lambda t: t[0].part(t[1]) < t[2]))
    s = draw(rationals)
    return twist(natural_weight(p, m, n), s)
