import pytest
from hypothesis import given, strategies as st

from superbranch import (
    NotUnitaryError,
    Partition,
    WeightError,
    classify_type1,
    classify_type2,
    conjugate,
    dual_weight,
    hook_from_atypical,
    is_hook,
    lowest_weight_poly,
    natural_weight,
    parse_partition,
    parse_weight,
    removable_vertical_strips,
    twist,
    vertical_strips,
)
from superbranch.branching import interlacing_candidates

from .conftest import atypical_unitary_weights, dominant_weights, hook_partitions, partitions

W = parse_weight
P = Partition


def test_partition_normalizes():
    assert P((2, 1, 0, 0)) == P((2, 1))
    assert hash(P((3, 0))) == hash(P((3,)))
    assert P(()).size == 0 and P((2, 1)).size == 3
    assert P((2, 1)).part(5) == 0
    with pytest.raises(WeightError):
        P((1, 2))
    with pytest.raises(WeightError):
        P((1, -1))


def test_parse_partition():
    assert parse_partition("") == P(())
    assert parse_partition("3, 1") == P((3, 1))
    with pytest.raises(WeightError):
        parse_partition("1,x")


@pytest.mark.parametrize("p, c", [((2, 1), (2, 1)), ((3, 1), (2, 1, 1)), ((), ())])
def test_conjugate_examples(p, c):
    assert conjugate(P(p)) == P(c)


@given(partitions())
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size


def test_is_hook_examples():
    assert not is_hook(P((3, 3, 3)), 2, 2)
    assert is_hook(P((3, 3, 2)), 2, 2)
    assert is_hook(P((9, 9)), 2, 0)


@pytest.mark.parametrize(
    "p, m, n, w",
    [((1,), 2, 2, "1,0|0,0"), ((2, 1), 1, 1, "2|1"), ((3, 3, 2, 1), 2, 3, "3,3|2,1,0")],
)
def test_natural_weight_examples(p, m, n, w):
    assert natural_weight(P(p), m, n) == W(w)


def test_natural_weight_rejects_non_hook():
    with pytest.raises(WeightError):
        natural_weight(P((3, 3, 3)), 2, 2)


def test_hook_from_atypical_examples():
    assert hook_from_atypical(W("1,0|0,0")) == (2, P((1,)))
    assert hook_from_atypical(W("0|0")) == (1, P(()))
    d, sigma = hook_from_atypical(W("1,-1|1,1"))
    assert sigma == P((2,))
    assert natural_weight(sigma, 2, 2) == twist(W("1,-1|1,1"), 1)
    with pytest.raises(NotUnitaryError):
        hook_from_atypical(W("1|0"))


@given(atypical_unitary_weights())
def test_sigma_natural_is_twist(w):
    d, sigma = hook_from_atypical(w)
    assert len(sigma) <= d
    assert natural_weight(sigma, w.m, w.n) == twist(w, w.omega[-1])


def test_lowest_weight_examples():
    assert lowest_weight_poly(P((1,)), 2, 2) == W("0,0|0,1")
    assert lowest_weight_poly(P((2, 1)), 1, 1) == W("1|2")
    assert lowest_weight_poly(P(()), 2, 3) == W("0,0|0,0,0")


@given(st.integers(1, 3), st.integers(1, 3))
def test_lowest_weight_is_injective(m, n):
    seen = {}
    for a in range(4):
        for b in range(a + 1):
            for c in range(min(b, n) + 1):
                p = P((a, b, c))
                if not is_hook(p, m, n):
                    continue
                low = lowest_weight_poly(p, m, n)
                assert seen.setdefault(low, p) == p


def test_dual_examples():
    assert dual_weight(W("1|0")) == W("0|-1")
    assert dual_weight(W("1,0|0,0")) == W("0,0|0,-1")
    assert dual_weight(W("0|0")) == W("0|0")
    assert dual_weight(W("1,0|")) == W("0,-1|")


def test_dual_rejects_non_unitary():
    with pytest.raises(NotUnitaryError):
        dual_weight(W("0,-2|1"))


@given(dominant_weights())
def test_dual_involution(w):
    if not (classify_type1(w).is_unitary or classify_type2(w).is_unitary):
        return
    assert dual_weight(dual_weight(w)) == w


@given(dominant_weights())
def test_dual_keeps_typicality(w):
    c = classify_type1(w)
    if c.is_unitary:
        c2 = classify_type2(dual_weight(w))
        assert c2.is_unitary and c2.is_typical == c.is_typical


def test_vertical_strip_examples():
    assert vertical_strips(P((1,)), 2, 2) == [P((1,)), P(())]
    assert vertical_strips(P(()), 3, 1) == [P(())]
    # every {0,1}-removal that is still a partition
    assert removable_vertical_strips(P((2, 2))) == [P((2, 2)), P((2, 1)), P((1, 1))]
    # (2,2) is not (1,1)-hook, so it cannot occur below gl(1|2)
    assert vertical_strips(P((2, 2)), 1, 2) == [P((2, 1)), P((1, 1))]
    with pytest.raises(WeightError):
        vertical_strips(P((1,)), 1, 0)


@given(hook_partitions())
def test_vertical_strips_are_hooks_below(t):
    p, m, n = t
    out = vertical_strips(p, m, n)
    assert out == sorted(set(out), key=lambda q: q.padded(len(p)), reverse=True)
    for q in out:
        assert is_hook(q, m, n - 1)
        assert all(p.part(i) - q.part(i) in (0, 1) for i in range(1, len(p) + 1))
    if is_hook(p, m, n - 1):
        assert p in out


@given(hook_partitions())
def test_strips_interlace_on_weights(t):
    p, m, n = t
    top = natural_weight(p, m, n)
    if not classify_type1(top).is_unitary:
        return
    cands = set(interlacing_candidates(top))
    for q in vertical_strips(p, m, n):
        assert natural_weight(q, m, n - 1) in cands
