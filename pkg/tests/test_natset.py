"""Core set arithmetic and the reduced-monoid factor search."""

import pytest
from hypothesis import given, settings, strategies as st

from atomlab import natset
from atomlab.natset import (NatSet, decompose_reduced, delta_set, elasticity,
                            is_atom, is_atom_reduced, is_sum_free,
                            iter_sum_free, lengths, lengths_reduced,
                            reduce_shift, set_colon, sumset)


small_zero_sets = st.sets(st.integers(0, 9), min_size=0, max_size=6).map(
    lambda s: NatSet(s | {0}))
small_sets = st.sets(st.integers(0, 12), min_size=1, max_size=7).map(NatSet)


def brute_pairs(a):
    """All unordered 0-set pairs multiplying to a, by raw enumeration."""
    elems = a.elements
    subs = [elems]
    for e in elems[1:]:
        subs += [tuple(x for x in s if x != e) for s in subs]
    zero_subs = sorted(set(s for s in subs if s and s[0] == 0))
    out = set()
    for b in zero_subs:
        for c in zero_subs:
            if b == (0,) or c == (0,):
                continue
            if tuple(sorted({x + y for x in b for y in c})) == elems:
                out.add((b, c) if b <= c else (c, b))
    return out


def test_canonical_form():
    a = NatSet([3, 0, 3, 1])
    assert a.elements == (0, 1, 3)
    assert a == NatSet((1, 0, 3))
    assert str(a) == "{0,1,3}"
    assert len(a) == 3 and 1 in a and 2 not in a
    assert a.min == 0 and a.max == 3


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        NatSet([])
    with pytest.raises(ValueError):
        NatSet([-1, 0])
    with pytest.raises(TypeError):
        NatSet([0, 1.5])
    with pytest.raises(TypeError):
        NatSet([True])
    with pytest.raises(OverflowError):
        NatSet([0, 1 << 63])
    with pytest.raises(AttributeError):
        NatSet([0]).elements = (1,)


def test_json_and_text_round_trip():
    a = NatSet([0, 2, 7])
    assert NatSet.from_json(a.to_json()) == a
    assert NatSet.from_text(a.to_text()) == a
    assert NatSet.from_text(str(a)) == a


def test_sumset_examples():
    assert sumset(NatSet([0, 1]), NatSet([0, 1])) == NatSet([0, 1, 2])
    assert sumset(NatSet([0]), NatSet([0, 4])) == NatSet([0, 4])
    assert NatSet([1, 2]) + NatSet([3]) == NatSet([4, 5])


@given(small_sets, small_sets)
def test_sumset_properties(a, b):
    p = sumset(a, b)
    assert p.min == a.min + b.min
    assert p.max == a.max + b.max
    assert len(p) >= max(len(a), len(b))
    assert set(p.elements) == {x + y for x in a for y in b}


def test_is_sum_free():
    assert is_sum_free(NatSet([1]))
    assert is_sum_free(NatSet([2, 3]))
    assert not is_sum_free(NatSet([1, 2]))
    assert not is_sum_free(NatSet([0]))  # 0 + 0 = 0
    assert is_sum_free(NatSet([5, 6, 7, 8, 9]))


def test_iter_sum_free_matches_brute_filter():
    got = {s.elements for s in iter_sum_free(6)}
    want = set()
    for mask in range(1, 1 << 6):
        s = tuple(i + 1 for i in range(6) if mask >> i & 1)
        if all(x + y not in s for x in s for y in s):
            want.add(s)
    assert got == want


@given(small_sets, small_sets)
def test_set_colon_is_maximal_cofactor(a, b):
    c = set_colon(a, b)
    ok = {x for x in range(a.max + 1)
          if all(x + y in a for y in b)}
    if ok:
        assert c is not None and set(c.elements) == ok
    else:
        assert c is None


def test_reduce_shift():
    assert reduce_shift(NatSet([3, 5])) == (3, NatSet([0, 2]))
    assert reduce_shift(NatSet([0, 1])) == (0, NatSet([0, 1]))


def test_decompose_reduced_small_cases():
    assert decompose_reduced(NatSet([0])) == []
    assert decompose_reduced(NatSet([0, 1])) == []
    assert decompose_reduced(NatSet([0, 1, 2])) == [
        (NatSet([0, 1]), NatSet([0, 1]))]


@given(small_zero_sets)
@settings(max_examples=60)
def test_decompose_reduced_matches_brute_force(a):
    got = {(b.elements, c.elements) for b, c in decompose_reduced(a)}
    assert got == brute_pairs(a)


@given(small_zero_sets)
def test_atom_iff_no_decomposition(a):
    if a.max == 0:
        assert not is_atom_reduced(a)
    else:
        assert is_atom_reduced(a) == (not decompose_reduced(a))


def test_sum_free_zero_sets_are_atoms():
    for s in iter_sum_free(9):
        assert is_atom_reduced(NatSet((0,) + s.elements))


def test_lengths_reduced_examples():
    assert lengths_reduced(NatSet([0])) == (0,)
    assert lengths_reduced(NatSet([0, 3])) == (1,)
    assert lengths_reduced(NatSet([0, 1, 2])) == (2,)
    assert lengths_reduced(NatSet(range(6))) == (2, 3, 4, 5)


def test_full_monoid_shift_reduction():
    assert is_atom(NatSet([1]))
    assert not is_atom(NatSet([2]))
    assert not is_atom(NatSet([1, 2]))
    assert is_atom(NatSet([0, 1]))
    assert lengths(NatSet([2, 5])) == (3,)
    assert lengths(NatSet([1])) == (1,)
    assert lengths(NatSet([0])) == (0,)


@given(small_zero_sets, st.integers(0, 4))
def test_full_monoid_lengths_shift_invariant(a, k):
    assert lengths(a.shifted(k)) == tuple(k + l for l in lengths(a))


def test_delta_and_elasticity():
    assert delta_set((2, 3)) == (1,)
    assert delta_set((2, 5, 6)) == (1, 3)
    assert delta_set((4,)) == ()
    assert elasticity((0,)) == 1
    assert elasticity((2, 5)) == natset.Fraction(5, 2)
    assert elasticity((0, 3)) == natset.inf
    with pytest.raises(ValueError):
        elasticity(())


def test_search_limit_refusal():
    big = NatSet([0, natset.SEARCH_LIMIT + 1])
    with pytest.raises(ValueError):
        decompose_reduced(big)


def test_tick_is_called_and_can_abort():
    calls = []

    def tick():
        calls.append(None)
        if len(calls) > 3:
            raise RuntimeError("stop")

    with pytest.raises(RuntimeError):
        decompose_reduced(NatSet(range(15)), tick=tick)
    assert len(calls) > 3
