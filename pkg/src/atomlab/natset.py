"""Finite subsets of N under setwise addition.

The monoid of finite nonempty subsets of the naturals with
A + B = {a + b : a in A, b in B}, and its reduced flavor consisting of the
sets that contain 0.  Factor searches are organised around the colon set
{c : B + c subset of A}, which is the unique maximal candidate cofactor of B
inside A: B divides A exactly when B + set_colon(A, B) = A.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import inf
from typing import Callable, Iterable, Iterator, Optional

__all__ = [
    "MAX_ELEMENT",
    "NatSet",
    "sumset",
    "is_sum_free",
    "set_colon",
    "decompose_reduced",
    "is_atom_reduced",
    "reduce_shift",
    "lengths_reduced",
    "is_atom",
    "lengths",
    "delta_set",
    "elasticity",
    "iter_sum_free",
]

# Machine-width guard: sums past this bound abort loudly instead of growing.
MAX_ELEMENT = 2**63 - 1

# Factor searches index dense bitmasks by element value, so the sets they
# accept must have a modest maximum.  Plain arithmetic has no such limit.
SEARCH_LIMIT = 1 << 16

Tick = Optional[Callable[[], None]]


@functools.total_ordering
class NatSet:
    """Canonical finite nonempty subset of N.

    Elements are stored as a strictly increasing tuple, so structural
    equality is set equality; instances are immutable, hashable and ordered
    by their element tuples.
    """

    __slots__ = ("elements",)

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]) -> None:
        elems = tuple(sorted(set(elements)))
        if not elems:
            raise ValueError("a NatSet must be nonempty")
        for e in elems:
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError(f"set elements must be integers, got {e!r}")
        if elems[0] < 0:
            raise ValueError(f"set elements must be nonnegative, got {elems[0]}")
        if elems[-1] > MAX_ELEMENT:
            raise OverflowError(
                f"element {elems[-1]} exceeds the machine-width bound")
        object.__setattr__(self, "elements", elems)

    def __setattr__(self, name, value):
        raise AttributeError("NatSet is immutable")

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    def shifted(self, k: int) -> "NatSet":
        """Translate every element by k (the result must stay in N)."""
        return NatSet(e + k for e in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __eq__(self, other) -> bool:
        return isinstance(other, NatSet) and self.elements == other.elements

    def __lt__(self, other) -> bool:
        if not isinstance(other, NatSet):
            return NotImplemented
        return self.elements < other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __add__(self, other) -> "NatSet":
        if not isinstance(other, NatSet):
            return NotImplemented
        return sumset(self, other)

    def __repr__(self) -> str:
        return f"NatSet({list(self.elements)})"

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"

    def to_json(self) -> list[int]:
        return list(self.elements)

    @classmethod
    def from_json(cls, data) -> "NatSet":
        if not isinstance(data, list):
            raise ValueError("set JSON form is an array of integers")
        return cls(data)

    def to_text(self) -> str:
        return ",".join(map(str, self.elements))

    @classmethod
    def from_text(cls, text: str) -> "NatSet":
        body = text.strip().lstrip("{").rstrip("}")
        parts = [p for p in (s.strip() for s in body.split(",")) if p]
        if not parts:
            raise ValueError(f"cannot parse set from {text!r}")
        try:
            return cls(int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"cannot parse set from {text!r}: {exc}") from None


def sumset(a: NatSet, b: NatSet) -> NatSet:
    """Setwise sum {x + y : x in a, y in b}."""
    if a.max + b.max > MAX_ELEMENT:
        raise OverflowError("sumset would exceed the machine-width bound")
    return NatSet({x + y for x in a.elements for y in b.elements})


def is_sum_free(a: NatSet) -> bool:
    """True when no x, y, z in a (repetition allowed) satisfy x + y = z."""
    elems = a.elements
    present = set(elems)
    for i, x in enumerate(elems):
        for y in elems[i:]:
            if x + y > elems[-1]:
                break
            if x + y in present:
                return False
    return True


def set_colon(a: NatSet, b: NatSet) -> Optional[NatSet]:
    """Maximal set C with b + C a subset of a; None when no c qualifies."""
    if b.max > a.max:
        return None
    present = set(a.elements)
    cs = [c for c in range(a.max - b.max + 1)
          if all(x + c in present for x in b.elements)]
    return NatSet(cs) if cs else None


def reduce_shift(a: NatSet) -> tuple[int, NatSet]:
    """Split a as (shift, zero-based set) with a = {shift} + zero-based set."""
    return a.min, a.shifted(-a.min)


# ---------------------------------------------------------------------------
# Reduced-monoid factor search.
#
# Everything below works on dense bitmasks (bit e set <=> element e present).
# A sumset is an OR of shifted masks, and the colon set of B in A is the AND
# of A >> b over b in B, truncated to [0, max(A) - max(B)].


def _mask_of(a: NatSet) -> int:
    if a.max > SEARCH_LIMIT:
        raise ValueError(
            f"factor search supports max element <= {SEARCH_LIMIT}, got {a.max}")
    m = 0
    for e in a.elements:
        m |= 1 << e
    return m


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_sumset(bmask: int, cmask: int) -> int:
    acc = 0
    for b in _bits(bmask):
        acc |= cmask << b
    return acc


def _reduced_divisor_masks(amask: int, cap: Optional[int] = None,
                           tick: Tick = None) -> Iterator[tuple[int, int]]:
    """Yield (B, colon) masks for every proper divisor B of A, 0 in A.

    A proper divisor is a set B containing 0, distinct from {0}, such that
    B + C = A for some C containing 0 with C != {0}.  The colon mask handed
    back is the maximal such C.  When cap is given only divisors with
    max(B) <= cap are produced (enough for existence checks, since some side
    of any split has max at most max(A)/2).

    Enumeration is grouped by max(B) ascending.  Within a group, subsets grow
    depth-first in increasing element order under two sound prunes: every
    element of B must remain summable against the forced maximal cofactor
    element, and every already-scanned element of A must stay coverable by
    B + colon, since the true cofactor only shrinks as B grows.
    """
    m = amask.bit_length() - 1
    if m <= 0:
        return
    limit = m - 1 if cap is None else min(cap, m - 1)

    def grow(bmask: int, colmask: int, free: list[int], idx: int
             ) -> Iterator[tuple[int, int]]:
        if tick is not None:
            tick()
        if _mask_sumset(bmask, colmask) == amask:
            yield bmask, colmask
        for i in range(idx, len(free)):
            x = free[i]
            b2 = bmask | (1 << x)
            col2 = colmask & (amask >> x)
            if not col2 & 1:
                continue
            need = amask & ((2 << x) - 1)
            cov = 0
            for b in _bits(b2):
                cov |= col2 << b
                if need & ~cov == 0:
                    break
            if need & ~cov:
                continue
            yield from grow(b2, col2, free, i + 1)

    for mb in _bits(amask):
        if mb == 0:
            continue
        if mb > limit:
            break
        mc = m - mb
        if not (amask >> mc) & 1:
            continue
        # b + mc must land in A for every b in B (mc is the cofactor maximum)
        fmask = amask & (amask >> mc) & ((2 << mb) - 1)
        if not fmask & 1 or not (fmask >> mb) & 1:
            continue
        col0 = amask & (amask >> mb) & ((2 << mc) - 1)
        free = [x for x in _bits(fmask) if 0 < x < mb]
        yield from grow((1 << mb) | 1, col0, free, 0)


def _mask_to_set(mask: int) -> NatSet:
    return NatSet(_bits(mask))


def _require_reduced(a: NatSet) -> None:
    if a.min != 0:
        raise ValueError("expected a set containing 0")


def _matched_pairs(amask: int, divisors: list[tuple[int, int]]
                   ) -> list[tuple[int, int]]:
    """All unordered (B, C) mask pairs with B + C = A, both proper divisors."""
    m = amask.bit_length() - 1
    by_max: dict[int, list[int]] = {}
    for bmask, _ in divisors:
        by_max.setdefault(bmask.bit_length() - 1, []).append(bmask)
    seen = set()
    for bmask, _ in divisors:
        top = bmask.bit_length() - 1
        for cmask in by_max.get(m - top, ()):
            if _mask_sumset(bmask, cmask) == amask:
                pair = (bmask, cmask) if _mask_to_set(bmask) <= _mask_to_set(cmask) \
                    else (cmask, bmask)
                seen.add(pair)
    return sorted(seen, key=lambda p: (_mask_to_set(p[0]).elements,
                                       _mask_to_set(p[1]).elements))


def decompose_reduced(a: NatSet, tick: Tick = None
                      ) -> list[tuple[NatSet, NatSet]]:
    """All unordered pairs (B, C) with 0 in B, C, neither {0}, and B + C = a.

    Requires min(a) = 0.  Pairs come back deterministically ordered, the
    lexicographically smaller side first.
    """
    _require_reduced(a)
    if a.max == 0:
        return []
    amask = _mask_of(a)
    divisors = list(_reduced_divisor_masks(amask, tick=tick))
    return [(_mask_to_set(b), _mask_to_set(c))
            for b, c in _matched_pairs(amask, divisors)]


def is_atom_reduced(a: NatSet, tick: Tick = None) -> bool:
    """True when a is neither {0} nor a sumset of two nontrivial 0-sets."""
    _require_reduced(a)
    if a.max == 0:
        return False
    amask = _mask_of(a)
    first = next(_reduced_divisor_masks(amask, cap=a.max // 2, tick=tick), None)
    return first is None


def lengths_reduced(a: NatSet, tick: Tick = None) -> tuple[int, ...]:
    """Sorted set of factorization lengths of a in the reduced monoid."""
    _require_reduced(a)
    amask = _mask_of(a)
    memo: dict[int, tuple[int, ...]] = {}

    def rec(mask: int) -> tuple[int, ...]:
        got = memo.get(mask)
        if got is not None:
            return got
        if mask == 1:
            res: tuple[int, ...] = (0,)
        else:
            divisors = list(_reduced_divisor_masks(mask, tick=tick))
            pairs = _matched_pairs(mask, divisors)
            if not pairs:
                res = (1,)
            else:
                acc = set()
                for bmask, cmask in pairs:
                    for x in rec(bmask):
                        for y in rec(cmask):
                            acc.add(x + y)
                res = tuple(sorted(acc))
        memo[mask] = res
        return res

    return rec(amask)


# ---------------------------------------------------------------------------
# Full monoid: every set splits as min(A) copies of {1} plus its zero-based
# part, and every atom is either {1} or contains 0.


def is_atom(a: NatSet, tick: Tick = None) -> bool:
    """Atom test in the full monoid of finite nonempty subsets of N."""
    shift, a0 = reduce_shift(a)
    if shift == 0:
        return is_atom_reduced(a0, tick=tick)
    return shift == 1 and a0.max == 0


def lengths(a: NatSet, tick: Tick = None) -> tuple[int, ...]:
    """Factorization lengths in the full monoid."""
    shift, a0 = reduce_shift(a)
    return tuple(shift + l for l in lengths_reduced(a0, tick=tick))


# ---------------------------------------------------------------------------
# Length-set statistics.


def delta_set(length_set: Iterable[int]) -> tuple[int, ...]:
    """Distinct gaps between consecutive members of a set of lengths."""
    ls = sorted(set(length_set))
    return tuple(sorted({b - a for a, b in zip(ls, ls[1:])}))


def elasticity(length_set: Iterable[int]):
    """max/min of a set of lengths; 1 for {0} by convention."""
    ls = sorted(set(length_set))
    if not ls:
        raise ValueError("elasticity of an empty length set is undefined")
    if ls == [0]:
        return Fraction(1)
    if ls[0] == 0:
        return inf
    return Fraction(ls[-1], ls[0])


def iter_sum_free(limit: int) -> Iterator[NatSet]:
    """All nonempty sum-free subsets of [1, limit], in mask order."""
    if limit < 1:
        return
    for mask in range(1, 1 << limit):
        cand = NatSet(i + 1 for i in _bits(mask))
        if is_sum_free(cand):
            yield cand
