"""Exact arithmetic of monomial ideals in two variables.

An ideal is represented by its unique minimal generating set: an antichain of
exponent pairs (x, y) under componentwise order, kept sorted by x strictly
descending.  Products, colons and intersections all reduce to integer
arithmetic on exponent pairs followed by antichain minimization, so every
operation here is exact.
"""

from __future__ import annotations

import functools
import re
from typing import Iterable, Iterator

from . import families
from .natset import MAX_ELEMENT, NatSet

__all__ = [
    "MonIdeal",
    "UNIT",
    "from_generators",
    "contains_monomial",
    "contains_ideal",
    "product",
    "mdeg",
    "colon",
    "intersect",
    "generator_gcd",
    "shifted",
    "phi",
    "build_a",
    "build_b",
    "build_c",
    "build_i_b",
    "build_i_c",
    "build_tilde_b",
]

Pair = tuple[int, int]


def _minimal_pairs(pairs: Iterable[Pair]) -> tuple[Pair, ...]:
    uniq = set(pairs)
    keep = [p for p in uniq
            if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in uniq)]
    return tuple(sorted(keep, key=lambda p: (-p[0], p[1])))


class MonIdeal:
    """A nonzero monomial ideal in canonical minimal-generator form."""

    __slots__ = ("gens",)

    gens: tuple[Pair, ...]

    def __init__(self, gens: Iterable[Pair]) -> None:
        cleaned = []
        for g in gens:
            x, y = g
            if not isinstance(x, int) or not isinstance(y, int) \
                    or isinstance(x, bool) or isinstance(y, bool):
                raise TypeError(f"exponents must be integers, got {g!r}")
            if x < 0 or y < 0:
                raise ValueError(f"exponents must be nonnegative, got {g!r}")
            if x > MAX_ELEMENT or y > MAX_ELEMENT:
                raise OverflowError("exponent exceeds the machine-width bound")
            cleaned.append((x, y))
        if not cleaned:
            raise ValueError("an ideal needs at least one generator")
        object.__setattr__(self, "gens", _minimal_pairs(cleaned))

    @classmethod
    def _from_antichain(cls, gens: tuple[Pair, ...]) -> "MonIdeal":
        """Wrap generators already in canonical antichain order, unchecked."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "gens", gens)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("MonIdeal is immutable")

    @property
    def mdeg(self) -> int:
        """Least total degree of a member; 0 exactly for the unit ideal."""
        return min(x + y for x, y in self.gens)

    @property
    def max_x(self) -> int:
        return self.gens[0][0]

    @property
    def max_y(self) -> int:
        return self.gens[-1][1]

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0, 0),)

    def __contains__(self, monomial: Pair) -> bool:
        x, y = monomial
        return any(u <= x and v <= y for u, v in self.gens)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonIdeal) and self.gens == other.gens

    def __hash__(self) -> int:
        return hash(self.gens)

    def __mul__(self, other) -> "MonIdeal":
        if not isinstance(other, MonIdeal):
            return NotImplemented
        return product(self, other)

    def __repr__(self) -> str:
        return f"MonIdeal({list(self.gens)})"

    def __str__(self) -> str:
        return "<" + self.to_text() + ">"

    def to_json(self) -> dict:
        return {"gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data) -> "MonIdeal":
        if not isinstance(data, dict) or "gens" not in data:
            raise ValueError('ideal JSON form is {"gens": [[x, y], ...]}')
        return cls((int(x), int(y)) for x, y in data["gens"])

    def to_text(self) -> str:
        return ", ".join(_monomial_text(g) for g in self.gens)

    @classmethod
    def from_text(cls, text: str) -> "MonIdeal":
        body = text.strip()
        if body.startswith("<") and body.endswith(">"):
            body = body[1:-1]
        parts = [p.strip() for p in body.split(",")]
        if not any(parts):
            raise ValueError(f"cannot parse ideal from {text!r}")
        return cls(_parse_monomial(p) for p in parts)


def _monomial_text(g: Pair) -> str:
    x, y = g
    if x == 0 and y == 0:
        return "1"
    parts = []
    if x:
        parts.append("X" if x == 1 else f"X^{x}")
    if y:
        parts.append("Y" if y == 1 else f"Y^{y}")
    return " ".join(parts)


_MONOMIAL_RE = re.compile(
    r"^(?:(?P<one>1)|(?:X(?:\^(?P<x>\d+))?)?\s*\*?\s*(?:Y(?:\^(?P<y>\d+))?)?)$")


def _parse_monomial(token: str) -> Pair:
    t = token.strip()
    m = _MONOMIAL_RE.match(t)
    if not m or not t:
        raise ValueError(f"cannot parse monomial {token!r}")
    if m.group("one"):
        return (0, 0)
    has_x = "X" in t
    has_y = "Y" in t
    if not has_x and not has_y:
        raise ValueError(f"cannot parse monomial {token!r}")
    x = int(m.group("x")) if m.group("x") else (1 if has_x else 0)
    y = int(m.group("y")) if m.group("y") else (1 if has_y else 0)
    return (x, y)


UNIT = MonIdeal([(0, 0)])


def from_generators(pairs: Iterable[Pair]) -> MonIdeal:
    """Build an ideal from any generating pairs; minimization is implicit."""
    return MonIdeal(pairs)


def contains_monomial(ideal: MonIdeal, monomial: Pair) -> bool:
    return monomial in ideal


def contains_ideal(ideal: MonIdeal, other: MonIdeal) -> bool:
    """True when other is a subset of ideal."""
    return all(g in ideal for g in other.gens)


def product(a: MonIdeal, b: MonIdeal) -> MonIdeal:
    if a.max_x + b.max_x > MAX_ELEMENT or a.max_y + b.max_y > MAX_ELEMENT:
        raise OverflowError("product would exceed the machine-width bound")
    return MonIdeal((u + p, v + q) for u, v in a.gens for p, q in b.gens)


def mdeg(ideal: MonIdeal) -> int:
    return ideal.mdeg


def _colon_monomial(ideal: MonIdeal, monomial: Pair) -> MonIdeal:
    a, b = monomial
    return MonIdeal((max(u - a, 0), max(v - b, 0)) for u, v in ideal.gens)


def intersect(a: MonIdeal, b: MonIdeal) -> MonIdeal:
    """Intersection: pairwise componentwise maxima, minimized."""
    return MonIdeal((max(u, p), max(v, q)) for u, v in a.gens for p, q in b.gens)


def colon(a: MonIdeal, b: MonIdeal) -> MonIdeal:
    """(a : b), the largest ideal whose product with b lands inside a."""
    return functools.reduce(intersect,
                            (_colon_monomial(a, g) for g in b.gens))


def generator_gcd(ideal: MonIdeal) -> Pair:
    """Componentwise minimum over the generators (their monomial gcd)."""
    return (min(x for x, _ in ideal.gens), min(y for _, y in ideal.gens))


def shifted(ideal: MonIdeal, dx: int, dy: int) -> MonIdeal:
    """Multiply (or, for negative shifts, divide) by the monomial X^dx Y^dy."""
    return MonIdeal((x + dx, y + dy) for x, y in ideal.gens)


def phi(a: NatSet) -> MonIdeal:
    """Embed a 0-containing set as the ideal with generators (max-e, e).

    Monoid homomorphism from the reduced sumset monoid into monomial ideals;
    it is injective and preserves products.
    """
    if a.min != 0:
        raise ValueError("phi expects a set containing 0")
    top = a.max
    return MonIdeal((top - e, e) for e in a.elements)


# ---------------------------------------------------------------------------
# Named ideal families.


def build_a(k: int) -> MonIdeal:
    """k-th power of the maximal ideal <X, Y>: all degree-k monomials."""
    if k < 1:
        raise ValueError("build_a requires k >= 1")
    return MonIdeal((k - j, j) for j in range(k + 1))


def build_b(i: int) -> MonIdeal:
    """Two pure powers <X^i, Y^i>."""
    if i < 1:
        raise ValueError("build_b requires i >= 1")
    return MonIdeal([(i, 0), (0, i)])


def build_c(k: int) -> MonIdeal:
    """Staircase ideal over {0} plus the odd/even gap family of top degree k.

    Accepts odd k >= 3 and even k >= 4 (even k below 6 builds, but is only
    interesting as an ambient-monoid atom from k = 6 on).
    """
    if k % 2 == 1:
        i = (k - 1) // 2
        if i < 1:
            raise ValueError("odd staircase needs k >= 3")
        base = families.build_delta_odd(i)
    else:
        i = k // 2
        if i < 2:
            raise ValueError("even staircase needs k >= 4")
        base = families.build_delta_even(i)
    return phi(NatSet((0,) + base.elements))


def build_i_b(seq: families.SumSequence) -> MonIdeal:
    """Image of the B family under the set-to-ideal embedding."""
    return phi(families.build_B(seq))


def build_i_c(seq: families.SumSequence) -> MonIdeal:
    """Image of the C family under the set-to-ideal embedding."""
    return phi(families.build_C(seq))


def build_tilde_b(seq: families.SumSequence, r: int) -> MonIdeal:
    """Product of the pure-power ideals at a_1, a_3, ..., a_r plus one extra
    generator X^(a_3+...+a_r - a_2) Y^(a_3 - a_2).

    Defined for 3 <= r <= n.  The extra generator is a proper new minimal
    generator; minimization would silently drop it otherwise, so the gain is
    checked.
    """
    if seq.n < 3:
        raise ValueError("build_tilde_b requires a sequence with n >= 3")
    if not 3 <= r <= seq.n:
        raise ValueError(f"build_tilde_b requires 3 <= r <= {seq.n}, got {r}")
    factors = [build_b(seq.term(1))] + [build_b(seq.term(i))
                                        for i in range(3, r + 1)]
    prod = functools.reduce(product, factors)
    tail = sum(seq.term(i) for i in range(3, r + 1))
    extra = (tail - seq.term(2), seq.term(3) - seq.term(2))
    out = MonIdeal(prod.gens + (extra,))
    if extra not in out.gens:
        raise ValueError("extra generator unexpectedly redundant")
    return out
