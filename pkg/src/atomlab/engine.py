"""Generic factorization search over graded reduced monoids.

The engine sees a monoid through a small adapter interface: identity,
product, colon (maximal cofactor candidate), an additive grade that is zero
only on the identity, a canonical sort key, and a candidate stream that is
complete over actual left factors.  A candidate a divides e exactly when
a * colon(e, a) = e, so divisor discovery is candidate enumeration plus one
colon check each; full split lists come from matching the verified divisor
set against itself, which is exhaustive because any cofactor is itself a
divisor.

Budgets bound the number of search nodes and the wall clock.  Exhaustion
raises SearchBudgetExceeded so callers can report "inconclusive" rather than
mistaking a truncated scan for a completed one.  Candidate order is fixed and
results are merged in stream order, so output is deterministic for any
parallelism width.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Iterator, Optional, Protocol, TypeVar

from . import monideal, natset
from .monideal import MonIdeal, UNIT
from .natset import NatSet

__all__ = [
    "Budget",
    "SearchBudgetExceeded",
    "GradedMonoid",
    "SumsetMonoid",
    "MonomialMonoid",
    "FactorEngine",
    "sumset_engine",
    "monomial_engine",
]

E = TypeVar("E")


class SearchBudgetExceeded(RuntimeError):
    """A factor search ran out of nodes or time before finishing.

    Distinct from "no factorization exists": whatever was found so far is
    unreliable as a completed answer and is reported as inconclusive.
    """

    def __init__(self, message: str, nodes: int, elapsed: float):
        super().__init__(message)
        self.nodes = nodes
        self.elapsed = elapsed


class Budget:
    """Node and wall-clock bounds shared by all searches of one engine run."""

    _CLOCK_STRIDE = 1024

    def __init__(self, max_nodes: Optional[int] = None,
                 max_seconds: Optional[float] = None):
        self.max_nodes = max_nodes
        self.max_seconds = max_seconds
        self.nodes = 0
        self._start = time.monotonic()

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self._start

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise SearchBudgetExceeded(
                f"search exceeded {self.max_nodes} nodes",
                self.nodes, self.elapsed)
        if self.max_seconds is not None and self.nodes % self._CLOCK_STRIDE == 0:
            if self.elapsed > self.max_seconds:
                raise SearchBudgetExceeded(
                    f"search exceeded {self.max_seconds} seconds",
                    self.nodes, self.elapsed)


class GradedMonoid(Protocol[E]):
    """What the engine needs from a commutative reduced monoid.

    candidate_divisors must be complete over actual left factors; when the
    adapter sets verified_stream it must also be exact (everything streamed
    divides), which lets the engine skip its per-candidate colon check.
    """

    name: str
    verified_stream: bool

    def identity(self) -> E: ...

    def is_identity(self, e: E) -> bool: ...

    def product(self, a: E, b: E) -> E: ...

    def colon(self, whole: E, part: E) -> Optional[E]: ...

    def grade(self, e: E) -> int: ...

    def key(self, e: E): ...

    def serialize(self, e: E): ...

    def candidate_divisors(self, e: E, budget: Optional[Budget] = None,
                           grade_cap: Optional[int] = None) -> Iterator[E]: ...


class SumsetMonoid:
    """Reduced sumset monoid: finite subsets of N containing 0."""

    name = "pfin0"
    verified_stream = True

    def identity(self) -> NatSet:
        return NatSet([0])

    def is_identity(self, e: NatSet) -> bool:
        return e.elements == (0,)

    def product(self, a: NatSet, b: NatSet) -> NatSet:
        return natset.sumset(a, b)

    def colon(self, whole: NatSet, part: NatSet) -> Optional[NatSet]:
        return natset.set_colon(whole, part)

    def grade(self, e: NatSet) -> int:
        return e.max

    def key(self, e: NatSet):
        return e.elements

    def serialize(self, e: NatSet):
        return e.to_json()

    def candidate_divisors(self, e: NatSet, budget: Optional[Budget] = None,
                           grade_cap: Optional[int] = None) -> Iterator[NatSet]:
        if e.min != 0:
            raise ValueError("expected a set containing 0")
        tick = budget.tick if budget is not None else None
        amask = natset._mask_of(e)
        for bmask, _col in natset._reduced_divisor_masks(amask, cap=grade_cap,
                                                         tick=tick):
            yield natset._mask_to_set(bmask)


class MonomialMonoid:
    """Multiplicative monoid of nonzero monomial ideals in two variables."""

    name = "mon"
    verified_stream = True

    def identity(self) -> MonIdeal:
        return UNIT

    def is_identity(self, e: MonIdeal) -> bool:
        return e.is_unit

    def product(self, a: MonIdeal, b: MonIdeal) -> MonIdeal:
        return monideal.product(a, b)

    def colon(self, whole: MonIdeal, part: MonIdeal) -> Optional[MonIdeal]:
        return monideal.colon(whole, part)

    def grade(self, e: MonIdeal) -> int:
        return e.mdeg

    def key(self, e: MonIdeal):
        return e.gens

    def serialize(self, e: MonIdeal):
        return e.to_json()

    def candidate_divisors(self, e: MonIdeal, budget: Optional[Budget] = None,
                           grade_cap: Optional[int] = None) -> Iterator[MonIdeal]:
        """Stream the proper divisors of e, each one already colon-verified.

        Generators sharing a monomial factor X^u Y^v split off as principal
        prime factors, so divisors are X^i Y^j times a divisor of the
        gcd-free core.  Core divisors come from a pruned staircase search,
        see _gcdfree_divisors.
        """
        total = e.mdeg
        if total == 0:
            return
        tick = budget.tick if budget is not None else (lambda: None)
        u, v = monideal.generator_gcd(e)
        core = monideal.shifted(e, -u, -v) if (u or v) else e

        def emit(a: MonIdeal, i: int, j: int) -> Optional[MonIdeal]:
            cand = monideal.shifted(a, i, j) if (i or j) else a
            g = cand.mdeg
            if 1 <= g <= total - 1 and (grade_cap is None or g <= grade_cap):
                return cand
            return None

        shifts = [(i, j) for i in range(u + 1) for j in range(v + 1)]
        base = [UNIT]
        if core.mdeg > 0:
            base.append(core)
        for a in base:
            for i, j in shifts:
                got = emit(a, i, j)
                if got is not None:
                    yield got
        if core.mdeg == 0:
            return
        for a in _gcdfree_divisors(core, tick, grade_cap):
            for i, j in shifts:
                got = emit(a, i, j)
                if got is not None:
                    yield got


class _Board:
    """Bit-board view of a gcd-free ideal inside its generator bounding box.

    Bit y*(px+1) + x is set when X^x Y^y lies in the ideal, for x <= px and
    y <= py (the pure exponents).  Outside the box membership is decided by
    the pure powers alone, so clipping coordinates to the box is exact.
    Colons by a monomial become precomputed masks and intersections become
    single AND operations, which is what makes the frame DFS cheap.
    """

    def __init__(self, e: MonIdeal):
        self.px = px = next(x for x, y in e.gens if y == 0)
        self.py = py = next(y for x, y in e.gens if x == 0)
        self.width = w = px + 1
        self.row = full_row = (1 << w) - 1
        region = 0
        for x, y in e.gens:
            quad = (full_row >> x) << x
            for yy in range(y, py + 1):
                region |= quad << (yy * w)
        self.region = region
        self._colon_cache: dict[tuple[int, int], int] = {}

    def member(self, x: int, y: int) -> bool:
        x = min(x, self.px)
        y = min(y, self.py)
        return self.region >> (y * self.width + x) & 1 == 1

    def colon_mask(self, c: int, g: int) -> int:
        """Membership mask of (ideal : X^c Y^g), clipped to the same box."""
        got = self._colon_cache.get((c, g))
        if got is not None:
            return got
        w, px, py = self.width, self.px, self.py
        high = ((1 << c) - 1) << (px - c + 1) if c else 0
        out = 0
        for y in range(py + 1):
            src = min(y + g, py)
            row = (self.region >> (src * w)) & self.row
            shifted = row >> c
            if high and row >> px & 1:
                shifted |= high
            out |= shifted << (y * w)
        self._colon_cache[(c, g)] = out
        return out


def _gcdfree_divisors(e: MonIdeal, tick, cap: Optional[int] = None
                      ) -> Iterator[MonIdeal]:
    """Proper divisors of a gcd-free nonunit ideal, one frame at a time.

    Any factor pair of e carries pure powers X^ax, Y^ay and X^bx, Y^by with
    ax + bx and ay + by matching the pure exponents of e, so the search runs
    over frames (ax, ay).  Within a frame, a factor is the frame plus an
    antichain of interior generators, and its maximal cofactor is the colon
    by its generators; e equals factor * cofactor exactly when every
    generator of e is generator-of-factor + member-of-cofactor.  The DFS
    threads that coverage test through the antichain enumeration: interior
    points are visited by increasing Y-exponent, so once the next candidate
    point sits above a still-uncovered generator of e the branch is dead.

    Three sound filters shrink the frame and point sets.  Each generator of
    a factor stays in e after multiplying by the partner's pure powers; the
    grade identity mdeg(e) = mdeg(factor) + mdeg(cofactor) with
    mdeg <= min(pure exponents) forces min(ax, ay) + min(bx, by) >= mdeg(e);
    and every generator degree of the factor is at least
    mdeg(e) - min(bx, by).
    """
    total = e.mdeg
    board = _Board(e)
    px, py = board.px, board.py

    for ax in range(1, px):
        bx = px - ax
        for ay in range(1, py):
            by = py - ay
            tick()
            if min(ax, ay) + min(bx, by) < total:
                continue
            if not board.member(ax, by) or not board.member(bx, ay):
                continue
            lo = total - min(bx, by)
            if cap is not None and min(ax, ay) > cap and lo > cap:
                continue
            points = [(g, c) for c in range(1, ax)
                      for g in range(max(1, lo - c), ay)
                      if board.member(c + bx, g) and board.member(c, g + by)]
            points.sort()
            yield from _frame_dfs(e, board, ax, ay, points, tick)


def _frame_dfs(e: MonIdeal, board: _Board, ax: int, ay: int, points,
               tick) -> Iterator[MonIdeal]:
    npts = len(points)
    w = board.width
    egens = e.gens  # sorted by x descending, hence y ascending
    full = egens[-1][1] + 1
    colons = [board.colon_mask(c, g) for g, c in points]
    c0 = board.colon_mask(ax, 0) & board.colon_mask(0, ay)

    def covered(bgens, cof: int, y_limit: int) -> bool:
        # both gen lists are y-ascending, so each scan can stop early
        for gx, gy in egens:
            if gy >= y_limit:
                return True
            base = gy * w + gx
            for sx, sy in bgens:
                if sy > gy:
                    return False
                if sx <= gx and cof >> (base - sy * w - sx) & 1:
                    break
            else:
                return False
        return True

    def rec(acc, cof: int, idx: int, last_x: int, last_y: int
            ) -> Iterator[MonIdeal]:
        tick()
        bgens = ((ax, 0),) + tuple(acc) + ((0, ay),)
        y_next = points[idx][0] if idx < npts else full
        if not covered(bgens, cof, y_next):
            return
        if y_next >= full or covered(bgens, cof, full):
            yield MonIdeal._from_antichain(bgens)
        for i in range(idx, npts):
            g, c = points[i]
            if g <= last_y or c >= last_x:
                continue
            acc.append((c, g))
            yield from rec(acc, cof & colons[i], i + 1, c, g)
            acc.pop()

    yield from rec([], c0, 0, ax, 0)


class FactorEngine:
    """Divisor, atom, split, length and factorization queries for one monoid.

    Each engine owns one budget and one memo cache; create a fresh engine to
    search under different budgets.  Thread-safe: caches are lock-guarded and
    the optional parallel scan merges results in candidate order, so answers
    do not depend on the worker count.
    """

    def __init__(self, monoid: GradedMonoid, budget: Optional[Budget] = None,
                 parallelism: int = 1):
        if parallelism < 1:
            raise ValueError("parallelism must be at least 1")
        self.monoid = monoid
        self.budget = budget
        self.parallelism = parallelism
        self._lock = threading.RLock()
        self._divisor_memo: dict = {}
        self._atom_memo: dict = {}
        self._length_memo: dict = {}
        self._factorization_memo: dict = {}

    # -- candidate scanning ------------------------------------------------

    def _verify(self, e: E, a: E) -> Optional[E]:
        """Maximal cofactor of a in e, or None when a does not divide e."""
        m = self.monoid
        if self.budget is not None:
            self.budget.tick()
        col = m.colon(e, a)
        if col is None:
            return None
        if m.key(m.product(a, col)) == m.key(e):
            return col
        return None

    def _scan(self, e: E, candidates: Iterable[E], stop_early: bool
              ) -> list[E]:
        """Divisors of e from the candidate stream, in stream order."""
        if self.monoid.verified_stream:
            if stop_early:
                for a in candidates:
                    return [a]
                return []
            return list(candidates)
        hits: list[E] = []
        if self.parallelism == 1:
            for a in candidates:
                if self._verify(e, a) is not None:
                    hits.append(a)
                    if stop_early:
                        return hits
            return hits
        chunk = 64
        cands = iter(candidates)
        with ThreadPoolExecutor(max_workers=self.parallelism) as pool:
            while True:
                block = []
                for a in cands:
                    block.append(a)
                    if len(block) == chunk:
                        break
                if not block:
                    return hits
                for a, col in zip(block, pool.map(lambda x: self._verify(e, x),
                                                  block)):
                    if col is not None:
                        hits.append(a)
                        if stop_early:
                            return hits

    # -- queries -------------------------------------------------------------

    def divisors(self, e: E) -> list[E]:
        """All proper divisors of e, sorted by (grade, key)."""
        m = self.monoid
        k = m.key(e)
        with self._lock:
            got = self._divisor_memo.get(k)
        if got is not None:
            return list(got)
        hits = self._scan(e, m.candidate_divisors(e, self.budget), False)
        seen = {}
        for a in hits:
            seen.setdefault(m.key(a), a)
        out = sorted(seen.values(), key=lambda a: (m.grade(a), m.key(a)))
        with self._lock:
            self._divisor_memo[k] = tuple(out)
        return out

    def find_split(self, e: E) -> Optional[tuple[E, E]]:
        """Some factorization e = a * b into nonunits, or None for atoms."""
        m = self.monoid
        if m.is_identity(e):
            raise ValueError("the identity is not searched for splits")
        cap = m.grade(e) // 2
        hits = self._scan(e, m.candidate_divisors(e, self.budget, cap), True)
        if not hits:
            return None
        a = hits[0]
        col = self._verify(e, a)
        if col is None:
            raise AssertionError("stream produced a non-divisor")
        return a, col

    def is_atom(self, e: E) -> bool:
        m = self.monoid
        if m.is_identity(e):
            return False
        k = m.key(e)
        with self._lock:
            got = self._atom_memo.get(k)
        if got is not None:
            return got
        cap = m.grade(e) // 2
        hits = self._scan(e, m.candidate_divisors(e, self.budget, cap), True)
        res = not hits
        with self._lock:
            self._atom_memo[k] = res
        return res

    def split(self, e: E) -> list[tuple[E, E]]:
        """Every unordered pair (a, b) of nonunits with a * b = e."""
        m = self.monoid
        if m.is_identity(e):
            raise ValueError("the identity is not searched for splits")
        divisors = self.divisors(e)
        total = m.grade(e)
        by_grade: dict[int, list[E]] = {}
        for a in divisors:
            by_grade.setdefault(m.grade(a), []).append(a)
        ekey = m.key(e)
        pairs = []
        for a in divisors:
            ka = m.key(a)
            for b in by_grade.get(total - m.grade(a), ()):
                if m.key(b) < ka:
                    continue
                if m.key(m.product(a, b)) == ekey:
                    pairs.append((a, b))
        pairs.sort(key=lambda p: (m.key(p[0]), m.key(p[1])))
        return pairs

    def lengths(self, e: E) -> tuple[int, ...]:
        """Sorted set of factorization lengths of e (identity gives {0}).

        Recursion peels one atom at a time: any factorization of length l
        is an atom times a cofactor of length l - 1, and every cofactor of
        a dividing atom is itself a divisor, so pairing the atom divisors
        against the grade-complementary divisor bucket is exhaustive.
        """
        m = self.monoid

        def rec(x: E) -> tuple[int, ...]:
            k = m.key(x)
            with self._lock:
                got = self._length_memo.get(k)
            if got is not None:
                return got
            if m.is_identity(x):
                res: tuple[int, ...] = (0,)
            else:
                divs = self.divisors(x)
                if not divs:
                    res = (1,)
                else:
                    total = m.grade(x)
                    by_grade: dict[int, list[E]] = {}
                    for d in divs:
                        by_grade.setdefault(m.grade(d), []).append(d)
                    acc: set = set()
                    for a in divs:
                        if not self.is_atom(a):
                            continue
                        for b in by_grade.get(total - m.grade(a), ()):
                            if m.key(m.product(a, b)) != k:
                                continue
                            for lb in rec(b):
                                acc.add(1 + lb)
                    res = tuple(sorted(acc))
            with self._lock:
                self._length_memo[k] = res
            return res

        return rec(e)

    def factorizations(self, e: E, max_grade: int = 64) -> list[tuple]:
        """All factorizations of e into atoms, as sorted tuples of atoms."""
        m = self.monoid
        if m.grade(e) > max_grade:
            raise ValueError(
                f"grade {m.grade(e)} above the factorization bound {max_grade}")

        def rec(x: E) -> tuple[tuple, ...]:
            k = m.key(x)
            with self._lock:
                got = self._factorization_memo.get(k)
            if got is not None:
                return got
            if m.is_identity(x):
                res: tuple[tuple, ...] = ((),)
            else:
                pairs = self.split(x)
                if not pairs:
                    res = ((x,),)
                else:
                    acc = {}
                    for a, b in pairs:
                        for fa in rec(a):
                            for fb in rec(b):
                                combo = tuple(sorted(fa + fb, key=m.key))
                                acc[tuple(m.key(z) for z in combo)] = combo
                    res = tuple(acc[kk] for kk in sorted(acc))
            with self._lock:
                self._factorization_memo[k] = res
            return res

        return list(rec(e))


def sumset_engine(budget: Optional[Budget] = None,
                  parallelism: int = 1) -> FactorEngine:
    return FactorEngine(SumsetMonoid(), budget=budget, parallelism=parallelism)


def monomial_engine(budget: Optional[Budget] = None,
                    parallelism: int = 1) -> FactorEngine:
    return FactorEngine(MonomialMonoid(), budget=budget, parallelism=parallelism)
