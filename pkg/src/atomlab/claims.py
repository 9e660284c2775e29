"""Executable registry of the verification claims.

Each claim couples a human-readable statement with a runner that checks it
exhaustively (or over a fixed seeded sample) and reports pass, fail with a
witness, or inconclusive when a search budget runs out.  The registry is the
single source of truth for the `verify` command and the acceptance tests.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from . import families, graded, monideal, natset, oracle
from .engine import (Budget, FactorEngine, SearchBudgetExceeded,
                     monomial_engine, sumset_engine)
from .families import build_B, build_C, minimal_sequence, subset_sum
from .graded import GradedIdeal, HomPoly, min_piece_product_check
from .monideal import (MonIdeal, build_a, build_b, build_c, build_i_b,
                       build_i_c, build_tilde_b, phi)
from .natset import NatSet

__all__ = [
    "Claim",
    "ClaimContext",
    "ClaimResult",
    "claim_ids",
    "get_claim",
    "registry",
    "run_claim",
    "run_suite",
]

# Default node budget for the stretch claim: large enough to show real
# progress, small enough that a default run answers in seconds.  The
# enumeration behind it exceeds 3*10^7 nodes, so expect inconclusive.
_STRETCH_NODES = 1_000_000

# Fixed seeds keep the sampled claims reproducible run to run.
_GRADED_SEED = 61
_ORACLE_SEED = 94
_PHI_SEED = 75

_WITNESS_CAP = 5


@dataclass(frozen=True)
class ClaimContext:
    """Caller-supplied search limits, shared by every engine in one run."""

    budget_nodes: Optional[int] = None
    budget_seconds: Optional[float] = None
    parallelism: int = 1


@dataclass(frozen=True)
class Claim:
    claim_id: str
    suite: str
    statement: str
    runner: Callable[["_Runtime"], Optional[dict]]
    default_budget_nodes: Optional[int] = None


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    statement: str
    status: str
    elapsed: float
    witness: Optional[dict]

    def to_json(self) -> dict:
        return {
            "claim-id": self.claim_id,
            "statement": self.statement,
            "status": self.status,
            "elapsed": round(self.elapsed, 3),
            "witness": self.witness,
        }


class _Runtime:
    """One budget and one engine cache for a single claim run."""

    def __init__(self, ctx: ClaimContext, default_nodes: Optional[int]):
        nodes = ctx.budget_nodes if ctx.budget_nodes is not None \
            else default_nodes
        if nodes is None and ctx.budget_seconds is None:
            self.budget: Optional[Budget] = None
        else:
            self.budget = Budget(max_nodes=nodes,
                                 max_seconds=ctx.budget_seconds)
        self.parallelism = ctx.parallelism
        self._mon: Optional[FactorEngine] = None
        self._sum: Optional[FactorEngine] = None

    @property
    def tick(self):
        return self.budget.tick if self.budget is not None else None

    def mon(self) -> FactorEngine:
        if self._mon is None:
            self._mon = monomial_engine(self.budget, self.parallelism)
        return self._mon

    def sum(self) -> FactorEngine:
        if self._sum is None:
            self._sum = sumset_engine(self.budget, self.parallelism)
        return self._sum


def _verdict(bad: list) -> Optional[dict]:
    if not bad:
        return None
    return {"total": len(bad), "counterexamples": bad[:_WITNESS_CAP]}


def _subsets(items: Iterable[int]):
    pool = tuple(items)
    for r in range(len(pool) + 1):
        yield from itertools.combinations(pool, r)


# -- criterion runners -------------------------------------------------------


def _check_atoms_monomial(rt: _Runtime) -> Optional[dict]:
    eng = rt.mon()
    targets: list[tuple[str, MonIdeal]] = []
    for i in range(1, 9):
        targets.append((f"b_{i}", build_b(i)))
    for m in range(1, 9):
        for n in range(1, 9):
            targets.append((f"<X^{m},Y^{n}>", MonIdeal([(m, 0), (0, n)])))
    for k in range(3, 8):
        targets.append((f"c_{k}", build_c(k)))
    for n in (2, 3):
        targets.append((f"I_B(minimal n={n})",
                        build_i_b(minimal_sequence(n))))
    for n, r in ((3, 3), (4, 3), (4, 4)):
        targets.append((f"tilde_b(minimal n={n}, r={r})",
                        build_tilde_b(minimal_sequence(n), r)))
    bad = []
    for label, e in targets:
        if not eng.is_atom(e):
            a, b = eng.find_split(e)
            bad.append({"target": label, "ideal": e.to_json(),
                        "split": [a.to_json(), b.to_json()]})
    return _verdict(bad)


def _check_splits_monomial(rt: _Runtime) -> Optional[dict]:
    eng = rt.mon()
    bad = []
    for k in range(2, 7):
        e = build_a(k)
        pair = eng.find_split(e)
        if pair is None:
            bad.append({"target": f"a_{k}", "problem": "expected a split"})
        elif monideal.product(*pair) != e:
            bad.append({"target": f"a_{k}", "problem": "witness check",
                        "split": [p.to_json() for p in pair]})
    for j in range(1, 5):
        img = phi(NatSet([0, j, 2 * j]))
        square = monideal.product(build_b(j), build_b(j))
        if img != square:
            bad.append({"target": f"phi({{0,{j},{2 * j}}})",
                        "problem": "expected b_j^2",
                        "got": img.to_json(), "want": square.to_json()})
        elif eng.find_split(img) is None:
            bad.append({"target": f"phi({{0,{j},{2 * j}}})",
                        "problem": "expected a split"})
    for m in range(2, 10):
        for j in range(1, m):
            if m == 2 * j:
                continue
            e = phi(NatSet([0, j, m]))
            if not eng.is_atom(e):
                a, b = eng.find_split(e)
                bad.append({"target": f"phi({{0,{j},{m}}})",
                            "problem": "expected an atom",
                            "split": [a.to_json(), b.to_json()]})
    return _verdict(bad)


def _check_lengths_monomial(rt: _Runtime) -> Optional[dict]:
    eng = rt.mon()
    bad = []
    for k in range(2, 7):
        want = tuple(range(2, k + 1))
        got = eng.lengths(build_a(k))
        if got != want:
            bad.append({"target": f"a_{k}", "want": list(want),
                        "got": list(got)})
    got = eng.lengths(build_i_c(minimal_sequence(2)))
    if got != (2, 3):
        bad.append({"target": "I_C(minimal n=2)", "want": [2, 3],
                    "got": list(got)})
    return _verdict(bad)


def _check_lengths_monomial_stretch(rt: _Runtime) -> Optional[dict]:
    got = rt.mon().lengths(build_i_c(minimal_sequence(3)))
    if got != (2, 3, 4):
        return {"target": "I_C(minimal n=3)", "want": [2, 3, 4],
                "got": list(got)}
    return None


def _check_lengths_sumset(rt: _Runtime) -> Optional[dict]:
    bad = []
    for n in (2, 3, 4):
        seq = minimal_sequence(n)
        got = natset.lengths_reduced(build_C(seq), tick=rt.tick)
        if got != (2, n + 1):
            bad.append({"target": f"C (minimal n={n})",
                        "want": [2, n + 1], "got": list(got)})
        if not natset.is_atom_reduced(build_B(seq), tick=rt.tick):
            bad.append({"target": f"B (minimal n={n})",
                        "problem": "expected an atom"})
    return _verdict(bad)


def _check_product_identities(rt: _Runtime) -> Optional[dict]:
    bad = []

    def expect(label: str, lhs: MonIdeal, rhs: MonIdeal) -> None:
        if lhs != rhs:
            bad.append({"identity": label, "lhs": lhs.to_json(),
                        "rhs": rhs.to_json()})

    def b_product(seq, indices) -> MonIdeal:
        out = monideal.UNIT
        for i in indices:
            out = monideal.product(out, build_b(seq.term(i)))
        return out

    for n in (2, 3, 4):
        seq = minimal_sequence(n)
        ic = build_i_c(seq)
        expect(f"I_C = b_(a_1)...b_(a_{n + 1}), minimal n={n}",
               ic, b_product(seq, range(1, n + 2)))
        expect(f"I_C = b_(a_{n}) * I_B, minimal n={n}",
               ic, monideal.product(build_b(seq.term(n)), build_i_b(seq)))
    for n in (3, 4):
        seq = minimal_sequence(n)
        ic = build_i_c(seq)
        for r in range(3, n + 1):
            tb = build_tilde_b(seq, r)
            head = monideal.product(build_b(seq.term(2)), tb)
            expect(f"b_(a_2) * tilde_b_{r} = b_(a_1)...b_(a_{r}), "
                   f"minimal n={n}", head, b_product(seq, range(1, r + 1)))
            expect(f"I_C = b_(a_2) * tilde_b_{r} * rest, minimal n={n}",
                   ic, monideal.product(head,
                                        b_product(seq, range(r + 1, n + 2))))
    a1, a2, b2 = build_a(1), build_a(2), build_b(2)
    expect("a_1 * a_2 = a_1 * b_2",
           monideal.product(a1, a2), monideal.product(a1, b2))
    if a2 == b2:
        bad.append({"identity": "a_2 != b_2", "problem": "factors coincide"})
    expect("a_5 = a_1 * c_4", build_a(5), monideal.product(a1, build_c(4)))
    return _verdict(bad)


def _check_graded_pieces(rt: _Runtime) -> Optional[dict]:
    bad = []
    x2 = HomPoly.from_monomial(2, 0)
    plus = GradedIdeal([x2, HomPoly(2, [0, 1, 1])])
    minus = GradedIdeal([x2, HomPoly(2, [0, 1, -1])])
    c4 = graded.from_mon_ideal(build_c(4))
    if not graded.equals(graded.product(plus, minus), c4):
        bad.append({"check": "<X^2,XY+Y^2> * <X^2,XY-Y^2> = c_4"})
    pairs = [(build_b(2), build_b(3)), (build_c(4), build_a(1))]
    rng = random.Random(_GRADED_SEED)
    pool = oracle.box_ideals(6)
    pairs.extend((rng.choice(pool), rng.choice(pool)) for _ in range(20))
    for a, b in pairs:
        if not min_piece_product_check(a, b):
            bad.append({"check": "minimal graded piece of the product",
                        "a": a.to_json(), "b": b.to_json()})
    return _verdict(bad)


def _check_seed_sum_membership(rt: _Runtime) -> Optional[dict]:
    bad = []
    # Sums of two subset sums over a prefix land among the prefix subset
    # sums exactly for disjoint index sets.
    for n in range(2, 6):
        seq = minimal_sequence(n)
        for k in range(1, n + 1):
            idx = range(1, k + 1)
            sums = {subset_sum(seq, h) for h in _subsets(idx)}
            for i_set in _subsets(idx):
                si = subset_sum(seq, i_set)
                for j_set in _subsets(idx):
                    hit = (si + subset_sum(seq, j_set)) in sums
                    if hit != (not set(i_set) & set(j_set)):
                        bad.append({"family": "prefix sums", "n": n, "k": k,
                                    "I": list(i_set), "J": list(j_set)})
    # The same characterization through the sets A_n, B_n and C_n.
    for n in (2, 3, 4):
        seq = minimal_sequence(n)
        set_a = set(families.build_A(seq))
        set_b = set(build_B(seq))
        set_c = set(build_C(seq))
        ground = range(1, n)
        full_prefix = subset_sum(seq, range(1, n + 1))
        for i_set in _subsets(ground):
            si = subset_sum(seq, i_set)
            for j_set in _subsets(ground):
                disjoint = not set(i_set) & set(j_set)
                if ((si + subset_sum(seq, j_set)) in set_a) != disjoint:
                    bad.append({"family": "A", "n": n,
                                "I": list(i_set), "J": list(j_set)})
                for j_full in (j_set, j_set + (n + 1,)):
                    inside = (si + subset_sum(seq, j_full)) in set_b
                    if inside != disjoint:
                        bad.append({"family": "B", "n": n,
                                    "I": list(i_set), "J": list(j_full)})
            if ((full_prefix + si) in set_b) != (not i_set):
                bad.append({"family": "B top", "n": n, "I": list(i_set)})
        wide = range(1, n + 2)
        for i_set in _subsets(wide):
            si = subset_sum(seq, i_set)
            for j_set in _subsets(wide):
                meet = set(i_set) & set(j_set)
                want = (not meet) or (
                    set(i_set) | set(j_set) == set(range(1, n + 1))
                    and n in meet)
                if ((si + subset_sum(seq, j_set)) in set_c) != want:
                    bad.append({"family": "C", "n": n,
                                "I": list(i_set), "J": list(j_set)})
    # Differences of subset sums over {1} u [3,r]: once past a_1 and away
    # from the single exception a_3 - a_1, they clear a_3 entirely.
    for n in (4, 5):
        seq = minimal_sequence(n)
        a1, a3 = seq.term(1), seq.term(3)
        for r in range(4, n + 1):
            ground = (1,) + tuple(range(3, r + 1))
            sums = [subset_sum(seq, s) for s in _subsets(ground)]
            for si in sums:
                for sj in sums:
                    d = sj - si
                    if d > a1 and d != a3 - a1 and d < a3:
                        bad.append({"family": "differences", "n": n, "r": r,
                                    "difference": d})
    return _verdict(bad)


def _check_sum_free_atoms(rt: _Runtime) -> Optional[dict]:
    eng = rt.mon()
    bad = []
    for s in natset.iter_sum_free(12):
        a = NatSet((0,) + s.elements)
        if not natset.is_atom_reduced(a, tick=rt.tick):
            bad.append({"set": a.to_json(), "problem": "sumset split"})
        if not eng.is_atom(phi(a)):
            bad.append({"set": a.to_json(), "problem": "ideal split"})
    return _verdict(bad)


def _check_oracle_equivalence(rt: _Runtime) -> Optional[dict]:
    bad = []
    eng = rt.sum()
    split_map = oracle.naive_sumset_split_map(10)
    length_cache: dict = {}
    for mask in range(1, 1 << 10):
        a = NatSet([0] + [i + 1 for i in range(10) if mask >> i & 1])
        key = a.elements
        want_pairs = split_map.get(key, set())
        got_pairs = {(p.elements, q.elements) for p, q in eng.split(a)}
        if got_pairs != want_pairs:
            bad.append({"side": "sumset", "target": a.to_json(),
                        "missed": [list(map(list, p))
                                   for p in want_pairs - got_pairs],
                        "extra": [list(map(list, p))
                                  for p in got_pairs - want_pairs]})
            continue
        want_lengths = tuple(sorted(
            oracle.naive_lengths(key, split_map, length_cache)))
        if eng.lengths(a) != want_lengths:
            bad.append({"side": "sumset", "target": a.to_json(),
                        "want": list(want_lengths),
                        "got": list(eng.lengths(a))})
    meng = rt.mon()
    pool = oracle.box_ideals(4)
    mon_map = oracle.naive_mon_split_map(pool)
    mon_cache: dict = {}
    for e in oracle.sample_ideals(200, 4, _ORACLE_SEED):
        want_pairs = mon_map.get(e.gens, set())
        got_pairs = {(a.gens, b.gens) for a, b in meng.split(e)}
        if got_pairs != want_pairs:
            bad.append({"side": "ideal", "target": e.to_json(),
                        "missed": len(want_pairs - got_pairs),
                        "extra": len(got_pairs - want_pairs)})
            continue
        want_lengths = tuple(sorted(
            oracle.naive_lengths(e.gens, mon_map, mon_cache)))
        if meng.lengths(e) != want_lengths:
            bad.append({"side": "ideal", "target": e.to_json(),
                        "want": list(want_lengths),
                        "got": list(meng.lengths(e))})
    return _verdict(bad)


def _check_phi_homomorphism(rt: _Runtime) -> Optional[dict]:
    bad = []
    sets = oracle.sample_zero_sets(1000, 10, _PHI_SEED)
    for a, b in zip(sets[:500], sets[500:]):
        lhs = phi(natset.sumset(a, b))
        rhs = monideal.product(phi(a), phi(b))
        if lhs != rhs:
            bad.append({"A": a.to_json(), "B": b.to_json(),
                        "phi(A+B)": lhs.to_json(),
                        "phi(A)phi(B)": rhs.to_json()})
        if (phi(a) == phi(b)) != (a == b):
            bad.append({"A": a.to_json(), "B": b.to_json(),
                        "problem": "injectivity"})
        for s in (a, b):
            img = phi(s)
            decoded = NatSet(y for _, y in img.gens)
            if decoded != s or any(x + y != s.max for x, y in img.gens):
                bad.append({"A": s.to_json(), "problem": "image decode",
                            "image": img.to_json()})
    return _verdict(bad)


# -- registry ----------------------------------------------------------------


_CLAIMS: tuple[Claim, ...] = (
    Claim(
        "atoms-monomial", "core",
        "Atoms in the ideal monoid: b_i (i in [1,8]), <X^m,Y^n> (m,n in "
        "[1,8]), c_k (k in [3,7]), I_B for minimal sequences with n in "
        "{2,3}, and tilde_b for (n,r) in {(3,3),(4,3),(4,4)}.",
        _check_atoms_monomial),
    Claim(
        "splits-monomial", "core",
        "a_k splits for k in [2,6] (verified witness); phi({0,j,2j}) "
        "equals b_j^2 and splits for j in [1,4]; phi({0,j,m}) is an atom "
        "for 2 <= m <= 9, 1 <= j < m, m != 2j.",
        _check_splits_monomial),
    Claim(
        "lengths-monomial", "core",
        "Length sets in the ideal monoid: L(a_k) = [2,k] for k in [2,6]; "
        "L(I_C) = {2,3} for the minimal sequence with n=2.",
        _check_lengths_monomial),
    Claim(
        "lengths-sumset", "core",
        "Reduced sumset monoid: L(C) = {2,n+1} and B is an atom, for "
        "minimal sequences with n in {2,3,4}.",
        _check_lengths_sumset),
    Claim(
        "product-identities", "core",
        "I_C = b_(a_1)...b_(a_{n+1}) = b_(a_n)*I_B (minimal n in {2,3,4}); "
        "b_(a_2)*tilde_b_r = b_(a_1)...b_(a_r) and completes to I_C "
        "(minimal n in {3,4}, all r); a_1*a_2 = a_1*b_2; a_5 = a_1*c_4.",
        _check_product_identities),
    Claim(
        "graded-pieces", "core",
        "<X^2,XY+Y^2> * <X^2,XY-Y^2> = c_4 over the rationals, and the "
        "bottom graded piece of a product is spanned by products of bottom "
        "pieces on (b_2,b_3), (c_4,a_1) and 20 seeded pairs with exponents "
        "at most 6.",
        _check_graded_pieces),
    Claim(
        "seed-sum-membership", "core",
        "Exhaustive subset-sum checks over minimal sequences: disjoint "
        "supports characterize membership of a_I + a_J in the prefix sums "
        "(n <= 5) and in A_n, B_n, C_n (n <= 4, with the one C_n "
        "exception), and subset-sum differences above a_1 other than "
        "a_3 - a_1 reach a_3 (n <= 5).",
        _check_seed_sum_membership),
    Claim(
        "sum-free-atoms", "core",
        "For every nonempty sum-free A inside [1,12], {0} u A is an atom "
        "of the reduced sumset monoid and phi({0} u A) is an atom of the "
        "ideal monoid.",
        _check_sum_free_atoms),
    Claim(
        "oracle-equivalence", "core",
        "Engine split and length sets match a naive all-pairs oracle on "
        "every 0-containing subset of [0,10] and on 200 seeded ideals "
        "with generators in [0,4]^2.",
        _check_oracle_equivalence),
    Claim(
        "phi-homomorphism", "core",
        "phi(A+B) = phi(A)*phi(B), phi is injective, and images decode "
        "back to their sets, on 500 seeded pairs of 0-containing subsets "
        "of [0,10].",
        _check_phi_homomorphism),
    Claim(
        "lengths-monomial-stretch", "stretch",
        "L(I_C) = {2,3,4} for the minimal sequence with n=3; the divisor "
        "search needs an enlarged budget, so the default answer is "
        "inconclusive.",
        _check_lengths_monomial_stretch,
        default_budget_nodes=_STRETCH_NODES),
)


def registry() -> tuple[Claim, ...]:
    return _CLAIMS


def claim_ids() -> list[str]:
    return [c.claim_id for c in _CLAIMS]


def get_claim(claim_id: str) -> Claim:
    for c in _CLAIMS:
        if c.claim_id == claim_id:
            return c
    raise KeyError(f"unknown claim {claim_id!r}")


def run_claim(claim: Claim, ctx: Optional[ClaimContext] = None) -> ClaimResult:
    ctx = ctx or ClaimContext()
    rt = _Runtime(ctx, claim.default_budget_nodes)
    start = time.perf_counter()
    try:
        witness = claim.runner(rt)
        status = "pass" if witness is None else "fail"
    except SearchBudgetExceeded as exc:
        status = "inconclusive"
        witness = {"budget": {"nodes": exc.nodes,
                              "elapsed": round(exc.elapsed, 3)}}
    return ClaimResult(claim.claim_id, claim.statement, status,
                       time.perf_counter() - start, witness)


def run_suite(suite: Optional[str] = None,
              only: Optional[Iterable[str]] = None,
              ctx: Optional[ClaimContext] = None) -> list[ClaimResult]:
    """Run the registered claims, filtered by suite and/or claim id."""
    wanted = None if only is None else set(only)
    if wanted is not None:
        unknown = wanted - set(claim_ids())
        if unknown:
            raise KeyError(f"unknown claims: {sorted(unknown)}")
    out = []
    for claim in _CLAIMS:
        if suite is not None and claim.suite != suite:
            continue
        if wanted is not None and claim.claim_id not in wanted:
            continue
        out.append(run_claim(claim, ctx))
    return out
