"""Acceptance gate: every registered claim must land on its required status.

Each test runs one claim end to end through the verification registry and
prints a single status line, so a bare run of this module reads as a
checklist.  All core claims are exact checks and must pass outright; the
stretch claim is allowed to stop at "inconclusive" under its default search
budget, which is the documented behavior, but must never fail.
"""

from atomlab import claims


def _run(number, claim_id):
    result = claims.run_claim(claims.get_claim(claim_id))
    print(f"[criterion {number:>2}] {claim_id}: {result.status} "
          f"({result.elapsed:.2f}s)")
    return result


def test_criterion_01_atoms_monomial():
    assert _run(1, "atoms-monomial").status == "pass"


def test_criterion_02_splits_monomial():
    assert _run(2, "splits-monomial").status == "pass"


def test_criterion_03_lengths_monomial():
    assert _run(3, "lengths-monomial").status == "pass"


def test_criterion_04_lengths_sumset():
    assert _run(4, "lengths-sumset").status == "pass"


def test_criterion_05_product_identities():
    assert _run(5, "product-identities").status == "pass"


def test_criterion_06_graded_pieces():
    assert _run(6, "graded-pieces").status == "pass"


def test_criterion_07_seed_sum_membership():
    assert _run(7, "seed-sum-membership").status == "pass"


def test_criterion_08_sum_free_atoms():
    assert _run(8, "sum-free-atoms").status == "pass"


def test_criterion_09_oracle_equivalence():
    assert _run(9, "oracle-equivalence").status == "pass"


def test_criterion_10_phi_homomorphism():
    assert _run(10, "phi-homomorphism").status == "pass"


def test_criterion_stretch_lengths_monomial():
    # Combinatorial blowup puts the full divisor enumeration far past the
    # default budget; stopping at "inconclusive" is the designed outcome,
    # finishing with "pass" would also be accepted.  "fail" never is.
    result = _run("S", "lengths-monomial-stretch")
    assert result.status in ("pass", "inconclusive")


def test_registry_is_complete():
    assert claims.claim_ids() == [
        "atoms-monomial", "splits-monomial", "lengths-monomial",
        "lengths-sumset", "product-identities", "graded-pieces",
        "seed-sum-membership", "sum-free-atoms", "oracle-equivalence",
        "phi-homomorphism", "lengths-monomial-stretch",
    ]
