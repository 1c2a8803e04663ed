"""Partial-factorization certificates, cyclotomic splits, and scans."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pndkit import bounds, divfun
from pndkit.numkernel import factorize
from pndkit.search import (
    REFERENCE_SHAPE_CANDIDATE,
    H_partial,
    PartialFactorization,
    cyclotomic_value,
    evaluate_shape_hypotheses,
    moebius,
    search_prop3_witness,
    search_question1,
    search_question2,
    search_question3,
    sigma_power_anchor,
    sigma_prime_power_split,
)


def test_H_partial_verdicts():
    # complete and below 2
    pf = PartialFactorization(((3, 1), (7, 1)), 1, 2)
    r = H_partial(pf)
    assert r.verdict == "CertifiedBelow2"
    assert r.h_lower == Fraction(7, 4)
    # above 2 certifies even with an unfactored cofactor
    pf = PartialFactorization(((3, 1), (5, 1), (7, 1)), 10**30 + 57, 10_000)
    r = H_partial(pf)
    assert r.verdict == "CertifiedAbove2"
    assert r.h_lower == Fraction(35, 16)
    assert not r.complete
    # below 2 with a cofactor left is undecidable
    pf = PartialFactorization(((3, 1),), 10**30 + 57, 10_000)
    r = H_partial(pf)
    assert r.verdict == "Inconclusive"


def test_partial_factorization_validation():
    with pytest.raises(ValueError):
        PartialFactorization(((4, 1),), 1, 2)  # composite
    with pytest.raises(ValueError):
        PartialFactorization(((3, 0),), 1, 2)  # zero exponent
    with pytest.raises(ValueError):
        PartialFactorization(((3, 1), (3, 2)), 1, 2)  # repeated prime
    with pytest.raises(ValueError):
        PartialFactorization((), 0, 2)  # cofactor < 1
    pf = PartialFactorization(((3, 2), (7, 1)), 11, 2)
    assert pf.value == 9 * 7 * 11 and not pf.complete


def test_factor_budgeted():
    pf = PartialFactorization.factor_budgeted(945)
    assert pf.complete and pf.pairs == ((3, 3), (5, 1), (7, 1))
    # a 201-bit semiprime cofactor survives: over the rho bit cap, and
    # both prime factors sit far beyond the trial limit
    big = (2**100 + 277) * (2**100 + 331)  # product of two primes
    pf = PartialFactorization.factor_budgeted(3**2 * 5 * big, trial_limit=100)
    assert pf.pairs == ((3, 2), (5, 1))
    assert pf.cofactor == big and not pf.complete
    assert pf.value == 3**2 * 5 * big
    # under the cap, rho gets its chance: semiprime of two 30-bit primes
    pf = PartialFactorization.factor_budgeted(
        1073741827 * 1073742077, trial_limit=100, rho_iters=500_000
    )
    assert pf.complete and pf.pairs == ((1073741827, 1), (1073742077, 1))


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=2, max_value=10**9))
def test_partial_h_never_exceeds_true_h(n):
    # harshly budgeted factorization: the lower bound must stay below the
    # true abundancy limit, and certificates must be truthful
    pf = PartialFactorization.factor_budgeted(n, trial_limit=30, rho_iters=0)
    truth = divfun.abundancy_limit(factorize(n))
    r = H_partial(pf)
    assert r.h_lower <= truth
    if r.verdict == "CertifiedAbove2":
        assert truth > 2
    if r.verdict == "CertifiedBelow2":
        assert truth < 2 and pf.complete


def test_moebius():
    assert [moebius(m) for m in range(1, 13)] == [
        1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0,
    ]
    with pytest.raises(ValueError):
        moebius(0)


def test_cyclotomic_values():
    assert cyclotomic_value(1, 5) == 4
    assert cyclotomic_value(2, 3) == 4
    assert cyclotomic_value(3, 5) == 31
    assert cyclotomic_value(6, 7) == 43
    assert cyclotomic_value(6, 5) == 21
    assert cyclotomic_value(6, 17) == 273
    # degree of Phi_m is phi(m): spot-check m = 12 at x = 2 (value 13)
    assert cyclotomic_value(12, 2) == 13
    with pytest.raises(ValueError):
        cyclotomic_value(6, 1)


def test_sigma_split_identity():
    # sigma(p^a) = prod over divisors d > 1 of a+1 of Phi_d(p)
    for p in (3, 5, 7, 11, 97):
        for a in range(1, 21):
            parts = sigma_prime_power_split(p, a)
            prod = 1
            for _, v in parts:
                prod *= v
            assert prod == divfun.sigma(factorize(p**a)), (p, a)
            assert [d for d, _ in parts] == sorted(
                d for d in range(2, a + 2) if (a + 1) % d == 0
            )


def test_question1_scan_clean():
    rep = search_question1(100)
    assert rep.question == "question1"
    assert rep.clean
    assert rep.cells_scanned == 24  # odd primes 3..97
    assert rep.non_witnesses == 24
    assert rep.witnesses == () and rep.inconclusive == ()
    # spot non-witnesses: sigma(3^2) = 13, sigma(5^2) = 31, both prime
    assert divfun.abundancy_limit(13) * Fraction(3, 2) == Fraction(13, 8)
    assert divfun.abundancy_limit(31) * Fraction(5, 4) == Fraction(31, 24)


def test_question2_witness_cells():
    # Phi_6(5) = 21 = 3*7: H = 7/4 < 2 but appending 5 gives 35/16 > 2
    rep = search_question2(6, 5)
    assert rep.cells_scanned == 12  # m in 1..6, p in {3, 5}
    assert not rep.clean
    assert len(rep.witnesses) == 1
    cell = rep.witnesses[0]
    assert cell.cell == (6, 5)
    assert cell.h_lower == Fraction(7, 4)
    assert cell.h_with_p == Fraction(35, 16)
    assert cell.complete

    # Phi_6(17) = 273 = 3*7*13 behaves the same way
    rep = search_question2(6, 17)
    assert [c.cell for c in rep.witnesses] == [(6, 5), (6, 17)]
    assert rep.witnesses[1].h_lower == Fraction(91, 48)
    assert rep.inconclusive == ()


def test_scan_report_json():
    rep = search_question2(6, 5)
    j = rep.to_json()
    assert j["question"] == "question2"
    assert j["m_limit"] == 6 and j["p_limit"] == 5
    assert j["cells_scanned"] == 12 and j["non_witnesses"] == 11
    lines = list(rep.json_lines())
    assert lines[-1] == j
    wit = lines[0]
    assert wit["question"] == "question2"
    assert wit["cell"] == [6, 5] and wit["verdict"] == "witness"
    assert wit["h_lower_num"] == 7 and wit["h_lower_den"] == 4
    assert wit["complete"] is True
    assert wit["notes"][0] == "H(p*V) lower bound 35/16"


def test_question3_small_scan():
    rep = search_question3(20, 6)
    assert rep.question == "question3"
    assert rep.cells_scanned == 7 * 3  # odd primes 3..19, a in {2, 4, 6}
    assert rep.clean


def test_anchor_odd_exponent_closes():
    # sigma(5^5) = 3906, odd part 1953 = 3^2*7*31
    cell = sigma_power_anchor(5, 5)
    assert cell.verdict == "witness"
    assert cell.complete
    assert cell.h_lower == Fraction(217, 120)
    assert cell.h_with_p == Fraction(217, 96)
    assert 1953 == 3**2 * 7 * 31


def test_anchor_huge_even_exponent_certifies_one_side():
    # sigma(7^944) is far beyond factoring, but the cyclotomic parts give
    # enough primes to push the with-p lower bound over 2
    cell = sigma_power_anchor(7, 944)
    assert cell.verdict == "inconclusive"
    assert not cell.complete
    assert cell.h_with_p > 2
    assert "H(p*V) > 2 already certified" in cell.note
    assert 2 < float(cell.h_with_p) < Fraction(21, 10)


def test_anchor_input_validation():
    with pytest.raises(ValueError):
        sigma_power_anchor(4, 2)
    with pytest.raises(ValueError):
        sigma_power_anchor(9, 2)
    with pytest.raises(ValueError):
        sigma_power_anchor(5, 0)


def test_evaluate_shape_hypotheses_reference():
    ev = evaluate_shape_hypotheses(REFERENCE_SHAPE_CANDIDATE)
    assert not ev.all_met
    d = dict(ev.hypotheses)
    assert d["one-odd-exponent"]
    assert not d["primitive-nondeficient"]
    assert not d["p1-at-least-11"]
    assert "not primitive" in ev.note
    assert "below the floor" in ev.note


def test_prop3_search_finds_witnesses():
    rep = search_prop3_witness()
    assert rep.prime_floor == 11
    assert len(rep.witnesses) >= 3
    assert rep.configs_tried <= 2000
    for f in rep.witnesses:
        ev = evaluate_shape_hypotheses(f.pairs)
        assert ev.all_met, f.pairs
        # and the upper bound these inputs exist for actually holds
        rec = bounds.check_T_upper_shape(f)
        assert rec.verdict == "Holds", f.pairs
    # frozen: the first witness is 27 squared primes (skipping 67) and 181
    first = rep.witnesses[0]
    assert first.smallest_prime == 11
    assert first.pairs[-1] == (181, 1)
    assert all(a == 2 for _, a in first.pairs[:-1])
    assert not rep.reference.all_met


def test_prop3_search_deterministic():
    a = search_prop3_witness()
    b = search_prop3_witness()
    assert [f.pairs for f in a.witnesses] == [f.pairs for f in b.witnesses]
    assert a.configs_tried == b.configs_tried
