"""Formal (spoof) factorizations: parsing, divisor sums, perfection."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pndkit.numkernel import factorize
from pndkit.spoof import (
    SpoofFactorization,
    SpoofParseError,
    formal_abundancy_limit,
    formal_prime_reciprocal_sum,
    is_spoof_perfect,
    parse_spoof,
    sigma_tilde,
    to_exact_factorization,
    to_string,
)

# the Descartes example: 3^2*7^2*11^2*13^2*22021, where 22021 = 19^2*61
DESCARTES = SpoofFactorization.from_pairs(
    [(3, 2), (7, 2), (11, 2), (13, 2), (22021, 1)]
)


def test_descartes_identity():
    assert DESCARTES.value == 198585576189
    assert sigma_tilde(DESCARTES) == 397171152378 == 2 * DESCARTES.value
    assert is_spoof_perfect(DESCARTES)


def test_descartes_is_not_honestly_perfect():
    # the true sigma sees 22021 = 19^2*61, so the honest index exceeds 2
    from pndkit.divfun import abundancy

    assert 22021 == 19**2 * 61
    assert abundancy(factorize(DESCARTES.value)) > 2


def test_sigma_tilde_agrees_with_sigma_on_honest_primes():
    from pndkit.divfun import sigma

    for n in (2, 6, 28, 945, 5040):
        f = factorize(n)
        sf = SpoofFactorization.from_factorization(f)
        assert sigma_tilde(sf) == sigma(f)
        assert sf.value == n


def test_parse_and_to_string_roundtrip():
    sf = parse_spoof("3^2*7^2*11^2*13^2*22021")
    assert sf == DESCARTES
    assert to_string(sf) == "3^2*7^2*11^2*13^2*22021"
    assert parse_spoof(to_string(sf)) == sf

    sf = parse_spoof("(-3)^2 * 5")
    assert sf.pairs == ((-3, 2), (5, 1))
    assert to_string(sf) == "(-3)^2*5"
    assert parse_spoof(to_string(sf)) == sf


@settings(max_examples=200, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.integers(min_value=-50, max_value=50).filter(lambda x: x != 0),
            st.integers(min_value=1, max_value=5),
        ),
        min_size=1,
        max_size=5,
    )
)
def test_roundtrip_property(pairs):
    sf = SpoofFactorization.from_pairs(pairs)
    assert parse_spoof(to_string(sf)) == sf


def test_parse_errors():
    for bad in ("", "  ", "3^", "^2", "3**5", "0^2", "3^0", "-3^2", "3^2*"):
        with pytest.raises(SpoofParseError):
            parse_spoof(bad)


def test_negative_bases():
    sf = parse_spoof("(-3)^2*(-7)")
    assert sf.value == 9 * -7
    # 1 + (-3) + 9 = 7; 1 + (-7) = -6
    assert sigma_tilde(sf) == 7 * -6
    assert formal_prime_reciprocal_sum(sf) == Fraction(-1, 3) + Fraction(-1, 7)
    assert formal_abundancy_limit(sf) == Fraction(-3, -4) * Fraction(-7, -8)


def test_repeated_bases_are_distinct_formal_primes():
    sf = SpoofFactorization.from_pairs([(3, 1), (3, 1)])
    assert sf.value == 9
    assert sigma_tilde(sf) == 4 * 4  # (1+3)(1+3), not 1+3+9
    assert formal_prime_reciprocal_sum(sf) == Fraction(2, 3)


def test_unit_base_flag_and_degeneracy():
    sf = SpoofFactorization.from_pairs([(1, 3), (5, 1)])
    assert sf.has_unit_base
    with pytest.raises(ValueError):
        formal_abundancy_limit(sf)
    assert not DESCARTES.has_unit_base
    # |base| = 1 also triggers for -1, though its limit is defined
    assert SpoofFactorization.from_pairs([(-1, 2)]).has_unit_base


def test_to_exact_factorization():
    sf = parse_spoof("3^2*3*5")
    f = to_exact_factorization(sf)
    assert f.pairs == ((3, 3), (5, 1))
    with pytest.raises(ValueError):
        to_exact_factorization(parse_spoof("3^2*22021"))  # 22021 not prime
    with pytest.raises(ValueError):
        to_exact_factorization(parse_spoof("(-3)^2"))


def test_canonical_ordering():
    a = SpoofFactorization.from_pairs([(7, 1), (3, 2)])
    b = SpoofFactorization.from_pairs([(3, 2), (7, 1)])
    assert a == b and a.pairs == ((3, 2), (7, 1))
