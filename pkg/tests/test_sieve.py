"""Streaming enumeration against brute force, and fixture round-trips."""

from importlib.resources import files

from pndkit import divfun
from pndkit.sieve import (
    crosscheck_fixture,
    enumerate_primitive_nondeficient,
    generate_fixture,
    iter_sigma,
    perfect_numbers,
    prime_cofactor_values,
    read_fixture,
    write_fixture,
)

FIXTURE_DIR = files("pndkit") / "fixtures"


def brute_sigma(n: int) -> int:
    return sum(d for d in range(1, n + 1) if n % d == 0)


def test_iter_sigma_matches_brute_force():
    got = dict(iter_sigma(1, 2001, segment_size=257))
    assert got == {n: brute_sigma(n) for n in range(1, 2001)}


def test_iter_sigma_odd_only():
    got = dict(iter_sigma(1, 2001, odd_only=True, segment_size=100))
    assert got == {n: brute_sigma(n) for n in range(1, 2001, 2)}
    # window not starting at 1, even lower bound
    got = dict(iter_sigma(10, 40, odd_only=True, segment_size=7))
    assert got == {n: brute_sigma(n) for n in range(11, 40, 2)}


def test_enumeration_matches_definition():
    def brute_primitive(n):
        if brute_sigma(n) < 2 * n:
            return False
        return all(brute_sigma(d) < 2 * d for d in range(1, n) if n % d == 0)

    got = [f.value for f in enumerate_primitive_nondeficient(3000, segment_size=512)]
    assert got == [n for n in range(1, 3001) if brute_primitive(n)]
    assert got[:6] == [6, 20, 28, 70, 88, 104]
    for f in enumerate_primitive_nondeficient(3000):
        assert divfun.is_primitive_nondeficient(f)


def test_first_odd_entry_is_945():
    odd = [f.value for f in enumerate_primitive_nondeficient(946, odd_only=True)]
    assert odd == [945]
    both = [f.value for f in enumerate_primitive_nondeficient(1000)]
    assert [n for n in both if n % 2] == [945]


def test_jobs_do_not_change_output():
    serial = [f.pairs for f in enumerate_primitive_nondeficient(20000, segment_size=1 << 11)]
    pooled = [
        f.pairs
        for f in enumerate_primitive_nondeficient(20000, segment_size=1 << 11, jobs=4)
    ]
    assert serial == pooled


def test_perfect_numbers():
    assert perfect_numbers(10**4) == [6, 28, 496, 8128]


def test_prime_cofactor_values_matches_definition():
    vals = prime_cofactor_values(500)
    assert vals == [divfun.prime_cofactor_sum(n) for n in range(1, 501)]
    assert vals[0] == 0  # n = 1 has no prime divisors


def test_packaged_fixtures_crosscheck():
    report = crosscheck_fixture(
        (f.value for f in enumerate_primitive_nondeficient(10**4)),
        str(FIXTURE_DIR / "a006039.txt"),
    )
    assert report.matched and report.compared > 15

    report = crosscheck_fixture(
        perfect_numbers(10**4), str(FIXTURE_DIR / "a000396.txt")
    )
    assert report.matched and report.compared == 4

    report = crosscheck_fixture(
        prime_cofactor_values(2000), str(FIXTURE_DIR / "a069359.txt")
    )
    assert report.matched and report.compared == 2000


def test_fixture_roundtrip_and_corruption(tmp_path):
    values, header = generate_fixture("A000396", 10**4)
    assert values == [6, 28, 496, 8128]
    assert header[0].startswith("generated by: pndkit fixtures generate")
    path = tmp_path / "a000396.txt"
    write_fixture(str(path), values, header)
    got_header, got_values = read_fixture(str(path))
    assert got_header == list(header) and got_values == values

    report = crosscheck_fixture(iter(values), str(path))
    assert report.matched

    corrupted = values.copy()
    corrupted[2] = 497
    write_fixture(str(path), corrupted, header)
    report = crosscheck_fixture(iter(values), str(path))
    assert not report.matched
    assert report.first_mismatch == (2, 497, 496)
    assert "mismatch at index 2" in str(report)


def test_generate_fixture_rejects_unknown(tmp_path):
    import pytest

    with pytest.raises(ValueError):
        generate_fixture("A000001", 100)
