"""Valuation layer: Legendre floor sums vs trial-division oracles."""

from fractions import Fraction

import pytest

from factratio import (
    FactorialRatioSpec,
    binary_digit_sum,
    digit_sum,
    eval_ratio,
    is_prime,
    legendre_ord,
    padic_profile,
    primes_up_to,
    ratio_ord,
)
from factratio.divisibility import S_RATIO, T_RATIO, WZ_INT_RATIO


def ord_p_int(p: int, v: int) -> int:
    """Trial-division order of a single integer."""
    e = 0
    while v % p == 0:
        v //= p
        e += 1
    return e


def test_primes_table():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_up_to(1) == []
    assert is_prime(2) and is_prime(97) and is_prime(7919)
    assert not is_prime(1) and not is_prime(0) and not is_prime(91)


def test_legendre_examples():
    assert legendre_ord(2, 0) == 0
    assert legendre_ord(2, 4) == 3  # 4! = 24 = 2^3 * 3
    assert legendre_ord(3, 9) == 4  # 9! has 3^4


def test_legendre_rejects_bad_inputs():
    with pytest.raises(ValueError):
        legendre_ord(4, 10)
    with pytest.raises(ValueError):
        legendre_ord(1, 10)
    with pytest.raises(ValueError):
        legendre_ord(2, -1)


def test_legendre_matches_trial_division():
    # accumulate ord_p(n!) = sum_{k<=n} ord_p(k) and compare at every n
    for p in primes_up_to(30):
        acc = 0
        for n in range(1, 400):
            acc += ord_p_int(p, n)
            assert legendre_ord(p, n) == acc


def test_legendre_digit_sum_restatement():
    # ord_p(n!) = (n - digit_sum_base_p(n)) / (p - 1)
    for p in (2, 3, 5, 7, 13, 31):
        for n in (0, 1, 5, 100, 12345, 99991):
            assert legendre_ord(p, n) == (n - digit_sum(n, p)) // (p - 1)


def test_ratio_ord_spot_values():
    assert ratio_ord(5, S_RATIO, 1) == 1  # S(1) = 5
    assert ratio_ord(7, S_RATIO, 1) == 0
    assert ratio_ord(13, T_RATIO, 1) == 1  # t(1) = 91 = 7*13


def test_ratio_ord_can_be_negative():
    inv_central = FactorialRatioSpec.from_pairs([(1, 0), (1, 0)], [(2, 0)])
    # (n!)^2/(2n)! = 1/C(2n,n); at n=2 the value is 1/6
    assert ratio_ord(2, inv_central, 2) == -1
    assert ratio_ord(3, inv_central, 2) == -1


def test_padic_profile_examples():
    prof = padic_profile(S_RATIO, 1)
    assert prof.nonzero() == {5: 1}
    assert prof.value() == 5

    prof2 = padic_profile(S_RATIO, 2)
    assert prof2.value() == 231
    assert prof2.nonzero() == {3: 1, 7: 1, 11: 1}

    trivial = FactorialRatioSpec.from_pairs([(1, 0)], [(1, 0)])
    assert padic_profile(trivial, 17).nonzero() == {}


def test_profile_lists_every_prime_up_to_max_argument():
    prof = padic_profile(S_RATIO, 3)
    limit = S_RATIO.max_argument(3)
    assert sorted(prof.orders) == primes_up_to(limit)


@pytest.mark.parametrize("spec", [S_RATIO, T_RATIO, WZ_INT_RATIO])
def test_profile_product_equals_exact_value(spec):
    for n in range(1, 201):
        assert padic_profile(spec, n).value() == eval_ratio(spec, n)


def test_binary_digit_sum():
    assert binary_digit_sum(0) == 0
    assert binary_digit_sum(8) == 1
    assert binary_digit_sum(11) == 3  # 1011
    with pytest.raises(ValueError):
        binary_digit_sum(-1)


def test_ord2_identity_matches_digit_sum():
    # ord_2 of (6n)! n! / ((3n)!(2n)!^2) equals the binary digit sum of n
    for n in range(1, 3001):
        assert ratio_ord(2, WZ_INT_RATIO, n) == binary_digit_sum(n)


def test_spec_balance_validated():
    with pytest.raises(ValueError):
        FactorialRatioSpec.from_pairs([(6, 0)], [(3, 0), (2, 0)])


def test_negative_argument_rejected():
    spec = FactorialRatioSpec.from_pairs([(1, -1), (1, 1)], [(2, 0)])
    with pytest.raises(ValueError):
        spec.arguments(0)
    assert spec.arguments(1) == ((0, 2), (2,))


def test_eval_ratio_is_exact_rational():
    inv_central = FactorialRatioSpec.from_pairs([(1, 0), (1, 0)], [(2, 0)])
    assert eval_ratio(inv_central, 2) == Fraction(1, 6)
