"""Dense polynomial arithmetic, cyclotomics, Gaussian binomials, predicates."""

import random
from math import comb

import pytest

from factratio import (
    DensePoly,
    NotPolynomialError,
    PreconditionError,
    cyclotomic,
    is_nonnegative,
    is_reciprocal,
    is_unimodal,
    q_catalan,
    qbinomial,
    rsw_filter,
)
from factratio.qpoly import first_negative_index, unimodality_witness


def test_canonical_form():
    assert DensePoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert DensePoly(()).degree == -1
    assert DensePoly((0,)).is_zero()
    assert DensePoly.one().coeffs == (1,)


def test_arithmetic_small():
    p = DensePoly((1, 1))  # 1 + q
    assert (p * p).coeffs == (1, 2, 1)
    assert (p - p).is_zero()
    assert (p + DensePoly((0, 0, 3))).coeffs == (1, 1, 3)
    assert (-p).coeffs == (-1, -1)


def test_divmod_generic():
    num = DensePoly((-1, 0, 0, 1))  # q^3 - 1
    den = DensePoly((-1, 1))  # q - 1
    q, r = divmod(num, den)
    assert r.is_zero()
    assert q.coeffs == (1, 1, 1)
    q2, r2 = divmod(DensePoly((1, 1)), DensePoly((1, 1, 1)))
    assert q2.is_zero() and r2.coeffs == (1, 1)


def test_one_minus_power_helpers_match_generic_ops():
    rng = random.Random(7)
    for _ in range(80):
        coeffs = [rng.randint(-6, 6) for _ in range(rng.randint(1, 25))]
        p = DensePoly(coeffs)
        j = rng.randint(1, 8)
        fast = p.mul_one_minus_power(j)
        slow = p * DensePoly.one_minus_power(j)
        assert fast == slow
        back, exact = fast.div_one_minus_power(j)
        assert exact and back == p
        # non-multiples usually fail to divide; when they do divide the
        # quotient must reproduce the product
        q, ok = p.div_one_minus_power(j)
        if ok:
            assert q.mul_one_minus_power(j) == p


def test_evaluate():
    p = DensePoly((1, 0, 2))
    assert p.evaluate(1) == 3
    assert p.evaluate(2) == 9
    assert p.coefficient_sum() == 3


def test_json_coeffs_are_decimal_strings():
    assert DensePoly((1, -2, 10**30)).to_json_coeffs() == ["1", "-2", str(10**30)]


def test_cyclotomic_small():
    assert cyclotomic(1).coeffs == (-1, 1)
    assert cyclotomic(2).coeffs == (1, 1)
    assert cyclotomic(4).coeffs == (1, 0, 1)
    assert cyclotomic(6).coeffs == (1, -1, 1)


def test_cyclotomic_product_is_qk_minus_one():
    for k in range(1, 61):
        prod = DensePoly.one()
        for d in range(1, k + 1):
            if k % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == DensePoly.power_minus_one(k)


def test_qbinomial_examples():
    assert qbinomial(2, 1).coeffs == (1, 1)
    assert qbinomial(4, 2).coeffs == (1, 1, 2, 1, 1)
    assert qbinomial(3, 5).is_zero()
    assert qbinomial(5, 0).coeffs == (1,)


def test_qbinomial_degree_and_symmetry():
    for n in range(0, 15):
        for k in range(0, n + 1):
            p = qbinomial(n, k)
            assert p.degree == k * (n - k)
            assert p == qbinomial(n, n - k)
            assert p.evaluate(1) == comb(n, k)


def test_qbinomial_reciprocal_unimodal():
    for n in range(0, 31):
        for k in range(0, n + 1):
            p = qbinomial(n, k)
            assert is_reciprocal(p)
            assert is_unimodal(p)


def test_predicates_examples():
    p = qbinomial(4, 2)
    assert is_reciprocal(p) and is_unimodal(p) and is_nonnegative(p)
    dip = DensePoly((1, 0, 1))  # rises after a fall: not unimodal
    assert is_reciprocal(dip)
    assert not is_unimodal(dip)
    assert unimodality_witness(dip) == 2


def test_zero_polynomial_conventions():
    z = DensePoly.zero()
    assert is_reciprocal(z) and is_unimodal(z) and is_nonnegative(z)


def test_negative_coefficient_breaks_unimodality():
    p = DensePoly((1, -2, 1))
    assert not is_nonnegative(p)
    assert first_negative_index(p) == 1
    assert unimodality_witness(p) == 1
    assert not is_unimodal(p)


def _random_reciprocal_unimodal(rng, max_half_degree=20):
    # constant term must stay positive or mirroring breaks canonical form
    half = [rng.randint(1, 5)] + [
        rng.randint(0, 5) for _ in range(rng.randint(0, max_half_degree - 1))
    ]
    rising = []
    total = 0
    for step in half:
        total += step
        rising.append(total)
    if rng.random() < 0.5:
        coeffs = rising + rising[::-1]  # even length: plateau peak
    else:
        coeffs = rising + [rising[-1] + rng.randint(0, 3)] + rising[::-1]
    return DensePoly(coeffs)


def test_product_of_reciprocal_unimodal_is_reciprocal_unimodal():
    rng = random.Random(2024)
    for _ in range(40):
        p = _random_reciprocal_unimodal(rng)
        r = _random_reciprocal_unimodal(rng)
        assert is_reciprocal(p) and is_unimodal(p)
        prod = p * r
        assert is_reciprocal(prod)
        assert is_unimodal(prod)


def test_rsw_filter_examples():
    out = rsw_filter(DensePoly((1, 2, 1)), 1, 2)
    assert out.coeffs == (1, 1)
    assert rsw_filter(DensePoly((1,)), 1, 1).coeffs == (1,)


def test_rsw_filter_precondition_vs_nonpolynomial():
    with pytest.raises(PreconditionError):
        rsw_filter(DensePoly((1, 2, 1)), 2, 1)  # m > n
    with pytest.raises(PreconditionError):
        rsw_filter(DensePoly((1, 2)), 1, 2)  # not reciprocal
    with pytest.raises(PreconditionError):
        rsw_filter(DensePoly((1, 0, 1)), 1, 2)  # reciprocal but not unimodal
    with pytest.raises(NotPolynomialError):
        rsw_filter(qbinomial(4, 2), 1, 5)  # printed q-Catalan shape at n=2


def test_q_catalan_values_and_positivity():
    assert q_catalan(0).coeffs == (1,)
    assert q_catalan(1).coeffs == (1,)
    assert q_catalan(2).coeffs == (1, 0, 1)
    for n in range(1, 13):
        c = q_catalan(n)
        assert is_nonnegative(c)
        assert c.evaluate(1) == comb(2 * n, n) // (n + 1)


def test_q_catalan_n2_is_not_unimodal():
    assert not is_unimodal(q_catalan(2))


def test_printed_catalan_form_is_not_polynomial():
    # (1-q)/(1-q^{2n+1}) [2n,n]_q fails at n=2: value 6/5 at q=1
    num = qbinomial(4, 2).mul_one_minus_power(1)
    _, exact = num.div_one_minus_power(5)
    assert not exact
