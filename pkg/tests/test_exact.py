import random
from fractions import Fraction

import pytest

from qchromatic.exact import (BiPoly, FactoredRatio, RatFunc,
                              eval_after_t_reduction, pochhammer_qq,
                              pochhammer_qq_single, q_fact, q_int,
                              seeded_primes, sum_factored)

Q = BiPoly.q()
T = BiPoly.t()
ONE = BiPoly.one()


def test_bipoly_canonical_form():
    p = Q * Q + 3 * Q - 3 * Q
    assert p.terms == {(2, 0): Fraction(1)}
    assert (p - p).is_zero()
    assert BiPoly({(1, 0): 0}).is_zero()


def test_bipoly_string_ordering():
    p = Q ** 2 + Q * T + Q + T ** 2 + T + ONE
    assert str(p) == "q^2+q*t+q+t^2+t+1"
    assert str(Q - 2 * T) == "q-2*t"
    assert str(BiPoly.zero()) == "0"
    assert str(-Q + ONE) == "-q+1"
    assert str(BiPoly.const(Fraction(1, 2)) * Q) == "1/2*q"


def test_ratfunc_inverse_pair():
    a = RatFunc(Q - T, ONE)
    b = RatFunc(ONE, Q - T)
    assert a * b == 1


def test_ratfunc_common_denominator_sum():
    a = RatFunc(ONE - T, Q - T)
    b = RatFunc(Q - ONE, Q - T)
    assert a + b == 1


def test_ratfunc_cross_multiplication_equality():
    assert RatFunc(ONE - Q ** 2, ONE - Q) == RatFunc(ONE + Q)


def test_eval_direct_substitution():
    f = RatFunc(ONE - T, Q - T)
    assert f.eval(2, 0) == Fraction(1, 2)
    assert RatFunc.one().eval(5, 7) == 1


def test_eval_pole_raises_and_names_denominator():
    f = RatFunc(ONE - T, Q - T)
    with pytest.raises(ZeroDivisionError) as err:
        f.eval(3, 3)
    assert "q-t" in str(err.value)


def test_equal_num_den_collapses_to_one():
    # construction cancels an identical numerator and denominator, so the
    # would-be 0/0 point evaluates cleanly
    f = RatFunc(Q - T, Q - T)
    assert f.eval(3, 3) == 1
    assert f.is_one()


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RatFunc(ONE, BiPoly.zero())
    with pytest.raises(ZeroDivisionError):
        RatFunc.one() / RatFunc.zero()


def test_q_int_values():
    assert q_int(0).is_zero()
    assert q_int(3) == ONE + Q + Q ** 2
    assert q_fact(0) == ONE
    assert q_fact(3) == q_int(1) * q_int(2) * q_int(3)


def test_pochhammer_unrolled():
    expected = (ONE - Q) * (ONE - Q ** 2) * (ONE - Q)
    assert pochhammer_qq((2, 1)) == expected
    assert pochhammer_qq_single(0) == ONE


def test_pochhammer_factorial_identity_signed():
    # (q;q)_lam = (1-q)^n prod [lam_i]_q!, equivalently
    # (-1)^n (q;q)_lam = (q-1)^n prod [lam_i]_q!
    for lam in [(1,), (2,), (2, 1), (3, 2, 2), (4, 1)]:
        n = sum(lam)
        fact = ONE
        for part in lam:
            fact = fact * q_fact(part)
        assert pochhammer_qq(lam) == (ONE - Q) ** n * fact
        assert pochhammer_qq(lam) * ((-1) ** n) == (Q - ONE) ** n * fact


def test_eval_is_multiplicative_on_random_samples():
    rng = random.Random(11)

    def random_rf():
        num = BiPoly({(rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-4, 4)
                      for _ in range(3)})
        if num.is_zero():
            num = ONE
        return RatFunc(num, Q - T)

    points = [(2, 3), (5, 7), (11, 13)]
    for _ in range(25):
        f, g = random_rf(), random_rf()
        for q0, t0 in points:
            assert (f * g).eval(q0, t0) == f.eval(q0, t0) * g.eval(q0, t0)


def test_cross_multiplication_is_an_equivalence():
    rng = random.Random(5)
    scalars = [rng.randint(1, 6) for _ in range(4)]
    base = RatFunc(ONE - T, Q - T)
    variants = [RatFunc((ONE - T) * c, (Q - T) * c) for c in scalars]
    for f in variants:
        assert f == f
    for f in variants:
        for g in variants:
            assert (f == g) == (g == f)
    for f in variants:
        for g in variants:
            for h in variants:
                if f == g and g == h:
                    assert f == h


def test_divide_exact():
    p = (Q - T) * (ONE + Q * T)
    assert p.divide_exact(Q - T) == ONE + Q * T
    assert p.divide_exact(ONE + Q) is None
    assert BiPoly.zero().divide_exact(Q) == BiPoly.zero()


def test_as_polynomial():
    f = RatFunc((ONE - Q ** 2) * (ONE + T), ONE - Q)
    assert f.as_polynomial() == (ONE + Q) * (ONE + T)
    with pytest.raises(ValueError):
        RatFunc(ONE, Q - T).as_polynomial()


def test_reduced_univariate():
    f = RatFunc((ONE - Q ** 3) * (ONE + Q), (ONE - Q) * (ONE + Q))
    r = f.reduced()
    assert r.den.is_one()
    assert r.num == ONE + Q + Q ** 2
    # untouched when genuinely bivariate
    g = RatFunc(ONE + Q, Q - T)
    assert g.reduced().den == g.den


def test_factored_products_cancel():
    fr = FactoredRatio.one()
    fr.mul_poly(Q - T)
    fr.mul_poly((Q - T) * (ONE + Q), -1)
    assert fr.to_ratfunc() == RatFunc(ONE, ONE + Q)


def test_sum_factored_matches_plain_sum():
    a = FactoredRatio.one()
    a.mul_poly(ONE - T)
    a.mul_poly(Q - T, -1)
    b = FactoredRatio.one()
    b.mul_poly(Q - ONE)
    b.mul_poly(Q - T, -1)
    assert sum_factored([a, b]) == 1
    assert sum_factored([]) == RatFunc.zero()


def test_factored_slice_t():
    fr = FactoredRatio.one()
    fr.mul_poly(Q - T)
    fr.mul_poly(Q - 2 * T, -1)
    sliced = fr.slice_t(3)
    assert sliced == RatFunc(Q - BiPoly.const(3), Q - BiPoly.const(6))


def test_eval_after_t_reduction_handles_removable_pole():
    # (q - t)(1 - t) / ((q - t)(q - q t)) has a removable factor at any q0
    f = RatFunc((Q - T) * (ONE - T), (Q - T) * (Q - Q * T))
    assert eval_after_t_reduction(f, 5, 1) == Fraction(1, 5)


def test_seeded_primes_deterministic_and_disjoint():
    a = seeded_primes(10, seed=42)
    b = seeded_primes(10, seed=42)
    assert a == b
    assert len(set(a)) == 10
    c = seeded_primes(10, seed=43, avoid=a)
    assert not set(a) & set(c)
