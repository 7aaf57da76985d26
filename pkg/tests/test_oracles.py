import random
from fractions import Fraction

import pytest

from qchromatic.exact import BiPoly, RatFunc
from qchromatic.interval import Hessenberg, enumerate_hessenberg
from qchromatic.oracles import (VkElement, chromatic_brute,
                                chromatic_via_operators, d_minus, d_plus,
                                dyck_operator_series, hecke_T)
from qchromatic.partitions import Partition
from qchromatic.symfunc import SymFunc

Q = BiPoly.q()
ONE = BiPoly.one()


def test_chromatic_brute_examples():
    chi = chromatic_brute(Hessenberg((0, 0)), 2)
    assert chi.coeffs == {Partition((1, 1)): RatFunc(ONE + Q)}
    chi = chromatic_brute(Hessenberg((0, 1)), 2)
    assert chi.coeffs == {Partition((2,)): RatFunc.one(),
                          Partition((1, 1)): RatFunc(BiPoly.const(2))}
    with pytest.raises(ValueError):
        chromatic_brute(Hessenberg((0, 0)), 1)


def test_chromatic_brute_n7_table_entries():
    chi = chromatic_brute(Hessenberg((0, 1, 1, 2, 2, 3, 4)), 7)
    assert chi.coeff((4, 2, 1)) == RatFunc(BiPoly.q(4))
    assert chi.coeff((3, 3, 1)) == RatFunc(2 * BiPoly.q(4))


def test_ascent_exponents_bounded_by_edges():
    for n in range(1, 6):
        for e in enumerate_hessenberg(n):
            bound = len(e.edges())
            for rf in chromatic_brute(e).coeffs.values():
                assert rf.num.deg_q() <= bound


# -- independent long-division oracle for the Hecke action ---------------------


def _poly2_mul(f, g):
    out = {}
    for (a1, b1), c1 in f.items():
        for (a2, b2), c2 in g.items():
            key = (a1 + a2, b1 + b2)
            s = out.get(key, BiPoly.zero()) + c1 * c2
            out[key] = s
    return {k: v for k, v in out.items() if not v.is_zero()}


def _poly2_divide_by_y_minus_x(f):
    """Long division of a polynomial in (x, y) with BiPoly coefficients by
    (y - x), returning (quotient, remainder-in-x)."""
    work = dict(f)
    quot = {}
    while True:
        candidates = [k for k in work if k[1] > 0]
        if not candidates:
            break
        a, b = max(candidates, key=lambda k: (k[1], k[0]))
        coeff = work.pop((a, b))
        quot[(a, b - 1)] = quot.get((a, b - 1), BiPoly.zero()) + coeff
        key = (a + 1, b - 1)
        s = work.get(key, BiPoly.zero()) + coeff
        if s.is_zero():
            work.pop(key, None)
        else:
            work[key] = s
    return ({k: v for k, v in quot.items() if not v.is_zero()},
            {k: v for k, v in work.items() if not v.is_zero()})


def _hecke_by_long_division(a, b):
    """T on x^a y^b computed from the definition by explicit division."""
    qm1 = Q - ONE
    numerator = {}
    for key, coeff in [((a + 1, b), qm1), ((b, a + 1), ONE), ((b + 1, a), -Q)]:
        numerator[key] = numerator.get(key, BiPoly.zero()) + coeff
    quot, rem = _poly2_divide_by_y_minus_x(numerator)
    assert not rem, "division by y - x must be exact"
    return quot


@pytest.mark.parametrize("a,b", [(0, 0), (1, 0), (0, 1), (2, 1), (1, 2), (3, 3)])
def test_hecke_monomial_action_matches_long_division(a, b):
    expected = _hecke_by_long_division(a, b)
    F = VkElement(2, a + b + 1, {(a, b): {Partition(): RatFunc.one()}})
    result = hecke_T(1, F)
    collected = {yexp: coeffs[Partition()] for yexp, coeffs in result.terms.items()}
    assert set(collected) == set(expected)
    for key, rf in collected.items():
        assert rf == RatFunc(expected[key])


def test_hecke_examples():
    one = VkElement(2, 2, {(0, 0): {Partition(): RatFunc.one()}})
    assert hecke_T(1, one).terms == {(0, 0): {Partition(): RatFunc.one()}}
    y1 = VkElement(2, 2, {(1, 0): {Partition(): RatFunc.one()}})
    out = hecke_T(1, y1)
    assert out.terms[(0, 1)][Partition()] == 1
    assert out.terms[(1, 0)][Partition()] == RatFunc(ONE - Q)
    y2 = VkElement(2, 2, {(0, 1): {Partition(): RatFunc.one()}})
    assert hecke_T(1, y2).terms == {(1, 0): {Partition(): RatFunc(Q)}}
    with pytest.raises(ValueError):
        hecke_T(2, y1)


def test_d_plus_examples():
    assert d_plus(VkElement.one(1)).terms == {(0,): {Partition(): RatFunc.one()}}
    e1 = VkElement(0, 1, {(): {Partition((1,)): RatFunc.one()}})
    out = d_plus(e1)
    assert out.terms[(0,)][Partition((1,))] == 1
    assert out.terms[(1,)][Partition()] == RatFunc(Q - ONE)


def test_d_minus_examples():
    one_v1 = VkElement(1, 1, {(0,): {Partition(): RatFunc.one()}})
    assert d_minus(one_v1).terms == {(): {Partition((1,)): RatFunc.one()}}
    y1 = VkElement(1, 2, {(1,): {Partition(): RatFunc.one()}})
    out = d_minus(y1)
    # -e_2 in the power-sum basis is (p_2 - p_1^2)/2
    assert out.terms[()][Partition((2,))] == RatFunc(BiPoly.const(Fraction(1, 2)))
    assert out.terms[()][Partition((1, 1))] == RatFunc(BiPoly.const(Fraction(-1, 2)))
    assert d_minus(d_plus(VkElement.one(1))).terms == \
        {(): {Partition((1,)): RatFunc.one()}}
    with pytest.raises(ValueError):
        d_minus(VkElement.one(3))


def test_operator_series_base_cases():
    assert dyck_operator_series(Hessenberg((0,))) == \
        SymFunc.basis_element("e", (1,)).to_basis("m")
    assert chromatic_via_operators(Hessenberg((0,))) == \
        SymFunc.basis_element("e", (1,)).to_basis("m")


def test_operator_oracle_equals_colorings():
    for n in range(1, 5):
        for e in enumerate_hessenberg(n):
            assert chromatic_via_operators(e) == chromatic_brute(e), tuple(e)


def test_repeated_d_pairs_raise_degree():
    F = VkElement.one(4)
    for step in range(1, 5):
        F = d_minus(d_plus(F))
        degrees = {lam.size + sum(yexp)
                   for yexp, coeffs in F.terms.items() for lam in coeffs}
        assert degrees == {step}
    assert F.k == 0


def test_hecke_relations_on_random_elements():
    rng = random.Random(23)
    one_minus_q = RatFunc(ONE - Q)
    q_rf = RatFunc(Q)
    for _ in range(4):
        terms = {}
        for _ in range(5):
            yexp = tuple(rng.randint(0, 2) for _ in range(3))
            parts = sorted(rng.choices([1, 2], k=rng.randint(0, 1)), reverse=True)
            lam = Partition(parts)
            if sum(yexp) + lam.size > 4:
                continue
            terms.setdefault(yexp, {})[lam] = RatFunc(BiPoly.const(rng.randint(1, 7)))
        if not terms:
            continue
        F = VkElement(3, 4, terms)
        for i in (1, 2):
            tf = hecke_T(i, F)
            ttf = hecke_T(i, tf)
            residual = {}
            for store, scal in ((ttf, RatFunc.one()), (tf, -one_minus_q), (F, -q_rf)):
                for yexp, d in store.terms.items():
                    for lam, v in d.items():
                        key = (yexp, lam)
                        residual[key] = residual.get(key, RatFunc.zero()) + v * scal
            assert all(v.is_zero() for v in residual.values())
        left = hecke_T(1, hecke_T(2, hecke_T(1, F)))
        right = hecke_T(2, hecke_T(1, hecke_T(2, F)))
        assert left.map_equal(right)


def test_symfunc_terms_view_is_m_basis():
    e1 = VkElement(0, 1, {(): {Partition((1,)): RatFunc.one()}})
    view = e1.symfunc_terms("m")
    assert view[()].basis == "m"
    assert view[()].coeff((1,)) == 1
