import random
from fractions import Fraction

import pytest

from qchromatic.exact import BiPoly, RatFunc
from qchromatic.macdonald import htilde
from qchromatic.partitions import Partition, partitions_of
from qchromatic.symfunc import BASES, SymFunc

Q = BiPoly.q()
ONE = BiPoly.one()


def m_of(f):
    return {tuple(lam): rf for lam, rf in f.to_basis("m").coeffs.items()}


def test_classical_expansions():
    assert m_of(SymFunc.basis_element("e", (2,))) == {(1, 1): RatFunc.one()}
    assert m_of(SymFunc.basis_element("h", (2,))) == {
        (2,): RatFunc.one(), (1, 1): RatFunc.one()}
    e11 = SymFunc.basis_element("e", (1, 1))
    assert m_of(e11) == {(2,): RatFunc.one(), (1, 1): RatFunc(BiPoly.const(2))}


def test_schur_expansion():
    s21 = SymFunc.basis_element("s", (2, 1))
    assert m_of(s21) == {(2, 1): RatFunc.one(),
                         (1, 1, 1): RatFunc(BiPoly.const(2))}


def test_mul():
    e1 = SymFunc.basis_element("e", (1,), 2)
    assert e1.mul(e1).coeffs == {Partition((1, 1)): RatFunc.one()}
    m1 = SymFunc.basis_element("m", (1,), 2)
    assert m_of(m1.mul(m1)) == {(2,): RatFunc.one(),
                                (1, 1): RatFunc(BiPoly.const(2))}
    f = SymFunc.basis_element("h", (2, 1), 3)
    assert f.mul(SymFunc.one("h", 3)) == f


def test_mul_truncates_at_cap():
    e2 = SymFunc.basis_element("e", (2,), 3)
    prod = e2.mul(e2)
    assert prod.is_zero()


def test_plethysm_qminus1_on_e1():
    e1 = SymFunc.basis_element("e", (1,))
    scaled = e1.plethysm_scale(lambda k: RatFunc(BiPoly.q(k) - ONE))
    assert scaled.coeffs == {Partition((1,)): RatFunc(Q - ONE)}


def test_plethysm_one_over_1_minus_q_matches_macdonald_t1():
    # (q;q)_(2) h_2[X/(1-q)] equals the t=1 filling expansion for shape (2)
    from qchromatic.exact import pochhammer_qq
    h2 = SymFunc.basis_element("h", (2,))
    scaled = h2.plethysm_scale(lambda k: RatFunc(ONE, ONE - BiPoly.q(k)))
    rhs = scaled.to_basis("m").scale(RatFunc(pochhammer_qq((2,))))
    lhs = SymFunc("m", 2, {lam: RatFunc(rf.num.subs_t(1))
                           for lam, rf in htilde((2,)).coeffs.items()})
    assert lhs == rhs


def test_plethysm_negate_alphabet():
    mu = (2, 1)
    h = SymFunc.basis_element("h", mu)
    negated = h.plethysm_scale(lambda k: RatFunc(BiPoly.const(-1)))
    e = SymFunc.basis_element("e", mu).scale((-1) ** sum(mu))
    assert negated == e.to_basis("h")


def test_eval_at_minus_one():
    assert SymFunc.basis_element("e", (1,)).eval_at_minus_one() == -1
    assert SymFunc.basis_element("e", (2,)).eval_at_minus_one() == 1
    assert SymFunc.basis_element("h", (2,)).eval_at_minus_one() == RatFunc.zero()


def test_roundtrip_conversions():
    for basis in BASES:
        for n in range(1, 8):
            for lam in partitions_of(n):
                f = SymFunc.basis_element(basis, lam)
                back = f.to_basis("m").to_basis(basis)
                assert back.coeffs == f.coeffs, (basis, lam)


def test_plethysm_is_a_ring_homomorphism():
    rng = random.Random(3)

    def random_f(cap):
        coeffs = {}
        for _ in range(3):
            n = rng.randint(1, 2)
            lam = rng.choice(partitions_of(n))
            coeffs[lam] = RatFunc(BiPoly.const(rng.randint(-3, 3)))
        return SymFunc("h", cap, coeffs)

    scale = lambda k: RatFunc(BiPoly.q(k) - ONE)
    for _ in range(10):
        f, g = random_f(4), random_f(4)
        lhs = f.mul(g).plethysm_scale(scale)
        rhs = f.plethysm_scale(scale).mul(g.plethysm_scale(scale))
        assert lhs == rhs


def test_omega_sends_h_to_e():
    for n in range(1, 7):
        for lam in partitions_of(n):
            h = SymFunc.basis_element("h", lam)
            assert h.omega() == SymFunc.basis_element("e", lam).to_basis("h")


def test_degree_cap_drops_high_terms():
    f = SymFunc("m", 2, {Partition((3,)): RatFunc.one(),
                         Partition((2,)): RatFunc.one()})
    assert f.support() == [Partition((2,))]


def test_json_shape():
    f = SymFunc("m", 7, {Partition((4, 2, 1)): RatFunc(BiPoly.q(4))})
    doc = f.to_json_dict()
    assert doc == {"basis": "m", "degree": 7,
                   "terms": [{"partition": [4, 2, 1],
                              "coeff": {"num": "q^4", "den": "1"}}]}


def test_unknown_basis_rejected():
    with pytest.raises(ValueError):
        SymFunc("x", 3)
    with pytest.raises(ValueError):
        SymFunc.one("m", 3).to_basis("z")
