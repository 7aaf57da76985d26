"""Two independent oracles for the chromatic expansions.

``chromatic_brute`` sums q^asc x^kappa over proper colorings directly.
The operator oracle builds the same function through the raising and
lowering operators of Carlsson and Mellit acting on symmetric functions
tensored with polynomial variables y_1..y_k: a Dyck word spells a
composition of d_plus and d_minus, the result lands back in the symmetric
function ring, and the plethystic substitution X -> (q-1)X divided by
(q-1)^n recovers the chromatic function.  The two paths share no formulas
with the tableau expansion, which is the point.

Internally elements of V_k hold their symmetric part in the power-sum
basis, where both plethystic shifts are diagonal; the public view
``symfunc_terms`` converts to the monomial basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exact import BiPoly, RatFunc
from .interval import Hessenberg
from .partitions import Partition
from .symfunc import SymFunc, p_expansion_of_e

_QPOW_MINUS_ONE: dict[int, BiPoly] = {}


def _q_pow_minus_one(m: int) -> BiPoly:
    p = _QPOW_MINUS_ONE.get(m)
    if p is None:
        p = BiPoly.q(m) - BiPoly.one()
        _QPOW_MINUS_ONE[m] = p
    return p


# -- brute-force colorings ------------------------------------------------------


def chromatic_brute(e: Hessenberg, num_vars: int | None = None) -> SymFunc:
    """Sum of q^asc x^kappa over proper colorings, collected in the m basis.

    Only colorings whose color-count vector is already weakly decreasing
    are accumulated; each such vector is the exponent of the one monomial
    x_1^(lam_1) x_2^(lam_2) ... that represents m_lam, so no symmetry
    argument is needed.  Colorings are walked with properness pruning and
    an incremental ascent count.
    """
    n = e.n
    if num_vars is None:
        num_vars = n
    if num_vars < n:
        raise ValueError(f"need at least n={n} colors, got {num_vars}")
    smaller_nbrs = [[]] + [list(e.predecessors(v)) for v in range(1, n + 1)]
    colors = [0] * (n + 1)
    counts = [0] * (num_vars + 1)
    acc: dict[tuple, dict[int, int]] = {}
    max_edges = len(e.edges())

    def rec(v: int, asc: int):
        if v > n:
            trimmed = []
            for c in range(1, num_vars + 1):
                if counts[c]:
                    trimmed.append(counts[c])
                else:
                    if any(counts[d] for d in range(c + 1, num_vars + 1)):
                        return
                    break
            for a, b in zip(trimmed, trimmed[1:]):
                if a < b:
                    return
            key = tuple(trimmed)
            bucket = acc.setdefault(key, {})
            bucket[asc] = bucket.get(asc, 0) + 1
            return
        nbrs = smaller_nbrs[v]
        for c in range(1, num_vars + 1):
            rises = 0
            ok = True
            for j in nbrs:
                cj = colors[j]
                if cj == c:
                    ok = False
                    break
                if cj < c:
                    rises += 1
            if not ok:
                continue
            colors[v] = c
            counts[c] += 1
            rec(v + 1, asc + rises)
            counts[c] -= 1
            colors[v] = 0

    rec(1, 0)
    coeffs = {}
    for key, bucket in acc.items():
        assert max(bucket) <= max_edges
        coeffs[Partition(key)] = RatFunc(BiPoly({(a, 0): c for a, c in bucket.items()}))
    return SymFunc("m", n, coeffs)


# -- the operator oracle -------------------------------------------------------


@dataclass
class VkElement:
    """An element of Lambda tensor C[y_1..y_k], graded by total degree <= cap.

    terms maps a y-exponent tuple of length k to a dict from power-sum
    partitions to coefficients rational in q; t never appears.
    """

    k: int
    cap: int
    terms: dict[tuple[int, ...], dict[Partition, RatFunc]]

    @staticmethod
    def one(cap: int) -> "VkElement":
        return VkElement(0, cap, {(): {Partition(): RatFunc.one()}})

    def is_zero(self) -> bool:
        return not self.terms

    def total_terms(self) -> int:
        return sum(len(v) for v in self.terms.values())

    def symfunc_terms(self, basis: str = "m") -> dict[tuple[int, ...], SymFunc]:
        """Public view with the symmetric part converted to a named basis."""
        return {yexp: SymFunc("p", self.cap, coeffs).to_basis(basis)
                for yexp, coeffs in self.terms.items()}

    def map_equal(self, other: "VkElement") -> bool:
        if self.k != other.k:
            return False
        keys = set(self.terms) | set(other.terms)
        for key in keys:
            a = self.terms.get(key, {})
            b = other.terms.get(key, {})
            for lam in set(a) | set(b):
                x = a.get(lam, RatFunc.zero())
                y = b.get(lam, RatFunc.zero())
                if x != y:
                    return False
        return True


def _add_term(store, yexp, lam, value):
    bucket = store.setdefault(yexp, {})
    old = bucket.get(lam)
    new = value if old is None else old + value
    if new.is_zero():
        bucket.pop(lam, None)
        if not bucket:
            store.pop(yexp, None)
    else:
        bucket[lam] = new


_SHIFT_CACHE: dict[Partition, list] = {}


def _subset_shifts(lam: Partition):
    """Ways to convert part instances of lam into powers of one y variable.

    Each option is (kept partition, converted degree, converted count,
    weight) with weight = multinomial ways * prod (q^v - 1) over the
    converted parts; the caller flips the sign for a negative shift.
    """
    cached = _SHIFT_CACHE.get(lam)
    if cached is not None:
        return cached
    seen: dict[int, int] = {}
    for part in lam:
        seen[part] = seen.get(part, 0) + 1
    mults = sorted(seen.items())
    options: list[tuple[Partition, int, int, BiPoly]] = []

    def rec(idx, kept, deg, count, weight):
        if idx == len(mults):
            options.append((Partition(sorted(kept, reverse=True)),
                            deg, count, weight))
            return
        value, mult = mults[idx]
        for take in range(mult + 1):
            w = weight
            if take:
                w = w * comb(mult, take) * _q_pow_minus_one(value) ** take
            rec(idx + 1, kept + [value] * (mult - take),
                deg + value * take, count + take, w)

    rec(0, [], 0, 0, BiPoly.one())
    _SHIFT_CACHE[lam] = options
    return options


_TI_CACHE: dict[tuple[int, int], list[tuple[int, int, BiPoly]]] = {}


def _ti_monomial(a: int, b: int):
    """T action on y_i^a y_(i+1)^b as a list of (a', b', coefficient).

    Computed by exact synthetic division of
    (q-1) x^(a+1) y^b + x^b y^(a+1) - q x^(b+1) y^a by (y - x); the three
    remainders (q-1) + 1 - q cancel, which the construction asserts.
    """
    cached = _TI_CACHE.get((a, b))
    if cached is not None:
        return cached
    acc: dict[tuple[int, int], BiPoly] = {}
    remainder = BiPoly.zero()

    def add_quotient(xexp, yexp, coef):
        # x^xexp y^yexp = x^xexp (y^yexp - x^yexp) + x^(xexp+yexp), and
        # (y^b - x^b)/(y - x) telescopes; total remainder must cancel.
        nonlocal remainder
        for v in range(yexp):
            key = (xexp + yexp - 1 - v, v)
            acc[key] = acc.get(key, BiPoly.zero()) + coef
        remainder = remainder + coef

    add_quotient(a + 1, b, BiPoly.q() - BiPoly.one())
    add_quotient(b, a + 1, BiPoly.one())
    add_quotient(b + 1, a, -BiPoly.q())
    if not remainder.is_zero():
        raise AssertionError(f"nonzero remainder dividing by y-x at ({a}, {b})")
    result = [(x, y, c) for (x, y), c in acc.items() if not c.is_zero()]
    _TI_CACHE[(a, b)] = result
    return result


def hecke_T(i: int, F: VkElement) -> VkElement:
    """Apply T_i, acting on the variables y_i and y_(i+1)."""
    if not 1 <= i < F.k:
        raise ValueError(f"T_{i} needs 1 <= i < k = {F.k}")
    store: dict[tuple, dict[Partition, RatFunc]] = {}
    for yexp, coeffs in F.terms.items():
        a, b = yexp[i - 1], yexp[i]
        for na, nb, scal in _ti_monomial(a, b):
            new = yexp[:i - 1] + (na, nb) + yexp[i + 1:]
            rf_scal = RatFunc(scal)
            for lam, c in coeffs.items():
                _add_term(store, new, lam, c * rf_scal)
    return VkElement(F.k, F.cap, store)


def _pleth_shift(F: VkElement, var_index: int, sign: int, new_var: bool) -> VkElement:
    """p_m[X] -> p_m[X] + sign (q^m - 1) y^m on the chosen y variable."""
    k = F.k + 1 if new_var else F.k
    store: dict[tuple, dict[Partition, RatFunc]] = {}
    for yexp, coeffs in F.terms.items():
        base = yexp + (0,) if new_var else yexp
        for lam, c in coeffs.items():
            for kept, deg, count, weight in _subset_shifts(lam):
                value = c
                if count:
                    value = value * RatFunc(weight)
                    if sign < 0 and count % 2:
                        value = -value
                new = base[:var_index] + (base[var_index] + deg,) + base[var_index + 1:]
                if sum(new) + kept.size > F.cap:
                    continue
                _add_term(store, new, kept, value)
    return VkElement(k, F.cap, store)


def d_plus(F: VkElement) -> VkElement:
    """V_k -> V_(k+1): shift the alphabet by (q-1) y_(k+1), then apply
    T_k, ..., T_1 in that order."""
    k = F.k
    G = _pleth_shift(F, k, +1, new_var=True)
    for i in range(k, 0, -1):
        G = hecke_T(i, G)
    return G


def d_minus(F: VkElement) -> VkElement:
    """V_k -> V_(k-1): shift by -(q-1) y_k, pair the y_k powers with
    elementary symmetric functions, and drop the variable."""
    if F.k < 1:
        raise ValueError("d_minus needs at least one y variable")
    G = _pleth_shift(F, F.k - 1, -1, new_var=False)
    store: dict[tuple, dict[Partition, RatFunc]] = {}
    for yexp, coeffs in G.terms.items():
        a = yexp[-1]
        rest = yexp[:-1]
        sign = -1 if a % 2 else 1
        for mu, cm in p_expansion_of_e(a + 1).items():
            scal = Fraction(sign) * cm
            for lam, c in coeffs.items():
                merged = Partition(sorted(tuple(lam) + tuple(mu), reverse=True))
                if sum(rest) + merged.size > F.cap:
                    continue
                _add_term(store, rest, merged, c * scal)
    return VkElement(F.k - 1, F.cap, store)


def dyck_operator_series(e: Hessenberg) -> SymFunc:
    """Apply the operator word of the Dyck path of e to 1.

    The word W^(a_1) S^(b_1) ... W^(a_l) S^(b_l) acts as
    d_minus^(b_l) d_plus^(a_l) ... d_minus^(b_1) d_plus^(a_1), rightmost
    factor first; the result lives in V_0 and is returned in the m basis.
    """
    F = VkElement.one(e.n)
    for a, b in e.to_dyck().runs():
        for _ in range(a):
            F = d_plus(F)
        for _ in range(b):
            F = d_minus(F)
    if F.k != 0:
        raise AssertionError("operator word did not return to V_0")
    return SymFunc("p", e.n, F.terms.get((), {})).to_basis("m")


def chromatic_via_operators(e: Hessenberg) -> SymFunc:
    """(q-1)^(-n) times the series at the alphabet (q-1)X, in the m basis.

    Every coefficient is asserted to be an honest polynomial in q.
    """
    n = e.n
    series = dyck_operator_series(e)
    shifted = series.plethysm_scale(lambda m: RatFunc(_q_pow_minus_one(m)))
    denom = RatFunc((BiPoly.q() - BiPoly.one()) ** n)
    out = {}
    for lam, rf in shifted.coeffs.items():
        value = rf / denom
        out[lam] = RatFunc(value.as_polynomial())
    return SymFunc("m", n, out)
