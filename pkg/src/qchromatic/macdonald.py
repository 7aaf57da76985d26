"""Modified Macdonald polynomials, Pieri coefficients, Hall-Littlewood Q.

H-tilde is built from the HHL filling statistics: for a filling sigma of the
diagram of mu (French convention),

    inv(sigma) = #{attacking pairs read top-to-bottom with a strict drop}
                 - sum of arms over descent cells,
    maj(sigma) = sum of (leg + 1) over descent cells,

and the m-basis coefficient against m_lam is the q^inv t^maj sum over all
fillings with content lam.  The Pieri rule, the t=1 and X=-1 evaluations and
the q <-> t conjugation symmetry act as independent oracles in the tests.

Hall-Littlewood P is computed by finite-variable antisymmetrization, a path
that shares nothing with the filling formula, so the t=0 bridge identity
downstream is a genuine cross-check.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .exact import BiPoly, FactoredRatio, RatFunc
from .partitions import (Cell, Partition, addable_cells, cell_monomial,
                         conjugate, leg, n_stat, partitions_of)
from .symfunc import SymFunc, expand_in_m


# -- filling machinery ---------------------------------------------------------


def _diagram_data(mu: Partition):
    """Reading-order cells plus the index pairs driving inv and maj."""
    cells = [Cell(i, j) for j in range(len(mu) - 1, -1, -1) for i in range(mu[j])]
    pos = {c: k for k, c in enumerate(cells)}
    arms = [mu[c.row] - c.col - 1 for c in cells]
    legs = [leg(mu, c) for c in cells]
    south = [(pos[c], pos[Cell(c.col, c.row - 1)])
             for c in cells if c.row > 0]
    attack = []
    for u, cu in enumerate(cells):
        for v in range(u + 1, len(cells)):
            cv = cells[v]
            if cv.row == cu.row or (cv.row == cu.row - 1 and cu.col > cv.col):
                attack.append((u, v))
    return cells, arms, legs, south, attack


def _multiset_fillings(content):
    """All arrangements of the multiset {1^c1, 2^c2, ...} as tuples."""
    total = sum(content)
    counts = list(content)
    out = []
    current = [0] * total

    def rec(idx):
        if idx == total:
            out.append(tuple(current))
            return
        for v, left in enumerate(counts):
            if left:
                counts[v] -= 1
                current[idx] = v + 1
                rec(idx + 1)
                counts[v] += 1

    rec(0)
    return out


def _htilde_expansion(mu: Partition) -> dict[Partition, BiPoly]:
    n = mu.size
    if n == 0:
        return {Partition(): BiPoly.one()}
    _, arms, legs, south, attack = _diagram_data(mu)
    out: dict[Partition, BiPoly] = {}
    for lam in partitions_of(n):
        acc: dict[tuple[int, int], Fraction] = {}
        for filling in _multiset_fillings(lam):
            maj = 0
            inv = 0
            for u, d in south:
                if filling[u] > filling[d]:
                    maj += legs[u] + 1
                    inv -= arms[u]
            for u, v in attack:
                if filling[u] > filling[v]:
                    inv += 1
            key = (inv, maj)
            acc[key] = acc.get(key, Fraction(0)) + 1
        out[lam] = BiPoly(acc)
    return out


class MacdonaldCache:
    """Memoized H-tilde expansions; the one stateful object in the library.

    Reads are plain dict lookups; computation and insertion happen under a
    single lock, so concurrent readers are safe and writes are serialized.
    """

    def __init__(self):
        self._store: dict[Partition, SymFunc] = {}
        self._lock = threading.Lock()

    def htilde(self, mu) -> SymFunc:
        mu = Partition(mu)
        cached = self._store.get(mu)
        if cached is not None:
            return cached
        with self._lock:
            cached = self._store.get(mu)
            if cached is None:
                coeffs = {lam: RatFunc(p) for lam, p in _htilde_expansion(mu).items()}
                cached = SymFunc("m", mu.size, coeffs)
                self._store[mu] = cached
        return cached


_DEFAULT_CACHE = MacdonaldCache()


def htilde(mu, cache: MacdonaldCache | None = None) -> SymFunc:
    """The modified Macdonald polynomial of shape mu, in the m basis."""
    return (cache or _DEFAULT_CACHE).htilde(mu)


def htilde_at_minus_one(mu) -> RatFunc:
    """Plethystic value at the alphabet -1: (-1)^|mu| q^n(mu') t^n(mu)."""
    mu = Partition(mu)
    sign = (-1) ** mu.size
    return RatFunc(BiPoly.monomial(sign, n_stat(conjugate(mu)), n_stat(mu)))


# -- Pieri coefficients ----------------------------------------------------------


def _row_column_cells(lam: Partition, x: Cell):
    if x not in addable_cells(lam):
        raise ValueError(f"cell {tuple(x)} is not addable to {tuple(lam)}")
    row = [Cell(i, x.row) for i in range(lam[x.row])] if x.row < len(lam) else []
    col = [Cell(x.col, j) for j in range(x.row)]
    return row, col


def pieri_weight_factored(lam: Partition, x: Cell) -> FactoredRatio:
    """The arm/leg product d_{lam,x} in factored form."""
    row, col = _row_column_cells(lam, x)
    fr = FactoredRatio()
    for c in row:
        a = lam[c.row] - c.col - 1
        l = leg(lam, c)
        fr.mul_poly(BiPoly.q(a) - BiPoly.t(l + 1))
        fr.mul_poly(BiPoly.q(a + 1) - BiPoly.t(l + 1), -1)
    for c in col:
        a = lam[c.row] - c.col - 1
        l = leg(lam, c)
        fr.mul_poly(BiPoly.q(a + 1) - BiPoly.t(l))
        fr.mul_poly(BiPoly.q(a + 1) - BiPoly.t(l + 1), -1)
    return fr


def pieri_d(lam, x: Cell) -> RatFunc:
    """Coefficient of H-tilde(lam + x) in e_1 * H-tilde(lam)."""
    return pieri_weight_factored(Partition(lam), x).to_ratfunc()


# -- Hall-Littlewood ---------------------------------------------------------------


_HL_CACHE: dict[tuple[Partition, int], SymFunc] = {}


def _perm_sign_pairs(n: int):
    """(permutation, sign) pairs for S_n."""
    out = [((), 1)]
    for k in range(n):
        nxt = []
        for perm, sign in out:
            for pos in range(k + 1):
                nxt.append((perm[:pos] + (k,) + perm[pos:],
                            sign if (len(perm) - pos) % 2 == 0 else -sign))
        out = nxt
    return out


def _strip_product(nvars: int) -> dict[tuple, dict[int, int]]:
    """prod_{i<j} (x_i - t x_j) expanded; exponent tuple -> {t-degree: int}."""
    poly = {(0,) * nvars: {0: 1}}
    for i in range(nvars):
        for j in range(i + 1, nvars):
            nxt: dict[tuple, dict[int, int]] = {}
            for exps, tpoly in poly.items():
                for which in (i, j):
                    lst = list(exps)
                    lst[which] += 1
                    key = tuple(lst)
                    bucket = nxt.setdefault(key, {})
                    for td, c in tpoly.items():
                        shift = 1 if which == j else 0
                        val = -c if which == j else c
                        bucket[td + shift] = bucket.get(td + shift, 0) + val
            poly = {k: {td: c for td, c in v.items() if c}
                    for k, v in nxt.items()}
            poly = {k: v for k, v in poly.items() if v}
    return poly


def _t_factorial(m: int) -> BiPoly:
    """[m]_t! = prod_{j<=m} (1 + t + ... + t^(j-1))."""
    out = BiPoly.one()
    for j in range(1, m + 1):
        out = out * BiPoly({(0, i): 1 for i in range(j)})
    return out


def hall_littlewood_P(lam, nvars: int | None = None) -> SymFunc:
    """P_lam[X;t] by antisymmetrized finite-variable symmetrization.

    Needs nvars >= max(len(lam), partition length of any monomial read off),
    so the default nvars = |lam| always suffices.
    """
    lam = Partition(lam)
    n = lam.size
    if nvars is None:
        nvars = max(n, 1)
    if nvars < len(lam):
        raise ValueError("too few variables for this partition")
    key = (lam, nvars)
    cached = _HL_CACHE.get(key)
    if cached is not None:
        return cached

    padded = tuple(lam) + (0,) * (nvars - len(lam))
    strip = _strip_product(nvars)
    alternant: dict[tuple, dict[int, int]] = {}
    for perm, sign in _perm_sign_pairs(nvars):
        for exps, tpoly in strip.items():
            moved = [0] * nvars
            for i, e in enumerate(exps):
                moved[perm[i]] = e
            for i, e in enumerate(padded):
                moved[perm[i]] += e
            keyexp = tuple(moved)
            bucket = alternant.setdefault(keyexp, {})
            for td, c in tpoly.items():
                bucket[td] = bucket.get(td, 0) + sign * c
    delta = tuple(range(nvars - 1, -1, -1))
    schur_terms: list[tuple[Partition, BiPoly]] = []
    for exps, tpoly in alternant.items():
        tpoly = {td: c for td, c in tpoly.items() if c}
        if not tpoly:
            continue
        if any(a <= b for a, b in zip(exps, exps[1:])):
            continue
        mu = tuple(a - d for a, d in zip(exps, delta))
        while mu and mu[-1] == 0:
            mu = mu[:-1]
        schur_terms.append((Partition(mu),
                            BiPoly({(0, td): c for td, c in tpoly.items()})))

    mults: dict[int, int] = {0: nvars - len(lam)}
    for part in lam:
        mults[part] = mults.get(part, 0) + 1
    v_lam = BiPoly.one()
    for m in mults.values():
        v_lam = v_lam * _t_factorial(m)

    coeffs: dict[Partition, BiPoly] = {}
    for mu, tpoly in schur_terms:
        for nu, c in expand_in_m("s", mu).items():
            add = tpoly * c
            coeffs[nu] = coeffs.get(nu, BiPoly.zero()) + add
    out: dict[Partition, RatFunc] = {}
    for nu, tpoly in coeffs.items():
        if tpoly.is_zero():
            continue
        quot = tpoly.divide_exact(v_lam)
        if quot is None:
            raise AssertionError(
                f"Hall-Littlewood normalisation failed for {tuple(lam)} at m_{tuple(nu)}")
        out[nu] = RatFunc(quot)
    result = SymFunc("m", n, out)
    _HL_CACHE[key] = result
    return result


def hall_littlewood_Q(lam, nvars: int | None = None) -> SymFunc:
    """Q_lam[X;t] = b_lam(t) P_lam[X;t] with b from part multiplicities."""
    lam = Partition(lam)
    mults: dict[int, int] = {}
    for part in lam:
        mults[part] = mults.get(part, 0) + 1
    b = BiPoly.one()
    for m in mults.values():
        for j in range(1, m + 1):
            b = b * (BiPoly.one() - BiPoly.t(j))
    return hall_littlewood_P(lam, nvars).scale(RatFunc(b))


def t_inverse_to_q(p: BiPoly) -> RatFunc:
    """Substitute t -> 1/q in a polynomial in t alone."""
    if p.deg_q() != 0:
        raise ValueError("t_inverse_to_q expects a polynomial in t only")
    top = p.deg_t()
    num = BiPoly({(top - b, 0): c for (_, b), c in p.terms.items()})
    return RatFunc(num, BiPoly.q(top))


def hall_littlewood_Q_inv_q(lam) -> SymFunc:
    """Q_lam[X; q^(-1)] with coefficients as rational functions of q."""
    base = hall_littlewood_Q(lam)
    out = {}
    for nu, rf in base.coeffs.items():
        out[nu] = t_inverse_to_q(rf.as_polynomial())
    return SymFunc("m", Partition(lam).size, out)


def cell_product_monomial(mu: Partition) -> BiPoly:
    """prod over cells of q^col t^row, i.e. q^n(mu') t^n(mu)."""
    out = BiPoly.one()
    for c in Partition(mu).cells():
        out = out * cell_monomial(c)
    return out
