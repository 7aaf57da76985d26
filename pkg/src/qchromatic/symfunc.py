"""Degree-truncated symmetric functions over the rational-function field.

A SymFunc stores coefficients (RatFunc values) against partitions in one of
the classical bases m, e, h, p, s.  All conversions route through the
monomial basis: e, h and p expand via honest finite-variable polynomials
(d variables suffice in degree d), s expands through the Jacobi-Trudi
determinant in h, and the reverse direction inverts the per-degree
transition matrix once and caches it.

Products and plethystic substitutions are computed in the power-sum basis,
where multiplication is concatenation of partitions and every substitution
used downstream acts diagonally: p_k -> c(k) * p_k.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Callable

from .exact import BiPoly, RatFunc, RF_ONE
from .partitions import Partition, partitions_of

BASES = ("m", "e", "h", "p", "s")

_ZERO = Fraction(0)

# caches: expansion of a basis element in m, and the inverse transition
# matrices m -> basis, both per degree
_TO_M_CACHE: dict[tuple[str, Partition], dict[Partition, Fraction]] = {}
_FROM_M_CACHE: dict[tuple[str, int], tuple[list[Partition], list[list[Fraction]]]] = {}
_P_OF_E_CACHE: dict[int, dict[Partition, Fraction]] = {}


# -- finite-variable expansions ----------------------------------------------


def _nvar_single(basis: str, k: int, nvars: int) -> dict[tuple, int]:
    """e_k, h_k or p_k as an explicit polynomial in nvars variables."""
    if k == 0:
        return {(0,) * nvars: 1}
    out: dict[tuple, int] = {}
    if basis == "p":
        for i in range(nvars):
            exps = [0] * nvars
            exps[i] = k
            out[tuple(exps)] = 1
    elif basis == "e":
        for idx in combinations(range(nvars), k):
            exps = [0] * nvars
            for i in idx:
                exps[i] = 1
            out[tuple(exps)] = 1
    elif basis == "h":
        for idx in combinations_with_replacement(range(nvars), k):
            exps = [0] * nvars
            for i in idx:
                exps[i] += 1
            out[tuple(exps)] = 1
    else:
        raise ValueError(f"no finite-variable rule for basis {basis!r}")
    return out


def _nvar_mul(f: dict, g: dict) -> dict:
    out: dict[tuple, int] = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            s = out.get(key, 0) + c1 * c2
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def _collect_m(poly: dict, nvars: int) -> dict[Partition, Fraction]:
    """Read m-coefficients off a symmetric polynomial in nvars variables."""
    out = {}
    for exps, c in poly.items():
        dec = tuple(sorted((e for e in exps if e), reverse=True))
        if exps == dec + (0,) * (nvars - len(dec)):
            out[Partition(dec)] = Fraction(c)
    return out


def _jacobi_trudi_in_h(lam: Partition) -> dict[Partition, int]:
    """s_lam as an integer combination of h_mu, via det(h_{lam_i - i + j})."""
    ell = len(lam)
    if ell == 0:
        return {Partition(): 1}
    out: dict[Partition, int] = {}

    def rec(i, used, sign, rows):
        if i == ell:
            mu = Partition(sorted((r for r in rows if r > 0), reverse=True))
            out[mu] = out.get(mu, 0) + sign
            if not out[mu]:
                del out[mu]
            return
        for j in range(ell):
            if used & (1 << j):
                continue
            entry = lam[i] - (i + 1) + (j + 1)
            if entry < 0:
                continue
            rec(i + 1, used | (1 << j), sign if _perm_step_even(used, j) else -sign,
                rows + [entry])

    def _perm_step_even(used, j):
        inversions = bin(used >> (j + 1)).count("1")
        return inversions % 2 == 0

    rec(0, 0, 1, [])
    return out


def expand_in_m(basis: str, lam: Partition) -> dict[Partition, Fraction]:
    """Expansion of basis_lam in the monomial basis (cached)."""
    lam = Partition(lam)
    key = (basis, lam)
    cached = _TO_M_CACHE.get(key)
    if cached is not None:
        return cached
    if basis == "m":
        result = {lam: Fraction(1)}
    elif basis == "s":
        result = {}
        for mu, c in _jacobi_trudi_in_h(lam).items():
            for nu, d in expand_in_m("h", mu).items():
                s = result.get(nu, _ZERO) + c * d
                if s:
                    result[nu] = s
                else:
                    result.pop(nu, None)
    else:
        n = lam.size
        nvars = max(n, 1)
        poly = {(0,) * nvars: 1}
        for part in lam:
            poly = _nvar_mul(poly, _nvar_single(basis, part, nvars))
        result = _collect_m(poly, nvars)
    _TO_M_CACHE[key] = result
    return result


def _invert_matrix(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _from_m_matrix(basis: str, degree: int):
    """Partitions of `degree` and the matrix taking m-coefficients to basis
    coefficients (the inverse transpose of the expansion matrix)."""
    key = (basis, degree)
    cached = _FROM_M_CACHE.get(key)
    if cached is not None:
        return cached
    parts = partitions_of(degree)
    index = {p: i for i, p in enumerate(parts)}
    n = len(parts)
    bt = [[_ZERO] * n for _ in range(n)]
    for r, lam in enumerate(parts):
        for mu, c in expand_in_m(basis, lam).items():
            bt[index[mu]][r] = c
    result = (parts, _invert_matrix(bt))
    _FROM_M_CACHE[key] = result
    return result


def p_expansion_of_e(k: int) -> dict[Partition, Fraction]:
    """e_k in the power-sum basis (cached); used by the operator oracle."""
    cached = _P_OF_E_CACHE.get(k)
    if cached is None:
        f = SymFunc.basis_element("e", Partition([k] if k else []), max(k, 1))
        cached = {lam: rf.num.terms[(0, 0)] for lam, rf in f.to_basis("p").coeffs.items()}
        _P_OF_E_CACHE[k] = cached
    return cached


def _merge(lam: Partition, mu: Partition) -> Partition:
    return Partition(sorted(tuple(lam) + tuple(mu), reverse=True))


def _coerce_rf(value) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    return RatFunc(value)


class SymFunc:
    """A symmetric function truncated above a fixed degree cap."""

    __slots__ = ("basis", "cap", "coeffs")

    def __init__(self, basis: str, cap: int, coeffs=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        if cap < 0:
            raise ValueError("degree cap must be nonnegative")
        self.basis = basis
        self.cap = cap
        clean: dict[Partition, RatFunc] = {}
        if coeffs:
            for lam, value in coeffs.items():
                lam = Partition(lam)
                if lam.size > cap:
                    continue
                rf = _coerce_rf(value)
                if not rf.is_zero():
                    clean[lam] = rf
        self.coeffs = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(basis: str, cap: int) -> "SymFunc":
        return SymFunc(basis, cap)

    @staticmethod
    def one(basis: str, cap: int) -> "SymFunc":
        return SymFunc(basis, cap, {Partition(): RF_ONE})

    @staticmethod
    def basis_element(basis: str, lam, cap: int | None = None) -> "SymFunc":
        lam = Partition(lam)
        if cap is None:
            cap = lam.size
        return SymFunc(basis, cap, {lam: RF_ONE})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, lam) -> RatFunc:
        return self.coeffs.get(Partition(lam), RatFunc.zero())

    def support(self) -> list[Partition]:
        return sorted(self.coeffs, key=lambda p: (p.size, p))

    def with_cap(self, cap: int) -> "SymFunc":
        return SymFunc(self.basis, cap, self.coeffs)

    # -- linear structure -----------------------------------------------------

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.cap != other.cap:
            raise ValueError("degree caps differ")
        other = other.to_basis(self.basis)
        out = dict(self.coeffs)
        for lam, rf in other.coeffs.items():
            s = out.get(lam)
            out[lam] = rf if s is None else s + rf
        return SymFunc(self.basis, self.cap, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(-1)

    def scale(self, value) -> "SymFunc":
        rf = _coerce_rf(value)
        return SymFunc(self.basis, self.cap,
                       {lam: c * rf for lam, c in self.coeffs.items()})

    # -- basis changes ----------------------------------------------------

    def to_basis(self, target: str) -> "SymFunc":
        if target not in BASES:
            raise ValueError(f"unknown basis {target!r}")
        if target == self.basis:
            return self
        if self.basis == "m":
            m = self
        else:
            acc: dict[Partition, RatFunc] = {}
            for lam, rf in self.coeffs.items():
                for mu, c in expand_in_m(self.basis, lam).items():
                    term = rf * c
                    s = acc.get(mu)
                    acc[mu] = term if s is None else s + term
            m = SymFunc("m", self.cap, acc)
        if target == "m":
            return m
        by_degree: dict[int, dict[Partition, RatFunc]] = {}
        for lam, rf in m.coeffs.items():
            by_degree.setdefault(lam.size, {})[lam] = rf
        out: dict[Partition, RatFunc] = {}
        for degree, bucket in by_degree.items():
            parts, matrix = _from_m_matrix(target, degree)
            vec = [bucket.get(p, RatFunc.zero()) for p in parts]
            for r, lam in enumerate(parts):
                total = RatFunc.zero()
                for c, rf in zip(matrix[r], vec):
                    if c and not rf.is_zero():
                        total = total + rf * c
                if not total.is_zero():
                    out[lam] = total
        return SymFunc(target, self.cap, out)

    # -- multiplicative structure --------------------------------------------

    def mul(self, other: "SymFunc") -> "SymFunc":
        if self.cap != other.cap:
            raise ValueError("degree caps differ")
        if self.basis == other.basis and self.basis in ("e", "h", "p"):
            out: dict[Partition, RatFunc] = {}
            for lam, a in self.coeffs.items():
                for mu, b in other.coeffs.items():
                    nu = _merge(lam, mu)
                    if nu.size > self.cap:
                        continue
                    term = a * b
                    s = out.get(nu)
                    out[nu] = term if s is None else s + term
            return SymFunc(self.basis, self.cap, out)
        fp = self.to_basis("p")
        gp = other.to_basis("p")
        out: dict[Partition, RatFunc] = {}
        for lam, a in fp.coeffs.items():
            for mu, b in gp.coeffs.items():
                nu = _merge(lam, mu)
                if nu.size > self.cap:
                    continue
                term = a * b
                s = out.get(nu)
                out[nu] = term if s is None else s + term
        return SymFunc("p", self.cap, out).to_basis(self.basis)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return self.mul(other)
        return self.scale(other)

    __rmul__ = __mul__

    # -- plethystic operations ------------------------------------------------

    def plethysm_scale(self, c: Callable[[int], RatFunc]) -> "SymFunc":
        """Apply the substitution p_k -> c(k) * p_k and convert back.

        Covers every alphabet transformation used here: X -> (q-1)X via
        c(k) = q^k - 1, X -> X/(1-q) via c(k) = 1/(1-q^k), X -> -X via
        c(k) = -1.
        """
        fp = self.to_basis("p")
        cache: dict[int, RatFunc] = {}
        out: dict[Partition, RatFunc] = {}
        for lam, rf in fp.coeffs.items():
            for k in lam:
                if k not in cache:
                    cache[k] = _coerce_rf(c(k))
            total = rf
            for k in lam:
                total = total * cache[k]
            if not total.is_zero():
                out[lam] = total
        return SymFunc("p", self.cap, out).to_basis(self.basis)

    def eval_at_minus_one(self) -> RatFunc:
        """Plethystic evaluation at the alphabet -1, i.e. p_k -> -1."""
        fp = self.to_basis("p")
        total = RatFunc.zero()
        for lam, rf in fp.coeffs.items():
            total = total + rf * ((-1) ** len(lam))
        return total

    def omega(self) -> "SymFunc":
        """The involution p_k -> (-1)^(k-1) p_k, sending h to e."""
        fp = self.to_basis("p")
        out = {lam: rf * ((-1) ** (lam.size - len(lam)))
               for lam, rf in fp.coeffs.items()}
        return SymFunc("p", self.cap, out).to_basis(self.basis)

    # -- comparison and serialization ----------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.cap != other.cap:
            return False
        other = other.to_basis(self.basis)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coeff(k) == other.coeff(k) for k in keys)

    __hash__ = None

    def to_json_dict(self) -> dict:
        terms = []
        for lam in self.support():
            rf = self.coeffs[lam]
            terms.append({
                "partition": list(lam),
                "coeff": {"num": str(rf.num), "den": str(rf.den)},
            })
        return {"basis": self.basis, "degree": self.cap, "terms": terms}

    def __repr__(self):
        body = " + ".join(f"({rf})*{self.basis}{tuple(lam)}"
                          for lam, rf in sorted(self.coeffs.items(),
                                                key=lambda kv: (kv[0].size, kv[0])))
        return body or "0"
