"""Tableau-weight formulas for the chromatic expansions.

The central object is the weight of adding a cell x to a shape lam in the
presence of the strip w of recently added cells:

    weight(lam, w, x) = prod over row cells    (q^a - t^(l+1)) / (q^(a+1) - t^(l+1))
                      * prod over column cells (q^(a+1) - t^l) / (q^(a+1) - t^(l+1))
                      * prod over strip cells  (x - t w_i) / (x - q t w_i)

with cells read as monomials q^col t^row.  Multiplying these weights along
the labels of a tableau and summing over tableaux yields the coefficients
of the modified Macdonald expansion; the t=1 and t=0 closed forms below
never specialize the generic weight (individual factors have poles there)
but follow their own telescoped formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exact import (BiPoly, FactoredRatio, RatFunc, q_fact, q_int,
                    sum_factored)
from .interval import Hessenberg
from .macdonald import pieri_weight_factored
from .partitions import Cell, Partition, addable_cells, partitions_of
from .symfunc import SymFunc
from .tableaux import (StripSequence, StripTableau, columns,
                       enumerate_strip_tableaux, has_column_support, hl_stats,
                       strip_sequence)


# -- generic (q, t) weights -------------------------------------------------


def cell_weight_factored(lam: Partition, w: StripSequence, x: Cell) -> FactoredRatio:
    fr = pieri_weight_factored(Partition(lam), x)
    for wi in w:
        fr.mul_poly(BiPoly.monomial(1, x.col, x.row)
                    - BiPoly.monomial(1, wi.col, wi.row + 1))
        fr.mul_poly(BiPoly.monomial(1, x.col, x.row)
                    - BiPoly.monomial(1, wi.col + 1, wi.row + 1), -1)
    return fr


def cell_weight(lam, w, x: Cell) -> RatFunc:
    """The (q, t) weight for adding x to lam next to the strip w.

    A degenerate configuration where x sits directly above a strip cell
    kills a numerator factor and gives 0; only non-addable x is an error.
    """
    if not isinstance(w, StripSequence):
        w = StripSequence(w)
    return cell_weight_factored(Partition(lam), w, x).to_ratfunc()


def tableau_weight_factored(T: StripTableau, e: Hessenberg) -> FactoredRatio:
    fr = FactoredRatio.one()
    for i in range(1, T.n + 1):
        step = cell_weight_factored(T.prefix_shape(i - 1),
                                    strip_sequence(T, e, i), T.cell_of(i))
        fr = fr.times(step)
        if fr.is_zero:
            break
    return fr


def tableau_weight(T: StripTableau, e: Hessenberg) -> RatFunc:
    """Product of the cell weights along the labels of T."""
    return tableau_weight_factored(T, e).to_ratfunc()


def macdonald_terms_factored(e: Hessenberg, mu) -> list[FactoredRatio]:
    """Per-tableau factored summands of the Macdonald coefficient,
    including the global q power."""
    mu = Partition(mu)
    if mu.size != e.n:
        raise ValueError(f"{tuple(mu)} is not a partition of n={e.n}")
    shift = comb(e.n, 2) - sum(e)
    out = []
    for T in enumerate_strip_tableaux(e, mu):
        fr = tableau_weight_factored(T, e)
        fr.qexp += shift
        out.append(fr)
    return out


def macdonald_coeff(e: Hessenberg, mu) -> RatFunc:
    """Coefficient of H-tilde(mu) in the operator series of e."""
    return sum_factored(macdonald_terms_factored(e, mu))


def macdonald_expansion(e: Hessenberg) -> dict[Partition, RatFunc]:
    out = {}
    for mu in partitions_of(e.n):
        rf = macdonald_coeff(e, mu)
        if not rf.is_zero():
            out[mu] = rf
    return out


# -- t = 1: segments, closed forms, Hikita form ---------------------------------


@dataclass(frozen=True)
class SegmentData:
    """Contiguous column segments of a strip, relative to a landing column r.

    wL/wR are the left and right endpoints of the maximal contiguous runs of
    strip columns; j_split counts the runs lying strictly left of column r
    (0 when r = 0); b counts the strip-free columns left of r.
    """

    wL: tuple[int, ...]
    wR: tuple[int, ...]
    j_split: int
    b: int


def segment_data(w: StripSequence, x: Cell) -> SegmentData | None:
    """Segments of w against x; None when the t=1 weight vanishes, which
    happens exactly when x does not extend a segment from the left
    (no run ends at column x.col - 1, with x.col > 0)."""
    cols = sorted(c.col for c in w)
    runs: list[list[int]] = []
    for c in cols:
        if runs and c == runs[-1][1] + 1:
            runs[-1][1] = c
        else:
            runs.append([c, c])
    r = x.col
    wL = tuple(run[0] for run in runs)
    wR = tuple(run[1] for run in runs)
    if r == 0:
        j = 0
    else:
        ends = [k for k, run in enumerate(runs) if run[1] == r - 1]
        if not ends:
            return None
        j = ends[0] + 1
    prev = [-1] + list(wR)
    b = sum(wL[i] - prev[i] - 1 for i in range(j))
    return SegmentData(wL, wR, j, b)


def _q1_products(seg: SegmentData, r: int) -> FactoredRatio:
    fr = FactoredRatio.one()
    for i in range(seg.j_split):
        fr.mul_poly(q_int(r - seg.wL[i]))
        prev = seg.wR[i - 1] if i else -1
        fr.mul_poly(q_int(r - prev - 1), -1)
    for i in range(seg.j_split, len(seg.wL)):
        fr.mul_poly(q_int(seg.wL[i] - r))
        fr.mul_poly(q_int(seg.wR[i] + 1 - r), -1)
    return fr


def cell_weight_q1_factored(w: StripSequence, x: Cell) -> FactoredRatio:
    seg = segment_data(w, x)
    if seg is None:
        return FactoredRatio.one().mul_scalar(0)
    fr = _q1_products(seg, x.col)
    fr.qexp += seg.b - x.col
    return fr


def cell_weight_q1(lam, w, x: Cell) -> RatFunc:
    """The t=1 value of cell_weight via the telescoped segment formula.

    lam only validates addability; the value depends on w and x alone.
    """
    if not isinstance(w, StripSequence):
        w = StripSequence(w)
    lam = Partition(lam)
    if x not in addable_cells(lam):
        raise ValueError(f"cell {tuple(x)} is not addable to {tuple(lam)}")
    return cell_weight_q1_factored(w, x).to_ratfunc()


def hat_cell_weight_factored(w: StripSequence, x: Cell) -> FactoredRatio:
    """Hikita's rescaled weight: drop the q^(-r) and keep q^b."""
    seg = segment_data(w, x)
    if seg is None:
        return FactoredRatio.one().mul_scalar(0)
    fr = _q1_products(seg, x.col)
    fr.qexp += seg.b
    return fr


def tableau_weight_q1_factored(T: StripTableau, e: Hessenberg) -> FactoredRatio:
    fr = FactoredRatio.one()
    for i in range(1, T.n + 1):
        fr = fr.times(cell_weight_q1_factored(strip_sequence(T, e, i), T.cell_of(i)))
        if fr.is_zero:
            break
    return fr


@dataclass(frozen=True)
class EExpansion:
    """Elementary-basis expansion with its per-tableau breakdown.

    coefficients[lam] is a polynomial in q; tableau_terms[lam] are the exact
    per-tableau rational summands, which sum to it.
    """

    n: int
    coefficients: dict[Partition, BiPoly]
    tableau_terms: dict[Partition, tuple[RatFunc, ...]]
    tableaux: dict[Partition, tuple[StripTableau, ...]]


def _pair_product_factored(T: StripTableau, e: Hessenberg) -> FactoredRatio:
    cols = columns(T)
    fr = FactoredRatio.one()
    for j in range(1, T.n + 1):
        for i in e.predecessors(j):
            ci, cj = cols[i], cols[j]
            if cj == ci + 1:
                continue
            fr.mul_poly(BiPoly.q(cj) - BiPoly.q(ci))
            fr.mul_poly(BiPoly.q(cj) - BiPoly.q(ci + 1), -1)
    return fr


def e_expansion(e: Hessenberg) -> EExpansion:
    """Expansion into e_lam with positive q=1 specialization.

    Coefficient of e_lam:
        q^(C(n,2) - n - |e|) * q^len(lam) * prod [lam_i]_q
          * sum over supported tableaux of
            prod over edges (i,j) with col(j) != col(i)+1 of
            (q^col(j) - q^col(i)) / (q^col(j) - q^col(i)+1 exponent).

    Raises if a summed coefficient fails to be a polynomial, which would
    indicate a bug rather than bad input.
    """
    n = e.n
    shift = comb(n, 2) - n - sum(e)
    coefficients: dict[Partition, BiPoly] = {}
    tableau_terms: dict[Partition, tuple[RatFunc, ...]] = {}
    tableaux: dict[Partition, tuple[StripTableau, ...]] = {}
    for lam in partitions_of(n):
        tabs = [T for T in enumerate_strip_tableaux(e, lam)
                if has_column_support(T, e)]
        if not tabs:
            continue
        base = FactoredRatio.one()
        base.qexp = shift + len(lam)
        for part in lam:
            base.mul_poly(q_int(part))
        summands = [base.times(_pair_product_factored(T, e)) for T in tabs]
        total = sum_factored(summands)
        coefficients[lam] = total.as_polynomial()
        tableau_terms[lam] = tuple(s.to_ratfunc() for s in summands)
        tableaux[lam] = tuple(tabs)
    return EExpansion(n, coefficients, tableau_terms, tableaux)


def e_expansion_q1(e: Hessenberg) -> dict[Partition, list[Fraction]]:
    """Per-tableau positive rational summands of the q=1 expansion."""
    out: dict[Partition, list[Fraction]] = {}
    for lam in partitions_of(e.n):
        terms = []
        for T in enumerate_strip_tableaux(e, lam):
            if not has_column_support(T, e):
                continue
            cols = columns(T)
            weight = Fraction(1)
            for part in lam:
                weight *= part
            for j in range(1, e.n + 1):
                for i in e.predecessors(j):
                    diff = cols[j] - cols[i]
                    if diff == 1:
                        continue
                    weight *= Fraction(abs(diff), abs(diff - 1))
            terms.append(weight)
        if terms:
            out[lam] = terms
    return out


@dataclass(frozen=True)
class HikitaCoeff:
    """e_lam coefficient in Hikita's normal form.

    value = prefactor * sum of the hat weights; the prefactor is
    q^(sum_{i<j} lam_i lam_j - |e|) * prod [lam_i]_q!.
    """

    value: RatFunc
    prefactor: RatFunc
    hat_terms: tuple[tuple[StripTableau, RatFunc], ...]


def hikita_coeff(e: Hessenberg, lam) -> HikitaCoeff:
    lam = Partition(lam)
    if lam.size != e.n:
        raise ValueError(f"{tuple(lam)} is not a partition of n={e.n}")
    exponent = sum(lam[i] * lam[j]
                   for i in range(len(lam)) for j in range(i + 1, len(lam)))
    exponent -= sum(e)
    pre = RatFunc.q_power(exponent)
    for part in lam:
        pre = pre * RatFunc(q_fact(part))
    terms = []
    summands = []
    for T in enumerate_strip_tableaux(e, lam):
        if not has_column_support(T, e):
            continue
        fr = FactoredRatio.one()
        for i in range(1, e.n + 1):
            fr = fr.times(hat_cell_weight_factored(strip_sequence(T, e, i),
                                                   T.cell_of(i)))
        summands.append(fr)
        terms.append((T, fr.to_ratfunc()))
    value = pre * sum_factored(summands) if summands else RatFunc.zero()
    return HikitaCoeff(value, pre, tuple(terms))


# -- t = 0: Hall-Littlewood side -----------------------------------------------


def cell_weight_t0(lam, w, x: Cell) -> RatFunc:
    """The t=0 value of cell_weight.

    Bottom row: q^(-col).  Higher rows: q^(-col-m) (q^d - 1)/q^d * heart,
    where m counts strip cells at least two rows down, d is the length
    difference between the two rows under and at x, and heart collects the
    strip cells exactly one row down.
    """
    if not isinstance(w, StripSequence):
        w = StripSequence(w)
    lam = Partition(lam)
    if x not in addable_cells(lam):
        raise ValueError(f"cell {tuple(x)} is not addable to {tuple(lam)}")
    r, s = x.col, x.row
    if s == 0:
        return RatFunc.q_power(-r)
    m = sum(1 for wi in w if wi.row <= s - 2)
    d = lam[s - 1] - (lam[s] if s < len(lam) else 0)
    fr = FactoredRatio.one()
    fr.qexp = -r - m - d
    fr.mul_poly(BiPoly.q(d) - BiPoly.one())
    for wi in w:
        if wi.row == s - 1:
            _mul_q_power_minus_one(fr, wi.col - r, 1)
            _mul_q_power_minus_one(fr, wi.col - r + 1, -1)
    return fr.to_ratfunc()


def _mul_q_power_minus_one(fr: FactoredRatio, a: int, exp: int):
    # multiply fr by (q^a - 1)^exp for any integer a, using
    # q^a - 1 = -q^a (q^(-a) - 1) when a < 0
    if a >= 0:
        fr.mul_poly(BiPoly.q(a) - BiPoly.one(), exp)
    else:
        fr.mul_scalar(Fraction((-1) ** (exp % 2)))
        fr.qexp += a * exp
        fr.mul_poly(BiPoly.q(-a) - BiPoly.one(), exp)


@dataclass(frozen=True)
class HallLittlewoodExpansion:
    """Coefficients against the reversed Hall-Littlewood basis.

    coefficients[lam] multiplies Q_{lam'}[X; 1/q] in the expansion of the
    chromatic symmetric function.
    """

    n: int
    coefficients: dict[Partition, RatFunc]
    tableau_terms: dict[Partition, tuple[RatFunc, ...]]
    tableaux: dict[Partition, tuple[StripTableau, ...]]


def hl_expansion(e: Hessenberg) -> HallLittlewoodExpansion:
    """Hall-Littlewood expansion from the m/d/L tableau statistics.

    Coefficient of Q_{lam'}[X; 1/q]:
        q^(C(n+1,2) - |e|) / (q-1)^(lam_1)
          * sum over tableaux of prod over labels i above the bottom row of
            q^(-m-d) * ( [L - r]_q  if the strip reaches the row below i
                         [d]_q      otherwise ).
    """
    n = e.n
    coefficients: dict[Partition, RatFunc] = {}
    tableau_terms: dict[Partition, tuple[RatFunc, ...]] = {}
    tableaux: dict[Partition, tuple[StripTableau, ...]] = {}
    for lam in partitions_of(n):
        tabs = enumerate_strip_tableaux(e, lam)
        if not tabs:
            continue
        summands = []
        for T in tabs:
            fr = FactoredRatio.one()
            for i in range(1, n + 1):
                s = T.row_of(i)
                if s == 0:
                    continue
                m, d, L = hl_stats(T, e, i)
                fr.qexp -= m + d
                if L is None:
                    fr.mul_poly(q_int(d))
                else:
                    fr.mul_poly(q_int(L - T.column_of(i)))
            summands.append(fr)
        pre = FactoredRatio.one()
        pre.qexp = comb(n + 1, 2) - sum(e)
        pre.mul_poly(BiPoly.q() - BiPoly.one(), -lam[0])
        total = sum_factored([pre.times(s) for s in summands])
        if total.is_zero():
            continue
        coefficients[lam] = total
        tableau_terms[lam] = tuple(s.to_ratfunc() for s in summands)
        tableaux[lam] = tuple(tabs)
    return HallLittlewoodExpansion(n, coefficients, tableau_terms, tableaux)


# -- admissible colorings -----------------------------------------------------


def coloring_weight(e: Hessenberg, colors: tuple[int, ...]) -> Fraction:
    """prod over edges with col(j) != col(i)+1 of |k_j - k_i| / |k_j - k_i - 1|."""
    weight = Fraction(1)
    for i, j in sorted(e.edges()):
        diff = colors[j - 1] - colors[i - 1]
        if diff == 1:
            continue
        weight *= Fraction(abs(diff), abs(diff - 1))
    return weight


def admissible_colorings(e: Hessenberg, color_counts) -> list[tuple[tuple[int, ...], Fraction]]:
    """Proper colorings with the given color multiplicities such that every
    vertex of color c > 1 has a smaller neighbour of color c - 1, paired
    with their rational weights.  These are in bijection with the supported
    tableaux via color = column + 1."""
    counts = Partition(color_counts)
    if counts.size != e.n:
        raise ValueError(f"{tuple(counts)} is not a partition of n={e.n}")
    n = e.n
    remaining = list(counts)
    colors = [0] * (n + 1)
    out: list[tuple[tuple[int, ...], Fraction]] = []

    def rec(v: int):
        if v > n:
            final = tuple(colors[1:])
            out.append((final, coloring_weight(e, final)))
            return
        nbrs = list(e.predecessors(v))
        for c in range(1, len(remaining) + 1):
            if not remaining[c - 1]:
                continue
            if any(colors[j] == c for j in nbrs):
                continue
            if c > 1 and not any(colors[j] == c - 1 for j in nbrs):
                continue
            remaining[c - 1] -= 1
            colors[v] = c
            rec(v + 1)
            remaining[c - 1] += 1
            colors[v] = 0

    rec(1)
    return out


def chi_from_e_expansion(exp: EExpansion) -> SymFunc:
    """Assemble the chromatic function in the m basis from an e expansion."""
    total = SymFunc.zero("m", exp.n)
    for lam, poly in exp.coefficients.items():
        term = SymFunc.basis_element("e", lam, exp.n).to_basis("m").scale(RatFunc(poly))
        total = total + term
    return total
