"""Exact arithmetic for polynomials and rational functions in q and t.

Every coefficient in the library lives here: ``BiPoly`` is a sparse
polynomial in q and t with ``Fraction`` coefficients, ``RatFunc`` a quotient
of two of them.  No floating point is used anywhere.

Design notes:

* Rational functions are stored unreduced apart from cheap normalisations
  (common monomial factors, rational content, identical numerator and
  denominator).  Equality is decided by exact cross-multiplication, which is
  correct regardless of how far a value happens to be reduced.
* ``FactoredRatio`` keeps products in factored form.  The tableau weights
  downstream are large products of binomials with massive structured
  cancellation; keeping factors unexpanded (and cancelling equal ones by
  key) is what stops denominators from blowing up.
* Identity checks in (q, t) sample grids of distinct primes.  Two distinct
  primes never make a two-term polynomial c1*q^a*t^b - c2*q^c*t^d vanish,
  and agreement on a grid exceeding the degree bound in each variable
  proves polynomial equality outright.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

#: Default seed for the sample-point protocol; the CLI exposes it as --seed.
DEFAULT_SEED = 8675309

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected an integer or Fraction coefficient, got {type(c).__name__}")


class BiPoly:
    """Sparse polynomial in q and t over the rationals.

    Terms map exponent pairs (deg_q, deg_t) to nonzero Fraction
    coefficients; the representation is canonical, so dict equality is
    polynomial equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (a, b), c in terms.items():
                c = _as_fraction(c)
                if c:
                    if a < 0 or b < 0:
                        raise ValueError("negative exponents are not allowed in BiPoly")
                    clean[(a, b)] = c
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def one() -> "BiPoly":
        return BiPoly({(0, 0): 1})

    @staticmethod
    def const(c) -> "BiPoly":
        return BiPoly({(0, 0): _as_fraction(c)})

    @staticmethod
    def q(exp: int = 1) -> "BiPoly":
        return BiPoly({(exp, 0): 1})

    @staticmethod
    def t(exp: int = 1) -> "BiPoly":
        return BiPoly({(0, exp): 1})

    @staticmethod
    def monomial(c, a: int, b: int) -> "BiPoly":
        return BiPoly({(a, b): c})

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0, 0): _ONE}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def deg_q(self) -> int:
        return max((a for a, _ in self.terms), default=0)

    def deg_t(self) -> int:
        return max((b for _, b in self.terms), default=0)

    def key(self):
        """Hashable canonical form, usable as a dict key."""
        return tuple(sorted(self.terms.items()))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, _ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = BiPoly.__new__(BiPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = BiPoly.__new__(BiPoly)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return BiPoly.zero()
            res = BiPoly.__new__(BiPoly)
            res.terms = {k: v * c for k, v in self.terms.items()}
            return res
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                s = out.get(k, _ZERO) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        res = BiPoly.__new__(BiPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers need RatFunc")
        out = BiPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    # -- substitution and evaluation --------------------------------------

    def eval(self, q0, t0) -> Fraction:
        q0 = _as_fraction(q0)
        t0 = _as_fraction(t0)
        qp, tp = {}, {}
        total = _ZERO
        for (a, b), c in self.terms.items():
            if a not in qp:
                qp[a] = q0 ** a
            if b not in tp:
                tp[b] = t0 ** b
            total += c * qp[a] * tp[b]
        return total

    def subs_t(self, t0) -> "BiPoly":
        """Substitute a rational value for t, leaving a polynomial in q."""
        t0 = _as_fraction(t0)
        out = {}
        tp = {}
        for (a, b), c in self.terms.items():
            if b not in tp:
                tp[b] = t0 ** b
            k = (a, 0)
            s = out.get(k, _ZERO) + c * tp[b]
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = BiPoly.__new__(BiPoly)
        res.terms = out
        return res

    def subs_q(self, q0) -> "BiPoly":
        """Substitute a rational value for q, leaving a polynomial in t."""
        q0 = _as_fraction(q0)
        out = {}
        qp = {}
        for (a, b), c in self.terms.items():
            if a not in qp:
                qp[a] = q0 ** a
            k = (0, b)
            s = out.get(k, _ZERO) + c * qp[a]
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = BiPoly.__new__(BiPoly)
        res.terms = out
        return res

    def swap_qt(self) -> "BiPoly":
        res = BiPoly.__new__(BiPoly)
        res.terms = {(b, a): c for (a, b), c in self.terms.items()}
        return res

    def shift(self, dq: int, dt: int) -> "BiPoly":
        """Multiply by the monomial q^dq * t^dt (dq, dt >= 0)."""
        res = BiPoly.__new__(BiPoly)
        res.terms = {(a + dq, b + dt): c for (a, b), c in self.terms.items()}
        return res

    # -- structure ---------------------------------------------------------

    def content_split(self):
        """Split into scalar * q^a * t^b * primitive.

        Returns (content, qmin, tmin, primitive) where primitive has
        coprime integer coefficients, no common monomial factor, and a
        positive leading coefficient in lex (q, then t) order.
        """
        if not self.terms:
            return _ZERO, 0, 0, BiPoly.zero()
        qmin = min(a for a, _ in self.terms)
        tmin = min(b for _, b in self.terms)
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        content = Fraction(num_gcd, den_lcm)
        lead = max(self.terms)
        if self.terms[lead] < 0:
            content = -content
        prim = BiPoly.__new__(BiPoly)
        prim.terms = {(a - qmin, b - tmin): c / content for (a, b), c in self.terms.items()}
        return content, qmin, tmin, prim

    def divide_exact(self, divisor: "BiPoly"):
        """Exact division; returns the quotient, or None when it fails.

        Single-divisor multivariate division in lex (q, t) order.  For one
        divisor the remainder is zero exactly when the divisor divides, so
        a failed leading-term division proves indivisibility.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return BiPoly.zero()
        dlead = max(divisor.terms)
        dcoef = divisor.terms[dlead]
        rest = [(k, c) for k, c in divisor.terms.items() if k != dlead]
        rem = dict(self.terms)
        quot = {}
        while rem:
            m = max(rem)
            da, db = m[0] - dlead[0], m[1] - dlead[1]
            if da < 0 or db < 0:
                return None
            c = rem.pop(m) / dcoef
            quot[(da, db)] = quot.get((da, db), _ZERO) + c
            for (a, b), dc in rest:
                k = (a + da, b + db)
                s = rem.get(k, _ZERO) - c * dc
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        res = BiPoly.__new__(BiPoly)
        res.terms = {k: c for k, c in quot.items() if c}
        return res

    # -- printing ----------------------------------------------------------

    def __str__(self):
        """Canonical string: terms sorted by (deg_q desc, deg_t desc)."""
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, reverse=True):
            c = self.terms[(a, b)]
            mono = []
            if a:
                mono.append("q" if a == 1 else f"q^{a}")
            if b:
                mono.append("t" if b == 1 else f"t^{b}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(mono)
            else:
                body = "*".join([str(abs(c))] + mono)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self):
        return f"BiPoly({self})"


#: Shared constants.
ZERO = BiPoly.zero()
ONE = BiPoly.one()
Q = BiPoly.q()
T = BiPoly.t()


def _coerce_poly(x):
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return BiPoly.const(x)
    return None


class RatFunc:
    """Quotient of two BiPoly values, kept mostly unreduced.

    Equality is exact cross-multiplication: a/b == c/d iff a*d == c*b.
    Construction cancels common monomial factors and rational content and
    collapses an identical numerator and denominator, nothing more.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if num is None or den is None:
            raise TypeError("RatFunc needs BiPoly, int or Fraction arguments")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in RatFunc")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        ncont, nq, nt, nprim = num.content_split()
        dcont, dq, dt, dprim = den.content_split()
        qshift = min(nq, dq)
        tshift = min(nt, dt)
        scal = ncont / dcont
        if nprim.terms == dprim.terms and (nq, nt) == (dq, dt):
            self.num, self.den = BiPoly.const(scal), ONE
            return
        self.num = (nprim * scal).shift(nq - qshift, nt - tshift)
        self.den = dprim.shift(dq - qshift, dt - tshift)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "RatFunc":
        return RatFunc(ZERO)

    @staticmethod
    def one() -> "RatFunc":
        return RatFunc(ONE)

    @staticmethod
    def q_power(exp: int) -> "RatFunc":
        """q^exp for any integer exp, negative exponents included."""
        if exp >= 0:
            return RatFunc(BiPoly.q(exp))
        return RatFunc(ONE, BiPoly.q(-exp))

    # -- queries --------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        p = _coerce_poly(other)
        if p is None:
            return None
        return RatFunc(p)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den.terms == other.den.terms:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        res = RatFunc.__new__(RatFunc)
        res.num, res.den = -self.num, self.den
        return res

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den.terms == other.den.terms:
            return self.num.terms == other.num.terms
        return self.num * other.den == other.num * self.den

    __hash__ = None

    # -- evaluation and substitution ----------------------------------------

    def eval(self, q0, t0) -> Fraction:
        d = self.den.eval(q0, t0)
        if not d:
            raise ZeroDivisionError(
                f"denominator {self.den} vanishes at q={q0}, t={t0}")
        return self.num.eval(q0, t0) / d

    def subs_t(self, t0) -> "RatFunc":
        d = self.den.subs_t(t0)
        if d.is_zero():
            raise ZeroDivisionError(
                f"denominator {self.den} vanishes identically at t={t0}")
        return RatFunc(self.num.subs_t(t0), d)

    def subs_q(self, q0) -> "RatFunc":
        d = self.den.subs_q(q0)
        if d.is_zero():
            raise ZeroDivisionError(
                f"denominator {self.den} vanishes identically at q={q0}")
        return RatFunc(self.num.subs_q(q0), d)

    def as_polynomial(self) -> BiPoly:
        """Exact quotient num/den; raises if the value is not polynomial."""
        if self.den.is_one():
            return self.num
        quot = self.num.divide_exact(self.den)
        if quot is None:
            raise ValueError(f"({self.num})/({self.den}) is not a polynomial")
        return quot

    def reduced(self) -> "RatFunc":
        """Cancel a univariate gcd when both parts involve one variable only.

        A no-op for genuinely bivariate quotients; correctness never depends
        on this being called.
        """
        num, den = self.num, self.den
        if num.is_zero() or den.is_one():
            return self
        if num.deg_t() == 0 and den.deg_t() == 0:
            axis = 0
        elif num.deg_q() == 0 and den.deg_q() == 0:
            axis = 1
        else:
            return self
        nl = _to_ulist(num, axis)
        dl = _to_ulist(den, axis)
        g = _ulist_gcd(nl, dl)
        if len(g) <= 1:
            return self
        nq, _ = _ulist_divmod(nl, g)
        dq, _ = _ulist_divmod(dl, g)
        return RatFunc(_from_ulist(nq, axis), _from_ulist(dq, axis))

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


RF_ZERO = RatFunc.zero()
RF_ONE = RatFunc.one()


# -- univariate helpers ------------------------------------------------------
#
# Coefficient lists, lowest degree first, over Fraction.  Used for the
# opportunistic gcd reduction above and for the t-slice protocol below.


def _to_ulist(p: BiPoly, axis: int):
    deg = p.deg_q() if axis == 0 else p.deg_t()
    out = [_ZERO] * (deg + 1)
    for (a, b), c in p.terms.items():
        out[a if axis == 0 else b] += c
    while out and not out[-1]:
        out.pop()
    return out

def _from_ulist(lst, axis: int) -> BiPoly:
    if axis == 0:
        return BiPoly({(i, 0): c for i, c in enumerate(lst) if c})
    return BiPoly({(0, i): c for i, c in enumerate(lst) if c})

def _ulist_divmod(a, b):
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    a = list(a)
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(a) >= len(b):
        c = a[-1] * inv
        d = len(a) - len(b)
        q[d] = c
        for i, bc in enumerate(b):
            a[d + i] -= c * bc
        while a and not a[-1]:
            a.pop()
        if not a:
            break
    return q, a

def _ulist_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _ulist_divmod(a, b)
        a, b = b, r
    if a:
        inv = 1 / a[-1]
        a = [c * inv for c in a]
    return a


def eval_after_t_reduction(f: RatFunc, q0, t0) -> Fraction:
    """Evaluate f at (q0, t0) after cancelling the t-gcd at fixed q = q0.

    Substituting q first leaves an honest univariate rational function in t
    which is reduced exactly before evaluating; this recovers values at
    points where the unreduced denominator happens to vanish (removable
    singularities like t = 1 in tableau weights).
    """
    num = _to_ulist(f.num.subs_q(q0), 1)
    den = _to_ulist(f.den.subs_q(q0), 1)
    g = _ulist_gcd(num, den)
    if len(g) > 1:
        num, _ = _ulist_divmod(num, g)
        den, _ = _ulist_divmod(den, g)
    t0 = _as_fraction(t0)
    dval = sum((c * t0 ** i for i, c in enumerate(den)), _ZERO)
    if not dval:
        raise ZeroDivisionError(f"pole survives reduction at q={q0}, t={t0}")
    nval = sum((c * t0 ** i for i, c in enumerate(num)), _ZERO)
    return nval / dval


# -- q-combinatorial primitives ---------------------------------------------


def q_int(n: int) -> BiPoly:
    """[n]_q = 1 + q + ... + q^(n-1), with [0]_q = 0."""
    if n < 0:
        raise ValueError("q_int needs a nonnegative argument")
    return BiPoly({(i, 0): 1 for i in range(n)})


def q_fact(n: int) -> BiPoly:
    """[n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1."""
    if n < 0:
        raise ValueError("q_fact needs a nonnegative argument")
    out = ONE
    for k in range(1, n + 1):
        out = out * q_int(k)
    return out


def pochhammer_qq_single(r: int) -> BiPoly:
    """(q;q)_r = (1-q)(1-q^2)...(1-q^r)."""
    if r < 0:
        raise ValueError("pochhammer needs a nonnegative argument")
    out = ONE
    for k in range(1, r + 1):
        out = out * (ONE - BiPoly.q(k))
    return out


def pochhammer_qq(mu) -> BiPoly:
    """(q;q)_mu = product of (q;q)_{mu_i} over the parts of mu."""
    out = ONE
    for part in mu:
        out = out * pochhammer_qq_single(part)
    return out


# -- factored products --------------------------------------------------------


class FactoredRatio:
    """A rational function as scalar * q^a * t^b * prod(factor^exp).

    Exponents may be negative; factors are primitive polynomials keyed by
    their canonical form, so equal factors on opposite sides cancel without
    any expansion.  ``sum_factored`` turns a list of these into a single
    RatFunc over the least common denominator and then trial-divides the
    surviving factors back out of the numerator.
    """

    __slots__ = ("coef", "qexp", "texp", "powers")

    def __init__(self):
        self.coef = _ONE
        self.qexp = 0
        self.texp = 0
        self.powers = {}

    @staticmethod
    def one() -> "FactoredRatio":
        return FactoredRatio()

    @property
    def is_zero(self) -> bool:
        return not self.coef

    def copy(self) -> "FactoredRatio":
        out = FactoredRatio()
        out.coef = self.coef
        out.qexp = self.qexp
        out.texp = self.texp
        out.powers = {k: [p, e] for k, (p, e) in self.powers.items()}
        return out

    def mul_scalar(self, c) -> "FactoredRatio":
        self.coef *= _as_fraction(c)
        return self

    def mul_poly(self, p: BiPoly, exp: int = 1) -> "FactoredRatio":
        """Multiply by p**exp in factored form."""
        if not self.coef or exp == 0:
            return self
        if p.is_zero():
            if exp < 0:
                raise ZeroDivisionError("zero factor with a negative exponent")
            self.coef = _ZERO
            self.powers = {}
            self.qexp = self.texp = 0
            return self
        content, qm, tm, prim = p.content_split()
        self.coef *= content ** exp
        self.qexp += qm * exp
        self.texp += tm * exp
        if not prim.is_one():
            key = prim.key()
            entry = self.powers.get(key)
            if entry is None:
                self.powers[key] = [prim, exp]
            else:
                entry[1] += exp
                if entry[1] == 0:
                    del self.powers[key]
        return self

    def times(self, other: "FactoredRatio") -> "FactoredRatio":
        out = self.copy()
        out.coef *= other.coef
        if not out.coef:
            out.powers = {}
            out.qexp = out.texp = 0
            return out
        out.qexp += other.qexp
        out.texp += other.texp
        for key, (p, e) in other.powers.items():
            entry = out.powers.get(key)
            if entry is None:
                out.powers[key] = [p, e]
            else:
                entry[1] += e
                if entry[1] == 0:
                    del out.powers[key]
        return out

    def deg_bounds(self):
        """((deg_q num, deg_t num), (deg_q den, deg_t den)) upper bounds."""
        nq = max(self.qexp, 0)
        nt = max(self.texp, 0)
        dq = max(-self.qexp, 0)
        dt = max(-self.texp, 0)
        for p, e in self.powers.values():
            if e > 0:
                nq += e * p.deg_q()
                nt += e * p.deg_t()
            else:
                dq += -e * p.deg_q()
                dt += -e * p.deg_t()
        return (nq, nt), (dq, dt)

    def eval(self, q0, t0) -> Fraction:
        q0 = _as_fraction(q0)
        t0 = _as_fraction(t0)
        out = self.coef
        if not out:
            return _ZERO
        out *= q0 ** self.qexp * t0 ** self.texp
        for p, e in self.powers.values():
            v = p.eval(q0, t0)
            if not v and e < 0:
                raise ZeroDivisionError(f"factor {p} vanishes at q={q0}, t={t0}")
            out *= v ** e
        return out

    def to_ratfunc(self) -> RatFunc:
        if not self.coef:
            return RatFunc.zero()
        num = BiPoly.const(self.coef)
        den = ONE
        if self.qexp > 0:
            num = num.shift(self.qexp, 0)
        elif self.qexp < 0:
            den = den.shift(-self.qexp, 0)
        if self.texp > 0:
            num = num.shift(0, self.texp)
        elif self.texp < 0:
            den = den.shift(0, -self.texp)
        for p, e in self.powers.values():
            if e > 0:
                num = num * p ** e
            else:
                den = den * p ** (-e)
        return RatFunc(num, den)

    def slice_t(self, t0) -> RatFunc:
        """Substitute t = t0 factor by factor, returning a reduced RatFunc in q."""
        if not self.coef:
            return RatFunc.zero()
        t0 = _as_fraction(t0)
        num = BiPoly.const(self.coef * t0 ** self.texp)
        den = ONE
        if self.qexp > 0:
            num = num.shift(self.qexp, 0)
        elif self.qexp < 0:
            den = den.shift(-self.qexp, 0)
        for p, e in self.powers.values():
            s = p.subs_t(t0)
            if s.is_zero():
                if e < 0:
                    raise ZeroDivisionError(f"factor {p} vanishes identically at t={t0}")
                return RatFunc.zero()
            if e > 0:
                num = num * s ** e
            else:
                den = den * s ** (-e)
        return RatFunc(num, den).reduced()

    def __repr__(self):
        return f"FactoredRatio({self.to_ratfunc()})"


def sum_factored(items) -> RatFunc:
    """Sum FactoredRatio values exactly over their least common denominator.

    After summation every surviving denominator factor is trial-divided out
    of the numerator, so structured cancellations across the summands are
    found without any polynomial gcd machinery.
    """
    items = [it for it in items if not it.is_zero]
    if not items:
        return RatFunc.zero()
    den_pow = {}
    den_polys = {}
    for it in items:
        for key, (p, e) in it.powers.items():
            if e < 0:
                den_polys[key] = p
                den_pow[key] = max(den_pow.get(key, 0), -e)
    qmin = min(0, min(it.qexp for it in items))
    tmin = min(0, min(it.texp for it in items))
    total = ZERO
    for it in items:
        part = BiPoly.monomial(it.coef, it.qexp - qmin, it.texp - tmin)
        for key, (p, e) in it.powers.items():
            need = e + den_pow.get(key, 0)
            if need:
                part = part * p ** need
        for key, d in den_pow.items():
            if key not in it.powers and d:
                part = part * den_polys[key] ** d
        total = total + part
    remaining = []
    for key, d in den_pow.items():
        p = den_polys[key]
        while d and not total.is_zero():
            quot = total.divide_exact(p)
            if quot is None:
                break
            total = quot
            d -= 1
        if d:
            remaining.append((p, d))
    den = BiPoly.monomial(1, -qmin, -tmin)
    for p, d in remaining:
        den = den * p ** d
    return RatFunc(total, den)


# -- seeded sample points ------------------------------------------------------


def _prime_stream():
    yield 2
    found = [2]
    n = 3
    while True:
        if all(n % p for p in found if p * p <= n):
            found.append(n)
            yield n
        n += 2


def seeded_primes(count: int, seed: int = DEFAULT_SEED, avoid=()):
    """A deterministic, seed-shuffled list of distinct primes >= 2.

    Sample points for identity checks all use coordinates from disjoint
    lists produced by this function, which keeps every binomial denominator
    away from zero.
    """
    if count <= 0:
        return []
    avoid = set(avoid)
    pool = []
    stream = _prime_stream()
    while len(pool) < 3 * count + 25:
        p = next(stream)
        if p not in avoid:
            pool.append(p)
    rng = random.Random(seed)
    rng.shuffle(pool)
    return sorted(pool[:count])
