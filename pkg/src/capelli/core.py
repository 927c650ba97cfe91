"""Exact commutative kernel: rational scalars, sparse polynomials, rational
functions of one variable, and determinants/permanents of matrices with
commuting entries.

Every coefficient in the library is a `fractions.Fraction`; there is no
floating point anywhere.  Polynomials are stored sparsely as a map from
dense exponent vectors to nonzero coefficients, over a fixed ordered
variable tuple.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


Scalar = Fraction


class DimensionError(ValueError):
    """Matrix input is not square (or sizes are inconsistent)."""


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at a pole."""


class ExactDivisionError(ArithmeticError):
    """A division that was promised to be exact left a remainder."""


class ConsistencyError(RuntimeError):
    """Two internal routes to the same value disagreed (bug trap)."""


def scal(x) -> Fraction:
    """Coerce an int/str/Fraction into an exact scalar."""
    return x if isinstance(x, Fraction) else Fraction(x)


def _exact_quot(a, b):
    """Exact quotient a/b in the entry ring (Fraction or SymPoly)."""
    if isinstance(a, SymPoly):
        return a.exact_div(b)
    return Fraction(a) / b


def det(rows):
    """Determinant of a square matrix of pairwise commuting ring elements.

    Cofactor expansion for size <= 4, fraction-free (Bareiss) elimination
    above; both give the standard alternating sum.
    """
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise DimensionError("det of a non-square matrix")
    if n == 0:
        return Fraction(1)
    if n <= 4:
        return _det_cofactor(rows)
    return _det_bareiss([list(r) for r in rows])


def _det_cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = None
    for j in range(n):
        piv = rows[0][j]
        if _is_zero_entry(piv):
            continue
        minor = [[rows[i][c] for c in range(n) if c != j] for i in range(1, n)]
        term = piv * _det_cofactor(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return _zero_like(rows[0][0])
    return acc


def _det_bareiss(m):
    n = len(m)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if _is_zero_entry(m[k][k]):
            for r in range(k + 1, n):
                if not _is_zero_entry(m[r][k]):
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return _zero_like(m[0][0])
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = _exact_quot(num, prev)
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result


def per(rows):
    """Permanent of a square matrix of commuting ring elements:
    sum over all permutations of the products of matched entries."""
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise DimensionError("per of a non-square matrix")
    if n == 0:
        return Fraction(1)
    acc = None
    for sigma in itertools.permutations(range(n)):
        term = rows[0][sigma[0]]
        for p in range(1, n):
            term = term * rows[p][sigma[p]]
        acc = term if acc is None else acc + term
    return acc


def _is_zero_entry(x):
    if isinstance(x, SymPoly):
        return x.is_zero()
    return x == 0


def _zero_like(x):
    if isinstance(x, SymPoly):
        return SymPoly.zero(x.vars)
    return Fraction(0)


class SymPoly:
    """Sparse commutative polynomial over exact scalars.

    `vars` is the ordered tuple of variable names; `terms` maps an exponent
    tuple (same length as `vars`) to a nonzero Fraction.  Instances are
    immutable; all operations return new objects.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        self.vars = tuple(vars)
        nv = len(self.vars)
        clean = {}
        for ev, c in terms.items():
            if len(ev) != nv:
                raise DimensionError("exponent vector length mismatch")
            c = scal(c)
            if c != 0:
                clean[tuple(ev)] = c
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def const(cls, vars, c):
        c = scal(c)
        if c == 0:
            return cls.zero(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def variable(cls, vars, name):
        vars = tuple(vars)
        ev = [0] * len(vars)
        ev[vars.index(name)] = 1
        return cls(vars, {tuple(ev): Fraction(1)})

    @classmethod
    def gens(cls, vars):
        return [cls.variable(vars, v) for v in vars]

    # -- ring structure --------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, SymPoly):
            if other.vars != self.vars:
                raise DimensionError("polynomials over different variable tuples")
            return other
        return SymPoly.const(self.vars, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for ev, c in other.terms.items():
            s = terms.get(ev, 0) + c
            if s == 0:
                terms.pop(ev, None)
            else:
                terms[ev] = s
        return SymPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly(self.vars, {ev: -c for ev, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            c = scal(other)
            if c == 0:
                return SymPoly.zero(self.vars)
            return SymPoly(self.vars, {ev: c * v for ev, v in self.terms.items()})
        if other.vars != self.vars:
            raise DimensionError("polynomials over different variable tuples")
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                ev = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(ev, 0) + c1 * c2
                if s == 0:
                    out.pop(ev, None)
                else:
                    out[ev] = s
        return SymPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = SymPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, SymPoly):
            return self.vars == other.vars and self.terms == other.terms
        return self.terms == SymPoly.const(self.vars, other).terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- queries ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in ev) for ev in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(ev) for ev in self.terms)

    def top_component(self):
        """Sum of the terms of maximal total degree."""
        d = self.total_degree()
        return SymPoly(self.vars, {ev: c for ev, c in self.terms.items() if sum(ev) == d})

    def coefficient(self, ev):
        return self.terms.get(tuple(ev), Fraction(0))

    def degree_in(self, name):
        i = self.vars.index(name)
        if not self.terms:
            return -1
        return max(ev[i] for ev in self.terms)

    # -- evaluation and division -----------------------------------------

    def evaluate(self, values):
        """Substitute values (scalars or polynomials over any ring with
        +,*) for all variables; unlisted variables must not occur."""
        missing = [v for i, v in enumerate(self.vars)
                   if v not in values and any(ev[i] for ev in self.terms)]
        if missing:
            raise ValueError(f"no value supplied for {missing}")
        acc = None
        for ev, c in self.terms.items():
            term = c
            for i, e in enumerate(ev):
                for _ in range(e):
                    term = term * values[self.vars[i]]
            acc = term if acc is None else acc + term
        return Fraction(0) if acc is None else acc

    def subs_partial(self, values):
        """Substitute scalars for a subset of the variables, keeping the
        variable tuple."""
        out = {}
        for ev, c in self.terms.items():
            nev = list(ev)
            for i, v in enumerate(self.vars):
                if v in values and ev[i]:
                    c = c * (scal(values[v]) ** ev[i])
                    nev[i] = 0
            key = tuple(nev)
            s = out.get(key, 0) + c
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        return SymPoly(self.vars, out)

    def _lead(self):
        ev = max(self.terms)  # lex order on exponent tuples
        return ev, self.terms[ev]

    def exact_div(self, divisor):
        """Exact quotient by `divisor`; raises ExactDivisionError if the
        division leaves a remainder."""
        if not isinstance(divisor, SymPoly):
            c = scal(divisor)
            if c == 0:
                raise ZeroDivisionError("division by zero polynomial")
            return self * (1 / c)
        if divisor.vars != self.vars:
            raise DimensionError("polynomials over different variable tuples")
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = self
        q = {}
        dev, dc = divisor._lead()
        while not rem.is_zero():
            rev, rc = rem._lead()
            qev = tuple(a - b for a, b in zip(rev, dev))
            if any(e < 0 for e in qev):
                raise ExactDivisionError("inexact polynomial division")
            qc = rc / dc
            q[qev] = q.get(qev, 0) + qc
            rem = rem - SymPoly(self.vars, {qev: qc}) * divisor
        return SymPoly(self.vars, q)

    # -- display ---------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for ev in sorted(self.terms, reverse=True):
            c = self.terms[ev]
            factors = [f"{v}^{e}" if e > 1 else v
                       for v, e in zip(self.vars, ev) if e]
            mono = "*".join(factors)
            if mono:
                parts.append(f"{c}*{mono}" if c != 1 else mono)
            else:
                parts.append(str(c))
        return " + ".join(parts).replace("+ -", "- ")


# -- univariate helpers and rational functions ---------------------------


def _to_dense(p: SymPoly):
    d = p.degree_in(p.vars[0]) if len(p.vars) == 1 else None
    if d is None:
        raise DimensionError("univariate polynomial expected")
    out = [Fraction(0)] * (d + 1) if d >= 0 else []
    for ev, c in p.terms.items():
        out[ev[0]] = c
    return out


def _from_dense(var, coeffs):
    return SymPoly((var,), {(i,): c for i, c in enumerate(coeffs) if c != 0})


def _dense_divmod(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        f = a[i] / lb
        q[i - db] = f
        if f:
            for j in range(db + 1):
                a[i - db + j] -= f * b[j]
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _dense_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _dense_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


class RatFun:
    """Rational function of one variable with exact coefficients.

    Normal form: gcd(numerator, denominator) = 1 and the denominator is
    monic, so equality is structural.
    """

    __slots__ = ("var", "num", "den")

    def __init__(self, num: SymPoly, den: SymPoly):
        if num.vars != den.vars or len(num.vars) != 1:
            raise DimensionError("RatFun needs matching one-variable polynomials")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        var = num.vars[0]
        dn, dd = _to_dense(num), _to_dense(den)
        g = _dense_gcd(dn, dd) if dn else []
        if len(g) > 1:
            dn, _ = _dense_divmod(dn, g)
            dd, _ = _dense_divmod(dd, g)
        lead = dd[-1]
        if lead != 1:
            dn = [c / lead for c in dn]
            dd = [c / lead for c in dd]
        self.var = var
        self.num = _from_dense(var, dn)
        self.den = _from_dense(var, dd)

    @classmethod
    def from_poly(cls, p: SymPoly):
        return cls(p, SymPoly.const(p.vars, 1))

    @classmethod
    def const(cls, var, c):
        one = SymPoly.const((var,), 1)
        return cls(SymPoly.const((var,), c), one)

    @classmethod
    def variable(cls, var):
        v = SymPoly.variable((var,), var)
        return cls(v, SymPoly.const((var,), 1))

    def _coerce(self, other):
        if isinstance(other, RatFun):
            if other.var != self.var:
                raise DimensionError("rational functions in different variables")
            return other
        if isinstance(other, SymPoly):
            return RatFun.from_poly(other)
        return RatFun.const(self.var, other)

    def __add__(self, other):
        other = self._coerce(other)
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def inverse(self):
        return 1 / self

    def __eq__(self, other):
        other = self._coerce(other)
        # already canonical, but cross-multiplication is the contract
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self):
        return self.num.is_zero()

    def __call__(self, u0):
        u0 = scal(u0)
        dv = self.den.evaluate({self.var: u0})
        if dv == 0:
            raise PoleError(f"pole at {self.var}={u0}")
        return self.num.evaluate({self.var: u0}) / dv

    def __repr__(self):
        if self.den == 1:
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"
