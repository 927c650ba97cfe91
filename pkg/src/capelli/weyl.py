"""Differential operators with polynomial coefficients on C^m (x) C^N.

Operators are kept in normal order (every multiplication operator to the
left of every differentiation) as a sparse map from exponent-vector pairs
to exact scalars.  The module also houses the invariant Cayley operators,
their determinant/permanent building blocks, highest-weight vectors in
the polynomial ring, and the images of the Lie algebra generators under
the natural and the dual (oscillator) actions.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .core import ConsistencyError, DimensionError, SymPoly, det, per, scal


def index_set(N):
    """-n..-1, 1..n for N=2n, with 0 inserted for N=2n+1."""
    n = N // 2
    mid = (0,) if N % 2 else ()
    return tuple(range(-n, 0)) + mid + tuple(range(1, n + 1))


def sgn(i):
    if i == 0:
        raise ValueError("sign of index 0")
    return 1 if i > 0 else -1


class WeylContext:
    """Variable grid x_{ai}, a = 1..m, i in the index set of size N."""

    _cache = {}

    def __new__(cls, m, N):
        key = (m, N)
        if key in cls._cache:
            return cls._cache[key]
        self = object.__new__(cls)
        self.m = m
        self.N = N
        self.indices = index_set(N)
        self._pos = {i: p for p, i in enumerate(self.indices)}
        self.nvars = m * N
        self.var_names = tuple(
            f"x{a}_{i}" for a in range(1, m + 1) for i in self.indices
        )
        self.zero_ev = (0,) * self.nvars
        cls._cache[key] = self
        return self

    def slot(self, a, i):
        if not 1 <= a <= self.m or i not in self._pos:
            raise DimensionError(f"variable x[{a},{i}] outside the {self.m}x{self.N} grid")
        return (a - 1) * self.N + self._pos[i]

    def unit_ev(self, a, i):
        ev = [0] * self.nvars
        ev[self.slot(a, i)] = 1
        return tuple(ev)

    def poly_ring_vars(self):
        return self.var_names

    def poly_x(self, a, i):
        return SymPoly.variable(self.var_names, f"x{a}_{i}")

    def __repr__(self):
        return f"WeylContext(m={self.m}, N={self.N})"


def _falling(g, k):
    out = 1
    for t in range(k):
        out *= g - t
    return out


class WeylOperator:
    """Normal-ordered differential operator Sum c * x^alpha d^beta."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: WeylContext, terms):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if v != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, {})

    @classmethod
    def scalar(cls, ctx, c):
        c = scal(c)
        return cls(ctx, {(ctx.zero_ev, ctx.zero_ev): c} if c else {})

    @classmethod
    def x(cls, ctx, a, i):
        return cls(ctx, {(ctx.unit_ev(a, i), ctx.zero_ev): Fraction(1)})

    @classmethod
    def d(cls, ctx, a, i):
        return cls(ctx, {(ctx.zero_ev, ctx.unit_ev(a, i)): Fraction(1)})

    @classmethod
    def from_polynomial(cls, ctx, p: SymPoly):
        if p.vars != ctx.var_names:
            raise DimensionError("polynomial over a different variable grid")
        return cls(ctx, {(ev, ctx.zero_ev): c for ev, c in p.terms.items()})

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, WeylOperator):
            if other.ctx is not self.ctx:
                raise DimensionError("operators over different contexts")
            return other
        return WeylOperator.scalar(self.ctx, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, 0) + c
            if s == 0:
                terms.pop(k, None)
            else:
                terms[k] = s
        return WeylOperator(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self):
        return WeylOperator(self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, WeylOperator):
            c = scal(other)
            if c == 0:
                return WeylOperator.zero(self.ctx)
            return WeylOperator(self.ctx, {k: c * v for k, v in self.terms.items()})
        if other.ctx is not self.ctx:
            raise DimensionError("operators over different contexts")
        out = {}
        nv = self.ctx.nvars
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                # commute d^b1 past x^a2: sum over contraction multi-indices
                hot = [t for t in range(nv) if b1[t] and a2[t]]
                ranges = [range(min(b1[t], a2[t]) + 1) for t in hot]
                for ks in itertools.product(*ranges):
                    coeff = c1 * c2
                    for t, k in zip(hot, ks):
                        coeff *= math.comb(b1[t], k) * _falling(a2[t], k)
                    if coeff == 0:
                        continue
                    aa = list(a1)
                    bb = list(b2)
                    for t in range(nv):
                        aa[t] += a2[t]
                        bb[t] += b1[t]
                    for t, k in zip(hot, ks):
                        aa[t] -= k
                        bb[t] -= k
                    key = (tuple(aa), tuple(bb))
                    s = out.get(key, 0) + coeff
                    if s == 0:
                        out.pop(key, None)
                    else:
                        out[key] = s
        return WeylOperator(self.ctx, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def filtration_degree(self):
        if not self.terms:
            return -1
        return max(sum(a) + sum(b) for a, b in self.terms)

    def bracket(self, other):
        return self * other - other * self

    # -- action ------------------------------------------------------------

    def apply(self, p: SymPoly) -> SymPoly:
        if p.vars != self.ctx.var_names:
            raise DimensionError("polynomial over a different variable grid")
        out = {}
        for (alpha, beta), c in self.terms.items():
            for ev, pc in p.terms.items():
                if any(b > e for b, e in zip(beta, ev)):
                    continue
                coeff = c * pc
                for b, e in zip(beta, ev):
                    if b:
                        coeff *= _falling(e, b)
                key = tuple(e - b + a for e, b, a in zip(ev, beta, alpha))
                s = out.get(key, 0) + coeff
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
        return SymPoly(self.ctx.var_names, out)

    # -- display -----------------------------------------------------------

    def _render_term(self, key):
        alpha, beta = key
        ctx = self.ctx
        parts = []
        for label, ev in (("x", alpha), ("d", beta)):
            for t, e in enumerate(ev):
                if e:
                    a, i = divmod(t, ctx.N)
                    name = f"{label}[{a + 1},{ctx.indices[i]}]"
                    parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms)[:8]
        body = " + ".join(f"({self.terms[k]})*{self._render_term(k)}" for k in keys)
        more = "" if len(self.terms) <= 8 else f" + ... ({len(self.terms)} terms)"
        return body + more


def first_difference(aop: WeylOperator, bop: WeylOperator):
    """Witness string for the first normal-ordered monomial on which the
    two operators disagree, or None if equal."""
    keys = sorted(set(aop.terms) | set(bop.terms))
    for k in keys:
        ca = aop.terms.get(k, Fraction(0))
        cb = bop.terms.get(k, Fraction(0))
        if ca != cb:
            return f"{aop._render_term(k)}: {ca} != {cb}"
    return None


def operators_agree_on_degree(aop: WeylOperator, bop: WeylOperator, d: int) -> bool:
    """Independent equality oracle: compare actions on every monomial of
    total degree <= d."""
    ctx = aop.ctx
    vs = ctx.var_names
    for deg in range(d + 1):
        for combo in itertools.combinations_with_replacement(range(ctx.nvars), deg):
            ev = [0] * ctx.nvars
            for t in combo:
                ev[t] += 1
            mono = SymPoly(vs, {tuple(ev): Fraction(1)})
            if not (aop.apply(mono) - bop.apply(mono)).is_zero():
                return False
    return True


# -- representation generators ---------------------------------------------


def gamma_gen(family: str, i, j, m: int, N: int) -> WeylOperator:
    """Image of a Lie algebra generator under the natural action on the
    polynomial ring: E_ij for gl, F_ij for so/sp."""
    ctx = WeylContext(m, N)
    op = WeylOperator.zero(ctx)
    for a in range(1, m + 1):
        op = op + WeylOperator.x(ctx, a, i) * WeylOperator.d(ctx, a, j)
        if family == "so":
            op = op - WeylOperator.x(ctx, a, -j) * WeylOperator.d(ctx, a, -i)
        elif family == "sp":
            op = op - sgn(i) * sgn(j) * WeylOperator.x(ctx, a, -j) * WeylOperator.d(ctx, a, -i)
        elif family != "gl":
            raise ValueError(f"unknown family {family!r}")
    return op


def dual_gamma_gen(dual_family: str, A: int, B: int, m: int, N: int) -> WeylOperator:
    """Image of the generator F'_{AB} of the commutant algebra (sp_{2m}
    when the inner group is orthogonal, so_{2m} when it is symplectic)
    acting on the same variable grid; A, B range over -m..-1, 1..m."""
    ctx = WeylContext(m, N)
    if A == 0 or B == 0 or not (abs(A) <= m and abs(B) <= m):
        raise DimensionError(f"dual generator F'[{A},{B}] out of range")
    if A < 0 and B < 0:
        return -dual_gamma_gen(dual_family, -B, -A, m, N)
    op = WeylOperator.zero(ctx)
    if dual_family == "sp":
        if A > 0 and B > 0:
            for i in index_set(N):
                op = op + WeylOperator.x(ctx, A, i) * WeylOperator.d(ctx, B, i)
            if A == B:
                op = op + WeylOperator.scalar(ctx, Fraction(N, 2))
        elif A > 0 and B < 0:
            for i in index_set(N):
                op = op - WeylOperator.x(ctx, A, i) * WeylOperator.x(ctx, -B, -i)
        else:  # A < 0 < B
            for i in index_set(N):
                op = op + WeylOperator.d(ctx, -A, i) * WeylOperator.d(ctx, B, -i)
    elif dual_family == "so":
        n = N // 2
        if N % 2:
            raise DimensionError("orthogonal dual action needs an even inner dimension")
        if A > 0 and B > 0:
            for i in index_set(N):
                op = op + WeylOperator.x(ctx, A, i) * WeylOperator.d(ctx, B, i)
            if A == B:
                op = op + WeylOperator.scalar(ctx, n)
        elif A > 0 and B < 0:
            for i in index_set(N):
                op = op + sgn(i) * WeylOperator.x(ctx, A, i) * WeylOperator.x(ctx, -B, -i)
        else:
            for i in index_set(N):
                op = op + sgn(i) * WeylOperator.d(ctx, -A, i) * WeylOperator.d(ctx, B, -i)
    else:
        raise ValueError(f"unknown dual family {dual_family!r}")
    return op


# -- Cayley operators --------------------------------------------------------


def _sym_sign(perm):
    s = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                s = -s
    return s


def _cayley_sum(k, m, N, signed):
    ctx = WeylContext(m, N)
    terms = {}
    inv_kfact = Fraction(1, math.factorial(k))
    for sigma in itertools.permutations(range(k)):
        c0 = inv_kfact * (_sym_sign(sigma) if signed else 1)
        for avec in itertools.product(range(1, m + 1), repeat=k):
            for ivec in itertools.product(ctx.indices, repeat=k):
                alpha = [0] * ctx.nvars
                beta = [0] * ctx.nvars
                for t in range(k):
                    alpha[ctx.slot(avec[t], ivec[t])] += 1
                    beta[ctx.slot(avec[t], ivec[sigma[t]])] += 1
                key = (tuple(alpha), tuple(beta))
                s = terms.get(key, 0) + c0
                if s == 0:
                    terms.pop(key, None)
                else:
                    terms[key] = s
    return WeylOperator(ctx, terms)


def cayley_omega(k: int, m: int, N: int) -> WeylOperator:
    """k-th antisymmetric Cayley operator: the signed symmetrized sum,
    cross-checked against the sum of det[x]*det[d] over increasing index
    choices before returning."""
    op = _cayley_sum(k, m, N, signed=True)
    ctx = WeylContext(m, N)
    alt = WeylOperator.zero(ctx)
    for avec in itertools.combinations(range(1, m + 1), k):
        for ivec in itertools.combinations(ctx.indices, k):
            xdet = det([[WeylOperator.x(ctx, a, i) for i in ivec] for a in avec])
            ddet = det([[WeylOperator.d(ctx, a, i) for i in ivec] for a in avec])
            alt = alt + xdet * ddet
    if not op == alt:
        raise ConsistencyError("symmetrized and determinantal forms disagree")
    return op


def cayley_theta(k: int, m: int, N: int) -> WeylOperator:
    """k-th symmetric Cayley operator, cross-checked against the
    multiplicity-weighted per[x]*per[d] form."""
    op = _cayley_sum(k, m, N, signed=False)
    ctx = WeylContext(m, N)
    alt = WeylOperator.zero(ctx)
    for avec in itertools.combinations_with_replacement(range(1, m + 1), k):
        for ivec in itertools.combinations_with_replacement(ctx.indices, k):
            xper = per([[WeylOperator.x(ctx, a, i) for i in ivec] for a in avec])
            dper = per([[WeylOperator.d(ctx, a, i) for i in ivec] for a in avec])
            weight = Fraction(1, _multiplicity_factorial(avec) * _multiplicity_factorial(ivec))
            alt = alt + weight * (xper * dper)
    if not op == alt:
        raise ConsistencyError("symmetrized and permanental forms disagree")
    return op


def _multiplicity_factorial(seq):
    out = 1
    for _, grp in itertools.groupby(seq):
        out *= math.factorial(sum(1 for _ in grp))
    return out


# -- paired determinant/permanent blocks -------------------------------------


def omega_AI(A, I, m: int, N: int) -> WeylOperator:
    """Signed sum over the splittings of the 2k distinct indices I into
    two k-subsets J, J' of det[x_{a_p j_q}] * det[d_{a_p, -j'_q}]."""
    ctx = WeylContext(m, N)
    I = tuple(sorted(I))
    if len(set(I)) != len(I):
        raise DimensionError("index set I must not repeat entries")
    if len(I) % 2:
        raise DimensionError("I must have even size")
    k = len(I) // 2
    A = tuple(sorted(A))
    if len(set(A)) != k:
        raise DimensionError("A must consist of k distinct rows")
    total = WeylOperator.zero(ctx)
    for positions in itertools.combinations(range(2 * k), k):
        J = [I[p] for p in positions]
        Jp = [I[p] for p in range(2 * k) if p not in positions]
        interleaved = [v for pair in zip(J, Jp) for v in pair]
        sign = _sym_sign([I.index(v) for v in interleaved])
        xdet = det([[WeylOperator.x(ctx, a, j) for j in J] for a in A])
        ddet = det([[WeylOperator.d(ctx, a, -jp) for jp in Jp] for a in A])
        total = total + sign * (xdet * ddet)
    return total


def theta_AI(A, I, m: int, N: int) -> WeylOperator:
    """Sum over the splittings of the weakly increasing index sequence I
    into two weakly increasing subsequences J, J' of
    sgn(j_1...j_k) * per[x_{a_p j_q}] * per[d_{a_p,-j'_q}].

    Splittings are enumerated by position, so coincident splits of
    repeated entries are counted with multiplicity; that counting is the
    one under which the representation image of the Hafnian equals
    Sum_A theta_AI / (d_1! ... d_m!).
    """
    ctx = WeylContext(m, N)
    I = tuple(sorted(I))
    if len(I) % 2:
        raise DimensionError("I must have even size")
    k = len(I) // 2
    A = tuple(sorted(A))
    if len(A) != k:
        raise DimensionError("A must consist of k rows")
    total = WeylOperator.zero(ctx)
    for positions in itertools.combinations(range(2 * k), k):
        J = [I[p] for p in positions]
        Jp = [I[p] for p in range(2 * k) if p not in positions]
        sign = 1
        for j in J:
            sign *= sgn(j)
        xper = per([[WeylOperator.x(ctx, a, j) for j in J] for a in A])
        dper = per([[WeylOperator.d(ctx, a, -jp) for jp in Jp] for a in A])
        total = total + sign * (xper * dper)
    return total


# -- highest-weight vectors ---------------------------------------------------


def minor_delta(p: int, m: int, N: int) -> SymPoly:
    """Determinant of the p x p block x_{ai}, a=1..p, on the p most
    negative column indices."""
    ctx = WeylContext(m, N)
    cols = ctx.indices[:p]
    return det([[ctx.poly_x(a, i) for i in cols] for a in range(1, p + 1)])


def singular_vector(lam, m: int, n: int, family: str, N: int) -> SymPoly:
    """Product of powers of the corner minors realizing a highest-weight
    vector of weight lam; the defining annihilation and weight conditions
    are asserted under the requested action before returning."""
    from .symfun import Partition

    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if not (m >= n >= len(lam)):
        raise DimensionError("need m >= n >= len(lam)")
    ctx = WeylContext(m, N)
    v = SymPoly.const(ctx.var_names, 1)
    for p in range(1, n + 1):
        e = lam[p] - lam[p + 1] if p < n else lam[n]
        if e:
            v = v * minor_delta(p, m, N) ** e
    idx = ctx.indices
    for i in idx:
        for j in idx:
            if i < j:
                img = gamma_gen(family, i, j, m, N).apply(v)
                if not img.is_zero():
                    raise ConsistencyError(f"F[{i},{j}] does not annihilate v_lambda")
    for p in range(1, n + 1):
        img = gamma_gen(family, -p, -p, m, N).apply(v)
        if not (img - lam[n - p + 1] * v).is_zero():
            raise ConsistencyError(f"wrong weight on F[{-p},{-p}]")
    return v
