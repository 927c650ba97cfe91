"""PBW arithmetic in enveloping algebras and the central elements built
from it.

Everything is computed inside U(gl_N): elements of the orthogonal and
symplectic subalgebras are expanded through F_ij = E_ij - eps_ij E_{-j,-i}
and normal-ordered against a single straightening engine for the E
generators.  Noncommutative polynomials in the F symbols are kept as
`FExpr` objects so that the same formula (a Pfaffian, a Hafnian, a
product of central elements) can be evaluated inside U(gl_N), through
the natural action on polynomials, or through the dual (oscillator)
action, by swapping the target ring.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .core import ConsistencyError, DimensionError, SymPoly, scal
from .symfun import Partition, ShiftSequence, e_factorial, h_factorial, partitions_with, zvars
from .weyl import (
    WeylContext,
    WeylOperator,
    dual_gamma_gen,
    gamma_gen,
    index_set,
    sgn,
    singular_vector,
)


class LieContext:
    """A classical Lie algebra gl_N, so_N or sp_N with its index set,
    sign table, half-sum vector and shift sequence."""

    _cache = {}

    def __new__(cls, family, N):
        key = (family, N)
        if key in cls._cache:
            return cls._cache[key]
        if family not in ("gl", "so", "sp"):
            raise ValueError(f"unknown family {family!r}")
        if family == "sp" and N % 2:
            raise DimensionError("sp_N needs even N")
        self = object.__new__(cls)
        self.family = family
        self.N = N
        self.n = N // 2
        self.indices = index_set(N)
        self._pos = {i: p for p, i in enumerate(self.indices)}
        if family == "so":
            self.eps = Fraction(0) if N % 2 == 0 else Fraction(1, 2)
            self.eta = Fraction(1, 2)
        elif family == "sp":
            self.eps = Fraction(1)
            self.eta = Fraction(-1, 2)
        else:
            self.eps = None
            self.eta = None
        if family in ("so", "sp"):
            self.rho = tuple(self.eps + self.n - p for p in range(1, self.n + 1))
            self.shift_sequence = ShiftSequence.squares(self.eps)
        else:
            self.rho = None
            self.shift_sequence = None
        self._nf = {}
        self._bracket = {}
        cls._cache[key] = self
        return self

    def gen_id(self, i, j):
        return self._pos[i] * self.N + self._pos[j]

    def gen_pair(self, gid):
        p, q = divmod(gid, self.N)
        return self.indices[p], self.indices[q]

    def eps_ij(self, i, j):
        if self.family == "sp":
            return sgn(i) * sgn(j)
        return 1

    def f_pairs(self):
        """Canonical representatives (i,j) of the nonzero generators F_ij
        under F_{-j,-i} = -eps_ij F_ij."""
        out = []
        for i in self.indices:
            for j in self.indices:
                if self.family == "so" and j == -i:
                    continue  # F_{i,-i} vanishes identically
                partner = (self.gen_id(-j, -i) if -j in self._pos else None)
                if partner is None or self.gen_id(i, j) <= partner:
                    out.append((i, j))
        return out

    def __repr__(self):
        return f"LieContext({self.family}_{self.N})"


# -- straightening engine ----------------------------------------------------


def _gl_bracket_ids(ctx: LieContext, g1, g2):
    """[E_{g1}, E_{g2}] as a map generator id -> coefficient."""
    key = (g1, g2)
    cached = ctx._bracket.get(key)
    if cached is not None:
        return cached
    i, j = ctx.gen_pair(g1)
    k, l = ctx.gen_pair(g2)
    out = {}
    if j == k:
        out[ctx.gen_id(i, l)] = out.get(ctx.gen_id(i, l), 0) + 1
    if l == i:
        out[ctx.gen_id(k, j)] = out.get(ctx.gen_id(k, j), 0) - 1
    out = {g: c for g, c in out.items() if c}
    ctx._bracket[key] = out
    return out


def _normal_form(ctx: LieContext, word):
    """Expansion of an arbitrary word of E generators over the PBW basis
    of weakly increasing words; memoized on the context."""
    cached = ctx._nf.get(word)
    if cached is not None:
        return cached
    for t in range(len(word) - 1):
        if word[t] > word[t + 1]:
            break
    else:
        res = {word: Fraction(1)}
        ctx._nf[word] = res
        return res
    g1, g2 = word[t], word[t + 1]
    swapped = word[:t] + (g2, g1) + word[t + 2:]
    out = dict(_normal_form(ctx, swapped))
    for g, c in _gl_bracket_ids(ctx, g1, g2).items():
        for ww, cc in _normal_form(ctx, word[:t] + (g,) + word[t + 2:]).items():
            s = out.get(ww, 0) + c * cc
            if s == 0:
                out.pop(ww, None)
            else:
                out[ww] = s
    ctx._nf[word] = out
    return out


class UEAElement:
    """Element of U(gl_N) in PBW normal form: a sparse map from weakly
    increasing generator-id words to exact scalars."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: LieContext, terms):
        self.ctx = ctx
        self.terms = {w: c for w, c in terms.items() if c != 0}

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, {})

    @classmethod
    def scalar(cls, ctx, c):
        c = scal(c)
        return cls(ctx, {(): c} if c else {})

    @classmethod
    def one(cls, ctx):
        return cls.scalar(ctx, 1)

    @classmethod
    def E(cls, ctx, i, j):
        return cls(ctx, {(ctx.gen_id(i, j),): Fraction(1)})

    @classmethod
    def F(cls, ctx, i, j):
        """F_ij = E_ij - eps_ij E_{-j,-i} (zero for so when j = -i)."""
        if ctx.family == "gl":
            return cls.E(ctx, i, j)
        terms = {(ctx.gen_id(i, j),): Fraction(1)}
        key = (ctx.gen_id(-j, -i),)
        terms[key] = terms.get(key, 0) - ctx.eps_ij(i, j)
        return cls(ctx, terms)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UEAElement):
            if other.ctx is not self.ctx:
                raise DimensionError("elements of different enveloping algebras")
            return other
        return UEAElement.scalar(self.ctx, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w, 0) + c
            if s == 0:
                terms.pop(w, None)
            else:
                terms[w] = s
        return UEAElement(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self):
        return UEAElement(self.ctx, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UEAElement):
            c = scal(other)
            if c == 0:
                return UEAElement.zero(self.ctx)
            return UEAElement(self.ctx, {w: c * v for w, v in self.terms.items()})
        if other.ctx is not self.ctx:
            raise DimensionError("elements of different enveloping algebras")
        out = {}
        ctx = self.ctx
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c12 = c1 * c2
                for w, c in _normal_form(ctx, w1 + w2).items():
                    s = out.get(w, 0) + c12 * c
                    if s == 0:
                        out.pop(w, None)
                    else:
                        out[w] = s
        return UEAElement(self.ctx, out)

    __rmul__ = __mul__

    def bracket(self, other):
        return self * other - other * self

    def __eq__(self, other):
        other = self._coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def filtration_degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def scalar_part(self):
        return self.terms.get((), Fraction(0))

    # -- display -----------------------------------------------------------

    def _render_word(self, w):
        if not w:
            return "1"
        return "*".join("E[%d,%d]" % self.ctx.gen_pair(g) for g in w)

    def __repr__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms)[:6]
        body = " + ".join(f"({self.terms[w]})*{self._render_word(w)}" for w in keys)
        more = "" if len(self.terms) <= 6 else f" + ... ({len(self.terms)} terms)"
        return body + more


def pbw_normal_form(ctx: LieContext, pairs) -> UEAElement:
    """Normal form of an arbitrary product of E generators given as a
    sequence of (i, j) pairs."""
    word = tuple(ctx.gen_id(i, j) for i, j in pairs)
    return UEAElement(ctx, dict(_normal_form(ctx, word)))


def uea_first_difference(a: UEAElement, b: UEAElement):
    """Witness string: the first PBW monomial with differing coefficient."""
    for w in sorted(set(a.terms) | set(b.terms)):
        ca = a.terms.get(w, Fraction(0))
        cb = b.terms.get(w, Fraction(0))
        if ca != cb:
            return f"{a._render_word(w)}: {ca} != {cb}"
    return None


# -- brackets of the subalgebra generators ------------------------------------


def generator_bracket(ctx: LieContext, pair1, pair2):
    """Bracket of two subalgebra generators, with its re-expression over
    the canonical F basis (asserted exact).

    Returns (element, combination) where combination maps canonical
    pairs to coefficients; for gl the combination is over E pairs.
    """
    if ctx.family == "gl":
        elem = UEAElement.E(ctx, *pair1).bracket(UEAElement.E(ctx, *pair2))
        combo = {ctx.gen_pair(w[0]): c for w, c in elem.terms.items()}
        return elem, combo
    elem = UEAElement.F(ctx, *pair1).bracket(UEAElement.F(ctx, *pair2))
    return elem, as_f_combination(elem)


def as_f_combination(elem: UEAElement):
    """Write a degree-one element of the subalgebra over the canonical F
    basis; raises ConsistencyError if the element is not in the span."""
    ctx = elem.ctx
    if elem.filtration_degree() > 1 or elem.scalar_part() != 0:
        raise ConsistencyError("not a Lie-algebra element")
    coeffs = {}
    for w, c in elem.terms.items():
        coeffs[ctx.gen_pair(w[0])] = c
    combo = {}
    residue = dict(coeffs)
    for (i, j) in ctx.f_pairs():
        if j == -i and ctx.family == "sp":
            c = residue.get((i, j), Fraction(0)) / 2
        else:
            c = residue.get((i, j), Fraction(0))
        if c == 0:
            continue
        combo[(i, j)] = c
        # subtract c * (E_ij - eps E_{-j,-i})
        for pair, dc in (((i, j), c), ((-j, -i), -c * ctx.eps_ij(i, j))):
            r = residue.get(pair, Fraction(0)) - dc
            if r == 0:
                residue.pop(pair, None)
            else:
                residue[pair] = r
    if residue:
        raise ConsistencyError(f"element is not in the F-span: residue {residue}")
    return combo


# -- evaluation rings ---------------------------------------------------------


class UEARing:
    """Target ring U(gl_N), with generator symbols read as E (gl) or
    F (so/sp) elements."""

    def __init__(self, ctx: LieContext):
        self.ctx = ctx
        self._gens = {}
        self._words = {(): UEAElement.one(ctx)}

    def one(self):
        return UEAElement.one(self.ctx)

    def scalar(self, c):
        return UEAElement.scalar(self.ctx, c)

    def f_gen(self, i, j):
        key = (i, j)
        if key not in self._gens:
            self._gens[key] = UEAElement.F(self.ctx, i, j)
        return self._gens[key]

    def word_image(self, word):
        cached = self._words.get(word)
        if cached is None:
            cached = self.word_image(word[:-1]) * self.f_gen(*word[-1])
            self._words[word] = cached
        return cached


class GammaRing:
    """Target ring PD on the m x N grid under the natural action."""

    def __init__(self, ctx: LieContext, m: int):
        self.ctx = ctx
        self.m = m
        self.wctx = WeylContext(m, ctx.N)
        self._gens = {}
        self._words = {(): WeylOperator.scalar(self.wctx, 1)}

    def one(self):
        return WeylOperator.scalar(self.wctx, 1)

    def scalar(self, c):
        return WeylOperator.scalar(self.wctx, c)

    def f_gen(self, i, j):
        key = (i, j)
        if key not in self._gens:
            self._gens[key] = gamma_gen(self.ctx.family, i, j, self.m, self.ctx.N)
        return self._gens[key]

    def word_image(self, word):
        cached = self._words.get(word)
        if cached is None:
            cached = self.word_image(word[:-1]) * self.f_gen(*word[-1])
            self._words[word] = cached
        return cached


class DualRing:
    """Target ring PD on the m x N grid under the dual (oscillator)
    action of the commutant algebra of rank m."""

    def __init__(self, dual_ctx: LieContext, m: int, N: int):
        if dual_ctx.N != 2 * m:
            raise DimensionError("dual algebra rank must match the row count")
        self.ctx = dual_ctx
        self.m = m
        self.N = N
        self.wctx = WeylContext(m, N)
        self._gens = {}
        self._words = {(): WeylOperator.scalar(self.wctx, 1)}

    def one(self):
        return WeylOperator.scalar(self.wctx, 1)

    def scalar(self, c):
        return WeylOperator.scalar(self.wctx, c)

    def f_gen(self, a, b):
        key = (a, b)
        if key not in self._gens:
            self._gens[key] = dual_gamma_gen(self.ctx.family, a, b, self.m, self.N)
        return self._gens[key]

    def word_image(self, word):
        cached = self._words.get(word)
        if cached is None:
            cached = self.word_image(word[:-1]) * self.f_gen(*word[-1])
            self._words[word] = cached
        return cached


_RINGS = {}


def uea_ring(ctx) -> UEARing:
    key = ("uea", ctx.family, ctx.N)
    if key not in _RINGS:
        _RINGS[key] = UEARing(ctx)
    return _RINGS[key]


def gamma_ring(ctx, m) -> GammaRing:
    key = ("gamma", ctx.family, ctx.N, m)
    if key not in _RINGS:
        _RINGS[key] = GammaRing(ctx, m)
    return _RINGS[key]


def dual_ring(dual_ctx, m, N) -> DualRing:
    key = ("dual", dual_ctx.family, dual_ctx.N, m, N)
    if key not in _RINGS:
        _RINGS[key] = DualRing(dual_ctx, m, N)
    return _RINGS[key]


class FExpr:
    """Noncommutative polynomial in the generator symbols (i, j): a map
    from words of pairs to scalars.  Evaluating in a ring sends the
    symbol (i, j) to ring.f_gen(i, j) and extends multiplicatively."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {w: c for w, c in (terms or {}).items() if c != 0}

    @classmethod
    def one(cls):
        return cls({(): Fraction(1)})

    @classmethod
    def gen(cls, i, j, coeff=1):
        return cls({((i, j),): scal(coeff)})

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w, 0) + c
            if s == 0:
                terms.pop(w, None)
            else:
                terms[w] = s
        return FExpr(terms)

    def __neg__(self):
        return FExpr({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, FExpr):
            c = scal(other)
            return FExpr({w: c * v for w, v in self.terms.items()})
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w, 0) + c1 * c2
                if s == 0:
                    out.pop(w, None)
                else:
                    out[w] = s
        return FExpr(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = FExpr.one()
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, ring):
        acc = None
        for w, c in self.terms.items():
            term = ring.word_image(w) * c
            acc = term if acc is None else acc + term
        return ring.scalar(0) if acc is None else acc

    def __repr__(self):
        return f"FExpr({len(self.terms)} words)"


# -- Capelli elements of U(gl_N) ----------------------------------------------


def _perm_sign(perm):
    s = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                s = -s
    return s


def capelli_element_e(k: int, N: int) -> UEAElement:
    """Row-ordered symmetrized sum with +(s-1) diagonal shifts whose
    image under the natural action is the k-th antisymmetric Cayley
    operator."""
    return _capelli_sum(k, N, shift_sign=+1, signed=True)


def capelli_element_h(k: int, N: int) -> UEAElement:
    """The permanental counterpart, with -(s-1) shifts and no signs."""
    return _capelli_sum(k, N, shift_sign=-1, signed=False)


def _capelli_sum(k, N, shift_sign, signed):
    ctx = LieContext("gl", N)
    total = UEAElement.zero(ctx)
    inv_kfact = Fraction(1, math.factorial(k))
    for sigma in itertools.permutations(range(k)):
        base = inv_kfact * (_perm_sign(sigma) if signed else 1)
        for ivec in itertools.product(ctx.indices, repeat=k):
            prod = UEAElement.scalar(ctx, base)
            for s in range(k):
                i, j = ivec[s], ivec[sigma[s]]
                factor = UEAElement.E(ctx, i, j) + UEAElement.scalar(
                    ctx, shift_sign * s * (1 if i == j else 0))
                prod = prod * factor
            total = total + prod
    return total


# -- Pfaffians, Hafnians and the central families -----------------------------


def pfaffian_phi_expr(I) -> FExpr:
    """Pfaffian of [F_{i_p, -i_q}] over a sorted set of 2k distinct
    indices, as a noncommutative polynomial in the F symbols."""
    I = tuple(sorted(I))
    if len(set(I)) != len(I):
        raise DimensionError("Pfaffian index set must not repeat entries")
    if len(I) % 2:
        raise DimensionError("Pfaffian needs an even number of indices")
    k = len(I) // 2
    norm = Fraction(1, 2 ** k * math.factorial(k))
    terms = {}
    for sigma in itertools.permutations(range(2 * k)):
        word = tuple((I[sigma[2 * t]], -I[sigma[2 * t + 1]]) for t in range(k))
        c = norm * _perm_sign(sigma)
        s = terms.get(word, 0) + c
        if s == 0:
            terms.pop(word, None)
        else:
            terms[word] = s
    return FExpr(terms)


def hafnian_psi_expr(I) -> FExpr:
    """Hafnian of [sgn(i_p) F_{i_p, -i_q}] over a weakly increasing index
    sequence of even length."""
    I = tuple(sorted(I))
    if len(I) % 2:
        raise DimensionError("Hafnian needs an even number of indices")
    k = len(I) // 2
    norm = Fraction(1, 2 ** k * math.factorial(k))
    terms = {}
    for sigma in itertools.permutations(range(2 * k)):
        word = tuple((I[sigma[2 * t]], -I[sigma[2 * t + 1]]) for t in range(k))
        c = norm
        for t in range(k):
            c *= sgn(I[sigma[2 * t]])
        s = terms.get(word, 0) + c
        if s == 0:
            terms.pop(word, None)
        else:
            terms[word] = s
    return FExpr(terms)


def pfaffian_phi(ctx: LieContext, I) -> UEAElement:
    if ctx.family != "so":
        raise DimensionError("Pfaffian generators live in the orthogonal algebra")
    return pfaffian_phi_expr(I).evaluate(uea_ring(ctx))


def hafnian_psi(ctx: LieContext, I) -> UEAElement:
    if ctx.family != "sp":
        raise DimensionError("Hafnian generators live in the symplectic algebra")
    if ctx.N % 2:
        raise DimensionError("even N required")
    return hafnian_psi_expr(I).evaluate(uea_ring(ctx))


def c_k_expr(ctx: LieContext, k: int) -> FExpr:
    """(-1)^k sum over 2k-subsets I of Phi_I Phi_{I*}."""
    if ctx.family != "so":
        raise DimensionError("the signed family is built from Pfaffians over so_N")
    total = FExpr()
    for I in itertools.combinations(ctx.indices, 2 * k):
        Istar = tuple(sorted(-i for i in I))
        total = total + pfaffian_phi_expr(I) * pfaffian_phi_expr(Istar)
    return total * Fraction((-1) ** k)


def d_k_expr(ctx: LieContext, k: int) -> FExpr:
    """(-1)^k sum over weakly increasing 2k-sequences I of
    sgn(i_1...i_{2k}) Psi_I Psi_{I*} / (f_1! f_{-1}! ... f_n! f_{-n}!)."""
    if ctx.family != "sp":
        raise DimensionError("the unsigned family is built from Hafnians over sp_N")
    total = FExpr()
    for I in itertools.combinations_with_replacement(ctx.indices, 2 * k):
        Istar = tuple(sorted(-i for i in I))
        sign = 1
        for i in I:
            sign *= sgn(i)
        denom = 1
        for _, grp in itertools.groupby(I):
            denom *= math.factorial(sum(1 for _ in grp))
        total = total + Fraction(sign, denom) * (
            hafnian_psi_expr(I) * hafnian_psi_expr(Istar))
    return total * Fraction((-1) ** k)


class CentralElement:
    """A central element carried both as a formula in the F symbols and,
    lazily, as a PBW normal form."""

    __slots__ = ("ctx", "expr", "label", "_uea")

    def __init__(self, ctx: LieContext, expr: FExpr, label: str):
        self.ctx = ctx
        self.expr = expr
        self.label = label
        self._uea = None

    def uea(self) -> UEAElement:
        if self._uea is None:
            self._uea = self.expr.evaluate(uea_ring(self.ctx))
        return self._uea

    def gamma(self, m: int) -> WeylOperator:
        return self.expr.evaluate(gamma_ring(self.ctx, m))

    def gamma_prime(self, m: int, N: int) -> WeylOperator:
        return self.expr.evaluate(dual_ring(self.ctx, m, N))

    def __repr__(self):
        return f"CentralElement({self.label} in {self.ctx})"


def gamma(x: UEAElement, m: int) -> WeylOperator:
    """Natural action on the polynomial ring, extended from the generator
    images over the PBW words."""
    ring = gamma_ring(LieContext("gl", x.ctx.N), m)
    acc = WeylOperator.zero(ring.wctx)
    for w, c in x.terms.items():
        word = tuple(x.ctx.gen_pair(g) for g in w)
        acc = acc + ring.word_image(word) * c
    return acc


def gamma_prime(expr, dual_ctx: LieContext, m: int, N: int) -> WeylOperator:
    """Dual action on the polynomial ring applied to a formula in the
    generators of the commutant algebra."""
    if isinstance(expr, CentralElement):
        expr = expr.expr
    return expr.evaluate(dual_ring(dual_ctx, m, N))


def check_dual_bracket_compatibility(dual_ctx: LieContext, m: int, N: int):
    """The dual generator images satisfy the structure relations of the
    commutant algebra: [g'(X), g'(Y)] = g'([X, Y]) on all generators."""
    ring = dual_ring(dual_ctx, m, N)
    pairs = dual_ctx.f_pairs()
    for p1 in pairs:
        for p2 in pairs:
            lhs = ring.f_gen(*p1).bracket(ring.f_gen(*p2))
            _, combo = generator_bracket(dual_ctx, p1, p2)
            rhs = WeylOperator.zero(ring.wctx)
            for pair, c in combo.items():
                rhs = rhs + ring.f_gen(*pair) * c
            if not lhs == rhs:
                raise ConsistencyError(f"dual bracket mismatch on {p1}, {p2}")
    return True


# -- eigenvalues and the Harish-Chandra oracle -------------------------------


def is_central(x: UEAElement, ctx: LieContext) -> bool:
    gens = (ctx.f_pairs() if ctx.family != "gl"
            else [(i, j) for i in ctx.indices for j in ctx.indices])
    make = UEAElement.F if ctx.family != "gl" else UEAElement.E
    return all(x.bracket(make(ctx, i, j)).is_zero() for i, j in gens)


def eigenvalue_on_hwv(z, lam, ctx: LieContext = None, check_central=True) -> Fraction:
    """Eigenvalue of a central element on the irreducible with highest
    weight lam, read off from its action on the explicit highest-weight
    vector in the polynomial ring with m = n rows."""
    if isinstance(z, CentralElement):
        ctx = z.ctx
        z = z.uea()
    if ctx is None:
        raise ValueError("context required for a bare element")
    if check_central and not is_central(z, ctx):
        raise ConsistencyError("element is not invariant (or the engine is broken)")
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    n = ctx.n
    v = singular_vector(lam, n, n, ctx.family, ctx.N)
    image = gamma(z, n).apply(v)
    ev0, c0 = next(iter(v.terms.items()))
    ratio = image.coefficient(ev0) / c0
    if not (image - ratio * v).is_zero():
        raise ConsistencyError("image of the highest-weight vector is not proportional to it")
    return ratio


def _monomial_symmetric(vs, mu, n):
    """Monomial symmetric polynomial m_mu in n variables."""
    mu = tuple(mu.parts) + (0,) * (n - len(mu))
    exps = set(itertools.permutations(mu))
    return SymPoly(vs, {e: Fraction(1) for e in exps})


def _solve_exact(rows, rhs, ncols):
    """Solve an overdetermined exact linear system; raises if inconsistent
    or rank-deficient.  Returns the unique solution vector."""
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        lead = aug[r][c]
        aug[r] = [x / lead for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    if len(pivots) < ncols:
        raise ConsistencyError("interpolation system is singular (need more samples)")
    for i in range(r, len(aug)):
        if any(x != 0 for x in aug[i]):
            raise ConsistencyError("inconsistent interpolation system")
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][ncols]
    return sol


def hc_polynomial(z, degree_bound: int, ctx: LieContext = None,
                  in_l_squared=False) -> SymPoly:
    """Harish-Chandra image of a central element, interpolated from its
    eigenvalues on a grid of dominant weights.

    The result is the unique symmetric polynomial of degree at most
    `degree_bound` in l_p^2 = (lam_p + rho_p)^2 matching every sampled
    eigenvalue; returned in the lam variables, or in the squared-l
    variables when `in_l_squared` is set.
    """
    if isinstance(z, CentralElement):
        ctx = z.ctx
    if ctx is None:
        raise ValueError("context required for a bare element")
    n = ctx.n
    basis = list(partitions_with(n, max_weight=degree_bound))
    yvars = tuple(f"y{p}" for p in range(1, n + 1))
    basis_polys = [_monomial_symmetric(yvars, mu, n) for mu in basis]
    grid = list(partitions_with(n, max_part=2 * degree_bound + 1))
    rows, rhs = [], []
    first = True
    for lam in grid:
        ls = [lam[p] + ctx.rho[p - 1] for p in range(1, n + 1)]
        ys = {f"y{p}": ls[p - 1] ** 2 for p in range(1, n + 1)}
        rows.append([bp.evaluate(ys) for bp in basis_polys])
        rhs.append(eigenvalue_on_hwv(z, lam, ctx, check_central=first))
        first = False
    coeffs = _solve_exact(rows, rhs, len(basis))
    result = SymPoly.zero(yvars)
    for c, bp in zip(coeffs, basis_polys):
        result = result + bp * c
    if in_l_squared:
        return result
    lamvars = tuple(f"lam{p}" for p in range(1, n + 1))
    subs = {}
    for p in range(1, n + 1):
        lp = SymPoly.variable(lamvars, f"lam{p}") + ctx.rho[p - 1]
        subs[f"y{p}"] = lp * lp
    value = result.evaluate(subs)
    return value if isinstance(value, SymPoly) else SymPoly.const(lamvars, value)


# -- the two central families -------------------------------------------------


def express_in_family(target: SymPoly, gens, gen_degrees, n: int):
    """Coefficients writing a symmetric polynomial as a polynomial in the
    given algebraically independent symmetric generators."""
    d = max(target.total_degree(), 0)
    alphas = []
    for alpha in itertools.product(*(range(d // gd + 1) for gd in gen_degrees)):
        if sum(a * gd for a, gd in zip(alpha, gen_degrees)) <= d:
            alphas.append(alpha)
    vs = target.vars
    products = []
    for alpha in alphas:
        p = SymPoly.const(vs, 1)
        for g, a in zip(gens, alpha):
            for _ in range(a):
                p = p * g
        products.append(p)
    monomials = sorted({ev for p in products for ev in p.terms}
                       | set(target.terms))
    rows = [[p.coefficient(ev) for p in products] for ev in monomials]
    rhs = [target.coefficient(ev) for ev in monomials]
    sol = _solve_exact(rows, rhs, len(alphas))
    return {alpha: c for alpha, c in zip(alphas, sol) if c != 0}


class CentralSeries:
    """The coefficients of one of the two central generating functions:
    kind "C" (signed family, identically zero past the rank) or kind "D"
    (unsigned family)."""

    def __init__(self, ctx: LieContext, kind: str, elements):
        self.ctx = ctx
        self.kind = kind
        self.elements = list(elements)

    def __getitem__(self, k):
        if k == 0:
            return CentralElement(self.ctx, FExpr.one(), f"{self.kind}_0")
        if k <= len(self.elements):
            return self.elements[k - 1]
        if self.kind == "C":
            return CentralElement(self.ctx, FExpr(), f"{self.kind}_{k}")
        raise IndexError("series computed to lower order")

    def __len__(self):
        return len(self.elements)


def central_series(ctx: LieContext, kind: str, K: int) -> CentralSeries:
    """Construct the first K coefficients of the requested family.

    The native constructions are the Pfaffian sums (signed family over
    so_N) and the Hafnian sums (unsigned family over sp_N).  The
    complementary family in each algebra is assembled through the
    Harish-Chandra characterization: its target symmetric polynomial is
    expressed in the images of the native generators and the same
    polynomial is taken in the elements themselves.
    """
    if ctx.family not in ("so", "sp"):
        raise DimensionError("central families live in so_N or sp_N")
    n, a = ctx.n, ctx.shift_sequence
    native_kind = "C" if ctx.family == "so" else "D"
    if kind == native_kind:
        out = []
        for k in range(1, K + 1):
            if kind == "C" and k > n:
                out.append(CentralElement(ctx, FExpr(), f"C_{k}"))
            else:
                builder = c_k_expr if kind == "C" else d_k_expr
                out.append(CentralElement(ctx, builder(ctx, k), f"{kind}_{k}"))
        return CentralSeries(ctx, kind, out)

    native = central_series(ctx, native_kind, min(K, n) if native_kind == "C" else K)
    gens = []
    gen_imgs = []
    for j in range(1, n + 1):
        if native_kind == "C":
            gen_imgs.append(e_factorial(j, n, a) * Fraction((-1) ** j))
        else:
            gen_imgs.append(h_factorial(j, n, a))
        gens.append(native[j].expr)
    out = []
    for k in range(1, K + 1):
        if kind == "C" and k > n:
            out.append(CentralElement(ctx, FExpr(), f"C_{k}"))
            continue
        if kind == "C":
            target = e_factorial(k, n, a) * Fraction((-1) ** k)
        else:
            target = h_factorial(k, n, a)
        combo = express_in_family(target, gen_imgs, list(range(1, n + 1)), n)
        expr = FExpr()
        for alpha, c in combo.items():
            prod = FExpr.one() * c
            for g, e in zip(gens, alpha):
                for _ in range(e):
                    prod = prod * g
            expr = expr + prod
        out.append(CentralElement(ctx, expr, f"{kind}_{k}"))
    return CentralSeries(ctx, kind, out)


def c_k_pfaffian(ctx: LieContext, k: int) -> UEAElement:
    return c_k_expr(ctx, k).evaluate(uea_ring(ctx)) if k <= ctx.n \
        else UEAElement.zero(ctx)


def d_k_hafnian(ctx: LieContext, k: int) -> UEAElement:
    return d_k_expr(ctx, k).evaluate(uea_ring(ctx))


# -- dual pair transfer coefficients ------------------------------------------


def dual_pair_coeffs(kind: str, k: int, l: int, m: int, N: int) -> Fraction:
    """Transfer coefficient in front of gamma(C_l) (kind "C") or
    gamma(D_l) (kind "D") in the expansion of the dual image of the k-th
    element of the commutant algebra."""
    if not 0 <= l <= k:
        raise DimensionError("need 0 <= l <= k")
    out = Fraction(1)
    if kind == "C":
        d = Fraction(m) - Fraction(N, 2) + 1
        for s in range(l, k):
            out *= Fraction(m - s) * (Fraction(N, 2) - s) * (d + l - s) / (k - s)
    elif kind == "D":
        n = N // 2
        d = n - m + 1
        for s in range(l, k):
            out *= Fraction((m + s) * (n + s) * (d - k + s + 1), s - l + 1)
    else:
        raise ValueError("kind must be 'C' or 'D'")
    return out
