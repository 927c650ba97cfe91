from fractions import Fraction
import itertools
import random

import pytest

from capelli.core import ConsistencyError, DimensionError, SymPoly
from capelli.symfun import Partition, e_factorial, h_factorial
from capelli.uea import (
    CentralElement,
    FExpr,
    LieContext,
    UEAElement,
    as_f_combination,
    c_k_pfaffian,
    capelli_element_e,
    capelli_element_h,
    central_series,
    check_dual_bracket_compatibility,
    d_k_hafnian,
    dual_pair_coeffs,
    eigenvalue_on_hwv,
    express_in_family,
    gamma,
    generator_bracket,
    hafnian_psi,
    hc_polynomial,
    is_central,
    pbw_normal_form,
    pfaffian_phi,
    uea_first_difference,
)
from capelli.weyl import WeylContext, WeylOperator, sgn


GL2 = LieContext("gl", 2)
GL3 = LieContext("gl", 3)
SO2 = LieContext("so", 2)
SO3 = LieContext("so", 3)
SO4 = LieContext("so", 4)
SP2 = LieContext("sp", 2)
SP4 = LieContext("sp", 4)


def E(ctx, i, j):
    return UEAElement.E(ctx, i, j)


def F(ctx, i, j):
    return UEAElement.F(ctx, i, j)


# -- straightening -----------------------------------------------------------


def test_bracket_gl():
    # raising against lowering gives the Cartan difference
    got = E(GL2, -1, 1).bracket(E(GL2, 1, -1))
    assert got == E(GL2, -1, -1) - E(GL2, 1, 1)
    assert E(GL2, -1, -1).bracket(E(GL2, 1, 1)).is_zero()


def test_pbw_sorted_word_fixed():
    w = pbw_normal_form(GL2, [(-1, -1), (1, 1)])
    assert w == E(GL2, -1, -1) * E(GL2, 1, 1)
    assert list(w.terms) == [(GL2.gen_id(-1, -1), GL2.gen_id(1, 1))]


def test_pbw_one_straightening_step():
    # lowering times raising reorders with a Cartan correction
    got = pbw_normal_form(GL2, [(1, -1), (-1, 1)])
    expected = E(GL2, -1, 1) * E(GL2, 1, -1) + E(GL2, 1, 1) - E(GL2, -1, -1)
    assert got == expected


def test_pbw_associativity_randomized():
    rng = random.Random(31)
    gens = [(i, j) for i in GL2.indices for j in GL2.indices]
    for _ in range(40):
        x, y, z = (E(GL2, *rng.choice(gens)) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_cartan_commutes():
    assert F(SO3, -1, -1).bracket(F(SO3, 0, 0)).is_zero()
    assert F(SP4, -2, -2).bracket(F(SP4, -1, -1)).is_zero()


def test_generator_bracket_so3_reexpression():
    # F_{0,1} = -F_{-1,0}, so this bracket is zero; both it and a genuinely
    # nonzero one must re-express exactly over the canonical basis
    for p1, p2 in (((-1, 0), (0, 1)), ((-1, 0), (0, -1))):
        elem, combo = generator_bracket(SO3, p1, p2)
        rebuilt = UEAElement.zero(SO3)
        for pair, c in combo.items():
            rebuilt = rebuilt + c * F(SO3, *pair)
        assert rebuilt == elem
    elem, _ = generator_bracket(SO3, (-1, 0), (0, -1))
    assert elem == F(SO3, -1, -1)


def test_as_f_combination_rejects_outside_span():
    with pytest.raises(ConsistencyError):
        as_f_combination(E(SO3, -1, 1))  # F_{-1,1} vanishes in so_3


def test_f_vanishes_for_so_self_pair():
    assert F(SO4, 1, -1).is_zero()
    assert not F(SP2, 1, -1).is_zero()  # symplectic self-pair survives


# -- Capelli elements --------------------------------------------------------


def test_capelli_k1():
    for ctx in (GL2, GL3):
        expected = UEAElement.zero(ctx)
        for i in ctx.indices:
            expected = expected + E(ctx, i, i)
        assert capelli_element_e(1, ctx.N) == expected
        assert capelli_element_h(1, ctx.N) == expected


def test_capelli_e_2_2_hand_expansion():
    # independent expansion of the k=2 sum over S_2 and index pairs,
    # straightened by hand
    a, b = -1, 1
    expected = E(GL2, a, a) * E(GL2, b, b) - E(GL2, a, b) * E(GL2, b, a) + E(GL2, a, a)
    assert capelli_element_e(2, 2) == expected


def test_capelli_h_2_2_hand_expansion():
    a, b = -1, 1
    expected = (E(GL2, a, a) * E(GL2, a, a) + E(GL2, a, a) * E(GL2, b, b)
                + E(GL2, b, b) * E(GL2, b, b) + E(GL2, a, b) * E(GL2, b, a)
                - 2 * E(GL2, a, a) - E(GL2, b, b))
    assert capelli_element_h(2, 2) == expected


@pytest.mark.parametrize("k,N", [(1, 2), (2, 2), (1, 3), (2, 3)])
def test_capelli_central(k, N):
    ctx = LieContext("gl", N)
    assert is_central(capelli_element_e(k, N), ctx)
    assert is_central(capelli_element_h(k, N), ctx)


# -- Pfaffians and Hafnians --------------------------------------------------


def test_pfaffian_k1():
    assert pfaffian_phi(SO4, (-2, 1)) == F(SO4, -2, -1)
    assert pfaffian_phi(SO2, (-1, 1)) == F(SO2, -1, -1)
    with pytest.raises(DimensionError):
        pfaffian_phi(SO4, (1, 1))


def test_pfaffian_k2_matching_expansion():
    # oracle: sum over the three perfect matchings, averaged over both
    # orders of the noncommuting pair factors
    I = (-2, -1, 1, 2)
    m = {(p, q): F(SO4, I[p - 1], -I[q - 1]) for p in range(1, 5) for q in range(1, 5)}
    sym = Fraction(1, 2) * (
        m[(1, 2)] * m[(3, 4)] + m[(3, 4)] * m[(1, 2)]
        - m[(1, 3)] * m[(2, 4)] - m[(2, 4)] * m[(1, 3)]
        + m[(1, 4)] * m[(2, 3)] + m[(2, 3)] * m[(1, 4)])
    assert pfaffian_phi(SO4, I) == sym


def test_hafnian_k1():
    assert hafnian_psi(SP2, (1, 1)) == F(SP2, 1, -1)  # sgn(1) * F
    assert hafnian_psi(SP4, (-1, 2)) == -F(SP4, -1, -2)
    tilde = lambda i, j: Fraction(sgn(i)) * F(SP4, i, j)
    assert hafnian_psi(SP4, (-1, 2)) == tilde(-1, -2)
    # symmetric matrix: tilde F_{i,-j} = tilde F_{j,-i}
    assert tilde(-1, -2) == tilde(2, 1)


def test_hafnian_k2_matching_expansion():
    I = (-2, -1, 1, 2)
    t = {(p, q): Fraction(sgn(I[p - 1])) * F(SP4, I[p - 1], -I[q - 1])
         for p in range(1, 5) for q in range(1, 5)}
    sym = Fraction(1, 2) * (
        t[(1, 2)] * t[(3, 4)] + t[(3, 4)] * t[(1, 2)]
        + t[(1, 3)] * t[(2, 4)] + t[(2, 4)] * t[(1, 3)]
        + t[(1, 4)] * t[(2, 3)] + t[(2, 3)] * t[(1, 4)])
    assert hafnian_psi(SP4, I) == sym


# -- central families --------------------------------------------------------


def test_c1_so2_frozen():
    f = F(SO2, -1, -1)
    assert c_k_pfaffian(SO2, 1) == -(f * f)
    assert c_k_pfaffian(SO2, 2).is_zero()  # k > n


def test_c1_so3_eigenvalues():
    C1 = c_k_pfaffian(SO3, 1)
    for lam in range(5):
        assert eigenvalue_on_hwv(C1, (lam,), SO3) == -lam * (lam + 1)


def test_d1_sp2_eigenvalue():
    D1 = d_k_hafnian(SP2, 1)
    assert eigenvalue_on_hwv(D1, (1,), SP2) == 3  # (1+1)^2 - 1


def test_eigenvalue_of_identity():
    one = UEAElement.one(SO3)
    assert eigenvalue_on_hwv(one, (2,), SO3) == 1


def test_eigenvalue_rejects_noncentral():
    with pytest.raises(ConsistencyError):
        eigenvalue_on_hwv(F(SO3, -1, -1), (1,), SO3)


@pytest.mark.parametrize("ctx,k", [(SO3, 1), (SO4, 1), (SO4, 2)])
def test_hc_of_c_family(ctx, k):
    hc = hc_polynomial(c_k_pfaffian(ctx, k), k, ctx, in_l_squared=True)
    target = e_factorial(k, ctx.n, ctx.shift_sequence) * Fraction((-1) ** k)
    assert hc == SymPoly(hc.vars, target.terms)


@pytest.mark.parametrize("ctx,k", [(SP2, 1), (SP4, 1), (SP4, 2)])
def test_hc_of_d_family(ctx, k):
    hc = hc_polynomial(d_k_hafnian(ctx, k), k, ctx, in_l_squared=True)
    target = h_factorial(k, ctx.n, ctx.shift_sequence)
    assert hc == SymPoly(hc.vars, target.terms)


def test_hc_of_identity():
    hc = hc_polynomial(UEAElement.one(SO3), 1, SO3)
    assert hc == SymPoly.const(hc.vars, 1)


def test_hc_in_lambda_variables():
    # so_3: hc(C_1) = -(lam+1/2)^2 + 1/4 = -lam^2 - lam
    hc = hc_polynomial(c_k_pfaffian(SO3, 1), 1, SO3)
    lam = SymPoly.variable(("lam1",), "lam1")
    assert hc == -(lam * lam) - lam


def test_complementary_family_so():
    series = central_series(SO3, "D", 3)
    for k in (1, 2, 3):
        dk = series[k].uea()
        assert is_central(dk, SO3)
        hc = hc_polynomial(dk, k, SO3, in_l_squared=True)
        target = h_factorial(k, 1, SO3.shift_sequence)
        assert hc == SymPoly(hc.vars, target.terms)


def test_complementary_family_sp():
    series = central_series(SP2, "C", 3)
    assert series[1].uea() == -d_k_hafnian(SP2, 1)
    assert series[2].uea().is_zero() and series[3].uea().is_zero()
    series4 = central_series(SP4, "C", 2)
    for k in (1, 2):
        ck = series4[k].uea()
        assert is_central(ck, SP4)
        hc = hc_polynomial(ck, k, SP4, in_l_squared=True)
        target = e_factorial(k, 2, SP4.shift_sequence) * Fraction((-1) ** k)
        assert hc == SymPoly(hc.vars, target.terms)


def test_express_in_family():
    from capelli.symfun import ShiftSequence

    a = ShiftSequence.squares(1)
    e1 = e_factorial(1, 2, a)
    e2 = e_factorial(2, 2, a)
    combo = express_in_family(h_factorial(2, 2, a), [e1, e2], [1, 2], 2)
    rebuilt = SymPoly.zero(e1.vars)
    for (a1, a2), c in combo.items():
        rebuilt = rebuilt + c * (e1 ** a1) * (e2 ** a2)
    assert rebuilt == h_factorial(2, 2, a)


# -- representations ---------------------------------------------------------


def test_gamma_is_homomorphism():
    rng = random.Random(41)
    gens = [(i, j) for i in GL2.indices for j in GL2.indices]
    for _ in range(10):
        x = E(GL2, *rng.choice(gens)) * E(GL2, *rng.choice(gens))
        y = E(GL2, *rng.choice(gens))
        assert gamma(x * y, 2) == gamma(x, 2) * gamma(y, 2)


def test_gamma_of_so_element_restricts_gl_action():
    from capelli.weyl import gamma_gen

    got = gamma(F(SO4, -2, 1).uea() if hasattr(F(SO4, -2, 1), "uea") else F(SO4, -2, 1), 2)
    expected = gamma_gen("so", -2, 1, 2, 4)
    assert got == expected


def test_dual_bracket_compatibility():
    assert check_dual_bracket_compatibility(SP2, 1, 2)
    assert check_dual_bracket_compatibility(SP2, 1, 3)
    assert check_dual_bracket_compatibility(SO2, 1, 2)
    assert check_dual_bracket_compatibility(SP4, 2, 2)
    assert check_dual_bracket_compatibility(SO4, 2, 2)


def test_central_element_gamma_routes_agree():
    elt = central_series(SO3, "C", 1)[1]
    assert elt.gamma(2) == gamma(elt.uea(), 2)


# -- transfer coefficients ---------------------------------------------------


def test_dual_pair_coeffs_edges():
    assert dual_pair_coeffs("C", 2, 2, 2, 3) == 1
    assert dual_pair_coeffs("D", 2, 2, 2, 4) == 1
    for m, N in ((1, 2), (2, 3), (2, 4)):
        d = Fraction(m) - Fraction(N, 2) + 1
        assert dual_pair_coeffs("C", 1, 0, m, N) == m * Fraction(N, 2) * d


def test_dual_pair_coeffs_g_vanishing():
    # g_{kl} = 0 whenever k > d + l with d = n - m + 1
    m, N = 2, 4
    d = N // 2 - m + 1
    for k in range(1, 5):
        for l in range(0, k + 1):
            if k > d + l:
                assert dual_pair_coeffs("D", k, l, m, N) == 0


def test_first_difference_witness():
    x = E(GL2, -1, -1)
    y = E(GL2, -1, -1) + 2 * E(GL2, 1, 1)
    w = uea_first_difference(x, y)
    assert w is not None and "E[1,1]" in w
    assert uea_first_difference(x, x) is None
