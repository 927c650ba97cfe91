from fractions import Fraction

import pytest

from capelli.core import ConsistencyError
from capelli.uea import LieContext, UEAElement, c_k_pfaffian, central_series, d_k_hafnian, is_central
from capelli.tensor import (
    TMat,
    TensorSpace,
    build_basic,
    check_trace_invariance,
    classical_point,
    cross_equal,
    eigenvalue_check_gl,
    exchange_P,
    fused_F,
    fusion_capelli,
    generating_functions,
    guard_cells,
    lin,
    quantum_det_gl,
    sklyanin_det,
    smat_eq,
    smat_identity,
    smat_mul,
    smat_scale,
    symmetrizer,
    theorem_62_check,
    tm_F,
    twist_Q,
    ucoeffs_eq,
    verify_relations,
    verify_vanishing,
)

SO2 = LieContext("so", 2)
SO3 = LieContext("so", 3)
SP2 = LieContext("sp", 2)
SP4 = LieContext("sp", 4)


def test_exchange_operator_involution():
    for N in (2, 3):
        space = TensorSpace(N, 2)
        P = exchange_P(space, 1, 2)
        assert smat_eq(smat_mul(P, P), smat_identity(space.size))


@pytest.mark.parametrize("fam,N,sign", [("so", 2, 1), ("so", 3, 1), ("sp", 2, -1), ("sp", 4, -1)])
def test_PQ_relation(fam, N, sign):
    space = TensorSpace(N, 2)
    P = exchange_P(space, 1, 2)
    Q = twist_Q(space, 1, 2, fam)
    assert smat_eq(smat_mul(P, Q), smat_scale(Q, sign))
    assert smat_eq(smat_mul(Q, P), smat_scale(Q, sign))


@pytest.mark.parametrize("fam,N", [("so", 2), ("so", 3), ("sp", 2)])
def test_Q_squared(fam, N):
    space = TensorSpace(N, 2)
    Q = twist_Q(space, 1, 2, fam)
    assert smat_eq(smat_mul(Q, Q), smat_scale(Q, N))


def test_projector_invariants():
    import math

    for N in (2, 3):
        for m in (2, 3):
            space = TensorSpace(N, m)
            A = symmetrizer(space, True)
            B = symmetrizer(space, False)
            assert smat_eq(smat_mul(A, A), A)
            assert smat_eq(smat_mul(B, B), B)
            assert not smat_mul(A, B)
            assert sum(c for (r, q), c in A.items() if r == q) == math.comb(N, m)
            assert sum(c for (r, q), c in B.items() if r == q) == math.comb(N + m - 1, m)


def test_build_basic_and_guard():
    out = build_basic(SO2, 2)
    assert smat_eq(smat_mul(out["P"][(1, 2)], out["P"][(1, 2)]),
                   smat_identity(out["space"].size))
    from capelli.core import DimensionError

    with pytest.raises(DimensionError):
        guard_cells(4, 5, max_cells=256)


def test_fused_single_factor_is_generator_matrix():
    mat = fused_F(SO3, 1, "column")
    space = TensorSpace(3, 1)
    direct = tm_F(SO3, space, ("u",), 1, lin(("u",), u=1))
    assert cross_equal(mat, direct) is None


def test_fused_two_forms_agree_so2():
    # the constructor asserts the twisted-product form internally
    fused_F(SO2, 2, "column", check_alternative=True)
    fused_F(SO2, 2, "row", check_alternative=True)


def test_classical_points():
    assert classical_point(SO2, "column", 2) == Fraction(1, 2)
    assert classical_point(SP2, "column", 2) == Fraction(3, 2)
    assert classical_point(SO2, "row", 2) == -Fraction(3, 2)
    assert classical_point(SP2, "row", 2) == -Fraction(1, 2)


@pytest.mark.parametrize("ctx,k", [(SO2, 1), (SO3, 1)])
def test_fusion_column_equals_pfaffian_family(ctx, k):
    assert fusion_capelli(ctx, k, "column") == c_k_pfaffian(ctx, k)


@pytest.mark.parametrize("ctx,k", [(SP2, 1), (SP2, 2)])
def test_fusion_row_equals_hafnian_family(ctx, k):
    assert fusion_capelli(ctx, k, "row") == d_k_hafnian(ctx, k)


def test_fusion_column_vanishes_past_rank():
    assert fusion_capelli(SO2, 2, "column").is_zero()


def test_fusion_value_is_central():
    v = fusion_capelli(SO3, 1, "row")
    assert is_central(v, SO3)


def test_trace_invariance_surrogate():
    for ctx in (SO2, SO3, SP2):
        for shape in ("column", "row"):
            assert check_trace_invariance(ctx, 2, shape) is None


def test_verify_relations_all_pass():
    for ctx in (SO2, SP2):
        for cid, ok, witness in verify_relations(ctx, m_max=3):
            assert ok, (cid, witness)


def test_verify_vanishing_all_pass():
    for fam in ("so", "sp"):
        for m in (1, 2):
            for l in (0, 1, 2):
                for cid, ok, witness in verify_vanishing(m, l, 2, fam):
                    assert ok, (cid, witness)


def test_quantum_det_gl1():
    h = quantum_det_gl(1)
    ctx = LieContext("gl", 1)
    assert ucoeffs_eq(h, [UEAElement.E(ctx, 0, 0), UEAElement.scalar(ctx, -1)])


def test_quantum_det_gl2_eigenvalues():
    h = quantum_det_gl(2, "so")
    assert eigenvalue_check_gl(2, (), h) is None
    assert eigenvalue_check_gl(2, (1,), h) is None
    assert eigenvalue_check_gl(2, (2,), h) is None
    assert eigenvalue_check_gl(2, (1, 1), h) is None
    h = quantum_det_gl(2, "sp")
    assert eigenvalue_check_gl(2, (1,), h) is None


def test_sklyanin_scalar_normalization():
    num, den = sklyanin_det(SO2)
    scalar = [c.scalar_part() for c in num]
    # Cbar(u) has scalar part (1/2 - u)(-1/2 - u) relative to its denominator
    from capelli.tensor import _scalar_poly_mul_dense, _trim

    expected = [Fraction(-1, 4), Fraction(0), Fraction(1)]
    assert _trim(scalar) == _trim(_scalar_poly_mul_dense(expected, den))


@pytest.mark.parametrize("ctx", [SO2, SP2])
def test_theorem_62(ctx):
    series = central_series(ctx, "C", ctx.n)
    assert theorem_62_check(ctx, series) is None


def test_generating_function_inversion_small():
    series_c = central_series(SP2, "C", 2)
    series_d = central_series(SP2, "D", 2)
    out = generating_functions(SP2, 2, series_c, series_d)
    assert out["inverse_ok"]


def test_normalized_fused_matrix_is_entrywise_regular():
    # the normalizing factor makes every entry of the fused column
    # divisible by (u - u0) as often as the denominator vanishes there
    from capelli.tensor import ent_scalar_poly_mul, ent_to_ucoeffs, phi_normalizer, ucoeffs_div_linear
    from capelli.tensor import _scalar_div_linear

    ctx = SO2
    mat = fused_F(ctx, 2, "column")
    u0 = classical_point(ctx, "column", 2)
    phi_num, phi_den = phi_normalizer(ctx, "column", 2)
    den = [Fraction(0)] * 3
    for ev, c in mat.den.items():
        den[ev[0]] = c
    from capelli.tensor import _scalar_poly_mul_dense, _trim

    phid = [Fraction(0), Fraction(0)]
    for ev, c in phi_den.items():
        phid[ev[0]] = c
    full_den = _trim(_scalar_poly_mul_dense(_trim(den), _trim(phid)))
    for r, row in mat.rows.items():
        for cidx, e in row.items():
            num = ent_to_ucoeffs(ctx, ent_scalar_poly_mul(e, phi_num))
            d = list(full_den)
            while sum(c * u0 ** t for t, c in enumerate(d)) == 0:
                d = _scalar_div_linear(d, u0)
                num = ucoeffs_div_linear(num, u0)  # raises if a pole survived
