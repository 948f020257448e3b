"""Tests for the pre-quasifield families: multiplication, two-route
division, axiom sweeps, and the strict formula-vs-oracle construction gate.
"""

import numpy as np
import pytest

from spreadbent.field import field_ctx
from spreadbent.polynomials import (
    cond_quad_trace_inverse_eval,
    invert_linearized,
    square_trace_map,
)
from spreadbent.quasifield import (
    AXIOM_MAX_M,
    ConsistencyError,
    FieldFamily,
    KantorFamily,
    PreQuasifield,
    make_family,
    verify_axioms,
)


def small_families(m):
    """One instance of each family at odd m (beta = 1, k = 1)."""
    return [
        make_family("field", m),
        make_family("dm", m, k=1),
        make_family("knuth", m, beta=1),
        make_family("kantor", m),
    ]


# ---------------------------------------------------------------------------
# construction and validation


def test_make_family_validation():
    with pytest.raises(ValueError):
        make_family("nope", 3)
    with pytest.raises(ValueError):
        make_family("dm", 3)  # k missing
    with pytest.raises(ValueError):
        make_family("knuth", 3)  # beta missing
    with pytest.raises(ValueError):
        make_family("field", 3, k=1)  # stray parameter
    with pytest.raises(ValueError):
        make_family("kantor", 3, beta=1)  # stray parameter


def test_dm_parameter_constraints():
    with pytest.raises(ValueError):
        make_family("dm", 4, k=1)  # even m
    with pytest.raises(ValueError):
        make_family("dm", 5, k=2)  # even k
    with pytest.raises(ValueError):
        make_family("dm", 5, k=5)  # k = m
    with pytest.raises(ValueError):
        make_family("dm", 9, k=3)  # gcd(3, 9) = 3


def test_knuth_kantor_need_odd_m():
    with pytest.raises(ValueError):
        make_family("knuth", 4, beta=1)
    with pytest.raises(ValueError):
        make_family("kantor", 4)
    with pytest.raises(ValueError):
        make_family("knuth", 3, beta=0)


def test_dm_derived_params():
    Q = make_family("dm", 3, k=1)
    assert Q.params == {"k": 1, "e": 2, "d": 1}
    Q = make_family("dm", 5, k=3)
    assert Q.e == (1 << 4) - (1 << 2) - 1
    assert (Q.d * ((1 << 3) - 1)) % ((1 << 10) - 1) == 1


def test_strict_default_tracks_m():
    assert make_family("field", 3).strict
    assert make_family("kantor", 7).strict
    assert not make_family("kantor", 9).strict
    assert not make_family("field", 5, strict=False).strict


# ---------------------------------------------------------------------------
# pinned multiplication values


@pytest.mark.parametrize("m", [3, 5])
def test_zero_laws(m):
    for Q in small_families(m):
        for v in range(Q.ctx.order):
            assert Q.qmul(0, v) == 0
            assert Q.qmul(v, 0) == 0


def test_kantor_left_identity():
    Q = make_family("kantor", 5)
    for y in range(32):
        assert Q.qmul(1, y) == y  # trace terms cancel


def test_knuth_square_on_diagonal():
    Q = make_family("knuth", 5, beta=7)
    for x in range(32):
        assert Q.qmul(x, x) == Q.ctx.sqr(x)  # symmetric trace terms cancel


def test_dm_m3_k1_collapses_to_cube():
    Q = make_family("dm", 3, k=1)
    ctx = Q.ctx
    for a in range(8):
        for x in range(8):
            assert Q.qmul(a, x) == ctx.mul(ctx.pow(a, 3), x)


def test_dm_m3_k1_division_closed_form():
    Q = make_family("dm", 3, k=1)
    ctx = Q.ctx
    for x in range(1, 8):
        for y in range(8):
            assert Q.qdiv_formula(y, x) == ctx.mul(ctx.sqr(x),
                                                   ctx.inv(ctx.sqr(y)))
    alpha = 0b010
    a = Q.qdiv_formula(alpha, 1)
    assert a == ctx.pow(alpha, 5)
    assert Q.qmul(a, 1) == alpha


# ---------------------------------------------------------------------------
# division: formula vs oracle vs tables


@pytest.mark.parametrize("m", [3, 5])
def test_division_conventions(m):
    for Q in small_families(m):
        q = Q.ctx.order
        for x in range(1, q):
            assert Q.qdiv_formula(0, x) == 0
            assert Q.qdiv_oracle(0, x) == 0
        for y in range(q):
            assert Q.qdiv_formula(y, 0) == 0
            assert Q.qdiv_oracle(y, 0) == 0


def test_field_division_is_field_division():
    Q = make_family("field", 4)
    ctx = Q.ctx
    for x in range(16):
        for y in range(16):
            assert Q.qdiv_formula(y, x) == ctx.mul(y, ctx.inv(x))
            assert Q.qdiv_oracle(y, x) == ctx.mul(y, ctx.inv(x))


@pytest.mark.parametrize("m", [3, 5])
def test_formula_matches_oracle_everywhere(m):
    for Q in small_families(m):
        D = Q.div_table_formula()
        assert np.array_equal(D, Q.div_table_oracle())
        q = Q.ctx.order
        for y in range(q):
            for x in range(q):
                assert Q.qdiv_formula(y, x) == D[y, x]
        for y in range(q):
            assert Q.qdiv_oracle(y, 3) == D[y, 3]


def test_knuth_all_beta_m3():
    for beta in range(1, 8):
        Q = make_family("knuth", 3, beta=beta)  # strict sweep runs here
        assert np.array_equal(Q.div_table_formula(), Q.div_table_oracle())


@pytest.mark.parametrize("m,k", [(5, 3), (7, 3), (7, 5)])
def test_dm_larger_parameters(m, k):
    Q = make_family("dm", m, k=k)  # strict sweep runs here
    ctx = Q.ctx
    for a in (1, 2, ctx.order - 1):
        for x in (1, 5, ctx.order - 2):
            assert Q.qdiv_formula(Q.qmul(a, x), x) == a


@pytest.mark.parametrize("m", [3, 5])
def test_round_trip_both_ways(m):
    for Q in small_families(m):
        q = Q.ctx.order
        for x in range(1, q):
            for a in range(q):
                assert Q.qdiv_formula(Q.qmul(a, x), x) == a
            for y in range(q):
                assert Q.qmul(Q.qdiv_formula(y, x), x) == y


def test_mult_table_matches_scalar():
    for Q in small_families(3):
        T = Q.mult_table()
        for a in range(8):
            for x in range(8):
                assert T[a, x] == Q.qmul(a, x)
        assert not T.flags.writeable


def test_oracle_detects_broken_multiplication():
    class Broken(FieldFamily):
        _mult_table_impl = PreQuasifield._mult_table_impl  # honour qmul

        def qmul(self, a, x):
            return 0 if x else 0

    Q = Broken(field_ctx(3), strict=False)
    with pytest.raises(ConsistencyError):
        Q.div_table_oracle()
    with pytest.raises(ConsistencyError):
        Q.qdiv_oracle(1, 1)


def test_strict_gate_rejects_wrong_formula():
    class WrongDivision(KantorFamily):
        def qdiv_formula(self, y, x):
            return super().qdiv_formula(y, x) ^ (1 if x else 0)

        def _div_table_impl(self):
            q = self.ctx.order
            return np.array([[self.qdiv_formula(y, x) for x in range(q)]
                             for y in range(q)], dtype=np.int32)

    with pytest.raises(ConsistencyError):
        WrongDivision(field_ctx(3))
    WrongDivision(field_ctx(3), strict=False)  # gate off: constructs


# ---------------------------------------------------------------------------
# parametric map


def test_parametric_map():
    Q = make_family("kantor", 5)
    q = Q.ctx.order
    F0 = Q.parametric_map(0)
    assert all(F0(a) == 0 for a in range(q))
    for x in (1, 7, 19):
        Fx = Q.parametric_map(x)
        assert len({Fx(a) for a in range(q)}) == q
        for a in range(q):
            assert Q.qdiv_formula(Fx(a), x) == a


# ---------------------------------------------------------------------------
# axiom sweeps


def test_axioms_field_m3():
    rep = verify_axioms(make_family("field", 3))
    assert rep.passed and rep.pre_semifield
    assert rep.as_dict()["left_distributive"]


def test_axioms_dm_is_not_a_pre_semifield():
    rep = verify_axioms(make_family("dm", 5, k=3))
    assert rep.passed
    assert not rep.right_distributive
    assert not rep.pre_semifield


def test_axioms_knuth_kantor_are_pre_semifields():
    for Q in (make_family("knuth", 3, beta=1), make_family("kantor", 3),
              make_family("knuth", 5, beta=11), make_family("kantor", 5)):
        rep = verify_axioms(Q)
        assert rep.passed and rep.pre_semifield


def test_axiom_report_fields():
    rep = verify_axioms(make_family("dm", 3, k=1))
    d = rep.as_dict()
    assert d["family"] == "dm" and d["m"] == 3 and d["k"] == 1
    assert d["passed"] is True


def test_axiom_sweep_guard():
    Q = make_family("kantor", 9)
    assert Q.ctx.m > AXIOM_MAX_M
    with pytest.raises(ValueError):
        verify_axioms(Q)


def test_axiom_sweep_flags_broken_distributivity():
    class Crooked(FieldFamily):
        _mult_table_impl = PreQuasifield._mult_table_impl  # honour qmul

        def qmul(self, a, x):
            v = self.ctx.mul(a, x)
            return v ^ 1 if (a == 3 and x == 3) else v

    rep = verify_axioms(Crooked(field_ctx(3), strict=False))
    assert not rep.left_distributive
    assert not rep.right_distributive


# ---------------------------------------------------------------------------
# cross-route agreement with the lemma-level machinery


@pytest.mark.parametrize("m", [3, 5])
def test_knuth_division_matches_kernel_composition(m):
    ctx = field_ctx(m)
    for beta in (1, ctx.generator):
        Q = make_family("knuth", m, beta=beta)
        for x in range(1, ctx.order):
            c = ctx.inv(ctx.mul(beta, x))
            x2inv = ctx.inv(ctx.sqr(x))
            for y in range(ctx.order):
                via_kernel = ctx.mul(
                    ctx.inv(beta),
                    cond_quad_trace_inverse_eval(ctx, c, ctx.mul(y, x2inv)))
                assert Q.qdiv_formula(y, x) == via_kernel


@pytest.mark.parametrize("m", [3, 5])
def test_kantor_division_matches_kernel_inverse(m):
    ctx = field_ctx(m)
    Q = make_family("kantor", m)
    for x in range(1, ctx.order):
        kernel_inv = invert_linearized(square_trace_map(ctx, x))
        for y in range(ctx.order):
            assert Q.qdiv_formula(y, x) == kernel_inv(y)


def test_vectorized_div_tables_match_scalar_m7():
    # one larger sweep to pin the numpy paths against the scalar ones
    for Q in (make_family("dm", 7, k=3), make_family("knuth", 7, beta=1),
              make_family("kantor", 7)):
        D = Q.div_table_formula()
        q = Q.ctx.order
        for y in (0, 1, 2, 63, 100, q - 1):
            for x in (0, 1, 2, 63, 100, q - 1):
                assert D[y, x] == Q.qdiv_formula(y, x)
