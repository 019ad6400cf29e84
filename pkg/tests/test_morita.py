import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corita.algebra import field_algebra, ideal, matrix_algebra, product_algebra
from corita.bimodule import Bimodule, regular_module, tensor_over
from corita.corita_error import AxiomViolationError, HypothesisError, SchemaError
from corita.exactlin import QQ, Field, Mat, Subspace, is_iso
from corita.morita import (
    MoritaContext,
    bar_context,
    connecting,
    firm_ideal_dualbasis,
    image_rings,
    kato_ohtake_verify,
    matrix_context,
    module_catalog,
    moritafirm_checks,
    omega,
    omegabeta_check,
    projection_context,
    reduce_by_ideal,
    reduction_conditions,
    scaled,
    second_reduced,
    strictness_report,
    swap,
    unit_map,
    validate_context,
    zero_context,
)
from corita.report import Report


def first_factor(kk=None):
    kk = kk or product_algebra(2)
    return ideal(kk, [(1, 0)], 'left')


def whole(A):
    return ideal(A, Subspace.whole(A.field, A.dim), 'left')


class TestValidate:
    def test_matrix_context(self):
        assert validate_context(matrix_context()).passed

    def test_projection_context(self):
        assert validate_context(projection_context()).passed

    def test_zero(self):
        assert validate_context(zero_context(field_algebra(), matrix_algebra(2))).passed

    def test_scaled_sigma_breaks_squares(self):
        ''' (p tau q) p' = p (q sigma p') fails once sigma alone is scaled. '''
        ctx = scaled(matrix_context(), 2)
        rep = validate_context(ctx)
        assert rep.find('wt').passed and rep.find('bt').passed
        assert rep.find('P square').failed

    def test_square_witness(self):
        ctx = projection_context()
        bad = MoritaContext(ctx.A, ctx.Ap, ctx.P, ctx.Q, Mat(QQ, [[2]]), ctx.sigma)
        sq = validate_context(bad).find('P square')
        assert sq.failed
        assert sq.witness == [[0, 0, 0]]

    def test_sides(self):
        ctx = matrix_context()
        rep = validate_context(swap(ctx))
        assert rep.passed
        broken = MoritaContext(ctx.A, ctx.Ap, ctx.Q, ctx.P, ctx.sigma, ctx.tau)
        assert validate_context(broken).find('sides').failed

    @settings(max_examples=10, deadline=None)
    @given(st.integers(1, 6))
    def test_scaling_both_sides(self, c):
        ctx = matrix_context()
        both = MoritaContext(ctx.A, ctx.Ap, ctx.P, ctx.Q, ctx.tau.scale(c), ctx.sigma.scale(c))
        assert validate_context(both).passed


class TestImageRings:
    def test_matrix(self):
        I, J = image_rings(matrix_context())
        assert (I.dim, J.dim) == (1, 4)

    def test_projection(self):
        I, J = image_rings(projection_context())
        assert I.dim == 1
        assert J.subspace == Subspace(QQ, 2, [(1, 0)])

    def test_zero(self):
        I, J = image_rings(zero_context(field_algebra(), field_algebra()))
        assert I.dim == 0 and J.dim == 0

    def test_bar_context_is_valid(self):
        bar = bar_context(projection_context())
        assert bar.Ap.dim == 1
        assert validate_context(bar).passed
        assert strictness_report(bar).find('sigma surjective').passed


class TestOmega:
    def test_regular(self):
        ctx = matrix_context()
        _, w = omega(ctx, regular_module(ctx.A, 'right'))
        assert is_iso(w)

    def test_zero_action(self):
        ctx = matrix_context()
        M = Bimodule(QQ, 1, right=ctx.A, right_action=[Mat.zeros(QQ, 1, 1)])
        _, w = omega(ctx, M)
        assert w.is_zero()
        assert not is_iso(w)

    def test_firm_tensor(self):
        ctx = matrix_context()
        reg = regular_module(ctx.A)
        M = tensor_over(reg, ctx.A, reg).right_only()
        _, w = omega(ctx, M)
        assert is_iso(w)

    def test_agreement(self):
        rep = omegabeta_check(projection_context())
        assert rep.passed
        assert any('not firm' in r.detail for r in rep.items)


class TestReduce:
    def test_projection(self):
        rc = reduce_by_ideal(projection_context(), first_factor())
        assert rc.W.dim == 1
        assert rc.lemma.passed
        assert validate_context(rc.context).passed
        assert rc.strictness.passed

    def test_matrix_whole(self):
        ctx = matrix_context()
        rc = reduce_by_ideal(ctx, whole(ctx.Ap))
        assert rc.context.P.dim == 2 and rc.context.Q.dim == 2
        assert rc.strictness.passed

    def test_zero_ideal(self):
        ctx = projection_context()
        rc = reduce_by_ideal(ctx, ideal(ctx.Ap, [], 'left'))
        assert rc.W.dim == 0
        assert rc.context.P.dim == 0

    def test_outside_image(self):
        ctx = projection_context()
        with pytest.raises(HypothesisError, match='not contained'):
            reduce_by_ideal(ctx, whole(ctx.Ap))

    def test_not_idempotent(self):
        ctx = projection_context()
        D = MoritaContext(ctx.A, ctx.Ap, ctx.P, ctx.Q, ctx.tau, ctx.sigma)
        with pytest.raises(HypothesisError):
            reduce_by_ideal(D, ideal(field_algebra(), [(1,)], 'left'))


class TestDoubleReduction:
    @pytest.mark.parametrize('ctx, pick', [
        (projection_context(), first_factor),
        (matrix_context(), whole),
    ])
    def test_reducing_on_both_sides_commutes(self, ctx, pick):
        once = reduce_by_ideal(ctx, pick(ctx.Ap)).context
        back = reduce_by_ideal(swap(once), whole(once.A)).context
        twice = swap(back)
        assert twice.A == once.A
        assert twice.Ap == once.Ap
        assert (twice.P.dim, twice.Q.dim) == (once.P.dim, once.Q.dim)
        assert strictness_report(twice).passed == strictness_report(once).passed
        for M in module_catalog(once.A):
            assert tensor_over(M, twice.A, twice.P).dim == tensor_over(M, once.A, once.P).dim
        for N in module_catalog(once.Ap):
            assert tensor_over(N, twice.Ap, twice.Q).dim == tensor_over(N, once.Ap, once.Q).dim


class TestSecondReduced:
    def test_projection(self):
        ctx2 = second_reduced(projection_context(), first_factor())
        assert (ctx2.A.dim, ctx2.Ap.dim) == (1, 1)
        assert validate_context(ctx2).passed
        assert connecting(ctx2).strict

    def test_matrix(self):
        ctx = matrix_context()
        ctx2 = second_reduced(ctx, whole(ctx.Ap))
        assert ctx2.Ap.dim == 4
        assert validate_context(ctx2).passed
        assert strictness_report(ctx2).passed

    def test_strictness_is_checked(self, monkeypatch):
        broken = Report.group('strictness', [Report.check('tau bijective', False, '1 -> 1')])
        monkeypatch.setattr('corita.morita.strictness_report', lambda ctx: broken)
        with pytest.raises(AxiomViolationError, match='not strict') as e:
            second_reduced(projection_context(), first_factor())
        assert e.value.report.find('tau bijective').failed


class TestKatoOhtake:
    def test_projection(self):
        rep = kato_ohtake_verify(projection_context(), first_factor())
        assert rep.passed

    def test_matrix(self):
        ctx = matrix_context()
        assert kato_ohtake_verify(ctx, whole(ctx.Ap)).passed

    def test_empty_catalogs(self):
        ctx = projection_context()
        rep = kato_ohtake_verify(ctx, first_factor(), [], [])
        assert rep.passed


class TestReductionConditions:
    def test_discovery(self):
        rep = reduction_conditions(projection_context())
        assert rep.passed
        assert rep.find('discovery').witness == 1

    def test_matrix(self):
        rep = reduction_conditions(matrix_context())
        assert rep.passed
        assert rep.find("B'").detail == 'dim 4'

    def test_zero_ideal(self):
        ctx = projection_context()
        assert reduction_conditions(ctx, ideal(ctx.Ap, [], 'left')).passed


class TestFirmRingTheorem:
    def test_matrix(self):
        ctx = matrix_context()
        rep = moritafirm_checks(ctx)
        assert rep.passed, rep.render()
        u, T = unit_map(ctx)
        assert connecting(ctx).tau @ u == Mat.identity(QQ, 1)
        assert T.dim == 1

    def test_second_reduced_projection(self):
        ctx2 = second_reduced(projection_context(), first_factor())
        assert moritafirm_checks(ctx2).passed

    def test_tau_not_surjective(self):
        ctx = zero_context(field_algebra(), field_algebra())
        assert moritafirm_checks(ctx).verdict == 'hypotheses-unmet'

    def test_first_ring_not_firm(self):
        ctx = swap(projection_context())
        assert moritafirm_checks(ctx).verdict == 'hypotheses-unmet'

    def test_unit_map_needs_surjective_tau(self):
        with pytest.raises(HypothesisError, match='surjective'):
            unit_map(zero_context(field_algebra(), field_algebra()))


class TestFirmIdealDualBasis:
    def test_projection(self):
        ctx = projection_context()
        db = firm_ideal_dualbasis(ctx, whole(ctx.A))
        assert db.report.passed, db.report.render()
        assert db.RP.dim == 1

    def test_matrix(self):
        ctx = matrix_context()
        db = firm_ideal_dualbasis(ctx, whole(ctx.A))
        assert db.report.passed, db.report.render()
        assert db.X.dim == 1

    def test_non_unital(self):
        bar = bar_context(projection_context())
        with pytest.raises(HypothesisError, match='unital'):
            firm_ideal_dualbasis(bar, whole(bar.A))

    def test_outside_image(self):
        kk = product_algebra(2)
        with pytest.raises(HypothesisError, match='not contained'):
            firm_ideal_dualbasis(zero_context(kk, field_algebra()), first_factor(kk))


class TestJson:
    def test_round_trip(self):
        ctx = matrix_context()
        back = MoritaContext.from_json(ctx.to_json())
        assert back.tau == ctx.tau and back.sigma == ctx.sigma
        assert back.P == ctx.P
        assert validate_context(back).passed

    def test_bad_shape(self):
        data = projection_context().to_json()
        data['wt'] = Mat(QQ, [[1, 0]]).to_json()
        with pytest.raises(SchemaError, match='wt'):
            MoritaContext.from_json(data)

    def test_missing(self):
        data = projection_context().to_json()
        del data['bt']
        with pytest.raises(SchemaError):
            MoritaContext.from_json(data)

    def test_field_parameter(self):
        ctx = matrix_context(2, Field(3))
        assert validate_context(ctx).passed
