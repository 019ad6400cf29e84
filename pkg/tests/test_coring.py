import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corita.algebra import dual_numbers, ideal, matrix_algebra, null_algebra, product_algebra
from corita.bimodule import regular_module
from corita.corita_error import (
    AxiomViolationError,
    DimensionMismatchError,
    HypothesisError,
    InvalidOperationError,
    SchemaError,
)
from corita.coring import (
    Comodule,
    Coring,
    CosepWitness,
    checked_coring,
    comodule_as_module,
    comodule_catalog,
    comodule_end,
    comodule_sum,
    coring_from_firm_ideal,
    cosep_action_report,
    cosep_category_iso,
    cosep_tensor_iso,
    coseparability_solve,
    cotensor,
    counit_image_firmness,
    convolution_algebra,
    dual_coalgebra,
    dual_ring,
    dual_ring_action_check,
    firm_ideal_adjunction,
    firm_ideal_from_coring,
    firm_module_comodule,
    free_comodule,
    group_hopf_algebra,
    hopf_module_catalog,
    hopf_module_comodule,
    hopf_module_coring,
    idempotent_image,
    regular_comodule,
    split_kxk,
    sweedler_coring,
    sweedler_descent_comodule,
    trivial_coring,
    validate_comodule,
    validate_coring,
    zero_comodule,
)
from corita.exactlin import QQ, Field, Mat


def sweedler():
    return sweedler_coring(*split_kxk())


def first_factor():
    return ideal(product_algebra(2), [(1, 0)], 'two-sided')


class TestCoring:
    def test_trivial(self):
        K = trivial_coring(matrix_algebra(2))
        assert K.dim == 4
        assert validate_coring(K).passed

    def test_sweedler(self):
        sw = sweedler()
        assert sw.coring.dim == 4
        assert validate_coring(sw.coring).passed

    def test_hopf(self):
        hopf = group_hopf_algebra(2)
        assert hopf.validate().passed
        K = hopf_module_coring(hopf)
        assert K.dim == 4
        assert validate_coring(K).passed

    def test_hopf_z3(self):
        hopf = group_hopf_algebra(3)
        assert hopf.validate().passed
        assert validate_coring(hopf_module_coring(hopf)).passed

    def test_scaled_coproduct_breaks_counit(self):
        K = trivial_coring(matrix_algebra(2))
        bad = Coring(K.A, K.C, K.delta.scale(2), K.eps, 'scaled')
        rep = validate_coring(bad)
        assert rep.failed
        assert rep.find('left counit').failed
        with pytest.raises(AxiomViolationError, match='not a coring'):
            checked_coring(bad)

    def test_non_unital_rejected(self):
        with pytest.raises(HypothesisError, match='unit'):
            trivial_coring(null_algebra(1))

    def test_dual_coalgebra(self):
        assert validate_coring(dual_coalgebra(dual_numbers())).passed
        assert validate_coring(dual_coalgebra(matrix_algebra(2))).passed

    def test_json(self):
        K = sweedler().coring
        back = Coring.from_json(K.to_json())
        assert back.delta == K.delta
        assert back.eps == K.eps
        assert validate_coring(back).passed

    def test_json_errors(self):
        data = trivial_coring(product_algebra(2)).to_json()
        del data['eps']
        with pytest.raises(SchemaError, match='missing'):
            Coring.from_json(data)
        with pytest.raises(SchemaError, match='unknown algebra'):
            Coring.from_json({**data, 'algebra': 'B'})


class TestComodule:
    def test_catalog(self):
        for K in (trivial_coring(matrix_algebra(2)), sweedler().coring):
            for N in comodule_catalog(K):
                assert validate_comodule(N).passed, N.label

    def test_left_regular(self):
        K = sweedler().coring
        assert validate_comodule(regular_comodule(K, 'left')).passed

    def test_free(self):
        K = trivial_coring(product_algebra(2))
        N = free_comodule(K, regular_module(K.A, 'right'))
        assert N.dim == 2
        assert validate_comodule(N).passed

    def test_sum_of_different_corings(self):
        K1, K2 = sweedler().coring, sweedler().coring
        with pytest.raises(DimensionMismatchError, match='same kind'):
            comodule_sum(regular_comodule(K1), regular_comodule(K2))

    def test_broken_coaction(self):
        K = sweedler().coring
        N = regular_comodule(K)
        bad = Comodule(K, N.M, N.rho.scale(3))
        assert validate_comodule(bad).find('counit').failed

    def test_side_schema(self):
        K = trivial_coring(product_algebra(2))
        data = regular_comodule(K).to_json()
        with pytest.raises(SchemaError, match='left or right'):
            Comodule.from_json(K, {**data, 'side': 'middle'})

    def test_sweedler_descent(self):
        sw = sweedler()
        N = sweedler_descent_comodule(sw)
        assert validate_comodule(N).passed
        assert comodule_end(N).dim == 1

    def test_hopf_modules(self):
        hopf = group_hopf_algebra(2)
        K = hopf_module_coring(hopf)
        for N in hopf_module_catalog(hopf, K):
            assert validate_comodule(N).passed, N.label
        assert comodule_end(hopf_module_comodule(hopf, K)).dim == 1


class TestDualRing:
    def test_trivial(self):
        K = trivial_coring(matrix_algebra(2))
        R = dual_ring(K)
        assert R.dim == 4
        assert R.is_unital

    def test_sweedler(self):
        K = sweedler().coring
        assert dual_ring(K).dim == 4
        for N in comodule_catalog(K):
            assert dual_ring_action_check(N).passed, N.label

    def test_grouplike(self):
        assert dual_ring(dual_coalgebra(product_algebra(2))).dim == 2

    def test_left_comodule_is_not_a_right_module(self):
        K = sweedler().coring
        with pytest.raises(InvalidOperationError, match='right'):
            comodule_as_module(regular_comodule(K, 'left'))

    def test_convolution(self):
        K = trivial_coring(matrix_algebra(2))
        conv = convolution_algebra(K)
        assert conv.dim == 1
        assert conv.is_unital

    def test_counit_image(self):
        K = trivial_coring(matrix_algebra(2))
        img = idempotent_image(K, K.eps)
        assert img.report.passed
        assert img.witness.dim == 4
        assert counit_image_firmness(regular_comodule(K)).passed


class TestFirmIdeal:
    def test_coring(self):
        K = coring_from_firm_ideal(first_factor())
        assert K.dim == 1
        assert validate_coring(K).passed

    def test_round_trip(self):
        I = first_factor()
        data = firm_ideal_from_coring(coring_from_firm_ideal(I))
        assert data.ideal.subspace == I.subspace
        assert data.d.shape[1] == 1

    def test_trivial_coring_gives_whole_algebra(self):
        A = matrix_algebra(2)
        data = firm_ideal_from_coring(trivial_coring(A))
        assert data.ideal.dim == A.dim

    def test_counit_not_injective(self):
        with pytest.raises(HypothesisError, match='not injective'):
            firm_ideal_from_coring(sweedler().coring)

    def test_nilpotent(self):
        I = ideal(dual_numbers(), [(0, 1)], 'two-sided')
        with pytest.raises(HypothesisError, match='not firm'):
            coring_from_firm_ideal(I)

    def test_one_sided(self):
        I = ideal(matrix_algebra(2), [(1, 0, 0, 0), (0, 1, 0, 0)], 'right')
        with pytest.raises(HypothesisError, match='two-sided'):
            coring_from_firm_ideal(I)

    def test_firm_module(self):
        I = first_factor()
        N = firm_module_comodule(regular_module(I.algebra, 'right'), I)
        assert validate_comodule(N).passed

    def test_adjunction(self):
        assert firm_ideal_adjunction(first_factor()).passed


class TestCotensor:
    def test_regular(self):
        K = sweedler().coring
        cot = cotensor(regular_comodule(K), regular_comodule(K, 'left'))
        assert cot.dim == K.dim

    def test_zero(self):
        K = sweedler().coring
        assert cotensor(zero_comodule(K), regular_comodule(K, 'left')).dim == 0

    def test_sides(self):
        K = sweedler().coring
        with pytest.raises(InvalidOperationError, match='right and a left'):
            cotensor(regular_comodule(K), regular_comodule(K))


class TestCoseparable:
    def test_trivial(self):
        res = coseparability_solve(trivial_coring(matrix_algebra(2)))
        assert res
        assert res.witness.validate().passed

    def test_sweedler_witness(self):
        sw = sweedler()
        assert sw.witness.validate().passed
        assert coseparability_solve(sw.coring)

    def test_hopf(self):
        res = coseparability_solve(hopf_module_coring(group_hopf_algebra(2)))
        assert res
        assert res.to_report().passed

    def test_grouplike_coalgebra(self):
        assert coseparability_solve(dual_coalgebra(product_algebra(2)))

    def test_dual_numbers_not_coseparable(self):
        res = coseparability_solve(dual_coalgebra(dual_numbers()))
        assert not res
        assert res.witness is None
        assert res.to_report().failed

    @settings(max_examples=10, deadline=None)
    @given(st.integers(-5, 5).filter(lambda s: s != 1))
    def test_scaled_cointegral(self, s):
        sw = sweedler()
        w = CosepWitness.of(sw.coring, sw.witness.gamma.scale(s))
        assert w.validate().find('gamma(c1 ⊗ c2) = eps(c)').failed

    def test_modules_over_c(self):
        sw = sweedler()
        for N in comodule_catalog(sw.coring):
            assert cosep_action_report(N, sw.witness).passed, N.label

    def test_category_iso(self):
        assert cosep_category_iso(sweedler().witness).passed
        res = coseparability_solve(trivial_coring(product_algebra(2)))
        assert cosep_category_iso(res.witness).passed

    def test_tensor_iso(self):
        sw = sweedler()
        K = sw.coring
        rep = cosep_tensor_iso(regular_comodule(K), regular_comodule(K, 'left'), sw.witness)
        assert rep.passed

    def test_finite_field(self):
        F = Field(5)
        sw = sweedler_coring(*split_kxk(F))
        assert validate_coring(sw.coring).passed
        assert sw.witness.validate().passed

    def test_bad_retraction(self):
        B, A, iota, _ = split_kxk()
        with pytest.raises(HypothesisError, match='retraction'):
            sweedler_coring(B, A, iota, Mat(QQ, [[1, 1]]))
