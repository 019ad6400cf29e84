import dataclasses

import pytest

from corita.algebra import field_algebra, product_algebra
from corita.bimodule import Bimodule, default_catalog, regular_module
from corita.corita_error import AxiomViolationError, DimensionMismatchError, HypothesisError
from corita.coring import (
    Comodule,
    comodule_catalog,
    group_hopf_algebra,
    hopf_module_catalog,
    hopf_module_comodule,
    hopf_module_coring,
    matrix_comodule,
    regular_comodule,
    split_kxk,
    sweedler_coring,
    sweedler_descent_comodule,
    trivial_coring,
    validate_comodule,
    zero_comodule,
)
from corita.exactlin import QQ, Mat, is_iso, rank
from corita.galois import (
    B_structure_theorem,
    CoringExtension,
    SigmaAdjunction,
    comatrix,
    construct_R,
    context_A_mod,
    context_Sigma,
    cosep_strong_structure,
    datum_over,
    dual_ring_comodule,
    equalizer_purity,
    extension_checks,
    extension_context,
    galois_checks,
    hopf_extension,
    natural_iso_check,
    right_adjoint_comparison,
    ring_extension_adjunction,
    trivial_extension,
    two_comodule_context,
)
from corita.morita import validate_context


def trivial_sigma():
    K = trivial_coring(product_algebra(2))
    return K, regular_comodule(K)


def hopf_sigma():
    hopf = group_hopf_algebra(2)
    K = hopf_module_coring(hopf)
    return hopf, K, hopf_module_comodule(hopf, K)


class TestModuleContext:
    def test_vector_space(self):
        k = field_algebra()
        V = Bimodule(QQ, 2, right=k, right_action=[Mat.identity(QQ, 2)], label='k2')
        mc = context_A_mod(V)
        assert mc.context.A.dim == 4
        assert mc.dual.dim == 2
        assert mc.image.dim == 4
        assert validate_context(mc.context).passed

    def test_regular(self):
        A = product_algebra(2)
        mc = context_A_mod(regular_module(A, 'right'))
        assert mc.context.A.dim == 2
        assert mc.image.dim == 2

    def test_needs_right_action(self):
        with pytest.raises(DimensionMismatchError, match='right module'):
            context_A_mod(regular_module(product_algebra(2), 'left'))


class TestComoduleContext:
    def test_trivial(self):
        K, S = trivial_sigma()
        sc = context_Sigma(S)
        assert sc.report.passed
        assert sc.context.A.dim == 2
        assert sc.context.Ap.dim == 2
        _, B = sc.images
        assert B.dim == 2

    def test_hopf(self):
        _, K, S = hopf_sigma()
        sc = context_Sigma(S)
        assert sc.report.passed
        assert sc.context.A.dim == 1

    def test_zero(self):
        K, _ = trivial_sigma()
        sc = context_Sigma(zero_comodule(K))
        assert sc.context.P.dim == 0
        assert sc.Q.dim == 0
        assert sc.report.passed


class TestConstructR:
    def test_trivial_coring(self):
        _, S = trivial_sigma()
        datum = construct_R(S)
        assert datum.R.dim == 2
        assert datum.j is not None
        assert datum.report.passed

    def test_hopf(self):
        _, _, S = hopf_sigma()
        datum = construct_R(S)
        assert datum.R.dim == 1
        assert datum.report.passed

    def test_zero_comodule(self):
        K, _ = trivial_sigma()
        datum = construct_R(zero_comodule(K))
        assert datum.is_zero
        assert datum.report.verdict == 'hypotheses-unmet'
        assert datum.report.find('firm ideal') is not None

    def test_matrix_comodule(self):
        S = matrix_comodule(2)
        assert validate_comodule(S).passed
        datum = construct_R(S)
        assert datum.R.dim == 1
        assert datum.report.passed

    def test_over_given_ring(self):
        _, S = trivial_sigma()
        datum = construct_R(S)
        again = datum_over(S, datum.R, datum.iota)
        assert again.report.passed
        assert again.j is not None
        assert again.Sigma_R.dim == datum.Sigma_R.dim


class TestComatrix:
    def test_hopf_can_bijective(self):
        _, K, S = hopf_sigma()
        cm = comatrix(construct_R(S))
        assert cm.report.passed
        assert cm.coring.dim == 4
        assert rank(cm.can) == 4
        assert is_iso(cm.can)

    def test_trivial(self):
        K, S = trivial_sigma()
        cm = comatrix(construct_R(S))
        assert cm.report.passed
        assert is_iso(cm.can)

    def test_matrix_coalgebra(self):
        cm = comatrix(construct_R(matrix_comodule(2)))
        assert cm.coring.dim == 4
        assert is_iso(cm.can)

    def test_zero_datum(self):
        K, _ = trivial_sigma()
        cm = comatrix(construct_R(zero_comodule(K)))
        assert cm.coring.dim == 0
        assert rank(cm.can) == 0

    def test_needs_dual_basis(self):
        _, S = trivial_sigma()
        datum = dataclasses.replace(construct_R(S), j=None)
        with pytest.raises(HypothesisError, match='dual basis'):
            comatrix(datum)


class TestGaloisChecks:
    def test_hopf(self):
        hopf, K, S = hopf_sigma()
        cm = comatrix(construct_R(S))
        rep = galois_checks(cm, hopf_module_catalog(hopf, K))
        assert rep.find('can surjective').passed
        assert rep.find('can bijective').passed
        assert rep.find('bijective counits force a bijective can').passed
        assert rep.find('adjunction').passed

    def test_hopf_equivalence(self):
        hopf, K, S = hopf_sigma()
        rep = galois_checks(comatrix(construct_R(S)), hopf_module_catalog(hopf, K))
        assert rep.find('Σ faithfully flat over R').detail.startswith('True')
        assert rep.find('equivalence').passed
        assert rep.passed

    def test_trivial_equivalence(self):
        _, S = trivial_sigma()
        rep = galois_checks(comatrix(construct_R(S)))
        assert rep.find('equivalence').passed

    def test_zero_not_surjective(self):
        K, _ = trivial_sigma()
        cm = comatrix(construct_R(zero_comodule(K)))
        rep = galois_checks(cm)
        surj = rep.find('can surjective')
        assert surj.failed
        assert 'not surjective' in surj.detail
        assert rep.find('equivalence').verdict == 'hypotheses-unmet'
        assert rep.find('bijective counits force a bijective can').passed


class TestAdjunction:
    def test_trivial_units_and_counits(self):
        K, S = trivial_sigma()
        adj = SigmaAdjunction.of(construct_R(S))
        for M in [S, regular_comodule(K), zero_comodule(K)]:
            rep = adj.comodule_report(M)
            assert rep.find('counit bijective').passed
        N = regular_module(adj.R, 'right')
        rep = adj.module_report(N)
        assert rep.passed

    def test_F_is_a_comodule(self):
        _, _, S = hopf_sigma()
        adj = SigmaAdjunction.of(construct_R(S))
        FN = adj.F(regular_module(adj.R, 'right'))
        assert FN.dim == S.dim
        assert validate_comodule(FN).passed

    def test_extension_of_scalars(self):
        _, S = trivial_sigma()
        rep = ring_extension_adjunction(construct_R(S))
        assert rep.passed
        assert rep.find('firm over T').passed

    def test_extension_of_scalars_zero(self):
        K, _ = trivial_sigma()
        rep = ring_extension_adjunction(construct_R(zero_comodule(K)))
        assert rep.verdict == 'hypotheses-unmet'


class TestTwoComodules:
    def test_same_comodule(self):
        _, S = trivial_sigma()
        tc = two_comodule_context(S, S)
        assert tc.report.passed
        ni = natural_iso_check(tc)
        assert ni.B.dim == 2
        assert ni.report.passed

    def test_hopf_pair(self):
        hopf, K, S = hopf_sigma()
        S2 = hopf_module_catalog(hopf, K)[1]
        tc = two_comodule_context(S, S2)
        assert tc.report.passed
        assert tc.context.Ap.dim == 4

    def test_zero_second(self):
        K, S = trivial_sigma()
        tc = two_comodule_context(S, zero_comodule(K))
        ni = natural_iso_check(tc)
        assert ni.reduced is None
        assert ni.report.verdict == 'info'


class TestStructureOverB:
    def test_trivial_coring(self):
        _, S = trivial_sigma()
        rep = B_structure_theorem(S)
        assert rep.find('conditions').passed
        assert rep.find('gamma colinear').passed
        assert rep.find('B-C bicomodule').passed

    def test_zero_not_dense(self):
        K, _ = trivial_sigma()
        rep = B_structure_theorem(zero_comodule(K))
        assert rep.find('B dense in *C').failed
        assert rep.find('gamma colinear') is None

    def test_dual_ring_comodule(self):
        K, _ = trivial_sigma()
        assert validate_comodule(dual_ring_comodule(K)).passed

    def test_right_adjoint(self):
        K, S = trivial_sigma()
        datum = construct_R(S)
        for X in default_catalog(K.A, 'right'):
            assert right_adjoint_comparison(datum.Sigma_R, X).passed


class TestExtension:
    def test_trivial_extension_corners(self):
        K, S = trivial_sigma()
        ec = extension_context(trivial_extension(K), S)
        sc = context_Sigma(S)
        assert ec.context.A.dim == sc.context.A.dim
        assert ec.context.Ap.dim == sc.context.Ap.dim
        assert ec.context.P.dim == S.dim
        assert ec.report.passed

    def test_trivial_extension_checks(self):
        K, S = trivial_sigma()
        rep = extension_checks(extension_context(trivial_extension(K), S))
        assert rep.find('hypotheses').passed
        assert rep.find('can_N bijective').passed

    def test_zero_comodule_unmet(self):
        K, _ = trivial_sigma()
        rep = extension_checks(extension_context(trivial_extension(K), zero_comodule(K)))
        assert rep.find('hypotheses not satisfied').verdict == 'hypotheses-unmet'

    def test_hopf_extension_axioms(self):
        hopf, K, _ = hopf_sigma()
        ext = hopf_extension(hopf, K)
        assert ext.validate().passed

    def test_trivial_extension_pure(self):
        K, _ = trivial_sigma()
        pure = trivial_extension(K).validate().find('pure')
        assert pure.passed
        assert len(pure.items) == len(comodule_catalog(K))

    def test_hopf_extension_pure(self):
        hopf, K, S = hopf_sigma()
        pure = hopf_extension(hopf, K).validate([S, regular_comodule(K)]).find('pure')
        assert pure.passed
        assert all('after ⊗ D⊗D' in r.detail for r in pure.items)

    def test_collapsing_coaction_is_not_pure(self):
        K, S = trivial_sigma()
        flat = Comodule(K, S.M.relabel('flat'), Mat.zeros(QQ, S.carrier.dim, S.dim))
        rep = equalizer_purity(flat, 1)
        assert rep.failed
        assert rep.witness['injective rank'] == 0
        with pytest.raises(AxiomViolationError, match='not pure') as e:
            extension_context(trivial_extension(K), S, [S, flat])
        assert e.value.report.find('flat').failed

    def test_bad_shape(self):
        K, _ = trivial_sigma()
        ext = trivial_extension(K)
        with pytest.raises(DimensionMismatchError, match='coaction'):
            CoringExtension(K, ext.D, Mat.identity(QQ, 1))


class TestStrongStructure:
    def test_sweedler_descent(self):
        sw = sweedler_coring(*split_kxk())
        S = sweedler_descent_comodule(sw)
        datum = construct_R(S)
        assert datum.R.dim == 1
        rep = cosep_strong_structure(comatrix(datum), sw.witness)
        assert rep.find('can bijective').passed
        assert rep.find('fully faithful').passed
        assert rep.find('equivalence').passed

    def test_hopf_not_surjective_when_zero(self):
        K, _ = trivial_sigma()
        rep = cosep_strong_structure(comatrix(construct_R(zero_comodule(K))))
        assert rep.verdict == 'hypotheses-unmet'
