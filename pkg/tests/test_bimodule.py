import pytest

from corita.algebra import (
    Algebra,
    dual_numbers,
    field_algebra,
    ideal,
    matrix_algebra,
    null_algebra,
    product_algebra,
)
from corita.bimodule import (
    BalancedForm,
    Bimodule,
    ModMap,
    associator,
    atoms,
    column_vectors,
    default_catalog,
    direct_sum,
    dorroh_tensor_check,
    extension_of_scalars,
    functor_J,
    hom,
    is_faithfully_flat,
    is_projective,
    module_firmness,
    regular_module,
    row_vectors,
    submodule,
    tensor_lemma_check,
    tensor_over,
    validate_module,
    zero_module,
)
from corita.corita_error import DimensionMismatchError, HypothesisError, SchemaError
from corita.exactlin import QQ, Field, Mat, is_iso


def row_ideal():
    M2 = matrix_algebra(2)
    return ideal(M2, [(1, 0, 0, 0), (0, 1, 0, 0)], 'right')


def zero_acting(R, dim, side):
    z = [Mat.zeros(QQ, dim, dim)] * R.dim
    if side == 'right':
        return Bimodule(QQ, dim, right=R, right_action=z)
    return Bimodule(QQ, dim, left=R, left_action=z)


class TestValidate:
    def test_regular(self):
        assert validate_module(regular_module(matrix_algebra(2))).passed

    def test_rows_and_columns(self):
        M2 = matrix_algebra(2)
        assert validate_module(row_vectors(M2, 2)).passed
        assert validate_module(column_vectors(M2, 2)).passed

    def test_zero_action_breaks_unit(self):
        rep = validate_module(zero_acting(field_algebra(), 1, 'right'))
        assert rep.find('right unit').failed

    def test_shape_checked(self):
        with pytest.raises(DimensionMismatchError):
            Bimodule(QQ, 2, right=field_algebra(), right_action=[Mat.identity(QQ, 3)])


class TestTensorOver:
    def test_field(self):
        k = field_algebra()
        T = tensor_over(regular_module(k, 'right'), k, regular_module(k, 'left'))
        assert T.dim == 1

    def test_rows_columns(self):
        M2 = matrix_algebra(2)
        T = tensor_over(row_vectors(M2, 2), M2, column_vectors(M2, 2))
        assert T.dim == 1
        assert T.origin is not None
        assert T.origin.quotient.ambient == 4

    def test_zero_action(self):
        n = null_algebra(1)
        T = tensor_over(zero_acting(n, 1, 'right'), n, zero_acting(n, 1, 'left'))
        assert T.dim == 1

    def test_action_mismatch(self):
        M2 = matrix_algebra(2)
        with pytest.raises(DimensionMismatchError):
            tensor_over(row_vectors(M2, 2), field_algebra(), column_vectors(M2, 2))

    def test_residual_actions(self):
        M2 = matrix_algebra(2)
        reg = regular_module(M2)
        T = tensor_over(reg, M2, reg)
        assert T.dim == 4
        assert T.left == M2 and T.right == M2
        assert validate_module(T).passed

    def test_associator(self):
        M2 = matrix_algebra(2)
        reg = regular_module(M2)
        T1 = tensor_over(tensor_over(reg, M2, reg), M2, reg)
        T2 = tensor_over(reg, M2, tensor_over(reg, M2, reg))
        assert [a.dim for a in atoms(T1)] == [4, 4, 4]
        assert is_iso(associator(T1, T2))
        assert associator(T2, T1) @ associator(T1, T2) == Mat.identity(QQ, T1.dim)


class TestHom:
    def test_k_linear(self):
        H = hom(Bimodule(QQ, 2), Bimodule(QQ, 1), 'k')
        assert H.dim == 2

    def test_endomorphisms_of_rows(self):
        rows = row_vectors(matrix_algebra(2), 2)
        H = hom(rows, rows, 'right')
        assert H.dim == 1
        E = H.endomorphism_algebra()
        assert E.dim == 1
        assert E.is_unital

    def test_zero_acting(self):
        n = null_algebra(1)
        M = zero_acting(n, 2, 'right')
        assert hom(M, M, 'right').dim == 4

    def test_residual_module(self):
        M2 = matrix_algebra(2)
        H = hom(row_vectors(M2, 2), regular_module(M2), 'right')
        assert H.dim == 2
        mod = H.module()
        assert mod.left == M2
        assert validate_module(mod).passed

    def test_restrict(self):
        H = hom(Bimodule(QQ, 2), Bimodule(QQ, 2), 'k')
        diag = H.restrict(lambda f: Mat(QQ, [[f[0, 1], f[1, 0]]]))
        assert diag.dim == 2
        assert diag.contains(Mat.identity(QQ, 2))


class TestModuleFirmness:
    def test_unital(self):
        M2 = matrix_algebra(2)
        assert module_firmness(regular_module(M2, 'right'), M2).is_firm

    def test_zero_action(self):
        R = row_ideal().algebra
        rep = module_firmness(zero_acting(R, 1, 'right'), R)
        assert rep.image.dim == 0
        assert not rep.is_idempotent
        assert not rep.is_firm

    def test_tensor_with_idempotent_is_firm(self):
        R = row_ideal().algebra
        for M in default_catalog(R):
            T = tensor_over(M, R, regular_module(R))
            assert module_firmness(T, R).is_firm

    def test_left_side(self):
        R = row_ideal().algebra
        rep = module_firmness(regular_module(R, 'left'), R, 'left')
        assert rep.is_idempotent


class TestFunctorJ:
    def test_unital_identity(self):
        M2 = matrix_algebra(2)
        I = ideal(M2, [M2.basis_vector(i) for i in range(4)])
        M = regular_module(I.algebra, 'right')
        J = functor_J(M, I)
        assert J.right_action == M2.right_mults

    def test_first_coordinate(self):
        kk = product_algebra(2)
        I = ideal(kk, [(1, 0)])
        M = regular_module(I.algebra, 'right')
        J = functor_J(M, I)
        assert J.right_action == (Mat(QQ, [[1]]), Mat(QQ, [[0]]))
        assert validate_module(J).passed

    def test_zero(self):
        kk = product_algebra(2)
        I = ideal(kk, [(1, 0)])
        J = functor_J(zero_module(QQ, right=I.algebra), I)
        assert J.dim == 0

    def test_not_firm(self):
        kk = product_algebra(2)
        I = ideal(kk, [(1, 0)])
        with pytest.raises(HypothesisError, match='not a firm'):
            functor_J(zero_acting(I.algebra, 1, 'right'), I)


class TestTensorLemma:
    def test_corner(self):
        kk = product_algebra(2)
        I = ideal(kk, [(1, 0)])
        M = submodule(regular_module(kk, 'right'), I.subspace)
        rep = tensor_lemma_check(M, I, regular_module(kk, 'left'))
        assert rep.passed

    def test_whole(self):
        M2 = matrix_algebra(2)
        I = ideal(M2, [M2.basis_vector(i) for i in range(4)])
        assert tensor_lemma_check(row_vectors(M2, 2), I, column_vectors(M2, 2)).passed

    def test_zero(self):
        kk = product_algebra(2)
        I = ideal(kk, [(1, 0)])
        assert tensor_lemma_check(zero_module(QQ, right=kk), I, regular_module(kk, 'left')).passed

    def test_unmet(self):
        kk = product_algebra(2)
        I = ideal(kk, [(1, 0)])
        rep = tensor_lemma_check(regular_module(kk, 'right'), I, regular_module(kk, 'left'))
        assert rep.verdict == 'hypotheses-unmet'


class TestProjectivity:
    def test_free(self):
        M2 = matrix_algebra(2)
        res = is_projective(regular_module(M2, 'right'))
        assert res
        assert res.splitting is not None

    def test_dual_numbers_simple(self):
        D = dual_numbers()
        k = Bimodule(QQ, 1, right=D, right_action=[Mat.identity(QQ, 1), Mat.zeros(QQ, 1, 1)])
        assert not is_projective(k)

    def test_rows_and_columns(self):
        M2 = matrix_algebra(2)
        assert is_projective(row_vectors(M2, 2), 'right')
        flat = is_faithfully_flat(column_vectors(M2, 2), 'left')
        assert flat.verdict
        assert flat.trace.dim == 4

    def test_simple_not_faithful(self):
        kk = product_algebra(2)
        M = Bimodule(QQ, 1, left=kk, left_action=[Mat.identity(QQ, 1), Mat.zeros(QQ, 1, 1)])
        flat = is_faithfully_flat(M, 'left')
        assert flat.projective
        assert not flat.verdict

    def test_non_unital_goes_through_dorroh(self):
        R = row_ideal().algebra
        res = is_projective(regular_module(R, 'right'))
        assert res.over_dorroh

    def test_flatness_over_forgotten_unit(self):
        M2 = matrix_algebra(2)
        cols = column_vectors(M2, 2)
        bare = Bimodule(QQ, 2, Algebra(QQ, M2.mult, label='bare'), cols.left_action)
        flat = is_faithfully_flat(bare, 'left')
        assert flat.verdict
        assert flat.trace.dim == 4

    def test_found_unit_must_act_as_identity(self):
        bare = Algebra(QQ, field_algebra().mult, label='bare')
        with pytest.raises(HypothesisError, match='does not act as the identity'):
            is_faithfully_flat(zero_acting(bare, 1, 'left'), 'left')

    def test_flatness_needs_a_unit(self):
        with pytest.raises(HypothesisError, match='with a unit'):
            is_faithfully_flat(zero_acting(null_algebra(1), 1, 'left'), 'left')

    def test_char_p_flatness(self):
        M2 = matrix_algebra(2, Field(3))
        with pytest.raises(HypothesisError):
            is_faithfully_flat(column_vectors(M2, 2), 'left')


class TestMaps:
    def test_trace_pairing_is_balanced(self):
        M2 = matrix_algebra(2)
        rows, cols = row_vectors(M2, 2), column_vectors(M2, 2)
        form = BalancedForm(rows, cols, M2, Bimodule(QQ, 1), Mat(QQ, [[1, 0, 0, 1]]))
        assert form.validate().passed
        T = tensor_over(rows, M2, cols)
        assert is_iso(form.on(T))

    def test_unbalanced(self):
        M2 = matrix_algebra(2)
        rows, cols = row_vectors(M2, 2), column_vectors(M2, 2)
        form = BalancedForm(rows, cols, M2, Bimodule(QQ, 1), Mat(QQ, [[1, 0, 0, 0]]))
        assert form.validate().failed

    def test_modmap(self):
        M2 = matrix_algebra(2)
        reg = regular_module(M2, 'right')
        good = ModMap(reg, reg, M2.left_mult(0), 'right')
        bad = ModMap(reg, reg, M2.right_mult(0), 'right')
        assert good.validate().passed
        assert bad.validate().failed


class TestCatalog:
    def test_default_catalog(self):
        R = row_ideal().algebra
        cat = default_catalog(R)
        assert [M.dim for M in cat] == [2, 2, 0, 3]
        for M in cat:
            assert validate_module(M).passed

    def test_direct_sum(self):
        M2 = matrix_algebra(2)
        rows = row_vectors(M2, 2)
        S = direct_sum(rows, rows)
        assert S.dim == 4
        assert validate_module(S).passed
        assert hom(S, S, 'right').dim == 4

    def test_dorroh_tensor(self):
        R = row_ideal().algebra
        assert dorroh_tensor_check(regular_module(R, 'right'), R, regular_module(R, 'left')).passed

    def test_extension_of_scalars(self):
        I = row_ideal()
        M2 = I.ambient
        E = extension_of_scalars(regular_module(I.algebra, 'right'), I.inclusion, M2)
        assert E.right == M2
        assert module_firmness(E, M2).is_firm


class TestJson:
    def test_round_trip(self):
        rows = row_vectors(matrix_algebra(2), 2)
        assert Bimodule.from_json(rows.to_json()) == rows

    def test_reference(self):
        M2 = matrix_algebra(2)
        data = row_vectors(M2, 2).to_json()
        data['right'] = 'M2'
        assert Bimodule.from_json(data, {'M2': M2}).right == M2
        with pytest.raises(SchemaError, match='unknown algebra'):
            Bimodule.from_json(data, {})
