import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corita.algebra import (
    Algebra,
    dorroh,
    dual_numbers,
    field_algebra,
    find_unit,
    firm_square,
    firm_square_map,
    firmness,
    group_algebra,
    has_right_local_units,
    ideal,
    ideal_powers,
    idempotent_core,
    is_idempotent,
    is_ring_map,
    matrix_algebra,
    maximality_check,
    null_algebra,
    opposite,
    product_algebra,
    radical_char0,
    span_product,
    subalgebra,
    upper_triangular,
    upper_triangular_index,
    validate,
)
from corita.corita_error import HypothesisError, SchemaError
from corita.exactlin import QQ, Field, Mat, Subspace


def row_ideal():
    ''' span{e11, e12} inside M_2 as an algebra. '''
    M2 = matrix_algebra(2)
    return ideal(M2, [(1, 0, 0, 0), (0, 1, 0, 0)], 'right').algebra


def nilpotent_line():
    return null_algebra(1)


CATALOG = [
    field_algebra(),
    matrix_algebra(2),
    upper_triangular(2),
    product_algebra(2),
    dual_numbers(),
    group_algebra(3),
    null_algebra(1),
    null_algebra(0),
]


class TestValidate:
    def test_matrix_algebra(self):
        assert validate(matrix_algebra(2)).passed

    def test_scaled_idempotent(self):
        A = Algebra(QQ, [[[2]]])
        assert validate(A).passed

    def test_failing_triple(self):
        A = Algebra(QQ, [[[0, 1], [1, 0]], [[0, 0], [0, 0]]])
        rep = validate(A)
        assert rep.failed
        assoc = rep.find('associativity')
        assert assoc is not None
        assert [0, 0, 1] in assoc.witness

    def test_bad_unit(self):
        A = Algebra(QQ, [[[1, 0], [0, 0]], [[0, 0], [0, 0]]], unit=[1, 0])
        assert validate(A).find('unit').failed

    @pytest.mark.parametrize('A', CATALOG)
    def test_catalog(self, A):
        assert validate(A).passed


class TestDorroh:
    def test_zero(self):
        hat = dorroh(null_algebra(0))
        assert hat.dim == 1
        assert validate(hat).passed

    def test_field(self):
        hat = dorroh(field_algebra())
        assert hat.dim == 2
        assert hat.unit == (0, 1)

    def test_nilpotent(self):
        hat = dorroh(nilpotent_line())
        # n at index 0, 1 at index 1
        assert hat.product((1, 0), (1, 0)) == (0, 0)
        assert hat.product((0, 1), (0, 1)) == (0, 1)
        assert hat.product((1, 0), (0, 1)) == (1, 0)
        assert radical_char0(hat) == Subspace(QQ, 2, [(1, 0)])

    @pytest.mark.parametrize('A', CATALOG)
    def test_contains_ideal(self, A):
        hat = dorroh(A)
        assert hat.is_unital
        assert validate(hat).passed
        vs = [hat.basis_vector(i) for i in range(A.dim)]
        ideal(hat, vs, 'two-sided')


class TestIdempotent:
    def test_unital(self):
        assert is_idempotent(matrix_algebra(2))

    def test_nilpotent(self):
        res = is_idempotent(nilpotent_line())
        assert not res
        assert res.square.dim == 0

    def test_row_ideal(self):
        assert is_idempotent(row_ideal()).verdict


class TestFirmness:
    def test_field(self):
        rep = firmness(field_algebra())
        assert rep.is_firm
        assert rep.mu == Mat(QQ, [[1]])
        assert rep.d is not None

    def test_nilpotent(self):
        rep = firmness(nilpotent_line())
        assert rep.quotient.dim == 1
        assert rep.mu.is_zero()
        assert not rep.is_firm
        assert not rep.is_idempotent
        assert rep.d is None

    def test_row_ideal(self):
        rep = firmness(row_ideal())
        assert rep.quotient.dim == 2
        assert rep.is_firm
        assert rep.mu @ rep.d == Mat.identity(QQ, 2)

    def test_zero_algebra(self):
        rep = firmness(null_algebra(0))
        assert rep.is_firm and rep.is_idempotent

    @pytest.mark.parametrize('A', CATALOG)
    def test_firm_implies_idempotent(self, A):
        rep = firmness(A)
        assert not rep.is_firm or rep.is_idempotent


class TestFirmSquare:
    def test_field(self):
        S = firm_square(field_algebra())
        assert S.dim == 1
        assert firmness(S).is_firm

    def test_nilpotent(self):
        S = firm_square(nilpotent_line())
        assert S.dim == 1
        assert S.mult == (((0,),),)

    def test_row_ideal(self):
        R = row_ideal()
        S = firm_square(R)
        assert S.dim == 2
        assert validate(S).passed
        assert firmness(S).is_firm
        assert is_ring_map(firm_square_map(R), S, R)

    @pytest.mark.parametrize('A', [A for A in CATALOG if is_idempotent(A)])
    def test_idempotent_gives_firm(self, A):
        assert firmness(firm_square(A)).is_firm


class TestIdempotentCore:
    def test_whole_matrix_algebra(self):
        M2 = matrix_algebra(2)
        core = idempotent_core(ideal(M2, Subspace.whole(QQ, 4)))
        assert core.steps == 1
        assert core.ideal.subspace == Subspace.whole(QQ, 4)

    def test_strictly_upper(self):
        UT3 = upper_triangular(3)
        n = UT3.dim
        strict = [
            UT3.basis_vector(upper_triangular_index(3, i, j))
            for i, j in [(0, 1), (0, 2), (1, 2)]
        ]
        assert n == 6
        I = ideal(UT3, strict)
        core = idempotent_core(I)
        assert core.ideal.dim == 0
        assert core.steps == 3
        assert [s.dim for s in core.chain] == [3, 1, 0]
        assert [s.dim for s in ideal_powers(I)] == [3, 1, 0]

    def test_already_idempotent(self):
        kk = product_algebra(2)
        I = ideal(kk, [(1, 0)])
        core = idempotent_core(I)
        assert core.ideal.subspace == I.subspace

    def test_not_an_ideal(self):
        M2 = matrix_algebra(2)
        with pytest.raises(HypothesisError, match='not a two-sided ideal'):
            ideal(M2, [(1, 0, 0, 0)])

    def test_right_ideal_rejected(self):
        M2 = matrix_algebra(2)
        I = ideal(M2, [(1, 0, 0, 0), (0, 1, 0, 0)], 'right')
        with pytest.raises(HypothesisError):
            idempotent_core(I)

    def test_fixpoint_and_left_ideal(self):
        UT2 = upper_triangular(2)
        I = ideal(UT2, Subspace.whole(QQ, 3))
        B = idempotent_core(I).ideal
        assert span_product(UT2, B.subspace, B.subspace) == B.subspace
        assert idempotent_core(B).ideal.subspace == B.subspace

    def test_maximality(self):
        kk = product_algebra(2)
        core = idempotent_core(ideal(kk, Subspace.whole(QQ, 2)))
        rep = maximality_check(core, [Subspace(QQ, 2, [(1, 0)]), Subspace(QQ, 2, [(0, 1)])])
        assert rep.passed


class TestRadical:
    def test_semisimple(self):
        assert radical_char0(matrix_algebra(2)).dim == 0
        assert radical_char0(product_algebra(2)).dim == 0

    def test_dual_numbers(self):
        assert radical_char0(dual_numbers()) == Subspace(QQ, 2, [(0, 1)])

    def test_upper_triangular_nilpotent(self):
        UT3 = upper_triangular(3)
        rad = radical_char0(UT3)
        assert rad.dim == 3
        powers = ideal_powers(ideal(UT3, rad))
        assert powers[-1].dim == 0
        assert len(powers) <= UT3.dim

    def test_non_unital(self):
        assert radical_char0(nilpotent_line()).dim == 1

    def test_char_p(self):
        with pytest.raises(HypothesisError, match='characteristic 0'):
            radical_char0(matrix_algebra(2, Field(3)))


class TestLocalUnits:
    def test_unital(self):
        res = has_right_local_units(matrix_algebra(2))
        assert res.verdict
        assert res.witness == matrix_algebra(2).unit

    def test_nilpotent(self):
        assert not has_right_local_units(nilpotent_line())

    def test_row_ideal(self):
        # e12 e = e12 has no solution inside span{e11, e12}
        assert not has_right_local_units(row_ideal()).verdict

    def test_column_ideal(self):
        M2 = matrix_algebra(2)
        col = ideal(M2, [(1, 0, 0, 0), (0, 0, 1, 0)], 'left').algebra
        res = has_right_local_units(col)
        assert res.verdict
        assert res.witness == (1, 0)


class TestFindUnit:
    def test_unital_is_returned(self):
        M2 = matrix_algebra(2)
        assert find_unit(M2) is M2

    def test_forgotten_unit(self):
        M2 = matrix_algebra(2)
        found = find_unit(Algebra(QQ, M2.mult, label='bare'))
        assert found.is_unital
        assert found.unit == M2.unit
        assert found.label == 'bare'

    def test_corner_of_product(self):
        k3 = product_algebra(3)
        corner = subalgebra(k3, Subspace(QQ, 3, [(1, 0, 0), (0, 1, 0)]), 'corner')
        found = find_unit(corner)
        assert found is not None
        assert found.unit == (1, 1)

    @pytest.mark.parametrize('A', [null_algebra(2), row_ideal(), nilpotent_line()])
    def test_none(self, A):
        assert find_unit(A) is None


class TestOpposite:
    def test_matrix(self):
        assert validate(opposite(matrix_algebra(2))).passed

    def test_commutative(self):
        A = group_algebra(3)
        assert opposite(A).mult == A.mult

    def test_sides_swap(self):
        R = row_ideal()
        Rop = opposite(R)
        assert Rop.mult[0][1] == R.mult[1][0]
        assert validate(Rop).passed


class TestJson:
    def test_round_trip(self):
        A = upper_triangular(2)
        assert Algebra.from_json(A.to_json()) == A

    def test_missing_mult(self):
        with pytest.raises(SchemaError):
            Algebra.from_json({'field': 'Q', 'dim': 1})


@st.composite
def commutative_semisimple(draw):
    m = draw(st.integers(1, 3))
    return product_algebra(m, Field(draw(st.sampled_from([0, 2, 7]))))


class TestProperties:
    @settings(max_examples=10, deadline=None)
    @given(commutative_semisimple())
    def test_product_algebras_firm(self, A):
        rep = firmness(A)
        assert rep.is_firm
        assert rep.quotient.dim == A.dim

    @settings(max_examples=10, deadline=None)
    @given(st.integers(1, 4))
    def test_group_algebra_valid(self, n):
        assert validate(group_algebra(n)).passed
        assert validate(dorroh(group_algebra(n))).passed
