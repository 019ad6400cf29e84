from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corita.corita_error import DimensionMismatchError, HypothesisError, InvalidOperationError
from corita.exactlin import (
    QQ,
    BasedSpace,
    Field,
    LinMap,
    Mat,
    Subspace,
    image,
    intersect,
    inverse,
    is_iso,
    kernel,
    quotient_by,
    rref_solve,
    swap_factors,
    tensor,
    tensor_index,
)


F5 = Field(5)


def small_matrices(max_rows: int = 4, max_cols: int = 4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                min_size=r, max_size=r,
            )
        )
    )


def vectors_in(ambient: int, max_count: int = 3):
    return st.lists(
        st.lists(st.integers(-3, 3), min_size=ambient, max_size=ambient),
        min_size=1, max_size=max_count,
    )


class TestField:
    def test_canonical_forms(self):
        assert QQ.coerce('6/4') == Fraction(3, 2)
        assert F5.coerce(-1) == 4
        assert F5.coerce(Fraction(1, 2)) == 3

    def test_bad_characteristic(self):
        with pytest.raises(HypothesisError, match='prime'):
            Field(4)

    def test_no_floats(self):
        with pytest.raises(InvalidOperationError):
            QQ.coerce(0.5)

    def test_json(self):
        assert QQ.to_json(Fraction(-2, 4)) == '-1/2'
        assert F5.to_json(7 % 5) == 2
        assert Field.from_json('Q') == QQ
        assert Field.from_json(5) == F5


class TestRrefSolve:
    def test_identity(self):
        res = rref_solve(Mat.identity(QQ, 2), Mat.column(QQ, [3, 5]))
        assert res.solvable
        assert res.solution == Mat.column(QQ, [3, 5])

    def test_free_variable_zero(self):
        res = rref_solve(Mat(QQ, [[1, 1]]), Mat.column(QQ, [0]))
        assert res.solution == Mat.column(QQ, [0, 0])

    def test_inconsistent(self):
        A = Mat(QQ, [[1], [1]])
        b = Mat.column(QQ, [1, 2])
        res = rref_solve(A, b)
        assert not res.solvable
        y = res.certificate
        assert y is not None
        assert (y @ A).is_zero()
        assert not (y @ b).is_zero()

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            rref_solve(Mat.identity(QQ, 2), Mat.column(QQ, [1, 2, 3]))

    @settings(max_examples=40, deadline=None)
    @given(small_matrices(), st.data())
    def test_constructed_solution(self, rows, data):
        A = Mat(QQ, rows)
        x0 = data.draw(st.lists(st.integers(-4, 4), min_size=A.cols, max_size=A.cols))
        b = A @ Mat.column(QQ, x0)
        res = rref_solve(A, b)
        assert res.solution is not None
        assert A @ res.solution == b


class TestKernelImage:
    def test_zero_map(self):
        z = Mat.zeros(QQ, 2, 2)
        assert kernel(z).dim == 2
        assert image(z).dim == 0

    def test_identity(self):
        i = LinMap.of(Mat.identity(QQ, 3))
        assert kernel(i).dim == 0
        assert image(i).dim == 3

    def test_rank_one(self):
        f = Mat(QQ, [[1, 1], [2, 2]])
        ker = kernel(f)
        assert ker.vectors == ((1, -1),)
        assert image(f).dim == 1

    @settings(max_examples=40, deadline=None)
    @given(small_matrices(5, 5))
    def test_rank_nullity(self, rows):
        f = Mat(QQ, rows)
        assert f.rank() + kernel(f).dim == f.cols

    @settings(deadline=None)
    @given(small_matrices(3, 3))
    def test_mod_p_rank_nullity(self, rows):
        f = Mat(F5, rows)
        assert f.rank() + kernel(f).dim == f.cols


class TestTensor:
    def test_dims(self):
        assert tensor(BasedSpace(2), BasedSpace(3)).dim == 6
        assert tensor(BasedSpace(0), BasedSpace(5)).dim == 0

    def test_index(self):
        assert tensor_index(BasedSpace(3), BasedSpace(4), 1, 2) == 6

    def test_kron_matches_index(self):
        A = Mat(QQ, [[1, 2], [3, 4]])
        B = Mat(QQ, [[0, 1, 0], [5, 0, 0], [0, 0, 7]])
        K = A.kron(B)
        assert K[1 * 3 + 2, 0 * 3 + 2] == 3 * 7

    def test_swap(self):
        s = swap_factors(QQ, 2, 3)
        x = Mat.column(QQ, [1, 2])
        y = Mat.column(QQ, [3, 4, 5])
        assert s @ x.kron(y) == y.kron(x)


class TestQuotient:
    def test_no_relations(self):
        q = quotient_by(4, Subspace.zero(QQ, 4))
        assert q.dim == 4
        assert q.projection == Mat.identity(QQ, 4)

    def test_everything(self):
        q = quotient_by(BasedSpace(4), Subspace.whole(QQ, 4))
        assert q.dim == 0

    def test_identify_two(self):
        q = quotient_by(2, Subspace(QQ, 2, [(1, -1)]))
        assert q.dim == 1
        assert q.projection == Mat(QQ, [[1, 1]])
        assert q.projection @ q.section == Mat.identity(QQ, 1)

    @settings(max_examples=30, deadline=None)
    @given(vectors_in(5))
    def test_section_complements_relations(self, rows):
        rel = Subspace(QQ, 5, rows)
        q = quotient_by(5, rel)
        assert q.projection @ q.section == Mat.identity(QQ, q.dim)
        assert kernel(q.projection) == rel
        assert image(q.section).plus(rel) == Subspace.whole(QQ, 5)


class TestIsoInverse:
    def test_intersect_whole(self):
        w = Subspace.whole(QQ, 3)
        assert intersect(w, w) == w

    def test_intersect_lines(self):
        a = Subspace(QQ, 3, [(1, 0, 0), (0, 1, 0)])
        b = Subspace(QQ, 3, [(0, 1, 0), (0, 0, 1)])
        assert intersect(a, b) == Subspace(QQ, 3, [(0, 1, 0)])

    def test_is_iso(self):
        assert is_iso(Mat.identity(QQ, 2))
        assert not is_iso(Mat.zeros(QQ, 2, 2))

    def test_inverse(self):
        assert inverse(Mat(QQ, [[2]])) == Mat(QQ, [['1/2']])

    def test_inverse_of_singular(self):
        with pytest.raises(InvalidOperationError, match='no inverse'):
            inverse(Mat.zeros(QQ, 1, 1))

    def test_coordinates_outside(self):
        s = Subspace(QQ, 2, [(1, 0)])
        with pytest.raises(InvalidOperationError):
            s.coordinates((0, 1))

    def test_determinism(self):
        rows = [(1, 2, 3), (2, 4, 7), (0, 0, 1)]
        assert Subspace(QQ, 3, rows) == Subspace(QQ, 3, list(reversed(rows)))
