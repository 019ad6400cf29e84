'''
Exact linear algebra over the rationals and prime fields.

Every vector space in corita is a coordinate space k^n. Maps are matrices acting on
column vectors, so a map ``f: U -> V`` is a ``dim V x dim U`` matrix whose j-th column
is the image of the j-th basis vector, and ``g . f`` is ``G @ F``. Tensor products of
coordinate spaces use the index convention ``(i, j) -> i * dim V + j``, which is the
convention of :meth:`Mat.kron`.
'''
from __future__ import annotations
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, NoReturn, Optional, Sequence, Tuple, Union

from .corita_error import DimensionMismatchError, HypothesisError, InvalidOperationError, SchemaError
from .more_typing import Scalar, Vector


logger = logging.getLogger(__name__)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    '''
    .. code-block:: python

        from corita.exactlin import Field

    The base field k: the rationals (characteristic 0) or F_p for a prime p < 2^31.
    '''

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and (p >= 2 ** 31 or not _is_prime(p)):
            raise HypothesisError(f'characteristic must be 0 or a prime below 2^31, got {p}')

    @property
    def kind(self) -> str:
        return 'rationals' if self.characteristic == 0 else 'prime field'

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.characteristic == 0 else 1

    def coerce(self, value: Any) -> Scalar:
        '''
        Brings an int, a Fraction or a ``'p/q'`` string into canonical form.
        '''
        if isinstance(value, bool) or isinstance(value, float):
            raise InvalidOperationError(f'{value!r} is not an exact field element')
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise SchemaError(f'cannot read {value!r} as a field element') from e
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise InvalidOperationError(f'{value} has no image in F_{p}')
            return value.numerator * pow(value.denominator, p - 2, p) % p
        return int(value) % p

    def norm(self, x: Scalar) -> Scalar:
        # results of + - * on canonical values
        return x % self.characteristic if self.characteristic else x

    def inv(self, x: Scalar) -> Scalar:
        if not x:
            raise InvalidOperationError('division by zero')
        p = self.characteristic
        if p == 0:
            return 1 / Fraction(x)
        return pow(int(x), p - 2, p)

    def to_json(self, x: Scalar) -> Union[str, int]:
        if self.characteristic == 0:
            f = Fraction(x)
            return f'{f.numerator}/{f.denominator}'
        return int(x)

    def describe(self) -> Union[str, int]:
        return 'Q' if self.characteristic == 0 else self.characteristic

    @staticmethod
    def from_json(data: Any) -> Field:
        if data in (None, 0, 'Q', 'q', 'rationals'):
            return Field(0)
        if isinstance(data, int) and not isinstance(data, bool):
            return Field(data)
        if isinstance(data, str) and data.isdigit():
            return Field(int(data))
        raise SchemaError(f'unknown field {data!r}')


QQ = Field(0)


@dataclass(frozen=True)
class BasedSpace:
    '''
    .. code-block:: python

        from corita.exactlin import BasedSpace

    A coordinate space k^dim with a human label.
    '''

    dim: int
    label: str = ''

    def __post_init__(self):
        if self.dim < 0:
            raise DimensionMismatchError(f'negative dimension {self.dim}')


def tensor(U: BasedSpace, V: BasedSpace) -> BasedSpace:
    return BasedSpace(U.dim * V.dim, f'{U.label}⊗{V.label}')


def tensor_index(U: BasedSpace, V: BasedSpace, i: int, j: int) -> int:
    if not (0 <= i < U.dim and 0 <= j < V.dim):
        raise DimensionMismatchError(f'basis pair ({i}, {j}) outside {U.dim}x{V.dim}')
    return i * V.dim + j


def _raise_shape(what: str, a: Tuple[int, int], b: Tuple[int, int]) -> NoReturn:
    raise DimensionMismatchError(f'{what}: shapes {a[0]}x{a[1]} and {b[0]}x{b[1]} do not fit')


class Mat:
    '''
    .. code-block:: python

        from corita.exactlin import Mat

    An immutable dense matrix over a :class:`Field`. Products skip zero entries, which
    keeps the large but sparse structure matrices of tensor constructions cheap.
    '''

    __slots__ = ('_field', '_rows', '_ncols', '_sparse')

    _field: Field
    _rows: Tuple[Vector, ...]
    _ncols: int
    _sparse: Optional[Tuple[Tuple[Tuple[int, Scalar], ...], ...]]

    def __init__(self,
        field: Field,
        rows: Iterable[Sequence[Any]],
        ncols: Optional[int] = None,
    ):
        coerced = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        if ncols is None:
            if not coerced:
                raise DimensionMismatchError('column count of an empty matrix must be given')
            ncols = len(coerced[0])
        for row in coerced:
            if len(row) != ncols:
                raise DimensionMismatchError(f'ragged row of length {len(row)}, expected {ncols}')
        self._field = field
        self._rows = coerced
        self._ncols = ncols
        self._sparse = None

    @classmethod
    def _make(cls, field: Field, rows: Tuple[Vector, ...], ncols: int) -> Mat:
        # trusted constructor, entries already canonical
        m = cls.__new__(cls)
        m._field = field
        m._rows = rows
        m._ncols = ncols
        m._sparse = None
        return m

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Mat:
        z = field.zero
        return cls._make(field, tuple((z,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> Mat:
        z, o = field.zero, field.one
        return cls._make(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def from_columns(cls,
        field: Field,
        nrows: int,
        columns: Sequence[Sequence[Any]],
    ) -> Mat:
        for c in columns:
            if len(c) != nrows:
                raise DimensionMismatchError(f'column of length {len(c)}, expected {nrows}')
        return cls(field, (tuple(c[i] for c in columns) for i in range(nrows)), len(columns))

    @classmethod
    def column(cls, field: Field, vector: Sequence[Any]) -> Mat:
        return cls(field, ((x,) for x in vector), 1)

    @classmethod
    def unit_column(cls, field: Field, n: int, i: int) -> Mat:
        z, o = field.zero, field.one
        return cls._make(field, tuple((o if k == i else z,) for k in range(n)), 1)

    @classmethod
    def hstack(cls, field: Field, nrows: int, blocks: Sequence[Mat]) -> Mat:
        for b in blocks:
            if b.rows != nrows:
                raise DimensionMismatchError(f'hstack block with {b.rows} rows, expected {nrows}')
        ncols = sum(b.cols for b in blocks)
        rows = tuple(tuple(x for b in blocks for x in b._rows[i]) for i in range(nrows))
        return cls._make(field, rows, ncols)

    @classmethod
    def vstack(cls, field: Field, ncols: int, blocks: Sequence[Mat]) -> Mat:
        for b in blocks:
            if b.cols != ncols:
                raise DimensionMismatchError(f'vstack block with {b.cols} columns, expected {ncols}')
        return cls._make(field, tuple(r for b in blocks for r in b._rows), ncols)

    @property
    def field(self) -> Field:
        return self._field

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self._rows), self._ncols)

    @property
    def entries(self) -> Tuple[Vector, ...]:
        return self._rows

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self._rows[i][j]

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def column_vector(self, j: int) -> Vector:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> List[Vector]:
        return [self.column_vector(j) for j in range(self._ncols)]

    def select_columns(self, indices: Sequence[int]) -> Mat:
        return Mat._make(self._field, tuple(tuple(r[j] for j in indices) for r in self._rows), len(indices))

    def select_rows(self, indices: Sequence[int]) -> Mat:
        return Mat._make(self._field, tuple(self._rows[i] for i in indices), self._ncols)

    def _sparse_rows(self) -> Tuple[Tuple[Tuple[int, Scalar], ...], ...]:
        if self._sparse is None:
            self._sparse = tuple(tuple((j, x) for j, x in enumerate(r) if x) for r in self._rows)
        return self._sparse

    def is_zero(self) -> bool:
        return not any(self._sparse_rows())

    def __eq__(self, o: object) -> bool:
        if not isinstance(o, Mat):
            return NotImplemented
        return self.shape == o.shape and self._rows == o._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        return f'Mat({self.rows}x{self.cols})'

    def __matmul__(self, o: Mat) -> Mat:
        if self._ncols != o.rows:
            _raise_shape('matmul', self.shape, o.shape)
        f = self._field
        z = f.zero
        other = o._sparse_rows()
        out: List[Vector] = []
        for srow in self._sparse_rows():
            acc: Dict[int, Scalar] = {}
            for k, a in srow:
                for j, b in other[k]:
                    acc[j] = acc.get(j, z) + a * b
            row = [z] * o._ncols
            for j, x in acc.items():
                row[j] = f.norm(x)
            out.append(tuple(row))
        return Mat._make(f, tuple(out), o._ncols)

    def _zip(self, o: Mat, sign: int) -> Mat:
        if self.shape != o.shape:
            _raise_shape('add', self.shape, o.shape)
        f = self._field
        return Mat._make(f, tuple(
            tuple(f.norm(a + sign * b) for a, b in zip(r, s)) for r, s in zip(self._rows, o._rows)
        ), self._ncols)

    def __add__(self, o: Mat) -> Mat:
        return self._zip(o, 1)

    def __sub__(self, o: Mat) -> Mat:
        return self._zip(o, -1)

    def __neg__(self) -> Mat:
        return self.scale(-1)

    def scale(self, s: Any) -> Mat:
        f = self._field
        c = f.coerce(s)
        return Mat._make(f, tuple(tuple(f.norm(c * x) for x in r) for r in self._rows), self._ncols)

    def transpose(self) -> Mat:
        if not self._rows:
            return Mat.zeros(self._field, self._ncols, 0)
        return Mat._make(self._field, tuple(zip(*self._rows)), len(self._rows))

    def kron(self, o: Mat) -> Mat:
        f = self._field
        z = f.zero
        orows = o._sparse_rows()
        ncols = self._ncols * o._ncols
        out: List[Vector] = []
        for srow in self._sparse_rows():
            for orow in orows:
                row = [z] * ncols
                for j, a in srow:
                    base = j * o._ncols
                    for l, b in orow:
                        row[base + l] = f.norm(a * b)
                out.append(tuple(row))
        return Mat._make(f, tuple(out), ncols)

    def vec(self) -> Mat:
        '''
        Row-major flattening into a column.
        '''
        return Mat._make(self._field, tuple((x,) for r in self._rows for x in r), 1)

    @staticmethod
    def unvec(field: Field, column: Sequence[Scalar], nrows: int, ncols: int) -> Mat:
        if len(column) != nrows * ncols:
            raise DimensionMismatchError(f'cannot reshape {len(column)} entries into {nrows}x{ncols}')
        return Mat._make(field, tuple(tuple(column[i * ncols:(i + 1) * ncols]) for i in range(nrows)), ncols)

    def rank(self) -> int:
        return len(rref(self._field, self._rows, self._ncols)[1])

    def to_json(self) -> Dict[str, Any]:
        f = self._field
        return {
            'rows': self.rows,
            'cols': self.cols,
            'entries': [f.to_json(x) for r in self._rows for x in r],
        }

    @staticmethod
    def from_json(field: Field, data: Mapping[str, Any]) -> Mat:
        try:
            r, c, entries = int(data['rows']), int(data['cols']), list(data['entries'])
        except (KeyError, TypeError, ValueError) as e:
            raise SchemaError(f'matrix needs rows, cols and entries: {e}') from e
        if len(entries) != r * c:
            raise SchemaError(f'matrix {r}x{c} carries {len(entries)} entries')
        return Mat(field, (entries[i * c:(i + 1) * c] for i in range(r)), c)


def kron_all(field: Field, mats: Sequence[Mat]) -> Mat:
    out = Mat.identity(field, 1)
    for m in mats:
        out = out.kron(m)
    return out


def matmul_all(mats: Sequence[Mat]) -> Mat:
    '''
    ``matmul_all([F, G, H]) == F @ G @ H``, evaluated right to left.
    '''
    out = mats[-1]
    for m in reversed(mats[:-1]):
        out = m @ out
    return out


def swap_factors(field: Field, m: int, n: int) -> Mat:
    '''
    The flip ``k^m ⊗ k^n -> k^n ⊗ k^m``.
    '''
    cols = [0] * (m * n)
    for i in range(m):
        for j in range(n):
            cols[i * n + j] = j * m + i
    z, o = field.zero, field.one
    rows = [[z] * (m * n) for _ in range(m * n)]
    for src, dst in enumerate(cols):
        rows[dst][src] = o
    return Mat._make(field, tuple(tuple(r) for r in rows), m * n)


SparseVector = Mapping[int, Scalar]


def rref(field: Field,
    vectors: Iterable[Union[Sequence[Scalar], SparseVector]],
    ncols: int,
) -> Tuple[Tuple[Vector, ...], Tuple[int, ...]]:
    '''
    Reduced row echelon basis of the span of ``vectors`` with leftmost pivots, and the
    pivot columns. The result depends only on the span.
    '''
    norm = field.norm
    pivots: Dict[int, Dict[int, Scalar]] = {}
    for v in vectors:
        if isinstance(v, Mapping):
            row: Dict[int, Scalar] = {j: x for j, x in v.items() if x}
        else:
            row = {j: x for j, x in enumerate(v) if x}
        for c in [c for c in row if c in pivots]:
            factor = row.get(c)
            if not factor:
                continue
            for j, x in pivots[c].items():
                y = norm(row.get(j, 0) - factor * x)
                if y:
                    row[j] = y
                else:
                    row.pop(j, None)
        if not row:
            continue
        lead = min(row)
        inv = field.inv(row[lead])
        row = {j: norm(x * inv) for j, x in row.items()}
        # keep every stored row reduced against the new pivot
        for prow in pivots.values():
            factor = prow.get(lead)
            if not factor:
                continue
            for j, x in row.items():
                y = norm(prow.get(j, 0) - factor * x)
                if y:
                    prow[j] = y
                else:
                    prow.pop(j, None)
        pivots[lead] = row
    z = field.zero
    out: List[Vector] = []
    order = tuple(sorted(pivots))
    for c in order:
        dense = [z] * ncols
        for j, x in pivots[c].items():
            dense[j] = x
        out.append(tuple(dense))
    return tuple(out), order


class Subspace:
    '''
    .. code-block:: python

        from corita.exactlin import Subspace

    A subspace of k^n held by its canonical (rref) basis. Coordinates with respect to
    that basis are read off at the pivot columns.
    '''

    __slots__ = ('_field', '_ambient', '_basis', '_pivots')

    _field: Field
    _ambient: int
    _basis: Tuple[Vector, ...]
    _pivots: Tuple[int, ...]

    def __init__(self,
        field: Field,
        ambient: int,
        vectors: Iterable[Sequence[Scalar]] = (),
    ):
        self._field = field
        self._ambient = ambient
        vs = list(vectors)
        for v in vs:
            if len(v) != ambient:
                raise DimensionMismatchError(f'vector of length {len(v)} in a subspace of k^{ambient}')
        self._basis, self._pivots = rref(field, vs, ambient)

    @classmethod
    def whole(cls, field: Field, n: int) -> Subspace:
        z, o = field.zero, field.one
        return cls(field, n, (tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, field: Field, n: int) -> Subspace:
        return cls(field, n)

    @classmethod
    def from_sparse(cls,
        field: Field,
        ambient: int,
        vectors: Iterable[SparseVector],
    ) -> Subspace:
        '''
        Span of vectors given as ``{index: value}`` mappings with canonical values.
        '''
        s = cls.__new__(cls)
        s._field = field
        s._ambient = ambient
        s._basis, s._pivots = rref(field, vectors, ambient)
        return s

    @classmethod
    def spanned_by_columns(cls, m: Mat) -> Subspace:
        return cls(m.field, m.rows, m.columns())

    @property
    def field(self) -> Field:
        return self._field

    @property
    def ambient(self) -> int:
        return self._ambient

    @property
    def dim(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> Mat:
        return Mat._make(self._field, self._basis, self._ambient)

    @property
    def vectors(self) -> Tuple[Vector, ...]:
        return self._basis

    @property
    def pivots(self) -> Tuple[int, ...]:
        return self._pivots

    def inclusion(self) -> Mat:
        '''
        The ``ambient x dim`` matrix whose columns are the basis vectors.
        '''
        if not self._basis:
            return Mat.zeros(self._field, self._ambient, 0)
        return Mat._make(self._field, tuple(zip(*self._basis)), len(self._basis))

    def retraction(self) -> Mat:
        '''
        A left inverse of :meth:`inclusion`: the ``dim x ambient`` row selection at the pivots.
        Exact on the subspace only.
        '''
        return Mat.identity(self._field, self._ambient).select_rows(self._pivots)

    def _combine(self, coords: Sequence[Scalar]) -> List[Scalar]:
        f = self._field
        acc = [f.zero] * self._ambient
        for c, b in zip(coords, self._basis):
            if c:
                for j, x in enumerate(b):
                    if x:
                        acc[j] = f.norm(acc[j] + c * x)
        return acc

    def contains(self, v: Sequence[Scalar]) -> bool:
        coords = [v[p] for p in self._pivots]
        return list(self._combine(coords)) == [self._field.coerce(x) for x in v]

    def coordinates(self, v: Sequence[Scalar]) -> Vector:
        coords = tuple(self._field.coerce(v[p]) for p in self._pivots)
        if list(self._combine(coords)) != [self._field.coerce(x) for x in v]:
            raise InvalidOperationError('vector does not lie in the subspace')
        return coords

    def coordinate_matrix(self, m: Mat) -> Mat:
        '''
        Coordinates of every column of ``m``; raises if a column falls outside.
        '''
        if m.rows != self._ambient:
            _raise_shape('coordinates', (self._ambient, self.dim), m.shape)
        cols = [self.coordinates(c) for c in m.columns()]
        return Mat.from_columns(self._field, self.dim, cols) if cols else Mat.zeros(self._field, self.dim, 0)

    def contains_all(self, m: Mat) -> bool:
        return all(self.contains(c) for c in m.columns())

    def is_subspace_of(self, o: Subspace) -> bool:
        return all(o.contains(v) for v in self._basis)

    def plus(self, o: Subspace) -> Subspace:
        return Subspace(self._field, self._ambient, self._basis + o._basis)

    def __eq__(self, o: object) -> bool:
        if not isinstance(o, Subspace):
            return NotImplemented
        return self._ambient == o._ambient and self._basis == o._basis

    def __hash__(self) -> int:
        return hash((self._ambient, self._basis))

    def __repr__(self) -> str:
        return f'Subspace(dim={self.dim}, ambient={self._ambient})'

    def to_json(self) -> Dict[str, Any]:
        return {'ambient': self._ambient, 'basis': self.basis.to_json()}


@dataclass(frozen=True)
class LinMap:
    '''
    .. code-block:: python

        from corita.exactlin import LinMap

    A matrix with the spaces it maps between.
    '''

    domain: BasedSpace
    codomain: BasedSpace
    matrix: Mat

    def __post_init__(self):
        if self.matrix.shape != (self.codomain.dim, self.domain.dim):
            _raise_shape('LinMap', (self.codomain.dim, self.domain.dim), self.matrix.shape)

    @classmethod
    def of(cls, m: Mat, domain: str = '', codomain: str = '') -> LinMap:
        return cls(BasedSpace(m.cols, domain), BasedSpace(m.rows, codomain), m)

    def then(self, g: LinMap) -> LinMap:
        return LinMap(self.domain, g.codomain, g.matrix @ self.matrix)


MatLike = Union[Mat, LinMap]


def _mat(f: MatLike) -> Mat:
    return f.matrix if isinstance(f, LinMap) else f


@dataclass(frozen=True)
class SolveResult:
    '''
    .. code-block:: python

        from corita.exactlin import SolveResult

    Outcome of :func:`rref_solve`: a solution, or a certificate ``y`` with
    ``y A = 0`` and ``y b != 0``.
    '''

    solution: Optional[Mat]
    certificate: Optional[Mat] = None

    @property
    def solvable(self) -> bool:
        return self.solution is not None


def rref_solve(A: Mat, b: Mat) -> SolveResult:
    '''
    One solution of ``A x = b`` (free variables set to zero), or the no-solution
    verdict with an inconsistency certificate.
    '''
    if A.rows != b.rows:
        _raise_shape('rref_solve', A.shape, b.shape)
    f = A.field
    n, k = A.cols, b.cols
    aug = [ra + rb for ra, rb in zip(A.entries, b.entries)]
    rows, pivots = rref(f, aug, n + k)
    if pivots and pivots[-1] >= n:
        logger.debug('inconsistent %dx%d system', A.rows, n)
        return SolveResult(None, _certificate(A, b))
    z = f.zero
    x = [[z] * k for _ in range(n)]
    for row, p in zip(rows, pivots):
        x[p] = list(row[n:])
    return SolveResult(Mat._make(f, tuple(tuple(r) for r in x), k))


def _certificate(A: Mat, b: Mat) -> Mat:
    left = kernel(A.transpose())
    for y in left.vectors:
        yb = Mat._make(A.field, (y,), A.rows) @ b
        if not yb.is_zero():
            return Mat._make(A.field, (y,), A.rows)
    raise InvalidOperationError('no certificate for a consistent system')  # unreachable


def kernel(f: MatLike) -> Subspace:
    m = _mat(f)
    field = m.field
    rows, pivots = rref(field, m.entries, m.cols)
    pivot_set = set(pivots)
    z, o = field.zero, field.one
    vectors: List[List[Scalar]] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [z] * m.cols
        v[free] = o
        for row, p in zip(rows, pivots):
            if row[free]:
                v[p] = field.norm(-row[free])
        vectors.append(v)
    return Subspace(field, m.cols, vectors)


def image(f: MatLike) -> Subspace:
    m = _mat(f)
    return Subspace(m.field, m.rows, m.columns())


def rank(f: MatLike) -> int:
    return _mat(f).rank()


def intersect(S1: Subspace, S2: Subspace) -> Subspace:
    if S1.ambient != S2.ambient:
        raise DimensionMismatchError(f'intersect in k^{S1.ambient} and k^{S2.ambient}')
    f = S1.field
    if S1.dim == 0 or S2.dim == 0:
        return Subspace.zero(f, S1.ambient)
    # a in ker [B1^T | -B2^T]  ->  B1^T a
    stacked = Mat.hstack(f, S1.ambient, [S1.inclusion(), -S2.inclusion()])
    ker = kernel(stacked)
    inc = S1.inclusion()
    vectors = []
    for v in ker.vectors:
        a = Mat.column(f, v[:S1.dim])
        vectors.append((inc @ a).column_vector(0))
    return Subspace(f, S1.ambient, vectors)


def is_iso(f: MatLike) -> bool:
    m = _mat(f)
    return m.rows == m.cols and m.rank() == m.cols


def inverse(f: MatLike) -> Mat:
    m = _mat(f)
    if not is_iso(m):
        raise InvalidOperationError(f'a {m.rows}x{m.cols} map of rank {m.rank()} has no inverse')
    res = rref_solve(m, Mat.identity(m.field, m.rows))
    assert res.solution is not None
    return res.solution


class Quotient:
    '''
    .. code-block:: python

        from corita.exactlin import Quotient

    ``k^n / relations``. Its basis is the classes of the unit vectors at the non-pivot
    columns of the relation basis; the section sends a class to that unit vector.
    '''

    __slots__ = ('_relations', '_free', '_projection', '_section')

    _relations: Subspace
    _free: Tuple[int, ...]
    _projection: Mat
    _section: Mat

    def __init__(self, relations: Subspace):
        f = relations.field
        n = relations.ambient
        pivot_of = {p: i for i, p in enumerate(relations.pivots)}
        free = tuple(j for j in range(n) if j not in pivot_of)
        z, o = f.zero, f.one
        proj_cols: List[List[Scalar]] = []
        for k in range(n):
            if k in pivot_of:
                row = relations.vectors[pivot_of[k]]
                proj_cols.append([f.norm(-row[j]) for j in free])
            else:
                proj_cols.append([o if j == k else z for j in free])
        self._relations = relations
        self._free = free
        self._projection = Mat.from_columns(f, len(free), proj_cols) if n else Mat.zeros(f, 0, 0)
        self._section = Mat._make(f, tuple(tuple(o if j == c else z for c in free) for j in range(n)), len(free))

    @property
    def relations(self) -> Subspace:
        return self._relations

    @property
    def ambient(self) -> int:
        return self._relations.ambient

    @property
    def dim(self) -> int:
        return len(self._free)

    @property
    def space(self) -> BasedSpace:
        return BasedSpace(len(self._free))

    @property
    def representatives(self) -> Tuple[int, ...]:
        return self._free

    @property
    def projection(self) -> Mat:
        return self._projection

    @property
    def section(self) -> Mat:
        return self._section


def quotient_by(V: Union[BasedSpace, int], R: Subspace) -> Quotient:
    n = V.dim if isinstance(V, BasedSpace) else V
    if R.ambient != n:
        raise DimensionMismatchError(f'relations live in k^{R.ambient}, not k^{n}')
    q = Quotient(R)
    logger.debug('quotient k^%d / %d relations -> dim %d', n, R.dim, q.dim)
    return q
