'''
Finite-dimensional, possibly non-unital algebras given by structure constants.

``mult[i][j]`` is the coordinate vector of ``e_i e_j``. Left multiplication by ``e_i`` is
the matrix ``L_i`` with ``L_i[k][j] = mult[i][j][k]``; right multiplication by ``e_j`` is
``R_j`` with ``R_j[k][i] = mult[i][j][k]``.
'''
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .corita_error import (
    AxiomViolationError,
    DimensionMismatchError,
    HypothesisError,
    InvalidOperationError,
    SchemaError,
)
from .exactlin import (
    QQ,
    Field,
    Mat,
    Quotient,
    Subspace,
    image,
    inverse,
    is_iso,
    kernel,
    quotient_by,
    rref_solve,
)
from .more_typing import Scalar, Sidedness, Vector
from .report import Report


logger = logging.getLogger(__name__)


class Algebra:
    '''
    .. code-block:: python

        from corita.algebra import Algebra

    A finite-dimensional algebra over a field, possibly without unit. Associativity is
    not enforced on construction; use :func:`validate`.
    '''

    __slots__ = ('_field', '_mult', '_unit', '_label', '_left', '_right', '_mult_map')

    _field: Field
    _mult: Tuple[Tuple[Vector, ...], ...]
    _unit: Optional[Vector]
    _label: str
    _left: Optional[Tuple[Mat, ...]]
    _right: Optional[Tuple[Mat, ...]]
    _mult_map: Optional[Mat]

    def __init__(self,
        field: Field,
        mult: Sequence[Sequence[Sequence[Any]]],
        unit: Optional[Sequence[Any]] = None,
        label: str = '',
    ):
        n = len(mult)
        rows: List[Tuple[Vector, ...]] = []
        for i, row in enumerate(mult):
            if len(row) != n:
                raise DimensionMismatchError(f'row {i} of the structure constants has {len(row)} entries, expected {n}')
            vecs = []
            for j, v in enumerate(row):
                if len(v) != n:
                    raise DimensionMismatchError(f'product e_{i} e_{j} has {len(v)} coordinates, expected {n}')
                vecs.append(tuple(field.coerce(x) for x in v))
            rows.append(tuple(vecs))
        if unit is not None and len(unit) != n:
            raise DimensionMismatchError(f'unit has {len(unit)} coordinates, expected {n}')
        self._field = field
        self._mult = tuple(rows)
        self._unit = None if unit is None else tuple(field.coerce(x) for x in unit)
        self._label = label
        self._left = None
        self._right = None
        self._mult_map = None

    @classmethod
    def from_products(cls,
        field: Field,
        dim: int,
        product: Callable[[int, int], Sequence[Any]],
        unit: Optional[Sequence[Any]] = None,
        label: str = '',
    ) -> Algebra:
        return cls(field, [[product(i, j) for j in range(dim)] for i in range(dim)], unit, label)

    @property
    def field(self) -> Field:
        return self._field

    @property
    def dim(self) -> int:
        return len(self._mult)

    @property
    def mult(self) -> Tuple[Tuple[Vector, ...], ...]:
        return self._mult

    @property
    def unit(self) -> Optional[Vector]:
        return self._unit

    @property
    def is_unital(self) -> bool:
        return self._unit is not None

    @property
    def label(self) -> str:
        return self._label

    def relabel(self, label: str) -> Algebra:
        return Algebra(self._field, self._mult, self._unit, label)

    def basis_vector(self, i: int) -> Vector:
        z, o = self._field.zero, self._field.one
        return tuple(o if k == i else z for k in range(self.dim))

    def left_mult(self, i: int) -> Mat:
        if self._left is None:
            n, f = self.dim, self._field
            self._left = tuple(
                Mat._make(f, tuple(tuple(self._mult[a][j][k] for j in range(n)) for k in range(n)), n)
                for a in range(n)
            )
        return self._left[i]

    def right_mult(self, j: int) -> Mat:
        if self._right is None:
            n, f = self.dim, self._field
            self._right = tuple(
                Mat._make(f, tuple(tuple(self._mult[i][b][k] for i in range(n)) for k in range(n)), n)
                for b in range(n)
            )
        return self._right[j]

    @property
    def left_mults(self) -> Tuple[Mat, ...]:
        return tuple(self.left_mult(i) for i in range(self.dim))

    @property
    def right_mults(self) -> Tuple[Mat, ...]:
        return tuple(self.right_mult(i) for i in range(self.dim))

    def left_mult_by(self, x: Sequence[Scalar]) -> Mat:
        return combine(self._field, x, self.left_mults, self.dim, self.dim)

    def right_mult_by(self, x: Sequence[Scalar]) -> Mat:
        return combine(self._field, x, self.right_mults, self.dim, self.dim)

    @property
    def mult_map(self) -> Mat:
        '''
        The multiplication ``A ⊗ A -> A`` as a ``dim x dim^2`` matrix.
        '''
        if self._mult_map is None:
            n = self.dim
            cols = [self._mult[i][j] for i in range(n) for j in range(n)]
            self._mult_map = Mat.from_columns(self._field, n, cols) if cols else Mat.zeros(self._field, 0, 0)
        return self._mult_map

    def product(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        f = self._field
        acc = [f.zero] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(self._mult[i][j]):
                    if c:
                        acc[k] = f.norm(acc[k] + ab * c)
        return tuple(acc)

    def __eq__(self, o: object) -> bool:
        if not isinstance(o, Algebra):
            return NotImplemented
        return self is o or (
            self._field == o._field and self._mult == o._mult and self._unit == o._unit
        )

    def __hash__(self) -> int:
        return hash((self._field, self._mult, self._unit))

    def __repr__(self) -> str:
        return f'Algebra({self._label or "?"}, dim={self.dim}, unital={self.is_unital})'

    def to_json(self) -> Dict[str, Any]:
        f = self._field
        return {
            'field': f.describe(),
            'dim': self.dim,
            'mult': [[[f.to_json(x) for x in v] for v in row] for row in self._mult],
            'unit': None if self._unit is None else [f.to_json(x) for x in self._unit],
            'label': self._label,
        }

    @staticmethod
    def from_json(data: Mapping[str, Any]) -> Algebra:
        try:
            field = Field.from_json(data.get('field'))
            n = int(data['dim'])
            mult = data['mult']
        except (KeyError, TypeError, ValueError) as e:
            raise SchemaError(f'algebra needs field, dim and mult: {e}') from e
        if len(mult) != n:
            raise SchemaError(f'algebra of dim {n} lists {len(mult)} rows of products')
        try:
            return Algebra(field, mult, data.get('unit'), str(data.get('label', '')))
        except DimensionMismatchError as e:
            raise SchemaError(str(e)) from e


def combine(field: Field,
    coeffs: Sequence[Scalar],
    mats: Sequence[Mat],
    rows: int,
    cols: int,
) -> Mat:
    '''
    ``sum(c * M for c, M in zip(coeffs, mats))`` with the shape of an empty sum given.
    '''
    acc = Mat.zeros(field, rows, cols)
    for c, m in zip(coeffs, mats):
        if c:
            acc = acc + m.scale(c)
    return acc


def validate(A: Algebra) -> Report:
    '''
    Checks associativity on every basis triple and, when present, the unit.
    The witness lists every failing triple ``(i, j, l)`` with
    ``(e_i e_j) e_l != e_i (e_j e_l)``.
    '''
    n = A.dim
    failing: List[Tuple[int, int, int]] = []
    for i in range(n):
        for j in range(n):
            lhs = A.left_mult_by(A.mult[i][j])
            rhs = A.left_mult(i) @ A.left_mult(j)
            if lhs != rhs:
                for l in range(n):
                    if lhs.column_vector(l) != rhs.column_vector(l):
                        failing.append((i, j, l))
    items = [Report.check(
        'associativity', not failing,
        f'{len(failing)} failing basis triples' if failing else f'all {n ** 3} basis triples',
        [list(t) for t in failing],
    )]
    if A.unit is not None:
        ident = Mat.identity(A.field, n)
        ok = A.left_mult_by(A.unit) == ident and A.right_mult_by(A.unit) == ident
        items.append(Report.check('unit', ok, 'two-sided unit', list(A.unit)))
    return Report.group('algebra', items, A.label)


def is_ring_map(f: Mat, R: Algebra, S: Algebra) -> bool:
    if f.shape != (S.dim, R.dim):
        return False
    return f @ R.mult_map == S.mult_map @ f.kron(f)


def dorroh(R: Algebra) -> Algebra:
    '''
    The Dorroh extension ``R ⊕ k``; the adjoined unit is the last basis vector.
    '''
    n, f = R.dim, R.field
    z, o = f.zero, f.one

    def product(i: int, j: int) -> Vector:
        if i == n:
            return tuple(o if k == j else z for k in range(n + 1))
        if j == n:
            return tuple(o if k == i else z for k in range(n + 1))
        return R.mult[i][j] + (z,)

    unit = tuple(o if k == n else z for k in range(n + 1))
    return Algebra.from_products(f, n + 1, product, unit, f'{R.label}^' if R.label else 'dorroh')


def span_product(A: Algebra, X: Subspace, Y: Subspace) -> Subspace:
    '''
    The span of all products ``x y`` with ``x`` in ``X`` and ``y`` in ``Y``.
    '''
    return Subspace(A.field, A.dim, (A.product(x, y) for x in X.vectors for y in Y.vectors))


def square(A: Algebra) -> Subspace:
    return Subspace(A.field, A.dim, (v for row in A.mult for v in row))


@dataclass(frozen=True)
class Idempotency:
    '''
    .. code-block:: python

        from corita.algebra import Idempotency

    Verdict of :func:`is_idempotent` with the witness ``A^2``.
    '''

    verdict: bool
    square: Subspace

    def __bool__(self) -> bool:
        return self.verdict


def is_idempotent(A: Algebra) -> Idempotency:
    sq = square(A)
    return Idempotency(sq.dim == A.dim, sq)


def balanced_relations(field: Field,
    right_actions: Sequence[Mat],
    left_actions: Sequence[Mat],
    m: int,
    n: int,
) -> Subspace:
    '''
    Span of ``(x_i a) ⊗ y_j - x_i ⊗ (a y_j)`` in ``k^m ⊗ k^n`` over basis elements ``a``
    of the middle algebra, given its right action on the first factor and its left action
    on the second.
    '''
    if len(right_actions) != len(left_actions):
        raise DimensionMismatchError(
            f'middle algebra acts through {len(right_actions)} and {len(left_actions)} basis elements'
        )
    vectors: List[Dict[int, Scalar]] = []
    for rho, lam in zip(right_actions, left_actions):
        rho_cols = rho.transpose()._sparse_rows()
        lam_cols = lam.transpose()._sparse_rows()
        for i in range(m):
            for j in range(n):
                v: Dict[int, Scalar] = {}
                for k, x in rho_cols[i]:
                    v[k * n + j] = x
                for l, y in lam_cols[j]:
                    idx = i * n + l
                    v[idx] = field.norm(v.get(idx, 0) - y)
                if any(v.values()):
                    vectors.append(v)
    return Subspace.from_sparse(field, m * n, vectors)


def balanced_quotient(field: Field,
    right_actions: Sequence[Mat],
    left_actions: Sequence[Mat],
    m: int,
    n: int,
) -> Quotient:
    return quotient_by(m * n, balanced_relations(field, right_actions, left_actions, m, n))


@dataclass(frozen=True)
class FirmnessReport:
    '''
    .. code-block:: python

        from corita.algebra import FirmnessReport

    The multiplication ``mu: M ⊗_R R -> M`` (or ``R ⊗_R M -> M``) on the balanced
    carrier, the image ``MR``, and, when ``mu`` is bijective, its inverse ``d``.
    '''

    mu: Mat
    quotient: Quotient
    image: Subspace
    is_idempotent: bool
    is_firm: bool
    d: Optional[Mat]

    def to_report(self, name: str) -> Report:
        return Report.group(name, [
            Report.info('carrier', f'balanced tensor of dim {self.quotient.dim}'),
            Report.check('idempotent', self.is_idempotent, f'image dim {self.image.dim} of {self.mu.rows}'),
            Report.check('firm', self.is_firm, f'mu is {self.mu.rows}x{self.mu.cols} of rank {self.image.dim}'),
        ])


def firmness_of(quotient: Quotient, action: Mat) -> FirmnessReport:
    '''
    Firmness data from a balanced quotient and the flat action map defined on its ambient.
    '''
    mu = action @ quotient.section
    im = image(action)
    firm = is_iso(mu)
    return FirmnessReport(mu, quotient, im, im.dim == action.rows, firm, inverse(mu) if firm else None)


def tensor_square(R: Algebra) -> Quotient:
    ''' ``R ⊗_R R`` as a quotient of ``R ⊗_k R``. '''
    return balanced_quotient(R.field, R.right_mults, R.left_mults, R.dim, R.dim)


def firmness(R: Algebra) -> FirmnessReport:
    rep = firmness_of(tensor_square(R), R.mult_map)
    logger.debug('firmness of %r: idempotent=%s firm=%s', R, rep.is_idempotent, rep.is_firm)
    return rep


def firm_square(R: Algebra) -> Algebra:
    '''
    ``S = R ⊗_R R`` with ``(r1 ⊗ r1')(r2 ⊗ r2') = r1 r1' ⊗ r2 r2'``. For idempotent ``R``
    the result is firm; this is re-checked and a violation raises.
    '''
    n, f = R.dim, R.field
    q = tensor_square(R)
    proj_cols = q.projection.transpose()._sparse_rows()
    reps = [(idx // n, idx % n) for idx in q.representatives]
    m = q.dim

    def product(s: int, t: int) -> Vector:
        i, j = reps[s]
        k, l = reps[t]
        x, y = R.mult[i][j], R.mult[k][l]
        acc = [f.zero] * m
        for a, xa in enumerate(x):
            if not xa:
                continue
            for b, yb in enumerate(y):
                if not yb:
                    continue
                c = xa * yb
                for r, p in proj_cols[a * n + b]:
                    acc[r] = f.norm(acc[r] + c * p)
        return tuple(acc)

    label = f'{R.label}⊗{R.label}' if R.label else 'firm square'
    S = Algebra.from_products(f, m, product, label=label)
    if is_idempotent(R) and not firmness(S).is_firm:
        raise AxiomViolationError(f'firm square of idempotent {R!r} is not firm')
    return S


def firm_square_map(R: Algebra) -> Mat:
    '''
    The multiplication ``R ⊗_R R -> R`` in the basis of :func:`firm_square`; a ring map.
    '''
    return R.mult_map @ tensor_square(R).section


def _closure_failures(A: Algebra, S: Subspace, sidedness: Sidedness) -> List[Tuple[str, int, int]]:
    out: List[Tuple[str, int, int]] = []
    for a in range(A.dim):
        for s, v in enumerate(S.vectors):
            col = Mat._make(A.field, tuple((x,) for x in v), 1)
            if sidedness in ('left', 'two-sided') and not S.contains((A.left_mult(a) @ col).column_vector(0)):
                out.append(('left', a, s))
            if sidedness in ('right', 'two-sided') and not S.contains((A.right_mult(a) @ col).column_vector(0)):
                out.append(('right', a, s))
    return out


def subalgebra(A: Algebra, S: Subspace, label: str = '') -> Algebra:
    '''
    A multiplicatively closed subspace as an algebra in the coordinates of its rref basis.
    '''
    if S.ambient != A.dim:
        raise DimensionMismatchError(f'subspace of k^{S.ambient} in an algebra of dim {A.dim}')
    vs = S.vectors
    try:
        mult = [[S.coordinates(A.product(x, y)) for y in vs] for x in vs]
    except InvalidOperationError as e:
        raise HypothesisError(f'subspace of dim {S.dim} is not closed under multiplication') from e
    unit = None
    if A.unit is not None and S.contains(A.unit):
        unit = S.coordinates(A.unit)
    return Algebra(A.field, mult, unit, label)


@dataclass(frozen=True)
class IdealWitness:
    '''
    .. code-block:: python

        from corita.algebra import IdealWitness

    A subspace of ``ambient`` verified closed under the claimed multiplications.
    Build it with :func:`ideal`.
    '''

    ambient: Algebra
    subspace: Subspace
    sidedness: Sidedness

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def algebra(self) -> Algebra:
        return subalgebra(self.ambient, self.subspace, f'ideal of {self.ambient.label}' if self.ambient.label else '')

    @property
    def inclusion(self) -> Mat:
        return self.subspace.inclusion()

    def coordinates(self, v: Sequence[Scalar]) -> Vector:
        return self.subspace.coordinates(v)


def ideal(A: Algebra,
    vectors: Any,
    sidedness: Sidedness = 'two-sided',
) -> IdealWitness:
    '''
    Wraps a subspace (or an iterable of vectors spanning it) as an ideal of ``A``.
    '''
    S = vectors if isinstance(vectors, Subspace) else Subspace(A.field, A.dim, vectors)
    if S.ambient != A.dim:
        raise DimensionMismatchError(f'subspace of k^{S.ambient} in an algebra of dim {A.dim}')
    bad = _closure_failures(A, S, sidedness)
    if bad:
        side, a, s = bad[0]
        raise HypothesisError(f'not a {sidedness} ideal: {side} multiplication by e_{a} leaves it at basis vector {s}')
    return IdealWitness(A, S, sidedness)


@dataclass(frozen=True)
class CoreResult:
    '''
    .. code-block:: python

        from corita.algebra import CoreResult

    Output of :func:`idempotent_core`: the stable ideal, the number of products computed
    and the strictly decreasing chain ``I_1 ⊋ I_2 ⊋ ...``.
    '''

    ideal: IdealWitness
    steps: int
    chain: Tuple[Subspace, ...]


def idempotent_core(I: IdealWitness) -> CoreResult:
    '''
    Iterates ``I_{n+1} = I I_n`` until it stabilizes. The limit is the largest idempotent
    subring of ``I`` and a left ideal of the ambient algebra.
    '''
    if I.sidedness == 'right':
        raise HypothesisError('idempotent core needs a left or two-sided ideal')
    A = I.ambient
    current = I.subspace
    chain = [current]
    steps = 0
    while True:
        nxt = span_product(A, I.subspace, current)
        steps += 1
        if nxt == current:
            break
        chain.append(nxt)
        current = nxt
    logger.debug('idempotent core of dim %d reached dim %d in %d steps', I.dim, current.dim, steps)
    return CoreResult(ideal(A, current, 'left'), steps, tuple(chain))


def ideal_powers(I: IdealWitness) -> List[Subspace]:
    '''
    ``I, I^2, I^3, ...`` by repeated span products, up to the first repetition.
    '''
    A = I.ambient
    powers = [I.subspace]
    while True:
        nxt = span_product(A, powers[-1], I.subspace)
        if nxt == powers[-1]:
            return powers
        powers.append(nxt)


def maximality_check(core: CoreResult, candidates: Iterable[Subspace]) -> Report:
    '''
    Every idempotent subring among ``candidates`` that lies in the original ideal must lie
    in the core.
    '''
    A = core.ideal.ambient
    outer = core.chain[0]
    items = []
    for k, B0 in enumerate(candidates):
        if not B0.is_subspace_of(outer):
            items.append(Report.info(f'candidate {k}', 'not inside the ideal'))
            continue
        if span_product(A, B0, B0) != B0:
            items.append(Report.info(f'candidate {k}', 'not an idempotent subring'))
            continue
        items.append(Report.check(f'candidate {k}', B0.is_subspace_of(core.ideal.subspace), f'dim {B0.dim}'))
    return Report.group('maximality', items)


def opposite(A: Algebra) -> Algebra:
    n = A.dim
    return Algebra(A.field, [[A.mult[j][i] for j in range(n)] for i in range(n)], A.unit, f'{A.label}^op' if A.label else '')


def trace_form(A: Algebra) -> Mat:
    ''' ``G[i][j] = trace(L_{e_i e_j})``. '''
    f, n = A.field, A.dim
    traces = [sum((A.mult[k][j][j] for j in range(n)), f.zero) for k in range(n)]
    rows = []
    for i in range(n):
        rows.append(tuple(
            f.norm(sum((c * t for c, t in zip(A.mult[i][j], traces)), f.zero)) for j in range(n)
        ))
    return Mat._make(f, tuple(rows), n)


def quotient_algebra(A: Algebra, I: Subspace) -> Tuple[Algebra, Quotient]:
    '''
    ``A / I`` for a two-sided ideal ``I``, with the quotient map.
    '''
    ideal(A, I, 'two-sided')
    q = quotient_by(A.dim, I)
    sec = q.section
    reps = [sec.column_vector(s) for s in range(q.dim)]

    def proj(v: Vector) -> Vector:
        return (q.projection @ Mat._make(A.field, tuple((x,) for x in v), 1)).column_vector(0)

    mult = [[proj(A.product(x, y)) for y in reps] for x in reps]
    unit = None if A.unit is None else proj(A.unit)
    return Algebra(A.field, mult, unit, f'{A.label}/I' if A.label else ''), q


def radical_char0(A: Algebra) -> Subspace:
    '''
    The Jacobson radical over a field of characteristic zero, as the radical of the trace
    form. Non-unital algebras are handled through their Dorroh extension.
    '''
    if A.field.characteristic != 0:
        raise HypothesisError('the trace form radical needs characteristic 0')
    if not A.is_unital:
        hat = dorroh(A)
        rad = radical_char0(hat)
        return Subspace(A.field, A.dim, (v[:A.dim] for v in rad.vectors))
    rad = kernel(trace_form(A))
    if rad.dim:
        Abar, _ = quotient_algebra(A, rad)
        if trace_form(Abar).rank() != Abar.dim:
            raise AxiomViolationError(f'{A!r} modulo its trace radical is not semisimple')
    return rad


@dataclass(frozen=True)
class LocalUnits:
    '''
    .. code-block:: python

        from corita.algebra import LocalUnits

    Verdict of :func:`has_right_local_units` with an element ``e`` such that ``b e = b``
    for every basis element ``b``.
    '''

    verdict: bool
    witness: Optional[Vector]

    def __bool__(self) -> bool:
        return self.verdict


def has_right_local_units(B: Algebra) -> LocalUnits:
    f, n = B.field, B.dim
    if n == 0:
        return LocalUnits(True, ())
    A = Mat.vstack(f, n, B.left_mults)
    rhs = Mat.column(f, [x for i in range(n) for x in B.basis_vector(i)])
    res = rref_solve(A, rhs)
    if res.solution is None:
        return LocalUnits(False, None)
    return LocalUnits(True, res.solution.column_vector(0))


def find_unit(A: Algebra) -> Optional[Algebra]:
    '''
    ``A`` with its unit attached, solving ``e b = b e = b`` on the basis when no unit is
    recorded; ``None`` when ``A`` has no unit.
    '''
    if A.is_unital:
        return A
    f, n = A.field, A.dim
    system = Mat.vstack(f, n, A.left_mults + A.right_mults)
    basis = [x for i in range(n) for x in A.basis_vector(i)]
    res = rref_solve(system, Mat.column(f, basis + basis))
    if res.solution is None:
        return None
    logger.debug('found a unit of %r', A)
    return Algebra(f, A.mult, res.solution.column_vector(0), A.label)


def _unit_vector(f: Field, n: int, i: int) -> Vector:
    z, o = f.zero, f.one
    return tuple(o if k == i else z for k in range(n))


def matrix_algebra(n: int, field: Field = QQ) -> Algebra:
    ''' ``M_n(k)`` with basis ``e_{ij}`` at index ``i * n + j``. '''
    N = n * n
    z = field.zero

    def product(a: int, b: int) -> Vector:
        i, j = divmod(a, n)
        k, l = divmod(b, n)
        return _unit_vector(field, N, i * n + l) if j == k else (z,) * N

    unit = [field.one if a // n == a % n else z for a in range(N)]
    return Algebra.from_products(field, N, product, unit, f'M{n}')


def upper_triangular(n: int, field: Field = QQ) -> Algebra:
    ''' Upper triangular ``n x n`` matrices, basis ``e_{ij}`` with ``i <= j`` in lexicographic order. '''
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    index = {p: k for k, p in enumerate(pairs)}
    N = len(pairs)
    z = field.zero

    def product(a: int, b: int) -> Vector:
        i, j = pairs[a]
        k, l = pairs[b]
        return _unit_vector(field, N, index[(i, l)]) if j == k else (z,) * N

    unit = [field.one if i == j else z for i, j in pairs]
    return Algebra.from_products(field, N, product, unit, f'UT{n}')


def upper_triangular_index(n: int, i: int, j: int) -> int:
    return [(a, b) for a in range(n) for b in range(a, n)].index((i, j))


def product_algebra(m: int, field: Field = QQ) -> Algebra:
    ''' ``k x ... x k`` with orthogonal idempotent basis. '''
    z = field.zero
    return Algebra.from_products(
        field, m,
        lambda i, j: _unit_vector(field, m, i) if i == j else (z,) * m,
        [field.one] * m,
        'k' if m == 1 else f'k^{m}',
    )


def dual_numbers(field: Field = QQ) -> Algebra:
    ''' ``k[n]/(n^2)`` with basis ``1, n``. '''
    table = {(0, 0): 0, (0, 1): 1, (1, 0): 1}
    z = field.zero
    return Algebra.from_products(
        field, 2,
        lambda i, j: _unit_vector(field, 2, table[(i, j)]) if (i, j) in table else (z, z),
        [field.one, z],
        'k[n]/(n2)',
    )


def null_algebra(n: int, field: Field = QQ) -> Algebra:
    ''' ``k^n`` with the zero product. '''
    z = field.zero
    return Algebra.from_products(field, n, lambda i, j: (z,) * n, None, f'null{n}')


def group_algebra(n: int, field: Field = QQ) -> Algebra:
    ''' ``k[Z/n]`` with basis ``g^0, ..., g^{n-1}``. '''
    return Algebra.from_products(
        field, n,
        lambda i, j: _unit_vector(field, n, (i + j) % n),
        _unit_vector(field, n, 0),
        f'kZ{n}',
    )


def field_algebra(field: Field = QQ) -> Algebra:
    return Algebra(field, [[[field.one]]], [field.one], 'k')
