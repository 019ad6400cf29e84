'''
Finite-dimensional one- and two-sided modules over possibly non-unital algebras.

A left action is stored as one matrix ``lambda(e_i)`` per basis element of the acting algebra,
with column ``j`` equal to ``e_i m_j``; a right action as ``rho(e_a)`` with column ``j`` equal
to ``m_j e_a``. Hence ``lambda`` is multiplicative and ``rho(r r') = rho(r') rho(r)``.
'''
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import (
    Algebra,
    FirmnessReport,
    IdealWitness,
    balanced_quotient,
    combine,
    dorroh,
    find_unit,
    firmness_of,
    radical_char0,
)
from .corita_error import (
    AxiomViolationError,
    DimensionMismatchError,
    HypothesisError,
    InvalidOperationError,
    SchemaError,
)
from .exactlin import (
    Field,
    Mat,
    Quotient,
    Subspace,
    image,
    inverse,
    is_iso,
    kernel,
    rref_solve,
)
from .more_typing import Linearity, Scalar, Side, Vector
from .report import CATALOG_SCOPE, Report


logger = logging.getLogger(__name__)


class Bimodule:
    '''
    .. code-block:: python

        from corita.bimodule import Bimodule

    A k-space with an optional left action of ``left`` and an optional right action of
    ``right``. A module that came out of :func:`tensor_over` remembers that construction
    in ``origin``.
    '''

    __slots__ = (
        '_field', '_dim', '_left', '_right', '_left_action', '_right_action',
        '_label', '_origin', '_lact', '_ract',
    )

    _field: Field
    _dim: int
    _left: Optional[Algebra]
    _right: Optional[Algebra]
    _left_action: Tuple[Mat, ...]
    _right_action: Tuple[Mat, ...]
    _label: str
    _origin: Optional[TensorProduct]
    _lact: Optional[Mat]
    _ract: Optional[Mat]

    def __init__(self,
        field: Field,
        dim: int,
        left: Optional[Algebra] = None,
        left_action: Sequence[Mat] = (),
        right: Optional[Algebra] = None,
        right_action: Sequence[Mat] = (),
        label: str = '',
        origin: Optional[TensorProduct] = None,
    ):
        for alg, acts, side in ((left, left_action, 'left'), (right, right_action, 'right')):
            expected = 0 if alg is None else alg.dim
            if len(acts) != expected:
                raise DimensionMismatchError(f'{side} action lists {len(acts)} matrices for an algebra of dim {expected}')
            for m in acts:
                if m.shape != (dim, dim):
                    raise DimensionMismatchError(f'{side} action matrix {m.rows}x{m.cols} on a module of dim {dim}')
        self._field = field
        self._dim = dim
        self._left = left
        self._right = right
        self._left_action = tuple(left_action)
        self._right_action = tuple(right_action)
        self._label = label
        self._origin = origin
        self._lact = None
        self._ract = None

    @property
    def field(self) -> Field:
        return self._field

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def left(self) -> Optional[Algebra]:
        return self._left

    @property
    def right(self) -> Optional[Algebra]:
        return self._right

    @property
    def left_action(self) -> Tuple[Mat, ...]:
        return self._left_action

    @property
    def right_action(self) -> Tuple[Mat, ...]:
        return self._right_action

    @property
    def label(self) -> str:
        return self._label

    @property
    def origin(self) -> Optional[TensorProduct]:
        return self._origin

    def relabel(self, label: str) -> Bimodule:
        return Bimodule(self._field, self._dim, self._left, self._left_action,
            self._right, self._right_action, label, self._origin)

    def left_only(self) -> Bimodule:
        return Bimodule(self._field, self._dim, self._left, self._left_action,
            label=self._label, origin=self._origin)

    def right_only(self) -> Bimodule:
        return Bimodule(self._field, self._dim, right=self._right, right_action=self._right_action,
            label=self._label, origin=self._origin)

    def left_act_by(self, x: Sequence[Scalar]) -> Mat:
        return combine(self._field, x, self._left_action, self._dim, self._dim)

    def right_act_by(self, x: Sequence[Scalar]) -> Mat:
        return combine(self._field, x, self._right_action, self._dim, self._dim)

    @property
    def ract(self) -> Mat:
        '''
        ``M ⊗_k R -> M``, column ``i * dim R + a`` is ``m_i e_a``.
        '''
        if self._ract is None:
            R = self._need('right')
            n = R.dim
            cols = [self._right_action[a].column_vector(i) for i in range(self._dim) for a in range(n)]
            self._ract = _from_cols(self._field, self._dim, cols)
        return self._ract

    @property
    def lact(self) -> Mat:
        '''
        ``R ⊗_k M -> M``, column ``a * dim M + i`` is ``e_a m_i``.
        '''
        if self._lact is None:
            R = self._need('left')
            cols = [self._left_action[a].column_vector(i) for a in range(R.dim) for i in range(self._dim)]
            self._lact = _from_cols(self._field, self._dim, cols)
        return self._lact

    def _need(self, side: Side) -> Algebra:
        alg = self._left if side == 'left' else self._right
        if alg is None:
            raise DimensionMismatchError(f'{self!r} carries no {side} action')
        return alg

    def __eq__(self, o: object) -> bool:
        if not isinstance(o, Bimodule):
            return NotImplemented
        return self is o or (
            self._field == o._field
            and self._dim == o._dim
            and self._left == o._left
            and self._right == o._right
            and self._left_action == o._left_action
            and self._right_action == o._right_action
        )

    def __hash__(self) -> int:
        return hash((self._dim, self._left, self._right))

    def __repr__(self) -> str:
        sides = ''.join(s for s, a in (('L', self._left), ('R', self._right)) if a is not None)
        return f'Bimodule({self._label or "?"}, dim={self._dim}, sides={sides or "-"})'

    def to_json(self) -> Dict[str, Any]:
        return {
            'field': self._field.describe(),
            'dim': self._dim,
            'left': None if self._left is None else self._left.to_json(),
            'right': None if self._right is None else self._right.to_json(),
            'left_action': [m.to_json() for m in self._left_action],
            'right_action': [m.to_json() for m in self._right_action],
            'label': self._label,
        }

    @staticmethod
    def from_json(data: Mapping[str, Any], algebras: Optional[Mapping[str, Algebra]] = None) -> Bimodule:
        '''
        Reads a module; ``left`` and ``right`` are inline algebras or names in ``algebras``.
        '''
        def algebra(ref: Any) -> Optional[Algebra]:
            if ref is None:
                return None
            if isinstance(ref, str):
                if algebras is None or ref not in algebras:
                    raise SchemaError(f'unknown algebra reference {ref!r}')
                return algebras[ref]
            return Algebra.from_json(ref)

        try:
            dim = int(data['dim'])
        except (KeyError, TypeError, ValueError) as e:
            raise SchemaError(f'module needs a dim: {e}') from e
        left = algebra(data.get('left'))
        right = algebra(data.get('right'))
        field = (left or right).field if (left or right) is not None else Field.from_json(data.get('field'))
        try:
            return Bimodule(
                field, dim,
                left, [Mat.from_json(field, m) for m in data.get('left_action', [])],
                right, [Mat.from_json(field, m) for m in data.get('right_action', [])],
                str(data.get('label', '')),
            )
        except DimensionMismatchError as e:
            raise SchemaError(str(e)) from e


def _from_cols(field: Field, rows: int, cols: Sequence[Vector]) -> Mat:
    return Mat.from_columns(field, rows, cols) if cols else Mat.zeros(field, rows, 0)


@dataclass(frozen=True)
class TensorProduct:
    '''
    .. code-block:: python

        from corita.bimodule import TensorProduct

    How a module ``M ⊗_R N`` was built: the factors and the balanced quotient of
    ``M ⊗_k N``.
    '''

    left: Bimodule
    middle: Algebra
    right: Bimodule
    quotient: Quotient


def validate_module(M: Bimodule) -> Report:
    '''
    Checks that both actions are algebra actions, that they commute and that a unit acts
    as the identity.
    '''
    items: List[Report] = []
    ident = Mat.identity(M.field, M.dim)
    if M.left is not None:
        A = M.left
        bad = [
            [i, j] for i in range(A.dim) for j in range(A.dim)
            if M.left_act_by(A.mult[i][j]) != M.left_action[i] @ M.left_action[j]
        ]
        items.append(Report.check('left associativity', not bad, f'{A.dim ** 2} basis pairs', bad))
        if A.unit is not None:
            items.append(Report.check('left unit', M.left_act_by(A.unit) == ident))
    if M.right is not None:
        B = M.right
        bad = [
            [i, j] for i in range(B.dim) for j in range(B.dim)
            if M.right_act_by(B.mult[i][j]) != M.right_action[j] @ M.right_action[i]
        ]
        items.append(Report.check('right associativity', not bad, f'{B.dim ** 2} basis pairs', bad))
        if B.unit is not None:
            items.append(Report.check('right unit', M.right_act_by(B.unit) == ident))
    if M.left is not None and M.right is not None:
        bad = [
            [i, a] for i, lam in enumerate(M.left_action) for a, rho in enumerate(M.right_action)
            if lam @ rho != rho @ lam
        ]
        items.append(Report.check('actions commute', not bad, '', bad))
    return Report.group('module', items, M.label)


def checked(M: Bimodule) -> Bimodule:
    rep = validate_module(M)
    if not rep.passed:
        raise AxiomViolationError(f'{M!r} is not a module', rep)
    return M


def regular_module(R: Algebra, sides: str = 'bi') -> Bimodule:
    ''' ``R`` acting on itself by multiplication; ``sides`` is ``left``, ``right`` or ``bi``. '''
    left = R if sides in ('left', 'bi') else None
    right = R if sides in ('right', 'bi') else None
    return Bimodule(
        R.field, R.dim,
        left, R.left_mults if left is not None else (),
        right, R.right_mults if right is not None else (),
        R.label or 'R',
    )


def zero_module(field: Field, left: Optional[Algebra] = None, right: Optional[Algebra] = None) -> Bimodule:
    z = Mat.zeros(field, 0, 0)
    return Bimodule(
        field, 0,
        left, [z] * (left.dim if left else 0),
        right, [z] * (right.dim if right else 0),
        '0',
    )


def row_vectors(A: Algebra, n: int) -> Bimodule:
    '''
    ``k^n`` as row vectors, a right module over ``A = M_n(k)`` in the ``e_{ij}`` basis.
    '''
    f = A.field
    acts = []
    for i in range(n):
        for j in range(n):
            rows = [[f.zero] * n for _ in range(n)]
            rows[j][i] = f.one
            acts.append(Mat(f, rows, n))
    return Bimodule(f, n, right=A, right_action=acts, label=f'k^{n} rows')


def column_vectors(A: Algebra, n: int) -> Bimodule:
    '''
    ``k^n`` as column vectors, a left module over ``A = M_n(k)`` in the ``e_{ij}`` basis.
    '''
    f = A.field
    acts = []
    for i in range(n):
        for j in range(n):
            rows = [[f.zero] * n for _ in range(n)]
            rows[i][j] = f.one
            acts.append(Mat(f, rows, n))
    return Bimodule(f, n, left=A, left_action=acts, label=f'k^{n} columns')


def direct_sum(M: Bimodule, N: Bimodule) -> Bimodule:
    if M.left != N.left or M.right != N.right:
        raise DimensionMismatchError(f'direct sum of {M!r} and {N!r} over different algebras')
    f = M.field

    def block(a: Mat, b: Mat) -> Mat:
        top = Mat.hstack(f, M.dim, [a, Mat.zeros(f, M.dim, N.dim)])
        bottom = Mat.hstack(f, N.dim, [Mat.zeros(f, N.dim, M.dim), b])
        return Mat.vstack(f, M.dim + N.dim, [top, bottom])

    return Bimodule(
        f, M.dim + N.dim,
        M.left, [block(a, b) for a, b in zip(M.left_action, N.left_action)],
        M.right, [block(a, b) for a, b in zip(M.right_action, N.right_action)],
        f'{M.label}⊕{N.label}',
    )


def submodule(M: Bimodule, S: Subspace, label: str = '') -> Bimodule:
    '''
    An invariant subspace with the restricted actions, in the coordinates of its rref basis.
    '''
    inc = S.inclusion()
    try:
        left = [S.coordinate_matrix(lam @ inc) for lam in M.left_action]
        right = [S.coordinate_matrix(rho @ inc) for rho in M.right_action]
    except InvalidOperationError as e:
        raise HypothesisError(f'subspace of dim {S.dim} is not a submodule of {M!r}') from e
    return Bimodule(M.field, S.dim, M.left, left, M.right, right, label)


def restrict(M: Bimodule, f: Mat, R: Algebra, side: Side) -> Bimodule:
    '''
    Restriction of scalars along a ring map ``f: R -> S`` acting on the given side.
    '''
    S = M._need(side)
    if f.shape != (S.dim, R.dim):
        raise DimensionMismatchError(f'ring map {f.rows}x{f.cols} does not go from dim {R.dim} to dim {S.dim}')
    acts = M.left_action if side == 'left' else M.right_action
    new = [combine(M.field, f.column_vector(r), acts, M.dim, M.dim) for r in range(R.dim)]
    if side == 'left':
        return Bimodule(M.field, M.dim, R, new, M.right, M.right_action, M.label)
    return Bimodule(M.field, M.dim, M.left, M.left_action, R, new, M.label)


def tensor_over(M: Bimodule, R: Algebra, N: Bimodule, label: str = '') -> Bimodule:
    '''
    ``M ⊗_R N`` as the quotient of ``M ⊗_k N`` by the balanced relations. The result keeps
    the left action of ``M`` and the right action of ``N``; its ``origin`` records the
    construction.
    '''
    if M.right != R or N.left != R:
        raise DimensionMismatchError(f'{M!r} and {N!r} are not right and left modules over {R!r}')
    f = M.field
    q = balanced_quotient(f, M.right_action, N.left_action, M.dim, N.dim)
    P, S = q.projection, q.section
    idN, idM = Mat.identity(f, N.dim), Mat.identity(f, M.dim)
    left = [P @ lam.kron(idN) @ S for lam in M.left_action]
    right = [P @ idM.kron(rho) @ S for rho in N.right_action]
    logger.debug('tensor %s ⊗ %s over dim %d: %d -> %d', M.label, N.label, R.dim, M.dim * N.dim, q.dim)
    return Bimodule(
        f, q.dim,
        M.left, left, N.right, right,
        label or f'{M.label}⊗{N.label}',
        TensorProduct(M, R, N, q),
    )


def _origin(T: Bimodule) -> TensorProduct:
    if T.origin is None:
        raise InvalidOperationError(f'{T!r} is not a tensor product')
    return T.origin


def section(T: Bimodule) -> Mat:
    ''' ``M ⊗_R N -> M ⊗_k N`` one level down, unlike :func:`flat_section`. '''
    return _origin(T).quotient.section


def projection(T: Bimodule) -> Mat:
    return _origin(T).quotient.projection


def tensor_map(T1: Bimodule, f: Mat, g: Mat, T2: Bimodule) -> Mat:
    '''
    ``f ⊗ g`` between two tensor products, on their quotient bases.
    '''
    o1, o2 = _origin(T1), _origin(T2)
    return o2.quotient.projection @ f.kron(g) @ o1.quotient.section


def atoms(M: Bimodule) -> Tuple[Bimodule, ...]:
    ''' The untensored factors of an iterated tensor product, left to right. '''
    if M.origin is None:
        return (M,)
    return atoms(M.origin.left) + atoms(M.origin.right)


def flat_section(M: Bimodule) -> Mat:
    '''
    Lifts an element of an iterated tensor product to the k-tensor product of its atoms.
    '''
    if M.origin is None:
        return Mat.identity(M.field, M.dim)
    o = M.origin
    return flat_section(o.left).kron(flat_section(o.right)) @ o.quotient.section


def flat_projection(M: Bimodule) -> Mat:
    if M.origin is None:
        return Mat.identity(M.field, M.dim)
    o = M.origin
    return o.quotient.projection @ flat_projection(o.left).kron(flat_projection(o.right))


def associator(source: Bimodule, target: Bimodule) -> Mat:
    '''
    The canonical map between two bracketings of the same iterated tensor product.
    '''
    a, b = atoms(source), atoms(target)
    if [x.dim for x in a] != [y.dim for y in b]:
        raise DimensionMismatchError(f'{source!r} and {target!r} have different factors')
    return flat_projection(target) @ flat_section(source)


class HomSpace:
    '''
    .. code-block:: python

        from corita.bimodule import HomSpace

    The space of module maps ``source -> target`` of a given linearity, held by a basis of
    ``dim target x dim source`` matrices.
    '''

    __slots__ = ('_source', '_target', '_linearity', '_basis', '_subspace')

    _source: Bimodule
    _target: Bimodule
    _linearity: Linearity
    _basis: Tuple[Mat, ...]
    _subspace: Subspace

    def __init__(self,
        source: Bimodule,
        target: Bimodule,
        linearity: Linearity,
        subspace: Subspace,
    ):
        self._source = source
        self._target = target
        self._linearity = linearity
        self._subspace = subspace
        self._basis = tuple(
            Mat.unvec(source.field, v, target.dim, source.dim) for v in subspace.vectors
        )

    @property
    def source(self) -> Bimodule:
        return self._source

    @property
    def target(self) -> Bimodule:
        return self._target

    @property
    def linearity(self) -> Linearity:
        return self._linearity

    @property
    def dim(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> Tuple[Mat, ...]:
        return self._basis

    @property
    def subspace(self) -> Subspace:
        return self._subspace

    def matrix(self, coords: Sequence[Scalar]) -> Mat:
        return combine(self._source.field, coords, self._basis, self._target.dim, self._source.dim)

    def contains(self, f: Mat) -> bool:
        return self._subspace.contains(f.vec().column_vector(0))

    def coordinates(self, f: Mat) -> Vector:
        return self._subspace.coordinates(f.vec().column_vector(0))

    def restrict(self, defect: Callable[[Mat], Mat]) -> HomSpace:
        '''
        The subspace of maps ``f`` with ``defect(f) = 0``, for a linear ``defect``.
        '''
        f = self._source.field
        if not self._basis:
            return self
        D = Mat.hstack(f, defect(self._basis[0]).vec().rows, [defect(B).vec() for B in self._basis])
        vectors = [self.matrix(c).vec().column_vector(0) for c in kernel(D).vectors]
        sub = Subspace(f, self._subspace.ambient, vectors)
        return HomSpace(self._source, self._target, self._linearity, sub)

    def module(self) -> Bimodule:
        '''
        The residual actions: for right-linear maps ``f . b = f lambda_M(b)`` and
        ``c . f = lambda_N(c) f``; for left-linear maps ``b . f = f rho_M(b)`` and
        ``f . c = rho_N(c) f``.
        '''
        M, N = self._source, self._target
        f = M.field
        left: Optional[Algebra] = None
        right: Optional[Algebra] = None
        lacts: List[Mat] = []
        racts: List[Mat] = []

        def act(op: Callable[[Mat], Mat]) -> Mat:
            cols = [self.coordinates(op(B)) for B in self._basis]
            return _from_cols(f, self.dim, cols)

        if self._linearity == 'right':
            if M.left is not None:
                right = M.left
                racts = [act(lambda B, x=lam: B @ x) for lam in M.left_action]
            if N.left is not None:
                left = N.left
                lacts = [act(lambda B, x=lam: x @ B) for lam in N.left_action]
        elif self._linearity == 'left':
            if M.right is not None:
                left = M.right
                lacts = [act(lambda B, x=rho: B @ x) for rho in M.right_action]
            if N.right is not None:
                right = N.right
                racts = [act(lambda B, x=rho: x @ B) for rho in N.right_action]
        return Bimodule(f, self.dim, left, lacts, right, racts, f'Hom({M.label},{N.label})')

    def endomorphism_algebra(self) -> Algebra:
        if self._source != self._target:
            raise InvalidOperationError('composition product needs source == target')
        f = self._source.field
        unit = None
        ident = Mat.identity(f, self._source.dim)
        if self.contains(ident):
            unit = self.coordinates(ident)
        mult = [[self.coordinates(a @ b) for b in self._basis] for a in self._basis]
        return Algebra(f, mult, unit, f'End({self._source.label})')

    def __repr__(self) -> str:
        return f'HomSpace({self._source.label}->{self._target.label}, {self._linearity}, dim={self.dim})'


def _linearity_rows(M: Bimodule, N: Bimodule, side: Side) -> List[Mat]:
    f = M.field
    idM, idN = Mat.identity(f, M.dim), Mat.identity(f, N.dim)
    if side == 'right':
        pairs = zip(M.right_action, N.right_action)
    else:
        pairs = zip(M.left_action, N.left_action)
    # vec(N_a F) - vec(F M_a) in row-major vec
    return [n_a.kron(idM) - idN.kron(m_a.transpose()) for m_a, n_a in pairs]


def hom(M: Bimodule, N: Bimodule, linearity: Linearity = 'right') -> HomSpace:
    '''
    Module maps ``M -> N`` commuting with the right actions, the left actions, both
    (``bi``) or neither (``k``).
    '''
    f = M.field
    rows: List[Mat] = []
    for side in ('left', 'right'):
        if linearity not in (side, 'bi'):
            continue
        if (M.left if side == 'left' else M.right) != (N.left if side == 'left' else N.right):
            raise DimensionMismatchError(f'{M!r} and {N!r} have different {side} algebras')
        if (M.left if side == 'left' else M.right) is None:
            raise DimensionMismatchError(f'{M!r} has no {side} action')
        rows.extend(_linearity_rows(M, N, side))
    n = M.dim * N.dim
    if rows:
        system = Mat.vstack(f, n, rows)
        sub = kernel(system)
    else:
        sub = Subspace.whole(f, n)
    logger.debug('hom %s -> %s (%s): dim %d', M.label, N.label, linearity, sub.dim)
    return HomSpace(M, N, linearity, sub)


def module_firmness(M: Bimodule, R: Algebra, side: Side = 'right') -> FirmnessReport:
    '''
    Firmness of ``M`` over ``R``: the multiplication ``M ⊗_R R -> M`` (or ``R ⊗_R M -> M``)
    and the image ``MR`` (or ``RM``).
    '''
    if M._need(side) != R:
        raise DimensionMismatchError(f'{M!r} is not a {side} module over {R!r}')
    f = M.field
    if side == 'right':
        q = balanced_quotient(f, M.right_action, R.left_mults, M.dim, R.dim)
        return firmness_of(q, M.ract)
    q = balanced_quotient(f, R.right_mults, M.left_action, R.dim, M.dim)
    return firmness_of(q, M.lact)


def functor_J(M: Bimodule, I: IdealWitness) -> Bimodule:
    '''
    Extends a firm right module over a right ideal ``R`` of a unital algebra ``A`` to a right
    ``A``-module by ``m . a = m^r (r a)`` where ``m^r ⊗ r`` is the preimage of ``m`` under the
    multiplication.
    '''
    if I.sidedness == 'left':
        raise HypothesisError('the ideal must be a right or two-sided ideal')
    A = I.ambient
    R = I.algebra
    rep = module_firmness(M, R, 'right')
    if rep.d is None:
        raise HypothesisError(f'{M!r} is not a firm right module over the ideal')
    f = M.field
    sec_d = rep.quotient.section @ rep.d
    inc = I.inclusion
    idM = Mat.identity(f, M.dim)
    acts = []
    for a in range(A.dim):
        g = I.subspace.coordinate_matrix(A.right_mult(a) @ inc)
        acts.append(M.ract @ idM.kron(g) @ sec_d)
    J = Bimodule(f, M.dim, M.left, M.left_action, A, acts, f'J({M.label})')
    back = restrict(J, inc, R, 'right')
    if back.right_action != M.right_action:
        raise AxiomViolationError(f'restricting J({M.label}) does not give back the module')
    return J


def dorroh_module(M: Bimodule, side: Side = 'right') -> Bimodule:
    ''' ``M`` over the Dorroh extension, the adjoined unit acting as the identity. '''
    R = M._need(side)
    hat = dorroh(R)
    ident = Mat.identity(M.field, M.dim)
    if side == 'left':
        return Bimodule(M.field, M.dim, hat, M.left_action + (ident,), M.right, M.right_action, M.label)
    return Bimodule(M.field, M.dim, M.left, M.left_action, hat, M.right_action + (ident,), M.label)


def tensor_lemma_check(M: Bimodule, I: IdealWitness, P: Bimodule) -> Report:
    '''
    For a right ``A``-module ``M`` with ``MR = M`` and a right ideal ``R`` of ``A``, the
    canonical map ``M ⊗_R P -> M ⊗_A P`` is bijective.
    '''
    A = I.ambient
    R = I.algebra
    inc = I.inclusion
    M_R = restrict(M, inc, R, 'right')
    P_R = restrict(P, inc, R, 'left')
    MR = image(M_R.ract) if R.dim else Subspace.zero(M.field, M.dim)
    if MR.dim != M.dim:
        return Report.unmet('tensor lemma', f'MR has dim {MR.dim}, M has dim {M.dim}')
    T_R = tensor_over(M_R, R, P_R)
    T_A = tensor_over(M, A, P)
    comp = _origin(T_A).quotient.projection @ _origin(T_R).quotient.section
    return Report.check(
        'tensor lemma', is_iso(comp),
        f'M⊗_R P dim {T_R.dim}, M⊗_A P dim {T_A.dim}',
    )


def dorroh_tensor_check(M: Bimodule, R: Algebra, N: Bimodule) -> Report:
    ''' ``M ⊗_R N`` agrees with the tensor product over the Dorroh extension. '''
    T = tensor_over(M, R, N)
    Mh = dorroh_module(M, 'right')
    Nh = dorroh_module(N, 'left')
    Th = tensor_over(Mh, dorroh(R), Nh)
    comp = _origin(Th).quotient.projection @ _origin(T).quotient.section
    return Report.check('dorroh tensor', is_iso(comp), f'dims {T.dim} and {Th.dim}')


def free_cover(M: Bimodule, side: Side = 'right') -> Tuple[Bimodule, Mat]:
    '''
    ``M ⊗_k A`` (or ``A ⊗_k M``) with the free action and its action map onto ``M``.
    '''
    A = M._need(side)
    f = M.field
    idM = Mat.identity(f, M.dim)
    if side == 'right':
        F = Bimodule(f, M.dim * A.dim, right=A, right_action=[idM.kron(r) for r in A.right_mults], label='free')
        return F, M.ract
    F = Bimodule(f, A.dim * M.dim, left=A, left_action=[l.kron(idM) for l in A.left_mults], label='free')
    return F, M.lact


@dataclass(frozen=True)
class Projectivity:
    '''
    .. code-block:: python

        from corita.bimodule import Projectivity

    Verdict of :func:`is_projective` with a module splitting of the free cover.
    '''

    verdict: bool
    splitting: Optional[Mat]
    over_dorroh: bool = False

    def __bool__(self) -> bool:
        return self.verdict


def is_projective(M: Bimodule, side: Side = 'right') -> Projectivity:
    '''
    Projectivity over a unital algebra, decided by solving for a module map ``s`` with
    ``pi s = id`` where ``pi`` is the free cover. Over a non-unital algebra the module is
    tested over the Dorroh extension.
    '''
    A = M._need(side)
    if not A.is_unital:
        res = is_projective(dorroh_module(M, side), side)
        return Projectivity(res.verdict, res.splitting, True)
    f = M.field
    if M.dim == 0:
        return Projectivity(True, Mat.zeros(f, 0, 0))
    free, pi = free_cover(M, side)
    H = hom(M, free, side)
    if not H.dim:
        return Projectivity(False, None)
    system = Mat.hstack(f, M.dim * M.dim, [(pi @ B).vec() for B in H.basis])
    res = rref_solve(system, Mat.identity(f, M.dim).vec())
    if res.solution is None:
        return Projectivity(False, None)
    s = H.matrix(res.solution.column_vector(0))
    return Projectivity(True, s)


def trace_ideal(M: Bimodule, side: Side = 'right') -> Subspace:
    ''' The span of the images of all module maps ``M -> A``. '''
    A = M._need(side)
    H = hom(M, regular_module(A, side), side)
    return Subspace(M.field, A.dim, (c for B in H.basis for c in B.columns()))


@dataclass(frozen=True)
class Flatness:
    '''
    .. code-block:: python

        from corita.bimodule import Flatness

    Verdict of :func:`is_faithfully_flat`: projectivity and the trace ideal.
    '''

    verdict: bool
    projective: bool
    trace: Subspace

    def __bool__(self) -> bool:
        return self.verdict


def _over_found_unit(M: Bimodule, side: Side) -> Bimodule:
    A = find_unit(M._need(side))
    if A is None:
        raise HypothesisError('faithful flatness is decided over algebras with a unit')
    unit = A.unit or ()
    act = M.left_act_by(unit) if side == 'left' else M.right_act_by(unit)
    if act != Mat.identity(M.field, M.dim):
        raise HypothesisError(f'the unit of {A.label or "the algebra"} does not act as the identity')
    if side == 'left':
        return Bimodule(M.field, M.dim, A, M.left_action, label=M.label)
    return Bimodule(M.field, M.dim, right=A, right_action=M.right_action, label=M.label)


def is_faithfully_flat(M: Bimodule, side: Side = 'left') -> Flatness:
    '''
    A finitely generated projective module is faithfully flat when no simple module of
    ``A / rad A`` kills it, equivalently when its trace ideal and the radical span ``A``.
    An algebra without a recorded unit is searched for one, which must act as the identity on
    ``M``. Needs characteristic 0.
    '''
    A = M._need(side)
    if not A.is_unital:
        M = _over_found_unit(M, side)
        A = M._need(side)
    rad = radical_char0(A)
    proj = is_projective(M, side)
    tr = trace_ideal(M, side)
    full = tr.plus(rad).dim == A.dim
    return Flatness(bool(proj) and full, bool(proj), tr)


@dataclass(frozen=True)
class ModMap:
    '''
    .. code-block:: python

        from corita.bimodule import ModMap

    A linear map between modules that claims to commute with the actions on the given side.
    '''

    source: Bimodule
    target: Bimodule
    matrix: Mat
    linearity: Linearity = 'bi'

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise DimensionMismatchError(
                f'map {self.matrix.rows}x{self.matrix.cols} between dims {self.source.dim} and {self.target.dim}'
            )

    def validate(self) -> Report:
        items: List[Report] = []
        F = self.matrix
        if self.linearity in ('left', 'bi') and self.source.left is not None:
            bad = [i for i, (a, b) in enumerate(zip(self.source.left_action, self.target.left_action)) if F @ a != b @ F]
            items.append(Report.check('left linear', not bad, '', bad))
        if self.linearity in ('right', 'bi') and self.source.right is not None:
            bad = [i for i, (a, b) in enumerate(zip(self.source.right_action, self.target.right_action)) if F @ a != b @ F]
            items.append(Report.check('right linear', not bad, '', bad))
        return Report.group('module map', items)


@dataclass(frozen=True)
class BalancedForm:
    '''
    .. code-block:: python

        from corita.bimodule import BalancedForm

    A k-linear map ``P ⊗_k Q -> target`` that should be balanced over ``middle`` and
    bilinear over the outer actions.
    '''

    P: Bimodule
    Q: Bimodule
    middle: Algebra
    target: Bimodule
    form: Mat

    def __post_init__(self):
        if self.form.shape != (self.target.dim, self.P.dim * self.Q.dim):
            raise DimensionMismatchError(
                f'form {self.form.rows}x{self.form.cols} on {self.P.dim}x{self.Q.dim} into {self.target.dim}'
            )

    def validate(self) -> Report:
        f = self.P.field
        F = self.form
        idP, idQ = Mat.identity(f, self.P.dim), Mat.identity(f, self.Q.dim)
        bad = [
            a for a, (rho, lam) in enumerate(zip(self.P.right_action, self.Q.left_action))
            if F @ rho.kron(idQ) != F @ idP.kron(lam)
        ]
        items = [Report.check('balanced', not bad, f'over {self.middle.label or "the middle algebra"}', bad)]
        if self.P.left is not None and self.target.left is not None:
            bad = [
                b for b, (lam, tl) in enumerate(zip(self.P.left_action, self.target.left_action))
                if F @ lam.kron(idQ) != tl @ F
            ]
            items.append(Report.check('left linear', not bad, '', bad))
        if self.Q.right is not None and self.target.right is not None:
            bad = [
                c for c, (rho, tr) in enumerate(zip(self.Q.right_action, self.target.right_action))
                if F @ idP.kron(rho) != tr @ F
            ]
            items.append(Report.check('right linear', not bad, '', bad))
        return Report.group('balanced form', items)

    def on(self, T: Bimodule) -> Mat:
        ''' The induced map on ``P ⊗_middle Q``. '''
        return self.form @ _origin(T).quotient.section


def extension_of_scalars(M: Bimodule, iota: Mat, S: Algebra) -> Bimodule:
    '''
    ``M ⊗_R S`` for a right module ``M`` over ``R`` and a ring map ``iota: R -> S``.
    '''
    R = M._need('right')
    S_R = restrict(regular_module(S), iota, R, 'left')
    return tensor_over(M, R, S_R, f'{M.label}⊗S')


def default_catalog(R: Algebra, side: Side = 'right') -> List[Bimodule]:
    '''
    Test modules over ``R``: the regular module, its square, zero and the restriction of the
    regular module of the Dorroh extension.
    '''
    f = R.field
    reg = regular_module(R, side)
    sq = Subspace(f, R.dim, (v for row in R.mult for v in row))
    out = [reg, submodule(reg, sq, 'R^2')]
    out.append(zero_module(f, R if side == 'left' else None, R if side == 'right' else None))
    hat = dorroh(R)
    emb = Mat.vstack(f, R.dim, [Mat.identity(f, R.dim), Mat.zeros(f, 1, R.dim)])
    out.append(restrict(regular_module(hat, side), emb, R, side).relabel('R^'))
    return out


def catalog_report(name: str, items: Sequence[Report]) -> Report:
    return Report.group(name, items, CATALOG_SCOPE)


def invert(f: Mat, what: str) -> Mat:
    if not is_iso(f):
        raise HypothesisError(f'{what} is not bijective')
    return inverse(f)
