'''
Corings, comodules and coseparability.

A coring over a unital algebra ``A`` is an ``A``-bimodule ``C`` with a coproduct
``delta: C -> C ⊗_A C`` given on the basis of the balanced carrier built by
:func:`~corita.bimodule.tensor_over`, and a counit ``eps: C -> A``. A right comodule ``M``
carries ``rho: M -> M ⊗_A C``; a left comodule ``C ⊗_A M``.
'''
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import (
    Algebra,
    IdealWitness,
    field_algebra,
    firmness,
    group_algebra,
    ideal,
    matrix_algebra,
    product_algebra,
    span_product,
)
from .bimodule import (
    Bimodule,
    HomSpace,
    ModMap,
    associator,
    catalog_report,
    default_catalog,
    direct_sum,
    flat_projection,
    flat_section,
    functor_J,
    hom,
    invert,
    module_firmness,
    projection,
    regular_module,
    restrict,
    section,
    submodule,
    tensor_map,
    tensor_over,
    validate_module,
    zero_module,
)
from .corita_error import (
    AxiomViolationError,
    DimensionMismatchError,
    HypothesisError,
    InvalidOperationError,
    SchemaError,
)
from .exactlin import QQ, Field, Mat, Subspace, image, inverse, is_iso, kernel, rref_solve, swap_factors
from .more_typing import Side
from .report import Report


logger = logging.getLogger(__name__)


def _unit(A: Algebra) -> Mat:
    if A.unit is None:
        raise HypothesisError(f'{A!r} has no unit')
    return Mat.column(A.field, A.unit)


def _bad_columns(X: Mat, Y: Mat) -> List[int]:
    return [j for j in range(X.cols) if X.column_vector(j) != Y.column_vector(j)]


class Coring:
    '''
    .. code-block:: python

        from corita.coring import Coring

    An ``A``-coring ``(C, delta, eps)``. The carriers ``C ⊗_A C`` and both bracketings of
    ``C ⊗_A C ⊗_A C`` are built once and shared.
    '''

    __slots__ = ('_A', '_C', '_delta', '_eps', '_label', '_square', '_cubes')

    _A: Algebra
    _C: Bimodule
    _delta: Mat
    _eps: Mat
    _label: str
    _square: Bimodule
    _cubes: Optional[Tuple[Bimodule, Bimodule]]

    def __init__(self,
        A: Algebra,
        C: Bimodule,
        delta: Mat,
        eps: Mat,
        label: str = '',
    ):
        if C.left != A or C.right != A:
            raise DimensionMismatchError(f'{C!r} is not a bimodule over {A!r}')
        if A.dim and not A.is_unital:
            raise HypothesisError('corings are taken over unital algebras')
        self._A = A
        self._C = C
        self._square = tensor_over(C, A, C, 'C⊗C')
        if delta.shape != (self._square.dim, C.dim):
            raise DimensionMismatchError(
                f'coproduct is {delta.rows}x{delta.cols}, expected {self._square.dim}x{C.dim}'
            )
        if eps.shape != (A.dim, C.dim):
            raise DimensionMismatchError(f'counit is {eps.rows}x{eps.cols}, expected {A.dim}x{C.dim}')
        self._delta = delta
        self._eps = eps
        self._label = label
        self._cubes = None

    @property
    def A(self) -> Algebra:
        return self._A

    @property
    def C(self) -> Bimodule:
        return self._C

    @property
    def delta(self) -> Mat:
        return self._delta

    @property
    def eps(self) -> Mat:
        return self._eps

    @property
    def label(self) -> str:
        return self._label

    @property
    def field(self) -> Field:
        return self._A.field

    @property
    def dim(self) -> int:
        return self._C.dim

    @property
    def square(self) -> Bimodule:
        ''' The carrier ``C ⊗_A C`` of the coproduct. '''
        return self._square

    @property
    def cubes(self) -> Tuple[Bimodule, Bimodule]:
        ''' ``(C ⊗ C) ⊗ C`` and ``C ⊗ (C ⊗ C)``. '''
        if self._cubes is None:
            A, C, sq = self._A, self._C, self._square
            self._cubes = (tensor_over(sq, A, C), tensor_over(C, A, sq))
        return self._cubes

    @property
    def lift(self) -> Mat:
        ''' ``c -> c(1) ⊗ c(2)`` as an element of ``C ⊗_k C``. '''
        return section(self._square) @ self._delta

    def identity(self) -> Mat:
        return Mat.identity(self.field, self.dim)

    def __repr__(self) -> str:
        return f'Coring({self._label or "?"}, dim={self.dim}, over dim {self._A.dim})'

    def to_json(self) -> Dict[str, Any]:
        C = self._C.to_json()
        C['left'] = C['right'] = 'algebra'
        return {
            'algebra': self._A.to_json(),
            'C': C,
            'delta': self._delta.to_json(),
            'eps': self._eps.to_json(),
            'label': self._label,
        }

    @staticmethod
    def from_json(data: Mapping[str, Any], algebras: Optional[Mapping[str, Algebra]] = None) -> Coring:
        '''
        Reads a coring; ``algebra`` is inline or a name in ``algebras``. The coproduct is
        given on the carrier basis of ``C ⊗_A C`` that :func:`tensor_over` computes.
        '''
        try:
            ref = data['algebra']
            if isinstance(ref, str):
                if algebras is None or ref not in algebras:
                    raise SchemaError(f'unknown algebra reference {ref!r}')
                A = algebras[ref]
            else:
                A = Algebra.from_json(ref)
            C = Bimodule.from_json(data['C'], {'algebra': A, **(algebras or {})})
            delta = Mat.from_json(A.field, data['delta'])
            eps = Mat.from_json(A.field, data['eps'])
        except KeyError as e:
            raise SchemaError(f'coring is missing {e}') from e
        try:
            return Coring(A, C, delta, eps, str(data.get('label', '')))
        except (DimensionMismatchError, HypothesisError) as e:
            raise SchemaError(str(e)) from e


def validate_coring(K: Coring) -> Report:
    '''
    Bilinearity of both structure maps, coassociativity and the two counit laws. Witnesses
    are the failing basis elements of ``C``.
    '''
    A, C = K.A, K.C
    idC = K.identity()
    left3, right3 = K.cubes
    dl = tensor_map(K.square, K.delta, idC, left3) @ K.delta
    dr = tensor_map(K.square, idC, K.delta, right3) @ K.delta
    coassoc = _bad_columns(associator(left3, right3) @ dl, dr)
    lcounit = C.lact @ K.eps.kron(idC) @ K.lift
    rcounit = C.ract @ idC.kron(K.eps) @ K.lift
    items = [
        ModMap(C, K.square, K.delta).validate().renamed('coproduct bilinear'),
        ModMap(C, regular_module(A), K.eps).validate().renamed('counit bilinear'),
        Report.check('coassociative', not coassoc, f'{C.dim} basis elements', coassoc),
        Report.check('left counit', lcounit == idC, 'eps(c1) c2 = c', _bad_columns(lcounit, idC)),
        Report.check('right counit', rcounit == idC, 'c1 eps(c2) = c', _bad_columns(rcounit, idC)),
    ]
    rep = Report.group('coring', items, K.label)
    logger.info('coring %s over %s: %s', K.label or '?', A.label or '?', rep.verdict)
    return rep


def checked_coring(K: Coring) -> Coring:
    rep = validate_coring(K)
    if not rep.passed:
        raise AxiomViolationError(f'{K!r} is not a coring', rep)
    return K


class Comodule:
    '''
    .. code-block:: python

        from corita.coring import Comodule

    A right (``rho: M -> M ⊗_A C``) or left (``rho: M -> C ⊗_A M``) comodule. ``M`` may
    carry a further action on the other side, e.g. of a ring of colinear maps.
    '''

    __slots__ = ('_coring', '_M', '_rho', '_side', '_carrier')

    _coring: Coring
    _M: Bimodule
    _rho: Mat
    _side: Side
    _carrier: Bimodule

    def __init__(self,
        coring: Coring,
        M: Bimodule,
        rho: Mat,
        side: Side = 'right',
    ):
        self._coring = coring
        self._M = M
        self._side = side
        A, C = coring.A, coring.C
        if side == 'right':
            self._carrier = tensor_over(M, A, C, f'{M.label}⊗C')
        else:
            self._carrier = tensor_over(C, A, M, f'C⊗{M.label}')
        if rho.shape != (self._carrier.dim, M.dim):
            raise DimensionMismatchError(
                f'coaction is {rho.rows}x{rho.cols}, expected {self._carrier.dim}x{M.dim}'
            )
        self._rho = rho

    @property
    def coring(self) -> Coring:
        return self._coring

    @property
    def M(self) -> Bimodule:
        return self._M

    @property
    def rho(self) -> Mat:
        return self._rho

    @property
    def side(self) -> Side:
        return self._side

    @property
    def carrier(self) -> Bimodule:
        return self._carrier

    @property
    def dim(self) -> int:
        return self._M.dim

    @property
    def label(self) -> str:
        return self._M.label

    @property
    def lift(self) -> Mat:
        ''' ``m -> m[0] ⊗ m[1]`` in ``M ⊗_k C`` (or ``C ⊗_k M``). '''
        return section(self._carrier) @ self._rho

    def relabel(self, label: str) -> Comodule:
        return Comodule(self._coring, self._M.relabel(label), self._rho, self._side)

    def __repr__(self) -> str:
        return f'Comodule({self.label or "?"}, dim={self.dim}, {self._side})'

    def to_json(self) -> Dict[str, Any]:
        M = self._M.to_json()
        if self._side == 'right':
            M['right'] = 'algebra'
        else:
            M['left'] = 'algebra'
        return {'M': M, 'rho': self._rho.to_json(), 'side': self._side}

    @staticmethod
    def from_json(coring: Coring, data: Mapping[str, Any], algebras: Optional[Mapping[str, Algebra]] = None) -> Comodule:
        side = data.get('side', 'right')
        if side not in ('left', 'right'):
            raise SchemaError(f'comodule side must be left or right, not {side!r}')
        try:
            M = Bimodule.from_json(data['M'], {'algebra': coring.A, **(algebras or {})})
            rho = Mat.from_json(coring.field, data['rho'])
            return Comodule(coring, M, rho, side)
        except KeyError as e:
            raise SchemaError(f'comodule is missing {e}') from e
        except DimensionMismatchError as e:
            raise SchemaError(str(e)) from e


def validate_comodule(N: Comodule) -> Report:
    K = N.coring
    A, M = K.A, N.M
    f = K.field
    idM, idC = Mat.identity(f, M.dim), K.identity()
    if N.side == 'right':
        X1 = tensor_over(N.carrier, A, K.C)
        X2 = tensor_over(M, A, K.square)
        lhs = tensor_map(N.carrier, N.rho, idC, X1) @ N.rho
        rhs = tensor_map(N.carrier, idM, K.delta, X2) @ N.rho
        counit = M.ract @ idM.kron(K.eps) @ N.lift
    else:
        X1 = tensor_over(K.C, A, N.carrier)
        X2 = tensor_over(K.square, A, M)
        lhs = tensor_map(N.carrier, idC, N.rho, X1) @ N.rho
        rhs = tensor_map(N.carrier, K.delta, idM, X2) @ N.rho
        counit = M.lact @ K.eps.kron(idM) @ N.lift
    coassoc = _bad_columns(associator(X1, X2) @ lhs, rhs)
    items = [
        ModMap(M, N.carrier, N.rho, N.side).validate().renamed(f'{N.side} A-linear'),
        Report.check('coassociative', not coassoc, f'{M.dim} basis elements', coassoc),
        Report.check('counit', counit == idM, '', _bad_columns(counit, idM)),
    ]
    return Report.group('comodule', items, M.label)


def checked_comodule(N: Comodule) -> Comodule:
    rep = validate_comodule(N)
    if not rep.passed:
        raise AxiomViolationError(f'{N!r} is not a comodule', rep)
    return N


def regular_comodule(K: Coring, side: Side = 'right') -> Comodule:
    ''' ``C`` coacting on itself by the coproduct. '''
    return Comodule(K, K.C.relabel('C'), K.delta, side)


def zero_comodule(K: Coring, side: Side = 'right') -> Comodule:
    A, f = K.A, K.field
    M = zero_module(f, A if side == 'left' else None, A if side == 'right' else None)
    return Comodule(K, M, Mat.zeros(f, 0, 0), side)


def free_comodule(K: Coring, M: Bimodule) -> Comodule:
    '''
    The coinduced comodule ``M ⊗_A C`` of a right ``A``-module with coaction ``M ⊗ delta``.
    '''
    A = K.A
    MC = tensor_over(M, A, K.C, f'{M.label}⊗C')
    via = tensor_over(M, A, K.square)
    carrier = tensor_over(MC, A, K.C)
    rho = associator(via, carrier) @ tensor_map(MC, Mat.identity(K.field, M.dim), K.delta, via)
    return Comodule(K, MC, rho)


def comodule_sum(N1: Comodule, N2: Comodule) -> Comodule:
    if N1.coring is not N2.coring or N1.side != N2.side:
        raise DimensionMismatchError(f'{N1!r} and {N2!r} are not comodules of the same kind')
    K = N1.coring
    f = K.field
    S = direct_sum(N1.M, N2.M)
    m, n = N1.dim, N2.dim
    inc1 = Mat.vstack(f, m, [Mat.identity(f, m), Mat.zeros(f, n, m)])
    inc2 = Mat.vstack(f, n, [Mat.zeros(f, m, n), Mat.identity(f, n)])
    idC = K.identity()
    if N1.side == 'right':
        e1, e2 = inc1.kron(idC), inc2.kron(idC)
        carrier = tensor_over(S, K.A, K.C)
    else:
        e1, e2 = idC.kron(inc1), idC.kron(inc2)
        carrier = tensor_over(K.C, K.A, S)
    flat = Mat.hstack(f, e1.rows, [e1 @ N1.lift, e2 @ N2.lift])
    return Comodule(K, S, projection(carrier) @ flat, N1.side)


def comodule_catalog(K: Coring) -> List[Comodule]:
    '''
    Test comodules: ``C``, the coinduced comodule of the regular module, ``C ⊕ C`` and zero.
    '''
    reg = regular_comodule(K)
    return [
        reg,
        free_comodule(K, regular_module(K.A, 'right')).relabel('A⊗C'),
        comodule_sum(reg, reg),
        zero_comodule(K),
    ]


def trivial_coring(A: Algebra) -> Coring:
    ''' ``C = A`` with ``delta(a) = 1 ⊗ a`` and ``eps = id``. '''
    f = A.field
    C = regular_module(A)
    sq = tensor_over(C, A, C)
    ident = Mat.identity(f, A.dim)
    delta = projection(sq) @ _unit(A).kron(ident) if A.dim else Mat.zeros(f, sq.dim, 0)
    return Coring(A, C, delta, ident, 'trivial')


def coalgebra_coring(field: Field, delta: Mat, eps: Mat, label: str = '') -> Coring:
    '''
    A coalgebra over the field as a coring over ``k``; ``delta`` is ``n^2 x n``.
    '''
    k = field_algebra(field)
    n = eps.cols
    ident = [Mat.identity(field, n)]
    C = Bimodule(field, n, k, ident, k, ident, label or 'coalgebra')
    sq = tensor_over(C, k, C)
    return Coring(k, C, projection(sq) @ delta, eps, label)


def dual_coalgebra(A: Algebra) -> Coring:
    '''
    The dual coalgebra of a unital algebra: ``delta(x^k) = sum mult[i][j][k] x^i ⊗ x^j`` and
    ``eps(x^i)`` the ``i``-th unit coordinate.
    '''
    f, n = A.field, A.dim
    if A.unit is None:
        raise HypothesisError('the dual coalgebra needs a unit')
    delta = A.mult_map.transpose()
    eps = Mat(f, [A.unit], n)
    return coalgebra_coring(f, delta, eps, f'{A.label}*' if A.label else 'dual')


def matrix_comodule(n: int, field: Field = QQ) -> Comodule:
    ''' ``k^n`` over the dual of ``M_n(k)``, ``e_k -> sum_i e_i ⊗ x^{ik}``. '''
    K = dual_coalgebra(matrix_algebra(n, field))
    M = Bimodule(field, n, right=K.A, right_action=[Mat.identity(field, n)], label=f'k{n}')
    carrier = tensor_over(M, K.A, K.C)
    z, o = field.zero, field.one
    flat = Mat.from_columns(field, n * n * n, [
        [o if any(r == i * n * n + i * n + k for i in range(n)) else z for r in range(n * n * n)]
        for k in range(n)
    ])
    return Comodule(K, M, projection(carrier) @ flat)


# dual ring and convolution

def dual_ring_maps(K: Coring) -> HomSpace:
    ''' Left ``A``-linear maps ``C -> A``, the elements of ``*C``. '''
    return hom(K.C, regular_module(K.A), 'left')


def star_product(K: Coring, f: Mat, g: Mat) -> Mat:
    ''' ``(f * g)(c) = g(c(1) f(c(2)))``. '''
    C = K.C
    return g @ C.ract @ K.identity().kron(f) @ K.lift


def dual_ring(K: Coring) -> Algebra:
    '''
    ``*C`` with the product of :func:`star_product` and unit ``eps``; for this convention
    every right comodule is a right ``*C``-module by ``m . f = m[0] f(m[1])``.
    '''
    if K.dim == 0 and K.A.dim:
        raise HypothesisError('the zero coring over a nonzero algebra has no counit in *C')
    H = dual_ring_maps(K)
    mult = [[H.coordinates(star_product(K, a, b)) for b in H.basis] for a in H.basis]
    unit = H.coordinates(K.eps)
    logger.debug('dual ring of %r: dim %d', K, H.dim)
    return Algebra(K.field, mult, unit, '*C')


def comodule_as_module(N: Comodule) -> Bimodule:
    '''
    A right comodule as a right ``*C``-module, ``m . f = m[0] f(m[1])``.
    '''
    if N.side != 'right':
        raise InvalidOperationError('only right comodules are right *C-modules')
    K = N.coring
    M = N.M
    idM = Mat.identity(K.field, M.dim)
    H = dual_ring_maps(K)
    acts = [M.ract @ idM.kron(g) @ N.lift for g in H.basis]
    return Bimodule(K.field, M.dim, M.left, M.left_action, dual_ring(K), acts, M.label)


def dual_ring_action_check(N: Comodule) -> Report:
    ''' ``(m . f) . g = m . (f * g)`` on every basis triple. '''
    rep = validate_module(comodule_as_module(N))
    return rep.renamed('*C action')


def convolution_maps(K: Coring, T: Optional[Algebra] = None, iota: Optional[Mat] = None) -> HomSpace:
    '''
    ``A``-bimodule maps ``C -> T`` for an ``A``-ring ``iota: A -> T``; ``T`` defaults to ``A``.
    '''
    A = K.A
    T = T if T is not None else A
    iota = iota if iota is not None else Mat.identity(K.field, A.dim)
    TA = restrict(restrict(regular_module(T), iota, A, 'left'), iota, A, 'right')
    return hom(K.C, TA, 'bi')


def convolution_product(K: Coring, T: Algebra, f: Mat, g: Mat) -> Mat:
    ''' ``(f * g)(c) = f(c(1)) g(c(2))``. '''
    return T.mult_map @ f.kron(g) @ K.lift


def convolution_algebra(K: Coring, T: Optional[Algebra] = None, iota: Optional[Mat] = None) -> Algebra:
    T = T if T is not None else K.A
    iota = iota if iota is not None else Mat.identity(K.field, K.A.dim)
    H = convolution_maps(K, T, iota)
    mult = [[H.coordinates(convolution_product(K, T, a, b)) for b in H.basis] for a in H.basis]
    unit = iota @ K.eps
    return Algebra(K.field, mult, H.coordinates(unit) if H.contains(unit) else None, 'convolution')


@dataclass(frozen=True)
class ImageRing:
    '''
    .. code-block:: python

        from corita.coring import ImageRing

    The image of an idempotent of the convolution algebra ``Hom_AA(C, A)``, an ideal of
    ``A`` that is an idempotent ring.
    '''

    witness: IdealWitness
    report: Report


def idempotent_image(K: Coring, f: Mat) -> ImageRing:
    A = K.A
    idem = convolution_product(K, A, f, f) == f
    im = image(f)
    sq = span_product(A, im, im)
    W = ideal(A, im, 'two-sided')
    rep = Report.group('idempotent image', [
        Report.check('idempotent in the convolution algebra', idem),
        Report.check('image idempotent', sq == im, f'image dim {im.dim}, square dim {sq.dim}'),
    ])
    return ImageRing(W, rep)


def counit_image_firmness(N: Comodule) -> Report:
    '''
    A right comodule is a firm module over the idempotent ring ``Im eps``.
    '''
    K = N.coring
    R = ideal(K.A, image(K.eps), 'two-sided')
    M_R = restrict(N.M, R.inclusion, R.algebra, 'right')
    fr = module_firmness(M_R, R.algebra, 'right')
    return Report.check('firm over Im eps', fr.is_firm, f'Im eps dim {R.dim}, comodule dim {N.dim}')


# firm ideals as corings

def coring_from_firm_ideal(I: IdealWitness) -> Coring:
    '''
    A firm two-sided ideal ``R`` of a unital algebra is a coring with coproduct the inverse
    of the multiplication, carried from ``R ⊗_R R`` to ``R ⊗_A R``, and counit the inclusion.
    '''
    if I.sidedness != 'two-sided':
        raise HypothesisError('the ideal must be two-sided')
    A = I.ambient
    R = I.algebra
    fr = firmness(R)
    if fr.d is None:
        raise HypothesisError(f'R of dim {R.dim} is not firm')
    Rmod = submodule(regular_module(A), I.subspace, 'R')
    sq = tensor_over(Rmod, A, Rmod)
    delta = projection(sq) @ fr.quotient.section @ fr.d
    return Coring(A, Rmod, delta, I.inclusion, 'firm ideal')


@dataclass(frozen=True)
class FirmIdealData:
    '''
    .. code-block:: python

        from corita.coring import FirmIdealData

    A firm ideal recovered from a coring with injective counit, with ``d: R -> R ⊗_R R``.
    '''

    ideal: IdealWitness
    d: Mat


def firm_ideal_from_coring(K: Coring) -> FirmIdealData:
    '''
    Reads off the ideal ``Im eps`` and the inverse of its multiplication from a coring whose
    counit is injective; the result is checked against the firmness of the ideal.
    '''
    A = K.A
    if kernel(K.eps).dim:
        raise HypothesisError('the counit is not injective')
    W = ideal(A, image(K.eps), 'two-sided')
    R = W.algebra
    fr = firmness(R)
    if fr.d is None:
        raise HypothesisError(f'the counit image of dim {W.dim} is not firm')
    phi = W.subspace.coordinate_matrix(K.eps)
    Rmod = submodule(regular_module(A), W.subspace, 'R')
    sq = tensor_over(Rmod, A, Rmod)
    delta_R = projection(sq) @ phi.kron(phi) @ K.lift @ inverse(phi)
    to_A = projection(sq) @ fr.quotient.section
    d = invert(to_A, 'R ⊗_R R -> R ⊗_A R') @ delta_R
    if fr.mu @ d != Mat.identity(K.field, R.dim):
        raise AxiomViolationError('the coproduct does not split the multiplication', validate_coring(K))
    return FirmIdealData(W, d)


def firm_module_comodule(N: Bimodule, I: IdealWitness) -> Comodule:
    '''
    A firm right module over the ideal ``R`` as a comodule of the coring ``R``:
    ``n -> n^r ⊗ r``.
    '''
    K = coring_from_firm_ideal(I)
    R = I.algebra
    fr = module_firmness(N, R, 'right')
    if fr.d is None:
        raise HypothesisError(f'{N!r} is not a firm module over the ideal')
    J = functor_J(N, I)
    carrier = tensor_over(J, K.A, K.C)
    rho = projection(carrier) @ fr.quotient.section @ fr.d
    return Comodule(K, J, rho)


def firm_ideal_adjunction(I: IdealWitness,
    catalog_R: Optional[Sequence[Bimodule]] = None,
    catalog_A: Optional[Sequence[Bimodule]] = None,
) -> Report:
    '''
    ``J`` left adjoint to ``- ⊗_A R``: the unit ``N -> J(N) ⊗_A R`` is invertible on firm
    ``R``-modules, both triangle identities hold, and firm modules become comodules of the
    coring ``R``.
    '''
    A = I.ambient
    R = I.algebra
    f = A.field
    Rmod = submodule(regular_module(A), I.subspace, 'R')

    if catalog_R is None:
        catalog_R = [M for M in default_catalog(R) if module_firmness(M, R).is_firm]
    if catalog_A is None:
        catalog_A = default_catalog(A)
    groups: List[Report] = []
    for N in catalog_R:
        fr = module_firmness(N, R, 'right')
        if fr.d is None:
            groups.append(Report.info(N.label, 'not firm, skipped'))
            continue
        J = functor_J(N, I)
        G = tensor_over(J, A, Rmod)
        eta = projection(G) @ fr.quotient.section @ fr.d
        eps_J = J.ract @ Mat.identity(f, N.dim).kron(I.inclusion) @ section(G)
        groups.append(Report.group(N.label, [
            Report.check('unit invertible', is_iso(eta), f'J(N) ⊗_A R dim {G.dim}'),
            Report.check('triangle on J', eps_J @ eta == Mat.identity(f, N.dim)),
            validate_comodule(firm_module_comodule(N, I)).renamed('comodule of R'),
        ]))
    for M in catalog_A:
        G = tensor_over(M, A, Rmod)
        GR = restrict(G, I.inclusion, R, 'right')
        fr = module_firmness(GR, R, 'right')
        if fr.d is None:
            groups.append(Report.check(M.label, False, 'M ⊗_A R is not a firm R-module'))
            continue
        GJ = functor_J(GR, I)
        GG = tensor_over(GJ, A, Rmod)
        eta = projection(GG) @ fr.quotient.section @ fr.d
        counit = M.ract @ Mat.identity(f, M.dim).kron(I.inclusion) @ section(G)
        back = tensor_map(GG, counit, Mat.identity(f, R.dim), G)
        groups.append(Report.group(M.label, [
            Report.check('triangle on M ⊗_A R', back @ eta == Mat.identity(f, G.dim)),
        ]))
    return catalog_report('firm ideal adjunction', groups)


# cotensor products

@dataclass(frozen=True)
class Cotensor:
    '''
    .. code-block:: python

        from corita.coring import Cotensor

    ``P ⊗^C Q`` as a subspace of the carrier ``P ⊗_A Q``.
    '''

    tensor: Bimodule
    subspace: Subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim


def cotensor(P: Comodule, Q: Comodule) -> Cotensor:
    '''
    The equalizer of ``rho_P ⊗ Q`` and ``P ⊗ rho_Q`` into ``P ⊗_A C ⊗_A Q``.
    '''
    if P.side != 'right' or Q.side != 'left':
        raise InvalidOperationError('cotensor takes a right and a left comodule')
    if P.coring is not Q.coring:
        raise DimensionMismatchError('comodules over different corings')
    K = P.coring
    A, f = K.A, K.field
    X = tensor_over(P.M, A, Q.M)
    Y1 = tensor_over(P.carrier, A, Q.M)
    Y2 = tensor_over(P.M, A, Q.carrier)
    f1 = tensor_map(X, P.rho, Mat.identity(f, Q.dim), Y1)
    f2 = tensor_map(X, Mat.identity(f, P.dim), Q.rho, Y2)
    sub = kernel(f1 - associator(Y2, Y1) @ f2)
    logger.debug('cotensor %s □ %s: %d of %d', P.label, Q.label, sub.dim, X.dim)
    return Cotensor(X, sub)


# coseparability

def mu_from_gamma(K: Coring, gamma: Mat) -> Mat:
    ''' ``c ⊗ d -> c(1) gamma(c(2) ⊗ d)`` on ``C ⊗_A C``. '''
    idC = K.identity()
    g = gamma @ projection(K.square)
    return K.C.ract @ idC.kron(g) @ K.lift.kron(idC) @ section(K.square)


def _mu_right_form(K: Coring, gamma: Mat) -> Mat:
    ''' ``c ⊗ d -> gamma(c ⊗ d(1)) d(2)``. '''
    idC = K.identity()
    g = gamma @ projection(K.square)
    return K.C.lact @ g.kron(idC) @ idC.kron(K.lift) @ section(K.square)


@dataclass(frozen=True)
class CosepWitness:
    '''
    .. code-block:: python

        from corita.coring import CosepWitness

    A cointegral ``gamma: C ⊗_A C -> A`` and the bicolinear retraction ``mu`` of the
    coproduct it defines.
    '''

    coring: Coring
    gamma: Mat
    mu: Mat

    @staticmethod
    def of(K: Coring, gamma: Mat) -> CosepWitness:
        return CosepWitness(K, gamma, mu_from_gamma(K, gamma))

    def validate(self) -> Report:
        K = self.coring
        idC = K.identity()
        left3, right3 = K.cubes
        mu = self.mu
        dmu = K.delta @ mu
        right_col = tensor_map(left3, mu, idC, K.square) @ associator(right3, left3) \
            @ tensor_map(K.square, idC, K.delta, right3)
        left_col = tensor_map(right3, idC, mu, K.square) @ associator(left3, right3) \
            @ tensor_map(K.square, K.delta, idC, left3)
        return Report.group('cointegral', [
            ModMap(K.square, regular_module(K.A), self.gamma).validate().renamed('gamma bilinear'),
            Report.check('gamma(c1 ⊗ c2) = eps(c)', self.gamma @ K.delta == K.eps),
            Report.check('two forms of mu agree', mu == _mu_right_form(K, self.gamma)),
            Report.check('retraction of the coproduct', mu @ K.delta == idC),
            Report.check('right colinear', dmu == right_col),
            Report.check('left colinear', dmu == left_col),
        ])


@dataclass(frozen=True)
class Coseparability:
    '''
    .. code-block:: python

        from corita.coring import Coseparability

    Outcome of :func:`coseparability_solve`: a witness, or the inconsistency certificate of
    the cointegral system.
    '''

    witness: Optional[CosepWitness]
    certificate: Optional[Mat]
    solutions: int

    def __bool__(self) -> bool:
        return self.witness is not None

    def to_report(self) -> Report:
        if self.witness is None:
            return Report.check('coseparable', False, f'{self.solutions} colinear candidates, no cointegral', self.certificate)
        return Report.group('coseparable', [self.witness.validate()])


def coseparability_solve(K: Coring) -> Coseparability:
    '''
    Solves for an ``A``-bilinear ``gamma`` on ``C ⊗_A C`` with
    ``c(1) gamma(c(2) ⊗ d) = gamma(c ⊗ d(1)) d(2)`` and ``gamma(c(1) ⊗ c(2)) = eps(c)``.
    '''
    f = K.field
    H = hom(K.square, regular_module(K.A), 'bi')
    H = H.restrict(lambda g: mu_from_gamma(K, g) - _mu_right_form(K, g))
    rhs = K.eps.vec()
    if not H.dim:
        if K.eps.is_zero():
            return Coseparability(CosepWitness.of(K, Mat.zeros(f, K.A.dim, K.square.dim)), None, 0)
        return Coseparability(None, Mat.identity(f, rhs.rows), 0)
    system = Mat.hstack(f, rhs.rows, [(B @ K.delta).vec() for B in H.basis])
    res = rref_solve(system, rhs)
    logger.debug('cointegral system of %r: %d candidates, solvable=%s', K, H.dim, res.solvable)
    if res.solution is None:
        return Coseparability(None, res.certificate, H.dim)
    return Coseparability(CosepWitness.of(K, H.matrix(res.solution.column_vector(0))), None, H.dim)


def coring_ring(w: CosepWitness) -> Algebra:
    ''' ``C`` as a (non-unital) ring under ``mu``. '''
    K = w.coring
    flat = w.mu @ projection(K.square)
    n = K.dim
    mult = [[flat.column_vector(i * n + j) for j in range(n)] for i in range(n)]
    return Algebra(K.field, mult, None, 'C')


def cosep_action(N: Comodule, w: CosepWitness) -> Bimodule:
    '''
    A comodule as a module over the ring ``C``: ``m . c = m[0] gamma(m[1] ⊗ c)``, or
    ``c . m = gamma(c ⊗ m[-1]) m[0]`` for a left comodule.
    '''
    K = w.coring
    f = K.field
    M = N.M
    idM, idC = Mat.identity(f, M.dim), K.identity()
    g = w.gamma @ projection(K.square)
    Calg = coring_ring(w)
    if N.side == 'right':
        mu_M = M.ract @ idM.kron(g) @ N.lift.kron(idC) @ section(N.carrier)
        acts = [mu_M @ projection(N.carrier) @ idM.kron(Mat.unit_column(f, K.dim, c)) for c in range(K.dim)]
        return Bimodule(f, M.dim, M.left, M.left_action, Calg, acts, M.label)
    mu_M = M.lact @ g.kron(idM) @ idC.kron(N.lift) @ section(N.carrier)
    acts = [mu_M @ projection(N.carrier) @ Mat.unit_column(f, K.dim, c).kron(idM) for c in range(K.dim)]
    return Bimodule(f, M.dim, Calg, acts, M.right, M.right_action, M.label)


def cosep_action_report(N: Comodule, w: CosepWitness) -> Report:
    X = cosep_action(N, w)
    side: Side = 'right' if N.side == 'right' else 'left'
    fr = module_firmness(X, coring_ring(w), side)
    return Report.group(N.label or 'comodule', [
        validate_module(X).renamed('associative action'),
        Report.check('firm over C', fr.is_firm, f'dim {N.dim}'),
    ])


def comodule_from_module(N: Bimodule, w: CosepWitness, side: Side = 'right') -> Comodule:
    '''
    A firm module over the ring ``C`` as a comodule: the ``A``-action and the coaction
    ``n^c (c(1)) ⊗ c(2)`` go through the inverse of the multiplication.
    '''
    K = w.coring
    f = K.field
    Calg = coring_ring(w)
    fr = module_firmness(N, Calg, side)
    if fr.d is None:
        raise HypothesisError(f'{N!r} is not a firm module over C')
    dsec = fr.quotient.section @ fr.d
    idN = Mat.identity(f, N.dim)
    A, C = K.A, K.C
    if side == 'right':
        acts = [N.ract @ idN.kron(C.right_action[a]) @ dsec for a in range(A.dim)]
        NA = Bimodule(f, N.dim, N.left, N.left_action, A, acts, N.label)
        carrier = tensor_over(NA, A, C)
        rho = projection(carrier) @ N.ract.kron(K.identity()) @ idN.kron(K.lift) @ dsec
        return Comodule(K, NA, rho, 'right')
    acts = [N.lact @ C.left_action[a].kron(idN) @ dsec for a in range(A.dim)]
    NA = Bimodule(f, N.dim, A, acts, N.right, N.right_action, N.label)
    carrier = tensor_over(C, A, NA)
    rho = projection(carrier) @ K.identity().kron(N.lact) @ K.lift.kron(idN) @ dsec
    return Comodule(K, NA, rho, 'left')


def cosep_category_iso(w: CosepWitness,
    comodules: Optional[Sequence[Comodule]] = None,
    modules: Optional[Sequence[Bimodule]] = None,
) -> Report:
    '''
    Comodules and firm ``C``-modules: both round trips return the original structure maps.
    '''
    K = w.coring
    comodules = comodule_catalog(K) if comodules is None else comodules
    if modules is None:
        modules = [cosep_action(N, w) for N in comodules if N.side == 'right']
    items: List[Report] = []
    for N in comodules:
        back = comodule_from_module(cosep_action(N, w), w, N.side)
        same_action = (back.M.right_action if N.side == 'right' else back.M.left_action) \
            == (N.M.right_action if N.side == 'right' else N.M.left_action)
        items.append(Report.group(f'comodule {N.label}', [
            Report.check('coaction restored', back.rho == N.rho),
            Report.check('A-action restored', same_action),
        ]))
    for X in modules:
        side: Side = 'right' if X.right == coring_ring(w) else 'left'
        back_mod = cosep_action(comodule_from_module(X, w, side), w)
        acts = back_mod.right_action if side == 'right' else back_mod.left_action
        orig = X.right_action if side == 'right' else X.left_action
        items.append(Report.check(f'module {X.label}', acts == orig, 'C-action restored'))
    return catalog_report('comodules are C-modules', items)


def cosep_tensor_iso(P: Comodule, Q: Comodule, w: CosepWitness) -> Report:
    '''
    ``pi iota: P ⊗^C Q -> P ⊗_C Q`` and ``beta(p ⊗ q) = p[0] ⊗ p[1] . q`` are inverse.
    '''
    K = w.coring
    f = K.field
    XP = cosep_action(P, w).right_only()
    XQ = cosep_action(Q, w).left_only()
    PCQ = tensor_over(XP, coring_ring(w), XQ)
    cot = cotensor(P, Q)
    X = cot.tensor
    pi_iota = projection(PCQ) @ section(X) @ cot.subspace.inclusion()
    flat_beta = projection(X) @ Mat.identity(f, P.dim).kron(XQ.lact) @ P.lift.kron(Mat.identity(f, Q.dim)) @ section(PCQ)
    try:
        beta = cot.subspace.coordinate_matrix(flat_beta)
    except InvalidOperationError:
        return Report.check('tensor and cotensor', False, 'beta leaves the cotensor product')
    return Report.group('tensor and cotensor', [
        Report.info('dims', f'P⊗^C Q {cot.dim}, P⊗_C Q {PCQ.dim}'),
        Report.check('beta after pi iota', beta @ pi_iota == Mat.identity(f, cot.dim)),
        Report.check('pi iota after beta', pi_iota @ beta == Mat.identity(f, PCQ.dim)),
    ])


# colinear maps

def comodule_hom(M: Comodule, N: Comodule) -> HomSpace:
    '''
    ``A``-linear maps ``f`` with ``rho_N f = (f ⊗ C) rho_M`` (or ``(C ⊗ f) rho_M``).
    '''
    if M.coring is not N.coring or M.side != N.side:
        raise DimensionMismatchError(f'{M!r} and {N!r} are not comodules of the same kind')
    K = M.coring
    idC = K.identity()
    H = hom(M.M, N.M, M.side)
    if M.side == 'right':
        return H.restrict(lambda F: N.rho @ F - tensor_map(M.carrier, F, idC, N.carrier) @ M.rho)
    return H.restrict(lambda F: N.rho @ F - tensor_map(M.carrier, idC, F, N.carrier) @ M.rho)


def comodule_end(M: Comodule) -> Algebra:
    return comodule_hom(M, M).endomorphism_algebra().relabel(f'End^C({M.label})')


# Sweedler corings

@dataclass(frozen=True)
class SweedlerCoring:
    '''
    .. code-block:: python

        from corita.coring import SweedlerCoring

    ``A ⊗_B A`` for a ring map ``iota: B -> A`` split by the ``B``-bimodule map ``E``.
    '''

    coring: Coring
    witness: CosepWitness
    B: Algebra
    iota: Mat
    E: Mat


def sweedler_coring(B: Algebra, A: Algebra, iota: Mat, E: Mat) -> SweedlerCoring:
    """
    ``delta(a ⊗ a') = (a ⊗ 1) ⊗ (1 ⊗ a')``, ``eps`` the multiplication, and the cointegral
    ``(a ⊗ a') ⊗ (a'' ⊗ a''') -> a E(a' a'') a'''``.
    """
    f = A.field
    if E.shape != (B.dim, A.dim) or E @ iota != Mat.identity(f, B.dim):
        raise HypothesisError('E is not a retraction of iota')
    A_B = restrict(regular_module(A), iota, B, 'right')
    B_A = restrict(regular_module(A), iota, B, 'left')
    E_map = ModMap(restrict(restrict(regular_module(A), iota, B, 'left'), iota, B, 'right'), regular_module(B), E)
    if not E_map.validate().passed:
        raise HypothesisError('E is not a B-bimodule map')
    C = tensor_over(A_B, B, B_A, 'A⊗_B A')
    idA, u = Mat.identity(f, A.dim), _unit(A)
    sq = tensor_over(C, A, C)
    delta = flat_projection(sq) @ idA.kron(u).kron(u.kron(idA)) @ section(C)
    eps = A.mult_map @ section(C)
    K = Coring(A, C, delta, eps, 'Sweedler')
    m3 = A.mult_map @ A.mult_map.kron(idA)
    gamma = m3 @ idA.kron(iota @ E @ A.mult_map).kron(idA) @ flat_section(sq)
    return SweedlerCoring(K, CosepWitness.of(K, gamma), B, iota, E)


def sweedler_descent_comodule(sw: SweedlerCoring) -> Comodule:
    ''' ``A`` as a right comodule of its Sweedler coring, ``a -> 1 ⊗ (1 ⊗ a)``. '''
    K = sw.coring
    A = K.A
    u = _unit(A)
    M = regular_module(A, 'right').relabel('A')
    carrier = tensor_over(M, A, K.C)
    rho = flat_projection(carrier) @ u.kron(u.kron(Mat.identity(A.field, A.dim)))
    return Comodule(K, M, rho)


def split_kxk(field: Field = QQ) -> Tuple[Algebra, Algebra, Mat, Mat]:
    ''' ``k -> k x k`` diagonally, split by the first projection. '''
    return field_algebra(field), product_algebra(2, field), Mat(field, [[1], [1]]), Mat(field, [[1, 0]])


def split_matrix(n: int = 2, field: Field = QQ) -> Tuple[Algebra, Algebra, Mat, Mat]:
    ''' Scalars in ``M_n`` split by the normalized trace. '''
    diag = [field.one if i == j else field.zero for i in range(n) for j in range(n)]
    tr = [field.coerce(x) * field.inv(field.coerce(n)) for x in diag]
    return field_algebra(field), matrix_algebra(n, field), Mat.column(field, diag), Mat(field, [tr])


# Hopf algebras

@dataclass(frozen=True)
class HopfAlgebra:
    '''
    .. code-block:: python

        from corita.coring import HopfAlgebra

    A finite-dimensional Hopf algebra: ``delta`` is ``n^2 x n``, ``eps`` is ``1 x n``.
    '''

    H: Algebra
    delta: Mat
    eps: Mat
    antipode: Mat
    label: str = ''

    @property
    def field(self) -> Field:
        return self.H.field

    @property
    def dim(self) -> int:
        return self.H.dim

    def validate(self) -> Report:
        H, f, n = self.H, self.field, self.dim
        I = Mat.identity(f, n)
        d, e, S = self.delta, self.eps, self.antipode
        m = H.mult_map
        u = _unit(H)
        mid = I.kron(swap_factors(f, n, n)).kron(I)
        ue = u @ e
        return Report.group('Hopf algebra', [
            Report.check('coassociative', d.kron(I) @ d == I.kron(d) @ d),
            Report.check('counit', e.kron(I) @ d == I and I.kron(e) @ d == I),
            Report.check('coproduct multiplicative', d @ m == m.kron(m) @ mid @ d.kron(d)),
            Report.check('coproduct unital', d @ u == u.kron(u)),
            Report.check('counit multiplicative', e @ m == e.kron(e) and e @ u == Mat.identity(f, 1)),
            Report.check('antipode', m @ S.kron(I) @ d == ue and m @ I.kron(S) @ d == ue),
        ], self.label)


def group_hopf_algebra(n: int, field: Field = QQ) -> HopfAlgebra:
    ''' ``k[Z/n]`` with grouplike basis and ``S(g) = g^-1``. '''
    H = group_algebra(n, field)
    z, o = field.zero, field.one
    delta = Mat.from_columns(field, n * n, [[o if k == i * n + i else z for k in range(n * n)] for i in range(n)])
    eps = Mat(field, [[o] * n], n)
    S = Mat.from_columns(field, n, [[o if k == (n - i) % n else z for k in range(n)] for i in range(n)])
    return HopfAlgebra(H, delta, eps, S, f'kZ{n}')


def hopf_module_coring(hopf: HopfAlgebra) -> Coring:
    '''
    ``H ⊗_k H`` over ``H`` with ``g (h ⊗ k) = gh ⊗ k``, ``(h ⊗ k) g = h g(1) ⊗ k g(2)``,
    ``delta(h ⊗ k) = (h ⊗ k(1)) ⊗ (1 ⊗ k(2))`` and ``eps(h ⊗ k) = h eps(k)``. Its right
    comodules are the Hopf modules.
    '''
    H, f, n = hopf.H, hopf.field, hopf.dim
    I = Mat.identity(f, n)
    u = _unit(H)
    left = [H.left_mult(a).kron(I) for a in range(n)]
    right = []
    for a in range(n):
        acc = Mat.zeros(f, n * n, n * n)
        for i in range(n):
            for j in range(n):
                c = hopf.delta[i * n + j, a]
                if c:
                    acc = acc + H.right_mult(i).kron(H.right_mult(j)).scale(c)
        right.append(acc)
    C = Bimodule(f, n * n, H, left, H, right, 'H⊗H')
    sq = tensor_over(C, H, C)
    delta = flat_projection(sq) @ I.kron(I.kron(u).kron(I) @ hopf.delta)
    eps = I.kron(hopf.eps)
    return Coring(H, C, delta, eps, f'Hopf {hopf.label}')


def hopf_module_comodule(hopf: HopfAlgebra, K: Optional[Coring] = None) -> Comodule:
    ''' ``H`` as a Hopf module, ``h -> 1 ⊗ (h(1) ⊗ h(2))``. '''
    K = K or hopf_module_coring(hopf)
    H = hopf.H
    M = regular_module(H, 'right').relabel('H')
    carrier = tensor_over(M, H, K.C)
    rho = projection(carrier) @ _unit(H).kron(hopf.delta)
    return Comodule(K, M, rho)


def hopf_module_catalog(hopf: HopfAlgebra, K: Optional[Coring] = None) -> List[Comodule]:
    K = K or hopf_module_coring(hopf)
    S = hopf_module_comodule(hopf, K)
    S2 = comodule_sum(S, S)
    return [S, S2, comodule_sum(S2, S), regular_comodule(K), zero_comodule(K)]
