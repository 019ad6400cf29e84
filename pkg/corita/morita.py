'''
Morita contexts between possibly non-unital algebras.

A context ``(A, A', P, Q, tau, sigma)`` stores its connecting maps flat: ``tau`` is a
``dim A x (dim P * dim Q)`` matrix on ``P ⊗_k Q`` and ``sigma`` a ``dim A' x (dim Q * dim P)``
matrix on ``Q ⊗_k P``. Both must factor through the balanced tensor products.
'''
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import (
    Algebra,
    IdealWitness,
    field_algebra,
    firm_square,
    firm_square_map,
    firmness,
    ideal,
    idempotent_core,
    is_ring_map,
    matrix_algebra,
    product_algebra,
    span_product,
)
from .bimodule import (
    BalancedForm,
    Bimodule,
    HomSpace,
    catalog_report,
    column_vectors,
    default_catalog,
    direct_sum,
    flat_projection,
    flat_section,
    hom,
    module_firmness,
    projection,
    regular_module,
    restrict,
    row_vectors,
    section,
    tensor_map,
    tensor_over,
    zero_module,
)
from .corita_error import AxiomViolationError, HypothesisError, SchemaError
from .exactlin import QQ, Field, Mat, Subspace, image, inverse, is_iso, rank, swap_factors
from .more_typing import Scalar
from .report import Report


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MoritaContext:
    '''
    .. code-block:: python

        from corita.morita import MoritaContext

    The sextuple ``(A, A', P, Q, tau, sigma)`` with ``P`` an ``A``-``A'`` bimodule and ``Q``
    an ``A'``-``A`` bimodule.
    '''

    A: Algebra
    Ap: Algebra
    P: Bimodule
    Q: Bimodule
    tau: Mat
    sigma: Mat
    label: str = ''

    @property
    def field(self) -> Field:
        return self.A.field

    @property
    def wt(self) -> BalancedForm:
        return BalancedForm(self.P, self.Q, self.Ap, regular_module(self.A), self.tau)

    @property
    def bt(self) -> BalancedForm:
        return BalancedForm(self.Q, self.P, self.A, regular_module(self.Ap), self.sigma)

    def to_json(self) -> Dict[str, Any]:
        P, Q = self.P.to_json(), self.Q.to_json()
        P['left'], P['right'] = 'A', 'Ap'
        Q['left'], Q['right'] = 'Ap', 'A'
        return {
            'A': self.A.to_json(),
            'Ap': self.Ap.to_json(),
            'P': P,
            'Q': Q,
            'wt': self.tau.to_json(),
            'bt': self.sigma.to_json(),
            'label': self.label,
        }

    @staticmethod
    def from_json(data: Mapping[str, Any]) -> MoritaContext:
        try:
            A = Algebra.from_json(data['A'])
            Ap = Algebra.from_json(data['Ap'])
            refs = {'A': A, 'Ap': Ap}
            P = Bimodule.from_json(data['P'], refs)
            Q = Bimodule.from_json(data['Q'], refs)
            tau = Mat.from_json(A.field, data['wt'])
            sigma = Mat.from_json(A.field, data['bt'])
        except KeyError as e:
            raise SchemaError(f'context is missing {e}') from e
        for name, m, shape in (('wt', tau, (A.dim, P.dim * Q.dim)), ('bt', sigma, (Ap.dim, Q.dim * P.dim))):
            if m.shape != shape:
                raise SchemaError(f'{name} is {m.rows}x{m.cols}, expected {shape[0]}x{shape[1]}')
        return MoritaContext(A, Ap, P, Q, tau, sigma, str(data.get('label', '')))


def swap(ctx: MoritaContext) -> MoritaContext:
    ''' ``(A', A, Q, P, sigma, tau)``. '''
    return MoritaContext(ctx.Ap, ctx.A, ctx.Q, ctx.P, ctx.sigma, ctx.tau, ctx.label)


def scaled(ctx: MoritaContext, c: Scalar) -> MoritaContext:
    ''' The same context with ``sigma`` multiplied by ``c``. '''
    return MoritaContext(ctx.A, ctx.Ap, ctx.P, ctx.Q, ctx.tau, ctx.sigma.scale(c), ctx.label)


def _differing_columns(X: Mat, Y: Mat) -> List[int]:
    return [j for j, (a, b) in enumerate(zip(X.transpose().entries, Y.transpose().entries)) if a != b]


def _triple(idx: int, d2: int, d3: int) -> List[int]:
    return [idx // (d2 * d3), (idx // d3) % d2, idx % d3]


def validate_context(ctx: MoritaContext) -> Report:
    '''
    Checks the sides of ``P`` and ``Q``, that both connecting maps are balanced and bilinear
    and the two associativity squares ``(p tau q) p' = p (q sigma p')`` and
    ``(q sigma p) q' = q (p tau q')``. Failing squares list basis triples.
    '''
    A, Ap, P, Q = ctx.A, ctx.Ap, ctx.P, ctx.Q
    sides = P.left == A and P.right == Ap and Q.left == Ap and Q.right == A
    items = [Report.check('sides', sides, 'P is A-Ap and Q is Ap-A')]
    if not sides:
        return Report.group('context', items, ctx.label)
    items.append(ctx.wt.validate().renamed('wt'))
    items.append(ctx.bt.validate().renamed('bt'))
    f = ctx.field
    idP, idQ = Mat.identity(f, P.dim), Mat.identity(f, Q.dim)
    lhs = P.lact @ ctx.tau.kron(idP)
    rhs = P.ract @ idP.kron(ctx.sigma)
    bad = [_triple(j, Q.dim, P.dim) for j in _differing_columns(lhs, rhs)]
    items.append(Report.check('P square', not bad, "(p tau q) p' = p (q sigma p')", bad))
    lhs = Q.lact @ ctx.sigma.kron(idQ)
    rhs = Q.ract @ idQ.kron(ctx.tau)
    bad = [_triple(j, P.dim, Q.dim) for j in _differing_columns(lhs, rhs)]
    items.append(Report.check('Q square', not bad, "(q sigma p) q' = q (p tau q')", bad))
    return Report.group('context', items, ctx.label)


def image_rings(ctx: MoritaContext) -> Tuple[IdealWitness, IdealWitness]:
    ''' ``P tau Q`` in ``A`` and ``Q sigma P`` in ``A'`` as two-sided ideals. '''
    return ideal(ctx.A, image(ctx.tau)), ideal(ctx.Ap, image(ctx.sigma))


def bar_context(ctx: MoritaContext) -> MoritaContext:
    '''
    The context over the image rings, with surjective connecting maps.
    '''
    I, J = image_rings(ctx)
    Ab, Apb = I.algebra, J.algebra
    P = restrict(restrict(ctx.P, I.inclusion, Ab, 'left'), J.inclusion, Apb, 'right')
    Q = restrict(restrict(ctx.Q, J.inclusion, Apb, 'left'), I.inclusion, Ab, 'right')
    tau = I.subspace.coordinate_matrix(ctx.tau)
    sigma = J.subspace.coordinate_matrix(ctx.sigma)
    return MoritaContext(Ab, Apb, P, Q, tau, sigma, f'{ctx.label} bar' if ctx.label else 'bar')


@dataclass(frozen=True)
class Connecting:
    '''
    .. code-block:: python

        from corita.morita import Connecting

    The connecting maps on the balanced tensor products ``P ⊗_A' Q`` and ``Q ⊗_A P``.
    '''

    PQ: Bimodule
    QP: Bimodule
    tau: Mat
    sigma: Mat

    @property
    def strict(self) -> bool:
        return is_iso(self.tau) and is_iso(self.sigma)


def connecting(ctx: MoritaContext) -> Connecting:
    PQ = tensor_over(ctx.P, ctx.Ap, ctx.Q)
    QP = tensor_over(ctx.Q, ctx.A, ctx.P)
    return Connecting(PQ, QP, ctx.wt.on(PQ), ctx.bt.on(QP))


def strictness_report(ctx: MoritaContext) -> Report:
    c = connecting(ctx)
    items = []
    for name, m, target in (('tau', c.tau, ctx.A.dim), ('sigma', c.sigma, ctx.Ap.dim)):
        items.append(Report.check(f'{name} surjective', rank(m) == target, f'rank {rank(m)} onto dim {target}'))
        items.append(Report.check(f'{name} bijective', is_iso(m), f'{m.cols} -> {m.rows}'))
    return Report.group('strictness', items)


def omega(ctx: MoritaContext, M: Bimodule) -> Tuple[Bimodule, Mat]:
    '''
    ``omega_M: M ⊗_A P ⊗_A' Q -> M``, ``m ⊗ p ⊗ q -> m (p tau q)``, with its domain.
    '''
    PQ = tensor_over(ctx.P, ctx.Ap, ctx.Q)
    T = tensor_over(M, ctx.A, PQ)
    idM = Mat.identity(ctx.field, M.dim)
    return T, M.ract @ idM.kron(ctx.wt.on(PQ)) @ section(T)


def beta(ctx: MoritaContext, N: Bimodule) -> Tuple[Bimodule, Mat]:
    ''' ``beta_N: N ⊗_A' Q ⊗_A P -> N``, ``n ⊗ q ⊗ p -> n (q sigma p)``. '''
    return omega(swap(ctx), N)


def module_catalog(R: Algebra, side: str = 'right') -> List[Bimodule]:
    '''
    :func:`default_catalog` together with ``R ⊕ R`` and ``R ⊕ R ⊕ R``.
    '''
    cat = default_catalog(R, 'right' if side == 'right' else 'left')
    reg = cat[0]
    two = direct_sum(reg, reg).relabel('R^2 free')
    return cat + [two, direct_sum(two, reg).relabel('R^3 free')]


def omegabeta_check(ctx: MoritaContext, catalog: Optional[Sequence[Bimodule]] = None) -> Report:
    '''
    Over the image ring ``PτQ``, ``omega_M`` is bijective exactly when ``M`` is firm.
    '''
    bar = bar_context(ctx)
    mods = list(catalog) if catalog is not None else module_catalog(bar.A)
    items = []
    for k, M in enumerate(mods):
        _, w = omega(bar, M)
        firm = module_firmness(M, bar.A).is_firm
        iso = is_iso(w)
        items.append(Report.check(
            M.label or f'module {k}', iso == firm,
            f'omega {"bijective" if iso else "not bijective"}, module {"firm" if firm else "not firm"}',
        ))
    return catalog_report('omega/firmness agreement', items)


@dataclass(frozen=True)
class ReducedContext:
    '''
    .. code-block:: python

        from corita.morita import ReducedContext

    The reduction of a context by an idempotent left ideal ``B`` of ``QσP``: the ideal
    ``W = PBτQ`` of ``A``, the reduced context between ``W`` and ``B`` on
    ``P ⊗_B B`` and ``B ⊗_B Q``, and the restricted bimodules it is built from.
    '''

    base: MoritaContext
    B: IdealWitness
    W: IdealWitness
    context: MoritaContext
    P_WB: Bimodule
    Q_BW: Bimodule
    lemma: Report

    @property
    def strictness(self) -> Report:
        return strictness_report(self.context)


def reduce_by_ideal(ctx: MoritaContext, B: IdealWitness) -> ReducedContext:
    '''
    Reduces ``ctx`` by an idempotent left ideal ``B`` of the image ``QσP``.
    '''
    A, Ap, P, Q = ctx.A, ctx.Ap, ctx.P, ctx.Q
    f = ctx.field
    if B.ambient != Ap:
        raise HypothesisError('the reducing ideal must live in the second ring of the context')
    _, Apbar = image_rings(ctx)
    Bs = B.subspace
    if not Bs.is_subspace_of(Apbar.subspace):
        raise HypothesisError('B is not contained in Q sigma P')
    if span_product(Ap, Bs, Bs) != Bs:
        raise HypothesisError('B is not idempotent')
    if not span_product(Ap, Apbar.subspace, Bs).is_subspace_of(Bs):
        raise HypothesisError('B is not a left ideal of Q sigma P')

    incB = B.inclusion
    idP, idQ = Mat.identity(f, P.dim), Mat.identity(f, Q.dim)
    PB = image(P.ract @ idP.kron(incB))
    incPB = PB.inclusion()
    Ws = image(ctx.tau @ incPB.kron(idQ))
    W = ideal(A, Ws, 'two-sided')
    incW = W.inclusion
    Walg, Balg = W.algebra, B.algebra

    items = [Report.check('Q sigma PB = B', image(ctx.sigma @ idQ.kron(incPB)) == Bs)]
    WPB = image(P.lact @ incW.kron(incPB))
    BQ = image(Q.lact @ incB.kron(idQ))
    BQW = image(Q.ract @ BQ.inclusion().kron(incW))
    items.append(Report.check('W PB = PB and BQW = BQ', WPB == PB and BQW == BQ))
    items.append(Report.check('W idempotent', span_product(A, Ws, Ws) == Ws))
    Bp = span_product(Ap, Bs, Apbar.subspace)
    PBp = image(P.ract @ idP.kron(Bp.inclusion()))
    items.append(Report.check("W = PB' tau Q for B' = B Q sigma P", image(ctx.tau @ PBp.inclusion().kron(idQ)) == Ws))
    lemma = Report.group('ideal identities', items)

    P_WB = restrict(restrict(P, incW, Walg, 'left'), incB, Balg, 'right')
    Q_BW = restrict(restrict(Q, incB, Balg, 'left'), incW, Walg, 'right')
    regB = regular_module(Balg)
    Pbar = tensor_over(P_WB, Balg, regB, 'P⊗B')
    Qbar = tensor_over(regB, Balg, Q_BW, 'B⊗Q')
    tau_flat = ctx.tau @ P_WB.ract.kron(idQ) @ idP.kron(Balg.mult_map).kron(idQ)
    tau_bar = W.subspace.coordinate_matrix(tau_flat @ section(Pbar).kron(section(Qbar)))
    sigma_flat = Ap.mult_map @ Ap.mult_map.kron(Mat.identity(f, Ap.dim)) @ incB.kron(ctx.sigma).kron(incB)
    sigma_bar = Bs.coordinate_matrix(sigma_flat @ section(Qbar).kron(section(Pbar)))
    reduced = MoritaContext(Walg, Balg, Pbar, Qbar, tau_bar, sigma_bar, f'{ctx.label} reduced' if ctx.label else 'reduced')
    logger.debug('reduced context: W dim %d, B dim %d, P dim %d, Q dim %d', Walg.dim, Balg.dim, Pbar.dim, Qbar.dim)
    return ReducedContext(ctx, B, W, reduced, P_WB, Q_BW, lemma)


def _firm_square_bimodule(R: Algebra, Rt: Algebra, outer: str) -> Bimodule:
    '''
    ``R ⊗_R R`` as a bimodule: ``Rt`` (its firm square algebra) acts on the ``outer`` side
    by multiplication and ``R`` acts on the inner side.
    '''
    T = tensor_over(regular_module(R), R, regular_module(R))
    if outer == 'left':
        return Bimodule(T.field, T.dim, Rt, Rt.left_mults, R, T.right_action, 'R~', T.origin)
    return Bimodule(T.field, T.dim, R, T.left_action, Rt, Rt.right_mults, 'R~', T.origin)


def second_reduced(ctx: MoritaContext, B: IdealWitness) -> MoritaContext:
    '''
    The strict context between the firm squares of ``W`` and ``B`` on
    ``W~ ⊗_W P ⊗_B B~`` and ``B~ ⊗_B Q ⊗_W W~``. Strictness is checked, not assumed.
    '''
    rc = reduce_by_ideal(ctx, B)
    A, Ap = ctx.A, ctx.Ap
    W, Bw = rc.W, rc.B
    Walg, Balg = W.algebra, Bw.algebra
    Wt, Bt = firm_square(Walg), firm_square(Balg)
    f = ctx.field
    P, Q = rc.P_WB, rc.Q_BW

    Wl = _firm_square_bimodule(Walg, Wt, 'left')
    Wr = _firm_square_bimodule(Walg, Wt, 'right')
    Bl = _firm_square_bimodule(Balg, Bt, 'left')
    Br = _firm_square_bimodule(Balg, Bt, 'right')
    Pt = tensor_over(tensor_over(Wl, Walg, P), Balg, Br, 'P~')
    Qt = tensor_over(tensor_over(Bl, Balg, Q), Walg, Wr, 'Q~')

    idP, idQ = Mat.identity(f, P.dim), Mat.identity(f, Q.dim)
    idW, idB = Mat.identity(f, Walg.dim), Mat.identity(f, Balg.dim)
    incW, incB = W.inclusion, Bw.inclusion
    projW = flat_projection(Wl)
    projB = flat_projection(Bl)

    # tau~: w1 w2 ⊗ p b1 b2 ⊗ b3 b4 q ⊗ w3 w4 -> w1 w2 ⊗ tau(p b1 b2 b3 b4 q) w3 w4
    psi_P = Walg.mult_map.kron(P.ract @ idP.kron(Balg.mult_map))
    psi_Q = (Q.lact @ Balg.mult_map.kron(idQ)).kron(Walg.mult_map)
    g = W.subspace.retraction() @ A.mult_map @ ctx.tau.kron(incW)
    tau_t = projW @ idW.kron(g) @ psi_P.kron(psi_Q) @ flat_section(Pt).kron(flat_section(Qt))

    psi_Qp = Balg.mult_map.kron(Q.ract @ idQ.kron(Walg.mult_map))
    psi_Pp = (P.lact @ Walg.mult_map.kron(idP)).kron(Balg.mult_map)
    gp = Bw.subspace.retraction() @ Ap.mult_map @ ctx.sigma.kron(incB)
    sigma_t = projB @ idB.kron(gp) @ psi_Qp.kron(psi_Pp) @ flat_section(Qt).kron(flat_section(Pt))

    ctx2 = MoritaContext(Wt, Bt, Pt, Qt, tau_t, sigma_t, f'{ctx.label} firm' if ctx.label else 'firm reduced')
    strict = strictness_report(ctx2)
    if not strict.passed:
        raise AxiomViolationError(f'second reduced context of {ctx.label or "the context"} is not strict', strict)
    return ctx2


def kato_ohtake_verify(ctx: MoritaContext,
    B: IdealWitness,
    catalog_W: Optional[Sequence[Bimodule]] = None,
    catalog_B: Optional[Sequence[Bimodule]] = None,
) -> Report:
    '''
    On catalogs of right modules over ``W`` and ``B``: firm modules go to firm modules under
    ``- ⊗ P̄`` and ``- ⊗ Q̄``, and the round trips ``omega`` and ``beta`` of the reduced
    context are bijective.
    '''
    rc = reduce_by_ideal(ctx, B)
    R = rc.context
    items: List[Report] = [rc.lemma]
    sides = (
        ('W', R, R.A, R.Ap, R.P, catalog_W),
        ('B', swap(R), R.Ap, R.A, R.Q, catalog_B),
    )
    for name, c, ring, other, bimod, cat in sides:
        mods = list(cat) if cat is not None else module_catalog(ring)
        for k, M in enumerate(mods):
            label = f'{name}: {M.label or k}'
            if not module_firmness(M, ring).is_firm:
                items.append(Report.info(label, 'not firm, skipped'))
                continue
            N = tensor_over(M, ring, bimod)
            firm = module_firmness(N, other).is_firm
            _, w = omega(c, M)
            items.append(Report.group(label, [
                Report.check('image firm', firm, f'dim {N.dim}'),
                Report.check('round trip', is_iso(w), f'{w.cols} -> {w.rows}'),
            ]))
    return catalog_report('equivalence of firm modules', items)


def reduction_conditions(ctx: MoritaContext, B: Optional[IdealWitness] = None) -> Report:
    '''
    Materializes an idempotent left ideal ``B`` of ``QσP`` (the idempotent core when none is
    given), ``B' = B QσP`` and the firm ring ``B ⊗_B B`` with its ring map into ``A'``.
    '''
    Ap = ctx.Ap
    _, Apbar = image_rings(ctx)
    items: List[Report] = []
    if B is None:
        core = idempotent_core(Apbar)
        B = ideal(Ap, core.ideal.subspace, 'left')
        items.append(Report.info('discovery', f'idempotent core after {core.steps} steps', B.dim))
    Bs, S = B.subspace, Apbar.subspace
    items.append(Report.group('B', [
        Report.check('inside Q sigma P', Bs.is_subspace_of(S)),
        Report.check('idempotent', span_product(Ap, Bs, Bs) == Bs),
        Report.check('left ideal of Q sigma P', span_product(Ap, S, Bs).is_subspace_of(Bs)),
    ], f'dim {B.dim}'))
    Bp = span_product(Ap, Bs, S)
    items.append(Report.group("B'", [
        Report.check('idempotent', span_product(Ap, Bp, Bp) == Bp),
        Report.check('two-sided ideal of Q sigma P',
            span_product(Ap, S, Bp).is_subspace_of(Bp) and span_product(Ap, Bp, S).is_subspace_of(Bp)),
    ], f'dim {Bp.dim}'))
    Balg = B.algebra
    Bt = firm_square(Balg)
    mu = B.inclusion @ firm_square_map(Balg)
    items.append(Report.group('B⊗B', [
        Report.check('firm', firmness(Bt).is_firm),
        Report.check('ring map into the second ring', is_ring_map(mu, Bt, Ap)),
        Report.check('image is B', image(mu) == Bs),
    ], f'dim {Bt.dim}'))
    return Report.group('reduction conditions', items)


def unit_map(ctx: MoritaContext) -> Tuple[Mat, Bimodule]:
    '''
    ``u = (mu_{A,P} ⊗ Q) (A ⊗ tau)^{-1} d_A: A -> P ⊗_A' Q`` for a firm ``A`` and a
    surjective ``tau``.
    '''
    A = ctx.A
    f = ctx.field
    fr = firmness(A)
    if fr.d is None:
        raise HypothesisError('the first ring of the context is not firm')
    if image(ctx.tau).dim != A.dim:
        raise HypothesisError('tau is not surjective')
    regA = regular_module(A)
    T = tensor_over(ctx.P, ctx.Ap, ctx.Q)
    X = tensor_over(regA, A, T)
    AA = tensor_over(regA, A, regA)
    A_tau = tensor_map(X, Mat.identity(f, A.dim), ctx.wt.on(T), AA)
    if not is_iso(A_tau):
        raise HypothesisError('A ⊗ tau is not bijective')
    idA, idQ = Mat.identity(f, A.dim), Mat.identity(f, ctx.Q.dim)
    mu_AP = projection(T) @ ctx.P.lact.kron(idQ) @ idA.kron(section(T)) @ section(X)
    return mu_AP @ inverse(A_tau) @ fr.d, T


def _firm_catalog(R: Algebra, side: str = 'right') -> List[Bimodule]:
    return [M for M in module_catalog(R, side) if module_firmness(M, R, 'right' if side == 'right' else 'left').is_firm]


def _curry(form: Mat, d1: int, d2: int, x: int) -> Mat:
    ''' ``y -> form(x ⊗ y)``. '''
    return form.select_columns([x * d2 + y for y in range(d2)])


def _curry_first(form: Mat, d1: int, d2: int, y: int) -> Mat:
    ''' ``x -> form(x ⊗ y)``. '''
    return form.select_columns([x * d2 + y for x in range(d1)])


def evaluation(H: HomSpace) -> Mat:
    ''' ``H ⊗_k source -> target``, ``phi ⊗ x -> phi(x)``. '''
    cols = []
    for B in H.basis:
        cols.extend(B.columns())
    if not cols:
        return Mat.zeros(H.target.field, H.target.dim, 0)
    return Mat.from_columns(H.target.field, H.target.dim, cols)


def moritafirm_checks(ctx: MoritaContext, catalog: Optional[Sequence[Bimodule]] = None) -> Report:
    '''
    For a firm ``A`` and a surjective ``tau``: the unit ``u``, full faithfulness of
    ``- ⊗_A P``, the dual descriptions of ``A ⊗_A P`` and ``Q ⊗_A A``, the natural
    isomorphism ``Phi``, ``A`` as a left ideal of ``End(P)``, the generator property and
    bijectivity of ``tau`` for firm ``P`` or ``Q``.
    '''
    A, Ap, P, Q = ctx.A, ctx.Ap, ctx.P, ctx.Q
    f = ctx.field
    if not firmness(A).is_firm:
        return Report.unmet('firm ring theorem', 'the first ring is not firm')
    if image(ctx.tau).dim != A.dim:
        return Report.unmet('firm ring theorem', 'tau is not surjective')
    idA, idP, idQ = Mat.identity(f, A.dim), Mat.identity(f, P.dim), Mat.identity(f, Q.dim)
    regA, regAp = regular_module(A), regular_module(Ap)
    items: List[Report] = []

    # unit
    u, T = unit_map(ctx)
    tau_T = ctx.wt.on(T)
    lin = all(u @ A.left_mult(a) == T.left_action[a] @ u and u @ A.right_mult(a) == T.right_action[a] @ u
              for a in range(A.dim))
    items.append(Report.group('unit', [
        Report.check('tau u = id', tau_T @ u == idA),
        Report.check('bimodule map', lin),
    ], witness=u))

    # - ⊗_A P fully faithful
    cat = list(catalog) if catalog is not None else _firm_catalog(A)
    ff: List[Report] = []
    for i, M in enumerate(cat):
        for j, N in enumerate(cat):
            H1 = hom(M, N, 'right')
            MP, NP = tensor_over(M, A, P), tensor_over(N, A, P)
            H2 = hom(MP, NP, 'right')
            cols = [H2.coordinates(tensor_map(MP, Bt, idP, NP)) for Bt in H1.basis]
            r = rank(Mat.from_columns(f, H2.dim, cols)) if cols else 0
            ff.append(Report.check(f'{M.label or i} -> {N.label or j}', r == H1.dim == H2.dim,
                f'hom dims {H1.dim} and {H2.dim}, rank {r}'))
    items.append(catalog_report('fully faithful', ff))

    # A ⊗_A P against A ⊗_A Hom(Q, A')
    Hq = hom(Q, regAp, 'left')
    Hd = Hq.module()
    theta = Mat.from_columns(f, Hq.dim, [Hq.coordinates(_curry_first(ctx.sigma, Q.dim, P.dim, p)) for p in range(P.dim)]) \
        if P.dim else Mat.zeros(f, Hq.dim, 0)
    AP = tensor_over(regA, A, P)
    AH = tensor_over(regA, A, Hd)
    alpha = tensor_map(AP, idA, theta, AH)
    d = firmness(A).d
    assert d is not None
    # a -> a1 ⊗ p ⊗ q with a1 ⊗ a2 = d(a) and p ⊗ q = u(a2)
    D = idA.kron(section(T) @ u) @ section(tensor_over(regA, A, regA)) @ d
    ev_QH = evaluation(Hq) @ swap_factors(f, Q.dim, Hq.dim)
    alpha_inv_flat = projection(AP) @ idA.kron(P.ract @ idP.kron(ev_QH)) @ D.kron(Mat.identity(f, Hq.dim))
    alpha_inv = alpha_inv_flat @ section(AH)
    iso_items = [
        Report.check('alpha bijective', is_iso(alpha), f'{alpha.cols} -> {alpha.rows}'),
        Report.check('explicit inverse', alpha_inv @ alpha == Mat.identity(f, AP.dim) and alpha @ alpha_inv == Mat.identity(f, AH.dim)),
    ]
    Hp = hom(P, regAp, 'right')
    Hpm = Hp.module()
    theta_q = Mat.from_columns(f, Hp.dim, [Hp.coordinates(_curry(ctx.sigma, Q.dim, P.dim, q)) for q in range(Q.dim)]) \
        if Q.dim else Mat.zeros(f, Hp.dim, 0)
    QA = tensor_over(Q, A, regA)
    HA = tensor_over(Hpm, A, regA)
    iso_items.append(Report.check('Q ⊗ A against Hom(P, A\') ⊗ A', is_iso(tensor_map(QA, theta_q, idA, HA))))
    items.append(Report.group('dual descriptions', iso_items))

    # Phi_M: M ⊗ Q ⊗ A -> Hom(P, M) ⊗ A
    split = (section(T) @ u).kron(idA) @ section(tensor_over(regA, A, regA)) @ d
    phis: List[Report] = []
    for k, M in enumerate(module_catalog(Ap)):
        MQ = tensor_over(M, Ap, Q)
        X = tensor_over(MQ, A, regA)
        H = hom(P, M, 'right')
        Hm = H.module()
        Y = tensor_over(Hm, A, regA)
        cols = []
        for m in range(M.dim):
            for q in range(Q.dim):
                s = _curry(ctx.sigma, Q.dim, P.dim, q)
                img = [M.right_act_by(s.column_vector(p)).column_vector(m) for p in range(P.dim)]
                fm = Mat.from_columns(f, M.dim, img) if img else Mat.zeros(f, M.dim, 0)
                cols.append(H.coordinates(fm))
        th = Mat.from_columns(f, H.dim, cols) if cols else Mat.zeros(f, H.dim, 0)
        Phi = projection(Y) @ th.kron(idA) @ section(MQ).kron(idA) @ section(X)
        # phi ⊗ a1 a2 -> phi(p) ⊗ q ⊗ a2 with p ⊗ q = u(a1)
        Phi_inv = (
            projection(X)
            @ projection(MQ).kron(idA)
            @ evaluation(H).kron(idQ).kron(idA)
            @ Mat.identity(f, H.dim).kron(split)
            @ section(Y)
        )
        phis.append(Report.group(M.label or f'module {k}', [
            Report.check('bijective', is_iso(Phi), f'{X.dim} -> {Y.dim}'),
            Report.check('explicit inverse',
                Phi_inv @ Phi == Mat.identity(f, X.dim) and Phi @ Phi_inv == Mat.identity(f, Y.dim)),
        ]))
    items.append(catalog_report('natural isomorphism Phi', phis))

    # A inside End(P) and End(Q)
    EP = hom(P, P, 'right')
    img = Subspace(f, P.dim * P.dim, (lam.vec().column_vector(0) for lam in P.left_action))
    left_ideal = all(img.contains((E @ lam).vec().column_vector(0)) for E in EP.basis for lam in P.left_action)
    EQ = hom(Q, Q, 'left')
    imgQ = Subspace(f, Q.dim * Q.dim, (rho.vec().column_vector(0) for rho in Q.right_action))
    right_ideal = all(imgQ.contains((E @ rho).vec().column_vector(0)) for E in EQ.basis for rho in Q.right_action)
    items.append(Report.group('ideal of endomorphisms', [
        Report.check('left ideal in End(P)', left_ideal),
        Report.check('right ideal in End(Q)^op', right_ideal),
        Report.info('A -> End(P) injective', str(img.dim == A.dim)),
    ]))

    # generators
    gens: List[Report] = []
    QA_mod = QA.right_only()
    for k, M in enumerate(_firm_catalog(A)):
        H = hom(QA_mod, M, 'right')
        span = Subspace(f, M.dim, (c for Bt in H.basis for c in Bt.columns()))
        gens.append(Report.check(f'Q⊗A generates {M.label or k}', span.dim == M.dim))
    AP_mod = AP.left_only()
    for k, N in enumerate(_firm_catalog(A, 'left')):
        H = hom(AP_mod, N, 'left')
        span = Subspace(f, N.dim, (c for Bt in H.basis for c in Bt.columns()))
        gens.append(Report.check(f'A⊗P generates {N.label or k}', span.dim == N.dim))
    items.append(catalog_report('generators', gens))

    # tau bijective
    p_firm = module_firmness(P, A, 'left').is_firm
    q_firm = module_firmness(Q, A, 'right').is_firm
    if p_firm or q_firm:
        items.append(Report.check('tau bijective', is_iso(tau_T), 'P or Q is firm over A'))
    else:
        items.append(Report.unmet('tau bijective', 'neither P nor Q is firm over A'))
    return Report.group('firm ring theorem', items)


@dataclass(frozen=True)
class DualBasis:
    '''
    .. code-block:: python

        from corita.morita import DualBasis

    For a firm left ideal ``R`` of ``PτQ``: ``u: R -> P ⊗_A' Q`` with ``tau u = incl`` and
    the ring map ``j: R -> RP ⊗_A' RP*`` where ``RP = R ⊗_R P``.
    '''

    u: Mat
    j: Mat
    RP: Bimodule
    dual: HomSpace
    X: Bimodule
    report: Report


def dual_basis_check(R: Algebra,
    j: Mat,
    X: Bimodule,
    dual: HomSpace,
    M: Bimodule,
) -> Report:
    '''
    ``j: R -> X = M ⊗ M*`` is multiplicative for ``(x ⊗ phi)(x' ⊗ phi') = x phi(x') ⊗ phi'``
    and ``(x ⊗ phi) . y = x phi(y)`` recovers the left action of ``R`` on ``M``.
    '''
    f = R.field
    o = X.origin
    if o is None:
        return Report.unmet('dual basis', 'target is not a tensor product')
    secX, projX = o.quotient.section, o.quotient.projection
    ev = evaluation(dual)  # dual ⊗ M -> ring
    idM, idH = Mat.identity(f, M.dim), Mat.identity(f, dual.dim)
    xphi = M.ract @ idM.kron(ev)  # M ⊗ dual ⊗ M -> M
    prod = projX @ xphi.kron(idH) @ secX.kron(secX)
    mult = prod @ j.kron(j) == j @ R.mult_map
    act = xphi @ secX.kron(idM)
    action = all(act @ j.select_columns([r]).kron(idM) == M.left_action[r] for r in range(R.dim))
    return Report.group('dual basis', [
        Report.check('multiplicative', mult),
        Report.check('induces the left action', action),
    ])


def firm_ideal_dualbasis(ctx: MoritaContext, R: IdealWitness) -> DualBasis:
    '''
    For unital ``A`` and ``A'`` and a firm left ideal ``R`` of ``A`` inside ``PτQ``: the
    splitting ``u`` of ``tau`` on ``R`` and the ring map ``j`` exhibiting ``R ⊗_R P`` as an
    ``R``-firmly projective right ``A'``-module.
    '''
    A, Ap, P, Q = ctx.A, ctx.Ap, ctx.P, ctx.Q
    f = ctx.field
    if not (A.is_unital and Ap.is_unital):
        raise HypothesisError('both rings of the context must be unital')
    Ralg = R.algebra
    fr = firmness(Ralg)
    if fr.d is None:
        raise HypothesisError('R is not a firm ring')
    rc = swap(reduce_by_ideal(swap(ctx), ideal(A, R.subspace, 'left')).context)
    u_bar, Tbar = unit_map(rc)
    incR = R.inclusion
    idP, idQ = Mat.identity(f, P.dim), Mat.identity(f, Q.dim)
    T = tensor_over(P, Ap, Q)
    mu_RP = P.lact @ incR.kron(idP)
    mu_QR = Q.ract @ idQ.kron(incR)
    # r -> r p ⊗ q r' on the four-fold flat R ⊗ P ⊗ Q ⊗ R
    u = projection(T) @ mu_RP.kron(mu_QR) @ flat_section(Tbar) @ u_bar
    tau_T = ctx.wt.on(T)

    P_R = restrict(P, incR, Ralg, 'left')
    RP = tensor_over(regular_module(Ralg), Ralg, P_R, 'R⊗P')
    H = hom(RP, regular_module(Ap), 'right')
    X = tensor_over(RP, Ap, H.module(), 'RP⊗RP*')
    lift = mu_RP @ section(RP)
    cols = [H.coordinates(_curry(ctx.sigma, Q.dim, P.dim, q) @ lift) for q in range(Q.dim)]
    fq = Mat.from_columns(f, H.dim, cols) if cols else Mat.zeros(f, H.dim, 0)
    idR = Mat.identity(f, Ralg.dim)
    secRR = section(tensor_over(regular_module(Ralg), Ralg, regular_module(Ralg)))
    j = (
        projection(X)
        @ projection(RP).kron(Mat.identity(f, H.dim))
        @ idR.kron(idP).kron(fq)
        @ idR.kron(section(T) @ u)
        @ secRR
        @ fr.d
    )
    lin = all(
        u @ Ralg.left_mult(r) == T.left_act_by(incR.column_vector(r)) @ u
        and u @ Ralg.right_mult(r) == T.right_act_by(incR.column_vector(r)) @ u
        for r in range(Ralg.dim)
    )
    rep = Report.group('firm ideal dual basis', [
        Report.check('tau u = inclusion', tau_T @ u == incR),
        Report.check('R-bimodule map', lin),
        dual_basis_check(Ralg, j, X, H, RP),
    ])
    return DualBasis(u, j, RP, H, X, rep)


def matrix_context(n: int = 2, field: Field = QQ) -> MoritaContext:
    '''
    ``(k, M_n, rows, columns)`` with the dot product and the outer product; strict.
    '''
    k, Mn = field_algebra(field), matrix_algebra(n, field)
    ident = [Mat.identity(field, n)]
    rows, cols = row_vectors(Mn, n), column_vectors(Mn, n)
    P = Bimodule(field, n, k, ident, Mn, rows.right_action, 'rows')
    Q = Bimodule(field, n, Mn, cols.left_action, k, ident, 'columns')
    dot = [field.one if i == j else field.zero for i in range(n) for j in range(n)]
    tau = Mat(field, [dot])
    return MoritaContext(k, Mn, P, Q, tau, Mat.identity(field, n * n), 'matrix')


def projection_context(field: Field = QQ) -> MoritaContext:
    '''
    ``(k, k × k, k, k)`` with ``k × k`` acting through the first factor; ``sigma`` has image
    ``k × 0``.
    '''
    k, kk = field_algebra(field), product_algebra(2, field)
    one, zero = Mat.identity(field, 1), Mat.zeros(field, 1, 1)
    P = Bimodule(field, 1, k, [one], kk, [one, zero], 'k')
    Q = Bimodule(field, 1, kk, [one, zero], k, [one], 'k')
    return MoritaContext(k, kk, P, Q, Mat(field, [[1]]), Mat(field, [[1], [0]]), 'projection')


def zero_context(A: Algebra, Ap: Algebra) -> MoritaContext:
    f = A.field
    P, Q = zero_module(f, A, Ap), zero_module(f, Ap, A)
    return MoritaContext(A, Ap, P, Q, Mat.zeros(f, A.dim, 0), Mat.zeros(f, Ap.dim, 0), 'zero')
