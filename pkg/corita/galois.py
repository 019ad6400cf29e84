'''
Comodules as firmly projective modules: the Morita contexts attached to a comodule, comatrix
corings with their canonical maps, and the structure theorems relating firm modules over a
ring of colinear maps to comodules.

A right ``C``-comodule ``Σ`` is turned into an ``R``-``C`` bicomodule by a ring map ``R -> T``
into ``T = End^C(Σ)``. All categorical statements are certified on finite catalogs.
'''
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .algebra import (
    Algebra,
    IdealWitness,
    firm_square,
    firm_square_map,
    firmness,
    has_right_local_units,
    ideal,
    idempotent_core,
    is_ring_map,
    span_product,
    subalgebra,
)
from .bimodule import (
    Bimodule,
    HomSpace,
    ModMap,
    associator,
    catalog_report,
    default_catalog,
    extension_of_scalars,
    flat_projection,
    flat_section,
    hom,
    is_faithfully_flat,
    is_projective,
    module_firmness,
    projection,
    regular_module,
    restrict,
    section,
    submodule,
    tensor_map,
    tensor_over,
)
from .coring import (
    Comodule,
    Coring,
    CosepWitness,
    HopfAlgebra,
    coalgebra_coring,
    comodule_as_module,
    comodule_catalog,
    comodule_hom,
    coring_ring,
    cosep_action,
    coseparability_solve,
    dual_ring,
    dual_ring_maps,
    hopf_module_coring,
    regular_comodule,
    validate_comodule,
    validate_coring,
    zero_comodule,
)
from .corita_error import AxiomViolationError, DimensionMismatchError, HypothesisError, InvalidOperationError
from .exactlin import Mat, Subspace, image, intersect, inverse, is_iso, kernel, rank, rref_solve, swap_factors
from .morita import (
    MoritaContext,
    ReducedContext,
    dual_basis_check,
    evaluation,
    image_rings,
    kato_ohtake_verify,
    module_catalog,
    reduce_by_ideal,
    validate_context,
)
from .report import CATALOG_SCOPE, Report


logger = logging.getLogger(__name__)


def _coords(H: HomSpace, maps: Sequence[Mat]) -> Mat:
    return Mat.from_columns(H.source.field, H.dim, [H.coordinates(m) for m in maps])


def _firm_catalog(R: Algebra, max_dim: Optional[int] = None) -> List[Bimodule]:
    if R.dim == 0:
        return []
    mods = [M for M in module_catalog(R) if module_firmness(M, R).is_firm]
    return [M for M in mods if max_dim is None or M.dim <= max_dim]


def _split(R: Algebra) -> Mat:
    ''' ``r -> r1 ⊗ r2`` in ``R ⊗_k R`` with ``r1 r2 = r``. '''
    fr = firmness(R)
    if fr.d is None:
        raise HypothesisError(f'{R!r} is not a firm ring')
    return fr.quotient.section @ fr.d


# contexts of a module and of a comodule

@dataclass(frozen=True)
class ModuleContext:
    '''
    .. code-block:: python

        from corita.galois import ModuleContext

    ``(S, A, Σ, Σ*, tau, sigma)`` for a right ``A``-module ``Σ`` with ``S = End_A(Σ)``,
    together with the hom-spaces realizing ``S`` and ``Σ*`` and the image ``S̄ = ΣτΣ*``.
    '''

    context: MoritaContext
    maps: HomSpace
    dual: HomSpace
    image: IdealWitness


def context_A_mod(Sigma: Bimodule) -> ModuleContext:
    '''
    ``x tau xi = x xi(-)`` in ``End_A(Σ)`` and ``xi sigma x = xi(x)`` in ``A``.
    '''
    A = Sigma.right
    if A is None:
        raise DimensionMismatchError(f'{Sigma!r} is not a right module')
    f, n = Sigma.field, Sigma.dim
    Sr = Sigma.right_only()
    E = hom(Sr, Sr, 'right')
    S = E.endomorphism_algebra().relabel(f'End({Sigma.label})' if Sigma.label else 'End')
    P = Bimodule(f, n, S, E.basis, A, Sr.right_action, Sigma.label or 'Σ')
    dual = hom(P, regular_module(A), 'right')
    Q = dual.module().relabel('Σ*')
    dA, dQ = A.dim, dual.dim
    tau = Mat.from_columns(f, S.dim, [
        E.coordinates(Sr.ract.select_columns([x * dA + a for a in range(dA)]) @ dual.basis[q])
        for x in range(n) for q in range(dQ)
    ])
    sigma = Mat.from_columns(f, dA, [dual.basis[q].column_vector(x) for q in range(dQ) for x in range(n)])
    ctx = MoritaContext(S, A, P, Q, tau, sigma, f'End_A({Sigma.label})' if Sigma.label else 'module')
    logger.debug('module context of %s: End dim %d, dual dim %d', Sigma.label, S.dim, dQ)
    return ModuleContext(ctx, E, dual, ideal(S, image(tau), 'two-sided'))


@dataclass(frozen=True)
class ComoduleContext:
    '''
    .. code-block:: python

        from corita.galois import ComoduleContext

    ``(T, *C, Σ, Q, tau, sigma)`` for a right comodule ``Σ``: ``T = End^C(Σ)``, ``Q`` the maps
    ``q`` in ``Hom_A(Σ, *C)`` with ``q(x[0])(c) x[1] = c(1) q(x)(c(2))``.
    '''

    context: MoritaContext
    maps: HomSpace
    dual: HomSpace
    Q: HomSpace
    report: Report

    @property
    def images(self) -> Tuple[IdealWitness, IdealWitness]:
        return image_rings(self.context)


def context_Sigma(Sigma: Comodule) -> ComoduleContext:
    '''
    ``x tau q = x q(-)`` in ``T``, with ``*C`` acting on ``Σ`` by ``x . g = x[0] g(x[1])``,
    and ``q sigma x = q(x)`` in ``*C``.
    '''
    K = Sigma.coring
    A, C = K.A, K.C
    f, n, dA, dC = K.field, Sigma.dim, A.dim, K.dim
    Th = comodule_hom(Sigma, Sigma)
    T = Th.endomorphism_algebra().relabel(f'End^C({Sigma.label})' if Sigma.label else 'End^C')
    D = dual_ring_maps(K)
    Cs = dual_ring(K)
    Xs = comodule_as_module(Sigma)
    P = Bimodule(f, n, T, Th.basis, Cs, Xs.right_action, Sigma.label or 'Σ')

    P_A = Bimodule(f, n, T, Th.basis, A, Sigma.M.right_action, Sigma.label)
    target = Bimodule(f, D.dim, Cs, Cs.left_mults, A, D.module().right_action, '*C')
    idS, idC = Mat.identity(f, n), K.identity()
    lhs_shape = idS.kron(swap_factors(f, dC, dC)) @ Sigma.lift.kron(idC)
    rhs_shape = swap_factors(f, n, dC).kron(idC) @ idS.kron(K.lift)

    def defect(F: Mat) -> Mat:
        E_F = Mat.hstack(f, dA, [D.matrix(F.column_vector(x)) for x in range(n)])
        return C.lact @ E_F.kron(idC) @ lhs_shape - C.ract @ idC.kron(E_F) @ rhs_shape

    Qh = hom(P_A, target, 'right').restrict(defect)
    Q = Qh.module().relabel('Q')
    dD, dQ = D.dim, Qh.dim
    tau = Mat.from_columns(f, T.dim, [
        Th.coordinates(Xs.ract.select_columns([x * dD + g for g in range(dD)]) @ Qh.basis[q])
        for x in range(n) for q in range(dQ)
    ])
    sigma = Mat.from_columns(f, dD, [Qh.basis[q].column_vector(x) for q in range(dQ) for x in range(n)])
    ctx = MoritaContext(T, Cs, P, Q, tau, sigma, f'M({Sigma.label})' if Sigma.label else 'comodule')
    rep = validate_context(ctx)
    logger.info('comodule context of %s: T dim %d, *C dim %d, Q dim %d: %s', Sigma.label, T.dim, dD, dQ, rep.verdict)
    return ComoduleContext(ctx, Th, D, Qh, rep)


# the firm ring and the comatrix coring

@dataclass(frozen=True)
class GaloisDatum:
    '''
    .. code-block:: python

        from corita.galois import GaloisDatum

    A firm ring ``R`` acting on a comodule ``Σ`` through ``iota: R -> End^C(Σ)``, with a dual
    basis ``j: R -> Σ ⊗_A Σ*``. ``j`` is ``None`` when no dual basis exists.
    '''

    coring: Coring
    Sigma: Comodule
    R: Algebra
    T: Algebra
    maps: HomSpace
    iota: Mat
    Sigma_R: Bimodule
    dual: HomSpace
    Sigma_dual: Bimodule
    X: Bimodule
    j: Optional[Mat]
    report: Report

    @property
    def is_zero(self) -> bool:
        return self.R.dim == 0


def _datum(Sigma: Comodule,
    R: Algebra,
    T: Algebra,
    Th: HomSpace,
    iota: Mat,
    items: List[Report],
) -> GaloisDatum:
    K = Sigma.coring
    A = K.A
    f, n, dA = K.field, Sigma.dim, A.dim
    L = [Th.matrix(iota.column_vector(r)) for r in range(R.dim)]
    Sigma_R = Bimodule(f, n, R, L, A, Sigma.M.right_action, Sigma.label or 'Σ')
    dual = hom(Sigma_R, regular_module(A), 'right')
    Sd = dual.module().relabel('Σ*')
    X = tensor_over(Sigma_R, A, Sd, 'Σ⊗Σ*')
    if R.dim == 0:
        items.append(Report.unmet('firm ideal', 'no nonzero firm ideal found'))
        return GaloisDatum(K, Sigma, R, T, Th, iota, Sigma_R, dual, Sd, X, Mat.zeros(f, X.dim, 0),
            Report.group('firm datum', items))

    # y -> x xi(y) for x ⊗ xi
    phi_flat = Mat.hstack(f, n * n, [
        (Sigma_R.ract.select_columns([x * dA + a for a in range(dA)]) @ dual.basis[q]).vec()
        for x in range(n) for q in range(dual.dim)
    ])
    phi = phi_flat @ section(X)
    Hj = hom(regular_module(R), X, 'bi')
    rhs = Mat.from_columns(f, n * n, [m.vec().column_vector(0) for m in L]).vec()
    j: Optional[Mat] = None
    if Hj.dim:
        system = Mat.hstack(f, rhs.rows, [(phi @ B).vec() for B in Hj.basis])
        res = rref_solve(system, rhs)
        if res.solution is not None:
            j = Hj.matrix(res.solution.column_vector(0))
    items.append(Report.check('R firm', firmness(R).is_firm, f'dim {R.dim}'))
    items.append(Report.check('iota multiplicative', is_ring_map(iota, R, T)))
    if j is None:
        items.append(Report.check('dual basis', False, f'no bimodule map R -> Σ⊗Σ* among {Hj.dim} recovers the action'))
    else:
        items.append(dual_basis_check(R, j, X, dual, Sigma_R))
    rep = Report.group('firm datum', items)
    logger.info('firm datum on %s: R dim %d: %s', Sigma.label, R.dim, rep.verdict)
    return GaloisDatum(K, Sigma, R, T, Th, iota, Sigma_R, dual, Sd, X, j, rep)


def construct_R(Sigma: Comodule) -> GaloisDatum:
    '''
    ``B = S̄ ∩ T`` for ``S̄ = ΣτΣ*`` in ``End_A(Σ)``, its idempotent core ``B'`` and the firm
    ring ``R = B' ⊗_{B'} B'`` acting through the multiplication.
    '''
    K = Sigma.coring
    f = K.field
    mc = context_A_mod(Sigma.M)
    E = mc.maps
    Th = comodule_hom(Sigma, Sigma)
    T = Th.endomorphism_algebra().relabel('T')
    T_in_S = Subspace(f, E.dim, [E.coordinates(B) for B in Th.basis])
    Bs = intersect(mc.image.subspace, T_in_S)
    B = ideal(T, Subspace(f, T.dim, [Th.coordinates(E.matrix(v)) for v in Bs.vectors]), 'two-sided')
    core = idempotent_core(B)
    items = [
        Report.info('S bar', f'dim {mc.image.dim} of {E.dim}'),
        Report.info('T', f'dim {T.dim}'),
        Report.info('B', f'dim {B.dim}'),
        Report.info('core', f'dim {core.ideal.dim} after {core.steps} steps'),
    ]
    Bp = core.ideal
    if Bp.dim == 0:
        R = Algebra(f, [], None, 'R')
        return _datum(Sigma, R, T, Th, Mat.zeros(f, T.dim, 0), items)
    Balg = Bp.algebra
    R = firm_square(Balg).relabel('R')
    iota = Bp.inclusion @ firm_square_map(Balg)
    return _datum(Sigma, R, T, Th, iota, items)


def datum_over(Sigma: Comodule, R: Algebra, iota: Mat) -> GaloisDatum:
    ''' A datum for a given firm ring ``R`` and ring map ``iota: R -> End^C(Σ)``. '''
    Th = comodule_hom(Sigma, Sigma)
    T = Th.endomorphism_algebra().relabel('T')
    return _datum(Sigma, R, T, Th, iota, [])


@dataclass(frozen=True)
class ComatrixCoring:
    '''
    .. code-block:: python

        from corita.galois import ComatrixCoring

    ``Σ† ⊗_R Σ`` over ``A`` for ``Σ† = Σ* ⊗_R R``, with ``can(xi ⊗ r ⊗ x) = xi(r x[0]) x[1]``
    and ``Σ†`` as a left ``C``-comodule.
    '''

    datum: GaloisDatum
    Sigma_dagger: Bimodule
    coring: Coring
    can: Mat
    dagger: Comodule
    report: Report


def comatrix(datum: GaloisDatum) -> ComatrixCoring:
    '''
    Coproduct ``xi ⊗ r ⊗ x -> (xi ⊗ r1 ⊗ e) ⊗ (f ⊗ r3 ⊗ x)`` where ``r = r1 r2 r3`` and
    ``j(r2) = e ⊗ f``; counit ``xi ⊗ r ⊗ x -> xi(r x)``. Raises when the result is not a coring.
    '''
    if datum.j is None:
        raise HypothesisError('the datum has no dual basis')
    K = datum.coring
    A, C, R = K.A, K.C, datum.R
    f = K.field
    S_R, Sd = datum.Sigma_R, datum.Sigma_dual
    regR = regular_module(R)
    dagger = tensor_over(Sd, R, regR, 'Σ†')
    D = tensor_over(dagger, R, S_R, 'Σ†⊗Σ')
    ev = evaluation(datum.dual)
    idQ, idR, idS, idC = (Mat.identity(f, d) for d in (Sd.dim, R.dim, S_R.dim, K.dim))
    eps = ev @ idQ.kron(S_R.lact) @ flat_section(D)
    square = tensor_over(D, A, D)
    dagger_carrier = tensor_over(C, A, dagger)
    if R.dim == 0:
        delta = Mat.zeros(f, square.dim, D.dim)
        lam = Mat.zeros(f, dagger_carrier.dim, dagger.dim)
    else:
        d = _split(R)
        d3 = d.kron(idR) @ d
        middle = idR.kron(section(datum.X) @ datum.j).kron(idR) @ d3
        delta = flat_projection(square) @ idQ.kron(middle).kron(idS) @ flat_section(D)
        can_flat = C.lact @ ev.kron(idC) @ idQ.kron(datum.Sigma.lift @ S_R.lact)
        lam = flat_projection(dagger_carrier) @ can_flat.kron(idQ).kron(idR) @ idQ.kron(middle) @ flat_section(dagger)
    cor = Coring(A, D, delta, eps, 'comatrix')
    crep = validate_coring(cor)
    if not crep.passed:
        raise AxiomViolationError('the comatrix coproduct does not define a coring', crep)
    can = C.lact @ ev.kron(idC) @ idQ.kron(datum.Sigma.lift @ S_R.lact) @ flat_section(D)
    dag = Comodule(K, dagger, lam, 'left')
    rep = Report.group('comatrix coring', [
        crep,
        ModMap(D, C, can).validate().renamed('can bilinear'),
        Report.check('can preserves the counit', K.eps @ can == eps),
        Report.check('can preserves the coproduct', K.delta @ can == tensor_map(cor.square, can, can, K.square) @ delta),
        validate_comodule(dag).renamed('Σ† left comodule'),
    ], f'dim {D.dim}')
    logger.info('comatrix coring of dim %d, can of rank %d: %s', D.dim, rank(can), rep.verdict)
    return ComatrixCoring(datum, dagger, cor, can, dag, rep)


# the tensor-hom adjunction of an R-C bicomodule

@dataclass(frozen=True)
class AdjointValue:
    '''
    .. code-block:: python

        from corita.galois import AdjointValue

    ``Hom^C(Σ, M) R ⊗_R R`` with the hom-space it is cut from and the span ``Hom^C(Σ, M) R``
    in the coordinates of that hom-space.
    '''

    comodule: Comodule
    maps: HomSpace
    span: Subspace
    module: Bimodule
    value: Bimodule


def _precompose_module(H: HomSpace, acts: Sequence[Mat], ring: Algebra, label: str = '') -> Bimodule:
    ''' ``H`` as a right ``ring``-module by ``h . r = h acts[r]``. '''
    mats = [_coords(H, [B @ a for B in H.basis]) for a in acts]
    return Bimodule(H.source.field, H.dim, right=ring, right_action=mats, label=label)


def _saturate(M: Bimodule, ring: Algebra) -> Tuple[Subspace, Bimodule, Bimodule]:
    ''' ``MR``, as a subspace and a submodule, and ``MR ⊗_R R``. '''
    span = image(M.ract)
    sub = submodule(M, span, f'{M.label}R' if M.label else '')
    return span, sub, tensor_over(sub, ring, regular_module(ring))


@dataclass(frozen=True)
class SigmaAdjunction:
    '''
    .. code-block:: python

        from corita.galois import SigmaAdjunction

    ``F = - ⊗_R Σ`` from right ``R``-modules to comodules and ``G = Hom^C(Σ, -) R ⊗_R R`` back,
    with unit ``n -> ((n^r)^{r'} ⊗ -) r' ⊗ r`` and counit ``h r ⊗ r' ⊗ x -> h(r r' x)``.
    '''

    Sigma: Comodule
    R: Algebra
    Sigma_R: Bimodule

    @staticmethod
    def of(datum: GaloisDatum) -> SigmaAdjunction:
        return SigmaAdjunction(datum.Sigma, datum.R, datum.Sigma_R)

    def F(self, N: Bimodule) -> Comodule:
        K = self.Sigma.coring
        A, f = K.A, K.field
        X = tensor_over(N, self.R, self.Sigma_R, f'{N.label}⊗Σ')
        Z = tensor_over(N, self.R, tensor_over(self.Sigma_R, A, K.C))
        Y = tensor_over(X, A, K.C)
        rho = associator(Z, Y) @ tensor_map(X, Mat.identity(f, N.dim), self.Sigma.rho, Z)
        return Comodule(K, X, rho)

    def G(self, M: Comodule) -> AdjointValue:
        H = comodule_hom(self.Sigma, M)
        full = _precompose_module(H, self.Sigma_R.left_action, self.R, f'Hom({M.label})')
        span, sub, value = _saturate(full, self.R)
        return AdjointValue(M, H, span, sub, value)

    def unit(self,
        N: Bimodule,
        FN: Optional[Comodule] = None,
        GFN: Optional[AdjointValue] = None,
    ) -> Mat:
        R = self.R
        f = N.field
        fr = module_firmness(N, R)
        if fr.d is None:
            raise HypothesisError(f'{N!r} is not a firm R-module')
        FN = self.F(N) if FN is None else FN
        GFN = self.G(FN) if GFN is None else GFN
        X = FN.M
        cols = []
        for m in range(N.dim):
            for s in range(R.dim):
                h = projection(X) @ Mat.unit_column(f, N.dim, m).kron(self.Sigma_R.left_action[s])
                cols.append(GFN.span.coordinates(GFN.maps.coordinates(h)))
        Phi = Mat.from_columns(f, GFN.span.dim, cols)
        idR = Mat.identity(f, R.dim)
        dN = fr.quotient.section @ fr.d
        return projection(GFN.value) @ Phi.kron(idR) @ dN.kron(idR) @ dN

    def counit(self, M: Comodule, GM: Optional[AdjointValue] = None) -> Mat:
        GM = self.G(M) if GM is None else GM
        GS = tensor_over(GM.value, self.R, self.Sigma_R)
        return evaluation(GM.maps) @ GM.span.inclusion().kron(self.Sigma_R.lact) @ flat_section(GS)

    def G_map(self, g: Mat, GM: AdjointValue, GM2: AdjointValue) -> Mat:
        f = g.field
        cols = [GM2.span.coordinates(GM2.maps.coordinates(g @ GM.maps.matrix(v))) for v in GM.span.vectors]
        phi = Mat.from_columns(f, GM2.span.dim, cols)
        return tensor_map(GM.value, phi, Mat.identity(f, self.R.dim), GM2.value)

    def comodule_report(self, M: Comodule) -> Report:
        ''' Counit at ``M`` and the triangle ``G(counit) unit_G = id``. '''
        f = M.coring.field
        GM = self.G(M)
        zeta = self.counit(M, GM)
        items = [Report.check('counit bijective', is_iso(zeta), f'{zeta.cols} -> {zeta.rows}')]
        if module_firmness(GM.value, self.R).is_firm:
            FG = self.F(GM.value)
            GFG = self.G(FG)
            eta = self.unit(GM.value, FG, GFG)
            tri = self.G_map(zeta, GFG, GM) @ eta == Mat.identity(f, GM.value.dim)
            items.append(Report.check('triangle on G', tri))
        else:
            items.append(Report.info('triangle on G', 'G(M) is not firm, skipped'))
        return Report.group(M.label or 'comodule', items)

    def module_report(self, N: Bimodule) -> Report:
        ''' Unit at a firm ``N`` and the triangle ``counit_F F(unit) = id``. '''
        f = N.field
        FN = self.F(N)
        GFN = self.G(FN)
        eta = self.unit(N, FN, GFN)
        FGFN = self.F(GFN.value)
        F_eta = tensor_map(FN.M, eta, Mat.identity(f, self.Sigma_R.dim), FGFN.M)
        zeta = self.counit(FN, GFN)
        return Report.group(N.label or 'module', [
            Report.check('unit bijective', is_iso(eta), f'{eta.cols} -> {eta.rows}'),
            Report.check('triangle on F', zeta @ F_eta == Mat.identity(f, FN.dim)),
        ])


def _default_comodules(Sigma: Comodule) -> List[Comodule]:
    return [Sigma] + comodule_catalog(Sigma.coring)


def galois_checks(cm: ComatrixCoring,
    comodules: Optional[Sequence[Comodule]] = None,
    modules: Optional[Sequence[Bimodule]] = None,
) -> Report:
    '''
    The adjunction ``- ⊗_R Σ -| Hom^C(Σ, -) R ⊗_R R`` on catalogs, surjectivity and
    bijectivity of ``can``, and the descent direction for faithfully flat ``Σ``.
    '''
    datum = cm.datum
    K = datum.coring
    adj = SigmaAdjunction.of(datum)
    comodules = _default_comodules(datum.Sigma) if comodules is None else comodules
    modules = _firm_catalog(datum.R) if modules is None else modules
    co_items = [adj.comodule_report(M) for M in comodules]
    mod_items = [adj.module_report(N) for N in modules] if datum.R.dim else []
    counits = all(r.find('counit bijective').passed for r in co_items)  # type: ignore[union-attr]
    units = all(r.find('unit bijective').passed for r in mod_items)  # type: ignore[union-attr]
    r = rank(cm.can)
    surj = r == K.dim
    bij = is_iso(cm.can)
    items = [
        cm.report,
        catalog_report('adjunction', co_items + mod_items),
        Report.check('can surjective', surj, f'rank {r} of {K.dim}' if surj else f'can not surjective: rank {r} of {K.dim}'),
        Report.check('can bijective', bij, f'{cm.can.cols} -> {cm.can.rows}'),
        Report.check('bijective counits force a bijective can', bij or not counits),
        Report.info('converse', f'can {"is" if bij else "is not"} bijective, counits '
            f'{"all" if counits else "not all"} bijective on the catalog'),
    ]
    try:
        flat = is_faithfully_flat(datum.Sigma_R.left_only(), 'left')
        flat_ok = bool(flat)
        items.append(Report.info('Σ faithfully flat over R', f'{flat_ok}, projective {flat.projective}'))
    except (HypothesisError, AxiomViolationError) as e:
        flat_ok = False
        items.append(Report.info('Σ faithfully flat over R', f'undecided: {e}'))
    if flat_ok and bij:
        items.append(Report.check('equivalence', counits and units, 'units and counits bijective on the catalog'))
    else:
        items.append(Report.unmet('equivalence', 'needs a faithfully flat Σ and a bijective can'))
    rep = Report.group('Galois comodule', items, CATALOG_SCOPE)
    logger.info('Galois checks on %s: %s', datum.Sigma.label, rep.verdict)
    return rep


def ring_extension_adjunction(datum: GaloisDatum, modules: Optional[Sequence[Bimodule]] = None) -> Report:
    '''
    Extension of scalars along ``iota: R -> T``: for a firm ``N``, ``N ⊗_R T`` is a firm
    ``T``-module and ``(N ⊗_R T) ⊗_T Σ -> N ⊗_R Σ``, ``n ⊗ t ⊗ x -> n ⊗ t(x)`` is bijective.
    '''
    K = datum.coring
    R, T = datum.R, datum.T
    f, n = K.field, datum.Sigma.dim
    if R.dim == 0:
        return Report.unmet('extension of scalars', 'R = 0')
    Sigma_T = Bimodule(f, n, T, datum.maps.basis, K.A, datum.Sigma.M.right_action, datum.Sigma.label)
    modules = _firm_catalog(R, 3) if modules is None else modules
    items = []
    for N in modules:
        NT = extension_of_scalars(N, datum.iota, T)
        lhs = tensor_over(NT, T, Sigma_T)
        rhs = tensor_over(N, R, datum.Sigma_R)
        flat = section(NT).kron(Mat.identity(f, n)) @ section(lhs)
        m = projection(rhs) @ Mat.identity(f, N.dim).kron(Sigma_T.lact) @ flat
        items.append(Report.group(N.label or 'module', [
            Report.check('firm over T', module_firmness(NT, T).is_firm),
            Report.check('comparison bijective', is_iso(m), f'{lhs.dim} -> {rhs.dim}'),
        ]))
    return catalog_report('extension of scalars', items)


# two comodules

@dataclass(frozen=True)
class TwoComoduleContext:
    '''
    .. code-block:: python

        from corita.galois import TwoComoduleContext

    ``(End^C(Σ), End^C(Λ), Hom^C(Λ, Σ), Hom^C(Σ, Λ))`` with both connecting maps given by
    composition.
    '''

    Sigma: Comodule
    Lam: Comodule
    context: MoritaContext
    ends: Tuple[HomSpace, HomSpace]
    homs: Tuple[HomSpace, HomSpace]
    report: Report


def two_comodule_context(Sigma: Comodule, Lam: Comodule) -> TwoComoduleContext:
    f = Sigma.coring.field
    HS, HL = comodule_hom(Sigma, Sigma), comodule_hom(Lam, Lam)
    HP, HQ = comodule_hom(Lam, Sigma), comodule_hom(Sigma, Lam)
    TS = HS.endomorphism_algebra().relabel(f'End({Sigma.label})')
    TL = HL.endomorphism_algebra().relabel(f'End({Lam.label})')
    P = Bimodule(f, HP.dim,
        TS, [_coords(HP, [s @ p for p in HP.basis]) for s in HS.basis],
        TL, [_coords(HP, [p @ l for p in HP.basis]) for l in HL.basis],
        'Hom(Λ,Σ)')
    Q = Bimodule(f, HQ.dim,
        TL, [_coords(HQ, [l @ q for q in HQ.basis]) for l in HL.basis],
        TS, [_coords(HQ, [q @ s for q in HQ.basis]) for s in HS.basis],
        'Hom(Σ,Λ)')
    tau = Mat.from_columns(f, TS.dim, [HS.coordinates(p @ q) for p in HP.basis for q in HQ.basis])
    sigma = Mat.from_columns(f, TL.dim, [HL.coordinates(q @ p) for q in HQ.basis for p in HP.basis])
    ctx = MoritaContext(TS, TL, P, Q, tau, sigma, f'M({Sigma.label},{Lam.label})')
    return TwoComoduleContext(Sigma, Lam, ctx, (HS, HL), (HP, HQ), validate_context(ctx))


@dataclass(frozen=True)
class NaturalIso:
    '''
    .. code-block:: python

        from corita.galois import NaturalIso

    The reduction by ``B`` and the verdicts of ``Hom^C(Σ, M)W ⊗_W W ≅ Hom^C(Λ, M)B ⊗_B B ⊗_B Hom^C(Σ, Λ)``.
    '''

    B: IdealWitness
    reduced: Optional[ReducedContext]
    report: Report


def natural_iso_check(tc: TwoComoduleContext,
    B: Optional[IdealWitness] = None,
    catalog: Optional[Sequence[Comodule]] = None,
) -> NaturalIso:
    '''
    Both sides map into ``Hom^C(Σ, M)`` by composition. When both compositions are injective
    with the same image, ``theta`` is read off from them and checked to be a bijective
    ``W``-linear map together with its inverse.
    '''
    ctx = tc.context
    f = ctx.field
    if B is None:
        _, Apbar = image_rings(ctx)
        B = ideal(ctx.Ap, idempotent_core(Apbar).ideal.subspace, 'left')
    if B.dim == 0:
        return NaturalIso(B, None, Report.info('natural isomorphism', 'B = 0, nothing to compare'))
    rc = reduce_by_ideal(ctx, B)
    W = rc.W
    Walg, Balg = W.algebra, rc.B.algebra
    HS, HL = tc.ends
    _, HQ = tc.homs
    catalog = _default_comodules(tc.Sigma) if catalog is None else catalog
    W_acts = [HS.matrix(v) for v in W.subspace.vectors]
    B_acts = [HL.matrix(v) for v in rc.B.subspace.vectors]
    items: List[Report] = [rc.lemma]
    for M in catalog:
        HSM, HLM = comodule_hom(tc.Sigma, M), comodule_hom(tc.Lam, M)
        fullS = _precompose_module(HSM, W_acts, Walg, 'Hom(Σ,M)')
        spanS, subS, lhs = _saturate(fullS, Walg)
        fullL = _precompose_module(HLM, B_acts, Balg, 'Hom(Λ,M)')
        spanL, subL, mid = _saturate(fullL, Balg)
        rhs = tensor_over(mid, Balg, rc.Q_BW)
        phi_l = fullS.ract @ spanS.inclusion().kron(Mat.identity(f, Walg.dim)) @ section(lhs)
        comp = Mat.from_columns(f, HSM.dim, [HSM.coordinates(h @ q) for h in HLM.basis for q in HQ.basis])
        phi_r = comp @ spanL.inclusion().kron(rc.Q_BW.lact) @ flat_section(rhs)
        im_l, im_r = image(phi_l), image(phi_r)
        sub_items = [
            Report.check('composition on the W side injective', im_l.dim == lhs.dim, f'{lhs.dim} -> rank {im_l.dim}'),
            Report.check('composition on the B side injective', im_r.dim == rhs.dim, f'{rhs.dim} -> rank {im_r.dim}'),
            Report.check('same image', im_l == im_r),
        ]
        if all(r.passed for r in sub_items):
            theta = inverse(im_l.coordinate_matrix(phi_l)) @ im_l.coordinate_matrix(phi_r)
            back = inverse(theta)
            sub_items.append(ModMap(rhs, lhs, theta, 'right').validate().renamed('W-linear'))
            sub_items.append(Report.check('mutually inverse',
                theta @ back == Mat.identity(f, lhs.dim) and back @ theta == Mat.identity(f, rhs.dim)))
        items.append(Report.group(M.label or 'comodule', sub_items))
    return NaturalIso(B, rc, catalog_report('natural isomorphism', items))


# comodules over the image of sigma in *C

def dual_ring_comodule(K: Coring) -> Comodule:
    '''
    ``*C`` as a ``*C``-``C`` bicomodule: ``b -> b[0] ⊗ b[1]`` with ``b[0](c) b[1] = c(1) b(c(2))``.
    '''
    A, C = K.A, K.C
    f, dA, dC = K.field, A.dim, K.dim
    D = dual_ring_maps(K)
    Cs = dual_ring(K)
    Bmod = Bimodule(f, D.dim, Cs, Cs.left_mults, A, D.module().right_action, '*C')
    carrier = tensor_over(Bmod, A, C)
    idC = K.identity()
    E = Mat.hstack(f, dC * dC, [
        (C.lact.select_columns([a * dC + c for a in range(dA)]) @ D.basis[b]).vec()
        for b in range(D.dim) for c in range(dC)
    ]) @ section(carrier)
    targets = Mat.from_columns(f, dC * dC, [(C.ract @ idC.kron(g) @ K.lift).vec().column_vector(0) for g in D.basis])
    res = rref_solve(E, targets)
    if res.solution is None:
        raise HypothesisError('*C carries no compatible right coaction')
    return Comodule(K, Bmod, res.solution)


def right_adjoint_comparison(Sigma_W: Bimodule, X: Bimodule) -> Report:
    '''
    ``X ⊗_A Σ*W ⊗_W W -> Hom_A(Σ, X)W ⊗_W W``, ``x ⊗ xi ⊗ w -> x xi(-) ⊗ w``, for a right
    ``A``-module ``X``.
    '''
    W, A = Sigma_W.left, Sigma_W.right
    if W is None or A is None:
        raise DimensionMismatchError(f'{Sigma_W!r} is not a bimodule')
    f, dA = Sigma_W.field, A.dim
    HX = hom(Sigma_W.right_only(), X.right_only(), 'right')
    spanX, _, target = _saturate(_precompose_module(HX, Sigma_W.left_action, W, 'Hom(Σ,X)'), W)
    dual = hom(Sigma_W, regular_module(A), 'right')
    spanD, subD, SdW = _saturate(dual.module(), W)
    source = tensor_over(X, A, SdW)
    try:
        psi0 = Mat.from_columns(f, spanX.dim, [
            spanX.coordinates(HX.coordinates(X.ract.select_columns([x * dA + a for a in range(dA)]) @ dual.matrix(v)))
            for x in range(X.dim) for v in spanD.vectors
        ])
    except InvalidOperationError:
        return Report.check(X.label or 'module', False, 'x xi(-) leaves Hom(Σ,X)W')
    flat = Mat.identity(f, X.dim).kron(section(SdW)) @ section(source)
    psi = projection(target) @ psi0.kron(Mat.identity(f, W.dim)) @ flat
    return Report.check(X.label or 'module', is_iso(psi), f'{source.dim} -> {target.dim}')


def B_structure_theorem(Sigma: Comodule,
    comodules: Optional[Sequence[Comodule]] = None,
    modules: Optional[Sequence[Bimodule]] = None,
) -> Report:
    '''
    For ``B = QσΣ`` in ``*C``: the conditions under which comodules are the firm ``B``-modules
    and, when they hold, the bicomodule ``B``, the functors between ``M_B`` and ``M^C``, the
    comparison of the two contexts and the equivalence given by ``Hom^C(Σ, -)W ⊗_W W``.
    '''
    K = Sigma.coring
    A = K.A
    f, n = K.field, Sigma.dim
    sc = context_Sigma(Sigma)
    Cs = sc.context.Ap
    _, Bw = sc.images
    Balg = Bw.algebra
    C_B = restrict(comodule_as_module(regular_comodule(K)), Bw.inclusion, Balg, 'right')
    conditions = Report.group('conditions', [
        Report.check('C projective as a left A-module', bool(is_projective(K.C.left_only(), 'left'))),
        Report.check('B dense in *C', Bw.dim == Cs.dim, f'B dim {Bw.dim} of {Cs.dim}'),
        Report.check('B has right local units', bool(has_right_local_units(Balg))),
        Report.check('C firm over B', module_firmness(C_B, Balg).is_firm),
    ], 'projective for weakly locally projective, B = *C for dense')
    if not conditions.passed:
        return Report.group('structure over B', [sc.report, conditions])

    comodules = _default_comodules(Sigma) if comodules is None else comodules
    modules = _firm_catalog(Cs) if modules is None else modules
    Bcom = dual_ring_comodule(K)
    Bmod = Bcom.M
    items: List[Report] = [sc.report, conditions]
    items.append(Report.group('B-C bicomodule', [
        validate_comodule(Bcom),
        ModMap(Bmod, Bcom.carrier, Bcom.rho, 'left').validate().renamed('left B-linear'),
    ]))

    adjB = SigmaAdjunction(Bcom, Cs, Bmod)
    idC = K.identity()
    round_trips: List[Report] = []
    for N in modules:
        FN = adjB.F(N)
        natural = tensor_over(N, Cs, regular_module(Cs)).right_action
        round_trips.append(Report.group(f'module {N.label}', [
            Report.check('B-action restored', comodule_as_module(FN).right_action == natural),
            Report.check('multiplication bijective', module_firmness(N, Cs).is_firm),
        ]))
    for M in comodules:
        Mt = comodule_as_module(M).right_only()
        FM = adjB.F(Mt)
        mu = Mt.ract @ section(FM.M)
        colinear = M.rho @ mu == tensor_map(FM.carrier, mu, idC, M.carrier) @ FM.rho
        round_trips.append(Report.group(f'comodule {M.label}', [
            Report.check('multiplication bijective', is_iso(mu)),
            Report.check('multiplication colinear', colinear),
        ]))
    items.append(catalog_report('M_B and M^C', round_trips))

    Xs = comodule_as_module(Sigma)
    HBS = comodule_hom(Bcom, Sigma)
    gammas = [Mat.from_columns(f, n, [Xs.right_action[b].column_vector(y) for b in range(Cs.dim)]) for y in range(n)]
    bad = [y for y, g in enumerate(gammas) if not HBS.contains(g)]
    items.append(Report.check('gamma colinear', not bad, 'y -> (b -> y b)', bad))
    if not bad:
        Gam = _coords(HBS, gammas)
        HBSm = HBS.module().right_only()
        T1 = tensor_over(Xs.right_only(), Cs, regular_module(Cs))
        T2 = tensor_over(HBSm, Cs, regular_module(Cs))
        alpha = tensor_map(T1, Gam, Mat.identity(f, Cs.dim), T2)
        items.append(Report.group('two contexts', [
            ModMap(Xs.right_only(), HBSm, Gam, 'right').validate().renamed('gamma B-linear'),
            Report.check('alpha bijective', is_iso(alpha), f'{alpha.cols} -> {alpha.rows}'),
            Report.check('Q = Hom^C(Σ, B)', Subspace(f, Cs.dim * n,
                [B.vec().column_vector(0) for B in comodule_hom(Sigma, Bcom).basis]) == sc.Q.subspace),
        ]))

    T = sc.context.A
    im_tau = image(sc.context.tau)
    Wid = ideal(T, span_product(T, im_tau, im_tau), 'two-sided')
    Walg = Wid.algebra
    Sigma_W = Bimodule(f, n, Walg, [sc.maps.matrix(v) for v in Wid.subspace.vectors], A, Sigma.M.right_action, Sigma.label)
    adjW = SigmaAdjunction(Sigma, Walg, Sigma_W)
    g_items = [
        Report.check(M.label or 'comodule', is_iso(adjW.counit(M)), 'counit') for M in comodules
    ] + [
        Report.check(N.label or 'module', is_iso(adjW.unit(N)), 'unit') for N in _firm_catalog(Walg)
    ]
    items.append(catalog_report('Hom^C(Σ,-)W ⊗_W W', g_items))
    items.append(catalog_report('right adjoint of - ⊗_W Σ', [
        right_adjoint_comparison(Sigma_W, X) for X in default_catalog(A, 'right')
    ]))
    rep = Report.group('structure over B', items, CATALOG_SCOPE)
    logger.info('structure over B for %s: %s', Sigma.label, rep.verdict)
    return rep


# coring extensions

def equalizer_purity(N: Comodule, dD: int) -> Report:
    '''
    Whether ``N -> N ⊗_A C ⇉ N ⊗_A C ⊗_A C`` stays an equalizer after ``- ⊗ D ⊗ D``: the
    tensored coaction is injective, lands in the tensored kernel and fills it.
    '''
    K = N.coring
    A, M, f = K.A, N.M, K.field
    if N.side != 'right':
        raise InvalidOperationError('purity is checked on right comodules')
    idM, idC = Mat.identity(f, M.dim), K.identity()
    X1 = tensor_over(N.carrier, A, K.C)
    X2 = tensor_over(M, A, K.square)
    fork = associator(X1, X2) @ tensor_map(N.carrier, N.rho, idC, X1) - tensor_map(N.carrier, idM, K.delta, X2)
    idDD = Mat.identity(f, dD * dD)
    rho2, fork2 = N.rho.kron(idDD), fork.kron(idDD)
    expected = M.dim * dD * dD
    injective = rank(rho2)
    equalized = fork2 @ rho2 == Mat.zeros(f, fork2.rows, rho2.cols)
    kernel_dim = kernel(fork2).dim
    ok = injective == expected and equalized and kernel_dim == expected
    return Report.check(M.label or 'comodule', ok, f'dim {expected} after ⊗ D⊗D',
        {'injective rank': injective, 'kernel': kernel_dim, 'composite zero': equalized})


@dataclass(frozen=True)
class CoringExtension:
    '''
    .. code-block:: python

        from corita.galois import CoringExtension

    A coring ``C`` with a right coaction ``C -> C ⊗_k D`` of a coalgebra ``D`` commuting with
    the coproduct of ``C``. ``coaction`` is ``(dim C * dim D) x dim C``.
    '''

    coring: Coring
    D: Coring
    coaction: Mat

    def __post_init__(self):
        if self.D.A.dim != 1:
            raise HypothesisError('extensions are taken by a coalgebra over the base field')
        if self.coaction.shape != (self.coring.dim * self.D.dim, self.coring.dim):
            raise DimensionMismatchError(f'coaction is {self.coaction.rows}x{self.coaction.cols}')

    def validate(self, comodules: Optional[Sequence[Comodule]] = None) -> Report:
        K, Dc, rho = self.coring, self.D, self.coaction
        comodules = comodule_catalog(K) if comodules is None else comodules
        idC, idD = K.identity(), Dc.identity()
        coassoc = rho.kron(idD) @ rho == idC.kron(Dc.lift) @ rho
        counit = idC.kron(Dc.eps) @ rho == idC
        linear = all(K.C.left_action[a].kron(idD) @ rho == rho @ K.C.left_action[a] for a in range(K.A.dim))
        sq = projection(K.square).kron(idD)
        compat = sq @ K.lift.kron(idD) @ rho == sq @ idC.kron(rho) @ K.lift
        return Report.group('coring extension', [
            validate_coring(Dc).renamed('D'),
            Report.check('coassociative', coassoc),
            Report.check('counit', counit),
            Report.check('left A-linear', linear),
            Report.check('commutes with the coproduct', compat),
            Report.group('pure', [equalizer_purity(N, Dc.dim) for N in comodules], CATALOG_SCOPE),
        ], K.label)


def trivial_extension(K: Coring) -> CoringExtension:
    ''' ``C`` over the one-dimensional coalgebra, ``c -> c ⊗ 1``. '''
    f = K.field
    one = Mat.identity(f, 1)
    return CoringExtension(K, coalgebra_coring(f, one, one, 'k'), K.identity())


def hopf_extension(hopf: HopfAlgebra, K: Optional[Coring] = None) -> CoringExtension:
    ''' ``H ⊗ H`` over the coalgebra ``H``, ``h ⊗ k -> h ⊗ k(1) ⊗ k(2)``. '''
    K = hopf_module_coring(hopf) if K is None else K
    Dc = coalgebra_coring(hopf.field, hopf.delta, hopf.eps, hopf.label)
    return CoringExtension(K, Dc, Mat.identity(hopf.field, hopf.dim).kron(hopf.delta))


@dataclass(frozen=True)
class ExtensionContext:
    '''
    .. code-block:: python

        from corita.galois import ExtensionContext

    ``(Hom(D, T), ^C End^D(C)^op, Hom^D(D, Σ), Q)`` for a comodule ``Σ`` of an extension, with
    the subring of ``*C`` standing for the colinear endomorphisms and the coaction of ``D`` on ``Σ``.
    '''

    extension: CoringExtension
    Sigma: Comodule
    context: MoritaContext
    base: ComoduleContext
    U: Subspace
    coaction: Mat
    report: Report


def extension_context(ext: CoringExtension,
    Sigma: Comodule,
    comodules: Optional[Sequence[Comodule]] = None,
) -> ExtensionContext:
    '''
    ``p tau q = (d -> p(d) tau q)`` and ``q sigma p = (c -> q(p(c[1]))(c[0]))``; ``Σ`` coacts by
    ``x -> x[0] eps(x[1][0]) ⊗ x[1][1]``.
    '''
    axioms = ext.validate(comodules)
    if not axioms.passed:
        pure = axioms.find('pure')
        if pure is not None and pure.failed:
            raise AxiomViolationError('the extension is not pure on the comodule catalog', axioms)
        raise AxiomViolationError('not a coring extension', axioms)
    K, Dc = ext.coring, ext.D
    A, C = K.A, K.C
    f, n, dC, dD = K.field, Sigma.dim, K.dim, Dc.dim
    sc = context_Sigma(Sigma)
    T, Cs = sc.context.A, sc.context.Ap
    Th, Dm, Qh = sc.maps, sc.dual, sc.Q
    dT, dQ = T.dim, Qh.dim
    idC, idD, idS = K.identity(), Dc.identity(), Mat.identity(f, n)
    Dlift = Dc.lift
    rhoS = (Sigma.M.ract @ idS.kron(K.eps)).kron(idD) @ idS.kron(ext.coaction) @ Sigma.lift
    sigma_axioms = Report.group('Σ as a D-comodule', [
        Report.check('coassociative', rhoS.kron(idD) @ rhoS == idS.kron(Dlift) @ rhoS),
        Report.check('counit', idS.kron(Dc.eps) @ rhoS == idS),
    ])

    def u_of(F: Mat) -> Mat:
        return C.ract @ idC.kron(F) @ K.lift

    Uh = Dm.restrict(lambda F: ext.coaction @ u_of(F) - u_of(F).kron(idD) @ ext.coaction)
    Usub = Subspace(f, Dm.dim, [Dm.coordinates(B) for B in Uh.basis])
    U = subalgebra(Cs, Usub, 'End^D(C)')
    incU = Usub.inclusion()

    def conv(i: int) -> Mat:
        return Mat.unvec(f, Mat.unit_column(f, dT * dD, i).column_vector(0), dT, dD)

    basis = [conv(i) for i in range(dT * dD)]
    mult = [[(T.mult_map @ a.kron(b) @ Dlift).vec().column_vector(0) for b in basis] for a in basis]
    unit = None if T.unit is None else (Mat.column(f, T.unit) @ Dc.eps).vec().column_vector(0)
    E1 = Algebra(f, mult, unit, 'Hom(D,T)')

    Ph = hom(Bimodule(f, dD, label='D'), Bimodule(f, n, label='Σ'), 'k').restrict(lambda p: rhoS @ p - p.kron(idD) @ Dlift)
    evT = evaluation(Th)
    XsU = restrict(comodule_as_module(Sigma), incU, U, 'right')
    P = Bimodule(f, Ph.dim,
        E1, [_coords(Ph, [evT @ e.kron(p) @ Dlift for p in Ph.basis]) for e in basis],
        U, [_coords(Ph, [a @ p for p in Ph.basis]) for a in XsU.right_action],
        'Hom^D(D,Σ)')

    pis = [idC.kron(Mat.unit_column(f, dD, d).transpose()) @ ext.coaction for d in range(dD)]

    def star_of(vectors: Sequence[Mat]) -> Mat:
        ''' ``c -> sum_d g_d(c[0])`` where ``c[1] = e_d``, for ``g_d`` in ``*C`` coordinates. '''
        acc = Mat.zeros(f, A.dim, dC)
        for v, pi in zip(vectors, pis):
            acc = acc + Dm.matrix(v.column_vector(0)) @ pi
        return acc

    def q_times(q: Mat, e: Mat) -> Mat:
        cols = []
        for y in range(n):
            ys = [q @ Th.matrix(e.column_vector(d)) @ Mat.unit_column(f, n, y) for d in range(dD)]
            cols.append(Dm.coordinates(star_of(ys)))
        return Mat.from_columns(f, Dm.dim, cols)

    Qmod = restrict(sc.context.Q, incU, U, 'left')
    Q = Bimodule(f, dQ,
        U, Qmod.left_action,
        E1, [_coords(Qh, [q_times(q, e) for q in Qh.basis]) for e in basis],
        'Q')
    tau = Mat.from_columns(f, E1.dim, [
        (sc.context.tau @ p.kron(Mat.unit_column(f, dQ, q))).vec().column_vector(0)
        for p in Ph.basis for q in range(dQ)
    ])
    try:
        sigma = Mat.from_columns(f, U.dim, [
            Usub.coordinates(Dm.coordinates(star_of([q @ p.select_columns([d]) for d in range(dD)])))
            for q in Qh.basis for p in Ph.basis
        ])
    except InvalidOperationError as e:
        raise HypothesisError('the connecting map into *C leaves the D-colinear maps') from e
    ctx = MoritaContext(E1, U, P, Q, tau, sigma, f'extension of {Sigma.label}' if Sigma.label else 'extension')
    rep = Report.group('extension context', [
        axioms,
        sigma_axioms,
        validate_context(ctx),
        Report.info('corners', f'Hom(D,T) {E1.dim} (T {dT}), End^D {U.dim} (*C {Cs.dim}), '
            f'Hom^D(D,Σ) {P.dim} (Σ {n}), Q {dQ}'),
    ])
    logger.info('extension context of %s: %s', Sigma.label, rep.verdict)
    return ExtensionContext(ext, Sigma, ctx, sc, Usub, rhoS, rep)


def _can_N(Sigma: Comodule, T: Algebra, Th: HomSpace, N: Comodule) -> Mat:
    ''' ``Hom_A(Σ, N) ⊗_T Σ -> N ⊗_A C``, ``phi ⊗ x -> phi(x[0]) ⊗ x[1]``. '''
    K = Sigma.coring
    f = K.field
    HA = hom(Sigma.M.right_only(), N.M.right_only(), 'right')
    HAm = _precompose_module(HA, Th.basis, T, 'Hom_A(Σ,N)')
    S_T = Bimodule(f, Sigma.dim, T, Th.basis, K.A, Sigma.M.right_action, Sigma.label)
    TT = tensor_over(HAm, T, S_T)
    idC = K.identity()
    flat = Mat.hstack(f, N.dim * K.dim, [B.kron(idC) @ Sigma.lift for B in HA.basis])
    return projection(N.carrier) @ flat @ section(TT)


def _fully_faithful(Sigma: Comodule, T: Algebra, Th: HomSpace, M: Comodule, N: Comodule) -> Report:
    ''' ``Hom^C(M, N) -> Hom_T(Hom^C(Σ, M), Hom^C(Σ, N))`` by composition. '''
    f = Sigma.coring.field
    HM, HN = comodule_hom(Sigma, M), comodule_hom(Sigma, N)
    HomT = hom(_precompose_module(HM, Th.basis, T), _precompose_module(HN, Th.basis, T), 'right')
    HC = comodule_hom(M, N)
    cols = [HomT.coordinates(_coords(HN, [g @ h for h in HM.basis])) for g in HC.basis]
    Fmat = Mat.from_columns(f, HomT.dim, cols)
    return Report.check(f'{M.label or "?"} -> {N.label or "?"}', is_iso(Fmat), f'{HC.dim} -> {HomT.dim}')


def extension_checks(ec: ExtensionContext, comodules: Optional[Sequence[Comodule]] = None) -> Report:
    '''
    For the idempotent core ``R`` of the image of ``sigma``: when ``R`` is firm, projective as a
    left module over itself and ``C`` is a firm right ``R``-module, ``can_N`` is bijective and
    ``Hom^C(Σ, -)`` is fully faithful on the catalog.
    '''
    K = ec.extension.coring
    ctx = ec.context
    _, Ubar = image_rings(ctx)
    Rid = idempotent_core(Ubar).ideal
    items: List[Report] = [ec.report]
    if Rid.dim == 0:
        items.append(Report.unmet('hypotheses not satisfied', 'the image of sigma has no nonzero idempotent core'))
        return Report.group('extension', items)
    Ralg = Rid.algebra
    incR = ec.U.inclusion() @ Rid.inclusion
    C_R = restrict(comodule_as_module(regular_comodule(K)), incR, Ralg, 'right')
    hyps = Report.group('hypotheses', [
        Report.check('R firm', firmness(Ralg).is_firm),
        Report.check('R projective as a left R-module', bool(is_projective(regular_module(Ralg, 'left'), 'left'))),
        Report.check('C firm over R', module_firmness(C_R, Ralg).is_firm),
    ], 'flat read as projective')
    if not hyps.passed:
        items.append(Report.unmet('hypotheses not satisfied', ', '.join(r.name for r in hyps.failures())))
        return Report.group('extension', items)
    items.append(hyps)
    base = ec.base
    Sig = ec.Sigma
    T, Th = base.context.A, base.maps
    cat = [Sig, regular_comodule(K), zero_comodule(K)] if comodules is None else list(comodules)
    items.append(catalog_report('can_N bijective', [
        Report.check(N.label or 'comodule', is_iso(_can_N(Sig, T, Th, N))) for N in cat
    ]))
    items.append(catalog_report('Hom^C(Σ,-) fully faithful', [
        _fully_faithful(Sig, T, Th, M, N) for M in cat for N in cat
    ]))
    return Report.group('extension', items, CATALOG_SCOPE)


# coseparable corings

def cosep_strong_structure(cm: ComatrixCoring,
    witness: Optional[CosepWitness] = None,
    comodules: Optional[Sequence[Comodule]] = None,
    modules: Optional[Sequence[Bimodule]] = None,
) -> Report:
    '''
    For a coseparable coring and ``R`` a left ideal of ``End^C(Σ)``: a surjective ``can`` is
    bijective, and then ``(R, C, Σ, Σ†)`` is a Morita context over the ring ``C`` and
    ``Hom^C(Σ, -) R ⊗_R R`` is an equivalence onto the firm ``R``-modules.
    '''
    datum = cm.datum
    K = datum.coring
    A, R = K.A, datum.R
    f, n = K.field, datum.Sigma.dim
    if witness is None:
        sol = coseparability_solve(K)
        if sol.witness is None:
            return Report.group('strong structure', [
                sol.to_report(),
                Report.unmet('structure', 'the coring is not coseparable'),
            ])
        witness = sol.witness
    im = image(datum.iota)
    left_ideal = span_product(datum.T, Subspace.whole(f, datum.T.dim), im).is_subspace_of(im)
    hyps = Report.group('hypotheses', [
        witness.validate(),
        Report.check('R a left ideal of End^C(Σ)', left_ideal),
        datum.report.renamed('firmly projective'),
    ])
    if not hyps.passed:
        return Report.group('strong structure', [hyps, Report.unmet('structure', 'hypotheses not satisfied')])

    r = rank(cm.can)
    items: List[Report] = [hyps, Report.check('can surjective', r == K.dim, f'rank {r} of {K.dim}')]
    if r != K.dim:
        items.append(Report.unmet('can bijective', 'can is not surjective'))
        return Report.group('strong structure', items)
    bij = is_iso(cm.can)
    items.append(Report.check('can bijective', bij, f'{cm.can.cols} -> {cm.can.rows}'))
    if not bij:
        return Report.group('strong structure', items)

    Calg = coring_ring(witness)
    XS = cosep_action(datum.Sigma, witness)
    XQ = cosep_action(cm.dagger, witness)
    dag = cm.Sigma_dagger
    P = Bimodule(f, n, R, datum.Sigma_R.left_action, Calg, XS.right_action, 'Σ')
    Q = Bimodule(f, dag.dim, Calg, XQ.left_action, R, dag.right_action, 'Σ†')
    sigma = cm.can @ projection(cm.coring.C)
    Y = tensor_over(datum.Sigma_R, A, dag)
    u_R = flat_projection(Y) @ (section(datum.X) @ datum.j).kron(Mat.identity(f, R.dim)) @ _split(R)
    beta = projection(Y) @ Mat.identity(f, n).kron(XQ.lact) @ datum.Sigma.lift.kron(Mat.identity(f, dag.dim))
    im_u = image(u_R)
    try:
        tau = inverse(im_u.coordinate_matrix(u_R)) @ im_u.coordinate_matrix(beta)
    except InvalidOperationError:
        items.append(Report.check('cotensor with Σ† recovers R', False, f'rank {im_u.dim} of {R.dim}'))
        return Report.group('strong structure', items)
    ctx = MoritaContext(R, Calg, P, Q, tau, sigma, 'Σ over C')
    crep = validate_context(ctx)
    items.append(crep)
    if crep.passed:
        _, Cbar = image_rings(ctx)
        core = idempotent_core(Cbar).ideal
        if core.dim:
            B = ideal(Calg, core.subspace, 'left')
            items.append(kato_ohtake_verify(ctx, B).renamed('firm modules over R and C'))

    adj = SigmaAdjunction.of(datum)
    comodules = _default_comodules(datum.Sigma) if comodules is None else comodules
    modules = _firm_catalog(R, 3) if modules is None else modules
    items.append(catalog_report('fully faithful', [adj.comodule_report(M) for M in comodules]))
    items.append(catalog_report('equivalence', [adj.module_report(N) for N in modules]))
    items.append(Report.info('chain', 'surjective can, bijective can, full faithfulness and equivalence coincide'))
    rep = Report.group('strong structure', items, CATALOG_SCOPE)
    logger.info('strong structure of %s: %s', datum.Sigma.label, rep.verdict)
    return rep
