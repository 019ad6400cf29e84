'''
Built-in examples. Each one constructs its structures from code over a given field and runs
the full suite of checks that applies to it.
'''
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List

from .algebra import (
    idempotent_core,
    ideal,
    ideal_powers,
    product_algebra,
    upper_triangular,
    upper_triangular_index,
)
from .coring import (
    coring_from_firm_ideal,
    cosep_category_iso,
    coseparability_solve,
    firm_ideal_adjunction,
    firm_ideal_from_coring,
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
    validate_coring,
)
from .corita_error import CoritaError, HypothesisError
from .exactlin import QQ, Field
from .galois import (
    B_structure_theorem,
    comatrix,
    construct_R,
    cosep_strong_structure,
    galois_checks,
)
from .morita import (
    MoritaContext,
    image_rings,
    kato_ohtake_verify,
    matrix_context,
    omegabeta_check,
    projection_context,
    reduction_conditions,
    strictness_report,
    validate_context,
)
from .report import Report, timed


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Builtin:
    '''
    .. code-block:: python

        from corita.catalog import Builtin

    A named example and the function running its suite over a field.
    '''

    name: str
    summary: str
    run: Callable[[Field], Report]


def _guard(name: str, fn: Callable[[], Report]) -> Report:
    try:
        return fn()
    except HypothesisError as e:
        return Report.unmet(name, str(e))


def _context_suite(ctx: MoritaContext) -> Report:
    _, Apbar = image_rings(ctx)
    B = ideal(ctx.Ap, idempotent_core(Apbar).ideal.subspace, 'left')
    strict = strictness_report(ctx)
    missing = ', '.join(r.name for r in strict.failures())
    return Report.group(ctx.label, [
        validate_context(ctx),
        Report.info('strict', 'yes' if strict.passed else f'no: {missing}'),
        reduction_conditions(ctx),
        omegabeta_check(ctx),
        _guard('Kato-Ohtake', lambda: kato_ohtake_verify(ctx, B)),
    ])


def _trivial_coring(field: Field) -> Report:
    K = trivial_coring(product_algebra(2, field))
    S = regular_comodule(K)
    sol = coseparability_solve(K)
    items = [validate_coring(K), sol.to_report()]
    if sol.witness is not None:
        items.append(cosep_category_iso(sol.witness))
    cm = comatrix(construct_R(S))
    items.append(galois_checks(cm))
    items.append(B_structure_theorem(S))
    return Report.group('trivial-coring', items)


def _projection_context(field: Field) -> Report:
    return _context_suite(projection_context(field))


def _matrix_context(field: Field) -> Report:
    return _context_suite(matrix_context(2, field))


def _triangular_core(field: Field) -> Report:
    UT3 = upper_triangular(3, field)
    strict = [UT3.basis_vector(upper_triangular_index(3, i, j)) for i, j in ((0, 1), (0, 2), (1, 2))]
    I = ideal(UT3, strict)
    core = idempotent_core(I)
    powers = [s.dim for s in ideal_powers(I)]
    chain = [s.dim for s in core.chain]
    return Report.group('triangular-core', [
        Report.check('core is zero', core.ideal.dim == 0, f'dim {core.ideal.dim}'),
        Report.check('three iterations', core.steps == 3, f'{core.steps} steps'),
        Report.check('agrees with the powers', chain == powers, f'chain {chain}, powers {powers}', powers),
    ])


def _sweedler(field: Field) -> Report:
    sw = sweedler_coring(*split_kxk(field))
    S = sweedler_descent_comodule(sw)
    datum = construct_R(S)
    cm = comatrix(datum)
    return Report.group('sweedler-kxk', [
        validate_coring(sw.coring),
        sw.witness.validate(),
        validate_comodule(S),
        Report.check('End^C(A) is one-dimensional', datum.T.dim == 1, f'dim {datum.T.dim}'),
        cosep_category_iso(sw.witness),
        cosep_strong_structure(cm, sw.witness),
    ])


def _separable(field: Field) -> Report:
    S = matrix_comodule(2, field)
    cm = comatrix(construct_R(S))
    return Report.group('separable-bimodule', [
        validate_comodule(S),
        coseparability_solve(S.coring).to_report(),
        galois_checks(cm),
        cosep_strong_structure(cm),
    ])


def _hopf(n: int, strong: bool) -> Callable[[Field], Report]:
    def run(field: Field) -> Report:
        hopf = group_hopf_algebra(n, field)
        K = hopf_module_coring(hopf)
        S = hopf_module_comodule(hopf, K)
        cat = hopf_module_catalog(hopf, K)
        cm = comatrix(construct_R(S))
        items = [hopf.validate(), validate_coring(K), validate_comodule(S), galois_checks(cm, cat)]
        if strong:
            items.append(cosep_strong_structure(cm, comodules=cat))
        return Report.group(f'hopf-z{n}', items)
    return run


def _firm_ideal_coring(field: Field) -> Report:
    I = ideal(product_algebra(2, field), [(1, 0)], 'two-sided')
    K = coring_from_firm_ideal(I)
    data = firm_ideal_from_coring(K)
    return Report.group('firm-ideal-coring', [
        validate_coring(K),
        Report.check('counit is the inclusion', K.eps == I.inclusion),
        Report.check('ideal recovered', data.ideal.subspace == I.subspace),
        firm_ideal_adjunction(I),
    ])


BUILTINS: Dict[str, Builtin] = {b.name: b for b in (
    Builtin('trivial-coring', 'A = k x k as a coring over itself, Σ = A', _trivial_coring),
    Builtin('projection-context', 'k and k x k joined through the first factor', _projection_context),
    Builtin('matrix-context', 'k and M_2 joined by rows and columns', _matrix_context),
    Builtin('triangular-core', 'strictly upper triangular ideal of 3x3 triangular matrices', _triangular_core),
    Builtin('sweedler-kxk', 'descent along k -> k x k', _sweedler),
    Builtin('separable-bimodule', 'k^2 over the dual of M_2', _separable),
    Builtin('hopf-z2', 'Hopf modules over k[Z/2]', _hopf(2, True)),
    Builtin('hopf-z3', 'Hopf modules over k[Z/3]', _hopf(3, False)),
    Builtin('firm-ideal-coring', 'k x 0 in k x k as a coring', _firm_ideal_coring),
)}


def builtin_names() -> List[str]:
    return list(BUILTINS)


def run_builtin(name: str, field: Field = QQ) -> Report:
    '''
    Runs one example; raises ``KeyError`` for an unknown name. Errors of the engine on a
    field where the example degenerates come back as ``hypotheses-unmet``.
    '''
    b = BUILTINS[name]
    logger.info('running %s over %s', name, field.describe())

    def go() -> Report:
        try:
            return b.run(field)
        except CoritaError as e:
            return Report.unmet(name, f'{type(e).__name__}: {e}')
    return timed(name, go)


def run_all(field: Field = QQ) -> Report:
    return Report.group('examples', [run_builtin(name, field) for name in BUILTINS])
