'''
The ``corita`` command line: loads structures from JSON files, runs named checks and prints
a human report on standard output, optionally writing the machine report as JSON.

Exit codes: ``0`` when nothing failed, ``1`` when a check failed or an ``--expect``ed property
does not hold, ``2`` on unreadable input and usage errors.
'''
from __future__ import annotations
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .algebra import (
    IdealWitness,
    firm_square,
    firmness,
    has_right_local_units,
    ideal,
    idempotent_core,
    is_idempotent,
    validate,
)
from .bimodule import (
    catalog_report,
    is_faithfully_flat,
    is_projective,
    module_firmness,
    validate_module,
)
from .catalog import BUILTINS, builtin_names, run_all, run_builtin
from .coring import (
    Comodule,
    comodule_catalog,
    cosep_category_iso,
    coseparability_solve,
    dual_ring,
    validate_comodule,
    validate_coring,
)
from .corita_error import AxiomViolationError, CoritaError, DimensionMismatchError, HypothesisError, SchemaError
from .exactlin import Field, Subspace, is_iso, kernel
from .galois import (
    B_structure_theorem,
    comatrix,
    construct_R,
    extension_checks,
    extension_context,
    galois_checks,
    natural_iso_check,
    ring_extension_adjunction,
    trivial_extension,
    two_comodule_context,
)
from .morita import (
    MoritaContext,
    image_rings,
    kato_ohtake_verify,
    omegabeta_check,
    reduce_by_ideal,
    reduction_conditions,
    strictness_report,
    validate_context,
)
from .report import Report
from .schema import KINDS, Workspace, read_workspace, skeleton


logger = logging.getLogger(__name__)

Properties = Dict[str, bool]
Outcome = Tuple[Report, Properties]
Command = Callable[[Workspace, argparse.Namespace], Outcome]


class UsageError(CoritaError):
    pass


def _properties(props: Properties, details: Optional[Dict[str, str]] = None) -> Report:
    details = details or {}
    items = []
    for key, value in props.items():
        text = 'yes' if value else 'no'
        if key in details:
            text += f', {details[key]}'
        items.append(Report.info(key, text))
    return Report.group('properties', items)


def _comodules(ws: Workspace, args: argparse.Namespace) -> Optional[List[Comodule]]:
    return ws.comodule_catalog(args.catalog) if args.catalog else None


def check_ring(ws: Workspace, args: argparse.Namespace) -> Outcome:
    A = ws.algebra(args.name)
    idem = is_idempotent(A)
    fr = firmness(A)
    lu = has_right_local_units(A)
    core = idempotent_core(ideal(A, Subspace.whole(A.field, A.dim)))
    props = {
        'unital': A.is_unital,
        'idempotent': bool(idem),
        'firm': fr.is_firm,
        'local-units': bool(lu),
    }
    items = [
        validate(A),
        _properties(props, {'idempotent': f'A^2 of dim {idem.square.dim} in {A.dim}'}),
        Report.info('multiplication', f'A ⊗_A A of dim {fr.quotient.dim} onto A^2, rank {fr.image.dim}'),
        Report.info('idempotent core', f'dim {core.ideal.dim} after {core.steps} steps', [s.dim for s in core.chain]),
    ]
    if idem and not fr.is_firm:
        items.append(Report.info('firm square', f'A ⊗_A A of dim {firm_square(A).dim}'))
    return Report.group(A.label or 'ring', items), props


def check_module(ws: Workspace, args: argparse.Namespace) -> Outcome:
    M = ws.module(args.name)
    items = [validate_module(M)]
    props: Properties = {}
    for side, R in (('left', M.left), ('right', M.right)):
        if R is None:
            continue
        fr = module_firmness(M, R, side)
        props[f'firm-{side}'] = fr.is_firm
        items.append(Report.info(f'firm as a {side} module', f'mu of rank {fr.image.dim} from dim {fr.quotient.dim}'))
        proj = is_projective(M, side)
        props[f'projective-{side}'] = bool(proj)
        note = ' over the Dorroh extension' if proj.over_dorroh else ''
        items.append(Report.info(f'projective as a {side} module', ('yes' if proj else 'no') + note))
        try:
            flat = is_faithfully_flat(M, side)
        except HypothesisError as e:
            items.append(Report.unmet(f'faithfully flat as a {side} module', str(e)))
        else:
            props[f'faithfully-flat-{side}'] = bool(flat)
            items.append(Report.info(f'faithfully flat as a {side} module',
                'yes' if flat else f'no, trace ideal of dim {flat.trace.dim}'))
    items.insert(1, _properties(props))
    return Report.group(M.label or 'module', items), props


def _strict_props(ctx: MoritaContext) -> Properties:
    strict = strictness_report(ctx)
    props = {'strict': strict.passed}
    for r in strict.items:
        props[r.name.replace(' ', '-')] = r.passed
    return props


def check_context(ws: Workspace, args: argparse.Namespace) -> Outcome:
    ctx = ws.context(args.name)
    props = _strict_props(ctx)
    catalog = ws.module_catalog(args.catalog) if args.catalog else None
    rep = Report.group(ctx.label or 'context', [
        validate_context(ctx),
        _properties(props),
        reduction_conditions(ctx),
        omegabeta_check(ctx, catalog),
    ])
    return rep, props


def _reducing_ideal(ws: Workspace, ctx: MoritaContext, choice: str) -> IdealWitness:
    if choice == 'auto':
        _, Apbar = image_rings(ctx)
        core = idempotent_core(Apbar)
        logger.info('idempotent core of dim %d after %d steps', core.ideal.dim, core.steps)
        return ideal(ctx.Ap, core.ideal.subspace, 'left')
    try:
        S = Subspace(ctx.field, ctx.Ap.dim, ws.ideal(choice))
    except DimensionMismatchError as e:
        raise SchemaError(f'ideal {choice}: {e}') from e
    if S.ambient != ctx.Ap.dim:
        raise SchemaError(f'ideal {choice} lives in k^{S.ambient}, the second ring has dim {ctx.Ap.dim}')
    # closure is checked inside Q sigma P by the reduction
    return IdealWitness(ctx.Ap, S, 'left')


def reduce_context(ws: Workspace, args: argparse.Namespace) -> Outcome:
    ctx = ws.context(args.name)
    B = _reducing_ideal(ws, ctx, args.ideal)
    rc = reduce_by_ideal(ctx, B)
    props = {f'reduced-{k}': v for k, v in _strict_props(rc.context).items()}
    rep = Report.group('reduction', [
        reduction_conditions(ctx, B),
        rc.lemma,
        validate_context(rc.context),
        _properties(props),
        Report.info('reduced context', f'W of dim {rc.W.dim}, B of dim {B.dim}', rc.context.to_json()),
    ])
    return rep, props


def kato_ohtake(ws: Workspace, args: argparse.Namespace) -> Outcome:
    ctx = ws.context(args.name)
    B = _reducing_ideal(ws, ctx, args.ideal)
    catalog = ws.module_catalog(args.catalog) if args.catalog else None
    rep = kato_ohtake_verify(ctx, B, catalog_W=catalog)
    return rep, {'equivalence': rep.passed}


def check_coring(ws: Workspace, args: argparse.Namespace) -> Outcome:
    K = ws.coring(args.name)
    comodules = _comodules(ws, args) or comodule_catalog(K)
    sol = coseparability_solve(K)
    props = {'coseparable': bool(sol), 'counit-injective': kernel(K.eps).dim == 0}
    items = [
        validate_coring(K),
        _properties(props),
        catalog_report('comodules', [validate_comodule(N).renamed(N.label or f'comodule {i}')
            for i, N in enumerate(comodules)]),
    ]
    try:
        items.append(Report.info('*C', f'dim {dual_ring(K).dim}'))
    except HypothesisError as e:
        items.append(Report.unmet('*C', str(e)))
    return Report.group(K.label or 'coring', items), props


def coseparable(ws: Workspace, args: argparse.Namespace) -> Outcome:
    K = ws.coring(args.name)
    sol = coseparability_solve(K)
    items = [sol.to_report()]
    if sol.witness is not None:
        items.append(cosep_category_iso(sol.witness, _comodules(ws, args)))
    return Report.group(K.label or 'coring', items), {'coseparable': bool(sol)}


def galois(ws: Workspace, args: argparse.Namespace) -> Outcome:
    Sigma = ws.comodule(args.name)
    datum = construct_R(Sigma)
    props = {'firmly-projective': datum.report.passed}
    items = [datum.report]
    if datum.j is None:
        items.append(Report.unmet('comatrix coring', 'Σ has no dual basis over R'))
        props['galois'] = False
    else:
        cm = comatrix(datum)
        items.append(galois_checks(cm, _comodules(ws, args)))
        items.append(ring_extension_adjunction(datum))
        props['galois'] = is_iso(cm.can)
    if args.other:
        ni = natural_iso_check(two_comodule_context(Sigma, ws.comodule(args.other)))
        props['natural-iso'] = ni.report.passed
        items.append(ni.report)
    items.insert(0, _properties(props))
    return Report.group(Sigma.label or 'Σ', items), props


def b_structure(ws: Workspace, args: argparse.Namespace) -> Outcome:
    rep = B_structure_theorem(ws.comodule(args.name), _comodules(ws, args))
    conditions = rep.find('conditions')
    return rep, {'conditions': conditions is not None and conditions.passed}


def extension(ws: Workspace, args: argparse.Namespace) -> Outcome:
    Sigma = ws.comodule(args.name)
    if args.extension:
        ext = ws.extension(args.extension)
    elif ws.extensions:
        ext = ws.extension()
    else:
        ext = trivial_extension(Sigma.coring)
    if ext.coring is not Sigma.coring:
        raise SchemaError('the extension is over another coring than the comodule')
    rep = extension_checks(extension_context(ext, Sigma), _comodules(ws, args))
    hyp = rep.find('hypotheses')
    return rep, {'hypotheses': hyp is not None and hyp.passed, 'equivalence': rep.passed}


COMMANDS: Dict[str, Tuple[Command, str]] = {
    'check-ring': (check_ring, 'validate an algebra and decide idempotent, firm, local units'),
    'check-module': (check_module, 'validate a module and decide firm, projective, faithfully flat'),
    'check-context': (check_context, 'validate a Morita context and its strictness'),
    'reduce-context': (reduce_context, 'reduce a context by an idempotent left ideal'),
    'kato-ohtake': (kato_ohtake, 'firm modules over the images of the connecting maps'),
    'check-coring': (check_coring, 'validate a coring and its comodules'),
    'coseparable': (coseparable, 'solve for a cointegral'),
    'galois': (galois, 'comatrix coring, can and the comodule adjunction'),
    'b-structure': (b_structure, 'the structure theorem over B'),
    'extension': (extension, 'a comodule over a coring extension'),
}


def _emit(report: Report, props: Properties, args: argparse.Namespace) -> int:
    if args.json == '-':
        print(report.dumps(args.pretty))
    else:
        print(report.render())
        if args.json:
            Path(args.json).write_text(report.dumps(args.pretty) + '\n', encoding='utf-8')
            logger.info('wrote %s', args.json)
    for p in args.expect or ():
        if p not in props:
            print(f'corita: unknown property {p!r}; one of {", ".join(props) or "none"}', file=sys.stderr)
            return 2
        if not props[p]:
            print(f'corita: expected {p}, it does not hold', file=sys.stderr)
            return 1
    return 1 if report.failed else 0


def _run_command(fn: Command) -> Callable[[argparse.Namespace], int]:
    def handler(args: argparse.Namespace) -> int:
        ws = read_workspace(args.file)
        report, props = fn(ws, args)
        return _emit(report, props, args)
    return handler


def _field(value: str) -> Field:
    try:
        return Field(int(value))
    except (ValueError, HypothesisError) as e:
        raise argparse.ArgumentTypeError(f'not 0 or a prime: {value}') from e


def _examples(args: argparse.Namespace) -> int:
    if args.action == 'list':
        if args.target:
            raise UsageError('examples list takes no name')
        for name in builtin_names():
            if args.verbose:
                print(f'{name:20} {BUILTINS[name].summary}')
            else:
                print(name)
        return 0
    if not args.target:
        raise UsageError(f'examples run needs a name: all, {", ".join(builtin_names())}')
    if args.target == 'all':
        report = run_all(args.field)
    elif args.target in BUILTINS:
        report = run_builtin(args.target, args.field)
    else:
        raise UsageError(f'unknown example {args.target!r}; one of {", ".join(builtin_names())}')
    return _emit(report, {'pass': report.passed}, args)


def _schema(args: argparse.Namespace) -> int:
    print(json.dumps(skeleton(args.kind), indent=2, ensure_ascii=False))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0, help='more logging, repeatable')
    common.add_argument('-q', '--quiet', action='store_true', help='log errors only')

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument('--json', metavar='PATH', help="write the machine report; '-' prints it instead")
    output.add_argument('--pretty', action='store_true', help='indent the machine report')
    output.add_argument('--expect', metavar='PROPERTY', action='append', help='exit 1 unless the property holds')

    files = argparse.ArgumentParser(add_help=False)
    files.add_argument('--file', required=True, help='workspace JSON file')
    files.add_argument('--name', help='structure to check, needed when the file holds several')
    files.add_argument('--catalog', help='named catalog of the workspace to check against')

    parser = argparse.ArgumentParser(prog='corita',
        description='Checks firm rings, Morita contexts, corings and comodules.')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')

    for name, (fn, text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common, output, files], help=text, description=text)
        if name in ('reduce-context', 'kato-ohtake'):
            p.add_argument('--ideal', default='auto', help="'auto' for the idempotent core, or a named ideal")
        if name == 'galois':
            p.add_argument('--other', metavar='NAME', help='second comodule Λ for the context of Hom^C(Σ, Λ)')
        if name == 'extension':
            p.add_argument('--extension', help='named extension; the trivial one when the file has none')
        p.set_defaults(handler=_run_command(fn))

    ex = sub.add_parser('examples', parents=[common, output], help='list or run the builtin examples')
    ex.add_argument('action', choices=('list', 'run'))
    ex.add_argument('target', nargs='?', help="example name, or 'all'")
    ex.add_argument('--field', type=_field, default=Field(0), help='0 for the rationals, or a prime')
    ex.set_defaults(handler=_examples)

    sc = sub.add_parser('schema', parents=[common], help='print a skeleton JSON document')
    sc.add_argument('kind', choices=KINDS)
    sc.set_defaults(handler=_schema)
    return parser


def _configure_logging(verbose: int, quiet: bool) -> None:
    if quiet:
        level = logging.ERROR
    else:
        level = (logging.WARNING, logging.INFO)[verbose] if verbose < 2 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')
    logging.getLogger('corita').setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    _configure_logging(args.verbose, args.quiet)
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2
    try:
        return args.handler(args)
    except (SchemaError, UsageError) as e:
        print(f'corita: {e}', file=sys.stderr)
        return 2
    except AxiomViolationError as e:
        print(f'corita: {e}', file=sys.stderr)
        if e.report is not None:
            print(e.report.render())
        return 1
    except CoritaError as e:
        print(f'corita: {type(e).__name__}: {e}', file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
