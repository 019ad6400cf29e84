'''
JSON input: a workspace of named structures that refer to each other by name, and skeletons
of every input kind.

A workspace file is an object with any of the sections ``algebras``, ``modules``,
``contexts``, ``corings``, ``comodules``, ``extensions``, ``ideals``, ``catalogs``. Modules and
corings name their algebras; comodules name their coring under ``coring``; an extension names
two corings and gives the coaction; an ideal is a list of vectors; catalogs list module or
comodule names. A file holding a single bare structure is read as a workspace with that structure
under the name ``main``.
'''
from __future__ import annotations
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

from .algebra import Algebra, field_algebra, validate
from .bimodule import Bimodule, regular_module, validate_module
from .coring import Comodule, Coring, regular_comodule, trivial_coring, validate_comodule, validate_coring
from .corita_error import AxiomViolationError, DimensionMismatchError, HypothesisError, SchemaError
from .exactlin import Mat
from .galois import CoringExtension
from .morita import MoritaContext, projection_context, validate_context
from .report import Report


logger = logging.getLogger(__name__)

SECTIONS = ('algebras', 'modules', 'contexts', 'corings', 'comodules', 'extensions', 'ideals', 'catalogs')
KINDS = ('algebra', 'bimodule', 'context', 'coring', 'comodule', 'workspace')


@dataclass
class Workspace:
    '''
    .. code-block:: python

        from corita.schema import Workspace

    Named structures read from one JSON document. Every structure is validated when it is
    loaded.
    '''

    algebras: Dict[str, Algebra] = field(default_factory=dict)
    modules: Dict[str, Bimodule] = field(default_factory=dict)
    contexts: Dict[str, MoritaContext] = field(default_factory=dict)
    corings: Dict[str, Coring] = field(default_factory=dict)
    comodules: Dict[str, Comodule] = field(default_factory=dict)
    extensions: Dict[str, CoringExtension] = field(default_factory=dict)
    ideals: Dict[str, List[List[Any]]] = field(default_factory=dict)
    catalogs: Dict[str, List[str]] = field(default_factory=dict)

    def _pick(self, section: str, name: Optional[str]) -> Any:
        items: Dict[str, Any] = getattr(self, section)
        if name is not None:
            if name not in items:
                raise SchemaError(f'no {section[:-1]} named {name!r}')
            return items[name]
        if len(items) != 1:
            raise SchemaError(f'name one of the {len(items)} {section} ({", ".join(items) or "none"})')
        return next(iter(items.values()))

    def algebra(self, name: Optional[str] = None) -> Algebra:
        return self._pick('algebras', name)

    def module(self, name: Optional[str] = None) -> Bimodule:
        return self._pick('modules', name)

    def context(self, name: Optional[str] = None) -> MoritaContext:
        return self._pick('contexts', name)

    def coring(self, name: Optional[str] = None) -> Coring:
        return self._pick('corings', name)

    def comodule(self, name: Optional[str] = None) -> Comodule:
        return self._pick('comodules', name)

    def extension(self, name: Optional[str] = None) -> CoringExtension:
        return self._pick('extensions', name)

    def ideal(self, name: str) -> List[List[Any]]:
        return self._pick('ideals', name)

    def module_catalog(self, name: str) -> List[Bimodule]:
        return [self.module(n) for n in self._catalog(name)]

    def comodule_catalog(self, name: str) -> List[Comodule]:
        return [self.comodule(n) for n in self._catalog(name)]

    def _catalog(self, name: str) -> List[str]:
        if name not in self.catalogs:
            raise SchemaError(f'no catalog named {name!r}')
        return self.catalogs[name]


def _checked(what: str, rep: Report) -> None:
    if rep.failed:
        raise AxiomViolationError(f'{what} fails validation', rep)


def _section(data: Mapping[str, Any], key: str) -> Mapping[str, Any]:
    value = data.get(key, {})
    if not isinstance(value, Mapping):
        raise SchemaError(f'section {key!r} must be an object')
    return value


def _bare_kind(data: Mapping[str, Any]) -> str:
    if 'kind' in data:
        kind = data['kind']
        if kind not in KINDS:
            raise SchemaError(f'unknown kind {kind!r}')
        return kind
    if any(k in data for k in SECTIONS):
        return 'workspace'
    if 'wt' in data:
        return 'context'
    if 'delta' in data:
        return 'coring'
    if 'rho' in data:
        return 'comodule'
    if 'mult' in data:
        return 'algebra'
    if 'dim' in data:
        return 'bimodule'
    raise SchemaError('cannot tell what structure the document holds')


def load_workspace(data: Any) -> Workspace:
    ''' Reads and validates a workspace document, or a bare structure as ``main``. '''
    if not isinstance(data, Mapping):
        raise SchemaError('a workspace is a JSON object')
    kind = _bare_kind(data)
    if kind == 'comodule':
        raise SchemaError('a bare comodule needs its coring; use a workspace')
    if kind != 'workspace':
        section = {'algebra': 'algebras', 'bimodule': 'modules', 'context': 'contexts', 'coring': 'corings'}[kind]
        data = {section: {'main': data}}
    ws = Workspace()
    for name, a in _section(data, 'algebras').items():
        A = Algebra.from_json(a)
        _checked(f'algebra {name}', validate(A))
        ws.algebras[name] = A.relabel(A.label or name)
    for name, m in _section(data, 'modules').items():
        M = Bimodule.from_json(m, ws.algebras)
        _checked(f'module {name}', validate_module(M))
        ws.modules[name] = M.relabel(M.label or name)
    for name, c in _section(data, 'contexts').items():
        ctx = MoritaContext.from_json(c)
        _checked(f'context {name}', validate_context(ctx))
        ws.contexts[name] = ctx
    for name, k in _section(data, 'corings').items():
        K = Coring.from_json(k, ws.algebras)
        _checked(f'coring {name}', validate_coring(K))
        ws.corings[name] = K
    for name, n in _section(data, 'comodules').items():
        if not isinstance(n, Mapping) or 'coring' not in n:
            raise SchemaError(f'comodule {name} must name its coring')
        K = ws.coring(str(n['coring']))
        N = Comodule.from_json(K, n, ws.algebras)
        _checked(f'comodule {name}', validate_comodule(N))
        ws.comodules[name] = N.relabel(N.label or name)
    for name, e in _section(data, 'extensions').items():
        try:
            K, D = ws.coring(str(e['coring'])), ws.coring(str(e['D']))
            ext = CoringExtension(K, D, Mat.from_json(K.field, e['coaction']))
        except KeyError as err:
            raise SchemaError(f'extension {name} is missing {err}') from err
        except (DimensionMismatchError, HypothesisError) as err:
            raise SchemaError(f'extension {name}: {err}') from err
        _checked(f'extension {name}', ext.validate())
        ws.extensions[name] = ext
    for name, vectors in _section(data, 'ideals').items():
        if not isinstance(vectors, list) or not all(isinstance(v, list) for v in vectors):
            raise SchemaError(f'ideal {name} must list vectors')
        ws.ideals[name] = [list(v) for v in vectors]
    for name, members in _section(data, 'catalogs').items():
        if not isinstance(members, list) or not all(isinstance(x, str) for x in members):
            raise SchemaError(f'catalog {name} must list structure names')
        ws.catalogs[name] = list(members)
    logger.debug('workspace: %s', ', '.join(f'{len(getattr(ws, s))} {s}' for s in SECTIONS))
    return ws


def read_workspace(path: Union[str, Path]) -> Workspace:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise SchemaError(f'cannot read {path}: {e}') from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f'{path} is not JSON: {e}') from e
    return load_workspace(data)


def skeleton(kind: str) -> Dict[str, Any]:
    '''
    A small valid document of the given kind, built from the corresponding structure.
    '''
    k = field_algebra()
    K = trivial_coring(k)
    if kind == 'algebra':
        return k.to_json()
    if kind == 'bimodule':
        return regular_module(k, 'right').to_json()
    if kind == 'context':
        return projection_context().to_json()
    if kind == 'coring':
        return K.to_json()
    if kind == 'comodule':
        N = regular_comodule(K).to_json()
        N['coring'] = 'K'
        return N
    if kind == 'workspace':
        N = regular_comodule(K).to_json()
        N['coring'] = 'K'
        C = K.to_json()
        C['algebra'] = 'k'
        return {
            'algebras': {'k': k.to_json()},
            'modules': {'M': {**skeleton('bimodule'), 'right': 'k'}},
            'corings': {'K': C},
            'comodules': {'Σ': N},
            'catalogs': {'small': ['M']},
        }
    raise SchemaError(f'unknown kind {kind!r}; one of {", ".join(KINDS)}')
