from __future__ import annotations
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from .more_typing import Verdict


CATALOG_SCOPE = 'certified on the supplied finite catalog, not for all modules'


def _combine(verdicts: Iterable[Verdict]) -> Verdict:
    seen = set(verdicts)
    if 'fail' in seen:
        return 'fail'
    if 'hypotheses-unmet' in seen:
        return 'hypotheses-unmet'
    return 'pass'


@dataclass(frozen=True)
class Report:
    '''
    .. code-block:: python

        from corita.report import Report

    Structured verdict of a check. Reports nest: the verdict of a group is computed from
    its children, where any ``fail`` wins over ``hypotheses-unmet``, and ``info`` children
    never change it.
    '''

    name: str
    verdict: Verdict
    detail: str = ''
    witness: Any = None
    items: Tuple[Report, ...] = ()
    elapsed: float = field(default=0.0, compare=False)

    @staticmethod
    def check(name: str,
        ok: bool,
        detail: str = '',
        witness: Any = None,
    ) -> Report:
        return Report(name, 'pass' if ok else 'fail', detail, None if ok else witness)

    @staticmethod
    def info(name: str, detail: str = '', witness: Any = None) -> Report:
        return Report(name, 'info', detail, witness)

    @staticmethod
    def unmet(name: str, detail: str) -> Report:
        return Report(name, 'hypotheses-unmet', detail)

    @staticmethod
    def group(name: str,
        items: Iterable[Report],
        detail: str = '',
        witness: Any = None,
    ) -> Report:
        children = tuple(items)
        verdict = _combine(c.verdict for c in children if c.verdict != 'info')
        return Report(name, verdict, detail, witness, children)

    @property
    def passed(self) -> bool:
        return self.verdict == 'pass'

    @property
    def failed(self) -> bool:
        return self.verdict == 'fail'

    def renamed(self, name: str) -> Report:
        return Report(name, self.verdict, self.detail, self.witness, self.items, self.elapsed)

    def with_elapsed(self, seconds: float) -> Report:
        return Report(self.name, self.verdict, self.detail, self.witness, self.items, seconds)

    def find(self, name: str) -> Optional[Report]:
        '''
        First report in the tree (depth first, self included) with the given name.
        '''
        for r in self.walk():
            if r.name == name:
                return r
        return None

    def walk(self) -> Iterator[Report]:
        yield self
        for c in self.items:
            yield from c.walk()

    def failures(self) -> List[Report]:
        return [r for r in self.walk() if r.verdict == 'fail' and not r.items]

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {'name': self.name, 'verdict': self.verdict}
        if self.detail:
            out['detail'] = self.detail
        if self.witness is not None:
            out['witness'] = _jsonable(self.witness)
        if self.items:
            out['items'] = [c.to_json() for c in self.items]
        return out

    def dumps(self, pretty: bool = False) -> str:
        return json.dumps(self.to_json(), indent=2 if pretty else None, ensure_ascii=False)

    def render(self, indent: int = 0) -> str:
        mark = {'pass': 'ok', 'fail': 'FAIL', 'hypotheses-unmet': 'unmet', 'info': '--'}[self.verdict]
        line = f'{"  " * indent}[{mark}] {self.name}'
        if self.detail:
            line += f': {self.detail}'
        if self.elapsed:
            line += f' ({self.elapsed:.3f}s)'
        lines = [line]
        if self.verdict == 'fail' and self.witness is not None and not self.items:
            lines.append(f'{"  " * (indent + 2)}witness: {json.dumps(_jsonable(self.witness))}')
        lines.extend(c.render(indent + 1) for c in self.items)
        return '\n'.join(lines)


def _jsonable(value: Any) -> Any:
    if hasattr(value, 'to_json'):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, Fraction):
        return f'{value.numerator}/{value.denominator}'
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    return str(value)


def timed(name: str, fn: Callable[[], Report]) -> Report:
    '''
    Runs ``fn`` and stamps the wall time on its report, renamed to ``name``.
    '''
    start = time.perf_counter()
    r = fn()
    return r.renamed(name).with_elapsed(time.perf_counter() - start)
