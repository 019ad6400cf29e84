from __future__ import annotations
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .report import Report


class CoritaError(Exception):
    '''
    .. code-block:: python

        from corita import CoritaError

    Corita has run into problems.
    '''


class InvalidOperationError(CoritaError, ValueError):
    '''
    .. code-block:: python

        from corita import InvalidOperationError

    Exception raised when a call is invalid for the value's current state, such as
    inverting a map that is not an isomorphism.
    '''


class DimensionMismatchError(CoritaError, ValueError):
    '''
    .. code-block:: python

        from corita import DimensionMismatchError

    Shapes of matrices, spaces or acting algebras do not fit together.
    '''


class HypothesisError(CoritaError, ValueError):
    '''
    .. code-block:: python

        from corita import HypothesisError

    A construction was called on input that does not satisfy its hypotheses, e.g. a
    ring that is not firm or a subspace that is not an ideal.
    '''


class AxiomViolationError(CoritaError, ValueError):
    '''
    .. code-block:: python

        from corita import AxiomViolationError

    A structure failed validation while being built. The failing report is kept in
    ``report``.
    '''

    report: Optional[Report]

    def __init__(self, message: str, report: Optional[Report] = None):
        super().__init__(message)
        self.report = report


class SchemaError(CoritaError, ValueError):
    '''
    .. code-block:: python

        from corita import SchemaError

    A JSON document does not describe the structure it claims to.
    '''
