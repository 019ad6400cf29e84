from .algebra import Algebra, IdealWitness, firm_square, firmness, idempotent_core, ideal, is_idempotent
from .bimodule import Bimodule, hom, tensor_over
from .coring import Comodule, Coring, HopfAlgebra, coseparability_solve
from .corita_error import (
    AxiomViolationError,
    CoritaError,
    DimensionMismatchError,
    HypothesisError,
    InvalidOperationError,
    SchemaError,
)
from .exactlin import QQ, Field, Mat, Subspace
from .galois import B_structure_theorem, comatrix, construct_R, cosep_strong_structure, galois_checks
from .morita import MoritaContext, kato_ohtake_verify, reduce_by_ideal
from .report import Report


__all__ = [
    'Algebra',
    'IdealWitness',
    'firm_square',
    'firmness',
    'idempotent_core',
    'ideal',
    'is_idempotent',
    'Bimodule',
    'hom',
    'tensor_over',
    'Comodule',
    'Coring',
    'HopfAlgebra',
    'coseparability_solve',
    'AxiomViolationError',
    'CoritaError',
    'DimensionMismatchError',
    'HypothesisError',
    'InvalidOperationError',
    'SchemaError',
    'QQ',
    'Field',
    'Mat',
    'Subspace',
    'B_structure_theorem',
    'comatrix',
    'construct_R',
    'cosep_strong_structure',
    'galois_checks',
    'MoritaContext',
    'kato_ohtake_verify',
    'reduce_by_ideal',
    'Report',
]
