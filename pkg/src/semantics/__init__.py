"""Satisfaction, bounded theories and types"""

from src.semantics.logics import Logic, check_admissible, is_admissible
from src.semantics.evaluator import (
    Evaluator, evaluate, evaluate_by_extension, is_valid_in,
)
from src.semantics.enumeration import enumerate_sentences
from src.semantics.theories import (
    FormulaPair, TheorySlice, TypeSlice, check_elementary_embedding_upto,
    embedding_violations, is_elementary_submodel_upto, satisfies_pair,
    theory_slice, type_slice,
)
from src.semantics.types import (
    classify_finite_type, existential_type_formula, find_type_witness,
    is_type_realized, successor_type_formula, universal_type_formula,
)

__all__ = [
    'Logic', 'check_admissible', 'is_admissible',
    'Evaluator', 'evaluate', 'evaluate_by_extension', 'is_valid_in',
    'enumerate_sentences',
    'FormulaPair', 'TheorySlice', 'TypeSlice', 'check_elementary_embedding_upto',
    'embedding_violations', 'is_elementary_submodel_upto', 'satisfies_pair',
    'theory_slice', 'type_slice',
    'classify_finite_type', 'existential_type_formula', 'find_type_witness',
    'is_type_realized', 'successor_type_formula', 'universal_type_formula',
]
