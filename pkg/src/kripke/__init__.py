"""Finite Kripke models and the model algebra"""

from src.kripke.model import ClassFlags, Element, ElementTuple, KripkeModel, PointedModel
from src.kripke.validation import (
    Diagnostic, classify_model, is_valid, require_valid, validate_model,
)
from src.kripke.loader import dump_model, load_model, model_from_dict, model_to_dict
from src.kripke.algebra import (
    check_isomorphism, constant_extension, generated_submodel, induced_submodel,
    is_submodel, reduct, relabel_elements, relabel_worlds, rename_model,
    submodel_violations, union_chain,
)
from src.kripke.injectivize import injectivize, injectivize_with_projection
from src.kripke.generator import GeneratorParams, generate_random_model, random_tuple

__all__ = [
    'ClassFlags', 'Element', 'ElementTuple', 'KripkeModel', 'PointedModel',
    'Diagnostic', 'classify_model', 'is_valid', 'require_valid', 'validate_model',
    'dump_model', 'load_model', 'model_from_dict', 'model_to_dict',
    'check_isomorphism', 'constant_extension', 'generated_submodel',
    'induced_submodel', 'is_submodel', 'reduct', 'relabel_elements',
    'relabel_worlds', 'rename_model', 'submodel_violations', 'union_chain',
    'injectivize', 'injectivize_with_projection',
    'GeneratorParams', 'generate_random_model', 'random_tuple',
]
