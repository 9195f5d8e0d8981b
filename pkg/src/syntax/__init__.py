"""Signatures, formulas, parsing, printing, substitution and renaming"""

from src.syntax.signature import (
    Signature, EMPTY_SIGNATURE, fresh_constants, fresh_variable, fresh_variables,
    parse_signature,
)
from src.syntax.formula import (
    Atom, BOTTOM, Bottom, And, Const, Eq, Exists, Forall, Formula, Implies, Or,
    Term, Var, biconditional, bound_vars, conjunction, disjunction, free_vars,
    negation, rank, top,
)
from src.syntax.parser import parse_formula, parse_sentence
from src.syntax.printer import print_formula
from src.syntax.substitution import (
    abstract_constants, quantify_constant, substitute_constants,
)
from src.syntax.renaming import RenamingMap, minimal_signature, rename_formula
from src.syntax.generator import random_formula

__all__ = [
    'Signature', 'EMPTY_SIGNATURE', 'fresh_constants', 'fresh_variable',
    'fresh_variables', 'parse_signature',
    'Atom', 'BOTTOM', 'Bottom', 'And', 'Const', 'Eq', 'Exists', 'Forall',
    'Formula', 'Implies', 'Or', 'Term', 'Var', 'biconditional', 'bound_vars',
    'conjunction', 'disjunction', 'free_vars', 'negation', 'rank', 'top',
    'parse_formula', 'parse_sentence', 'print_formula',
    'abstract_constants', 'quantify_constant', 'substitute_constants',
    'RenamingMap', 'minimal_signature', 'rename_formula', 'random_formula',
]
