"""Formula grammar

Symbols:

    P(x, c)                 Atom (identifiers in the signature's constants
                            are constants, all others variables)
    x = c                   Equality (signatures with equality only)
    _|_                     Falsum

Operators, tightest first:

    ~f                      Negation (sugar for f -> _|_)
    f & g                   Conjunction (left-assoc)
    f | g                   Disjunction (left-assoc)
    f -> g                  Implication (right-assoc)

Quantifiers (scope extends as far right as possible):

    forall x. f
    exists x. f

"""

from typing import Dict, FrozenSet, Tuple

import pyparsing as pp

from src.errors import FormulaSyntaxError, SignatureError
from src.syntax.formula import (
    And, Atom, BOTTOM, Bottom, Const, Eq, Exists, Forall, Formula, Implies,
    Or, Var, negation,
)
from src.syntax.signature import Signature

pp.ParserElement.enable_packrat()


# Parse actions
# -----------------------------------------------------------------------------

def _make_atom(tokens):
    name = tokens[0]
    return Atom(name, tuple(tokens[1:]))


def _make_quantified(tokens):
    keyword, var, body = tokens
    return Forall(var, body) if keyword == 'forall' else Exists(var, body)


def _negate(tokens):
    group = tokens[0]
    result = group[-1]
    for _ in range(len(group) - 1):
        result = negation(result)
    return result


def _fold_left(node_type):
    def parse_action(tokens):
        operands = tokens[0][0::2]
        result = operands[0]
        for operand in operands[1:]:
            result = node_type(result, operand)
        return result
    return parse_action


def _fold_right(node_type):
    def parse_action(tokens):
        operands = tokens[0][0::2]
        result = operands[-1]
        for operand in reversed(operands[:-1]):
            result = node_type(operand, result)
        return result
    return parse_action


# Grammar
# -----------------------------------------------------------------------------

LPAR, RPAR, DOT = map(pp.Suppress, '().')
FORALL = pp.Keyword('forall')
EXISTS = pp.Keyword('exists')

Identifier = ~(FORALL | EXISTS) + pp.Word(pp.alphas, pp.alphanums + '_')
Identifier.set_name('identifier')

Term = Identifier.copy().set_parse_action(lambda t: Var(t[0]))

Falsum = pp.Literal('_|_').set_parse_action(lambda: BOTTOM)

AtomicFormula = (Identifier + LPAR + pp.Optional(pp.DelimitedList(Term)) + RPAR)
AtomicFormula.set_parse_action(_make_atom)

Equality = Term + pp.Suppress('=') + Term
Equality.set_parse_action(lambda t: Eq(t[0], t[1]))

Formula_ = pp.Forward()

QuantifiedFormula = (FORALL | EXISTS) + Identifier + DOT + Formula_
QuantifiedFormula.set_parse_action(_make_quantified)

Operand = Falsum | QuantifiedFormula | AtomicFormula | Equality

Formula_ <<= pp.infix_notation(Operand, [
    (pp.Literal('~'), 1, pp.OpAssoc.RIGHT, _negate),
    (pp.Literal('&'), 2, pp.OpAssoc.LEFT, _fold_left(And)),
    (pp.Literal('|'), 2, pp.OpAssoc.LEFT, _fold_left(Or)),
    (pp.Literal('->'), 2, pp.OpAssoc.RIGHT, _fold_right(Implies)),
])


def _parse_raw(text: str) -> Formula:
    try:
        tokens = Formula_.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise FormulaSyntaxError(f"syntax error: {e.msg}", e.loc) from e
    assert len(tokens) == 1
    return tokens[0]


# Resolution against a signature
# -----------------------------------------------------------------------------

def _resolve(f: Formula, sig: Signature, bound: FrozenSet[str]) -> Formula:
    def term(t: Var):
        if t.name in sig.constants and t.name not in bound:
            return Const(t.name)
        return t

    if isinstance(f, Atom):
        if not f.terms:
            raise SignatureError(f"arity-0 predicate '{f.predicate}' is not allowed")
        if not sig.has_predicate(f.predicate):
            raise SignatureError(f"unknown predicate '{f.predicate}'")
        if sig.arity(f.predicate) != len(f.terms):
            raise SignatureError(
                f"arity mismatch: '{f.predicate}' has arity {sig.arity(f.predicate)}, "
                f"used with {len(f.terms)} arguments"
            )
        return Atom(f.predicate, tuple(term(t) for t in f.terms))
    if isinstance(f, Eq):
        if not sig.with_equality:
            raise SignatureError("equality not in language")
        return Eq(term(f.left), term(f.right))
    if isinstance(f, Bottom):
        return f
    if isinstance(f, (Forall, Exists)):
        if f.var in sig.constants or sig.has_predicate(f.var):
            raise SignatureError(f"bound variable '{f.var}' clashes with a signature symbol")
        return type(f)(f.var, _resolve(f.body, sig, bound | {f.var}))
    return type(f)(_resolve(f.left, sig, bound), _resolve(f.right, sig, bound))


def parse_formula(text: str, sig: Signature) -> Formula:
    """
    Parse formula text against a signature.

    Args:
        text: Formula in the ASCII grammar
        sig: Signature resolving predicates and constants

    Returns:
        Formula AST

    Raises:
        FormulaSyntaxError: If the text does not parse (carries the position)
        SignatureError: Unknown predicate, arity mismatch, arity-0 predicate,
            or equality used without with_equality
    """
    return _resolve(_parse_raw(text), sig, frozenset())


def _infer(f: Formula, bound: FrozenSet[str], predicates: Dict[str, int],
           constants: set) -> bool:
    """Collect predicates and free identifiers; returns whether Eq occurs"""
    if isinstance(f, Atom):
        if not f.terms:
            raise SignatureError(f"arity-0 predicate '{f.predicate}' is not allowed")
        known = predicates.setdefault(f.predicate, len(f.terms))
        if known != len(f.terms):
            raise SignatureError(
                f"predicate '{f.predicate}' used with arities {known} and {len(f.terms)}"
            )
        constants.update(t.name for t in f.terms if t.name not in bound)
        return False
    if isinstance(f, Eq):
        constants.update(t.name for t in (f.left, f.right) if t.name not in bound)
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, (Forall, Exists)):
        return _infer(f.body, bound | {f.var}, predicates, constants)
    left = _infer(f.left, bound, predicates, constants)
    right = _infer(f.right, bound, predicates, constants)
    return left or right


def parse_sentence(text: str) -> Tuple[Formula, Signature]:
    """
    Parse a sentence without a declared signature.

    Identifiers applied to arguments are predicates; identifiers that are
    never bound are constants.

    Returns:
        (sentence, minimal signature it was read against)
    """
    raw = _parse_raw(text)
    predicates: Dict[str, int] = {}
    constants: set = set()
    with_equality = _infer(raw, frozenset(), predicates, constants)
    sig = Signature.create(predicates, constants, with_equality)
    return _resolve(raw, sig, frozenset()), sig
