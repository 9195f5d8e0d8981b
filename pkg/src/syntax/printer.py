"""Formula printing with minimal parentheses.

Precedence, loosest first: ->, |, &, ~. Implication associates to the
right, conjunction and disjunction to the left. A quantifier's scope runs
as far right as possible, so a quantified subformula is parenthesized
whenever anything follows it.
"""

from src.syntax.formula import (
    And, Atom, Bottom, Eq, Exists, Forall, Formula, Implies, Or, is_negation,
)

IMPLIES_PREC = 1
OR_PREC = 2
AND_PREC = 3
NOT_PREC = 4

_BINARY = {
    Implies: (IMPLIES_PREC, '->', 'right'),
    Or: (OR_PREC, '|', 'left'),
    And: (AND_PREC, '&', 'left'),
}


def print_formula(f: Formula) -> str:
    """Render f in the ASCII grammar accepted by parse_formula"""
    return _render(f, 0, True)


def _render(f: Formula, context: int, open_right: bool) -> str:
    if isinstance(f, Atom):
        return f"{f.predicate}({','.join(t.name for t in f.terms)})"
    if isinstance(f, Eq):
        return f"{f.left.name} = {f.right.name}"
    if isinstance(f, Bottom):
        return '_|_'

    if is_negation(f):
        return '~' + _render(f.left, NOT_PREC, open_right)

    if isinstance(f, (Forall, Exists)):
        keyword = 'forall' if isinstance(f, Forall) else 'exists'
        text = f"{keyword} {f.var}. {_render(f.body, 0, True)}"
        return text if open_right else f"({text})"

    prec, symbol, assoc = _BINARY[type(f)]
    parens = prec < context
    inner_open = open_right or parens
    if assoc == 'left':
        left = _render(f.left, prec, False)
        right = _render(f.right, prec + 1, inner_open)
    else:
        left = _render(f.left, prec + 1, False)
        right = _render(f.right, prec, inner_open)

    text = f"{left} {symbol} {right}"
    return f"({text})" if parens else text
