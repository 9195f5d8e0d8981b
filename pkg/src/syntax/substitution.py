"""Constant substitution, constant abstraction and quantification over constants"""

from typing import Sequence, Tuple

from src.errors import SubstitutionError
from src.syntax.formula import Const, Exists, Forall, Formula, Var, map_terms
from src.syntax.signature import fresh_variable


def substitute_constants(f: Formula, binding: Sequence[Tuple[str, str]]) -> Formula:
    """
    Simultaneously replace free occurrences of variables by fresh constants.

    Args:
        f: Formula
        binding: Ordered (variable, constant) pairs

    Returns:
        f with every free x_i replaced by c_i; bound occurrences untouched

    Raises:
        SubstitutionError: If a variable repeats or a constant already occurs in f
    """
    binding = list(binding)
    variables = [var for var, _ in binding]
    if len(set(variables)) != len(variables):
        raise SubstitutionError(f"duplicate variable in binding: {variables}")

    used = f.constants()
    for _, const in binding:
        if const in used:
            raise SubstitutionError(f"constant '{const}' is not fresh for the formula")

    mapping = dict(binding)

    def replace(term, bound):
        if isinstance(term, Var) and term.name in mapping and term.name not in bound:
            return Const(mapping[term.name])
        return term

    return map_terms(f, replace)


def abstract_constants(f: Formula, binding: Sequence[Tuple[str, str]]) -> Formula:
    """
    Replace constants by variables: the inverse of substitute_constants.

    Args:
        f: Formula
        binding: Ordered (constant, variable) pairs

    Returns:
        psi with substitute_constants(psi, [(y, c) ...]) == f

    Raises:
        SubstitutionError: If a target variable occurs free or bound in f
    """
    binding = list(binding)
    taken = f.free_vars() | f.bound_vars()
    targets = [var for _, var in binding]
    if len(set(targets)) != len(targets):
        raise SubstitutionError(f"duplicate target variable in binding: {targets}")
    for _, var in binding:
        if var in f.bound_vars():
            raise SubstitutionError(f"variable capture: '{var}' is bound in the formula")
        if var in taken:
            raise SubstitutionError(f"variable '{var}' already occurs free in the formula")

    mapping = dict(binding)

    def replace(term, bound):
        if isinstance(term, Const) and term.name in mapping:
            return Var(mapping[term.name])
        return term

    return map_terms(f, replace)


def quantify_constant(f: Formula, const: str, kind: str) -> Formula:
    """
    Quantify directly over a constant: exists x. psi with psi(c/x) = f.

    Args:
        f: Formula in which const occurs as a constant
        const: Constant name
        kind: 'exists' or 'forall'

    Returns:
        Quantified formula using the smallest variable outside FV(f) and BV(f)
    """
    if kind not in ('exists', 'forall'):
        raise SubstitutionError(f"unknown quantifier kind '{kind}'")
    var = fresh_variable(f.free_vars() | f.bound_vars())
    body = abstract_constants(f, [(const, var)])
    return Exists(var, body) if kind == 'exists' else Forall(var, body)
