"""Seeded random formula generation"""

import random
from typing import Optional, Sequence

from src.syntax.formula import (
    And, Atom, BOTTOM, Const, Eq, Exists, Forall, Formula, Implies, Or, Var,
)
from src.syntax.signature import Signature, fresh_variables


def random_formula(rng: random.Random,
                   sig: Signature,
                   max_rank: int = 3,
                   variables: Sequence[str] = (),
                   max_depth: int = 4,
                   bound_pool: Optional[Sequence[str]] = None,
                   with_equality: Optional[bool] = None) -> Formula:
    """
    Draw a formula over sig with rank <= max_rank.

    Args:
        rng: Source of randomness (the only source consulted)
        sig: Signature supplying predicates and constants
        max_rank: Upper bound on the rank of the result
        variables: Variables that may occur free
        max_depth: Upper bound on AST depth
        bound_pool: Names quantifiers may bind (default: two fresh x-names
            beyond the free variables)
        with_equality: Allow Eq atoms (default: sig.with_equality)

    Returns:
        Formula whose free variables are among `variables`
    """
    if with_equality is None:
        with_equality = sig.with_equality
    if bound_pool is None:
        bound_pool = fresh_variables(2, avoid=set(variables) | sig.symbols())

    constants = sorted(sig.constants)
    predicates = list(sig.predicates)

    def atomic(scope):
        terms = [Const(c) for c in constants] + [Var(v) for v in sorted(scope)]
        choices = []
        if terms and predicates:
            choices.append('atom')
        if terms and with_equality:
            choices.append('eq')
        if not choices or rng.random() < 0.08:
            return BOTTOM
        kind = rng.choice(choices)
        if kind == 'eq':
            return Eq(rng.choice(terms), rng.choice(terms))
        name, arity = rng.choice(predicates)
        return Atom(name, tuple(rng.choice(terms) for _ in range(arity)))

    def build(depth: int, rank: int, scope: frozenset) -> Formula:
        if depth <= 0 or rng.random() < 0.25:
            return atomic(scope)
        kinds = ['and', 'or']
        if rank > 0:
            kinds += ['implies', 'implies', 'forall', 'exists']
        kind = rng.choice(kinds)
        if kind == 'and':
            return And(build(depth - 1, rank, scope), build(depth - 1, rank, scope))
        if kind == 'or':
            return Or(build(depth - 1, rank, scope), build(depth - 1, rank, scope))
        if kind == 'implies':
            return Implies(build(depth - 1, rank - 1, scope),
                           build(depth - 1, rank - 1, scope))
        var = rng.choice(list(bound_pool))
        body = build(depth - 1, rank - 1, scope | {var})
        return Forall(var, body) if kind == 'forall' else Exists(var, body)

    return build(max_depth, max_rank, frozenset(variables))
