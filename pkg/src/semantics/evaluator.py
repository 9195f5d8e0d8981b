"""The satisfaction relation.

Free variables are interpreted by an environment mapping variable names to
elements of the current world; moving to a successor v pushes the
environment through H_wv. Quantifier clauses use the simplified form:

    exists x. f   some a in A_w satisfies f at w
    forall x. f   every a in A_v satisfies f at v, for every v above w

evaluate_by_extension implements the same relation literally through
constant extensions and substitution, and serves as a reference oracle.
"""

from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from src.errors import EvaluationError, SignatureError
from src.kripke.algebra import constant_extension
from src.kripke.model import Element, KripkeModel
from src.semantics.logics import Logic, check_admissible
from src.syntax.formula import (
    And, Atom, Bottom, Const, Eq, Exists, Forall, Formula, Implies, Or, Var,
)
from src.syntax.signature import fresh_constants, fresh_variables
from src.syntax.substitution import substitute_constants

Env = Tuple[Tuple[str, Element], ...]


def default_variables(n: int) -> Tuple[str, ...]:
    """x1, ..., xn"""
    return fresh_variables(n)


def check_formula(m: KripkeModel, f: Formula, logic: Logic) -> None:
    """
    Raise unless f is a formula over m's signature in logic's language.

    Raises:
        EvaluationError: Equality under an equality-free logic
        SignatureError: Unknown predicate or constant, arity mismatch
    """
    if f.uses_equality() and not logic.with_equality:
        raise EvaluationError(f"equality formula under equality-free logic {logic}")
    sig = m.signature
    for name, arity in f.predicates().items():
        if sig.arity(name) != arity:
            raise SignatureError(f"arity mismatch for '{name}'")
    missing = f.constants() - sig.constants
    if missing:
        raise SignatureError(f"constants {sorted(missing)} not in the model's signature")


class Evaluator:
    """
    Satisfaction for one (logic, model) pair with a private memo table.

    Admissibility is checked once on construction.
    """

    def __init__(self, logic: Logic, m: KripkeModel, check: bool = True):
        self.logic = logic
        self.model = m
        self._cache: Dict[Tuple[str, Formula, Env], bool] = {}
        if check:
            check_admissible(logic, m)

    def evaluate(self, w: str, f: Formula, elements: Sequence[Element] = (),
                 variables: Optional[Sequence[str]] = None) -> bool:
        """
        Decide M, w |= f[elements].

        Args:
            w: World
            f: Formula whose free variables are among `variables`
            elements: Tuple from A_w
            variables: Variables bound to `elements` (default x1..xn)

        Returns:
            Truth value

        Raises:
            UnknownWorldError: If w is not a world
            EvaluationError: Tuple/world mismatch, unbound variables,
                equality under an equality-free logic
            SignatureError: If f is not over the model's signature
        """
        m = self.model
        m.check_world(w)
        elements = tuple(elements)
        variables = tuple(variables) if variables is not None else default_variables(len(elements))
        if len(variables) != len(elements):
            raise EvaluationError(
                f"{len(variables)} variables but {len(elements)} elements"
            )
        if len(set(variables)) != len(variables):
            raise EvaluationError(f"variables must be distinct: {variables}")
        for e in elements:
            if e not in m.domains[w]:
                raise EvaluationError(f"element {e} is not in the domain of '{w}'")
        unbound = f.free_vars() - set(variables)
        if unbound:
            raise EvaluationError(f"free variables {sorted(unbound)} have no value")
        check_formula(m, f, self.logic)

        return self._sat(w, f, dict(zip(variables, elements)))

    def holds(self, w: str, f: Formula, env: Mapping[str, Element]) -> bool:
        """Unchecked entry point for callers that already validated inputs"""
        return self._sat(w, f, env)

    def _sat(self, w: str, f: Formula, env: Mapping[str, Element]) -> bool:
        relevant = tuple(sorted((x, env[x]) for x in f.free_vars()))
        key = (w, f, relevant)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        result = self._compute(w, f, dict(relevant))
        self._cache[key] = result
        return result

    def _denote(self, w: str, t, env: Mapping[str, Element]) -> Element:
        if isinstance(t, Var):
            return env[t.name]
        return self.model.constant(w, t.name)

    def _compute(self, w: str, f: Formula, env: Dict[str, Element]) -> bool:
        m = self.model
        if isinstance(f, Atom):
            return m.holds_atom(w, f.predicate, tuple(self._denote(w, t, env) for t in f.terms))
        if isinstance(f, Eq):
            return self._denote(w, f.left, env) == self._denote(w, f.right, env)
        if isinstance(f, Bottom):
            return False
        if isinstance(f, And):
            return self._sat(w, f.left, env) and self._sat(w, f.right, env)
        if isinstance(f, Or):
            return self._sat(w, f.left, env) or self._sat(w, f.right, env)
        if isinstance(f, Implies):
            for v in m.successors(w):
                pushed = self._push(w, v, env)
                if self._sat(v, f.left, pushed) and not self._sat(v, f.right, pushed):
                    return False
            return True
        if isinstance(f, Exists):
            return any(self._sat(w, f.body, {**env, f.var: a}) for a in m.sorted_domain(w))
        if isinstance(f, Forall):
            for v in m.successors(w):
                pushed = self._push(w, v, env)
                for a in m.sorted_domain(v):
                    if not self._sat(v, f.body, {**pushed, f.var: a}):
                        return False
            return True
        raise TypeError(f"not a formula: {f!r}")

    def _push(self, w: str, v: str, env: Mapping[str, Element]) -> Dict[str, Element]:
        if w == v:
            return dict(env)
        mapping = self.model.hom(w, v)
        return {x: mapping[e] for x, e in env.items()}


def evaluate(logic: Logic, m: KripkeModel, w: str, f: Formula,
             elements: Sequence[Element] = (),
             variables: Optional[Sequence[str]] = None) -> bool:
    """
    Satisfaction M, w |= f[elements] under logic.

    Raises:
        AdmissibilityError: If m is outside logic's model class
        EvaluationError, SignatureError, UnknownWorldError: See Evaluator.evaluate
    """
    return Evaluator(logic, m).evaluate(w, f, elements, variables)


def is_valid_in(logic: Logic, m: KripkeModel, f: Formula) -> bool:
    """f holds at every world of m (f a sentence)"""
    evaluator = Evaluator(logic, m)
    return all(evaluator.evaluate(w, f) for w in m.worlds)


# Reference semantics
# -----------------------------------------------------------------------------

def evaluate_by_extension(logic: Logic, m: KripkeModel, w: str, f: Formula,
                          elements: Sequence[Element] = (),
                          variables: Optional[Sequence[str]] = None) -> bool:
    """
    Satisfaction computed from the raw definition: free variables become
    fresh constants of a constant extension, and the quantifier clauses
    range over constant extensions of generated submodels.

    Slow; used to cross-check Evaluator on small models.
    """
    elements = tuple(elements)
    variables = tuple(variables) if variables is not None else default_variables(len(elements))
    Evaluator(logic, m).evaluate(w, f, elements, variables)

    consts = fresh_constants(m.signature, len(elements), avoid=f.constants())
    extended = constant_extension(m, w, consts, elements)
    sentence = substitute_constants(f, list(zip(variables, consts)))
    return _raw(extended, w, sentence)


def _raw(n: KripkeModel, w: str, f: Formula) -> bool:
    if isinstance(f, Atom):
        return n.holds_atom(w, f.predicate, tuple(n.constant(w, t.name) for t in f.terms))
    if isinstance(f, Eq):
        return n.constant(w, f.left.name) == n.constant(w, f.right.name)
    if isinstance(f, Bottom):
        return False
    if isinstance(f, And):
        return _raw(n, w, f.left) and _raw(n, w, f.right)
    if isinstance(f, Or):
        return _raw(n, w, f.left) or _raw(n, w, f.right)
    if isinstance(f, Implies):
        return all(not _raw(n, v, f.left) or _raw(n, v, f.right) for v in n.successors(w))
    if isinstance(f, (Exists, Forall)):
        (c,) = fresh_constants(n.signature, 1, avoid=f.constants())
        body = substitute_constants(f.body, [(f.var, c)])
        if isinstance(f, Exists):
            return any(_raw(constant_extension(n, w, [c], [a]), w, body)
                       for a in n.sorted_domain(w))
        return all(_raw(constant_extension(n, v, [c], [a]), v, body)
                   for v in n.successors(w) for a in n.sorted_domain(v))
    raise TypeError(f"not a formula: {f!r}")


def elements_by_name(m: KripkeModel, w: str, names: Iterable[str]) -> Tuple[Element, ...]:
    """Resolve local element names at w (CLI helper)"""
    return tuple(m.element(w, name) for name in names)
