"""Formula ASTs for intuitionistic first-order logic (optionally with equality).

Negation and the biconditional are sugar over the AST: ~f is f -> _|_ and
f <-> g is (f -> g) & (g -> f).
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, Sequence, Tuple, Union


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self):
        return self.name


Term = Union[Var, Const]


class Formula:
    """Base class of all AST nodes"""

    def children(self) -> Tuple['Formula', ...]:
        return ()

    def free_vars(self) -> FrozenSet[str]:
        raise NotImplementedError

    def bound_vars(self) -> FrozenSet[str]:
        return frozenset().union(*(c.bound_vars() for c in self.children()))

    def constants(self) -> FrozenSet[str]:
        return frozenset().union(*(c.constants() for c in self.children()))

    def predicates(self) -> Dict[str, int]:
        result = {}
        for child in self.children():
            result.update(child.predicates())
        return result

    def uses_equality(self) -> bool:
        return any(c.uses_equality() for c in self.children())

    def rank(self) -> int:
        raise NotImplementedError

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children())

    def is_sentence(self) -> bool:
        return not self.free_vars()

    def subformulas(self) -> Iterator['Formula']:
        yield self
        for child in self.children():
            yield from child.subformulas()

    def __str__(self):
        from src.syntax.printer import print_formula
        return print_formula(self)


def _term_vars(terms: Sequence[Term]) -> FrozenSet[str]:
    return frozenset(t.name for t in terms if isinstance(t, Var))


def _term_consts(terms: Sequence[Term]) -> FrozenSet[str]:
    return frozenset(t.name for t in terms if isinstance(t, Const))


@dataclass(frozen=True, repr=False)
class Atom(Formula):
    predicate: str
    terms: Tuple[Term, ...]

    def free_vars(self):
        return _term_vars(self.terms)

    def constants(self):
        return _term_consts(self.terms)

    def predicates(self):
        return {self.predicate: len(self.terms)}

    def rank(self):
        return 0

    def __repr__(self):
        return f"Atom({self.predicate}, [{', '.join(map(str, self.terms))}])"


@dataclass(frozen=True, repr=False)
class Eq(Formula):
    left: Term
    right: Term

    def free_vars(self):
        return _term_vars((self.left, self.right))

    def constants(self):
        return _term_consts((self.left, self.right))

    def uses_equality(self):
        return True

    def rank(self):
        return 0

    def __repr__(self):
        return f"Eq({self.left}, {self.right})"


@dataclass(frozen=True, repr=False)
class Bottom(Formula):

    def free_vars(self):
        return frozenset()

    def rank(self):
        return 0

    def __repr__(self):
        return "Bottom"


@dataclass(frozen=True, repr=False)
class _Binary(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)

    def free_vars(self):
        return self.left.free_vars() | self.right.free_vars()

    def __repr__(self):
        return f"{type(self).__name__}({self.left!r}, {self.right!r})"


class And(_Binary):
    def rank(self):
        return max(self.left.rank(), self.right.rank())


class Or(_Binary):
    def rank(self):
        return max(self.left.rank(), self.right.rank())


class Implies(_Binary):
    def rank(self):
        return 1 + max(self.left.rank(), self.right.rank())


@dataclass(frozen=True, repr=False)
class _Quantifier(Formula):
    var: str
    body: Formula

    def children(self):
        return (self.body,)

    def free_vars(self):
        return self.body.free_vars() - {self.var}

    def bound_vars(self):
        return self.body.bound_vars() | {self.var}

    def rank(self):
        return 1 + self.body.rank()

    def __repr__(self):
        return f"{type(self).__name__}({self.var}, {self.body!r})"


class Forall(_Quantifier):
    pass


class Exists(_Quantifier):
    pass


# Derived forms
# -----------------------------------------------------------------------------

BOTTOM = Bottom()


def negation(f: Formula) -> Formula:
    return Implies(f, BOTTOM)


def is_negation(f: Formula) -> bool:
    return isinstance(f, Implies) and isinstance(f.right, Bottom)


def biconditional(f: Formula, g: Formula) -> Formula:
    return And(Implies(f, g), Implies(g, f))


def top() -> Formula:
    return Implies(BOTTOM, BOTTOM)


def conjunction(formulas: Sequence[Formula]) -> Formula:
    """Left-nested conjunction; the empty conjunction is top"""
    formulas = list(formulas)
    if not formulas:
        return top()
    result = formulas[0]
    for f in formulas[1:]:
        result = And(result, f)
    return result


def disjunction(formulas: Sequence[Formula]) -> Formula:
    """Left-nested disjunction; the empty disjunction is bottom"""
    formulas = list(formulas)
    if not formulas:
        return BOTTOM
    result = formulas[0]
    for f in formulas[1:]:
        result = Or(result, f)
    return result


# Module-level accessors
# -----------------------------------------------------------------------------

def free_vars(f: Formula) -> FrozenSet[str]:
    return f.free_vars()


def bound_vars(f: Formula) -> FrozenSet[str]:
    return f.bound_vars()


def rank(f: Formula) -> int:
    """rank(atom)=rank(_|_)=0; &,| take the max; ->, forall, exists add one"""
    return f.rank()


def map_terms(f: Formula, fn) -> Formula:
    """
    Rebuild f applying fn(term, bound) to every term occurrence.

    Args:
        f: Formula to rebuild
        fn: Callable receiving the term and the frozenset of variables bound
            at that occurrence; returns the replacement term

    Returns:
        New formula
    """
    def walk(node: Formula, bound: FrozenSet[str]) -> Formula:
        if isinstance(node, Atom):
            return Atom(node.predicate, tuple(fn(t, bound) for t in node.terms))
        if isinstance(node, Eq):
            return Eq(fn(node.left, bound), fn(node.right, bound))
        if isinstance(node, Bottom):
            return node
        if isinstance(node, _Binary):
            return type(node)(walk(node.left, bound), walk(node.right, bound))
        if isinstance(node, _Quantifier):
            return type(node)(node.var, walk(node.body, bound | {node.var}))
        raise TypeError(f"not a formula: {node!r}")

    return walk(f, frozenset())
