"""Star expansions: tracking predicates for homomorphic images of elements.

For every element a (living at world u_a) the expansion adds unary
predicates Plus_i and Minus_i, where i is a's place in the canonical element
order:

    b in Plus_i at v   iff  u_a <= v and b = H(u_a, v)(a)
    b in Minus_i at v  iff  not v <= u_a, or a != H(v, u_a)(b)

The context sentences exists x Plus_i(x) and forall x Minus_i(x), built
from the least element of a world, detect being above and not being below
that world.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

from src.errors import PreconditionError, SignatureError
from src.kripke.algebra import generated_submodel
from src.kripke.model import Element, KripkeModel
from src.kripke.validation import require_valid
from src.semantics.logics import Logic, check_admissible
from src.syntax.formula import Atom, Exists, Forall, Formula, Var
from src.syntax.signature import fresh_variable
from src.transforms.congruence import Congruence

PLUS_PREFIX = 'Plus_'
MINUS_PREFIX = 'Minus_'


@dataclass(frozen=True)
class StarModel:
    base: KripkeModel
    point: str
    model: KripkeModel
    plus_names: Dict[Element, str]
    minus_names: Dict[Element, str]

    def plus(self, a: Element) -> str:
        return self.plus_names[a]

    def minus(self, a: Element) -> str:
        return self.minus_names[a]

    def anchor(self, w: str) -> Element:
        """The canonically least element of A_w"""
        domain = self.base.sorted_domain(w)
        if not domain:
            raise PreconditionError(f"the domain of '{w}' is empty")
        return domain[0]


def star_expand(m: KripkeModel, w: str) -> StarModel:
    """
    Expand m with Plus/Minus predicates for every element.

    Raises:
        PreconditionError: If m is not a valid model
        SignatureError: If a tracking predicate name is already taken
        UnknownWorldError: If w is not a world
    """
    require_valid(m)
    m.check_world(w)
    elements = m.all_elements()
    plus = {a: f"{PLUS_PREFIX}{i}" for i, a in enumerate(elements, start=1)}
    minus = {a: f"{MINUS_PREFIX}{i}" for i, a in enumerate(elements, start=1)}
    taken = m.signature.symbols() & (set(plus.values()) | set(minus.values()))
    if taken:
        raise SignatureError(f"star predicate names already in the signature: {sorted(taken)}")

    signature = m.signature.with_predicates({name: 1 for name in [*plus.values(), *minus.values()]})
    predicates = {v: dict(m.predicates[v]) for v in m.worlds}
    for a in elements:
        home = a.world
        for v in m.worlds:
            if m.leq(home, v):
                predicates[v][plus[a]] = {(m.hom(home, v)[a],)}
            else:
                predicates[v][plus[a]] = set()
            predicates[v][minus[a]] = {(b,) for b in m.domains[v]
                                       if not m.leq(v, home) or m.hom(v, home)[b] != a}

    expanded = KripkeModel.build(signature, m.worlds, m.order, m.domains, predicates,
                                 m.constants, m.homs, close_order=False, compose_homs=False)
    return StarModel(m, w, expanded, plus, minus)


def q_formulas(s: StarModel, w: str) -> Tuple[Formula, Formula]:
    """
    (Q+, Q-) for world w: exists x Plus(x) and forall x Minus(x) on the
    least element of A_w.

    Raises:
        PreconditionError: If A_w is empty
    """
    s.model.check_world(w)
    a = s.anchor(w)
    x = fresh_variable(s.model.signature.symbols())
    return (Exists(x, Atom(s.plus(a), (Var(x),))),
            Forall(x, Atom(s.minus(a), (Var(x),))))


def derive_star_congruence(logic: Logic, n: KripkeModel, v: str,
                           plus_predicates: Optional[Iterable[str]] = None) -> Congruence:
    """
    The relation read off shared Plus-membership on [N, v].

    c ~ d at u iff c lies in some Plus predicate and c, d lie in exactly the
    same ones; elements outside every Plus predicate are only related to
    themselves.

    Args:
        logic: Logic; n must be admissible
        n: Model over a star signature
        v: World generating the submodel
        plus_predicates: Plus predicate names (default: every predicate
            named Plus_*)

    Raises:
        SignatureError: If n has no Plus predicates
    """
    check_admissible(logic, n)
    names = sorted(plus_predicates) if plus_predicates is not None else \
        [p for p in n.signature.predicate_names if p.startswith(PLUS_PREFIX)]
    missing = [p for p in names if not n.signature.has_predicate(p)]
    if not names or missing:
        raise SignatureError(f"signature lacks star predicates {missing or PLUS_PREFIX + '*'}")

    generated = generated_submodel(n, v)
    pairs = []
    for u in generated.worlds:
        membership = {c: frozenset(p for p in names if n.holds_atom(u, p, (c,)))
                      for c in generated.domains[u]}
        for c in generated.sorted_domain(u):
            for d in generated.sorted_domain(u):
                if membership[c] and membership[c] == membership[d]:
                    pairs.append((c, d))
    return Congruence.from_pairs(generated, pairs)
