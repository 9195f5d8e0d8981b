"""Finite Kripke models: worlds, domains, interpretations and homomorphisms"""

from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Tuple

import networkx as nx

from src.errors import EvaluationError, UnknownWorldError
from src.syntax.signature import Signature


class Element(NamedTuple):
    """World-qualified element name; qualification makes domains disjoint"""

    world: str
    name: str

    def __str__(self):
        return f"{self.name}@{self.world}"


ElementTuple = Tuple[Element, ...]


@dataclass(frozen=True)
class ClassFlags:
    in_class: bool
    su_class: bool

    @property
    def bi_class(self) -> bool:
        return self.in_class and self.su_class

    def as_dict(self) -> Dict[str, bool]:
        return {'in': self.in_class, 'su': self.su_class, 'bi': self.bi_class}


@dataclass(frozen=True, eq=True)
class KripkeModel:
    """
    A finite Kripke model over a signature.

    The order is stored reflexive-transitively closed; `homs` has an entry
    for every pair (w, v) with w below-or-equal v. Instances are treated as
    immutable; build them with `KripkeModel.build`.
    """

    signature: Signature
    worlds: Tuple[str, ...]
    order: FrozenSet[Tuple[str, str]]
    domains: Mapping[str, FrozenSet[Element]]
    predicates: Mapping[str, Mapping[str, FrozenSet[ElementTuple]]]
    constants: Mapping[str, Mapping[str, Element]]
    homs: Mapping[Tuple[str, str], Mapping[Element, Element]]
    _up: Dict[str, Tuple[str, ...]] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        up = {w: tuple(v for v in self.worlds if (w, v) in self.order) for w in self.worlds}
        object.__setattr__(self, '_up', up)

    def __hash__(self):
        return hash((self.signature, self.worlds, self.order,
                     tuple(sorted((w, d) for w, d in self.domains.items()))))

    @classmethod
    def build(cls,
              signature: Signature,
              worlds: Iterable[str],
              order: Iterable[Tuple[str, str]],
              domains: Mapping[str, Iterable[Element]],
              predicates: Optional[Mapping[str, Mapping[str, Iterable[ElementTuple]]]] = None,
              constants: Optional[Mapping[str, Mapping[str, Element]]] = None,
              homs: Optional[Mapping[Tuple[str, str], Mapping[Element, Element]]] = None,
              close_order: bool = True,
              compose_homs: bool = True) -> 'KripkeModel':
        """
        Normalize raw components into a model without validating laws.

        Args:
            signature: Model signature
            worlds: World names
            order: Generator edges (closed reflexive-transitively when
                close_order is set)
            domains: World -> elements
            predicates: World -> predicate -> tuples
            constants: World -> constant -> element
            homs: (w, v) -> element map; identities and compositions along
                order paths are filled in for missing pairs
            close_order: Take the reflexive-transitive closure of `order`
            compose_homs: Fill missing homs by composition

        Returns:
            KripkeModel (run validate_model to check the laws)
        """
        worlds = tuple(sorted(set(worlds)))
        order = set(order)
        if close_order:
            graph = nx.DiGraph()
            graph.add_nodes_from(worlds)
            graph.add_edges_from(order)
            closure = nx.transitive_closure(graph, reflexive=True)
            order = set(closure.edges())
        order = frozenset(order)

        domains = {w: frozenset(domains.get(w, ())) for w in worlds}
        predicates = predicates or {}
        constants = constants or {}

        preds = {}
        for w in worlds:
            given = predicates.get(w, {})
            preds[w] = {name: frozenset(tuple(t) for t in given.get(name, ()))
                        for name in signature.predicate_names}
        consts = {w: {c: e for c, e in constants.get(w, {}).items()
                      if c in signature.constants}
                  for w in worlds}

        maps = {}
        for (w, v), mapping in (homs or {}).items():
            maps[(w, v)] = dict(mapping)
        for w in worlds:
            maps.setdefault((w, w), {e: e for e in domains[w]})
        if compose_homs:
            maps = _compose_missing(worlds, order, maps)

        return cls(signature, worlds, order, domains, preds, consts, maps)

    # Frame
    # -------------------------------------------------------------------------

    def check_world(self, w: str) -> None:
        if w not in self._up:
            raise UnknownWorldError(w)

    def leq(self, w: str, v: str) -> bool:
        return (w, v) in self.order

    def successors(self, w: str) -> Tuple[str, ...]:
        """Worlds v with w <= v (w included), in sorted order"""
        self.check_world(w)
        return self._up[w]

    def predecessors(self, w: str) -> Tuple[str, ...]:
        self.check_world(w)
        return tuple(u for u in self.worlds if (u, w) in self.order)

    def strict_successors(self, w: str) -> Tuple[str, ...]:
        return tuple(v for v in self.successors(w) if v != w)

    def minimal_worlds(self) -> Tuple[str, ...]:
        return tuple(w for w in self.worlds if self.predecessors(w) == (w,))

    def is_rooted_at(self, w: str) -> bool:
        return all(self.leq(w, v) for v in self.worlds)

    # Structures
    # -------------------------------------------------------------------------

    def domain(self, w: str) -> FrozenSet[Element]:
        self.check_world(w)
        return self.domains[w]

    def sorted_domain(self, w: str) -> List[Element]:
        return sorted(self.domain(w))

    def all_elements(self) -> List[Element]:
        return sorted(e for w in self.worlds for e in self.domains[w])

    def element(self, w: str, name: str) -> Element:
        e = Element(w, name)
        if e not in self.domain(w):
            raise EvaluationError(f"no element '{name}' in the domain of '{w}'")
        return e

    def extension(self, w: str, predicate: str) -> FrozenSet[ElementTuple]:
        return self.predicates[w].get(predicate, frozenset())

    def holds_atom(self, w: str, predicate: str, args: ElementTuple) -> bool:
        return tuple(args) in self.predicates[w].get(predicate, ())

    def constant(self, w: str, name: str) -> Element:
        return self.constants[w][name]

    def hom(self, w: str, v: str) -> Mapping[Element, Element]:
        return self.homs[(w, v)]

    def push(self, w: str, v: str, elements: Iterable[Element]) -> ElementTuple:
        """Image of a tuple under H_wv"""
        mapping = self.homs[(w, v)]
        return tuple(mapping[e] for e in elements)

    def with_signature(self, signature: Signature) -> 'KripkeModel':
        return replace(self, signature=signature)

    def with_equality(self, flag: bool = True) -> 'KripkeModel':
        """Same model with the language's equality flag set"""
        return self.with_signature(self.signature.with_equality_flag(flag))

    def size(self) -> Tuple[int, int]:
        return len(self.worlds), max((len(d) for d in self.domains.values()), default=0)

    def describe(self) -> str:
        lines = [f"signature: {self.signature.describe()}"]
        for w in self.worlds:
            elems = ', '.join(e.name for e in self.sorted_domain(w))
            above = ', '.join(self.strict_successors(w)) or '-'
            lines.append(f"  {w}: {{{elems}}}  below: {above}")
        return '\n'.join(lines)


def _compose_missing(worlds, order, maps):
    """Fill H_wv for order pairs lacking one by composing along given homs"""
    graph = nx.DiGraph()
    graph.add_nodes_from(worlds)
    graph.add_edges_from(pair for pair in maps if pair[0] != pair[1])

    for w, v in sorted(order):
        if (w, v) in maps:
            continue
        try:
            path = nx.shortest_path(graph, w, v)
        except nx.NetworkXNoPath:
            continue
        composed = dict(maps[(path[0], path[0])])
        for a, b in zip(path, path[1:]):
            step = maps[(a, b)]
            composed = {e: step.get(img) for e, img in composed.items()}
        if all(img is not None for img in composed.values()):
            maps[(w, v)] = composed
    return maps


@dataclass(frozen=True)
class PointedModel:
    model: KripkeModel
    point: str

    def __post_init__(self):
        self.model.check_world(self.point)

    @property
    def rooted(self) -> bool:
        return self.model.is_rooted_at(self.point)
