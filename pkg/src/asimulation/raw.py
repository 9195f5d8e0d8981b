"""Asimulations as explicit sets of (world; tuple) pairs.

A pair is directed: FORWARD pairs go from the first model to the second,
BACKWARD pairs from the second to the first. Successor-back steps produce a
pair in each direction, which is how the relation keeps both models honest.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from src.config import config
from src.errors import AsimulationError
from src.kripke.model import Element, KripkeModel
from src.semantics.logics import Logic, check_admissible

logger = logging.getLogger(__name__)

CONDITIONS = ('type', 'elem', 'atom', 's-back', 'obj-forth', 'obj-back')


class Side(Enum):
    FORWARD = 1
    BACKWARD = 2

    def flip(self) -> 'Side':
        return Side.BACKWARD if self is Side.FORWARD else Side.FORWARD

    def models(self, m1: KripkeModel, m2: KripkeModel) -> Tuple[KripkeModel, KripkeModel]:
        """(source, target)"""
        return (m1, m2) if self is Side.FORWARD else (m2, m1)


@dataclass(frozen=True)
class RawPair:
    """((w; a), (v; b)) with w in the source model of `side`"""

    side: Side
    w: str
    a: Tuple[Element, ...]
    v: str
    b: Tuple[Element, ...]

    def flipped(self) -> 'RawPair':
        return RawPair(self.side.flip(), self.v, self.b, self.w, self.a)

    def __lt__(self, other):
        return _pair_key(self) < _pair_key(other)

    def __str__(self):
        arrow = '->' if self.side is Side.FORWARD else '<-'
        a = ','.join(e.name for e in self.a)
        b = ','.join(e.name for e in self.b)
        return f"({self.w};{a}) {arrow} ({self.v};{b})"


def _pair_key(p: RawPair):
    return (p.side.value, len(p.a), p.w, p.a, p.v, p.b)


@dataclass(frozen=True)
class RawAsimulation:
    pairs: FrozenSet[RawPair]

    @classmethod
    def of(cls, pairs: Iterable[RawPair]) -> 'RawAsimulation':
        return cls(frozenset(pairs))

    def __contains__(self, pair: RawPair) -> bool:
        return pair in self.pairs

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs, key=_pair_key))

    def reversed(self) -> 'RawAsimulation':
        """Same relation read with the two models swapped"""
        return RawAsimulation(frozenset(
            RawPair(p.side.flip(), p.w, p.a, p.v, p.b) for p in self.pairs))

    def without(self, pair: RawPair) -> 'RawAsimulation':
        return RawAsimulation(self.pairs - {pair})

    def union(self, other: 'RawAsimulation') -> 'RawAsimulation':
        return RawAsimulation(self.pairs | other.pairs)

    def max_length(self) -> int:
        return max((len(p.a) for p in self.pairs), default=0)


@dataclass(frozen=True)
class AsimCheck:
    """Outcome of a raw check: the first violated condition and its pair"""

    ok: bool
    condition: Optional[str] = None
    pair: Optional[RawPair] = None
    detail: str = ''

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "asimulation"
        return f"({self.condition}) violated at {self.pair}: {self.detail}"


# Atomic transfer
# -----------------------------------------------------------------------------

def check_signatures(m1: KripkeModel, m2: KripkeModel) -> None:
    if (m1.signature.predicates, m1.signature.constants) != \
            (m2.signature.predicates, m2.signature.constants):
        raise AsimulationError(
            f"models have different signatures: {m1.signature.describe()} "
            f"vs {m2.signature.describe()}"
        )


def atoms_transfer(logic: Logic, source: KripkeModel, w: str, target: KripkeModel, v: str,
                   pairs: Iterable[Tuple[Element, Element]]) -> bool:
    """
    Every atomic sentence true at the source is true at the target, where
    terms range over the signature's constants plus new constants naming
    the given element pairs.
    """
    terms = sorted(set(pairs) | {(source.constant(w, c), target.constant(v, c))
                                 for c in source.signature.constants})
    for name, arity in source.signature.predicates:
        src_ext = source.extension(w, name)
        tgt_ext = target.extension(v, name)
        for selection in product(terms, repeat=arity):
            if tuple(a for a, _ in selection) in src_ext and \
                    tuple(b for _, b in selection) not in tgt_ext:
                return False
    if logic.with_equality:
        image: Dict[Element, Element] = {}
        for a, b in terms:
            if image.setdefault(a, b) != b:
                return False
    return True


# Checking a given relation
# -----------------------------------------------------------------------------

def _check_pair_shape(m1: KripkeModel, m2: KripkeModel, p: RawPair) -> None:
    source, target = p.side.models(m1, m2)
    if len(p.a) != len(p.b):
        raise AsimulationError(f"tuple lengths differ in {p}")
    if p.w not in source.domains or p.v not in target.domains:
        raise AsimulationError(f"unknown world in {p}")
    if any(e not in source.domains[p.w] for e in p.a) or \
            any(e not in target.domains[p.v] for e in p.b):
        raise AsimulationError(f"tuple elements outside their worlds in {p}")


def check_asimulation_raw(logic: Logic, m1: KripkeModel, m2: KripkeModel,
                          relation: RawAsimulation, start: RawPair,
                          max_length: Optional[int] = None) -> AsimCheck:
    """
    Check a relation against the asimulation conditions.

    Args:
        logic: Logic; its model class must contain both models
        m1, m2: Models over the same signature
        relation: Directed pairs
        start: Forward pair that must belong to the relation
        max_length: Longest tuples considered; pairs of that length are not
            asked for object extensions (default: the longest in relation)

    Returns:
        AsimCheck naming the first violated condition

    Raises:
        AsimulationError: Malformed pair or mismatched signatures
        AdmissibilityError: If a model is outside logic's class
    """
    check_signatures(m1, m2)
    check_admissible(logic, m1)
    check_admissible(logic, m2)
    for p in relation:
        _check_pair_shape(m1, m2, p)
    if start.side is not Side.FORWARD:
        raise AsimulationError("the start pair must go from the first model to the second")
    _check_pair_shape(m1, m2, start)

    limit = relation.max_length() if max_length is None else max_length
    if start not in relation:
        return AsimCheck(False, 'elem', start, "start pair missing")

    for p in relation:
        if len(p.a) > limit:
            continue
        failure = _violation(logic, m1, m2, relation, p, len(p.a) < limit)
        if failure:
            return AsimCheck(False, failure[0], p, failure[1])
    return AsimCheck(True)


def _violation(logic, m1, m2, relation, p: RawPair, extend: bool) -> Optional[Tuple[str, str]]:
    source, target = p.side.models(m1, m2)

    if not atoms_transfer(logic, source, p.w, target, p.v, zip(p.a, p.b)):
        return 'atom', "an atomic sentence is not transferred"

    for v2 in target.successors(p.v):
        pushed_b = target.push(p.v, v2, p.b)
        found = False
        for w2 in source.successors(p.w):
            pushed_a = source.push(p.w, w2, p.a)
            there = RawPair(p.side, w2, pushed_a, v2, pushed_b)
            if there in relation and there.flipped() in relation:
                found = True
                break
        if not found:
            return 's-back', f"no partner for successor '{v2}'"

    if not extend:
        return None

    for a2 in source.sorted_domain(p.w):
        if not any(RawPair(p.side, p.w, p.a + (a2,), p.v, p.b + (b2,)) in relation
                   for b2 in target.sorted_domain(p.v)):
            return 'obj-forth', f"no partner for element {a2}"

    for v2 in target.successors(p.v):
        pushed_b = target.push(p.v, v2, p.b)
        for b2 in target.sorted_domain(v2):
            if not any(RawPair(p.side, w2, source.push(p.w, w2, p.a) + (a2,), v2, pushed_b + (b2,))
                       in relation
                       for w2 in source.successors(p.w) for a2 in source.sorted_domain(w2)):
                return 'obj-back', f"no partner for element {b2} at '{v2}'"
    return None


# Direct search over explicit pairs
# -----------------------------------------------------------------------------

def bounded_raw_search(logic: Logic, m1: KripkeModel, w1: str, a: Sequence[Element],
                       m2: KripkeModel, w2: str, b: Sequence[Element],
                       max_length: Optional[int] = None) -> Optional[RawAsimulation]:
    """
    Greatest bounded asimulation computed over explicit tuple pairs.

    Pairs with tuples up to max_length reachable from the start are
    generated, those failing the atomic condition are dropped, and pairs
    lacking a surviving partner are deleted until nothing changes. Pairs of
    length max_length are not asked for object extensions.

    Returns:
        The surviving relation if it contains the start pair, else None
    """
    check_signatures(m1, m2)
    check_admissible(logic, m1)
    check_admissible(logic, m2)
    limit = config.raw_tuple_length if max_length is None else max_length
    start = RawPair(Side.FORWARD, w1, tuple(a), w2, tuple(b))
    _check_pair_shape(m1, m2, start)
    if len(start.a) > limit:
        raise AsimulationError(f"start tuples longer than the bound {limit}")

    requirements: Dict[RawPair, List[List[Tuple[RawPair, ...]]]] = {}
    alive = set()
    frontier = [start]
    while frontier:
        p = frontier.pop()
        if p in requirements:
            continue
        source, target = p.side.models(m1, m2)
        if not atoms_transfer(logic, source, p.w, target, p.v, zip(p.a, p.b)):
            requirements[p] = []
            continue
        alive.add(p)
        groups = _raw_requirements(source, target, p, len(p.a) < limit)
        requirements[p] = groups
        for group in groups:
            for alternative in group:
                frontier.extend(q for q in alternative if q not in requirements)

    alive = solve_fixpoint(alive, requirements)
    logger.debug("raw search kept %d of %d pairs", len(alive), len(requirements))
    if start not in alive:
        return None
    return RawAsimulation(frozenset(alive))


def _raw_requirements(source: KripkeModel, target: KripkeModel, p: RawPair,
                      extend: bool) -> List[List[Tuple[RawPair, ...]]]:
    groups = []
    for v2 in target.successors(p.v):
        pushed_b = target.push(p.v, v2, p.b)
        group = []
        for w2 in source.successors(p.w):
            there = RawPair(p.side, w2, source.push(p.w, w2, p.a), v2, pushed_b)
            group.append((there, there.flipped()))
        groups.append(group)
    if extend:
        for a2 in source.sorted_domain(p.w):
            groups.append([(RawPair(p.side, p.w, p.a + (a2,), p.v, p.b + (b2,)),)
                           for b2 in target.sorted_domain(p.v)])
        for v2 in target.successors(p.v):
            pushed_b = target.push(p.v, v2, p.b)
            for b2 in target.sorted_domain(v2):
                groups.append([(RawPair(p.side, w2, source.push(p.w, w2, p.a) + (a2,),
                                        v2, pushed_b + (b2,)),)
                               for w2 in source.successors(p.w)
                               for a2 in source.sorted_domain(w2)])
    return groups


def solve_fixpoint(alive, requirements):
    """
    Delete members with an unmet requirement group until stable.

    Args:
        alive: Initially surviving nodes
        requirements: node -> groups; a group is met when one of its
            alternatives (a tuple of nodes) lies entirely inside alive

    Returns:
        The greatest subset of alive meeting all its requirements
    """
    alive = set(alive)
    order = sorted(alive)
    changed = True
    while changed:
        changed = False
        for node in order:
            if node not in alive:
                continue
            for group in requirements[node]:
                if not any(all(q in alive for q in alternative) for alternative in group):
                    alive.discard(node)
                    changed = True
                    break
    return alive


# Records
# -----------------------------------------------------------------------------

def raw_to_records(relation: RawAsimulation) -> List[Dict]:
    """JSON-ready list of pair records"""
    return [{'from': p.side.value, 'w': p.w, 'a': [e.name for e in p.a],
             'v': p.v, 'b': [e.name for e in p.b]} for p in relation]


def raw_from_records(records: Iterable[Dict]) -> RawAsimulation:
    """
    Read pair records: {"from": 1|2, "w": .., "a": [..], "v": .., "b": [..]}.

    Raises:
        AsimulationError: On malformed records
    """
    pairs = []
    try:
        for record in records:
            side = Side(int(record.get('from', 1)))
            w, v = str(record['w']), str(record['v'])
            a = tuple(Element(w, str(name)) for name in record.get('a', []))
            b = tuple(Element(v, str(name)) for name in record.get('b', []))
            pairs.append(RawPair(side, w, a, v, b))
    except (KeyError, TypeError, ValueError) as e:
        raise AsimulationError(f"malformed pair record: {e}") from e
    return RawAsimulation.of(pairs)


def identity_relation(m: KripkeModel, max_length: int) -> RawAsimulation:
    """{((w; a), (w; a))} in both directions for every w and tuple up to max_length"""
    pairs = []
    for w in m.worlds:
        for length in range(max_length + 1):
            for a in product(m.sorted_domain(w), repeat=length):
                pairs.append(RawPair(Side.FORWARD, w, a, w, a))
                pairs.append(RawPair(Side.BACKWARD, w, a, w, a))
    return RawAsimulation.of(pairs)
