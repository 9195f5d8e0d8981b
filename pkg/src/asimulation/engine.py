"""Greatest asimulations over the position quotient.

A raw pair ((w; a1..al), (v; b1..bl)) is identified with the position
(side, w, v, {(a_i, b_i)}): every asimulation condition sees the tuples
only through that set of componentwise pairs. The position space is finite
and the greatest relation closed under the conditions is computed by
deleting positions until nothing changes.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from src.config import config
from src.errors import AsimulationError, BudgetExceededError
from src.kripke.model import Element, KripkeModel
from src.semantics.logics import Logic, check_admissible
from src.asimulation.raw import (
    RawAsimulation, RawPair, Side, atoms_transfer, check_signatures, solve_fixpoint,
)

logger = logging.getLogger(__name__)

PairSet = FrozenSet[Tuple[Element, Element]]


@dataclass(frozen=True)
class Position:
    side: Side
    w: str
    v: str
    rel: PairSet

    def key(self):
        return (self.side.value, self.w, self.v, len(self.rel), tuple(sorted(self.rel)))

    def __lt__(self, other):
        return self.key() < other.key()

    def flipped(self) -> 'Position':
        return Position(self.side.flip(), self.v, self.w, frozenset((b, a) for a, b in self.rel))

    def __str__(self):
        arrow = '->' if self.side is Side.FORWARD else '<-'
        rel = ', '.join(f"{a.name}/{b.name}" for a, b in sorted(self.rel))
        return f"{self.w} {arrow} {self.v} {{{rel}}}"


@dataclass(frozen=True)
class AsimRelation:
    """Surviving positions of the greatest fixpoint, with the start position"""

    positions: FrozenSet[Position]
    start: Position
    explored: int

    def __contains__(self, p: Position) -> bool:
        return p in self.positions

    def __len__(self):
        return len(self.positions)

    def diagonal_positions(self) -> List[Position]:
        return sorted(p for p in self.positions
                      if p.w == p.v and all(a == b for a, b in p.rel))


def position_bound(m1: KripkeModel, m2: KripkeModel) -> int:
    """Sum over world pairs of 2^(|A_w| * |B_v|)"""
    return sum(2 ** (len(m1.domains[w]) * len(m2.domains[v]))
               for w in m1.worlds for v in m2.worlds)


def _requirements(source: KripkeModel, target: KripkeModel,
                  p: Position) -> List[List[Tuple[Position, ...]]]:
    pairs = sorted(p.rel)
    sources = [a for a, _ in pairs]
    targets = [b for _, b in pairs]
    groups: List[List[Tuple[Position, ...]]] = []

    def moved(w2, v2, extra=()):
        rel = set(zip(source.push(p.w, w2, sources), target.push(p.v, v2, targets)))
        rel.update(extra)
        return Position(p.side, w2, v2, frozenset(rel))

    for v2 in target.successors(p.v):
        group = []
        for w2 in source.successors(p.w):
            there = moved(w2, v2)
            group.append((there, there.flipped()))
        groups.append(group)

    for a2 in source.sorted_domain(p.w):
        groups.append([(Position(p.side, p.w, p.v, p.rel | {(a2, b2)}),)
                       for b2 in target.sorted_domain(p.v)])

    for v2 in target.successors(p.v):
        for b2 in target.sorted_domain(v2):
            groups.append([(moved(w2, v2, [(a2, b2)]),)
                           for w2 in source.successors(p.w)
                           for a2 in source.sorted_domain(w2)])
    return groups


def greatest_asimulation(logic: Logic, m1: KripkeModel, w1: str, a: Sequence[Element],
                         m2: KripkeModel, w2: str, b: Sequence[Element],
                         budget: Optional[int] = None) -> Optional[AsimRelation]:
    """
    Greatest asimulation from (m1, w1, a) to (m2, w2, b) over positions.

    Positions reachable from the start are generated; those failing the
    atomic condition start out dead; positions with an unmet successor-back,
    object-forth or object-back requirement are deleted until stable, in
    deterministic position order.

    Args:
        logic: Logic; both models must be admissible
        m1, w1, a: Source pointed model and tuple
        m2, w2, b: Target pointed model and tuple of the same length
        budget: Position budget (default config.position_budget)

    Returns:
        AsimRelation if the start position survives, else None

    Raises:
        BudgetExceededError: If the position bound exceeds the budget
        AsimulationError: Mismatched signatures or tuples
        AdmissibilityError: If a model is outside logic's class
    """
    check_signatures(m1, m2)
    check_admissible(logic, m1)
    check_admissible(logic, m2)
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise AsimulationError(f"tuple lengths differ: {len(a)} and {len(b)}")
    m1.check_world(w1)
    m2.check_world(w2)
    if any(e not in m1.domains[w1] for e in a) or any(e not in m2.domains[w2] for e in b):
        raise AsimulationError("tuple elements outside their worlds")

    budget = config.position_budget if budget is None else budget
    bound = position_bound(m1, m2)
    if bound > budget:
        raise BudgetExceededError(bound, budget)

    start = Position(Side.FORWARD, w1, w2, frozenset(zip(a, b)))
    requirements: Dict[Position, List] = {}
    alive = set()
    frontier = [start]
    while frontier:
        p = frontier.pop()
        if p in requirements:
            continue
        source, target = p.side.models(m1, m2)
        if not atoms_transfer(logic, source, p.w, target, p.v, p.rel):
            requirements[p] = []
            continue
        alive.add(p)
        groups = _requirements(source, target, p)
        requirements[p] = groups
        for group in groups:
            for alternative in group:
                frontier.extend(q for q in alternative if q not in requirements)

    initial = len(alive)
    alive = solve_fixpoint(alive, requirements)
    logger.debug("explored %d positions, %d passed atoms, %d survive",
                 len(requirements), initial, len(alive))
    if start not in alive:
        return None
    return AsimRelation(frozenset(alive), start, len(requirements))


def asim_exists(logic: Logic, m1: KripkeModel, w1: str, a: Sequence[Element],
                m2: KripkeModel, w2: str, b: Sequence[Element],
                budget: Optional[int] = None) -> bool:
    return greatest_asimulation(logic, m1, w1, a, m2, w2, b, budget) is not None


def expand_positions(relation: AsimRelation, max_length: Optional[int] = None) -> RawAsimulation:
    """
    Explicit tuple pairs of a position relation.

    Every surviving position (side, w, v, R) contributes the pairs
    ((w; a), (v; b)) of length up to max_length whose componentwise pair
    set is exactly R.
    """
    limit = config.raw_tuple_length if max_length is None else max_length
    pairs = []
    for p in sorted(relation.positions):
        members = sorted(p.rel)
        if len(members) > limit:
            continue
        for length in range(len(members), limit + 1):
            for choice in product(members, repeat=length):
                if set(choice) == p.rel:
                    pairs.append(RawPair(p.side, p.w, tuple(x for x, _ in choice),
                                         p.v, tuple(y for _, y in choice)))
    return RawAsimulation.of(pairs)


def start_pair(relation: AsimRelation) -> RawPair:
    """The start position as a raw pair, in a fixed tuple order"""
    members = sorted(relation.start.rel)
    return RawPair(Side.FORWARD, relation.start.w, tuple(a for a, _ in members),
                   relation.start.v, tuple(b for _, b in members))
