"""Relations derived from asimulations: subtuple projections, restrictions
to generated submodels, and the candidate relation read off type inclusion."""

import logging
from itertools import product
from typing import Dict, Optional, Sequence, Tuple

from src.config import config
from src.errors import AsimulationError
from src.kripke.model import Element, KripkeModel
from src.semantics.logics import Logic
from src.semantics.theories import TypeSlice, type_slice
from src.asimulation.raw import (
    AsimCheck, RawAsimulation, RawPair, Side, check_asimulation_raw,
)

logger = logging.getLogger(__name__)


def project_subtuple(relation: RawAsimulation, indices: Sequence[int],
                     base_length: int) -> RawAsimulation:
    """
    Keep the components listed in indices of the first base_length places
    (plus everything appended after them) in every pair.

    Args:
        relation: Asimulation whose start tuples have base_length components
        indices: Strictly increasing positions in range(base_length)
        base_length: Length of the start tuples

    Returns:
        Projected relation; pairs shorter than base_length are dropped

    Raises:
        AsimulationError: On invalid indices
    """
    indices = list(indices)
    if any(i < 0 or i >= base_length for i in indices) or indices != sorted(set(indices)):
        raise AsimulationError(f"invalid index set {indices} for length {base_length}")

    def cut(t):
        return tuple(t[i] for i in indices) + tuple(t[base_length:])

    return RawAsimulation.of(RawPair(p.side, p.w, cut(p.a), p.v, cut(p.b))
                             for p in relation if len(p.a) >= base_length)


def restrict_generated(relation: RawAsimulation, m1: KripkeModel, m2: KripkeModel,
                       start: RawPair) -> RawAsimulation:
    """
    Restrict to the generated submodels at the start worlds and move the
    start tuples into constants.

    Pairs are kept when both worlds lie above the start worlds and their
    tuples begin with the pushed start tuples; that prefix is then removed.
    The result relates ([M1, w1], c/a) and ([M2, w2], c/b) from the pair
    ((w1;), (w2;)).

    Raises:
        AsimulationError: If the start pair is not in the relation
    """
    if start not in relation:
        raise AsimulationError(f"start pair {start} is not in the relation")
    if start.side is not Side.FORWARD:
        raise AsimulationError("the start pair must go from the first model to the second")
    n = len(start.a)
    anchor = {Side.FORWARD: (m1, start.w, start.a, m2, start.v, start.b),
              Side.BACKWARD: (m2, start.v, start.b, m1, start.w, start.a)}

    kept = []
    for p in relation:
        source, s_root, s_tuple, target, t_root, t_tuple = anchor[p.side]
        if len(p.a) < n or not source.leq(s_root, p.w) or not target.leq(t_root, p.v):
            continue
        if p.a[:n] != source.push(s_root, p.w, s_tuple) or p.b[:n] != target.push(t_root, p.v, t_tuple):
            continue
        kept.append(RawPair(p.side, p.w, p.a[n:], p.v, p.b[n:]))
    return RawAsimulation.of(kept)


def _type_table(logic: Logic, m: KripkeModel, tuple_cap: int, rank_bound: int,
                cap: Optional[int]) -> Dict[Tuple[str, Tuple[Element, ...]], TypeSlice]:
    table = {}
    for w in m.worlds:
        for length in range(tuple_cap + 1):
            for elements in product(m.sorted_domain(w), repeat=length):
                table[(w, elements)] = type_slice(logic, m, w, elements, rank_bound, cap)
    return table


def relation_from_type_inclusion(logic: Logic, m1: KripkeModel, m2: KripkeModel,
                                 rank_bound: Optional[int] = None,
                                 tuple_cap: Optional[int] = None,
                                 cap: Optional[int] = None) -> RawAsimulation:
    """
    All pairs (in both directions) of equal-length tuples up to tuple_cap
    whose positive type slice at the source is included in the one at the
    target.

    The result is only a candidate: finite models need not realize their
    types, so check it with check_type_inclusion_relation.
    """
    rank_bound = config.rank_bound if rank_bound is None else rank_bound
    tuple_cap = config.tuple_cap if tuple_cap is None else tuple_cap
    tables = {1: _type_table(logic, m1, tuple_cap, rank_bound, cap),
              2: _type_table(logic, m2, tuple_cap, rank_bound, cap)}

    pairs = []
    for side in (Side.FORWARD, Side.BACKWARD):
        src, tgt = (tables[1], tables[2]) if side is Side.FORWARD else (tables[2], tables[1])
        for (w, a), source_type in sorted(src.items()):
            for (v, b), target_type in sorted(tgt.items()):
                if len(a) == len(b) and source_type.positive_included_in(target_type):
                    pairs.append(RawPair(side, w, a, v, b))
    return RawAsimulation.of(pairs)


def check_type_inclusion_relation(logic: Logic, m1: KripkeModel, w1: str,
                                  m2: KripkeModel, w2: str,
                                  rank_bound: Optional[int] = None,
                                  tuple_cap: Optional[int] = None) -> Optional[AsimCheck]:
    """
    Build the type-inclusion relation and check it from ((w1;), (w2;)).

    Returns:
        The check outcome, or None when the start pair is not related.
        Failures are logged as saturation gaps.
    """
    relation = relation_from_type_inclusion(logic, m1, m2, rank_bound, tuple_cap)
    start = RawPair(Side.FORWARD, w1, (), w2, ())
    if start not in relation:
        return None
    outcome = check_asimulation_raw(logic, m1, m2, relation, start, tuple_cap)
    if not outcome:
        logger.warning(f"saturation gap: type inclusion is not an asimulation ({outcome})")
    return outcome
