"""Isomorphic correction of elementary embeddings"""

import logging
from typing import Dict, Mapping, Optional, Tuple

from src.errors import EmbeddingError
from src.kripke.algebra import check_isomorphism, submodel_violations
from src.kripke.model import Element, KripkeModel
from src.semantics.logics import Logic
from src.semantics.theories import check_elementary_embedding_upto, embedding_violations

logger = logging.getLogger(__name__)


def _primed(name: str, taken) -> str:
    candidate = name + "'"
    while candidate in taken:
        candidate += "'"
    return candidate


def isomorphic_correction(logic: Logic, m: KripkeModel, n: KripkeModel,
                          g: Mapping[Element, Element], h: Mapping[str, str],
                          rank_bound: Optional[int] = None,
                          tuple_cap: Optional[int] = None
                          ) -> Tuple[KripkeModel, Dict[Element, Element], Dict[str, str]]:
    """
    Extend m to a model m' isomorphic to n along (g', h') extending (g, h).

    Worlds and elements of n outside the images of h and g get fresh primed
    carriers in m'; everything else about m' is pulled back from n.

    Args:
        logic: Logic for the elementary check
        m, n: Models over the same signature
        g, h: Embedding of m into n
        rank_bound, tuple_cap: Slice precision of the elementary check

    Returns:
        (m', g', h') with m a submodel of m' and (g', h') an isomorphism

    Raises:
        EmbeddingError: If (g, h) is not elementary or the correction fails
    """
    problems = embedding_violations(m, n, g, h)
    if problems:
        raise EmbeddingError(f"not an embedding: {', '.join(problems)}")
    if not check_elementary_embedding_upto(logic, m, n, g, h, rank_bound, tuple_cap):
        raise EmbeddingError("the embedding is not elementary at the working rank")

    back_world = {h[w]: w for w in m.worlds}
    taken_worlds = set(m.worlds)
    for u in n.worlds:
        if u not in back_world:
            back_world[u] = _primed(u, taken_worlds)
            taken_worlds.add(back_world[u])

    back = {g[a]: a for a in m.all_elements()}
    for e in n.all_elements():
        if e not in back:
            world = back_world[e.world]
            taken = {a.name for a in back.values() if a.world == world}
            back[e] = Element(world, _primed(e.name, taken))

    worlds = [back_world[u] for u in n.worlds]
    order = {(back_world[u], back_world[v]) for u, v in n.order}
    domains = {back_world[u]: {back[e] for e in n.domains[u]} for u in n.worlds}
    predicates = {back_world[u]: {name: {tuple(back[e] for e in args) for args in n.extension(u, name)}
                                  for name in n.signature.predicate_names}
                  for u in n.worlds}
    constants = {back_world[u]: {c: back[e] for c, e in n.constants[u].items()} for u in n.worlds}
    homs = {(back_world[u], back_world[v]): {back[a]: back[b] for a, b in mapping.items()}
            for (u, v), mapping in n.homs.items()}
    corrected = KripkeModel.build(m.signature, worlds, order, domains, predicates, constants,
                                  homs, close_order=False, compose_homs=False)

    g2 = {a: e for e, a in back.items()}
    h2 = {w: u for u, w in back_world.items()}
    violations = submodel_violations(m, corrected)
    if violations:
        raise EmbeddingError(f"m is not a submodel of its correction: {violations[0]}")
    if not check_isomorphism(corrected, n, g2, h2):
        raise EmbeddingError("the corrected maps are not an isomorphism")
    logger.debug("correction adjoined %d worlds and %d elements",
                 len(n.worlds) - len(m.worlds), len(back) - len(g))
    return corrected, g2, h2
