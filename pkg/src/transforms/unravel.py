"""Intuitionistic unravellings around a world.

Worlds of the unravelling are chains from the root, written as paths
"w>v>u"; the element a of the last world, copied to the path s, is
Element(s, a.name) and prints as "a@w>v>u".
"""

import logging
import re
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Tuple

from src.errors import ModelConstructionError, PreconditionError, UsageError
from src.kripke.model import Element, KripkeModel
from src.asimulation.raw import RawAsimulation, RawPair, Side

logger = logging.getLogger(__name__)

PATH_SEPARATOR = '>'

_MODE = re.compile(r'^(strict|bounded)(?::(\d+))?$')


@dataclass(frozen=True)
class UnravelMode:
    """strict: strictly ascending chains; bounded(k): chains with repeats, length <= k"""

    kind: str = 'strict'
    depth: Optional[int] = None

    @classmethod
    def strict(cls) -> 'UnravelMode':
        return cls('strict')

    @classmethod
    def bounded(cls, k: int) -> 'UnravelMode':
        if not isinstance(k, int) or k < 1:
            raise PreconditionError(f"bounded unravelling needs depth k >= 1, got {k}")
        return cls('bounded', k)

    @classmethod
    def parse(cls, text: str, depth: Optional[int] = None) -> 'UnravelMode':
        """Read 'strict', 'bounded:k' or 'bounded' with a separate depth"""
        match = _MODE.match(text.strip())
        if not match:
            raise UsageError(f"unknown unravelling mode '{text}' (use strict or bounded:k)")
        if match.group(1) == 'strict':
            return cls.strict()
        k = int(match.group(2)) if match.group(2) else depth
        if k is None:
            raise UsageError("bounded unravelling needs a depth")
        return cls.bounded(k)

    def __str__(self):
        return 'strict' if self.kind == 'strict' else f"bounded:{self.depth}"


def path_name(path: Tuple[str, ...]) -> str:
    return PATH_SEPARATOR.join(path)


def last_world(path: str) -> str:
    """The base world a sequence-world ends in"""
    return path.split(PATH_SEPARATOR)[-1]


def _sequences(m: KripkeModel, w: str, mode: UnravelMode) -> List[Tuple[str, ...]]:
    found = []
    stack = [(w,)]
    while stack:
        path = stack.pop()
        found.append(path)
        if mode.kind == 'bounded' and len(path) >= mode.depth:
            continue
        nexts = m.successors(path[-1]) if mode.kind == 'bounded' else m.strict_successors(path[-1])
        stack.extend(path + (v,) for v in nexts)
    return sorted(found)


def unravel(m: KripkeModel, w: str, mode: UnravelMode = UnravelMode()) -> KripkeModel:
    """
    Unravel m around w.

    Args:
        m: Model (world names must not contain '>')
        w: Root world
        mode: Strict or bounded chains

    Returns:
        Tree-shaped model rooted at the one-element path (w) ordered by
        prefix; structures, constants and homs are copied from the last
        world of each path

    Raises:
        UnknownWorldError: If w is not a world
        ModelConstructionError: If a world name contains the separator
    """
    m.check_world(w)
    if any(PATH_SEPARATOR in u for u in m.worlds):
        raise ModelConstructionError(f"world names may not contain '{PATH_SEPARATOR}'")

    paths = _sequences(m, w, mode)
    names = {p: path_name(p) for p in paths}

    def tag(a: Element, path: Tuple[str, ...]) -> Element:
        return Element(names[path], a.name)

    order = set()
    for p in paths:
        for q in paths:
            if q[:len(p)] == p:
                order.add((names[p], names[q]))

    domains = {names[p]: {tag(a, p) for a in m.domains[p[-1]]} for p in paths}
    predicates = {
        names[p]: {pred: {tuple(tag(a, p) for a in args) for args in m.extension(p[-1], pred)}
                   for pred in m.signature.predicate_names}
        for p in paths
    }
    constants = {names[p]: {c: tag(m.constant(p[-1], c), p) for c in m.signature.constants}
                 for p in paths}
    homs = {}
    for p in paths:
        for q in paths:
            if q[:len(p)] == p:
                step = m.hom(p[-1], q[-1])
                homs[(names[p], names[q])] = {tag(a, p): tag(step[a], q) for a in m.domains[p[-1]]}

    logger.debug("unravelled %s around %s into %d sequence-worlds", mode, w, len(paths))
    return KripkeModel.build(m.signature, names.values(), order, domains, predicates,
                             constants, homs, close_order=False, compose_homs=False)


def unravelling_relation(m: KripkeModel, w: str, unravelled: KripkeModel,
                         max_length: int) -> RawAsimulation:
    """
    The relation pairing (u; a) with (s; a copied to s) for every path s
    ending in u, in both directions, for tuples up to max_length.

    It is an asimulation from (m, w) to (unravelled, w) and back when the
    unravelling is strict; bounded unravellings lack successors at full-length
    paths.
    """
    m.check_world(w)
    pairs = []
    for s in unravelled.worlds:
        u = last_world(s)
        for length in range(max_length + 1):
            for a in product(m.sorted_domain(u), repeat=length):
                copied = tuple(Element(s, e.name) for e in a)
                pairs.append(RawPair(Side.FORWARD, u, a, s, copied))
                pairs.append(RawPair(Side.BACKWARD, s, copied, u, a))
    return RawAsimulation.of(pairs)


def corresponding_worlds(unravelled: KripkeModel) -> Dict[str, str]:
    """Sequence-world -> base world"""
    return {s: last_world(s) for s in unravelled.worlds}


def copy_tuple(path: str, elements) -> Tuple[Element, ...]:
    return tuple(Element(path, e.name) for e in elements)
