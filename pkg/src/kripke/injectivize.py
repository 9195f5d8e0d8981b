"""Injectivization: an In-class model with the same frame and theory.

Each new element at w chooses, at the worlds below w, preimages of an old
element a; its projection to the old model is its value at w, and
predicates are pulled back along the projection. Three shapes of choice
are used:

    In input  every choice is forced, so the model is returned as it is
    Su input  threads: one element per world of a frame component,
              commuting with every hom, named by their values at the
              component's minimal worlds; homs act as the identity on
              threads, so the result is in Bi
    other     birth labels (o, b): b an element of A_o that is not the
              image of anything from a strictly earlier world; the label
              lives at every world above o with projection H_ow(b)

A Su model whose threads miss some element (a frame with a cycle of
incomparable worlds can do this) falls back to birth labels and leaves Su.
Under birth labels a constant whose denotations all come from one label
born at a root keeps that label; otherwise it gets its own element '#c'
present at every world.
"""

import logging
from itertools import product
from typing import Dict, List, Optional, Tuple

import networkx as nx

from src.errors import ModelConstructionError, SignatureError
from src.kripke.model import Element, KripkeModel
from src.kripke.validation import classify_model, require_valid

logger = logging.getLogger(__name__)

Thread = Dict[str, Element]


def births(m: KripkeModel) -> Dict[str, List[Element]]:
    """Elements at each world that are not images from a strict predecessor"""
    result = {}
    for o in m.worlds:
        inherited = set()
        for u in m.predecessors(o):
            if u != o:
                inherited.update(m.hom(u, o).values())
        result[o] = sorted(e for e in m.domains[o] if e not in inherited)
    return result


def threads(m: KripkeModel) -> List[Thread]:
    """
    Coherent threads of every frame component.

    A thread picks x[u] in A_u for each world u of a component with
    H_uv(x[u]) = x[v] whenever u <= v. It is fixed by its values at the
    component's minimal worlds, which are enumerated exhaustively.
    """
    frame = nx.Graph()
    frame.add_nodes_from(m.worlds)
    frame.add_edges_from((u, v) for u, v in m.order if u != v)
    minimal = set(m.minimal_worlds())

    result = []
    for component in sorted(nx.connected_components(frame), key=min):
        worlds = sorted(component)
        bottoms = [o for o in worlds if o in minimal]
        for choice in product(*(m.sorted_domain(o) for o in bottoms)):
            thread = _extend(m, worlds, dict(zip(bottoms, choice)))
            if thread is not None:
                result.append(thread)
    return result


def _extend(m: KripkeModel, worlds: List[str], chosen: Thread) -> Optional[Thread]:
    thread = {}
    for v in worlds:
        values = {m.hom(o, v)[e] for o, e in chosen.items() if m.leq(o, v)}
        if len(values) != 1:
            return None
        thread[v] = values.pop()
    return thread


def _label(origin: str, e: Element) -> str:
    return f"{origin}:{e.name}"


def injectivize_with_projection(m: KripkeModel) -> Tuple[KripkeModel, Dict[Element, Element]]:
    """
    Injectivize m and report the projection onto m.

    Args:
        m: Valid model over an equality-free signature

    Returns:
        (model in the In class, projection from its elements to m's
        elements at the same world); the model is in Su whenever m is,
        unless m's threads miss an element

    Raises:
        SignatureError: If the signature has equality
        PreconditionError: If m is invalid
    """
    if m.signature.with_equality:
        raise SignatureError("injectivize is unsound with equality in the signature")
    require_valid(m)

    flags = classify_model(m)
    if flags.in_class:
        return m, {e: e for e in m.all_elements()}

    parts = None
    if flags.su_class:
        parts = _thread_parts(m)
        if parts is None:
            logger.warning("threads miss some element; injectivized model leaves Su")
    if parts is None:
        parts = _birth_parts(m)

    domains, projection, constants = parts
    result = _assemble(m, domains, projection, constants)
    logger.debug("injectivized %d elements into %d", len(m.all_elements()), len(projection))
    return result, projection


def _thread_parts(m: KripkeModel):
    minimal = set(m.minimal_worlds())
    found = threads(m)
    for w in m.worlds:
        if {t[w] for t in found if w in t} != set(m.domains[w]):
            return None

    domains: Dict[str, set] = {w: set() for w in m.worlds}
    projection: Dict[Element, Element] = {}
    names = []
    for thread in found:
        name = ','.join(_label(o, thread[o]) for o in sorted(thread) if o in minimal)
        names.append(name)
        for w, a in thread.items():
            e = Element(w, name)
            domains[w].add(e)
            projection[e] = a

    constants: Dict[str, Dict[str, Element]] = {w: {} for w in m.worlds}
    for c in sorted(m.signature.constants):
        for thread, name in zip(found, names):
            if all(m.constant(u, c) == a for u, a in thread.items()):
                for w in thread:
                    constants[w][c] = Element(w, name)
    return domains, projection, constants


def _birth_parts(m: KripkeModel):
    born = births(m)
    labels: Dict[str, List[Tuple[str, Element]]] = {w: [] for w in m.worlds}
    for o in m.worlds:
        for b in born[o]:
            for w in m.successors(o):
                labels[w].append((o, b))

    domains: Dict[str, set] = {w: set() for w in m.worlds}
    projection: Dict[Element, Element] = {}
    for w in m.worlds:
        for o, b in labels[w]:
            e = Element(w, _label(o, b))
            if e in projection:
                raise ModelConstructionError(f"label clash for {e}")
            domains[w].add(e)
            projection[e] = m.hom(o, w)[b]

    constants: Dict[str, Dict[str, Element]] = {w: {} for w in m.worlds}
    roots = [o for o in m.minimal_worlds() if m.is_rooted_at(o)]
    for c in sorted(m.signature.constants):
        if roots:
            origin = roots[0]
            name = _label(origin, m.constant(origin, c))
        else:
            name = f"#{c}"
        for w in m.worlds:
            e = Element(w, name)
            if e not in domains[w]:
                domains[w].add(e)
                projection[e] = m.constant(w, c)
            constants[w][c] = e
    return domains, projection, constants


def _assemble(m: KripkeModel, domains, projection, constants) -> KripkeModel:
    predicates = {}
    for w in m.worlds:
        elems = sorted(domains[w])
        table = {}
        for name, arity in m.signature.predicates:
            extension = m.extension(w, name)
            table[name] = {args for args in product(elems, repeat=arity)
                           if tuple(projection[a] for a in args) in extension}
        predicates[w] = table

    homs = {}
    for w, v in m.order:
        homs[(w, v)] = {e: Element(v, e.name) for e in domains[w]}

    return KripkeModel.build(m.signature, m.worlds, m.order, domains, predicates,
                             constants, homs, close_order=False, compose_homs=False)


def injectivize(m: KripkeModel) -> KripkeModel:
    """Injectivized copy of m (see injectivize_with_projection)"""
    return injectivize_with_projection(m)[0]
