"""Seeded random model generation.

Elements are grown from integer labels born at worlds. A label lives at
every world above its birth world; the domain at a world is the set of
classes of an equivalence on the labels present there, which must contain
the equivalence of every predecessor (so homomorphisms are well defined).
Class requirements shape births and merges:

    any  births anywhere, random merges
    In   no merges, so every homomorphism is injective
    Su   births at minimal worlds only, classes repaired to meet every
         predecessor
    Bi   rooted frame, births at the root only, no merges
"""

import logging
import random
from dataclasses import dataclass, field
from functools import wraps
from itertools import product
from typing import Dict, List, Mapping, Sequence, Set, Tuple

import networkx as nx

from src.config import config
from src.errors import GenerationError, PreconditionError
from src.kripke.model import Element, KripkeModel
from src.kripke.validation import classify_model, validate_model
from src.syntax.signature import Signature

logger = logging.getLogger(__name__)

MODEL_CLASSES = ('any', 'In', 'Su', 'Bi')


def retry_on_failure(max_retries=None):
    """
    Decorator for regenerating with derived seeds.

    The wrapped function takes the seed as its first argument. Attempt k
    reruns it with a seed derived from the original one, so the whole retry
    sequence stays a pure function of the caller's seed.
    """
    def decorator(func):
        @wraps(func)
        def wrapper(seed, *args, **kwargs):
            attempts = max_retries if max_retries is not None else config.max_retries
            for attempt in range(attempts):
                try:
                    return func(seed if attempt == 0 else _derive(seed, attempt), *args, **kwargs)
                except GenerationError as e:
                    if attempt == attempts - 1:
                        logger.info(f"Failed after {attempts} attempts: {e}")
                        raise
                    logger.info(f"Attempt {attempt + 1} failed ({e}), regenerating...")
            return None
        return wrapper
    return decorator


def _derive(seed: int, attempt: int) -> int:
    return (seed * 1000003 + attempt * 7919) & 0xFFFFFFFF


@dataclass(frozen=True)
class GeneratorParams:
    max_worlds: int = 3
    max_domain: int = 3
    preds: Mapping[str, int] = field(default_factory=lambda: {'P': 1})
    consts: Sequence[str] = ()
    cls: str = 'any'
    equality: bool = False
    rooted: bool = False
    density: float = 0.3

    def check(self) -> None:
        if self.max_worlds < 1 or self.max_domain < 1:
            raise PreconditionError("max_worlds and max_domain must be positive")
        if self.cls not in MODEL_CLASSES:
            raise PreconditionError(f"unknown model class '{self.cls}'")

    def signature(self) -> Signature:
        return Signature.create(dict(self.preds), self.consts, self.equality)


def generate_random_model(seed: int, params: GeneratorParams = GeneratorParams()) -> KripkeModel:
    """
    Draw a valid model of the requested class.

    Args:
        seed: Seed; equal seeds give structurally identical models
        params: Size limits, signature and class

    Returns:
        KripkeModel passing validate_model and classify_model's class test

    Raises:
        GenerationError: If no attempt within config.max_retries succeeds
    """
    params.check()
    return _generate(seed, params)


@retry_on_failure()
def _generate(seed: int, params: GeneratorParams) -> KripkeModel:
    rng = random.Random(seed)
    signature = params.signature()
    cls = params.cls

    count = rng.randint(1, params.max_worlds)
    worlds = [f"w{i}" for i in range(count)]
    frame = nx.DiGraph()
    frame.add_nodes_from(worlds)
    rooted = params.rooted or cls == 'Bi'
    for i, j in product(range(count), repeat=2):
        if i < j and (rng.random() < 0.4 or (rooted and i == 0)):
            frame.add_edge(worlds[i], worlds[j])
    closure = nx.transitive_closure_dag(frame)
    below = {w: sorted(closure.predecessors(w)) for w in worlds}
    minimal = {w for w in worlds if not below[w]}

    present: Dict[str, Set[int]] = {}
    classes: Dict[str, List[frozenset]] = {}
    constant_labels: Dict[str, Set[int]] = {c: set() for c in signature.constants}
    next_label = 0

    for w in worlds:
        inherited = set().union(*(present[u] for u in below[w])) if below[w] else set()
        joined = nx.Graph()
        joined.add_nodes_from(inherited)
        for u in below[w]:
            for cell in classes[u]:
                members = sorted(cell)
                joined.add_edges_from(zip(members, members[1:]))
        base_count = nx.number_connected_components(joined)

        if w in minimal:
            births = rng.randint(1, params.max_domain)
        elif cls in ('Su', 'Bi'):
            births = 0
        else:
            births = rng.randint(0, max(0, params.max_domain - base_count))

        new = list(range(next_label, next_label + births))
        next_label += births
        joined.add_nodes_from(new)
        present[w] = inherited | set(new)

        if w in minimal:
            for c in sorted(signature.constants):
                label = rng.choice(new)
                constant_labels[c].add(label)
        for c in sorted(signature.constants):
            here = sorted(constant_labels[c] & present[w])
            joined.add_edges_from(zip(here, here[1:]))

        if cls == 'any':
            nodes = sorted(present[w])
            for a, b in zip(nodes, nodes[1:]):
                if rng.random() < 0.15:
                    joined.add_edge(a, b)
        elif cls == 'Su':
            _cover_predecessors(rng, joined, w, below[w], present)

        cells = [frozenset(cell) for cell in nx.connected_components(joined)]
        if len(cells) > params.max_domain:
            raise GenerationError(f"domain at {w} has {len(cells)} elements")
        classes[w] = sorted(cells, key=min)

    model = _assemble(rng, signature, worlds, closure, classes, constant_labels, params.density)

    problems = validate_model(model)
    if problems:
        raise GenerationError(f"generated model is invalid: {problems[0]}")
    flags = classify_model(model)
    wanted = {'any': True, 'In': flags.in_class, 'Su': flags.su_class, 'Bi': flags.bi_class}
    if not wanted[cls]:
        raise GenerationError(f"generated model is not in class {cls}")
    return model


def _cover_predecessors(rng, joined: nx.Graph, w: str, below: List[str],
                        present: Dict[str, Set[int]]) -> None:
    """Merge classes until every class at w meets every predecessor's labels"""
    changed = True
    while changed:
        changed = False
        cells = [set(cell) for cell in nx.connected_components(joined)]
        for u in below:
            if not present[u]:
                continue
            covering = [cell for cell in cells if cell & present[u]]
            for cell in cells:
                if not cell & present[u]:
                    target = rng.choice(covering)
                    joined.add_edge(min(cell), min(target))
                    changed = True
                    break
            if changed:
                break


def _assemble(rng, signature: Signature, worlds: List[str], closure: nx.DiGraph,
              classes: Dict[str, List[frozenset]], constant_labels: Dict[str, Set[int]],
              density: float) -> KripkeModel:
    element_of: Dict[str, Dict[int, Element]] = {}
    domains = {}
    for w in worlds:
        element_of[w] = {}
        for cell in classes[w]:
            e = Element(w, f"a{min(cell)}")
            for label in cell:
                element_of[w][label] = e
        domains[w] = sorted(set(element_of[w].values()))

    order = {(w, w) for w in worlds} | set(closure.edges())
    homs = {}
    for w, v in order:
        homs[(w, v)] = {element_of[w][min(cell)]: element_of[v][min(cell)] for cell in classes[w]}

    constants = {}
    for w in worlds:
        constants[w] = {}
        for c in sorted(signature.constants):
            labels = constant_labels[c] & set(element_of[w])
            if not labels:
                raise GenerationError(f"constant {c} has no denotation at {w}")
            constants[w][c] = element_of[w][min(labels)]

    predicates: Dict[str, Dict[str, Set[Tuple[Element, ...]]]] = {}
    for w in worlds:
        table = {}
        for name, arity in signature.predicates:
            extension = set()
            for u in sorted(closure.predecessors(w)):
                for args in predicates[u][name]:
                    extension.add(tuple(homs[(u, w)][a] for a in args))
            for args in product(domains[w], repeat=arity):
                if rng.random() < density:
                    extension.add(args)
            table[name] = extension
        predicates[w] = table

    return KripkeModel.build(signature, worlds, order, domains, predicates, constants, homs,
                             close_order=False, compose_homs=False)


def random_tuple(rng: random.Random, m: KripkeModel, w: str, length: int) -> Tuple[Element, ...]:
    """Uniform tuple from A_w (empty when A_w is empty and length is 0)"""
    domain = m.sorted_domain(w)
    if length and not domain:
        raise GenerationError(f"cannot draw a tuple from the empty domain at '{w}'")
    return tuple(rng.choice(domain) for _ in range(length))
