"""Congruences on Kripke models and the quotients they induce"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from src.errors import CongruenceError
from src.kripke.model import Element, KripkeModel
from src.kripke.validation import Diagnostic, validate_model
from src.semantics.evaluator import is_valid_in
from src.semantics.logics import Logic, check_admissible
from src.syntax.formula import And, Atom, Formula, Forall, Implies, Var, conjunction
from src.syntax.printer import print_formula
from src.syntax.signature import Signature, fresh_variables
from src.asimulation.raw import RawAsimulation, RawPair, Side

logger = logging.getLogger(__name__)

Block = FrozenSet[Element]


@dataclass(frozen=True)
class Congruence:
    """A partition of A_w for every world w"""

    classes: Mapping[str, FrozenSet[Block]]

    @classmethod
    def diagonal(cls, m: KripkeModel) -> 'Congruence':
        return cls({w: frozenset(frozenset({a}) for a in m.domains[w]) for w in m.worlds})

    @classmethod
    def from_pairs(cls, m: KripkeModel, pairs: Iterable[Tuple[Element, Element]]) -> 'Congruence':
        """Least per-world equivalence containing pairs (same-world pairs only)"""
        graphs = {w: nx.Graph() for w in m.worlds}
        for w in m.worlds:
            graphs[w].add_nodes_from(m.domains[w])
        for a, b in pairs:
            if a.world != b.world:
                raise CongruenceError(f"{a} and {b} live at different worlds")
            m.check_world(a.world)
            graphs[a.world].add_edge(a, b)
        return cls({w: frozenset(frozenset(c) for c in nx.connected_components(g))
                    for w, g in graphs.items()})

    def block(self, a: Element) -> Block:
        for c in self.classes.get(a.world, ()):
            if a in c:
                return c
        raise CongruenceError(f"{a} is not covered by the congruence")

    def related(self, a: Element, b: Element) -> bool:
        return a.world == b.world and b in self.block(a)

    def pairs(self, w: str) -> List[Tuple[Element, Element]]:
        return sorted((a, b) for c in self.classes.get(w, ()) for a in c for b in c)

    def is_diagonal(self) -> bool:
        return all(len(c) == 1 for blocks in self.classes.values() for c in blocks)

    def describe(self) -> str:
        lines = []
        for w in sorted(self.classes):
            blocks = sorted(sorted(e.name for e in c) for c in self.classes[w])
            lines.append(f"  {w}: " + ' '.join('{' + ','.join(b) + '}' for b in blocks))
        return '\n'.join(lines)


def _fresh_predicate(sig: Signature, base: str = 'Approx') -> str:
    name, i = base, 0
    while name in sig.symbols():
        i += 1
        name = f"{base}{i}"
    return name


def congruence_axioms(sig: Signature, relation_name: str) -> List[Tuple[str, Formula]]:
    """
    Sentences saying that relation_name is a congruence: reflexivity,
    symmetry, transitivity and compatibility with each predicate.
    """
    def r(x, y):
        return Atom(relation_name, (Var(x), Var(y)))

    def closed(variables, body):
        for v in reversed(variables):
            body = Forall(v, body)
        return body

    x, y, z = fresh_variables(3, avoid=sig.symbols())
    axioms = [
        ('refl', Forall(x, r(x, x))),
        ('symm', closed([x, y], Implies(r(x, y), r(y, x)))),
        ('trans', closed([x, y, z], Implies(And(r(x, y), r(y, z)), r(x, z)))),
    ]
    for name, arity in sig.predicates:
        names = fresh_variables(2 * arity, avoid=sig.symbols())
        xs, ys = names[:arity], names[arity:]
        premise = conjunction([r(a, b) for a, b in zip(xs, ys)] + [Atom(name, tuple(map(Var, xs)))])
        axioms.append((f"compat-{name}",
                       closed(xs + ys, Implies(premise, Atom(name, tuple(map(Var, ys)))))))
    return axioms


def _with_relation(m: KripkeModel, cong: Congruence, name: str) -> KripkeModel:
    signature = m.signature.with_predicates({name: 2})
    predicates = {w: dict(m.predicates[w]) for w in m.worlds}
    for w in m.worlds:
        predicates[w][name] = cong.pairs(w)
    return KripkeModel.build(signature, m.worlds, m.order, m.domains, predicates,
                             m.constants, m.homs, close_order=False, compose_homs=False)


def check_congruence(logic: Logic, m: KripkeModel, cong: Congruence) -> Tuple[bool, List[Diagnostic]]:
    """
    Check a per-world partition as a congruence on m.

    The partition is adjoined as a fresh binary predicate; the expansion must
    be a model (monotone under the homs) and validate the congruence axioms.
    Under logics with equality the partition must also be diagonal.

    Returns:
        (ok, diagnostics naming the failing law or axiom)
    """
    check_admissible(logic, m)
    problems: List[Diagnostic] = []

    for w in m.worlds:
        blocks = cong.classes.get(w, frozenset())
        covered = [a for c in blocks for a in c]
        if sorted(covered) != m.sorted_domain(w) or any(not c for c in blocks):
            problems.append(Diagnostic('totality', f"classes at '{w}' do not partition its domain",
                                       (w,)))
    if problems:
        return False, problems

    name = _fresh_predicate(m.signature)
    expanded = _with_relation(m, cong, name)
    for d in validate_model(expanded):
        problems.append(Diagnostic('hom-monotonicity', d.message, d.witnesses))

    equality_free = logic.equality_free()
    for law, axiom in congruence_axioms(m.signature, name):
        if not is_valid_in(equality_free, expanded, axiom):
            problems.append(Diagnostic(law, f"axiom fails: {print_formula(axiom)}", ()))

    if logic.with_equality and not cong.is_diagonal():
        problems.append(Diagnostic('diagonal', "logics with equality only admit the diagonal", ()))

    if problems:
        logger.debug("congruence rejected: %s", '; '.join(str(p) for p in problems))
    return not problems, problems


def coarsest_congruence(m: KripkeModel) -> Congruence:
    """
    Greatest congruence by partition refinement.

    Elements start grouped by their predicate profile (membership of every
    tuple obtained by putting the element in one place); blocks are then
    split until equivalent elements have equivalent images under every hom.
    """
    block_id: Dict[Element, Tuple] = {}
    for w in m.worlds:
        domain = m.sorted_domain(w)
        for a in domain:
            profile = []
            for pred, arity in m.signature.predicates:
                for i in range(arity):
                    for rest in product(domain, repeat=arity - 1):
                        args = rest[:i] + (a,) + rest[i:]
                        profile.append(m.holds_atom(w, pred, args))
            block_id[a] = tuple(profile)

    while True:
        refined = {}
        for w in m.worlds:
            for a in m.domains[w]:
                images = tuple(block_id[m.hom(w, v)[a]] for v in m.strict_successors(w))
                refined[a] = (block_id[a], images)
        if _count_blocks(refined) == _count_blocks(block_id):
            break
        block_id = refined

    return _from_ids(m, block_id)


def _count_blocks(ids: Mapping[Element, Tuple]) -> int:
    return len({(a.world, key) for a, key in ids.items()})


def _from_ids(m: KripkeModel, ids: Mapping[Element, Tuple]) -> Congruence:
    classes = {}
    for w in m.worlds:
        groups: Dict[Tuple, set] = {}
        for a in m.domains[w]:
            groups.setdefault(ids[a], set()).add(a)
        classes[w] = frozenset(frozenset(g) for g in groups.values())
    return Congruence(classes)


def upset_congruence(m: KripkeModel, worlds: Iterable[str]) -> Congruence:
    """The coarsest congruence on the up-closure of worlds, diagonal elsewhere"""
    upset = {v for w in worlds for v in m.successors(w)}
    coarse = coarsest_congruence(m)
    diagonal = Congruence.diagonal(m)
    return Congruence({w: (coarse if w in upset else diagonal).classes[w] for w in m.worlds})


def _class_name(block: Block) -> str:
    return '[' + ','.join(sorted(e.name for e in block)) + ']'


def quotient_with_map(logic: Logic, m: KripkeModel,
                      cong: Congruence) -> Tuple[KripkeModel, Dict[Element, Element]]:
    """
    M/~ together with the map sending each element to its class.

    Classes are elements named "[a1,a2]" at the same world; predicates,
    constants and homs are lifted from representatives.

    Raises:
        CongruenceError: If cong is not a congruence on m
    """
    ok, problems = check_congruence(logic, m, cong)
    if not ok:
        raise CongruenceError(f"not a congruence: {problems[0]}")

    g = {a: Element(a.world, _class_name(cong.block(a))) for a in m.all_elements()}
    domains = {w: {g[a] for a in m.domains[w]} for w in m.worlds}
    predicates = {w: {name: {tuple(g[a] for a in args) for args in m.extension(w, name)}
                      for name in m.signature.predicate_names}
                  for w in m.worlds}
    constants = {w: {c: g[e] for c, e in m.constants[w].items()} for w in m.worlds}
    homs = {(w, v): {g[a]: g[b] for a, b in mapping.items()}
            for (w, v), mapping in m.homs.items()}
    quotient_model = KripkeModel.build(m.signature, m.worlds, m.order, domains, predicates,
                                       constants, homs, close_order=False, compose_homs=False)
    return quotient_model, g


def quotient(logic: Logic, m: KripkeModel, cong: Congruence) -> KripkeModel:
    return quotient_with_map(logic, m, cong)[0]


def quotient_relation(m: KripkeModel, g: Mapping[Element, Element], max_length: int,
                      worlds: Optional[Iterable[str]] = None) -> RawAsimulation:
    """{((w; a), (w; [a]))} in both directions, tuples up to max_length"""
    pairs = []
    for w in (worlds if worlds is not None else m.worlds):
        for length in range(max_length + 1):
            for a in product(m.sorted_domain(w), repeat=length):
                image = tuple(g[e] for e in a)
                pairs.append(RawPair(Side.FORWARD, w, a, w, image))
                pairs.append(RawPair(Side.BACKWARD, w, image, w, a))
    return RawAsimulation.of(pairs)
