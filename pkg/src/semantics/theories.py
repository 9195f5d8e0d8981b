"""Rank-bounded theories and types, pair satisfaction, elementary submodels
and elementary embeddings."""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.config import config
from src.errors import PreconditionError
from src.kripke.algebra import constant_extension, submodel_violations
from src.kripke.model import Element, KripkeModel
from src.semantics.enumeration import enumerate_sentences
from src.semantics.evaluator import Evaluator
from src.semantics.logics import Logic
from src.syntax.formula import Formula
from src.syntax.printer import print_formula
from src.syntax.signature import Signature, fresh_constants

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TheorySlice:
    """
    Th+ / Th- restricted to the canonical sentence family at rank d.

    Two slices over the same signature, rank and cap partition the same
    sentence family, so comparing them compares the theories at that
    precision.
    """

    positive: FrozenSet[Formula]
    negative: FrozenSet[Formula]
    rank_bound: int
    cap: int
    signature: Signature

    @property
    def sentences(self) -> FrozenSet[Formula]:
        return self.positive | self.negative

    def positive_included_in(self, other: 'TheorySlice') -> bool:
        self._check_comparable(other)
        return self.positive <= other.positive

    def separating_sentences(self, other: 'TheorySlice') -> List[Formula]:
        """Sentences true here and false in other, smallest first"""
        self._check_comparable(other)
        return sorted(self.positive & other.negative, key=lambda f: (f.size(), print_formula(f)))

    def same_theory(self, other: 'TheorySlice') -> bool:
        self._check_comparable(other)
        return self.positive == other.positive

    def _check_comparable(self, other: 'TheorySlice') -> None:
        if (self.signature, self.rank_bound, self.cap) != (other.signature, other.rank_bound, other.cap):
            raise PreconditionError(
                f"slices over {self.signature.describe()} (d={self.rank_bound}, K={self.cap}) "
                f"and {other.signature.describe()} (d={other.rank_bound}, K={other.cap}) "
                f"are not comparable"
            )

    def restrict(self, sig: Signature) -> 'TheorySlice':
        """Sentences over a subsignature; keeps rank and cap"""
        def inside(f):
            preds = f.predicates()
            return (all(sig.has_predicate(p) for p in preds)
                    and f.constants() <= sig.constants
                    and (sig.with_equality or not f.uses_equality()))
        return TheorySlice(frozenset(filter(inside, self.positive)),
                           frozenset(filter(inside, self.negative)),
                           self.rank_bound, self.cap, sig)


@dataclass(frozen=True)
class TypeSlice(TheorySlice):
    """Theory slice of the constant extension ([M, w], c/a)"""

    constants: Tuple[str, ...] = ()
    elements: Tuple[Element, ...] = field(default=(), compare=False)


@dataclass(frozen=True)
class FormulaPair:
    """(gamma, delta): gamma to be satisfied, delta to be falsified"""

    gamma: FrozenSet[Formula] = frozenset()
    delta: FrozenSet[Formula] = frozenset()

    @classmethod
    def of(cls, gamma: Iterable[Formula] = (), delta: Iterable[Formula] = ()) -> 'FormulaPair':
        return cls(frozenset(gamma), frozenset(delta))

    def __le__(self, other: 'FormulaPair') -> bool:
        return self.gamma <= other.gamma and self.delta <= other.delta

    def __lt__(self, other: 'FormulaPair') -> bool:
        return self <= other and self != other

    def formulas(self) -> FrozenSet[Formula]:
        return self.gamma | self.delta


def slice_parameters(rank_bound: Optional[int], cap: Optional[int]) -> Tuple[int, int]:
    return (config.rank_bound if rank_bound is None else rank_bound,
            config.sentence_cap if cap is None else cap)


def language(logic: Logic, sig: Signature) -> Signature:
    """The signature as a language of logic (equality flag from the logic)"""
    return sig.with_equality_flag(logic.with_equality)


def theory_slice(logic: Logic, m: KripkeModel, w: str,
                 rank_bound: Optional[int] = None,
                 cap: Optional[int] = None,
                 evaluator: Optional[Evaluator] = None) -> TheorySlice:
    """
    Partition the canonical sentence family by truth at (m, w).

    Args:
        logic: Logic (admissibility is checked)
        m: Model
        w: World
        rank_bound: d (default config.rank_bound)
        cap: Sentence cap K (default config.sentence_cap)
        evaluator: Evaluator for m to share its memo table

    Returns:
        TheorySlice
    """
    rank_bound, cap = slice_parameters(rank_bound, cap)
    m.check_world(w)
    evaluator = evaluator or Evaluator(logic, m)
    sig = language(logic, m.signature)
    positive, negative = set(), set()
    for sentence in enumerate_sentences(sig, rank_bound, cap):
        (positive if evaluator.holds(w, sentence, {}) else negative).add(sentence)
    return TheorySlice(frozenset(positive), frozenset(negative), rank_bound, cap, sig)


def type_slice(logic: Logic, m: KripkeModel, w: str,
               elements: Sequence[Element] = (),
               rank_bound: Optional[int] = None,
               cap: Optional[int] = None,
               constants: Optional[Sequence[str]] = None) -> TypeSlice:
    """
    Theory slice of the canonical constant extension ([M, w], c/a).

    Args:
        constants: Fresh constant names (default c1..cn, fresh for m)

    Raises:
        SignatureError, PreconditionError: As constant_extension
    """
    elements = tuple(elements)
    if constants is None:
        constants = fresh_constants(m.signature, len(elements))
    extended = constant_extension(m, w, constants, elements)
    base = theory_slice(logic, extended, w, rank_bound, cap)
    return TypeSlice(base.positive, base.negative, base.rank_bound, base.cap,
                     base.signature, tuple(constants), elements)


def satisfies_pair(logic: Logic, m: KripkeModel, w: str, pair: FormulaPair,
                   elements: Sequence[Element] = (),
                   variables: Optional[Sequence[str]] = None) -> bool:
    """All of gamma true and all of delta false at (m, w, elements)"""
    evaluator = Evaluator(logic, m)
    return (all(evaluator.evaluate(w, f, elements, variables) for f in pair.gamma)
            and not any(evaluator.evaluate(w, f, elements, variables) for f in pair.delta))


def tuples_upto(domain: Sequence[Element], cap: int):
    """All tuples over domain of length 0..cap"""
    for length in range(cap + 1):
        yield from product(sorted(domain), repeat=length)


def is_elementary_submodel_upto(logic: Logic, m: KripkeModel, n: KripkeModel,
                                rank_bound: Optional[int] = None,
                                tuple_cap: Optional[int] = None,
                                cap: Optional[int] = None) -> bool:
    """
    M <= N elementarily at slice precision: type slices agree at every
    world of M for every tuple up to tuple_cap.

    Raises:
        PreconditionError: If m is not a submodel of n
    """
    problems = submodel_violations(m, n)
    if problems:
        raise PreconditionError(f"not a submodel: {problems[0]}")
    tuple_cap = config.tuple_cap if tuple_cap is None else tuple_cap

    for w in m.worlds:
        for elements in tuples_upto(m.domains[w], tuple_cap):
            small = type_slice(logic, m, w, elements, rank_bound, cap)
            big = type_slice(logic, n, w, elements, rank_bound, cap)
            if not small.same_theory(big):
                logger.debug("types differ at %s on %s: %s", w,
                             [str(e) for e in elements],
                             [print_formula(f) for f in small.separating_sentences(big)[:3]])
                return False
    return True


def check_elementary_embedding_upto(logic: Logic, m: KripkeModel, n: KripkeModel,
                                    g: Mapping[Element, Element], h: Mapping[str, str],
                                    rank_bound: Optional[int] = None,
                                    tuple_cap: Optional[int] = None,
                                    cap: Optional[int] = None) -> bool:
    """
    Test (g, h) as an elementary embedding of m into n.

    Structural conditions: h injective and order preserving/reflecting, g
    injective with g(A_w) inside B_h(w), g commuting with the homs. The
    type condition compares type slices of every tuple up to tuple_cap.
    """
    if embedding_violations(m, n, g, h):
        return False
    tuple_cap = config.tuple_cap if tuple_cap is None else tuple_cap
    for w in m.worlds:
        for elements in tuples_upto(m.domains[w], tuple_cap):
            source = type_slice(logic, m, w, elements, rank_bound, cap)
            target = type_slice(logic, n, h[w], tuple(g[a] for a in elements), rank_bound, cap,
                                constants=source.constants)
            if not source.same_theory(target):
                return False
    return True


def embedding_violations(m: KripkeModel, n: KripkeModel,
                         g: Mapping[Element, Element], h: Mapping[str, str]) -> List[str]:
    """Names of the failing structural embedding conditions"""
    problems = []
    if m.signature != n.signature:
        problems.append('signature')
        return problems
    if any(w not in h or h[w] not in n.domains for w in m.worlds):
        problems.append('rel')
        return problems
    if len({h[w] for w in m.worlds}) != len(m.worlds):
        problems.append('rel')
    elif any(m.leq(w, v) != n.leq(h[w], h[v]) for w in m.worlds for v in m.worlds):
        problems.append('rel')

    elements = m.all_elements()
    if any(a not in g for a in elements) or len({g[a] for a in elements}) != len(elements):
        problems.append('dom')
        return problems
    if any(g[a] not in n.domains[h[a.world]] for a in elements):
        problems.append('dom')
        return problems

    for (w, v), mapping in m.homs.items():
        target = n.homs.get((h[w], h[v]))
        if target is None or any(g[mapping[a]] != target[g[a]] for a in m.domains[w]):
            problems.append('map')
            break
    return problems
