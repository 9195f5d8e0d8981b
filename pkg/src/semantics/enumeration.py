"""Canonical rank-bounded sentence families.

Formulas are built level by level in AST size over a fixed pool of
quantifiable variables. Each level is deduplicated after normalization,
sorted by printed text and cut at a pool cap; sentences of rank <= d are
collected in size-then-lexicographic order until the sentence cap is hit.
"""

import logging
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Tuple

from src.config import config
from src.processors.deduplicator import Deduplicator
from src.syntax.formula import (
    And, Atom, BOTTOM, Const, Eq, Exists, Forall, Formula, Implies, Or, Var,
)
from src.syntax.printer import print_formula
from src.syntax.signature import Signature, fresh_variables

logger = logging.getLogger(__name__)

POOL_CAP = 400


def quantifiable_variables(sig: Signature, count: Optional[int] = None) -> Tuple[str, ...]:
    count = config.max_variables if count is None else count
    return fresh_variables(count, avoid=sig.symbols())


def enumerate_sentences(sig: Signature,
                        rank_bound: Optional[int] = None,
                        cap: Optional[int] = None,
                        max_size: Optional[int] = None,
                        variable_count: Optional[int] = None) -> Tuple[Formula, ...]:
    """
    The canonical sentence family of sig at rank bound d.

    Args:
        sig: Signature (its equality flag decides whether = atoms appear)
        rank_bound: d (default config.rank_bound)
        cap: K, the maximum number of sentences (default config.sentence_cap)
        max_size: Largest AST size explored (default config.max_sentence_size)
        variable_count: Quantifiable variables (default config.max_variables)

    Returns:
        Tuple of distinct sentences, smallest first
    """
    return _enumerate(
        sig,
        config.rank_bound if rank_bound is None else rank_bound,
        config.sentence_cap if cap is None else cap,
        config.max_sentence_size if max_size is None else max_size,
        config.max_variables if variable_count is None else variable_count,
    )


@lru_cache(maxsize=256)
def _enumerate(sig: Signature, rank_bound: int, cap: int, max_size: int,
               variable_count: int) -> Tuple[Formula, ...]:
    variables = quantifiable_variables(sig, variable_count)
    levels: Dict[int, List[Formula]] = {}
    sentences: List[Formula] = []
    seen = set()

    for size in range(1, max_size + 1):
        if size == 1:
            candidates = _atomic(sig, variables)
        else:
            candidates = _compound(levels, size, variables, rank_bound)

        level = []
        for f in candidates:
            digest = Deduplicator.generate_hash(f)
            if digest in seen:
                continue
            seen.add(digest)
            level.append(f)
        level.sort(key=print_formula)

        closed = [f for f in level if f.is_sentence()]
        sentences.extend(closed[:max(0, cap - len(sentences))])
        if len(sentences) >= cap:
            break
        levels[size] = level[:POOL_CAP]

    logger.debug("enumerated %d sentences over %s at rank %d",
                 len(sentences), sig.describe(), rank_bound)
    return tuple(sentences)


def _atomic(sig: Signature, variables: Tuple[str, ...]) -> List[Formula]:
    terms = [Const(c) for c in sorted(sig.constants)] + [Var(v) for v in variables]
    result: List[Formula] = [BOTTOM]
    for name, arity in sig.predicates:
        for args in product(terms, repeat=arity):
            result.append(Atom(name, args))
    if sig.with_equality:
        for i, left in enumerate(terms):
            for right in terms[i + 1:]:
                result.append(Eq(left, right))
    return result


def _compound(levels: Dict[int, List[Formula]], size: int, variables: Tuple[str, ...],
              rank_bound: int) -> List[Formula]:
    result: List[Formula] = []
    for left_size in range(1, size - 1):
        right_size = size - 1 - left_size
        for left in levels.get(left_size, ()):
            for right in levels.get(right_size, ()):
                for node in (And, Or, Implies):
                    f = node(left, right)
                    if f.rank() <= rank_bound:
                        result.append(f)

    for body in levels.get(size - 1, ()):
        if body.rank() + 1 > rank_bound:
            continue
        for var in variables:
            if var in body.free_vars():
                result.append(Exists(var, body))
                result.append(Forall(var, body))
    return result


def sentence_index(sentences) -> Dict[Formula, int]:
    return {f: i for i, f in enumerate(sentences)}
