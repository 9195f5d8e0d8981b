"""The exhaustive corpus of small models over one unary predicate"""

from functools import lru_cache
from itertools import chain, combinations, permutations, product
from typing import Dict, List, Tuple

from src.kripke.model import Element, KripkeModel
from src.kripke.validation import is_valid
from src.syntax.signature import Signature

CORPUS_SIGNATURE = Signature.create({'P': 1})


def _subsets(items):
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def _canonical_key(m: KripkeModel) -> Tuple:
    """Least description over all renamings of elements within worlds"""
    keys = []
    orders = [list(permutations(m.sorted_domain(w))) for w in m.worlds]
    for choice in product(*orders):
        index: Dict[Element, int] = {}
        for perm in choice:
            index.update({e: i for i, e in enumerate(perm)})
        key = (
            tuple(len(m.domains[w]) for w in m.worlds),
            tuple(tuple(sorted(tuple(index[a] for a in args) for args in m.extension(w, 'P')))
                  for w in m.worlds),
            tuple(tuple(sorted((index[a], index[b]) for a, b in m.hom(u, v).items()))
                  for u, v in sorted(m.order) if u != v),
        )
        keys.append(key)
    return min(keys)


def _one_world(size: int) -> List[KripkeModel]:
    domain = [Element('w', f"a{i}") for i in range(1, size + 1)]
    return [KripkeModel.build(CORPUS_SIGNATURE, ['w'], [], {'w': domain},
                              {'w': {'P': [(a,) for a in chosen]}})
            for chosen in _subsets(domain)]


def _two_worlds(lower: int, upper: int) -> List[KripkeModel]:
    below = [Element('w', f"a{i}") for i in range(1, lower + 1)]
    above = [Element('v', f"b{i}") for i in range(1, upper + 1)]
    models = []
    for images in product(above, repeat=lower):
        hom = dict(zip(below, images))
        for p_below in _subsets(below):
            for p_above in _subsets(above):
                m = KripkeModel.build(CORPUS_SIGNATURE, ['w', 'v'], [('w', 'v')],
                                      {'w': below, 'v': above},
                                      {'w': {'P': [(a,) for a in p_below]},
                                       'v': {'P': [(b,) for b in p_above]}},
                                      homs={('w', 'v'): hom})
                if is_valid(m):
                    models.append(m)
    return models


def _antichain(left: int, right: int) -> List[KripkeModel]:
    """Two incomparable worlds 'w' and 'v'"""
    here = [Element('w', f"a{i}") for i in range(1, left + 1)]
    there = [Element('v', f"b{i}") for i in range(1, right + 1)]
    return [KripkeModel.build(CORPUS_SIGNATURE, ['w', 'v'], [], {'w': here, 'v': there},
                              {'w': {'P': [(a,) for a in p_here]},
                               'v': {'P': [(b,) for b in p_there]}})
            for p_here in _subsets(here) for p_there in _subsets(there)]


@lru_cache(maxsize=None)
def small_corpus(max_domain: int = 2) -> Tuple[KripkeModel, ...]:
    """
    Models with at most two worlds, one of them 'w', and at most max_domain
    elements per world over {P/1}, one per isomorphism class fixing 'w'.
    Two-world models are the chain w <= v and the antichain of w and v.
    """
    candidates: List[KripkeModel] = []
    for size in range(1, max_domain + 1):
        candidates.extend(_one_world(size))
    for lower in range(1, max_domain + 1):
        for upper in range(1, max_domain + 1):
            candidates.extend(_two_worlds(lower, upper))
            candidates.extend(_antichain(lower, upper))

    seen = {}
    for m in candidates:
        shape = (m.worlds, tuple(sorted((u, v) for u, v in m.order if u != v)))
        seen.setdefault((shape, _canonical_key(m)), m)
    return tuple(seen.values())


def corpus_pairs(max_domain: int = 2) -> List[Tuple[KripkeModel, KripkeModel]]:
    corpus = small_corpus(max_domain)
    return [(m1, m2) for m1 in corpus for m2 in corpus]
