"""Suites over asimulations: quotient faithfulness, preservation and the
Hennessy-Milner comparison with positive type inclusion"""

from typing import Iterable, List

from src.config import config
from src.asimulation.engine import asim_exists, greatest_asimulation
from src.asimulation.raw import bounded_raw_search
from src.kripke.generator import random_tuple
from src.semantics.logics import Logic
from src.semantics.theories import theory_slice, type_slice
from src.syntax.printer import print_formula
from src.syntax.signature import fresh_constants
from src.transforms.unravel import copy_tuple, unravel
from src.suites.base import BaseSuite, SuiteFailure, register
from src.suites.corpus import corpus_pairs


class _CorpusSuite(BaseSuite):
    """Cases are pairs of the small corpus; count 0 runs all of them"""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.pairs = corpus_pairs()

    def case_indices(self) -> Iterable[int]:
        total = len(self.pairs)
        return range(total if self.count <= 0 else min(self.count, total))


@register
class QuotientFaithfulnessSuite(_CorpusSuite):
    name = 'quotient-faithfulness'
    description = 'position-quotient existence agrees with the explicit tuple search'

    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        m1, m2 = self.pairs[index]
        quotient = asim_exists(Logic.IL, m1, 'w', (), m2, 'w', ())
        explicit = bounded_raw_search(Logic.IL, m1, 'w', (), m2, 'w', (),
                                      config.raw_tuple_length) is not None
        if quotient != explicit:
            return [self.failure(index, seed, explicit, quotient, '', f"pair {index}")]
        return []


@register
class HennessyMilnerSuite(_CorpusSuite):
    name = 'hennessy-milner'
    description = 'asimulation existence against positive theory inclusion (reported, not asserted)'

    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        m1, m2 = self.pairs[index]
        exists = asim_exists(Logic.IL, m1, 'w', (), m2, 'w', ())
        left = theory_slice(Logic.IL, m1, 'w', self.rank)
        right = theory_slice(Logic.IL, m2, 'w', self.rank)
        included = left.positive_included_in(right)
        if exists and not included:
            # asimulations preserve positive sentences
            witness = print_formula(left.separating_sentences(right)[0])
            return [self.failure(index, seed, 'inclusion', 'no inclusion', witness, f"pair {index}")]
        if included and not exists:
            self.findings.append(f"pair {index}: slices included at rank {self.rank} "
                                 f"but no asimulation")
        return []


@register
class PreservationSuite(BaseSuite):
    name = 'preservation'
    description = 'positive sentences transfer along every asimulation found'

    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        rng = self.rng(seed)
        params = dict(max_worlds=2, max_domain=2, preds={'P': 1, 'Q': 1})
        m1 = self.draw_model(rng.randrange(2 ** 31), **params)
        w1 = rng.choice(m1.worlds)
        a = random_tuple(rng, m1, w1, rng.randint(0, 1))
        if index % 2:
            m2 = unravel(m1, w1)
            w2, b = w1, copy_tuple(w1, a)
        else:
            m2 = self.draw_model(rng.randrange(2 ** 31), **params)
            w2 = rng.choice(m2.worlds)
            b = random_tuple(rng, m2, w2, len(a))

        if greatest_asimulation(Logic.IL, m1, w1, a, m2, w2, b) is None:
            return []
        consts = fresh_constants(m1.signature, len(a))
        source = type_slice(Logic.IL, m1, w1, a, self.rank, constants=consts)
        target = type_slice(Logic.IL, m2, w2, b, self.rank, constants=consts)
        return [self.failure(index, seed, True, False, print_formula(f), f"{w1}->{w2}")
                for f in source.separating_sentences(target)]
