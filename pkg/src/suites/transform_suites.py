"""Suites over model transformations"""

from typing import List

from src.asimulation.raw import RawPair, Side, check_asimulation_raw
from src.kripke.algebra import generated_submodel
from src.kripke.generator import random_tuple
from src.kripke.injectivize import injectivize_with_projection
from src.kripke.model import KripkeModel
from src.kripke.validation import classify_model, validate_model
from src.semantics.evaluator import Evaluator, default_variables
from src.semantics.logics import Logic
from src.semantics.theories import theory_slice, type_slice
from src.syntax.generator import random_formula
from src.syntax.printer import print_formula
from src.syntax.signature import fresh_constants
from src.transforms.congruence import (
    check_congruence, quotient_relation, quotient_with_map, upset_congruence,
)
from src.transforms.star import derive_star_congruence, q_formulas, star_expand
from src.transforms.unravel import UnravelMode, last_world, unravel, unravelling_relation
from src.suites.base import BaseSuite, SuiteFailure, register

FIXTURES = ('FIX-CHAIN', 'FIX-CD', 'FIX-EQ')

# tuple length for the explicit relations checked in both directions
RELATION_LENGTH = 2


def _both_ways(logic: Logic, m: KripkeModel, w: str, n: KripkeModel, v: str, relation):
    """Check relation from (m, w) to (n, v) and its reading from (n, v) back"""
    forth = check_asimulation_raw(logic, m, n, relation, RawPair(Side.FORWARD, w, (), v, ()),
                                  RELATION_LENGTH)
    back = check_asimulation_raw(logic, n, m, relation.reversed(),
                                 RawPair(Side.FORWARD, v, (), w, ()), RELATION_LENGTH)
    return forth, back


@register
class UnravelAsimSuite(BaseSuite):
    name = 'unravel-asim'
    description = 'strict unravellings are asimilar both ways and keep theory slices'

    def model_for(self, index: int, seed: int):
        if index < len(FIXTURES):
            m = self.fixture(FIXTURES[index])
            return m, 'w'
        rng = self.rng(seed)
        m = self.draw_model(rng.randrange(2 ** 31), max_worlds=3, max_domain=2,
                            preds={'P': 1, 'Q': 1})
        return m, rng.choice(m.worlds)

    def case_indices(self):
        return range(len(FIXTURES) + self.count)

    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        m, w = self.model_for(index, seed)
        logic = Logic.ILeq if m.signature.with_equality else Logic.IL
        u = unravel(m, w, UnravelMode.strict())
        relation = unravelling_relation(m, w, u, RELATION_LENGTH)
        failures = []
        for label, outcome in zip(('forth', 'back'), _both_ways(logic, m, w, u, w, relation)):
            if not outcome:
                failures.append(self.failure(index, seed, 'asimulation', str(outcome), '', f"{label} {w}"))

        for s in u.worlds:
            base = theory_slice(logic, m, last_world(s), self.rank)
            unravelled = theory_slice(logic, u, s, self.rank)
            if not base.same_theory(unravelled):
                witness = (base.separating_sentences(unravelled)
                           or unravelled.separating_sentences(base))[0]
                failures.append(self.failure(index, seed, 'same slice', 'different slice',
                                             print_formula(witness), s))
        return failures


@register
class QuotientSuite(BaseSuite):
    name = 'quotient'
    description = 'quotients by congruences are asimilar both ways and keep types'

    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        rng = self.rng(seed)
        m = self.draw_model(rng.randrange(2 ** 31), max_worlds=3, max_domain=3,
                            preds={'P': 1}, density=0.5)
        cong = upset_congruence(m, [rng.choice(m.worlds)])
        q, g = quotient_with_map(Logic.IL, m, cong)
        failures = [self.failure(index, seed, 'valid quotient', str(d)) for d in validate_model(q)]

        w = rng.choice(m.worlds)
        relation = quotient_relation(m, g, RELATION_LENGTH)
        for label, outcome in zip(('forth', 'back'), _both_ways(Logic.IL, m, w, q, w, relation)):
            if not outcome:
                failures.append(self.failure(index, seed, 'asimulation', str(outcome), '', f"{label} {w}"))

        elements = random_tuple(rng, m, w, rng.randint(0, 1))
        consts = fresh_constants(m.signature, len(elements))
        before = type_slice(Logic.IL, m, w, elements, self.rank, constants=consts)
        after = type_slice(Logic.IL, q, w, tuple(g[a] for a in elements), self.rank, constants=consts)
        if not before.same_theory(after):
            failures.append(self.failure(index, seed, 'same type', 'different type', '', w))
        return failures


@register
class StarSuite(BaseSuite):
    name = 'star'
    description = 'context sentences of star expansions detect the order exactly'

    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        rng = self.rng(seed)
        m = self.draw_model(rng.randrange(2 ** 31), max_worlds=3, max_domain=2, preds={'P': 1})
        w = rng.choice(m.worlds)
        s = star_expand(m, w)
        failures = [self.failure(index, seed, 'valid expansion', str(d))
                    for d in validate_model(s.model)]

        evaluator = Evaluator(Logic.IL, s.model)
        for u in m.worlds:
            above, not_below = q_formulas(s, u)
            for v in m.worlds:
                if evaluator.evaluate(v, above) != m.leq(u, v):
                    failures.append(self.failure(index, seed, m.leq(u, v), not m.leq(u, v),
                                                 print_formula(above), f"{u}/{v}"))
                if evaluator.evaluate(v, not_below) != (not m.leq(v, u)):
                    failures.append(self.failure(index, seed, not m.leq(v, u), m.leq(v, u),
                                                 print_formula(not_below), f"{u}/{v}"))

        cong = derive_star_congruence(Logic.IL, s.model, w)
        ok, problems = check_congruence(Logic.IL, generated_submodel(s.model, w), cong)
        if not ok:
            failures.append(self.failure(index, seed, 'congruence', str(problems[0]), '', w))
        return failures


@register
class InjectivizeSuite(BaseSuite):
    name = 'injectivize'
    description = 'injectivization lands in In, keeps satisfaction and keeps Su'

    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        rng = self.rng(seed)
        cls = 'Su' if index % 2 else 'any'
        m = self.draw_model(rng.randrange(2 ** 31), max_worlds=3, max_domain=2,
                            preds={'P': 1, 'R': 2}, cls=cls)
        n, projection = injectivize_with_projection(m)
        flags = classify_model(n)
        failures = []
        if not flags.in_class:
            failures.append(self.failure(index, seed, 'In', flags.as_dict()))
        if cls == 'Su' and not flags.su_class:
            failures.append(self.failure(index, seed, 'Su', flags.as_dict()))

        w = rng.choice(n.worlds)
        k = rng.randint(0, 2)
        elements = random_tuple(rng, n, w, k)
        variables = default_variables(k)
        f = random_formula(rng, m.signature, max_rank=self.rank, variables=variables)
        expected = Evaluator(Logic.IL, m).evaluate(w, f, tuple(projection[e] for e in elements),
                                                   variables)
        got = Evaluator(Logic.IL, n).evaluate(w, f, elements, variables)
        if expected != got:
            failures.append(self.failure(index, seed, expected, got, print_formula(f), w))
        return failures
