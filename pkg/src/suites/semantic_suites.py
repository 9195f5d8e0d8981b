"""Suites over satisfaction: separations, monotonicity, substitution,
generated submodels, quantifier clauses, cutoff equalities and renamings"""

import random
from typing import List, Tuple

from src.kripke.algebra import constant_extension, generated_submodel, reduct, rename_model
from src.kripke.generator import random_tuple
from src.kripke.model import KripkeModel
from src.semantics.evaluator import Evaluator, default_variables, evaluate_by_extension
from src.semantics.logics import Logic
from src.syntax.formula import Formula
from src.syntax.generator import random_formula
from src.syntax.parser import parse_formula
from src.syntax.printer import print_formula
from src.syntax.renaming import RenamingMap, rename_formula
from src.syntax.signature import Signature, fresh_constants
from src.syntax.substitution import substitute_constants
from src.suites.base import BaseSuite, SuiteFailure, register

CD_AXIOM = '(forall x. P(x) | Q(c)) -> Q(c) | (forall x. P(x))'
DECIDABLE_EQUALITY = 'forall x. forall y. x = y | ~(x = y)'

BASE_PARAMS = dict(max_worlds=3, max_domain=2, preds={'P': 1, 'R': 2}, consts=('c',))


class _FormulaCase(BaseSuite):
    """Draws (model, world, tuple, formula) with free variables x1..xk"""

    params = BASE_PARAMS

    def draw_case(self, seed: int) -> Tuple[random.Random, KripkeModel, str, tuple, tuple, Formula]:
        rng = self.rng(seed)
        m = self.draw_model(rng.randrange(2 ** 31), **self.params)
        w = rng.choice(m.worlds)
        k = rng.randint(0, 2)
        elements = random_tuple(rng, m, w, k)
        variables = default_variables(k)
        f = random_formula(rng, m.signature, max_rank=self.rank, variables=variables)
        return rng, m, w, elements, variables, f


@register
class CDSeparationSuite(BaseSuite):
    name = 'cd-separation'
    description = 'constant-domain axiom fails on FIX-CD under IL, holds on Su models under CD'

    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        if index == 0:
            m = self.fixture('FIX-CD')
            f = parse_formula(CD_AXIOM, m.signature)
            got = Evaluator(Logic.IL, m).evaluate('w', f)
            if got:
                return [self.failure(index, seed, False, got, CD_AXIOM, 'FIX-CD@w')]
            return []

        m = self.draw_model(seed, max_worlds=4, max_domain=3, preds={'P': 1, 'Q': 1},
                            consts=('c',), cls='Su')
        f = parse_formula(CD_AXIOM, m.signature)
        evaluator = Evaluator(Logic.CD, m)
        return [self.failure(index, seed, True, False, CD_AXIOM, w)
                for w in m.worlds if not evaluator.evaluate(w, f)]


@register
class EqualitySeparationSuite(BaseSuite):
    name = 'equality-separation'
    description = 'decidable equality fails on FIX-EQ under IL=, holds on In models'

    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        if index == 0:
            m = self.fixture('FIX-EQ')
            f = parse_formula(DECIDABLE_EQUALITY, m.signature)
            got = Evaluator(Logic.ILeq, m).evaluate('w', f)
            if got:
                return [self.failure(index, seed, False, got, DECIDABLE_EQUALITY, 'FIX-EQ@w')]
            return []

        m = self.draw_model(seed, max_worlds=4, max_domain=3, cls='In', equality=True)
        f = parse_formula(DECIDABLE_EQUALITY, m.signature)
        evaluator = Evaluator(Logic.Ineq, m)
        return [self.failure(index, seed, True, False, DECIDABLE_EQUALITY, w)
                for w in m.worlds if not evaluator.evaluate(w, f)]


@register
class MonotonicitySuite(_FormulaCase):
    name = 'monotonicity'
    description = 'truth persists along the order through the homomorphisms'

    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        rng, m, w, elements, variables, f = self.draw_case(seed)
        evaluator = Evaluator(Logic.IL, m)
        if not evaluator.evaluate(w, f, elements, variables):
            return []
        failures = []
        for v in m.successors(w):
            if not evaluator.evaluate(v, f, m.push(w, v, elements), variables):
                failures.append(self.failure(index, seed, True, False, print_formula(f), f"{w}<={v}"))
        return failures


@register
class SubstitutionSuite(_FormulaCase):
    name = 'substitution'
    description = 'free variables valued by a tuple agree with fresh constants denoting it'

    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        rng, m, w, elements, variables, f = self.draw_case(seed)
        consts = fresh_constants(m.signature, len(elements), avoid=f.constants())
        extended = constant_extension(m, w, consts, elements)
        sentence = substitute_constants(f, list(zip(variables, consts)))

        direct, through = Evaluator(Logic.IL, m), Evaluator(Logic.IL, extended)
        failures = []
        for v in m.successors(w):
            expected = direct.evaluate(v, f, m.push(w, v, elements), variables)
            got = through.evaluate(v, sentence)
            if expected != got:
                failures.append(self.failure(index, seed, expected, got, print_formula(f), v))
        return failures


@register
class GeneratedSubmodelSuite(_FormulaCase):
    name = 'generated-submodel'
    description = 'satisfaction above w is unchanged in the submodel generated by w'

    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        rng, m, w, elements, variables, f = self.draw_case(seed)
        generated = generated_submodel(m, w)
        whole, part = Evaluator(Logic.IL, m), Evaluator(Logic.IL, generated)
        failures = []
        for v in m.successors(w):
            pushed = m.push(w, v, elements)
            expected = whole.evaluate(v, f, pushed, variables)
            got = part.evaluate(v, f, pushed, variables)
            if expected != got:
                failures.append(self.failure(index, seed, expected, got, print_formula(f), v))
        return failures


@register
class QuantifierClauseSuite(_FormulaCase):
    name = 'quantifier-clauses'
    description = 'the evaluator agrees with the constant-extension definition'
    params = dict(BASE_PARAMS, max_domain=2, preds={'P': 1, 'Q': 1})

    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        rng, m, w, elements, variables, f = self.draw_case(seed)
        expected = evaluate_by_extension(Logic.IL, m, w, f, elements, variables)
        got = Evaluator(Logic.IL, m).evaluate(w, f, elements, variables)
        if expected != got:
            return [self.failure(index, seed, expected, got, print_formula(f), w)]
        return []


def _random_subsignature(rng: random.Random, sig: Signature) -> Signature:
    preds = {name: arity for name, arity in sig.predicates if rng.random() < 0.5}
    consts = [c for c in sorted(sig.constants) if rng.random() < 0.5]
    return Signature.create(preds, consts, sig.with_equality)


@register
class CutoffSuite(BaseSuite):
    name = 'cutoff'
    description = 'generated submodels, constant extensions and reducts commute'

    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        rng = self.rng(seed)
        m = self.draw_model(rng.randrange(2 ** 31), **BASE_PARAMS)
        w = rng.choice(m.worlds)
        v = rng.choice(m.successors(w))
        n = rng.randint(0, 2)
        elements = random_tuple(rng, m, w, n + 1)
        consts = fresh_constants(m.signature, n + 1)
        theta = _random_subsignature(rng, m.signature)

        first = constant_extension(m, w, consts[:n], elements[:n])
        full = constant_extension(m, w, consts, elements)
        checks = {
            'double generation': (generated_submodel(generated_submodel(m, w), v),
                                  generated_submodel(m, v)),
            'generation after extension': (generated_submodel(first, v),
                                           constant_extension(m, v, consts[:n],
                                                              m.push(w, v, elements[:n]))),
            'iterated extension': (constant_extension(first, w, consts[n:], elements[n:]), full),
            'extension of generated extension': (
                constant_extension(generated_submodel(first, w), w, consts[n:], elements[n:]), full),
            'reduct of extension': (reduct(first, theta), generated_submodel(reduct(m, theta), w)),
            'reduct keeping new constants': (reduct(first, theta.with_constants(consts[:n])),
                                             constant_extension(reduct(m, theta), w, consts[:n],
                                                                elements[:n])),
        }
        return [self.failure(index, seed, 'equal models', 'different models', law, f"{w}<={v}")
                for law, (left, right) in checks.items() if left != right]


@register
class RenamingSuite(_FormulaCase):
    name = 'renaming'
    description = 'renamings are invertible, keep variables and preserve satisfaction'

    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        rng, m, w, elements, variables, f = self.draw_case(seed)
        sig = m.signature
        r = RenamingMap.create({p: f"{p}r" for p in sig.predicate_names},
                               {c: f"{c}r" for c in sig.constants})
        renamed = rename_formula(r, f)
        text = print_formula(f)
        failures = []

        if rename_formula(r.inverse(), renamed) != f:
            failures.append(self.failure(index, seed, text, print_formula(renamed), text, 'inverse'))
        if renamed.free_vars() != f.free_vars() or renamed.bound_vars() != f.bound_vars():
            failures.append(self.failure(index, seed, 'same variables', 'changed variables', text, 'vars'))
        if renamed.rank() != f.rank():
            failures.append(self.failure(index, seed, f.rank(), renamed.rank(), text, 'rank'))

        expected = Evaluator(Logic.IL, m).evaluate(w, f, elements, variables)
        got = Evaluator(Logic.IL, rename_model(m, r)).evaluate(w, renamed, elements, variables)
        if expected != got:
            failures.append(self.failure(index, seed, expected, got, text, w))
        return failures
