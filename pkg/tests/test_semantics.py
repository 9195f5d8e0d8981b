import random

import pytest
from hypothesis import given

from src.errors import (
    AdmissibilityError, EvaluationError, PreconditionError, SignatureError, UnknownWorldError,
    UsageError,
)
from src.kripke.algebra import generated_submodel, induced_submodel
from src.kripke.model import Element
from src.processors.deduplicator import Deduplicator
from src.semantics.enumeration import enumerate_sentences
from src.semantics.evaluator import (
    Evaluator, default_variables, evaluate, evaluate_by_extension, is_valid_in,
)
from src.semantics.logics import Logic, check_admissible, is_admissible
from src.semantics.theories import (
    FormulaPair, check_elementary_embedding_upto, embedding_violations,
    is_elementary_submodel_upto, satisfies_pair, theory_slice, type_slice,
)
from src.semantics.types import (
    classify_finite_type, existential_type_formula, find_type_witness, is_type_realized,
    successor_type_formula, universal_type_formula,
)
from src.syntax.formula import Atom, Const, Exists, Forall, Implies, Var
from src.syntax.generator import random_formula
from src.syntax.parser import parse_formula
from src.syntax.printer import print_formula
from src.syntax.signature import Signature
from tests.strategies import pointed, seeds

CD_AXIOM = '(forall x. P(x) | Q(c)) -> Q(c) | (forall x. P(x))'
DECIDABLE_EQUALITY = 'forall x. forall y. x = y | ~(x = y)'

# small slices keep the enumeration cheap
RANK, CAP = 2, 60


class TestLogics:
    @pytest.mark.parametrize('text, logic', [
        ('IL', Logic.IL), ('ILeq', Logic.ILeq), ('IL≡', Logic.ILeq), ('ineq', Logic.Ineq),
        ('CD=', Logic.CDeq), ('Bi', Logic.Bi),
    ])
    def test_parse(self, text, logic):
        assert Logic.parse(text) is logic

    def test_unknown_logic(self):
        with pytest.raises(UsageError):
            Logic.parse('S4')

    def test_variants(self):
        assert Logic.CDeq.equality_free() is Logic.CD
        assert Logic.In.with_equality_variant() is Logic.Ineq
        assert Logic.Bi.model_class == 'Bi'

    def test_admissibility(self, fix_cd, fix_eq):
        assert is_admissible(Logic.In, fix_cd)
        assert not is_admissible(Logic.CD, fix_cd)
        assert is_admissible(Logic.CDeq, fix_eq)
        assert not is_admissible(Logic.Bi, fix_eq)
        with pytest.raises(AdmissibilityError):
            check_admissible(Logic.Ineq, fix_eq)


class TestEvaluator:
    def test_constant_domain_axiom_fails_at_root(self, fix_cd):
        f = parse_formula(CD_AXIOM, fix_cd.signature)
        assert evaluate(Logic.IL, fix_cd, 'w', f) is False
        assert evaluate(Logic.IL, fix_cd, 'v', f) is True
        assert evaluate(Logic.In, fix_cd, 'w', f) is False

    def test_constant_domain_logic_refuses_growing_domains(self, fix_cd):
        f = parse_formula(CD_AXIOM, fix_cd.signature)
        with pytest.raises(AdmissibilityError):
            evaluate(Logic.CD, fix_cd, 'w', f)

    def test_decidable_equality_fails_under_collapse(self, fix_eq):
        f = parse_formula(DECIDABLE_EQUALITY, fix_eq.signature)
        assert evaluate(Logic.ILeq, fix_eq, 'w', f) is False
        assert evaluate(Logic.ILeq, fix_eq, 'v', f) is True

    def test_decidable_equality_holds_on_injective_model(self, fix_chain):
        m = fix_chain.with_equality(True)
        f = parse_formula(DECIDABLE_EQUALITY, m.signature)
        assert is_valid_in(Logic.Ineq, m, f)

    def test_equality_needs_equality_logic(self, fix_eq):
        f = parse_formula(DECIDABLE_EQUALITY, fix_eq.signature)
        with pytest.raises(EvaluationError):
            evaluate(Logic.IL, fix_eq, 'w', f)

    def test_implication_looks_upward(self, fix_chain):
        sig = fix_chain.signature
        assert evaluate(Logic.IL, fix_chain, 'w', parse_formula('~~exists x. P(x)', sig))
        assert not evaluate(Logic.IL, fix_chain, 'w', parse_formula('exists x. P(x)', sig))
        assert not evaluate(Logic.IL, fix_chain, 'w',
                            parse_formula('(exists x. P(x)) | ~(exists x. P(x))', sig))

    def test_tuple_and_variables(self, fix_chain):
        f = parse_formula('P(x1)', fix_chain.signature)
        assert evaluate(Logic.IL, fix_chain, 'v', f, (Element('v', 'b'),))
        g = parse_formula('~P(y)', fix_chain.signature)
        assert not evaluate(Logic.IL, fix_chain, 'w', g, (Element('w', 'a'),), ['y'])

    def test_request_errors(self, fix_chain):
        evaluator = Evaluator(Logic.IL, fix_chain)
        f = parse_formula('P(x1)', fix_chain.signature)
        with pytest.raises(UnknownWorldError):
            evaluator.evaluate('u', f)
        with pytest.raises(EvaluationError):
            evaluator.evaluate('w', f)
        with pytest.raises(EvaluationError):
            evaluator.evaluate('w', f, (Element('v', 'b'),))
        with pytest.raises(EvaluationError):
            evaluator.evaluate('w', f, (Element('w', 'a'),), ['x1', 'x2'])

    def test_signature_errors(self, fix_chain):
        wider = Signature.create({'P': 2, 'Q': 1}, ['d'])
        with pytest.raises(SignatureError):
            evaluate(Logic.IL, fix_chain, 'w', parse_formula('Q(d)', wider))
        with pytest.raises(SignatureError):
            evaluate(Logic.IL, fix_chain, 'w', parse_formula('P(d, d)', wider))

    @given(pointed(max_length=2, preds={'P': 1, 'R': 2}, consts=('c',)), seeds)
    def test_persistence(self, point, seed):
        m, w, elements = point
        variables = default_variables(len(elements))
        f = random_formula(random.Random(seed), m.signature, max_rank=2, variables=variables)
        evaluator = Evaluator(Logic.IL, m)
        if evaluator.evaluate(w, f, elements):
            for v in m.successors(w):
                assert evaluator.evaluate(v, f, m.push(w, v, elements))

    @given(pointed(max_worlds=2, max_length=1, preds={'P': 1, 'Q': 1}), seeds)
    def test_agrees_with_constant_extension_reading(self, point, seed):
        m, w, elements = point
        variables = default_variables(len(elements))
        f = random_formula(random.Random(seed), m.signature, max_rank=2, variables=variables,
                           max_depth=3)
        assert (evaluate_by_extension(Logic.IL, m, w, f, elements)
                == evaluate(Logic.IL, m, w, f, elements))

    @given(pointed(max_length=0, preds={'P': 1}, equality=True), seeds)
    def test_equality_is_persistent(self, point, seed):
        m, w, _ = point
        f = random_formula(random.Random(seed), m.signature, max_rank=2)
        evaluator = Evaluator(Logic.ILeq, m)
        if evaluator.evaluate(w, f):
            assert all(evaluator.evaluate(v, f) for v in m.successors(w))


class TestEnumeration:
    SIG = Signature.create({'P': 1})

    def test_family_is_closed_and_bounded(self):
        family = enumerate_sentences(self.SIG, 1, 50)
        assert 0 < len(family) <= 50
        assert all(f.is_sentence() and f.rank() <= 1 for f in family)
        assert print_formula(family[0]) == '_|_'

    def test_no_duplicates_up_to_normal_form(self):
        family = enumerate_sentences(self.SIG, RANK, CAP)
        assert len({Deduplicator.generate_hash(f) for f in family}) == len(family)

    def test_deterministic(self):
        assert enumerate_sentences(self.SIG, RANK, CAP) == enumerate_sentences(self.SIG, RANK, CAP)

    def test_rank_zero_has_no_quantifiers(self):
        assert all(f.rank() == 0 for f in enumerate_sentences(self.SIG, 0, CAP))

    def test_equality_atoms_follow_the_flag(self):
        plain = enumerate_sentences(Signature.create({}, ['c', 'd']), 1, CAP)
        with_eq = enumerate_sentences(Signature.create({}, ['c', 'd'], True), 1, CAP)
        assert not any(f.uses_equality() for f in plain)
        assert any(f.uses_equality() for f in with_eq)


class TestTheories:
    def test_persistence_of_slices(self, fix_chain):
        below = theory_slice(Logic.IL, fix_chain, 'w', RANK, CAP)
        above = theory_slice(Logic.IL, fix_chain, 'v', RANK, CAP)
        assert below.positive_included_in(above)
        assert not above.positive_included_in(below)
        witness = above.separating_sentences(below)
        assert witness and witness[0].size() <= witness[-1].size()

    def test_same_theory(self, fix_cd):
        s = theory_slice(Logic.IL, fix_cd, 'w', RANK, CAP)
        assert s.same_theory(theory_slice(Logic.IL, fix_cd, 'w', RANK, CAP))
        assert s.sentences == s.positive | s.negative

    def test_incomparable_slices(self, fix_chain):
        with pytest.raises(PreconditionError):
            theory_slice(Logic.IL, fix_chain, 'w', 1, CAP).same_theory(
                theory_slice(Logic.IL, fix_chain, 'w', 2, CAP))

    def test_restrict(self, fix_cd):
        s = theory_slice(Logic.IL, fix_cd, 'w', RANK, CAP)
        small = s.restrict(Signature.create({'P': 1}))
        assert all(set(f.predicates()) <= {'P'} and not f.constants() for f in small.sentences)

    def test_type_slices_follow_homs(self, fix_chain):
        below = type_slice(Logic.IL, fix_chain, 'w', (Element('w', 'a'),), RANK, CAP)
        above = type_slice(Logic.IL, fix_chain, 'v', (Element('v', 'b'),), RANK, CAP)
        assert below.constants == ('c1',)
        p = Atom('P', (Const('c1'),))
        assert p in below.negative and p in above.positive
        assert below.positive_included_in(above)

    @given(pointed(max_length=0, preds={'P': 1, 'Q': 1}))
    def test_positive_theory_grows_upward(self, point):
        m, w, _ = point
        below = theory_slice(Logic.IL, m, w, 1, 40)
        for v in m.successors(w):
            assert below.positive_included_in(theory_slice(Logic.IL, m, v, 1, 40))

    def test_satisfies_pair(self, fix_chain):
        sig = fix_chain.signature
        pair = FormulaPair.of([parse_formula('~~exists x. P(x)', sig)],
                              [parse_formula('exists x. P(x)', sig)])
        assert satisfies_pair(Logic.IL, fix_chain, 'w', pair)
        assert not satisfies_pair(Logic.IL, fix_chain, 'v', pair)
        assert FormulaPair.of(pair.gamma) < pair

    def test_generated_submodel_is_elementary(self, fix_cd):
        small = generated_submodel(fix_cd, 'v')
        assert is_elementary_submodel_upto(Logic.IL, small, fix_cd, 1, 1, 40)

    def test_identity_embedding(self, fix_chain):
        g = {e: e for e in fix_chain.all_elements()}
        h = {w: w for w in fix_chain.worlds}
        assert embedding_violations(fix_chain, fix_chain, g, h) == []
        assert check_elementary_embedding_upto(Logic.IL, fix_chain, fix_chain, g, h, 1, 1, 40)
        assert embedding_violations(fix_chain, fix_chain, g, {'w': 'v', 'v': 'w'})


class TestTypes:
    def test_successor_type(self, fix_chain):
        sig = fix_chain.signature
        some_p = parse_formula('exists x. P(x)', sig)
        assert find_type_witness(Logic.IL, fix_chain, 'w', (), FormulaPair.of([some_p]),
                                 'successor') == ('v', None)
        assert not classify_finite_type(Logic.IL, fix_chain, 'v', (),
                                        FormulaPair.of([], [some_p]), 'successor')

    def test_existential_type(self, fix_chain):
        candidate = [Atom('P', (Const('c1'),))]
        assert not classify_finite_type(Logic.IL, fix_chain, 'w', (), candidate, 'existential')
        assert find_type_witness(Logic.IL, fix_chain, 'v', (), candidate,
                                 'existential') == ('v', Element('v', 'b'))

    def test_universal_type(self, fix_chain):
        candidate = [Atom('P', (Const('c1'),))]
        assert find_type_witness(Logic.IL, fix_chain, 'w', (), candidate,
                                 'universal') == ('w', Element('w', 'a'))
        assert not classify_finite_type(Logic.IL, fix_chain, 'v', (), candidate, 'universal')

    def test_candidate_checks(self, fix_chain):
        with pytest.raises(PreconditionError):
            classify_finite_type(Logic.IL, fix_chain, 'w', (), [], 'sideways')
        with pytest.raises(PreconditionError):
            classify_finite_type(Logic.IL, fix_chain, 'w', (), [Atom('P', (Var('x'),))],
                                 'existential')
        with pytest.raises(PreconditionError):
            classify_finite_type(Logic.IL, fix_chain, 'w', (), [], 'existential',
                                 constants=['c1', 'c2'])

    def test_type_formulas(self):
        p, q = Atom('P', (Const('c'),)), Atom('Q', (Const('c'),))
        assert successor_type_formula(FormulaPair.of([p], [q])) == Implies(p, q)
        assert existential_type_formula([p], 'c') == Exists('x1', Atom('P', (Var('x1'),)))
        assert universal_type_formula([p], 'c') == Forall('x1', Atom('P', (Var('x1'),)))
    def test_realized_in_elementary_extension(self, fix_chain):
        top = generated_submodel(fix_chain, 'v')
        candidate = [Atom('P', (Const('c1'),))]
        assert is_type_realized(Logic.IL, top, fix_chain, 'v', (), candidate, 'existential',
                                rank_bound=1)

    def test_realization_preconditions(self, fix_chain, fix_cd):
        candidate = [Atom('P', (Const('c1'),))]
        with pytest.raises(PreconditionError):
            is_type_realized(Logic.IL, generated_submodel(fix_chain, 'v'), fix_chain, 'v', (),
                             candidate, 'universal', rank_bound=1)
        a = Element('w', 'a')
        root = induced_submodel(fix_cd, ['w'], [a])
        with pytest.raises(PreconditionError):
            is_type_realized(Logic.IL, root, fix_cd, 'w', (), candidate, 'existential',
                             rank_bound=1)
