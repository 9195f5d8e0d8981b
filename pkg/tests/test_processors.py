import json

import pytest
from hypothesis import given

from src.config import config
from src.processors.deduplicator import Deduplicator
from src.processors.logic_comparer import (
    INVALID, NOT_APPLICABLE, UNTESTED, VALID, LogicComparer, fixture_corpus, random_corpus,
    read_sentences,
)
from src.reporting.report_generator import ReportGenerator
from src.semantics.logics import Logic
from src.suites.base import SuiteFailure, SuiteReport
from src.syntax.parser import parse_formula, parse_sentence
from src.syntax.signature import Signature
from tests.strategies import formulas

SIG = Signature.create({'P': 1, 'Q': 1}, ['c'])
CD_AXIOM = '(forall x. P(x) | Q(c)) -> Q(c) | (forall x. P(x))'
DECIDABLE_EQUALITY = 'forall x. forall y. x = y | ~(x = y)'
TAUTOLOGY = '_|_ -> _|_'


@pytest.fixture(scope='module')
def fixture_report():
    return LogicComparer(fixture_corpus()).classify_batch([CD_AXIOM, DECIDABLE_EQUALITY, TAUTOLOGY])


class TestDeduplicator:
    def test_order_of_conjuncts_ignored(self):
        f = parse_formula('P(c) & Q(c)', SIG)
        g = parse_formula('Q(c) & P(c)', SIG)
        assert Deduplicator.generate_hash(f) == Deduplicator.generate_hash(g)

    def test_bound_names_ignored(self):
        f = parse_formula('exists x. P(x) | Q(x)', SIG)
        g = parse_formula('exists y. Q(y) | P(y)', SIG)
        assert Deduplicator.normal_form(f) == Deduplicator.normal_form(g)

    def test_implication_is_ordered(self):
        f = parse_formula('P(c) -> Q(c)', SIG)
        g = parse_formula('Q(c) -> P(c)', SIG)
        assert Deduplicator.normal_form(f) != Deduplicator.normal_form(g)

    def test_keeps_first_occurrence(self):
        first = parse_formula('P(c) | Q(c)', SIG)
        unique = Deduplicator.remove_duplicates([first, parse_formula('Q(c) | P(c)', SIG),
                                                 parse_formula('P(c)', SIG)])
        assert unique == [first, parse_formula('P(c)', SIG)]
        assert len(Deduplicator.add_hashes([first, first])) == 1

    @given(formulas(sig=SIG))
    def test_idempotent(self, f):
        assert Deduplicator.remove_duplicates([f, f]) == [f]


class TestLogicComparer:
    def test_constant_domain_axiom(self, fixture_report):
        verdicts = fixture_report.rows[0].verdicts
        assert verdicts['IL'].status == INVALID
        assert verdicts['IL'].countermodel == 'FIX-CD@w'
        assert verdicts['In'].status == INVALID
        assert verdicts['CD'].status == UNTESTED
        assert str(verdicts['IL']) == 'invalid (FIX-CD@w)'

    def test_decidable_equality(self, fixture_report):
        verdicts = fixture_report.rows[1].verdicts
        assert verdicts['IL'].status == NOT_APPLICABLE
        assert verdicts['ILeq'].status == INVALID
        assert verdicts['ILeq'].countermodel == 'FIX-EQ@w'

    def test_tautology(self, fixture_report):
        verdicts = fixture_report.rows[2].verdicts
        assert verdicts['IL'].status == VALID
        assert {v.status for v in verdicts.values()} <= {VALID, UNTESTED}

    def test_consistency(self, fixture_report):
        assert fixture_report.consistency_problems() == []
        assert fixture_report.exit_code == 0

    def test_injective_models_decide_equality(self, fixture_report):
        row = fixture_report.rows[1]
        assert row.verdicts['Ineq'].status == VALID
        assert (row.sentence, 'Ineq', 'ILeq') in fixture_report.separations()

    def test_stats(self, fixture_report):
        stats = LogicComparer.get_stats(fixture_report)
        assert stats['IL'] == 1
        assert stats['ILeq'] == 1
        assert set(stats) == {logic.label for logic in Logic}

    def test_random_corpus_covers_the_classes(self):
        corpus = random_corpus(SIG, 2, seed=0)
        assert len(corpus) == 8
        assert all(entry.model.signature == SIG for entry in corpus)
        comparer = LogicComparer(corpus)
        assert any(comparer.flags[entry.name].su_class for entry in corpus)

    def test_constant_domains_validate_the_axiom(self):
        f, sig = parse_sentence(CD_AXIOM)
        corpus = [entry for entry in random_corpus(sig, 5, seed=3) if entry.name.startswith('Su')]
        row = LogicComparer(corpus, [Logic.CD]).classify(f, sig)
        assert row.verdicts['CD'].status == VALID

    def test_sentence_file(self):
        sentences = read_sentences(config.base_dir / 'config' / 'sentences' / 'separations.txt')
        assert sentences == [CD_AXIOM, DECIDABLE_EQUALITY, TAUTOLOGY]


class TestReportGenerator:
    def test_diff_report_text(self, fixture_report):
        text = ReportGenerator().generate_diff_report(fixture_report,
                                                      LogicComparer.get_stats(fixture_report))
        assert 'LOGIC COMPARISON' in text
        assert 'invalid (FIX-CD@w)' in text
        assert 'valid sentences per logic:' in text

    def test_diff_report_json(self, fixture_report):
        data = json.loads(ReportGenerator().generate_diff_report(fixture_report, {'IL': 1},
                                                                 as_json=True))
        assert data['rows'][1]['verdicts']['IL']['status'] == NOT_APPLICABLE
        assert data['stats'] == {'IL': 1}
        assert data['consistency_problems'] == []

    def test_suite_report_lists_failures(self):
        failure = SuiteFailure(3, 42, 'P(c)', 'w', 'true', 'false')
        report = SuiteReport('monotonicity', 5, [failure], 0.5, 0, {'rank': 2})
        text = ReportGenerator().generate_suite_report(report)
        assert 'SUITE monotonicity' in text
        assert '✗ case 3 (seed 42) at w' in text
        assert text.rstrip().endswith('✗ failed')

    def test_suite_report_limit(self):
        failures = [SuiteFailure(i, i, '', '', 'true', 'false') for i in range(3)]
        report = SuiteReport('star', 3, failures, 0.1, 0, {})
        text = ReportGenerator(failure_limit=1).generate_suite_report(report)
        assert '... 2 more failures' in text
        assert json.loads(ReportGenerator().generate_suite_report(report, as_json=True))['passed'] \
            is False
