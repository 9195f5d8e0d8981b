import pytest

from src.config import config
from src.errors import UsageError
from src.suites import SUITES, case_seed, get_suite
from src.suites.corpus import corpus_pairs, small_corpus

SUITE_NAMES = [
    'cd-separation', 'equality-separation', 'monotonicity', 'substitution',
    'generated-submodel', 'quantifier-clauses', 'cutoff', 'quotient-faithfulness',
    'preservation', 'hennessy-milner', 'unravel-asim', 'quotient', 'star', 'injectivize',
    'renaming',
]


class TestRegistry:
    def test_every_suite_registered(self):
        assert sorted(SUITES) == sorted(SUITE_NAMES)
        assert all(SUITES[name].description for name in SUITES)

    def test_unknown_suite(self):
        with pytest.raises(UsageError):
            get_suite('nope')

    def test_case_seeds_differ(self):
        assert len({case_seed(0, i) for i in range(50)}) == 50
        assert case_seed(1, 0) != case_seed(0, 0)


class TestSuites:
    @pytest.mark.parametrize('name', SUITE_NAMES)
    def test_passes_on_a_few_cases(self, name):
        report = get_suite(name)(seed=0, count=2, rank=1).run()
        assert report.passed, report.failures
        assert report.cases >= 2
        assert report.caps['rank'] == 1

    def test_report_caps_name_every_search_limit(self):
        caps = get_suite('quotient-faithfulness')(seed=0, count=1, rank=1).run().caps
        assert caps['raw_tuple_length'] == config.raw_tuple_length
        assert caps['sentence_size'] == config.max_sentence_size
        assert caps['tuple_length'] == config.tuple_cap

    def test_same_seed_same_report(self):
        first = get_suite('monotonicity')(seed=5, count=3, rank=1).run()
        second = get_suite('monotonicity')(seed=5, count=3, rank=1).run()
        assert first.failures == second.failures
        assert first.cases == second.cases == 3

    def test_unravel_suite_starts_with_fixtures(self):
        assert get_suite('unravel-asim')(seed=0, count=0, rank=1).run().cases == 3


class TestCorpus:
    def test_models_contain_w(self):
        corpus = small_corpus()
        assert all('w' in m.worlds and len(m.worlds) <= 2 for m in corpus)
        assert sum(1 for m in corpus if len(m.worlds) == 1) == 5

    def test_antichain_included(self):
        corpus = small_corpus()
        discrete = [m for m in corpus if len(m.worlds) == 2 and not m.leq('w', 'v')]
        assert len(discrete) == 25
        assert not all(m.is_rooted_at('w') for m in corpus)

    def test_pairs(self):
        assert len(corpus_pairs()) == len(small_corpus()) ** 2

    @pytest.mark.parametrize('name', ['quotient-faithfulness', 'hennessy-milner'])
    def test_corpus_suites_cover_every_pair(self, name):
        report = get_suite(name)(seed=0, count=0, rank=1).run()
        assert report.passed, report.failures
        assert report.cases == len(corpus_pairs())
