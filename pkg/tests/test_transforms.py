import pytest
from hypothesis import given

from src.asimulation.raw import RawPair, Side, check_asimulation_raw
from src.errors import (
    CongruenceError, EmbeddingError, ModelConstructionError, PreconditionError, SignatureError,
    UsageError,
)
from src.kripke.algebra import (
    check_isomorphism, generated_submodel, induced_submodel, is_submodel,
)
from src.kripke.model import Element, KripkeModel
from src.kripke.validation import is_valid, validate_model
from src.semantics.evaluator import Evaluator
from src.semantics.logics import Logic
from src.semantics.theories import theory_slice
from src.syntax.signature import Signature
from src.transforms.congruence import (
    Congruence, check_congruence, coarsest_congruence, quotient, quotient_relation,
    quotient_with_map, upset_congruence,
)
from src.transforms.correction import isomorphic_correction
from src.transforms.star import derive_star_congruence, q_formulas, star_expand
from src.transforms.unravel import (
    UnravelMode, corresponding_worlds, last_world, unravel, unravelling_relation,
)
from tests.strategies import models

ROOTS = RawPair(Side.FORWARD, 'w', (), 'w', ())
x, y = Element('w', 'x'), Element('w', 'y')


def twins(p=()):
    """One world, two elements, P holding of `p`"""
    return KripkeModel.build(Signature.create({'P': 1}), ['w'], [], {'w': [x, y]},
                             {'w': {'P': [(e,) for e in p]}})


class TestUnravel:
    def test_chain_unravels_to_itself(self, fix_cd):
        u = unravel(fix_cd, 'w')
        assert u.worlds == ('w', 'w>v')
        assert validate_model(u) == []
        assert u.constant('w>v', 'c') == Element('w>v', 'b')
        assert corresponding_worlds(u) == {'w': 'w', 'w>v': 'v'}

    def test_bounded_mode_repeats_worlds(self, fix_chain):
        u = unravel(fix_chain, 'w', UnravelMode.bounded(2))
        assert u.worlds == ('w', 'w>v', 'w>w')
        assert is_valid(u)

    def test_generated_part_only(self, fix_chain):
        assert unravel(fix_chain, 'v').worlds == ('v',)

    def test_last_world(self):
        assert last_world('w0>w1>w3') == 'w3'

    @pytest.mark.parametrize('text, depth, expected', [
        ('strict', None, UnravelMode.strict()),
        ('bounded:3', None, UnravelMode.bounded(3)),
        ('bounded', 2, UnravelMode.bounded(2)),
    ])
    def test_mode_parsing(self, text, depth, expected):
        assert UnravelMode.parse(text, depth) == expected

    @pytest.mark.parametrize('text', ['bounded', 'zigzag', 'bounded:x'])
    def test_bad_modes(self, text):
        with pytest.raises(UsageError):
            UnravelMode.parse(text)

    def test_bounded_depth_must_be_positive(self):
        with pytest.raises(PreconditionError):
            UnravelMode.bounded(0)
        assert str(UnravelMode.bounded(4)) == 'bounded:4'

    def test_separator_in_world_names(self):
        m = KripkeModel.build(Signature.create({'P': 1}), ['a>b'], [],
                              {'a>b': [Element('a>b', 'e')]})
        with pytest.raises(ModelConstructionError):
            unravel(m, 'a>b')

    def test_relation_goes_both_ways(self, fix_cd):
        u = unravel(fix_cd, 'w')
        relation = unravelling_relation(fix_cd, 'w', u, 2)
        assert check_asimulation_raw(Logic.IL, fix_cd, u, relation, ROOTS, 2)
        assert check_asimulation_raw(Logic.IL, u, fix_cd, relation.reversed(), ROOTS, 2)

    @given(models(max_worlds=3, preds={'P': 1, 'Q': 1}))
    def test_unravelling_keeps_the_theory(self, m):
        w = m.minimal_worlds()[0]
        u = unravel(m, w)
        for s in u.worlds:
            assert theory_slice(Logic.IL, u, s, 1, 40).same_theory(
                theory_slice(Logic.IL, m, last_world(s), 1, 40))


class TestCongruence:
    def test_coarsest_merges_indistinguishable_elements(self):
        m = twins()
        cong = coarsest_congruence(m)
        assert cong.related(x, y)
        q, g = quotient_with_map(Logic.IL, m, cong)
        assert g[x] == g[y] == Element('w', '[x,y]')
        assert q.sorted_domain('w') == [Element('w', '[x,y]')]

    def test_coarsest_keeps_distinguishable_elements(self, fix_cd):
        assert coarsest_congruence(fix_cd).is_diagonal()
        assert not coarsest_congruence(twins([x])).related(x, y)

    def test_collapse_follows_homs(self, fix_eq):
        cong = coarsest_congruence(fix_eq)
        assert cong.related(Element('w', 'a1'), Element('w', 'a2'))
        assert upset_congruence(fix_eq, ['v']).classes['w'] == Congruence.diagonal(fix_eq).classes['w']

    def test_check_reports_failed_compatibility(self):
        cong = Congruence.from_pairs(twins([x]), [(x, y)])
        ok, problems = check_congruence(Logic.IL, twins([x]), cong)
        assert not ok
        assert any(p.law == 'compat-P' for p in problems)
        with pytest.raises(CongruenceError):
            quotient(Logic.IL, twins([x]), cong)

    def test_equality_only_admits_the_diagonal(self):
        m = twins().with_equality(True)
        ok, problems = check_congruence(Logic.ILeq, m, coarsest_congruence(m))
        assert not ok
        assert [p.law for p in problems] == ['diagonal']

    def test_partition_must_cover(self, fix_chain):
        ok, problems = check_congruence(Logic.IL, fix_chain, Congruence({'w': frozenset()}))
        assert not ok
        assert problems[0].law == 'totality'

    def test_from_pairs_stays_in_one_world(self, fix_chain):
        with pytest.raises(CongruenceError):
            Congruence.from_pairs(fix_chain, [(Element('w', 'a'), Element('v', 'b'))])
        with pytest.raises(CongruenceError):
            Congruence.diagonal(fix_chain).block(Element('u', 'a'))

    def test_describe(self):
        assert Congruence.from_pairs(twins(), [(x, y)]).describe() == '  w: {x,y}'

    def test_diagonal_quotient_is_isomorphic(self, fix_cd):
        q, g = quotient_with_map(Logic.IL, fix_cd, Congruence.diagonal(fix_cd))
        assert check_isomorphism(fix_cd, q, g, {w: w for w in fix_cd.worlds})

    @given(models(max_worlds=3, max_domain=3, preds={'P': 1}))
    def test_quotient_relation_goes_both_ways(self, m):
        q, g = quotient_with_map(Logic.IL, m, coarsest_congruence(m))
        assert is_valid(q)
        w = m.worlds[0]
        start = RawPair(Side.FORWARD, w, (), w, ())
        relation = quotient_relation(m, g, 1)
        assert check_asimulation_raw(Logic.IL, m, q, relation, start, 1)
        assert check_asimulation_raw(Logic.IL, q, m, relation.reversed(), start, 1)


class TestStar:
    def test_predicates_track_elements(self, fix_chain):
        s = star_expand(fix_chain, 'w')
        a, b = Element('w', 'a'), Element('v', 'b')
        assert s.plus(b) == 'Plus_1' and s.plus(a) == 'Plus_2'
        assert s.model.extension('v', s.plus(a)) == frozenset({(b,)})
        assert s.model.extension('w', s.plus(b)) == frozenset()
        assert s.model.extension('w', s.minus(b)) == frozenset()
        assert s.model.extension('v', s.minus(a)) == frozenset({(b,)})
        assert validate_model(s.model) == []

    @given(models(max_worlds=3, preds={'P': 1}))
    def test_context_sentences_detect_the_order(self, m):
        s = star_expand(m, m.worlds[0])
        evaluator = Evaluator(Logic.IL, s.model)
        for u in m.worlds:
            above, not_below = q_formulas(s, u)
            for v in m.worlds:
                assert evaluator.evaluate(v, above) == m.leq(u, v)
                assert evaluator.evaluate(v, not_below) == (not m.leq(v, u))

    def test_derived_congruence(self, fix_cd):
        s = star_expand(fix_cd, 'w')
        cong = derive_star_congruence(Logic.IL, s.model, 'w')
        assert cong.is_diagonal()
        assert check_congruence(Logic.IL, generated_submodel(s.model, 'w'), cong)[0]

    def test_names_must_be_free(self):
        m = KripkeModel.build(Signature.create({'Plus_1': 1}), ['w'], [], {'w': [x]})
        with pytest.raises(SignatureError):
            star_expand(m, 'w')

    def test_derivation_needs_star_predicates(self, fix_cd):
        with pytest.raises(SignatureError):
            derive_star_congruence(Logic.IL, fix_cd, 'w')


class TestCorrection:
    def test_generated_submodel_is_corrected(self, fix_cd):
        small = generated_submodel(fix_cd, 'v')
        g = {e: e for e in small.all_elements()}
        corrected, g2, h2 = isomorphic_correction(Logic.IL, small, fix_cd, g, {'v': 'v'},
                                                  rank_bound=1, tuple_cap=1)
        assert is_submodel(small, corrected)
        assert check_isomorphism(corrected, fix_cd, g2, h2)
        assert len(corrected.worlds) == 2

    def test_non_elementary_embedding(self, fix_cd):
        a = Element('w', 'a')
        root = induced_submodel(fix_cd, ['w'], [a])
        with pytest.raises(EmbeddingError):
            isomorphic_correction(Logic.IL, root, fix_cd, {a: a}, {'w': 'w'},
                                  rank_bound=1, tuple_cap=1)

    def test_not_an_embedding(self, fix_cd):
        small = generated_submodel(fix_cd, 'v')
        with pytest.raises(EmbeddingError):
            isomorphic_correction(Logic.IL, small, fix_cd, {}, {'v': 'v'})
