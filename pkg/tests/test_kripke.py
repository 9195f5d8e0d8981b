import json

import pytest
from hypothesis import given

from src.config import config
from src.errors import (
    ModelConstructionError, ModelFormatError, PreconditionError, SignatureError, UnknownWorldError,
)
from src.kripke.algebra import (
    check_isomorphism, constant_extension, generated_submodel, induced_submodel, is_submodel,
    reduct, relabel_elements, relabel_worlds, rename_model, union_chain,
)
from src.kripke.generator import GeneratorParams, generate_random_model
from src.kripke.injectivize import births, injectivize, injectivize_with_projection
from src.kripke.loader import dump_model, load_model, model_from_dict, model_to_dict
from src.kripke.model import Element, KripkeModel
from src.kripke.validation import classify_model, is_valid, require_valid, validate_model
from src.semantics.evaluator import Evaluator
from src.semantics.logics import Logic
from src.syntax.parser import parse_formula
from src.syntax.renaming import RenamingMap, rename_formula
from src.syntax.signature import Signature
from tests.strategies import models, seeds

P1 = Signature.create({'P': 1})
a, b = Element('w', 'a'), Element('v', 'b')


def chain(p_at_w=(), p_at_v=(b,), hom=None):
    return KripkeModel.build(P1, ['w', 'v'], [('w', 'v')], {'w': [a], 'v': [b]},
                             {'w': {'P': [(x,) for x in p_at_w]},
                              'v': {'P': [(x,) for x in p_at_v]}},
                             homs={('w', 'v'): {a: b} if hom is None else hom})


def meet(extra=False, constant=False):
    """w1, w2 below v; every element at w1 and w2 goes to c at v"""
    sig = Signature.create({'P': 1}, ['k'] if constant else [])
    x, y, y2, z = Element('w1', 'a'), Element('w2', 'b'), Element('w2', 'b2'), Element('v', 'c')
    below = [y, y2] if extra else [y]
    domains = {'w1': [x], 'w2': below, 'v': [z]}
    constants = None
    if constant:
        domains['v'] = [z, Element('v', 'd')]
        constants = {'w1': {'k': x}, 'w2': {'k': y}, 'v': {'k': z}}
    return KripkeModel.build(sig, ['w1', 'w2', 'v'], [('w1', 'v'), ('w2', 'v')], domains,
                             {'w1': {'P': [(x,)]}, 'v': {'P': [(z,)]}}, constants,
                             homs={('w1', 'v'): {x: z}, ('w2', 'v'): {e: z for e in below}})


def laws(m):
    return {d.law for d in validate_model(m)}


class TestModel:
    def test_build_closes_order_and_adds_identities(self, fix_chain):
        assert fix_chain.order == frozenset({('w', 'w'), ('v', 'v'), ('w', 'v')})
        assert fix_chain.hom('w', 'w') == {a: a}
        assert fix_chain.successors('w') == ('v', 'w')
        assert fix_chain.strict_successors('w') == ('v',)
        assert fix_chain.minimal_worlds() == ('w',)
        assert fix_chain.is_rooted_at('w')

    def test_element_lookup(self, fix_chain):
        assert fix_chain.element('v', 'b') == b
        assert str(b) == 'b@v'

    def test_unknown_world(self, fix_chain):
        with pytest.raises(UnknownWorldError):
            fix_chain.domain('u')

    def test_push_along_hom(self, fix_cd):
        assert fix_cd.push('w', 'v', (Element('w', 'a'),)) == (Element('v', 'b'),)
        assert fix_cd.constant('v', 'c') == Element('v', 'b')


class TestValidation:
    @pytest.mark.parametrize('name', sorted(config.fixtures))
    def test_fixtures_are_valid(self, name):
        assert validate_model(load_model(config.fixture_path(name))) == []

    def test_preservation(self):
        m = chain(p_at_w=(a,), p_at_v=())
        assert 'hom-preservation' in laws(m)
        assert not is_valid(m)
        with pytest.raises(PreconditionError):
            require_valid(m)

    def test_antisymmetry(self):
        m = KripkeModel.build(P1, ['w', 'v'], [('w', 'v'), ('v', 'w')],
                              {'w': [a], 'v': [b]},
                              homs={('w', 'v'): {a: b}, ('v', 'w'): {b: a}})
        assert 'antisymmetry' in laws(m)

    def test_hom_totality(self):
        assert 'hom-totality' in laws(chain(hom={}))

    def test_hom_codomain(self):
        assert 'hom-codomain' in laws(chain(hom={a: Element('v', 'z')}))

    def test_constant_denotation(self):
        sig = Signature.create({'P': 1}, ['c'])
        m = KripkeModel.build(sig, ['w'], [], {'w': [a]})
        assert laws(m) == {'constant-denotation'}

    def test_interpretation_outside_domain(self):
        m = KripkeModel.build(P1, ['w'], [], {'w': [a]}, {'w': {'P': [(b,)]}})
        assert 'interpretation' in laws(m)

    def test_diagnostic_text(self):
        (d,) = validate_model(chain(p_at_w=(a,), p_at_v=()))
        assert str(d).startswith('[hom-preservation]')

    def test_classes_of_fixtures(self, fix_chain, fix_cd, fix_eq):
        assert classify_model(fix_chain).as_dict() == {'in': True, 'su': True, 'bi': True}
        assert classify_model(fix_cd).as_dict() == {'in': True, 'su': False, 'bi': False}
        assert classify_model(fix_eq).as_dict() == {'in': False, 'su': True, 'bi': False}


class TestLoader:
    def test_dump_then_load(self, fix_cd):
        assert model_from_dict(json.loads(dump_model(fix_cd))) == fix_cd

    def test_only_covering_homs_written(self):
        m = KripkeModel.build(P1, ['u', 'v', 'w'], [('u', 'v'), ('v', 'w')],
                              {'u': [Element('u', 'x')], 'v': [Element('v', 'y')],
                               'w': [Element('w', 'z')]},
                              homs={('u', 'v'): {Element('u', 'x'): Element('v', 'y')},
                                    ('v', 'w'): {Element('v', 'y'): Element('w', 'z')}})
        data = model_to_dict(m)
        assert sorted(data['homs']) == ['u>v', 'v>w']
        assert data['order'] == [['u', 'v'], ['v', 'w']]
        assert model_from_dict(data).hom('u', 'w') == {Element('u', 'x'): Element('w', 'z')}

    def test_missing_worlds(self):
        with pytest.raises(ModelFormatError):
            model_from_dict({'signature': {'preds': {'P': 1}}})

    def test_unknown_symbol(self):
        data = model_to_dict(load_model(config.fixture_path('FIX-CHAIN')))
        data['interp']['w']['S'] = []
        with pytest.raises(ModelFormatError):
            model_from_dict(data)

    def test_bad_hom_key(self):
        data = model_to_dict(load_model(config.fixture_path('FIX-CHAIN')))
        data['homs'] = {'w>u': {'a': 'b'}}
        with pytest.raises(ModelFormatError):
            model_from_dict(data)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ModelFormatError):
            load_model(tmp_path / 'absent.json')

    def test_write_file(self, tmp_path, fix_eq):
        target = tmp_path / 'eq.json'
        dump_model(fix_eq, target)
        assert load_model(target) == fix_eq


class TestAlgebra:
    def test_generated_submodel(self, fix_cd):
        g = generated_submodel(fix_cd, 'v')
        assert g.worlds == ('v',)
        assert is_submodel(g, fix_cd)
        assert is_valid(g)

    def test_induced_submodel_must_be_closed(self, fix_cd):
        with pytest.raises(ModelConstructionError):
            induced_submodel(fix_cd, ['w', 'v'], [Element('w', 'a'), Element('v', 'b2')])

    def test_constant_extension(self, fix_chain):
        n = constant_extension(fix_chain, 'w', ['c1'], [a])
        assert n.constant('w', 'c1') == a
        assert n.constant('v', 'c1') == b
        assert n.signature.constants == frozenset({'c1'})

    def test_constant_extension_needs_fresh_names(self, fix_cd):
        with pytest.raises(SignatureError):
            constant_extension(fix_cd, 'w', ['c'], [Element('w', 'a')])
        with pytest.raises(PreconditionError):
            constant_extension(fix_cd, 'w', ['d'], [Element('v', 'b')])

    def test_reduct(self, fix_cd):
        r = reduct(fix_cd, Signature.create({'P': 1}))
        assert r.signature.predicate_map == {'P': 1}
        assert r.signature.constants == frozenset()
        assert r.extension('v', 'P') == fix_cd.extension('v', 'P')

    def test_reduct_needs_subsignature(self, fix_chain):
        with pytest.raises(SignatureError):
            reduct(fix_chain, Signature.create({'Q': 1}))

    def test_union_of_chain(self, fix_cd):
        assert union_chain([generated_submodel(fix_cd, 'v'), fix_cd]) == fix_cd

    def test_union_rejects_non_chain(self, fix_cd, fix_chain):
        with pytest.raises(PreconditionError):
            union_chain([fix_cd, generated_submodel(fix_cd, 'v')])

    def test_relabelled_copy_is_isomorphic(self, fix_cd):
        copy, g = relabel_elements(fix_cd, {Element('v', 'b2'): 'z'})
        assert check_isomorphism(fix_cd, copy, g, {w: w for w in fix_cd.worlds})
        moved, g2, h2 = relabel_worlds(fix_cd, {'w': 'root'})
        assert moved.worlds == ('root', 'v')
        assert check_isomorphism(fix_cd, moved, g2, h2)

    def test_identity_is_not_an_isomorphism_onto_other_model(self, fix_chain):
        other = chain(p_at_v=())
        identity = {e: e for e in fix_chain.all_elements()}
        assert not check_isomorphism(fix_chain, other, identity, {'w': 'w', 'v': 'v'})

    def test_rename_model(self, fix_cd):
        r = RenamingMap.create({'P': 'S', 'Q': 'T'}, {'c': 'e'})
        renamed = rename_model(fix_cd, r)
        assert renamed.signature.predicate_map == {'S': 1, 'T': 1}
        assert renamed.extension('v', 'T') == fix_cd.extension('v', 'Q')
        assert renamed.constant('w', 'e') == a
        f = parse_formula('forall x. P(x) | Q(c)', fix_cd.signature)
        assert Evaluator(Logic.IL, renamed).evaluate('w', rename_formula(r, f)) == \
            Evaluator(Logic.IL, fix_cd).evaluate('w', f)


class TestInjectivize:
    def test_births(self, fix_eq):
        assert births(fix_eq) == {'w': [Element('w', 'a1'), Element('w', 'a2')], 'v': []}

    def test_equality_is_refused(self, fix_eq):
        with pytest.raises(SignatureError):
            injectivize(fix_eq)

    def test_collapsing_hom_is_split(self, fix_eq):
        m = fix_eq.with_equality(False)
        n, projection = injectivize_with_projection(m)
        assert classify_model(n).in_class
        assert len(n.domain('v')) == 2
        assert set(projection.values()) == set(m.all_elements())

    @given(models(preds={'P': 1, 'R': 2}))
    def test_lands_in_in_class(self, m):
        n = injectivize(m)
        assert is_valid(n)
        assert classify_model(n).in_class

    @given(models(cls='Su', preds={'P': 1}))
    def test_keeps_surjectivity(self, m):
        assert classify_model(injectivize(m)).su_class

    def test_two_roots_meeting_above(self):
        n = injectivize(meet())
        assert classify_model(n).as_dict() == {'in': True, 'su': True, 'bi': True}
        assert [e.name for e in n.sorted_domain('v')] == ['c']

    def test_two_roots_with_a_collapse_above(self):
        m = meet(extra=True)
        assert classify_model(m).as_dict() == {'in': False, 'su': True, 'bi': False}
        n, projection = injectivize_with_projection(m)
        assert classify_model(n).bi_class
        assert [e.name for e in n.sorted_domain('w1')] == ['w1:a,w2:b', 'w1:a,w2:b2']
        assert len(n.domain('v')) == 2
        assert {projection[e] for e in n.domain('w2')} == set(m.domain('w2'))

    def test_injective_model_is_kept(self):
        m = meet(constant=True)
        n, projection = injectivize_with_projection(m)
        assert len(n.all_elements()) == len(m.all_elements())
        g = {e: x for x, e in projection.items()}
        assert check_isomorphism(m, n, g, {w: w for w in m.worlds})

    @given(models(cls='In', preds={'P': 1}, consts=('c',)))
    def test_injective_models_come_back_isomorphic(self, m):
        n, projection = injectivize_with_projection(m)
        g = {e: x for x, e in projection.items()}
        assert check_isomorphism(m, n, g, {w: w for w in m.worlds})

    @given(models(preds={'P': 1}, consts=('c',)))
    def test_atomic_truth_transfers(self, m):
        n, projection = injectivize_with_projection(m)
        f = parse_formula('exists x. P(x) & P(c)', m.signature)
        for w in m.worlds:
            assert Evaluator(Logic.IL, n).evaluate(w, f) == Evaluator(Logic.IL, m).evaluate(w, f)


class TestGenerator:
    @given(seeds)
    def test_same_seed_same_model(self, seed):
        params = GeneratorParams(preds={'P': 1, 'Q': 1}, consts=('c',))
        assert generate_random_model(seed, params) == generate_random_model(seed, params)

    @pytest.mark.parametrize('cls', ['In', 'Su', 'Bi'])
    def test_requested_class(self, cls):
        flags = classify_model(generate_random_model(7, GeneratorParams(cls=cls)))
        assert {'In': flags.in_class, 'Su': flags.su_class, 'Bi': flags.bi_class}[cls]

    @given(models(max_worlds=4, max_domain=3, preds={'P': 1, 'R': 2}, consts=('c',)))
    def test_generated_models_are_valid(self, m):
        assert validate_model(m) == []
        assert all(m.domain(w) for w in m.worlds)

    def test_bad_parameters(self):
        with pytest.raises(PreconditionError):
            generate_random_model(0, GeneratorParams(max_worlds=0))
        with pytest.raises(PreconditionError):
            generate_random_model(0, GeneratorParams(cls='Xy'))
