import pytest
from hypothesis import given

from src.asimulation.derived import (
    check_type_inclusion_relation, project_subtuple, relation_from_type_inclusion,
    restrict_generated,
)
from src.asimulation.engine import (
    asim_exists, expand_positions, greatest_asimulation, position_bound, start_pair,
)
from src.asimulation.raw import (
    RawAsimulation, RawPair, Side, bounded_raw_search, check_asimulation_raw,
    identity_relation, raw_from_records,
)
from src.errors import AdmissibilityError, AsimulationError, BudgetExceededError
from src.kripke.model import Element
from src.semantics.logics import Logic
from src.semantics.theories import theory_slice, type_slice
from src.syntax.signature import fresh_constants
from src.transforms.unravel import copy_tuple, unravel
from tests.strategies import pointed

a, b = Element('w', 'a'), Element('v', 'b')
ROOTS = RawPair(Side.FORWARD, 'w', (), 'w', ())


class TestRawCheck:
    def test_identity_is_an_asimulation(self, fix_cd):
        outcome = check_asimulation_raw(Logic.IL, fix_cd, fix_cd, identity_relation(fix_cd, 1),
                                        ROOTS, 1)
        assert outcome
        assert str(outcome) == 'asimulation'

    def test_identity_reads_the_same_reversed(self, fix_cd):
        relation = identity_relation(fix_cd, 2)
        assert relation.reversed() == relation
        assert relation.max_length() == 2

    def test_missing_start_pair(self, fix_chain):
        relation = identity_relation(fix_chain, 1).without(ROOTS)
        outcome = check_asimulation_raw(Logic.IL, fix_chain, fix_chain, relation, ROOTS, 1)
        assert not outcome
        assert outcome.condition == 'elem'

    def test_atoms_must_transfer(self, fix_chain):
        start = RawPair(Side.FORWARD, 'v', (b,), 'w', (a,))
        outcome = check_asimulation_raw(Logic.IL, fix_chain, fix_chain,
                                        RawAsimulation.of([start]), start, 1)
        assert outcome.condition == 'atom'
        assert outcome.pair == start

    def test_successors_need_partners(self, fix_chain):
        relation = identity_relation(fix_chain, 0).without(
            RawPair(Side.BACKWARD, 'v', (), 'v', ()))
        outcome = check_asimulation_raw(Logic.IL, fix_chain, fix_chain, relation, ROOTS, 0)
        assert outcome.condition == 's-back'

    def test_elements_need_partners(self, fix_chain):
        relation = identity_relation(fix_chain, 1).without(
            RawPair(Side.FORWARD, 'w', (a,), 'w', (a,)))
        outcome = check_asimulation_raw(Logic.IL, fix_chain, fix_chain, relation, ROOTS, 1)
        assert outcome.condition in ('obj-forth', 'obj-back')

    def test_malformed_pairs(self, fix_chain):
        with pytest.raises(AsimulationError):
            check_asimulation_raw(Logic.IL, fix_chain, fix_chain,
                                  RawAsimulation.of([RawPair(Side.FORWARD, 'w', (a,), 'w', ())]),
                                  ROOTS)
        with pytest.raises(AsimulationError):
            check_asimulation_raw(Logic.IL, fix_chain, fix_chain, identity_relation(fix_chain, 0),
                                  ROOTS.flipped())

    def test_signatures_must_match(self, fix_chain, fix_cd):
        with pytest.raises(AsimulationError):
            check_asimulation_raw(Logic.IL, fix_chain, fix_cd, RawAsimulation.of([ROOTS]), ROOTS)

    def test_bad_records(self):
        with pytest.raises(AsimulationError):
            raw_from_records([{'from': 3, 'w': 'w', 'v': 'v'}])
        with pytest.raises(AsimulationError):
            raw_from_records([{'w': 'w'}])


class TestGreatestAsimulation:
    def test_self(self, fix_cd):
        relation = greatest_asimulation(Logic.IL, fix_cd, 'w', (), fix_cd, 'w', ())
        assert relation is not None
        assert start_pair(relation) == ROOTS
        assert ROOTS in expand_positions(relation, 1)
        assert relation.explored >= len(relation)

    def test_theory_growth_direction(self, fix_chain):
        assert asim_exists(Logic.IL, fix_chain, 'w', (), fix_chain, 'v', ())
        assert not asim_exists(Logic.IL, fix_chain, 'v', (), fix_chain, 'w', ())

    def test_tuples(self, fix_chain):
        assert asim_exists(Logic.IL, fix_chain, 'w', (a,), fix_chain, 'v', (b,))
        assert not asim_exists(Logic.IL, fix_chain, 'v', (b,), fix_chain, 'w', (a,))

    def test_equality_must_be_respected(self, fix_eq):
        a1, a2 = Element('w', 'a1'), Element('w', 'a2')
        assert not asim_exists(Logic.ILeq, fix_eq, 'v', (b, b), fix_eq, 'w', (a1, a2))
        assert asim_exists(Logic.ILeq, fix_eq, 'w', (a1, a2), fix_eq, 'v', (b, b))

    def test_budget(self, fix_cd):
        assert position_bound(fix_cd, fix_cd) > 1
        with pytest.raises(BudgetExceededError):
            greatest_asimulation(Logic.IL, fix_cd, 'w', (), fix_cd, 'w', (), budget=1)

    def test_requests_are_checked(self, fix_chain, fix_cd):
        with pytest.raises(AsimulationError):
            greatest_asimulation(Logic.IL, fix_chain, 'w', (a,), fix_chain, 'w', ())
        with pytest.raises(AsimulationError):
            greatest_asimulation(Logic.IL, fix_chain, 'w', (b,), fix_chain, 'v', (b,))
        with pytest.raises(AdmissibilityError):
            greatest_asimulation(Logic.CD, fix_cd, 'w', (), fix_cd, 'w', ())

    def test_agrees_with_explicit_search(self, fix_chain):
        for start, target in (('w', 'v'), ('v', 'w'), ('w', 'w')):
            explicit = bounded_raw_search(Logic.IL, fix_chain, start, (), fix_chain, target, (), 2)
            assert (explicit is not None) == asim_exists(Logic.IL, fix_chain, start, (),
                                                         fix_chain, target, ())

    @given(pointed(max_worlds=2, max_length=1, preds={'P': 1, 'Q': 1}))
    def test_every_model_simulates_itself(self, point):
        m, w, elements = point
        assert asim_exists(Logic.IL, m, w, elements, m, w, elements)

    @given(pointed(max_worlds=3, max_length=1, preds={'P': 1}))
    def test_unravelling_is_reached(self, point):
        m, w, elements = point
        u = unravel(m, w)
        assert asim_exists(Logic.IL, m, w, elements, u, w, copy_tuple(w, elements))
        assert asim_exists(Logic.IL, u, w, copy_tuple(w, elements), m, w, elements)

    @given(pointed(max_worlds=2, max_length=1, preds={'P': 1}),
           pointed(max_worlds=2, max_length=1, preds={'P': 1}))
    def test_truth_transfers_along_asimulations(self, left, right):
        (m1, w1, a1), (m2, w2, a2) = left, right
        if len(a1) != len(a2) or not asim_exists(Logic.IL, m1, w1, a1, m2, w2, a2):
            return
        consts = fresh_constants(m1.signature, len(a1))
        source = type_slice(Logic.IL, m1, w1, a1, 1, 40, constants=consts)
        target = type_slice(Logic.IL, m2, w2, a2, 1, 40, constants=consts)
        assert source.positive_included_in(target)


class TestDerived:
    def test_project_away_the_first_component(self, fix_chain):
        projected = project_subtuple(identity_relation(fix_chain, 2), [], 1)
        assert projected == identity_relation(fix_chain, 1)

    def test_bad_indices(self, fix_chain):
        with pytest.raises(AsimulationError):
            project_subtuple(identity_relation(fix_chain, 1), [1], 1)
        with pytest.raises(AsimulationError):
            project_subtuple(identity_relation(fix_chain, 2), [1, 0], 2)

    def test_restrict_to_generated_submodel(self, fix_chain):
        start = RawPair(Side.FORWARD, 'w', (a,), 'w', (a,))
        restricted = restrict_generated(identity_relation(fix_chain, 2), fix_chain, fix_chain,
                                        start)
        assert ROOTS in restricted
        assert RawPair(Side.FORWARD, 'v', (), 'v', ()) in restricted
        with pytest.raises(AsimulationError):
            restrict_generated(RawAsimulation.of([]), fix_chain, fix_chain, start)

    def test_type_inclusion_relates_a_world_to_itself(self, fix_chain):
        assert check_type_inclusion_relation(Logic.IL, fix_chain, 'w', fix_chain, 'w', 1, 1) \
            is not None
        slices_w = theory_slice(Logic.IL, fix_chain, 'w', 1)
        slices_v = theory_slice(Logic.IL, fix_chain, 'v', 1)
        assert not slices_v.positive_included_in(slices_w)
        assert check_type_inclusion_relation(Logic.IL, fix_chain, 'v', fix_chain, 'w', 1, 1) \
            is None

    def test_type_inclusion_candidate(self, fix_chain):
        relation = relation_from_type_inclusion(Logic.IL, fix_chain, fix_chain, 1, 0)
        assert ROOTS in relation
        assert RawPair(Side.FORWARD, 'w', (), 'v', ()) in relation
        assert RawPair(Side.FORWARD, 'v', (), 'w', ()) not in relation
        assert relation.max_length() == 0
