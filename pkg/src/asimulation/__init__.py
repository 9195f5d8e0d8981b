"""Asimulations: raw checks, the position-quotient engine and derived relations"""

from src.asimulation.raw import (
    AsimCheck, RawAsimulation, RawPair, Side, atoms_transfer, bounded_raw_search,
    check_asimulation_raw, identity_relation, raw_from_records, raw_to_records,
)
from src.asimulation.engine import (
    AsimRelation, Position, asim_exists, expand_positions, greatest_asimulation,
    position_bound, start_pair,
)
from src.asimulation.derived import (
    check_type_inclusion_relation, project_subtuple, relation_from_type_inclusion,
    restrict_generated,
)

__all__ = [
    'AsimCheck', 'RawAsimulation', 'RawPair', 'Side', 'atoms_transfer',
    'bounded_raw_search', 'check_asimulation_raw', 'identity_relation',
    'raw_from_records', 'raw_to_records',
    'AsimRelation', 'Position', 'asim_exists', 'expand_positions',
    'greatest_asimulation', 'position_bound', 'start_pair',
    'check_type_inclusion_relation', 'project_subtuple',
    'relation_from_type_inclusion', 'restrict_generated',
]
