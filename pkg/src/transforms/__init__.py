"""Model transformations: unravellings, quotients, star expansions, corrections"""

from src.transforms.unravel import (
    UnravelMode, corresponding_worlds, copy_tuple, last_world, unravel,
    unravelling_relation,
)
from src.transforms.congruence import (
    Congruence, check_congruence, coarsest_congruence, congruence_axioms,
    quotient, quotient_relation, quotient_with_map, upset_congruence,
)
from src.transforms.star import StarModel, derive_star_congruence, q_formulas, star_expand
from src.transforms.correction import isomorphic_correction

__all__ = [
    'UnravelMode', 'corresponding_worlds', 'copy_tuple', 'last_world', 'unravel',
    'unravelling_relation',
    'Congruence', 'check_congruence', 'coarsest_congruence', 'congruence_axioms',
    'quotient', 'quotient_relation', 'quotient_with_map', 'upset_congruence',
    'StarModel', 'derive_star_congruence', 'q_formulas', 'star_expand',
    'isomorphic_correction',
]
