from circ_minors.oracle.cross import (
    CrossReport,
    cross_validate,
    cross_validate_circulant,
    sweep,
)
from circ_minors.oracle.families import FamilySearch, FamilyViolation, enumerate_families
from circ_minors.oracle.minors import (
    brute_minors,
    candidate_subsets,
    is_isomorphic_to_circulant,
)
