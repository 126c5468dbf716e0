from circ_minors.circuits.base import (
    Block,
    Circuit,
    CircuitFamily,
    Classification,
    validate_circuit,
)
from circ_minors.circuits.classify import classify
from circ_minors.circuits.families import member_signature, shrink_family, validate_family
from circ_minors.circuits.io import load_circuits, parse_circuits, resolve_vertex_sequence
from circ_minors.circuits.jumps import (
    bad_arcs,
    check_jump_theorem,
    jump_counts,
    reconstruct_row_arcs,
)
