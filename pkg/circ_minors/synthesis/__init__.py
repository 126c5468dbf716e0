from circ_minors.synthesis.base import MinorWitness, SynthesisTrace, WindowRecord
from circ_minors.synthesis.forward import circuits_to_minor
from circ_minors.synthesis.reverse import (
    minor_to_circuits,
    normalize_bullets,
    select_r,
    trace_correspondence_holds,
    windows_and_R,
)
