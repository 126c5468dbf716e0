from circ_minors.matrices.base import CirculantPattern, CircularMatrix, drop_dominated
from circ_minors.matrices.minors import (
    Minor,
    contract,
    delete,
    is_interval_minor,
    recognize_circulant,
    trace,
)
from circ_minors.matrices.parsing import (
    load_matrix,
    make_circulant,
    matrix_to_document,
    parse_circular,
    random_circular_matrix,
)


def get(name, **kwargs):
    """Returns a circular matrix from the named source."""
    if name == "file":
        matrix = load_matrix(**kwargs)
    elif name == "circulant":
        matrix = make_circulant(**kwargs)
    elif name == "random":
        matrix = random_circular_matrix(**kwargs)
    else:
        raise ValueError(f"Unknown matrix source: {name}")
    return matrix
