from circ_minors import common
from circ_minors.circulant.bridge import (
    DParams,
    GParams,
    check_D_params,
    check_G_params,
    decompose_shift_digraph,
    existence_D,
    existence_G,
    g_circuit_stats,
    iter_D_params,
    iter_G_params,
    translate_D_to_G,
    translate_G_to_D,
)


def existence(flavor, n, k, count):
    """Returns the first witness for `count` disjoint circuits in D(n, k) or G(n, k)."""
    if flavor == common.Flavors.D:
        witness = existence_D(n, k, count)
    elif flavor == common.Flavors.G:
        witness = existence_G(n, k, count)
    else:
        raise ValueError(f"Unknown circulant digraph flavor: {flavor}")
    return witness
