from circ_minors import common
from circ_minors.digraphs.base import Arc, ArcDigraph, jumped_vertices
from circ_minors.digraphs.builders import build_D, build_F, build_G


def get(flavor, **kwargs):
    """Returns the auxiliary digraph of the given flavor."""
    if flavor == common.Flavors.F:
        digraph = build_F(**kwargs)
    elif flavor == common.Flavors.D:
        digraph = build_D(**kwargs)
    elif flavor == common.Flavors.G:
        digraph = build_G(**kwargs)
    else:
        raise ValueError(f"Unknown digraph flavor: {flavor}")
    return digraph
