"""Common constants."""


class ArcKinds:
    """Standard names for arc kinds."""

    ROW = "row"
    FORWARD = "fwd"
    REVERSE = "rev"
    LONG = "long"

    SHORT = (FORWARD, REVERSE)
    ALL = (ROW, FORWARD, REVERSE, LONG)


class Closures:
    """Standard names for circular interval closures."""

    CLOSED = "closed"
    LEFT_OPEN = "half-open-left"
    RIGHT_OPEN = "half-open-right"
    OPEN = "open"

    ALL = (CLOSED, LEFT_OPEN, RIGHT_OPEN, OPEN)


class BlockKinds:
    """Standard names for block kinds."""

    CIRCLE = "circle"
    CROSS = "cross"
    BULLET = "bullet"


class Flavors:
    """Standard names for auxiliary digraphs."""

    F = "F"
    D = "D"
    G = "G"


class Provenance:
    """Standard names for the ways a minor is obtained."""

    CONTRACTION = "contraction"
    DELETION = "deletion"


class RandomModes:
    """Standard names for random matrix generators."""

    UNIFORM = "uniform"
    PERTURBED = "perturbed"

    ALL = (UNIFORM, PERTURBED)


class OutputModes:
    """Standard names for report output modes."""

    TEXT = "text"
    JSON = "json"


class Commands:
    """Standard names for CLI commands."""

    ANALYZE = "analyze"
    MINORS = "minors"
    FROM_CIRCUITS = "from-circuits"
    TO_CIRCUITS = "to-circuits"
    CIRCULANT = "circulant"
    ORACLE = "oracle"

    ALL = (ANALYZE, MINORS, FROM_CIRCUITS, TO_CIRCUITS, CIRCULANT, ORACLE)
