"""Compatible noncrossing spanning paths on labelled point sets.

Point sets are lists of ``(label, x, y)`` tuples with labels ``1..n``.
Decision functions return a label sequence (list of ints) or ``None``.
"""

from ._core import (
    MAX_COORDINATE,
    DegenerateInputError,
    DomainError,
    Error,
    InputError,
    InvalidWitnessError,
    NotConvexError,
    OracleCapError,
    are_compatible,
    brute_force_compatible,
    brute_force_has_compatible_tree,
    check_order_monotone,
    compatible_monotone_paths,
    compatible_paths_convex,
    compatible_paths_polygons,
    convex_hull_cyclic_order,
    dump_instance,
    generate_negative_instance,
    inversion_number,
    is_noncrossing_spanning_path,
    naive_compatible_monotone,
    orientation,
    parse_instance,
    path_inside_polygon,
    render_svg,
    segments_properly_cross,
)


def points(xy, labels=None):
    """Label ``(x, y)`` pairs as 1..n in order, or with ``labels``."""
    xy = list(xy)
    if labels is None:
        labels = range(1, len(xy) + 1)
    return [(int(label), int(x), int(y)) for label, (x, y) in zip(labels, xy)]


__all__ = [name for name in dir() if not name.startswith("_")]
