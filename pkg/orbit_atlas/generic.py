"""
The generic multisegment ``M(d)`` of a dimension vector and the
passage between multisegments and rank triangles.

``generic_by_levels`` is the construction everything else relies on;
``generic_recursive`` is an independent second construction kept as a
witness for it.

"""
from .core import Multisegment, RankTriangle, Segment
from .exceptions import RealizabilityError


def _runs(values, threshold):
    """
    Yield the maximal runs ``(i, j)`` (one-based, inclusive) of
    consecutive positions whose value is at least ``threshold``.

    """
    start = None
    for position, value in enumerate(values, start=1):
        if value >= threshold:
            if start is None:
                start = position
        elif start is not None:
            yield start, position - 1
            start = None
    if start is not None:
        yield start, len(values)


def generic_by_levels(d):
    """
    Return ``M(d)`` from its line diagram: column ``l`` holds ``d_l``
    vertices, vertices in the same row of neighbouring columns are
    joined, and every connected piece is one segment.

    Row ``k`` contributes one segment per maximal run of columns with
    ``d_l >= k``.

    """
    pairs = []
    for level in range(1, max(d) + 1):
        for i, j in _runs(d.entries, level):
            pairs.append((Segment(i, j), 1))
    return Multisegment(d.t, pairs)


def generic_recursive(d):
    """
    Return ``M(d)`` by repeated stripping: take the longest support
    interval of the remaining vector (leftmost among equally long ones),
    remove it as often as the remainder stays nonnegative, and repeat
    until nothing is left.

    On the first step the interval is the full block when ``d`` is
    sincere, so the multiplicity of ``[1,t]`` is ``min(d)``.

    """
    remainder = list(d.entries)
    pairs = []
    while any(remainder):
        runs = list(_runs(remainder, 1))
        i, j = min(runs, key=lambda run: (run[0] - run[1], run[0]))
        multiplicity = min(remainder[i - 1:j])
        for l in range(i - 1, j):
            remainder[l] -= multiplicity
        pairs.append((Segment(i, j), multiplicity))
    return Multisegment(d.t, pairs)


def rank_of_multisegment(multisegment):
    """
    Return the rank triangle of ``multisegment``: entry ``(i, j)`` counts,
    with multiplicity, the segments containing ``[i, j]``.

    """
    t = multisegment.t
    values = {(i, j): 0
              for i in range(1, t + 1) for j in range(i + 1, t + 1)}
    for segment, multiplicity in multisegment:
        for i in range(segment.i, segment.j + 1):
            for j in range(i + 1, segment.j + 1):
                values[i, j] += multiplicity
    return RankTriangle(multisegment.dimension, values)


def maximal_rank(d):
    """
    The rank triangle ``r_{i,j} = min(d_i, ..., d_j)`` of the dense orbit.

    """
    t = d.t
    values = {}
    for i in range(1, t + 1):
        smallest = d.at(i)
        for j in range(i + 1, t + 1):
            smallest = min(smallest, d.at(j))
            values[i, j] = smallest
    return RankTriangle(d, values)


def _first_negative(triangle):
    t = triangle.t
    for i in range(1, t + 1):
        for j in range(i, t + 1):
            value = triangle.second_difference(i, j)
            if value < 0:
                return (i, j), value
    return None


def is_realizable(triangle):
    """
    Return whether some multisegment of dimension ``triangle.d`` has rank
    triangle ``triangle``, i.e. every second difference is nonnegative.

    """
    return _first_negative(triangle) is None


def multisegment_of_rank(triangle):
    """
    Recover the multisegment with rank triangle ``triangle``; the
    multiplicity of ``[i, j]`` is the second difference at ``(i, j)``.

    Raises ``RealizabilityError`` naming the first window with a negative
    second difference.

    """
    negative = _first_negative(triangle)
    if negative is not None:
        raise RealizabilityError(*negative)
    t = triangle.t
    return Multisegment(t, (
        (Segment(i, j), triangle.second_difference(i, j))
        for i in range(1, t + 1) for j in range(i, t + 1)
    ))


def is_generic(d):
    """
    ``d`` is generic when ``M(d)`` has exactly ``t`` distinct summands.

    """
    return generic_by_levels(d).count_distinct == d.t


def line_diagram(d):
    """
    Return the line diagram of ``M(d)`` as text rows, top row first.

    Column ``l`` is a stack of ``d_l`` asterisks; two asterisks in the
    same row of neighbouring columns are joined by ``-``.

    """
    rows = []
    for level in range(max(d), 0, -1):
        cells = []
        for l in range(1, d.t + 1):
            if l > 1:
                joined = d.at(l - 1) >= level and d.at(l) >= level
                cells.append('-' if joined else ' ')
            cells.append('*' if d.at(l) >= level else ' ')
        rows.append(''.join(cells).rstrip())
    return rows
