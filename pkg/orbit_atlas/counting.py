"""
Two independent counts of the orbits ``N(d)`` for a dimension vector:
a brute-force count of multiplicity triangles (Kostant's partition
function) and a sum over chains of partitions weighted by the
pairwise factor ``NA``.

"""
import logging
from functools import lru_cache
from itertools import product

from . import conf
from .core import Partition, RankTriangle, require_sincere
from .exceptions import BudgetExceeded
from .generic import is_realizable, maximal_rank


logger = logging.getLogger(__name__)


def count_brute(d, budget=None):
    """
    Count the multisegments of dimension ``d``.

    Segments are chosen by left endpoint: all segments starting at
    vertex ``i`` together use up what is left of ``d_i``, longest first,
    each bounded by the remaining entries it covers. Counts of equal
    suffix states are shared, and the number of distinct states visited
    is bounded by ``budget``.

    """
    if budget is None:
        budget = conf.enum_budget()
    t = len(d)
    visited = [0]

    @lru_cache(maxsize=None)
    def from_vertex(i, residual):
        # residual holds what is left of d_i, ..., d_t
        visited[0] += 1
        if visited[0] > budget:
            raise BudgetExceeded(budget, 'counting states')
        if i > t:
            return 1
        return spread(i, t, residual[0], residual)

    def spread(i, j, left, residual):
        # choose a_{i,j} for the current j, longer segments already fixed
        if j == i:
            return from_vertex(i + 1, residual[1:])
        total = 0
        cap = min(left, min(residual[1:j - i + 1]))
        for multiplicity in range(cap + 1):
            reduced = residual[:1] + tuple(
                value - multiplicity if offset < j - i else value
                for offset, value in enumerate(residual[1:])
            )
            total += spread(i, j - 1, left - multiplicity, reduced)
        return total

    count = from_vertex(1, tuple(d))
    logger.debug('brute count of %s: %d (%d states)', d, count, visited[0])
    return count


def enumerate_partitions(n):
    """
    Return all partitions of ``n`` in reverse lexicographic order, from
    ``(n)`` down to ``(1, ..., 1)``.

    """
    def descend(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in descend(remaining - part, part):
                yield (part,) + rest

    return [Partition(parts) for parts in descend(n, n)]


def na_pair(first, second):
    """
    The factor ``NA(λ, μ)``: zero when two parts in the same position
    (after padding with zeros) differ by two or more, otherwise the
    product over ``l >= 1`` of ``1 + #{i : λ_i = μ_i = l}``.

    """
    length = max(len(first), len(second))
    result = 1
    coincidences = {}
    for i in range(1, length + 1):
        a, b = first.part(i), second.part(i)
        if abs(a - b) >= 2:
            return 0
        if a == b and a >= 1:
            coincidences[a] = coincidences.get(a, 0) + 1
    for count in coincidences.values():
        result *= count + 1
    return result


def count_by_partitions(d):
    """
    Count the multisegments of dimension ``d`` as the sum, over chains of
    partitions ``λ^1, ..., λ^t`` of ``d_1, ..., d_t`` with ``λ^1`` and
    ``λ^t`` trivial, of the product of ``NA(λ^i, λ^{i+1})``.

    The sum is evaluated left to right as a vector indexed by the
    partitions of the current entry. For ``t = 1`` there is exactly one
    orbit.

    """
    require_sincere(d)
    t = len(d)
    if t == 1:
        return 1
    entries = list(d)
    layer = {Partition.trivial(entries[0]): 1}
    for position in range(1, t):
        if position == t - 1:
            targets = [Partition.trivial(entries[position])]
        else:
            targets = enumerate_partitions(entries[position])
        layer = {
            target: sum(weight * na_pair(source, target)
                        for source, weight in layer.items())
            for target in targets
        }
        logger.debug('partition layer %d of %s: %d classes', position + 1,
                     d, len(targets))
    return sum(layer.values())


def count_realizable_triangles(d):
    """
    Count the rank triangles bounded by ``min(d_i..d_j)`` whose second
    differences are all nonnegative. Exhaustive, for small ``d`` only.

    """
    bound = maximal_rank(d).as_dict()
    windows = sorted(bound)
    count = 0
    for values in product(*(range(bound[w] + 1) for w in windows)):
        if is_realizable(RankTriangle(d, zip(windows, values))):
            count += 1
    return count
