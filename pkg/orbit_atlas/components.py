"""
Irreducible components of the complement of the dense orbit.

For a sincere dimension vector ``d`` and ``1 <= i < j <= t`` let
``r_{i,j} = min(d_i, ..., d_j)`` and let ``Y_{i,j}`` be the locus where
the composite map over ``[i,j]`` has rank below ``r_{i,j}``.

``J(d)`` holds the pairs whose interior entries all exceed both ends;
for those ``Y_{i,j}`` is irreducible of codimension
``|d_j - d_i| + 1``. ``I(d)`` is the subset of ``J(d)`` whose ``Y_{i,j}``
are the irreducible components of the complement.

"""
import itertools
import logging
from dataclasses import dataclass, field

from . import conf
from .core import DimensionVector, Multisegment, RankTriangle, Segment
from .core import require_sincere
from .counting import count_brute
from .exceptions import BudgetExceeded, DomainError
from .generic import (generic_by_levels, is_generic, maximal_rank,
                      multisegment_of_rank, rank_of_multisegment)
from .homext import ext_dim_one_characterization, orbit_codim, self_ext


logger = logging.getLogger(__name__)


def compute_J(d):
    """
    Return the sorted pairs ``(i, j)``, ``i < j``, whose interior entries
    are all strictly larger than ``max(d_i, d_j)``. Neighbouring pairs
    always qualify.

    """
    require_sincere(d)
    pairs = []
    for i in range(1, d.t + 1):
        interior_min = None
        for j in range(i + 1, d.t + 1):
            if interior_min is None or interior_min > max(d.at(i), d.at(j)):
                pairs.append((i, j))
            interior_min = (d.at(j) if interior_min is None
                            else min(interior_min, d.at(j)))
    return pairs


def _right_condition(d, i, j):
    # d_i < d_j: entries between j and the first later entry below d_i
    # must not drop below d_j
    a = j + 1
    while d.at(a) >= d.at(i):
        a += 1
    return all(d.at(l) >= d.at(j) for l in range(j + 1, a))


def _left_condition(d, i, j):
    b = i - 1
    while d.at(b) >= d.at(j):
        b -= 1
    return all(d.at(l) >= d.at(i) for l in range(b + 1, i))


def compute_I(d):
    """
    Return the sorted pairs of ``J(d)`` indexing the irreducible
    components of the complement of the dense orbit.

    A pair ``(i, j)`` of ``J(d)`` qualifies when ``d_i = d_j``; when
    ``d_i < d_j`` and every entry after ``j`` and before the first entry
    smaller than ``d_i`` is at least ``d_j``; or in the mirrored case.
    Entries outside ``1..t`` read as zero.

    """
    result = []
    for i, j in compute_J(d):
        if d.at(i) == d.at(j):
            result.append((i, j))
        elif d.at(i) < d.at(j):
            if _right_condition(d, i, j):
                result.append((i, j))
        elif _left_condition(d, i, j):
            result.append((i, j))
    return result


def _require_J(d, pair):
    if tuple(pair) not in compute_J(d):
        raise DomainError(
            '(%d,%d) is not in J(%s): Y_{i,j} is not irreducible there'
            % (pair[0], pair[1], d)
        )


def codimension(d, pair):
    """
    Codimension ``|d_j - d_i| + 1`` of ``Y_{i,j}`` for ``(i, j)`` in
    ``J(d)``.

    """
    _require_J(d, pair)
    i, j = pair
    return abs(d.at(j) - d.at(i)) + 1


def component_rank(d, pair):
    """
    The rank triangle of the dense orbit of ``Y_{i,j}``: the maximal
    triangle capped at ``r_{i,j} - 1`` on every window containing
    ``[i, j]``.

    """
    i, j = pair
    ceiling = d.window_min(i, j) - 1
    values = {}
    for (k, l), value in maximal_rank(d).entries:
        if k <= i and j <= l:
            value = min(value, ceiling)
        values[k, l] = value
    return RankTriangle(d, values)


def component_representative(d, pair):
    """
    Return the multisegment ``M(i,j)`` whose orbit is dense in
    ``Y_{i,j}``, for ``(i, j)`` in ``J(d)``.

    """
    _require_J(d, pair)
    return multisegment_of_rank(component_rank(d, pair))


@dataclass(frozen=True)
class ComponentDescriptor:
    """
    One irreducible component ``Y_{i,j}`` of the complement of the dense
    orbit.

    """
    pair: tuple
    codim: int
    representative: Multisegment
    rank: RankTriangle = field(compare=False)

    def to_json(self):
        return {
            'pair': list(self.pair),
            'codim': self.codim,
            'representative': str(self.representative),
        }


def decompose_complement(d):
    """
    Return one ``ComponentDescriptor`` per pair of ``I(d)``, sorted by
    pair. The list is empty exactly when ``t = 1``.

    """
    components = []
    for pair in compute_I(d):
        representative = component_representative(d, pair)
        components.append(ComponentDescriptor(
            pair=pair,
            codim=codimension(d, pair),
            representative=representative,
            rank=rank_of_multisegment(representative),
        ))
    return components


def in_locus(m, pair):
    """
    Return whether ``m`` lies in ``Y_{i,j}``, i.e. its rank over
    ``[i, j]`` is below ``r_{i,j}``.

    """
    i, j = pair
    d = m.dimension
    return rank_of_multisegment(m)[i, j] <= d.window_min(i, j) - 1


def degeneration_leq(m, n):
    """
    Return whether the orbit of ``m`` lies in the orbit closure of ``n``:
    the rank triangle of ``m`` is entrywise at most that of ``n``.

    """
    if m.dimension != n.dimension:
        raise DomainError('%s and %s have different dimension vectors'
                          % (m, n))
    return rank_of_multisegment(m).dominated_by(rank_of_multisegment(n))


def enumerate_multisegments(d, budget=None):
    """
    Yield every multisegment of dimension ``d`` exactly once, by
    backtracking over segments grouped by left endpoint.

    Raises ``BudgetExceeded`` before yielding anything when there are
    more than ``budget`` of them.

    """
    if budget is None:
        budget = conf.enum_budget()
    if count_brute(d, budget=budget) > budget:
        raise BudgetExceeded(budget)
    t = d.t

    def from_vertex(i, residual, chosen):
        if i > t:
            yield Multisegment(t, chosen)
            return
        yield from spread(i, t, residual[i - 1], residual, chosen)

    def spread(i, j, left, residual, chosen):
        if j == i:
            yield from from_vertex(i + 1, residual,
                                   chosen + [(Segment(i, i), left)])
            return
        cap = min([left] + residual[i:j])
        for multiplicity in range(cap, -1, -1):
            reduced = residual[:i] + [
                value - multiplicity for value in residual[i:j]
            ] + residual[j:]
            yield from spread(i, j - 1, left - multiplicity, reduced,
                              chosen + [(Segment(i, j), multiplicity)])

    return from_vertex(1, list(d), [])


@dataclass
class DecompositionReport:
    """
    Outcome of the exhaustive check of the component decomposition for
    one dimension vector.

    ``uncaught`` lists non-generic multisegments outside every
    ``Y_{i,j}`` with ``(i, j)`` in ``I(d)``; ``containments`` lists pairs
    ``(p, q)`` whose representative ``M(p)`` lies in ``Y_q``.

    """
    d: DimensionVector
    components: list
    checked: int = 0
    uncaught: list = field(default_factory=list)
    containments: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.uncaught and not self.containments

    def to_json(self):
        return {
            'd': self.d.to_json(),
            'components': [list(pair) for pair in self.components],
            'checked': self.checked,
            'uncaught': [str(m) for m in self.uncaught],
            'containments': [[list(p), list(q)]
                             for p, q in self.containments],
            'passed': self.passed,
        }


def verify_decomposition(d, budget=None):
    """
    Check the component decomposition for ``d`` by enumerating every
    multisegment of dimension ``d``.

    Every multisegment other than ``M(d)`` must lie in some ``Y_{i,j}``
    with ``(i, j)`` in ``I(d)``, and no representative ``M(p)`` may lie
    in ``Y_q`` for another ``q`` of ``I(d)``. Refuses with
    ``BudgetExceeded`` rather than checking a sample.

    """
    require_sincere(d)
    pairs = compute_I(d)
    report = DecompositionReport(d=d, components=pairs)
    generic = generic_by_levels(d)
    bound = maximal_rank(d)
    for m in enumerate_multisegments(d, budget=budget):
        report.checked += 1
        if m == generic:
            continue
        rank = rank_of_multisegment(m)
        if not any(rank[p] <= bound[p] - 1 for p in pairs):
            report.uncaught.append(m)
    for p in pairs:
        representative = component_representative(d, p)
        for q in pairs:
            if q != p and in_locus(representative, q):
                report.containments.append((p, q))
    if report.passed:
        logger.debug('decomposition of %s verified over %d multisegments',
                     d, report.checked)
    else:
        logger.warning('decomposition of %s failed: %d uncaught, %d '
                       'containments', d, len(report.uncaught),
                       len(report.containments))
    return report


def _decreasing_then_increasing(values):
    position = 1
    while position < len(values) and values[position] <= values[position - 1]:
        position += 1
    while position < len(values) and values[position] >= values[position - 1]:
        position += 1
    return position >= len(values)


def is_concave(d):
    """
    ``d_1 >= ... >= d_a <= ... <= d_t`` for some ``a``.

    """
    return _decreasing_then_increasing(list(d))


def is_unimodal(d):
    """
    ``d_1 <= ... <= d_a >= ... >= d_t`` for some ``a``.

    """
    return _decreasing_then_increasing([-value for value in d])


def is_pure(d):
    """
    Every pair ``(i, j)`` of ``I(d)`` has ``d_i = d_j``, i.e. every
    component has codimension one.

    """
    return all(d.at(i) == d.at(j) for i, j in compute_I(d))


def is_pure_recursive(d):
    """
    ``d_1 = d_t <= d_l`` for all ``l``, and the same recursively for each
    connected block of the support of ``d - d_1``.

    """
    require_sincere(d)

    def pure(block):
        if not block:
            return True
        floor = block[0]
        if block[-1] != floor or min(block) < floor:
            return False
        rest = [value - floor for value in block]
        blocks = [list(group) for positive, group
                  in itertools.groupby(rest, key=bool) if positive]
        return all(pure(sub) for sub in blocks)

    return pure(list(d))


def purity_agreement(max_t, max_entry):
    """
    Compare ``is_pure`` and ``is_pure_recursive`` on every sincere
    dimension vector with at most ``max_t`` entries, each at most
    ``max_entry``. Returns the vectors where they disagree.

    """
    disagreements = []
    for t in range(1, max_t + 1):
        for entries in itertools.product(range(1, max_entry + 1), repeat=t):
            d = DimensionVector(entries)
            if is_pure(d) != is_pure_recursive(d):
                disagreements.append(d)
    if disagreements:
        logger.warning('purity definitions disagree on %d vectors, first %s',
                       len(disagreements), disagreements[0])
    return disagreements


def ext_one_agreement(max_t, max_entry, budget=None):
    """
    Compare the summand description of ``dim Ext(M, M) = 1`` with
    ``self_ext`` on every multisegment of every sincere dimension vector
    with at most ``max_t`` entries, each at most ``max_entry``. Returns the
    multisegments where they disagree.

    """
    disagreements = []
    for t in range(1, max_t + 1):
        for entries in itertools.product(range(1, max_entry + 1), repeat=t):
            for m in enumerate_multisegments(DimensionVector(entries),
                                             budget=budget):
                if ext_dim_one_characterization(m) != (self_ext(m) == 1):
                    disagreements.append(m)
    if disagreements:
        logger.warning('Ext characterization disagrees on %d '
                       'multisegments, first %s', len(disagreements),
                       disagreements[0])
    return disagreements


def is_generic_by_separation(d):
    """
    For concave ``d``: generic exactly when any two equal entries have a
    strictly smaller entry between them.

    """
    if not is_concave(d):
        raise DomainError('%s is not concave' % d)
    for i in range(1, d.t + 1):
        for j in range(i + 1, d.t + 1):
            if d.at(i) == d.at(j) and not any(
                    d.at(l) < d.at(i) for l in range(i + 1, j)):
                return False
    return True


@dataclass(frozen=True)
class Classification:
    generic: bool
    pure: bool
    concave: bool
    unimodal: bool

    def to_json(self):
        return {'generic': self.generic, 'pure': self.pure,
                'concave': self.concave, 'unimodal': self.unimodal}


def classify(d):
    require_sincere(d)
    return Classification(
        generic=is_generic(d),
        pure=is_pure(d),
        concave=is_concave(d),
        unimodal=is_unimodal(d),
    )


def split_witnesses(d, pair):
    """
    For ``(i, j)`` outside ``J(d)`` whose smallest interior entry ``d_l``
    is at most ``min(d_i, d_j)``, return two multisegments in ``Y_{i,j}``:
    the first has low rank over ``[i, l]`` but full rank over ``[l, j]``,
    the second the other way round. Neither locus contains the other.

    Both cut the generic segment of level ``d_l`` through ``[i, j]``,
    just before and just after column ``l``.

    """
    require_sincere(d)
    i, j = pair
    if not 1 <= i < j <= d.t or (i, j) in compute_J(d):
        raise DomainError('(%d,%d) must be a pair outside J(%s)'
                          % (i, j, d))
    l = min(range(i + 1, j), key=lambda position: (d.at(position), position))
    level = d.at(l)
    if level > min(d.at(i), d.at(j)):
        raise DomainError('the smallest entry between %d and %d exceeds '
                          'min(d_%d, d_%d)' % (i, j, i, j))
    k0 = i
    while d.at(k0 - 1) >= level:
        k0 -= 1
    l0 = j
    while d.at(l0 + 1) >= level:
        l0 += 1
    generic = generic_by_levels(d)
    cut = Multisegment.from_segments(d.t, [Segment(k0, l0)])
    before = (generic - cut) + Multisegment.from_segments(
        d.t, [Segment(k0, l - 1), Segment(l, l0)])
    after = (generic - cut) + Multisegment.from_segments(
        d.t, [Segment(k0, l), Segment(l + 1, l0)])
    return before, after


def codimension_identity_holds(d, pair):
    """
    ``orbit_codim(M(i,j)) == |d_j - d_i| + 1``.

    """
    return orbit_codim(component_representative(d, pair)) == \
        codimension(d, pair)
