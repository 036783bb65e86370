"""
Tilting modules, their trees and the fan of cones they span.

A tilting module of the equioriented quiver with ``t`` vertices is
encoded by a full binary plane tree with leaves ``0..t``: the internal
vertex above the leaves ``x..y`` contributes the segment ``[x+1, y]``.
The dimension vectors of its ``t`` segments span a unimodular cone, and
the cones of all trees cover the positive orthant. Two trees are
neighbours when they differ by one rotation, i.e. by exchanging a single
segment.

"""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

import networkx as nx
import sympy

from . import conf
from .core import Multisegment, Segment, require_sincere
from .exceptions import BudgetExceeded, DomainError
from .generic import generic_by_levels


logger = logging.getLogger(__name__)

LEFT = 0
RIGHT = 1


@dataclass(frozen=True)
class PlaneTree:
    """
    An internal vertex with an ordered pair of children; each child is
    another ``PlaneTree`` or an integer leaf.

    """
    left: object
    right: object

    @cached_property
    def span(self):
        """
        The first and last leaf above this vertex.

        """
        return _span(self.left)[0], _span(self.right)[1]

    @property
    def t(self):
        return self.span[1] - self.span[0]

    @property
    def segment(self):
        first, last = self.span
        return Segment(first + 1, last)

    def internal_vertices(self, path=()):
        """
        Yield ``(path, vertex)`` for every internal vertex in preorder;
        a path is a tuple of ``LEFT``/``RIGHT`` steps from this vertex.

        """
        yield path, self
        for side, child in ((LEFT, self.left), (RIGHT, self.right)):
            if isinstance(child, PlaneTree):
                yield from child.internal_vertices(path + (side,))

    def segments(self):
        return [vertex.segment for _, vertex in self.internal_vertices()]

    def subtree(self, path):
        node = self
        for side in path:
            node = node.left if side == LEFT else node.right
        return node

    def replace(self, path, node):
        if not path:
            return node
        if path[0] == LEFT:
            return PlaneTree(self.left.replace(path[1:], node), self.right)
        return PlaneTree(self.left, self.right.replace(path[1:], node))

    def __str__(self):
        return '(%s,%s)' % (self.left, self.right)


def _span(node):
    if isinstance(node, PlaneTree):
        return node.span
    return node, node


def catalan(t):
    """
    The Catalan number ``binomial(2t, t) / (t + 1)``.

    """
    return int(sympy.catalan(t))


def _check_bound(t):
    if t < 1:
        raise DomainError('trees need t >= 1, got %d' % t)
    bound = conf.tree_t_max()
    if t > bound:
        raise BudgetExceeded(bound, 'vertices for tree enumeration')


@lru_cache(maxsize=None)
def _trees_over(first, last):
    if first == last:
        return (first,)
    return tuple(
        PlaneTree(left, right)
        for split in range(first, last)
        for left in _trees_over(first, split)
        for right in _trees_over(split + 1, last)
    )


def enumerate_trees(t):
    """
    Return every full binary plane tree with leaves ``0..t``, ordered by
    the leaf after which the root splits, then recursively by the left
    and right subtrees.

    Refuses with ``BudgetExceeded`` above the configured bound.

    """
    _check_bound(t)
    trees = list(_trees_over(0, t))
    logger.debug('enumerated %d trees for t=%d', len(trees), t)
    return trees


def tilting_of_tree(tree):
    """
    The multiplicity-free multisegment with one segment per internal
    vertex.

    """
    return Multisegment.from_segments(tree.t, tree.segments())


@dataclass(frozen=True)
class Exchange:
    """
    One rotation of ``tree`` into ``neighbor``.

    ``exchanged`` is the pair ``([a,b], [c,d])`` of the segment leaving
    and the segment entering, ordered so that
    ``a < c <= b + 1 < d + 1``; ``common`` holds the other ``t - 1``
    segments shared by both trees.

    """
    tree: PlaneTree
    neighbor: PlaneTree
    exchanged: tuple
    common: Multisegment

    @property
    def component(self):
        """
        The pair ``(i, j)`` of the component of the complement this
        rotation stands for: ``(c - 1, b + 1)``.

        """
        first, second = self.exchanged
        return second.i - 1, first.j + 1

    def to_json(self):
        return {
            'neighbor': str(self.neighbor),
            'exchanged': [str(segment) for segment in self.exchanged],
            'common': str(self.common),
            'component': list(self.component),
        }


def _rotate(tree, path):
    """
    Rotate at the non-root vertex ``path``: a left child ``((A,B),C)``
    becomes ``(A,(B,C))`` and a right child ``(A,(B,C))`` becomes
    ``((A,B),C)``. Returns the new tree with the removed and the added
    segment.

    """
    parent_path, side = path[:-1], path[-1]
    parent = tree.subtree(parent_path)
    vertex = tree.subtree(path)
    if side == LEFT:
        added = PlaneTree(vertex.right, parent.right)
        rotated = PlaneTree(vertex.left, added)
    else:
        added = PlaneTree(parent.left, vertex.left)
        rotated = PlaneTree(added, vertex.right)
    return tree.replace(parent_path, rotated), vertex.segment, added.segment


def neighbors(tree):
    """
    Return the ``t - 1`` exchanges of ``tree``, one per non-root internal
    vertex, in preorder.

    """
    if tree.t < 2:
        return []
    tilting = tilting_of_tree(tree)
    exchanges = []
    for path, _ in tree.internal_vertices():
        if not path:
            continue
        neighbor, removed, added = _rotate(tree, path)
        exchanges.append(Exchange(
            tree=tree,
            neighbor=neighbor,
            exchanged=tuple(sorted((removed, added))),
            common=tilting - Multisegment.from_segments(tree.t, [removed]),
        ))
    return exchanges


def facets(tree):
    """
    The facets of the cone of ``tree``: one exchange per facet, naming the
    segments spanning it and the cone on its other side.

    """
    return neighbors(tree)


def exchange_graph(t):
    """
    The graph with one vertex per tree and one edge per rotation.

    Vertices carry the tilting multisegment as ``label``; edges carry the
    exchanged pair as ``exchanged``.

    """
    graph = nx.Graph()
    for tree in enumerate_trees(t):
        graph.add_node(tree, label=str(tilting_of_tree(tree)))
    for tree in list(graph.nodes):
        for exchange in neighbors(tree):
            if not graph.has_edge(tree, exchange.neighbor):
                graph.add_edge(tree, exchange.neighbor,
                               exchanged=exchange.exchanged)
    logger.debug('exchange graph for t=%d: %d vertices, %d edges', t,
                 graph.number_of_nodes(), graph.number_of_edges())
    return graph


@dataclass(frozen=True)
class Cone:
    """
    The cone spanned by the dimension vectors of ``generators``.

    """
    t: int
    generators: tuple
    label: str

    @property
    def rays(self):
        return [segment.dimension(self.t) for segment in self.generators]

    def matrix(self):
        """
        The generator matrix, one column per generator.

        """
        return sympy.Matrix([list(ray) for ray in self.rays]).T

    @property
    def determinant(self):
        return int(self.matrix().det())

    def to_json(self):
        return {'label': self.label,
                'generators': [str(segment) for segment in self.generators]}


def cone_of_tree(tree):
    return Cone(t=tree.t, generators=tuple(sorted(tree.segments())),
                label=str(tree))


def coordinates(tree, d):
    """
    The coordinates of ``d`` with respect to the generators of the cone of
    ``tree``, as a dictionary segment -> integer.

    The segments of a tree are nested or disjoint, and each internal
    vertex owns the one vertex ``split + 1`` that none of its children's
    segments covers. The segments covering it are the vertex's own and
    those of its ancestors, so the coordinate is ``d`` there minus ``d``
    at the parent's own vertex.

    """
    entries = tuple(d)
    if len(entries) != tree.t:
        raise DomainError('%s has %d entries, the tree has t=%d'
                          % (d, len(entries), tree.t))
    values = {}
    pending = [(tree, 0)]
    while pending:
        node, above = pending.pop()
        if not isinstance(node, PlaneTree):
            continue
        here = entries[_span(node.left)[1]]
        values[node.segment] = here - above
        pending.append((node.left, here))
        pending.append((node.right, here))
    return values


@dataclass(frozen=True)
class Location:
    """
    Where a dimension vector sits in the fan.

    ``cone`` is the smallest cone containing ``d``, spanned by the
    summands of the generic multisegment; ``trees`` are the trees whose
    cones contain ``d``, with ``d``'s coordinates in ``coordinates``.

    """
    d: object
    cone: Cone
    trees: tuple
    coordinates: tuple

    @property
    def interior(self):
        return len(self.trees) == 1 and all(
            value > 0 for value in self.coordinates[0].values())

    def to_json(self):
        return {
            'd': self.d.to_json(),
            'minimal_cone': self.cone.to_json(),
            'trees': [str(tree) for tree in self.trees],
            'generic': self.interior,
        }


def locate(d):
    """
    Find the cones containing ``d``.

    """
    require_sincere(d)
    generic = generic_by_levels(d)
    cone = Cone(t=d.t, generators=tuple(generic.distinct_segments()),
                label=str(generic))
    trees = []
    found = []
    for tree in enumerate_trees(d.t):
        values = coordinates(tree, d)
        if all(value >= 0 for value in values.values()):
            trees.append(tree)
            found.append(values)
    logger.debug('%s lies in %d cones', d, len(trees))
    return Location(d=d, cone=cone, trees=tuple(trees),
                    coordinates=tuple(found))


def components_via_fan(d):
    """
    Read off the components of the complement of the dense orbit from the
    facets of the unique cone containing a generic ``d`` in its interior.

    """
    location = locate(d)
    if not location.interior:
        raise DomainError(
            '%s is not generic; use components.compute_I instead' % d
        )
    tree, = location.trees
    return sorted(exchange.component for exchange in neighbors(tree))
