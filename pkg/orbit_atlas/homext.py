"""
Hom, Ext and Euler pairings between segments and multisegments, and
the predicates built on them.

For segments ``a = [i,j]`` and ``b = [k,l]``::

    Hom(a, b) = 1  iff  k <= i <= l <= j
    Ext(a, b) = 1  iff  i < k <= j + 1 and j < l

and both vanish otherwise. Pairings extend bilinearly to multisegments.

"""
import logging

from .core import Multisegment, Segment, require_sincere
from .exceptions import DomainError, OrbitAtlasError
from .generic import generic_by_levels


logger = logging.getLogger(__name__)

HOM = 'hom'
EXT = 'ext'
EULER = 'euler'

KINDS = (HOM, EXT, EULER)


def hom_dim(a, b):
    return 1 if b.i <= a.i <= b.j <= a.j else 0


def ext_dim(a, b):
    return 1 if a.i < b.i <= a.j + 1 and a.j < b.j else 0


def _overlap(i, j, k, l):
    return max(0, min(j, l) - max(i, k) + 1)


def euler_form(a, b):
    """
    ``#([i,j] ∩ [k,l]) - #([i+1,j+1] ∩ [k,l])``, which equals
    ``hom_dim(a, b) - ext_dim(a, b)``.

    """
    return (_overlap(a.i, a.j, b.i, b.j)
            - _overlap(a.i + 1, a.j + 1, b.i, b.j))


_SEGMENT_PAIRINGS = {
    HOM: hom_dim,
    EXT: ext_dim,
    EULER: euler_form,
}


def pairing_dim(m, n, which):
    """
    Bilinear extension of a segment pairing to multisegments ``m`` and
    ``n``; ``which`` is one of ``'hom'``, ``'ext'`` or ``'euler'``.

    """
    try:
        pairing = _SEGMENT_PAIRINGS[which]
    except KeyError:
        raise DomainError('unknown pairing %r, expected one of %s'
                          % (which, ', '.join(KINDS)))
    if m.t != n.t:
        raise DomainError('multisegments live in different ambients '
                          '(t=%d and t=%d)' % (m.t, n.t))
    return sum(a_mult * b_mult * pairing(a, b)
               for a, a_mult in m for b, b_mult in n)


def self_ext(m):
    return pairing_dim(m, m, EXT)


def end_dim(m):
    """
    Dimension of the endomorphism ring of ``m``.

    """
    return pairing_dim(m, m, HOM)


def orbit_codim(m):
    """
    Codimension of the orbit of ``m`` in the representation space of its
    dimension vector; it equals ``dim Ext(m, m)``.

    """
    return self_ext(m)


def _nested_or_apart(a, b):
    return (a.contains(b) or b.contains(a)
            or a.j < b.i - 1 or b.j < a.i - 1)


def is_rigid(m):
    """
    Return whether ``m`` has no self-extension.

    Computed twice, from the pairwise nested-or-apart condition on
    summands and from ``self_ext``; the two must agree.

    """
    segments = m.distinct_segments()
    by_pairs = all(_nested_or_apart(a, b)
                   for a in segments for b in segments)
    by_ext = self_ext(m) == 0
    if by_pairs != by_ext:
        raise OrbitAtlasError('rigidity criteria disagree on %s' % m)
    return by_ext


def extending_pairs(m):
    """
    Return the ordered pairs ``(a, b)`` of distinct summands of ``m`` with
    ``Ext(a, b) != 0``.

    """
    segments = m.distinct_segments()
    return [(a, b) for a in segments for b in segments if ext_dim(a, b)]


def resolve_extension(m, a, b):
    """
    Replace the summands ``a = [i,j]`` and ``b = [k,l]`` of ``m`` (with
    ``Ext(a, b) != 0``) by the middle term ``[i,l] ⊕ [k,j]`` of the
    non-split extension, dropping ``[k,j]`` when ``k = j + 1``.

    ``m`` lies in the orbit closure of the result.

    """
    if not ext_dim(a, b):
        raise DomainError('%s and %s do not extend' % (a, b))
    pieces = [Segment(a.i, b.j)]
    if b.i <= a.j:
        pieces.append(Segment(b.i, a.j))
    removed = Multisegment.from_segments(m.t, [a, b])
    return (m - removed) + Multisegment.from_segments(m.t, pieces)


def ext_dim_one_characterization(m):
    """
    Return whether ``m`` has two summands ``[i,j]`` and ``[k,l]`` with
    ``i < k <= j + 1`` and ``j < l`` such that removing either of them
    leaves the generic multisegment of the remaining dimension vector.

    """
    for a, b in extending_pairs(m):
        rest = []
        for segment in (a, b):
            remainder = m - Multisegment.from_segments(m.t, [segment])
            rest.append(remainder == generic_by_levels(remainder.dimension))
        if all(rest):
            return True
    return False


def almost_generic_by_criterion(m):
    """
    The support-sum test for almost genericity: the multiplicity-free
    ``n`` with the same summands has ``dim Ext(n, n) = 1`` and one of the
    two summands of its extending pair occurs exactly once in ``m``.

    """
    n = m.support_sum()
    if self_ext(n) != 1:
        return False
    (a, b), = extending_pairs(n)
    return m[a] == 1 or m[b] == 1


def is_almost_generic(m):
    """
    Return whether the orbit of ``m`` is dense in an irreducible
    component of the complement of the dense orbit, i.e. whether ``m`` is
    the representative of one of the components of its dimension vector.

    """
    from .components import decompose_complement

    d = m.dimension
    require_sincere(d)
    result = any(component.representative == m
                 for component in decompose_complement(d))
    logger.debug('%s almost generic: %s', m, result)
    return result
