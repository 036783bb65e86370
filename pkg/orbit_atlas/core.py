"""
Exact value types shared by every part of orbit-atlas: dimension
vectors, segments, multisegments, rank triangles and partitions.

Vertices of the equioriented quiver are numbered ``1..t``; every type
here uses that one-based numbering. All values are immutable.

Text forms::

    DimensionVector   5,4,3,1,2,4,6
    Segment           [1,3]
    Multisegment      [1,3]^2+[1,7]      (0 for the empty multisegment)
    Partition         3,2,2,1            (empty string for the empty one)
    RankTriangle      {"d": [1, 1], "s": [[1, 2, 1]]}

"""
import json
import re
from dataclasses import dataclass, field

from .exceptions import DomainError, ParseError


# Scanning

class _Scanner:
    """
    Minimal cursor over a string, used by the text parsers so that
    errors can name the offending position and the expected token.

    """
    _integer = re.compile(r'\d+')

    def __init__(self, text):
        self.text = text
        self.position = 0

    def skip_spaces(self):
        while (self.position < len(self.text)
               and self.text[self.position].isspace()):
            self.position += 1

    def at_end(self):
        self.skip_spaces()
        return self.position >= len(self.text)

    def peek(self, token):
        self.skip_spaces()
        return self.text.startswith(token, self.position)

    def error(self, expected, position=None):
        if position is None:
            position = self.position
        return ParseError(self.text, position, expected)

    def expect(self, token):
        if not self.peek(token):
            raise self.error("'%s'" % token)
        self.position += len(token)

    def integer(self):
        self.skip_spaces()
        match = self._integer.match(self.text, self.position)
        if match is None:
            raise self.error('a nonnegative integer')
        self.position = match.end()
        return int(match.group())

    def finish(self):
        if not self.at_end():
            raise self.error('end of input')


def _integer_list(text):
    scanner = _Scanner(text)
    values = [scanner.integer()]
    while not scanner.at_end():
        scanner.expect(',')
        values.append(scanner.integer())
    return values


# Dimension vectors

@dataclass(frozen=True)
class DimensionVector:
    """
    The dimensions ``(d_1, ..., d_t)`` at the vertices of the quiver.

    ``at(l)`` reads entry ``l`` with the convention that every index
    outside ``1..t`` (in particular ``0`` and ``t + 1``) reads as zero.

    """
    entries: tuple

    def __init__(self, entries):
        entries = tuple(int(value) for value in entries)
        if not entries:
            raise DomainError('a dimension vector needs at least one entry')
        if any(value < 0 for value in entries):
            raise DomainError('dimension vector entries must be '
                              'nonnegative: %r' % (entries,))
        object.__setattr__(self, 'entries', entries)

    @property
    def t(self):
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def at(self, l):
        if 1 <= l <= len(self.entries):
            return self.entries[l - 1]
        return 0

    @property
    def sincere(self):
        return all(value >= 1 for value in self.entries)

    def window_min(self, i, j):
        """
        Minimum of ``d_i, ..., d_j``.

        """
        if not 1 <= i <= j <= len(self.entries):
            raise DomainError('(%d,%d) is not a window of 1..%d'
                              % (i, j, len(self.entries)))
        return min(self.entries[i - 1:j])

    def __add__(self, other):
        if len(other) != len(self):
            raise DomainError('cannot add dimension vectors of different '
                              'lengths')
        return DimensionVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        if len(other) != len(self):
            raise DomainError('cannot subtract dimension vectors of '
                              'different lengths')
        return DimensionVector(a - b for a, b in zip(self, other))

    def __str__(self):
        return ','.join(str(value) for value in self.entries)

    def to_json(self):
        return list(self.entries)


def require_sincere(d):
    """
    Raise ``DomainError`` unless every entry of ``d`` is positive.

    """
    if not d.sincere:
        raise DomainError('dimension vector %s is not sincere (every '
                          'entry must be positive)' % d)


def parse_dimension_vector(text):
    return DimensionVector(_integer_list(text))


# Segments

@dataclass(frozen=True, order=True)
class Segment:
    """
    The interval ``[i, j]`` with ``1 <= i <= j``: the indecomposable
    representation supported on the vertices ``i..j``.

    Segments order lexicographically by ``(i, j)``.

    """
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i <= self.j:
            raise DomainError('[%d,%d] is not a segment (need 1 <= i <= j)'
                              % (self.i, self.j))

    @property
    def length(self):
        return self.j - self.i + 1

    def contains(self, other):
        return self.i <= other.i and other.j <= self.j

    def covers(self, l):
        return self.i <= l <= self.j

    def dimension(self, t):
        if self.j > t:
            raise DomainError('%s does not fit into t=%d' % (self, t))
        return DimensionVector(1 if self.i <= l <= self.j else 0
                               for l in range(1, t + 1))

    def __str__(self):
        return '[%d,%d]' % (self.i, self.j)


def _segment(scanner):
    start = scanner.position
    scanner.expect('[')
    i = scanner.integer()
    scanner.expect(',')
    j = scanner.integer()
    scanner.expect(']')
    if not 1 <= i <= j:
        raise scanner.error('a segment [i,j] with 1 <= i <= j', start)
    return Segment(i, j)


def parse_segment(text):
    scanner = _Scanner(text)
    segment = _segment(scanner)
    scanner.finish()
    return segment


# Multisegments

@dataclass(frozen=True)
class Multisegment:
    """
    A multiset of segments ``⊕ [i,j]^a`` inside the ambient ``1..t``.

    ``multiplicities`` is a tuple of ``(segment, multiplicity)`` pairs
    sorted by segment; multiplicities are always positive. Indexing with
    a segment returns its multiplicity, zero when absent.

    """
    t: int
    multiplicities: tuple = field(default=())

    def __init__(self, t, multiplicities=()):
        if t < 1:
            raise DomainError('t must be at least 1, got %d' % t)
        if hasattr(multiplicities, 'items'):
            multiplicities = multiplicities.items()
        totals = {}
        for segment, multiplicity in multiplicities:
            if multiplicity < 0:
                raise DomainError('negative multiplicity %d for %s'
                                  % (multiplicity, segment))
            if segment.j > t:
                raise DomainError('%s does not fit into t=%d'
                                  % (segment, t))
            totals[segment] = totals.get(segment, 0) + multiplicity
        pairs = tuple((segment, totals[segment])
                      for segment in sorted(totals) if totals[segment] > 0)
        object.__setattr__(self, 't', t)
        object.__setattr__(self, 'multiplicities', pairs)
        object.__setattr__(self, '_lookup', dict(pairs))

    @classmethod
    def from_segments(cls, t, segments):
        """
        Build a multisegment from an iterable of segments, repeated
        segments adding up.

        """
        return cls(t, ((segment, 1) for segment in segments))

    def __getitem__(self, segment):
        return self._lookup.get(segment, 0)

    def __contains__(self, segment):
        return self[segment] > 0

    def __iter__(self):
        return iter(self.multiplicities)

    def __len__(self):
        return sum(multiplicity for _, multiplicity in self.multiplicities)

    def __bool__(self):
        return bool(self.multiplicities)

    def items(self):
        return self.multiplicities

    def distinct_segments(self):
        return [segment for segment, _ in self.multiplicities]

    @property
    def count_distinct(self):
        return len(self.multiplicities)

    def support_sum(self):
        """
        The multiplicity-free multisegment with the same summands.

        """
        return Multisegment(self.t, ((segment, 1)
                                     for segment, _ in self.multiplicities))

    @property
    def dimension(self):
        return dimension_of(self)

    def _check_ambient(self, other):
        if other.t != self.t:
            raise DomainError('multisegments live in different ambients '
                              '(t=%d and t=%d)' % (self.t, other.t))

    def __add__(self, other):
        self._check_ambient(other)
        return Multisegment(self.t, self.multiplicities
                            + other.multiplicities)

    def __sub__(self, other):
        self._check_ambient(other)
        remaining = dict(self.multiplicities)
        for segment, multiplicity in other.multiplicities:
            if remaining.get(segment, 0) < multiplicity:
                raise DomainError('%s is not a summand of %s'
                                  % (other, self))
            remaining[segment] -= multiplicity
        return Multisegment(self.t, remaining)

    def scaled(self, factor):
        return Multisegment(self.t, ((segment, factor * multiplicity)
                                     for segment, multiplicity in self))

    def __str__(self):
        if not self.multiplicities:
            return '0'
        return '+'.join(
            str(segment) if multiplicity == 1
            else '%s^%d' % (segment, multiplicity)
            for segment, multiplicity in self.multiplicities
        )

    def to_json(self):
        return [[segment.i, segment.j, multiplicity]
                for segment, multiplicity in self.multiplicities]


def dimension_of(multisegment):
    """
    Return the dimension vector of ``multisegment``: entry ``l`` counts,
    with multiplicity, the segments covering ``l``.

    """
    entries = [0] * multisegment.t
    for segment, multiplicity in multisegment:
        for l in range(segment.i, segment.j + 1):
            entries[l - 1] += multiplicity
    return DimensionVector(entries)


def semisimple(d):
    """
    The multisegment ``⊕ [l,l]^{d_l}``.

    """
    return Multisegment(d.t, ((Segment(l, l), d.at(l))
                              for l in range(1, d.t + 1)))


def parse_multisegment(text, t=None):
    """
    Parse ``[i,j]^a+[k,l]+...``. The ambient ``t`` defaults to the
    largest right endpoint; ``0`` is the empty multisegment and needs an
    explicit ``t``.

    """
    scanner = _Scanner(text)
    pairs = []
    if scanner.peek('0'):
        scanner.expect('0')
        scanner.finish()
    else:
        while True:
            segment = _segment(scanner)
            multiplicity = 1
            if scanner.peek('^'):
                scanner.expect('^')
                multiplicity = scanner.integer()
                if multiplicity < 1:
                    raise scanner.error('a positive multiplicity')
            pairs.append((segment, multiplicity))
            if scanner.at_end():
                break
            scanner.expect('+')
    largest = max((segment.j for segment, _ in pairs), default=0)
    if t is None:
        if not pairs:
            raise DomainError('the empty multisegment needs an explicit t')
        t = largest
    elif largest > t:
        raise ParseError(text, 0, 'segments inside 1..%d' % t)
    return Multisegment(t, pairs)


# Rank triangles

@dataclass(frozen=True)
class RankTriangle:
    """
    Ranks ``s_{i,j}`` of the composite maps over the windows ``i < j``
    of a representation of dimension ``d``.

    ``self[i, j]`` is the extended accessor: ``d_i`` on the diagonal and
    ``0`` whenever ``i <= 0`` or ``j > t``.

    """
    d: DimensionVector
    entries: tuple

    def __init__(self, d, entries):
        if hasattr(entries, 'items'):
            entries = entries.items()
        values = dict(((int(i), int(j)), int(value))
                      for (i, j), value in entries)
        t = d.t
        expected = {(i, j) for i in range(1, t + 1)
                    for j in range(i + 1, t + 1)}
        if set(values) != expected:
            raise DomainError('a rank triangle for t=%d needs exactly the '
                              'windows i < j' % t)
        for (i, j), value in values.items():
            if not 0 <= value <= d.window_min(i, j):
                raise DomainError(
                    'rank %d at (%d,%d) outside 0..%d'
                    % (value, i, j, d.window_min(i, j))
                )
        object.__setattr__(self, 'd', d)
        object.__setattr__(self, 'entries', tuple(sorted(values.items())))
        object.__setattr__(self, '_values', values)

    @property
    def t(self):
        return self.d.t

    def __getitem__(self, pair):
        i, j = pair
        if i <= 0 or j > self.d.t:
            return 0
        if i == j:
            return self.d.at(i)
        if i > j:
            raise DomainError('(%d,%d) is not a window' % (i, j))
        return self._values[(i, j)]

    def as_dict(self):
        return dict(self.entries)

    def second_difference(self, i, j):
        """
        ``s_{i,j} - s_{i-1,j} - s_{i,j+1} + s_{i-1,j+1}``: the number of
        summands ``[i,j]`` of a multisegment with this triangle.

        """
        return (self[i, j] - self[i - 1, j] - self[i, j + 1]
                + self[i - 1, j + 1])

    def dominated_by(self, other):
        """
        Entrywise comparison ``self <= other``.

        """
        if other.d != self.d:
            raise DomainError('rank triangles of different dimension '
                              'vectors are not comparable')
        return all(self._values[key] <= value
                   for key, value in other.entries)

    def to_json(self):
        return {'d': list(self.d.entries),
                's': [[i, j, value] for (i, j), value in self.entries]}

    def __str__(self):
        return json.dumps(self.to_json(), separators=(', ', ': '))


def parse_rank_triangle(text):
    try:
        data = json.loads(text)
    except ValueError as exc:
        raise ParseError(text, getattr(exc, 'pos', 0), 'a JSON object')
    if not isinstance(data, dict) or set(data) != {'d', 's'}:
        raise ParseError(text, 0, 'an object with keys "d" and "s"')
    try:
        d = DimensionVector(data['d'])
    except (TypeError, ValueError):
        raise ParseError(text, 0, '"d" as a nonempty list of nonnegative '
                                  'integers')
    try:
        entries = [((i, j), value) for i, j, value in data['s']]
        return RankTriangle(d, entries)
    except (TypeError, ValueError):
        raise ParseError(text, 0, '"s" as a list of [i, j, value], one per '
                                  'window i < j with value in '
                                  '0..min(d_i, ..., d_j)')


# Partitions

@dataclass(frozen=True)
class Partition:
    """
    A weakly decreasing sequence of positive integers.

    ``part(i)`` reads the ``i``-th part (one-based), zero past the end.

    """
    parts: tuple

    def __init__(self, parts=()):
        parts = tuple(int(part) for part in parts)
        if any(part < 1 for part in parts):
            raise DomainError('partition parts must be positive: %r'
                              % (parts,))
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError('partition parts must be weakly '
                              'decreasing: %r' % (parts,))
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def trivial(cls, n):
        """
        The partition ``(1, ..., 1)`` of ``n``.

        """
        return cls((1,) * n)

    @property
    def weight(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def part(self, i):
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __str__(self):
        return ','.join(str(part) for part in self.parts)


def parse_partition(text):
    if not text.strip():
        return Partition()
    scanner = _Scanner(text)
    parts = []
    while True:
        scanner.skip_spaces()
        start = scanner.position
        part = scanner.integer()
        if part < 1:
            raise scanner.error('a positive part', start)
        if parts and part > parts[-1]:
            raise scanner.error('a part at most %d' % parts[-1], start)
        parts.append(part)
        if scanner.at_end():
            break
        scanner.expect(',')
    return Partition(parts)
