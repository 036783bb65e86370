"""
Exceptions raised by the orbit-atlas library.

Library code raises these and never prints or exits; the command-line
layer translates them into exit codes.

"""


class OrbitAtlasError(Exception):
    """
    Base class for every error raised by orbit-atlas.

    """


class ParseError(OrbitAtlasError, ValueError):
    """
    Text did not match the grammar of a core type.

    """
    def __init__(self, text, position, expected):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(
            'cannot parse %r: expected %s at position %d'
            % (text, expected, position)
        )


class DomainError(OrbitAtlasError, ValueError):
    """
    A mathematical precondition does not hold for the given input.

    """


class RealizabilityError(DomainError):
    """
    A rank triangle is not the rank triangle of any multisegment.

    ``pair`` is the first window ``(i, j)`` whose second difference is
    negative and ``value`` is that difference.

    """
    def __init__(self, pair, value):
        self.pair = pair
        self.value = value
        super().__init__(
            'rank triangle is not realizable: second difference at '
            '(%d,%d) is %d' % (pair[0], pair[1], value)
        )


class BudgetExceeded(OrbitAtlasError):
    """
    An exhaustive computation would visit more objects than allowed.

    """
    def __init__(self, budget, what='multisegments'):
        self.budget = budget
        self.what = what
        super().__init__(
            'refusing to enumerate more than %d %s; raise the budget '
            'to continue' % (budget, what)
        )
