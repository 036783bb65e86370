"""
Budgets and bounds for the exhaustive parts of orbit-atlas.

Both values are ordinary Django settings. The enumeration budget may
also come from the environment variable ``ORBIT_ATLAS_BUDGET``, which
wins over the setting.

"""
import os
from contextlib import contextmanager

from django.conf import settings

from .exceptions import DomainError


DEFAULT_ENUM_BUDGET = 2000000

DEFAULT_TREE_T_MAX = 12

BUDGET_ENVIRONMENT_VARIABLE = 'ORBIT_ATLAS_BUDGET'

# config-file key -> settings name
CONFIG_KEYS = {
    'enum_budget': 'ORBIT_ATLAS_ENUM_BUDGET',
    'tree_t_max': 'ORBIT_ATLAS_TREE_T_MAX',
}


def _positive(name, value):
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise DomainError('%s must be an integer, got %r' % (name, value))
    if value < 1:
        raise DomainError('%s must be positive, got %d' % (name, value))
    return value


def enum_budget():
    """
    Return the maximal number of multisegments an exhaustive oracle or
    brute-force count may visit.

    """
    value = os.getenv(BUDGET_ENVIRONMENT_VARIABLE)
    if value is None:
        value = getattr(settings, 'ORBIT_ATLAS_ENUM_BUDGET',
                        DEFAULT_ENUM_BUDGET)
    return _positive('enum_budget', value)


def tree_t_max():
    """
    Return the largest ``t`` for which trees are enumerated.

    """
    return _positive('tree_t_max',
                     getattr(settings, 'ORBIT_ATLAS_TREE_T_MAX',
                             DEFAULT_TREE_T_MAX))


def read_config(path):
    """
    Read a ``key=value`` configuration file and return a dictionary of
    settings names to integer values.

    Blank lines and lines starting with ``#`` are skipped. Unknown keys
    and malformed lines raise ``DomainError``.

    """
    values = {}
    with open(path) as config_file:
        for number, line in enumerate(config_file, start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            key, sep, value = line.partition('=')
            key = key.strip()
            if not sep or key not in CONFIG_KEYS:
                raise DomainError(
                    '%s:%d: expected one of %s as key=value, got %r'
                    % (path, number, ', '.join(sorted(CONFIG_KEYS)), line)
                )
            values[CONFIG_KEYS[key]] = _positive(key, value.strip())
    return values


def apply_overrides(values):
    """
    Write configuration values onto the live settings object.

    """
    for name, value in values.items():
        setattr(settings, name, value)


@contextmanager
def overridden(values):
    """
    Apply ``values`` for the duration of the block, then put back what
    was there before.

    """
    missing = object()
    saved = {name: getattr(settings, name, missing) for name in values}
    apply_overrides(values)
    try:
        yield
    finally:
        for name, value in saved.items():
            if value is missing:
                delattr(settings, name)
            else:
                setattr(settings, name, value)
