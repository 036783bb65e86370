"""
Configure Django for pytest the same way orbit_atlas/runtests.py does.

"""

import django
from django.conf import settings


def pytest_configure(config):
    if not settings.configured:
        from orbit_atlas.cli import SETTINGS_DICT
        settings.configure(**SETTINGS_DICT)
        django.setup()
