"""
A standalone test runner script, configuring the minimum settings
required for orbit-atlas' tests to execute.

orbit-atlas needs no database; the settings only install the
application, its templates and a logger.

"""

import os
import sys


# Make sure the package is (at least temporarily) on the import path.
APP_DIR = os.path.abspath(os.path.dirname(__file__))
sys.path.insert(0, os.path.dirname(APP_DIR))


def run_tests():
    # Making Django run this way is a two-step process. First, call
    # settings.configure() to give Django settings to work with:
    from django.conf import settings

    from orbit_atlas.cli import SETTINGS_DICT
    settings.configure(**SETTINGS_DICT)

    # Then, call django.setup() to initialize the application cache
    # and other bits:
    import django
    django.setup()

    # Now we instantiate a test runner...
    from django.test.utils import get_runner
    TestRunner = get_runner(settings)

    # And then we run tests and return the results.
    test_runner = TestRunner(verbosity=2, interactive=True)
    failures = test_runner.run_tests(['orbit_atlas.tests'])
    sys.exit(bool(failures))


if __name__ == '__main__':
    run_tests()
