"""
Standalone entry point for the ``orbit-atlas`` console script.

Configures a minimal Django environment when none is configured yet,
then runs the ``atlas`` management command and turns its outcome into
an exit code.

"""
import sys

import django
from django.conf import settings
from django.core.management.base import CommandError


PROG = 'orbit-atlas'

EXIT_USAGE = 64

# Minimum settings required for the command to run outside a project.
SETTINGS_DICT = {
    'INSTALLED_APPS': ['orbit_atlas'],
    'TEMPLATES': [{
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'APP_DIRS': True,
    }],
    'LOGGING': {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'plain': {'format': '%(levelname)s %(name)s: %(message)s'},
        },
        'handlers': {
            'stderr': {
                'class': 'logging.StreamHandler',
                'formatter': 'plain',
            },
        },
        'loggers': {
            'orbit_atlas': {
                'handlers': ['stderr'],
                'level': 'WARNING',
                'propagate': False,
            },
        },
    },
}


def setup():
    if not settings.configured:
        settings.configure(**SETTINGS_DICT)
    django.setup()


def run(argv, stdout=None, stderr=None):
    """
    Run ``orbit-atlas`` with the arguments ``argv`` and return the exit
    code. Output goes to ``stdout`` and ``stderr``, the process streams
    by default.

    """
    setup()
    from .management.commands.atlas import Command

    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    command = Command(stdout=stdout, stderr=stderr)
    parser = command.create_parser(PROG, 'atlas')
    try:
        options = vars(parser.parse_args(argv))
    except CommandError as exc:
        stderr.write('%s: %s\n' % (PROG, exc))
        return EXIT_USAGE
    except SystemExit as exc:
        # --help exits cleanly; argparse errors from nested parsers exit 2
        return 0 if not exc.code else EXIT_USAGE
    args = options.pop('args', ())
    try:
        command.execute(*args, **options)
    except CommandError as exc:
        stderr.write('%s: error: %s\n' % (PROG, exc))
        return exc.returncode
    return 0


def main():
    sys.exit(run(sys.argv[1:]))
