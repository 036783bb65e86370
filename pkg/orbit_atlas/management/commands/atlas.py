"""
The ``atlas`` management command: every computation of orbit-atlas
behind one set of subcommands.

Results go to standard output as text rendered from the templates in
``orbit_atlas/templates/orbit_atlas/``, or as JSON built from the same
data. Library errors become ``CommandError`` with the exit codes below.

"""
import json
import logging
import random

from django.core.management.base import BaseCommand, CommandError
from django.template import loader

from ... import conf, forms
from ...components import (classify, codimension_identity_holds, compute_J,
                           decompose_complement, is_generic_by_separation,
                           verify_decomposition)
from ...core import DimensionVector, parse_dimension_vector
from ...counting import count_brute, count_by_partitions
from ...exceptions import BudgetExceeded, DomainError, OrbitAtlasError
from ...fan import exchange_graph, locate
from ...generic import (generic_by_levels, generic_recursive, is_generic,
                        line_diagram)
from ...homext import end_dim, is_almost_generic, is_rigid, pairing_dim
from ...homext import KINDS, self_ext


EXIT_FAILURE = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64
EXIT_NOINPUT = 66

VERBOSITY_LEVELS = {
    0: logging.WARNING,
    1: logging.WARNING,
    2: logging.INFO,
    3: logging.DEBUG,
}

GENERIC_FORMATS = ('text', 'json', 'ascii', 'svg')
COUNT_METHODS = ('brute', 'partitions', 'both')
FAN_EMITTERS = ('dot', 'json')

DEFAULT_RANDOM_MAX_T = 4
DEFAULT_RANDOM_MAX_ENTRY = 3

# SVG line diagram geometry, in pixels
SPACING = 40
MARGIN = 30


def generic_data(d):
    multisegment = generic_by_levels(d)
    return {
        'd': d.to_json(),
        'multisegment': str(multisegment),
        'segments': multisegment.to_json(),
        'distinct': multisegment.count_distinct,
        'generic': is_generic(d),
    }


def line_diagram_svg_context(d):
    """
    Coordinates of the vertices and joins of the line diagram of
    ``M(d)``, with the entries of ``d`` written under the columns.

    """
    top = max(d)
    height = 2 * MARGIN + max(top - 1, 0) * SPACING + 20

    def x(l):
        return MARGIN + (l - 1) * SPACING

    def y(level):
        return MARGIN + (top - level) * SPACING

    dots, links = [], []
    for l in range(1, d.t + 1):
        for level in range(1, d.at(l) + 1):
            dots.append({'x': x(l), 'y': y(level)})
            if l < d.t and d.at(l + 1) >= level:
                links.append({'x1': x(l), 'y1': y(level),
                              'x2': x(l + 1), 'y2': y(level)})
    labels = [{'x': x(l), 'y': height - 8, 'text': d.at(l)}
              for l in range(1, d.t + 1)]
    return {
        'd': d.to_json(),
        'width': 2 * MARGIN + (d.t - 1) * SPACING,
        'height': height,
        'dots': dots,
        'links': links,
        'labels': labels,
    }


def components_data(d):
    return {
        'd': d.to_json(),
        'components': [component.to_json()
                       for component in decompose_complement(d)],
    }


def count_data(d, method, budget=None):
    counts = {}
    if method in ('brute', 'both'):
        counts['brute'] = count_brute(d, budget=budget)
    if method in ('partitions', 'both'):
        counts['partitions'] = count_by_partitions(d)
    return {'d': d.to_json(), 'counts': counts}


def verify_data(d, budget=None):
    """
    Run the exhaustive decomposition check and the codimension identity
    over ``J(d)``.

    """
    report = verify_decomposition(d, budget=budget)
    identity = all(codimension_identity_holds(d, pair)
                   for pair in compute_J(d))
    data = report.to_json()
    data['codim_identity'] = identity
    data['passed'] = report.passed and identity
    return data


def random_vectors(count, seed, max_t, max_entry):
    """
    Draw ``count`` sincere dimension vectors; the same seed gives the
    same vectors.

    """
    rng = random.Random(seed)
    vectors = []
    for _ in range(count):
        t = rng.randint(1, max_t)
        vectors.append(DimensionVector(
            [rng.randint(1, max_entry) for _ in range(t)]))
    return vectors


def _check_components(d, budget):
    return len(decompose_complement(d)) <= max(d.t - 1, 0)


def _check_classify(d, budget):
    classification = classify(d)
    return (not classification.concave
            or classification.generic == is_generic_by_separation(d))


def _check_count(d, budget):
    return count_brute(d, budget=budget) == count_by_partitions(d)


def _check_verify(d, budget):
    return verify_data(d, budget)['passed']


def _check_generic(d, budget):
    return generic_by_levels(d) == generic_recursive(d)


BATCH_CHECKS = {
    'components': _check_components,
    'classify': _check_classify,
    'count': _check_count,
    'verify': _check_verify,
    'generic': _check_generic,
}


class Command(BaseCommand):
    help = ('Generic multisegments, components of the complement of the '
            'dense orbit, orbit counts and the tilting fan for the '
            'equioriented type A quiver.')

    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--config',
                            help='key=value file setting enum_budget and '
                                 'tree_t_max')
        parser.add_argument('--budget',
                            help='maximal number of multisegments or '
                                 'counting states to visit')
        parser.add_argument('--tree-t-max', dest='tree_t_max',
                            help='largest t for tree enumeration')
        subparsers = parser.add_subparsers(dest='subcommand',
                                           title='subcommands',
                                           required=True)

        generic = subparsers.add_parser(
            'generic', help='the generic multisegment M(d)')
        self.add_dims(generic)
        generic.add_argument('--format', choices=GENERIC_FORMATS,
                             default='text')

        components = subparsers.add_parser(
            'components', help='irreducible components of the complement')
        self.add_dims(components)
        self.add_json(components)

        count = subparsers.add_parser('count', help='the number of orbits')
        self.add_dims(count)
        count.add_argument('--method', choices=COUNT_METHODS,
                           default='both')
        self.add_json(count)

        pairing = subparsers.add_parser(
            'pairing', help='hom, ext or euler pairing of multisegments')
        pairing.add_argument('--from', dest='source', required=True)
        pairing.add_argument('--to', dest='target', required=True)
        pairing.add_argument('--kind', choices=KINDS, required=True)
        self.add_json(pairing)

        rigid = subparsers.add_parser(
            'rigid', help='self-extensions of a multisegment')
        rigid.add_argument('-m', '--multisegment', dest='m', required=True)
        self.add_json(rigid)

        verify = subparsers.add_parser(
            'verify', help='exhaustive check of the decomposition')
        verify.add_argument('-d', '--dims', dest='d')
        verify.add_argument('--random')
        verify.add_argument('--seed')
        verify.add_argument('--max-t', dest='max_t')
        verify.add_argument('--max-entry', dest='max_entry')
        self.add_json(verify)

        fan = subparsers.add_parser(
            'fan', help='exchange graph of the tilting fan')
        fan.add_argument('--t', required=True)
        fan.add_argument('--emit', choices=FAN_EMITTERS, default='dot')

        locate_parser = subparsers.add_parser(
            'locate', help='cones of the tilting fan containing d')
        self.add_dims(locate_parser)
        self.add_json(locate_parser)

        classify_parser = subparsers.add_parser(
            'classify', help='generic, pure, concave and unimodal')
        self.add_dims(classify_parser)
        self.add_json(classify_parser)

        batch = subparsers.add_parser(
            'batch', help='run a check on every line of a file')
        batch.add_argument('file')
        batch.add_argument('--command', choices=sorted(BATCH_CHECKS),
                           default='components')
        self.add_json(batch)

    def add_dims(self, parser):
        parser.add_argument('-d', '--dims', dest='d', required=True,
                            help='comma separated dimension vector')

    def add_json(self, parser):
        parser.add_argument('--json', action='store_true')

    def handle(self, *args, **options):
        logging.getLogger('orbit_atlas').setLevel(
            VERBOSITY_LEVELS.get(options['verbosity'], logging.DEBUG))
        overrides = self.read_overrides(options)
        handler = getattr(self, 'handle_%s' % options['subcommand'])
        try:
            with conf.overridden(overrides):
                handler(options)
        except BudgetExceeded as exc:
            raise CommandError(str(exc), returncode=EXIT_BUDGET)
        except OrbitAtlasError as exc:
            raise CommandError(str(exc), returncode=EXIT_FAILURE)

    def validate(self, form_class, **data):
        form = form_class(data)
        if not form.is_valid():
            messages = ['%s: %s' % (name, ' '.join(errors))
                        for name, errors in form.errors.items()]
            raise CommandError('; '.join(messages), returncode=EXIT_USAGE)
        return form.cleaned_data

    def read_overrides(self, options):
        """
        Collect settings overrides from the config file and the flags,
        and remember an explicit budget.

        """
        cleaned = self.validate(forms.GlobalOptionsForm,
                                budget=options['budget'],
                                tree_t_max=options['tree_t_max'])
        values = {}
        if options['config']:
            try:
                values.update(conf.read_config(options['config']))
            except OSError as exc:
                raise CommandError('cannot read %s: %s'
                                   % (options['config'], exc.strerror),
                                   returncode=EXIT_NOINPUT)
            except DomainError as exc:
                raise CommandError(str(exc), returncode=EXIT_USAGE)
        if cleaned['tree_t_max'] is not None:
            values['ORBIT_ATLAS_TREE_T_MAX'] = cleaned['tree_t_max']
        self.budget = cleaned['budget']
        return values

    def emit(self, template_name, data, as_json=False):
        if as_json:
            output = json.dumps(data, sort_keys=True, indent=2)
        else:
            output = loader.render_to_string(
                'orbit_atlas/%s' % template_name, data
            ).rstrip('\n')
        self.stdout.write(output)

    def dims(self, options):
        return self.validate(forms.DimensionForm, d=options['d'])['d']

    def handle_generic(self, options):
        d = self.dims(options)
        output_format = options['format']
        if output_format == 'ascii':
            self.emit('line_diagram.txt',
                      {'d': d.to_json(), 'rows': line_diagram(d)})
        elif output_format == 'svg':
            self.emit('line_diagram.svg', line_diagram_svg_context(d))
        else:
            self.emit('generic.txt', generic_data(d),
                      as_json=output_format == 'json')

    def handle_components(self, options):
        self.emit('components.txt', components_data(self.dims(options)),
                  as_json=options['json'])

    def handle_count(self, options):
        data = count_data(self.dims(options), options['method'],
                          budget=self.budget)
        self.emit('count.txt', data, as_json=options['json'])
        if len(set(data['counts'].values())) > 1:
            raise CommandError('brute-force and partition counts disagree',
                               returncode=EXIT_FAILURE)

    def handle_pairing(self, options):
        cleaned = self.validate(forms.PairingForm, source=options['source'],
                                target=options['target'],
                                kind=options['kind'])
        data = {
            'from': str(cleaned['source']),
            'to': str(cleaned['target']),
            'kind': cleaned['kind'],
            'value': pairing_dim(cleaned['source'], cleaned['target'],
                                 cleaned['kind']),
        }
        self.emit('pairing.txt', data, as_json=options['json'])

    def handle_rigid(self, options):
        m = self.validate(forms.MultisegmentForm, m=options['m'])['m']
        d = m.dimension
        data = {
            'multisegment': str(m),
            'self_ext': self_ext(m),
            'end_dim': end_dim(m),
            'rigid': is_rigid(m),
            'generic': m == generic_by_levels(d),
            'almost_generic': is_almost_generic(m) if d.sincere else None,
        }
        self.emit('rigid.txt', data, as_json=options['json'])

    def handle_verify(self, options):
        cleaned = self.validate(
            forms.VerifyForm, d=options['d'], random=options['random'],
            seed=options['seed'], max_t=options['max_t'],
            max_entry=options['max_entry'],
        )
        if cleaned['d'] is not None:
            vectors = [cleaned['d']]
        else:
            vectors = random_vectors(
                cleaned['random'], cleaned['seed'] or 0,
                cleaned['max_t'] or DEFAULT_RANDOM_MAX_T,
                cleaned['max_entry'] or DEFAULT_RANDOM_MAX_ENTRY,
            )
        reports = [verify_data(d, budget=self.budget) for d in vectors]
        passed = sum(1 for report in reports if report['passed'])
        data = {'reports': reports, 'passed': passed, 'total': len(reports)}
        self.emit('verify.txt', data, as_json=options['json'])
        if passed < len(reports):
            raise CommandError('%d of %d dimension vectors failed '
                               'verification' % (len(reports) - passed,
                                                 len(reports)),
                               returncode=EXIT_FAILURE)

    def handle_fan(self, options):
        t = self.validate(forms.FanForm, t=options['t'])['t']
        graph = exchange_graph(t)
        ids = {tree: number for number, tree in enumerate(graph.nodes)}
        data = {
            't': t,
            'nodes': [{'id': ids[tree], 'tree': str(tree),
                       'label': attributes['label']}
                      for tree, attributes in graph.nodes(data=True)],
            'edges': [{'source': ids[first], 'target': ids[second],
                       'exchanged': [str(segment) for segment
                                     in attributes['exchanged']]}
                      for first, second, attributes
                      in graph.edges(data=True)],
        }
        self.emit('exchange_graph.dot', data,
                  as_json=options['emit'] == 'json')

    def handle_locate(self, options):
        location = locate(self.dims(options))
        data = location.to_json()
        data['coordinates'] = [
            {str(segment): value for segment, value in values.items()}
            for values in location.coordinates
        ]
        self.emit('locate.txt', data, as_json=options['json'])

    def handle_classify(self, options):
        d = self.dims(options)
        data = dict(classify(d).to_json(), d=d.to_json())
        self.emit('classify.txt', data, as_json=options['json'])

    def handle_batch(self, options):
        path = options['file']
        try:
            with open(path) as batch_file:
                lines = batch_file.read().splitlines()
        except OSError as exc:
            raise CommandError('cannot read %s: %s' % (path, exc.strerror),
                               returncode=EXIT_NOINPUT)
        results = [
            self.batch_line(number, line.strip(), options['command'])
            for number, line in enumerate(lines, start=1)
            if line.strip() and not line.strip().startswith('#')
        ]
        passed = sum(1 for result in results if result['passed'])
        data = {'lines': results, 'passed': passed, 'total': len(results)}
        self.emit('batch.txt', data, as_json=options['json'])
        refused = sum(1 for result in results if result['refused'])
        if refused:
            raise CommandError('%d of %d batch lines exceeded the budget'
                               % (refused, len(results)),
                               returncode=EXIT_BUDGET)
        if passed < len(results):
            raise CommandError('%d of %d batch lines failed'
                               % (len(results) - passed, len(results)),
                               returncode=EXIT_FAILURE)

    def batch_line(self, number, text, default_command):
        """
        Run one batch line, ``DIMS`` or ``SUBCOMMAND DIMS``. A malformed
        line or a library error counts as a failure; a budget refusal is
        also marked as refused.

        """
        command, _, rest = text.partition(' ')
        if command in BATCH_CHECKS:
            dims = rest.strip()
        else:
            command, dims = default_command, text
        refused = False
        try:
            passed = BATCH_CHECKS[command](parse_dimension_vector(dims),
                                           self.budget)
            message = '' if passed else 'check failed'
        except BudgetExceeded as exc:
            passed, message, refused = False, str(exc), True
        except OrbitAtlasError as exc:
            passed, message = False, str(exc)
        return {'number': number, 'command': command, 'text': dims,
                'passed': bool(passed), 'message': message,
                'refused': refused}
