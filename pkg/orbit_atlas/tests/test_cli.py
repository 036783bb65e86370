import json
import os
import tempfile
from io import StringIO

import mock

from django.test import SimpleTestCase

from ..cli import run
from ..core import DimensionVector, parse_dimension_vector
from ..core import parse_multisegment
from ..generic import generic_by_levels


class CommandTestCase(SimpleTestCase):
    """
    Runs ``orbit-atlas`` in-process and keeps what it wrote.

    """
    def setUp(self):
        self.paths = []
        environment = mock.patch.dict(os.environ, clear=True)
        environment.start()
        self.addCleanup(environment.stop)

    def tearDown(self):
        for path in self.paths:
            os.remove(path)

    def run_atlas(self, *argv):
        self.stdout, self.stderr = StringIO(), StringIO()
        return run(list(argv), stdout=self.stdout, stderr=self.stderr)

    def output(self):
        return self.stdout.getvalue()

    def write_file(self, text):
        handle, path = tempfile.mkstemp()
        with os.fdopen(handle, 'w') as stream:
            stream.write(text)
        self.paths.append(path)
        return path


class GenericCommandTests(CommandTestCase):
    """
    Tests the ``generic`` subcommand in each output format.

    """

    def test_text(self):
        """
        The text format shows d, M(d), the number of distinct summands and
        whether d is generic.

        """
        self.assertEqual(self.run_atlas('generic', '-d', '5,4,3,1,2,4,6'), 0)
        self.assertEqual(self.output(), (
            'd = 5,4,3,1,2,4,6\n'
            'M(d) = [1,1]+[1,2]+[1,3]^2+[1,7]+[5,7]+[6,7]^2+[7,7]^2\n'
            'distinct summands: 7\n'
            'generic: yes\n'
        ))

    def test_json(self):
        """
        The JSON multisegment parses back to M(d).

        """
        self.assertEqual(
            self.run_atlas('generic', '-d', '1,2,4,5,4,2,1', '--format',
                           'json'), 0)
        data = json.loads(self.output())
        d = DimensionVector(data['d'])
        self.assertEqual(parse_multisegment(data['multisegment'], t=d.t),
                         generic_by_levels(d))
        self.assertFalse(data['generic'])

    def test_ascii(self):
        """
        Seven columns with heights 5,4,3,1,2,4,6.

        """
        self.assertEqual(
            self.run_atlas('generic', '-d', '5,4,3,1,2,4,6', '--format',
                           'ascii'), 0)
        rows = self.output().splitlines()
        self.assertEqual(len(rows), 6)
        heights = [sum(1 for row in rows
                       if len(row) > 2 * column and row[2 * column] == '*')
                   for column in range(7)]
        self.assertEqual(heights, [5, 4, 3, 1, 2, 4, 6])

    def test_svg(self):
        """
        The SVG has one circle per unit of d and one line per arrow used.

        """
        self.assertEqual(
            self.run_atlas('generic', '-d', '2,1,2', '--format', 'svg'), 0)
        output = self.output()
        self.assertTrue(output.startswith('<svg'))
        self.assertEqual(output.count('<circle'), 5)
        self.assertEqual(output.count('<line'), 2)

    def test_deterministic(self):
        """
        The same input renders the same SVG twice.

        """
        self.run_atlas('generic', '-d', '3,1,2', '--format', 'svg')
        first = self.output()
        self.run_atlas('generic', '-d', '3,1,2', '--format', 'svg')
        self.assertEqual(self.output(), first)


class ComponentsCommandTests(CommandTestCase):
    """
    Tests the ``components`` subcommand.

    """

    def test_table(self):
        """
        One line per pair of I(d), with codimension and representative.

        """
        self.assertEqual(self.run_atlas('components', '-d', '1,2,4,5,4,2,1'),
                         0)
        lines = self.output().splitlines()
        self.assertEqual(lines[0], 'd = 1,2,4,5,4,2,1')
        self.assertTrue(lines[1].startswith('(1,7) codim 1 '))
        self.assertTrue(lines[2].startswith('(2,6) codim 1 '))
        self.assertEqual(lines[3],
                         '(3,5) codim 1 [1,7]+[2,6]+[3,4]+[3,5]+[4,5]')

    def test_json_matches_text(self):
        """
        The JSON output carries the same components as the text table.

        """
        self.run_atlas('components', '-d', '5,4,3,1,2,4,6')
        text = self.output().splitlines()[1:]
        self.run_atlas('components', '-d', '5,4,3,1,2,4,6', '--json')
        data = json.loads(self.output())
        self.assertEqual(
            ['(%d,%d) codim %d %s' % (component['pair'][0],
                                      component['pair'][1],
                                      component['codim'],
                                      component['representative'])
             for component in data['components']],
            text)

    def test_single_vertex(self):
        """
        With one vertex there is nothing to list.

        """
        self.assertEqual(self.run_atlas('components', '-d', '3'), 0)
        self.assertIn('no components (t = 1)', self.output())

    def test_non_sincere(self):
        """
        A zero entry is a domain error and exits with status 1.

        """
        self.assertEqual(self.run_atlas('components', '-d', '0,1'), 1)
        self.assertIn('orbit-atlas: error:', self.stderr.getvalue())
        self.assertEqual(self.output(), '')


class UsageTests(CommandTestCase):
    """
    Command lines that cannot be understood exit with status 64.

    """

    def test_bad_dimension_vector(self):
        """
        A malformed dimension vector names the offending position.

        """
        self.assertEqual(self.run_atlas('generic', '-d', '1,x'), 64)
        self.assertIn('position 2', self.stderr.getvalue())

    def test_unknown_subcommand(self):
        """
        An unknown subcommand is a usage error.

        """
        self.assertEqual(self.run_atlas('frobnicate'), 64)

    def test_no_subcommand(self):
        """
        A subcommand is required.

        """
        self.assertEqual(self.run_atlas(), 64)

    def test_bad_choice(self):
        """
        An option outside its choices is a usage error.

        """
        self.assertEqual(
            self.run_atlas('count', '-d', '1,2', '--method', 'guess'), 64)


class CountCommandTests(CommandTestCase):
    """
    Tests the ``count`` subcommand and the enumeration budget.

    """

    def test_both(self):
        """
        Both methods are reported side by side.

        """
        self.assertEqual(
            self.run_atlas('count', '-d', '1,2,1', '--method', 'both'), 0)
        self.assertEqual(self.output(), 'brute=5 partitions=5\n')

    def test_json(self):
        """
        The JSON form carries both counts.

        """
        self.run_atlas('count', '-d', '2,2,2', '--json')
        self.assertEqual(json.loads(self.output()), {
            'd': [2, 2, 2],
            'counts': {'brute': 10, 'partitions': 10},
        })

    def test_budget_flag(self):
        """
        ``--budget`` below what the count needs exits with status 2.

        """
        self.assertEqual(
            self.run_atlas('--budget', '2', 'count', '-d', '3,3,3,3',
                           '--method', 'brute'), 2)
        self.assertIn('refusing', self.stderr.getvalue())

    def test_budget_environment(self):
        """
        ORBIT_ATLAS_BUDGET sets the budget, and the flag overrides it.

        """
        with mock.patch.dict(os.environ, {'ORBIT_ATLAS_BUDGET': '2'}):
            self.assertEqual(
                self.run_atlas('count', '-d', '3,3,3,3', '--method',
                               'brute'), 2)
            self.assertEqual(
                self.run_atlas('--budget', '100000', 'count', '-d',
                               '3,3,3,3', '--method', 'brute'), 0)

    def test_invalid_budget(self):
        """
        A budget must be positive.

        """
        self.assertEqual(
            self.run_atlas('--budget', '0', 'count', '-d', '1,1'), 64)


class ConfigTests(CommandTestCase):
    """
    Tests the ``--config`` file and its precedence.

    """

    def test_config_budget(self):
        """
        The budget can come from the configuration file.

        """
        path = self.write_file('enum_budget=2\n')
        self.assertEqual(
            self.run_atlas('--config', path, 'count', '-d', '3,3,3,3',
                           '--method', 'brute'), 2)

    def test_flag_overrides_config(self):
        """
        A flag overrides the configuration file.

        """
        path = self.write_file('enum_budget=2\n')
        self.assertEqual(
            self.run_atlas('--config', path, '--budget', '100000', 'count',
                           '-d', '3,3,3,3', '--method', 'brute'), 0)

    def test_config_tree_bound(self):
        """
        The tree bound can come from the configuration file, and the flag
        overrides it.

        """
        path = self.write_file('tree_t_max=3\n')
        self.assertEqual(self.run_atlas('--config', path, 'fan', '--t', '4'),
                         2)
        self.assertEqual(
            self.run_atlas('--config', path, '--tree-t-max', '4', 'fan',
                           '--t', '4'), 0)

    def test_missing_config(self):
        """
        An unreadable configuration file exits with status 66.

        """
        self.assertEqual(
            self.run_atlas('--config', '/nonexistent/atlas.cfg', 'count',
                           '-d', '1,1'), 66)

    def test_malformed_config(self):
        """
        An unknown key in the configuration file is a usage error.

        """
        path = self.write_file('budget=10\n')
        self.assertEqual(
            self.run_atlas('--config', path, 'count', '-d', '1,1'), 64)


class PairingAndRigidTests(CommandTestCase):
    """
    Tests the ``pairing`` and ``rigid`` subcommands.

    """

    def test_pairing(self):
        """
        The value of a pairing between two segments.

        """
        self.assertEqual(
            self.run_atlas('pairing', '--from', '[1,1]', '--to', '[2,2]',
                           '--kind', 'ext'), 0)
        self.assertEqual(self.output(), 'ext([1,1], [2,2]) = 1\n')

    def test_pairing_json(self):
        """
        The Euler form is bilinear in the multiplicities.

        """
        self.run_atlas('pairing', '--from', '[1,1]^2', '--to', '[2,2]^3',
                       '--kind', 'euler', '--json')
        self.assertEqual(json.loads(self.output())['value'], -6)

    def test_rigid(self):
        """
        [1,1]+[2,2] has a self-extension and is almost generic.

        """
        self.assertEqual(self.run_atlas('rigid', '-m', '[1,1]+[2,2]'), 0)
        output = self.output()
        self.assertIn('dim Ext(M,M) = 1', output)
        self.assertIn('rigid: no', output)
        self.assertIn('almost generic: yes', output)

    def test_rigid_not_sincere(self):
        """
        Almost genericity is not reported for a non-sincere dimension
        vector.

        """
        self.run_atlas('rigid', '-m', '[1,1]+[3,3]', '--json')
        data = json.loads(self.output())
        self.assertTrue(data['rigid'])
        self.assertTrue(data['generic'])
        self.assertIsNone(data['almost_generic'])


class VerifyCommandTests(CommandTestCase):
    """
    Tests the ``verify`` subcommand.

    """

    def test_single(self):
        """
        A single vector gives one report line and a summary.

        """
        self.assertEqual(self.run_atlas('verify', '-d', '1,2,1'), 0)
        self.assertEqual(self.output(), (
            'd=1,2,1 checked=5 components=(1,3) codim identity=ok pass\n'
            '1/1 pass\n'
        ))

    def test_random_is_reproducible(self):
        """
        The same seed draws the same vectors, within the default ranges.

        """
        self.assertEqual(
            self.run_atlas('verify', '--random', '4', '--seed', '11',
                           '--json'), 0)
        first = self.output()
        self.run_atlas('verify', '--random', '4', '--seed', '11', '--json')
        self.assertEqual(self.output(), first)
        data = json.loads(first)
        self.assertEqual(data['total'], 4)
        self.assertEqual(data['passed'], 4)
        for report in data['reports']:
            vector = parse_dimension_vector(
                ','.join(str(value) for value in report['d']))
            self.assertLessEqual(vector.t, 4)
            self.assertLessEqual(max(vector), 3)

    def test_needs_one_source(self):
        """
        Exactly one of ``-d`` and ``--random`` is required.

        """
        self.assertEqual(self.run_atlas('verify'), 64)
        self.assertEqual(
            self.run_atlas('verify', '-d', '1,2', '--random', '2'), 64)

    def test_budget(self):
        """
        Verification refused for budget exits with status 2.

        """
        self.assertEqual(
            self.run_atlas('--budget', '3', 'verify', '-d', '2,2,2'), 2)


class FanCommandTests(CommandTestCase):
    """
    Tests the ``fan`` and ``locate`` subcommands.

    """

    def test_dot(self):
        """
        The exchange graph for t=2 in DOT.

        """
        self.assertEqual(self.run_atlas('fan', '--t', '2'), 0)
        self.assertEqual(self.output(), (
            'graph exchange_2 {\n'
            '  n0 [label="[1,2]+[2,2]"];\n'
            '  n1 [label="[1,1]+[1,2]"];\n'
            '  n0 -- n1 [label="[1,1] / [2,2]"];\n'
            '}\n'
        ))

    def test_json(self):
        """
        The exchange graph for t=3 is a pentagon.

        """
        self.run_atlas('fan', '--t', '3', '--emit', 'json')
        data = json.loads(self.output())
        self.assertEqual(len(data['nodes']), 5)
        self.assertEqual(len(data['edges']), 5)

    def test_invalid_t(self):
        """
        The number of vertices must be positive.

        """
        self.assertEqual(self.run_atlas('fan', '--t', '0'), 64)

    def test_locate(self):
        """
        A generic vector lies in the interior of exactly one cone.

        """
        self.assertEqual(self.run_atlas('locate', '-d', '2,1,2'), 0)
        self.assertEqual(self.output(), (
            'd = 2,1,2\n'
            'minimal cone: [1,1], [1,3], [3,3]\n'
            'containing trees: 1\n'
            '  ((0,1),(2,3))\n'
            'generic: yes\n'
        ))

    def test_locate_json(self):
        """
        A non-generic vector lies on the boundary of two cones.

        """
        self.run_atlas('locate', '-d', '1,2,1', '--json')
        data = json.loads(self.output())
        self.assertEqual(len(data['trees']), 2)
        self.assertFalse(data['generic'])
        self.assertEqual(data['minimal_cone']['generators'],
                         ['[1,3]', '[2,2]'])


class ClassifyCommandTests(CommandTestCase):
    """
    Tests the ``classify`` subcommand.

    """

    def test_text(self):
        """
        Each property on its own line.

        """
        self.assertEqual(self.run_atlas('classify', '-d', '5,4,3,1,2,4,6'),
                         0)
        self.assertEqual(self.output(), (
            'd = 5,4,3,1,2,4,6\n'
            'generic: yes\n'
            'pure: no\n'
            'concave: yes\n'
            'unimodal: no\n'
        ))


class BatchCommandTests(CommandTestCase):
    """
    Tests the ``batch`` subcommand.

    """

    def test_golden_vectors(self):
        """
        The worked examples all pass; comments are skipped.

        """
        path = self.write_file(
            '# worked examples\n'
            '5,4,3,1,2,4,6\n'
            '1,2,4,5,4,2,1\n'
            '1,2,3,5,3,2,3,2,1\n'
        )
        self.assertEqual(self.run_atlas('batch', path), 0)
        self.assertTrue(self.output().endswith('3/3 pass\n'))

    def test_empty_file(self):
        """
        An empty file runs nothing and passes.

        """
        self.assertEqual(self.run_atlas('batch', self.write_file('')), 0)
        self.assertEqual(self.output(), '0/0 pass\n')

    def test_failures_are_counted(self):
        """
        A failing line is reported and makes the batch exit with status 1.

        """
        path = self.write_file('0,1\n1,2,1\n')
        self.assertEqual(self.run_atlas('batch', path), 1)
        lines = self.output().splitlines()
        self.assertTrue(lines[0].startswith('1: components 0,1: FAIL ('))
        self.assertEqual(lines[1], '2: components 1,2,1: pass')
        self.assertEqual(lines[2], '1/2 pass')

    def test_prefixed_lines(self):
        """
        A line may name the check to run.

        """
        path = self.write_file('count 1,2,1\ngeneric 2,2\nverify 1,1\n')
        self.assertEqual(self.run_atlas('batch', path, '--json'), 0)
        data = json.loads(self.output())
        self.assertEqual([line['command'] for line in data['lines']],
                         ['count', 'generic', 'verify'])
        self.assertEqual(data['passed'], 3)

    def test_budget_refusal(self):
        """
        A line refused for budget makes the whole batch exit 2, like the
        single commands, and the other lines still run.

        """
        path = self.write_file('count 3,3,3,3\n1,2,1\n')
        self.assertEqual(
            self.run_atlas('--budget', '2', 'batch', path, '--json'), 2)
        data = json.loads(self.output())
        self.assertEqual([line['refused'] for line in data['lines']],
                         [True, False])
        self.assertEqual(data['passed'], 1)
        self.assertIn('exceeded the budget', self.stderr.getvalue())

    def test_malformed_line(self):
        """
        A line that does not parse counts as a failure.

        """
        path = self.write_file('1,,2\n')
        self.assertEqual(self.run_atlas('batch', path), 1)
        self.assertIn('0/1 pass', self.output())

    def test_unreadable(self):
        """
        An unreadable batch file exits with status 66.

        """
        self.assertEqual(self.run_atlas('batch', '/nonexistent/batch.txt'),
                         66)
