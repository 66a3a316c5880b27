#!/usr/bin/env python
#
# test_cli.py - tests for the terrace command
#
# Copyright (C) 2026 The terrace developers
#
# terrace is free software: you can redistribute it and/or modify it
# under the terms of the GNU Lesser General Public License as published
# by the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# terrace is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or
# FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public
# License for more details.

import io
import os
import json
import shutil
import tempfile
import types
import unittest
from contextlib import redirect_stdout, redirect_stderr

from terrace import exitcodes
from terrace.cli import RunConfig, main, make_parser
from terrace.errors import InterfaceError


def run(*args):
    out = io.StringIO()
    err = io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        rc = main(list(args))
    return rc, out.getvalue(), err.getvalue()


class CertifyCommandTests(unittest.TestCase):
    """Exit codes are the verdicts."""

    def test_certified(self):
        rc, out, err = run('certify', '--family', 'ln1p@k=1', '--prefix', '2')
        self.assertEqual(rc, exitcodes.CERTIFIED)
        doc = json.loads(out)
        self.assertEqual(doc['reports'][0]['verdict'], 'certified_hyponormal')

    def test_cesaro_certified(self):
        rc, out, err = run('certify', '-f', 'cesaro@k=1', '--prefix', '1')
        self.assertEqual(rc, exitcodes.CERTIFIED)
        tail = json.loads(out)['reports'][0]['tail']
        self.assertEqual(tail['upper']['schema'], 'cesaro-upper')
        self.assertEqual(tail['upper']['reduced_numerator'], [])

    def test_refuted(self):
        rc, out, err = run('certify', '-f', 'tan@k=1', '--prefix', '2')
        self.assertEqual(rc, exitcodes.REFUTED)

    def test_undecided(self):
        rc, out, err = run('certify', '-f', 'sin@k=1', '--prefix', '2')
        self.assertEqual(rc, exitcodes.UNDECIDED)

    def test_no_timestamp(self):
        args = ('certify', '-f', 'tan@k=1', '--prefix', '2', '--no-timestamp')
        rc, first, err = run(*args)
        rc, second, err = run(*args)
        self.assertEqual(first, second)
        doc = json.loads(first)
        self.assertEqual(doc['command'], 'certify')
        self.assertFalse('generated' in doc)
        self.assertFalse('timing' in doc['reports'][0])

    def test_markdown(self):
        rc, out, err = run('certify', '-f', 'sin@k=1', '--prefix', '1',
            '--format', 'markdown')
        self.assertTrue(out.startswith('# sin@k=1: undecided'))

    def test_csv(self):
        rc, out, err = run('certify', '-f', 'cesaro@k=1', '--prefix', '3',
            '--format', 'csv')
        lines = out.splitlines()
        self.assertEqual(lines[0],
            'n,lower_check,upper_check,lower_margin,upper_margin')
        self.assertEqual(len(lines), 5)


class PackageTests(unittest.TestCase):

    def test_certify_is_the_module(self):
        import terrace
        import terrace.certify
        self.assertTrue(isinstance(terrace.certify, types.ModuleType))
        self.assertEqual(terrace.certify.DEFAULT_PREFIX, 16)
        self.assertTrue(callable(terrace.certify.certify))
        self.assertTrue(terrace.check_prefix is terrace.certify.check_prefix)

    def test_parser_builds(self):
        parser = make_parser()
        args = parser.parse_args(['certify', '-f', 'tan@k=1'])
        self.assertEqual(args.prefix, None)
        self.assertEqual(args.budget, 64)


class ErrorTests(unittest.TestCase):
    '''Every error exits with 3.'''

    def test_unknown_family(self):
        rc, out, err = run('certify', '-f', 'foo@k=1')
        self.assertEqual(rc, exitcodes.ERROR)
        self.assertTrue('error' in err)
        self.assertEqual(out, '')

    def test_bad_command_line(self):
        for args in (('certify',), ('frobnicate', '-f', 'tan@k=1'),
                ('explore', '-f', 'tan@k=1', '--dims', 'x,y'),
                ('table', '-f', 'tan@k=1', '--prefix', '-1')):
            try:
                run(*args)
            except SystemExit as e:
                self.assertEqual(e.code, exitcodes.ERROR, args)
            else:
                self.fail("%r didn't exit" % (args,))

    def test_bad_config(self):
        for args in (('certify', '-f', 'tan@k=1', '--workers', '0'),
                ('certify', '-f', 'tan@k=1', '--budget', '1'),
                ('explore', '-f', 'cesaro@k=1'),
                ('explore', '-f', 'cesaro@k=1', '--dims', '5000')):
            rc, out, err = run(*args)
            self.assertEqual(rc, exitcodes.ERROR, args)

    def test_run_config(self):
        self.assertEqual(RunConfig('table', 'tan@k=1').format, 'markdown')
        self.assertEqual(RunConfig('certify', 'tan@k=1').format, 'json')
        self.assertRaises(InterfaceError, RunConfig, 'certify', 'tan@k=1',
            format='xml')


class ExploreCommandTests(unittest.TestCase):

    def test_json(self):
        rc, out, err = run('explore', '-f', 'cesaro@k=1', '--dims', '10,20')
        self.assertEqual(rc, 0)
        doc = json.loads(out)
        self.assertEqual([r['N'] for r in doc['reports']], [10, 20])
        self.assertEqual(doc['reports'][0]['tag'],
            'consistent-with-hyponormal')

    def test_csv(self):
        rc, out, err = run('explore', '-f', 'sin@k=1', '--dims', '10,20',
            '--format', 'csv')
        self.assertEqual(rc, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], 'N,min_eig,residual')
        self.assertEqual(len(lines), 3)

    def test_weighted(self):
        rc, out, err = run('explore', '-f', 'tan@k=1', '--dims', '10',
            '--weighted-check', '--no-timestamp')
        doc = json.loads(out)
        self.assertEqual(
            doc['reports'][0]['weighted_monotonicity']['classification'],
            'decreasing')


class TableCommandTests(unittest.TestCase):

    def test_cesaro(self):
        rc, out, err = run('table', '-f', 'cesaro@k=1', '--prefix', '5',
            '--format', 'json')
        self.assertEqual(rc, 0)
        rows = json.loads(out)['reports'][0]['rows']
        self.assertEqual(len(rows), 6)
        for row in rows:
            self.assertEqual(row['upper_margin']['lo'],
                {'num': '1', 'den': '1'})
            self.assertEqual(row['upper_margin']['hi'],
                {'num': '1', 'den': '1'})

    def test_markdown(self):
        rc, out, err = run('table', '-f', 'ln1p@k=1', '--prefix', '2')
        self.assertTrue('| n | a_n |' in out)

    def test_a0_warning(self):
        rc, out, err = run('table', '-f', 'sinh@k=1', '--prefix', '1')
        self.assertEqual(rc, 0)
        self.assertTrue('a_0 > 1' in err)


class OutputTests(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_out_file(self):
        path = os.path.join(self.tmpdir, 'report.json')
        rc, out, err = run('certify', '-f', 'tan@k=1', '--prefix', '1',
            '--out', path)
        self.assertEqual(out, '')
        f = open(path, encoding='utf-8')
        try:
            doc = json.load(f)
        finally:
            f.close()
        self.assertEqual(doc['reports'][0]['verdict'], 'refuted')

    def test_out_unwritable(self):
        path = os.path.join(self.tmpdir, 'missing', 'report.json')
        rc, out, err = run('certify', '-f', 'cesaro@k=1', '--prefix', '1',
            '--out', path)
        self.assertEqual(rc, exitcodes.ERROR)
        self.assertTrue('error' in err)
        self.assertEqual(out, '')


def test_suite():
    return unittest.TestLoader().loadTestsFromName(__name__)

if __name__ == "__main__":
    unittest.main()
