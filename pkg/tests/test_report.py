#!/usr/bin/env python
#
# test_report.py - tests for report encoding and exit codes
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

import json
import unittest
from fractions import Fraction

import terrace
from terrace import certify, exitcodes, report
from terrace.exact import IntervalR, PolyQ


class EncodingTests(unittest.TestCase):
    """Values are encoded without losing precision."""

    def test_rational(self):
        d = report.rational_dict(Fraction(-3, 4))
        self.assertEqual(d, {'num': '-3', 'den': '4'})
        self.assertEqual(report.rational_from_dict(d), Fraction(-3, 4))
        self.assertEqual(report.rational_dict(None), None)
        big = Fraction(10 ** 40 + 1, 3 ** 50)
        self.assertEqual(report.rational_from_dict(report.rational_dict(big)),
            big)

    def test_float(self):
        self.assertEqual(report.float_str(0.1), '0.10000000000000001')
        self.assertEqual(report.float_str(None), None)

    def test_interval(self):
        d = report.interval_dict(IntervalR(1, 2))
        self.assertEqual(d['lo'], {'num': '1', 'den': '1'})
        self.assertEqual(d['approx'], '1.5')
        self.assertEqual(report.interval_str(None), '-')

    def test_poly(self):
        self.assertEqual(report.poly_list(PolyQ((1, Fraction(1, 2)))),
            [{'num': '1', 'den': '1'}, {'num': '1', 'den': '2'}])


class DocumentTests(unittest.TestCase):

    def test_envelope(self):
        doc = report.envelope('certify', [], timestamp=False)
        self.assertEqual(doc['schema_version'], report.SCHEMA_VERSION)
        self.assertEqual(doc['terrace_version'], terrace.__version__)
        self.assertFalse('generated' in doc)
        doc = report.envelope('certify', [])
        self.assertTrue(doc['generated'].endswith('Z'))

    def test_dumps(self):
        self.assertEqual(report.dumps({'b': 1, 'a': 2}),
            '{\n  "a": 2,\n  "b": 1\n}\n')

    def test_csv(self):
        self.assertEqual(report.csv_text(['a', 'b'], [[1, 2], [3, None]]),
            'a,b\n1,2\n3,\n')

    def test_markdown(self):
        doc = certify.certify('tan@k=1', prefix_max=2).as_dict()
        text = report.markdown_certify(doc)
        self.assertTrue(text.startswith('# tan@k=1: refuted'))
        self.assertTrue('## Column refutation' in text)
        self.assertEqual(report.markdown_spectra([]), '')

    def test_json_safe(self):
        doc = certify.certify('ln1p@k=1', prefix_max=1).as_dict()
        json.loads(report.dumps(report.envelope('certify', [doc])))


class ExitCodeTests(unittest.TestCase):

    def test_lookup(self):
        self.assertEqual(exitcodes.lookup(0), 'CERTIFIED')
        self.assertEqual(exitcodes.lookup(3), 'ERROR')
        self.assertRaises(KeyError, exitcodes.lookup, 42)

    def test_verdicts(self):
        self.assertEqual(exitcodes.for_verdict(certify.CERTIFIED), 0)
        self.assertEqual(exitcodes.for_verdict(certify.REFUTED), 1)
        self.assertEqual(exitcodes.for_verdict(certify.UNDECIDED), 2)


def test_suite():
    return unittest.TestLoader().loadTestsFromName(__name__)

if __name__ == "__main__":
    unittest.main()
