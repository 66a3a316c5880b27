#!/usr/bin/env python
#
# test_spectra.py - tests for the numerical laboratory
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

import math
import unittest
from fractions import Fraction

import numpy as np

import tests
from terrace import seqgen, spectra
from terrace.errors import DataError, ProgrammingError
from terrace.exact import IntervalR
from terrace.seqgen import CustomFamily

ZETA2_TAIL = math.pi ** 2 / 6 - 1

CERTIFIED = ['cesaro@k=1', 'ln1p@k=1', 'tan@k=2', 'sinh@k=2']


class TruncationTests(unittest.TestCase):
    """Finite corners of M(a)."""

    def test_cesaro(self):
        M = spectra.build_truncation('cesaro@k=1', 3)
        expected = np.array([[1, 0, 0], [.5, .5, 0], [1 / 3., 1 / 3., 1 / 3.]])
        self.assertTrue(np.allclose(M.entries, expected, rtol=0, atol=1e-15))
        self.assertEqual(spectra.build_truncation('tan@k=1', 1).entries.shape,
            (1, 1))

    def test_values(self):
        M = spectra.build_truncation('tan@k=2', 2)
        self.assertTrue(np.allclose(M.values, [math.tan(.5), math.tan(1 / 3.)],
            rtol=1e-15, atol=0))

    def test_products(self):
        M = spectra.build_truncation('ln1p@k=1', 40)
        r = np.random.RandomState(tests.seed)
        v = r.standard_normal(40)
        self.assertTrue(np.allclose(M.matvec(v), M.entries @ v))
        self.assertTrue(np.allclose(M.rmatvec(v), M.entries.T @ v))

    def test_lab_values(self):
        n = np.arange(50)
        for spec in ('ln1p@k=1', 'tan@k=1', 'sinh@k=1', 'sin@k=1',
                'atan@k=1', 'asin@k=2'):
            fam = seqgen.parse_family(spec)
            expected = spectra._ufuncs[fam.family](1.0 / (n + fam.shift))
            got = spectra.lab_values(fam, 50)
            self.assertTrue(np.allclose(got, expected, rtol=1e-14, atol=0),
                spec)

    def test_bad_dimension(self):
        self.assertRaises(ProgrammingError, spectra.build_truncation,
            'tan@k=1', 0)
        self.assertRaises(ProgrammingError, spectra.build_truncation,
            'tan@k=1', spectra.MAX_DIMENSION + 1)


class QuadraticFormTests(unittest.TestCase):
    """The self-commutator form on finitely supported vectors."""

    def test_cesaro_basis(self):
        lo, hi = spectra.quadratic_form('cesaro@k=1',
            spectra.FinSuppVec.basis(0))
        self.assertTrue(lo - 1e-12 <= ZETA2_TAIL <= hi + 1e-12)
        self.assertTrue(hi - lo < 1e-12)

    def test_zero(self):
        self.assertEqual(spectra.quadratic_form('tan@k=1', [0, 0, 0]),
            (0.0, 0.0))

    def test_support(self):
        self.assertRaises(ProgrammingError, spectra.quadratic_form,
            'tan@k=1', np.ones(spectra.MAX_SUPPORT + 1))

    def test_tail_bracket(self):
        lo, hi = spectra.tail_bracket('cesaro@k=1', 0)
        self.assertTrue(lo <= math.pi ** 2 / 6 <= hi + 1e-15)
        fam = CustomFamily('lab-harmonic',
            lambda n, N: IntervalR(Fraction(1, n + 1)))
        lo, hi = spectra.tail_bracket(fam, 5)
        self.assertAlmostEqual(hi - lo, 4.0 / (5 + spectra.TAIL_CUTOFF))

    def test_matches_compression(self):
        r = np.random.RandomState(tests.seed)
        for spec in ('ln1p@k=1', 'tan@k=1', 'sin@k=1'):
            G = spectra.self_commutator_compression(spec, 30)
            for i in range(5):
                f = r.standard_normal(30)
                lo, hi = spectra.quadratic_form(spec, f)
                form = G.form(f)
                slack = (hi - lo) + 1e-10 * (1 + np.sum(np.abs(f)) ** 2)
                self.assertTrue(abs(form - (lo + hi) / 2) <= slack,
                    "%s: %g vs [%g, %g]" % (spec, form, lo, hi))


class CompressionTests(unittest.TestCase):
    """Compressions of the self-commutator and their spectra."""

    def test_cesaro_corner(self):
        G = spectra.self_commutator_compression('cesaro@k=1', 1)
        self.assertEqual(G.N, 1)
        self.assertAlmostEqual(G.array[0, 0], ZETA2_TAIL, places=12)

    def test_symmetric(self):
        G = spectra.self_commutator_compression('atan@k=1', 20)
        self.assertTrue(np.array_equal(G.array, G.array.T))

    def test_certified_are_psd(self):
        N = tests.sized(50, 500)
        for spec in CERTIFIED:
            G = spectra.self_commutator_compression(spec, N)
            lam, residual = spectra.min_eigenvalue(G)
            self.assertTrue(lam >= -1e-9, "%s: %g" % (spec, lam))
            self.assertTrue(residual <= 1e-8 * np.linalg.norm(G.array))


class EigenTests(unittest.TestCase):
    """The smallest eigenvalue and its residual contract."""

    def test_examples(self):
        lam, residual = spectra.min_eigenvalue(np.eye(5))
        self.assertAlmostEqual(lam, 1.0, places=12)
        lam, residual = spectra.min_eigenvalue(np.diag([-2., 3., 7.]))
        self.assertAlmostEqual(lam, -2.0, places=12)

    def test_against_eigvalsh(self):
        r = np.random.RandomState(tests.seed)
        for i in range(10):
            B = r.standard_normal((50, 50))
            A = B + B.T
            lam, residual = spectra.min_eigenvalue(A)
            expected = np.linalg.eigvalsh(A)[0]
            self.assertTrue(abs(lam - expected) <= 1e-8 * np.linalg.norm(A))

    def test_not_symmetric(self):
        self.assertRaises(DataError, spectra.min_eigenvalue,
            np.array([[1., 2.], [0., 1.]]))
        self.assertRaises(DataError, spectra.SymMatrix, np.ones((2, 3)))

    def test_residual_contract(self):
        r = np.random.RandomState(tests.seed)
        B = r.standard_normal((30, 30))
        try:
            spectra.min_eigenvalue(B + B.T, tolerance=1e-30)
        except spectra.EigenError as e:
            self.assertTrue(e.best is not None)
            self.assertEqual(len(e.best), 3)
        else:
            self.fail("residual contract not enforced")


class NormTests(unittest.TestCase):
    """Norms of the truncations."""

    def test_single(self):
        self.assertAlmostEqual(spectra.norm_estimate('cesaro@k=1', 1), 1.0)

    def test_cesaro_increasing(self):
        norms = [spectra.norm_estimate('cesaro@k=1', N) for N in (10, 50, 200)]
        for a, b in zip(norms, norms[1:]):
            self.assertTrue(b >= a - 1e-6)
        self.assertTrue(norms[-1] < 2)

    def test_ln1p(self):
        self.assertTrue(spectra.norm_estimate('ln1p@k=1', 512) < 2)

    def test_truncation_argument(self):
        M = spectra.build_truncation('cesaro@k=1', 1)
        self.assertAlmostEqual(spectra.norm_estimate(M, None), 1.0)


class ExploreTests(unittest.TestCase):
    """Spectrum reports are evidence only."""

    def test_classify(self):
        self.assertEqual(spectra.classify(1e-3, 0, 0, 10, 1.0),
            spectra.CONSISTENT)
        self.assertEqual(spectra.classify(-1.0, 0, 0, 10, 1.0),
            spectra.REFUTATION_CONSISTENT)
        self.assertEqual(spectra.classify(-1e-9, 0, 0, 10, 1.0),
            spectra.INCONCLUSIVE)

    def test_cesaro(self):
        reports = spectra.explore_open_question('cesaro@k=1', [20, 50])
        self.assertEqual([r.N for r in reports], [20, 50])
        for r in reports:
            self.assertEqual(r.tag, spectra.CONSISTENT)
            d = r.as_dict()
            self.assertFalse('verdict' in d)
            self.assertEqual(len(r.csv_row()), 3)

    def test_sin(self):
        reports = spectra.explore_open_question('sin@k=1', [20, 40])
        self.assertEqual(len(reports), 2)
        for r in reports:
            self.assertTrue(r.tag in (spectra.CONSISTENT,
                spectra.REFUTATION_CONSISTENT, spectra.INCONCLUSIVE))
            self.assertFalse('verdict' in r.as_dict())

    def test_weighted(self):
        reports = spectra.explore_open_question('tan@k=2', [10],
            weighted=True)
        self.assertNotEqual(reports[0].weighted.classification,
            seqgen.DECREASING)
        self.assertTrue('weighted_monotonicity' in reports[0].as_dict())

    def test_bad_dims(self):
        self.assertRaises(ProgrammingError, spectra.explore_open_question,
            'cesaro@k=1', [10, spectra.MAX_DIMENSION + 1])


def test_suite():
    return unittest.TestLoader().loadTestsFromName(__name__)

if __name__ == "__main__":
    unittest.main()
