#!/usr/bin/env python
#
# tests/__init__.py - the terrace test suite
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

import os
import random
import unittest
import warnings
from fractions import Fraction
from functools import wraps

# Set TERRACE_TEST_SLOW=1 to run the long sweeps (10^4 indices, big
# compressions) instead of their short versions.
slow = os.environ.get('TERRACE_TEST_SLOW', None) == '1'

# Seed of every random sample drawn by the tests.
seed = int(os.environ.get('TERRACE_TEST_SEED', '20261016'))


def sized(quick, full):
    """Pick the size of a sweep according to TERRACE_TEST_SLOW."""
    if slow:
        return full
    return quick


def rng():
    return random.Random(seed)


def skip_if_no_mpmath(f):
    """Skip an oracle test if mpmath is not installed."""
    @wraps(f)
    def skip_if_no_mpmath_(self):
        try:
            import mpmath
        except ImportError:
            warnings.warn("mpmath not available: skipping test %s"
                % f.__name__)
            return
        return f(self)
    return skip_if_no_mpmath_


def skip_if_no_sympy(f):
    """Skip an oracle test if sympy is not installed."""
    @wraps(f)
    def skip_if_no_sympy_(self):
        try:
            import sympy
        except ImportError:
            warnings.warn("sympy not available: skipping test %s"
                % f.__name__)
            return
        return f(self)
    return skip_if_no_sympy_


def mp_contains(iv, value, dps=60):
    """True if the mpmath number 'value' lies in the interval 'iv'.

    The endpoints are compared at 'dps' digits, allowing for the last
    digit of 'value' only.
    """
    import mpmath
    with mpmath.workdps(dps):
        lo = mpmath.mpf(iv.lo.numerator) / iv.lo.denominator
        hi = mpmath.mpf(iv.hi.numerator) / iv.hi.denominator
        slack = abs(value) * mpmath.mpf(10) ** (5 - dps)
        return lo - slack <= value <= hi + slack


def random_fraction(r, lo=-10, hi=10, den=97):
    return Fraction(r.randint(lo * den, hi * den), r.randint(1, den))


from tests import test_exact
from tests import test_seqgen
from tests import test_certify
from tests import test_spectra
from tests import test_pool
from tests import test_report
from tests import test_cli

def test_suite():
    suite = unittest.TestSuite()
    suite.addTest(test_exact.test_suite())
    suite.addTest(test_seqgen.test_suite())
    suite.addTest(test_certify.test_suite())
    suite.addTest(test_pool.test_suite())
    suite.addTest(test_report.test_suite())
    suite.addTest(test_spectra.test_suite())
    suite.addTest(test_cli.test_suite())
    return suite

if __name__ == '__main__':
    unittest.main(defaultTest='test_suite')
