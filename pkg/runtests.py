"""A harness to run the terrace test suite.

The source tree is inserted into the path, so that the tests run against
this copy of terrace and not against an installed one.
"""

import os
import sys
import unittest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import terrace
import tests

def test_suite():
    return tests.test_suite()

if __name__ == '__main__':
    unittest.main(defaultTest='test_suite')
