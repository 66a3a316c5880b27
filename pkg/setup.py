# setup.py - setuptools packaging
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

"""Hyponormality certificates for terraced matrices

terrace decides whether the terraced matrix generated by a sequence
a_n = g(1/(n+k)) is hyponormal. It checks a sufficient criterion on a
finite prefix with exact interval arithmetic, proves it on the infinite
tail with Sturm sequences over the rationals, refutes hyponormality with a
certified column norm bound when it can, and reports everything else as
undecided together with floating point evidence from compressions of the
self-commutator.
"""

classifiers = """\
Development Status :: 4 - Beta
Intended Audience :: Science/Research
License :: OSI Approved :: GNU Lesser General Public License v3 or later (LGPLv3+)
Programming Language :: Python
Programming Language :: Python :: 3
Topic :: Scientific/Engineering :: Mathematics
Operating System :: OS Independent
"""

import os
import re

from setuptools import setup

# Keep a single copy of the version, in the package.
def get_version():
    f = open(os.path.join(os.path.dirname(__file__),
        'terrace', '__init__.py'), encoding='utf-8')
    try:
        m = re.search(r"^__version__ = '([^']+)'", f.read(), re.M)
    finally:
        f.close()
    if not m:
        raise Warning("unable to find the terrace version")
    return m.group(1)

TERRACE_VERSION = get_version()

setup(name="terrace",
      version=TERRACE_VERSION,
      maintainer="The terrace developers",
      license="LGPL-3.0-or-later",
      platforms=["any"],
      description=__doc__.split("\n")[0],
      long_description="\n".join(__doc__.split("\n")[2:]),
      classifiers=[c for c in classifiers.split("\n") if c],
      python_requires=">=3.8",
      packages=['terrace'],
      install_requires=['numpy>=1.20', 'scipy>=1.5'],
      extras_require={
          'test': ['mpmath>=1.1', 'sympy>=1.6'],
      },
      entry_points={
          'console_scripts': ['terrace = terrace.cli:main'],
      },
      test_suite='tests.test_suite')
