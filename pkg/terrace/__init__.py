"""Hyponormality certificates for terraced matrices

terrace decides whether the terraced matrix M(a) generated by a sequence
a_n = g(1/(n+k)) is hyponormal. Positive answers come with exact,
checkable certificates (interval enclosures and Sturm sequences over the
rationals), negative answers with a certified norm bound; everything else
is reported as undecided, together with floating point evidence from the
spectral laboratory.

:Groups:
  * `Families`: parse_family, SequenceFamily, CustomFamily
  * `Certification`: check_criterion_at, check_prefix, tail_certificate,
    refute_by_normaloid; the pipeline is `terrace.certify.certify()`
  * `Laboratory`: the `terrace.spectra` module
"""
# terrace/__init__.py - initialization of the terrace package
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

__version__ = '1.0.0'

# Import the exceptions into top-level module.

from terrace.errors import Error, Warning, EnclosureWarning
from terrace.errors import InterfaceError, DataError, IndeterminateQuotient
from terrace.errors import ProgrammingError, NotSupportedError, InternalError

from terrace.seqgen import parse_family, SequenceFamily, CustomFamily
from terrace.seqgen import register_family

# terrace.certify must stay the submodule, not the function.
from terrace.certify import check_criterion_at, check_prefix
from terrace.certify import tail_certificate, refute_by_normaloid

__all__ = [k for k in list(locals().keys()) if not k.startswith('_')]
