"""Exit codes for the terrace command line

This module contains symbolic names for the process exit codes of the
``terrace`` command, one per certification verdict plus the error code.
"""
# terrace/exitcodes.py - process exit codes
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

def lookup(code, _cache={}):
    """Lookup an exit code and return its symbolic name.

    Raise `KeyError` if the code is not found.
    """
    if _cache:
        return _cache[code]

    # Generate the lookup map at first usage.
    for k, v in list(globals().items()):
        if k.isupper() and isinstance(v, int) and not isinstance(v, bool):
            _cache[v] = k

    return lookup(code)


def for_verdict(verdict):
    """Return the exit code matching a certification verdict string."""
    return _VERDICTS[verdict]


# Verdicts
CERTIFIED = 0
REFUTED = 1
UNDECIDED = 2

# Failures
ERROR = 3

_VERDICTS = {
    'certified_hyponormal': CERTIFIED,
    'refuted': REFUTED,
    'undecided': UNDECIDED,
}
