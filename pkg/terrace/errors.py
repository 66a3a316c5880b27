"""Exceptions raised by terrace

The hierarchy follows the DBAPI-2.0 layout: a single `Error` root for
everything the library raises on purpose, a separate `Warning` root for
conditions that do not stop a computation.
"""
# terrace/errors.py - exception hierarchy
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


class Warning(Exception):
    """Base class for the warnings emitted by terrace."""


class EnclosureWarning(Warning, UserWarning):
    """An adaptive enclosure hit its order budget before its width target."""


class Error(Exception):
    """Base class for all the errors raised by terrace."""


class InterfaceError(Error):
    """Bad input at the library boundary (family specs, run configuration)."""


class DataError(Error):
    """Invalid numeric data: empty intervals, undefined quotients."""


class IndeterminateQuotient(DataError):
    """Division by an interval containing zero."""

    def __init__(self, msg="indeterminate quotient"):
        DataError.__init__(self, msg)


class ProgrammingError(Error):
    """A precondition of the called operation does not hold."""


class NotSupportedError(Error):
    """The operation exists but not for the given arguments."""


class InternalError(Error):
    """A numerical routine failed to reach its own accuracy contract."""
