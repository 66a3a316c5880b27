"""Enclosure caches for terrace

This module implements thread-safe (and not) caches of interval
enclosures, keyed by family spec, kind of quantity, index and order.

Enclosures are immutable values, so sharing them between threads is
safe as long as the cache bookkeeping itself is serialized: that is what
`ThreadedEnclosureCache` adds on top of `SimpleEnclosureCache`.
"""
# terrace/pool.py - enclosure caching code
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

import logging
import threading
from collections import OrderedDict

from terrace.errors import Error

_logger = logging.getLogger("terrace.pool")


class CacheError(Error):
    pass


class AbstractEnclosureCache(object):
    """Generic key-based caching code."""

    def __init__(self, maxsize=100000):
        """Initialize the cache.

        At most about 'maxsize' enclosures are kept; when the cache is full
        the oldest entry is dropped.
        """
        if maxsize < 1:
            raise CacheError("cache size must be positive")
        self.maxsize = maxsize
        self.closed = False

        self._store = OrderedDict()
        self.hits = 0
        self.misses = 0

    def _get(self, key, compute):
        """Return the value for 'key', calling 'compute()' to fill a miss."""
        if self.closed: raise CacheError("enclosure cache is closed")

        if key in self._store:
            self.hits += 1
            return self._store[key]

        self.misses += 1
        value = compute()
        self._put(key, value)
        return value

    def _put(self, key, value):
        """Store away an enclosure."""
        if self.closed: raise CacheError("enclosure cache is closed")
        self._store[key] = value
        if len(self._store) > self.maxsize:
            old, _ = self._store.popitem(last=False)
            _logger.debug("cache full: dropped %r", old)

    def _close(self):
        """Drop every entry and refuse further use."""
        if self.closed: raise CacheError("enclosure cache is closed")
        self._store.clear()
        self.closed = True

    def __len__(self):
        return len(self._store)


class SimpleEnclosureCache(AbstractEnclosureCache):
    """An enclosure cache that can't be shared across different threads."""

    get = AbstractEnclosureCache._get
    put = AbstractEnclosureCache._put
    close = AbstractEnclosureCache._close


class ThreadedEnclosureCache(AbstractEnclosureCache):
    """An enclosure cache that works with the threading module.

    The lock is not held while a missing value is computed, so two threads
    may compute the same enclosure; the result is the same either way.
    """

    def __init__(self, maxsize=100000):
        """Initialize the threading lock."""
        AbstractEnclosureCache.__init__(self, maxsize)
        self._lock = threading.Lock()

    def get(self, key, compute):
        """Return the value for 'key', calling 'compute()' to fill a miss."""
        self._lock.acquire()
        try:
            if self.closed: raise CacheError("enclosure cache is closed")
            if key in self._store:
                self.hits += 1
                return self._store[key]
            self.misses += 1
        finally:
            self._lock.release()

        value = compute()
        self.put(key, value)
        return value

    def put(self, key, value):
        """Store away an enclosure."""
        self._lock.acquire()
        try:
            self._put(key, value)
        finally:
            self._lock.release()

    def close(self):
        """Drop every entry (even the ones other threads are reading.)"""
        self._lock.acquire()
        try:
            self._close()
        finally:
            self._lock.release()
