import collections
import logging
import threading
import typing

import diskcache

from chromapoly.types.canonical import CanonicalKey
from chromapoly.types.polynomial import Polynomial
from chromapoly.utils.dummy_cache import DummyCache

logger = logging.getLogger(__name__)


class MemoCache:
    """
    Bounded LRU map from canonical key to chromatic polynomial.

    Safe for concurrent use. A key is written at most once: a second store of
    the same key only refreshes its recency. An optional `diskcache` store
    acts as a second level that outlives the process.
    """

    def __init__(
        self,
        capacity: int,
        *,
        store: diskcache.Cache | DummyCache | None = None,
    ):
        if capacity < 0:
            raise ValueError("capacity must be non-negative")
        self._capacity = capacity
        self._store = store
        self._entries: collections.OrderedDict[CanonicalKey, Polynomial] = (
            collections.OrderedDict()
        )
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0
        self.evictions = 0

    @property
    def capacity(self) -> int:
        return self._capacity

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: CanonicalKey) -> bool:
        return key in self._entries

    def lookup(self, key: CanonicalKey) -> Polynomial | None:
        with self._lock:
            found = self._entries.get(key)
            if found is not None:
                self._entries.move_to_end(key)
                self.hits += 1
                return found

        if self._store is not None:
            coefficients = self._store.get(key)
            if coefficients is not None:
                p = Polynomial(coefficients)
                with self._lock:
                    self.hits += 1
                    self._insert(key, p)
                return p

        with self._lock:
            self.misses += 1
        return None

    def store(self, key: CanonicalKey, p: Polynomial) -> None:
        with self._lock:
            if key in self._entries:
                self._entries.move_to_end(key)
                return
            self._insert(key, p)
        if self._store is not None:
            self._store.set(key, p.coefficients)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()

    def _insert(self, key: CanonicalKey, p: Polynomial) -> None:
        if self._capacity == 0:
            return
        self._entries[key] = p
        self._entries.move_to_end(key)
        while len(self._entries) > self._capacity:
            self._entries.popitem(last=False)
            self.evictions += 1
            if self.evictions == 1:
                logger.warning(
                    f"Memo reached its capacity of {self._capacity} entries, "
                    + "evicting least recently used"
                )
