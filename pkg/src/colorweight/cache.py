import logging
import sys
import threading
from collections import OrderedDict

from colorweight.diagram import ChordDiagram
from colorweight.poly import CenterPoly
from colorweight.schemas import CacheSettings

logger = logging.getLogger(__name__)


def entry_size(key: ChordDiagram, value: CenterPoly) -> int:
    """Approximate footprint of one cached entry in bytes."""
    size = sys.getsizeof(key.pairing) + sys.getsizeof(value.terms)
    for exponent, coeff in value.terms.items():
        size += sys.getsizeof(exponent) + sys.getsizeof(coeff.a) + sys.getsizeof(coeff.b)
    return size


class WeightCache:
    """
    Memo table from canonical chord diagrams to their weights, bounded in bytes.

    Least recently used entries are evicted first. All access is serialized by a lock so one
    cache can be shared across threads. ``max_bytes == 0`` disables caching.
    """

    def __init__(self, max_bytes: int | None = None, verbosity: bool = False):
        settings = CacheSettings() if max_bytes is None else CacheSettings(max_bytes=max_bytes)
        self.max_bytes = settings.max_bytes
        self.verbosity = verbosity
        self.hits = 0
        self.misses = 0
        self.evictions = 0
        self._entries: OrderedDict[ChordDiagram, tuple[CenterPoly, int]] = OrderedDict()
        self._bytes = 0
        self._lock = threading.Lock()
        if self.verbosity:
            logger.info(f"WeightCache initialized with a {self.max_bytes} byte cap")

    @classmethod
    def from_settings(cls, settings: CacheSettings, verbosity: bool = False) -> "WeightCache":
        return cls(max_bytes=settings.max_bytes, verbosity=verbosity)

    @classmethod
    def from_env(cls, verbosity: bool = False) -> "WeightCache":
        return cls.from_settings(CacheSettings.from_env(), verbosity=verbosity)

    @property
    def size_bytes(self) -> int:
        return self._bytes

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: ChordDiagram) -> bool:
        with self._lock:
            return key in self._entries

    def get(self, key: ChordDiagram) -> CenterPoly | None:
        with self._lock:
            entry = self._entries.get(key)
            if entry is None:
                self.misses += 1
                return None
            self._entries.move_to_end(key)
            self.hits += 1
            return entry[0]

    def put(self, key: ChordDiagram, value: CenterPoly) -> None:
        if self.max_bytes == 0:
            return
        size = entry_size(key, value)
        if size > self.max_bytes:
            if self.verbosity:
                logger.info(f"WeightCache - entry for {key} ({size} bytes) exceeds the cap")
            return
        with self._lock:
            previous = self._entries.pop(key, None)
            if previous is not None:
                self._bytes -= previous[1]
            self._entries[key] = (value, size)
            self._bytes += size
            while self._bytes > self.max_bytes:
                evicted, (_, evicted_size) = self._entries.popitem(last=False)
                self._bytes -= evicted_size
                self.evictions += 1
                logger.warning(
                    f"WeightCache - evicted {evicted} to stay under {self.max_bytes} bytes"
                )

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self._bytes = 0

    def stats(self) -> dict[str, int]:
        return {
            "entries": len(self._entries),
            "bytes": self._bytes,
            "hits": self.hits,
            "misses": self.misses,
            "evictions": self.evictions,
        }
