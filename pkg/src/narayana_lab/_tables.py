from __future__ import annotations

import threading
from typing import Callable, List


class GrowingTable:
    """1-based memo of a recurrence, extended on demand under a lock.

    ``step(values, n)`` receives the list of already computed terms
    (``values[k-1]`` is term k) and returns term n.
    """

    def __init__(self, seed: List, step: Callable[[List, int], object]):
        self._values = list(seed)
        self._step = step
        self._lock = threading.Lock()

    def upto(self, n: int) -> tuple:
        if n > len(self._values):
            with self._lock:
                while len(self._values) < n:
                    self._values.append(self._step(self._values, len(self._values) + 1))
        return tuple(self._values[:n])

    def __getitem__(self, n: int):
        if n < 1:
            raise IndexError("tables are 1-based")
        return self.upto(n)[n - 1]
