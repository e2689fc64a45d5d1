"""Blossom base bookkeeping, two ways.

During the alternating-path search every vertex carries a *base*: the
representative of the blossom (pseudonode) it currently belongs to.
Shrinking a blossom points a batch of current representatives at a new
base.  The two disciplines here differ only in when that pointer chase is
paid for:

* ``NaiveBaseTracker`` rewrites eagerly.  It keeps, per representative, the
  list of vertices resolving to it, so a rebase touches exactly the
  vertices whose answer changes.
* ``UnionFindBaseTracker`` just records the new parent and resolves lazily
  on ``find``, compressing paths as it goes.

Both must answer identically when ``set_base`` is always given current
representatives, which is how the search uses them.
"""

from __future__ import annotations

from typing import Iterable

__all__ = ["NaiveBaseTracker", "UnionFindBaseTracker", "resolve_tracker_kind"]


class NaiveBaseTracker:
    """Eager base map: find is O(1), set_base is linear in vertices moved."""

    kind = "naive"

    def __init__(self, n: int):
        self._base = list(range(n))
        self._members = [[v] for v in range(n)]

    def __len__(self) -> int:
        return len(self._base)

    def find(self, v: int) -> int:
        return self._base[v]

    def set_base(self, members: Iterable[int], new_base: int) -> None:
        if self._base[new_base] != new_base:
            raise ValueError(f"{new_base} is not currently its own base")
        for v in members:
            cur = self._base[v]
            if cur == new_base:
                continue
            moved = self._members[cur]
            for u in moved:
                self._base[u] = new_base
            self._members[new_base].extend(moved)
            self._members[cur] = []
            # v itself may not have been listed under cur (it is when cur is
            # v's representative, which is the supported usage).
            if self._base[v] != new_base:
                self._base[v] = new_base
                self._members[new_base].append(v)


class UnionFindBaseTracker:
    """Lazy base map: set_base writes one pointer, find compresses."""

    kind = "unionfind"

    def __init__(self, n: int):
        self._parent = list(range(n))

    def __len__(self) -> int:
        return len(self._parent)

    def find(self, v: int) -> int:
        parent = self._parent
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def set_base(self, members: Iterable[int], new_base: int) -> None:
        if self.find(new_base) != new_base:
            raise ValueError(f"{new_base} is not currently its own base")
        for v in members:
            if v != new_base:
                self._parent[v] = new_base


def resolve_tracker_kind(tracker) -> bool:
    """Normalize a tracker selector to use_uf for the compiled search.

    Accepts the strings "naive"/"unionfind", the tracker classes, or
    instances of them.
    """
    if tracker in ("unionfind", "union-find", UnionFindBaseTracker):
        return True
    if tracker in ("naive", NaiveBaseTracker):
        return False
    if isinstance(tracker, UnionFindBaseTracker):
        return True
    if isinstance(tracker, NaiveBaseTracker):
        return False
    raise ValueError(f"unknown tracker {tracker!r}; "
                     "use 'naive' or 'unionfind'")
