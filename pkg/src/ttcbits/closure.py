"""Timed transitive closure over a temporal graph.

An n-by-n matrix of containment-free interval sets, one per ordered
vertex pair (the diagonal is never materialized): sets[u][v] holds the
minimal [departure, arrival] windows over all journeys from u to v seen
so far, plus the next-hop vertex of a witnessing journey per interval.
Contacts may arrive in any chronological order; each insertion also
composes the new contact with every existing journey into its tail and
out of its head, which is all that is needed to keep the closure exact.

A TTC instance is single-writer: ``add_contact`` is inherently
sequential over the matrix.  Queries may run concurrently between
mutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .accounting import NODE_HEADER_BYTES, POINTER_BYTES
from .baseline import BPlusTreeIntervalSet
from .intervals import IntervalSet

IMPLEMENTATIONS = ("compact-dense", "compact-sparse", "bptree")


class Contact(NamedTuple):
    u: int
    v: int
    t: int


@dataclass(frozen=True)
class Journey:
    """A chronologically valid chain of contacts."""

    contacts: tuple[Contact, ...]
    delta: int

    @property
    def departure(self) -> int | None:
        return self.contacts[0].t if self.contacts else None

    @property
    def arrival(self) -> int | None:
        return self.contacts[-1].t + self.delta if self.contacts else None

    def __len__(self) -> int:
        return len(self.contacts)


class TTC:
    """Incrementally maintained timed transitive closure.

    ``tau=None`` leaves the lifetime open: it grows to the largest
    arrival seen.  With a fixed ``tau``, contacts must satisfy
    ``t + delta <= tau + 1``.
    """

    def __init__(self, n: int, tau: int | None = None, delta: int = 1,
                 impl: str = "compact-dense", branching: int = 32,
                 dense_leaf_bits: int = 4096, sparse_leaf_ones: int = 128):
        if n < 1:
            raise ValueError("need at least one vertex")
        if tau is not None and tau < 1:
            raise ValueError("lifetime must span at least one timestamp")
        if delta < 1:
            raise ValueError("traversal latency must be a positive integer")
        if impl not in IMPLEMENTATIONS:
            raise ValueError(f"unknown implementation {impl!r}")
        self.n = n
        self.tau = tau
        self.delta = delta
        self.impl = impl
        self._branching = branching
        self._dense_leaf_bits = dense_leaf_bits
        self._sparse_leaf_ones = sparse_leaf_ones
        self._max_arrival = 0
        self._sets = [[self._make_set() if u != v else None
                       for v in range(n)] for u in range(n)]
        # composition pre-filter, one snapshot per pair.  Coverage only ever
        # grows (removing an enclosing interval always installs a tighter one
        # inside it), so facts proved against a snapshot stay true: an offer
        # is provably covered when its departure lies below the snapshot's
        # covered frontier (every width-delta window there held a stored
        # interval, and offers are never narrower than delta), or when it is
        # at least as wide as the snapshot's widest uncovered window and
        # departs by the snapshot's last departure.  Snapshots retighten on
        # insert counts and on runs of filter misses.
        inf = float("inf")
        self._flt_frontier = [[0] * n for _ in range(n)]
        self._flt_width = [[inf] * n for _ in range(n)]
        self._flt_lastdep = [[0] * n for _ in range(n)]
        self._flt_fresh = [[0] * n for _ in range(n)]
        self._flt_miss = [[0] * n for _ in range(n)]

    def _make_set(self):
        if self.impl == "bptree":
            return BPlusTreeIntervalSet(branching=self._branching,
                                        track_successors=True)
        mode = "dense" if self.impl == "compact-dense" else "sparse"
        cap = self._dense_leaf_bits if mode == "dense" else self._sparse_leaf_ones
        return IntervalSet(mode=mode, branching=self._branching,
                           leaf_cap=cap, track_successors=True)

    @property
    def lifetime(self) -> int:
        """Fixed tau, or the largest arrival observed when open."""
        return self.tau if self.tau is not None else max(self._max_arrival - 1, 0)

    def interval_set(self, u: int, v: int):
        """The underlying store for the ordered pair (u, v)."""
        if u == v:
            raise ValueError("the diagonal is never materialized")
        return self._sets[u][v]

    # ------------------------------------------------------------------
    # updates

    def add_contact(self, u, v=None, t=None) -> None:
        """Ingest one contact, given as (u, v, t) or three arguments."""
        if v is None:
            u, v, t = u
        n = self.n
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex out of range in contact ({u}, {v}, {t})")
        if u == v:
            raise ValueError("self-loop contacts are not allowed")
        if t < 1:
            raise ValueError(f"timestamp {t} must be >= 1")
        delta = self.delta
        arr = t + delta
        if self.tau is not None and arr > self.tau + 1:
            raise ValueError(
                f"contact ({u}, {v}, {t}) arrives after the lifetime ends")
        if arr > self._max_arrival:
            self._max_arrival = arr
        sets = self._sets
        if not (t <= self._flt_frontier[u][v]
                or (t <= self._flt_lastdep[u][v]
                    and delta >= self._flt_width[u][v])):
            if sets[u][v].insert(t, arr, successor=v):
                fresh_uv = self._flt_fresh[u]
                fresh_uv[v] += 1
                if fresh_uv[v] >= 64 and fresh_uv[v] * 4 >= len(sets[u][v]):
                    self._refresh_filter(u, v, sets[u][v])
            else:
                self._flt_miss[u][v] += 1
                if self._flt_miss[u][v] >= 512 and self._flt_fresh[u][v]:
                    self._refresh_filter(u, v, sets[u][v])
        # one best candidate per side: the latest journey into u arriving
        # by t, and the earliest journey out of v departing at arr or later
        lefts = [(u, t, v)]
        for x in range(n):
            if x == u:
                continue
            S = sets[x][u]
            if x == v or len(S) == 0:
                continue
            P = S.latest_by_arrival(t)
            if P is not None:
                lefts.append((x, P[0], P[1]))
        rights = [(v, arr)]
        for y in range(n):
            if y == v:
                continue
            S = sets[v][y]
            if y == u or len(S) == 0:
                continue
            a = S.earliest_arrival_from(arr)
            if a is not None:
                rights.append((y, a))
        for x, dep, succ in lefts:
            row = sets[x]
            frontier = self._flt_frontier[x]
            widths = self._flt_width[x]
            lastdeps = self._flt_lastdep[x]
            fresh = self._flt_fresh[x]
            miss = self._flt_miss[x]
            for y, a in rights:
                if x == y or (x == u and y == v):
                    continue
                if dep <= frontier[y] or (dep <= lastdeps[y]
                                          and a - dep >= widths[y]):
                    continue  # provably covered since the pair's snapshot
                S = row[y]
                if not S.covers(dep, a):
                    S.insert(dep, a, successor=succ)
                    fresh[y] += 1
                    if fresh[y] >= 64 and fresh[y] * 4 >= len(S):
                        self._refresh_filter(x, y, S)
                else:
                    miss[y] += 1
                    if miss[y] >= 512 and fresh[y]:
                        self._refresh_filter(x, y, S)

    def _refresh_filter(self, x: int, y: int, S) -> None:
        """Retighten the pair's coverage snapshot from its current content."""
        deps, arrs = S.endpoints()
        delta = self.delta
        frontier = None
        widest = 0
        prev_dep = 0
        for d, a in zip(deps, arrs):
            gap = a - prev_dep - 1
            if gap > widest:
                widest = gap
            if frontier is None and gap > delta:
                # the first width-delta window with no stored interval
                # starts right after the previous departure
                frontier = prev_dep
            prev_dep = d
        self._flt_frontier[x][y] = prev_dep if frontier is None else frontier
        self._flt_width[x][y] = widest
        self._flt_lastdep[x][y] = deps[-1]
        self._flt_fresh[x][y] = 0
        self._flt_miss[x][y] = 0

    def add_contacts(self, contacts: Iterable) -> None:
        for c in contacts:
            self.add_contact(c)

    # ------------------------------------------------------------------
    # queries

    def can_reach(self, u: int, v: int, t1: int, t2: int) -> bool:
        """True iff some journey from u to v departs and arrives in [t1, t2]."""
        if u == v:
            return t1 <= t2
        if t1 > t2:
            return False
        nxt = self._sets[u][v].find_next(max(t1, 1))
        return nxt is not None and nxt.arrival <= t2

    def is_connected(self, t1: int, t2: int) -> bool:
        """True iff every ordered pair is reachable within [t1, t2]."""
        if t1 > t2:
            raise ValueError("empty time window")
        n = self.n
        for u in range(n):
            for v in range(n):
                if u != v and not self.can_reach(u, v, t1, t2):
                    return False
        return True

    def reconstruct_journey(self, u: int, v: int, t1: int, t2: int):
        """A witnessing journey inside [t1, t2], or None iff unreachable."""
        if t1 > t2:
            raise ValueError("empty time window")
        if u == v:
            return Journey((), self.delta)
        t1 = max(t1, 1)
        first = self._sets[u][v].find_next(t1)
        if first is None or first.arrival > t2:
            return None
        out = []
        cur, time, bound = u, t1, first.arrival
        while cur != v:
            M = self._sets[cur][v].find_next(time)
            assert M is not None and M.arrival <= bound, \
                "successor chain broken: stored interval without a witness"
            out.append(Contact(cur, M.successor, M.departure))
            time = M.departure + self.delta
            bound = M.arrival
            cur = M.successor
        return Journey(tuple(out), self.delta)

    # ------------------------------------------------------------------
    # inspection

    def edges(self) -> dict[tuple[int, int], list[tuple[int, int]]]:
        """Nonempty interval sets as {(u, v): [(dep, arr), ...]}."""
        out = {}
        for u in range(self.n):
            for v in range(self.n):
                if u != v:
                    ivs = self._sets[u][v].intervals()
                    if ivs:
                        out[(u, v)] = ivs
        return out

    def audit(self) -> None:
        for row in self._sets:
            for S in row:
                if isinstance(S, IntervalSet):
                    S.audit()

    def accounted_bytes(self) -> int:
        total = NODE_HEADER_BYTES + self.n * self.n * POINTER_BYTES
        for row in self._sets:
            for S in row:
                if S is not None:
                    total += S.accounted_bytes()
        return total

    def dump(self) -> str:
        lines = [f"ttc n={self.n} delta={self.delta} impl={self.impl}"]
        for u in range(self.n):
            for v in range(self.n):
                S = self._sets[u][v]
                if S is not None and len(S):
                    lines.append(f"pair {u}->{v}")
                    lines.append(S.dump())
        return "\n".join(lines)

    def __repr__(self):
        return (f"TTC(n={self.n}, delta={self.delta}, impl={self.impl!r}, "
                f"edges={sum(1 for _ in self.edges())})")


def read_contact_file(path) -> list[Contact]:
    """Parse a contact stream: one "u v t" triple per line, base-10,
    '#' starts a comment, blank lines are ignored."""
    contacts = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ValueError(f"{path}:{lineno}: expected 'u v t', got {raw!r}")
            try:
                u, v, t = (int(p) for p in parts)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: non-integer field") from exc
            contacts.append(Contact(u, v, t))
    return contacts
