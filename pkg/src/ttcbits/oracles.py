"""Brute-force reference implementations for differential testing.

Everything here favors clarity over speed: a flat bit list with
linear-scan rank/select, a sorted interval list with full-scan
containment reduction, and two independent reachability engines
(a chronological dynamic program and a windowed earliest-arrival
sweep).  The test suites trust these after they are themselves
validated on hand-checkable instances.
"""

from __future__ import annotations

from bisect import insort


class FlatBits:
    """Growable plain bit sequence; every query is a linear scan."""

    def __init__(self, bits=()):
        self.bits = list(bits)

    def __len__(self):
        return len(self.bits)

    @property
    def ones_total(self):
        return sum(self.bits)

    def access(self, i):
        if i < 1:
            raise ValueError
        if i > len(self.bits):
            return 0
        return self.bits[i - 1]

    def rank1(self, i):
        if i < 0:
            raise ValueError
        return sum(self.bits[:i])

    def select1(self, j):
        count = 0
        for k, b in enumerate(self.bits):
            count += b
            if count == j:
                return k + 1
        raise ValueError(f"fewer than {j} ones")

    def insert_bits(self, i, bit_list):
        self.bits[i:i] = list(bit_list)

    def insert_bit(self, i, b):
        self.bits.insert(i, 1 if b else 0)

    def update_bit(self, i, b):
        self.bits[i - 1] = 1 if b else 0

    def remove_bit(self, i):
        del self.bits[i - 1]

    def ensure_capacity(self, t):
        while len(self.bits) < t:
            self.bits.extend([0] * 64)

    def unset_range(self, j1, j2):
        lo = self.select1(j1)
        hi = self.select1(j2)
        for k in range(lo - 1, hi):
            self.bits[k] = 0

    def to01(self):
        return "".join(str(b) for b in self.bits)


class OracleIntervalSet:
    """Sorted interval list with post-insert antichain reduction."""

    def __init__(self):
        self.items: list[tuple[int, int]] = []

    def __len__(self):
        return len(self.items)

    def insert(self, t1, t2):
        if not 1 <= t1 <= t2:
            raise ValueError
        for d, a in self.items:
            if d >= t1 and a <= t2:
                return False  # an equal or tighter interval already present
        self.items = [(d, a) for d, a in self.items
                      if not (d <= t1 and a >= t2)]
        insort(self.items, (t1, t2))
        return True

    def find_prev(self, t):
        best = None
        for d, a in self.items:
            if a <= t:
                best = (d, a)
        return best

    def find_next(self, t):
        for d, a in self.items:
            if d >= t:
                return (d, a)
        return None

    def intervals(self):
        return list(self.items)


def _antichain_insert(items, d, a):
    for d2, a2 in items:
        if d2 >= d and a2 <= a:
            return
    items[:] = [(d2, a2) for d2, a2 in items if not (d2 <= d and a2 >= a)]
    insort(items, (d, a))


def oracle_minimal_intervals(contacts, n, delta):
    """All-pairs minimal journey intervals, recomputed from scratch.

    Processes contacts chronologically; every journey ends with its last
    contact, so extending the best earlier journey into each new contact
    enumerates them all.  Returns an n-by-n matrix of sorted interval
    lists (the diagonal stays empty).
    """
    sets = [[[] for _ in range(n)] for _ in range(n)]
    for u, v, t in sorted(contacts, key=lambda c: c[2]):
        arr = t + delta
        candidates = [(u, t)]
        for x in range(n):
            if x == u or x == v:
                continue
            best = None
            for d, a in sets[x][u]:
                if a <= t:
                    best = d
                else:
                    break
            if best is not None:
                candidates.append((x, best))
        for x, dep in candidates:
            _antichain_insert(sets[x][v], dep, arr)
    return sets


def oracle_can_reach(contacts, n, delta, u, v, t1, t2):
    """Windowed earliest-arrival sweep over the time-sorted contacts."""
    if u == v:
        return t1 <= t2
    inf = float("inf")
    best = [inf] * n
    best[u] = t1
    for a, b, t in sorted(contacts, key=lambda c: c[2]):
        arr = t + delta
        if t >= best[a] and arr <= t2 and arr < best[b]:
            best[b] = arr
    return best[v] <= t2


def check_journey(journey, contacts, u, v, delta, t1, t2):
    """True iff the journey is a chronologically valid u-to-v chain of
    real contacts whose span lies inside [t1, t2]."""
    cs = list(journey.contacts)
    if u == v:
        return cs == [] and t1 <= t2
    if not cs:
        return False
    pool = set((c[0], c[1], c[2]) for c in contacts)
    if cs[0][0] != u or cs[-1][1] != v:
        return False
    for c in cs:
        if (c[0], c[1], c[2]) not in pool:
            return False
    for prev, nxt in zip(cs, cs[1:]):
        if nxt[0] != prev[1]:
            return False
        if nxt[2] < prev[2] + delta:
            return False
    return t1 <= cs[0][2] and cs[-1][2] + delta <= t2
