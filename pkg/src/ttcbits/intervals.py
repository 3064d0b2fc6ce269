"""Compact set of non-nested time intervals as two dynamic bit-vectors.

One vector marks departure timestamps, the other arrival timestamps;
the k-th 1 of each, paired, is the k-th stored interval.  Because the
set is containment-free, both endpoint sequences are strictly
increasing, which makes every primitive a small constant number of
rank/select calls.

Insertion keeps the set equal to the minimal antichain of everything
ever offered: an interval enclosing (or equal to) a stored one is
skipped, and stored intervals enclosing the new one are removed.  In
dense leaf mode the removals clear bits one interval at a time; in
sparse mode the whole doomed rank range is cleared with one
``unset_range`` per vector.
"""

from __future__ import annotations

from typing import NamedTuple

from .accounting import NODE_HEADER_BYTES, SUCCESSOR_BYTES
from .bitvector import (DEFAULT_BRANCHING, DEFAULT_DENSE_LEAF_BITS,
                        DEFAULT_SPARSE_LEAF_ONES, DynBitVector)
from .leaves import DenseLeaf, _MASKS


class IntervalMatch(NamedTuple):
    departure: int
    arrival: int
    successor: int | None


class IntervalSet:
    """Containment-free interval set over [departures, arrivals] bit-vectors."""

    __slots__ = ("departures", "arrivals", "successors", "mode")

    def __init__(self, mode: str = "dense", branching: int = DEFAULT_BRANCHING,
                 leaf_cap: int | None = None, track_successors: bool = False):
        if leaf_cap is None:
            leaf_cap = (DEFAULT_DENSE_LEAF_BITS if mode == "dense"
                        else DEFAULT_SPARSE_LEAF_ONES)
        self.mode = mode
        self.departures = DynBitVector(mode=mode, branching=branching,
                                       leaf_cap=leaf_cap)
        self.arrivals = DynBitVector(mode=mode, branching=branching,
                                     leaf_cap=leaf_cap)
        self.successors: list | None = [] if track_successors else None

    def __len__(self) -> int:
        return self.departures.ones_total

    def find_prev(self, t: int) -> IntervalMatch | None:
        """The stored interval with the greatest arrival <= t, if any."""
        if t < 1:
            raise ValueError(f"timestamp {t} must be >= 1")
        j = self.arrivals.rank1(t)
        if j == 0:
            return None
        return IntervalMatch(self.departures.select1(j),
                             self.arrivals.select1(j),
                             self.successors[j - 1] if self.successors is not None else None)

    def find_next(self, t: int) -> IntervalMatch | None:
        """The stored interval with the smallest departure >= t, if any."""
        if t < 1:
            raise ValueError(f"timestamp {t} must be >= 1")
        D = self.departures
        j = D.rank1(t - 1)
        if j == D.ones_total:
            return None
        return IntervalMatch(D.select1(j + 1),
                             self.arrivals.select1(j + 1),
                             self.successors[j] if self.successors is not None else None)

    def covers(self, t1: int, t2: int) -> bool:
        """True iff some stored interval lies inside [t1, t2].

        Exactly the skip condition of ``insert``; callers on hot paths
        use it to avoid the insertion machinery.  The single-leaf dense
        case is a fused probe computed without the rank entry points.
        """
        if t1 < 1:
            raise ValueError(f"timestamp {t1} must be >= 1")
        D = self.departures
        A = self.arrivals
        root_d = D.root
        root_a = A.root
        if type(root_d) is DenseLeaf and type(root_a) is DenseLeaf:
            masks = _MASKS
            try:
                i = t1 - 1
                if i <= 0:
                    rd = 0
                elif i >= D.length:
                    rd = D.ones_total
                else:
                    rd = (root_d.bits & masks[i]).bit_count()
                if t2 >= A.length:
                    ra = A.ones_total
                else:
                    ra = (root_a.bits & masks[t2]).bit_count()
                return rd < ra
            except IndexError:
                pass
        return D.rank1(t1 - 1) < A.rank1(t2)

    def latest_by_arrival(self, t: int) -> tuple[int, int | None] | None:
        """(departure, successor) of the latest interval arriving <= t."""
        j = self.arrivals.rank1(t)
        if j == 0:
            return None
        return (self.departures.select1(j),
                self.successors[j - 1] if self.successors is not None else None)

    def earliest_arrival_from(self, t: int) -> int | None:
        """Arrival of the earliest interval departing at t or later."""
        D = self.departures
        j = D.rank1(t - 1)
        if j == D.ones_total:
            return None
        return self.arrivals.select1(j + 1)

    def insert(self, t1: int, t2: int, successor: int | None = None) -> bool:
        """Offer [t1, t2]; returns True iff the set changed."""
        if not 1 <= t1 <= t2:
            raise ValueError(f"invalid interval [{t1}, {t2}]")
        D = self.departures
        A = self.arrivals
        r_d, bit_d = D.rank_access(t1)
        r_a, bit_a = A.rank_access(t2)
        if r_d < r_a + bit_a:
            # an equal or strictly tighter interval is already stored
            return False
        r_d_plus = r_d + bit_d
        if r_d_plus > r_a:
            # the intervals ranked r_a+1 .. r_d_plus all enclose [t1, t2]
            if self.mode == "sparse":
                D.unset_range(r_a + 1, r_d_plus)
                A.unset_range(r_a + 1, r_d_plus)
            else:
                for _ in range(r_d_plus - r_a):
                    D.update_bit(D.select1(r_a + 1), 0)
                    A.update_bit(A.select1(r_a + 1), 0)
            if self.successors is not None:
                del self.successors[r_a:r_d_plus]
        D.ensure_capacity(t1)
        D.update_bit(t1, 1)
        A.ensure_capacity(t2)
        A.update_bit(t2, 1)
        if self.successors is not None:
            self.successors.insert(r_a, successor)
        return True

    def intervals(self) -> list[tuple[int, int]]:
        """All stored intervals in increasing departure order."""
        D = self.departures
        A = self.arrivals
        return [(D.select1(k), A.select1(k))
                for k in range(1, D.ones_total + 1)]

    def endpoints(self) -> tuple[list[int], list[int]]:
        """(all departures, all arrivals), ascending; a bulk leaf walk."""
        return self.departures.one_positions(), self.arrivals.one_positions()

    def audit(self) -> None:
        self.departures.audit()
        self.arrivals.audit()
        if self.departures.ones_total != self.arrivals.ones_total:
            from .bitvector import AuditError
            raise AuditError("departure/arrival vectors hold different counts")
        if self.successors is not None and len(self.successors) != len(self):
            from .bitvector import AuditError
            raise AuditError("successor store out of step with intervals")

    def accounted_bytes(self) -> int:
        total = self.departures.accounted_bytes() + self.arrivals.accounted_bytes()
        if self.successors is not None:
            total += NODE_HEADER_BYTES + SUCCESSOR_BYTES * len(self.successors)
        return total

    def dump(self) -> str:
        parts = [f"intervalset mode={self.mode} count={len(self)}",
                 "D " + self.departures.dump(),
                 "A " + self.arrivals.dump()]
        if self.successors is not None:
            parts.append(f"successors {self.successors}")
        return "\n".join(parts)

    def __repr__(self):
        return f"IntervalSet(mode={self.mode!r}, count={len(self)})"
