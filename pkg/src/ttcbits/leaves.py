"""Bounded static bit-vectors used as tree leaf payloads.

Two interchangeable representations:

* ``DenseLeaf`` keeps the raw bits (conceptually an array of 64-bit
  words; stored as one arbitrary-precision int, which is Python's
  native bit container, with a ``words`` view for dumps and audits).
* ``SparseLeaf`` keeps only the distances between consecutive 1's;
  a trailing run of 0's is represented by ``length`` alone.

Positions are 1-based at this API: bit ``i`` lives at int bit offset
``i - 1``.  Capacity enforcement (max bits for dense, max ones for
sparse) belongs to the tree layer; leaves just report their balancing
``weight``.
"""

from __future__ import annotations

from .accounting import NODE_HEADER_BYTES, WORD_BYTES, round_to_words

_WORD = 64
_M64 = (1 << 64) - 1

# prefix masks (1 << i) - 1, indexed by i; grown on demand and shared by
# every rank-style probe in the package (hot paths index the list inline)
_MASKS: list[int] = [(1 << i) - 1 for i in range(4098)]


def _grow_masks(i: int) -> int:
    while len(_MASKS) <= i:
        _MASKS.append((_MASKS[-1] << 1) | 1)
    return _MASKS[i]


def _mask(i: int) -> int:
    try:
        return _MASKS[i]
    except IndexError:
        return _grow_masks(i)


def _select_in_int(bits: int, j: int, length: int) -> int:
    """Position (1-based) of the j-th set bit of ``bits``; j must be valid."""
    # Two guess-by-deficit probes first: start at the lower bound j and step
    # by the remaining deficit.  A probe whose rank meets j lands exactly on
    # the j-th 1 (every position in the stepped run must have been a 1), and
    # on the dense prefixes that dominate saturated workloads the first or
    # second probe hits.  Whatever deficit survives is closed with a linear
    # word scan, which is all a bounded leaf needs.
    masks = _MASKS
    if length >= len(masks):
        _grow_masks(length)
    p = j
    c = (bits & masks[p]).bit_count()
    if c == j:
        return p
    p += j - c
    c = (bits & masks[p]).bit_count()
    if c == j:
        return p
    need = j - c
    w = 0
    tail = bits >> p
    while True:
        w = tail & _M64
        cw = w.bit_count()
        if cw >= need:
            break
        need -= cw
        tail >>= _WORD
        p += _WORD
    for width in (32, 16, 8, 4, 2, 1):
        lo = w & masks[width]
        cw = lo.bit_count()
        if need > cw:
            need -= cw
            w >>= width
            p += width
        else:
            w = lo
    return p + 1


class DenseLeaf:
    """Bits stored verbatim, least-significant bit first."""

    __slots__ = ("bits", "length")
    height = 0

    def __init__(self, bits: int = 0, length: int = 0):
        self.bits = bits
        self.length = length

    @property
    def ones(self) -> int:
        return self.bits.bit_count()

    @property
    def weight(self) -> int:
        # dense leaves balance by bit count
        return self.length

    def access(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise ValueError(f"position {i} out of range 1..{self.length}")
        return (self.bits >> (i - 1)) & 1

    def rank(self, i: int) -> int:
        """Number of 1's in positions [1, i]; i may be 0."""
        if not 0 <= i <= self.length:
            raise ValueError(f"position {i} out of range 0..{self.length}")
        if i == self.length:
            return self.bits.bit_count()
        return (self.bits & _mask(i)).bit_count()

    def rank_access(self, i: int) -> tuple[int, int]:
        """(number of 1's in [1, i-1], bit at i) in one pass."""
        if not 1 <= i <= self.length:
            raise ValueError(f"position {i} out of range 1..{self.length}")
        b = self.bits
        return (b & _mask(i - 1)).bit_count(), (b >> (i - 1)) & 1

    def select(self, j: int) -> int:
        if not 1 <= j <= self.bits.bit_count():
            raise ValueError(f"rank {j} out of range 1..{self.bits.bit_count()}")
        return _select_in_int(self.bits, j, self.length)

    def update(self, i: int, b: int) -> int:
        """Set bit i to b; returns the previous bit."""
        if not 1 <= i <= self.length:
            raise ValueError(f"position {i} out of range 1..{self.length}")
        m = 1 << (i - 1)
        old = 1 if self.bits & m else 0
        if old != b:
            self.bits ^= m
        return old

    def insert_bits(self, i: int, run: int, nbits: int) -> None:
        """Splice ``nbits`` bits (LSB-first in ``run``) in after position i."""
        if not 0 <= i <= self.length:
            raise ValueError(f"position {i} out of range 0..{self.length}")
        b = self.bits
        lo = b & ((1 << i) - 1)
        self.bits = lo | (run << i) | ((b >> i) << (i + nbits))
        self.length += nbits

    def remove(self, i: int) -> int:
        """Remove bit i; returns it."""
        if not 1 <= i <= self.length:
            raise ValueError(f"position {i} out of range 1..{self.length}")
        b = self.bits
        old = (b >> (i - 1)) & 1
        lo = b & ((1 << (i - 1)) - 1)
        self.bits = lo | ((b >> i) << (i - 1))
        self.length -= 1
        return old

    def split(self) -> tuple["DenseLeaf", "DenseLeaf"]:
        """Cut into two halves; concatenation reproduces the input."""
        h = (self.length + 1) // 2
        left = DenseLeaf(self.bits & ((1 << h) - 1), h)
        right = DenseLeaf(self.bits >> h, self.length - h)
        return left, right

    def partition_at_one(self, j: int) -> tuple["DenseLeaf | None", "DenseLeaf"]:
        """Cut just before the j-th 1: ([1, p-1], [p, length])."""
        p = self.select(j)
        right = DenseLeaf(self.bits >> (p - 1), self.length - p + 1)
        if p == 1:
            return None, right
        return DenseLeaf(self.bits & ((1 << (p - 1)) - 1), p - 1), right

    def concat(self, other: "DenseLeaf") -> "DenseLeaf":
        return DenseLeaf(self.bits | (other.bits << self.length),
                         self.length + other.length)

    def copy(self) -> "DenseLeaf":
        return DenseLeaf(self.bits, self.length)

    @property
    def words(self) -> list[int]:
        """The payload as 64-bit words (derived view)."""
        b = self.bits
        return [(b >> (k * _WORD)) & _M64 for k in range((self.length + _WORD - 1) // _WORD)]

    def to01(self) -> str:
        return "".join("1" if (self.bits >> k) & 1 else "0" for k in range(self.length))

    @classmethod
    def from01(cls, s: str) -> "DenseLeaf":
        bits = 0
        for k, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << k
        return cls(bits, len(s))

    def accounted_bytes(self) -> int:
        nwords = (self.length + _WORD - 1) // _WORD
        return NODE_HEADER_BYTES + nwords * WORD_BYTES

    def __repr__(self):
        return f"DenseLeaf({self.to01()!r})"


class SparseLeaf:
    """Bits stored as gaps between consecutive 1's.

    ``gaps[0]`` is the position of the first 1 (distance from position
    0); ``gaps[k]`` the distance from the k-th to the (k+1)-th 1.  The
    physical encoding this models is fixed-width binary packing, which
    the byte accounting reflects.
    """

    __slots__ = ("gaps", "length")
    height = 0

    def __init__(self, gaps: list[int] | None = None, length: int = 0):
        self.gaps = gaps if gaps is not None else []
        self.length = length

    @property
    def ones(self) -> int:
        return len(self.gaps)

    @property
    def weight(self) -> int:
        # sparse leaves balance by their number of 1's
        return len(self.gaps)

    def _positions(self) -> list[int]:
        out = []
        pos = 0
        for g in self.gaps:
            pos += g
            out.append(pos)
        return out

    @classmethod
    def _from_positions(cls, positions: list[int], length: int) -> "SparseLeaf":
        gaps = []
        prev = 0
        for p in positions:
            gaps.append(p - prev)
            prev = p
        return cls(gaps, length)

    def access(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise ValueError(f"position {i} out of range 1..{self.length}")
        pos = 0
        for g in self.gaps:
            pos += g
            if pos >= i:
                return 1 if pos == i else 0
        return 0

    def rank(self, i: int) -> int:
        if not 0 <= i <= self.length:
            raise ValueError(f"position {i} out of range 0..{self.length}")
        pos = 0
        count = 0
        for g in self.gaps:
            pos += g
            if pos > i:
                break
            count += 1
        return count

    def rank_access(self, i: int) -> tuple[int, int]:
        if not 1 <= i <= self.length:
            raise ValueError(f"position {i} out of range 1..{self.length}")
        pos = 0
        count = 0
        for g in self.gaps:
            pos += g
            if pos >= i:
                return count, (1 if pos == i else 0)
            count += 1
        return count, 0

    def select(self, j: int) -> int:
        if not 1 <= j <= len(self.gaps):
            raise ValueError(f"rank {j} out of range 1..{len(self.gaps)}")
        return sum(self.gaps[:j])

    def update(self, i: int, b: int) -> int:
        if not 1 <= i <= self.length:
            raise ValueError(f"position {i} out of range 1..{self.length}")
        gaps = self.gaps
        pos = 0
        for k, g in enumerate(gaps):
            nxt = pos + g
            if nxt > i:
                # i sits strictly inside this gap: currently 0
                if b:
                    gaps[k:k + 1] = [i - pos, nxt - i]
                return 0
            if nxt == i:
                if not b:
                    if k + 1 < len(gaps):
                        gaps[k + 1] += g
                    del gaps[k]
                return 1
            pos = nxt
        # i lies in the trailing zero run
        if b:
            gaps.append(i - pos)
        return 0

    def insert_bits(self, i: int, run: int, nbits: int) -> None:
        if not 0 <= i <= self.length:
            raise ValueError(f"position {i} out of range 0..{self.length}")
        if run == 0:
            if i == self.length:  # appending zeros never splits a gap
                self.length += nbits
                return
            # pure zero splice: only the gap spanning i (if any) widens
            pos = 0
            for k, g in enumerate(self.gaps):
                if pos + g > i:
                    self.gaps[k] += nbits
                    break
                pos += g
            self.length += nbits
            return
        positions = [p if p <= i else p + nbits for p in self._positions()]
        added = []
        r = run
        while r:
            low = r & -r
            added.append(i + low.bit_length())
            r ^= low
        positions = sorted(positions + added)
        new = SparseLeaf._from_positions(positions, self.length + nbits)
        self.gaps = new.gaps
        self.length = new.length

    def remove(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise ValueError(f"position {i} out of range 1..{self.length}")
        old = 0
        positions = []
        for p in self._positions():
            if p == i:
                old = 1
            else:
                positions.append(p if p < i else p - 1)
        new = SparseLeaf._from_positions(positions, self.length - 1)
        self.gaps = new.gaps
        self.length = new.length
        return old

    def split(self) -> tuple["SparseLeaf", "SparseLeaf"]:
        k = len(self.gaps)
        if k == 0:
            raise ValueError("cannot split a sparse leaf with no 1's")
        h = (k + 1) // 2
        cut = sum(self.gaps[:h])  # position of the h-th 1
        left = SparseLeaf(self.gaps[:h], cut)
        right_gaps = self.gaps[h:]
        right = SparseLeaf(right_gaps, self.length - cut)
        return left, right

    def partition_at_one(self, j: int) -> tuple["SparseLeaf | None", "SparseLeaf"]:
        p = self.select(j)
        right_gaps = [1] + self.gaps[j:]
        right = SparseLeaf(right_gaps, self.length - p + 1)
        if p == 1:
            return None, right
        return SparseLeaf(self.gaps[:j - 1], p - 1), right

    def concat(self, other: "SparseLeaf") -> "SparseLeaf":
        if not other.gaps:
            return SparseLeaf(list(self.gaps), self.length + other.length)
        trailing = self.length - sum(self.gaps)
        gaps = list(self.gaps)
        gaps.append(trailing + other.gaps[0])
        gaps.extend(other.gaps[1:])
        return SparseLeaf(gaps, self.length + other.length)

    def copy(self) -> "SparseLeaf":
        return SparseLeaf(list(self.gaps), self.length)

    def to01(self) -> str:
        out = ["0"] * self.length
        for p in self._positions():
            out[p - 1] = "1"
        return "".join(out)

    @classmethod
    def from01(cls, s: str) -> "SparseLeaf":
        positions = [k + 1 for k, ch in enumerate(s) if ch == "1"]
        return cls._from_positions(positions, len(s))

    def accounted_bytes(self) -> int:
        width = max((g.bit_length() for g in self.gaps), default=0)
        payload = (len(self.gaps) * width + 7) // 8
        return NODE_HEADER_BYTES + round_to_words(payload)

    def __repr__(self):
        return f"SparseLeaf(gaps={self.gaps}, length={self.length})"
