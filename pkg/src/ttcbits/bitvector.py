"""Dynamic bit-vector: a balanced tree with B+-tree layout over leaf bit-vectors.

Internal nodes keep, per child, the subtree's total bit count (``num``)
and set-bit count (``ones``), which route rank/select searches and make
point updates logarithmic.  Leaves are ``DenseLeaf`` or ``SparseLeaf``
payloads; the tree balances them by their ``weight`` (bits for dense
leaves, ones for sparse leaves).

Positions are 1-based.  Reads past the end are defined rather than
errors: ``access`` returns 0 and ``rank1`` clamps to the total count,
which the interval-insertion algorithm relies on.

The structure is single-writer / multiple-reader: queries may run
concurrently with each other but never with a mutation.
"""

from __future__ import annotations

from .accounting import (COUNT_BYTES, NODE_HEADER_BYTES, POINTER_BYTES)
from .leaves import DenseLeaf, SparseLeaf, _mask as _rank_mask, _select_in_int

DEFAULT_BRANCHING = 32
DEFAULT_DENSE_LEAF_BITS = 4096
DEFAULT_SPARSE_LEAF_ONES = 128

_WORD = 64
_M64 = (1 << 64) - 1


class AuditError(Exception):
    """A structural invariant does not hold."""


class _Inner:
    __slots__ = ("children", "num", "ones", "height")

    def __init__(self, children, num, ones, height):
        self.children = children
        self.num = num
        self.ones = ones
        self.height = height


def _node_len(node) -> int:
    return sum(node.num) if node.height else node.length


def _node_ones(node) -> int:
    return sum(node.ones) if node.height else node.ones


class DynBitVector:
    """Growable bit sequence with logarithmic rank/select/update."""

    __slots__ = ("root", "length", "ones_total", "mode", "branching",
                 "leaf_cap", "touches", "_free")

    def __init__(self, mode: str = "dense", branching: int = DEFAULT_BRANCHING,
                 leaf_cap: int | None = None):
        if mode not in ("dense", "sparse"):
            raise ValueError(f"unknown leaf mode {mode!r}")
        if branching < 4:
            raise ValueError("branching factor must be at least 4")
        self.mode = mode
        self.branching = branching
        if leaf_cap is None:
            leaf_cap = DEFAULT_DENSE_LEAF_BITS if mode == "dense" else DEFAULT_SPARSE_LEAF_ONES
        self.leaf_cap = leaf_cap
        self.root = self._new_leaf()
        self.length = 0
        self.ones_total = 0
        self.touches = 0
        self._free: list = []

    # ------------------------------------------------------------------
    # construction helpers

    def _new_leaf(self):
        return DenseLeaf() if self.mode == "dense" else SparseLeaf()

    def _new_inner(self, children, num, ones, height) -> _Inner:
        # reuse detached shells before allocating; their children are fed
        # back into the pool so dismantling large detached subtrees is
        # amortized over later allocations
        free = self._free
        while free:
            n = free.pop()
            if n.height == 0:
                continue
            free.extend(n.children)
            n.children = children
            n.num = num
            n.ones = ones
            n.height = height
            return n
        return _Inner(children, num, ones, height)

    def _recycle(self, node) -> None:
        if node is not None and node.height:
            self._free.append(node)

    @property
    def _min_leaf(self) -> int:
        return (self.leaf_cap + 1) // 2

    @property
    def _min_fan(self) -> int:
        return (self.branching + 1) // 2

    def same_shape_params(self, other: "DynBitVector") -> bool:
        return (self.mode == other.mode and self.branching == other.branching
                and self.leaf_cap == other.leaf_cap)

    @classmethod
    def zeros(cls, length: int, mode: str = "dense",
              branching: int = DEFAULT_BRANCHING,
              leaf_cap: int | None = None) -> "DynBitVector":
        """A vector of ``length`` zero bits.

        O(1) in sparse mode (a single gap-free leaf carries any run of
        zeros); materialized leaf by leaf in dense mode.
        """
        bv = cls(mode=mode, branching=branching, leaf_cap=leaf_cap)
        if length:
            bv.root = bv._zeros_node(length)
            bv.length = length
        return bv

    def _zeros_node(self, length: int):
        if self.mode == "sparse":
            return SparseLeaf([], length)
        cap = self.leaf_cap
        if length <= cap:
            return DenseLeaf(0, length)
        nfull, rem = divmod(length, cap)
        lens = [cap] * nfull
        if rem:
            if rem < self._min_leaf:
                lens[-1:] = [(cap + rem + 1) // 2, (cap + rem) // 2]
            else:
                lens.append(rem)
        return self._build_uniform([DenseLeaf(0, n) for n in lens])

    def _build_uniform(self, nodes: list):
        # stack uniform-height nodes into parents until a single root remains
        m = self.branching
        min_fan = self._min_fan
        while len(nodes) > 1:
            q, r = divmod(len(nodes), m)
            sizes = [m] * q
            if r:
                if q and r < min_fan:
                    sizes[-1:] = [(m + r + 1) // 2, (m + r) // 2]
                else:
                    sizes.append(r)
            parents = []
            k = 0
            h = nodes[0].height + 1
            for s in sizes:
                group = nodes[k:k + s]
                k += s
                parents.append(self._new_inner(
                    group,
                    [_node_len(c) for c in group],
                    [_node_ones(c) for c in group],
                    h))
            nodes = parents
        return nodes[0]

    # ------------------------------------------------------------------
    # queries

    def access(self, i: int) -> int:
        """Bit at position i; positions past the end read as 0."""
        if i < 1:
            raise ValueError(f"position {i} must be >= 1")
        if i > self.length:
            self.touches += 1
            return 0
        node = self.root
        t = 1
        while node.height:
            num = node.num
            k = 0
            while i > num[k]:
                i -= num[k]
                k += 1
            node = node.children[k]
            t += 1
        self.touches += t
        return node.access(i)

    def rank1(self, i: int) -> int:
        """Number of 1's in [1, i]; clamps when i exceeds the length."""
        if i < 0:
            raise ValueError(f"position {i} must be >= 0")
        if i == 0:
            return 0
        if i >= self.length:
            return self.ones_total
        node = self.root
        if not node.height:
            # single-leaf fast path; dense payload inlined (hot in closure
            # composition, where most offers are already covered)
            self.touches += 1
            if type(node) is DenseLeaf:
                return (node.bits & _rank_mask(i)).bit_count()
            return node.rank(i)
        acc = 0
        t = 1
        while node.height:
            num = node.num
            ones = node.ones
            k = 0
            while i > num[k]:
                i -= num[k]
                acc += ones[k]
                k += 1
            node = node.children[k]
            t += 1
        self.touches += t
        return acc + node.rank(i)

    def rank_access(self, i: int) -> tuple[int, int]:
        """(number of 1's in [1, i-1], bit at i) in a single traversal.

        Past-the-end positions read as (total ones, 0).
        """
        if i < 1:
            raise ValueError(f"position {i} must be >= 1")
        if i > self.length:
            self.touches += 1
            return self.ones_total, 0
        node = self.root
        acc = 0
        t = 1
        while node.height:
            num = node.num
            ones = node.ones
            k = 0
            while i > num[k]:
                i -= num[k]
                acc += ones[k]
                k += 1
            node = node.children[k]
            t += 1
        self.touches += t
        r, b = node.rank_access(i)
        return acc + r, b

    def select1(self, j: int) -> int:
        """Position of the j-th 1."""
        if not 1 <= j <= self.ones_total:
            raise ValueError(f"rank {j} out of range 1..{self.ones_total}")
        node = self.root
        if not node.height:
            self.touches += 1
            if type(node) is DenseLeaf:
                return _select_in_int(node.bits, j, node.length)
            return node.select(j)
        base = 0
        t = 1
        while node.height:
            ones = node.ones
            num = node.num
            k = 0
            while j > ones[k]:
                j -= ones[k]
                base += num[k]
                k += 1
            node = node.children[k]
            t += 1
        self.touches += t
        return base + node.select(j)

    # ------------------------------------------------------------------
    # point mutations

    def insert_bit(self, i: int, b: int) -> None:
        """Splice bit b in after position i (0 inserts at the front)."""
        self._insert(i, 1 if b else 0, 1)

    def insert_word(self, i: int, w: int) -> None:
        """Splice a 64-bit word in after position i."""
        if not 0 <= w <= _M64:
            raise ValueError("word out of 64-bit range")
        self._insert(i, w, _WORD)

    def _insert(self, i: int, run: int, nbits: int) -> None:
        if not 0 <= i <= self.length:
            raise ValueError(f"position {i} out of range 0..{self.length}")
        cap = self.leaf_cap
        # feed the splice in leaf-cap-sized chunks so that one leaf split
        # always restores the bound (matters only when cap < the run size)
        while nbits:
            take = nbits if self.mode == "sparse" else min(nbits, cap)
            chunk = run & ((1 << take) - 1) if take < nbits else run
            if self.mode == "sparse":
                while chunk.bit_count() > cap:
                    take = (take + 1) // 2
                    chunk = run & ((1 << take) - 1)
            self._insert_one(i, chunk, take)
            i += take
            run >>= take
            nbits -= take

    def _insert_one(self, i: int, run: int, nbits: int) -> None:
        dones = run.bit_count()
        res = self._insert_rec(self.root, i, run, nbits, dones)
        if res is not None:
            l, r = res
            self.root = self._new_inner(
                [l, r], [_node_len(l), _node_len(r)],
                [_node_ones(l), _node_ones(r)], l.height + 1)
        self.length += nbits
        self.ones_total += dones

    def _insert_rec(self, node, i, run, nbits, dones):
        self.touches += 1
        if not node.height:
            node.insert_bits(i, run, nbits)
            if node.weight > self.leaf_cap:
                return node.split()
            return None
        num = node.num
        k = 0
        last = len(num) - 1
        while k < last and i > num[k]:
            i -= num[k]
            k += 1
        res = self._insert_rec(node.children[k], i, run, nbits, dones)
        if res is None:
            num[k] += nbits
            node.ones[k] += dones
            return None
        l, r = res
        node.children[k] = l
        num[k] = _node_len(l)
        node.ones[k] = _node_ones(l)
        node.children.insert(k + 1, r)
        num.insert(k + 1, _node_len(r))
        node.ones.insert(k + 1, _node_ones(r))
        if len(node.children) > self.branching:
            return self._split_inner(node)
        return None

    def _split_inner(self, node: _Inner) -> tuple[_Inner, _Inner]:
        h = (len(node.children) + 1) // 2
        right = self._new_inner(node.children[h:], node.num[h:],
                                node.ones[h:], node.height)
        del node.children[h:]
        del node.num[h:]
        del node.ones[h:]
        return node, right

    def update_bit(self, i: int, b: int) -> None:
        """Write bit b at position i."""
        if not 1 <= i <= self.length:
            raise ValueError(f"position {i} out of range 1..{self.length}")
        b = 1 if b else 0
        if self.mode == "dense":
            # never restructures: num keys are unchanged and dense leaves
            # balance by bit count
            node = self.root
            if not node.height:
                old = node.update(i, b)
                self.touches += 1
                self.ones_total += b - old
                return
            path = []
            while node.height:
                num = node.num
                k = 0
                while i > num[k]:
                    i -= num[k]
                    k += 1
                path.append((node, k))
                node = node.children[k]
            old = node.update(i, b)
            self.touches += len(path) + 1
            if old != b:
                delta = b - old
                for n, k in path:
                    n.ones[k] += delta
                self.ones_total += delta
            return
        # sparse leaves balance by ones, so an update can overflow or
        # underflow the target leaf
        old, res = self._update_rec(self.root, i, b)
        if res is not None:
            l, r = res
            self.root = self._new_inner(
                [l, r], [_node_len(l), _node_len(r)],
                [_node_ones(l), _node_ones(r)], l.height + 1)
        else:
            self._collapse_root()
        self.ones_total += b - old

    def _update_rec(self, node, i, b):
        self.touches += 1
        if not node.height:
            old = node.update(i, b)
            if node.weight > self.leaf_cap:
                return old, node.split()
            return old, None
        num = node.num
        k = 0
        while i > num[k]:
            i -= num[k]
            k += 1
        old, res = self._update_rec(node.children[k], i, b)
        node.ones[k] += b - old
        if res is not None:
            l, r = res
            node.children[k] = l
            num[k] = _node_len(l)
            node.ones[k] = _node_ones(l)
            node.children.insert(k + 1, r)
            num.insert(k + 1, _node_len(r))
            node.ones.insert(k + 1, _node_ones(r))
            if len(node.children) > self.branching:
                return old, self._split_inner(node)
            return old, None
        self._check_child(node, k)
        return old, None

    def remove_bit(self, i: int) -> None:
        """Remove the bit at position i."""
        if not 1 <= i <= self.length:
            raise ValueError(f"position {i} out of range 1..{self.length}")
        old = self._remove_rec(self.root, i)
        self._collapse_root()
        self.length -= 1
        self.ones_total -= old

    def _remove_rec(self, node, i) -> int:
        self.touches += 1
        if not node.height:
            return node.remove(i)
        num = node.num
        k = 0
        while i > num[k]:
            i -= num[k]
            k += 1
        old = self._remove_rec(node.children[k], i)
        num[k] -= 1
        node.ones[k] -= old
        self._check_child(node, k)
        return old

    def _collapse_root(self) -> None:
        root = self.root
        while root.height and len(root.children) == 1:
            child = root.children[0]
            root.children = []
            self._recycle(root)
            root = child
        self.root = root

    def _check_child(self, node: _Inner, k: int) -> None:
        """Repair child k of ``node`` if it dropped below minimum occupancy."""
        child = node.children[k]
        if child.height:
            if len(child.children) >= self._min_fan:
                return
        elif child.weight >= self._min_leaf:
            return
        j = k - 1 if k > 0 else k + 1
        self.touches += 1
        lo, hi = (j, k) if j < k else (k, j)
        a = node.children[lo]
        b = node.children[hi]
        if not a.height:
            merged = a.concat(b)
            if merged.weight <= self.leaf_cap:
                node.children[lo] = merged
                node.num[lo] = merged.length
                node.ones[lo] = merged.ones
                del node.children[hi], node.num[hi], node.ones[hi]
            else:
                l, r = merged.split()
                node.children[lo] = l
                node.num[lo] = l.length
                node.ones[lo] = l.ones
                node.children[hi] = r
                node.num[hi] = r.length
                node.ones[hi] = r.ones
            return
        kids = a.children + b.children
        nums = a.num + b.num
        ones = a.ones + b.ones
        if len(kids) <= self.branching:
            a.children = kids
            a.num = nums
            a.ones = ones
            node.num[lo] = sum(nums)
            node.ones[lo] = sum(ones)
            b.children = []
            self._recycle(b)
            del node.children[hi], node.num[hi], node.ones[hi]
        else:
            h = (len(kids) + 1) // 2
            a.children, a.num, a.ones = kids[:h], nums[:h], ones[:h]
            b.children, b.num, b.ones = kids[h:], nums[h:], ones[h:]
            node.num[lo] = sum(a.num)
            node.ones[lo] = sum(a.ones)
            node.num[hi] = sum(b.num)
            node.ones[hi] = sum(b.ones)

    def ensure_capacity(self, t: int) -> None:
        """Append zero words until the vector holds at least t bits."""
        while self.length < t:
            self._insert(self.length, 0, _WORD)

    # ------------------------------------------------------------------
    # structural operations: join / split / unset_range

    @staticmethod
    def join(left: "DynBitVector", right: "DynBitVector") -> "DynBitVector":
        """Concatenate two vectors; both operands are consumed."""
        if not left.same_shape_params(right):
            raise ValueError("cannot join vectors with different parameters")
        if left.length == 0:
            return right
        if right.length == 0:
            return left
        out = DynBitVector(mode=left.mode, branching=left.branching,
                           leaf_cap=left.leaf_cap)
        out._free = left._free + right._free
        out.root = out._join_nodes(left.root, right.root)
        out.length = left.length + right.length
        out.ones_total = left.ones_total + right.ones_total
        return out

    def _join_nodes(self, n1, n2):
        h1 = n1.height
        h2 = n2.height
        if h1 == h2:
            return self._merge_or_grow(n1, n2)
        if h1 > h2:
            sub = self._pop_child(n1, -1)
            r = self._join_nodes(sub, n2)
            if r.height == h1:
                return self._merge_or_grow(n1, r)
            self._push_child(n1, r, rightmost=True)
            return n1
        sub = self._pop_child(n2, 0)
        r = self._join_nodes(n1, sub)
        if r.height == h2:
            return self._merge_or_grow(r, n2)
        self._push_child(n2, r, rightmost=False)
        return n2

    def _pop_child(self, node: _Inner, idx: int):
        child = node.children.pop(idx)
        del node.num[idx], node.ones[idx]
        return child

    def _push_child(self, node: _Inner, child, rightmost: bool) -> None:
        if rightmost:
            node.children.append(child)
            node.num.append(_node_len(child))
            node.ones.append(_node_ones(child))
        else:
            node.children.insert(0, child)
            node.num.insert(0, _node_len(child))
            node.ones.insert(0, _node_ones(child))

    def _merge_or_grow(self, a, b):
        """Combine two equal-height nodes into one, or distribute their
        content evenly and grow by one level."""
        if not a.height:
            merged = a.concat(b)
            if merged.weight <= self.leaf_cap:
                return merged
            l, r = merged.split()
            return self._new_inner([l, r], [l.length, r.length],
                                   [l.ones, r.ones], 1)
        kids = a.children + b.children
        nums = a.num + b.num
        ones = a.ones + b.ones
        if len(kids) <= self.branching:
            a.children = kids
            a.num = nums
            a.ones = ones
            b.children = []
            self._recycle(b)
            return a
        h = (len(kids) + 1) // 2
        a.children, a.num, a.ones = kids[:h], nums[:h], ones[:h]
        b.children, b.num, b.ones = kids[h:], nums[h:], ones[h:]
        return self._new_inner(
            [a, b], [sum(a.num), sum(b.num)],
            [sum(a.ones), sum(b.ones)], a.height + 1)

    def split_at_jth_one(self, j: int) -> tuple["DynBitVector", "DynBitVector"]:
        """Cut just before the j-th 1: bits [1, p-1] and [p, length] where
        p is its position.  The receiver is consumed."""
        if not 1 <= j <= self.ones_total:
            raise ValueError(f"rank {j} out of range 1..{self.ones_total}")
        lnode, rnode = self._split_nodes(self.root, j)
        left = self._spawn(lnode)
        right = self._spawn(rnode)
        self.root = self._new_leaf()
        self.length = 0
        self.ones_total = 0
        return left, right

    def _spawn(self, node) -> "DynBitVector":
        bv = DynBitVector(mode=self.mode, branching=self.branching,
                          leaf_cap=self.leaf_cap)
        if node is not None:
            bv.root = node
            bv.length = _node_len(node)
            bv.ones_total = _node_ones(node)
        return bv

    def _split_nodes(self, node, j):
        if not node.height:
            return node.partition_at_one(j)
        ones = node.ones
        k = 0
        while j > ones[k]:
            j -= ones[k]
            k += 1
        child = node.children[k]
        left_t = self._tree_from_slice(node, 0, k)
        right_t = self._tree_from_slice(node, k + 1, len(node.children))
        node.children = []
        self._recycle(node)
        l2, r2 = self._split_nodes(child, j)
        return self._join_opt(left_t, l2), self._join_opt(r2, right_t)

    def _tree_from_slice(self, node: _Inner, a: int, b: int):
        cnt = b - a
        if cnt == 0:
            return None
        if cnt == 1:
            return node.children[a]
        return self._new_inner(node.children[a:b], node.num[a:b],
                               node.ones[a:b], node.height)

    def _join_opt(self, a, b):
        if a is None:
            return b
        if b is None:
            return a
        return self._join_nodes(a, b)

    def unset_range(self, j1: int, j2: int) -> None:
        """Clear every bit from the position of the j1-th 1 through the
        position of the j2-th 1 (inclusive).  Length is preserved.

        Realized as two splits, a zero-filled replacement tree, and two
        joins; the detached subtree is recycled lazily through the node
        pool.  O(1) zero-tree creation applies to sparse leaves only.
        """
        if not 1 <= j1 <= j2 <= self.ones_total:
            raise ValueError(
                f"rank range {j1}..{j2} invalid for {self.ones_total} ones")
        k = j2 - j1 + 1
        length = self.length
        rest_ones = self.ones_total - (j1 - 1)
        lnode, rest = self._split_nodes(self.root, j1)
        if rest_ones > k:
            # cut again just before the first surviving 1; the extra zeros
            # swept into the replaced span were zero already
            mid, rnode = self._split_nodes(rest, k + 1)
        else:
            mid, rnode = rest, None
        zlen = _node_len(mid)
        self._recycle(mid)
        z = self._zeros_node(zlen)
        root = self._join_opt(self._join_opt(lnode, z), rnode)
        self.root = root
        self.length = length
        self.ones_total -= k

    # ------------------------------------------------------------------
    # diagnostics and helpers

    @property
    def height(self) -> int:
        """Number of levels, counting the leaf level as 1."""
        return self.root.height + 1

    def audit(self) -> None:
        """Walk the whole tree and verify every structural invariant.

        Raises ``AuditError`` on the first violation.
        """
        leaf_cls = DenseLeaf if self.mode == "dense" else SparseLeaf
        min_leaf = self._min_leaf
        min_fan = self._min_fan
        depths = set()

        def walk(node, depth, is_root):
            if not node.height:
                if not isinstance(node, leaf_cls):
                    raise AuditError(f"leaf of wrong representation at depth {depth}")
                if node.weight > self.leaf_cap:
                    raise AuditError(f"leaf weight {node.weight} over cap {self.leaf_cap}")
                if not is_root and node.weight < min_leaf:
                    raise AuditError(f"non-root leaf weight {node.weight} under {min_leaf}")
                if isinstance(node, DenseLeaf):
                    if node.length < 0 or node.bits < 0 or node.bits >> node.length:
                        raise AuditError("dense leaf has bits beyond its length")
                else:
                    if any(g < 1 for g in node.gaps):
                        raise AuditError("sparse leaf has a non-positive gap")
                    if sum(node.gaps) > node.length:
                        raise AuditError("sparse leaf gaps overrun its length")
                depths.add(depth)
                return node.length, node.ones
            cnt = len(node.children)
            if cnt != len(node.num) or cnt != len(node.ones):
                raise AuditError("key arrays out of step with children")
            lo = 2 if is_root else min_fan
            if not lo <= cnt <= self.branching:
                raise AuditError(
                    f"node fan-out {cnt} outside [{lo}, {self.branching}]")
            tl = to = 0
            for idx, child in enumerate(node.children):
                if child.height != node.height - 1:
                    raise AuditError("children heights are uneven")
                cl, co = walk(child, depth + 1, False)
                if cl != node.num[idx] or co != node.ones[idx]:
                    raise AuditError(
                        f"stale keys: num/ones ({node.num[idx]}, {node.ones[idx]}) "
                        f"!= recomputed ({cl}, {co})")
                tl += cl
                to += co
            return tl, to

        total_len, total_ones = walk(self.root, 0, True)
        if total_len != self.length:
            raise AuditError(f"length {self.length} != recomputed {total_len}")
        if total_ones != self.ones_total:
            raise AuditError(f"ones {self.ones_total} != recomputed {total_ones}")
        if len(depths) != 1:
            raise AuditError(f"leaves at multiple depths: {sorted(depths)}")

    def dump(self) -> str:
        """One line per node, preorder.  Debug aid, not a stable format."""
        lines = [f"bitvector mode={self.mode} length={self.length} "
                 f"ones={self.ones_total}"]

        def walk(node, depth):
            pad = "  " * depth
            if node.height:
                lines.append(f"{pad}inner h={node.height} num={node.num} "
                             f"ones={node.ones}")
                for child in node.children:
                    walk(child, depth + 1)
            elif isinstance(node, DenseLeaf):
                lines.append(f"{pad}dense len={node.length} ones={node.ones} "
                             f"bits={node.bits:x}")
            else:
                lines.append(f"{pad}sparse len={node.length} gaps={node.gaps}")

        walk(self.root, 1)
        return "\n".join(lines)

    def accounted_bytes(self) -> int:
        inner_bytes = NODE_HEADER_BYTES + self.branching * (
            POINTER_BYTES + 2 * COUNT_BYTES)

        def walk(node):
            if not node.height:
                return node.accounted_bytes()
            return inner_bytes + sum(walk(c) for c in node.children)

        return walk(self.root)

    def copy(self) -> "DynBitVector":
        bv = DynBitVector(mode=self.mode, branching=self.branching,
                          leaf_cap=self.leaf_cap)

        def clone(node):
            if not node.height:
                return node.copy()
            return _Inner([clone(c) for c in node.children],
                          list(node.num), list(node.ones), node.height)

        bv.root = clone(self.root)
        bv.length = self.length
        bv.ones_total = self.ones_total
        return bv

    def one_positions(self) -> list[int]:
        """Positions of all set bits, ascending."""
        out = []

        def walk(node, base):
            if node.height:
                for child, n in zip(node.children, node.num):
                    walk(child, base)
                    base += n
                return
            if isinstance(node, DenseLeaf):
                bits = node.bits
                while bits:
                    low = bits & -bits
                    out.append(base + low.bit_length())
                    bits ^= low
            else:
                pos = 0
                for g in node.gaps:
                    pos += g
                    out.append(base + pos)

        walk(self.root, 0)
        return out

    def to01(self) -> str:
        out = ["0"] * self.length
        for p in self.one_positions():
            out[p - 1] = "1"
        return "".join(out)

    @classmethod
    def from01(cls, s: str, mode: str = "dense",
               branching: int = DEFAULT_BRANCHING,
               leaf_cap: int | None = None) -> "DynBitVector":
        """Build through ordinary word insertions (realistic tree shapes)."""
        bv = cls(mode=mode, branching=branching, leaf_cap=leaf_cap)
        for start in range(0, len(s), _WORD):
            chunk = s[start:start + _WORD]
            run = 0
            for k, ch in enumerate(chunk):
                if ch == "1":
                    run |= 1 << k
            bv._insert(bv.length, run, len(chunk))
        return bv

    def __repr__(self):
        return (f"DynBitVector(mode={self.mode!r}, length={self.length}, "
                f"ones={self.ones_total})")
