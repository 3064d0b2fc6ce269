"""B+-tree interval set: the comparison structure for the compact one.

Keys are (departure, arrival) pairs kept in the leaves, ordered by
departure; because the set is containment-free the arrival order is
identical, so either endpoint can route a search.  Internal nodes hold
child pointers plus exact copies of each right subtree's smallest key,
maintained through insert/delete so arrival-guided descents never
follow a stale bound.

Same primitives and same antichain insertion contract as
``IntervalSet``; branching factor applies to all nodes.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right, insort

from .accounting import (INTERVAL_KEY_BYTES, NODE_HEADER_BYTES,
                         POINTER_BYTES, SUCCESSOR_BYTES)
from .intervals import IntervalMatch

DEFAULT_BRANCHING = 32


class _BLeaf:
    __slots__ = ("deps", "arrs", "succs", "nxt")

    def __init__(self):
        self.deps: list[int] = []
        self.arrs: list[int] = []
        self.succs: list | None = None
        self.nxt: _BLeaf | None = None


class _BNode:
    __slots__ = ("sep_d", "sep_a", "children")

    def __init__(self, sep_d, sep_a, children):
        self.sep_d = sep_d  # sep_*[i] = smallest key in children[i+1]'s subtree
        self.sep_a = sep_a
        self.children = children


class BPlusTreeIntervalSet:
    """Containment-free interval set stored as a B+-tree of keys."""

    def __init__(self, branching: int = DEFAULT_BRANCHING,
                 track_successors: bool = False):
        if branching < 4:
            raise ValueError("branching factor must be at least 4")
        self.branching = branching
        self.track_successors = track_successors
        self.root = self._new_leaf()
        self.count = 0

    def _new_leaf(self) -> _BLeaf:
        leaf = _BLeaf()
        if self.track_successors:
            leaf.succs = []
        return leaf

    @property
    def _min_fill(self) -> int:
        return (self.branching + 1) // 2

    def __len__(self) -> int:
        return self.count

    # ------------------------------------------------------------------
    # queries

    def _leaf_for_dep(self, t: int) -> _BLeaf:
        node = self.root
        while isinstance(node, _BNode):
            node = node.children[bisect_right(node.sep_d, t)]
        return node

    def find_next(self, t: int) -> IntervalMatch | None:
        """The stored interval with the smallest departure >= t, if any."""
        if t < 1:
            raise ValueError(f"timestamp {t} must be >= 1")
        leaf = self._leaf_for_dep(t)
        i = bisect_left(leaf.deps, t)
        if i == len(leaf.deps):
            leaf = leaf.nxt
            if leaf is None:
                return None
            i = 0
        return IntervalMatch(leaf.deps[i], leaf.arrs[i],
                             leaf.succs[i] if leaf.succs is not None else None)

    def find_prev(self, t: int) -> IntervalMatch | None:
        """The stored interval with the greatest arrival <= t, if any."""
        if t < 1:
            raise ValueError(f"timestamp {t} must be >= 1")
        node = self.root
        while isinstance(node, _BNode):
            node = node.children[bisect_right(node.sep_a, t)]
        i = bisect_right(node.arrs, t) - 1
        if i < 0:
            return None
        return IntervalMatch(node.deps[i], node.arrs[i],
                             node.succs[i] if node.succs is not None else None)

    def covers(self, t1: int, t2: int) -> bool:
        """True iff some stored interval lies inside [t1, t2].

        Raw descent without the match-tuple packaging; this probe runs a
        couple of hundred times per ingested contact.
        """
        if t1 < 1:
            raise ValueError(f"timestamp {t1} must be >= 1")
        node = self.root
        while type(node) is _BNode:
            node = node.children[bisect_right(node.sep_d, t1)]
        i = bisect_left(node.deps, t1)
        if i == len(node.deps):
            node = node.nxt
            if node is None:
                return False
            i = 0
        return node.arrs[i] <= t2

    def latest_by_arrival(self, t: int) -> tuple[int, int | None] | None:
        """(departure, successor) of the latest interval arriving <= t."""
        node = self.root
        while type(node) is _BNode:
            node = node.children[bisect_right(node.sep_a, t)]
        i = bisect_right(node.arrs, t) - 1
        if i < 0:
            return None
        return node.deps[i], (node.succs[i] if node.succs is not None else None)

    def earliest_arrival_from(self, t: int) -> int | None:
        """Arrival of the earliest interval departing at t or later."""
        node = self.root
        while type(node) is _BNode:
            node = node.children[bisect_right(node.sep_d, t)]
        i = bisect_left(node.deps, t)
        if i == len(node.deps):
            node = node.nxt
            if node is None:
                return None
            i = 0
        return node.arrs[i]

    def intervals(self) -> list[tuple[int, int]]:
        node = self.root
        while isinstance(node, _BNode):
            node = node.children[0]
        out = []
        while node is not None:
            out.extend(zip(node.deps, node.arrs))
            node = node.nxt
        return out

    def endpoints(self) -> tuple[list[int], list[int]]:
        """(all departures, all arrivals), ascending; a leaf-chain walk."""
        node = self.root
        while isinstance(node, _BNode):
            node = node.children[0]
        deps: list[int] = []
        arrs: list[int] = []
        while node is not None:
            deps.extend(node.deps)
            arrs.extend(node.arrs)
            node = node.nxt
        return deps, arrs

    # ------------------------------------------------------------------
    # insertion with antichain maintenance

    def insert(self, t1: int, t2: int, successor=None) -> bool:
        """Offer [t1, t2]; returns True iff the set changed."""
        if not 1 <= t1 <= t2:
            raise ValueError(f"invalid interval [{t1}, {t2}]")
        if self.covers(t1, t2):
            return False
        # stored intervals enclosing [t1, t2] sit consecutively just below
        # t1 by departure; peel them off one delete at a time
        while True:
            pred = self._last_dep_leq(t1)
            if pred is None or pred[1] < t2:
                break
            self._delete_key(pred[0])
        self._insert_key(t1, t2, successor)
        return True

    def _last_dep_leq(self, t: int):
        node = self.root
        while isinstance(node, _BNode):
            node = node.children[bisect_right(node.sep_d, t)]
        i = bisect_right(node.deps, t) - 1
        if i < 0:
            return None
        return node.deps[i], node.arrs[i]

    def _insert_key(self, dep: int, arr: int, successor) -> None:
        res = self._insert_rec(self.root, dep, arr, successor)
        if res is not None:
            sd, sa, right = res
            self.root = _BNode([sd], [sa], [self.root, right])
        self.count += 1

    def _insert_rec(self, node, dep, arr, successor):
        """Returns (sep_dep, sep_arr, new_right_sibling) on split, else None."""
        if isinstance(node, _BLeaf):
            i = bisect_left(node.deps, dep)
            node.deps.insert(i, dep)
            node.arrs.insert(i, arr)
            if node.succs is not None:
                node.succs.insert(i, successor)
            if len(node.deps) <= self.branching:
                return None
            h = (len(node.deps) + 1) // 2
            right = self._new_leaf()
            right.deps, node.deps = node.deps[h:], node.deps[:h]
            right.arrs, node.arrs = node.arrs[h:], node.arrs[:h]
            if node.succs is not None:
                right.succs, node.succs = node.succs[h:], node.succs[:h]
            right.nxt = node.nxt
            node.nxt = right
            return right.deps[0], right.arrs[0], right
        k = bisect_right(node.sep_d, dep)
        res = self._insert_rec(node.children[k], dep, arr, successor)
        if res is None:
            return None
        sd, sa, right = res
        node.sep_d.insert(k, sd)
        node.sep_a.insert(k, sa)
        node.children.insert(k + 1, right)
        if len(node.children) <= self.branching:
            return None
        h = (len(node.children) + 1) // 2
        rnode = _BNode(node.sep_d[h:], node.sep_a[h:], node.children[h:])
        up_d, up_a = node.sep_d[h - 1], node.sep_a[h - 1]
        del node.sep_d[h - 1:], node.sep_a[h - 1:], node.children[h:]
        return up_d, up_a, rnode

    # ------------------------------------------------------------------
    # deletion

    def _delete_key(self, dep: int) -> None:
        self._delete_rec(self.root, dep)
        root = self.root
        if isinstance(root, _BNode) and len(root.children) == 1:
            self.root = root.children[0]
        self.count -= 1

    def _delete_rec(self, node, dep):
        """Returns the subtree's new smallest key if it changed, else None."""
        if isinstance(node, _BLeaf):
            i = bisect_left(node.deps, dep)
            if i == len(node.deps) or node.deps[i] != dep:
                raise KeyError(dep)
            del node.deps[i], node.arrs[i]
            if node.succs is not None:
                del node.succs[i]
            if i == 0 and node.deps:
                return node.deps[0], node.arrs[0]
            return None
        k = bisect_right(node.sep_d, dep)
        new_min = self._delete_rec(node.children[k], dep)
        if new_min is not None and k > 0:
            node.sep_d[k - 1], node.sep_a[k - 1] = new_min
            new_min = None
        self._fix_child(node, k)
        return new_min

    def _size(self, node) -> int:
        return len(node.children) if isinstance(node, _BNode) else len(node.deps)

    def _fix_child(self, node: _BNode, k: int) -> None:
        child = node.children[k]
        if self._size(child) >= self._min_fill:
            return
        j = k - 1 if k > 0 else k + 1
        lo, hi = (j, k) if j < k else (k, j)
        a, b = node.children[lo], node.children[hi]
        total = self._size(a) + self._size(b)
        if isinstance(a, _BLeaf):
            if total <= self.branching:
                a.deps += b.deps
                a.arrs += b.arrs
                if a.succs is not None:
                    a.succs += b.succs
                a.nxt = b.nxt
                del node.children[hi], node.sep_d[lo], node.sep_a[lo]
            else:
                h = (total + 1) // 2
                deps = a.deps + b.deps
                arrs = a.arrs + b.arrs
                a.deps, b.deps = deps[:h], deps[h:]
                a.arrs, b.arrs = arrs[:h], arrs[h:]
                if a.succs is not None:
                    succs = a.succs + b.succs
                    a.succs, b.succs = succs[:h], succs[h:]
                node.sep_d[lo] = b.deps[0]
                node.sep_a[lo] = b.arrs[0]
            return
        if total <= self.branching:
            a.sep_d += [node.sep_d[lo]] + b.sep_d
            a.sep_a += [node.sep_a[lo]] + b.sep_a
            a.children += b.children
            del node.children[hi], node.sep_d[lo], node.sep_a[lo]
        else:
            h = (total + 1) // 2
            sep_d = a.sep_d + [node.sep_d[lo]] + b.sep_d
            sep_a = a.sep_a + [node.sep_a[lo]] + b.sep_a
            children = a.children + b.children
            a.sep_d, a.sep_a = sep_d[:h - 1], sep_a[:h - 1]
            node.sep_d[lo], node.sep_a[lo] = sep_d[h - 1], sep_a[h - 1]
            b.sep_d, b.sep_a = sep_d[h:], sep_a[h:]
            a.children, b.children = children[:h], children[h:]

    # ------------------------------------------------------------------
    # diagnostics

    def check(self) -> None:
        """Verify ordering, occupancy, separator exactness, leaf chaining."""
        leaves = []

        def walk(node, is_root):
            if isinstance(node, _BLeaf):
                assert node.deps == sorted(node.deps)
                assert node.arrs == sorted(node.arrs)
                assert len(node.deps) == len(node.arrs)
                if node.succs is not None:
                    assert len(node.succs) == len(node.deps)
                assert len(node.deps) <= self.branching
                if not is_root:
                    assert len(node.deps) >= self._min_fill
                leaves.append(node)
                return (node.deps[0], node.arrs[0]) if node.deps else None
            cnt = len(node.children)
            assert len(node.sep_d) == len(node.sep_a) == cnt - 1
            assert cnt <= self.branching
            assert cnt >= (2 if is_root else self._min_fill)
            first = None
            for i, child in enumerate(node.children):
                cmin = walk(child, False)
                if i == 0:
                    first = cmin
                else:
                    assert cmin == (node.sep_d[i - 1], node.sep_a[i - 1]), \
                        "stale separator"
            return first

        walk(self.root, True)
        node = self.root
        while isinstance(node, _BNode):
            node = node.children[0]
        chain = []
        while node is not None:
            chain.append(node)
            node = node.nxt
        assert chain == leaves, "leaf chain out of order"
        flat = self.intervals()
        assert flat == sorted(flat)
        assert len(flat) == self.count
        for (d1, a1), (d2, a2) in zip(flat, flat[1:]):
            assert d1 < d2 and a1 < a2, "nested or duplicate intervals"

    def accounted_bytes(self) -> int:
        leaf_bytes = NODE_HEADER_BYTES + self.branching * INTERVAL_KEY_BYTES
        if self.track_successors:
            leaf_bytes += self.branching * SUCCESSOR_BYTES
        inner_bytes = (NODE_HEADER_BYTES + self.branching * POINTER_BYTES
                       + (self.branching - 1) * INTERVAL_KEY_BYTES)

        def walk(node):
            if isinstance(node, _BLeaf):
                return leaf_bytes
            return inner_bytes + sum(walk(c) for c in node.children)

        return walk(self.root)

    def dump(self) -> str:
        lines = [f"bptree branching={self.branching} count={self.count}"]

        def walk(node, depth):
            pad = "  " * depth
            if isinstance(node, _BLeaf):
                keys = list(zip(node.deps, node.arrs))
                if node.succs is not None:
                    lines.append(f"{pad}bleaf keys={keys} succs={node.succs}")
                else:
                    lines.append(f"{pad}bleaf keys={keys}")
                return
            seps = list(zip(node.sep_d, node.sep_a))
            lines.append(f"{pad}bnode seps={seps}")
            for child in node.children:
                walk(child, depth + 1)

        walk(self.root, 1)
        return "\n".join(lines)

    def __repr__(self):
        return f"BPlusTreeIntervalSet(count={self.count})"
