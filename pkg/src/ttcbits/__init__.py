"""Incremental temporal-graph reachability on compact interval sets.

The package maintains, per ordered vertex pair, the minimal set of
journey [departure, arrival] intervals, encoded either as two dynamic
bit-vectors or as a B+-tree of interval keys, and answers reachability
and journey-reconstruction queries on top of them.
"""

from .bitvector import AuditError, DynBitVector
from .leaves import DenseLeaf, SparseLeaf
from .intervals import IntervalSet
from .baseline import BPlusTreeIntervalSet
from .closure import TTC, Contact, Journey, read_contact_file

__all__ = [
    "AuditError",
    "BPlusTreeIntervalSet",
    "Contact",
    "DenseLeaf",
    "DynBitVector",
    "IntervalSet",
    "Journey",
    "SparseLeaf",
    "TTC",
    "read_contact_file",
]
