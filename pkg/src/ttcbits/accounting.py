"""Byte-accounting model shared by every structure in the package.

Benchmarks compare structure sizes by summing what each node *would*
allocate in a systems implementation, not CPython object overhead, so
the numbers are reproducible across machines.  The model: every node
pays a fixed header; internal nodes allocate full fixed-size slot
arrays (as array-based B-tree nodes do); leaf payloads are sized to
their content rounded up to whole 64-bit words.
"""

NODE_HEADER_BYTES = 16
POINTER_BYTES = 8
COUNT_BYTES = 8
INTERVAL_KEY_BYTES = 16  # two 8-byte timestamps
SUCCESSOR_BYTES = 8
WORD_BYTES = 8


def round_to_words(nbytes: int) -> int:
    return WORD_BYTES * ((nbytes + WORD_BYTES - 1) // WORD_BYTES)
