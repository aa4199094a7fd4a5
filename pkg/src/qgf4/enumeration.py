"""Exhaustive codeword enumeration for F2-spans of symplectic vectors.

The span of r generators is walked as a table of the 2^L combinations of the
first L generators, XOR-shifted by each combination of the remaining r - L
generators.  The outer combinations are visited in Gray-code order so every
step costs a single XOR of one generator into the running offset.  Weights are
popcounts of ``a | b`` taken 64 coordinates at a time.
"""

from __future__ import annotations

import os
from typing import Iterator, Sequence

import numpy as np

DEFAULT_BUDGET = 1 << 28
TABLE_BITS = 18
_MASK64 = (1 << 64) - 1


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would visit more words than allowed."""


def default_budget() -> int:
    """Budget in codewords; ``QGF4_BUDGET`` holds its log2 when set."""
    env = os.environ.get("QGF4_BUDGET")
    if env:
        return 1 << int(env)
    return DEFAULT_BUDGET


def check_budget(r: int, budget: int | None) -> None:
    if budget is None:
        budget = default_budget()
    if (1 << r) > budget:
        raise BudgetExceeded(f"2^{r} codewords exceed the enumeration budget of {budget}")


def _words(x: int, nw: int) -> np.ndarray:
    return np.array([(x >> (64 * i)) & _MASK64 for i in range(nw)], dtype=np.uint64)


def iter_chunks(
    gens: Sequence[tuple[int, int]], n: int, table_bits: int = TABLE_BITS
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (a, b) word arrays of shape (m, ceil(n/64)) covering the span once.

    ``gens`` are (a, b) bit-mask pairs and are assumed independent.
    """
    nw = max(1, (n + 63) // 64)
    r = len(gens)
    low = min(r, table_bits)
    ta = np.zeros((1, nw), dtype=np.uint64)
    tb = np.zeros((1, nw), dtype=np.uint64)
    for a, b in gens[:low]:
        ga, gb = _words(a, nw), _words(b, nw)
        ta = np.concatenate([ta, ta ^ ga])
        tb = np.concatenate([tb, tb ^ gb])
    high = [(_words(a, nw), _words(b, nw)) for a, b in gens[low:]]
    oa = np.zeros(nw, dtype=np.uint64)
    ob = np.zeros(nw, dtype=np.uint64)
    yield ta, tb
    for i in range(1, 1 << len(high)):
        # Gray code step i flips the lowest set bit of i
        j = (i & -i).bit_length() - 1
        oa ^= high[j][0]
        ob ^= high[j][1]
        yield ta ^ oa, tb ^ ob


def chunk_weights(ca: np.ndarray, cb: np.ndarray) -> np.ndarray:
    return np.bitwise_count(ca | cb).sum(axis=1, dtype=np.int64)


def weight_counts(
    gens: Sequence[tuple[int, int]], n: int, budget: int | None = None
) -> list[int]:
    """Exact weight distribution A_0..A_n of the span of ``gens``."""
    check_budget(len(gens), budget)
    total = np.zeros(n + 1, dtype=np.int64)
    for ca, cb in iter_chunks(gens, n):
        total += np.bincount(chunk_weights(ca, cb), minlength=n + 1)
    return [int(x) for x in total]


def min_weight_at_least(
    gens: Sequence[tuple[int, int]], n: int, bound: int, budget: int | None = None
) -> bool:
    """True iff every nonzero word of the span has weight >= ``bound``.

    Stops at the first chunk holding a violating word.
    """
    check_budget(len(gens), budget)
    first = True
    for ca, cb in iter_chunks(gens, n):
        w = chunk_weights(ca, cb)
        if first:
            w = w[1:]
            first = False
        if w.size and int(w.min()) < bound:
            return False
    return True


def all_words(gens: Sequence[tuple[int, int]], n: int, budget: int | None = None) -> Iterator[tuple[int, int]]:
    """Every (a, b) of the span as Python integers; for small spans only."""
    check_budget(len(gens), budget)
    words = [(0, 0)]
    for a, b in gens:
        words += [(x ^ a, y ^ b) for x, y in words]
    return iter(words)
