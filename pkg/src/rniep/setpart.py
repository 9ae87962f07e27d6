"""Set partitions by restricted growth strings, in lexicographic order."""
from __future__ import annotations

from typing import Iterator, Optional, Sequence


def restricted_growth_strings(n: int, max_blocks: Optional[int] = None) -> Iterator[tuple]:
    """Yield every RGS a of length n (a[0] = 0, a[i] <= 1 + max(a[:i])).

    The first string is all zeros (one block) and the last is 0, 1, ..., n-1
    (all singletons).  ``max_blocks`` restricts to partitions with at most
    that many blocks.
    """
    if n == 0:
        yield ()
        return
    limit = n if max_blocks is None else max_blocks
    if limit <= 0:
        return
    a = [0] * n
    # m[i] = max(a[:i+1])
    m = [0] * n

    while True:
        yield tuple(a)
        # find rightmost position that can be incremented
        i = n - 1
        while i > 0 and (a[i] > m[i - 1] or a[i] + 1 >= limit):
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[i]


def blocks_from_rgs(items: Sequence, rgs: Sequence[int]) -> list:
    k = max(rgs) + 1 if rgs else 0
    out = [[] for _ in range(k)]
    for x, b in zip(items, rgs):
        out[b].append(x)
    return out


def set_partitions(items: Sequence, max_blocks: Optional[int] = None) -> Iterator[list]:
    for rgs in restricted_growth_strings(len(items), max_blocks):
        yield blocks_from_rgs(items, rgs)


def bell(n: int) -> int:
    """Bell number via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]
