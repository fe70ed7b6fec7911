"""Pure-Python integer elimination kernels.

Reference implementations of the hot kernels; `ualie._kernels` prefers the
compiled `ualie._accel` versions when present and falls back to these.
Both backends compute the same exact results.
"""

from __future__ import annotations


def rank_mod_p(entries, rows: int, cols: int, p: int) -> int:
    """Rank over F_p of a rows x cols matrix given as a flat entry list."""
    m = [[entries[r * cols + c] % p for c in range(cols)] for r in range(rows)]
    rank = 0
    for c in range(cols):
        piv = -1
        for r in range(rank, rows):
            if m[r][c]:
                piv = r
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        inv = pow(prow[c], p - 2, p)
        for r in range(rank + 1, rows):
            row = m[r]
            f = row[c]
            if f:
                f = f * inv % p
                for j in range(c, cols):
                    row[j] = (row[j] - f * prow[j]) % p
        rank += 1
        if rank == rows:
            break
    return rank


def int_rank(entries, rows: int, cols: int) -> int:
    """Exact rank over Z (equivalently Q) by fraction-free Bareiss elimination.

    Python's big integers keep every intermediate value exact; Bareiss keeps
    them minor-sized (the interior divisions are exact by construction).
    """
    m = [list(entries[r * cols : (r + 1) * cols]) for r in range(rows)]
    rank = 0
    prev = 1
    for c in range(cols):
        piv = -1
        for r in range(rank, rows):
            if m[r][c]:
                piv = r
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        pv = prow[c]
        for r in range(rank + 1, rows):
            row = m[r]
            f = row[c]
            for j in range(c + 1, cols):
                row[j] = (pv * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = pv
        rank += 1
        if rank == rows:
            break
    return rank
