"""Exact rank computation for the morphism constraint systems.

All catalog matrices have entries in {0, 1}, so ranks are independent of
the ground field for the supported backends.  The default path eliminates
over the prime field F_p with p = 1000003, which keeps every intermediate
value an exact machine-sized integer.  A Fraction-based elimination is
available for paranoia runs.
"""

from fractions import Fraction

DEFAULT_PRIME = 1000003


def rank_mod_p(rows: list[list[int]], p: int = DEFAULT_PRIME) -> int:
    """Rank of an integer matrix over F_p (row-major, rows may be ragged-free)."""
    rows = [[x % p for x in row] for row in rows if any(row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        prow = [(x * inv) % p for x in rows[rank]]
        rows[rank] = prow
        for r in range(rank + 1, len(rows)):
            f = rows[r][col]
            if f:
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank_exact(rows: list[list[int]]) -> int:
    """Rank over the rationals, via Fraction-pivoted Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in rows if any(row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = [x / rows[rank][col] for x in rows[rank]]
        rows[rank] = prow
        for r in range(rank + 1, len(rows)):
            f = rows[r][col]
            if f:
                rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank
