"""Small exact linear algebra: Gaussian elimination over the package fields,
plus a fast modular rank certificate backed by numpy.

Everything here treats vectors as dense lists of field elements.  The solves
are exact; a singular system raises so callers can surface it as a theorem
violation rather than patching over it.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np


def solve_in_span(
    basis: Sequence[Sequence], targets: Sequence[Sequence], field
) -> list[list]:
    """Express each target as an exact linear combination of the basis vectors.

    ``basis`` is a list of d ambient vectors that must be linearly
    independent; returns, for each target, its coordinate list of length d.
    Raises ValueError on a dependent basis or an unrepresentable target.
    """
    d = len(basis)
    m = len(basis[0]) if d else 0
    rows = [
        [basis[j][r] for j in range(d)] + [t[r] for t in targets]
        for r in range(m)
    ]
    width = d + len(targets)
    pivot_rows: list[int] = []
    r = 0
    for col in range(d):
        pivot = next((i for i in range(r, m) if rows[i][col]), None)
        if pivot is None:
            raise ValueError(f"basis vectors are linearly dependent (column {col})")
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.one / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[r])]
        pivot_rows.append(r)
        r += 1
    for i in range(r, m):
        if any(rows[i][d:]):
            raise ValueError("target outside the span of the basis")
    return [[rows[j][d + t] for j in range(d)] for t in range(len(targets))]


def exact_rank(rows: Sequence[Sequence], field) -> int:
    """Rank by exact Gaussian elimination."""
    mat = [list(row) for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = field.one / mat[rank][col]
        prow = [x * inv for x in mat[rank]]
        mat[rank] = prow
        for i in range(rank + 1, len(mat)):
            c = mat[i][col]
            if c:
                mat[i] = [a - c * b for a, b in zip(mat[i], prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def fraction_rows_to_int(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Scale each row by its denominator lcm (rank is unchanged)."""
    out = []
    for row in rows:
        den = 1
        for c in row:
            den = den * c.denominator // gcd(den, c.denominator)
        out.append([int(c * den) for c in row])
    return out


def modp_rank(int_rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank of an integer matrix reduced mod p, via vectorized elimination.

    Entries are reduced to [0, p); with p < 2^15.5 all products fit int64, so
    the modular arithmetic is exact.  The mod-p rank never exceeds the
    rational rank, so a full mod-p rank certifies full rational rank.
    """
    if not int_rows:
        return 0
    mat = np.array(int_rows, dtype=np.int64) % p
    nrows, ncols = mat.shape
    rank = 0
    for col in range(ncols):
        pivots = np.nonzero(mat[rank:, col])[0]
        if pivots.size == 0:
            continue
        pr = rank + int(pivots[0])
        if pr != rank:
            mat[[rank, pr]] = mat[[pr, rank]]
        inv = pow(int(mat[rank, col]), -1, p)
        mat[rank] = (mat[rank] * inv) % p
        rest = mat[rank + 1 :, col]
        nz = np.nonzero(rest)[0]
        if nz.size:
            mat[rank + 1 + nz] = (
                mat[rank + 1 + nz] - np.outer(rest[nz], mat[rank])
            ) % p
        rank += 1
        if rank == nrows:
            break
    return rank
