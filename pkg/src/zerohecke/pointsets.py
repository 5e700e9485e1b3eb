"""Finite point sets realizing the quotient dimension, the bijection with
ordered set partitions, and vanishing witnesses whose top-degree components
are the ideal generators.

A point set for parameters (n, k) is built from n+k-1 distinct scalars
``alphas``: each coordinate z_i ranges over the first k+i-1 of them, all
coordinates are distinct, and the first k scalars all appear.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .combinatorics import OrderedSetPartition, osp, osp_shape
from .polyring import QQ, Polynomial, complete_h, elementary_e


def default_alphas(n: int, k: int, field=QQ) -> tuple:
    """The scalars 1, 2, ..., n+k-1; over a prime field p must be at least
    n+k-1 so they stay distinct."""
    m = n + k - 1
    if field.name != "Q" and field.p < m:
        raise ValueError(f"prime field needs p >= {m} distinct scalars")
    return tuple(field.from_int(i) for i in range(1, m + 1))


def _check_alphas(n: int, k: int, alphas: Sequence) -> tuple:
    alphas = tuple(alphas)
    if len(alphas) != n + k - 1:
        raise ValueError(f"need {n + k - 1} scalars, got {len(alphas)}")
    if len(set(alphas)) != len(alphas):
        raise ValueError("scalars are not distinct")
    return alphas


@dataclass(frozen=True)
class PointSet:
    n: int
    k: int
    field: object
    alphas: tuple
    points: tuple[tuple, ...]


def build_pointset(n: int, k: int, alphas: Sequence | None = None, field=QQ) -> PointSet:
    """Enumerate the defining conditions directly.

    With k = n the conditions force a permutation of the first n scalars:

    >>> ps = build_pointset(2, 2, (QQ.from_int(0), QQ.from_int(1), QQ.from_int(2)))
    >>> [tuple(map(int, p)) for p in ps.points]
    [(0, 1), (1, 0)]
    """
    if alphas is None:
        alphas = default_alphas(n, k, field)
    alphas = _check_alphas(n, k, alphas)
    required = set(alphas[:k])
    points = []

    def rec(i: int, chosen: list):
        if i == n + 1:
            if required <= set(chosen):
                points.append(tuple(chosen))
            return
        # Even with every remaining slot spent on required scalars we must
        # still be able to cover them all.
        missing = len(required - set(chosen))
        if missing > n + 1 - i:
            return
        for z in alphas[: k + i - 1]:
            if z not in chosen:
                chosen.append(z)
                rec(i + 1, chosen)
                chosen.pop()

    rec(1, [])
    return PointSet(n, k, field, alphas, tuple(points))


def osp_to_point(sigma: OrderedSetPartition, alphas: Sequence) -> tuple:
    """The bijection onto the point set: the minimum of the i-th block is sent
    to the i-th scalar; every other letter s gets a later scalar whose index
    records how many blocks weakly to its left have minimum below s.

    >>> a = tuple(QQ.from_int(i) for i in range(1, 13))
    >>> pt = osp_to_point(osp([[7, 8], [2, 3, 6], [1, 4], [5, 9]]), a)
    >>> [int(z) for z in pt]
    [3, 2, 5, 7, 4, 6, 1, 8, 12]
    """
    sigma = osp(sigma)
    k = len(sigma)
    n = sum(len(b) for b in sigma)
    alphas = _check_alphas(n, k, alphas)
    z: list = [None] * n
    mins = [min(b) for b in sigma]
    for i, b in enumerate(sigma):
        z[mins[i] - 1] = alphas[i]
    unassigned = sorted(set(range(1, n + 1)) - set(mins))
    pool = list(alphas[k:])
    for s in unassigned:
        block_of_s = next(idx for idx, b in enumerate(sigma) if s in b)
        ell = sum(1 for idx in range(block_of_s + 1) if mins[idx] < s)
        z[s - 1] = pool.pop(ell - 1)
    return tuple(z)


def point_to_osp(point: Sequence, n: int, k: int, alphas: Sequence) -> OrderedSetPartition:
    """Invert the assignment rule: scalar positions recover the block minima,
    and each later scalar's rank in the unused pool recovers its block.
    """
    alphas = _check_alphas(n, k, alphas)
    if len(point) != n:
        raise ValueError("point has wrong length")
    where = {z: i + 1 for i, z in enumerate(point)}
    if len(where) != n:
        raise ValueError("point has repeated coordinates")
    try:
        mins = [where[alphas[i]] for i in range(k)]
    except KeyError:
        raise ValueError("point does not contain the first k scalars") from None
    blocks: list[list[int]] = [[m] for m in mins]
    unassigned = sorted(set(range(1, n + 1)) - set(mins))
    pool = list(alphas[k:])
    for s in unassigned:
        zs = point[s - 1]
        try:
            ell = pool.index(zs) + 1
        except ValueError:
            raise ValueError(f"coordinate {zs} reused or out of range") from None
        pool.pop(ell - 1)
        candidates = [idx for idx in range(k) if mins[idx] < s]
        if ell > len(candidates):
            raise ValueError("point violates the defining conditions")
        blocks[candidates[ell - 1]].append(s)
    return osp(blocks)


def witness_h(i: int, n: int, k: int, alphas: Sequence | None = None, field=QQ) -> Polynomial:
    """sum_j (-1)^j h_{k-j}(x_1..x_i) e_j(first k+i-1 scalars): vanishes on
    every point, and its top-degree component is h_k(x_1..x_i)."""
    if not (1 <= i <= n):
        raise ValueError(f"prefix length {i} out of range 1..{n}")
    if alphas is None:
        alphas = default_alphas(n, k, field)
    alphas = _check_alphas(n, k, alphas)
    evals = elementary_values(alphas[: k + i - 1], k, field)
    out = Polynomial.zero(n, field)
    for j in range(k + 1):
        sign = field.from_int((-1) ** j)
        out = out + complete_h(k - j, i, n, field).scale(sign * evals[j])
    return out


def witness_e(r: int, n: int, k: int, alphas: Sequence | None = None, field=QQ) -> Polynomial:
    """sum_j (-1)^j e_{r-j}(x_1..x_n) h_j(first k scalars): the coefficient of
    t^r in prod(1 + x_i t) / prod_{i<=k}(1 + alpha_i t), so it vanishes on
    every point when n-k < r <= n; its top-degree component is e_r."""
    if not (n - k < r <= n):
        raise ValueError(f"need {n - k} < r <= {n}, got r={r}")
    if alphas is None:
        alphas = default_alphas(n, k, field)
    alphas = _check_alphas(n, k, alphas)
    hvals = complete_values(alphas[:k], r, field)
    out = Polynomial.zero(n, field)
    for j in range(r + 1):
        sign = field.from_int((-1) ** j)
        out = out + elementary_e(r - j, n, field).scale(sign * hvals[j])
    return out


def elementary_values(vals: Sequence, upto: int, field=QQ) -> list:
    """e_0, ..., e_upto of a list of scalars, by the one-item-at-a-time DP."""
    e = [field.one] + [field.zero] * upto
    for v in vals:
        for j in range(min(upto, len(vals)), 0, -1):
            e[j] = e[j] + v * e[j - 1]
    return e


def complete_values(vals: Sequence, upto: int, field=QQ) -> list:
    """h_0, ..., h_upto of a list of scalars."""
    h = [field.one] + [field.zero] * upto
    for v in vals:
        for j in range(1, upto + 1):
            h[j] = h[j] + v * h[j - 1]
    return h


def witnesses_vanish(n: int, k: int, alphas: Sequence | None = None, field=QQ) -> list[dict]:
    """Evaluate every witness at every point; returns the failures (ideally
    none) as {witness, point, value} records."""
    if alphas is None:
        alphas = default_alphas(n, k, field)
    ps = build_pointset(n, k, alphas, field)
    failures = []
    witnesses = [(f"h[{i}]", witness_h(i, n, k, alphas, field)) for i in range(1, n + 1)]
    witnesses += [
        (f"e[{r}]", witness_e(r, n, k, alphas, field)) for r in range(n - k + 1, n + 1)
    ]
    for name, wpoly in witnesses:
        for pt in ps.points:
            val = wpoly.evaluate(pt)
            if val:
                failures.append(
                    {"witness": name, "point": [str(z) for z in pt], "value": str(val)}
                )
    return failures
