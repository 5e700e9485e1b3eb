"""Exact combinatorics: compositions, permutations, ordered set partitions,
standard Young tableaux, Schensted insertion, and q,t-polynomials.

Conventions used throughout the package:

- Permutations are tuples in one-line notation with values 1..n, so
  ``w[i-1]`` is the image of ``i``.
- Descent positions are 1-based elements of ``{1, ..., n-1}``.
- A composition of n is a tuple of positive integers summing to n.
- An ordered set partition is a tuple of blocks, each block a strictly
  increasing tuple of integers, with the blocks covering 1..n disjointly.

Every value is an immutable tuple (or an immutable :class:`QTPoly`), and all
functions are pure, so everything here is safe to share between threads.
"""
from __future__ import annotations

import itertools
from bisect import bisect_right
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Composition = tuple[int, ...]
Permutation = tuple[int, ...]
OrderedSetPartition = tuple[tuple[int, ...], ...]
Tableau = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# q,t-polynomials and q-analogs
# ---------------------------------------------------------------------------

class QTPoly:
    """A polynomial in q and t with arbitrary-precision integer coefficients.

    Stored as a map from ``(q_exponent, t_exponent)`` to a nonzero int.
    Instances are treated as immutable; arithmetic returns new objects.

    >>> p = QTPoly.q_power(1) + QTPoly.from_int(1)
    >>> str(p * p)
    '1 + 2*q + q^2'
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], int] | None = None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}

    @classmethod
    def zero(cls) -> "QTPoly":
        return cls()

    @classmethod
    def from_int(cls, c: int) -> "QTPoly":
        return cls({(0, 0): c})

    @classmethod
    def one(cls) -> "QTPoly":
        return cls.from_int(1)

    @classmethod
    def q_power(cls, d: int) -> "QTPoly":
        return cls({(d, 0): 1})

    @classmethod
    def t_power(cls, d: int) -> "QTPoly":
        return cls({(0, d): 1})

    @classmethod
    def monomial(cls, dq: int, dt: int, c: int = 1) -> "QTPoly":
        return cls({(dq, dt): c})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == QTPoly.from_int(other).coeffs
        if isinstance(other, QTPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "QTPoly") -> "QTPoly":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            new = out.get(k, 0) + c
            if new:
                out[k] = new
            else:
                out.pop(k, None)
        return QTPoly(out)

    def __neg__(self) -> "QTPoly":
        return QTPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "QTPoly") -> "QTPoly":
        return self + (-other)

    def __mul__(self, other) -> "QTPoly":
        if isinstance(other, int):
            return QTPoly({k: c * other for k, c in self.coeffs.items()})
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                k = (a + a2, b + b2)
                out[k] = out.get(k, 0) + c * c2
        return QTPoly(out)

    __rmul__ = __mul__

    def subs(self, q: int | None = None, t: int | None = None) -> "QTPoly":
        """Substitute integer values for q and/or t."""
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self.coeffs.items():
            k = (0 if q is not None else a, 0 if t is not None else b)
            val = c * (q**a if q is not None else 1) * (t**b if t is not None else 1)
            out[k] = out.get(k, 0) + val
        return QTPoly(out)

    def swap_qt(self) -> "QTPoly":
        """Exchange the roles of q and t."""
        return QTPoly({(b, a): c for (a, b), c in self.coeffs.items()})

    def rev_q(self) -> "QTPoly":
        """Reverse the q-coefficient sequence at each fixed t-degree.

        >>> str((3 * QTPoly.q_power(3) + 2 * QTPoly.q_power(2) + QTPoly.one()).rev_q())
        '3 + 2*q + q^3'
        """
        if not self.coeffs:
            return QTPoly()
        out: dict[tuple[int, int], int] = {}
        tops = {}
        for (a, b) in self.coeffs:
            tops[b] = max(tops.get(b, 0), a)
        for (a, b), c in self.coeffs.items():
            out[(tops[b] - a, b)] = c
        return QTPoly(out)

    def q_degree(self) -> int:
        return max((a for (a, _) in self.coeffs), default=0)

    def t_degree(self) -> int:
        return max((b for (_, b) in self.coeffs), default=0)

    def coeff(self, dq: int, dt: int = 0) -> int:
        return self.coeffs.get((dq, dt), 0)

    def total(self) -> int:
        """The sum of all coefficients, i.e. the value at q = t = 1."""
        return sum(self.coeffs.values())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b) in sorted(self.coeffs, key=lambda k: (k[1], k[0])):
            c = self.coeffs[(a, b)]
            vars_ = []
            if a == 1:
                vars_.append("q")
            elif a > 1:
                vars_.append(f"q^{a}")
            if b == 1:
                vars_.append("t")
            elif b > 1:
                vars_.append(f"t^{b}")
            mag = abs(c)
            if not vars_:
                body = str(mag)
            elif mag == 1:
                body = "*".join(vars_)
            else:
                body = f"{mag}*" + "*".join(vars_)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    __repr__ = __str__

    def to_jsonable(self) -> list[dict]:
        return [
            {"q": a, "t": b, "c": str(self.coeffs[(a, b)])}
            for (a, b) in sorted(self.coeffs)
        ]


def q_int(n: int) -> QTPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return QTPoly({(i, 0): 1 for i in range(n)})


def q_factorial(n: int) -> QTPoly:
    out = QTPoly.one()
    for m in range(1, n + 1):
        out = out * q_int(m)
    return out


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> QTPoly:
    """Gaussian binomial [a choose b]_q, zero when b < 0 or b > a.

    >>> str(q_binomial(4, 2))
    '1 + q + 2*q^2 + q^3 + q^4'
    >>> q_binomial(2, 3) == 0 and q_binomial(3, -1) == 0
    True
    """
    if b < 0 or b > a:
        return QTPoly.zero()
    if b == 0 or b == a:
        return QTPoly.one()
    return q_binomial(a - 1, b - 1) + QTPoly.q_power(b) * q_binomial(a - 1, b)


def t_binomial(a: int, b: int) -> QTPoly:
    """Gaussian binomial in the variable t."""
    return q_binomial(a, b).swap_qt()


def q_multinomial(n: int, parts: Sequence[int]) -> QTPoly:
    """[n choose a_1, ..., a_r]_q as a product of Gaussian binomials."""
    out = QTPoly.one()
    rest = n
    for a in parts:
        out = out * q_binomial(rest, a)
        rest -= a
    return out


@lru_cache(maxsize=None)
def q_stirling(n: int, k: int) -> QTPoly:
    """q-Stirling number via Stir(n,k) = Stir(n-1,k-1) + [k]_q Stir(n-1,k).

    >>> str(q_stirling(4, 2))
    '3 + 3*q + q^2'
    >>> q_stirling(0, 0) == 1 and q_stirling(0, 1) == 0 and q_stirling(3, 0) == 0
    True
    """
    if n == 0:
        return QTPoly.one() if k == 0 else QTPoly.zero()
    if k <= 0 or k > n:
        return QTPoly.zero()
    return q_stirling(n - 1, k - 1) + q_int(k) * q_stirling(n - 1, k)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind (integer value)."""
    return q_stirling(n, k).total()


# ---------------------------------------------------------------------------
# Compositions
# ---------------------------------------------------------------------------

def compositions(n: int) -> Iterator[Composition]:
    """All compositions of n, ordered by their descent sets.

    >>> list(compositions(3))
    [(3,), (1, 2), (2, 1), (1, 1, 1)]
    """
    for size in range(n):
        for des in itertools.combinations(range(1, n), size):
            yield composition_from_descents(des, n)


def compositions_of_length(n: int, k: int) -> Iterator[Composition]:
    for des in itertools.combinations(range(1, n), k - 1):
        yield composition_from_descents(des, n)


def composition_from_descents(des: Iterable[int], n: int) -> Composition:
    """The composition of n whose partial sums are the given descent set.

    >>> composition_from_descents({2, 5, 6}, 8)
    (2, 3, 1, 2)
    """
    cuts = sorted(des)
    if cuts and (cuts[0] < 1 or cuts[-1] > n - 1):
        raise ValueError(f"descents {cuts} not contained in [{n - 1}]")
    prev = 0
    parts = []
    for c in cuts:
        parts.append(c - prev)
        prev = c
    parts.append(n - prev)
    return tuple(parts)


def composition_descents(alpha: Composition) -> frozenset[int]:
    """Partial sums of all but the last part.

    >>> sorted(composition_descents((2, 3, 1, 2)))
    [2, 5, 6]
    """
    out = []
    total = 0
    for a in alpha[:-1]:
        total += a
        out.append(total)
    return frozenset(out)


def composition_maj(alpha: Composition) -> int:
    """Sum of the descent positions of the composition.

    >>> composition_maj((2, 3, 1, 2))
    13
    """
    return sum(composition_descents(alpha))


def complement(alpha: Composition) -> Composition:
    """The composition with complementary descent set in [n-1].

    >>> complement((2, 3, 1, 2))
    (1, 2, 1, 3, 1)
    """
    n = sum(alpha)
    des = composition_descents(alpha)
    return composition_from_descents(set(range(1, n)) - des, n)


def coarsens(alpha: Composition, beta: Composition) -> bool:
    """True if alpha can be formed by merging adjacent parts of beta."""
    if sum(alpha) != sum(beta):
        raise ValueError("compositions of different sizes")
    return composition_descents(alpha) <= composition_descents(beta)


def descents(seq: Sequence[int]) -> frozenset[int]:
    """Positions j (1-based) with seq[j] > seq[j+1], for any integer sequence.

    >>> sorted(descents((4, 5, 0, 0, 1, 0, 2, 2)))
    [2, 5]
    """
    return frozenset(j for j in range(1, len(seq)) if seq[j - 1] > seq[j])


def merge_composition(alpha: Composition, iseq: Sequence[int]) -> Composition:
    """The composition whose descent set is Des(alpha) union Des(iseq).

    >>> merge_composition((3, 2, 3), (4, 5, 0, 0, 1, 0, 2, 2))
    (2, 1, 2, 3)
    """
    n = sum(alpha)
    if len(iseq) != n:
        raise ValueError(f"sequence length {len(iseq)} != composition size {n}")
    return composition_from_descents(composition_descents(alpha) | descents(iseq), n)


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------

def permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    return itertools.permutations(range(1, n + 1))


def identity_perm(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def longest_perm(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def major_index(seq: Sequence[int]) -> int:
    return sum(descents(seq))


def descent_number(seq: Sequence[int]) -> int:
    return len(descents(seq))


def inversions(seq: Sequence[int]) -> int:
    """Number of out-of-order pairs; the Coxeter length for permutations."""
    return sum(
        1
        for j in range(len(seq))
        for jp in range(j + 1, len(seq))
        if seq[j] > seq[jp]
    )


def perm_inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        inv[wi - 1] = i
    return tuple(inv)


def idescents(w: Permutation) -> frozenset[int]:
    """Descent set of the inverse permutation."""
    return descents(perm_inverse(w))


def swap_values(w: Permutation, i: int) -> Permutation:
    """Left multiplication by the adjacent transposition at i (swap letters i, i+1)."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def swap_positions(w: Permutation, i: int) -> Permutation:
    """Right multiplication by the adjacent transposition at i (swap places i, i+1)."""
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def left_descents(w: Permutation) -> frozenset[int]:
    """The i with length(s_i w) < length(w); equals the inverse descent set."""
    return idescents(w)


def canonical_reduced_word(w: Permutation) -> tuple[int, ...]:
    """A fixed reduced word for w, built by repeatedly removing the leftmost
    descent (bubble sort order).  Reading the result left to right as a
    product of adjacent transpositions gives back w.

    >>> canonical_reduced_word((2, 1, 3))
    (1,)
    >>> canonical_reduced_word((3, 2, 1))
    (1, 2, 1)
    """
    word = []
    cur = list(w)
    while True:
        for j in range(len(cur) - 1):
            if cur[j] > cur[j + 1]:
                word.append(j + 1)
                cur[j], cur[j + 1] = cur[j + 1], cur[j]
                break
        else:
            break
    return tuple(reversed(word))


def perm_from_word(word: Sequence[int], n: int) -> Permutation:
    """The permutation s_{i_1} ... s_{i_l} for a word (i_1, ..., i_l).

    >>> perm_from_word((1, 2, 1), 3)
    (3, 2, 1)
    """
    w = identity_perm(n)
    for i in word:
        w = swap_positions(w, i)
    return w


def reduced_words(w: Permutation) -> list[tuple[int, ...]]:
    """All reduced words of w (words end with some right descent).

    >>> sorted(reduced_words((3, 2, 1)))
    [(1, 2, 1), (2, 1, 2)]
    """
    if w == identity_perm(len(w)):
        return [()]
    out = []
    for i in sorted(descents(w)):
        for prefix in reduced_words(swap_positions(w, i)):
            out.append(prefix + (i,))
    return out


def minimal_perm(alpha: Composition) -> Permutation:
    """The shortest permutation whose descent set equals the descent set of
    alpha, built by filling the ribbon diagram of alpha column by column and
    reading rows bottom to top.

    >>> minimal_perm((2, 3, 1))
    (1, 3, 2, 4, 6, 5)
    >>> minimal_perm((4,))
    (1, 2, 3, 4)
    >>> minimal_perm((1, 1, 1))
    (3, 2, 1)
    """
    rows = len(alpha)
    starts = [1]
    for a in alpha[:-1]:
        starts.append(starts[-1] + a - 1)
    ncols = starts[-1] + alpha[-1] - 1
    label: dict[tuple[int, int], int] = {}
    nxt = 1
    for col in range(1, ncols + 1):
        for row in range(rows, 0, -1):
            if starts[row - 1] <= col <= starts[row - 1] + alpha[row - 1] - 1:
                label[(row, col)] = nxt
                nxt += 1
    oneline = []
    for row in range(1, rows + 1):
        for col in range(starts[row - 1], starts[row - 1] + alpha[row - 1]):
            oneline.append(label[(row, col)])
    return tuple(oneline)


def perms_with_descents_between(
    lower: frozenset[int] | set[int], upper: frozenset[int] | set[int], n: int
) -> list[Permutation]:
    """All w in S_n with lower <= Des(w) <= upper, in one-line lex order."""
    lo, up = frozenset(lower), frozenset(upper)
    return [w for w in permutations(n) if lo <= descents(w) <= up]


# ---------------------------------------------------------------------------
# Ordered set partitions
# ---------------------------------------------------------------------------

def osp(blocks: Iterable[Iterable[int]]) -> OrderedSetPartition:
    """Normalize and validate an ordered set partition of 1..n.

    >>> osp([[5, 2], [6], [1, 3, 4]])
    ((2, 5), (6,), (1, 3, 4))
    """
    norm = tuple(tuple(sorted(b)) for b in blocks)
    seen: set[int] = set()
    for b in norm:
        if not b:
            raise ValueError("empty block")
        if seen & set(b):
            raise ValueError("blocks are not disjoint")
        seen |= set(b)
    n = sum(len(b) for b in norm)
    if seen != set(range(1, n + 1)):
        raise ValueError("blocks do not cover 1..n")
    return norm


def osp_shape(sigma: OrderedSetPartition) -> Composition:
    return tuple(len(b) for b in sigma)


def osp_to_pair(sigma: OrderedSetPartition) -> tuple[Permutation, Composition]:
    """Encode as (w, alpha): erase the bars, record the shape.

    >>> osp_to_pair(((2, 4, 5), (6,), (1, 3)))
    ((2, 4, 5, 6, 1, 3), (3, 1, 2))
    """
    w = tuple(x for b in sigma for x in b)
    return w, osp_shape(sigma)


def osp_from_pair(w: Permutation, alpha: Composition) -> OrderedSetPartition:
    """Cut w into segments of sizes alpha; requires Des(w) inside Des(alpha)."""
    if not descents(w) <= composition_descents(alpha):
        raise ValueError(f"descents of {w} not within the shape {alpha}")
    out = []
    pos = 0
    for a in alpha:
        out.append(tuple(w[pos : pos + a]))
        pos += a
    return tuple(out)


def osps_of_shape(alpha: Composition) -> Iterator[OrderedSetPartition]:
    """Ordered set partitions of shape alpha, lex order in the (w, alpha) encoding."""
    n = sum(alpha)

    def rec(remaining: tuple[int, ...], parts: Composition):
        if not parts:
            yield ()
            return
        for combo in itertools.combinations(remaining, parts[0]):
            rest = tuple(x for x in remaining if x not in combo)
            for tail in rec(rest, parts[1:]):
                yield (combo,) + tail

    yield from rec(tuple(range(1, n + 1)), alpha)


def ordered_set_partitions(n: int, k: int) -> Iterator[OrderedSetPartition]:
    """All of OP_{n,k}, grouped by shape (shapes in descent-set order)."""
    for alpha in compositions_of_length(n, k):
        yield from osps_of_shape(alpha)


def osp_block_of(sigma: OrderedSetPartition, letter: int) -> int:
    for idx, b in enumerate(sigma):
        if letter in b:
            return idx
    raise ValueError(f"{letter} not in {sigma}")


def osp_swap_letters(sigma: OrderedSetPartition, i: int) -> OrderedSetPartition:
    """Apply the transposition of letters i, i+1 and renormalize blocks."""
    return tuple(
        tuple(sorted(i + 1 if x == i else i if x == i + 1 else x for x in b))
        for b in sigma
    )


def osp_maj(sigma: OrderedSetPartition) -> int:
    """Major index: maj of the bar-erased word plus, for every junction whose
    blocks are fully ascending, the prefix size minus the junction index.

    >>> osp_maj(((2, 4), (5, 7), (1, 3, 6), (8,)))
    9
    """
    w, alpha = osp_to_pair(sigma)
    extra = 0
    prefix = 0
    for i in range(len(sigma) - 1):
        prefix += alpha[i]
        if max(sigma[i]) < min(sigma[i + 1]):
            extra += prefix - (i + 1)
    return major_index(w) + extra


def osp_maj_prime(sigma: OrderedSetPartition) -> int:
    """The companion major index whose generating function over OP_{n,k} is
    [k]!_q * Stir_q(n,k).

    >>> osp_maj_prime(((3, 4), (1, 2)))
    2
    """
    alpha = osp_shape(sigma)
    out = sum(i * (alpha[i] - 1) for i in range(len(alpha)))
    for i in range(len(sigma) - 1):
        if min(sigma[i]) > max(sigma[i + 1]):
            out += i + 1
    return out


def osp_length(sigma: OrderedSetPartition) -> int:
    """Coxeter length of the minimal coset representative: inv of the word."""
    w, _ = osp_to_pair(sigma)
    return inversions(w)


# ---------------------------------------------------------------------------
# Partitions, standard tableaux, Schensted insertion
# ---------------------------------------------------------------------------

def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Integer partitions of n in descending lex order.

    >>> list(partitions(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """

    def rec(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    yield from rec(n, n)


def standard_tableaux(shape: tuple[int, ...]) -> list[Tableau]:
    """All standard Young tableaux of the given partition shape."""
    n = sum(shape)
    if n == 0:
        return [()]
    out = []
    rows = len(shape)
    for r in range(rows):
        # remove a corner at row r
        if shape[r] >= 1 and (r == rows - 1 or shape[r] > shape[r + 1]):
            smaller = tuple(
                s - (1 if idx == r else 0) for idx, s in enumerate(shape)
            )
            if smaller and smaller[-1] == 0:
                smaller = smaller[:-1]
            for t in standard_tableaux(smaller):
                trows = [list(row) for row in t]
                while len(trows) <= r:
                    trows.append([])
                trows[r].append(n)
                out.append(tuple(tuple(row) for row in trows))
    return out


def tableau_shape(t: Tableau) -> tuple[int, ...]:
    return tuple(len(r) for r in t)


def tableau_descents(t: Tableau) -> frozenset[int]:
    """Letters i such that i+1 sits in a strictly lower row than i."""
    row_of: dict[int, int] = {}
    for r, row in enumerate(t):
        for x in row:
            row_of[x] = r
    n = len(row_of)
    return frozenset(i for i in range(1, n) if row_of[i + 1] > row_of[i])


def schensted(w: Permutation) -> tuple[Tableau, Tableau]:
    """Row-insertion Schensted correspondence w -> (P, Q).

    >>> schensted((2, 5, 7, 1, 4, 6, 8, 3))
    (((1, 3, 6, 8), (2, 4, 7), (5,)), ((1, 2, 3, 7), (4, 5, 6), (8,)))
    """
    rows: list[list[int]] = []
    qrows: list[list[int]] = []
    for step, x in enumerate(w, start=1):
        r = 0
        while True:
            if r == len(rows):
                rows.append([x])
                qrows.append([step])
                break
            row = rows[r]
            pos = bisect_right(row, x)
            if pos == len(row):
                row.append(x)
                qrows[r].append(step)
                break
            row[pos], x = x, row[pos]
            r += 1
    return tuple(map(tuple, rows)), tuple(map(tuple, qrows))
