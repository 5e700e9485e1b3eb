"""Finite-dimensional modules over the 0-Hecke algebra, presented as one
sparse matrix per lowered generator, plus algebra arithmetic in the standard
basis indexed by permutations.

Matrix convention: a module with basis (b_1, ..., b_d) stores, for each
generator index i, a tuple of d sparse columns; column r maps b_r to
sum_s M[s, r] b_s.  Lowered generators square to minus themselves, commute at
distance, and satisfy the braid relations; :func:`check_relations` verifies
all of that as exact matrix identities.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

from .combinatorics import (
    Composition,
    OrderedSetPartition,
    Permutation,
    canonical_reduced_word,
    complement,
    composition_descents,
    compositions,
    compositions_of_length,
    descents,
    idescents,
    identity_perm,
    inversions,
    merge_composition,
    minimal_perm,
    ordered_set_partitions,
    osp_block_of,
    osp_from_pair,
    osp_shape,
    osp_swap_letters,
    osp_to_pair,
    osps_of_shape,
    permutations,
    perms_with_descents_between,
    swap_values,
)
from .errors import SizeGuardError, TheoremViolation
from .groebner import QuotientRing, admissible_perms, ank_index_set
from .linalg import solve_in_span
from .polyring import QQ, Polynomial, demazure_pi_w, demazure_pibar, descent_prefix_exponents

MAX_HECKE_N = 6


def _check_hecke_guard(n: int, force: bool = False):
    if n > MAX_HECKE_N and not force:
        raise SizeGuardError(
            f"regular-representation arithmetic guarded at n <= {MAX_HECKE_N} "
            f"(dimension n! = {factorial(n)}); pass force=True to override"
        )


# ---------------------------------------------------------------------------
# The algebra in its permutation basis
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _perm_index(n: int):
    perms = tuple(permutations(n))
    return perms, {w: i for i, w in enumerate(perms)}


def _left_longer(i: int, w: Permutation) -> bool:
    """True iff multiplying by the i-th transposition on the left raises length."""
    return w.index(i) < w.index(i + 1)


@dataclass(frozen=True)
class HeckeElement:
    """An element of the algebra, written in the basis indexed by S_n."""

    n: int
    field: object
    coords: dict[Permutation, object]

    def __post_init__(self):
        object.__setattr__(
            self, "coords", {w: c for w, c in self.coords.items() if c}
        )

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.coords)
        for w, c in other.coords.items():
            new = out.get(w)
            new = c if new is None else new + c
            if new:
                out[w] = new
            else:
                out.pop(w, None)
        return HeckeElement(self.n, self.field, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.n, self.field, {w: -c for w, c in self.coords.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        if isinstance(c, int):
            c = self.field.from_int(c)
        return HeckeElement(self.n, self.field, {w: cc * c for w, cc in self.coords.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HeckeElement)
            and self.n == other.n
            and self.field.name == other.field.name
            and self.coords == other.coords
        )

    def __bool__(self) -> bool:
        return bool(self.coords)

    def dense(self) -> list:
        perms, index = _perm_index(self.n)
        out = [self.field.zero] * len(perms)
        for w, c in self.coords.items():
            out[index[w]] = c
        return out

    def __str__(self) -> str:
        if not self.coords:
            return "0"
        parts = []
        for w in sorted(self.coords):
            parts.append(f"({self.coords[w]})*pi[{''.join(map(str, w))}]")
        return " + ".join(parts)


def identity_element(n: int, field=QQ) -> HeckeElement:
    return HeckeElement(n, field, {identity_perm(n): field.one})


def pi_left(i: int, x: HeckeElement) -> HeckeElement:
    """Left multiplication by the i-th standard generator."""
    out: dict[Permutation, object] = {}
    for w, c in x.coords.items():
        key = swap_values(w, i) if _left_longer(i, w) else w
        prev = out.get(key)
        new = c if prev is None else prev + c
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    return HeckeElement(x.n, x.field, out)


def pibar_left(i: int, x: HeckeElement) -> HeckeElement:
    """Left multiplication by the lowered generator (standard minus one)."""
    out: dict[Permutation, object] = {}
    for w, c in x.coords.items():
        if _left_longer(i, w):
            key = swap_values(w, i)
            prev = out.get(key)
            new = c if prev is None else prev + c
            if new:
                out[key] = new
            else:
                out.pop(key, None)
            prev = out.get(w)
            new = -c if prev is None else prev - c
            if new:
                out[w] = new
            else:
                out.pop(w, None)
        # else: pi_i pi_w = pi_w, so the lowered generator kills the term
    return HeckeElement(x.n, x.field, out)


def pi_element(w: Permutation, field=QQ) -> HeckeElement:
    """The basis element indexed by w."""
    return HeckeElement(len(w), field, {w: field.one})


def pibar_element(w: Permutation, field=QQ) -> HeckeElement:
    """The product of lowered generators along a reduced word of w."""
    x = identity_element(len(w), field)
    for i in reversed(canonical_reduced_word(w)):
        x = pibar_left(i, x)
    return x


def hecke_multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """The associative product, expanding the left factor along reduced words."""
    if a.n != b.n or a.field.name != b.field.name:
        raise ValueError("elements of different algebras")
    out = HeckeElement(a.n, a.field, {})
    for u, cu in sorted(a.coords.items()):
        x = b.scale(cu)
        for i in reversed(canonical_reduced_word(u)):
            x = pi_left(i, x)
        out = out + x
    return out


# ---------------------------------------------------------------------------
# Modules as generator matrices
# ---------------------------------------------------------------------------

Column = dict[int, object]
Matrix = tuple[Column, ...]


def mat_mul(A: Matrix, B: Matrix, field) -> Matrix:
    cols = []
    for bcol in B:
        acc: Column = {}
        for r, c in bcol.items():
            for s, a in A[r].items():
                prev = acc.get(s)
                new = a * c if prev is None else prev + a * c
                if new:
                    acc[s] = new
                else:
                    acc.pop(s, None)
        cols.append(acc)
    return tuple(cols)


def mat_neg(A: Matrix) -> Matrix:
    return tuple({r: -c for r, c in col.items()} for col in A)


def mat_eq(A: Matrix, B: Matrix) -> bool:
    return all(ca == cb for ca, cb in zip(A, B))


@dataclass(frozen=True)
class FiniteHeckeModule:
    """A labelled basis plus one sparse matrix per lowered generator."""

    n: int
    field: object
    labels: tuple
    gens: tuple[Matrix, ...]  # index i-1 acts as the i-th lowered generator
    degrees: tuple[int, ...] | None = None
    generator_index: int | None = None

    @property
    def dim(self) -> int:
        return len(self.labels)

    def matrix(self, i: int) -> Matrix:
        return self.gens[i - 1]

    def pi_matrix(self, i: int) -> Matrix:
        """The un-lowered generator: lowered matrix plus the identity."""
        cols = []
        for r, col in enumerate(self.gens[i - 1]):
            c = dict(col)
            new = c.get(r, self.field.zero) + self.field.one
            if new:
                c[r] = new
            else:
                c.pop(r, None)
            cols.append(c)
        return tuple(cols)

    def to_jsonable(self) -> dict:
        dense = []
        for g in self.gens:
            rows = [
                [str(g[c].get(r, self.field.zero)) for c in range(self.dim)]
                for r in range(self.dim)
            ]
            dense.append(rows)
        return {
            "n": self.n,
            "labels": [_label_str(l) for l in self.labels],
            "matrices": dense,
            "degrees": list(self.degrees) if self.degrees else None,
        }


def _label_str(label) -> str:
    if isinstance(label, tuple) and label and isinstance(label[0], tuple):
        return "|".join("".join(map(str, b)) for b in label)
    if isinstance(label, tuple):
        return "".join(map(str, label))
    return str(label)


def check_relations(M: FiniteHeckeModule) -> bool:
    """All lowered-generator relations as exact matrix identities, plus
    degree preservation when the module is graded."""
    f = M.field
    for i in range(1, M.n):
        A = M.matrix(i)
        if not mat_eq(mat_mul(A, A, f), mat_neg(A)):
            return False
        if M.degrees is not None:
            for r, col in enumerate(A):
                if any(M.degrees[s] != M.degrees[r] for s in col):
                    return False
    for i in range(1, M.n):
        for j in range(i + 2, M.n):
            A, B = M.matrix(i), M.matrix(j)
            if not mat_eq(mat_mul(A, B, f), mat_mul(B, A, f)):
                return False
    for i in range(1, M.n - 1):
        A, B = M.matrix(i), M.matrix(i + 1)
        if not mat_eq(
            mat_mul(A, mat_mul(B, A, f), f), mat_mul(B, mat_mul(A, B, f), f)
        ):
            return False
    return True


def check_isomorphism(A: FiniteHeckeModule, B: FiniteHeckeModule, label_map: dict) -> bool:
    """True iff the label bijection intertwines every generator matrix."""
    report = isomorphism_report(A, B, label_map)
    return report["ok"]


def isomorphism_report(A: FiniteHeckeModule, B: FiniteHeckeModule, label_map: dict) -> dict:
    if A.dim != B.dim:
        raise ValueError(f"dimension mismatch: {A.dim} vs {B.dim}")
    if set(label_map) != set(A.labels) or set(label_map.values()) != set(B.labels):
        raise ValueError("label map is not a bijection between the bases")
    a_index = {l: r for r, l in enumerate(A.labels)}
    b_index = {l: r for r, l in enumerate(B.labels)}
    to_b = [b_index[label_map[l]] for l in A.labels]
    for i in range(1, A.n):
        MA, MB = A.matrix(i), B.matrix(i)
        for r in range(A.dim):
            mapped = {to_b[s]: c for s, c in MA[r].items()}
            if mapped != MB[to_b[r]]:
                return {"ok": False, "first_failing_generator": i}
    return {"ok": True, "first_failing_generator": None}


# ---------------------------------------------------------------------------
# The ordered set partition modules
# ---------------------------------------------------------------------------

def _osp_columns(labels: Sequence[OrderedSetPartition], n: int, field) -> tuple[Matrix, ...]:
    index = {s: r for r, s in enumerate(labels)}
    gens = []
    for i in range(1, n):
        cols: list[Column] = []
        for sigma in labels:
            bi = osp_block_of(sigma, i)
            bj = osp_block_of(sigma, i + 1)
            if bj < bi:
                cols.append({index[sigma]: -field.one})
            elif bj == bi:
                cols.append({})
            else:
                cols.append({index[osp_swap_letters(sigma, i)]: field.one})
        gens.append(tuple(cols))
    return tuple(gens)


def osp_module(alpha: Composition, field=QQ) -> FiniteHeckeModule:
    """The span of the ordered set partitions of one shape: a lowered
    generator negates when i+1 sits left of i, kills when they share a block,
    and swaps the letters when i+1 sits to the right."""
    n = sum(alpha)
    labels = tuple(sorted(osps_of_shape(alpha), key=osp_to_pair))
    gen = osp_from_pair(identity_perm(n), alpha)
    return FiniteHeckeModule(
        n,
        field,
        labels,
        _osp_columns(labels, n, field),
        degrees=None,
        generator_index=labels.index(gen),
    )


def osp_module_all(n: int, k: int, field=QQ) -> FiniteHeckeModule:
    """All k-block ordered set partitions; block diagonal over shapes."""
    labels = tuple(
        sorted(ordered_set_partitions(n, k), key=lambda s: (osp_shape(s), osp_to_pair(s)[0]))
    )
    return FiniteHeckeModule(n, field, labels, _osp_columns(labels, n, field))


# ---------------------------------------------------------------------------
# Projective modules inside the algebra
# ---------------------------------------------------------------------------

def _interval_vectors(
    alpha: Composition, upper: frozenset[int], seed: HeckeElement
) -> dict[Permutation, HeckeElement]:
    """Vectors pibar_w . seed for Des(alpha) <= Des(w) <= upper, each obtained
    from a one-step predecessor in left weak order (descent sets only grow
    along such chains, so the chain stays inside the interval)."""
    n = sum(alpha)
    lower = composition_descents(alpha)
    base = minimal_perm(alpha)
    vectors: dict[Permutation, HeckeElement] = {}
    v = seed
    for i in reversed(canonical_reduced_word(base)):
        v = pibar_left(i, v)
    vectors[base] = v
    todo = sorted(perms_with_descents_between(lower, upper, n), key=inversions)
    for w in todo:
        if w in vectors:
            continue
        for i in sorted(idescents(w)):
            prev = swap_values(w, i)
            if prev in vectors:
                vectors[w] = pibar_left(i, vectors[prev])
                break
        else:
            v = seed
            for i in reversed(canonical_reduced_word(w)):
                v = pibar_left(i, v)
            vectors[w] = v
    return vectors


def projective_pair_module(
    alpha: Composition, beta: Composition, field=QQ, force: bool = False
) -> FiniteHeckeModule:
    """The cyclic module generated by pibar at the minimal permutation of
    alpha times pi at the minimal permutation of the complement of beta.

    Its basis is indexed by permutations with descent set between the two
    descent sets; generator matrices come from an exact solve in those
    coordinates.
    """
    n = sum(alpha)
    _check_hecke_guard(n, force)
    if sum(beta) != n or not composition_descents(alpha) <= composition_descents(beta):
        raise ValueError(f"{alpha} does not coarsen {beta}")
    seed = pi_element(minimal_perm(complement(beta)), field)
    vectors = _interval_vectors(alpha, composition_descents(beta), seed)
    labels = tuple(sorted(vectors))
    basis = [vectors[w].dense() for w in labels]
    targets = []
    for i in range(1, n):
        for w in labels:
            targets.append(pibar_left(i, vectors[w]).dense())
    try:
        coords = solve_in_span(basis, targets, field)
    except ValueError as exc:
        raise TheoremViolation(f"projective module basis defect: {exc}") from None
    gens = []
    pos = 0
    for i in range(1, n):
        cols = []
        for _ in labels:
            cols.append({r: c for r, c in enumerate(coords[pos]) if c})
            pos += 1
        gens.append(tuple(cols))
    return FiniteHeckeModule(
        n,
        field,
        labels,
        tuple(gens),
        degrees=None,
        generator_index=labels.index(minimal_perm(alpha)),
    )


def projective_module(alpha: Composition, field=QQ, force: bool = False) -> FiniteHeckeModule:
    """The indecomposable projective indexed by one composition."""
    return projective_pair_module(alpha, alpha, field, force)


def projective_dim(alpha: Composition) -> int:
    """Dimension: the size of the descent class of alpha."""
    n = sum(alpha)
    des = composition_descents(alpha)
    return sum(1 for w in permutations(n) if descents(w) == des)


# ---------------------------------------------------------------------------
# The graded submodules of the quotient ring
# ---------------------------------------------------------------------------

def quotient_submodule(
    alpha: Composition, iseq: Sequence[int], Q: QuotientRing, force: bool = False
) -> FiniteHeckeModule:
    """The submodule of the quotient generated by the lowered-operator image
    of the descent-prefix monomial of (alpha, i); basis indexed by the
    permutations with descent set between Des(alpha) and Des(alpha u i).
    """
    n, k = Q.n, Q.k
    iseq = tuple(iseq)
    if (alpha, iseq) not in set(ank_index_set(n, k)):
        raise ValueError(f"({alpha}, {iseq}) is not an admissible index pair for (n,k)=({n},{k})")
    field = Q.field
    lower = composition_descents(alpha)
    x_ai = Polynomial.monomial(n, descent_prefix_exponents(alpha, iseq), field)
    base = minimal_perm(alpha)
    polys: dict[Permutation, Polynomial] = {
        base: Q.normal_form(demazure_pi_w(base, x_ai, barred=True))
    }
    labels_sorted = admissible_perms(alpha, iseq)
    for w in sorted(labels_sorted, key=inversions):
        if w in polys:
            continue
        for i in sorted(idescents(w)):
            prev = swap_values(w, i)
            if prev in polys and lower <= descents(prev):
                polys[w] = Q.normal_form(demazure_pibar(i, polys[prev]))
                break
        else:
            polys[w] = Q.normal_form(demazure_pi_w(w, x_ai, barred=True))
    labels = tuple(sorted(polys))

    def dense(f: Polynomial) -> list:
        out = [field.zero] * Q.dim
        for m, c in f.terms.items():
            out[Q.index[m]] = c
        return out

    basis = [dense(polys[w]) for w in labels]
    targets = []
    for j in range(1, n):
        for w in labels:
            targets.append(dense(Q.normal_form(demazure_pibar(j, polys[w]))))
    try:
        coords = solve_in_span(basis, targets, field)
    except ValueError as exc:
        raise TheoremViolation(
            f"basis defect for index pair ({alpha}, {iseq}): {exc}"
        ) from None
    gens = []
    pos = 0
    for j in range(1, n):
        cols = []
        for _ in labels:
            cols.append({r: c for r, c in enumerate(coords[pos]) if c})
            pos += 1
        gens.append(tuple(cols))
    from .combinatorics import composition_maj

    degree = composition_maj(alpha) + sum(iseq)
    if any(polys[w].degree() != degree for w in labels):
        raise TheoremViolation("submodule basis is not concentrated in one degree")
    return FiniteHeckeModule(
        n,
        field,
        labels,
        tuple(gens),
        degrees=(degree,) * len(labels),
        generator_index=labels.index(base),
    )


def decomposition_multiplicities(n: int, k: int) -> dict[Composition, int]:
    """How often each projective indecomposable occurs in the quotient:
    binom(n - len(beta), k - len(beta)) for each composition beta."""
    out = {}
    for beta in compositions(n):
        m = comb(n - len(beta), k - len(beta)) if 0 <= k - len(beta) <= n - len(beta) else 0
        if m:
            out[beta] = m
    return out
