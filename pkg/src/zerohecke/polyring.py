"""Sparse multivariate polynomials over exact fields, the neglex term order,
symmetric-polynomial constructors, and isobaric Demazure operators.

Monomials are exponent tuples of length n.  The term order is lexicographic
with respect to x_n > ... > x_1 ("neglex"): m < m' iff at the largest index
where their exponents differ, m has the smaller exponent.  Comparison keys
are reversed exponent tuples, so plain tuple comparison does the work.

Coefficients are either :class:`fractions.Fraction` (field ``QQ``) or
:class:`ModP` elements (field ``GF(p)``).  Polynomials are immutable values;
all operators are pure functions.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .combinatorics import (
    Composition,
    Permutation,
    composition_descents,
    composition_from_descents,
    descents,
    canonical_reduced_word,
)

Monomial = tuple[int, ...]


# ---------------------------------------------------------------------------
# Ground fields
# ---------------------------------------------------------------------------

class ModP:
    """An element of the prime field Z/p, normalized to [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def __add__(self, other):
        return ModP(self.v + other.v, self.p)

    def __sub__(self, other):
        return ModP(self.v - other.v, self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __mul__(self, other):
        if isinstance(other, int):
            return ModP(self.v * other, self.p)
        return ModP(self.v * other.v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return ModP(self.v * pow(other.v, -1, self.p), self.p)

    def __pow__(self, e: int):
        return ModP(pow(self.v, e, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"{self.v}"


class RationalField:
    name = "Q"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(m: int) -> Fraction:
        return Fraction(m)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    def __init__(self, p: int):
        self.p = p
        self.name = f"Fp:{p}"
        self.characteristic = p
        self.zero = ModP(0, p)
        self.one = ModP(1, p)

    def from_int(self, m: int) -> ModP:
        return ModP(m, self.p)

    def __repr__(self):
        return f"GF({self.p})"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    return PrimeField(p)


def field_by_name(name: str):
    """Resolve a field tag: "Q" or "Fp:<p>"."""
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        return GF(int(name[3:]))
    raise ValueError(f"unknown field tag {name!r}")


# ---------------------------------------------------------------------------
# Monomial helpers (plain exponent tuples)
# ---------------------------------------------------------------------------

def neglex_key(exps: Monomial) -> tuple[int, ...]:
    """Sort key realizing the neglex order as plain tuple comparison."""
    return exps[::-1]


def neglex_compare(m1: Monomial, m2: Monomial) -> int:
    """-1, 0, or 1 as m1 <, =, > m2 in neglex.

    >>> neglex_compare((5, 0), (0, 1))
    -1
    """
    if len(m1) != len(m2):
        raise ValueError("monomials in different variable counts")
    k1, k2 = m1[::-1], m2[::-1]
    return -1 if k1 < k2 else (0 if k1 == k2 else 1)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(a: Monomial) -> int:
    return sum(a)


def monomial_str(exps: Monomial) -> str:
    parts = []
    for j, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"x{j}")
        elif e > 1:
            parts.append(f"x{j}^{e}")
    return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """A sparse polynomial: map from exponent tuples to nonzero coefficients."""

    __slots__ = ("n", "field", "terms", "_lead")

    def __init__(self, n: int, field, terms: dict[Monomial, object] | None = None):
        self.n = n
        self.field = field
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._lead = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int, field=QQ) -> "Polynomial":
        return cls(n, field)

    @classmethod
    def constant(cls, n: int, c, field=QQ) -> "Polynomial":
        if isinstance(c, int):
            c = field.from_int(c)
        return cls(n, field, {(0,) * n: c})

    @classmethod
    def one(cls, n: int, field=QQ) -> "Polynomial":
        return cls.constant(n, 1, field)

    @classmethod
    def monomial(cls, n: int, exps: Monomial, field=QQ, coeff=1) -> "Polynomial":
        if isinstance(coeff, int):
            coeff = field.from_int(coeff)
        return cls(n, field, {tuple(exps): coeff})

    @classmethod
    def variable(cls, n: int, j: int, field=QQ) -> "Polynomial":
        exps = tuple(1 if i == j else 0 for i in range(1, n + 1))
        return cls.monomial(n, exps, field)

    # -- basic queries ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree (0 for the zero polynomial)."""
        return max((sum(m) for m in self.terms), default=0)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        if self._lead is None:
            self._lead = max(self.terms, key=neglex_key)
        return self._lead

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def monic(self) -> "Polynomial":
        lc = self.leading_coeff()
        if lc == self.field.one:
            return self
        return Polynomial(self.n, self.field, {m: c / lc for m, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        """Terms in neglex-descending order (leading term first)."""
        return sorted(self.terms.items(), key=lambda mc: neglex_key(mc[0]), reverse=True)

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial(
            self.n, self.field, {m: c for m, c in self.terms.items() if sum(m) == d}
        )

    def top_component(self) -> "Polynomial":
        return self.homogeneous_component(self.degree())

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.n != other.n or self.field.name != other.field.name:
            raise ValueError("polynomials in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            new = out.get(m)
            new = c if new is None else new + c
            if new:
                out[m] = new
            else:
                out.pop(m, None)
        return Polynomial(self.n, self.field, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, self.field, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            out: dict[Monomial, object] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = monomial_mul(m1, m2)
                    prev = out.get(m)
                    new = c1 * c2 if prev is None else prev + c1 * c2
                    if new:
                        out[m] = new
                    else:
                        out.pop(m, None)
            return Polynomial(self.n, self.field, out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        if isinstance(c, int):
            c = self.field.from_int(c)
        if not c:
            return Polynomial.zero(self.n, self.field)
        return Polynomial(self.n, self.field, {m: cc * c for m, cc in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return (
                self.n == other.n
                and self.field.name == other.field.name
                and self.terms == other.terms
            )
        if isinstance(other, int):
            return self.terms == Polynomial.constant(self.n, other, self.field).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.field.name, frozenset(self.terms.items())))

    # -- substitutions -------------------------------------------------------

    def swap_variables(self, i: int) -> "Polynomial":
        """Exchange x_i and x_{i+1} (the adjacent transposition action)."""
        out: dict[Monomial, object] = {}
        for m, c in self.terms.items():
            lst = list(m)
            lst[i - 1], lst[i] = lst[i], lst[i - 1]
            key = tuple(lst)
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
        return Polynomial(self.n, self.field, out)

    def apply_perm(self, w: Permutation) -> "Polynomial":
        """Substitute x_j -> x_{w(j)}."""
        out: dict[Monomial, object] = {}
        for m, c in self.terms.items():
            exps = [0] * self.n
            for j, e in enumerate(m):
                exps[w[j] - 1] = e
            out[tuple(exps)] = c
        return Polynomial(self.n, self.field, out)

    def evaluate(self, point: Sequence) -> object:
        """Evaluate at a point given as a sequence of field elements."""
        total = self.field.zero
        for m, c in self.terms.items():
            val = c
            for z, e in zip(point, m):
                if e:
                    val = val * z**e
            total = total + val
        return total

    # -- presentation ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = monomial_str(m)
            neg = str(c).startswith("-")
            mag = str(c)[1:] if neg else str(c)
            if mono == "1":
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def to_jsonable(self) -> dict:
        terms = []
        for m, c in self.sorted_terms():
            if isinstance(c, Fraction):
                num, den = str(c.numerator), str(c.denominator)
            else:
                num, den = str(c.v), "1"
            terms.append({"exps": list(m), "num": num, "den": den})
        return {"n": self.n, "field": self.field.name, "terms": terms}


def polynomial_from_jsonable(data: dict) -> Polynomial:
    field = field_by_name(data["field"])
    n = data["n"]
    terms = {}
    for t in data["terms"]:
        if field.name == "Q":
            c = Fraction(int(t["num"]), int(t["den"]))
        else:
            c = field.from_int(int(t["num"])) / field.from_int(int(t["den"]))
        terms[tuple(t["exps"])] = c
    return Polynomial(n, field, terms)


# ---------------------------------------------------------------------------
# Symmetric polynomials and distinguished monomials
# ---------------------------------------------------------------------------

def elementary_e(d: int, n: int, field=QQ) -> Polynomial:
    """Elementary symmetric polynomial e_d in all n variables (0 if d > n)."""
    if d < 0:
        raise ValueError("negative degree")
    if d == 0:
        return Polynomial.one(n, field)
    out = {}
    for combo in itertools.combinations(range(n), d):
        exps = [0] * n
        for j in combo:
            exps[j] = 1
        out[tuple(exps)] = field.one
    return Polynomial(n, field, out)


def complete_h(d: int, i: int, n: int, field=QQ) -> Polynomial:
    """Complete homogeneous polynomial h_d in the first i of n variables.

    >>> str(complete_h(2, 2, 2))
    'x2^2 + x1*x2 + x1^2'
    """
    if not (1 <= i <= n):
        raise ValueError(f"variable prefix {i} out of range 1..{n}")
    if d < 0:
        raise ValueError("negative degree")
    out = {}
    for combo in itertools.combinations_with_replacement(range(i), d):
        exps = [0] * n
        for j in combo:
            exps[j] += 1
        out[tuple(exps)] = field.one
    return Polynomial(n, field, out)


def skip_exponents(S: Iterable[int], n: int, reverse: bool = False) -> Monomial:
    """Exponent tuple of the skip monomial of S (or its variable-reversed twin).

    The element s_j (j-th smallest of S) contributes exponent s_j - j + 1 on
    x_{s_j}, or on x_{n - s_j + 1} in the reversed version.

    >>> skip_exponents({2, 5, 7, 8}, 8)
    (0, 2, 0, 0, 4, 0, 5, 5)
    >>> skip_exponents({2, 5, 7, 8}, 9, reverse=True)
    (0, 5, 5, 0, 4, 0, 0, 2, 0)
    """
    exps = [0] * n
    for j, s in enumerate(sorted(S), start=1):
        idx = (n - s + 1) if reverse else s
        exps[idx - 1] = s - j + 1
    return tuple(exps)


def skip_monomial(S: Iterable[int], n: int, reverse: bool = False, field=QQ) -> Polynomial:
    return Polynomial.monomial(n, skip_exponents(S, n, reverse), field)


def descent_prefix_exponents(alpha: Composition, iseq: Sequence[int]) -> Monomial:
    """Exponents of the monomial prod_{j in Des(alpha)} (x_1...x_j) * x^iseq."""
    n = sum(alpha)
    if len(iseq) != n:
        raise ValueError("exponent tail has wrong length")
    if any(e < 0 for e in iseq):
        raise ValueError("negative exponents")
    des = composition_descents(alpha)
    return tuple(
        sum(1 for r in des if r >= j) + iseq[j - 1] for j in range(1, n + 1)
    )


def gs_exponents(w: Permutation, iseq: Sequence[int]) -> Monomial:
    """Exponents of the generalized Garsia-Stanton monomial for (w, iseq):
    the variable x_{w(j)} gets |{descents of w that are >= j}| + iseq_j.

    >>> gs_exponents((2, 5, 4, 6, 8, 9, 1, 3, 7), (2, 2, 1, 1, 0, 0, 0, 0, 0))
    (1, 4, 0, 2, 4, 2, 0, 1, 1)
    """
    n = len(w)
    alpha = composition_from_descents(descents(w), n)
    base = descent_prefix_exponents(alpha, iseq)
    exps = [0] * n
    for j in range(n):
        exps[w[j] - 1] = base[j]
    return tuple(exps)


def gs_monomial(w: Permutation, iseq: Sequence[int], field=QQ) -> Polynomial:
    return Polynomial.monomial(len(w), gs_exponents(w, iseq), field)


# ---------------------------------------------------------------------------
# Demazure operators
# ---------------------------------------------------------------------------

def _check_index(i: int, n: int):
    if not (1 <= i <= n - 1):
        raise ValueError(f"operator index {i} out of range 1..{n - 1}")


def demazure_pibar(i: int, f: Polynomial) -> Polynomial:
    """The lowered Demazure operator, term by term via telescoping sums.

    On a monomial with exponents a = exps[i-1], b = exps[i] it gives
    sum_{j=1}^{a-b} x_i^{a-j} x_{i+1}^{b+j} when a >= b and
    -sum_{j=0}^{b-a-1} x_i^{a+j} x_{i+1}^{b-j} when a < b.

    >>> f = Polynomial.monomial(2, (2, 0))
    >>> str(demazure_pibar(1, f))
    'x2^2 + x1*x2'
    """
    _check_index(i, f.n)
    ia, ib = i - 1, i
    out: dict[Monomial, object] = {}
    for m, c in f.terms.items():
        a, b = m[ia], m[ib]
        if a == b:
            continue
        base = list(m)
        if a > b:
            for j in range(1, a - b + 1):
                base[ia] = a - j
                base[ib] = b + j
                key = tuple(base)
                prev = out.get(key)
                new = c if prev is None else prev + c
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        else:
            for j in range(b - a):
                base[ia] = a + j
                base[ib] = b - j
                key = tuple(base)
                prev = out.get(key)
                new = -c if prev is None else prev - c
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
    return Polynomial(f.n, f.field, out)


def demazure_pi(i: int, f: Polynomial) -> Polynomial:
    """Isobaric Demazure operator: the identity plus the lowered operator."""
    return f + demazure_pibar(i, f)


def divided_difference(i: int, f: Polynomial) -> Polynomial:
    """Divided difference, term by term (no rational-function division).

    On a monomial with exponents a, b at positions i, i+1 it gives
    sum_{r=0}^{a-b-1} x_i^{a-1-r} x_{i+1}^{b+r} when a > b, the negated
    mirror image when a < b, and 0 when a = b.
    """
    _check_index(i, f.n)
    ia, ib = i - 1, i
    out: dict[Monomial, object] = {}

    def acc(key, val):
        prev = out.get(key)
        new = val if prev is None else prev + val
        if new:
            out[key] = new
        else:
            out.pop(key, None)

    for m, c in f.terms.items():
        a, b = m[ia], m[ib]
        if a == b:
            continue
        base = list(m)
        if a > b:
            for r in range(a - b):
                base[ia] = a - 1 - r
                base[ib] = b + r
                acc(tuple(base), c)
        else:
            for r in range(b - a):
                base[ia] = b - 1 - r
                base[ib] = a + r
                acc(tuple(base), -c)
    return Polynomial(f.n, f.field, out)


def demazure_word(word: Sequence[int], f: Polynomial, barred: bool = False) -> Polynomial:
    """Apply the operators along a word, rightmost letter first."""
    op = demazure_pibar if barred else demazure_pi
    for i in reversed(word):
        f = op(i, f)
    return f


def demazure_pi_w(w: Permutation, f: Polynomial, barred: bool = False) -> Polynomial:
    """Apply the operator product over a fixed reduced word of w.

    The result does not depend on the chosen reduced word.
    """
    return demazure_word(canonical_reduced_word(w), f, barred)


def leibniz_check(f: Polynomial, g: Polynomial, i: int) -> bool:
    """Exact check of pi_i(fg) = dd_i(f) * (x_i g) + s_i(f) * pi_i(g)."""
    _check_index(i, f.n)
    lhs = demazure_pi(i, f * g)
    xi = Polynomial.variable(f.n, i, f.field)
    rhs = divided_difference(i, f) * (xi * g) + f.swap_variables(i) * demazure_pi(i, g)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Key polynomials (Demazure characters)
# ---------------------------------------------------------------------------

_key_cache: dict[tuple, Polynomial] = {}


def key_polynomial(gamma: Sequence[int], field=QQ) -> Polynomial:
    """Key polynomial of a weak composition: x^gamma when gamma is weakly
    decreasing, otherwise pi_i applied to the key polynomial of the sorted
    step, for the smallest i with gamma_i < gamma_{i+1}.  The result does not
    depend on which valid i is lifted at each step.

    >>> str(key_polynomial((0, 1)))
    'x2 + x1'
    >>> str(key_polynomial((2, 1)))
    'x1^2*x2'
    """
    gamma = tuple(gamma)
    if any(g < 0 for g in gamma):
        raise ValueError("negative entry in weak composition")
    cache_key = (gamma, field.name)
    hit = _key_cache.get(cache_key)
    if hit is not None:
        return hit
    n = len(gamma)
    for i in range(n - 1):
        if gamma[i] < gamma[i + 1]:
            swapped = list(gamma)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            out = demazure_pi(i + 1, key_polynomial(tuple(swapped), field))
            break
    else:
        out = Polynomial.monomial(n, gamma, field)
    _key_cache[cache_key] = out
    return out
