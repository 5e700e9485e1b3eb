"""Buchberger's algorithm, normal forms, the defining ideals, standard
monomial bases, quotient-ring arithmetic, and the Garsia-Stanton-type
families.

The inner reduction loop works on plain ``dict[exponent-tuple, int]`` data:
over the rationals a single running denominator per polynomial keeps all
coefficient arithmetic in (fast, exact) Python integers, and over a prime
field coefficients are ints mod p.  Public results are materialized as monic
:class:`~zerohecke.polyring.Polynomial` values with Fraction / prime-field
coefficients.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .combinatorics import (
    Composition,
    Permutation,
    QTPoly,
    composition_descents,
    descent_number,
    descents,
    permutations,
    q_factorial,
    q_stirling,
)
from .errors import SizeGuardError, TheoremViolation
from .polyring import (
    GF,
    QQ,
    Monomial,
    Polynomial,
    complete_h,
    demazure_pi_w,
    descent_prefix_exponents,
    elementary_e,
    gs_exponents,
    key_polynomial,
    monomial_divides,
    monomial_lcm,
    neglex_key,
    skip_exponents,
)

MAX_N = 8


def check_size_guard(n: int, force: bool = False):
    if n > MAX_N and not force:
        raise SizeGuardError(
            f"n = {n} exceeds the guard ({MAX_N}); quotient dimensions grow "
            "like k! * Stir(n,k); pass force=True to override"
        )


# ---------------------------------------------------------------------------
# Ideals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ideal:
    n: int
    field: object
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        if any(not g for g in self.generators):
            raise ValueError("zero generator")


def coinvariant_ideal(n: int, k: int, field=QQ) -> Ideal:
    """The defining ideal of the 0-Hecke-stable quotient: generated by
    h_k(x_1..x_i) for i = 1..n together with e_n, e_{n-1}, ..., e_{n-k+1}.
    """
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    gens = [complete_h(k, i, n, field) for i in range(1, n + 1)]
    gens += [elementary_e(d, n, field) for d in range(n, n - k, -1)]
    return Ideal(n, field, tuple(gens))


def invariant_ideal(n: int, field=QQ) -> Ideal:
    """The classical invariant ideal generated by e_1, ..., e_n."""
    return Ideal(n, field, tuple(elementary_e(d, n, field) for d in range(1, n + 1)))


def variable_power_ideal(n: int, k: int, field=QQ) -> Ideal:
    """The companion ideal generated by all x_i^k and e_n, ..., e_{n-k+1}
    (kept for cross-reference tests; not 0-Hecke stable for k < n).
    """
    gens = [
        Polynomial.monomial(n, tuple(k if j == i else 0 for j in range(n)), field)
        for i in range(n)
    ]
    gens += [elementary_e(d, n, field) for d in range(n, n - k, -1)]
    return Ideal(n, field, tuple(gens))


# ---------------------------------------------------------------------------
# Integer reduction engine
# ---------------------------------------------------------------------------
# A divisor entry is (lm, lc, tail) where tail lists the non-leading terms as
# (monomial, int coefficient) pairs; entries are kept in ascending neglex
# order of lm so a scan always reduces by the smallest available divisor.

def _int_terms(f: Polynomial) -> tuple[dict[Monomial, int], int]:
    """Rewrite a Q-polynomial as (integer term dict, denominator)."""
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return {m: int(c * den) for m, c in f.terms.items()}, den


def _content(terms: dict[Monomial, int]) -> int:
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def _primitive(terms: dict[Monomial, int]) -> dict[Monomial, int]:
    """Divide out the content and make the leading coefficient positive."""
    if not terms:
        return terms
    g = _content(terms)
    lead = max(terms, key=neglex_key)
    if terms[lead] < 0:
        g = -g
    if g == 1:
        return terms
    return {m: c // g for m, c in terms.items()}


def _heap_key(m: Monomial):
    return tuple(-e for e in reversed(m))


def _nf_int_q(
    num: dict[Monomial, int], den: int, divisors: list[tuple[Monomial, int, list]]
) -> tuple[dict[Monomial, int], int]:
    """Fully reduce num/den by the divisors; exact arithmetic over Q."""
    work = dict(num)
    heap = [(_heap_key(m), m) for m in work]
    heapq.heapify(heap)
    rem: dict[Monomial, int] = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, 0)
        if not c:
            continue
        for lm, lc, tail in divisors:
            if monomial_divides(lm, m):
                break
        else:
            rem[m] = c
            continue
        d = gcd(c, lc)
        f_scale = lc // d
        g_scale = c // d
        if f_scale != 1:
            if f_scale < 0:
                f_scale, g_scale = -f_scale, -g_scale
            for key in work:
                work[key] *= f_scale
            for key in rem:
                rem[key] *= f_scale
            den *= f_scale
        delta = tuple(a - b for a, b in zip(m, lm))
        for mg, cg in tail:
            key = tuple(a + b for a, b in zip(delta, mg))
            prev = work.get(key)
            if prev is None:
                work[key] = -g_scale * cg
                heapq.heappush(heap, (_heap_key(key), key))
            else:
                new = prev - g_scale * cg
                if new:
                    work[key] = new
                else:
                    del work[key]
        if den.bit_length() > 512:
            g = _content(rem) if rem else 0
            g = gcd(gcd(g, _content(work) if work else 0), den)
            if g > 1:
                den //= g
                for key in work:
                    work[key] //= g
                for key in rem:
                    rem[key] //= g
    g = gcd(_content(rem) if rem else 0, den)
    if g > 1:
        den //= g
        rem = {m: c // g for m, c in rem.items()}
    return rem, den


def _nf_int_p(
    num: dict[Monomial, int], p: int, divisors: list[tuple[Monomial, int, list]]
) -> dict[Monomial, int]:
    """Fully reduce mod p; divisor leading coefficients must be 1 mod p."""
    work = {m: c % p for m, c in num.items() if c % p}
    heap = [(_heap_key(m), m) for m in work]
    heapq.heapify(heap)
    rem: dict[Monomial, int] = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, 0)
        if not c:
            continue
        for lm, lc, tail in divisors:
            if monomial_divides(lm, m):
                break
        else:
            rem[m] = c
            continue
        delta = tuple(a - b for a, b in zip(m, lm))
        for mg, cg in tail:
            key = tuple(a + b for a, b in zip(delta, mg))
            new = (work.get(key, 0) - c * cg) % p
            if new:
                if key not in work:
                    heapq.heappush(heap, (_heap_key(key), key))
                work[key] = new
            else:
                work.pop(key, None)
    return rem


def _make_divisors(int_polys: list[dict[Monomial, int]]) -> list:
    """Build (lm, lc, tail) entries sorted ascending by leading monomial."""
    entries = []
    for terms in int_polys:
        lm = max(terms, key=neglex_key)
        tail = [(m, c) for m, c in terms.items() if m != lm]
        entries.append((lm, terms[lm], tail))
    entries.sort(key=lambda e: neglex_key(e[0]))
    return entries


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroebnerBasis:
    n: int
    field: object
    elements: tuple[Polynomial, ...]  # monic, ascending by leading monomial
    minimal: bool = True
    reduced: bool = True
    _divisors: list = dc_field(default=None, repr=False, compare=False)

    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.leading_monomial() for g in self.elements)

    def divisor_data(self) -> list:
        if self._divisors is None:
            ints = []
            if self.field.name == "Q":
                for g in self.elements:
                    terms, _ = _int_terms(g)
                    ints.append(_primitive(terms))
            else:
                for g in self.elements:
                    ints.append({m: c.v for m, c in g.terms.items()})
            object.__setattr__(self, "_divisors", _make_divisors(ints))
        return self._divisors

    def to_jsonable(self) -> list[dict]:
        return [g.to_jsonable() for g in self.elements]


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """The unique remainder of f on full division by G: no term of the result
    is divisible by a leading monomial of G, and f minus the result lies in
    the ideal.  Linear over the field and idempotent.
    """
    if f.n != G.n:
        raise ValueError("variable count mismatch")
    if not f:
        return f
    divisors = G.divisor_data()
    if f.field.name == "Q":
        num, den = _int_terms(f)
        rem, den = _nf_int_q(num, den, divisors)
        return Polynomial(f.n, f.field, {m: Fraction(c, den) for m, c in rem.items()})
    p = f.field.p
    rem = _nf_int_p({m: c.v for m, c in f.terms.items()}, p, divisors)
    return Polynomial(f.n, f.field, {m: f.field.from_int(c) for m, c in rem.items()})


def _spoly_int(f: dict, g: dict, lmf: Monomial, lmg: Monomial) -> dict:
    """lc_g * (L/lm_f) f - lc_f * (L/lm_g) g, an integer representative of the
    S-polynomial (a scalar multiple of the monic one)."""
    L = monomial_lcm(lmf, lmg)
    df = tuple(a - b for a, b in zip(L, lmf))
    dg = tuple(a - b for a, b in zip(L, lmg))
    cf, cg = f[lmf], g[lmg]
    d = gcd(cf, cg)
    cf, cg = cf // d, cg // d
    out: dict[Monomial, int] = {}
    for m, c in f.items():
        out[tuple(a + b for a, b in zip(m, df))] = c * cg
    for m, c in g.items():
        key = tuple(a + b for a, b in zip(m, dg))
        new = out.get(key, 0) - c * cf
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    return out


def buchberger(I: Ideal) -> GroebnerBasis:
    """The reduced Groebner basis of the ideal under neglex.

    Pair selection is the normal strategy (smallest lcm degree, then neglex
    order on the lcm); the coprime-leading-term and chain criteria prune
    useless pairs; division always uses the divisor with the smallest leading
    monomial.  The run is fully deterministic.
    """
    rational = I.field.name == "Q"
    p = None if rational else I.field.p

    basis: list[dict[Monomial, int]] = []  # primitive int / monic mod p
    lms: list[Monomial] = []

    def normalize(terms: dict[Monomial, int]) -> dict[Monomial, int]:
        if rational:
            return _primitive(terms)
        lm = max(terms, key=neglex_key)
        inv = pow(terms[lm], -1, p)
        return {m: (c * inv) % p for m, c in terms.items()}

    def reduce_full(terms: dict[Monomial, int]) -> dict[Monomial, int]:
        divisors = _make_divisors(basis)
        if rational:
            rem, _ = _nf_int_q(terms, 1, divisors)
            return rem
        return _nf_int_p(terms, p, divisors)

    # Seed with the reductions of the generators, in the given order.
    for g in I.generators:
        if rational:
            terms, _ = _int_terms(g)
            terms = _primitive(terms)
        else:
            terms = {m: c.v for m, c in g.terms.items() if c.v % p}
        rem = reduce_full(terms)
        if rem:
            basis.append(normalize(rem))
            lms.append(max(rem, key=neglex_key))

    pairs: set[tuple[int, int]] = {
        (i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))
    }

    def pair_sort_key(ij):
        L = monomial_lcm(lms[ij[0]], lms[ij[1]])
        return (sum(L), neglex_key(L), ij)

    while pairs:
        i, j = min(pairs, key=pair_sort_key)
        pairs.discard((i, j))
        L = monomial_lcm(lms[i], lms[j])
        # Coprime criterion: disjoint leading monomials reduce to zero.
        if all(a + b == c for a, b, c in zip(lms[i], lms[j], L)):
            continue
        # Chain criterion: some other element divides the lcm and both of its
        # pairs with i, j are no longer pending.
        skip = False
        for t in range(len(basis)):
            if t in (i, j) or not monomial_divides(lms[t], L):
                continue
            if (min(i, t), max(i, t)) not in pairs and (min(j, t), max(j, t)) not in pairs:
                skip = True
                break
        if skip:
            continue
        s = _spoly_int(basis[i], basis[j], lms[i], lms[j])
        if p is not None:
            s = {m: c % p for m, c in s.items() if c % p}
        if not s:
            continue
        rem = reduce_full(s)
        if rem:
            basis.append(normalize(rem))
            lms.append(max(rem, key=neglex_key))
            new = len(basis) - 1
            pairs.update((t, new) for t in range(new))

    # Minimalize: keep only elements whose lm is not divisible by another lm.
    order = sorted(range(len(basis)), key=lambda t: neglex_key(lms[t]))
    kept: list[int] = []
    for t in order:
        if not any(monomial_divides(lms[u], lms[t]) for u in kept):
            kept.append(t)

    # Interreduce to the unique reduced basis.
    reduced = [basis[t] for t in kept]
    changed = True
    while changed:
        changed = False
        for idx in range(len(reduced)):
            others = reduced[:idx] + reduced[idx + 1 :]
            divisors = _make_divisors(others)
            if rational:
                rem, _ = _nf_int_q(reduced[idx], 1, divisors)
            else:
                rem = _nf_int_p(reduced[idx], p, divisors)
            rem = normalize(rem)
            if rem != reduced[idx]:
                reduced[idx] = rem
                changed = True
    reduced.sort(key=lambda terms: neglex_key(max(terms, key=neglex_key)))

    elements = []
    for terms in reduced:
        if rational:
            lm = max(terms, key=neglex_key)
            lc = terms[lm]
            poly = Polynomial(I.n, I.field, {m: Fraction(c, lc) for m, c in terms.items()})
        else:
            poly = Polynomial(
                I.n, I.field, {m: I.field.from_int(c) for m, c in terms.items()}
            )
        elements.append(poly)
    return GroebnerBasis(I.n, I.field, tuple(elements))


# ---------------------------------------------------------------------------
# Standard monomials, staircases, quotient rings
# ---------------------------------------------------------------------------

def standard_monomials_from_lms(lms: Sequence[Monomial], n: int) -> tuple[Monomial, ...]:
    """Monomials divisible by no element of lms, sorted ascending in neglex.

    Requires a pure power of every variable among the lms (a finite answer).
    """
    bounds = []
    for i in range(n):
        pures = [m[i] for m in lms if sum(m) == m[i]]
        if not pures:
            raise ValueError(f"no pure power of x{i + 1} among leading monomials")
        bounds.append(min(pures))
    out = [
        m
        for m in itertools.product(*(range(b) for b in bounds))
        if not any(monomial_divides(lm, m) for lm in lms)
    ]
    out.sort(key=neglex_key)
    return tuple(out)


def reverse_skip_sets(n: int, k: int) -> list[tuple[int, ...]]:
    """The index sets S inside [n-1] of size n-k+1 (sets containing n are
    redundant: their reversed skip monomial is the pure power x_1^k)."""
    return list(itertools.combinations(range(1, n), n - k + 1))


def reverse_nonskip_monomials(n: int, k: int) -> tuple[Monomial, ...]:
    """Monomials with all exponents below k and not divisible by any reversed
    skip monomial; the direct description of the standard monomial basis.
    """
    skips = [skip_exponents(S, n, reverse=True) for S in reverse_skip_sets(n, k)]
    out = [
        m
        for m in itertools.product(range(k), repeat=n)
        if not any(monomial_divides(s, m) for s in skips)
    ]
    out.sort(key=neglex_key)
    return tuple(out)


def staircases(n: int, k: int) -> list[tuple[int, ...]]:
    """All shuffles of (k-1, k-2, ..., 1, 0) with n-k copies of k-1."""
    falling = list(range(k - 1, -1, -1))
    out = set()
    for positions in itertools.combinations(range(n), k):
        seq = [k - 1] * n
        for idx, pos in enumerate(positions):
            seq[pos] = falling[idx]
        out.add(tuple(seq))
    return sorted(out)


def staircase_monomials(n: int, k: int) -> tuple[Monomial, ...]:
    """Monomials whose exponents lie componentwise below some staircase."""
    cases = staircases(n, k)
    out = {
        m
        for m in itertools.product(range(k), repeat=n)
        if any(all(a <= b for a, b in zip(m, st)) for st in cases)
    }
    return tuple(sorted(out, key=neglex_key))


@dataclass(frozen=True)
class QuotientRing:
    n: int
    k: int
    field: object
    groebner: GroebnerBasis
    standard_monomials: tuple[Monomial, ...]
    hilbert: QTPoly
    dim: int
    index: dict = dc_field(repr=False, compare=False, default=None)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.groebner)

    def coords(self, f: Polynomial) -> dict[int, object]:
        """Sparse coordinates of the normal form on the standard monomials."""
        nf = self.normal_form(f)
        try:
            return {self.index[m]: c for m, c in nf.terms.items()}
        except KeyError as exc:
            raise TheoremViolation(
                f"normal form not supported on standard monomials: {exc}"
            ) from None

    def multiply(self, f: Polynomial, g: Polynomial) -> Polynomial:
        return self.normal_form(f * g)

    def to_jsonable(self) -> dict:
        return {
            "dim": self.dim,
            "hilbert": self.hilbert.to_jsonable(),
            "standard_monomials": [list(m) for m in self.standard_monomials],
        }


@lru_cache(maxsize=None)
def _quotient_ring_cached(n: int, k: int, field_name: str) -> QuotientRing:
    field = QQ if field_name == "Q" else GF(int(field_name[3:]))
    gb = buchberger(coinvariant_ideal(n, k, field))
    std = standard_monomials_from_lms(gb.leading_monomials(), n)
    hilbert = QTPoly()
    for m in std:
        hilbert = hilbert + QTPoly.q_power(sum(m))
    index = {m: i for i, m in enumerate(std)}
    return QuotientRing(n, k, field, gb, std, hilbert, len(std), index)


def quotient_ring(n: int, k: int, field=QQ, force: bool = False) -> QuotientRing:
    """The quotient by the 0-Hecke-stable ideal, with cached Groebner data."""
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    check_size_guard(n, force)
    return _quotient_ring_cached(n, k, field.name)


def expected_hilbert(n: int, k: int) -> QTPoly:
    """rev_q of [k]!_q times the q-Stirling number: the proved Hilbert series."""
    return (q_factorial(k) * q_stirling(n, k)).rev_q()


# ---------------------------------------------------------------------------
# Groebner theorem verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroebnerReport:
    n: int
    k: int
    ok: bool
    checks: tuple[tuple[str, bool, str], ...]
    kappa_gammas: tuple[tuple[int, ...], ...]

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "ok": self.ok,
            "checks": [
                {"check": name, "pass": okay, "witness": detail}
                for name, okay, detail in self.checks
            ],
            "kappa_indices": [list(g) for g in self.kappa_gammas],
        }


def verify_groebner_theorem(n: int, k: int, field=QQ, force: bool = False) -> GroebnerReport:
    """Check that the h_k prefixes and the key polynomials of reversed skip
    exponents form a Groebner basis: every member reduces to zero mod the
    ideal, their leading monomials cut out the same standard monomials as the
    computed reduced basis, and (for k < n) no leading monomial divides
    another.
    """
    Q = quotient_ring(n, k, field, force)
    checks = []

    sets = reverse_skip_sets(n, k)
    gammas = tuple(skip_exponents(S, n, reverse=True) for S in sets)
    kappas = [key_polynomial(g, field) for g in gammas]
    hs = [complete_h(k, i, n, field) for i in range(1, n + 1)]

    bad = [f"h_{k}(x1..x{i + 1})" for i, h in enumerate(hs) if Q.normal_form(h)]
    bad += [f"kappa{list(gammas[idx])}" for idx, kp in enumerate(kappas) if Q.normal_form(kp)]
    checks.append(("membership", not bad, "; ".join(bad) or "all reduce to 0"))

    lead_ok = all(
        kp.leading_monomial() == gammas[idx] for idx, kp in enumerate(kappas)
    ) and all(
        h.leading_monomial() == tuple(k if j == i else 0 for j in range(n))
        for i, h in enumerate(hs)
    )
    checks.append(("leading_terms", lead_ok, "in_< matches the stated monomials"))

    lms = [tuple(k if j == i else 0 for j in range(n)) for i in range(n)]
    lms += [g for g in gammas]
    same_std = standard_monomials_from_lms(lms, n) == Q.standard_monomials
    checks.append(("initial_ideal", same_std, "standard monomials agree with Buchberger"))

    if k < n:
        pairs_ok = not any(
            monomial_divides(a, b)
            for a in lms
            for b in lms
            if a != b
        )
        checks.append(("minimality", pairs_ok, "no leading monomial divides another"))

    ok = all(c[1] for c in checks)
    return GroebnerReport(n, k, ok, tuple(checks), gammas)


# ---------------------------------------------------------------------------
# Garsia-Stanton-type families
# ---------------------------------------------------------------------------

def gs_index_set(n: int, k: int) -> list[tuple[Permutation, tuple[int, ...]]]:
    """Pairs (w, i) with k - des(w) > i_1 >= ... >= i_{n-k} >= 0 and zeros
    beyond position n-k; the index set of the generalized monomial basis.
    """
    out = []
    for w in permutations(n):
        cap = k - descent_number(w) - 1
        if cap < 0:
            continue
        for head in itertools.combinations_with_replacement(range(cap, -1, -1), n - k):
            out.append((w, head + (0,) * k))
    return out


def ank_index_set(n: int, k: int) -> list[tuple[Composition, tuple[int, ...]]]:
    """Pairs (alpha, i): alpha with first part exceeding n-k, and weakly
    decreasing i bounded by k - len(alpha), supported on the first n-k slots.
    """
    out = []
    for first in range(n - k + 1, n + 1):
        if first == n:
            comps = [(n,)]
        else:
            comps = [
                (first,) + tail
                for tail in _compositions_of(n - first)
            ]
        for alpha in comps:
            cap = k - len(alpha)
            if cap < 0:
                continue
            for head in itertools.combinations_with_replacement(
                range(cap, -1, -1), n - k
            ):
                out.append((alpha, head + (0,) * k))
    return out


def _compositions_of(m: int) -> list[Composition]:
    if m == 0:
        return [()]
    out = []
    for first in range(1, m + 1):
        for tail in _compositions_of(m - first):
            out.append((first,) + tail)
    return out


def admissible_perms(alpha: Composition, iseq: Sequence[int]) -> list[Permutation]:
    """Permutations with descent set between Des(alpha) and Des(alpha u i),
    sorted by one-line notation."""
    from .combinatorics import merge_composition, perms_with_descents_between

    n = sum(alpha)
    lower = composition_descents(alpha)
    upper = composition_descents(merge_composition(alpha, iseq))
    return perms_with_descents_between(lower, upper, n)


def shifted_tail(w: Permutation, iseq: Sequence[int], n: int, k: int) -> tuple[int, ...]:
    """The tail i' with i'_j = i_j - #{descents of w in [n-k] that are >= j};
    the exponent tail of the leading Garsia-Stanton monomial.
    """
    des = [r for r in descents(w) if r <= n - k]
    return tuple(
        iseq[j - 1] - sum(1 for r in des if r >= j) for j in range(1, n + 1)
    )


def spans_quotient(polys: Iterable[Polynomial], Q: QuotientRing) -> bool:
    """True iff the normal forms of the (homogeneous) polynomials have full
    rank dim(Q) in standard-monomial coordinates.

    Ranks are computed blockwise per degree.  Over the rationals a fast
    modular rank is tried first: denominators are cleared row by row and a
    full rank mod p certifies full rational rank (the modular rank is never
    larger); only a deficient block falls back to exact elimination.
    """
    from .linalg import exact_rank, fraction_rows_to_int, modp_rank

    by_degree: dict[int, list] = {}
    std_by_degree: dict[int, list[int]] = {}
    for idx, m in enumerate(Q.standard_monomials):
        std_by_degree.setdefault(sum(m), []).append(idx)
    col_of = {
        d: {idx: j for j, idx in enumerate(idxs)} for d, idxs in std_by_degree.items()
    }
    for f in polys:
        if not f:
            return False
        if not f.is_homogeneous():
            raise ValueError("family members must be homogeneous")
        d = f.degree()
        coords = Q.coords(f)
        row = [Q.field.zero] * len(std_by_degree.get(d, ()))
        for idx, c in coords.items():
            row[col_of[d][idx]] = c
        by_degree.setdefault(d, []).append(row)
    total = sum(len(rows) for rows in by_degree.values())
    if total != Q.dim:
        return False
    for d, rows in by_degree.items():
        want = len(std_by_degree.get(d, ()))
        if len(rows) != want:
            return False
        if Q.field.name == "Q":
            if modp_rank(fraction_rows_to_int(rows), 32003) == want:
                continue
        if exact_rank(rows, Q.field) != want:
            return False
    return True


def gs_basis_family(
    n: int, k: int, variant: str = "classical", field=QQ, force: bool = False
) -> list[tuple[tuple, Polynomial]]:
    """The two spanning families, as (label, polynomial) pairs.

    - "classical": the generalized Garsia-Stanton monomials, labelled (w, i).
    - "demazure": the lowered-operator images of descent-prefix monomials,
      labelled (alpha, i, w); each image is computed from a one-step
      predecessor in left weak order, which agrees with folding a full
      reduced word.
    """
    check_size_guard(n, force)
    if variant == "classical":
        return [
            ((w, iseq), Polynomial.monomial(n, gs_exponents(w, iseq), field))
            for (w, iseq) in gs_index_set(n, k)
        ]
    if variant != "demazure":
        raise ValueError(f"unknown variant {variant!r}")
    from .combinatorics import inversions, minimal_perm, swap_values
    from .polyring import demazure_pibar

    out = []
    for alpha, iseq in ank_index_set(n, k):
        lower = composition_descents(alpha)
        base_perm = minimal_perm(alpha)
        x_ai = Polynomial.monomial(n, descent_prefix_exponents(alpha, iseq), field)
        images: dict[Permutation, Polynomial] = {
            base_perm: demazure_pi_w(base_perm, x_ai, barred=True)
        }
        for w in sorted(admissible_perms(alpha, iseq), key=inversions):
            if w in images:
                out.append(((alpha, iseq, w), images[w]))
                continue
            img = None
            for i in sorted(descents(tuple(w.index(v) + 1 for v in range(1, n + 1)))):
                prev = swap_values(w, i)
                if prev in images and lower <= descents(prev):
                    img = demazure_pibar(i, images[prev])
                    break
            if img is None:
                img = demazure_pi_w(w, x_ai, barred=True)
            images[w] = img
            out.append(((alpha, iseq, w), img))
    return out
