"""Named verification suites: every theorem-level invariant as a pass/fail
check, shared between the command-line driver and the acceptance tests.

Randomized checks draw from Python's Mersenne Twister (``random.Random``)
seeded from the run configuration, so any failure is replayable.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb, factorial

from . import characteristics as chars
from . import groebner as gro
from . import heckemod as hm
from . import pointsets as ps
from .combinatorics import (
    QTPoly,
    composition_descents,
    compositions,
    compositions_of_length,
    descents,
    identity_perm,
    idescents,
    inversions,
    major_index,
    merge_composition,
    minimal_perm,
    ordered_set_partitions,
    osp_length,
    osp_maj,
    osp_maj_prime,
    osp_to_pair,
    osps_of_shape,
    permutations,
    q_factorial,
    q_multinomial,
    q_stirling,
    reduced_words,
    schensted,
    stirling2,
    tableau_descents,
)
from .errors import SizeGuardError
from .polyring import (
    QQ,
    Polynomial,
    complete_h,
    demazure_pi,
    demazure_pibar,
    demazure_word,
    divided_difference,
    elementary_e,
    leibniz_check,
)

SUITE_NAMES = ("groebner", "gs", "modules", "characteristics", "pointsets")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: str = ""

    def to_jsonable(self, params: dict) -> dict:
        out = {"check": self.name, "params": params, "pass": self.passed}
        if self.witness:
            out["witness"] = self.witness
        return out


def _random_poly(rng: random.Random, n: int, field, deg: int = 3, terms: int = 4) -> Polynomial:
    out = {}
    for _ in range(terms):
        remaining = deg
        exps = []
        for _ in range(n):
            e = rng.randint(0, remaining)
            exps.append(e)
            remaining -= e
        out[tuple(exps)] = field.from_int(rng.randint(-4, 4))
    return Polynomial(n, field, out)


# ---------------------------------------------------------------------------
# groebner suite
# ---------------------------------------------------------------------------

def groebner_suite(n: int, k: int, field=QQ, seed: int = 0, force: bool = False) -> list[Check]:
    rng = random.Random(seed)
    Q = gro.quotient_ring(n, k, field, force)
    checks = []

    want_dim = factorial(k) * stirling2(n, k)
    checks.append(Check("groebner/dimension", Q.dim == want_dim, f"dim={Q.dim}"))
    checks.append(
        Check(
            "groebner/hilbert_formula",
            Q.hilbert == gro.expected_hilbert(n, k),
            f"Hilb={Q.hilbert}",
        )
    )
    triple = (
        Q.standard_monomials
        == gro.reverse_nonskip_monomials(n, k)
        == gro.staircase_monomials(n, k)
    )
    checks.append(Check("groebner/triple_agreement", triple))

    rep = gro.verify_groebner_theorem(n, k, field, force)
    for name, okay, detail in rep.checks:
        checks.append(Check(f"groebner/theorem_{name}", okay, detail))

    stable = all(
        not Q.normal_form(demazure_pi(i, g))
        for g in gro.coinvariant_ideal(n, k, field).generators
        for i in range(1, n)
    )
    checks.append(Check("groebner/ideal_stability", stable))

    primes = (2, 3, 5, 32003) if n <= 5 else (32003,)
    from .polyring import GF

    indep = all(
        gro.quotient_ring(n, k, GF(p), force).standard_monomials == Q.standard_monomials
        for p in primes
    )
    checks.append(Check("groebner/field_independence", indep, f"p in {primes}"))

    if k == n:
        same = gro.buchberger(gro.invariant_ideal(n, field)).elements == Q.groebner.elements
        checks.append(Check("groebner/coinvariant_ideal_equality", same))

    f, g, h = (_random_poly(rng, n, field) for _ in range(3))
    nf = Q.normal_form
    linear = nf(f + g) == nf(f) + nf(g) and nf(f.scale(3)) == nf(f).scale(3)
    idem = nf(nf(f)) == nf(f)
    supported = all(m in Q.index for m in nf(f).terms)
    checks.append(Check("groebner/normal_form_linear_idempotent", linear and idem and supported))

    assoc = Q.multiply(Q.multiply(f, g), h) == Q.multiply(f, Q.multiply(g, h))
    commu = Q.multiply(f, g) == Q.multiply(g, f)
    checks.append(Check("groebner/quotient_ring_arithmetic", assoc and commu))
    return checks


# ---------------------------------------------------------------------------
# gs suite (bases and the operators behind them)
# ---------------------------------------------------------------------------

def gs_suite(n: int, k: int, field=QQ, seed: int = 0, force: bool = False, instances: int = 60) -> list[Check]:
    rng = random.Random(seed)
    Q = gro.quotient_ring(n, k, field, force)
    checks = []
    want = factorial(k) * stirling2(n, k)

    classical = gro.gs_basis_family(n, k, "classical", field, force)
    demazure = gro.gs_basis_family(n, k, "demazure", field, force)
    checks.append(
        Check(
            "gs/cardinality",
            len(classical) == len(demazure) == want,
            f"|family|={len(classical)}",
        )
    )
    from .polyring import gs_exponents

    lead = all(
        p.leading_monomial() == gs_exponents(w, gro.shifted_tail(w, iseq, n, k))
        for (alpha, iseq, w), p in demazure
    )
    checks.append(Check("gs/leading_term_correspondence", lead))

    checks.append(
        Check("gs/full_rank_classical", gro.spans_quotient([p for _, p in classical], Q))
    )
    checks.append(
        Check("gs/full_rank_demazure", gro.spans_quotient([p for _, p in demazure], Q))
    )

    # Operator identities on the monomial basis of degree <= 6.
    deg_cap = 6
    monos = [
        m
        for total in range(deg_cap + 1)
        for m in _monomials_of_degree(n, total)
    ]
    ok_idem = ok_braid = ok_comm = ok_bar = True
    for m in monos:
        f = Polynomial.monomial(n, m, field)
        for i in range(1, n):
            pi_f = demazure_pi(i, f)
            ok_idem &= demazure_pi(i, pi_f) == pi_f
            pb = demazure_pibar(i, f)
            ok_bar &= demazure_pibar(i, pb) == -pb and not demazure_pibar(i, pi_f)
        for i in range(1, n - 1):
            ok_braid &= demazure_word((i, i + 1, i), f) == demazure_word((i + 1, i, i + 1), f)
        for i in range(1, n):
            for j in range(i + 2, n):
                ok_comm &= demazure_word((i, j), f) == demazure_word((j, i), f)
    checks.append(Check("gs/operator_idempotent", ok_idem))
    checks.append(Check("gs/operator_lowered_square", ok_bar))
    checks.append(Check("gs/operator_braid", ok_braid))
    checks.append(Check("gs/operator_commute", ok_comm))

    ok_shift = all(
        demazure_pi(i, complete_h(kk, i, n, field)) == complete_h(kk, i + 1, n, field)
        for kk in range(k + 1)
        for i in range(1, n)
    )
    checks.append(Check("gs/shift_relation", ok_shift))

    ok_leib = ok_sym = ok_dd = True
    for _ in range(instances):
        f = _random_poly(rng, n, field)
        g = _random_poly(rng, n, field)
        i = rng.randint(1, n - 1)
        ok_leib &= leibniz_check(f, g, i)
        ok_dd &= divided_difference(i, f * g) == divided_difference(i, f) * g + (
            f.swap_variables(i) * divided_difference(i, g)
        )
        e = elementary_e(rng.randint(1, n), n, field)
        ok_sym &= demazure_pi(i, e * g) == e * demazure_pi(i, g)
    checks.append(Check("gs/leibniz_random", ok_leib, f"{instances} seeded instances"))
    checks.append(Check("gs/divided_difference_leibniz", ok_dd))
    checks.append(Check("gs/symmetric_factor_random", ok_sym))

    # Lowered operator words vanish on monomials whose descent support is
    # too small for the permutation.
    from .polyring import demazure_pi_w, descent_prefix_exponents

    mm = min(n, 5)
    ok_vanish = True
    for alpha in compositions(mm):
        d_exps = descent_prefix_exponents(alpha, (0,) * mm)
        f = Polynomial.monomial(mm, d_exps, field)
        for w in permutations(mm):
            if not descents(w) <= composition_descents(alpha):
                ok_vanish &= not demazure_pi_w(w, f, barred=True)
    checks.append(Check("gs/lowered_vanishing", ok_vanish, f"all w in S_{mm}, all shapes"))

    m = min(n, 4)
    ok_words = True
    for w in permutations(m):
        polys = [_random_poly(rng, m, field) for _ in range(2)]
        words = reduced_words(w)
        for f in polys:
            base = demazure_word(words[0], f, barred=True)
            ok_words &= all(demazure_word(word, f, barred=True) == base for word in words[1:])
            base = demazure_word(words[0], f)
            ok_words &= all(demazure_word(word, f) == base for word in words[1:])
    checks.append(Check("gs/reduced_word_independence", ok_words, f"all w in S_{m}"))
    return checks


def _monomials_of_degree(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# modules suite
# ---------------------------------------------------------------------------

def modules_suite(n: int, k: int, field=QQ, seed: int = 0) -> list[Check]:
    if n > 5:
        raise SizeGuardError("exhaustive module sweeps are guarded at n <= 5")
    checks = []

    big = hm.osp_module_all(n, k, field)
    ok_rel = hm.check_relations(big)
    shape_modules = {}
    for alpha in compositions_of_length(n, k):
        M = hm.osp_module(alpha, field)
        shape_modules[alpha] = M
        ok_rel &= hm.check_relations(M)
    checks.append(Check("modules/osp_relations", ok_rel))

    ok_iso = True
    for alpha, M in shape_modules.items():
        P = hm.projective_pair_module((n,), alpha, field)
        ok_iso &= hm.check_relations(P)
        mapping = {sig: osp_to_pair(sig)[0] for sig in M.labels}
        ok_iso &= hm.check_isomorphism(M, P, mapping)
    checks.append(Check("modules/osp_iso_projective_pair", ok_iso))

    Q = gro.quotient_ring(n, k, field)
    ok_n = True
    dimsum = 0
    index_union = set()
    for alpha, iseq in gro.ank_index_set(n, k):
        N = hm.quotient_submodule(alpha, iseq, Q)
        P = hm.projective_pair_module(alpha, merge_composition(alpha, iseq), field)
        ok_n &= hm.check_relations(N) and hm.check_relations(P)
        ok_n &= hm.check_isomorphism(N, P, {w: w for w in N.labels})
        dimsum += N.dim
        index_union.update((alpha, iseq, w) for w in N.labels)
    checks.append(Check("modules/submodule_iso", ok_n))
    checks.append(
        Check("modules/submodule_dim_sum", dimsum == Q.dim, f"sum={dimsum}, dim={Q.dim}")
    )
    family_labels = {lab for lab, _ in gro.gs_basis_family(n, k, "demazure", field)}
    checks.append(Check("modules/submodule_basis_union", index_union == family_labels))

    mult = hm.decomposition_multiplicities(n, k)
    total = sum(m * hm.projective_dim(beta) for beta, m in mult.items())
    checks.append(
        Check(
            "modules/multiplicities_dimension",
            total == Q.dim,
            " + ".join(f"{m}*P[{','.join(map(str, b))}]" for b, m in sorted(mult.items())),
        )
    )
    # The per-shape decompositions give one projective per coarsening; the
    # resulting multiset must match the closed binomial form.
    counted: dict = {}
    for alpha in compositions_of_length(n, k):
        for beta in compositions(n):
            if composition_descents(beta) <= composition_descents(alpha):
                counted[beta] = counted.get(beta, 0) + 1
    checks.append(Check("modules/multiplicities_by_shape", counted == mult))

    # One-dimensional quotient action on the generator's image.
    ok_c = True
    for alpha in compositions_of_length(n, k):
        P = hm.projective_module(alpha, field)
        g = P.generator_index
        des = composition_descents(alpha)
        for i in range(1, n):
            diag = P.matrix(i)[g].get(g, field.zero)
            want = -field.one if i in des else field.zero
            ok_c &= diag == want
    checks.append(Check("modules/simple_quotient_action", ok_c))

    bad_first = tuple(
        {0: field.one} if r == 0 else dict(col) for r, col in enumerate(big.gens[0])
    )
    corrupted = hm.FiniteHeckeModule(
        big.n, big.field, big.labels, (bad_first,) + big.gens[1:]
    )
    checks.append(Check("modules/negative_control", not hm.check_relations(corrupted)))
    return checks


# ---------------------------------------------------------------------------
# characteristics suite (incl. the statistics identity layer)
# ---------------------------------------------------------------------------

def characteristics_suite(n: int, k: int, seed: int = 0) -> list[Check]:
    checks = []
    A, B, C, D = chars.cht_formulas(n, k)
    checks.append(Check("characteristics/cht_four_way", A == B == C == D))

    if n <= 5:
        Aq, Bq = chars.chqt_formulas(n, k)
        checks.append(Check("characteristics/chqt_two_way", Aq == Bq))
        checks.append(Check("characteristics/chqt_specializes", Aq.specialize(q=1) == A))
        acc = chars.Expansion("F", {})
        for alpha, iseq in gro.ank_index_set(n, k):
            cal = QTPoly.q_power(inversions(minimal_perm(alpha)))
            acc = acc + chars.chqt_submodule(alpha, iseq).scale(cal)
        checks.append(Check("characteristics/chqt_submodule_sum", acc == Aq))

    checks.append(Check("characteristics/submodule_ribbon_sum", chars.submodule_sum_matches(n, k)))

    Q = gro.quotient_ring(n, k)
    checks.append(Check("characteristics/hilbert_consistency", chars.hilbert_consistency(n, k, Q)))

    deg0 = {comp: c.coeffs.get((0, 0), 0) for comp, c in A.coeffs.items() if (0, 0) in c.coeffs}
    checks.append(Check("characteristics/degree_zero", deg0 == {(n,): 1}))

    schur = chars.schur_cht(n, k)
    checks.append(
        Check(
            "characteristics/schur_nonnegative",
            all(c.is_nonnegative() for c in schur.coeffs.values()),
        )
    )
    checks.append(
        Check(
            "characteristics/total_mass",
            A.dimension_series().total() == factorial(k) * stirling2(n, k),
        )
    )

    # Statistic distributions.
    osps = list(ordered_set_partitions(n, k))
    dist_maj = QTPoly.zero()
    dist_prime = QTPoly.zero()
    for sigma in osps:
        dist_maj = dist_maj + QTPoly.q_power(osp_maj(sigma))
        dist_prime = dist_prime + QTPoly.q_power(osp_maj_prime(sigma))
    closed = q_factorial(k) * q_stirling(n, k)
    checks.append(Check("characteristics/osp_maj_distribution", dist_maj == closed.rev_q()))
    checks.append(Check("characteristics/osp_maj_prime_distribution", dist_prime == closed))

    ok_len = True
    for alpha in compositions_of_length(n, k):
        dist = QTPoly.zero()
        for sigma in osps_of_shape(alpha):
            dist = dist + QTPoly.q_power(osp_length(sigma))
        ok_len &= dist == q_multinomial(n, alpha)
    checks.append(Check("characteristics/osp_length_multinomial", ok_len))

    max_seen = max((osp_maj(s) for s in osps), default=0)
    empirical = (k - 1) * (n - 1) - comb(k - 1, 2)
    checks.append(
        Check(
            "characteristics/max_maj_enumerated",
            max_seen == empirical == closed.q_degree(),
            f"max maj over all {len(osps)} elements = {max_seen}; "
            f"empirical closed form (k-1)(n-1) - C(k-1,2) = {empirical}",
        )
    )

    if n <= 5:
        ok_sch = True
        seen = {}
        for w in permutations(n):
            P, Qt = schensted(w)
            ok_sch &= descents(w) == tableau_descents(Qt)
            ok_sch &= idescents(w) == tableau_descents(P)
            ok_sch &= major_index(w) == sum(tableau_descents(Qt))
            from .combinatorics import perm_inverse, tableau_shape

            ok_sch &= tableau_shape(P) == tableau_shape(Qt)
            ok_sch &= schensted(perm_inverse(w)) == (Qt, P)
            seen[(P, Qt)] = w
        ok_sch &= len(seen) == factorial(n)
        checks.append(Check("characteristics/schensted_statistics", ok_sch))
    return checks


# ---------------------------------------------------------------------------
# pointsets suite
# ---------------------------------------------------------------------------

def pointsets_suite(n: int, k: int, field=QQ, seed: int = 0) -> list[Check]:
    if n > 5:
        raise SizeGuardError("point-set enumeration is guarded at n <= 5")
    checks = []
    alphas = ps.default_alphas(n, k, field)
    zset = ps.build_pointset(n, k, alphas, field)
    osps = list(ordered_set_partitions(n, k))
    checks.append(
        Check(
            "pointsets/cardinality",
            len(zset.points) == len(osps) == factorial(k) * stirling2(n, k),
            f"|Z|={len(zset.points)}",
        )
    )
    images = set()
    ok_rt = True
    for sigma in osps:
        pt = ps.osp_to_point(sigma, alphas)
        ok_rt &= ps.point_to_osp(pt, n, k, alphas) == sigma
        images.add(pt)
    checks.append(
        Check("pointsets/bijection_roundtrip", ok_rt and images == set(zset.points))
    )

    failures = ps.witnesses_vanish(n, k, alphas, field)
    checks.append(
        Check(
            "pointsets/witnesses_vanish",
            not failures,
            "" if not failures else str(failures[0]),
        )
    )
    ok_top = all(
        ps.witness_h(i, n, k, alphas, field).top_component() == complete_h(k, i, n, field)
        for i in range(1, n + 1)
    ) and all(
        ps.witness_e(r, n, k, alphas, field).top_component() == elementary_e(r, n, field)
        for r in range(n - k + 1, n + 1)
    )
    checks.append(Check("pointsets/witness_top_components", ok_top))

    Q = gro.quotient_ring(n, k)
    checks.append(Check("pointsets/dimension_agreement", Q.dim == len(zset.points)))
    return checks


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def run_suite(name: str, n: int, k: int, field=QQ, seed: int = 0, force: bool = False) -> list[Check]:
    runners = {
        "groebner": lambda: groebner_suite(n, k, field, seed, force),
        "gs": lambda: gs_suite(n, k, field, seed, force),
        "modules": lambda: modules_suite(n, k, field, seed),
        "characteristics": lambda: characteristics_suite(n, k, seed),
        "pointsets": lambda: pointsets_suite(n, k, field, seed),
    }
    if name == "all":
        out = []
        for suite in SUITE_NAMES:
            out.extend(runners[suite]())
        return sorted(out, key=lambda c: c.name)
    if name not in runners:
        raise ValueError(f"unknown suite {name!r}")
    return sorted(runners[name](), key=lambda c: c.name)
