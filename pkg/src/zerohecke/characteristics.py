"""Formal quasisymmetric / noncommutative-symmetric / symmetric expansions
with q,t coefficients, and the characteristic formulas for the quotient
modules together with their cross-formula equalities.

Expansions are finite maps from an index (composition or partition) to a
:class:`~zerohecke.combinatorics.QTPoly`; equality is coefficientwise in the
chosen basis and nothing is ever expanded into monomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import (
    Composition,
    QTPoly,
    composition_descents,
    composition_from_descents,
    composition_maj,
    compositions,
    descent_number,
    descents,
    idescents,
    inversions,
    major_index,
    merge_composition,
    minimal_perm,
    ordered_set_partitions,
    osp_maj,
    osp_to_pair,
    partitions,
    permutations,
    q_factorial,
    q_stirling,
    schensted,
    standard_tableaux,
    t_binomial,
    tableau_descents,
    tableau_shape,
)
from .groebner import QuotientRing, ank_index_set, expected_hilbert


@dataclass(frozen=True)
class Expansion:
    """A formal linear combination over a named basis with QTPoly coefficients."""

    basis: str  # "F" (fundamental), "ribbon", or "schur"
    coeffs: dict

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", {k: c for k, c in self.coeffs.items() if c}
        )

    def __add__(self, other: "Expansion") -> "Expansion":
        if self.basis != other.basis:
            raise ValueError("cannot add expansions in different bases")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, QTPoly.zero()) + c
        return Expansion(self.basis, out)

    def scale(self, c: QTPoly | int) -> "Expansion":
        if isinstance(c, int):
            c = QTPoly.from_int(c)
        return Expansion(self.basis, {k: cc * c for k, cc in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Expansion)
            and self.basis == other.basis
            and self.coeffs == other.coeffs
        )

    def coefficient(self, key) -> QTPoly:
        return self.coeffs.get(tuple(key), QTPoly.zero())

    def specialize(self, q: int | None = None, t: int | None = None) -> "Expansion":
        return Expansion(self.basis, {k: c.subs(q=q, t=t) for k, c in self.coeffs.items()})

    def dimension_series(self) -> QTPoly:
        """Sum of all coefficients: each basis symbol counts its coefficient,
        so for a module characteristic this is the graded dimension."""
        out = QTPoly.zero()
        for c in self.coeffs.values():
            out = out + c
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        sym = {"F": "F", "ribbon": "s", "schur": "s"}[self.basis]
        parts = []
        for k in sorted(self.coeffs):
            body = f"{sym}[{','.join(map(str, k))}]"
            c = self.coeffs[k]
            cs = str(c)
            if cs == "1":
                parts.append(body)
            elif ("+" in cs) or ("- " in cs):
                parts.append(f"({cs})*{body}")
            else:
                parts.append(f"{cs}*{body}")
        return " + ".join(parts)

    def to_jsonable(self) -> list[dict]:
        key = "composition" if self.basis in ("F", "ribbon") else "partition"
        return [
            {key: list(k), "coeff": self.coeffs[k].to_jsonable()}
            for k in sorted(self.coeffs)
        ]


def fundamental(alpha: Composition, coeff: QTPoly | int = 1) -> Expansion:
    if isinstance(coeff, int):
        coeff = QTPoly.from_int(coeff)
    return Expansion("F", {tuple(alpha): coeff})


@lru_cache(maxsize=None)
def _descent_class_ides(n: int) -> dict[frozenset, dict[Composition, int]]:
    """For each descent set D of S_n: the multiset of inverse descent
    compositions over the descent class, used to expand ribbons."""
    out: dict[frozenset, dict[Composition, int]] = {}
    for w in permutations(n):
        d = descents(w)
        comp = composition_from_descents(idescents(w), n)
        slot = out.setdefault(d, {})
        slot[comp] = slot.get(comp, 0) + 1
    return out


def ribbon_to_fundamental(alpha: Composition) -> Expansion:
    """The fundamental expansion of a ribbon: sum of F at the inverse descent
    composition over the descent class of alpha.

    >>> str(ribbon_to_fundamental((2, 1)))
    'F[1,2] + F[2,1]'
    """
    n = sum(alpha)
    table = _descent_class_ides(n).get(composition_descents(alpha), {})
    return Expansion("F", {comp: QTPoly.from_int(m) for comp, m in table.items()})


def schur_to_fundamental(lam: tuple[int, ...]) -> Expansion:
    """Fundamental expansion of a Schur function: one F per standard tableau,
    indexed by its descent composition.

    >>> str(schur_to_fundamental((2, 1)))
    'F[1,2] + F[2,1]'
    """
    n = sum(lam)
    out: dict[Composition, QTPoly] = {}
    for P in standard_tableaux(lam):
        comp = composition_from_descents(tableau_descents(P), n)
        out[comp] = out.get(comp, QTPoly.zero()) + QTPoly.one()
    return Expansion("F", out)


# ---------------------------------------------------------------------------
# Characteristic formulas for the quotient
# ---------------------------------------------------------------------------

def cht_osp_form(n: int, k: int) -> Expansion:
    """Degree-graded characteristic, summed over ordered set partitions:
    t^maj(sigma) F at the inverse descent composition of the word."""
    out: dict[Composition, QTPoly] = {}
    for sigma in ordered_set_partitions(n, k):
        w, _ = osp_to_pair(sigma)
        comp = composition_from_descents(idescents(w), n)
        out[comp] = out.get(comp, QTPoly.zero()) + QTPoly.t_power(osp_maj(sigma))
    return Expansion("F", out)


def cht_perm_form(n: int, k: int) -> Expansion:
    """The same series as a sum over permutations with a Gaussian binomial
    absorbing the block choices."""
    out: dict[Composition, QTPoly] = {}
    for w in permutations(n):
        d = descent_number(w)
        factor = QTPoly.t_power(major_index(w)) * t_binomial(n - d - 1, k - d - 1)
        if not factor:
            continue
        comp = composition_from_descents(idescents(w), n)
        out[comp] = out.get(comp, QTPoly.zero()) + factor
    return Expansion("F", out)


def ribbon_cht(n: int, k: int) -> Expansion:
    """Noncommutative form: sum over compositions of t^maj(alpha) times a
    Gaussian binomial times the ribbon indexed by alpha."""
    out: dict[Composition, QTPoly] = {}
    for alpha in compositions(n):
        factor = QTPoly.t_power(composition_maj(alpha)) * t_binomial(
            n - len(alpha), k - len(alpha)
        )
        if factor:
            out[alpha] = factor
    return Expansion("ribbon", out)


def cht_ribbon_form(n: int, k: int) -> Expansion:
    """The noncommutative form pushed into the fundamental basis."""
    out = Expansion("F", {})
    for alpha, c in sorted(ribbon_cht(n, k).coeffs.items()):
        out = out + ribbon_to_fundamental(alpha).scale(c)
    return out


def schur_cht(n: int, k: int) -> Expansion:
    """Schur expansion via the Schensted grouping: one term per standard
    tableau, with the Gaussian binomial in the maj statistic of the tableau.
    Existence of this expansion (equal to the fundamental forms) certifies
    that the degree-graded characteristic is a symmetric function."""
    out: dict[tuple[int, ...], QTPoly] = {}
    for lam in partitions(n):
        for Qtab in standard_tableaux(lam):
            d = len(tableau_descents(Qtab))
            maj = sum(tableau_descents(Qtab))
            factor = QTPoly.t_power(maj) * t_binomial(n - d - 1, k - d - 1)
            if factor:
                out[lam] = out.get(lam, QTPoly.zero()) + factor
    return Expansion("schur", out)


def cht_schur_form(n: int, k: int) -> Expansion:
    """The Schur expansion pushed into the fundamental basis."""
    out = Expansion("F", {})
    for lam, c in sorted(schur_cht(n, k).coeffs.items()):
        out = out + schur_to_fundamental(lam).scale(c)
    return out


def cht_formulas(n: int, k: int) -> tuple[Expansion, Expansion, Expansion, Expansion]:
    """The four expressions for the degree-graded characteristic; they must
    agree coefficientwise in the fundamental basis."""
    return (
        cht_osp_form(n, k),
        cht_perm_form(n, k),
        cht_ribbon_form(n, k),
        cht_schur_form(n, k),
    )


def chqt_osp_form(n: int, k: int) -> Expansion:
    """Length-degree-bigraded characteristic as a generating function for the
    pair (length, maj) on ordered set partitions."""
    out: dict[Composition, QTPoly] = {}
    for sigma in ordered_set_partitions(n, k):
        w, _ = osp_to_pair(sigma)
        comp = composition_from_descents(idescents(w), n)
        term = QTPoly.monomial(inversions(w), osp_maj(sigma))
        out[comp] = out.get(comp, QTPoly.zero()) + term
    return Expansion("F", out)


def chqt_perm_form(n: int, k: int) -> Expansion:
    out: dict[Composition, QTPoly] = {}
    for w in permutations(n):
        d = descent_number(w)
        factor = QTPoly.monomial(inversions(w), major_index(w)) * t_binomial(
            n - d - 1, k - d - 1
        )
        if not factor:
            continue
        comp = composition_from_descents(idescents(w), n)
        out[comp] = out.get(comp, QTPoly.zero()) + factor
    return Expansion("F", out)


def chqt_formulas(n: int, k: int) -> tuple[Expansion, Expansion]:
    return chqt_osp_form(n, k), chqt_perm_form(n, k)


# ---------------------------------------------------------------------------
# Characteristics of the distinguished submodules
# ---------------------------------------------------------------------------

def ribbon_cht_submodule(alpha: Composition, iseq) -> Expansion:
    """t^(maj(alpha)+|i|) times the sum of ribbons over the interval from
    alpha to alpha u i."""
    beta_top = merge_composition(alpha, iseq)
    lo, hi = composition_descents(alpha), composition_descents(beta_top)
    n = sum(alpha)
    tpow = QTPoly.t_power(composition_maj(alpha) + sum(iseq))
    out = {
        beta: tpow
        for beta in compositions(n)
        if lo <= composition_descents(beta) <= hi
    }
    return Expansion("ribbon", out)


def chqt_submodule(alpha: Composition, iseq) -> Expansion:
    """Bigraded characteristic of one distinguished submodule, as a cyclic
    module with the length filtration calibrated at its generator."""
    n = sum(alpha)
    lo = composition_descents(alpha)
    hi = composition_descents(merge_composition(alpha, iseq))
    base_inv = inversions(minimal_perm(alpha))
    deg = composition_maj(alpha) + sum(iseq)
    out: dict[Composition, QTPoly] = {}
    for w in permutations(n):
        if lo <= descents(w) <= hi:
            comp = composition_from_descents(idescents(w), n)
            term = QTPoly.monomial(inversions(w) - base_inv, deg)
            out[comp] = out.get(comp, QTPoly.zero()) + term
    return Expansion("F", out)


def submodule_sum_matches(n: int, k: int) -> bool:
    """Sum of the submodule ribbon characteristics over the index pairs
    equals the ribbon form for the whole quotient."""
    acc = Expansion("ribbon", {})
    for alpha, iseq in ank_index_set(n, k):
        acc = acc + ribbon_cht_submodule(alpha, iseq)
    return acc == ribbon_cht(n, k)


# ---------------------------------------------------------------------------
# Consistency checks
# ---------------------------------------------------------------------------

def hilbert_consistency(n: int, k: int, Q: QuotientRing) -> bool:
    """Three-way agreement of the graded dimensions: standard-monomial
    count, the closed reversal formula, and the total coefficient of the
    degree-graded characteristic."""
    closed = expected_hilbert(n, k)
    if Q.hilbert != closed:
        return False
    dims = cht_osp_form(n, k).dimension_series().swap_qt()  # t-series -> q-series
    return dims == closed


def grfrob_report(n: int, k: int) -> Expansion:
    """The Schur expansion of the degree-graded characteristic, reported as
    the graded character shared with the companion symmetric-group module."""
    return schur_cht(n, k)
