"""Exact computational algebra for 0-Hecke-stable quotient rings indexed by
ordered set partitions: standard monomial bases, Garsia-Stanton-type bases,
explicit module decompositions, and quasisymmetric characteristic formulas,
all over exact fields and all verified against closed combinatorial forms.
"""

from .combinatorics import (
    QTPoly,
    compositions,
    composition_descents,
    composition_from_descents,
    composition_maj,
    complement,
    merge_composition,
    descents,
    idescents,
    inversions,
    major_index,
    minimal_perm,
    ordered_set_partitions,
    osp,
    osp_length,
    osp_maj,
    osp_maj_prime,
    partitions,
    permutations,
    q_binomial,
    q_factorial,
    q_int,
    q_multinomial,
    q_stirling,
    schensted,
    standard_tableaux,
    stirling2,
    t_binomial,
)
from .errors import SizeGuardError, TheoremViolation
from .polyring import (
    GF,
    QQ,
    Polynomial,
    complete_h,
    demazure_pi,
    demazure_pi_w,
    demazure_pibar,
    divided_difference,
    elementary_e,
    gs_monomial,
    key_polynomial,
    leibniz_check,
    neglex_compare,
    skip_monomial,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    QuotientRing,
    ank_index_set,
    buchberger,
    coinvariant_ideal,
    expected_hilbert,
    gs_basis_family,
    gs_index_set,
    invariant_ideal,
    normal_form,
    quotient_ring,
    reverse_nonskip_monomials,
    spans_quotient,
    staircase_monomials,
    staircases,
    verify_groebner_theorem,
)
from .pointsets import (
    PointSet,
    build_pointset,
    default_alphas,
    osp_to_point,
    point_to_osp,
    witness_e,
    witness_h,
    witnesses_vanish,
)
from .heckemod import (
    FiniteHeckeModule,
    HeckeElement,
    check_isomorphism,
    check_relations,
    decomposition_multiplicities,
    hecke_multiply,
    osp_module,
    osp_module_all,
    pi_element,
    pibar_element,
    projective_module,
    projective_pair_module,
    quotient_submodule,
)
from .characteristics import (
    Expansion,
    cht_formulas,
    chqt_formulas,
    grfrob_report,
    hilbert_consistency,
    ribbon_cht,
    ribbon_to_fundamental,
    schur_cht,
    schur_to_fundamental,
)

__version__ = "0.1.0"
