"""Algebra arithmetic and the explicit module layer."""
from math import factorial

import pytest

from zerohecke.combinatorics import (
    compositions,
    compositions_of_length,
    identity_perm,
    merge_composition,
    osp,
    osp_to_pair,
    stirling2,
    swap_positions,
)
from zerohecke.errors import TheoremViolation
from zerohecke.groebner import ank_index_set, quotient_ring
from zerohecke.heckemod import (
    FiniteHeckeModule,
    HeckeElement,
    check_isomorphism,
    check_relations,
    decomposition_multiplicities,
    hecke_multiply,
    identity_element,
    isomorphism_report,
    osp_module,
    osp_module_all,
    pi_element,
    pibar_element,
    projective_dim,
    projective_module,
    projective_pair_module,
    quotient_submodule,
)
from zerohecke.polyring import GF, QQ


def gen(n, i, field=QQ):
    return pi_element(swap_positions(identity_perm(n), i), field)


class TestAlgebra:
    def test_idempotent_generators(self):
        for n in (2, 3, 4):
            for i in range(1, n):
                g = gen(n, i)
                assert hecke_multiply(g, g) == g

    def test_lowered_annihilates(self):
        for n in (3, 4):
            for i in range(1, n):
                w = swap_positions(identity_perm(n), i)
                assert not hecke_multiply(pibar_element(w), pi_element(w))
                assert not hecke_multiply(pi_element(w), pibar_element(w))

    def test_braid_equality_as_elements(self):
        lhs = hecke_multiply(gen(3, 1), hecke_multiply(gen(3, 2), gen(3, 1)))
        rhs = hecke_multiply(gen(3, 2), hecke_multiply(gen(3, 1), gen(3, 2)))
        assert lhs == rhs
        assert list(lhs.coords) == [(3, 2, 1)]

    def test_associativity(self):
        import random

        rng = random.Random(0)
        n = 4
        from zerohecke.combinatorics import permutations

        perms = list(permutations(n))
        for _ in range(15):
            a = HeckeElement(n, QQ, {rng.choice(perms): QQ.from_int(rng.randint(-3, 3))})
            b = HeckeElement(n, QQ, {rng.choice(perms): QQ.from_int(rng.randint(-3, 3))})
            c = HeckeElement(n, QQ, {rng.choice(perms): QQ.from_int(rng.randint(-3, 3))})
            assert hecke_multiply(hecke_multiply(a, b), c) == hecke_multiply(
                a, hecke_multiply(b, c)
            )

    def test_lowered_element_square(self):
        for i in (1, 2):
            w = swap_positions(identity_perm(3), i)
            pb = pibar_element(w)
            assert hecke_multiply(pb, pb) == pb.scale(-1)

    def test_dimension_is_factorial(self):
        # the basis elements are linearly independent by construction; check
        # the product of all generators along the longest word touches n!
        from zerohecke.combinatorics import longest_perm, permutations

        n = 4
        assert len(list(permutations(n))) == factorial(n)
        top = pi_element(longest_perm(n))
        assert hecke_multiply(top, top) == top


class TestOspModules:
    def test_displayed_action(self):
        M = osp_module((2, 1, 3))
        sig = osp([[2, 5], [6], [1, 3, 4]])
        r = M.labels.index(sig)
        pi1 = M.pi_matrix(1)
        assert pi1[r] == {}  # pi_1 kills it
        pi2 = M.pi_matrix(2)
        s2sig = osp([[3, 5], [6], [1, 2, 4]])
        assert pi2[r] == {r: QQ.one, M.labels.index(s2sig): QQ.one}
        pi3 = M.pi_matrix(3)
        assert pi3[r] == {r: QQ.one}

    def test_same_block_kills(self):
        M = osp_module((2, 2))
        sig = osp([[1, 2], [3, 4]])
        r = M.labels.index(sig)
        assert M.matrix(1)[r] == {} and M.matrix(3)[r] == {}

    @pytest.mark.parametrize("n", range(2, 6))
    def test_relations_all_shapes(self, n):
        for alpha in compositions(n):
            assert check_relations(osp_module(alpha))

    def test_module_all_block_diagonal(self):
        M = osp_module_all(4, 2)
        assert M.dim == 14
        assert check_relations(M)
        shapes = [tuple(len(b) for b in sig) for sig in M.labels]
        assert shapes == sorted(shapes)

    def test_generator_is_identity_pattern(self):
        M = osp_module((2, 1, 3))
        assert M.labels[M.generator_index] == osp([[1, 2], [3], [4, 5, 6]])


class TestProjectives:
    def test_dims_n4(self):
        dims = {alpha: projective_module(alpha).dim for alpha in compositions(4)}
        assert dims[(4,)] == 1
        assert dims[(1, 3)] == 3
        assert dims[(2, 2)] == 5
        assert dims[(3, 1)] == 3
        assert sum(dims.values()) == 24
        for alpha, d in dims.items():
            assert d == projective_dim(alpha)

    def test_pair_requires_coarsening(self):
        with pytest.raises(ValueError):
            projective_pair_module((1, 3), (2, 2))

    def test_pair_equals_plain_when_equal(self):
        for alpha in compositions(3):
            A = projective_module(alpha)
            B = projective_pair_module(alpha, alpha)
            assert A.labels == B.labels and A.gens == B.gens

    def test_simple_quotient_action(self):
        from zerohecke.combinatorics import composition_descents

        for alpha in compositions(4):
            P = projective_module(alpha)
            g = P.generator_index
            for i in range(1, 4):
                diag = P.matrix(i)[g].get(g, QQ.zero)
                if i in composition_descents(alpha):
                    assert diag == QQ.from_int(-1)
                else:
                    assert diag == QQ.zero

    @pytest.mark.parametrize("n", range(2, 6))
    def test_osp_iso_projective_pair(self, n):
        for alpha in compositions(n):
            A = osp_module(alpha)
            B = projective_pair_module((n,), alpha)
            mapping = {sig: osp_to_pair(sig)[0] for sig in A.labels}
            assert check_relations(B)
            assert check_isomorphism(A, B, mapping)

    def test_relations_over_prime_field(self):
        F = GF(5)
        for alpha in compositions_of_length(4, 2):
            assert check_relations(projective_pair_module((4,), alpha, F))


class TestQuotientSubmodules:
    def test_42_isomorphism_types(self):
        Q = quotient_ring(4, 2)
        expected_dims = {
            ((3, 1), (0, 0, 0, 0)): 3,
            ((4,), (1, 1, 0, 0)): 6,
            ((4,), (1, 0, 0, 0)): 4,
            ((4,), (0, 0, 0, 0)): 1,
        }
        expected_degrees = {
            ((3, 1), (0, 0, 0, 0)): 3,
            ((4,), (1, 1, 0, 0)): 2,
            ((4,), (1, 0, 0, 0)): 1,
            ((4,), (0, 0, 0, 0)): 0,
        }
        for alpha, iseq in ank_index_set(4, 2):
            N = quotient_submodule(alpha, iseq, Q)
            assert N.dim == expected_dims[(alpha, iseq)]
            assert set(N.degrees) == {expected_degrees[(alpha, iseq)]}
            P = projective_pair_module(alpha, merge_composition(alpha, iseq))
            assert check_relations(N)
            assert check_isomorphism(N, P, {w: w for w in N.labels})

    def test_42_degree_one_block_is_variables(self):
        Q = quotient_ring(4, 2)
        N = quotient_submodule((4,), (1, 0, 0, 0), Q)
        # dim 4, degree 1: spans the images of the four variables
        assert N.dim == 4 and set(N.degrees) == {1}

    def test_rejects_bad_index(self):
        Q = quotient_ring(4, 2)
        with pytest.raises(ValueError):
            quotient_submodule((2, 2), (0, 0, 0, 0), Q)

    @pytest.mark.parametrize("n,k", [(3, 2), (4, 2), (4, 3), (5, 2)])
    def test_dim_sums(self, n, k):
        Q = quotient_ring(n, k)
        total = 0
        for alpha, iseq in ank_index_set(n, k):
            N = quotient_submodule(alpha, iseq, Q)
            assert check_relations(N)
            total += N.dim
        assert total == Q.dim

    def test_length_zero_tail_dims(self):
        # all-zero tail with len(alpha) = k: the module is one descent class
        from zerohecke.combinatorics import composition_descents, descents, permutations

        Q = quotient_ring(4, 2)
        N = quotient_submodule((3, 1), (0, 0, 0, 0), Q)
        want = sum(
            1 for w in permutations(4) if descents(w) == composition_descents((3, 1))
        )
        assert N.dim == want


class TestChecks:
    def test_negative_control(self):
        M = osp_module_all(4, 2)
        bad_first = tuple(
            {0: QQ.one} if r == 0 else dict(col) for r, col in enumerate(M.gens[0])
        )
        corrupted = FiniteHeckeModule(M.n, M.field, M.labels, (bad_first,) + M.gens[1:])
        assert not check_relations(corrupted)

    def test_identity_isomorphism(self):
        M = osp_module((2, 2))
        assert check_isomorphism(M, M, {l: l for l in M.labels})

    def test_isomorphism_report_failure(self):
        A = osp_module((2, 2))
        B = osp_module((2, 2))
        # a wrong bijection: swap two basis labels
        labels = list(A.labels)
        mapping = {l: l for l in labels}
        mapping[labels[0]], mapping[labels[1]] = labels[1], labels[0]
        rep = isomorphism_report(A, B, mapping)
        assert not rep["ok"] and rep["first_failing_generator"] is not None

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            check_isomorphism(osp_module((2, 2)), osp_module((3, 1)), {})

    def test_multiplicities(self):
        assert decomposition_multiplicities(4, 2) == {
            (1, 3): 1,
            (2, 2): 1,
            (3, 1): 1,
            (4,): 3,
        }
        # every composition once at k = n
        assert all(m == 1 for m in decomposition_multiplicities(4, 4).values())
        assert decomposition_multiplicities(4, 1) == {(4,): 1}

    @pytest.mark.parametrize("n", range(1, 6))
    def test_multiplicity_dimension_sum(self, n):
        for k in range(1, n + 1):
            mult = decomposition_multiplicities(n, k)
            assert sum(m * projective_dim(b) for b, m in mult.items()) == factorial(
                k
            ) * stirling2(n, k)

    def test_json_dump_shape(self):
        M = osp_module((2, 1))
        data = M.to_jsonable()
        assert data["n"] == 3 and len(data["labels"]) == M.dim
        assert len(data["matrices"]) == 2
        assert len(data["matrices"][0]) == M.dim
