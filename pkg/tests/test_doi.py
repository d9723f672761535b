import random

import pytest

from corpus import (random_module_over_group_algebra,
                    random_module_over_scalars)
from homhopf.applications import (comodule_to_doi, regular_comodule_algebra,
                                  relative_datum, trivial_datum)
from homhopf.core import check_hom_module
from homhopf.doi import (ComoduleAlgebra, DoiModule, check_comodule_algebra,
                         check_doi_datum, check_doi_module,
                         check_module_coalgebra, check_triangle_identities,
                         counit_map, direct_sum_doi, doi_morphism_report,
                         induce, unit_map)
from homhopf.linalg import Field, Matrix, Tensor3, unit_vector
from homhopf.report import ConstructionError
from homhopf.zoo import (group_algebra, inclusion_matrix, projection_matrix,
                         regular_comodule, sweedler_h4, trivial_comodule,
                         twisted_sweedler)

Q = Field.rationals()


@pytest.fixture(scope="module")
def rel_kz2():
    h = group_algebra(2, Q)
    return relative_datum(h, regular_comodule_algebra(h))


@pytest.fixture(scope="module")
def triv_kz2():
    return trivial_datum(group_algebra(2, Q))


class TestComponentChecks:
    def test_hopf_is_comodule_algebra_over_itself(self, field):
        for h in [group_algebra(2, field), sweedler_h4(field), twisted_sweedler(field, 2)]:
            assert check_comodule_algebra(regular_comodule_algebra(h), h).passed

    def test_hopf_is_module_coalgebra_over_itself(self, field):
        from homhopf.doi import ModuleCoalgebra
        for h in [group_algebra(2, field), sweedler_h4(field), twisted_sweedler(field, 2)]:
            c = ModuleCoalgebra(h.as_coalgebra(), h.mult)
            assert check_module_coalgebra(c, h).passed

    def test_zero_coaction_fails_unitality(self):
        h = group_algebra(2, Q)
        a = ComoduleAlgebra(h.as_algebra(), Tensor3.zeros(Q, 2, 2, 2))
        rep = check_comodule_algebra(a, h)
        assert not rep.passed
        assert "coaction_unit" in rep.failing_axioms()

    def test_datum_check_merges_components(self, rel_kz2):
        assert check_doi_datum(rel_kz2).passed


class TestDoiModules:
    def test_induced_module_passes(self, rel_kz2):
        n = random_module_over_group_algebra(rel_kz2.hopf, 3, random.Random(1))
        assert check_doi_module(induce(n, rel_kz2), rel_kz2).passed

    def test_trivial_datum_modules_are_comodules(self, triv_kz2):
        h = group_algebra(2, Q)
        m = comodule_to_doi(regular_comodule(h.as_coalgebra()), triv_kz2)
        assert check_doi_module(m, triv_kz2).passed

    def test_zero_coaction_fails(self, triv_kz2):
        m = comodule_to_doi(regular_comodule(group_algebra(2, Q).as_coalgebra()), triv_kz2)
        bad = DoiModule(Q, m.dim, m.mu, m.action, Tensor3.zeros(Q, m.dim, m.dim, 2))
        rep = check_doi_module(bad, triv_kz2)
        assert not rep.passed
        assert "comodule_counit" in rep.failing_axioms()

    def test_induce_dimension(self, rel_kz2):
        n = random_module_over_group_algebra(rel_kz2.hopf, 4, random.Random(2))
        g = induce(n, rel_kz2)
        assert g.dim == n.dim * rel_kz2.coalgebra.dim

    def test_induce_rejects_invalid_module(self, rel_kz2):
        from homhopf.core import HomModule
        bad = HomModule(Q, 2, Matrix.identity(Q, 2), Tensor3.zeros(Q, 2, 2, 2))
        with pytest.raises(ConstructionError):
            induce(bad, rel_kz2)

    def test_induced_regular_coaction_shape(self, rel_kz2):
        # on A (x) C the coaction is (beta^-1(a) (x) c1) (x) gamma(c2)
        from homhopf.core import HomModule
        alg = rel_kz2.algebra.algebra
        regular = HomModule(Q, alg.dim, alg.alpha, alg.mult)
        g = induce(regular, rel_kz2)
        dc = rel_kz2.coalgebra.dim
        for a in range(alg.dim):
            for c in range(dc):
                legs = g.coaction.left_slice(a * dc + c)
                expect = [Q.zero()] * len(legs)
                # grouplike c: (a (x) c) -> (a (x) c) (x) c for the classical datum
                expect[(a * dc + c) * dc + c] = Q.one()
                assert legs == expect


class TestAdjunction:
    def test_unit_map_is_coaction(self, triv_kz2):
        h = group_algebra(2, Q)
        m = comodule_to_doi(regular_comodule(h.as_coalgebra()), triv_kz2)
        eta = unit_map(m, triv_kz2)
        assert eta == m.coaction.as_map_to_pair()

    def test_unit_map_rejects_corrupted_module(self, triv_kz2):
        # grading coaction not adjusted to the non-diagonal twist: the
        # coaction twist axiom breaks, surfacing as failed A-linearity of eta
        mu = Matrix.from_rows(Q, [[1, 1], [0, 1]])
        action = Tensor3.build(Q, 2, 1, 2, lambda i, _, j: mu.at(j, i))
        coaction = Tensor3.from_nested(Q, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]])
        bad = DoiModule(Q, 2, mu, action, coaction)
        with pytest.raises(ConstructionError) as exc:
            unit_map(bad, triv_kz2)
        assert "a_linear" in exc.value.report.failing_axioms()

    def test_counit_map_values(self, rel_kz2):
        # counit sends n (x) c to eps(c) mu(n); on the regular module of the
        # classical datum: (1 (x) g) -> 1
        from homhopf.core import HomModule
        alg = rel_kz2.algebra.algebra
        regular = HomModule(Q, alg.dim, alg.alpha, alg.mult)
        delta = counit_map(regular, rel_kz2)
        dc = rel_kz2.coalgebra.dim
        out = delta.apply(unit_vector(Q, alg.dim * dc, 0 * dc + 1))
        assert out == unit_vector(Q, alg.dim, 0)

    def test_counit_annihilates_counit_kernel(self, triv_kz2):
        n = random_module_over_scalars(Q, 2, random.Random(3))
        delta = counit_map(n, triv_kz2)
        dc = triv_kz2.coalgebra.dim
        # vector 1 (x) (e_0 - e_1): counit of (e_0 - e_1) is 0 for a group algebra
        vec = [Q.zero()] * (n.dim * dc)
        vec[0] = Q.one()
        vec[1] = -Q.one()
        assert delta.apply(vec) == [Q.zero()] * n.dim

    def test_triangles_trivial_datum_one_dim(self):
        d = trivial_datum(group_algebra(2, Q))
        n = random_module_over_scalars(Q, 1, random.Random(4))
        m = comodule_to_doi(trivial_comodule(group_algebra(2, Q)), d)
        assert check_triangle_identities(d, m, n).passed

    def test_triangles_regular(self, rel_kz2):
        from homhopf.core import HomModule
        alg = rel_kz2.algebra.algebra
        n = HomModule(Q, alg.dim, alg.alpha, alg.mult)
        m = induce(n, rel_kz2)
        assert check_triangle_identities(rel_kz2, m, n).passed

    @pytest.mark.parametrize("seed", range(20))
    def test_triangles_random_modules(self, rel_kz2, seed):
        rng = random.Random(1000 + seed)
        n = random_module_over_group_algebra(rel_kz2.hopf, rng.randint(1, 4), rng)
        assert check_hom_module(n, rel_kz2.algebra.algebra).passed
        gn = induce(n, rel_kz2)
        assert check_doi_module(gn, rel_kz2).passed
        assert check_triangle_identities(rel_kz2, gn, n).passed

    def test_triangles_with_nontrivial_coalgebra_twist(self):
        # gamma != id exercises the twist bookkeeping in unit and counit
        from homhopf.zoo import twisted_group_algebra
        d = trivial_datum(twisted_group_algebra(4, 3, Q))
        n = random_module_over_scalars(Q, 2, random.Random(90))
        gn = induce(n, d)
        assert check_doi_module(gn, d).passed
        assert check_triangle_identities(d, gn, n).passed

    def test_triangles_over_yd_datum(self):
        from homhopf.applications import trivial_yd_module, yd_datum, yd_to_doi
        h = group_algebra(2, Q)
        d = yd_datum(h)
        m = yd_to_doi(trivial_yd_module(h), h, d)
        n = m.underlying_module()
        assert check_triangle_identities(d, m, n).passed


class TestMorphisms:
    def test_identity_is_doi_morphism(self, triv_kz2):
        m = comodule_to_doi(regular_comodule(group_algebra(2, Q).as_coalgebra()), triv_kz2)
        assert doi_morphism_report(Matrix.identity(Q, 2), m, m, triv_kz2).passed

    def test_projection_inclusion_morphisms(self, triv_kz2):
        h = group_algebra(2, Q)
        reg = comodule_to_doi(regular_comodule(h.as_coalgebra()), triv_kz2)
        tri = comodule_to_doi(trivial_comodule(h), triv_kz2)
        big = direct_sum_doi(reg, tri)
        p = projection_matrix(Q, 3, 0, 2)
        i = inclusion_matrix(Q, 3, 2, 1)
        assert doi_morphism_report(p, big, reg, triv_kz2).passed
        assert doi_morphism_report(i, tri, big, triv_kz2).passed

    def test_induced_morphism_is_doi_morphism(self, rel_kz2):
        # the induction functor sends A-linear maps f to f (x) id_C
        rng = random.Random(5)
        n = random_module_over_group_algebra(rel_kz2.hopf, 2, rng)
        gn = induce(n, rel_kz2)
        f = n.mu  # the twist is an A-linear endomorphism for the classical datum
        from homhopf.doi import module_morphism_report
        assert module_morphism_report(f, n, n, rel_kz2.algebra.algebra).passed
        gf = f.kron(Matrix.identity(Q, rel_kz2.coalgebra.dim))
        assert doi_morphism_report(gf, gn, gn, rel_kz2).passed

    def test_unit_is_natural(self, triv_kz2):
        h = group_algebra(2, Q)
        reg = comodule_to_doi(regular_comodule(h.as_coalgebra()), triv_kz2)
        tri = comodule_to_doi(trivial_comodule(h), triv_kz2)
        big = direct_sum_doi(reg, tri)
        f = inclusion_matrix(Q, 3, 2, 1)  # trivial summand -> sum
        eta_src = unit_map(tri, triv_kz2)
        eta_dst = unit_map(big, triv_kz2)
        gff = f.kron(Matrix.identity(Q, 2))
        assert gff @ eta_src == eta_dst @ f

    def test_compatibility_fails_alone_for_mismatched_grading(self, rel_kz2):
        # a valid comodule structure that is incompatible with the action:
        # the all-degree-zero grading against the induced action
        n = random_module_over_group_algebra(rel_kz2.hopf, 2, random.Random(6))
        gn = induce(n, rel_kz2)
        mu_inv = gn.mu.inverse()
        trivial_grading = Tensor3.build(Q, gn.dim, gn.dim, 2,
                                        lambda i, j, c: mu_inv.at(j, i)
                                        if c == 0 else Q.zero())
        bad = DoiModule(Q, gn.dim, gn.mu, gn.action, trivial_grading)
        rep = check_doi_module(bad, rel_kz2)
        assert not rep.passed
        assert rep.failing_axioms() == ("doi_compatibility",)
