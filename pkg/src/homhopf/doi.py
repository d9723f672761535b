"""Doi data and modules: comodule algebras, module coalgebras, the induction
functor and the unit/counit of its adjunction.

A Doi datum is a triple (H, A, C) with A a comodule algebra and C a module
coalgebra over H.  A Doi module is simultaneously an A-module and a
C-comodule subject to

    rho(m.a) = m0 . a0  (x)  m1 . a1

where a0 (x) a1 is the H-coaction on A and m1 . a1 the H-action on C.  The
induction functor sends an A-module N to N (x) C with

    (n (x) c) . a = n.a0 (x) c.a1,
    rho(n (x) c) = (mu^-1(n) (x) c1) (x) gamma(c2).

Its unit is the coaction itself and its counit is (n (x) c) -> eps(c) mu(n);
both triangle identities hold as exact matrix identities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (HomAlgebra, HomCoalgebra, HomComodule, HomHopfAlgebra,
                   HomModule, check_hom_comodule, check_hom_hopf,
                   check_hom_module, _add_scaled)
from .linalg import Field, Matrix, Tensor3, vec_tensor, vec_zero
from .report import AxiomReport, ConstructionError, ReportBuilder
from .zoo import block_diag


@dataclass
class ComoduleAlgebra:
    """A Hom-algebra with a multiplicative, unital H-coaction."""

    algebra: HomAlgebra
    coaction: Tensor3  # [a][a'][h]

    def __post_init__(self):
        if self.coaction.d1 != self.algebra.dim or self.coaction.d2 != self.algebra.dim:
            raise ValueError("coaction tensor has wrong shape")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def as_comodule(self) -> HomComodule:
        return HomComodule(self.algebra.field, self.dim, self.algebra.alpha, self.coaction)


@dataclass
class ModuleCoalgebra:
    """A Hom-coalgebra with an H-action compatible with Delta and eps."""

    coalgebra: HomCoalgebra
    action: Tensor3  # [c][h][c']

    def __post_init__(self):
        if self.action.d1 != self.coalgebra.dim or self.action.d3 != self.coalgebra.dim:
            raise ValueError("action tensor has wrong shape")

    @property
    def dim(self) -> int:
        return self.coalgebra.dim

    def as_module(self) -> HomModule:
        return HomModule(self.coalgebra.field, self.dim, self.coalgebra.gamma, self.action)


@dataclass
class DoiDatum:
    hopf: HomHopfAlgebra
    algebra: ComoduleAlgebra
    coalgebra: ModuleCoalgebra

    @property
    def field(self) -> Field:
        return self.hopf.field


@dataclass
class DoiModule:
    """Simultaneous A-module and C-comodule with the mixed compatibility law.

    The twist ``mu`` is stored explicitly since it must intertwine both
    structures at once.
    """

    field: Field
    dim: int
    mu: Matrix
    action: Tensor3    # [m][a][m']
    coaction: Tensor3  # [m][m'][c]

    def __post_init__(self):
        mu_inv = self.mu.inverse()
        if mu_inv is None:
            raise ValueError("module twist is not invertible")
        self.mu_inv = mu_inv

    def underlying_module(self) -> HomModule:
        return HomModule(self.field, self.dim, self.mu, self.action)

    def underlying_comodule(self) -> HomComodule:
        return HomComodule(self.field, self.dim, self.mu, self.coaction)


# ---------------------------------------------------------------------------
# checks

def check_comodule_algebra(a: ComoduleAlgebra, h: HomHopfAlgebra) -> AxiomReport:
    """Comodule axioms plus multiplicativity and unitality of the coaction."""
    rep = check_hom_comodule(a.as_comodule(), h.as_coalgebra())
    b = ReportBuilder()
    field = a.algebra.field
    da, dh = a.dim, h.dim
    b.check_vec("coaction_unit", (), a.coaction.apply_left(list(a.algebra.unit)),
                vec_tensor(list(a.algebra.unit), list(h.unit)))
    for i in range(da):
        for j in range(da):
            lhs = a.coaction.apply_left(a.algebra.mult.at_pair(i, j))
            rhs = vec_zero(field, da * dh)
            for u, p, c1 in a.coaction.nonzero_of(i):
                for v, q, c2 in a.coaction.nonzero_of(j):
                    rhs = _add_scaled(rhs, c1 * c2,
                                      vec_tensor(a.algebra.mult.at_pair(u, v),
                                                 h.mult.at_pair(p, q)))
            b.check_vec("coaction_multiplicative", (i, j), lhs, rhs)
    return rep.merged(b.report())


def check_module_coalgebra(c: ModuleCoalgebra, h: HomHopfAlgebra) -> AxiomReport:
    """Module axioms plus compatibility of the action with Delta and eps."""
    rep = check_hom_module(c.as_module(), h.as_algebra())
    b = ReportBuilder()
    field = c.coalgebra.field
    dc, dh = c.dim, h.dim
    for i in range(dc):
        for j in range(dh):
            lhs = c.coalgebra.comult.apply_left(c.action.at_pair(i, j))
            rhs = vec_zero(field, dc * dc)
            for c1, c2, u in c.coalgebra.comult.nonzero_of(i):
                for h1, h2, v in h.comult.nonzero_of(j):
                    rhs = _add_scaled(rhs, u * v,
                                      vec_tensor(c.action.at_pair(c1, h1),
                                                 c.action.at_pair(c2, h2)))
            b.check_vec("action_comultiplicative", (i, j), lhs, rhs)
            b.check_scalar("action_counit", (i, j),
                           c.coalgebra.counit_of(c.action.at_pair(i, j)),
                           c.coalgebra.counit[i] * h.counit[j])
    return rep.merged(b.report())


def check_doi_datum(d: DoiDatum) -> AxiomReport:
    return (check_hom_hopf(d.hopf)
            .merged(check_comodule_algebra(d.algebra, d.hopf))
            .merged(check_module_coalgebra(d.coalgebra, d.hopf)))


def check_doi_module(m: DoiModule, d: DoiDatum) -> AxiomReport:
    """Module and comodule axioms plus the mixed compatibility law."""
    rep = check_hom_module(m.underlying_module(), d.algebra.algebra)
    rep = rep.merged(check_hom_comodule(m.underlying_comodule(), d.coalgebra.coalgebra))
    b = ReportBuilder()
    field = m.field
    dm, dc = m.dim, d.coalgebra.dim
    for i in range(dm):
        for a in range(d.algebra.dim):
            lhs = m.coaction.apply_left(m.action.at_pair(i, a))
            rhs = vec_zero(field, dm * dc)
            for m0, c1, u in m.coaction.nonzero_of(i):
                for a0, h1, v in d.algebra.coaction.nonzero_of(a):
                    rhs = _add_scaled(rhs, u * v,
                                      vec_tensor(m.action.at_pair(m0, a0),
                                                 d.coalgebra.action.at_pair(c1, h1)))
            b.check_vec("doi_compatibility", (i, a), lhs, rhs)
    return rep.merged(b.report())


# ---------------------------------------------------------------------------
# the induction functor and its adjunction

def induce(n: HomModule, d: DoiDatum) -> DoiModule:
    """N (x) C with the diagonal action through the coaction on A and the
    comultiplication-shifted coaction.  Index (i, c) sits at i*dim(C) + c."""
    rep = check_hom_module(n, d.algebra.algebra)
    if not rep.passed:
        raise ConstructionError("input is not a valid module", rep)
    field = n.field
    dn, dc = n.dim, d.coalgebra.dim
    da, dh = d.algebra.dim, d.hopf.dim
    dim = dn * dc
    zero = field.zero()
    act = [zero] * (dim * da * dim)
    for a in range(da):
        for a0, h1, v in d.algebra.coaction.nonzero_of(a):
            for i in range(dn):
                for ii in range(dn):
                    psi = n.action.at(i, a0, ii)
                    if not psi:
                        continue
                    for c in range(dc):
                        base = ((i * dc + c) * da + a) * dim + ii * dc
                        for cc in range(dc):
                            phi = d.coalgebra.action.at(c, h1, cc)
                            if phi:
                                act[base + cc] = act[base + cc] + v * psi * phi
    action = Tensor3(field, dim, da, dim, tuple(act))

    coa = [zero] * (dim * dim * dc)
    gamma = d.coalgebra.coalgebra.gamma
    for c in range(dc):
        for c1, c2, v in d.coalgebra.coalgebra.comult.nonzero_of(c):
            for s in range(dc):
                g = gamma.at(s, c2)
                if not g:
                    continue
                for i in range(dn):
                    for ii in range(dn):
                        nu = n.mu_inv.at(ii, i)
                        if nu:
                            idx = ((i * dc + c) * dim + (ii * dc + c1)) * dc + s
                            coa[idx] = coa[idx] + v * g * nu
    coaction = Tensor3(field, dim, dim, dc, tuple(coa))
    mu = n.mu.kron(gamma)
    return DoiModule(field, dim, mu, action, coaction)


def module_morphism_report(f: Matrix, src: HomModule, dst: HomModule,
                           a: HomAlgebra) -> AxiomReport:
    """Is f an A-linear morphism of Hom-modules (action- and twist-compatible)?"""
    b = ReportBuilder()
    for j in range(a.dim):
        b.check_matrix("a_linear", (j,),
                       f @ _action_matrix(src, j), _action_matrix(dst, j) @ f)
    b.check_matrix("twist_commutes", (), f @ src.mu, dst.mu @ f)
    return b.report()


def comodule_morphism_report(f: Matrix, src: HomComodule, dst: HomComodule,
                             c: HomCoalgebra) -> AxiomReport:
    """Is f a C-colinear morphism of Hom-comodules?"""
    b = ReportBuilder()
    eye_c = Matrix.identity(c.field, c.dim)
    b.check_matrix("c_colinear", (),
                   dst.coaction.as_map_to_pair() @ f,
                   f.kron(eye_c) @ src.coaction.as_map_to_pair())
    b.check_matrix("twist_commutes", (), f @ src.mu, dst.mu @ f)
    return b.report()


def doi_morphism_report(f: Matrix, src: DoiModule, dst: DoiModule,
                        d: DoiDatum) -> AxiomReport:
    """A-linearity, C-colinearity and twist-compatibility of a matrix."""
    b = ReportBuilder()
    for j in range(d.algebra.dim):
        b.check_matrix("a_linear", (j,),
                       f @ _doi_action_matrix(src, j), _doi_action_matrix(dst, j) @ f)
    eye_c = Matrix.identity(d.field, d.coalgebra.dim)
    b.check_matrix("c_colinear", (),
                   dst.coaction.as_map_to_pair() @ f,
                   f.kron(eye_c) @ src.coaction.as_map_to_pair())
    b.check_matrix("twist_commutes", (), f @ src.mu, dst.mu @ f)
    return b.report()


def _action_matrix(m: HomModule, a_index: int) -> Matrix:
    field = m.field
    return Matrix.build(field, m.dim, m.dim, lambda r, c: m.action.at(c, a_index, r))


def _doi_action_matrix(m: DoiModule, a_index: int) -> Matrix:
    field = m.field
    return Matrix.build(field, m.dim, m.dim, lambda r, c: m.action.at(c, a_index, r))


def unit_map(m: DoiModule, d: DoiDatum) -> Matrix:
    """The adjunction unit M -> induce(F(M)): the coaction as a matrix.

    Verified A-linear, C-colinear and twist-compatible before being returned.
    """
    eta = m.coaction.as_map_to_pair()
    g = induce(m.underlying_module(), d)
    rep = doi_morphism_report(eta, m, g, d)
    if not rep.passed:
        raise ConstructionError("adjunction unit failed verification", rep)
    return eta


def counit_map(n: HomModule, d: DoiDatum) -> Matrix:
    """The adjunction counit induce(N) -> N: (n (x) c) -> eps(c) mu(n).

    Verified A-linear and twist-compatible before being returned.
    """
    field = n.field
    dc = d.coalgebra.dim
    eps = d.coalgebra.coalgebra.counit
    delta = Matrix.build(field, n.dim, n.dim * dc,
                         lambda r, col: eps[col % dc] * n.mu.at(r, col // dc))
    g = induce(n, d)
    rep = module_morphism_report(delta, g.underlying_module(), n, d.algebra.algebra)
    if not rep.passed:
        raise ConstructionError("adjunction counit failed verification", rep)
    return delta


def check_triangle_identities(d: DoiDatum, m: DoiModule, n: HomModule) -> AxiomReport:
    """Both triangle identities of the adjunction, as exact matrix identities."""
    b = ReportBuilder()
    field = d.field
    dc = d.coalgebra.dim
    # on the induced side: (counit (x) id_C) . unit_{induce(N)} = id
    gn = induce(n, d)
    eta_gn = gn.coaction.as_map_to_pair()
    delta_n = counit_map(n, d)
    eye_c = Matrix.identity(field, dc)
    b.check_matrix("triangle_induced", (),
                   delta_n.kron(eye_c) @ eta_gn, Matrix.identity(field, gn.dim))
    # on the forgotten side: counit_{F(M)} . F(unit_M) = id
    eta_m = unit_map(m, d)
    delta_fm = counit_map(m.underlying_module(), d)
    b.check_matrix("triangle_forgotten", (),
                   delta_fm @ eta_m, Matrix.identity(field, m.dim))
    return b.report()


def direct_sum_doi(m1: DoiModule, m2: DoiModule) -> DoiModule:
    if m1.action.d2 != m2.action.d2 or m1.coaction.d3 != m2.coaction.d3:
        raise ValueError("modules over different data")
    field = m1.field
    d1 = m1.dim
    dim = d1 + m2.dim
    da, dc = m1.action.d2, m1.coaction.d3

    def act(i, a, j):
        if i < d1 and j < d1:
            return m1.action.at(i, a, j)
        if i >= d1 and j >= d1:
            return m2.action.at(i - d1, a, j - d1)
        return field.zero()

    def coa(i, j, c):
        if i < d1 and j < d1:
            return m1.coaction.at(i, j, c)
        if i >= d1 and j >= d1:
            return m2.coaction.at(i - d1, j - d1, c)
        return field.zero()

    return DoiModule(field, dim, block_diag(m1.mu, m2.mu),
                     Tensor3.build(field, dim, da, dim, act),
                     Tensor3.build(field, dim, dim, dc, coa))
