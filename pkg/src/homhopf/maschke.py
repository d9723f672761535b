"""Separability retractions and Maschke-style splittings.

From a certified integral theta the adjunction unit acquires a natural
retraction, one linear map per module:

    nu_M(m (x) c) = mu(m0) . theta(m1 (x) gamma^-1(c)),

verified to satisfy nu_M . unit = id, A-linearity, C-colinearity and
twist-compatibility before being returned.  Conversely a retraction on the
canonical module A (x) C yields an integral by

    theta(c (x) d) = beta((id (x) eps) nu((1_A (x) gamma^-1(c)) (x) d)),

and the two directions are mutually inverse on that object.  Splittings of
epimorphisms (and monomorphisms) that split A-linearly are produced by the
standard candidate nu_M . (g (x) id_C) . rho_N, adjusted by twist powers if
necessary; every returned section is verified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import HomModule
from .doi import (DoiDatum, DoiModule, doi_morphism_report, induce,
                  module_morphism_report, _doi_action_matrix)
from .integrals import (Infeasible, IntegralCandidate, solve_normalized_integral,
                        verify_integral)
from .linalg import Matrix, Tensor3, unit_vector, vec_tensor, vec_zero
from .report import AxiomReport, ConstructionError, ReportBuilder


def build_retraction(theta: IntegralCandidate, m: DoiModule, d: DoiDatum) -> Matrix:
    """The retraction nu_M of the adjunction unit on M, fully verified."""
    field = m.field
    dm, dc, da = m.dim, d.coalgebra.dim, d.algebra.dim
    if (theta.dim_c, theta.dim_a) != (dc, da):
        raise ValueError("integral dimensions do not match the datum")
    gam_inv_col = [d.coalgebra.coalgebra.gamma_inv.column(i) for i in range(dc)]
    mu_col = [m.mu.column(i) for i in range(dm)]
    zero = field.zero()
    cols = dm * dc
    ent = [zero] * (dm * cols)
    for i in range(dm):
        for c in range(dc):
            acc = vec_zero(field, dm)
            for m0, c1, co in m.coaction.nonzero_of(i):
                t = theta.theta.apply(unit_vector(field, dc, c1), gam_inv_col[c])
                v = m.action.apply(mu_col[m0], t)
                for r, x in enumerate(v):
                    if x:
                        acc[r] = acc[r] + co * x
            col = i * dc + c
            for r in range(dm):
                ent[r * cols + col] = acc[r]
    nu = Matrix(field, dm, cols, tuple(ent))
    rep = retraction_report(nu, m, d)
    if not rep.passed:
        raise ConstructionError("retraction failed verification "
                                "(invalid integral or inconsistent bracketing)", rep)
    return nu


def retraction_report(nu: Matrix, m: DoiModule, d: DoiDatum) -> AxiomReport:
    """The four retraction invariants as exact matrix identities."""
    b = ReportBuilder()
    field = m.field
    dc = d.coalgebra.dim
    eta = m.coaction.as_map_to_pair()
    b.check_matrix("retracts_unit", (), nu @ eta, Matrix.identity(field, m.dim))
    g = induce(m.underlying_module(), d)
    for a in range(d.algebra.dim):
        b.check_matrix("a_linear", (a,),
                       nu @ _doi_action_matrix(g, a), _doi_action_matrix(m, a) @ nu)
    eye_c = Matrix.identity(field, dc)
    b.check_matrix("c_colinear", (),
                   m.coaction.as_map_to_pair() @ nu,
                   nu.kron(eye_c) @ g.coaction.as_map_to_pair())
    gamma = d.coalgebra.coalgebra.gamma
    b.check_matrix("twist_commutes", (), nu @ m.mu.kron(gamma), m.mu @ nu)
    return b.report()


def canonical_module(d: DoiDatum) -> DoiModule:
    """The module A (x) C induced from A acting on itself, the object on
    which retractions and integrals determine each other."""
    alg = d.algebra.algebra
    regular = HomModule(alg.field, alg.dim, alg.alpha, alg.mult)
    return induce(regular, d)


def extract_integral(nu: Matrix, d: DoiDatum) -> IntegralCandidate:
    """Read an integral off a retraction of the canonical module A (x) C.

    The first theta argument enters through gamma^-1 so that extraction
    inverts ``build_retraction`` exactly (with the literal composite the
    round trip would return theta . (gamma (x) id) instead).
    """
    field = d.field
    ac = canonical_module(d)
    rep = retraction_report(nu, ac, d)
    if not rep.passed:
        raise ConstructionError("input is not a retraction of the canonical module", rep)
    alg = d.algebra.algebra
    coalg = d.coalgebra.coalgebra
    da, dc = alg.dim, coalg.dim
    gam_inv_col = [coalg.gamma_inv.column(i) for i in range(dc)]
    unit_a = list(alg.unit)
    eps = coalg.counit
    zero = field.zero()
    ent = [zero] * (dc * dc * da)
    for c in range(dc):
        base_vec = vec_tensor(unit_a, gam_inv_col[c])
        for dd in range(dc):
            y = nu.apply(vec_tensor(base_vec, unit_vector(field, dc, dd)))
            z = vec_zero(field, da)
            for u in range(da):
                for s in range(dc):
                    v = y[u * dc + s]
                    if v and eps[s]:
                        z[u] = z[u] + v * eps[s]
            w = alg.alpha.apply(z)
            base = (c * dc + dd) * da
            for k in range(da):
                ent[base + k] = w[k]
    cand = IntegralCandidate(field, dc, da, Tensor3(field, dc, dc, da, tuple(ent)))
    cand.report = verify_integral(cand, d)
    if not cand.report.passed:
        raise ConstructionError("extracted map is not a normalized integral", cand.report)
    return cand


# ---------------------------------------------------------------------------
# Maschke splittings

def _twist_power_candidates(window: int):
    pairs = [(j, k) for j in range(-window, window + 1) for k in range(-window, window + 1)]
    pairs.sort(key=lambda jk: (abs(jk[0]) + abs(jk[1]), jk))
    return pairs


def _search_section(base: Matrix, identity_check, src: DoiModule, dst: DoiModule,
                    d: DoiDatum, window: int):
    """Try mu_dst^j . base . mu_src^k until the section verifies."""
    attempts = []
    for j, k in _twist_power_candidates(window):
        cand = dst.mu.power(j) @ base @ src.mu.power(k)
        rep = identity_check(cand)
        if rep.passed:
            morph = doi_morphism_report(cand, src, dst, d)
            if morph.passed:
                return cand, (j, k)
            attempts.append(((j, k), morph))
        else:
            attempts.append(((j, k), rep))
    first = attempts[0][1] if attempts else None
    raise ConstructionError(
        f"no twist-power adjustment in [-{window}, {window}] yields a verified section",
        first)


def split_epimorphism(f: Matrix, g: Matrix, m: DoiModule, n: DoiModule,
                      theta: IntegralCandidate, d: DoiDatum,
                      max_twist_power: int = 2) -> Matrix:
    """Upgrade an A-linear section of an epimorphism of Doi modules to a
    section in the Doi category.

    Preconditions (all verified): f: M -> N is a Doi morphism, g: N -> M is
    A-linear and twist-compatible, f . g = id_N.  The returned map satisfies
    f . section = id_N and is A-linear, C-colinear and twist-compatible.
    """
    _check_split_inputs(f, g, m, n, d, require="fg")
    base = _section_candidate(g, m, n, theta, d)
    field = d.field

    def identity_check(cand: Matrix) -> AxiomReport:
        b = ReportBuilder()
        b.check_matrix("splits_epimorphism", (), f @ cand, Matrix.identity(field, n.dim))
        return b.report()

    section, _ = _search_section(base, identity_check, n, m, d, max_twist_power)
    return section


def split_monomorphism(f: Matrix, g: Matrix, m: DoiModule, n: DoiModule,
                       theta: IntegralCandidate, d: DoiDatum,
                       max_twist_power: int = 2) -> Matrix:
    """Symmetric variant: f: M -> N a Doi monomorphism with an A-linear
    retraction g (g . f = id_M); returns a Doi retraction."""
    _check_split_inputs(f, g, m, n, d, require="gf")
    base = _section_candidate(g, m, n, theta, d)
    field = d.field

    def identity_check(cand: Matrix) -> AxiomReport:
        b = ReportBuilder()
        b.check_matrix("splits_monomorphism", (), cand @ f, Matrix.identity(field, m.dim))
        return b.report()

    section, _ = _search_section(base, identity_check, n, m, d, max_twist_power)
    return section


def _check_split_inputs(f: Matrix, g: Matrix, m: DoiModule, n: DoiModule,
                        d: DoiDatum, require: str) -> None:
    rep = doi_morphism_report(f, m, n, d)
    if not rep.passed:
        raise ConstructionError("f is not a morphism of Doi modules", rep)
    rep = module_morphism_report(g, n.underlying_module(), m.underlying_module(),
                                 d.algebra.algebra)
    if not rep.passed:
        raise ConstructionError("g is not an A-linear twist-compatible map", rep)
    field = d.field
    b = ReportBuilder()
    if require == "fg":
        b.check_matrix("f_after_g", (), f @ g, Matrix.identity(field, n.dim))
    else:
        b.check_matrix("g_after_f", (), g @ f, Matrix.identity(field, m.dim))
    rep = b.report()
    if not rep.passed:
        raise ConstructionError("g does not split f on the module level", rep)


def _section_candidate(g: Matrix, m: DoiModule, n: DoiModule,
                       theta: IntegralCandidate, d: DoiDatum) -> Matrix:
    nu_m = build_retraction(theta, m, d)
    eye_c = Matrix.identity(d.field, d.coalgebra.dim)
    return nu_m @ g.kron(eye_c) @ n.coaction.as_map_to_pair()


# ---------------------------------------------------------------------------
# separability certificates

@dataclass
class Retraction:
    """Extensional retraction: one verified map per registered module."""

    theta: IntegralCandidate
    datum: DoiDatum

    def __post_init__(self):
        self.maps: dict = {}

    def register(self, name: str, m: DoiModule) -> Matrix:
        nu = build_retraction(self.theta, m, self.datum)
        self.maps[name] = nu
        return nu


@dataclass
class SeparabilityCertificate:
    theta: IntegralCandidate
    checked_modules: tuple  # (descriptor, passed) pairs

    @property
    def all_passed(self) -> bool:
        return all(ok for _, ok in self.checked_modules)


def separability_report(d: DoiDatum, test_modules) -> SeparabilityCertificate | Infeasible:
    """Solve for an integral; if one exists, build and verify retractions on
    every test module and certify."""
    result = solve_normalized_integral(d)
    if isinstance(result, Infeasible):
        return result
    checked = []
    retr = Retraction(result, d)
    for name, module in test_modules:
        try:
            retr.register(name, module)
            checked.append((name, True))
        except ConstructionError:
            checked.append((name, False))
    return SeparabilityCertificate(result, tuple(checked))


def retraction_naturality_report(f: Matrix, m_src: DoiModule, m_dst: DoiModule,
                                 theta: IntegralCandidate, d: DoiDatum) -> AxiomReport:
    """f . nu_src = nu_dst . (f (x) id_C) for a Doi morphism f."""
    b = ReportBuilder()
    nu_src = build_retraction(theta, m_src, d)
    nu_dst = build_retraction(theta, m_dst, d)
    eye_c = Matrix.identity(d.field, d.coalgebra.dim)
    b.check_matrix("naturality", (), f @ nu_src, nu_dst @ f.kron(eye_c))
    return b.report()
