"""Normalized integrals for a Doi datum as an exact linear feasibility problem.

A candidate integral is a bilinear map theta: C (x) C -> A stored as a
coefficient tensor ``theta[c][d][a]``.  It is *normalized* when four condition
families hold with zero residual:

  twist_compatibility   theta(gamma(c) (x) gamma(d)) = beta(theta(c (x) d))
  colinearity           theta(gamma^-1(d) (x) c1) (x) gamma(c2)
                          = beta(theta(d2 (x) gamma^-1(c))[0])
                            (x) d1 . theta(d2 (x) gamma^-1(c))[1]
  normalization         theta(c1 (x) c2) = 1_A eps(c)
  module_linearity      beta^2(a[0][0]) theta(gamma^-1(d).a[0][1]
                          (x) gamma^-1(c).alpha^-1(a[1])) = theta(d (x) c) a

(Sweedler-style implicit sums; [0]/[1] are coaction legs, juxtaposition on C
is the H-action.)  All four are linear or affine in theta, so existence is a
linear feasibility problem.

Two independent routes are kept deliberately separate: ``integral_residuals``
evaluates the conditions directly on vectors, while
``assemble_integral_system`` builds the coefficient rows by explicit index
contraction.  Tests compare them entry for entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .doi import DoiDatum
from .linalg import (Field, Matrix, Tensor3, _rref_rows, unit_vector,
                     vec_is_zero, vec_scale, vec_sub, vec_tensor, vec_zero)
from .report import AxiomReport, Violation


@dataclass
class IntegralCandidate:
    """theta[c][d][a] = coefficient of basis a in theta(e_c (x) e_d)."""

    field: Field
    dim_c: int
    dim_a: int
    theta: Tensor3
    report: AxiomReport | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        if (self.theta.d1, self.theta.d2, self.theta.d3) != (self.dim_c, self.dim_c, self.dim_a):
            raise ValueError("theta tensor has wrong shape")

    def flat(self) -> list:
        return list(self.theta.entries)

    @classmethod
    def from_vector(cls, field: Field, dim_c: int, dim_a: int, vec) -> "IntegralCandidate":
        return cls(field, dim_c, dim_a, Tensor3(field, dim_c, dim_c, dim_a, tuple(vec)))


@dataclass
class Infeasible:
    """Exact inconsistency certificate: a row combination y with y.A = 0 but
    y.b != 0, reported with the originating equation instances."""

    witness_row: int
    witness_value: object
    combination: tuple  # ((family, instance, coord), coefficient) pairs

    def provenance(self) -> tuple:
        return tuple(label for label, _ in self.combination)

    def message(self) -> str:
        rows = ", ".join(f"{fam}{idx}@{coord}" for (fam, idx, coord), _ in self.combination[:6])
        more = "" if len(self.combination) <= 6 else f" (+{len(self.combination) - 6} more)"
        return (f"infeasible: row {self.witness_row} reduces to 0 = {self.witness_value}; "
                f"combined from {rows}{more}")


@dataclass
class IntegralSystem:
    """All condition instances linearized over the theta coefficients.

    Unknown (i, j, k) -- the coefficient of basis k in theta(e_i (x) e_j) --
    sits at flat index (i*dim_c + j)*dim_a + k.
    """

    field: Field
    dim_c: int
    dim_a: int
    homogeneous: Matrix
    homogeneous_labels: tuple
    affine_lhs: Matrix
    affine_rhs: tuple
    affine_labels: tuple

    @property
    def unknown_count(self) -> int:
        return self.dim_a * self.dim_c * self.dim_c


def theta_index(i: int, j: int, k: int, dim_c: int, dim_a: int) -> int:
    return (i * dim_c + j) * dim_a + k


# ---------------------------------------------------------------------------
# route 1: direct evaluation

def integral_residuals(cand: IntegralCandidate, d: DoiDatum) -> dict:
    """Evaluate every condition instance directly; maps (family, instance) to
    the exact residual vector."""
    field = d.field
    theta = cand.theta
    alg = d.algebra.algebra
    coalg = d.coalgebra.coalgebra
    phi = d.coalgebra.action
    rho_a = d.algebra.coaction
    da, dc, dh = alg.dim, coalg.dim, d.hopf.dim
    if (cand.dim_c, cand.dim_a) != (dc, da):
        raise ValueError("candidate dimensions do not match the datum")
    beta_col = [alg.alpha.column(i) for i in range(da)]
    gam_col = [coalg.gamma.column(i) for i in range(dc)]
    gam_inv_col = [coalg.gamma_inv.column(i) for i in range(dc)]
    alpha_h_inv = d.hopf.alpha_inv
    out = {}

    for p in range(dc):
        for q in range(dc):
            lhs = theta.apply(gam_col[p], gam_col[q])
            rhs = alg.alpha.apply(theta.at_pair(p, q))
            out[("twist_compatibility", (p, q))] = vec_sub(lhs, rhs)

    for p in range(dc):          # d = e_p
        for q in range(dc):      # c = e_q
            lhs = vec_zero(field, da * dc)
            for c1, c2, co in coalg.comult.nonzero_of(q):
                t1 = theta.apply(gam_inv_col[p], unit_vector(field, dc, c1))
                _acc(lhs, co, vec_tensor(t1, gam_col[c2]))
            rhs = vec_zero(field, da * dc)
            for d1, d2, co in coalg.comult.nonzero_of(p):
                t = theta.apply(unit_vector(field, dc, d2), gam_inv_col[q])
                legs = rho_a.apply_left(t)  # in A (x) H
                for u in range(da):
                    for hh in range(dh):
                        s = legs[u * dh + hh]
                        if s:
                            _acc(rhs, co * s,
                                 vec_tensor(beta_col[u], phi.at_pair(d1, hh)))
            out[("colinearity", (p, q))] = vec_sub(lhs, rhs)

    unit_a = list(alg.unit)
    for p in range(dc):
        acc = vec_zero(field, da)
        for c1, c2, co in coalg.comult.nonzero_of(p):
            _acc(acc, co, theta.at_pair(c1, c2))
        out[("normalization", (p,))] = vec_sub(acc, vec_scale(coalg.counit[p], unit_a))

    beta2_col = [alg.alpha.apply(beta_col[i]) for i in range(da)]
    alpha_inv_col = [alpha_h_inv.column(i) for i in range(dh)]
    for t_idx in range(da):      # a = e_t
        for p in range(dc):      # d = e_p
            for q in range(dc):  # c = e_q
                lhs = vec_zero(field, da)
                for u, hh, c1 in rho_a.nonzero_of(t_idx):
                    for u2, h2, c2 in rho_a.nonzero_of(u):
                        arg1 = phi.apply(gam_inv_col[p], unit_vector(field, dh, h2))
                        arg2 = phi.apply(gam_inv_col[q], alpha_inv_col[hh])
                        tt = theta.apply(arg1, arg2)
                        _acc(lhs, c1 * c2, alg.mul(beta2_col[u2], tt))
                rhs = alg.mul(theta.at_pair(p, q), unit_vector(field, da, t_idx))
                out[("module_linearity", (t_idx, p, q))] = vec_sub(lhs, rhs)
    return out


def _acc(acc: list, coeff, vec: list) -> None:
    for s, x in enumerate(vec):
        if x:
            acc[s] = acc[s] + coeff * x


def verify_integral(cand: IntegralCandidate, d: DoiDatum) -> AxiomReport:
    """Direct exhaustive evaluation of all four condition families; the
    independent oracle for the assembled system."""
    residuals = integral_residuals(cand, d)
    violations = []
    for (family, instance), res in residuals.items():
        if not vec_is_zero(res):
            violations.append(Violation(family, instance, tuple(res)))
    return AxiomReport(tuple(violations), len(residuals))


# ---------------------------------------------------------------------------
# route 2: row assembly by index contraction

def assemble_integral_system(d: DoiDatum) -> IntegralSystem:
    field = d.field
    alg = d.algebra.algebra
    coalg = d.coalgebra.coalgebra
    phi = d.coalgebra.action
    rho_a = d.algebra.coaction
    da, dc, dh = alg.dim, coalg.dim, d.hopf.dim
    nunk = da * dc * dc
    zero = field.zero()
    gam = coalg.gamma
    gam_inv = coalg.gamma_inv
    beta = alg.alpha
    alpha_inv = d.hopf.alpha_inv

    hom_rows: list = []
    hom_labels: list = []

    def idx(i, j, k):
        return (i * dc + j) * da + k

    # twist compatibility: sum_ij gam[i,p] gam[j,q] theta[i][j][r]
    #                      - sum_k beta[r,k] theta[p][q][k] = 0
    for p in range(dc):
        for q in range(dc):
            for r in range(da):
                row = [zero] * nunk
                for i in range(dc):
                    gi = gam.at(i, p)
                    if not gi:
                        continue
                    for j in range(dc):
                        gj = gam.at(j, q)
                        if gj:
                            row[idx(i, j, r)] = row[idx(i, j, r)] + gi * gj
                for k in range(da):
                    bk = beta.at(r, k)
                    if bk:
                        row[idx(p, q, k)] = row[idx(p, q, k)] - bk
                hom_rows.append(row)
                hom_labels.append(("twist_compatibility", (p, q), (r,)))

    # colinearity: coefficient of e_r (x) e_s
    #   lhs: gam_inv[i,p] Delta[q][j][l] gam[s,l]       on theta[i][j][r]
    #   rhs: Delta[p][u][v] gam_inv[j,q] rho_a[k][k2][h] beta[r,k2] phi[u][h][s]
    #                                                   on theta[v][j][k]
    for p in range(dc):
        for q in range(dc):
            rows = [[zero] * nunk for _ in range(da * dc)]
            for i in range(dc):
                gi = gam_inv.at(i, p)
                if not gi:
                    continue
                for j, l, co in coalg.comult.nonzero_of(q):
                    for s in range(dc):
                        gs = gam.at(s, l)
                        if not gs:
                            continue
                        c = gi * co * gs
                        for r in range(da):
                            rows[r * dc + s][idx(i, j, r)] = rows[r * dc + s][idx(i, j, r)] + c
            for u, v, co1 in coalg.comult.nonzero_of(p):
                for j in range(dc):
                    gj = gam_inv.at(j, q)
                    if not gj:
                        continue
                    for k in range(da):
                        for k2, hh, co2 in rho_a.nonzero_of(k):
                            for r in range(da):
                                br = beta.at(r, k2)
                                if not br:
                                    continue
                                for s in range(dc):
                                    ph = phi.at(u, hh, s)
                                    if ph:
                                        c = co1 * gj * co2 * br * ph
                                        rows[r * dc + s][idx(v, j, k)] = \
                                            rows[r * dc + s][idx(v, j, k)] - c
            for r in range(da):
                for s in range(dc):
                    hom_rows.append(rows[r * dc + s])
                    hom_labels.append(("colinearity", (p, q), (r, s)))

    # module linearity: coefficient of e_r
    #   lhs: rho_a[t][u][h] rho_a[u][u2][h2]
    #        (gam_inv[i,p] phi[i][h2][i2]) (gam_inv[j,q] alpha_inv[h3,h] phi[j][h3][j2])
    #        (beta^2 m)[u2][k][r]                        on theta[i2][j2][k]
    #   rhs: mult[k][t][r]                               on theta[p][q][k]
    beta2 = beta @ beta
    prod_b2 = [[alg.mul(beta2.column(u2), unit_vector(field, da, k))
                for k in range(da)] for u2 in range(da)]
    for t in range(da):
        for p in range(dc):
            for q in range(dc):
                rows = [[zero] * nunk for _ in range(da)]
                for u, hh, c1 in rho_a.nonzero_of(t):
                    for u2, h2, c2 in rho_a.nonzero_of(u):
                        arg1 = [zero] * dc
                        for i in range(dc):
                            gi = gam_inv.at(i, p)
                            if gi:
                                for i2 in range(dc):
                                    ph = phi.at(i, h2, i2)
                                    if ph:
                                        arg1[i2] = arg1[i2] + gi * ph
                        arg2 = [zero] * dc
                        for j in range(dc):
                            gj = gam_inv.at(j, q)
                            if not gj:
                                continue
                            for h3 in range(dh):
                                ai = alpha_inv.at(h3, hh)
                                if not ai:
                                    continue
                                for j2 in range(dc):
                                    ph = phi.at(j, h3, j2)
                                    if ph:
                                        arg2[j2] = arg2[j2] + gj * ai * ph
                        cc = c1 * c2
                        for i2, a1 in enumerate(arg1):
                            if not a1:
                                continue
                            for j2, a2 in enumerate(arg2):
                                if not a2:
                                    continue
                                w = cc * a1 * a2
                                for k in range(da):
                                    col = idx(i2, j2, k)
                                    pb = prod_b2[u2][k]
                                    for r in range(da):
                                        if pb[r]:
                                            rows[r][col] = rows[r][col] + w * pb[r]
                for k in range(da):
                    for r in range(da):
                        mk = alg.mult.at(k, t, r)
                        if mk:
                            rows[r][idx(p, q, k)] = rows[r][idx(p, q, k)] - mk
                for r in range(da):
                    hom_rows.append(rows[r])
                    hom_labels.append(("module_linearity", (t, p, q), (r,)))

    # normalization (affine): sum_ij Delta[p][i][j] theta[i][j][r] = eps[p] unit[r]
    aff_rows: list = []
    aff_rhs: list = []
    aff_labels: list = []
    for p in range(dc):
        for r in range(da):
            row = [zero] * nunk
            for i, j, co in coalg.comult.nonzero_of(p):
                row[idx(i, j, r)] = row[idx(i, j, r)] + co
            aff_rows.append(row)
            aff_rhs.append(coalg.counit[p] * alg.unit[r])
            aff_labels.append(("normalization", (p,), (r,)))

    hom = Matrix(field, len(hom_rows), nunk, tuple(x for row in hom_rows for x in row))
    aff = Matrix(field, len(aff_rows), nunk, tuple(x for row in aff_rows for x in row))
    return IntegralSystem(field, dc, da, hom, tuple(hom_labels),
                          aff, tuple(aff_rhs), tuple(aff_labels))


# ---------------------------------------------------------------------------
# solving

def solve_normalized_integral(d: DoiDatum) -> IntegralCandidate | Infeasible:
    """Deterministic particular solution (free coefficients zero) of the
    combined system, certified by the direct evaluator; or an Infeasible
    answer carrying an exact inconsistency witness."""
    system = assemble_integral_system(d)
    field = system.field
    nunk = system.unknown_count
    labels = list(system.homogeneous_labels) + list(system.affine_labels)
    rows = []
    rhs = []
    for r in range(system.homogeneous.rows):
        rows.append(system.homogeneous.row(r))
        rhs.append(field.zero())
    for r in range(system.affine_lhs.rows):
        rows.append(system.affine_lhs.row(r))
        rhs.append(system.affine_rhs[r])
    aug = [row + [val] for row, val in zip(rows, rhs)]
    red, pivots, transform = _rref_rows(aug, field)
    if nunk in pivots:
        ri = list(pivots).index(nunk)
        combo = [(labels[j], transform[ri][j]) for j in range(len(labels)) if transform[ri][j]]
        witness_value = red[ri][nunk]
        _assert_certificate(rows, rhs, transform[ri], field)
        return Infeasible(ri, witness_value, tuple(combo))
    particular = vec_zero(field, nunk)
    for r, col in enumerate(pivots):
        particular[col] = red[r][nunk]
    cand = IntegralCandidate.from_vector(field, system.dim_c, system.dim_a, particular)
    rep = verify_integral(cand, d)
    if not rep.passed:
        raise RuntimeError("solver produced a solution the direct evaluator rejects; "
                           "assembly and evaluation disagree")
    cand.report = rep
    return cand


def _assert_certificate(rows, rhs, y, field) -> None:
    n = len(rows[0]) if rows else 0
    comb = vec_zero(field, n)
    val = field.zero()
    for coeff, row, b in zip(y, rows, rhs):
        if coeff:
            _acc(comb, coeff, row)
            val = val + coeff * b
    if any(comb) or not val:
        raise RuntimeError("inconsistency witness failed exact validation")
