"""Shared deterministic generators for test structures.

Everything is seeded; reruns produce identical corpora.
"""

from __future__ import annotations

import random

from homhopf.applications import YDModule
from homhopf.core import HomComodule, HomHopfAlgebra, HomModule
from homhopf.linalg import Field, Matrix, Tensor3


def random_invertible(field: Field, n: int, rng: random.Random, span: int = 3) -> Matrix:
    while True:
        m = Matrix.build(field, n, n, lambda r, c: field.of(rng.randint(-span, span)))
        if m.inverse() is not None:
            return m


def cyclic_rep(field: Field, dim: int, order: int, rng: random.Random) -> Matrix:
    """A random matrix G with G^order = I: a permutation with cycle lengths
    dividing the order, conjugated by a random invertible matrix."""
    sizes = []
    left = dim
    divisors = [d for d in range(1, order + 1) if order % d == 0]
    while left > 0:
        sizes.append(rng.choice([d for d in divisors if d <= left]))
        left -= sizes[-1]
    zero, one = field.zero(), field.one()
    ent = [[zero] * dim for _ in range(dim)]
    start = 0
    for d in sizes:
        for i in range(d):
            ent[start + (i + 1) % d][start + i] = one
        start += d
    g0 = Matrix.build(field, dim, dim, lambda r, c: ent[r][c])
    p = random_invertible(field, dim, rng)
    return p @ g0 @ p.inverse()


def commuting_twist(field: Field, g: Matrix, rng: random.Random) -> Matrix:
    """An invertible polynomial in g (hence commuting with it)."""
    dim = g.rows
    while True:
        mu = Matrix.zeros(field, dim, dim)
        power = Matrix.identity(field, dim)
        for _ in range(rng.randint(1, 3)):
            mu = mu.add(power.scale(field.of(rng.randint(-2, 2))))
            power = power @ g
        if mu.inverse() is not None:
            return mu


def random_module_over_group_algebra(h: HomHopfAlgebra, dim: int,
                                     rng: random.Random) -> HomModule:
    """A valid Hom-module over the classical group algebra k[Z_n]: a
    representation G of Z_n composed with a commuting invertible twist."""
    field = h.field
    n = h.dim
    g = cyclic_rep(field, dim, n, rng)
    mu = commuting_twist(field, g, rng)
    powers = [Matrix.identity(field, dim)]
    for _ in range(n - 1):
        powers.append(powers[-1] @ g)
    mats = [mu @ powers[a] for a in range(n)]
    action = Tensor3.build(field, dim, n, dim, lambda m, a, mm: mats[a].at(mm, m))
    return HomModule(field, dim, mu, action)


def random_module_over_scalars(field: Field, dim: int, rng: random.Random) -> HomModule:
    """A module over the one-dimensional Hopf algebra: any invertible twist."""
    mu = random_invertible(field, dim, rng)
    action = Tensor3.build(field, dim, 1, dim, lambda m, _, mm: mu.at(mm, m))
    return HomModule(field, dim, mu, action)


def graded_comodule(h: HomHopfAlgebra, degrees, mu: Matrix) -> HomComodule:
    """Comodule over a classical group algebra from a Z_n-grading; the twist
    must preserve degrees."""
    field = h.field
    dim = len(degrees)
    mu_inv = mu.inverse()
    coaction = Tensor3.build(field, dim, dim, h.dim,
                             lambda i, j, c: mu_inv.at(j, i) if c == degrees[i]
                             else field.zero())
    return HomComodule(field, dim, mu, coaction)


def random_graded_comodule(h: HomHopfAlgebra, dim: int, rng: random.Random) -> HomComodule:
    field = h.field
    degrees = sorted(rng.randrange(h.dim) for _ in range(dim))
    # block-diagonal invertible twist along equal degrees
    while True:
        ent = [[field.zero()] * dim for _ in range(dim)]
        for i in range(dim):
            for j in range(dim):
                if degrees[i] == degrees[j]:
                    ent[i][j] = field.of(rng.randint(-2, 2))
        mu = Matrix.build(field, dim, dim, lambda r, c: ent[r][c])
        if mu.inverse() is not None:
            return graded_comodule(h, degrees, mu)


# ---------------------------------------------------------------------------
# Yetter-Drinfeld candidates (valid and invalid, substructures always valid)

def yd_regular_action_trivial_coaction(h: HomHopfAlgebra, mu: Matrix | None = None) -> YDModule:
    field = h.field
    n = h.dim
    mu = mu if mu is not None else h.alpha
    mu_inv = mu.inverse()
    # action m.a = (mu alpha^-1)(m a); for mu = alpha this is the regular action
    action = _compose_output(h.mult, mu @ h.alpha_inv)
    coaction = Tensor3.build(field, n, n, h.dim, lambda i, j, c:
                             (mu_inv @ h.alpha_inv).at(j, i) * _unit_coeff(h, c))
    return YDModule(field, n, mu, action, coaction)


def _unit_coeff(h: HomHopfAlgebra, c: int):
    return h.unit[c]


def _compose_output(t: Tensor3, m: Matrix) -> Tensor3:
    field = t.field

    def entry(i, j, k):
        s = field.zero()
        for l in range(t.d3):
            v = t.at(i, j, l)
            if v:
                e = m.at(k, l)
                if e:
                    s = s + e * v
        return s

    return Tensor3.build(field, t.d1, t.d2, t.d3, entry)


def yd_trivial_action_group_coaction(h: HomHopfAlgebra) -> YDModule:
    """For a classical group algebra: action by the counit, coaction by the
    grouplike grading of the regular basis."""
    field = h.field
    n = h.dim
    action = Tensor3.build(field, n, n, n,
                           lambda m, a, mm: h.counit[a] if mm == m else field.zero())
    coaction = Tensor3.build(field, n, n, n,
                             lambda i, j, c: field.one() if i == j == c else field.zero())
    return YDModule(field, n, Matrix.identity(field, n), action, coaction)


def yd_both_regular(h: HomHopfAlgebra) -> YDModule:
    """Multiplication action plus comultiplication coaction; generally not
    Yetter-Drinfeld, but both substructures are valid."""
    return YDModule(h.field, h.dim, h.alpha, h.mult, h.comult)


def yd_regular_action_unit_coaction(h: HomHopfAlgebra) -> YDModule:
    """Multiplication action with the coaction m -> alpha^-1(m) (x) 1."""
    field = h.field
    n = h.dim
    coaction = Tensor3.build(field, n, n, n,
                             lambda i, j, c: h.alpha_inv.at(j, i) * h.unit[c])
    return YDModule(field, n, h.alpha, h.mult, coaction)


def yd_direct_sum(m1: YDModule, m2: YDModule) -> YDModule:
    from homhopf.zoo import block_diag
    field = m1.field
    d1, dim = m1.dim, m1.dim + m2.dim
    dh = m1.action.d2

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

    return YDModule(field, dim, block_diag(m1.mu, m2.mu),
                    Tensor3.build(field, dim, dh, dim, act),
                    Tensor3.build(field, dim, dim, dh, coa))
