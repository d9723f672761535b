"""Built-in golden structures: cyclic group algebras, Sweedler's
four-dimensional Hopf algebra, their Yau twists, and small helper modules."""

from __future__ import annotations

from math import gcd

from .core import (HomAlgebra, HomCoalgebra, HomComodule, HomHopfAlgebra,
                   HomModule, yau_twist)
from .linalg import Field, Matrix, Tensor3


def group_algebra(n: int, field: Field) -> HomHopfAlgebra:
    """The cyclic group algebra k[Z_n] with identity twist.

    Basis g^0 .. g^(n-1); grouplike comultiplication, antipode g -> g^-1.
    """
    one, zero = field.one(), field.zero()
    mult = Tensor3.build(field, n, n, n,
                         lambda i, j, k: one if k == (i + j) % n else zero)
    comult = Tensor3.build(field, n, n, n,
                           lambda i, j, k: one if i == j == k else zero)
    unit = tuple(one if i == 0 else zero for i in range(n))
    counit = (one,) * n
    antipode = Matrix.build(field, n, n,
                            lambda r, c: one if r == (-c) % n else zero)
    return HomHopfAlgebra(field, n, Matrix.identity(field, n), mult, unit,
                          comult, counit, antipode)


def power_automorphism(n: int, k: int, field: Field) -> Matrix:
    """The Hopf automorphism of k[Z_n] induced by g -> g^k (gcd(k, n) = 1)."""
    if gcd(k, n) != 1:
        raise ValueError(f"g -> g^{k} is not invertible on Z_{n}")
    one, zero = field.one(), field.zero()
    return Matrix.build(field, n, n, lambda r, c: one if r == (k * c) % n else zero)


def twisted_group_algebra(n: int, k: int, field: Field) -> HomHopfAlgebra:
    return yau_twist(group_algebra(n, field), power_automorphism(n, k, field))


def sweedler_h4(field: Field) -> HomHopfAlgebra:
    """Sweedler's Hopf algebra: basis 1, g, x, gx with g^2 = 1, x^2 = 0,
    xg = -gx; Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x."""
    if field.p == 2:
        raise ValueError("needs a field of characteristic different from 2")
    f = field.of
    # multiplication table: row i, column j -> coefficients on (1, g, x, gx)
    table = [
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
        [[0, 0, 1, 0], [0, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0]],
        [[0, 0, 0, 1], [0, 0, -1, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    ]
    mult = Tensor3.from_nested(field, table)

    def plane(*pairs):
        p = [[field.zero()] * 4 for _ in range(4)]
        for j, k, v in pairs:
            p[j][k] = f(v)
        return p

    comult = Tensor3.from_nested(field, [
        plane((0, 0, 1)),                       # Delta(1) = 1 (x) 1
        plane((1, 1, 1)),                       # Delta(g) = g (x) g
        plane((2, 0, 1), (1, 2, 1)),            # Delta(x) = x (x) 1 + g (x) x
        plane((3, 1, 1), (0, 3, 1)),            # Delta(gx) = gx (x) g + 1 (x) gx
    ])
    unit = (f(1), f(0), f(0), f(0))
    counit = (f(1), f(1), f(0), f(0))
    antipode = Matrix.from_rows(field, [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],    # S(gx) = x
        [0, 0, -1, 0],   # S(x) = -gx
    ])
    return HomHopfAlgebra(field, 4, Matrix.identity(field, 4), mult, unit,
                          comult, counit, antipode)


def sweedler_scaling(field: Field, lam) -> Matrix:
    """The Hopf automorphism of Sweedler's algebra fixing 1, g and scaling
    x and gx by ``lam`` (any nonzero scalar)."""
    lam = field.of(lam)
    if not lam:
        raise ValueError("scaling must be nonzero")
    z, o = field.zero(), field.one()
    return Matrix.from_rows(field, [[o, z, z, z], [z, o, z, z],
                                    [z, z, lam, z], [z, z, z, lam]])


def twisted_sweedler(field: Field, lam=2) -> HomHopfAlgebra:
    return yau_twist(sweedler_h4(field), sweedler_scaling(field, lam))


def one_dimensional_hopf(field: Field) -> HomHopfAlgebra:
    one = field.one()
    eye = Matrix.identity(field, 1)
    t = Tensor3(field, 1, 1, 1, (one,))
    return HomHopfAlgebra(field, 1, eye, t, (one,), t, (one,), eye)


# ---------------------------------------------------------------------------
# derived module-style structures

def regular_module(a: HomAlgebra) -> HomModule:
    """A acting on itself by multiplication, twisted by its own alpha."""
    return HomModule(a.field, a.dim, a.alpha, a.mult)


def regular_comodule(c: HomCoalgebra) -> HomComodule:
    """C coacting on itself by comultiplication, twisted by its own gamma."""
    return HomComodule(c.field, c.dim, c.gamma, c.comult)


def trivial_comodule(h: HomHopfAlgebra) -> HomComodule:
    """The one-dimensional comodule 1 -> 1 (x) 1_H."""
    field = h.field
    coaction = Tensor3(field, 1, 1, h.dim, tuple(h.unit))
    return HomComodule(field, 1, Matrix.identity(field, 1), coaction)


def direct_sum_comodules(m1: HomComodule, m2: HomComodule) -> HomComodule:
    if m1.coaction.d3 != m2.coaction.d3:
        raise ValueError("comodules over different coalgebras")
    field = m1.field
    d1, d2, dc = m1.dim, m2.dim, m1.coaction.d3
    d = d1 + d2

    def entry(i, j, k):
        if i < d1 and j < d1:
            return m1.coaction.at(i, j, k)
        if i >= d1 and j >= d1:
            return m2.coaction.at(i - d1, j - d1, k)
        return field.zero()

    coaction = Tensor3.build(field, d, d, dc, entry)
    mu = block_diag(m1.mu, m2.mu)
    return HomComodule(field, d, mu, coaction)


def direct_sum_modules(n1: HomModule, n2: HomModule) -> HomModule:
    if n1.action.d2 != n2.action.d2:
        raise ValueError("modules over different algebras")
    field = n1.field
    d1, d2, da = n1.dim, n2.dim, n1.action.d2
    d = d1 + d2

    def entry(i, a, j):
        if i < d1 and j < d1:
            return n1.action.at(i, a, j)
        if i >= d1 and j >= d1:
            return n2.action.at(i - d1, a, j - d1)
        return field.zero()

    action = Tensor3.build(field, d, da, d, entry)
    return HomModule(field, d, block_diag(n1.mu, n2.mu), action)


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    field = a.field

    def entry(r, c):
        if r < a.rows and c < a.cols:
            return a.at(r, c)
        if r >= a.rows and c >= a.cols:
            return b.at(r - a.rows, c - a.cols)
        return field.zero()

    return Matrix.build(field, a.rows + b.rows, a.cols + b.cols, entry)


def inclusion_matrix(field: Field, total: int, offset: int, dim: int) -> Matrix:
    """Inclusion of a summand of dimension ``dim`` at ``offset`` into k^total."""
    one, zero = field.one(), field.zero()
    return Matrix.build(field, total, dim,
                        lambda r, c: one if r == offset + c else zero)


def projection_matrix(field: Field, total: int, offset: int, dim: int) -> Matrix:
    """Projection of k^total onto the summand at ``offset``."""
    one, zero = field.one(), field.zero()
    return Matrix.build(field, dim, total,
                        lambda r, c: one if c == offset + r else zero)
