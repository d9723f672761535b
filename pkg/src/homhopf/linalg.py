"""Exact dense linear algebra over the rationals and prime fields.

Scalars are ``fractions.Fraction`` (arbitrary-precision rationals) or
:class:`GFElement` (canonical representatives in ``[0, p)``).  Matrices and
order-3 tensors are dense, row-major and treated as immutable; every
operation returns a fresh object.

All solving is deterministic so that serialized results are reproducible:
reduced row echelon form picks the leftmost pivot column and the first
nonzero row, particular solutions set every free variable to zero, and
nullspace basis vectors are emitted in increasing free-column order with
entry ``-1`` at the free coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class GFElement:
    """An element of the prime field GF(p), stored as an int in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return GFElement(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GFElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GFElement(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GFElement(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GFElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.value == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return GFElement(self.value * pow(other.value, self.p - 2, self.p), self.p)

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"GF({self.p}):{self.value}"

    def __str__(self):
        return str(self.value)


Scalar = Fraction | GFElement


@dataclass(frozen=True)
class Field:
    """Coefficient field descriptor: the rationals (``p is None``) or GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not (self.p < 2**31 and _is_prime(self.p)):
                raise ValueError(f"modulus {self.p} is not a prime below 2**31")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def zero(self) -> Scalar:
        return Fraction(0) if self.p is None else GFElement(0, self.p)

    def one(self) -> Scalar:
        return Fraction(1) if self.p is None else GFElement(1, self.p)

    def of(self, x) -> Scalar:
        """Coerce an int, string ("3/2", "5"), Fraction or element into the field."""
        if isinstance(x, GFElement):
            if self.p != x.p:
                raise ValueError(f"element of GF({x.p}) in field {self}")
            return x
        if isinstance(x, Fraction):
            if self.p is None:
                return x
            num = GFElement(x.numerator, self.p)
            den = GFElement(x.denominator, self.p)
            return num / den
        if isinstance(x, int):
            return Fraction(x) if self.p is None else GFElement(x, self.p)
        if isinstance(x, str):
            return self.of(Fraction(x))
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    def format(self, x: Scalar) -> str:
        return str(x)

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


# ---------------------------------------------------------------------------
# vectors: plain lists of scalars

def vec_zero(field: Field, n: int) -> list:
    return [field.zero()] * n


def unit_vector(field: Field, n: int, i: int) -> list:
    v = [field.zero()] * n
    v[i] = field.one()
    return v


def vec_add(u: Sequence, v: Sequence) -> list:
    return [a + b for a, b in zip(u, v, strict=True)]


def vec_sub(u: Sequence, v: Sequence) -> list:
    return [a - b for a, b in zip(u, v, strict=True)]


def vec_scale(s: Scalar, v: Sequence) -> list:
    return [s * a for a in v]


def vec_is_zero(v: Sequence) -> bool:
    return not any(v)


def vec_tensor(u: Sequence, v: Sequence) -> list:
    """Kronecker product of coordinate vectors: index (i, j) -> i*len(v) + j."""
    out = []
    for a in u:
        out.extend(a * b for b in v)
    return out


@dataclass(frozen=True)
class Matrix:
    """Dense matrix; ``entries[r*cols + c]`` is the (r, c) entry.

    Columns are images of basis vectors: ``M.column(j)`` is ``M`` applied to
    the j-th unit vector.
    """

    field: Field
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    # -- constructors --------------------------------------------------
    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        ent = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            ent.extend(field.of(x) for x in row)
        return cls(field, r, c, tuple(ent))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return cls(field, n, n, tuple(o if i == j else z for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, (field.zero(),) * (rows * cols))

    @classmethod
    def build(cls, field: Field, rows: int, cols: int, fn: Callable[[int, int], Scalar]) -> "Matrix":
        return cls(field, rows, cols, tuple(fn(r, c) for r in range(rows) for c in range(cols)))

    # -- access ---------------------------------------------------------
    def at(self, r: int, c: int) -> Scalar:
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> list:
        return list(self.entries[r * self.cols : (r + 1) * self.cols])

    def column(self, c: int) -> list:
        return [self.entries[r * self.cols + c] for r in range(self.rows)]

    def to_rows(self) -> list:
        return [self.row(r) for r in range(self.rows)]

    def nonzero(self) -> Iterator[tuple]:
        for r in range(self.rows):
            base = r * self.cols
            for c in range(self.cols):
                e = self.entries[base + c]
                if e:
                    yield r, c, e

    # -- arithmetic -----------------------------------------------------
    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        zero = self.field.zero()
        out = [zero] * (self.rows * other.cols)
        for r in range(self.rows):
            base = r * self.cols
            obase = r * other.cols
            for k in range(self.cols):
                a = self.entries[base + k]
                if not a:
                    continue
                kbase = k * other.cols
                for c in range(other.cols):
                    b = other.entries[kbase + c]
                    if b:
                        out[obase + c] = out[obase + c] + a * b
        return Matrix(self.field, self.rows, other.cols, tuple(out))

    def add(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.field, self.rows, self.cols,
                      tuple(a + b for a, b in zip(self.entries, other.entries)))

    def sub(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.field, self.rows, self.cols,
                      tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, s: Scalar) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, tuple(s * a for a in self.entries))

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; row/column index (i, j) -> i*other.dim + j."""
        R, C = self.rows * other.rows, self.cols * other.cols
        zero = self.field.zero()
        out = [zero] * (R * C)
        for i, k, a in self.nonzero():
            for j, l, b in other.nonzero():
                out[(i * other.rows + j) * C + (k * other.cols + l)] = a * b
        return Matrix(self.field, R, C, tuple(out))

    def apply(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} applied to {self.rows}x{self.cols} matrix")
        out = [self.field.zero()] * self.rows
        for c, x in enumerate(v):
            if not x:
                continue
            for r in range(self.rows):
                e = self.entries[r * self.cols + c]
                if e:
                    out[r] = out[r] + e * x
        return out

    def power(self, k: int) -> "Matrix":
        """Integer power; negative powers use the inverse (must exist)."""
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        base = self
        if k < 0:
            inv = self.inverse()
            if inv is None:
                raise ValueError("negative power of a singular matrix")
            base, k = inv, -k
        out = Matrix.identity(self.field, self.rows)
        for _ in range(k):
            out = out @ base
        return out

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        one = self.field.one()
        for r in range(self.rows):
            for c in range(self.cols):
                e = self.at(r, c)
                if r == c:
                    if e != one:
                        return False
                elif e:
                    return False
        return True

    # -- elimination ----------------------------------------------------
    def rref(self) -> tuple["Matrix", tuple]:
        """Reduced row echelon form and the pivot columns in increasing order."""
        R, pivots, _ = _rref_rows(self.to_rows(), self.field)
        flat = tuple(x for row in R for x in row)
        return Matrix(self.field, self.rows, self.cols, flat), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> "Matrix | None":
        if self.rows != self.cols:
            return None
        n = self.rows
        aug = [self.row(r) + unit_vector(self.field, n, r) for r in range(n)]
        R, pivots, _ = _rref_rows(aug, self.field)
        if list(pivots[:n]) != list(range(n)):
            return None
        return Matrix(self.field, n, n, tuple(R[r][n + c] for r in range(n) for c in range(n)))


def _rref_rows(rows: list, field: Field) -> tuple[list, list, list]:
    """In-place reduced row echelon form on a list of row lists.

    Returns (rows, pivot columns, transform) where transform records the row
    operations as a matrix T with T @ original == result.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    transform = [unit_vector(field, nrows, r) for r in range(nrows)]
    piv_row = 0
    pivots = []
    for col in range(ncols):
        sel = None
        for r in range(piv_row, nrows):
            if rows[r][col]:
                sel = r
                break
        if sel is None:
            continue
        if sel != piv_row:
            rows[piv_row], rows[sel] = rows[sel], rows[piv_row]
            transform[piv_row], transform[sel] = transform[sel], transform[piv_row]
        inv = field.one() / rows[piv_row][col]
        if inv != field.one():
            rows[piv_row] = [inv * x for x in rows[piv_row]]
            transform[piv_row] = [inv * x for x in transform[piv_row]]
        for r in range(nrows):
            if r == piv_row:
                continue
            f = rows[r][col]
            if f:
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[piv_row])]
                transform[r] = [a - f * b for a, b in zip(transform[r], transform[piv_row])]
        pivots.append(col)
        piv_row += 1
        if piv_row == nrows:
            break
    return rows, pivots, transform


def rref(m: Matrix) -> tuple[Matrix, tuple]:
    return m.rref()


def compose(f: Matrix, g: Matrix) -> Matrix:
    """Matrix product f @ g, i.e. the composite map "f after g"."""
    return f @ g


def tensor(f: Matrix, g: Matrix) -> Matrix:
    """Kronecker product realizing the tensor product of linear maps."""
    return f.kron(g)


@dataclass(frozen=True)
class AffineSolution:
    """Full solution set of A x = b: ``particular + span(nullspace_basis)``.

    ``particular`` has every free variable equal to zero; each basis vector
    carries ``-1`` at its free coordinate.  Empty when infeasible.
    """

    feasible: bool
    particular: tuple
    nullspace_basis: tuple


def solve_affine(a: Matrix, b: Sequence) -> AffineSolution:
    if a.rows != len(b):
        raise ValueError(f"matrix has {a.rows} rows but right-hand side has {len(b)}")
    field = a.field
    n = a.cols
    aug = [a.row(r) + [field.of(b[r])] for r in range(a.rows)]
    R, pivots, _ = _rref_rows(aug, field)
    if n in pivots:
        return AffineSolution(False, (), ())
    particular = vec_zero(field, n)
    for r, col in enumerate(pivots):
        particular[col] = R[r][n]
    pivot_set = set(pivots)
    basis = []
    for j in range(n):
        if j in pivot_set:
            continue
        v = vec_zero(field, n)
        v[j] = -field.one()
        for r, col in enumerate(pivots):
            v[col] = R[r][j]
        basis.append(tuple(v))
    return AffineSolution(True, tuple(particular), tuple(basis))


@dataclass(frozen=True)
class Tensor3:
    """Dense order-3 tensor; entry (i, j, k) lives at ``i*d2*d3 + j*d3 + k``.

    Used for bilinear maps (multiplication ``m[i][j][k]`` = coefficient of
    basis k in the product of basis i and j, actions likewise) and for maps
    into a tensor square (comultiplication ``D[i][j][k]`` = coefficient of
    ``e_j (x) e_k`` in the image of ``e_i``, coactions likewise).
    """

    field: Field
    d1: int
    d2: int
    d3: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.d1 * self.d2 * self.d3:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def zeros(cls, field: Field, d1: int, d2: int, d3: int) -> "Tensor3":
        return cls(field, d1, d2, d3, (field.zero(),) * (d1 * d2 * d3))

    @classmethod
    def build(cls, field: Field, d1: int, d2: int, d3: int,
              fn: Callable[[int, int, int], Scalar]) -> "Tensor3":
        return cls(field, d1, d2, d3,
                   tuple(fn(i, j, k) for i in range(d1) for j in range(d2) for k in range(d3)))

    @classmethod
    def from_nested(cls, field: Field, nested: Sequence) -> "Tensor3":
        d1 = len(nested)
        d2 = len(nested[0]) if d1 else 0
        d3 = len(nested[0][0]) if d2 else 0
        ent = []
        for plane in nested:
            if len(plane) != d2:
                raise ValueError("ragged tensor")
            for row in plane:
                if len(row) != d3:
                    raise ValueError("ragged tensor")
                ent.extend(field.of(x) for x in row)
        return cls(field, d1, d2, d3, tuple(ent))

    def to_nested(self) -> list:
        return [[[self.at(i, j, k) for k in range(self.d3)]
                 for j in range(self.d2)] for i in range(self.d1)]

    def at(self, i: int, j: int, k: int) -> Scalar:
        return self.entries[(i * self.d2 + j) * self.d3 + k]

    def at_pair(self, i: int, j: int) -> list:
        """The slice t[i][j][:], e.g. the product of two basis vectors."""
        base = (i * self.d2 + j) * self.d3
        return list(self.entries[base : base + self.d3])

    def left_slice(self, i: int) -> list:
        """The flattened slice t[i][:][:], e.g. a coproduct of a basis vector."""
        base = i * self.d2 * self.d3
        return list(self.entries[base : base + self.d2 * self.d3])

    def nonzero(self) -> Iterator[tuple]:
        d2, d3 = self.d2, self.d3
        for i in range(self.d1):
            for j in range(d2):
                base = (i * d2 + j) * d3
                for k in range(d3):
                    e = self.entries[base + k]
                    if e:
                        yield i, j, k, e

    def nonzero_of(self, i: int) -> Iterator[tuple]:
        """Nonzero (j, k, value) triples of the slice t[i]."""
        d2, d3 = self.d2, self.d3
        for j in range(d2):
            base = (i * d2 + j) * d3
            for k in range(d3):
                e = self.entries[base + k]
                if e:
                    yield j, k, e

    def apply(self, v: Sequence, w: Sequence) -> list:
        """Evaluate the bilinear map: out[k] = sum_ij t[i][j][k] v[i] w[j]."""
        if len(v) != self.d1 or len(w) != self.d2:
            raise ValueError("operand length mismatch")
        zero = self.field.zero()
        out = [zero] * self.d3
        d2, d3 = self.d2, self.d3
        for i, x in enumerate(v):
            if not x:
                continue
            ibase = i * d2 * d3
            for j, y in enumerate(w):
                if not y:
                    continue
                c = x * y
                base = ibase + j * d3
                for k in range(d3):
                    e = self.entries[base + k]
                    if e:
                        out[k] = out[k] + c * e
        return out

    def apply_left(self, v: Sequence) -> list:
        """Evaluate a map into the tensor square: v -> sum_i v[i] t[i][:][:]."""
        if len(v) != self.d1:
            raise ValueError("operand length mismatch")
        span = self.d2 * self.d3
        out = [self.field.zero()] * span
        for i, x in enumerate(v):
            if not x:
                continue
            base = i * span
            for s in range(span):
                e = self.entries[base + s]
                if e:
                    out[s] = out[s] + x * e
        return out

    def as_map_from_pair(self) -> Matrix:
        """The bilinear map as a matrix V1 (x) V2 -> V3 (column index i*d2+j)."""
        zero = self.field.zero()
        out = [zero] * (self.d3 * self.d1 * self.d2)
        cols = self.d1 * self.d2
        for i, j, k, e in self.nonzero():
            out[k * cols + i * self.d2 + j] = e
        return Matrix(self.field, self.d3, cols, tuple(out))

    def as_map_to_pair(self) -> Matrix:
        """The map into a tensor square as a matrix V1 -> V2 (x) V3."""
        zero = self.field.zero()
        rows = self.d2 * self.d3
        out = [zero] * (rows * self.d1)
        for i, j, k, e in self.nonzero():
            out[(j * self.d3 + k) * self.d1 + i] = e
        return Matrix(self.field, rows, self.d1, tuple(out))


def apply3(t: Tensor3, v: Sequence, w: Sequence) -> list:
    return t.apply(v, w)
