"""
Exact dense linear algebra over prime fields GF(p).

Matrices are stored densely (row-major numpy int64, entries reduced mod p)
and all operations are exact: Gaussian elimination with first-nonzero
pivoting, no floating point anywhere.  This is the arithmetic substrate for
every module map, differential and ring-structure morphism in the package.

Restricted to prime fields with p < 2**16 so that entry products fit
comfortably in 64-bit intermediates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_PRIME = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field GF(p), 2 <= p < 2**16.  Primality checked by trial division."""

    p: int

    def __post_init__(self):
        if not (2 <= self.p < MAX_PRIME):
            raise ValueError(f"field characteristic must satisfy 2 <= p < 2^16, got {self.p}")
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def inv(self, a: int) -> int:
        """Multiplicative inverse of a nonzero residue."""
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(p)")
        return pow(a, self.p - 2, self.p)

    def __repr__(self):
        return f"GF({self.p})"


class FpMatrix:
    """A dense matrix over GF(p).  Immutable after construction."""

    __slots__ = ("field", "array")

    def __init__(self, field: FieldSpec, entries):
        a = np.asarray(entries, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError(f"expected a 2-d array of entries, got shape {a.shape}")
        a = np.mod(a, field.p)
        a.setflags(write=False)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "array", a)

    def __setattr__(self, name, value):
        raise AttributeError("FpMatrix is immutable")

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.array.shape

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> FpMatrix:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> FpMatrix:
        return cls(field, np.eye(n, dtype=np.int64))

    def __eq__(self, other):
        return (
            isinstance(other, FpMatrix)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.array, other.array))
        )

    def __hash__(self):
        return hash((self.field, self.shape, self.array.tobytes()))

    def is_zero(self) -> bool:
        return not self.array.any()

    def __add__(self, other: FpMatrix) -> FpMatrix:
        self._check_same_field(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch in addition: {self.shape} vs {other.shape}")
        return FpMatrix(self.field, self.array + other.array)

    def __sub__(self, other: FpMatrix) -> FpMatrix:
        self._check_same_field(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch in subtraction: {self.shape} vs {other.shape}")
        return FpMatrix(self.field, self.array - other.array)

    def __neg__(self) -> FpMatrix:
        return FpMatrix(self.field, -self.array)

    def scale(self, c: int) -> FpMatrix:
        return FpMatrix(self.field, self.array * (c % self.field.p))

    def __matmul__(self, other: FpMatrix) -> FpMatrix:
        return mat_mul(self, other)

    def transpose(self) -> FpMatrix:
        return FpMatrix(self.field, self.array.T)

    def hstack(self, other: FpMatrix) -> FpMatrix:
        self._check_same_field(other)
        return FpMatrix(self.field, np.hstack([self.array, other.array]))

    def column(self, j: int) -> FpMatrix:
        return FpMatrix(self.field, self.array[:, j : j + 1])

    def rank(self) -> int:
        return rank(self)

    def _check_same_field(self, other: FpMatrix):
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __repr__(self):
        return f"FpMatrix({self.field}, shape={self.shape})"


def mat_mul(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    """Exact matrix product mod p."""
    a._check_same_field(b)
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch in product: {a.shape} @ {b.shape}")
    return FpMatrix(a.field, (a.array @ b.array) % a.field.p)


def _row_echelon(field: FieldSpec, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form and pivot columns.  First-nonzero pivoting."""
    p = field.p
    r = m.astype(np.int64).copy() % p
    nrows, ncols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        found = row + int(nz[0])
        if found != row:
            r[[row, found]] = r[[found, row]]
        inv = field.inv(int(r[row, col]))
        r[row] = (r[row] * inv) % p
        others = np.nonzero(r[:, col])[0]
        for i in others:
            if i != row:
                r[i] = (r[i] - r[i, col] * r[row]) % p
        pivots.append(col)
        row += 1
    return r, pivots


def rank(a: FpMatrix) -> int:
    """Rank over GF(p) via row reduction."""
    _, pivots = _row_echelon(a.field, a.array)
    return len(pivots)


def kernel_basis(a: FpMatrix) -> list[FpMatrix]:
    """Basis of the right null space {v : a v = 0}, as column vectors.

    Size of the basis equals cols - rank (rank-nullity).
    """
    field = a.field
    r, pivots = _row_echelon(field, a.array)
    ncols = a.cols
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for j in free:
        v = np.zeros((ncols, 1), dtype=np.int64)
        v[j, 0] = 1
        for i, pc in enumerate(pivots):
            v[pc, 0] = (-int(r[i, j])) % field.p
        basis.append(FpMatrix(field, v))
    return basis


def solve_space(a: FpMatrix, b: FpMatrix) -> tuple[FpMatrix, list[FpMatrix]] | None:
    """Full affine solution set of aX = b, solved per column of b.

    Returns (particular solution X0 with a X0 = b, kernel basis of a), or
    None when the system is inconsistent.
    """
    a._check_same_field(b)
    if a.rows != b.rows:
        raise ValueError(f"dimension mismatch in solve: {a.shape} vs rhs {b.shape}")
    field = a.field
    aug = np.hstack([a.array, b.array])
    r, pivots = _row_echelon(field, aug)
    # A pivot in the augmented block means some column of b is not in the
    # column space of a.
    if any(pc >= a.cols for pc in pivots):
        return None
    x = np.zeros((a.cols, b.cols), dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc, :] = r[i, a.cols :]
    return FpMatrix(field, x), kernel_basis(a)


def from_columns(field: FieldSpec, columns: list[FpMatrix], rows: int) -> FpMatrix:
    """Assemble column vectors into a matrix (empty list gives a rows x 0 matrix)."""
    if not columns:
        return FpMatrix(field, np.zeros((rows, 0), dtype=np.int64))
    return FpMatrix(field, np.hstack([c.array for c in columns]))
