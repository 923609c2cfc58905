"""Exact dense linear algebra over prime fields GF(p).

Vectors are rows and linear maps act on the right, ``v -> v @ M``.  Matrices
with zero rows or zero columns are ordinary values; every routine here
handles them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

# keeps p*p*n inside int64 for the matrix sizes this package deals with
MAX_PRIME = 1 << 25


def is_prime(n: int) -> bool:
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


@dataclass(frozen=True)
class PrimeField:
    """The field GF(p)."""

    p: int = 3

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"GF({self.p}): modulus is not prime")
        if self.p >= MAX_PRIME:
            raise ValueError(f"GF({self.p}): modulus too large (limit {MAX_PRIME})")

    def __str__(self) -> str:
        return f"GF({self.p})"

    def reduce(self, value: int) -> int:
        return int(value) % self.p

    def inv(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(value, -1, self.p)

    def elements(self) -> range:
        return range(self.p)


class Matrix:
    """Immutable dense matrix over GF(p)."""

    __slots__ = ("_a", "p")

    def __init__(self, entries, p: int, shape: tuple[int, int] | None = None):
        arr = np.array(entries, dtype=np.int64)
        if shape is not None:
            arr = arr.reshape(shape)
        elif arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError(f"matrix entries must be 2-dimensional, got shape {arr.shape}")
        arr = np.mod(arr, p)
        arr.flags.writeable = False
        self._a = arr
        self.p = p

    @classmethod
    def _wrap(cls, arr: np.ndarray, p: int) -> Matrix:
        m = cls.__new__(cls)
        arr = np.mod(arr, p).astype(np.int64, copy=False)
        arr.flags.writeable = False
        m._a = arr
        m.p = p
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> Matrix:
        return cls._wrap(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n: int, p: int) -> Matrix:
        return cls._wrap(np.eye(n, dtype=np.int64), p)

    @classmethod
    def hstack(cls, blocks: Sequence[Matrix], rows: int, p: int) -> Matrix:
        if not blocks:
            return cls.zeros(rows, 0, p)
        return cls._wrap(np.hstack([b._a for b in blocks]), p)

    @classmethod
    def vstack(cls, blocks: Sequence[Matrix], cols: int, p: int) -> Matrix:
        if not blocks:
            return cls.zeros(0, cols, p)
        return cls._wrap(np.vstack([b._a for b in blocks]), p)

    @classmethod
    def block_diag(cls, blocks: Sequence[Matrix], p: int) -> Matrix:
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = np.zeros((rows, cols), dtype=np.int64)
        r = c = 0
        for b in blocks:
            out[r:r + b.rows, c:c + b.cols] = b._a
            r += b.rows
            c += b.cols
        return cls._wrap(out, p)

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the entries."""
        return self._a

    @property
    def T(self) -> Matrix:
        return Matrix._wrap(self._a.T.copy(), self.p)

    def tolist(self) -> list[list[int]]:
        return self._a.tolist()

    def is_zero(self) -> bool:
        return not self._a.any()

    def row(self, i: int) -> Matrix:
        return Matrix._wrap(self._a[i:i + 1].copy(), self.p)

    def take_rows(self, idx: Iterable[int]) -> Matrix:
        idx = list(idx)
        return Matrix._wrap(self._a[idx].reshape(len(idx), self.cols), self.p)

    def take_cols(self, idx: Iterable[int]) -> Matrix:
        idx = list(idx)
        return Matrix._wrap(self._a[:, idx].reshape(self.rows, len(idx)), self.p)

    def _check(self, other: Matrix) -> None:
        if self.p != other.p:
            raise ValueError(f"field mismatch: GF({self.p}) vs GF({other.p})")

    def __matmul__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Matrix._wrap(self._a @ other._a, self.p)

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix._wrap(self._a + other._a, self.p)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        return Matrix._wrap(self._a - other._a, self.p)

    def __neg__(self) -> Matrix:
        return Matrix._wrap(-self._a, self.p)

    def scale(self, c: int) -> Matrix:
        return Matrix._wrap(self._a * (int(c) % self.p), self.p)

    def power(self, k: int) -> Matrix:
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = Matrix.identity(self.rows, self.p)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and np.array_equal(self._a, other._a)

    def __hash__(self) -> int:
        return hash((self.p, self.shape, self._a.tobytes()))

    def __repr__(self) -> str:
        return f"Matrix({self.tolist()}, p={self.p}, shape={self.shape})"

    def rank(self) -> int:
        return len(rref(self)[1])


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and the list of pivot columns."""
    p = m.p
    a = m.array.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return Matrix._wrap(a, p), pivots


def row_basis(m: Matrix) -> Matrix:
    """Rows of the reduced echelon form spanning the row space of ``m``."""
    r, piv = rref(m)
    return r.take_rows(range(len(piv)))


def kernel_basis(m: Matrix) -> Matrix:
    """Basis (as rows) of the left null space ``{v : v @ m == 0}``."""
    # left kernel of m is the right kernel of m.T
    t = m.T
    r, piv = rref(t)
    n = t.cols
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    ra = r.array
    for k, f in enumerate(free):
        out[k, f] = 1
        for i, pc in enumerate(piv):
            out[k, pc] = -ra[i, f]
    return Matrix._wrap(out, m.p)


def solve_left(a: Matrix, b: Matrix) -> Matrix | None:
    """Some ``x`` with ``x @ a == b``, or ``None`` when no solution exists."""
    if a.cols != b.cols:
        raise ValueError(f"solve_left: column mismatch {a.shape} vs {b.shape}")
    p = a.p
    # x @ a = b  <=>  a.T @ x.T = b.T ; reduce the augmented system [a.T | b.T]
    aug = Matrix.hstack([a.T, b.T], a.cols, p)
    r, piv = rref(aug)
    n = a.rows
    if any(c >= n for c in piv):
        return None
    ra = r.array
    x = np.zeros((n, b.rows), dtype=np.int64)
    for i, pc in enumerate(piv):
        x[pc] = ra[i, n:]
    return Matrix._wrap(x.T.copy(), p)


def is_invertible(m: Matrix) -> bool:
    return m.rows == m.cols and m.rank() == m.rows


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    x = solve_left(m, Matrix.identity(m.rows, m.p))
    if x is None:
        raise ZeroDivisionError("matrix is singular")
    return x


def complement_rows(basis: Matrix) -> Matrix:
    """Standard unit rows completing the (independent) rows of ``basis`` to a basis."""
    _, piv = rref(basis)
    n = basis.cols
    free = [c for c in range(n) if c not in set(piv)]
    return Matrix.identity(n, basis.p).take_rows(free)


def in_row_space(v: Matrix, basis: Matrix) -> bool:
    return solve_left(basis, v) is not None
