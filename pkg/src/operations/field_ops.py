"""Exact linear algebra over GF(p) and GF(p^m).

This module provides:
- parse_field_spec / field_spec: build a certified FieldSpec ("p" or "p^m")
- get_field: vectorized element arithmetic (numpy int64 arrays)
- MatrixOverField: dense matrices with a sparse-triple view
- rank, kernel_dim, kernel_basis, sum_dim, image_dim_mod: Gaussian elimination
- generic_extension: smallest field of the same characteristic large enough for genericity
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from src.exceptions import FieldMismatch, FieldSpecError, FieldTooSmall, ShapeMismatch
from src.models.schemas import FIELD_SPEC_PATTERN, FieldSpec, field_size_problem
from src.utils.config import settings
from src.utils.modular import is_irreducible, is_prime, is_primitive


# ---------------------------------------------------------------------------
# Field construction
# ---------------------------------------------------------------------------


@lru_cache(maxsize=64)
def find_modulus(p: int, m: int, seed: int = 0) -> tuple[int, ...]:
    """Search for a monic irreducible polynomial of degree m over GF(p) with x primitive.

    The search draws coefficients from a seeded generator, so the chosen modulus
    is a deterministic function of (p, m, seed).
    """
    if m == 1:
        return (0, 1)
    rng = np.random.default_rng(seed)
    while True:
        low = [int(c) for c in rng.integers(0, p, size=m)]
        if low[0] == 0:
            continue
        candidate = tuple(low) + (1,)
        if is_irreducible(candidate, p) and is_primitive(candidate, p):
            return candidate


def field_spec(p: int, m: int = 1) -> FieldSpec:
    """Build GF(p^m) with the configured modulus search seed.

    Raises:
        FieldSpecError: If p is not prime or the field exceeds the supported size
    """
    problem = field_size_problem(p, m)
    if problem:
        raise FieldSpecError(problem)
    if not is_prime(p):
        raise FieldSpecError(f"{p} is not prime")
    return FieldSpec(p=p, m=m, modulus=find_modulus(p, m, settings.field_search_seed))


def parse_field_spec(text: str) -> FieldSpec:
    """Parse "p" or "p^m".

    Raises:
        FieldSpecError: On malformed input or unsupported fields
    """
    match = FIELD_SPEC_PATTERN.match(text)
    if not match:
        raise FieldSpecError(f"field must look like p or p^m (got '{text}')")
    p = int(match.group(1))
    m = int(match.group(2)) if match.group(2) is not None else 1
    return field_spec(p, m)


def generic_extension(spec: FieldSpec) -> FieldSpec:
    """Smallest GF(p^m) of the same characteristic with p^m >= min_generic_field_size.

    Raises:
        FieldTooSmall: If no supported extension is large enough
    """
    if spec.q >= settings.min_generic_field_size:
        return spec
    if spec.p >= settings.min_generic_field_size:
        return field_spec(spec.p)
    m = 1
    while spec.p**m < settings.min_generic_field_size:
        m += 1
    if spec.p**m > settings.max_extension_field_size:
        raise FieldTooSmall(f"no supported extension of GF({spec.p}) reaches 2^16 elements")
    return field_spec(spec.p, m)


# ---------------------------------------------------------------------------
# Element arithmetic
# ---------------------------------------------------------------------------


class GaloisField:
    """Vectorized arithmetic on integer-encoded field elements."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.m = spec.m
        self.q = spec.q
        self.minus_one = self.p - 1
        if self.m > 1:
            self._powers = self.p ** np.arange(self.m, dtype=np.int64)
            self._exp, self._log = self._build_tables()

    def _build_tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Exp/log tables with respect to the primitive element x."""
        p, m, q = self.p, self.m, self.q
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        top_unit = p ** (m - 1)
        low = self.spec.modulus[:-1]
        packed_modulus = sum(c << k for k, c in enumerate(self.spec.modulus))
        value = 1
        for i in range(q - 1):
            exp[i] = value
            log[value] = i
            if p == 2:
                value <<= 1
                if value >> m:
                    value ^= packed_modulus
            else:
                top = value // top_unit
                shifted = (value % top_unit) * p
                digits = [((shifted // p**k) - top * low[k]) % p for k in range(m)]
                value = sum(dk * p**k for k, dk in enumerate(digits))
        exp[q - 1:] = exp[: q - 1]
        return exp, log

    def _digits(self, a: np.ndarray) -> np.ndarray:
        return (a[..., None] // self._powers) % self.p

    def _undigits(self, digits: np.ndarray) -> np.ndarray:
        return (digits % self.p) @ self._powers

    def add(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self._undigits(self._digits(a) + self._digits(b))

    def sub(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self._undigits(self._digits(a) - self._digits(b))

    def neg(self, a) -> np.ndarray:
        return self.sub(np.zeros_like(np.asarray(a, dtype=np.int64)), a)

    def mul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a * b) % self.p
        product = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, product)

    def inv(self, a: int) -> int:
        a = int(a)
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return int(self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)])

    def random(self, rng: np.random.Generator, shape: int | tuple[int, ...]) -> np.ndarray:
        return rng.integers(0, self.q, size=shape, dtype=np.int64)


@lru_cache(maxsize=32)
def get_field(spec: FieldSpec) -> GaloisField:
    """Arithmetic object for a field, cached per spec."""
    return GaloisField(spec)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MatrixOverField:
    """Dense matrix over a finite field.

    Entries are stored as an int64 array of encoded elements; `triples()` gives
    the sparse (row, col, value) view of the nonzero entries.
    """

    field: FieldSpec
    data: np.ndarray

    def __post_init__(self) -> None:
        if self.data.ndim != 2:
            raise ShapeMismatch(f"expected a 2-d array, got shape {self.data.shape}")
        if self.data.size and (self.data.min() < 0 or self.data.max() >= self.field.q):
            raise ValueError(f"entries must lie in [0, {self.field.q})")

    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def cols(self) -> int:
        return int(self.data.shape[1])

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> "MatrixOverField":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def from_rows(
        cls, rows: Iterable[Iterable[int]], field: FieldSpec, cols: int | None = None
    ) -> "MatrixOverField":
        data = np.array([list(r) for r in rows], dtype=np.int64)
        if data.size == 0:
            data = np.zeros((data.shape[0] if data.ndim == 2 else 0, cols or 0), dtype=np.int64)
        return cls(field, data)

    @classmethod
    def from_triples(
        cls, rows: int, cols: int, triples: Iterable[tuple[int, int, int]], field: FieldSpec
    ) -> "MatrixOverField":
        data = np.zeros((rows, cols), dtype=np.int64)
        for r, c, v in triples:
            data[r, c] = v
        return cls(field, data)

    def triples(self) -> Iterator[tuple[int, int, int]]:
        for r, c in zip(*np.nonzero(self.data)):
            yield int(r), int(c), int(self.data[r, c])

    def transpose(self) -> "MatrixOverField":
        return MatrixOverField(self.field, self.data.T.copy())

    def column(self, j: int) -> np.ndarray:
        return self.data[:, j].copy()


def _same_field(*matrices: MatrixOverField) -> FieldSpec:
    spec = matrices[0].field
    for other in matrices[1:]:
        if other.field != spec:
            raise FieldMismatch(f"GF({spec}) vs GF({other.field})")
    return spec


def hstack(*matrices: MatrixOverField) -> MatrixOverField:
    """Concatenate column blocks with the same number of rows."""
    spec = _same_field(*matrices)
    if len({m.rows for m in matrices}) > 1:
        raise ShapeMismatch(f"row counts differ: {[m.rows for m in matrices]}")
    return MatrixOverField(spec, np.hstack([m.data for m in matrices]))


def matmul(a: MatrixOverField, b: MatrixOverField) -> MatrixOverField:
    spec = _same_field(a, b)
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.data.shape} by {b.data.shape}")
    gf = get_field(spec)
    acc = np.zeros((a.rows, b.cols), dtype=np.int64)
    for k in range(a.cols):
        if a.data[:, k].any() and b.data[k].any():
            acc = gf.add(acc, gf.mul(a.data[:, k:k + 1], b.data[k:k + 1, :]))
    return MatrixOverField(spec, acc)


def _echelon(gf: GaloisField, data: np.ndarray, reduced: bool) -> tuple[np.ndarray, list[int]]:
    """Row echelon form (reduced if asked) and pivot columns."""
    a = data.copy()
    n_rows, n_cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        if a[r, c] != 1:
            a[r] = gf.mul(a[r], gf.inv(int(a[r, c])))
        if reduced:
            targets = np.flatnonzero(a[:, c])
            targets = targets[targets != r]
        else:
            targets = r + 1 + np.flatnonzero(a[r + 1:, c])
        if targets.size:
            a[targets] = gf.sub(a[targets], gf.mul(a[targets, c][:, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def rank(matrix: MatrixOverField) -> int:
    """Rank over the matrix's field."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    data = matrix.data if matrix.rows <= matrix.cols else matrix.data.T
    _, pivots = _echelon(get_field(matrix.field), data, reduced=False)
    return len(pivots)


def kernel_dim(matrix: MatrixOverField) -> int:
    """Dimension of the right kernel (cols - rank)."""
    return matrix.cols - rank(matrix)


def kernel_basis(matrix: MatrixOverField) -> MatrixOverField:
    """Columns spanning the right kernel, one per free column of the RREF."""
    gf = get_field(matrix.field)
    n = matrix.cols
    if matrix.rows == 0:
        return MatrixOverField(matrix.field, np.eye(n, dtype=np.int64))
    reduced, pivots = _echelon(gf, matrix.data, reduced=True)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for row, pc in enumerate(pivots):
            basis[pc, k] = int(gf.neg(reduced[row, f]))
    return MatrixOverField(matrix.field, basis)


def sum_dim(u: MatrixOverField, v: MatrixOverField) -> int:
    """dim(col(U) + col(V))."""
    return rank(hstack(u, v))


def image_dim_mod(a: MatrixOverField, b: MatrixOverField) -> int:
    """dim((col(A) + col(B)) / col(B))."""
    return rank(hstack(a, b)) - rank(b)
