"""Sparse complex operators over a named, ordered basis.

A thin immutable wrapper around a scipy CSR matrix in canonical form
(sorted indices, summed duplicates), which fixes a deterministic storage
order for reproducible output and golden tests. All inter-module operator
traffic uses this type.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp


def _canonical(matrix: sp.spmatrix) -> sp.csr_matrix:
    m = sp.csr_matrix(matrix, dtype=complex)
    m.sum_duplicates()
    m.sort_indices()
    m.eliminate_zeros()
    return m


@dataclass(frozen=True)
class SparseOperator:
    """Square sparse complex matrix plus the labels of its basis states."""

    matrix: sp.csr_matrix
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", _canonical(self.matrix))
        n, m = self.matrix.shape
        if n != m:
            raise ValueError(f"operator must be square, got {self.matrix.shape}")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("label count does not match dimension")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_coo(rows, cols, vals, dim: int, labels=None) -> "SparseOperator":
        m = sp.coo_matrix((vals, (rows, cols)), shape=(dim, dim), dtype=complex)
        return SparseOperator(m, labels)

    @staticmethod
    def identity(dim: int, labels=None) -> "SparseOperator":
        return SparseOperator(sp.identity(dim, dtype=complex, format="csr"), labels)

    @staticmethod
    def diagonal(values, labels=None) -> "SparseOperator":
        return SparseOperator(sp.diags(np.asarray(values, dtype=complex)), labels)

    @staticmethod
    def zeros(dim: int, labels=None) -> "SparseOperator":
        return SparseOperator(sp.csr_matrix((dim, dim), dtype=complex), labels)

    # -- basic queries ----------------------------------------------------

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def nnz(self) -> int:
        return self.matrix.nnz

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def max_abs(self) -> float:
        if self.matrix.nnz == 0:
            return 0.0
        return float(np.max(np.abs(self.matrix.data)))

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return (self - self.dagger()).max_abs() <= tol

    # -- algebra ----------------------------------------------------------

    def _wrap(self, matrix) -> "SparseOperator":
        return SparseOperator(matrix, self.labels)

    def __add__(self, other: "SparseOperator") -> "SparseOperator":
        return self._wrap(self.matrix + other.matrix)

    def __sub__(self, other: "SparseOperator") -> "SparseOperator":
        return self._wrap(self.matrix - other.matrix)

    def __mul__(self, scalar: complex) -> "SparseOperator":
        return self._wrap(self.matrix * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "SparseOperator":
        return self._wrap(-self.matrix)

    def __matmul__(self, other: "SparseOperator") -> "SparseOperator":
        return self._wrap(self.matrix @ other.matrix)

    def dagger(self) -> "SparseOperator":
        return self._wrap(self.matrix.conj().T)

    def commutator(self, other: "SparseOperator") -> "SparseOperator":
        return self._wrap(self.matrix @ other.matrix - other.matrix @ self.matrix)

    def anticommutator(self, other: "SparseOperator") -> "SparseOperator":
        return self._wrap(self.matrix @ other.matrix + other.matrix @ self.matrix)

    def apply(self, vec: np.ndarray) -> np.ndarray:
        return self.matrix @ vec

    def expectation(self, vec: np.ndarray) -> float:
        return float(np.real(np.vdot(vec, self.matrix @ vec)))


def kron(a: SparseOperator, b: SparseOperator) -> SparseOperator:
    labels = None
    if a.labels is not None and b.labels is not None:
        labels = tuple(f"{la}|{lb}" for la in a.labels for lb in b.labels)
    return SparseOperator(sp.kron(a.matrix, b.matrix, format="csr"), labels)


def kron_chain(ops: list[SparseOperator]) -> SparseOperator:
    out = ops[0]
    for op in ops[1:]:
        out = kron(out, op)
    return out
