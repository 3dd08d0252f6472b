"""Dense complex linear algebra shared by the rest of the package.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Site 1 is the
most significant bit of a composite index, so ``kron(a1, a2, ...)`` reads
left to right like a written tensor product.
"""
from __future__ import annotations

import contextlib
import contextvars
import os
from functools import reduce
from typing import Iterator

import numpy as np

from .exceptions import ShapeError, SizeLimitError

DEFAULT_DENSE_CAP = 12
DEFAULT_TOL = 1e-10

ComplexMatrix = np.ndarray

_cap_override: contextvars.ContextVar[int | None] = contextvars.ContextVar(
    "dense_cap_override", default=None
)


def dense_cap() -> int:
    """Largest qubit count for which dense operators may be built.

    Resolution order: an active :func:`dense_cap_override`, then the
    ``DENSE_CAP`` environment variable, then ``DEFAULT_DENSE_CAP``.
    """
    override = _cap_override.get()
    if override is not None:
        return override
    env = os.environ.get("DENSE_CAP")
    if env:
        return int(env)
    return DEFAULT_DENSE_CAP


@contextlib.contextmanager
def dense_cap_override(n_qubits: int) -> Iterator[None]:
    token = _cap_override.set(int(n_qubits))
    try:
        yield
    finally:
        _cap_override.reset(token)


def check_qubits(n_qubits: int) -> None:
    cap = dense_cap()
    if n_qubits > cap:
        raise SizeLimitError(
            f"{n_qubits} qubits exceeds the dense cap of {cap} "
            f"({2**cap}x{2**cap}); set DENSE_CAP to raise it"
        )


def check_dim(dim: int) -> None:
    cap = dense_cap()
    if dim > 2**cap:
        raise SizeLimitError(f"dimension {dim} exceeds the dense cap 2**{cap}")


def as_matrix(a) -> ComplexMatrix:
    """Coerce to a square complex128 array, raising ShapeError otherwise."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {m.shape}")
    return m


def frozen(a: np.ndarray) -> np.ndarray:
    """Return ``a`` with its write flag cleared."""
    a.setflags(write=False)
    return a


def kron(a, b, *more) -> ComplexMatrix:
    mats = [as_matrix(m) for m in (a, b, *more)]
    check_dim(int(np.prod([m.shape[0] for m in mats])))
    return reduce(np.kron, mats)


def kron_all(mats) -> ComplexMatrix:
    """Kronecker product of a non-empty sequence, first factor most significant."""
    mats = list(mats)
    if not mats:
        raise ShapeError("kron_all needs at least one factor")
    if len(mats) == 1:
        return as_matrix(mats[0]).copy()
    return kron(*mats)


def adjoint(a) -> ComplexMatrix:
    return as_matrix(a).conj().T


def trace(a) -> complex:
    return complex(np.trace(as_matrix(a)))


def matmul(a, b) -> ComplexMatrix:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise ShapeError(f"dimension mismatch {a.shape} vs {b.shape}")
    return a @ b


def trace_product(a, b) -> complex:
    """``trace(a @ b)`` without forming the product."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise ShapeError(f"dimension mismatch {a.shape} vs {b.shape}")
    return complex(np.einsum("ij,ji->", a, b))


def hermitian_re(f) -> ComplexMatrix:
    """Operator real part ``(f + f^dagger) / 2``."""
    f = as_matrix(f)
    return (f + f.conj().T) / 2


def hermitian_im(f) -> ComplexMatrix:
    """Operator imaginary part ``(f - f^dagger) / 2i``."""
    f = as_matrix(f)
    return (f - f.conj().T) / 2j


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    a = as_matrix(a)
    return bool(np.max(np.abs(a - a.conj().T), initial=0.0) <= tol)


def max_abs_diff(a, b) -> float:
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise ShapeError(f"dimension mismatch {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b), initial=0.0))


def allclose(a, b, tol: float = DEFAULT_TOL) -> bool:
    """Absolute entrywise comparison."""
    return max_abs_diff(a, b) <= tol


def basis_ket(index: int, n_qubits: int) -> np.ndarray:
    check_qubits(n_qubits)
    v = np.zeros(2**n_qubits, dtype=np.complex128)
    v[index] = 1.0
    return v
