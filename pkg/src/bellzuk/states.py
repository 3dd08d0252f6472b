"""Pure and mixed states: GHZ kets, the two-qubit Bell state, its noisy
mixture with white noise, and tensor powers of that mixture."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import numerics as nm
from .exceptions import DomainError, ShapeError


@dataclass(frozen=True)
class Ket:
    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.size != 2**self.n_qubits:
            raise ShapeError(f"{amps.size} amplitudes for {self.n_qubits} qubits")
        if abs(np.vdot(amps, amps).real - 1.0) > 1e-12:
            raise DomainError("ket is not normalised")
        object.__setattr__(self, "amplitudes", nm.frozen(amps.copy()))

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def inner(self, other: "Ket") -> complex:
        """``<self|other>``."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True)
class DensityOperator:
    n_qubits: int
    matrix: np.ndarray

    def __post_init__(self):
        m = nm.as_matrix(self.matrix)
        if m.shape[0] != 2**self.n_qubits:
            raise ShapeError(f"dimension {m.shape[0]} for {self.n_qubits} qubits")
        object.__setattr__(self, "matrix", nm.frozen(m.copy()))

    @property
    def dim(self) -> int:
        return 2**self.n_qubits

    def is_hermitian(self, tol: float = 1e-10) -> bool:
        return nm.is_hermitian(self.matrix, tol)

    def has_unit_trace(self, tol: float = 1e-10) -> bool:
        return abs(nm.trace(self.matrix) - 1.0) <= tol

    def is_psd(self, tol: float = 1e-10) -> bool:
        """PSD test by Cholesky factorisation of ``rho + tol * I``.

        A matrix with an eigenvalue below ``-tol`` has no Cholesky factor
        after the shift, so success certifies all eigenvalues >= -tol.
        """
        shifted = self.matrix + tol * np.eye(self.dim)
        try:
            np.linalg.cholesky((shifted + shifted.conj().T) / 2)
        except np.linalg.LinAlgError:
            return False
        return True

    def is_valid(self, tol: float = 1e-10) -> bool:
        return self.is_hermitian(tol) and self.has_unit_trace(tol) and self.is_psd(tol)


def check_visibility(v: float) -> float:
    v = float(v)
    if not 0.0 <= v <= 1.0:
        raise DomainError(f"visibility must lie in [0, 1], got {v}")
    return v


def ghz(n_qubits: int, phase: float = 0.0, sign: int = 1) -> Ket:
    """``(|0...0> + sign * exp(i*phase) |1...1>) / sqrt(2)``."""
    if n_qubits < 1:
        raise DomainError("ghz needs at least one qubit")
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    nm.check_qubits(n_qubits)
    amps = np.zeros(2**n_qubits, dtype=np.complex128)
    amps[0] = 1 / np.sqrt(2)
    amps[-1] = sign * np.exp(1j * phase) / np.sqrt(2)
    return Ket(n_qubits, amps)


def bell_psi() -> Ket:
    """Two-qubit Bell state ``(|00> + i|11>) / sqrt(2)``.

    With this phase, ``<XY> = <YX> = 1`` and ``<XX> = <YY> = 0``.
    """
    amps = np.array([1, 0, 0, 1j], dtype=np.complex128) / np.sqrt(2)
    return Ket(2, amps)


def noisy_bell(v: float) -> DensityOperator:
    """``v |psi><psi| + (1 - v) I/4`` for the Bell state of :func:`bell_psi`."""
    v = check_visibility(v)
    rho = v * bell_psi().projector() + (1 - v) * np.eye(4) / 4
    return DensityOperator(2, rho)


def tensor_power(rho: DensityOperator, n_copies: int) -> DensityOperator:
    if n_copies < 1:
        raise DomainError("n_copies must be >= 1")
    n_qubits = rho.n_qubits * n_copies
    nm.check_qubits(n_qubits)
    if n_copies == 1:
        return rho
    # square-and-multiply keeps the number of large krons logarithmic
    result = None
    base = rho.matrix
    k = n_copies
    while k:
        if k & 1:
            result = base if result is None else np.kron(result, base)
        k >>= 1
        if k:
            base = np.kron(base, base)
    return DensityOperator(n_qubits, result)
