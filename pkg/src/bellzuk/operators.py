"""Bell-Mermin operators for the sigma_x / sigma_y setting pair, built three
independent ways, plus the Bell-Zukowski operator and Pauli expansions.

The three Bell-Mermin builders are

* :func:`bell_mermin_product`: invert the product of per-site
  ``f(sigma_x, sigma_y)`` factors,
* :func:`bell_mermin_recursive`: merge disjoint site blocks with the
  two-block recursion, starting from single sites ``(sigma_x, sigma_y)``,
* :func:`bell_mermin_closed_form`: ``2**((n-1)/2)`` times the difference of
  two GHZ projectors.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import numerics as nm
from .exceptions import DomainError, PartitionError, ShapeError
from .states import ghz

_PAULI = {
    "I": np.array([[1, 0], [0, 1]], dtype=np.complex128),
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}
for _m in _PAULI.values():
    nm.frozen(_m)

# exp(-i pi/4) / sqrt(2) = (1 - i) / 2
_F_PREFACTOR = np.exp(-1j * np.pi / 4) / np.sqrt(2)


def pauli(axis: str) -> np.ndarray:
    try:
        return _PAULI[axis.upper()].copy()
    except KeyError:
        raise DomainError(f"unknown Pauli axis {axis!r}") from None


def pauli_string(settings: str | Sequence[str]) -> np.ndarray:
    """Dense operator of a Pauli string such as ``"XYXY"``."""
    axes = list(settings)
    if not axes:
        raise ShapeError("empty Pauli string")
    nm.check_qubits(len(axes))
    return nm.kron_all(pauli(a) for a in axes)


@dataclass(frozen=True)
class ObservablePair:
    """Two single-qubit observables measured at one site."""

    a: np.ndarray
    a_prime: np.ndarray

    def __post_init__(self):
        for m in (self.a, self.a_prime):
            m = nm.as_matrix(m)
            if m.shape != (2, 2) or not nm.is_hermitian(m, 1e-12):
                raise DomainError("site observables must be Hermitian 2x2 matrices")


XY_SETTINGS = ObservablePair(pauli("X"), pauli("Y"))


@dataclass(frozen=True)
class BellOperatorPair:
    n_qubits: int
    b: np.ndarray
    b_prime: np.ndarray

    def __post_init__(self):
        for name in ("b", "b_prime"):
            m = nm.as_matrix(getattr(self, name))
            if m.shape[0] != 2**self.n_qubits:
                raise ShapeError(f"{name} has dimension {m.shape[0]}")
            object.__setattr__(self, name, nm.frozen(m.copy()))

    def combined(self) -> np.ndarray:
        """``f(b, b_prime)``."""
        return f_combine(self.b, self.b_prime)

    def is_hermitian(self, tol: float = 1e-10) -> bool:
        return nm.is_hermitian(self.b, tol) and nm.is_hermitian(self.b_prime, tol)


def f_combine(x, y):
    """``exp(-i pi/4) (x + i y) / sqrt(2)`` for scalars or equal-shape matrices."""
    if np.ndim(x) == 0 and np.ndim(y) == 0:
        return complex(_F_PREFACTOR * (x + 1j * y))
    x, y = nm.as_matrix(x), nm.as_matrix(y)
    if x.shape != y.shape:
        raise ShapeError(f"dimension mismatch {x.shape} vs {y.shape}")
    return _F_PREFACTOR * (x + 1j * y)


def f_invert(f) -> tuple[np.ndarray, np.ndarray]:
    """Recover ``(x, y)`` from ``f(x, y)`` as ``(Re f - Im f, Re f + Im f)``.

    Re and Im are the Hermitian and anti-Hermitian parts, so both outputs are
    Hermitian for any square input.
    """
    re, im = nm.hermitian_re(f), nm.hermitian_im(f)
    return re - im, re + im


def _check_even(n_qubits: int) -> None:
    if n_qubits < 2 or n_qubits % 2:
        raise DomainError(f"n_qubits must be even and >= 2, got {n_qubits}")
    nm.check_qubits(n_qubits)


def bell_mermin_product(n_qubits: int, settings: ObservablePair = XY_SETTINGS) -> BellOperatorPair:
    _check_even(n_qubits)
    site = f_combine(settings.a, settings.a_prime)
    big_f = nm.kron_all([site] * n_qubits)
    b, b_prime = f_invert(big_f)
    return BellOperatorPair(n_qubits, b, b_prime)


def merge_pairs(
    left: tuple[np.ndarray, np.ndarray], right: tuple[np.ndarray, np.ndarray]
) -> tuple[np.ndarray, np.ndarray]:
    """Bell-Mermin pair of the union of two disjoint blocks.

    ``left`` covers the more significant sites. Works for operators and, on
    product states, for their expectation values.
    """
    b_a, bp_a = left
    b_b, bp_b = right
    prod = np.kron if np.ndim(b_a) else np.multiply
    b = 0.5 * prod(b_a, b_b + bp_b) + 0.5 * prod(bp_a, b_b - bp_b)
    bp = 0.5 * prod(bp_a, bp_b + b_b) + 0.5 * prod(b_a, bp_b - b_b)
    return b, bp


def _validate_partition(partition: Sequence[Sequence[int]]) -> list[list[int]]:
    blocks = [list(block) for block in partition]
    if not blocks or any(not block for block in blocks):
        raise PartitionError("partition must consist of non-empty blocks")
    flat = [s for block in blocks for s in block]
    n = len(flat)
    if sorted(flat) != list(range(1, n + 1)):
        raise PartitionError(f"blocks must cover sites 1..{n} exactly once: {blocks}")
    if flat != list(range(1, n + 1)):
        raise PartitionError(f"sites must ascend within and across blocks: {blocks}")
    return blocks


def _block_pair(n_sites: int, settings: ObservablePair):
    pair = (nm.as_matrix(settings.a), nm.as_matrix(settings.a_prime))
    for _ in range(n_sites - 1):
        pair = merge_pairs(pair, (settings.a, settings.a_prime))
    return pair


def bell_mermin_recursive(
    partition: Sequence[Sequence[int]], settings: ObservablePair = XY_SETTINGS
) -> BellOperatorPair:
    """Bell-Mermin pair assembled block by block.

    Each block is grown from its single sites, then blocks are merged left
    to right. ``[[1, 2], [3, 4]]`` and ``[[1], [2, 3, 4]]`` are valid;
    blocks must list sites in ascending order.
    """
    blocks = _validate_partition(partition)
    n_qubits = sum(len(block) for block in blocks)
    nm.check_qubits(n_qubits)
    pair = None
    for block in blocks:
        block_pair = _block_pair(len(block), settings)
        pair = block_pair if pair is None else merge_pairs(pair, block_pair)
    return BellOperatorPair(n_qubits, *pair)


def two_block_partitions(n_qubits: int) -> list[list[list[int]]]:
    """All contiguous splits ``{1..k}, {k+1..n}``."""
    sites = list(range(1, n_qubits + 1))
    return [[sites[:k], sites[k:]] for k in range(1, n_qubits)]


def mermin_ghz_phase(n_qubits: int) -> float:
    """Relative GHZ phase that makes the closed form match the f-product.

    The corner entry ``<0..0|B|1..1>`` of the product form is
    ``2**((n-1)/2) * exp(-i (n-1) pi/4)``; the GHZ projector difference puts
    ``exp(-i phase)`` there, hence ``phase = (n-1) pi/4``.
    """
    return (n_qubits - 1) * np.pi / 4


def ghz_projector_difference(n_qubits: int, phase: float) -> np.ndarray:
    plus = ghz(n_qubits, phase, +1)
    minus = ghz(n_qubits, phase, -1)
    return plus.projector() - minus.projector()


def bell_mermin_closed_form(n_qubits: int, phase: float | None = None) -> np.ndarray:
    """``2**((n-1)/2) (|Psi+><Psi+| - |Psi-><Psi-|)`` on GHZ states.

    ``phase`` defaults to :func:`mermin_ghz_phase`; other values give an
    operator with the same spectrum but different corner phases.
    """
    _check_even(n_qubits)
    if phase is None:
        phase = mermin_ghz_phase(n_qubits)
    return 2 ** ((n_qubits - 1) / 2) * ghz_projector_difference(n_qubits, phase)


def zukowski_scale(n_qubits: int) -> float:
    """Factor ``(1/2)(pi/2)**n / 2**((n-1)/2)`` taking B to the Zukowski operator."""
    return 0.5 * (np.pi / 2) ** n_qubits / 2 ** ((n_qubits - 1) / 2)


def zukowski_operator(n_qubits: int) -> np.ndarray:
    return zukowski_scale(n_qubits) * bell_mermin_closed_form(n_qubits)


@dataclass(frozen=True)
class PauliExpansion:
    n_qubits: int
    terms: dict[str, float] = field(default_factory=dict)

    def coefficient(self, settings: str) -> float:
        return self.terms.get(settings, 0.0)

    def reconstruct(self) -> np.ndarray:
        nm.check_qubits(self.n_qubits)
        out = np.zeros((2**self.n_qubits,) * 2, dtype=np.complex128)
        for s, c in self.terms.items():
            if c:
                out += c * pauli_string(s)
        return out

    def l1_norm(self) -> float:
        return float(sum(abs(c) for c in self.terms.values()))


def xy_strings(n_qubits: int) -> list[str]:
    """All ``2**n`` strings over ``{X, Y}`` in lexicographic order (X=setting 1)."""
    return ["".join(p) for p in itertools.product("XY", repeat=n_qubits)]


def pauli_coefficient(op, settings: str) -> complex:
    """Hilbert-Schmidt coefficient ``tr(op P_s) / 2**n``."""
    op = nm.as_matrix(op)
    return nm.trace_product(op, pauli_string(settings)) / op.shape[0]


def pauli_expansion(
    op: BellOperatorPair | np.ndarray, *, primed: bool = False, tol: float = 1e-10
) -> PauliExpansion:
    """Expand a Bell-Mermin operator over the ``{X, Y}**n`` strings.

    Raises DomainError if a coefficient carries an imaginary part above
    ``tol``, which would mean ``op`` is not Hermitian.
    """
    if isinstance(op, BellOperatorPair):
        n, mat = op.n_qubits, (op.b_prime if primed else op.b)
    else:
        mat = nm.as_matrix(op)
        n = int(np.log2(mat.shape[0]))
    terms = {}
    for s in xy_strings(n):
        c = pauli_coefficient(mat, s)
        if abs(c.imag) > tol:
            raise DomainError(f"complex coefficient {c} for {s}")
        terms[s] = float(c.real)
    return PauliExpansion(n, terms)
