"""Correlation functions, inequality reports, expectation values of the
Bell-Mermin and Bell-Zukowski operators on copies of the noisy Bell state,
and the visibility threshold above which the Zukowski bound fails."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import numerics as nm
from . import operators as ops
from .exceptions import DomainError, IncompleteDataError, ShapeError
from .states import DensityOperator, check_visibility, noisy_bell, tensor_power

VIOLATION_SLACK = 1e-12
CHSH_BOUND = 2.0

# per-site diagonal factor of <j^m| P |j> for j_k = 0, 1
_SITE_PHASE = {
    "I": np.array([1, 1], dtype=np.complex128),
    "X": np.array([1, 1], dtype=np.complex128),
    "Y": np.array([1j, -1j], dtype=np.complex128),
    "Z": np.array([1, -1], dtype=np.complex128),
}


@dataclass(frozen=True)
class CorrelationRecord:
    settings: str
    value: float


@dataclass(frozen=True)
class InequalityReport:
    name: str
    value: float
    bound: float
    violated: bool
    n_copies: int | None = None
    visibility: float | None = None

    def as_row(self) -> dict:
        return {
            "name": self.name,
            "n_copies": self.n_copies,
            "visibility": self.visibility,
            "value": self.value,
            "bound": self.bound,
            "violated": self.violated,
        }


def make_report(name, value, bound, n_copies=None, visibility=None) -> InequalityReport:
    value, bound = float(value), float(bound)
    return InequalityReport(
        name, value, bound, abs(value) > bound + VIOLATION_SLACK, n_copies, visibility
    )


@dataclass(frozen=True)
class ThresholdCurve:
    entries: tuple[tuple[int, float], ...]
    asymptote: float


def correlation(rho: DensityOperator, settings: str | Sequence[str], tol: float = 1e-10) -> float:
    """``tr(rho P_s)`` for a Pauli string ``s``.

    Uses the permutation-with-phase structure of Pauli strings, so the cost
    is linear in the matrix dimension.
    """
    axes = [a.upper() for a in settings]
    if len(axes) != rho.n_qubits:
        raise ShapeError(f"{len(axes)} settings for a {rho.n_qubits}-qubit state")
    if any(a not in _SITE_PHASE for a in axes):
        raise DomainError(f"unknown Pauli axis in {settings!r}")
    flip = 0
    for a in axes:
        flip = (flip << 1) | (a in "XY")
    phase = reduce(np.kron, [_SITE_PHASE[a] for a in axes])
    j = np.arange(rho.dim)
    value = complex(np.sum(rho.matrix[j, j ^ flip] * phase))
    if abs(value.imag) > tol:
        raise DomainError(f"correlation {value} has an imaginary part; is rho Hermitian?")
    return value.real


def correlation_table(rho: DensityOperator) -> list[CorrelationRecord]:
    """Correlations for every ``{X, Y}`` setting string, X (setting 1) first."""
    return [CorrelationRecord(s, correlation(rho, s)) for s in ops.xy_strings(rho.n_qubits)]


def _pair_correlations(rho: DensityOperator) -> dict[str, float]:
    if rho.n_qubits != 2:
        raise ShapeError("CHSH suite needs a two-qubit state")
    return {s: correlation(rho, s) for s in ("XX", "YY", "XY", "YX")}


# signs of (E_xx, E_yy, E_xy, E_yx) in the four CHSH combinations
CHSH_SIGNS = (
    (1, -1, 1, 1),
    (1, 1, -1, 1),
    (1, 1, 1, -1),
    (1, -1, -1, -1),
)


def chsh_suite(rho: DensityOperator, visibility: float | None = None) -> list[InequalityReport]:
    e = _pair_correlations(rho)
    vec = np.array([e["XX"], e["YY"], e["XY"], e["YX"]])
    return [
        make_report(f"chsh-{i}", abs(np.dot(signs, vec)), CHSH_BOUND, 1, visibility)
        for i, signs in enumerate(CHSH_SIGNS, start=1)
    ]


def mermin_expectation_dense(n_copies: int, v: float, primed: bool = False) -> float:
    """``tr(rho(v)^N B)`` with every operator held densely."""
    v = check_visibility(v)
    nm.check_qubits(2 * n_copies)
    rho = tensor_power(noisy_bell(v), n_copies)
    pair = ops.bell_mermin_product(2 * n_copies)
    value = nm.trace_product(rho.matrix, pair.b_prime if primed else pair.b)
    return value.real


def pair_expectations(v: float) -> tuple[float, float]:
    """``(<B>, <B'>)`` on a single noisy pair, from its four correlations."""
    rho = noisy_bell(v)
    pair = ops.bell_mermin_product(2)
    b = ops.pauli_expansion(pair)
    bp = ops.pauli_expansion(pair, primed=True)
    table = correlation_table(rho)
    return expectation_from_correlations(b, table), expectation_from_correlations(bp, table)


def _merge_power(pair: tuple[float, float], n: int) -> tuple[float, float]:
    # the block merge is associative, so square-and-multiply applies
    result = None
    base = pair
    while n:
        if n & 1:
            result = base if result is None else ops.merge_pairs(result, base)
        n >>= 1
        if n:
            base = ops.merge_pairs(base, base)
    return result


def mermin_expectations_factorized(n_copies: int, v: float) -> tuple[float, float]:
    """``(<B>, <B'>)`` on ``rho(v)^N`` without building any 2N-qubit matrix.

    Per-pair expectations are combined with the block-merge recursion, which
    holds for expectation values on product states.
    """
    if n_copies < 1:
        raise DomainError("n_copies must be >= 1")
    v = check_visibility(v)
    b, bp = _merge_power(pair_expectations(v), n_copies)
    return float(b), float(bp)


def mermin_expectation_factorized(n_copies: int, v: float) -> float:
    return mermin_expectations_factorized(n_copies, v)[0]


def _as_correlation_map(correlations) -> dict[str, float]:
    if isinstance(correlations, Mapping):
        return {str(k): float(val) for k, val in correlations.items()}
    return {rec.settings: float(rec.value) for rec in correlations}


def expectation_from_correlations(
    expansion: ops.PauliExpansion,
    correlations: Iterable[CorrelationRecord] | Mapping[str, float],
) -> float:
    table = _as_correlation_map(correlations)
    total = 0.0
    for s, c in expansion.terms.items():
        if s not in table:
            raise IncompleteDataError(f"no correlation for setting string {s}")
        total += c * table[s]
    return total


def _log_zukowski_scale(n_copies: int) -> float:
    n = 2 * n_copies
    return -math.log(2) + n * math.log(math.pi / 2) - (n - 1) / 2 * math.log(2)


def zukowski_expectation(n_copies: int, v: float) -> float:
    """``<Z_2N>`` on ``rho(v)^N`` through the Bell-Mermin scaling relation."""
    if n_copies < 1:
        raise DomainError("n_copies must be >= 1")
    mermin = mermin_expectation_factorized(n_copies, v)
    if mermin == 0:
        return 0.0
    return math.copysign(
        math.exp(_log_zukowski_scale(n_copies) + math.log(abs(mermin))), mermin
    )


def zukowski_expectation_dense(n_copies: int, v: float) -> float:
    v = check_visibility(v)
    rho = tensor_power(noisy_bell(v), n_copies)
    return nm.trace_product(rho.matrix, ops.zukowski_operator(2 * n_copies)).real


def mermin_zukowski_bound(n_copies: int) -> float:
    """Largest ``|<B>|`` compatible with ``|<Z>| <= 1``."""
    return math.exp(-_log_zukowski_scale(n_copies))


def threshold_visibility(n_copies: int) -> float:
    """Visibility above which ``rho(V)^N`` violates the Zukowski bound.

    Evaluated in log space; the factors ``(2/pi)**(2N)`` underflow near N=800.
    """
    if n_copies < 1:
        raise DomainError("n_copies must be >= 1")
    return math.exp(-_log_zukowski_scale(n_copies) / n_copies)


def asymptotic_threshold() -> float:
    return 2 * (2 / math.pi) ** 2


def threshold_curve(max_n: int) -> ThresholdCurve:
    if max_n < 1:
        raise DomainError("max_n must be >= 1")
    entries = tuple((n, threshold_visibility(n)) for n in range(1, max_n + 1))
    return ThresholdCurve(entries, asymptotic_threshold())


def _correlation_tensor(correlations, n_parties: int | None = None) -> np.ndarray:
    if isinstance(correlations, np.ndarray):
        e = np.asarray(correlations, dtype=float)
        if e.shape != (2,) * e.ndim:
            raise ShapeError(f"correlation tensor must have shape (2,)*n, got {e.shape}")
        return e
    table = _as_correlation_map(correlations)
    if n_parties is None:
        lengths = {len(s) for s in table}
        if len(lengths) != 1:
            raise IncompleteDataError("setting strings of mixed length")
        (n_parties,) = lengths
    e = np.empty((2,) * n_parties)
    for idx in itertools.product((0, 1), repeat=n_parties):
        s = "".join("XY"[k] for k in idx)
        if s not in table:
            raise IncompleteDataError(f"no correlation for setting string {s}")
        e[idx] = table[s]
    return e


def full_correlation_sum(correlations, n_parties: int | None = None) -> float:
    """``sum_s |sum_k prod_j c_j(s_j, k_j) E(k)|`` over ``s`` in ``{+1,-1}**n``.

    ``c_j`` is ``s_j`` for setting X and 1 for setting Y. Each sign vector
    contracts every site of ``E`` with ``(s_j, 1)``, done here as one
    ``tensordot`` per site.
    """
    e = _correlation_tensor(correlations, n_parties)
    site = np.array([[1.0, 1.0], [-1.0, 1.0]])  # rows: s=+1, s=-1; cols: X, Y
    for axis in range(e.ndim):
        e = np.moveaxis(np.tensordot(site, e, axes=([1], [axis])), 0, axis)
    return float(np.sum(np.abs(e)))


def lhv_full_set_check(correlations, n_parties: int | None = None) -> InequalityReport:
    """Full-correlation test for a local realistic model of a two-setting
    experiment: reproducible iff the sign-contracted sum is at most ``2**n``.

    ``correlations`` is a ``(2,)*n`` array indexed by setting (0=X, 1=Y), a
    mapping from setting strings to values, or CorrelationRecords.
    """
    e = _correlation_tensor(correlations, n_parties)
    return make_report("lhv-full-set", full_correlation_sum(e), 2.0**e.ndim)


def scan(n_copies: int, v_grid: Iterable[float]) -> list[InequalityReport]:
    """Mermin, derived Mermin bound and Zukowski reports for each visibility."""
    if n_copies < 1:
        raise DomainError("n_copies must be >= 1")
    grid = [check_visibility(v) for v in v_grid]
    bound = mermin_zukowski_bound(n_copies)
    reports = []
    for v in grid:
        mermin = mermin_expectation_factorized(n_copies, v)
        reports.append(make_report("mermin", mermin, 1.0, n_copies, v))
        reports.append(make_report("mermin-zukowski-bound", mermin, bound, n_copies, v))
        reports.append(make_report("zukowski", zukowski_expectation(n_copies, v), 1.0, n_copies, v))
    return reports
