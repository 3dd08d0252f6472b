"""Bell-Mermin and Bell-Zukowski operators evaluated on copies of a noisy
two-qubit Bell state."""

__version__ = "0.1.0"

from .analysis import (
    CorrelationRecord,
    InequalityReport,
    ThresholdCurve,
    asymptotic_threshold,
    chsh_suite,
    correlation,
    correlation_table,
    expectation_from_correlations,
    lhv_full_set_check,
    mermin_expectation_dense,
    mermin_expectation_factorized,
    mermin_zukowski_bound,
    scan,
    threshold_curve,
    threshold_visibility,
    zukowski_expectation,
)
from .exceptions import (
    BellZukError,
    DomainError,
    IncompleteDataError,
    PartitionError,
    ShapeError,
    SizeLimitError,
)
from .operators import (
    BellOperatorPair,
    ObservablePair,
    PauliExpansion,
    bell_mermin_closed_form,
    bell_mermin_product,
    bell_mermin_recursive,
    f_combine,
    f_invert,
    pauli,
    pauli_expansion,
    zukowski_operator,
)
from .states import DensityOperator, Ket, bell_psi, ghz, noisy_bell, tensor_power
