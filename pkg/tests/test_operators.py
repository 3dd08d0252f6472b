import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from bellzuk import numerics as nm
from bellzuk import operators as ops
from bellzuk.exceptions import DomainError, PartitionError, ShapeError
from bellzuk.states import ghz

X, Y, Z, I2 = (ops.pauli(a) for a in "XYZI")
EVEN = [2, 4, 6, 8]


def P(s):
    return ops.pauli_string(s)


def test_pauli_algebra():
    assert np.array_equal(X @ X, I2)
    assert np.array_equal(X @ Y, 1j * Z)
    raising = X + 1j * Y
    assert raising[0, 1] == 2 and np.count_nonzero(raising) == 1
    with pytest.raises(DomainError):
        ops.pauli("W")


def test_f_combine_scalar():
    assert abs(ops.f_combine(1, 1) - 1) < 1e-15


def test_f_combine_site():
    expected = np.sqrt(2) * np.exp(-1j * np.pi / 4) * np.array([[0, 1], [0, 0]])
    assert nm.max_abs_diff(ops.f_combine(X, Y), expected) < 1e-15


def test_f_combine_shape_error():
    with pytest.raises(ShapeError):
        ops.f_combine(X, np.eye(4))


def test_f_invert_examples():
    zero = np.zeros((4, 4))
    x, y = ops.f_invert(zero)
    assert not x.any() and not y.any()
    f = np.zeros((4, 4), dtype=complex)
    f[0, 3] = -2j
    b, _ = ops.f_invert(f)
    assert abs(b[0, 3] - (1 - 1j)) < 1e-15


@pytest.mark.parametrize("seed", range(10))
def test_f_roundtrip_random_hermitian(seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    b = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    x, y = a + a.conj().T, b + b.conj().T
    x2, y2 = ops.f_invert(ops.f_combine(x, y))
    assert nm.max_abs_diff(x, x2) < 1e-12 and nm.max_abs_diff(y, y2) < 1e-12


@settings(max_examples=50, deadline=None)
@given(arrays(np.complex128, (4, 4), elements=st.builds(complex, st.floats(-3, 3), st.floats(-3, 3))))
def test_f_invert_then_combine(f):
    x, y = ops.f_invert(f)
    assert nm.is_hermitian(x, 1e-12) and nm.is_hermitian(y, 1e-12)
    assert nm.max_abs_diff(ops.f_combine(x, y), f) < 1e-12


def test_product_two_qubits_pauli_sums():
    pair = ops.bell_mermin_product(2)
    b = 0.5 * (P("XX") + P("XY") + P("YX") - P("YY"))
    bp = 0.5 * (-P("XX") + P("XY") + P("YX") + P("YY"))
    assert nm.max_abs_diff(pair.b, b) < 1e-15
    assert nm.max_abs_diff(pair.b_prime, bp) < 1e-15


@pytest.mark.parametrize("n", EVEN)
def test_product_ghz_eigenvectors(n):
    b = ops.bell_mermin_product(n).b
    theta = ops.mermin_ghz_phase(n)
    for sign in (1, -1):
        v = ghz(n, theta, sign).amplitudes
        assert nm.max_abs_diff(b @ v, sign * 2 ** ((n - 1) / 2) * v) < 1e-10


@pytest.mark.parametrize("n", EVEN)
def test_product_hermitian_and_cube(n):
    pair = ops.bell_mermin_product(n)
    assert pair.is_hermitian(1e-10)
    b = pair.b
    assert nm.max_abs_diff(b @ b @ b, 2 ** (n - 1) * b) < 1e-8
    assert nm.max_abs_diff(pair.b_prime, nm.hermitian_re(pair.combined()) + nm.hermitian_im(pair.combined())) < 1e-12


def test_product_rejects_odd():
    with pytest.raises(DomainError):
        ops.bell_mermin_product(3)


def test_recursive_four_sites_pairs():
    rec = ops.bell_mermin_recursive([[1, 2], [3, 4]])
    prod = ops.bell_mermin_product(4)
    assert nm.max_abs_diff(rec.b, prod.b) < 1e-10
    assert nm.max_abs_diff(rec.b_prime, prod.b_prime) < 1e-10


def test_recursive_singletons():
    rec = ops.bell_mermin_recursive([[1], [2]])
    assert nm.max_abs_diff(rec.b, ops.bell_mermin_product(2).b) < 1e-12


@pytest.mark.parametrize("n", EVEN)
def test_recursive_multiplicative(n):
    for part in ops.two_block_partitions(n):
        rec = ops.bell_mermin_recursive(part)
        site = ops.f_combine(X, Y)
        assert nm.max_abs_diff(rec.combined(), nm.kron_all([site] * n)) < 1e-10


@pytest.mark.parametrize(
    "partition", [[[1, 2], [2, 3]], [[1], [3]], [[2], [1]], [[1, 3], [2]], [[]]]
)
def test_bad_partitions(partition):
    with pytest.raises(PartitionError):
        ops.bell_mermin_recursive(partition)


def test_closed_form_two_qubits():
    b = ops.bell_mermin_closed_form(2)
    assert abs(b[0, 3] - (1 - 1j)) < 1e-12


@pytest.mark.parametrize("n", EVEN)
def test_closed_form_corner_structure(n):
    b = ops.bell_mermin_closed_form(n)
    nz = set(zip(*np.nonzero(np.abs(b) > 1e-14)))
    assert nz == {(0, 2**n - 1), (2**n - 1, 0)}


@pytest.mark.parametrize("n", [2, 4, 6])
def test_closed_form_zero_phase_same_spectrum(n):
    plain = ops.bell_mermin_closed_form(n, phase=0.0)
    corner = np.zeros((2**n, 2**n))
    corner[0, -1] = corner[-1, 0] = 1
    assert nm.max_abs_diff(plain, 2 ** ((n - 1) / 2) * corner) < 1e-12
    assert nm.max_abs_diff(plain, ops.bell_mermin_product(n).b) > 1e-3
    assert np.allclose(np.linalg.eigvalsh(plain), np.linalg.eigvalsh(ops.bell_mermin_product(n).b), atol=1e-10)


@pytest.mark.parametrize("n,top", [(2, np.pi**2 / 8), (4, 3.0440)])
def test_zukowski_top_eigenvalue(n, top):
    assert abs(np.linalg.eigvalsh(ops.zukowski_operator(n)).max() - top) < 1e-4
    assert abs(np.linalg.eigvalsh(ops.zukowski_operator(n)).max() - 0.5 * (np.pi / 2) ** n) < 1e-12


@pytest.mark.parametrize("n", EVEN)
def test_zukowski_ratio(n):
    z, b = ops.zukowski_operator(n), ops.bell_mermin_closed_form(n)
    mask = np.abs(b) > 0
    assert np.allclose(z[mask] / b[mask], 0.5 * (np.pi / 2) ** n * 2 ** (-(n - 1) / 2), rtol=0, atol=1e-12)


def test_expansion_two_qubits():
    exp = ops.pauli_expansion(ops.bell_mermin_product(2))
    expected = {"XX": 0.5, "XY": 0.5, "YX": 0.5, "YY": -0.5}
    assert set(exp.terms) == set(expected)
    for s, c in expected.items():
        assert abs(exp.terms[s] - c) < 1e-12
    assert abs(exp.l1_norm() - 2) < 1e-12


@pytest.mark.parametrize("n", [2, 4, 6])
def test_expansion_reconstructs(n):
    pair = ops.bell_mermin_product(n)
    exp = ops.pauli_expansion(pair)
    assert len(exp.terms) == 2**n
    assert nm.max_abs_diff(exp.reconstruct(), pair.b) < 1e-10


@pytest.mark.parametrize("s", ["ZX", "IY", "XZ", "II", "ZZ", "YI"])
def test_expansion_no_z_or_identity(s):
    c = ops.pauli_coefficient(ops.bell_mermin_product(2).b, s)
    assert abs(c) < 1e-15
