import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from bellzuk import numerics as nm
from bellzuk.exceptions import ShapeError, SizeLimitError
from bellzuk.operators import pauli
from bellzuk.states import noisy_bell

X, Y, Z, I2 = pauli("X"), pauli("Y"), pauli("Z"), pauli("I")


def ketbra(i, j, dim):
    m = np.zeros((dim, dim), dtype=complex)
    m[i, j] = 1
    return m


def test_kron_identity():
    assert np.array_equal(nm.kron(I2, I2), np.eye(4))


def test_kron_bit_flip():
    ket11 = nm.basis_ket(3, 2)
    assert np.array_equal(nm.kron(X, X) @ ket11, nm.basis_ket(0, 2))


def test_kron_first_factor_most_significant():
    # |0><1| on site 1 only moves the high bit
    m = nm.kron(ketbra(0, 1, 2), I2)
    assert m[0, 2] == 1 and m[1, 3] == 1
    assert np.count_nonzero(m) == 2


def test_kron_raising_operators():
    s = X + 1j * Y
    assert np.array_equal(nm.kron(s, s), 4 * ketbra(0, 3, 4))


def test_kron_size_limit():
    with nm.dense_cap_override(3):
        nm.kron(I2, I2, I2)
        with pytest.raises(SizeLimitError):
            nm.kron(I2, I2, I2, I2)


def test_dense_cap_env(monkeypatch):
    monkeypatch.setenv("DENSE_CAP", "5")
    assert nm.dense_cap() == 5
    with nm.dense_cap_override(7):
        assert nm.dense_cap() == 7
    monkeypatch.delenv("DENSE_CAP")
    assert nm.dense_cap() == nm.DEFAULT_DENSE_CAP


def test_adjoint_trace():
    assert np.array_equal(nm.adjoint(ketbra(0, 3, 4)), ketbra(3, 0, 4))
    assert nm.trace(np.eye(4)) == 4
    for v in (0, 0.3, 1):
        assert abs(nm.trace(noisy_bell(v).matrix) - 1) < 1e-12


def test_matmul_shape_error():
    with pytest.raises(ShapeError):
        nm.matmul(np.eye(2), np.eye(4))
    with pytest.raises(ShapeError):
        nm.as_matrix(np.ones((2, 3)))


def test_hermitian_parts_examples():
    assert np.array_equal(nm.hermitian_re(1j * Z), np.zeros((2, 2)))
    assert np.allclose(nm.hermitian_im(1j * Z), Z, atol=0)
    f = -2j * ketbra(0, 3, 4)
    expected = -1j * ketbra(0, 3, 4) + 1j * ketbra(3, 0, 4)
    assert np.array_equal(nm.hermitian_re(f), expected)


def test_trace_product_matches_matmul():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    b = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    assert abs(nm.trace_product(a, b) - np.trace(a @ b)) < 1e-12


small = st.floats(-5, 5, allow_nan=False)
complex_entries = st.builds(complex, small, small)


def cmat(dim, elements=complex_entries):
    return arrays(np.complex128, (dim, dim), elements=elements)


gaussian_ints = st.builds(complex, st.integers(-9, 9), st.integers(-9, 9))


@settings(max_examples=50, deadline=None)
@given(cmat(2, gaussian_ints), cmat(2, gaussian_ints), cmat(2, gaussian_ints))
def test_kron_associative(a, b, c):
    assert np.array_equal(nm.kron(nm.kron(a, b), c), nm.kron(a, nm.kron(b, c)))


@settings(max_examples=50, deadline=None)
@given(cmat(2), cmat(4))
def test_trace_of_kron(a, b):
    assert abs(nm.trace(nm.kron(a, b)) - nm.trace(a) * nm.trace(b)) < 1e-12 * max(1, abs(nm.trace(a) * nm.trace(b)))


@settings(max_examples=50, deadline=None)
@given(cmat(4))
def test_hermitian_parts_reconstruct(f):
    re, im = nm.hermitian_re(f), nm.hermitian_im(f)
    assert nm.is_hermitian(re, 1e-12) and nm.is_hermitian(im, 1e-12)
    assert np.max(np.abs(re + 1j * im - f)) <= 1e-12 * max(1.0, np.max(np.abs(f)))
