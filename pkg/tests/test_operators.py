import numpy as np
import pytest

from subens import (
    ATOL,
    PauliExpansion,
    almost_equal,
    is_projector,
    pauli_expand,
    pauli_matrix,
    pauli_strings,
    pauli_synthesize,
    symmetric_product,
    tensor,
)
from subens.operators import (
    fix_global_phase,
    ket_from_json,
    ket_to_json,
    matrix_from_json,
    matrix_to_json,
    projector_from_ket,
)

from helpers import random_hermitian

I2 = pauli_matrix("I")
X = pauli_matrix("X")
Y = pauli_matrix("Y")
Z = pauli_matrix("Z")


def test_tensor_identity():
    assert almost_equal(tensor(I2, I2), np.eye(4))


def test_tensor_diagonal():
    assert almost_equal(tensor(Z, Z), np.diag([1, -1, -1, 1]))


def test_tensor_of_projectors():
    # (I+Z)/2 = |0><0| and (I+X)/2 = |+><+| evaluated entrywise by hand
    expected = np.array(
        [
            [0.5, 0.5, 0.0, 0.0],
            [0.5, 0.5, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ]
    )
    result = tensor((I2 + Z) / 2, (I2 + X) / 2)
    assert almost_equal(result, expected)
    assert abs(np.trace(result) - 1.0) <= ATOL
    assert almost_equal(result, result.conj().T)
    assert np.linalg.eigvalsh(result).min() >= -ATOL


def test_tensor_trace_multiplicative():
    rng = np.random.default_rng(7)
    for _ in range(20):
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        b = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        assert abs(np.trace(tensor(a, b)) - np.trace(a) * np.trace(b)) <= 1e-10


def test_symmetric_product_commuting():
    a = np.diag([1.0, 2.0]).astype(complex)
    b = np.diag([3.0, 4.0]).astype(complex)
    assert np.array_equal(symmetric_product(a, b), a @ b)


def test_symmetric_product_idempotent():
    p = (I2 + Z) / 2
    assert almost_equal(symmetric_product(p, p), p)


def test_symmetric_product_z_x_projectors():
    # (|0><0| |+><+| + |+><+| |0><0|)/2 expanded by hand; the XZ and ZX
    # cross terms cancel, leaving (I + X + Z)/4.
    expected = np.array([[0.5, 0.25], [0.25, 0.0]])
    assert almost_equal(symmetric_product((I2 + Z) / 2, (I2 + X) / 2), expected)


def test_symmetric_product_exactly_symmetric():
    rng = np.random.default_rng(11)
    for _ in range(50):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        b = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        assert np.array_equal(symmetric_product(a, b), symmetric_product(b, a))


def test_symmetric_product_trace_identity():
    rng = np.random.default_rng(13)
    for _ in range(50):
        a = random_hermitian(rng, 4)
        b = random_hermitian(rng, 4)
        lhs = np.trace(symmetric_product(a, b))
        assert abs(lhs.imag) <= 1e-10
        assert abs(lhs.real - np.trace(a @ b).real) <= 1e-10


def test_symmetric_product_dimension_mismatch():
    with pytest.raises(ValueError, match="mismatch"):
        symmetric_product(np.eye(2), np.eye(4))


@pytest.mark.parametrize("n", [1, 2])
def test_pauli_strings_square_to_identity(n):
    for s in pauli_strings(n):
        m = pauli_matrix(s)
        assert almost_equal(m @ m, np.eye(2**n))
        if s != "I" * n:
            assert abs(np.trace(m)) <= ATOL
        assert almost_equal(m, m.conj().T)


def test_pauli_string_order():
    assert list(pauli_strings(1)) == ["I", "X", "Y", "Z"]
    two = list(pauli_strings(2))
    assert two[:5] == ["II", "IX", "IY", "IZ", "XI"]
    assert len(two) == 16


def test_pauli_expand_qubit_projector():
    e = pauli_expand((I2 + Z) / 2)
    assert e.n == 1
    assert e.coeffs == {"I": 0.5, "Z": 0.5}


def test_pauli_expand_identity():
    e = pauli_expand(np.eye(4), n=2)
    assert e.coeffs == {"II": 1.0}


def test_pauli_expand_entangled_projector():
    from subens import eta_projector

    e = pauli_expand(eta_projector(1))
    assert set(e.coeffs) == {"II", "XX", "YY", "ZZ"}
    assert e.coeffs["II"] == pytest.approx(0.25, abs=ATOL)
    assert e.coeffs["XX"] == pytest.approx(0.25, abs=ATOL)
    assert e.coeffs["YY"] == pytest.approx(0.25, abs=ATOL)
    assert e.coeffs["ZZ"] == pytest.approx(-0.25, abs=ATOL)


def test_pauli_expand_rejects_bad_dimension():
    with pytest.raises(ValueError, match="power of two"):
        pauli_expand(np.eye(3))
    with pytest.raises(ValueError, match="does not match"):
        pauli_expand(np.eye(4), n=3)


def test_pauli_expand_rejects_non_hermitian():
    with pytest.raises(ValueError, match="not Hermitian"):
        pauli_expand(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_pauli_synthesize_single_qubit():
    e = PauliExpansion(n=1, coeffs={"I": 0.5, "X": 0.5})
    assert almost_equal(pauli_synthesize(e), (I2 + X) / 2)


def test_pauli_synthesize_empty_is_zero():
    assert almost_equal(pauli_synthesize(PauliExpansion(n=2)), np.zeros((4, 4)))


def test_pauli_synthesize_matches_measurement_projector():
    from subens import eta_projector

    e = PauliExpansion(n=2, coeffs={"II": 0.25, "XZ": 0.25, "ZX": -0.25, "YY": -0.25})
    assert almost_equal(pauli_synthesize(e), eta_projector(2))


@pytest.mark.parametrize("dim", [2, 4, 8])
def test_expand_synthesize_round_trip(dim):
    rng = np.random.default_rng(100 + dim)
    n = dim.bit_length() - 1
    for _ in range(200):
        m = random_hermitian(rng, dim)
        e = pauli_expand(m, n=n)
        assert almost_equal(pauli_synthesize(e), m, atol=1e-12)


def test_expansion_keys_are_sorted():
    e = PauliExpansion(n=1, coeffs={"Z": 1.0, "I": 0.5, "X": -0.25})
    assert list(e.coeffs) == ["I", "X", "Z"]


def test_expansion_rejects_bad_strings():
    with pytest.raises(ValueError, match="invalid Pauli string"):
        PauliExpansion(n=1, coeffs={"XX": 1.0})
    with pytest.raises(ValueError, match="invalid Pauli string"):
        PauliExpansion(n=2, coeffs={"AB": 1.0})


def test_is_projector_examples():
    assert is_projector((I2 + Z) / 2)
    assert is_projector(np.eye(2))
    half_sum = 0.5 * (I2 + X + Z)
    assert not is_projector(half_sum)
    assert almost_equal(half_sum @ half_sum, 0.75 * I2 + 0.5 * X + 0.5 * Z)


def test_fix_global_phase():
    k = np.array([0.0, 1j * np.sqrt(0.5), -1j * np.sqrt(0.5)])
    fixed = fix_global_phase(k)
    assert fixed[1].real > 0 and abs(fixed[1].imag) <= ATOL
    assert almost_equal(projector_from_ket(fixed), projector_from_ket(k))


def test_matrix_json_round_trip():
    rng = np.random.default_rng(5)
    m = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    assert np.array_equal(matrix_from_json(matrix_to_json(m)), m)


def test_ket_json_round_trip():
    k = np.array([0.5, -0.5j, 0.5, 0.5])
    assert np.array_equal(ket_from_json(ket_to_json(k)), k)


def test_expansion_json_round_trip():
    from subens.operators import expansion_from_json, expansion_to_json

    e = PauliExpansion(n=2, coeffs={"XZ": 0.25, "II": -1.5})
    assert expansion_from_json(expansion_to_json(e)) == e
    with pytest.raises(ValueError):
        expansion_from_json({"coeffs": {}})
    with pytest.raises(ValueError):
        expansion_from_json({"n": 2, "coeffs": []})


@pytest.mark.parametrize(
    "data",
    [
        [],
        [[1, 0]],
        [[[1, 0]], [[0, 0]]],
        [[[1, 0], [0]], [[0, 0], [0, 0]]],
        [[[1, 0], ["a", 0]], [[0, 0], [0, 0]]],
    ],
)
def test_matrix_from_json_rejects_malformed(data):
    with pytest.raises(ValueError):
        matrix_from_json(data)
