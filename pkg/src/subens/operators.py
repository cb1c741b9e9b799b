"""Dense complex operator algebra and Pauli-string expansions.

All operators in this package are plain numpy arrays with ``dtype=complex``.
This module provides the Kronecker and symmetric products, the conversion
between Hermitian matrices and real Pauli-string coefficient maps, and the
JSON encoding shared by the command-line tools.

Conventions:
  - qubit 0 is the leftmost tensor factor, so ``pauli_matrix("XZ")`` acts as
    X on qubit 0 and Z on qubit 1;
  - Pauli strings are ordered lexicographically with I < X < Y < Z, which is
    also the serialization order;
  - equality means elementwise agreement within the absolute tolerance
    ``ATOL``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

# Absolute elementwise tolerance used throughout the package. The built-in
# scenario is dyadic-rational arithmetic, exact in double precision up to a
# handful of rounding steps.
ATOL = 1e-12

PAULI_LETTERS = "IXYZ"

_PAULI_1Q = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
for _m in _PAULI_1Q.values():
    _m.setflags(write=False)

_LETTER_RANK = {c: k for k, c in enumerate(PAULI_LETTERS)}


def _square(m, name: str = "matrix") -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"{name} must be a square matrix, got shape {a.shape}")
    return a


def _ket(v, name: str = "ket") -> np.ndarray:
    a = np.asarray(v, dtype=complex)
    if a.ndim != 1 or a.shape[0] < 1:
        raise ValueError(f"{name} must be a one-dimensional amplitude vector")
    return a


def almost_equal(a, b, atol: float = ATOL) -> bool:
    """Elementwise absolute comparison; the package-wide notion of equality."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        return False
    return bool(np.all(np.abs(a - b) <= atol))


def pauli_strings(n: int):
    """Yield all length-n Pauli strings in serialization order."""
    if n < 1:
        raise ValueError("qubit count must be a positive integer")
    for letters in itertools.product(PAULI_LETTERS, repeat=n):
        yield "".join(letters)


def pauli_matrix(letters: str) -> np.ndarray:
    """Matrix of a Pauli string; letter 0 is the leftmost tensor factor."""
    if not letters or any(c not in _PAULI_1Q for c in letters):
        raise ValueError(f"invalid Pauli string {letters!r}")
    m = _PAULI_1Q[letters[0]]
    for c in letters[1:]:
        m = np.kron(m, _PAULI_1Q[c])
    return m


def tensor(a, b) -> np.ndarray:
    """Kronecker product; the left factor becomes the first subsystem."""
    return np.kron(_square(a, "a"), _square(b, "b"))


def symmetric_product(a, b) -> np.ndarray:
    """Symmetrized product (ab + ba)/2; Hermitian whenever a and b are."""
    a = _square(a, "a")
    b = _square(b, "b")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return 0.5 * (a @ b + b @ a)


def is_hermitian(m, atol: float = ATOL) -> bool:
    m = _square(m)
    return bool(np.all(np.abs(m - m.conj().T) <= atol))


def is_projector(m, atol: float = ATOL) -> bool:
    """True iff m is Hermitian and idempotent within atol."""
    m = _square(m)
    if not is_hermitian(m, atol):
        return False
    return bool(np.all(np.abs(m @ m - m) <= atol))


def _string_sort_key(s: str):
    return tuple(_LETTER_RANK[c] for c in s)


@dataclass(frozen=True)
class PauliExpansion:
    """Real coefficient map over the length-n Pauli strings.

    Coefficients are stored in serialization order regardless of the order
    they were supplied in, so iteration (and hence serialization) is
    deterministic. Treat instances as immutable.
    """

    n: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("qubit count must be a positive integer")
        checked = {}
        for s, c in self.coeffs.items():
            if not isinstance(s, str) or len(s) != self.n or any(
                ch not in _LETTER_RANK for ch in s
            ):
                raise ValueError(f"invalid Pauli string {s!r} for n={self.n}")
            c = float(c)
            if not math.isfinite(c):
                raise ValueError(f"coefficient of {s} is not finite")
            checked[s] = c
        normalized = {s: checked[s] for s in sorted(checked, key=_string_sort_key)}
        object.__setattr__(self, "coeffs", normalized)

    @property
    def dim(self) -> int:
        return 2 ** self.n


def pauli_expand(m, n: int | None = None, atol: float = ATOL) -> PauliExpansion:
    """Expand a Hermitian matrix over Pauli strings.

    The coefficient of string s is trace(pauli_matrix(s) @ m) / dim. For a
    Hermitian matrix every coefficient is real; an imaginary part above atol
    means the input is not Hermitian and raises. Coefficients of magnitude
    at most atol are dropped from the map.
    """
    m = _square(m)
    dim = m.shape[0]
    inferred = dim.bit_length() - 1
    if 2 ** inferred != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    if n is None:
        n = inferred
    elif n != inferred:
        raise ValueError(f"qubit count {n} does not match dimension {dim}")

    coeffs = {}
    for s in pauli_strings(n):
        c = complex(np.trace(pauli_matrix(s) @ m)) / dim
        if abs(c.imag) > atol:
            raise ValueError(
                f"matrix is not Hermitian: coefficient of {s} has imaginary part {c.imag!r}"
            )
        if abs(c.real) > atol:
            coeffs[s] = c.real
    return PauliExpansion(n=n, coeffs=coeffs)


def pauli_synthesize(e: PauliExpansion) -> np.ndarray:
    """Weighted sum of Pauli-string matrices; the zero matrix for an empty map."""
    out = np.zeros((e.dim, e.dim), dtype=complex)
    for s, c in e.coeffs.items():
        out += c * pauli_matrix(s)
    return out


def projector_from_ket(ket) -> np.ndarray:
    """Rank-1 projector |k><k| of a unit-norm amplitude vector."""
    k = _ket(ket)
    return np.outer(k, k.conj())


def fix_global_phase(ket, atol: float = ATOL) -> np.ndarray:
    """Rotate a ket so its first amplitude of magnitude > atol is real positive."""
    k = _ket(ket).copy()
    for amp in k:
        if abs(amp) > atol:
            k *= abs(amp) / amp
            break
    return k


# ---------------------------------------------------------------------------
# JSON encoding: a complex number is a two-element [re, im] array, a matrix is
# an array of rows, a ket an array of amplitudes. Pauli expansions serialize
# as {"n": int, "coeffs": {"XZ": 0.25, ...}}.
# ---------------------------------------------------------------------------


def _complex_from_json(item, where: str) -> complex:
    if (
        not isinstance(item, (list, tuple))
        or len(item) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in item)
    ):
        raise ValueError(f"{where}: a complex number must be a [re, im] pair")
    return complex(item[0], item[1])


def matrix_to_json(m) -> list:
    m = _square(m)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def matrix_from_json(data) -> np.ndarray:
    if not isinstance(data, list) or not data:
        raise ValueError("matrix must be a non-empty array of rows")
    dim = len(data)
    out = np.empty((dim, dim), dtype=complex)
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != dim:
            raise ValueError(f"matrix row {i} must be an array of {dim} entries")
        for j, item in enumerate(row):
            out[i, j] = _complex_from_json(item, f"matrix entry ({i},{j})")
    return out


def ket_to_json(ket) -> list:
    k = _ket(ket)
    return [[float(z.real), float(z.imag)] for z in k]


def ket_from_json(data) -> np.ndarray:
    if not isinstance(data, list) or not data:
        raise ValueError("ket must be a non-empty array of amplitudes")
    return np.array(
        [_complex_from_json(item, f"ket amplitude {i}") for i, item in enumerate(data)],
        dtype=complex,
    )


def expansion_to_json(e: PauliExpansion) -> dict:
    return {"n": e.n, "coeffs": dict(e.coeffs)}


def expansion_from_json(data) -> PauliExpansion:
    if not isinstance(data, dict) or "n" not in data or "coeffs" not in data:
        raise ValueError('expansion must be an object {"n": ..., "coeffs": {...}}')
    if not isinstance(data["coeffs"], dict):
        raise ValueError("expansion coeffs must be an object")
    return PauliExpansion(n=data["n"], coeffs=data["coeffs"])
