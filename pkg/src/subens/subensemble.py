"""Sub-ensemble decomposition of density operators over measurement bases.

A state rho splits across any orthonormal rank-1 basis {|f>} into the
Hermitian terms

    R_f = (rho |f><f| + |f><f| rho) / 2,

which sum back to rho exactly and whose traces are the Born probabilities of
the outcomes. The terms are generally not positive semidefinite. Evaluating
the terms of one basis against the projectors of a second basis yields a
joint quasi-probability table: its two marginals are the genuine single-basis
outcome distributions, while individual entries can be negative whenever the
bases do not commute with the state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import fmt
from .operators import (
    ATOL,
    _square,
    almost_equal,
    is_hermitian,
    is_projector,
    ket_to_json,
    projector_from_ket,
    symmetric_product,
)
from .states import standard_ket

# Eigenvalue slack when validating density matrices; looser than ATOL to
# absorb accumulation in small dense eigensolves.
POSITIVITY_ATOL = 1e-10


@dataclass(frozen=True)
class MeasurementBasis:
    """Complete orthonormal set of rank-1 measurement outcomes.

    ``vectors`` holds one unit ket per outcome; ``labels`` names the outcomes
    for rendering and serialization. ``name`` is set for the built-in Z and X
    bases and None for ad-hoc bases.
    """

    vectors: tuple
    labels: tuple
    name: str | None = None

    def __post_init__(self):
        vectors = tuple(np.asarray(v, dtype=complex) for v in self.vectors)
        if not vectors:
            raise ValueError("basis must contain at least one vector")
        dim = vectors[0].shape[0] if vectors[0].ndim == 1 else -1
        for v in vectors:
            if v.ndim != 1 or v.shape[0] != dim:
                raise ValueError("basis vectors must be kets of a common dimension")
        if len(vectors) != dim:
            raise ValueError(
                f"basis of dimension {dim} must have exactly {dim} vectors, got {len(vectors)}"
            )
        gram = np.array([[np.vdot(u, v) for v in vectors] for u in vectors])
        if not almost_equal(gram, np.eye(dim)):
            raise ValueError("basis vectors are not orthonormal")
        completeness = sum(projector_from_ket(v) for v in vectors)
        if not almost_equal(completeness, np.eye(dim)):
            raise ValueError("basis is not complete")
        labels = tuple(str(s) for s in self.labels)
        if len(labels) != dim:
            raise ValueError("need one label per basis vector")
        for v in vectors:
            v.setflags(write=False)
        object.__setattr__(self, "vectors", vectors)
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def projector(self, index: int) -> np.ndarray:
        return projector_from_ket(self.vectors[index])

    def to_json(self):
        """Name for the built-in bases, otherwise the list of kets."""
        if self.name is not None:
            return self.name
        return [ket_to_json(v) for v in self.vectors]


def basis_from_kets(kets, labels=None, name: str | None = None) -> MeasurementBasis:
    kets = tuple(kets)
    if labels is None:
        labels = tuple(str(i) for i in range(len(kets)))
    return MeasurementBasis(vectors=kets, labels=tuple(labels), name=name)


def z_basis() -> MeasurementBasis:
    return basis_from_kets([standard_ket("0"), standard_ket("1")], labels=("0", "1"), name="Z")


def x_basis() -> MeasurementBasis:
    return basis_from_kets([standard_ket("+"), standard_ket("-")], labels=("+", "-"), name="X")


def named_basis(name: str) -> MeasurementBasis:
    if name == "Z":
        return z_basis()
    if name == "X":
        return x_basis()
    raise ValueError(f"unknown basis name {name!r}; expected Z or X")


def validate_density(rho, dim: int | None = None) -> np.ndarray:
    """Return rho as an array, raising unless it is a valid density matrix."""
    rho = _square(rho, "density matrix")
    if dim is not None and rho.shape[0] != dim:
        raise ValueError(f"density matrix has dimension {rho.shape[0]}, expected {dim}")
    if not is_hermitian(rho):
        raise ValueError("density matrix is not Hermitian")
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > ATOL:
        raise ValueError(f"density matrix trace {trace} is not 1")
    lowest = float(np.linalg.eigvalsh(rho)[0])
    if lowest < -POSITIVITY_ATOL:
        raise ValueError(f"density matrix has negative eigenvalue {lowest}")
    return rho


@dataclass(frozen=True)
class SubensembleOperator:
    """One decomposition term: Hermitian, trace equal to the outcome probability."""

    operator: np.ndarray
    weight: float
    outcome_index: int


def decompose(rho, basis: MeasurementBasis) -> list[SubensembleOperator]:
    """Split a density matrix over a basis into symmetric-product terms.

    The returned operators sum to rho exactly and their weights sum to 1;
    single terms may fail positive semidefiniteness, which is what makes the
    joint tables built from them quasi-probabilities.
    """
    rho = validate_density(rho, dim=basis.dim)
    terms = []
    for i, ket in enumerate(basis.vectors):
        op = symmetric_product(rho, projector_from_ket(ket))
        op.setflags(write=False)
        terms.append(
            SubensembleOperator(operator=op, weight=float(np.trace(op).real), outcome_index=i)
        )
    return terms


def assignment_operator(pa, pb) -> np.ndarray:
    """Trace-normalized symmetric product of two rank-1 projectors.

    Represents the simultaneous assignment of both outcomes. For a Z
    eigenstate paired with an X eigenstate this gives (I +- X +- Z)/2. The
    symmetric product of orthogonal projectors has trace zero and cannot be
    normalized, so that case raises instead of returning a silent zero.
    """
    pa = _square(pa, "pa")
    pb = _square(pb, "pb")
    if pa.shape != pb.shape:
        raise ValueError(f"dimension mismatch: {pa.shape[0]} vs {pb.shape[0]}")
    for name, p in (("pa", pa), ("pb", pb)):
        if not is_projector(p) or abs(np.trace(p) - 1.0) > ATOL:
            raise ValueError(f"{name} is not a rank-1 projector")
    sym = symmetric_product(pa, pb)
    overlap = float(np.trace(sym).real)
    if overlap <= ATOL:
        raise ValueError("projectors are orthogonal; simultaneous assignment is undefined")
    return sym / overlap


@dataclass(frozen=True)
class JointQuasiDistribution:
    """Real joint quasi-probability table over two measurement bases.

    Rows follow basis_a outcomes, columns basis_b outcomes. Both marginals
    reproduce the single-basis Born distributions; entries may be negative.
    """

    q: np.ndarray
    basis_a: MeasurementBasis
    basis_b: MeasurementBasis

    def __post_init__(self):
        q = np.asarray(self.q, dtype=float)
        q.setflags(write=False)
        object.__setattr__(self, "q", q)

    def marginal_a(self) -> np.ndarray:
        return self.q.sum(axis=1)

    def marginal_b(self) -> np.ndarray:
        return self.q.sum(axis=0)

    def total(self) -> float:
        return float(self.q.sum())

    def to_json_dict(self) -> dict:
        return {
            "basisA": self.basis_a.to_json(),
            "basisB": self.basis_b.to_json(),
            "q": [[float(v) for v in row] for row in self.q],
        }

    def to_csv(self) -> str:
        """CSV grid with basis_b labels as columns and basis_a labels as rows."""
        lines = [fmt.csv_line([""] + list(self.basis_b.labels))]
        for label, row in zip(self.basis_a.labels, self.q):
            lines.append(fmt.csv_line([label] + [float(v) for v in row]))
        return "\n".join(lines)


def mh_joint(rho, basis_a: MeasurementBasis, basis_b: MeasurementBasis) -> JointQuasiDistribution:
    """Joint quasi-probability table q[a, b] = <b| R_a |b>.

    R_a are the decomposition terms of rho over basis_a; the result equals
    Re tr(P_b P_a rho) and is symmetric under exchanging the roles of the
    two bases.
    """
    if basis_a.dim != basis_b.dim:
        raise ValueError(f"basis dimensions differ: {basis_a.dim} vs {basis_b.dim}")
    terms = decompose(rho, basis_a)
    q = np.empty((basis_a.dim, basis_b.dim), dtype=float)
    for a, term in enumerate(terms):
        for b, ket in enumerate(basis_b.vectors):
            q[a, b] = float(np.vdot(ket, term.operator @ ket).real)
    return JointQuasiDistribution(q=q, basis_a=basis_a, basis_b=basis_b)


def negativity(dist) -> float:
    """Total magnitude of negative entries; zero iff a true joint distribution."""
    if isinstance(dist, JointQuasiDistribution):
        q = dist.q
    else:
        q = np.asarray(dist, dtype=float)
    return float(np.clip(-q, 0.0, None).sum())
