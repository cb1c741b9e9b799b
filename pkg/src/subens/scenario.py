"""A four-outcome entangled two-qubit measurement and its exclusion structure.

Two qubits are each prepared in "0" or "+", giving four product inputs. The
measurement defined by the coefficient tables below has the property that
every outcome occurs with probability zero for exactly one of those inputs,
even though all four inputs share the sub-ensemble that assigns z=0, x=+ to
both qubits. The contribution tables computed here decompose each input into
its four assignment-operator products and show how negative quasi-probability
entries cancel the shared positive term wherever an outcome is excluded.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import fmt
from .operators import (
    ATOL,
    PauliExpansion,
    almost_equal,
    fix_global_phase,
    is_projector,
    pauli_synthesize,
    projector_from_ket,
    tensor,
)
from .states import product_input, standard_ket
from .subensemble import assignment_operator

OUTCOMES = (1, 2, 3, 4)

INPUT_PAIRS = (("0", "0"), ("0", "+"), ("+", "0"), ("+", "+"))

# Pauli coefficient tables of the four measurement projectors. The 1/4 scale
# makes each synthesized matrix a genuine rank-1 projector; the sign pattern
# on the X/Z strings determines which input each outcome excludes.
ETA_EXPANSIONS = {
    1: {"II": 0.25, "XX": 0.25, "YY": 0.25, "ZZ": -0.25},
    2: {"II": 0.25, "XZ": 0.25, "YY": -0.25, "ZX": -0.25},
    3: {"II": 0.25, "XZ": -0.25, "YY": -0.25, "ZX": 0.25},
    4: {"II": 0.25, "XX": -0.25, "YY": 0.25, "ZZ": 0.25},
}

# Assignment-operator components whose equal mixture reconstitutes each
# preparation: rho("0") = (R(0+) + R(0-))/2 and rho("+") = (R(0+) + R(1+))/2.
ASSIGNMENT_COMPONENTS = {
    "0": (("0", "+"), ("0", "-")),
    "+": (("0", "+"), ("1", "+")),
}

COMMON_COMPONENT = ("0", "+")


class ScenarioConsistencyError(RuntimeError):
    """The built-in measurement failed its own verification."""


def eta_projector(i: int) -> np.ndarray:
    """Projector onto entangled measurement state i (1-based)."""
    if i not in ETA_EXPANSIONS:
        raise ValueError(f"outcome index must be one of {OUTCOMES}, got {i!r}")
    return pauli_synthesize(PauliExpansion(n=2, coeffs=ETA_EXPANSIONS[i]))


@dataclass(frozen=True)
class EtaBasis:
    """The verified four-outcome measurement.

    ``excluded_input`` maps each outcome index to the preparation pair it
    assigns zero probability.
    """

    projectors: tuple
    kets: tuple
    excluded_input: dict

    def outcome_excluding(self, first: str, second: str) -> int:
        for i, pair in self.excluded_input.items():
            if pair == (first, second):
                return i
        raise ValueError(f"no outcome excludes input {first}{second}")


def eta_basis() -> EtaBasis:
    """Build the measurement from its coefficient tables and verify it.

    Raises ScenarioConsistencyError if the stored coefficients fail the
    rank-1 / orthogonality / completeness checks or do not produce the
    one-excluded-input-per-outcome pattern with outcome 1 excluding "00".
    """
    projectors = []
    for i in OUTCOMES:
        p = eta_projector(i)
        if not is_projector(p) or abs(np.trace(p).real - 1.0) > ATOL:
            raise ScenarioConsistencyError(
                f"outcome {i} coefficients do not synthesize a rank-1 projector"
            )
        p.setflags(write=False)
        projectors.append(p)

    if not almost_equal(sum(projectors), np.eye(4)):
        raise ScenarioConsistencyError("projectors do not sum to the identity")
    for a in range(4):
        for b in range(a + 1, 4):
            if not almost_equal(projectors[a] @ projectors[b], np.zeros((4, 4))):
                raise ScenarioConsistencyError(
                    f"outcomes {a + 1} and {b + 1} are not orthogonal"
                )

    kets = []
    for i, p in zip(OUTCOMES, projectors):
        vals, vecs = np.linalg.eigh(p)
        ket = fix_global_phase(vecs[:, int(np.argmax(vals))])
        if not almost_equal(projector_from_ket(ket), p):
            raise ScenarioConsistencyError(
                f"outcome {i} projector is not the outer product of its leading eigenvector"
            )
        ket.setflags(write=False)
        kets.append(ket)

    excluded = {}
    for i, p in zip(OUTCOMES, projectors):
        zeros = [
            pair
            for pair in INPUT_PAIRS
            if abs(np.trace(p @ product_input(*pair).density).real) <= ATOL
        ]
        if len(zeros) != 1:
            raise ScenarioConsistencyError(
                f"outcome {i} excludes {len(zeros)} inputs instead of exactly one"
            )
        excluded[i] = zeros[0]
    if len(set(excluded.values())) != len(INPUT_PAIRS):
        raise ScenarioConsistencyError("exclusion map is not a bijection")
    if excluded[1] != ("0", "0"):
        raise ScenarioConsistencyError(
            f"outcome 1 must exclude input 00, found {''.join(excluded[1])}"
        )

    return EtaBasis(projectors=tuple(projectors), kets=tuple(kets), excluded_input=excluded)


def outcome_probability(i: int, first: str, second: str) -> float:
    """Born probability of outcome i for the product input, clamped to [0, 1]."""
    rho = product_input(first, second).density
    p = float(np.trace(eta_projector(i) @ rho).real)
    return min(max(p, 0.0), 1.0)


def _assignment(z_label: str, x_label: str) -> np.ndarray:
    return assignment_operator(
        projector_from_ket(standard_ket(z_label)),
        projector_from_ket(standard_ket(x_label)),
    )


def _component_label(component: tuple) -> str:
    return component[0] + component[1]


@dataclass(frozen=True)
class ContributionTable:
    """Sub-ensemble-by-outcome table for one product input.

    Row r is the assignment product R_s x R_t (trace 1 each), column i the
    measurement outcome; entries are tr(P_i (R_s x R_t)). Rows sum to 1, and
    a quarter of each column sum is the Born probability of that outcome.
    """

    first: str
    second: str
    row_labels: tuple
    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=float)
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def input_label(self) -> str:
        return self.first + self.second

    def row_sums(self) -> np.ndarray:
        return self.entries.sum(axis=1)

    def column_probabilities(self) -> np.ndarray:
        """Born probabilities recovered as quarter column sums."""
        return self.entries.sum(axis=0) / 4.0

    def to_json_dict(self) -> dict:
        return {
            "input": self.input_label,
            "outcomes": list(OUTCOMES),
            "rows": list(self.row_labels),
            "entries": [[float(v) for v in row] for row in self.entries],
        }

    def to_csv(self) -> str:
        return "\n".join(fmt.csv_line(row) for row in self.entries)

    def render(self) -> str:
        header = [f"input {self.input_label}"] + [f"eta_{i}" for i in OUTCOMES]
        rows = [
            [label] + [float(v) for v in row]
            for label, row in zip(self.row_labels, self.entries)
        ]
        return fmt.render_table(header, rows)


def contribution_table(first: str, second: str) -> ContributionTable:
    """Contribution of each assignment-product sub-ensemble to each outcome."""
    for label in (first, second):
        if label not in ASSIGNMENT_COMPONENTS:
            raise ValueError(f"unknown preparation label {label!r}; expected 0 or +")
    projectors = [eta_projector(i) for i in OUTCOMES]
    labels = []
    rows = []
    for s in ASSIGNMENT_COMPONENTS[first]:
        op_s = _assignment(*s)
        for t in ASSIGNMENT_COMPONENTS[second]:
            joint = tensor(op_s, _assignment(*t))
            labels.append(f"({_component_label(s)};{_component_label(t)})")
            rows.append([float(np.trace(p @ joint).real) for p in projectors])
    return ContributionTable(
        first=first, second=second, row_labels=tuple(labels), entries=np.array(rows)
    )


@dataclass(frozen=True)
class RowReport:
    label: str
    entries: tuple
    negatives: tuple  # 1-based outcome indices with a negative entry

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "entries": [float(v) for v in self.entries],
            "negatives": list(self.negatives),
        }


@dataclass(frozen=True)
class InputReport:
    first: str
    second: str
    excluded_outcome: int
    born_probability: float
    rows: tuple

    @property
    def input_label(self) -> str:
        return self.first + self.second

    def negative_contributors(self) -> tuple:
        """Rows whose entry at the excluded outcome is negative."""
        return tuple(
            r.label for r in self.rows if self.excluded_outcome in r.negatives
        )

    def to_json_dict(self) -> dict:
        return {
            "input": self.input_label,
            "excluded_outcome": self.excluded_outcome,
            "born_probability": float(self.born_probability),
            "rows": [r.to_json_dict() for r in self.rows],
        }


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ParadoxReport:
    inputs: tuple
    checks: tuple
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
            "inputs": [r.to_json_dict() for r in self.inputs],
        }

    def render(self) -> str:
        lines = [f"scenario verification: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok" if c.passed else "FAIL"
            lines.append(f"  [{mark:>4}] {c.name}: {c.detail}")
        for r in self.inputs:
            lines.append("")
            lines.append(
                f"input {r.input_label}: excluded outcome {r.excluded_outcome}, "
                f"Born probability {fmt.format_float(r.born_probability, fmt.PRETTY_DIGITS)}"
            )
            contributors = ", ".join(r.negative_contributors()) or "none"
            lines.append(
                f"  negative contributors to outcome {r.excluded_outcome}: {contributors}"
            )
            header = [f"  input {r.input_label}"] + [f"eta_{i}" for i in OUTCOMES]
            table_rows = [
                ["  " + row.label] + [float(v) for v in row.entries] for row in r.rows
            ]
            lines.append(fmt.render_table(header, table_rows))
        return "\n".join(lines)


def verify_paradox() -> ParadoxReport:
    """Check every exclusion invariant of the built-in scenario.

    Never raises: a broken construction shows up as a failed check so that
    callers can render the report and map it to an exit status.
    """
    try:
        basis = eta_basis()
    except ScenarioConsistencyError as exc:
        return ParadoxReport(
            inputs=(),
            checks=(CheckResult("measurement-construction", False, str(exc)),),
            passed=False,
        )

    checks = [
        CheckResult(
            "measurement-construction",
            True,
            "four rank-1 projectors, mutually orthogonal and complete",
        )
    ]

    exclusions = ", ".join(
        f"{i}->{''.join(basis.excluded_input[i])}" for i in OUTCOMES
    )
    checks.append(
        CheckResult(
            "exclusion-bijection",
            True,
            f"each outcome excludes exactly one input ({exclusions})",
        )
    )

    inputs = []
    common_label = f"({_component_label(COMMON_COMPONENT)};{_component_label(COMMON_COMPONENT)})"
    born_ok = True
    rows_ok = True
    common_ok = True
    bridge_ok = True
    cancel_ok = True
    for pair in INPUT_PAIRS:
        table = contribution_table(*pair)
        excluded = basis.outcome_excluding(*pair)
        born = outcome_probability(excluded, *pair)
        born_ok &= born <= ATOL

        rows = []
        for label, entries in zip(table.row_labels, table.entries):
            negatives = tuple(
                i for i, v in zip(OUTCOMES, entries) if v < -ATOL
            )
            rows.append(
                RowReport(label=label, entries=tuple(float(v) for v in entries), negatives=negatives)
            )
            if label == common_label:
                common_ok &= bool(np.all(np.abs(entries - 0.25) <= ATOL))
        rows_ok &= bool(np.all(np.abs(table.row_sums() - 1.0) <= ATOL))

        borns = np.array([outcome_probability(i, *pair) for i in OUTCOMES])
        bridge_ok &= bool(np.all(np.abs(table.column_probabilities() - borns) <= ATOL))

        report = InputReport(
            first=pair[0],
            second=pair[1],
            excluded_outcome=excluded,
            born_probability=born,
            rows=tuple(rows),
        )
        cancel_ok &= len(report.negative_contributors()) > 0
        inputs.append(report)

    checks.append(
        CheckResult(
            "excluded-born-zero",
            born_ok,
            "every excluded input has Born probability 0 at its outcome",
        )
    )
    checks.append(
        CheckResult(
            "row-normalization",
            rows_ok,
            "every sub-ensemble row sums to 1 across the four outcomes",
        )
    )
    checks.append(
        CheckResult(
            "common-subensemble-flat",
            common_ok,
            f"row {common_label} contributes 1/4 to every outcome for all inputs",
        )
    )
    checks.append(
        CheckResult(
            "born-consistency",
            bridge_ok,
            "quarter column sums reproduce the Born probabilities for all inputs",
        )
    )
    checks.append(
        CheckResult(
            "negative-cancellation",
            cancel_ok,
            "each excluded outcome receives negative sub-ensemble contributions",
        )
    )

    passed = all(c.passed for c in checks)
    return ParadoxReport(inputs=tuple(inputs), checks=tuple(checks), passed=passed)
