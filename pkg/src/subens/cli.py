"""Command-line interface exposing the library constructions as reports.

Exit codes: 0 success, 1 invariant-verification failure, 2 usage error,
3 malformed input file. Diagnostics go to stderr, data to stdout, and output
is byte-deterministic for a fixed invocation and format.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fmt
from .operators import (
    expansion_to_json,
    ket_from_json,
    ket_to_json,
    matrix_from_json,
    matrix_to_json,
    pauli_expand,
    pauli_strings,
    projector_from_ket,
)
from .scenario import (
    OUTCOMES,
    ScenarioConsistencyError,
    contribution_table,
    eta_basis,
    outcome_probability,
    verify_paradox,
)
from .states import parse_input_label
from .subensemble import (
    basis_from_kets,
    decompose,
    mh_joint,
    named_basis,
    validate_density,
)

INPUT_CHOICES = ("00", "0+", "+0", "++")


class InputFileError(Exception):
    """A state or basis file could not be read or fails validation."""


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFileError(f"{path} is not valid JSON: {exc}") from exc


def _looks_like_ket(data) -> bool:
    return (
        isinstance(data, list)
        and bool(data)
        and all(
            isinstance(e, (list, tuple))
            and len(e) == 2
            and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in e)
            for e in data
        )
    )


def _load_density(path: str):
    data = _load_json(path)
    try:
        if _looks_like_ket(data):
            rho = projector_from_ket(ket_from_json(data))
        else:
            rho = matrix_from_json(data)
        return validate_density(rho)
    except ValueError as exc:
        raise InputFileError(f"{path}: {exc}") from exc


def _load_basis(source: str, dim: int):
    if source in ("Z", "X"):
        basis = named_basis(source)
    else:
        data = _load_json(source)
        if not isinstance(data, list):
            raise InputFileError(f"{source}: basis file must be an array of kets")
        try:
            basis = basis_from_kets([ket_from_json(k) for k in data])
        except ValueError as exc:
            raise InputFileError(f"{source}: {exc}") from exc
    if basis.dim != dim:
        raise InputFileError(
            f"basis dimension {basis.dim} does not match state dimension {dim}"
        )
    return basis


def _expansion_text(expansion) -> str:
    parts = []
    for s, c in expansion.coeffs.items():
        sign = "-" if c < 0 else "+"
        parts.append(f"{sign}{fmt.format_float(abs(c), fmt.PRETTY_DIGITS)} {s}")
    return " ".join(parts)


def _ket_text(ket) -> str:
    return "(" + ", ".join(fmt.format_complex(z) for z in ket) + ")"


def _matrix_lines(m, pad: str = "  ") -> list:
    cells = [[fmt.format_complex(z) for z in row] for row in m]
    width = max(len(c) for row in cells for c in row)
    return [pad + "  ".join(c.rjust(width) for c in row) for row in cells]


def _cmd_eta(args) -> int:
    basis = eta_basis()
    expansions = [pauli_expand(p, 2) for p in basis.projectors]
    excluded = {str(i): "".join(basis.excluded_input[i]) for i in OUTCOMES}
    if args.format == "json":
        doc = {
            "projectors": [expansion_to_json(e) for e in expansions],
            "kets": [ket_to_json(k) for k in basis.kets],
            "excluded_input": excluded,
        }
        print(fmt.dumps(doc))
    elif args.format == "csv":
        strings = list(pauli_strings(2))
        lines = [fmt.csv_line(["outcome"] + strings)]
        for i, e in zip(OUTCOMES, expansions):
            lines.append(fmt.csv_line([i] + [e.coeffs.get(s, 0.0) for s in strings]))
        print("\n".join(lines))
    else:
        lines = ["four-outcome entangled two-qubit measurement"]
        for i, e, k in zip(OUTCOMES, expansions, basis.kets):
            lines.append(f"outcome {i}: excludes input {excluded[str(i)]}")
            lines.append(f"  expansion: {_expansion_text(e)}")
            lines.append(f"  ket: {_ket_text(k)}")
        print("\n".join(lines))
    return 0


def _cmd_prob(args) -> int:
    first, second = parse_input_label(args.input)
    probs = [outcome_probability(i, first, second) for i in OUTCOMES]
    if args.format == "json":
        print(fmt.dumps({"input": args.input, "probabilities": probs}))
    elif args.format == "csv":
        lines = [fmt.csv_line(["outcome", "probability"])]
        lines += [fmt.csv_line([i, p]) for i, p in zip(OUTCOMES, probs)]
        print("\n".join(lines))
    else:
        lines = [f"outcome probabilities for input {args.input}"]
        lines += [
            f"outcome {i}: {fmt.format_float(p, fmt.PRETTY_DIGITS)}"
            for i, p in zip(OUTCOMES, probs)
        ]
        print("\n".join(lines))
    return 0


def _cmd_table(args) -> int:
    first, second = parse_input_label(args.input)
    table = contribution_table(first, second)
    if args.format == "json":
        print(fmt.dumps(table.to_json_dict()))
    elif args.format == "csv":
        print(table.to_csv())
    else:
        print(table.render())
    return 0


def _cmd_verify(args) -> int:
    report = verify_paradox()
    if args.format == "json":
        print(fmt.dumps(report.to_json_dict()))
    elif args.format == "csv":
        lines = [fmt.csv_line(["input", "excluded_outcome", "born_probability", "negative_rows"])]
        for r in report.inputs:
            lines.append(
                fmt.csv_line(
                    [
                        r.input_label,
                        r.excluded_outcome,
                        r.born_probability,
                        "|".join(r.negative_contributors()),
                    ]
                )
            )
        print("\n".join(lines))
    else:
        print(report.render())
    if not report.passed:
        failed = [c.name for c in report.checks if not c.passed]
        print(f"error: verification failed: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


def _cmd_decompose(args) -> int:
    rho = _load_density(args.state)
    basis = _load_basis(args.basis, rho.shape[0])
    terms = decompose(rho, basis)
    if args.format == "json":
        doc = {
            "basis": basis.to_json(),
            "terms": [
                {
                    "outcome": t.outcome_index,
                    "label": basis.labels[t.outcome_index],
                    "weight": t.weight,
                    "operator": matrix_to_json(t.operator),
                }
                for t in terms
            ],
        }
        print(fmt.dumps(doc))
    elif args.format == "csv":
        dim = basis.dim
        header = ["outcome", "label", "weight"]
        for i in range(dim):
            for j in range(dim):
                header += [f"r{i}c{j}_re", f"r{i}c{j}_im"]
        lines = [fmt.csv_line(header)]
        for t in terms:
            cells = [t.outcome_index, basis.labels[t.outcome_index], t.weight]
            for row in t.operator:
                for z in row:
                    cells += [float(z.real), float(z.imag)]
            lines.append(fmt.csv_line(cells))
        print("\n".join(lines))
    else:
        name = basis.name or "custom"
        lines = [f"sub-ensemble decomposition over basis {name} (dim {basis.dim})"]
        for t in terms:
            lines.append(
                f"outcome {t.outcome_index} ({basis.labels[t.outcome_index]}): "
                f"weight {fmt.format_float(t.weight, fmt.PRETTY_DIGITS)}"
            )
            lines += _matrix_lines(t.operator)
        print("\n".join(lines))
    return 0


def _cmd_mh(args) -> int:
    rho = _load_density(args.state)
    basis_a = _load_basis(args.basis_a, rho.shape[0])
    basis_b = _load_basis(args.basis_b, rho.shape[0])
    dist = mh_joint(rho, basis_a, basis_b)
    if args.format == "json":
        print(fmt.dumps(dist.to_json_dict()))
    elif args.format == "csv":
        print(dist.to_csv())
    else:
        name_a = basis_a.name or "A"
        name_b = basis_b.name or "B"
        header = ["q(a,b)"] + list(basis_b.labels)
        rows = [
            [label] + [float(v) for v in row]
            for label, row in zip(basis_a.labels, dist.q)
        ]
        lines = [
            f"joint quasi-probability: rows {name_a}, columns {name_b}",
            fmt.render_table(header, rows),
        ]
        print("\n".join(lines))
    return 0


def _add_format(parser) -> None:
    parser.add_argument(
        "--format",
        choices=("json", "csv", "pretty"),
        default="pretty",
        help="output format (default: pretty)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subens",
        description=(
            "Sub-ensemble decompositions, joint quasi-probability tables, and the "
            "four-outcome two-qubit exclusion scenario."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("eta", help="print the four-outcome entangled measurement")
    _add_format(p)
    p.set_defaults(func=_cmd_eta)

    p = sub.add_parser("prob", help="outcome probabilities for a product input")
    p.add_argument("--input", required=True, choices=INPUT_CHOICES)
    _add_format(p)
    p.set_defaults(func=_cmd_prob)

    p = sub.add_parser("table", help="sub-ensemble contribution table for a product input")
    p.add_argument("--input", required=True, choices=INPUT_CHOICES)
    _add_format(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="verify every exclusion invariant of the scenario")
    _add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("decompose", help="decompose a state file over a basis")
    p.add_argument("--state", required=True, help="JSON matrix or ket file")
    p.add_argument("--basis", required=True, help="Z, X, or a JSON ket-list file")
    _add_format(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("mh", help="joint quasi-probability table of a state over two bases")
    p.add_argument("--state", required=True, help="JSON matrix or ket file")
    p.add_argument("--basis-a", required=True, help="Z, X, or a JSON ket-list file")
    p.add_argument("--basis-b", required=True, help="Z, X, or a JSON ket-list file")
    _add_format(p)
    p.set_defaults(func=_cmd_mh)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except InputFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ScenarioConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
