"""Command line driver: scenario ingestion, verification, reporting.

Scenario files are JSON objects with a ``kind`` field selecting the check
(``projective_ab``, ``weyl_char``, ``kernel2cat_selftest``, ``lemma313``)
and a kind-specific payload.  Scalar values in scenario files use the infix
grammar of :mod:`lefschetz.exprs`: variables ``[a-z][a-z0-9_]*``, integer
literals, operators ``+ - * / ^``, e.g. ``"(q^4 - 1)/(q - 1)"``.

Exit codes: 0 the identity holds (or all trials pass), 1 the two sides
differ, 2 the scenario is not transversal (coincident eigenvalues), 3 an
internal invariant failed, 4 malformed input.

The ``--probabilistic-equality`` flag replaces exact comparison by repeated
evaluation at random rational points.  It is a speed escape hatch for large
expressions and is not authoritative: it can report equality for unequal
inputs with small probability, and is never used by the acceptance tests.
"""

from __future__ import annotations

import functools
import json
import random
import sys
import time

import click

from .exprs import ExprError, format_scalar, parse_scalar
from .kernels import CompositionError
from .linalg import (char_poly_via_elimination, char_poly_via_exterior,
                     poly_in_var)
from .projective import (BundleSpec, NotTransversalError, ProjScenario,
                         ab_rhs, lefschetz_lhs)
from .sampling import random_matrix
from .scalars import probably_equal, rf_equal
from .selftest import run_selftest
from .weyl import (CARTAN_TABLES, DivisionError, build_root_system,
                   fixed_point_character_sum, weyl_character, weyl_dimension)

EXIT_EQUAL = 0
EXIT_UNEQUAL = 1
EXIT_NOT_TRANSVERSAL = 2
EXIT_INTERNAL = 3
EXIT_INPUT = 4

_VERDICT_CODES = {"equal": EXIT_EQUAL, "unequal": EXIT_UNEQUAL,
                  "not_transversal": EXIT_NOT_TRANSVERSAL}


class SchemaError(ValueError):
    """A scenario payload violated its schema; carries the field path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _field(payload, path: str, name: str, kind, *, optional=False, default=None):
    here = f"{path}.{name}" if path else name
    if name not in payload:
        if optional:
            return default
        raise SchemaError(here, "missing required field")
    value = payload[name]
    if kind is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise SchemaError(here, f"expected an integer, got {value!r}")
    elif kind is str and not isinstance(value, str):
        raise SchemaError(here, f"expected a string, got {value!r}")
    elif kind is list and not isinstance(value, list):
        raise SchemaError(here, f"expected an array, got {value!r}")
    return value


def _parse_scalar_field(text, path: str):
    if not isinstance(text, str):
        raise SchemaError(path, f"expected a scalar expression string, got {text!r}")
    try:
        return parse_scalar(text)
    except ExprError as e:
        raise SchemaError(path, str(e))


def _emit(report: dict, json_path: str | None, code: int):
    lhs, rhs = report.get("lhs"), report.get("rhs")
    line = f"[{report['kind']}] verdict: {report['verdict']}"
    if lhs is not None:
        line += f"\n  lhs = {lhs}\n  rhs = {rhs}"
    for extra in ("dimension", "detail"):
        if report.get(extra) is not None:
            line += f"\n  {extra}: {report[extra]}"
    click.echo(line)
    if json_path:
        with open(json_path, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    sys.exit(code)


def _guard(fn):
    """Map exception classes to the exit-code contract."""

    @functools.wraps(fn)
    def wrapped(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except SchemaError as e:
            click.echo(f"input error: {e}", err=True)
            sys.exit(EXIT_INPUT)
        except (AssertionError, CompositionError, DivisionError) as e:
            click.echo(f"internal invariant failure: {e}", err=True)
            sys.exit(EXIT_INTERNAL)

    return wrapped


def _make_eq(probabilistic: bool, seed: int = 0):
    if probabilistic:
        return lambda a, b: probably_equal(a, b, seed=seed, trials=8)
    return rf_equal


def _run_projective(payload: dict, path: str, eq) -> tuple[dict, int]:
    dim = _field(payload, path, "dim", int)
    if dim < 1:
        raise SchemaError(f"{path}.dim" if path else "dim", "must be at least 1")
    raw_eigs = _field(payload, path, "eigenvalues", list)
    eigs = [_parse_scalar_field(e, f"{path or 'payload'}.eigenvalues[{i}]")
            for i, e in enumerate(raw_eigs)]
    raw_bundle = _field(payload, path, "bundle", list)
    summands = []
    for i, entry in enumerate(raw_bundle):
        here = f"{path or 'payload'}.bundle[{i}]"
        if not isinstance(entry, dict):
            raise SchemaError(here, f"expected an object, got {entry!r}")
        twist = _field(entry, here, "twist", int)
        scalar = _parse_scalar_field(_field(entry, here, "scalar", str), f"{here}.scalar")
        summands.append((twist, scalar))
    try:
        sc = ProjScenario(dim, eigs)
        b = BundleSpec(summands)
    except ValueError as e:
        raise SchemaError(path or "payload", str(e))

    start = time.perf_counter()
    report = {"kind": "projective_ab",
              "inputs": {"dim": dim, "eigenvalues": raw_eigs,
                         "bundle": raw_bundle},
              "lhs": None, "rhs": None}
    try:
        rhs = ab_rhs(sc, b)
    except NotTransversalError as e:
        report["verdict"] = "not_transversal"
        report["detail"] = f"eigenvalues {e.i} and {e.j} coincide"
        report["elapsed"] = time.perf_counter() - start
        return report, EXIT_NOT_TRANSVERSAL
    lhs = lefschetz_lhs(sc, b)
    report["lhs"] = format_scalar(lhs)
    report["rhs"] = format_scalar(rhs)
    report["verdict"] = "equal" if eq(lhs, rhs) else "unequal"
    report["elapsed"] = time.perf_counter() - start
    return report, _VERDICT_CODES[report["verdict"]]


def _format_weight_poly(p) -> str:
    if not p.terms:
        return "0"
    bits = []
    for w in sorted(p.terms, reverse=True):
        c = p.terms[w]
        body = "e[" + ",".join(str(x) for x in w) + "]"
        bits.append(body if c == 1 else f"{c}*{body}")
    return " + ".join(bits)


def _run_weyl(payload: dict, path: str) -> tuple[dict, int]:
    label = _field(payload, path, "type", str)
    if label not in CARTAN_TABLES:
        raise SchemaError(f"{path}.type" if path else "type",
                          f"unknown root system {label!r}; "
                          f"choose from {sorted(CARTAN_TABLES)}")
    rs = build_root_system(label)
    weight = _field(payload, path, "weight", list)
    here = f"{path}.weight" if path else "weight"
    if len(weight) != rs.rank:
        raise SchemaError(here, f"{label} needs {rs.rank} coordinates, "
                          f"got {len(weight)}")
    for i, x in enumerate(weight):
        if isinstance(x, bool) or not isinstance(x, int):
            raise SchemaError(f"{here}[{i}]", f"expected an integer, got {x!r}")
        if x < 0:
            raise SchemaError(f"{here}[{i}]", "weight must be dominant "
                              "(nonnegative coordinates)")

    start = time.perf_counter()
    chi = weyl_character(rs, weight)
    fps = fixed_point_character_sum(rs, weight)
    dim = chi.coefficient_sum()
    if dim != weyl_dimension(rs, weight):
        raise AssertionError("character dimension disagrees with the "
                             "dimension formula")
    verdict = "equal" if chi == fps else "unequal"
    report = {"kind": "weyl_char",
              "inputs": {"type": label, "weight": list(weight)},
              "lhs": _format_weight_poly(chi),
              "rhs": _format_weight_poly(fps),
              "dimension": dim,
              "verdict": verdict,
              "elapsed": time.perf_counter() - start}
    return report, _VERDICT_CODES[verdict]


def _run_kernel_selftest(payload: dict, path: str) -> tuple[dict, int]:
    seed = _field(payload, path, "seed", int, optional=True, default=0)
    trials = _field(payload, path, "trials", int)
    if trials < 1:
        raise SchemaError(f"{path}.trials" if path else "trials",
                          "must be at least 1")
    start = time.perf_counter()
    result = run_selftest(seed, trials)
    properties = [{"name": r.name, "trials": r.trials, "passed": r.passed,
                   "counterexample": r.counterexample}
                  for r in result.results]
    verdict = "equal" if result.ok else "unequal"
    report = {"kind": "kernel2cat_selftest", "seed": seed,
              "inputs": {"seed": seed, "trials": trials},
              "properties": properties, "verdict": verdict,
              "elapsed": time.perf_counter() - start}
    return report, _VERDICT_CODES[verdict]


def _run_lemma313(payload: dict, path: str) -> tuple[dict, int]:
    dim = _field(payload, path, "dim", int)
    if dim < 1:
        raise SchemaError(f"{path}.dim" if path else "dim", "must be at least 1")
    trials = _field(payload, path, "trials", int)
    if trials < 1:
        raise SchemaError(f"{path}.trials" if path else "trials",
                          "must be at least 1")
    seed = _field(payload, path, "seed", int, optional=True, default=0)

    start = time.perf_counter()
    passed = 0
    counterexample = None
    for k in range(trials):
        rng = random.Random(f"{seed}:lemma313:{k}")
        a = random_matrix(rng, dim, dim)
        via_minors = poly_in_var(char_poly_via_exterior(a), "s")
        via_elim = char_poly_via_elimination(a, "s")
        if rf_equal(via_minors, via_elim):
            passed += 1
        elif counterexample is None:
            counterexample = f"trial {k} (seed {seed})"
    verdict = "equal" if passed == trials else "unequal"
    report = {"kind": "lemma313", "seed": seed,
              "inputs": {"dim": dim, "trials": trials, "seed": seed},
              "trials": trials, "passed": passed,
              "counterexample": counterexample, "verdict": verdict,
              "elapsed": time.perf_counter() - start}
    return report, _VERDICT_CODES[verdict]


_KINDS = {"projective_ab": None, "weyl_char": None,
          "kernel2cat_selftest": None, "lemma313": None}


@click.group()
def main():
    """Exact verification of holomorphic fixed-point identities."""


@main.command()
@click.argument("file", type=click.Path())
@click.option("--json", "json_path", type=click.Path(), default=None,
              help="Write a machine-readable report to this path.")
@click.option("--probabilistic-equality", is_flag=True,
              help="Compare scalars by random evaluation (not authoritative).")
@_guard
def verify(file, json_path, probabilistic_equality):
    """Run the scenario described in a JSON FILE."""
    try:
        with open(file) as fh:
            data = json.load(fh)
    except OSError as e:
        raise SchemaError(file, str(e))
    except json.JSONDecodeError as e:
        raise SchemaError(file, f"not valid JSON: {e}")
    if not isinstance(data, dict):
        raise SchemaError("", "scenario must be a JSON object")
    kind = _field(data, "", "kind", str)
    if kind not in _KINDS:
        raise SchemaError("kind", f"unknown kind {kind!r}; "
                          f"choose from {sorted(_KINDS)}")
    if kind == "projective_ab":
        report, code = _run_projective(data, "", _make_eq(probabilistic_equality))
    elif kind == "weyl_char":
        report, code = _run_weyl(data, "")
    elif kind == "kernel2cat_selftest":
        report, code = _run_kernel_selftest(data, "")
    else:
        report, code = _run_lemma313(data, "")
    _emit(report, json_path, code)


@main.command()
@click.option("--n", type=int, required=True,
              help="Twist of the line bundle O(n).")
@click.option("--json", "json_path", type=click.Path(), default=None)
@click.option("--probabilistic-equality", is_flag=True)
@_guard
def p1(n, json_path, probabilistic_equality):
    """The rotation of the projective line acting on O(n), as a built-in."""
    payload = {"dim": 1, "eigenvalues": ["q", "1"],
               "bundle": [{"twist": n, "scalar": "1"}]}
    report, code = _run_projective(payload, "", _make_eq(probabilistic_equality))
    _emit(report, json_path, code)


@main.command()
@click.option("--type", "label", required=True,
              help="Root system label: A1, A2, A3, B2 or G2.")
@click.option("--weight", required=True,
              help="Dominant weight as comma-separated fundamental-weight "
                   "coordinates, e.g. 1,1.")
@click.option("--json", "json_path", type=click.Path(), default=None)
@_guard
def weyl(label, weight, json_path):
    """Compare the character formula against the fixed-point sum."""
    try:
        coords = [int(x) for x in weight.split(",")]
    except ValueError:
        raise SchemaError("weight", f"expected comma-separated integers, "
                          f"got {weight!r}")
    report, code = _run_weyl({"type": label, "weight": coords}, "")
    _emit(report, json_path, code)


@main.command()
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--trials", type=int, default=100, show_default=True)
@click.option("--json", "json_path", type=click.Path(), default=None)
@_guard
def selftest(seed, trials, json_path):
    """Run the seeded property suites for the kernel calculus."""
    report, code = _run_kernel_selftest({"seed": seed, "trials": trials}, "")
    for p in report["properties"]:
        line = f"  {p['name']}: {p['passed']}/{p['trials']}"
        if p["counterexample"]:
            line += f"  FIRST FAILURE at {p['counterexample']}"
        click.echo(line)
    _emit(report, json_path, code)


@main.command()
@click.option("--dim", type=int, required=True, help="Matrix size.")
@click.option("--trials", type=int, default=50, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--json", "json_path", type=click.Path(), default=None)
@_guard
def lemma313(dim, trials, seed, json_path):
    """Check det(1 + sA) against the principal-minor expansion on random
    matrices."""
    report, code = _run_lemma313({"dim": dim, "trials": trials, "seed": seed}, "")
    _emit(report, json_path, code)


if __name__ == "__main__":
    main()
