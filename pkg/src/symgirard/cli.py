"""Command-line front end: exact tables, identity verification, exports.

Subcommands:

    bases    e_k / h_k / p_k tables for one variable set (family or inline)
    verify   run an identity suite on fixed or seeded-random inputs
    table    grid of family evaluations over a parameter range
    series   dump truncated generating series coefficients

All values print exactly, as "num/den" strings or polynomial coefficient
arrays; never as decimals.  Runs are deterministic: the same flags and seed
produce byte-identical output.  Exit codes: 0 all good, 1 an identity check
failed (the falsification channel), 2 bad configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import families, series, symfun, twovar
from .exact_ring import elem_to_jsonable, elem_to_text, scalar_from_str
from .families import FamilySpec, InvalidParam
from .report import VerifyReport
from .rng import SplitMix64, random_variable_set

IDENTITIES = (
    "newton-e",
    "newton-h",
    "power-convolution",
    "pair-product",
    "pair-symmetry",
    "newton-pair",
    "classical-reduction",
    "q-row",
    "arith-prog",
    "whitney-stirling",
    "jacobi-stirling",
    "zeta-row",
    "prime-row",
)

# five rational (r, m) sample pairs for the arithmetic-progression suite
_ARITH_SAMPLES = ("1,3", "0,1", "2,5", "-1/2,1/3", "3/4,-2/7")

# enough distinct gamma values to certify the degree <= 5 polynomial identity
_GAMMA_SAMPLES = ("1/2", "1", "3/2", "7/3", "2", "-1/3", "3")


def _parse_rationals(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return tuple(scalar_from_str(part.strip()) for part in text.split(","))


def _parse_params(text: str | None) -> dict:
    params = {}
    if not text:
        return params
    for item in text.split(","):
        if "=" not in item:
            raise InvalidParam(f"malformed --params entry {item!r}; expected key=value")
        key, value = item.split("=", 1)
        key = key.strip()
        value = value.strip()
        try:
            params[key] = int(value)
        except ValueError:
            params[key] = scalar_from_str(value)
    return params


def _resolve_set(args) -> tuple[tuple, dict]:
    """Variable set plus a JSON echo of where it came from."""
    if getattr(args, "family", None):
        spec = FamilySpec(args.family, _parse_params(getattr(args, "params", None)))
        X = families.build_family(spec)
        echo = {"family": spec.to_jsonable()}
        if X and all(x == 0 for x in X):
            echo["warnings"] = ["variable set is identically zero"]
        return X, echo
    if getattr(args, "vars", None) is not None:
        X = symfun.variable_set(_parse_rationals(args.vars))
        return X, {"vars": [str(x) for x in X]}
    raise InvalidParam("need either --family or --vars")


def _write_output(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# bases


def cmd_bases(args) -> int:
    X, echo = _resolve_set(args)
    K = args.k_max
    table = symfun.basis_table(X, K)
    if args.format == "json":
        payload = {
            "command": "bases",
            "source": echo,
            "k_max": K,
            "e": [elem_to_jsonable(v) for v in table.e],
            "h": [elem_to_jsonable(v) for v in table.h],
            "p": [elem_to_jsonable(v) for v in table.p],
        }
        _write_output(args, _json_text(payload))
    else:
        rows = [
            [k, elem_to_text(table.e[k]), elem_to_text(table.h[k]), elem_to_text(table.p[k])]
            for k in range(K + 1)
        ]
        _write_output(args, _csv_text(["k", "e", "h", "p"], rows))
    return 0


# ---------------------------------------------------------------------------
# verify


def _suite_single_set(args, rng, verify_fn, n_max):
    """Random (or fixed) variable sets, all degrees 1..n_max each."""
    failures, checks = [], 0
    if args.vars is not None:
        sets = [symfun.variable_set(_parse_rationals(args.vars))]
    else:
        sets = [
            random_variable_set(rng, args.size_max, allow_zero=args.allow_zero)
            for _ in range(args.cases)
        ]
    for X in sets:
        for n in range(1, n_max + 1):
            report = verify_fn(X, n)
            checks += 1
            if not report.equal:
                failures.append(report)
    return checks, len(sets), failures


def _random_pairs(args, rng):
    def draw(fixed_size):
        if fixed_size is not None:
            return random_variable_set(
                rng, fixed_size, min_size=fixed_size, allow_zero=args.allow_zero
            )
        return random_variable_set(rng, args.pair_size_max, allow_zero=args.allow_zero)

    return [(draw(args.nx), draw(args.ny)) for _ in range(args.cases)]


def _suite_pairs(args, rng, verify_fn, index_max, bases):
    failures, checks = [], 0
    if args.vars is not None and args.yvars is not None:
        pairs = [
            (
                symfun.variable_set(_parse_rationals(args.vars)),
                symfun.variable_set(_parse_rationals(args.yvars)),
            )
        ]
    else:
        pairs = _random_pairs(args, rng)
    start = 0 if verify_fn is not twovar.verify_generalized_newton else 1
    for X, Y in pairs:
        for basis in bases:
            for idx in range(start, index_max + 1):
                report = verify_fn(X, Y, idx, basis)
                checks += 1
                if not report.equal:
                    failures.append(report)
    return checks, len(pairs), failures


def _suite_classical_reduction(args, rng):
    failures, checks = [], 0
    sets = [
        random_variable_set(rng, args.size_max, allow_zero=args.allow_zero)
        for _ in range(args.cases)
    ]
    for X in sets:
        for basis in ("h", "e"):
            for n in range(1, args.pair_n_max + 1):
                report = twovar.specialize_to_classical(X, n, basis)
                checks += 1
                if not report.equal:
                    failures.append(report)
    return checks, len(sets), failures


def _flatten(reports) -> tuple[int, list[VerifyReport]]:
    reports = list(reports)
    return len(reports), [r for r in reports if not r.equal]


def _suite_rows(args) -> dict:
    """Family-row suites over their acceptance-scale default grids."""
    out = {}
    if args.identity in ("q-row", "all"):
        reports = []
        for n in range(1, args.q_n_max + 1):
            reports.extend(families.verify_q_row(n, args.q_k_max))
        out["q-row"] = _flatten(reports)
    if args.identity in ("arith-prog", "all"):
        reports = []
        for pair in _ARITH_SAMPLES:
            r, m = _parse_rationals(pair)
            for n in range(0, args.prog_n_max + 1):
                for k in range(1, args.prog_k_max + 1):
                    reports.append(families.verify_arith_prog_power_sum(r, m, n, k))
        out["arith-prog"] = _flatten(reports)
    if args.identity in ("whitney-stirling", "all"):
        reports = [
            families.verify_whitney_stirling_crosscheck(n, k)
            for n in range(1, args.prog_n_max + 1)
            for k in range(0, args.prog_k_max + 1)
        ]
        out["whitney-stirling"] = _flatten(reports)
    if args.identity in ("jacobi-stirling", "all"):
        reports = []
        for gtext in _GAMMA_SAMPLES:
            for n in range(1, args.js_n_max + 1):
                reports.extend(
                    families.verify_jacobi_stirling_row(n, scalar_from_str(gtext), args.js_k_max)
                )
        out["jacobi-stirling"] = _flatten(reports)
    if args.identity in ("zeta-row", "all"):
        reports = []
        for s in (1, 2, 3):
            for N in range(1, args.zeta_n_max + 1):
                reports.extend(families.verify_zeta_row(s, N, args.zeta_k_max))
        out["zeta-row"] = _flatten(reports)
    if args.identity in ("prime-row", "all"):
        reports = []
        for s in (1, 2):
            for k in range(0, args.prime_k_max + 1):
                reports.append(families.verify_prime_row(s, args.prime_limit, k))
        out["prime-row"] = _flatten(reports)
    return out


def cmd_verify(args) -> int:
    rng = SplitMix64(args.seed)
    results: dict[str, tuple] = {}

    if args.identity in ("newton-e", "all"):
        results["newton-e"] = _suite_single_set(args, rng, symfun.verify_newton_e, args.n_max)
    if args.identity in ("newton-h", "all"):
        results["newton-h"] = _suite_single_set(args, rng, symfun.verify_newton_h, args.n_max)
    if args.identity in ("power-convolution", "all"):
        results["power-convolution"] = _suite_single_set(
            args, rng, symfun.verify_power_sum_convolution, args.n_max
        )
    bases = ("h", "e") if args.basis == "both" else (args.basis,)
    if args.identity in ("pair-product", "all"):
        results["pair-product"] = _suite_pairs(
            args, rng, twovar.verify_pair_product, args.pair_k_max, bases
        )
    if args.identity in ("pair-symmetry", "all"):
        results["pair-symmetry"] = _suite_pairs(
            args, rng, twovar.verify_pair_symmetry, args.pair_k_max, bases
        )
    if args.identity in ("newton-pair", "all"):
        results["newton-pair"] = _suite_pairs(
            args, rng, twovar.verify_generalized_newton, args.pair_n_max, bases
        )
    if args.identity in ("classical-reduction", "all"):
        results["classical-reduction"] = _suite_classical_reduction(args, rng)
    for name, value in _suite_rows(args).items():
        cases = value[0]
        results[name] = (value[0], cases, value[1])

    total_checks = sum(v[0] for v in results.values())
    failures = [r for v in results.values() for r in v[2]]
    passed = not failures
    summary = {
        "command": "verify",
        "identity": args.identity,
        "seed": args.seed,
        "suites": {
            name: {"checks": v[0], "cases": v[1], "failed": len(v[2])}
            for name, v in results.items()
        },
        "checks": total_checks,
        "failures": [r.to_jsonable() for r in failures],
        "passed": passed,
    }
    if args.format == "json":
        _write_output(args, _json_text(summary))
    else:
        rows = [
            [
                name,
                v[0],
                v[1],
                len(v[2]),
                json.dumps([r.to_jsonable() for r in v[2]]),
            ]
            for name, v in results.items()
        ]
        _write_output(
            args, _csv_text(["suite", "checks", "cases", "failed", "failures_json"], rows)
        )
    return 0 if passed else 1


# ---------------------------------------------------------------------------
# table


def cmd_table(args) -> int:
    params = _parse_params(args.params)
    cells = []
    kinds_with_n_grid = {"ONES", "GEOMETRIC_Q", "ARITH_PROG", "JACOBI_STIRLING"}
    if args.row in kinds_with_n_grid:
        for n in range(args.n_min, args.n_max + 1):
            spec = FamilySpec(args.row, {**params, "n": n})
            X = families.build_family(spec)
            table = symfun.basis_table(X, args.k_max)
            for k in range(args.k_max + 1):
                cells.append((spec, n, k, table.e[k], table.h[k], table.p[k]))
    elif args.row == "ZETA_NODES":
        for N in range(args.n_min, args.n_max + 1):
            spec = FamilySpec(args.row, {**params, "N": N})
            X = families.build_family(spec)
            table = symfun.basis_table(X, args.k_max)
            for k in range(args.k_max + 1):
                cells.append((spec, N, k, table.e[k], table.h[k], table.p[k]))
    elif args.row == "PRIME_NODES":
        spec = FamilySpec(args.row, params)
        X = families.build_family(spec)
        table = symfun.basis_table(X, args.k_max)
        for k in range(args.k_max + 1):
            cells.append((spec, len(X), k, table.e[k], table.h[k], table.p[k]))
    else:
        raise InvalidParam(f"unknown table row {args.row!r}")

    if args.format == "json":
        payload = {
            "command": "table",
            "row": args.row,
            "cells": [
                {
                    "family": spec.to_jsonable(),
                    "n": n,
                    "k": k,
                    "e": elem_to_jsonable(e),
                    "h": elem_to_jsonable(h),
                    "p": elem_to_jsonable(p),
                }
                for spec, n, k, e, h, p in cells
            ],
        }
        _write_output(args, _json_text(payload))
    else:
        rows = [
            [
                args.row,
                json.dumps(spec.to_jsonable()["params"]),
                n,
                k,
                elem_to_text(e),
                elem_to_text(h),
                elem_to_text(p),
            ]
            for spec, n, k, e, h, p in cells
        ]
        _write_output(
            args, _csv_text(["row", "params", "n", "k", "e", "h", "p"], rows)
        )
    return 0


# ---------------------------------------------------------------------------
# series


def cmd_series(args) -> int:
    T = args.truncation
    which = args.which
    if which in ("E", "H", "P"):
        X, echo = _resolve_set(args)
        build = {"E": series.build_E, "H": series.build_H, "P": series.build_P}[which]
        coeffs = build(X, T).to_jsonable()
    else:
        X, echo = _resolve_set(args)
        if args.yvars is None:
            raise InvalidParam(f"series {which} needs --yvars for the second set")
        Y = symfun.variable_set(_parse_rationals(args.yvars))
        echo = {**echo, "yvars": [str(y) for y in Y]}
        basis = "h" if which == "pair-h" else "e"
        coeffs = [
            elem_to_jsonable(twovar.pair_coefficient_via_product(X, Y, k, basis).value)
            for k in range(T + 1)
        ]
    if args.format == "json":
        payload = {
            "command": "series",
            "which": which,
            "source": echo,
            "truncation": T,
            "coeffs": coeffs,
        }
        _write_output(args, _json_text(payload))
    else:
        rows = [
            [k, c if isinstance(c, str) else json.dumps(c)]
            for k, c in enumerate(coeffs)
        ]
        _write_output(args, _csv_text(["k", "coefficient"], rows))
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _add_common_output_flags(p):
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="write output to this path instead of stdout")


def _add_set_flags(p):
    p.add_argument("--family", choices=families.KINDS, help="build this family")
    p.add_argument("--params", help="family parameters, e.g. n=5 or n=3,gamma=1/2")
    p.add_argument("--vars", help="inline variable set, comma-separated rationals")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symgirard",
        description="Exact symmetric-function tables and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bases", help="e/h/p table for one variable set")
    _add_set_flags(p)
    p.add_argument("--k-max", type=int, default=6)
    _add_common_output_flags(p)
    p.set_defaults(func=cmd_bases)

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("identity", choices=IDENTITIES + ("all",))
    _add_set_flags(p)
    p.add_argument("--yvars", help="inline second variable set (pair identities)")
    p.add_argument("--cases", type=int, default=200, help="random case count")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--allow-zero", action="store_true", help="allow zero entries")
    p.add_argument("--size-max", type=int, default=6)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--nx", type=int, help="fix the first set size (pair identities)")
    p.add_argument("--ny", type=int, help="fix the second set size (pair identities)")
    p.add_argument("--pair-size-max", type=int, default=4)
    p.add_argument("--pair-k-max", type=int, default=6)
    p.add_argument("--pair-n-max", type=int, default=6)
    p.add_argument("--basis", choices=("h", "e", "both"), default="both")
    p.add_argument("--q-n-max", type=int, default=6)
    p.add_argument("--q-k-max", type=int, default=6)
    p.add_argument("--prog-n-max", type=int, default=5)
    p.add_argument("--prog-k-max", type=int, default=4)
    p.add_argument("--js-n-max", type=int, default=5)
    p.add_argument("--js-k-max", type=int, default=5)
    p.add_argument("--zeta-n-max", type=int, default=8)
    p.add_argument("--zeta-k-max", type=int, default=5)
    p.add_argument("--prime-limit", type=int, default=50)
    p.add_argument("--prime-k-max", type=int, default=3)
    _add_common_output_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="family evaluation grid")
    p.add_argument("--row", choices=families.KINDS, required=True)
    p.add_argument("--params", help="fixed family parameters for the row")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--k-max", type=int, default=5)
    _add_common_output_flags(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("series", help="dump truncated generating series")
    p.add_argument("--which", choices=("E", "H", "P", "pair-h", "pair-e"), default="E")
    _add_set_flags(p)
    p.add_argument("--yvars", help="second variable set for pair-h / pair-e")
    p.add_argument("--truncation", type=int, default=8)
    _add_common_output_flags(p)
    p.set_defaults(func=cmd_series)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParam, families.DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
