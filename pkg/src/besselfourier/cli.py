"""Command-line front end.

Three subcommands:

* ``eval``      evaluate one function by one method over a parameter grid,
                one report per tuple (JSON lines by default, CSV optional);
* ``compare``   evaluate by two or more methods and report per-point and
                maximum discrepancies, failing (exit 1) above --tol;
* ``bench``     time every requested method over the grid and report
                median wall time plus accuracy against the function's
                oracle method, as one machine-readable JSON document.

Complex values are written ``re,im`` and bare reals ``re``.  Repeated
parameter flags build a cross-product grid; ``--grid FILE`` reads one
tuple per line in the same flag syntax.  Exit codes: 0 ok, 1 numeric or
domain failure, 2 usage.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import itertools
import json
import math
import platform
import shlex
import statistics
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import __version__
from .bessel import (
    bessel_i_connection,
    bessel_i_integral,
    bessel_j_classical,
    bessel_j_integral,
    bessel_j_series,
)
from .errors import BesselFourierError
from .expansions import (
    ExpansionResult,
    erf_bessel_alternating,
    erf_bessel_general,
    erf_bessel_sum,
    erf_maclaurin,
    fresnel_bessel,
)
from .gegenbauer import (
    gegenbauer_integral_arc,
    gegenbauer_integral_vilenkin,
    gegenbauer_recurrence,
)
from .neumann import (
    NeumannKernelParams,
    kelvin_ber_bei,
    lommel_u,
    lommel_v,
    neumann_direct,
    neumann_integral,
    neumann_integral_halfrange,
    sequence_from_name,
)
from .orders import as_order
from .quadrature import fresnel_F


# ---------------------------------------------------------------------------
# parameter and report plumbing
# ---------------------------------------------------------------------------


def parse_complex(text: str) -> complex:
    """CLI complex syntax: "a,b" means a + b i, bare "a" means real a."""
    text = text.strip()
    if "," in text:
        re_s, _, im_s = text.partition(",")
        return complex(float(re_s), float(im_s))
    return complex(float(text))


def format_complex(v: complex) -> str:
    if v.imag == 0.0:
        return f"{v.real:.17g}"
    return f"{v.real:.17g},{v.imag:.17g}"


@dataclass(frozen=True)
class ParamSpec:
    name: str
    kind: str  # "complex" | "real" | "int" | "str"
    required: bool = True
    default: object = None

    def convert(self, text: str):
        if self.kind == "complex":
            return parse_complex(text)
        if self.kind == "real":
            return float(text)
        if self.kind == "int":
            return int(text)
        return text


@dataclass(frozen=True)
class FunctionSpec:
    name: str
    params: tuple[ParamSpec, ...]
    methods: tuple[str, ...]  # first entry is the bench oracle
    evaluate: Callable[[str, dict], tuple[complex, dict]]


@dataclass(frozen=True)
class EvalReport:
    function: str
    method: str
    parameters: dict
    value: complex
    diagnostics: dict = field(default_factory=dict)
    wall_time_ns: int = 0

    def to_json_dict(self) -> dict:
        return {
            "function": self.function,
            "method": self.method,
            "parameters": {k: _param_text(v) for k, v in self.parameters.items()},
            "re": _float17(self.value.real),
            "im": _float17(self.value.imag),
            "diagnostics": self.diagnostics,
            "wall_time_ns": self.wall_time_ns,
        }


def _float17(x: float) -> float:
    # 17 significant digits round-trip binary64 exactly
    return float(f"{x:.17g}")


def _param_text(v) -> str:
    if isinstance(v, complex):
        return format_complex(v)
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _diag(res) -> dict:
    if isinstance(res, ExpansionResult):
        return {
            "terms_used": res.terms_used,
            "tail_bound": _float17(res.tail_bound),
            "converged": True,
        }
    return {}


# ---------------------------------------------------------------------------
# function registry
# ---------------------------------------------------------------------------


def _eval_bessel_j(method: str, p: dict):
    nu, z = p["nu"], p["z"]
    if method == "series":
        value, ev = bessel_j_series(nu, z, full_output=True)
        return value, {
            "terms_used": ev.terms_used,
            "converged": ev.converged,
        }
    if method == "integral":
        value, res = bessel_j_integral(nu, z, full_output=True)
        d = {}
        if res is not None:
            d = {
                "nodes_used": res.nodes_used,
                "err_estimate": _float17(res.err_estimate),
                "converged": res.converged,
            }
        return value, d
    order = as_order(nu)
    if not order.is_integer:
        raise BesselFourierError(
            f"the classical integral needs an integer order, got {nu!r}"
        )
    value, res = bessel_j_classical(order.int_part, z, full_output=True)
    return value, {
        "nodes_used": res.nodes_used,
        "err_estimate": _float17(res.err_estimate),
        "converged": res.converged,
    }


def _eval_bessel_i(method: str, p: dict):
    nu, z = p["nu"], p["z"]
    if method == "series":
        return bessel_i_connection(nu, z), {}
    if method == "integral":
        value, res = bessel_i_integral(nu, z, full_output=True)
        d = {}
        if res is not None:
            d = {
                "nodes_used": res.nodes_used,
                "err_estimate": _float17(res.err_estimate),
                "converged": res.converged,
            }
        return value, d
    order = as_order(nu)
    if not order.is_integer:
        raise BesselFourierError(
            f"the classical integral needs an integer order, got {nu!r}"
        )
    value, res = bessel_i_integral(order.int_part, z, full_output=True)
    return value, {"nodes_used": res.nodes_used, "converged": res.converged}


def _eval_gegenbauer(method: str, p: dict):
    ell, nu, u = p["ell"], p["nu"], p["u"]
    if method == "recurrence":
        return gegenbauer_recurrence(ell, nu, math.cos(u)), {}
    if method == "vilenkin":
        return gegenbauer_integral_vilenkin(ell, nu, u), {}
    variant = "outer" if method == "arc-outer" else "inner"
    return gegenbauer_integral_arc(ell, nu, u, variant), {}


def _eval_neumann(method: str, p: dict):
    params = NeumannKernelParams.create(p["nu"], p["z"])
    seq = sequence_from_name(p["seq"])
    if method == "direct":
        res = neumann_direct(params, seq)
        return res.value, _diag(res)
    if method == "integral":
        return neumann_integral(params, seq), {}
    return neumann_integral_halfrange(params, seq), {}


def _eval_lommel_u(method: str, p: dict):
    return lommel_u(p["nu"], p["w"], p["z"], method), {}


def _eval_lommel_v(method: str, p: dict):
    return lommel_v(p["nu"], p["w"], p["z"], method), {}


def _eval_kelvin(method: str, p: dict):
    return kelvin_ber_bei(p["nu"], p["x"], method.replace("-", "_")), {}


def _eval_erf(method: str, p: dict):
    w = p["w"]
    if method == "maclaurin":
        return erf_maclaurin(w), {}
    if method == "sum":
        res = erf_bessel_sum(w)
    elif method == "alternating":
        res = erf_bessel_alternating(w)
    else:
        res = erf_bessel_general(w, p["phi"])
    return res.value, _diag(res)


def _eval_fresnel(method: str, p: dict):
    a, w, lam = p["a"], p["w"], p["lam"]
    if method == "quadrature":
        return fresnel_F(lam, a * w), {}
    if lam != 2.0:
        raise BesselFourierError("the Bessel-series route is the lam = 2 case")
    res = fresnel_bessel(a, w)
    return res.value, _diag(res)


FUNCTIONS: dict[str, FunctionSpec] = {
    f.name: f
    for f in (
        FunctionSpec(
            "bessel-j",
            (ParamSpec("nu", "complex"), ParamSpec("z", "complex")),
            ("series", "integral", "classical"),
            _eval_bessel_j,
        ),
        FunctionSpec(
            "bessel-i",
            (ParamSpec("nu", "complex"), ParamSpec("z", "complex")),
            ("series", "integral", "classical"),
            _eval_bessel_i,
        ),
        FunctionSpec(
            "gegenbauer",
            (ParamSpec("ell", "int"), ParamSpec("nu", "complex"), ParamSpec("u", "real")),
            ("recurrence", "vilenkin", "arc-outer", "arc-inner"),
            _eval_gegenbauer,
        ),
        FunctionSpec(
            "neumann",
            (
                ParamSpec("nu", "complex"),
                ParamSpec("z", "complex"),
                ParamSpec("seq", "str"),
            ),
            ("direct", "integral", "halfrange"),
            _eval_neumann,
        ),
        FunctionSpec(
            "lommel-u",
            (ParamSpec("nu", "complex"), ParamSpec("w", "complex"), ParamSpec("z", "complex")),
            ("series", "integral"),
            _eval_lommel_u,
        ),
        FunctionSpec(
            "lommel-v",
            (ParamSpec("nu", "complex"), ParamSpec("w", "complex"), ParamSpec("z", "complex")),
            ("series", "integral"),
            _eval_lommel_v,
        ),
        FunctionSpec(
            "kelvin",
            (ParamSpec("nu", "complex"), ParamSpec("x", "real")),
            ("connection", "neumann-series", "integral", "classical-integer"),
            _eval_kelvin,
        ),
        FunctionSpec(
            "erf",
            (
                ParamSpec("w", "complex"),
                ParamSpec("phi", "real", required=False, default=math.pi / 2.0),
            ),
            ("maclaurin", "sum", "alternating", "general"),
            _eval_erf,
        ),
        FunctionSpec(
            "fresnel",
            (
                ParamSpec("w", "complex"),
                ParamSpec("a", "real", required=False, default=1.0),
                ParamSpec("lam", "real", required=False, default=2.0),
            ),
            ("quadrature", "bessel"),
            _eval_fresnel,
        ),
    )
}


# ---------------------------------------------------------------------------
# grids
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="besselfourier",
        description="Evaluate, cross-compare and benchmark the special-function routes.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser):
        p.add_argument("function", choices=sorted(FUNCTIONS))
        for name in ("nu", "z", "w", "x", "u", "phi", "a", "lam", "ell", "seq"):
            p.add_argument(f"--{name}", action="append", default=None)
        p.add_argument("--grid", help="file with one parameter tuple per line, flag syntax")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--jobs", type=int, default=1)

    p_eval = sub.add_parser("eval", help="evaluate one method over a grid")
    add_common(p_eval)
    p_eval.add_argument("--method", required=True)

    p_cmp = sub.add_parser("compare", help="cross-compare two or more methods")
    add_common(p_cmp)
    p_cmp.add_argument("--methods", required=True, help="comma-separated, at least two")
    p_cmp.add_argument("--tol", type=float, default=1e-7)

    p_bench = sub.add_parser("bench", help="time methods and check accuracy vs oracle")
    add_common(p_bench)
    p_bench.add_argument("--methods", default=None, help="comma-separated; default all")
    p_bench.add_argument("--repeat", type=int, default=5)
    return parser


def _collect_grid(fn: FunctionSpec, args, parser: argparse.ArgumentParser) -> list[dict]:
    by_name = {p.name: p for p in fn.params}

    def convert(pspec: ParamSpec, texts: list[str]) -> list:
        try:
            return [pspec.convert(t) for t in texts]
        except ValueError as exc:
            parser.error(f"bad value for --{pspec.name}: {exc}")

    flag_values = {}
    for pspec in fn.params:
        raw = getattr(args, pspec.name, None)
        if raw:
            flag_values[pspec.name] = convert(pspec, raw)
    if args.grid:
        tuples = []
        with open(args.grid, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                tokens = shlex.split(line)
                point = {k: v[0] for k, v in flag_values.items()}
                it = iter(tokens)
                for tok in it:
                    if not tok.startswith("--"):
                        parser.error(f"grid line {line!r}: expected --name value pairs")
                    name = tok[2:]
                    if name not in by_name:
                        parser.error(f"grid line {line!r}: unknown parameter {name!r}")
                    try:
                        val = next(it)
                    except StopIteration:
                        parser.error(f"grid line {line!r}: missing value for {tok}")
                    point[name] = by_name[name].convert(val)
                tuples.append(point)
        points = tuples
    else:
        names, columns = [], []
        for pspec in fn.params:
            if pspec.name in flag_values:
                names.append(pspec.name)
                columns.append(flag_values[pspec.name])
        points = [dict(zip(names, combo)) for combo in itertools.product(*columns)]
        if not points:
            points = [{}]
    # defaults and required checks
    full = []
    for point in points:
        for pspec in fn.params:
            if pspec.name not in point:
                if pspec.required:
                    parser.error(f"{fn.name} needs --{pspec.name}")
                point[pspec.name] = pspec.default
        full.append(point)
    return full


def _check_methods(fn: FunctionSpec, methods: list[str], parser: argparse.ArgumentParser):
    for m in methods:
        if m not in fn.methods:
            parser.error(
                f"unknown method {m!r} for {fn.name}; choose from {', '.join(fn.methods)}"
            )


def _timed_eval(fn: FunctionSpec, method: str, point: dict) -> EvalReport:
    start = time.perf_counter_ns()
    value, diag = fn.evaluate(method, point)
    elapsed = time.perf_counter_ns() - start
    return EvalReport(fn.name, method, point, complex(value), diag, elapsed)


def _run_many(tasks, jobs: int):
    if jobs <= 1:
        return [t() for t in tasks]
    with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda t: t(), tasks))


# ---------------------------------------------------------------------------
# output writers
# ---------------------------------------------------------------------------


def _write_reports(reports: list[EvalReport], fmt: str, out) -> None:
    if fmt == "json":
        for r in reports:
            out.write(json.dumps(r.to_json_dict()) + "\n")
        return
    param_names = sorted(reports[0].parameters) if reports else []
    diag_names = sorted({k for r in reports for k in r.diagnostics})
    header = ["function", "method", *param_names, "re", "im", *diag_names]
    out.write(",".join(header) + "\n")
    for r in reports:
        row = [r.function, r.method]
        row += [_param_text(r.parameters[k]) for k in param_names]
        row += [f"{r.value.real:.17g}", f"{r.value.imag:.17g}"]
        row += [str(r.diagnostics.get(k, "")) for k in diag_names]
        out.write(",".join(f'"{c}"' if "," in c else c for c in row) + "\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_eval(fn: FunctionSpec, args, parser) -> int:
    _check_methods(fn, [args.method], parser)
    grid = _collect_grid(fn, args, parser)
    tasks = [lambda p=p: _timed_eval(fn, args.method, p) for p in grid]
    reports = _run_many(tasks, args.jobs)
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        _write_reports(reports, args.format, out)
    finally:
        if args.out:
            out.close()
    return 0


def _cmd_compare(fn: FunctionSpec, args, parser) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    if len(methods) < 2:
        parser.error("compare needs at least two methods")
    _check_methods(fn, methods, parser)
    grid = _collect_grid(fn, args, parser)

    def compare_point(point: dict) -> dict:
        values = {m: _timed_eval(fn, m, point).value for m in methods}
        vs = list(values.values())
        abs_d = max(abs(a - b) for a in vs for b in vs)
        scale = max(1.0, max(abs(v) for v in vs))
        return {
            "parameters": {k: _param_text(v) for k, v in point.items()},
            "values": {m: [_float17(v.real), _float17(v.imag)] for m, v in values.items()},
            "abs_discrepancy": _float17(abs_d),
            "rel_discrepancy": _float17(abs_d / scale),
        }

    tasks = [lambda p=p: compare_point(p) for p in grid]
    rows = _run_many(tasks, args.jobs)
    max_abs = max((r["abs_discrepancy"] for r in rows), default=0.0)
    max_rel = max((r["rel_discrepancy"] for r in rows), default=0.0)
    passed = max_rel <= args.tol
    summary = {
        "summary": True,
        "points": len(rows),
        "methods": methods,
        "max_abs_discrepancy": _float17(max_abs),
        "max_rel_discrepancy": _float17(max_rel),
        "tol": args.tol,
        "pass": passed,
    }
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        if args.format == "json":
            for r in rows:
                out.write(json.dumps(r) + "\n")
            out.write(json.dumps(summary) + "\n")
        else:
            param_names = sorted(grid[0]) if grid else []
            header = [*param_names]
            for m in methods:
                header += [f"{m}_re", f"{m}_im"]
            header += ["abs_discrepancy", "rel_discrepancy"]
            out.write(",".join(header) + "\n")
            for r in rows:
                row = [r["parameters"][k] for k in param_names]
                for m in methods:
                    row += [f"{v:.17g}" for v in r["values"][m]]
                row += [f"{r['abs_discrepancy']:.17g}", f"{r['rel_discrepancy']:.17g}"]
                out.write(",".join(f'"{c}"' if "," in c else c for c in row) + "\n")
            print(json.dumps(summary), file=sys.stderr)
    finally:
        if args.out:
            out.close()
    return 0 if passed else 1


def _cmd_bench(fn: FunctionSpec, args, parser) -> int:
    if args.repeat < 1:
        parser.error("--repeat must be a positive integer")
    methods = (
        [m.strip() for m in args.methods.split(",") if m.strip()]
        if args.methods
        else list(fn.methods)
    )
    _check_methods(fn, methods, parser)
    grid = _collect_grid(fn, args, parser)
    oracle_method = fn.methods[0]

    oracle_values = [fn.evaluate(oracle_method, p)[0] for p in grid]
    report: dict = {
        "environment": {
            "python": platform.python_version(),
            "implementation": platform.python_implementation(),
            "platform": platform.platform(),
            "package_version": __version__,
            "timestamp_utc": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        },
        "function": fn.name,
        "oracle_method": oracle_method,
        "grid_points": len(grid),
        "repetitions": args.repeat,
        "methods": {},
    }
    for m in methods:
        points = []
        all_times = []
        for point, oracle in zip(grid, oracle_values):
            times = []
            value = 0j
            for _ in range(args.repeat):
                start = time.perf_counter_ns()
                value = complex(fn.evaluate(m, point)[0])
                times.append(time.perf_counter_ns() - start)
            med = int(statistics.median(times))
            all_times.extend(times)
            points.append(
                {
                    "parameters": {k: _param_text(v) for k, v in point.items()},
                    "re": _float17(value.real),
                    "im": _float17(value.imag),
                    "accuracy": _float17(abs(value - oracle) / max(1.0, abs(oracle))),
                    "median_ns": med,
                }
            )
        report["methods"][m] = {
            "median_ns": int(statistics.median(all_times)),
            "max_accuracy_error": max(p["accuracy"] for p in points),
            "points": points,
        }
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        out.write(json.dumps(report, indent=2) + "\n")
    finally:
        if args.out:
            out.close()
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    fn = FUNCTIONS[args.function]
    try:
        if args.command == "eval":
            return _cmd_eval(fn, args, parser)
        if args.command == "compare":
            return _cmd_compare(fn, args, parser)
        return _cmd_bench(fn, args, parser)
    except BesselFourierError as exc:
        print(f"besselfourier: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
