"""Command-line interface: nodoid <eigen|table1|bifurcate|scan|profile|plot>.

Exit codes: 0 success, 2 usage error, 3 numerical failure, 4 I/O failure.
Machine outputs are deterministic; wall-clock timings go into diagnostics
only when --timings is passed, so identical invocations stay byte-identical.
"""

import argparse
import math
import os
import sys
import time

import numpy as np

from . import reference
from .bifurcation import (
    bifurcation_point,
    mean_potential_bound,
    preliminary_crossing,
    scan,
)
from .errors import NodoidError
from .geometry import NEAR_SPHERE_LIMIT, from_mass, height, mass_from_neck
from .quadrature import adaptive_simpson
from .records import OutputRecord, format_number, to_csv, to_json, to_text
from .ritz import spectrum_estimate
from .shooting import first_eigenvalue, integrate_eigen_ode, known_eigenpair_residuals
from .svgplot import line_plot

__all__ = ["main"]


class _UsageError(Exception):
    pass


def _check_mass(mass: float) -> float:
    if not mass < 0.0:
        raise _UsageError(f"nodoids require a negative mass, got {mass}")
    if mass > NEAR_SPHERE_LIMIT:
        raise _UsageError(
            f"mass {mass} is inside the near-sphere band ({NEAR_SPHERE_LIMIT}, 0) "
            "where the period diverges"
        )
    return mass


def _emit_record(record: OutputRecord, fmt: str, out_path: str | None) -> None:
    if fmt == "json":
        text = to_json(record)
    elif fmt == "csv":
        text = to_csv(record)
    else:
        text = to_text(record)
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _spectrum_payload(spectrum) -> dict:
    return {
        "n": spectrum.n,
        "eigenvalues": [float(v) for v in spectrum.eigenvalues],
    }


def _cmd_eigen(args) -> OutputRecord:
    mass = _check_mass(args.mass)
    p = from_mass(mass)
    results: dict = {
        "bounds": {
            "lower": mass - 2.0,
            "upper": mass,
            "mean_potential_bound": mean_potential_bound(p),
        }
    }
    diagnostics: dict = {}
    if args.method in ("shoot", "both"):
        shot = first_eigenvalue(p, tol=args.tol)
        results["lambda0_shoot"] = shot.lam
        diagnostics["shoot"] = {
            "residual": shot.residual,
            "iterations": shot.iterations,
            "steps": shot.steps,
        }
    if args.method in ("ritz", "both"):
        spectrum = spectrum_estimate(p, args.ritz_n)
        results["lambda0_ritz"] = float(spectrum.eigenvalues[0])
        results["ritz_spectrum"] = _spectrum_payload(spectrum)
    if args.method == "both":
        results["discrepancy"] = abs(
            results["lambda0_shoot"] - results["lambda0_ritz"]
        )
    r1, r2 = known_eigenpair_residuals(p)
    diagnostics["known_pair_residuals"] = [r1, r2]
    return OutputRecord(
        command="eigen",
        inputs={
            "mass": mass,
            "method": args.method,
            "ritz_n": args.ritz_n,
            "tol": args.tol,
        },
        results=results,
        diagnostics=diagnostics,
    )


def _cmd_table1(args) -> OutputRecord:
    rows = []
    worst = 0.0
    for mass in reference.MASS_GRID:
        p = from_mass(mass)
        spectrum = spectrum_estimate(p, reference.RITZ_N).eigenvalues
        computed = {
            "quarter_period": p.period / 4.0,
            "lower_bound": mass - 2.0,
            "mean_potential_bound": mean_potential_bound(p),
            "lambda0_shoot": first_eigenvalue(p, tol=1e-8).lam,
            "lambda0_ritz": float(spectrum[0]),
            "lambda1_ritz": float(spectrum[1]),
            "lambda2_ritz": float(spectrum[2]),
            "lambda34_ritz": float(0.5 * (spectrum[3] + spectrum[4])),
            "lambda56_ritz": float(0.5 * (spectrum[5] + spectrum[6])),
        }
        for column in reference.COLUMNS:
            ref_value = reference.REFERENCE_TABLE[mass][column]
            value = computed[column]
            row = {
                "m": mass,
                "column": column,
                "computed": value,
                "reference": ref_value,
                "deviation": value - ref_value,
                "note": "",
            }
            expected = reference.SUSPECTED_MISPRINTS.get((mass, column))
            if expected is not None:
                row["note"] = (
                    f"suspected misprint: lambda0 = m - 1 gives {expected:g}"
                )
            else:
                worst = max(worst, abs(value - ref_value))
            rows.append(row)
    return OutputRecord(
        command="table1",
        inputs={"ritz_n": reference.RITZ_N},
        results={"rows": rows},
        diagnostics={"max_abs_deviation_excluding_misprints": worst},
    )


def _cmd_bifurcate(args) -> OutputRecord:
    results: dict = {"preliminary_crossing": preliminary_crossing(tol=args.tol)}
    diagnostics: dict = {}
    if args.method in ("shoot", "both"):
        m_star, neck = bifurcation_point("shoot", tol=args.tol)
        results["m_star_shoot"] = m_star
        results["neck_radius_shoot"] = neck
    if args.method in ("ritz", "both"):
        m_star, neck = bifurcation_point("ritz", tol=args.tol, ritz_n=args.ritz_n)
        results["m_star_ritz"] = m_star
        results["neck_radius_ritz"] = neck
    if args.method == "both":
        results["method_agreement"] = abs(
            results["m_star_shoot"] - results["m_star_ritz"]
        )
        results["m_star"] = results["m_star_shoot"]
        results["neck_radius"] = results["neck_radius_shoot"]
    else:
        key = f"m_star_{args.method}"
        results["m_star"] = results[key]
        results["neck_radius"] = results[f"neck_radius_{args.method}"]
    results["mass_from_neck_half"] = mass_from_neck(0.5)
    return OutputRecord(
        command="bifurcate",
        inputs={"method": args.method, "tol": args.tol, "ritz_n": args.ritz_n},
        results=results,
        diagnostics=diagnostics,
    )


def _cmd_scan(args) -> OutputRecord:
    if not args.mass_max < 0.0:
        raise _UsageError("mass-max must be negative")
    if not args.mass_min < args.mass_max:
        raise _UsageError("mass-min must be below mass-max")
    if args.steps < 2:
        raise _UsageError("steps must be at least 2")
    _check_mass(args.mass_max)
    masses = [
        args.mass_min + (args.mass_max - args.mass_min) * i / (args.steps - 1)
        for i in range(args.steps)
    ]
    rows = scan(
        masses,
        method=args.method,
        ritz_n=args.ritz_n,
        shoot_tol=args.tol,
    )
    csv_rows = []
    for row in rows:
        csv_rows.append(
            {
                "m": row.m,
                "lower": row.lower,
                "upper": row.upper,
                "mean_potential_bound": row.mean_potential_bound,
                "lambda0_shoot": row.lambda0_shoot,
                "lambda0_ritz": row.lambda0_ritz,
                "residual_primary": row.residual_primary,
                "known_pair_residual_0": row.known_pair_residuals[0],
                "known_pair_residual_1": row.known_pair_residuals[1],
            }
        )
    with open(args.out, "w", newline="") as fh:
        header = list(csv_rows[0].keys()) if csv_rows else ["m"]
        fh.write(",".join(header) + "\n")
        for row in csv_rows:
            fh.write(
                ",".join(
                    "" if row[k] is None else format_number(row[k]) for k in header
                )
                + "\n"
            )
    max_residual = max((r.residual_primary for r in rows), default=float("nan"))
    return OutputRecord(
        command="scan",
        inputs={
            "mass_min": args.mass_min,
            "mass_max": args.mass_max,
            "steps": args.steps,
            "method": args.method,
            "ritz_n": args.ritz_n,
            "tol": args.tol,
            "out": args.out,
        },
        results={
            "rows_written": len(csv_rows),
            "rows_failed": args.steps - len(csv_rows),
            "max_abs_lambda0_minus_m_minus_1": max_residual,
        },
        diagnostics={},
    )


def _profile_samples(p, samples: int):
    ts = [p.a + p.period * i / (samples - 1) for i in range(samples)]
    xs = [0.0]
    for i in range(1, samples):
        seg = adaptive_simpson(
            lambda s: p.m / 4.0 + height(p, s) ** 2, ts[i - 1], ts[i], tol=1e-12
        )
        xs.append(xs[-1] + seg)
    zs = [height(p, t) for t in ts]
    return ts, xs, zs


def _cmd_profile(args) -> OutputRecord:
    mass = _check_mass(args.mass)
    if args.samples < 16:
        raise _UsageError("samples must be at least 16")
    p = from_mass(mass)
    ts, xs, zs = _profile_samples(p, args.samples)
    if args.kind == "csv":
        with open(args.out, "w", newline="") as fh:
            fh.write("t,x,z\n")
            for t, x, z in zip(ts, xs, zs):
                fh.write(f"{format_number(t)},{format_number(x)},{format_number(z)}\n")
        written = {"rows": args.samples}
    else:
        if args.theta_samples < 3:
            raise _UsageError("theta-samples must be at least 3")
        lines = []
        thetas = [2.0 * math.pi * j / args.theta_samples for j in range(args.theta_samples)]
        for x, z in zip(xs, zs):
            for theta in thetas:
                lines.append(
                    f"v {format_number(x)} {format_number(z * math.cos(theta))} "
                    f"{format_number(z * math.sin(theta))}"
                )
        nt = args.theta_samples

        def vid(i: int, j: int) -> int:
            return i * nt + (j % nt) + 1

        for i in range(args.samples - 1):
            for j in range(nt):
                v00 = vid(i, j)
                v01 = vid(i, j + 1)
                v10 = vid(i + 1, j)
                v11 = vid(i + 1, j + 1)
                # winding (theta edge first, then t edge) keeps the normal
                # pointing away from the axis at the bulge
                lines.append(f"f {v00} {v01} {v11}")
                lines.append(f"f {v00} {v11} {v10}")
        with open(args.out, "w", newline="") as fh:
            fh.write("\n".join(lines) + "\n")
        written = {
            "vertices": args.samples * nt,
            "faces": 2 * (args.samples - 1) * nt,
        }
    return OutputRecord(
        command="profile",
        inputs={
            "mass": mass,
            "samples": args.samples,
            "theta_samples": args.theta_samples,
            "kind": args.kind,
            "out": args.out,
        },
        results={
            **written,
            "min_z": min(zs),
            "max_z": max(zs),
            "neck": p.neck,
            "bulge": p.bulge,
        },
        diagnostics={},
    )


def _eigenfunction_curve(p, lam: float, steps: int = 2048):
    """u over [a, (a+b)/2] with u(0) = 1, u'(0) = 0 (even about t = 0)."""
    quarter = p.period / 4.0
    traj = integrate_eigen_ode(p, lam, quarter, steps=steps)
    ts = [-row[0] for row in reversed(traj)] + [row[0] for row in traj[1:]]
    us = [row[1] for row in reversed(traj)] + [row[1] for row in traj[1:]]
    return ts, us


def _cmd_plot(args) -> OutputRecord:
    inputs = {
        "what": args.what,
        "mass": args.mass,
        "lambda": args.lam,
        "out": args.out,
    }
    if args.what == "bounds":
        masses = [-4.0 + 3.9 * i / 13.0 for i in range(14)]
        f1 = [m for m in masses]
        f3 = [m - 2.0 for m in masses]
        f2 = [mean_potential_bound(from_mass(m)) for m in masses]
        lam = [first_eigenvalue(from_mass(m), tol=1e-5).lam for m in masses]
        svg = line_plot(
            [
                ("f1 = m", masses, f1),
                ("f2 = mean-potential bound", masses, f2),
                ("f3 = m - 2", masses, f3),
                ("lambda0(m)", masses, lam),
            ],
            title="First-eigenvalue bounds against mass",
            xlabel="m",
            ylabel="lambda",
        )
        results = {"masses": len(masses)}
    else:
        if args.mass is None:
            raise _UsageError(f"--mass is required for --what {args.what}")
        mass = _check_mass(args.mass)
        p = from_mass(mass)
        if args.what == "potential":
            ts = [p.a + p.period * i / 800.0 for i in range(801)]
            vs = [2.0 * height(p, t) ** 2 + mass * mass / (8.0 * height(p, t) ** 2) for t in ts]
            svg = line_plot(
                [("V(t)", ts, vs)],
                title=f"Potential V over one period, m = {mass:g}",
                xlabel="t",
                ylabel="V",
            )
            results = {"min_V": min(vs), "max_V": max(vs)}
        else:
            lam = args.lam
            if lam is None:
                lam = first_eigenvalue(p, tol=1e-8).lam
            ts, us = _eigenfunction_curve(p, lam)
            svg = line_plot(
                [("u(t)", ts, us)],
                title=f"Eigenfunction candidate, m = {mass:g}, lambda = {lam:.6g}",
                xlabel="t",
                ylabel="u",
            )
            results = {"lambda": lam, "min_u": min(us), "max_u": max(us)}
    with open(args.out, "w", newline="") as fh:
        fh.write(svg)
    return OutputRecord(
        command="plot", inputs=inputs, results=results, diagnostics={}
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nodoid",
        description="Eigenvalue analysis of the periodic stability operator "
        "on Delaunay nodoids",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, default_format="json"):
        sp.add_argument(
            "--format", choices=("json", "csv", "text"), default=default_format
        )
        sp.add_argument(
            "--timings",
            action="store_true",
            help="include wall-clock timings in diagnostics "
            "(off by default to keep output byte-reproducible)",
        )

    sp = sub.add_parser("eigen", help="first eigenvalue for one mass")
    sp.add_argument("--mass", type=float, required=True)
    sp.add_argument("--method", choices=("shoot", "ritz", "both"), default="both")
    sp.add_argument("--ritz-n", type=int, default=13, dest="ritz_n")
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.add_argument("--out", default=None)
    add_common(sp)

    sp = sub.add_parser("table1", help="recompute the reference table and compare")
    sp.add_argument("--out", default=None)
    add_common(sp)

    sp = sub.add_parser("bifurcate", help="locate the first bifurcation point")
    sp.add_argument("--method", choices=("shoot", "ritz", "both"), default="both")
    sp.add_argument("--tol", type=float, default=1e-4)
    sp.add_argument("--ritz-n", type=int, default=13, dest="ritz_n")
    sp.add_argument("--out", default=None)
    add_common(sp)

    sp = sub.add_parser("scan", help="lambda0 = m - 1 verification over a mass grid")
    sp.add_argument("--mass-min", type=float, required=True, dest="mass_min")
    sp.add_argument("--mass-max", type=float, required=True, dest="mass_max")
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--method", choices=("shoot", "ritz", "both"), default="both")
    sp.add_argument("--ritz-n", type=int, default=13, dest="ritz_n")
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.add_argument("--out", required=True, help="path of the CSV written per row")
    add_common(sp)

    sp = sub.add_parser("profile", help="export the profile curve or a surface mesh")
    sp.add_argument("--mass", type=float, required=True)
    sp.add_argument("--samples", type=int, default=256)
    sp.add_argument("--theta-samples", type=int, default=64, dest="theta_samples")
    sp.add_argument("--kind", choices=("csv", "obj"), default="csv")
    sp.add_argument("--out", required=True)
    add_common(sp)

    sp = sub.add_parser("plot", help="static SVG plots")
    sp.add_argument(
        "--what", choices=("eigenfunction", "potential", "bounds"), required=True
    )
    sp.add_argument("--mass", type=float, default=None)
    sp.add_argument("--lambda", type=float, default=None, dest="lam")
    sp.add_argument("--out", required=True)
    add_common(sp)

    return parser


_DISPATCH = {
    "eigen": _cmd_eigen,
    "table1": _cmd_table1,
    "bifurcate": _cmd_bifurcate,
    "scan": _cmd_scan,
    "profile": _cmd_profile,
    "plot": _cmd_plot,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    os.environ.setdefault("NODOID_THREADS", "1")
    started = time.perf_counter()
    try:
        record = _DISPATCH[args.command](args)
        if args.timings:
            record.diagnostics["elapsed_seconds"] = time.perf_counter() - started
        if args.command in ("eigen", "table1", "bifurcate"):
            # --out redirects the record itself
            _emit_record(record, args.format, args.out)
        else:
            # --out received the artifact (CSV/OBJ/SVG); record to stdout
            _emit_record(record, args.format, None)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NodoidError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
