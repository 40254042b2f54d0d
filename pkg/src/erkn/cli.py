"""Benchmark command line: single runs, structure reports, and grid sweeps.

Subcommands:
    run    integrate one (method, problem, h, omega) and write a drift CSV
    check  print the structure/assumption report for one method
    sweep  run a method x omega x h grid into a directory plus summary.csv

Exit codes: 0 success, 2 usage error, 3 I/O error, 4 trajectory blow-up.
CSV output is deterministic: 17 significant digits, '.' decimal separator,
'\\n' line endings.
"""

from __future__ import annotations

import argparse
import sys as _sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, TextIO, Union

from .methods import METHODS, ErknMethod, check_symmetry, check_symplecticity
from .splitting import (
    InconsistentFilter,
    NonSymmetricMethod,
    ResonantStepsize,
    TrigMethod,
    trig_method_from,
    upsilon_from,
)
from .systems import Partition, fpu_system, linear_system
from .verify import (
    DriftRecord,
    NonFiniteState,
    assumption_report,
    drift_series,
    drift_stats,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_BLOWUP = 4

# The four benchmark panels: (h, omega).
PRESETS = {
    "fig1": (0.1, 50.0),
    "fig2": (0.1, 200.0),
    "fig3": (0.01, 50.0),
    "fig4": (0.01, 200.0),
}


@dataclass(frozen=True)
class ExperimentConfig:
    method: str
    problem: str = "fpu"
    m: int = 3
    omega: float = 50.0
    h: float = 0.1
    t_end: float = 1000.0
    stride: int = 1
    output: Optional[str] = None
    format: str = "csv"


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _gfmt(x: float) -> str:
    return format(float(x), "g")


def resolve_method(name: str) -> Union[ErknMethod, TrigMethod]:
    """Registry lookup; 'trig:<name>' builds the conjugate kick-first scheme."""
    if name in METHODS:
        return METHODS[name]
    if name.startswith("trig:") and name[5:] in METHODS:
        return trig_method_from(METHODS[name[5:]])
    valid = ", ".join(list(METHODS) + [f"trig:{k}" for k in METHODS])
    raise KeyError(f"unknown method {name!r}; valid: {valid}")


def build_problem(cfg: ExperimentConfig):
    if cfg.problem == "fpu":
        return fpu_system(cfg.m, cfg.omega)
    if cfg.problem == "linear":
        return linear_system(Partition(d1=cfg.m, d2=cfg.m, omega=cfg.omega))
    raise KeyError(f"unknown problem {cfg.problem!r}; valid: fpu, linear")


def write_drift_csv(path: Union[str, Path], records: Sequence[DriftRecord]) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("t,H,I,dH,dI\n")
        for r in records:
            fh.write(
                f"{_fmt(r.t)},{_fmt(r.H)},{_fmt(r.I)},{_fmt(r.dH)},{_fmt(r.dI)}\n"
            )


def default_output_name(method: str, omega: float, h: float) -> str:
    return f"{method}_w{_gfmt(omega)}_h{_gfmt(h)}.csv"


def cmd_run(
    cfg: ExperimentConfig, out: Optional[TextIO] = None, err: Optional[TextIO] = None
) -> int:
    out = out if out is not None else _sys.stdout
    err = err if err is not None else _sys.stderr
    try:
        method = resolve_method(cfg.method)
        system = build_problem(cfg)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=err)
        return EXIT_USAGE
    except (NonSymmetricMethod, InconsistentFilter, ResonantStepsize) as exc:
        print(f"error: {cfg.method}: {exc}", file=err)
        return EXIT_USAGE
    if cfg.h <= 0.0 or cfg.t_end < cfg.h or cfg.stride < 1:
        print("error: need h > 0, t_end >= h, stride >= 1", file=err)
        return EXIT_USAGE

    code = EXIT_OK
    try:
        records = drift_series(method, system, cfg.h, cfg.t_end, cfg.stride)
    except NonFiniteState as exc:
        print(f"warning: {exc}; writing partial series", file=err)
        records = exc.records
        code = EXIT_BLOWUP

    output = cfg.output or default_output_name(cfg.method, cfg.omega, cfg.h)
    try:
        write_drift_csv(output, records)
    except OSError as exc:
        print(f"error: cannot write {output}: {exc}", file=err)
        return EXIT_IO

    stats = drift_stats(records)
    print(f"wrote {output} ({len(records)} samples)", file=out)
    print(
        f"max|dH| = {stats.max_dH:.6g}  max|dI| = {stats.max_dI:.6g}  "
        f"window ratio H = {stats.window_ratio_H:.6g}  "
        f"window ratio I = {stats.window_ratio_I:.6g}",
        file=out,
    )
    return code


def _check_grid(nu: float) -> list[float]:
    # default grid reaches 10; stretch it when the operating point is beyond
    top = max(10.0, nu)
    return [0.1 * k for k in range(int(round(10.0 * top)) + 1)]


def cmd_check(
    method_name: str,
    h: float = 0.1,
    omega: float = 50.0,
    c: float = 1.0,
    c0: float = 0.1,
    sigma_lo: float = 0.1,
    sigma_hi: float = 10.0,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> int:
    out = out if out is not None else _sys.stdout
    err = err if err is not None else _sys.stderr
    if method_name not in METHODS:
        print(
            f"error: unknown method {method_name!r}; valid: {', '.join(METHODS)}",
            file=err,
        )
        return EXIT_USAGE
    m = METHODS[method_name]
    nu = h * omega
    grid = _check_grid(nu)

    sym = check_symmetry(m, grid=grid)
    print(f"method {m.name}: c1 = {m.c1:g}", file=out)
    print(
        f"symmetric: {'pass' if sym.passed else 'fail'} "
        f"(max residual {sym.max_residual:.3e})",
        file=out,
    )
    sp = check_symplecticity(m, grid=grid)
    print(
        f"symplectic: {'pass' if sp.passed else 'fail'} "
        f"(d1 = {sp.d1:g}, max residual {sp.max_residual:.3e})",
        file=out,
    )
    try:
        ups = upsilon_from(m, grid=grid)
        print(f"kick filter: available (Upsilon(0) = {ups(0.0):g})", file=out)
    except (NonSymmetricMethod, InconsistentFilter) as exc:
        print(f"kick filter: {type(exc).__name__}: {exc}", file=out)

    rep = assumption_report(m, h, omega, c=c, c0=c0, sigma_lo=sigma_lo, sigma_hi=sigma_hi)
    print(
        f"non-resonance: max N = {rep.max_N} "
        f"(|sin(k*h*omega/2)| >= {c:g}*sqrt(h) up to k = N)",
        file=out,
    )
    print(
        f"stepsize floor: h*omega = {rep.h_omega:g} >= c0 = {c0:g}: "
        f"{'pass' if rep.h_condition_pass else 'fail'}",
        file=out,
    )
    if rep.sigma_error is not None:
        print(f"sigma: {rep.sigma_error}", file=out)
    else:
        print(
            f"sigma: sigma(0) = {rep.sigma_at_0:.12g}, "
            f"sigma(h*omega) = {rep.sigma_at_nu:.12g}, "
            f"bounds [{sigma_lo:g}, {sigma_hi:g}]: "
            f"{'pass' if rep.sigma_pass else 'fail'}",
            file=out,
        )
    return EXIT_OK


def cmd_sweep(
    methods: Sequence[str],
    omegas: Sequence[float],
    hs: Sequence[float],
    t_end: float,
    outdir: Union[str, Path],
    problem: str = "fpu",
    m: int = 3,
    stride: int = 1,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> int:
    """One drift CSV per (method, omega, h) plus summary.csv; failures get
    nan statistics rows and the sweep keeps going."""
    out = out if out is not None else _sys.stdout
    err = err if err is not None else _sys.stderr
    if not methods or not omegas or not hs:
        print("error: sweep needs at least one method, omega, and h", file=err)
        return EXIT_USAGE
    for name in methods:
        try:
            resolve_method(name)
        except KeyError as exc:
            print(f"error: {exc.args[0]}", file=err)
            return EXIT_USAGE
        except (NonSymmetricMethod, InconsistentFilter, ResonantStepsize) as exc:
            print(f"error: {name}: {exc}", file=err)
            return EXIT_USAGE

    outdir = Path(outdir)
    try:
        outdir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        print(f"error: cannot create {outdir}: {exc}", file=err)
        return EXIT_IO

    any_blowup = False
    rows = []
    for name in methods:
        for omega in omegas:
            for h in hs:
                cfg = ExperimentConfig(
                    method=name,
                    problem=problem,
                    m=m,
                    omega=omega,
                    h=h,
                    t_end=t_end,
                    stride=stride,
                )
                method = resolve_method(name)
                system = build_problem(cfg)
                try:
                    records = drift_series(method, system, h, t_end, stride)
                    stats = drift_stats(records)
                    stat_cols = [
                        _fmt(stats.max_dH),
                        _fmt(stats.max_dI),
                        _fmt(stats.window_ratio_H),
                        _fmt(stats.window_ratio_I),
                    ]
                except NonFiniteState as exc:
                    print(f"warning: {exc}", file=err)
                    records = exc.records
                    stat_cols = ["nan", "nan", "nan", "nan"]
                    any_blowup = True
                path = outdir / default_output_name(name, omega, h)
                try:
                    write_drift_csv(path, records)
                except OSError as exc:
                    print(f"error: cannot write {path}: {exc}", file=err)
                    return EXIT_IO
                rows.append([name, _gfmt(omega), _gfmt(h), *stat_cols])
                print(f"wrote {path}", file=out)

    try:
        with open(outdir / "summary.csv", "w", newline="") as fh:
            fh.write("method,omega,h,max_dH,max_dI,window_ratio_H,window_ratio_I\n")
            for row in rows:
                fh.write(",".join(row) + "\n")
    except OSError as exc:
        print(f"error: cannot write summary: {exc}", file=err)
        return EXIT_IO
    print(f"wrote {outdir / 'summary.csv'} ({len(rows)} rows)", file=out)
    return EXIT_BLOWUP if any_blowup else EXIT_OK


def _float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _str_list(text: str) -> list[str]:
    return [tok.strip() for tok in text.split(",") if tok.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="erkn",
        description="Oscillatory-Hamiltonian integrator benchmarks and structure checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="integrate one trajectory and write a drift CSV")
    run.add_argument("--method", required=True, help="registry name or trig:<name>")
    run.add_argument("--problem", default="fpu", choices=["fpu", "linear"])
    run.add_argument("--m", type=int, default=3, help="block size (d1 = d2 = m)")
    run.add_argument("--omega", type=float, default=None)
    run.add_argument("--h", type=float, default=None)
    run.add_argument("--t-end", type=float, default=1000.0)
    run.add_argument("--stride", type=int, default=1)
    run.add_argument("--output", "-o", default=None)
    run.add_argument(
        "--preset",
        choices=sorted(PRESETS),
        default=None,
        help="benchmark panel setting (h, omega); explicit flags override",
    )

    check = sub.add_parser("check", help="print a structure/assumption report")
    check.add_argument("method")
    check.add_argument("--h", type=float, default=0.1)
    check.add_argument("--omega", type=float, default=50.0)
    check.add_argument("--c", type=float, default=1.0, help="non-resonance constant")
    check.add_argument("--c0", type=float, default=0.1, help="stepsize floor constant")
    check.add_argument("--sigma-lo", type=float, default=0.1)
    check.add_argument("--sigma-hi", type=float, default=10.0)

    sweep = sub.add_parser("sweep", help="run a method x omega x h grid")
    sweep.add_argument("--methods", required=True, type=_str_list, help="comma separated")
    sweep.add_argument("--omegas", required=True, type=_float_list, help="comma separated")
    sweep.add_argument("--hs", required=True, type=_float_list, help="comma separated")
    sweep.add_argument("--t-end", type=float, default=1000.0)
    sweep.add_argument("--outdir", required=True)
    sweep.add_argument("--problem", default="fpu", choices=["fpu", "linear"])
    sweep.add_argument("--m", type=int, default=3)
    sweep.add_argument("--stride", type=int, default=1)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; keep that contract for callers
        return int(exc.code) if exc.code is not None else EXIT_USAGE

    if args.command == "run":
        h, omega = args.h, args.omega
        if args.preset is not None:
            ph, pw = PRESETS[args.preset]
            h = ph if h is None else h
            omega = pw if omega is None else omega
        cfg = ExperimentConfig(
            method=args.method,
            problem=args.problem,
            m=args.m,
            omega=50.0 if omega is None else omega,
            h=0.1 if h is None else h,
            t_end=args.t_end,
            stride=args.stride,
            output=args.output,
        )
        return cmd_run(cfg)
    if args.command == "check":
        return cmd_check(
            args.method,
            h=args.h,
            omega=args.omega,
            c=args.c,
            c0=args.c0,
            sigma_lo=args.sigma_lo,
            sigma_hi=args.sigma_hi,
        )
    if args.command == "sweep":
        return cmd_sweep(
            args.methods,
            args.omegas,
            args.hs,
            args.t_end,
            args.outdir,
            problem=args.problem,
            m=args.m,
            stride=args.stride,
        )
    parser.error(f"unknown command {args.command!r}")
    return EXIT_USAGE


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
