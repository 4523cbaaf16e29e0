"""Command-line entry point: ``rankability <command> ...``.

Exit codes: 0 success, 2 input error, 3 resource limit, 4 internal check failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .core import (
    MAX_SPECTRUM_OBJECTS,
    all_optimal_rankings,
    brute_force_optimal_rankings,
    brute_force_spectrum,
    slater_spectrum,
)
from .core.spectrum import _resolve_jobs
from .exceptions import InvalidArgumentError, RankabilityError
from .inference import (
    degenerate_summary,
    joint_posterior,
    lambda_joint,
    posterior_grid,
    summarize,
)
from .inference.posterior import DEFAULT_GRID_POINTS
from .io import read_matrix_file, write_matrix_file
from .report import SCHEMA_VERSION, analysis_report, input_block
from .sim import GeneratorConfig, derive_seed, generate_matrix, slater_mc_test

log = logging.getLogger("rankability")


def _emit(obj, out):
    json.dump(obj, out, indent=2)
    out.write("\n")


def _write_grid(path, p, density):
    lines = ["p,density"] + [f"{x:.17g},{y:.17g}" for x, y in zip(p, density)]
    Path(path).write_text("\n".join(lines) + "\n")


def _write_spectrum_csv(spectrum, out):
    out.write("t,a_t\n")
    for t, a in enumerate(spectrum.a):
        out.write(f"{t},{a}\n")


def _full_analysis(args, mf, spectrum, rankings, command, out):
    t = mf.matrix.t
    summary = summarize(spectrum) if t > 0 else None
    degenerate = degenerate_summary(spectrum) if t > 0 else None
    rep = analysis_report(command, mf, s_hat=spectrum.s_hat, spectrum=spectrum, summary=summary,
                          degenerate=degenerate, rankings=rankings, max_list=getattr(args, "max_list", None))
    if args.grid:
        grid = posterior_grid(spectrum, args.grid_points)
        _write_grid(args.grid, grid.p_values, grid.density)
        rep["grid"] = str(args.grid)
    if args.csv:
        _write_spectrum_csv(spectrum, out)
    else:
        _emit(rep, out)
    return rep


def cmd_spectrum(args, out):
    mf = read_matrix_file(args.input)
    spectrum = slater_spectrum(mf.matrix, max_objects=args.max_objects, n_jobs=args.threads)
    return _full_analysis(args, mf, spectrum, None, "spectrum", out)


def cmd_oracle(args, out):
    mf = read_matrix_file(args.input)
    spectrum = brute_force_spectrum(mf.matrix)
    rankings = brute_force_optimal_rankings(mf.matrix)
    return _full_analysis(args, mf, spectrum, rankings, "oracle", out)


def cmd_rankings(args, out):
    mf = read_matrix_file(args.input)
    rankings = all_optimal_rankings(mf.matrix)
    rep = analysis_report("rankings", mf, s_hat=rankings.s_hat, rankings=rankings, max_list=args.max_list)
    if args.csv:
        for r in rep["rankings"]["listed"]:
            out.write(",".join(r) + "\n")
    else:
        _emit(rep, out)
    return rep


def cmd_joint(args, out):
    files = [read_matrix_file(p) for p in args.inputs]
    rows, spectra = [], []
    for mf in files:
        if mf.matrix.t == 0:
            raise InvalidArgumentError(f"{mf.path}: no comparisons (T = 0)")
        s = slater_spectrum(mf.matrix, max_objects=args.max_objects, n_jobs=args.threads)
        summ = summarize(s)
        spectra.append(s)
        rows.append({
            "path": mf.path, "m": mf.matrix.m, "t": s.t, "s_hat": s.s_hat, "a_s_hat": str(s.a_s_hat),
            "mode": summ.mode, "mode_status": summ.mode_status.value, "lambda": summ.lambda_,
        })
    jp = joint_posterior(spectra, args.grid_points)
    rep = {
        "schema_version": SCHEMA_VERSION,
        "command": "joint",
        "inputs": rows,
        "joint": {
            "mode": jp.mode,
            "mode_status": jp.mode_status.value,
            "mean": jp.mean,
            "lambda_joint": lambda_joint([r["s_hat"] for r in rows], [r["t"] for r in rows]),
        },
    }
    if args.grid:
        _write_grid(args.grid, jp.grid.p_values, jp.grid.density)
        rep["grid"] = str(args.grid)
    if args.csv:
        out.write("path,m,t,s_hat,a_s_hat,mode,lambda\n")
        for r in rows:
            out.write(f"{r['path']},{r['m']},{r['t']},{r['s_hat']},{r['a_s_hat']},{r['mode']:.6f},{r['lambda']:.6f}\n")
        j = rep["joint"]
        out.write(f"joint,,,,,{j['mode']:.6f},{j['lambda_joint']:.6f}\n")
    else:
        _emit(rep, out)
    return rep


def cmd_simulate(args, out):
    if args.K < 0:
        raise InvalidArgumentError("--K must be >= 0")
    if args.L < 1:
        raise InvalidArgumentError("--L must be >= 1")
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    width = max(3, len(str(args.L - 1)))
    files = []
    for i in range(args.L):
        cfg = GeneratorConfig(args.M, args.p, args.K, seed=derive_seed(args.seed, i))
        path = out_dir / f"matrix_{i:0{width}d}.csv"
        note = f"simulated M={args.M} K={args.K} p={args.p!r} seed={args.seed} index={i}"
        write_matrix_file(path, generate_matrix(cfg), comments=[note])
        files.append(str(path))
    rep = {
        "schema_version": SCHEMA_VERSION,
        "command": "simulate",
        "config": {"m": args.M, "k": args.K, "p": args.p, "l": args.L, "seed": args.seed},
        "files": files,
    }
    _emit(rep, out)
    return rep


def cmd_slater_test(args, out):
    mf = read_matrix_file(args.input)
    res = slater_mc_test(mf.matrix, n_mc=args.n_mc, epsilon=args.epsilon, seed=args.seed,
                         n_jobs=_resolve_jobs(args.threads))
    rep = {
        "schema_version": SCHEMA_VERSION,
        "command": "slater-test",
        "input": input_block(mf),
        "p_val": res.p_val,
        "s_hat_observed": res.s_hat_observed,
        "n_mc": res.n_mc,
        "count_le": res.count_le,
        "epsilon": res.epsilon,
        "seed": args.seed,
        "decision": res.decision.value,
    }
    if args.csv:
        out.write("p_val,decision\n")
        out.write(f"{res.p_val!r},{res.decision.value}\n")
    else:
        _emit(rep, out)
    return rep


def _seed(text):
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be in [0, 2**64)")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: $RANKABILITY_THREADS or 1)")
    common.add_argument("--csv", action="store_true", help="tabular CSV output instead of JSON")
    common.add_argument("-v", "--verbose", action="store_true")

    gridded = argparse.ArgumentParser(add_help=False)
    gridded.add_argument("--grid", metavar="PATH", help="write the posterior density as p,density CSV")
    gridded.add_argument("--grid-points", type=int, default=DEFAULT_GRID_POINTS)

    limits = argparse.ArgumentParser(add_help=False)
    limits.add_argument("--max-objects", type=int, default=MAX_SPECTRUM_OBJECTS)

    parser = argparse.ArgumentParser(prog="rankability",
                                     description="Exact Slater spectra and rankability posteriors.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common, gridded, limits], help="Slater spectrum and posterior summary")
    p.add_argument("input")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("rankings", parents=[common], help="all optimal rankings")
    p.add_argument("input")
    p.add_argument("--max-list", type=int, default=None, metavar="N", help="list at most N rankings")
    p.set_defaults(func=cmd_rankings)

    p = sub.add_parser("joint", parents=[common, gridded, limits], help="pooled posterior over several matrices")
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_joint)

    p = sub.add_parser("simulate", parents=[common], help="write synthetic observation matrices")
    p.add_argument("--M", type=int, required=True, help="number of objects")
    p.add_argument("--K", type=int, default=2, help="comparisons per pair")
    p.add_argument("--p", type=float, required=True, help="probability the stronger object wins")
    p.add_argument("--L", type=int, default=1, help="number of matrices")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("slater-test", parents=[common], help="Monte-Carlo test of p = 0.5")
    p.add_argument("input")
    p.add_argument("--n-mc", type=int, default=1000)
    p.add_argument("--epsilon", type=float, default=0.05)
    p.add_argument("--seed", type=_seed, default=0)
    p.set_defaults(func=cmd_slater_test)

    p = sub.add_parser("oracle", parents=[common, gridded], help="brute-force spectrum and rankings (M <= 10)")
    p.add_argument("input")
    p.add_argument("--max-list", type=int, default=None, metavar="N")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(levelname)s: %(message)s")
    if args.threads is not None and args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        args.func(args, out)
    except RankabilityError as exc:
        print(f"rankability {args.command}: error: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
