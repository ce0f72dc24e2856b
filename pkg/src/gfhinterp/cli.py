"""Command-line front end: ``gfh {eval,lebesgue,converge,bench} ...``.

Every command writes CSV (header line, comma separated, reals with 17
significant digits) to stdout or ``--out``.

Exit codes: 0 success, 2 configuration error, 3 numeric contract violation.
"""

from __future__ import annotations

import argparse
import io
import sys
from contextlib import contextmanager

import numpy as np

from . import analysis
from .interpolant import ENGINES, build, denominator_Q, evaluate, make_frame
from .nodes import NodeSet, from_values, make_equidistant, make_perturbed, read_values_file
from .testfns import CATALOG, catalog_lookup

EXIT_CONFIG = 2
EXIT_NUMERIC = 3


class ConfigError(Exception):
    pass


class NumericContractError(Exception):
    pass


def fmt(v) -> str:
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    return "%.17g" % float(v)


def _csv_rows(out, header, rows):
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(fmt(v) for v in row) + "\n")


@contextmanager
def _open_out(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a list of integers, got {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--interval", nargs=2, type=float, metavar=("A", "B"), default=[-1.0, 1.0])
    src = common.add_mutually_exclusive_group()
    src.add_argument("--equidistant", type=int, metavar="N", help="N+1 equidistant nodes")
    src.add_argument("--perturbed", nargs=3, metavar=("N", "BETA", "SEED"),
                     help="jittered equidistant nodes, mesh ratio <= (1+BETA)/(1-BETA)")
    src.add_argument("--nodes-file", metavar="PATH", help="one node per line")
    common.add_argument("--d", type=int, default=3, help="local polynomial degree (default 3)")
    common.add_argument("--gamma", type=int, action="append",
                        help="blending exponent; repeatable where a list makes sense")
    common.add_argument("--grid-per-interval", type=int, default=20, metavar="P")
    common.add_argument("--out", metavar="PATH", help="write CSV here instead of stdout")

    p = argparse.ArgumentParser(prog="gfh", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate an interpolant")
    e.add_argument("--function", choices=sorted(CATALOG))
    e.add_argument("--samples-file", metavar="PATH")
    e.add_argument("--points", type=int, default=101, metavar="M",
                   help="M equidistant evaluation points on the interval")
    e.add_argument("--at", type=float, action="append", metavar="X", help="explicit point; repeatable")
    e.add_argument("--engine", choices=ENGINES, default="barycentric")

    le = sub.add_parser("lebesgue", parents=[common], help="Lebesgue constants on a (d, n) grid")
    le.add_argument("--d-list", type=_int_list)
    le.add_argument("--n-list", type=_int_list)

    c = sub.add_parser("converge", parents=[common], help="max-error convergence study, n = 2**k")
    c.add_argument("--function", choices=sorted(CATALOG), required=True)
    c.add_argument("--k-min", type=int, default=1)
    c.add_argument("--k-max", type=int, default=10)
    c.add_argument("--count", choices=("gaps", "points"), default="gaps",
                   help="whether 2**k counts node gaps (default) or nodes")

    b = sub.add_parser("bench", parents=[common], help="timing of classical vs general evaluation")
    b.add_argument("--points", type=int, default=10000, metavar="M")
    b.add_argument("--repeats", type=int, default=5)
    return p


def _nodes(args, required: bool = True) -> NodeSet | None:
    a, b = args.interval
    try:
        if args.equidistant is not None:
            return make_equidistant(a, b, args.equidistant)
        if args.perturbed is not None:
            n, beta, seed = args.perturbed
            return make_perturbed(a, b, int(n), float(beta), int(seed))
        if args.nodes_file is not None:
            return from_values(read_values_file(args.nodes_file))
    except (ValueError, OSError) as exc:
        raise ConfigError(str(exc)) from None
    if required:
        raise ConfigError("no node source: use --equidistant, --perturbed or --nodes-file")
    return None


def _single_gamma(args) -> int:
    gammas = args.gamma or [1]
    if len(gammas) != 1:
        raise ConfigError(f"{args.command} takes a single --gamma, got {gammas}")
    return gammas[0]


def _warn_d0(d: int, gammas) -> None:
    if d == 0 and any(g > 1 for g in gammas):
        print("warning: d=0 is outside proven theory for gamma>1", file=sys.stderr)


def cmd_eval(args, out) -> None:
    nodes = _nodes(args)
    gamma = _single_gamma(args)
    if args.engine == "classical" and gamma != 1:
        raise ConfigError(f"the classical engine requires gamma=1, got gamma={gamma}")
    if (args.function is None) == (args.samples_file is None):
        raise ConfigError("give exactly one of --function and --samples-file")
    f = catalog_lookup(args.function) if args.function else None
    if f is not None:
        samples = f(nodes.xs)
    else:
        try:
            samples = np.array(read_values_file(args.samples_file))
        except (ValueError, OSError) as exc:
            raise ConfigError(str(exc)) from None
    try:
        interp = build(make_frame(nodes, args.d, gamma), samples)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    _warn_d0(args.d, [gamma])
    if args.at:
        x = np.array(args.at, dtype=float)
    else:
        if args.points < 1:
            raise ConfigError("--points must be positive")
        x = np.linspace(nodes.a, nodes.b, args.points) if args.points > 1 else np.array([nodes.a])
    sign, _ = denominator_Q(interp.frame, x, log=True)
    if np.any(sign <= 0):
        raise NumericContractError("denominator Q(x) <= 0 detected")
    values = evaluate(interp, x, args.engine)
    if f is not None:
        err = np.abs(f(x) - values)
        _csv_rows(out, ["x", "value", "abs_error"], zip(x, values, err))
    else:
        _csv_rows(out, ["x", "value"], zip(x, values))


def cmd_lebesgue(args, out) -> None:
    gammas = args.gamma or [1]
    ds = args.d_list or [args.d]
    grid = analysis.GridSpec(args.grid_per_interval)
    _warn_d0(min(ds), gammas)
    rows = []
    if args.n_list:
        for g in gammas:
            table = analysis.lebesgue_study(ds, args.n_list, g, grid, tuple(args.interval))
            rows.extend(table.rows())
    else:
        nodes = _nodes(args)
        for g in gammas:
            for d in ds:
                if d > nodes.n:
                    continue
                rep = analysis.lebesgue_constant(make_frame(nodes, d, g), grid)
                rows.append((d, nodes.n, g, rep.constant_estimate, rep.argmax_x))
    _csv_rows(out, ["d", "n", "gamma", "constant", "argmax"], rows)


def cmd_converge(args, out) -> None:
    f = catalog_lookup(args.function)
    gammas = args.gamma or [1, 2, 3, 4, 5]
    if args.k_min < 0 or args.k_max < args.k_min:
        raise ConfigError("need 0 <= --k-min <= --k-max")
    _warn_d0(args.d, gammas)
    table = analysis.convergence_study(
        f, args.d, gammas, range(args.k_min, args.k_max + 1),
        analysis.GridSpec(args.grid_per_interval), tuple(args.interval), count=args.count)
    rows = [(r.gamma, r.k, r.n, r.error, r.rate) for g in gammas for r in table[g]]
    _csv_rows(out, ["gamma", "k", "n", "E", "rate"], rows)


def cmd_bench(args, out) -> None:
    n = args.equidistant if args.equidistant is not None else 1024
    gamma = _single_gamma(args) if args.gamma else 3
    if args.d > n:
        raise ConfigError(f"d={args.d} exceeds n={n}")
    rec = analysis.timing_bench(n, args.d, gamma, args.points, args.repeats, tuple(args.interval))
    _csv_rows(out,
              ["n", "d", "gamma", "m", "repeats", "weights_s", "classical_s", "general_s",
               "weights_per_nd2", "classical_per_mn", "general_per_mnd2"],
              [(rec.n, rec.d, rec.gamma, rec.m, rec.repeats, rec.weights_s, rec.classical_s,
                rec.general_s, rec.weights_per_nd2, rec.classical_per_mn, rec.general_per_mnd2)])


COMMANDS = {"eval": cmd_eval, "lebesgue": cmd_lebesgue, "converge": cmd_converge, "bench": cmd_bench}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.grid_per_interval < 1:
            raise ConfigError("--grid-per-interval must be >= 1")
        buf = io.StringIO()
        COMMANDS[args.command](args, buf)
    except ConfigError as exc:
        print(f"gfh: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericContractError as exc:
        print(f"gfh: numeric contract violation: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, KeyError) as exc:
        print(f"gfh: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    with _open_out(args.out) as out:
        out.write(buf.getvalue())
    return 0


if __name__ == "__main__":
    sys.exit(main())
