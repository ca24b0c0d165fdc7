"""Command-line front end: evaluate the special functions and Jones
values, and emit the experiment CSVs behind every figure.

Exit codes: 0 success, 2 domain error, 64 usage error, 70 numeric or
precision error.  CSV cells carry 15 significant digits; identical
flags produce byte-identical files.  ``--threads`` (or the JONES_THREADS
environment variable) caps kernel workers without changing any output.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import _kernels
from .errors import DomainError, PrecisionError, SingularityError, ZeroValueError
from .jones_fig8 import EvaluationPoint, colored_jones, normalized_log
from .limits import convergence_table, limit_V, limit_W, mahler_growth_integral
from .mahler import (
    FIG8_ALEXANDER,
    ConstSampler,
    JonesSampler,
    LaurentPolynomialZ,
    LaurentSampler,
    homology_order,
    jones_mahler_growth,
    log_mahler_quadrature,
    mahler_from_roots,
    silver_williams_convergence,
)
from .satellite import argmax_color, cable_profile
from .special_functions import fig8_volume, lobachevsky

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_USAGE = 64
EXIT_NUMERIC = 70

FIGURE_IDS = ("V", "W", "conv1", "conv2", "conv3", "conv4", "conv5",
              "conv8000", "cable")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _fmt(v: float) -> str:
    return format(v, ".15g")


def _write_rows(path: str, header: str, rows) -> None:
    text = header + "\n" + "\n".join(rows) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)
        print(f"wrote {path}")


def _run_checks(checks) -> int:
    failures = 0
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        failures += 0 if ok else 1
    return EXIT_OK if failures == 0 else 1


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_lobachevsky(args) -> int:
    if args.check:
        vol = fig8_volume()
        return _run_checks([
            ("lobachevsky(0) == 0", lobachevsky(0.0) == 0.0),
            ("lobachevsky(pi) ~ 0", abs(lobachevsky(math.pi)) < 1e-12),
            ("4*lobachevsky(pi/6) ~ volume",
             abs(4.0 * lobachevsky(math.pi / 6) - 2.029883213) < 1e-8),
            ("odd + pi-periodic on a grid",
             bool(np.all(np.abs(lobachevsky(np.linspace(-3, 3, 61))
                                + lobachevsky(-np.linspace(-3, 3, 61))) < 1e-13)
                  and np.all(np.abs(lobachevsky(np.linspace(0, 3, 61) + np.pi)
                                    - lobachevsky(np.linspace(0, 3, 61))) < 1e-13))),
            ("volume consistency -4*L(5pi/6)",
             abs(vol + 4.0 * lobachevsky(5 * math.pi / 6)) < 1e-10),
        ])
    print(_fmt(lobachevsky(args.theta, args.tol)))
    return EXIT_OK


def _cmd_volume(args) -> int:
    if args.check:
        vol = fig8_volume()
        return _run_checks([
            ("volume ~ 2.029883213", abs(vol - 2.029883213) < 1e-8),
            ("volume == 6*L(pi/3) to 1e-10",
             abs(vol - 6.0 * lobachevsky(math.pi / 3)) < 1e-10),
        ])
    print(_fmt(fig8_volume()))
    return EXIT_OK


def _cmd_eval(args) -> int:
    if args.check:
        j2 = colored_jones(EvaluationPoint(2, 0.5))
        j3 = colored_jones(EvaluationPoint(3, 1.0 / 3.0))
        j1 = colored_jones(EvaluationPoint(1, 0.25))
        return _run_checks([
            ("|J_2(e^pi i)| == 5",
             j2.sign == 1 and abs(j2.logabs - math.log(5)) < 1e-12),
            ("|J_3(e^2pi i/3)| == 13",
             j3.sign == 1 and abs(j3.logabs - math.log(13)) < 1e-12),
            ("J_1 == 1", j1.sign == 1 and j1.logabs == 0.0),
        ])
    if args.x is not None:
        p = EvaluationPoint(args.N, args.x)
    elif args.r is not None:
        p = EvaluationPoint.from_r(args.N, args.r)
    else:
        p = EvaluationPoint(args.N, 0.0)  # t = 1, where J_N == 1
    v = colored_jones(p)
    if v.sign == 0:
        raise ZeroValueError(f"J_N vanishes at N={p.N}, x={p.x}")
    print(f"sign={v.sign:+d} log_abs={_fmt(v.logabs)} "
          f"normalized={_fmt(normalized_log(p))}")
    return EXIT_OK


def _figure_curve(which, step: float):
    n = int(round(1.0 / step))
    xs = np.arange(n + 1) / n
    vals = which(xs)
    rows = [f"{_fmt(x)},,{_fmt(v)}," for x, v in zip(xs, vals)]
    return "r,finite,predicted,delta", rows


def _figure_conv(lo: float, hi: float, N: int, step: float):
    n = int(round((hi - lo) / step))
    rs = [lo + k * step for k in range(n + 1)]
    records = convergence_table(rs, N)
    rows = []
    for rec in records:
        if rec.flagged:
            rows.append(f"{_fmt(rec.r)},,{_fmt(rec.predicted)},")
        else:
            rows.append(f"{_fmt(rec.r)},{_fmt(rec.finite_value)},"
                        f"{_fmt(rec.predicted)},{_fmt(rec.delta)}")
    return "r,finite,predicted,delta", rows


def _cmd_figure(args) -> int:
    if args.check:
        vol = fig8_volume()
        seam = abs(float(limit_V(0.75 - 1e-12)) - float(limit_V(0.75 + 1e-12)))
        return _run_checks([
            ("V(0.1) == 0", float(limit_V(0.1)) == 0.0),
            ("V(1) ~ volume", abs(float(limit_V(1.0)) - vol) < 1e-12),
            ("W(0) ~ volume", abs(float(limit_W(0.0)) - vol) < 1e-12),
            ("V continuous at 3/4", seam < 1e-8),
            ("integral W ~ 1.450191516",
             abs(mahler_growth_integral(1 << 16) - 1.450191516) < 1e-3),
        ])
    fid = args.id
    if fid is None:
        print("fig8jones figure: error: a figure id is required unless "
              "--check", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    if fid == "V":
        header, rows = _figure_curve(limit_V, args.step or 0.001)
    elif fid == "W":
        header, rows = _figure_curve(limit_W, args.step or 0.001)
    elif fid in ("conv1", "conv2", "conv3", "conv4", "conv5"):
        k = int(fid[-1])
        header, rows = _figure_conv(k - 1.0, float(k), args.N or 2000,
                                    args.step or 0.01)
    elif fid == "conv8000":
        header, rows = _figure_conv(4.0, 5.0, args.N or 8000,
                                    args.step or 0.01)
    elif fid == "cable":
        profile = cable_profile(args.N or 800, args.r)
        header = "c,value"
        rows = []
        for row in profile.rows:
            rows.append(f"{row.c}," if row.flagged
                        else f"{row.c},{_fmt(row.value)}")
    else:  # unreachable: argparse restricts choices
        raise DomainError(f"unknown figure id {fid}")
    _write_rows(args.out or f"{fid}.csv", header, rows)
    return EXIT_OK


def _parse_n_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


def _cmd_mahler(args) -> int:
    if args.check:
        m_fig8 = mahler_from_roots(FIG8_ALEXANDER)
        return _run_checks([
            ("homology orders 5, 16, 45",
             [homology_order(FIG8_ALEXANDER, n) for n in (2, 3, 4)] == [5, 16, 45]),
            ("m(fig8 Alexander) ~ log((3+sqrt5)/2)",
             abs(m_fig8 - math.log((3 + math.sqrt(5)) / 2)) < 1e-12),
            ("quadrature of constant 1 == 0",
             log_mahler_quadrature(ConstSampler(1.0), 4096) == 0.0),
        ])
    sub = args.mahler_cmd
    if sub == "roots":
        f = LaurentPolynomialZ.parse(args.poly)
        print(_fmt(mahler_from_roots(f, args.tol)))
    elif sub == "quad":
        if args.const is not None:
            sampler = ConstSampler(args.const)
        elif args.jones is not None:
            sampler = JonesSampler(args.jones)
        else:
            sampler = LaurentSampler(LaurentPolynomialZ.parse(args.poly))
        print(_fmt(log_mahler_quadrature(sampler, args.n)))
    elif sub == "homology":
        f = LaurentPolynomialZ.parse(args.poly)
        print(homology_order(f, args.N, method=args.method))
    elif sub == "sw":
        f = LaurentPolynomialZ.parse(args.poly)
        records = silver_williams_convergence(f, _parse_n_list(args.N_list))
        rows = []
        for rec in records:
            if rec.flagged:
                rows.append(f"{rec.N},,{_fmt(rec.predicted)},")
            else:
                rows.append(f"{rec.N},{_fmt(rec.finite_value)},"
                            f"{_fmt(rec.predicted)},{_fmt(rec.delta)}")
        _write_rows(args.out, "N,finite,predicted,delta", rows)
    elif sub == "jones-growth":
        rows = jones_mahler_growth(_parse_n_list(args.N_list), args.n_quad)
        out_rows = [f"{N},{_fmt(m)},{_fmt(ratio)}" for N, m, ratio in rows]
        _write_rows(args.out, "N,mahler,ratio", out_rows)
    else:  # unreachable
        raise DomainError(f"unknown mahler subcommand {sub}")
    return EXIT_OK


def _cmd_cable(args) -> int:
    if args.check:
        profile = cable_profile(2, 1.0)
        return _run_checks([
            ("N=2 r=1 has rows c=1,3",
             [row.c for row in profile.rows] == [1, 3]),
            ("J_1 row value is 0", profile.rows[0].value == 0.0),
            ("argmax ties resolve upward", argmax_color(2, 1.0) == 3),
        ])
    print(argmax_color(args.N, args.r))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------

def build_parser() -> _Parser:
    p = _Parser(prog="fig8jones",
                description="Figure-eight colored Jones numerics and "
                            "volume-limit experiments")
    p.add_argument("--threads", type=int, default=None,
                   help="cap kernel worker threads (JONES_THREADS mirrors this)")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("lobachevsky", help="evaluate the Lobachevsky function")
    q.add_argument("--theta", type=float, default=0.0)
    q.add_argument("--tol", type=float, default=1e-12)
    q.add_argument("--check", action="store_true")
    q.set_defaults(fn=_cmd_lobachevsky)

    q = sub.add_parser("volume", help="figure-eight complement volume")
    q.add_argument("--check", action="store_true")
    q.set_defaults(fn=_cmd_volume)

    q = sub.add_parser("eval", help="evaluate J_N on the unit circle")
    q.add_argument("--N", type=int, required=False, default=2)
    q.add_argument("--r", type=float, default=None,
                   help="growth parameter; position is x = r/N")
    q.add_argument("--x", type=float, default=None,
                   help="circle position in [0,1), overrides --r")
    q.add_argument("--check", action="store_true")
    q.set_defaults(fn=_cmd_eval)

    q = sub.add_parser("figure", help="emit one experiment CSV")
    q.add_argument("id", nargs="?", choices=FIGURE_IDS,
                   help="V/W: limit curves over x in [0,1], step 0.001; "
                        "convK: finite-N vs limit over r in [K-1,K], step "
                        "0.01, N=2000; conv8000: r in [4,5] at N=8000; "
                        "cable: color profile rows (c,value)")
    q.add_argument("--N", type=int, default=None)
    q.add_argument("--r", type=float, default=1.0, help="cable growth parameter")
    q.add_argument("--step", type=float, default=None)
    q.add_argument("--out", default=None, help="output path; '-' for stdout")
    q.add_argument("--check", action="store_true")
    q.set_defaults(fn=_cmd_figure)

    q = sub.add_parser("mahler", help="Mahler measures and homology orders")
    msub = q.add_subparsers(dest="mahler_cmd", required=False)
    q.add_argument("--check", action="store_true")
    q.set_defaults(fn=_cmd_mahler)

    m = msub.add_parser("roots", help="m(f) from roots; poly syntax c0,c1,...@low")
    m.add_argument("--poly", required=True)
    m.add_argument("--tol", type=float, default=1e-9)
    m.add_argument("--check", action="store_true")
    m.set_defaults(fn=_cmd_mahler, mahler_cmd="roots")

    m = msub.add_parser("quad", help="m via circle quadrature")
    m.add_argument("--poly", default=None)
    m.add_argument("--const", type=float, default=None)
    m.add_argument("--jones", type=int, default=None, metavar="N")
    m.add_argument("--n", type=int, default=1 << 16)
    m.add_argument("--check", action="store_true")
    m.set_defaults(fn=_cmd_mahler, mahler_cmd="quad")

    m = msub.add_parser("homology", help="|H_1| of the branched cyclic cover")
    m.add_argument("--N", type=int, required=True)
    m.add_argument("--poly", default=str(FIG8_ALEXANDER))
    m.add_argument("--method", choices=("auto", "float", "exact"), default="auto")
    m.add_argument("--check", action="store_true")
    m.set_defaults(fn=_cmd_mahler, mahler_cmd="homology")

    m = msub.add_parser("sw", help="Silver-Williams convergence records")
    m.add_argument("--poly", default=str(FIG8_ALEXANDER))
    m.add_argument("--N-list", dest="N_list", default="2,5,10,20,50,100")
    m.add_argument("--out", default="-")
    m.add_argument("--check", action="store_true")
    m.set_defaults(fn=_cmd_mahler, mahler_cmd="sw")

    m = msub.add_parser("jones-growth", help="m(J_N) growth ratios")
    m.add_argument("--N-list", dest="N_list", default="100,300,1000")
    m.add_argument("--n-quad", dest="n_quad", type=int, default=1 << 14)
    m.add_argument("--out", default="-")
    m.add_argument("--check", action="store_true")
    m.set_defaults(fn=_cmd_mahler, mahler_cmd="jones-growth")

    q = sub.add_parser("cable", help="argmax color of the cable profile")
    q.add_argument("--N", type=int, default=800)
    q.add_argument("--r", type=float, default=1.0)
    q.add_argument("--check", action="store_true")
    q.set_defaults(fn=_cmd_cable)

    return p


def _join_dash_values(argv: list[str]) -> list[str]:
    # let "--poly -1,3,-1@-1" survive argparse's option detection
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--poly" and i + 1 < len(argv):
            out.append(f"--poly={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_join_dash_values(list(argv)))
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    if getattr(args, "command", None) == "mahler" and \
            getattr(args, "mahler_cmd", None) is None and not args.check:
        print("fig8jones mahler: error: a subcommand is required "
              "(roots, quad, homology, sw, jones-growth) unless --check",
              file=sys.stderr)
        return EXIT_USAGE

    threads = args.threads
    if threads is None:
        env = os.environ.get("JONES_THREADS")
        if env:
            try:
                threads = int(env)
            except ValueError:
                print(f"fig8jones: bad JONES_THREADS value {env!r}",
                      file=sys.stderr)
                return EXIT_USAGE
    if threads is not None:
        if threads < 1:
            print("fig8jones: --threads must be >= 1", file=sys.stderr)
            return EXIT_USAGE
        _kernels.set_threads(threads)

    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"fig8jones: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (PrecisionError, SingularityError, ZeroValueError) as exc:
        print(f"fig8jones: numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"fig8jones: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
