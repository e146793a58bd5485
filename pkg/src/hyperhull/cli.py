"""Command-line harness: per-N reports, geometric scans and number-theory checks."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import area_engine as ae
from . import cap_analysis as ca
from . import hull_chain as hc
from . import number_theory as nt
from .lattice_core import MAX_N, OverflowBoundError, check_n

EXIT_OK, EXIT_ARGS, EXIT_BOUND, EXIT_SELFCHECK = 0, 2, 3, 4

CSV_FIELDS = [
    "N", "f0_H", "f0_Q", "strip_narrow", "strip_lemma", "A_N", "ratio_f0", "ratio_A", "elapsed_ms",
]


class CapTooWideError(ValueError):
    pass


@dataclass
class ScanRecord:
    N: int
    f0_H: int
    f0_Q: int
    strip_narrow: int
    strip_lemma: int
    A_N: float
    ratio_f0: float
    ratio_A: float
    elapsed_ms: float


def log_scale(N: int) -> float:
    return N ** (1 / 3) * math.log(N)


def scan_record(N: int, timing: bool = True) -> ScanRecord:
    t0 = time.perf_counter()
    f0h = hc.f0_H(N)
    f0q = hc.f0_Q(N)
    narrow = nt.strip_count(nt.narrow_strip(N))
    lemma = nt.strip_count(nt.lemma_strip(N))
    a_n = ae.missed_area_Q(N).value
    elapsed = (time.perf_counter() - t0) * 1e3 if timing else 0.0
    scale = log_scale(N)
    return ScanRecord(N, f0h, f0q, narrow, lemma, a_n, f0h / scale, a_n / scale, elapsed)


def geometric_grid(n_min: int, n_max: int, points: int) -> list[int]:
    if points < 2:
        raise ValueError("points must be >= 2")
    ratio = n_max / n_min
    return sorted({round(n_min * ratio ** (i / (points - 1))) for i in range(points)})


def _scan_one(args):
    return scan_record(*args)


def run_scan(grid: list[int], jobs: int = 1, timing: bool = True) -> list[ScanRecord]:
    work = [(n, timing) for n in grid]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_scan_one, work))
    else:
        rows = [_scan_one(w) for w in work]
    return sorted(rows, key=lambda r: r.N)


def fmt_real(v: float) -> str:
    return f"{v:.8e}"


def records_to_csv(rows: list[ScanRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in rows:
        w.writerow(
            [r.N, r.f0_H, r.f0_Q, r.strip_narrow, r.strip_lemma]
            + [fmt_real(v) for v in (r.A_N, r.ratio_f0, r.ratio_A, r.elapsed_ms)]
        )
    return buf.getvalue()


def records_to_json(rows: list[ScanRecord]) -> str:
    return json.dumps([{k.lower(): v for k, v in asdict(r).items()} for r in rows], indent=1) + "\n"


def gnuplot_script(csv_path: str) -> str:
    return (
        "set datafile separator ','\n"
        "set key autotitle columnhead\n"
        "set logscale x\n"
        "set xlabel 'N'\n"
        "set ylabel 'ratio to N^(1/3) log N'\n"
        f"plot '{csv_path}' using 1:7 with linespoints title 'f0_H', \\\n"
        f"     '{csv_path}' using 1:8 with linespoints title 'A_N'\n"
    )


def n_limit() -> int:
    env = os.environ.get("HYPERHULL_MAX_N")
    if env:
        try:
            return min(MAX_N, int(env))
        except ValueError:
            pass
    return MAX_N


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_hull(args) -> int:
    N = check_n(args.n, n_limit())
    chain = hc.chain_vertices(N)
    report = hc.validate_strip(chain)
    f0q = hc.f0_Q(N) if N >= 8 else None
    verts = chain.vertices
    if args.max_vertices is not None:
        verts = verts[: args.max_vertices]
    payload = {
        "n": N,
        "f0_h": len(chain.vertices),
        "f0_q": f0q,
        "strip_ok": report.ok,
        "max_excess": max(report.excess),
        "strip_bound": report.bound,
        "vertices": [list(v) for v in verts],
    }
    if args.oracle:
        from .oracle import brute_chain

        payload["oracle_agrees"] = brute_chain(N).vertices == chain.vertices
    if args.format == "json":
        _emit(json.dumps(payload) + "\n", args.out)
    elif args.format == "csv":
        _emit("x,y\n" + "".join(f"{x},{y}\n" for x, y in verts), args.out)
    else:
        lines = [f"N = {N}", f"f0_H = {payload['f0_h']}"]
        if f0q is not None:
            lines.append(f"f0_Q = {f0q}")
        lines.append(
            f"strip check: {'pass' if report.ok else 'FAIL'} "
            f"(max xy - N = {payload['max_excess']}, bound {report.bound:.6g})"
        )
        if args.oracle:
            lines.append(f"oracle agrees: {payload['oracle_agrees']}")
        lines.append("vertices: " + " ".join(f"({x},{y})" for x, y in verts))
        _emit("\n".join(lines) + "\n", args.out)
    if args.oracle and not payload["oracle_agrees"]:
        return EXIT_SELFCHECK
    return EXIT_OK


def cmd_area(args) -> int:
    N = check_n(args.n, n_limit())
    if N < 8:
        raise ValueError("area needs N >= 8")
    checked = N <= ae.DUAL_PATH_MAX_N
    a_n = ae.missed_area_Q(N, check=checked)
    full = ae.missed_area_range(N, 1, N)
    payload = {
        "n": N,
        "a_n": a_n.value,
        "a_n_error_bound": a_n.abs_error_bound,
        "dual_path": "agree" if checked else "skipped",
        "ratio_a": a_n.value / log_scale(N),
        "full_missed_area": full.value,
        "full_ratio_to_n": full.value / N,
    }
    if args.format == "json":
        _emit(json.dumps(payload) + "\n", args.out)
    else:
        _emit("".join(f"{k} = {v}\n" for k, v in payload.items()), args.out)
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.n_min < 8:
        raise ValueError("scan needs --n-min >= 8")
    if args.n_max < args.n_min:
        raise ValueError("--n-max must be >= --n-min")
    check_n(args.n_max, n_limit())
    rows = run_scan(geometric_grid(args.n_min, args.n_max, args.points), args.jobs, not args.no_timing)
    bad = [r.N for r in rows if r.f0_H > r.strip_lemma]
    text = records_to_json(rows) if args.format == "json" else records_to_csv(rows)
    _emit(text, args.out)
    if args.gnuplot:
        with open(args.gnuplot, "w") as fh:
            fh.write(gnuplot_script(args.out or "scan.csv"))
    if bad:
        print(f"f0_H exceeds the strip count at N = {bad}", file=sys.stderr)
        return EXIT_SELFCHECK
    return EXIT_OK


def cmd_nt(args) -> int:
    if args.which == "dsum":
        M = check_n(args.m, n_limit())
        exact = nt.divisor_summatory(M)
        main = nt.dirichlet_main_term(M)
        allowance = M ** (1 / 3)
        row = {"m": M, "exact": exact, "main_term": main}
    elif args.which == "fw":
        w = args.w
        exact = nt.primitive_pair_count(w)
        main = nt.primitive_pair_main_term(w)
        allowance = float(w)
        row = {"w": w, "exact": exact, "main_term": main}
    else:
        N = check_n(args.n, n_limit())
        spec = nt.narrow_strip(N) if args.delta == "narrow" else nt.lemma_strip(N)
        exact = nt.strip_count(spec)
        main = spec.Delta * math.log(N)
        allowance = N ** (1 / 3)
        row = {"n": N, "n_hi": spec.n_hi, "exact": exact, "main_term": main}
    row["residual"] = exact - main
    row["residual_over_allowance"] = (exact - main) / allowance
    if args.format == "json":
        _emit(json.dumps(row) + "\n", args.out)
    elif args.format == "csv":
        _emit(",".join(row) + "\n" + ",".join(str(v) for v in row.values()) + "\n", args.out)
    else:
        _emit("".join(f"{k} = {v}\n" for k, v in row.items()), args.out)
    return EXIT_OK


CAP_FIELDS = [
    "a", "b", "k_edge", "h", "rho", "r", "cap_area", "width", "empty", "hurkens_margin",
    "half_chord_over_rho", "ceil_lambda_matches_k", "chord_at_least_p",
]


def cap_rows(N: int) -> list[dict]:
    rows = []
    for p1, p2 in hc.chain_vertices(N).edges():
        cap = ca.cap_from_edge(p1, p2, N)
        if cap.z2.x - cap.z1.x > ca.MAX_CAP_COLUMNS:
            raise CapTooWideError(f"cap of edge {p1}-{p2} is too wide to enumerate")
        width = ca.cap_lattice_width(cap, N)
        a, b = cap.p
        lam = ca.tangent_offset(a, b, N).lam
        rows.append({
            "a": a,
            "b": b,
            "k_edge": cap.k_edge,
            "h": cap.h,
            "rho": cap.rho,
            "r": cap.r,
            "cap_area": ae.edge_cap_area(p1, p2, N).value,
            "width": width.width,
            "empty": ca.cap_is_empty(cap, N),
            "hurkens_margin": ca.HURKENS_BOUND - width.width,
            "half_chord_over_rho": cap.half_chord / cap.rho if cap.rho > 0 else math.inf,
            "ceil_lambda_matches_k": math.ceil(lam) == cap.k_edge,
            "chord_at_least_p": 2 * cap.half_chord >= cap.norm_p,
        })
    return rows


def cmd_caps(args) -> int:
    N = check_n(args.n, n_limit())
    if N < 2:
        raise ValueError("caps needs N >= 2 (N = 1 has no edges)")
    rows = cap_rows(N)
    if args.format == "json":
        _emit(json.dumps(rows) + "\n", args.out)
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, CAP_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: fmt_real(v) if isinstance(v, float) else v for k, v in r.items()})
        _emit(buf.getvalue(), args.out)
    ok = all(r["empty"] and r["width"] <= ca.HURKENS_BOUND + ca.SLACK for r in rows)
    return EXIT_OK if ok else EXIT_SELFCHECK


def cmd_oracle(args) -> int:
    from . import oracle

    N = args.n
    checks = {"chain": oracle.brute_chain(N).vertices == hc.chain_vertices(N).vertices}
    if N >= 8:
        checks["q_polygon"] = oracle.brute_q_hull(N) == hc.q_polygon(N).vertices
    for name, spec in (("strip_narrow", nt.narrow_strip(N)), ("strip_lemma", nt.lemma_strip(N))):
        checks[name] = oracle.brute_strip_count(N, spec.n_hi) == nt.strip_count(spec)
    if args.format == "json":
        _emit(json.dumps({"n": N, **checks}) + "\n", args.out)
    else:
        _emit("".join(f"{k}: {'agree' if v else 'DISAGREE'}\n" for k, v in checks.items()), args.out)
    return EXIT_OK if all(checks.values()) else EXIT_SELFCHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperhull", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "csv", "json"), default="text"):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", default=None, help="write to this file instead of stdout")

    p = sub.add_parser("hull", help="vertex chain of the integer hull")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-vertices", type=int, default=None)
    p.add_argument("--oracle", action="store_true", help="cross-check against the brute-force chain")
    common(p)
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("area", help="missed area A_N and the full-square missed area")
    p.add_argument("--n", type=int, required=True)
    common(p, ("text", "json"))
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("scan", help="asymptotic table over a geometric grid of N")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--points", type=int, default=20)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="write elapsed_ms as 0 for byte-stable output")
    p.add_argument("--gnuplot", default=None, help="also write a gnuplot script for the CSV")
    common(p, ("csv", "json"), "csv")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("nt", help="divisor sums, strip counts and F(w)")
    ntsub = p.add_subparsers(dest="which", required=True)
    q = ntsub.add_parser("dsum")
    q.add_argument("--m", type=int, required=True)
    common(q)
    q = ntsub.add_parser("fw")
    q.add_argument("--w", type=int, required=True)
    common(q)
    q = ntsub.add_parser("strip")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--delta", choices=("narrow", "lemma"), default="narrow")
    common(q)
    p.set_defaults(func=cmd_nt)

    p = sub.add_parser("caps", help="per-edge cap geometry and flatness checks")
    p.add_argument("--n", type=int, required=True)
    common(p, ("csv", "json"), "csv")
    p.set_defaults(func=cmd_caps)

    p = sub.add_parser("oracle", help="compare fast paths with brute force at one N")
    p.add_argument("--n", type=int, required=True)
    common(p, ("text", "json"))
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    from .oracle import BudgetExceededError

    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OverflowBoundError, BudgetExceededError, CapTooWideError, MemoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except ae.SelfCheckError as exc:
        print(f"self-check failed: {exc}", file=sys.stderr)
        return EXIT_SELFCHECK
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS


if __name__ == "__main__":
    sys.exit(main())
