"""Command-line driver.

Exit codes: 0 ok; 2 bound violations found; 3 only undecided graphs (solver
budgets ran out); 64 bad usage; 66 unreadable input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .bounds import BOUND_IDS, iter_table, reports_to_csv, verify_corpus
from .domset import domset_from_claw, verify_domset_trace
from .graph import Graph, Graph6Error, is_connected, random_gnp, read_graph6_lines, write_graph6
from .invariants import compute_invariants, find_claw
from .minors import DEFAULT_EXACT_CAP, peel_minor

EX_OK, EX_VIOLATION, EX_UNDECIDED, EX_USAGE, EX_NOINPUT = 0, 2, 3, 64, 66

log = logging.getLogger("minorforge")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


@dataclass
class RunConfig:
    command: str
    graph6: Optional[str] = None
    gnp: Optional[tuple[int, float, int, int]] = None
    budget_alpha: Optional[int] = None
    budget_minor: Optional[int] = None
    budget_chi: Optional[int] = None
    exact_cap: int = DEFAULT_EXACT_CAP
    jobs: int = 1
    format: str = "json"
    out: Optional[str] = None
    violations: Optional[str] = None
    alpha_range: list[int] = field(default_factory=list)
    h_range: list[int] = field(default_factory=list)
    omega: Optional[int] = None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _gnp_spec(text: str) -> tuple[int, float, int, int]:
    parts = text.split(",")
    if len(parts) not in (3, 4):
        raise argparse.ArgumentTypeError("expected n,p,seed[,count]")
    try:
        n, p, seed = int(parts[0]), float(parts[1]), int(parts[2])
        count = int(parts[3]) if len(parts) == 4 else 1
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad generator spec {text!r}")
    if not 0.0 <= p <= 1.0 or n < 0 or count < 1:
        raise argparse.ArgumentTypeError(f"bad generator spec {text!r}")
    return n, p, seed, count


def _int_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            vals = list(range(int(lo), int(hi) + 1))
        else:
            vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r} (use a..b or a,b,c)")
    if not vals or min(vals) < 1:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return vals


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="minorforge", description="Graph invariants, minor models and order bounds.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def inputs(sp):
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--graph6", metavar="PATH", help="graph6 file, one graph per line ('-' for stdin)")
        src.add_argument("--gnp", type=_gnp_spec, metavar="N,P,SEED[,COUNT]",
                         help="COUNT random G(N,P) graphs with seeds SEED, SEED+1, ...")
        sp.add_argument("--budget-alpha", type=_positive, help="node budget for stability/clique search")
        sp.add_argument("--budget-minor", type=_positive, help="node budget per K_t minor search")
        sp.add_argument("--budget-chi", type=_positive, help="node budget for colouring search")

    def output(sp, formats=("json", "csv", "human")):
        sp.add_argument("--format", choices=formats, default="json")
        sp.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")

    sp = sub.add_parser("invariants", help="alpha, omega, chi, h with witnesses")
    inputs(sp)
    output(sp)
    sp = sub.add_parser("domset", help="claw-seeded connected dominating set trace")
    inputs(sp)
    output(sp, ("json", "human"))
    sp = sub.add_parser("peel", help="recursive peeling to a complete-minor model")
    inputs(sp)
    sp.add_argument("--exact-cap", type=_positive, default=DEFAULT_EXACT_CAP)
    output(sp, ("json", "human"))
    sp = sub.add_parser("verify", help="check a corpus against every bound")
    inputs(sp)
    sp.add_argument("--jobs", type=_positive, help="worker processes (env MINORFORGE_JOBS)")
    sp.add_argument("--violations", metavar="PATH", help="write violating graphs here, one graph6 per line")
    output(sp)
    sp = sub.add_parser("bounds-table", help="tabulate every formula over an alpha/h grid")
    sp.add_argument("--alpha", type=_int_range, required=True, metavar="A|A..B")
    sp.add_argument("--h", type=_int_range, required=True, metavar="H|H..K")
    sp.add_argument("--omega", type=_positive, help="clique number for the omega-dependent formula")
    output(sp)
    return p


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(command=ns.command, format=ns.format, out=ns.out)
    if ns.command == "bounds-table":
        cfg.alpha_range, cfg.h_range, cfg.omega = ns.alpha, ns.h, ns.omega
        return cfg
    cfg.graph6, cfg.gnp = ns.graph6, ns.gnp
    cfg.budget_alpha, cfg.budget_minor, cfg.budget_chi = ns.budget_alpha, ns.budget_minor, ns.budget_chi
    if ns.command == "peel":
        cfg.exact_cap = ns.exact_cap
    if ns.command == "verify":
        cfg.violations = ns.violations
        if ns.jobs is not None:
            cfg.jobs = ns.jobs
        else:
            env = os.environ.get("MINORFORGE_JOBS")
            if env:
                try:
                    cfg.jobs = _positive(env)
                except argparse.ArgumentTypeError as e:
                    raise UsageError(f"MINORFORGE_JOBS: {e}")
    return cfg


def load_records(cfg: RunConfig) -> list[tuple[int, str, "Graph | Graph6Error"]]:
    if cfg.gnp is not None:
        n, p, seed, count = cfg.gnp
        recs = []
        for i in range(count):
            g = random_gnp(n, p, seed + i)
            recs.append((i + 1, write_graph6(g), g))
        return recs
    if cfg.graph6 == "-":
        return list(read_graph6_lines(sys.stdin))
    with open(cfg.graph6) as fh:
        return list(read_graph6_lines(fh))


def _graphs(records) -> Iterator[Graph]:
    for lineno, text, g in records:
        if isinstance(g, Exception):
            log.warning("skipping line %d: %s", lineno, g)
            continue
        yield g


def _emit(cfg: RunConfig, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


def cmd_invariants(cfg, records) -> int:
    rows = []
    for g in _graphs(records):
        rep = compute_invariants(g, cfg.budget_alpha, cfg.budget_minor, cfg.budget_chi)
        rows.append({"graph6": write_graph6(g), **rep.to_json()})
    if cfg.format == "json":
        _emit(cfg, _dump_json(rows))
    elif cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        cols = ["graph6", "n", "alpha", "omega", "chi", "h", "clawfree"]
        w.writerow(cols + ["status_alpha", "status_omega", "status_chi", "status_h"])
        for r in rows:
            w.writerow([("" if r[c] is None else str(r[c]).lower() if isinstance(r[c], bool) else r[c]) for c in cols]
                       + [r["status"].get(k, "") for k in ("alpha", "omega", "chi", "h")])
        _emit(cfg, buf.getvalue())
    else:
        lines = []
        for r in rows:
            lines.append(
                f"{r['graph6']}: n={r['n']} alpha={r['alpha']} omega={r['omega']} chi={r['chi']} "
                f"h={r['h']} clawfree={r['clawfree']} status={r['status']}"
            )
        _emit(cfg, "\n".join(lines))
    return EX_OK


def cmd_domset(cfg, records) -> int:
    rows = []
    for g in _graphs(records):
        g6 = write_graph6(g)
        if not is_connected(g):
            rows.append({"graph6": g6, "applicable": False, "reason": "graph is not connected", "trace": None})
            continue
        if find_claw(g) is None:
            rows.append({"graph6": g6, "applicable": False, "reason": "graph is claw-free", "trace": None})
            continue
        trace = domset_from_claw(g)
        verdict = verify_domset_trace(g, trace)
        rows.append({"graph6": g6, "applicable": True, "reason": None, "trace": trace.to_json(),
                     "verified": verdict.ok})
    if cfg.format == "json":
        _emit(cfg, _dump_json(rows))
    else:
        lines = []
        for r in rows:
            if not r["applicable"]:
                lines.append(f"{r['graph6']}: not applicable ({r['reason']})")
            else:
                t = r["trace"]
                lines.append(f"{r['graph6']}: k={t['k']} |D|={len(t['D'])} |S|={len(t['S'])} "
                             f"D={t['D']} verified={r['verified']}")
        _emit(cfg, "\n".join(lines))
    return EX_OK


def cmd_peel(cfg, records) -> int:
    rows = []
    for g in _graphs(records):
        res = peel_minor(g, exact_cap=cfg.exact_cap, budget=cfg.budget_minor)
        rows.append({"graph6": write_graph6(g), **res.to_json()})
    if cfg.format == "json":
        _emit(cfg, _dump_json(rows))
    else:
        lines = []
        for r in rows:
            cases = ", ".join(lv["case"] for lv in r["levels"])
            lines.append(f"{r['graph6']}: achieved K_{r['achieved']} via [{cases}] model={r['model']}")
        _emit(cfg, "\n".join(lines))
    return EX_OK


def cmd_verify(cfg, records) -> int:
    summary, reports = verify_corpus(records, cfg.budget_alpha, cfg.budget_minor, cfg.budget_chi, jobs=cfg.jobs)
    for g6 in summary.violation_graphs:
        log.error("violation: %s", g6)
    if cfg.violations:
        with open(cfg.violations, "w") as fh:
            fh.writelines(g6 + "\n" for g6 in summary.violation_graphs)
    if cfg.format == "json":
        _emit(cfg, _dump_json({"summary": summary.to_json(), "reports": [r.to_json() for r in reports]}))
    elif cfg.format == "csv":
        _emit(cfg, reports_to_csv(reports))
    else:
        s = summary
        lines = [f"checked={s.checked} satisfied={s.satisfied} undecided={s.undecided} "
                 f"violations={s.violations} skipped={s.skipped} chi>h={s.hadwiger_violations}"]
        for i in BOUND_IDS:
            c = s.per_formula[i]
            lines.append(f"  {i:18s} pass={c['pass']} fail={c['fail']} n/a={c['n/a']} undecided={c['undecided']}")
        _emit(cfg, "\n".join(lines))
    if summary.violations:
        return EX_VIOLATION
    if summary.undecided:
        return EX_UNDECIDED
    return EX_OK


def cmd_bounds_table(cfg) -> int:
    rows = list(iter_table(cfg.alpha_range, cfg.h_range, cfg.omega))
    cols = ["alpha", "h"] + list(BOUND_IDS) + ["best", "best_value"]
    if cfg.format == "json":
        _emit(cfg, _dump_json(rows))
    elif cfg.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: ("" if v is None else v) for k, v in r.items()})
        _emit(cfg, buf.getvalue())
    else:
        widths = [max(len(c), 6) for c in cols]
        lines = ["  ".join(c.rjust(wd) for c, wd in zip(cols, widths))]
        for r in rows:
            cells = ["n/a" if r[c] is None else str(r[c]) for c in cols]
            lines.append("  ".join(x.rjust(wd) for x, wd in zip(cells, widths)))
        _emit(cfg, "\n".join(lines))
    return EX_OK


def run(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EX_USAGE
    except UsageError as e:
        print(f"minorforge: error: {e}", file=sys.stderr)
        return EX_USAGE
    if cfg.command == "bounds-table":
        return cmd_bounds_table(cfg)
    try:
        records = load_records(cfg)
    except OSError as e:
        print(f"minorforge: cannot read input: {e}", file=sys.stderr)
        return EX_NOINPUT
    handler = {"invariants": cmd_invariants, "domset": cmd_domset, "peel": cmd_peel, "verify": cmd_verify}
    return handler[cfg.command](cfg, records)


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
