"""Check every order bound on the bundled small-graph corpus plus a batch of
random graphs, and write the per-graph CSV and a per-formula tally.

    python3 scripts/bound_sweep.py --random 200 --n 16 --p 0.3 --out-dir results/
"""
import argparse
import json
import logging
from pathlib import Path

from minorforge.bounds import reports_to_csv, verify_corpus
from minorforge.graph import random_gnp, small_graphs, write_graph6


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=7, help="largest order taken from the bundled corpus")
    ap.add_argument("--random", type=int, default=0, help="number of extra G(n,p) samples")
    ap.add_argument("--n", type=int, default=16)
    ap.add_argument("--p", type=float, default=0.3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out-dir", type=Path, default=Path("results"))
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")

    graphs = small_graphs(args.max_n) + [random_gnp(args.n, args.p, args.seed + i) for i in range(args.random)]
    records = [(i + 1, write_graph6(g), g) for i, g in enumerate(graphs)]
    summary, reports = verify_corpus(records, jobs=args.jobs)

    args.out_dir.mkdir(parents=True, exist_ok=True)
    (args.out_dir / "bounds.csv").write_text(reports_to_csv(reports))
    (args.out_dir / "summary.json").write_text(json.dumps(summary.to_json(), indent=2) + "\n")

    print(f"checked {summary.checked}: satisfied {summary.satisfied}, undecided {summary.undecided}, "
          f"violations {summary.violations}, chi > h {summary.hadwiger_violations}")
    print(f"{'formula':18s} {'pass':>6s} {'fail':>6s} {'n/a':>6s}  tightest (min slack)")
    for fid, counts in summary.per_formula.items():
        slacks = [r.checks[fid].slack for r in reports if r.checks[fid].slack is not None]
        tight = min(slacks) if slacks else None
        print(f"{fid:18s} {counts['pass']:6d} {counts['fail']:6d} {counts['n/a']:6d}  {tight}")


if __name__ == "__main__":
    main()
