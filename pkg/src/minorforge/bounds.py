"""Order bounds in terms of stability number alpha, Hadwiger number h and
clique number omega, evaluated in exact rational arithmetic, plus the corpus
verification harness."""
from __future__ import annotations

import csv
import io
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

from .graph import Graph, Graph6Error, write_graph6
from .invariants import compute_invariants

log = logging.getLogger(__name__)

F = Fraction


@dataclass(frozen=True)
class BoundFormula:
    id: str
    text: str
    applies: Callable[[int, int], bool]  # (alpha, h)
    value: Callable[[int, int, Optional[int]], Fraction]  # (alpha, h, omega)
    needs_omega: bool = False
    proven: bool = True


_always = lambda a, h: True  # noqa: E731

FORMULAS: dict[str, BoundFormula] = {
    f.id: f
    for f in [
        BoundFormula("conj_alpha_h", "n <= alpha*h", _always, lambda a, h, w: F(a * h), proven=False),
        BoundFormula("duchet_meyniel", "n <= (2alpha-1)h", _always, lambda a, h, w: F((2 * a - 1) * h)),
        # false for edgeless graphs (h = 1) as literally stated, hence h >= 2
        BoundFormula(
            "kpt_eq1", "n <= (2alpha-1)(h-1)+1", lambda a, h: h >= 2,
            lambda a, h, w: F((2 * a - 1) * (h - 1) + 1),
        ),
        BoundFormula(
            "kpt_omega", "n <= (2alpha-1)h-omega", lambda a, h: a >= 2,
            lambda a, h, w: F((2 * a - 1) * h - w), needs_omega=True,
        ),
        BoundFormula("kpt_32", "n <= (2alpha-3/2)h", lambda a, h: a >= 3, lambda a, h, w: (2 * a - F(3, 2)) * h),
        # alpha >= 3: at alpha = 2 this is Hadwiger-hard, at alpha = 1 false
        BoundFormula("ks_eq2", "n <= 2(alpha-1)h", lambda a, h: a >= 3, lambda a, h, w: F(2 * (a - 1) * h)),
        BoundFormula(
            "wood_eq3", "n <= (2alpha-1)(h-5/2)+5/2", lambda a, h: h >= 5,
            lambda a, h, w: (2 * a - 1) * (h - F(5, 2)) + F(5, 2),
        ),
        BoundFormula("fox", "n <= 1.983 alpha h", _always, lambda a, h, w: F(1983, 1000) * a * h),
        BoundFormula("balogh_kostochka", "n <= 1.948 alpha h", _always, lambda a, h, w: F(1948, 1000) * a * h),
        BoundFormula(
            "theorem1", "n <= (alpha-1)(2h-5)+5", lambda a, h: a >= 3 and h >= 5,
            lambda a, h, w: F((a - 1) * (2 * h - 5) + 5),
        ),
    ]
}
BOUND_IDS = tuple(FORMULAS)

# tie-break order for best_bound: the sharpest result first, then listing order
BEST_ORDER = ("theorem1",) + tuple(i for i in BOUND_IDS if i != "theorem1")


def eval_bound(id: str, alpha: int, h: int, omega: Optional[int] = None) -> Optional[Fraction]:
    """Exact bound value, or None when the formula's hypotheses fail."""
    try:
        f = FORMULAS[id]
    except KeyError:
        raise KeyError(f"unknown bound id {id!r}") from None
    if alpha < 1 or h < 1 or (omega is not None and omega < 1):
        raise ValueError("alpha, h and omega must be positive")
    if not f.applies(alpha, h):
        return None
    if f.needs_omega and omega is None:
        raise ValueError(f"{id} needs omega")
    return f.value(alpha, h, omega)


def best_bound(alpha: int, h: int, omega: Optional[int] = None) -> tuple[str, Fraction]:
    """Smallest applicable proven bound (the conjecture is not a bound).
    Formulas needing omega are skipped when omega is None."""
    best = None
    for id in BEST_ORDER:
        f = FORMULAS[id]
        if not f.proven or (f.needs_omega and omega is None):
            continue
        v = eval_bound(id, alpha, h, omega)
        if v is not None and (best is None or v < best[1]):
            best = (id, v)
    return best


# ---------------------------------------------------------------- per graph

@dataclass
class BoundCheck:
    applicable: Optional[bool]  # None when undecidable (inputs not exact)
    bound: Optional[Fraction]
    satisfied: Optional[bool]  # None: not applicable or undecided
    status: str  # pass | fail | n/a | undecided
    slack: Optional[Fraction] = None  # bound - n


@dataclass
class BoundReport:
    graph6: str
    n: int
    alpha: Optional[int]
    omega: Optional[int]
    chi: Optional[int]
    h: Optional[int]
    status: dict[str, str]
    checks: dict[str, BoundCheck] = field(default_factory=dict)

    @property
    def chi_le_h(self) -> Optional[bool]:
        if self.status.get("chi") != "exact" or self.status.get("h") != "exact" or self.n == 0:
            return None
        return self.chi <= self.h

    @property
    def violations(self) -> list[str]:
        return [i for i, c in self.checks.items() if c.status == "fail"]

    @property
    def undecided(self) -> list[str]:
        return [i for i, c in self.checks.items() if c.status == "undecided"]

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "alpha": self.alpha,
            "omega": self.omega,
            "chi": self.chi,
            "h": self.h,
            "status": self.status,
            "chi_le_h": self.chi_le_h,
            "bounds": {
                i: {
                    "applicable": c.applicable,
                    "bound": _frac_str(c.bound),
                    "satisfied": c.satisfied,
                    "status": c.status,
                    "slack": _frac_str(c.slack),
                }
                for i, c in self.checks.items()
            },
        }


def _frac_str(x: Optional[Fraction]) -> Optional[str]:
    return None if x is None else str(x)


def check_graph(
    g: Graph,
    budget_alpha: Optional[int] = None,
    budget_minor: Optional[int] = None,
    budget_chi: Optional[int] = None,
) -> BoundReport:
    inv = compute_invariants(g, budget_alpha, budget_minor, budget_chi, want=("alpha", "chi", "h"))
    if inv.status.get("alpha") == "exact" and inv.alpha >= 2:
        inv2 = compute_invariants(g, budget_alpha, want=("omega",))
        inv.omega, inv.status["omega"] = inv2.omega, inv2.status["omega"]
    elif inv.status.get("alpha") == "exact" and g.n:
        # alpha = 1 means the graph is complete
        inv.omega, inv.status["omega"] = g.n, "exact"
    rep = BoundReport(write_graph6(g), g.n, inv.alpha, inv.omega, inv.chi, inv.h, dict(inv.status))
    exact_ah = g.n > 0 and inv.status.get("alpha") == "exact" and inv.status.get("h") == "exact"
    for id, f in FORMULAS.items():
        if not exact_ah:
            rep.checks[id] = BoundCheck(None, None, None, "n/a" if g.n == 0 else "undecided")
            continue
        if not f.applies(inv.alpha, inv.h):
            rep.checks[id] = BoundCheck(False, None, None, "n/a")
            continue
        if f.needs_omega and inv.status.get("omega") != "exact":
            rep.checks[id] = BoundCheck(True, None, None, "undecided")
            continue
        val = f.value(inv.alpha, inv.h, inv.omega)
        ok = g.n <= val
        rep.checks[id] = BoundCheck(True, val, ok, "pass" if ok else "fail", val - g.n)
    return rep


# ---------------------------------------------------------------- corpora

CSV_COLUMNS = ["graph6", "n", "alpha", "omega", "chi", "h"] + [
    f"{i}_{col}" for i in BOUND_IDS for col in ("applicable", "bound", "satisfied")
]


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def report_row(rep: BoundReport) -> list[str]:
    row = [rep.graph6, str(rep.n), _cell(rep.alpha), _cell(rep.omega), _cell(rep.chi), _cell(rep.h)]
    for i in BOUND_IDS:
        c = rep.checks[i]
        sat = "undecided" if c.status == "undecided" else _cell(c.satisfied)
        row += [_cell(c.applicable), _cell(c.bound), sat]
    return row


def reports_to_csv(reports: Iterable[BoundReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for rep in reports:
        w.writerow(report_row(rep))
    return buf.getvalue()


@dataclass
class CorpusSummary:
    checked: int = 0
    satisfied: int = 0
    undecided: int = 0
    violations: int = 0
    skipped: int = 0
    hadwiger_violations: int = 0
    per_formula: dict[str, dict[str, int]] = field(default_factory=dict)
    violation_graphs: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "satisfied": self.satisfied,
            "undecided": self.undecided,
            "violations": self.violations,
            "skipped": self.skipped,
            "hadwiger_violations": self.hadwiger_violations,
            "per_formula": self.per_formula,
            "violation_graphs": self.violation_graphs,
        }


def _check_worker(args) -> BoundReport:
    g, budgets = args
    return check_graph(g, *budgets)


def verify_corpus(
    records: Iterable[tuple[int, str, "Graph | Graph6Error"]],
    budget_alpha: Optional[int] = None,
    budget_minor: Optional[int] = None,
    budget_chi: Optional[int] = None,
    jobs: int = 1,
) -> tuple[CorpusSummary, list[BoundReport]]:
    """Check every graph against every formula; reports keep input order.

    ``records`` are ``(line_number, text, graph_or_error)`` as produced by
    :func:`minorforge.graph.read_graph6_lines`; malformed ones are skipped and
    logged. A graph counts as a violation if any decided formula fails or
    chi > h, as undecided if no formula fails but some could not be decided.
    """
    summary = CorpusSummary(per_formula={i: {"pass": 0, "fail": 0, "n/a": 0, "undecided": 0} for i in BOUND_IDS})
    graphs = []
    for lineno, text, g in records:
        if isinstance(g, Exception):
            log.warning("skipping line %d: %s", lineno, g)
            summary.skipped += 1
            continue
        graphs.append(g)
    budgets = (budget_alpha, budget_minor, budget_chi)
    work = ((g, budgets) for g in graphs)
    if jobs > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            reports = list(ex.map(_check_worker, work, chunksize=max(1, len(graphs) // (4 * jobs))))
    else:
        reports = [_check_worker(w) for w in work]
    for rep in reports:
        summary.checked += 1
        for i, c in rep.checks.items():
            summary.per_formula[i][c.status] += 1
        bad = bool(rep.violations) or rep.chi_le_h is False
        if rep.chi_le_h is False:
            summary.hadwiger_violations += 1
        if bad:
            summary.violations += 1
            summary.violation_graphs.append(rep.graph6)
        elif rep.undecided:
            summary.undecided += 1
        else:
            summary.satisfied += 1
    return summary, reports


def iter_table(alphas: Iterable[int], hs: Iterable[int], omega: Optional[int] = None) -> Iterator[dict]:
    """Rows of formula values over an (alpha, h) grid with the argmin."""
    for a in alphas:
        for h in hs:
            row: dict = {"alpha": a, "h": h}
            for i in BOUND_IDS:
                f = FORMULAS[i]
                if f.needs_omega and omega is None:
                    row[i] = None
                else:
                    v = eval_bound(i, a, h, omega)
                    row[i] = _frac_str(v)
            best = best_bound(a, h, omega)
            row["best"] = best[0]
            row["best_value"] = str(best[1])
            yield row
