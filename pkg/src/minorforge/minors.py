"""Constructive peeling: remove a connected dominating set, solve the rest,
add the removed set back as one more branch set."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .domset import DomSetTrace, grow_dominating_set
from .graph import (
    Graph,
    GraphError,
    connected_components,
    delete_vertices,
    induced_subgraph,
    is_connected_set,
    mask_of,
)
from .invariants import (
    SearchBudgetExceeded,
    find_claw,
    greedy_minor_model,
    hadwiger_number,
    stability_number,
)
from .model import MinorModel, verify_minor_model

__all__ = [
    "MinorModel",
    "PeelLevel",
    "PeelResult",
    "compose_model",
    "peel_minor",
    "verify_minor_model",
]

CASES = ("disconnected", "clawfree-fallback", "small-alpha-fallback", "small-order-fallback", "peel")

DEFAULT_EXACT_CAP = 16
DEFAULT_ORDER_FLOOR = 10


def compose_model(g: Graph, d: Sequence[int], inner: MinorModel) -> MinorModel:
    """Add the connected dominating set ``d`` as a new branch set of ``inner``.

    ``inner`` must already use ``g``'s labels and avoid ``d``.
    """
    dmask = mask_of(d)
    if not dmask:
        raise GraphError("dominating set is empty")
    if not is_connected_set(g, dmask):
        raise GraphError("set is not connected")
    dominated = dmask
    for v in d:
        dominated |= g.adj[v]
    if dominated != g.vertex_mask:
        raise GraphError("set is not dominating")
    for s in inner.branch_sets:
        if mask_of(s) & dmask:
            raise GraphError("inner model meets the dominating set")
    model = MinorModel.from_sets(list(inner.branch_sets) + [sorted(d)])
    check = verify_minor_model(g, model)
    if not check:
        raise GraphError(f"composed model invalid: {check.reason}")
    return model


@dataclass
class PeelLevel:
    case: str
    depth: int
    vertices: list[int]
    D: Optional[list[int]] = None
    remaining_order: int = 0
    remaining_alpha: Optional[int] = None
    trace: Optional[DomSetTrace] = None
    exact: Optional[bool] = None  # fallback levels: was the model from an exact search

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "depth": self.depth,
            "vertices": self.vertices,
            "D": self.D,
            "remaining_order": self.remaining_order,
            "remaining_alpha": self.remaining_alpha,
            "trace": self.trace.to_json() if self.trace else None,
            "exact": self.exact,
        }


@dataclass
class PeelResult:
    levels: list[PeelLevel] = field(default_factory=list)
    model: MinorModel = MinorModel(())

    @property
    def achieved(self) -> int:
        return self.model.order

    def to_json(self) -> dict:
        return {
            "levels": [lv.to_json() for lv in self.levels],
            "model": self.model.to_json(),
            "achieved": self.achieved,
        }


def _alpha_or_none(g: Graph, budget: Optional[int]) -> Optional[int]:
    try:
        return stability_number(g, budget)[0]
    except SearchBudgetExceeded:
        return None


def peel_minor(
    g: Graph,
    exact_cap: int = DEFAULT_EXACT_CAP,
    budget: Optional[int] = None,
    floor: int = DEFAULT_ORDER_FLOOR,
) -> PeelResult:
    """Build a complete-minor model by recursive peeling.

    Cases per (sub)graph: disconnected graphs recurse per component and keep
    the largest model; claw-free graphs, graphs with alpha <= 2 and graphs with
    fewer than ``floor`` vertices fall back to the exact Hadwiger search (order
    <= ``exact_cap``) or the greedy contraction heuristic; otherwise the
    claw-seeded dominating set D is peeled off and composed onto the model of
    G - D. ``budget`` bounds each exact search; exhaustion downgrades the level
    to ``exact=False``.
    """
    result = PeelResult()
    result.model = _peel(g, list(range(g.n)), 0, exact_cap, budget, floor, result.levels)
    check = verify_minor_model(g, result.model)
    if not check:  # pragma: no cover - construction bug
        raise AssertionError(f"peeling produced an invalid model: {check.reason}")
    return result


def _fallback(sub: Graph, labels, level: PeelLevel, exact_cap, budget) -> MinorModel:
    if sub.n <= exact_cap:
        res = hadwiger_number(sub, budget)
        level.exact = res.exact
        model = res.model
    else:
        level.exact = False
        model = greedy_minor_model(sub)
    return model.relabel(labels)


def _peel(sub: Graph, labels: list[int], depth, exact_cap, budget, floor, levels) -> MinorModel:
    if sub.n == 0:
        return MinorModel(())
    comps = connected_components(sub)
    if len(comps) > 1:
        levels.append(PeelLevel("disconnected", depth, labels, remaining_order=sub.n))
        best = MinorModel(())
        for comp in comps:
            part, new_to_old, _ = induced_subgraph(sub, comp)
            m = _peel(part, [labels[v] for v in new_to_old], depth + 1, exact_cap, budget, floor, levels)
            if m.order > best.order:
                best = m
        return best

    claw = find_claw(sub)
    if claw is None:
        level = PeelLevel("clawfree-fallback", depth, labels, remaining_order=sub.n)
        levels.append(level)
        return _fallback(sub, labels, level, exact_cap, budget)
    if sub.n < floor:
        level = PeelLevel("small-order-fallback", depth, labels, remaining_order=sub.n)
        levels.append(level)
        return _fallback(sub, labels, level, exact_cap, budget)
    alpha = _alpha_or_none(sub, budget)
    if alpha is not None and alpha <= 2:
        level = PeelLevel("small-alpha-fallback", depth, labels, remaining_order=sub.n, remaining_alpha=alpha)
        levels.append(level)
        return _fallback(sub, labels, level, exact_cap, budget)

    trace = grow_dominating_set(sub, claw)
    rest, new_to_old, _ = delete_vertices(sub, trace.D)
    level = PeelLevel(
        "peel",
        depth,
        labels,
        D=[labels[v] for v in trace.D],
        remaining_order=rest.n,
        remaining_alpha=_alpha_or_none(rest, budget) if rest.n else 0,
        trace=trace.relabel(labels),
    )
    levels.append(level)
    inner = _peel(rest, [labels[v] for v in new_to_old], depth + 1, exact_cap, budget, floor, levels)
    # inner is in original labels; compose in the local frame
    local = {old: i for i, old in enumerate(labels)}
    inner_local = MinorModel.from_sets([[local[v] for v in s] for s in inner.branch_sets])
    return compose_model(sub, trace.D, inner_local).relabel(labels)
