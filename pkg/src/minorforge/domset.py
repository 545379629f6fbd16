"""Claw-seeded connected dominating sets with a certified stable witness.

Starting from the four vertices of an induced claw, repeatedly pick a vertex
``v`` at distance exactly two from the current set ``D``, together with a
middle vertex ``u`` adjacent to both, and add the pair. Every ``v`` is
nonadjacent to all of ``D`` when it is added, so the claw leaves plus the
added ``v``'s form a stable set ``S`` with ``|D| = 2|S| - 2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import (
    Graph,
    GraphError,
    bfs_distances,
    bits,
    induced_subgraph,
    is_connected,
    is_connected_set,
    mask_of,
)
from .invariants import Claw, find_claw, stability_number
from .model import Verdict


@dataclass(frozen=True)
class DomSetTrace:
    claw: Claw
    steps: tuple[tuple[int, int, int], ...]  # (anchor, u, v)
    D: tuple[int, ...]
    S: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.steps)

    def relabel(self, new_to_old: Sequence[int]) -> "DomSetTrace":
        f = new_to_old.__getitem__
        c = self.claw
        return DomSetTrace(
            Claw(f(c.center), tuple(sorted(map(f, c.leaves)))),
            tuple((f(a), f(u), f(v)) for a, u, v in self.steps),
            tuple(sorted(map(f, self.D))),
            tuple(sorted(map(f, self.S))),
        )

    def to_json(self) -> dict:
        return {
            "claw": {"center": self.claw.center, "leaves": list(self.claw.leaves)},
            "steps": [{"anchor": a, "u": u, "v": v} for a, u, v in self.steps],
            "k": self.k,
            "D": list(self.D),
            "S": list(self.S),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "DomSetTrace":
        claw = Claw(obj["claw"]["center"], tuple(obj["claw"]["leaves"]))
        steps = tuple((s["anchor"], s["u"], s["v"]) for s in obj["steps"])
        return cls(claw, steps, tuple(obj["D"]), tuple(obj["S"]))


def grow_dominating_set(g: Graph, claw: Claw) -> DomSetTrace:
    if not claw.is_valid(g):
        raise GraphError(f"{claw} is not an induced claw of the graph")
    if not is_connected(g):
        raise GraphError("graph must be connected to grow a dominating set")
    full = g.vertex_mask
    D = mask_of(claw.vertices)
    steps = []
    while True:
        ring1 = 0
        for x in bits(D):
            ring1 |= g.adj[x]
        ring1 &= ~D
        if D | ring1 == full:
            break
        ring2 = 0
        for x in bits(ring1):
            ring2 |= g.adj[x]
        ring2 &= ~(D | ring1)
        # connectivity guarantees ring2 is nonempty while D is not dominating
        v = (ring2 & -ring2).bit_length() - 1
        cand_u = g.adj[v] & ring1
        u = (cand_u & -cand_u).bit_length() - 1
        anchors = g.adj[u] & D
        anchor = (anchors & -anchors).bit_length() - 1
        steps.append((anchor, u, v))
        D |= (1 << u) | (1 << v)
    S = sorted(claw.leaves + tuple(v for _, _, v in steps))
    return DomSetTrace(claw, tuple(steps), tuple(bits(D)), tuple(S))


def verify_domset_trace(g: Graph, t: DomSetTrace, check_alpha: bool = False) -> Verdict:
    """Re-check every trace invariant against ``g`` without reusing the builder.

    With ``check_alpha`` the exact stability number of G[D] is also computed to
    confirm k+3 <= |S| <= alpha(G[D]).
    """
    if not t.claw.is_valid(g):
        return Verdict(False, "claw is not an induced K_{1,3}")
    current = set(t.claw.vertices)
    for i, (anchor, u, v) in enumerate(t.steps):
        if not all(0 <= x < g.n for x in (anchor, u, v)):
            return Verdict(False, f"step {i}: vertex out of range")
        if u in current or v in current:
            return Verdict(False, f"step {i}: u or v already in D_{i}")
        if anchor not in current:
            return Verdict(False, f"step {i}: anchor {anchor} not in D_{i}")
        if bfs_distances(g, current)[v] != 2:
            return Verdict(False, f"step {i}: v={v} not at distance 2 from D_{i}")
        if not (g.has_edge(u, v) and g.has_edge(u, anchor)):
            return Verdict(False, f"step {i}: u={u} not adjacent to both v and anchor")
        current |= {u, v}
    D = set(t.D)
    if len(D) != len(t.D) or D != current:
        return Verdict(False, "D does not match the claw plus the added pairs")
    k = len(t.steps)
    if len(D) != 2 * k + 4:
        return Verdict(False, "|D| != 2k+4")
    S = set(t.S)
    if len(S) != len(t.S) or len(S) != k + 3:
        return Verdict(False, "|S| != k+3")
    if not S <= D:
        return Verdict(False, "S not contained in D")
    if any(g.has_edge(a, b) for a in S for b in S if a < b):
        return Verdict(False, "S is not stable")
    if len(D) != 2 * len(S) - 2:
        return Verdict(False, "|D| != 2|S|-2")
    dmask = mask_of(D)
    if not is_connected_set(g, dmask):
        return Verdict(False, "D is not connected")
    dominated = dmask
    for x in D:
        dominated |= g.adj[x]
    if dominated != g.vertex_mask:
        missed = next(bits(g.vertex_mask & ~dominated))
        return Verdict(False, f"D is not dominating (vertex {missed} undominated)")
    if check_alpha:
        sub, _, _ = induced_subgraph(g, D)
        if stability_number(sub)[0] < len(S):
            return Verdict(False, "|S| exceeds alpha(G[D])")
    return Verdict(True)


def domset_from_claw(g: Graph, claw: Optional[Claw] = None) -> Optional[DomSetTrace]:
    """Run the construction from the given claw (default: the smallest one);
    None when the graph is disconnected or claw-free."""
    if not is_connected(g):
        return None
    claw = claw or find_claw(g)
    if claw is None:
        return None
    return grow_dominating_set(g, claw)
