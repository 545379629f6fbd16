"""Complete-minor models and their independent verifier."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits, is_connected_set, mask_of


@dataclass(frozen=True)
class MinorModel:
    """Disjoint connected, pairwise adjacent branch sets witnessing K_t."""

    branch_sets: tuple[tuple[int, ...], ...]

    @classmethod
    def from_sets(cls, sets: Sequence[Sequence[int]]) -> "MinorModel":
        canon = sorted((tuple(sorted(s)) for s in sets), key=lambda s: s[:1])
        return cls(tuple(canon))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "MinorModel":
        return cls.from_sets([list(bits(m)) for m in masks])

    @property
    def order(self) -> int:
        return len(self.branch_sets)

    def relabel(self, new_to_old: Sequence[int]) -> "MinorModel":
        return MinorModel.from_sets([[new_to_old[v] for v in s] for s in self.branch_sets])

    def to_json(self) -> list[list[int]]:
        return [list(s) for s in self.branch_sets]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_minor_model(g: Graph, m: MinorModel) -> Verdict:
    seen = 0
    masks = []
    for i, s in enumerate(m.branch_sets):
        if not s:
            return Verdict(False, f"branch set {i} is empty")
        for v in s:
            if not 0 <= v < g.n:
                return Verdict(False, f"branch set {i} contains vertex {v} outside the graph")
        mk = mask_of(s)
        if mk.bit_count() != len(s):
            return Verdict(False, f"branch set {i} repeats a vertex")
        if mk & seen:
            return Verdict(False, f"branch set {i} overlaps an earlier branch set")
        seen |= mk
        if not is_connected_set(g, mk):
            return Verdict(False, f"branch set {i} is not connected")
        masks.append(mk)
    nbhd = []
    for mk in masks:
        r = 0
        for v in bits(mk):
            r |= g.adj[v]
        nbhd.append(r)
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if not nbhd[i] & masks[j]:
                return Verdict(False, f"branch sets {i} and {j} not adjacent")
    return Verdict(True)
