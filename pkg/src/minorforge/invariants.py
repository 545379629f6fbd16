"""Exact graph invariants with witnesses: alpha, omega, chi, h, claws.

All solvers are exact. A node budget can be supplied; when it runs out the
solver raises :class:`SearchBudgetExceeded` instead of returning a guess.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .graph import (
    Graph,
    GraphError,
    bits,
    complement,
    connected_components,
    induced_subgraph,
)
from .model import MinorModel, verify_minor_model


class SearchBudgetExceeded(RuntimeError):
    """A solver hit its node budget. ``best`` holds the best witness found so far."""

    def __init__(self, what: str, nodes: int, best=None):
        super().__init__(f"{what}: node budget exhausted after {nodes} nodes")
        self.nodes = nodes
        self.best = best


class _Counter:
    __slots__ = ("limit", "nodes", "what")

    def __init__(self, limit: Optional[int], what: str):
        if limit is not None and limit <= 0:
            raise ValueError("budget must be positive")
        self.limit = limit
        self.nodes = 0
        self.what = what

    def tick(self, best=None):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise SearchBudgetExceeded(self.what, self.nodes, best)


# ---------------------------------------------------------------- stable sets

def _clique_cover_bound(adj: list[int] | tuple[int, ...], cand: int) -> int:
    """Number of cliques in a greedy clique cover of ``cand`` (upper-bounds alpha)."""
    count = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        clique_cand = cand & adj[v]
        cand &= ~(1 << v)
        while clique_cand:
            u = (clique_cand & -clique_cand).bit_length() - 1
            cand &= ~(1 << u)
            clique_cand &= adj[u]
        count += 1
    return count


def _max_stable(adj, cand: int, counter: _Counter) -> int:
    best = 0
    best_set = 0

    def rec(cand: int, chosen: int, size: int):
        nonlocal best, best_set
        counter.tick(best_set)
        # vertices of degree <= 1 inside cand can always be taken
        changed = True
        while changed and cand:
            changed = False
            for v in bits(cand):
                if not cand >> v & 1:
                    continue
                nb = adj[v] & cand
                if nb & (nb - 1) == 0:
                    chosen |= 1 << v
                    size += 1
                    cand &= ~(nb | 1 << v)
                    changed = True
        if size > best:
            best, best_set = size, chosen
        if not cand:
            return
        if size + _clique_cover_bound(adj, cand) <= best:
            return
        v, dv = -1, -1
        for u in bits(cand):
            d = (adj[u] & cand).bit_count()
            if d > dv:
                v, dv = u, d
        rec(cand & ~adj[v] & ~(1 << v), chosen | 1 << v, size + 1)
        rec(cand & ~(1 << v), chosen, size)

    rec(cand, 0, 0)
    return best_set


def stability_number(g: Graph, budget: Optional[int] = None) -> tuple[int, list[int]]:
    """Maximum stable set by branch and bound on a maximum-degree vertex."""
    counter = _Counter(budget, "stability")
    try:
        s = _max_stable(g.adj, g.vertex_mask, counter)
    except SearchBudgetExceeded as e:
        e.best = list(bits(e.best or 0))
        raise
    return s.bit_count(), list(bits(s))


def clique_number(g: Graph, budget: Optional[int] = None) -> tuple[int, list[int]]:
    return stability_number(complement(g), budget)


# ---------------------------------------------------------------- colouring

def greedy_coloring(g: Graph) -> list[int]:
    """DSATUR greedy colouring (saturation, then degree, then lowest index)."""
    n = g.n
    colors = [-1] * n
    sat = [0] * n  # bitmask of neighbour colours
    uncolored = set(range(n))
    while uncolored:
        v = max(uncolored, key=lambda x: (sat[x].bit_count(), g.degree(x), -x))
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        uncolored.discard(v)
        for u in bits(g.adj[v]):
            sat[u] |= 1 << c
    return colors


def _k_colorable(g: Graph, k: int, seed_clique: list[int], counter: _Counter) -> Optional[list[int]]:
    n = g.n
    colors = [-1] * n
    sat = [0] * n
    for c, v in enumerate(seed_clique):
        colors[v] = c
        for u in bits(g.adj[v]):
            sat[u] |= 1 << c
    uncolored = [v for v in range(n) if colors[v] < 0]
    full = (1 << k) - 1

    def rec(used: int) -> bool:
        counter.tick()
        if not uncolored:
            return True
        v = max(uncolored, key=lambda x: ((sat[x] & full).bit_count(), g.degree(x), -x))
        free = full & ~sat[v]
        if not free:
            return False
        uncolored.remove(v)
        tried_new = False
        for c in bits(free):
            if c >= used:
                # all unused colours are interchangeable
                if tried_new:
                    break
                tried_new = True
            colors[v] = c
            touched = []
            for u in bits(g.adj[v]):
                if colors[u] < 0 and not sat[u] >> c & 1:
                    sat[u] |= 1 << c
                    touched.append(u)
            if rec(max(used, c + 1)):
                return True
            for u in touched:
                sat[u] &= ~(1 << c)
            colors[v] = -1
        uncolored.append(v)
        return False

    if rec(len(seed_clique)):
        return colors
    return None


def chromatic_number(g: Graph, budget: Optional[int] = None) -> tuple[int, list[int]]:
    """Exact chromatic number: DSATUR upper bound, clique lower bound, then
    DSATUR backtracking for each k between them."""
    if g.n == 0:
        return 0, []
    best = greedy_coloring(g)
    ub = max(best) + 1
    omega, clique = clique_number(g, budget)
    counter = _Counter(budget, "chromatic")
    for k in range(omega, ub):
        try:
            col = _k_colorable(g, k, clique, counter)
        except SearchBudgetExceeded as e:
            e.best = best
            raise
        if col is not None:
            return k, col
    return ub, best


def is_proper_coloring(g: Graph, colors: list[int]) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges())


# ---------------------------------------------------------------- claws

@dataclass(frozen=True)
class Claw:
    center: int
    leaves: tuple[int, int, int]

    @property
    def vertices(self) -> list[int]:
        return sorted((self.center,) + self.leaves)

    def is_valid(self, g: Graph) -> bool:
        c, (a, b, d) = self.center, self.leaves
        vs = (c, a, b, d)
        if len(set(vs)) != 4 or not all(0 <= v < g.n for v in vs):
            return False
        if not (g.has_edge(c, a) and g.has_edge(c, b) and g.has_edge(c, d)):
            return False
        return not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d))


def find_claw(g: Graph) -> Optional[Claw]:
    """Lexicographically smallest induced K_{1,3} as (centre, sorted leaves)."""
    for c in range(g.n):
        nc = g.adj[c]
        for a in bits(nc):
            rest_a = nc & ~g.adj[a] & ~((2 << a) - 1)
            for b in bits(rest_a):
                rest_b = rest_a & ~g.adj[b] & ~((2 << b) - 1)
                if rest_b:
                    d = (rest_b & -rest_b).bit_length() - 1
                    return Claw(c, (a, b, d))
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


# ---------------------------------------------------------------- minors

def _greedy_clique(adj: list[int], alive: int) -> list[int]:
    order = sorted(bits(alive), key=lambda v: (-adj[v].bit_count(), v))
    clique, common = [], alive
    for v in order:
        if common >> v & 1:
            clique.append(v)
            common &= adj[v]
    return clique


def greedy_minor_model(g: Graph, most_common: bool = False) -> MinorModel:
    """Cheap complete-minor lower bound.

    In each component, repeatedly contract the edge whose endpoints share the
    fewest neighbours (or the most, with ``most_common``; ties to the
    lexicographically smallest edge), tracking
    branch sets; after every contraction a greedy clique of the quotient is a
    candidate model. The largest candidate over all stages is returned.
    """
    if g.n == 0:
        return MinorModel(())
    best: list[int] = []
    for comp in connected_components(g):
        alive = 0
        for v in comp:
            alive |= 1 << v
        adj = list(g.adj)
        members = [1 << v for v in range(g.n)]
        k = len(comp)
        while True:
            clique = _greedy_clique(adj, alive)
            if len(clique) > len(best):
                best = [members[v] for v in clique]
            if len(clique) == k:
                break
            pick, score = None, None
            for v in bits(alive):
                for u in bits(adj[v] >> (v + 1) << (v + 1)):
                    s = (adj[v] & adj[u]).bit_count()
                    if not most_common:
                        s = -s
                    if score is None or s > score:
                        pick, score = (v, u), s
            v, u = pick
            _contract(adj, members, v, u)
            alive &= ~(1 << u)
            k -= 1
    return MinorModel.from_masks(best)


def _contract(adj: list[int], members: list[int], v: int, u: int) -> None:
    """Merge ``u`` into ``v`` in place."""
    bu, bv = 1 << u, 1 << v
    nu = adj[u] & ~bv
    for w in bits(nu):
        adj[w] = (adj[w] & ~bu) | bv
    adj[v] = (adj[v] | nu) & ~bu & ~bv
    adj[u] = 0
    members[v] |= members[u]
    members[u] = 0


def _kt_connected(g: Graph, t: int, counter: _Counter) -> Optional[list[int]]:
    """Branch sets (as masks) of a K_t model in the connected graph ``g``, or None.

    In a connected graph every K_t model extends to a partition of V into t
    connected, pairwise adjacent parts, so we only search over partitions.
    Each node picks the most constrained quotient vertex v and branches on
    which free neighbour joins v's part (earlier choices become separation
    constraints), plus, when deg(v) >= t-1, the branch where v's part is final.
    """
    n = g.n
    if n < t:
        return None
    need = comb(t, 2)
    if g.num_edges() - (n - t) < need:
        return None

    def rec(alive: int, adj: list[int], sep: list[int], members: list[int]) -> Optional[list[int]]:
        counter.tick()
        while True:
            k = alive.bit_count()
            if k < t:
                return None
            degs = {v: adj[v].bit_count() for v in bits(alive)}
            m = sum(degs.values()) // 2
            if m == k * (k - 1) // 2:
                return [members[v] for v in bits(alive)]
            if m - (k - t) < need:
                return None
            low = [v for v, d in degs.items() if d < t - 1]
            # each contraction repairs at most two low-degree vertices
            if (len(low) + 1) // 2 > k - t:
                return None
            closed = 0
            for v in bits(alive):
                if not adj[v] & ~sep[v]:
                    closed |= 1 << v
            for v in bits(closed):
                if degs[v] < t - 1 or closed & ~adj[v] & ~(1 << v):
                    return None
            # drop free simplicial vertices of low degree; they are never needed
            reduced = False
            for v in low:
                nv = adj[v]
                if sep[v] == 0 and all((adj[u] | 1 << u) & nv == nv for u in bits(nv)):
                    for u in bits(nv):
                        adj[u] &= ~(1 << v)
                    adj[v] = 0
                    alive &= ~(1 << v)
                    reduced = True
                    break
            if not reduced:
                break

        if low:
            v = min(low, key=lambda x: ((adj[x] & ~sep[x]).bit_count(), x))
        else:
            open_ = [x for x in bits(alive) if not closed >> x & 1]
            v = min(open_, key=lambda x: (degs[x], x))
        free = adj[v] & ~sep[v]
        if not free:
            return None
        order = sorted(bits(free), key=lambda u: ((adj[u] & adj[v]).bit_count(), u))
        if degs[v] == 2 and t >= 4 and sep[v] == 0:
            # G/va and G/vb are isomorphic for a degree-2 vertex v with neighbours a, b
            order = order[:1]
        forbidden = 0
        for u in order:
            adj2 = adj.copy()
            members2 = members.copy()
            sep2 = sep.copy()
            for w in bits(forbidden):
                sep2[v] |= 1 << w
                sep2[w] |= 1 << v
            # merge u into v; separation constraints follow the merged vertex
            su = sep2[u] & ~(1 << v)
            for w in bits(su):
                sep2[w] = (sep2[w] & ~(1 << u)) | (1 << v)
            sep2[v] = (sep2[v] | su) & ~(1 << u)
            sep2[u] = 0
            _contract(adj2, members2, v, u)
            found = rec(alive & ~(1 << u), adj2, sep2, members2)
            if found is not None:
                return found
            forbidden |= 1 << u
        if degs[v] >= t - 1 and len(order) == free.bit_count():
            sep2 = sep.copy()
            sep2[v] |= free
            for w in bits(free):
                sep2[w] |= 1 << v
            return rec(alive, adj.copy(), sep2, members.copy())
        return None

    return rec(g.vertex_mask, list(g.adj), [0] * n, [1 << v for v in range(n)])


def kt_minor_model(g: Graph, t: int, budget: Optional[int] = None) -> Optional[MinorModel]:
    """A verified K_t model, or None when exhaustive search proves there is none.

    Raises :class:`SearchBudgetExceeded` if the budget runs out first.
    """
    if t < 1:
        raise GraphError("t must be at least 1")
    counter = _Counter(budget, f"K_{t} minor search")
    for comp in connected_components(g):
        if len(comp) < t:
            continue
        sub, new_to_old, _ = induced_subgraph(g, comp)
        if t == 1:
            masks = [1]
        else:
            masks = _kt_connected(sub, t, counter)
        if masks is not None:
            model = MinorModel.from_masks(masks[:t]).relabel(new_to_old)
            check = verify_minor_model(g, model)
            if not check:  # pragma: no cover - would be a solver bug
                raise AssertionError(f"invalid minor model produced: {check.reason}")
            return model
    return None


def hadwiger_upper_bound(g: Graph) -> int:
    """Largest t allowed by the edge count in some component."""
    best = 0
    for comp in connected_components(g):
        sub, _, _ = induced_subgraph(g, comp)
        n, m = sub.n, sub.num_edges()
        t = 1
        while t + 1 <= n and m - (n - t - 1) >= comb(t + 1, 2):
            t += 1
        best = max(best, t)
    return best


@dataclass
class HadwigerResult:
    h: int
    model: MinorModel
    exact: bool


def hadwiger_number(g: Graph, budget: Optional[int] = None) -> HadwigerResult:
    """Largest complete minor, by ascending K_t tests from the greedy lower bound.

    If the budget runs out, ``exact`` is False and ``h`` is a certified lower
    bound (the witness is still valid).
    """
    if g.n == 0:
        raise GraphError("Hadwiger number needs at least one vertex")
    model = greedy_minor_model(g)
    ub = hadwiger_upper_bound(g)
    t = model.order + 1
    remaining = budget
    while t <= ub:
        try:
            found = kt_minor_model(g, t, remaining)
        except SearchBudgetExceeded as e:
            return HadwigerResult(model.order, model, False)
        if found is None:
            break
        model = found
        t += 1
    return HadwigerResult(model.order, model, True)


# ---------------------------------------------------------------- report

@dataclass
class InvariantReport:
    n: int
    alpha: Optional[int] = None
    alpha_witness: list[int] = field(default_factory=list)
    omega: Optional[int] = None
    omega_witness: list[int] = field(default_factory=list)
    chi: Optional[int] = None
    chi_witness: list[int] = field(default_factory=list)
    h: Optional[int] = None
    h_witness: Optional[MinorModel] = None
    clawfree: Optional[bool] = None
    status: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "alpha_witness": self.alpha_witness,
            "omega": self.omega,
            "omega_witness": self.omega_witness,
            "chi": self.chi,
            "chi_witness": self.chi_witness,
            "h": self.h,
            "h_witness": self.h_witness.to_json() if self.h_witness else None,
            "clawfree": self.clawfree,
            "status": self.status,
        }


def compute_invariants(
    g: Graph,
    budget_alpha: Optional[int] = None,
    budget_minor: Optional[int] = None,
    budget_chi: Optional[int] = None,
    want=("alpha", "omega", "chi", "h"),
) -> InvariantReport:
    """Fill an :class:`InvariantReport`; a timed-out invariant is left at its
    best lower bound (alpha, omega, h) or ``None`` (chi) with status "timeout"."""
    rep = InvariantReport(n=g.n, clawfree=is_claw_free(g))
    if "alpha" in want:
        try:
            rep.alpha, rep.alpha_witness = stability_number(g, budget_alpha)
            rep.status["alpha"] = "exact"
        except SearchBudgetExceeded as e:
            rep.alpha_witness = e.best or []
            rep.alpha = len(rep.alpha_witness)
            rep.status["alpha"] = "timeout"
    if "omega" in want:
        try:
            rep.omega, rep.omega_witness = clique_number(g, budget_alpha)
            rep.status["omega"] = "exact"
        except SearchBudgetExceeded as e:
            rep.omega_witness = e.best or []
            rep.omega = len(rep.omega_witness)
            rep.status["omega"] = "timeout"
    if "chi" in want:
        try:
            rep.chi, rep.chi_witness = chromatic_number(g, budget_chi)
            rep.status["chi"] = "exact"
        except SearchBudgetExceeded:
            rep.status["chi"] = "timeout"
    if "h" in want and g.n > 0:
        res = hadwiger_number(g, budget_minor)
        rep.h, rep.h_witness = res.h, res.model
        rep.status["h"] = "exact" if res.exact else "timeout"
    return rep
