"""Brute-force reference implementations, deliberately naive and independent
of the solvers under test (plain edge sets, itertools enumeration)."""
from itertools import combinations, product


def edge_set(g):
    return {frozenset(e) for e in g.edges()}


def brute_alpha(g):
    E = edge_set(g)
    for k in range(g.n, -1, -1):
        for s in combinations(range(g.n), k):
            if all(frozenset(p) not in E for p in combinations(s, 2)):
                return k
    return 0


def brute_omega(g):
    E = edge_set(g)
    for k in range(g.n, -1, -1):
        for s in combinations(range(g.n), k):
            if all(frozenset(p) in E for p in combinations(s, 2)):
                return k
    return 0


def brute_chi(g):
    if g.n == 0:
        return 0
    E = [tuple(e) for e in g.edges()]
    for k in range(1, g.n + 1):
        for col in product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in E):
                return k
    raise AssertionError("unreachable")


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _connected(block, E):
    block = set(block)
    start = next(iter(block))
    seen, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for u in block:
            if u not in seen and frozenset((u, v)) in E:
                seen.add(u)
                stack.append(u)
    return seen == block


def brute_hadwiger(g):
    """Largest t such that some partition of V + {deleted marker} has t
    connected, pairwise adjacent branch blocks."""
    E = edge_set(g)
    marker = g.n
    best = 0
    for part in set_partitions(list(range(g.n + 1))):
        blocks = [b for b in part if marker not in b]
        if len(blocks) <= best:
            continue
        if not all(_connected(b, E) for b in blocks):
            continue
        if all(any(frozenset((u, v)) in E for u in a for v in b) for a, b in combinations(blocks, 2)):
            best = len(blocks)
    return best


def brute_has_claw(g):
    E = edge_set(g)
    for c in range(g.n):
        nb = [v for v in range(g.n) if frozenset((c, v)) in E]
        for a, b, d in combinations(nb, 3):
            if not ({frozenset((a, b)), frozenset((a, d)), frozenset((b, d))} & E):
                return True
    return False
