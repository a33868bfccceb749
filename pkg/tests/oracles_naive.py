"""Independent brute-force oracles the fast implementations are tested against.

Everything here is written definition-first (permutations, set arithmetic,
dict adjacency) and stays independent of the bitset code paths it checks.
"""

from __future__ import annotations

from itertools import combinations, permutations

from indsat.graphs import Graph


def naive_find_induced(host: Graph, pattern: Graph):
    """Try every injection pattern -> host; return one induced embedding."""
    for image in permutations(range(host.n), pattern.n):
        if all(pattern.has_edge(p, q) == host.has_edge(image[p], image[q])
               for p, q in combinations(range(pattern.n), 2)):
            return image
    return None


def _adjacency_sets(g: Graph) -> dict[int, set[int]]:
    return {v: set(g.neighbors(v)) for v in range(g.n)}


def naive_components(g: Graph, removed: set[int]) -> list[set[int]]:
    adj = _adjacency_sets(g)
    left = set(range(g.n)) - removed
    comps = []
    while left:
        start = left.pop()
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in left:
                    left.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def naive_is_connected(g: Graph) -> bool:
    return g.n > 0 and len(naive_components(g, set())) == 1


def naive_2cuts(g: Graph) -> set[tuple[int, int]]:
    out = set()
    for u, v in combinations(range(g.n), 2):
        if len(naive_components(g, {u, v})) >= 2:
            out.add((u, v))
    return out


def naive_k_connected(g: Graph, k: int) -> bool:
    if g.n < k + 1:
        return False
    for size in range(k):
        for cut in combinations(range(g.n), size):
            if len(naive_components(g, set(cut))) != 1:
                return False
    return True


def naive_has_cycle(g: Graph) -> bool:
    adj = _adjacency_sets(g)
    seen: set[int] = set()
    for root in range(g.n):
        if root in seen:
            continue
        stack = [(root, -1)]
        seen.add(root)
        while stack:
            v, parent = stack.pop()
            for w in adj[v]:
                if w == parent:
                    continue
                if w in seen:
                    return True
                seen.add(w)
                stack.append((w, v))
    return False


def naive_twins(g: Graph, v: int) -> tuple[list[int], list[int]]:
    adj = _adjacency_sets(g)
    true_twins = [u for u in range(g.n)
                  if u != v and adj[u] | {u} == adj[v] | {v}]
    false_twins = [u for u in range(g.n) if u != v and adj[u] == adj[v]]
    return true_twins, false_twins


def naive_is_permutation_graph(g: Graph) -> bool:
    """Definitional double loop over (ordering, sigma); exponential, n <= 6."""
    n = g.n
    if n <= 1:
        return True
    vertices = list(range(n))
    for ordering in permutations(vertices):
        for sigma in permutations(range(n)):
            if all(g.has_edge(ordering[i], ordering[j]) == (sigma[i] < sigma[j])
                   for i in range(n) for j in range(i + 1, n)):
                return True
    return False


def random_graph(rng, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)
