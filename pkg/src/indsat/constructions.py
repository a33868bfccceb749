"""Finite-prefix builders: gluing, pair blow-ups, the fixing operations, core
extension steps, and the scheduled fix sequence.

Infinite ingredients (infinite cliques, independent sets, trees) are
truncated to m clones per class; prefix growth is capped at 64 vertices and
reports overflow instead of growing unboundedly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .gatekeeper import (CLIQUE_MODE, INDEP_MODE, GatekeeperResult,
                         has_fixing_operation)
from .graphs import MAX_VERTICES, Graph, _bits, complement, find_induced
from .recognizers import is_3conn_nonclique, match_k2p_k11p


class CapacityError(ValueError):
    """The requested prefix would exceed the 64-vertex cap."""


class PreconditionError(ValueError):
    """A fixing-strategy precondition does not hold."""


# Strategy tags for fix_pair.
TWIN_DUPLICATE = "twin_duplicate"
GATEKEEPER_GLUE = "gatekeeper_glue"
K2P_EDGE = "k2p_edge"
K2P_NONEDGE = "k2p_nonedge"
K11P_EDGE = "k11p_edge"
K11P_NONEDGE = "k11p_nonedge"

# Strategy families for schedule_fixes (edge/non-edge variant picked per pair).
FAMILIES = ("twin", "gatekeeper", "k2p", "k11p")


# ---------------------------------------------------------------------------
# Gluing.


def glue_with_map(g: Graph, g2: Graph, a: Sequence[int],
                  a2: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    """Glue g2 onto g identifying a2[i] with a[i]; also return the vertex map
    from g2 into the result."""
    if len(a) != len(a2):
        raise ValueError("glue lists must have equal length")
    if len(set(a)) != len(a) or len(set(a2)) != len(a2):
        raise ValueError("glue lists must not repeat vertices")
    for v in a:
        if not 0 <= v < g.n:
            raise ValueError(f"glue vertex {v} not in the base graph")
    for v in a2:
        if not 0 <= v < g2.n:
            raise ValueError(f"glue vertex {v} not in the glued graph")
    image = {}
    nxt = g.n
    for w in range(g2.n):
        if w in a2:
            image[w] = a[a2.index(w)]
        else:
            image[w] = nxt
            nxt += 1
    if nxt > MAX_VERTICES:
        raise CapacityError(f"glued graph would have {nxt} vertices")
    edges = g.edges()
    for w, w2 in g2.edges():
        edges.append((image[w], image[w2]))
    return Graph.from_edges(nxt, edges), image


def glue(g: Graph, g2: Graph, a: Sequence[int], a2: Sequence[int]) -> Graph:
    return glue_with_map(g, g2, a, a2)[0]


# ---------------------------------------------------------------------------
# Pair blow-ups H_{uv->c} / H_{uv->s}, truncated to m clones per class.


@dataclass(frozen=True)
class BlowupResult:
    graph: Graph
    pair_images: tuple[int, int]
    classes: dict[int, tuple[int, ...]]  # original vertex -> clone indices


def blowup_graph(h: Graph, pair: tuple[int, int], mode: str, m: int) -> BlowupResult:
    """Perturb the pair, then replace every other vertex by m clones forming
    a clique (clique mode) or independent set, inheriting class adjacency."""
    u, v = pair
    if u == v:
        raise ValueError("pair vertices must be distinct")
    if mode not in (CLIQUE_MODE, INDEP_MODE):
        raise ValueError(f"bad mode {mode!r}")
    if m < 1:
        raise ValueError("truncation m must be at least 1")
    total = 2 + (h.n - 2) * m
    if total > MAX_VERTICES:
        raise CapacityError(f"blow-up would have {total} vertices")
    perturbed = h.toggled(u, v)
    classes: dict[int, tuple[int, ...]] = {}
    nxt = 0
    for w in range(h.n):
        size = 1 if w in (u, v) else m
        classes[w] = tuple(range(nxt, nxt + size))
        nxt += size
    edges = []
    for w in range(h.n):
        if w not in (u, v) and mode == CLIQUE_MODE:
            edges.extend(combinations(classes[w], 2))
        for w2 in range(w + 1, h.n):
            if perturbed.has_edge(w, w2):
                edges.extend((a, b) for a in classes[w] for b in classes[w2])
    return BlowupResult(graph=Graph.from_edges(nxt, edges),
                        pair_images=(classes[u][0], classes[v][0]),
                        classes=classes)


# ---------------------------------------------------------------------------
# Scheduling state.  Pairs are labeled (i, j): generation i is the graph in
# which the pair first appeared, j its rank among that generation's new
# pairs.  Priority follows a fixed enumeration of N x N whose initial segment
# runs (1,1),(1,2),(2,1),(2,2),(3,1),(3,2),(3,3),(1,3),(2,3),...: shell k
# (pairs with max = k) is walked column-before-row for even k and
# row-before-column for odd k.


def priority_position(i: int, j: int) -> int:
    if i < 1 or j < 1:
        raise ValueError("generation indices are 1-based")
    k = max(i, j)
    base = (k - 1) * (k - 1)
    if k == 1:
        return base
    if k % 2 == 0:
        if j == k and i < k:
            return base + i - 1
        return base + (k - 1) + (j - 1)
    if i == k:
        return base + j - 1
    return base + k + (i - 1)


@dataclass(frozen=True)
class QueueEntry:
    i: int
    j: int
    pair: tuple[int, int]

    @property
    def position(self) -> int:
        return priority_position(self.i, self.j)


@dataclass(frozen=True)
class FixRecord:
    pair: tuple[int, int]
    strategy: str
    generation: int  # generation of the graph the fix produced

    def to_json(self) -> dict:
        return {"pair": list(self.pair), "strategy": self.strategy,
                "generation": self.generation}


@dataclass(frozen=True)
class PrefixState:
    graph: Graph
    origin: Graph
    m: int
    generation: int
    queue: tuple[QueueEntry, ...]
    fixed_ledger: tuple[FixRecord, ...]

    def fixed_pairs(self) -> set[tuple[int, int]]:
        return {rec.pair for rec in self.fixed_ledger}

    def next_unfixed(self) -> Optional[QueueEntry]:
        fixed = self.fixed_pairs()
        live = [e for e in self.queue if e.pair not in fixed]
        if not live:
            return None
        return min(live, key=lambda e: e.position)


def initial_state(seed: Graph, m: int) -> PrefixState:
    pairs = [(u, v) for u in range(seed.n) for v in range(u + 1, seed.n)]
    queue = tuple(QueueEntry(1, j + 1, p) for j, p in enumerate(pairs))
    return PrefixState(graph=seed, origin=seed, m=m, generation=1,
                       queue=queue, fixed_ledger=())


def _advance(state: PrefixState, new_graph: Graph,
             record: Optional[tuple[tuple[int, int], str]] = None) -> PrefixState:
    old_n = state.graph.n
    for v in range(old_n):
        if new_graph.adj[v] & ((1 << old_n) - 1) != state.graph.adj[v]:
            raise AssertionError("fix must keep the previous graph induced")
    gen = state.generation + 1
    new_pairs = [(u, v) for u in range(new_graph.n) for v in range(u + 1, new_graph.n)
                 if v >= old_n]
    entries = tuple(QueueEntry(gen, j + 1, p) for j, p in enumerate(sorted(new_pairs)))
    ledger = state.fixed_ledger
    if record is not None:
        ledger = ledger + (FixRecord(record[0], record[1], gen),)
    return PrefixState(graph=new_graph, origin=state.origin, m=state.m,
                       generation=gen, queue=state.queue + entries,
                       fixed_ledger=ledger)


# ---------------------------------------------------------------------------
# The fixing operations.


def _grow(g: Graph, new_rows: list[int]) -> Graph:
    """Extend g by new vertices; new_rows[i] is the full-neighborhood bitmask
    of new vertex g.n + i (may reference other new vertices)."""
    n = g.n + len(new_rows)
    if n > MAX_VERTICES:
        raise CapacityError(f"graph would have {n} vertices")
    rows = [g.adj[v] for v in range(g.n)] + [0] * len(new_rows)
    for idx, mask in enumerate(new_rows):
        v = g.n + idx
        rows[v] = mask
        for w in _bits(mask):
            rows[w] |= 1 << v
    return Graph(n, rows)


def _twin_duplicate(g: Graph, pair: tuple[int, int]) -> Graph:
    """Twin duplication: false twins fix an edge, true twins a non-edge."""
    x, y = pair
    if g.has_edge(x, y):
        g1 = _grow(g, [g.adj[x]])                    # x' with N(x') = N(x)
        return _grow(g1, [g1.adj[y]])                # y' with N(y') = N(y), sees x'
    g1 = _grow(g, [g.adj[x] | 1 << x])               # x' true twin, adjacent to x
    return _grow(g1, [g1.adj[y] | 1 << y])


def _mask(vertices) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _add_block(g: Graph, size: int, attach_mask: int, clique: bool) -> tuple[Graph, list[int]]:
    base = g.n
    rows = []
    for idx in range(size):
        mask = attach_mask
        if clique:
            for prev in range(idx):
                mask |= 1 << (base + prev)
        rows.append(mask)
    return _grow(g, rows), list(range(base, base + size))


def _clique_cover_at_most(g: Graph, vertices: list[int], budget: int) -> bool:
    """Can g[vertices] be covered by at most `budget` cliques?  Equivalent to
    coloring the complement of g[vertices] with `budget` colors."""
    if not vertices:
        return True
    if budget <= 0:
        return False
    sub = g.induced(vertices)
    n = sub.n
    colors = [-1] * n

    def assign(v: int, used: int) -> bool:
        if v == n:
            return True
        for c in range(min(used + 1, budget)):
            # Clique cover: same color requires adjacency in sub.
            if all(colors[w] != c or sub.has_edge(v, w) for w in range(v)):
                colors[v] = c
                if assign(v + 1, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    return assign(0, 0)


def _gatekeeper_fix(g: Graph, pair: tuple[int, int], h: Graph, m: int,
                    gatekeepers: Optional[GatekeeperResult]) -> Graph:
    """Glue a blown-up copy of h, perturbed at a gatekeeper pair of the
    opposite status, onto the pair being fixed."""
    x, y = pair
    is_edge = g.has_edge(x, y)
    if gatekeepers is None:
        gatekeepers = has_fixing_operation(h)
    # Deleting an edge must re-create h with a non-edge of h landing on the
    # pair, so an edge fix consumes h's non-edge gatekeeper; dually for edges.
    if is_edge:
        hpair, mode = gatekeepers.nonedge_witness, gatekeepers.nonedge_mode
    else:
        hpair, mode = gatekeepers.edge_witness, gatekeepers.edge_mode
    if hpair is None:
        raise PreconditionError(
            f"h has no {'non-edge' if is_edge else 'edge'} gatekeeper to fix this pair")
    gadget = blowup_graph(h, hpair, mode, m)
    iu, iv = gadget.pair_images
    return glue(g, gadget.graph, [x, y], [iu, iv])


def _k2p_fix(g: Graph, pair: tuple[int, int], p: int, m: int, edge: bool) -> Graph:
    x, y = pair
    if edge:
        # Independent set joined to both endpoints (a K_{1,1,m} gluing).
        return _add_block(g, m, _mask([x, y]), clique=False)[0]
    # Clique W sees x; cliques W_1..W_{p-1} each see y and all of W.
    g1, w_block = _add_block(g, m, _mask([x]), clique=True)
    for _ in range(p - 1):
        g1, _block = _add_block(g1, m, _mask([y]) | _mask(w_block), clique=True)
    return g1


def _k11p_edge_fix(g: Graph, pair: tuple[int, int], p: int, m: int, depth: int) -> Graph:
    x, y = pair
    common = [w for w in range(g.n) if g.has_edge(x, w) and g.has_edge(y, w)]
    if p == 2:
        if common:
            raise PreconditionError(
                "K_{1,1,2} edge fix needs the endpoints to share no neighbor")
        return _add_block(g, m, _mask([x, y]), clique=True)[0]
    if not _clique_cover_at_most(g, common, p - 2):
        raise PreconditionError(
            f"common neighborhood not coverable by {p - 2} cliques")
    if depth < 2:
        raise ValueError("tree depth must be at least 2")
    # Tree with root of degree 1 and inner degree p-1, blown into m-cliques;
    # the root's blow-up is the glued pair itself.
    g1, t_block = _add_block(g, m, _mask([x, y]), clique=True)
    frontier = [t_block]
    for _level in range(2, depth + 1):
        nxt = []
        for parent in frontier:
            for _child in range(p - 2):
                g1, block = _add_block(g1, m, _mask(parent), clique=True)
                nxt.append(block)
        frontier = nxt
    return g1


def fix_pair(state: PrefixState, pair: tuple[int, int], strategy: str, h: Graph,
             gatekeepers: Optional[GatekeeperResult] = None,
             depth: int = 2) -> PrefixState:
    """Apply one fixing operation to a pair of the current prefix graph.

    For the K2P/K11P strategies, h must be the core pattern itself (its p is
    read off by the recognizer).  The pair joins the fixed ledger; checking
    the fix is the verifier's job.
    """
    g = state.graph
    x, y = pair
    if x == y or not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError(f"pair {pair} not in the current graph")
    is_edge = g.has_edge(x, y)

    if strategy == TWIN_DUPLICATE:
        new_graph = _twin_duplicate(g, pair)
    elif strategy == GATEKEEPER_GLUE:
        new_graph = _gatekeeper_fix(g, pair, h, state.m, gatekeepers)
    elif strategy in (K2P_EDGE, K2P_NONEDGE):
        if (strategy == K2P_EDGE) != is_edge:
            raise PreconditionError(f"{strategy} applied to a pair of the wrong status")
        match = match_k2p_k11p(h)
        if match is None or match[0] != "k2p":
            raise PreconditionError("K2P strategies need h to be a K_{2,p} pattern")
        new_graph = _k2p_fix(g, pair, match[1], state.m, edge=is_edge)
    elif strategy in (K11P_EDGE, K11P_NONEDGE):
        if (strategy == K11P_EDGE) != is_edge:
            raise PreconditionError(f"{strategy} applied to a pair of the wrong status")
        match = match_k2p_k11p(h)
        if match is None or match[0] != "k11p":
            raise PreconditionError("K11P strategies need h to be a K_{1,1,p} pattern")
        if is_edge:
            new_graph = _k11p_edge_fix(g, pair, match[1], state.m, depth)
        else:
            new_graph = _add_block(g, state.m, _mask([x, y]), clique=False)[0]
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return _advance(state, new_graph, record=(pair, strategy))


# ---------------------------------------------------------------------------
# Core extension steps (the five operations that lift a fixing operation from
# a core C to graphs reducing onto it).


def _is_clique_minus_edge(core: Graph) -> bool:
    return core.n >= 2 and core.edge_count() == core.n * (core.n - 1) // 2 - 1


def min_degree(g: Graph) -> int:
    if g.n == 0:
        return 0
    return min(g.degree(v) for v in range(g.n))


def core_extension_step(state: PrefixState, rule: int, core: Graph, m: Optional[int] = None,
                        k: Optional[int] = None, l: Optional[int] = None,
                        tuples: Optional[Sequence[tuple[int, ...]]] = None) -> PrefixState:
    """Attach m-clone gadgets for every eligible vertex tuple of the current
    graph, following one of the five core-extension operations.

    `tuples` restricts the attachment sites (all eligible tuples by default);
    passing an empty list makes the step the identity apart from bookkeeping.
    """
    g = state.graph
    if m is None:
        m = state.m
    snapshot = list(range(g.n))

    if rule == 1:
        if k is None:
            raise ValueError("rule 1 needs k")
        if core.n and k >= min_degree(core):
            raise PreconditionError(f"rule 1 needs k < delta(core) = {min_degree(core)}")
        sites = tuples if tuples is not None else list(combinations(snapshot, k))
        new_graph = g
        for site in sites:
            new_graph = _add_block(new_graph, m, _mask(site), clique=False)[0]
    elif rule == 2:
        if l is None:
            raise ValueError("rule 2 needs l")
        comp_core = complement(core)
        if core.n and l >= min_degree(comp_core):
            raise PreconditionError(
                f"rule 2 needs l < delta(complement core) = {min_degree(comp_core)}")
        sites = tuples if tuples is not None else list(combinations(snapshot, l))
        new_graph = g
        for site in sites:
            attach = _mask(snapshot) & ~_mask(site)
            new_graph = _add_block(new_graph, m, attach, clique=True)[0]
    elif rule in (3, 4):
        if min_degree(core) < 2:
            raise PreconditionError("rules 3 and 4 need delta(core) >= 2")
        want_adjacent = rule == 4
        for v in range(core.n):
            if core.degree(v) == 2:
                a, b = core.neighbors(v)
                if core.has_edge(a, b) != want_adjacent:
                    continue
                raise PreconditionError(
                    f"rule {rule} forbidden: core has a degree-2 vertex with "
                    f"{'adjacent' if want_adjacent else 'non-adjacent'} neighbors")
        if tuples is not None:
            sites = tuples
        else:
            sites = [(u, v) for u, v in combinations(snapshot, 2)
                     if g.has_edge(u, v) == want_adjacent]
        new_graph = g
        for site in sites:
            new_graph = _add_block(new_graph, m, _mask(site), clique=False)[0]
    elif rule == 5:
        if not is_3conn_nonclique(core):
            raise PreconditionError("rule 5 needs a 3-connected non-clique core")
        minus_edge = _is_clique_minus_edge(core)
        sites = tuples if tuples is not None else list(combinations(snapshot, 2))
        new_graph = g
        for site in sites:
            a, b = site
            if minus_edge and not g.has_edge(a, b):
                # Two independent sets, fully joined to each other and to a, b.
                new_graph, first = _add_block(new_graph, m, _mask(site), clique=False)
                new_graph = _add_block(new_graph, m, _mask(site) | _mask(first),
                                       clique=False)[0]
            else:
                new_graph = _add_block(new_graph, m, _mask(site), clique=True)[0]
    else:
        raise ValueError(f"rule must be 1..5, got {rule}")

    # Extension steps fix nothing: they enlarge the graph and enqueue new pairs.
    return _advance(state, new_graph)


# ---------------------------------------------------------------------------
# Scheduled fixing.


def _variant_for(family: str, is_edge: bool) -> str:
    if family == "twin":
        return TWIN_DUPLICATE
    if family == "gatekeeper":
        return GATEKEEPER_GLUE
    if family == "k2p":
        return K2P_EDGE if is_edge else K2P_NONEDGE
    if family == "k11p":
        return K11P_EDGE if is_edge else K11P_NONEDGE
    raise ValueError(f"unknown strategy family {family!r}; pick one of {FAMILIES}")


def schedule_fixes(seed: Graph, h: Graph, steps: int, m: int, family: str,
                   depth: int = 2) -> list[PrefixState]:
    """Run the scheduled fixing loop: at each step fix the highest-priority
    unfixed pair.  Returns seed state plus one state per completed step;
    stops early (without error) if the vertex cap is reached."""
    if seed.n < 2:
        raise ValueError("seed needs at least two vertices to have a pair")
    if find_induced(seed, h) is not None:
        raise PreconditionError("seed must avoid the pattern being fixed against")
    gatekeepers = has_fixing_operation(h) if family == "gatekeeper" else None
    states = [initial_state(seed, m)]
    for _ in range(steps):
        state = states[-1]
        entry = state.next_unfixed()
        if entry is None:
            break
        is_edge = state.graph.has_edge(*entry.pair)
        strategy = _variant_for(family, is_edge)
        try:
            states.append(fix_pair(state, entry.pair, strategy, h,
                                   gatekeepers=gatekeepers, depth=depth))
        except CapacityError:
            break
    return states


def dequeue_order(state: PrefixState, count: int) -> list[tuple[int, int]]:
    """First `count` (i, j) labels in priority order among queued entries,
    ignoring fixed status (the raw enumeration prefix)."""
    entries = sorted(state.queue, key=lambda e: e.position)
    return [(e.i, e.j) for e in entries[:count]]
