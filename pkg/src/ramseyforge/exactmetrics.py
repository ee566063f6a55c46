"""Exact combinatorial invariants: girth, diameter, triangles, toughness,
independence number, cuts, greedy coloring.

Everything here is exhaustive or branch-and-bound, no floating point.  The
expensive oracles carry hard size caps; callers that want bounds for larger
graphs should use the spectral module instead.

Graphs built by the family constructors are Cayley graphs, hence vertex
transitive: girth and eccentricity are measured from a single root there,
and the total triangle count is n/3 times the count through one vertex.
``eccentricity_uniformity_check`` spot-checks the transitivity assumption.
"""
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

import numpy as np

from . import limits
from .errors import BadParameter, TooLarge

_BITSET_TRIANGLE_CAP = 40_000


@dataclass(frozen=True)
class MetricsReport:
    n: int
    degree: Optional[int]
    girth: float
    diameter: float
    triangles: int
    components: int
    is_vertex_transitive_assumed: bool


@dataclass(frozen=True)
class ToughnessResult:
    value: object  # Fraction, or math.inf for complete graphs
    witness: Optional[tuple]
    components_after: Optional[int]


@dataclass(frozen=True)
class IndependenceResult:
    size: int
    witness: tuple
    exact: bool
    nodes: int


def _is_transitive_family(graph) -> bool:
    return graph.family is not None


def bfs_distances(graph, root: int) -> np.ndarray:
    """Distance array (-1 for unreachable), vectorized for regular graphs."""
    dist = np.full(graph.n, -1, dtype=np.int64)
    dist[root] = 0
    if graph.degree is not None and graph.degree > 0:
        nbr = graph.indices.reshape(graph.n, graph.degree)
        frontier = np.array([root], dtype=np.int64)
        level = 0
        while frontier.size:
            level += 1
            cand = nbr[frontier].ravel()
            cand = cand[dist[cand] < 0]
            if cand.size == 0:
                break
            frontier = np.unique(cand)
            dist[frontier] = level
        return dist
    queue = deque([root])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in graph.neighbors(u):
            if dist[v] < 0:
                dist[v] = du + 1
                queue.append(int(v))
    return dist


def eccentricity(graph, root: int) -> float:
    dist = bfs_distances(graph, root)
    if (dist < 0).any():
        return math.inf
    return int(dist.max())


def _root_cycle_bound(graph, root: int, best: float) -> float:
    """Min cycle-length estimate from one BFS; exact for roots on a shortest cycle."""
    dist = np.full(graph.n, -1, dtype=np.int64)
    parent = np.full(graph.n, -1, dtype=np.int64)
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        du = int(dist[u])
        if 2 * du >= best:
            break
        for v in graph.neighbors(u):
            v = int(v)
            if dist[v] < 0:
                dist[v] = du + 1
                parent[v] = u
                queue.append(v)
            elif v != parent[u]:
                cycle = du + int(dist[v]) + 1
                if cycle < best:
                    best = cycle
    return best


def girth(graph) -> float:
    """Length of a shortest cycle, math.inf for forests.

    Single-root BFS when the graph is a known vertex-transitive family
    (every vertex then lies on some shortest cycle), all roots otherwise.
    """
    best = math.inf
    if _is_transitive_family(graph):
        return _root_cycle_bound(graph, 0, best)
    for root in range(graph.n):
        best = _root_cycle_bound(graph, root, best)
        if best == 3:
            break
    return best


def diameter(graph) -> float:
    """Diameter, math.inf when disconnected.

    Vertex-transitive graphs have all eccentricities equal, so one BFS
    suffices for the known families.
    """
    if _is_transitive_family(graph):
        return eccentricity(graph, 0)
    worst = 0
    for root in range(graph.n):
        ecc = eccentricity(graph, root)
        if ecc == math.inf:
            return math.inf
        worst = max(worst, ecc)
    return worst


def eccentricity_uniformity_check(graph, samples: int = 8) -> bool:
    """All sampled vertices share one eccentricity (transitivity spot check)."""
    if graph.n == 0:
        return True
    roots = np.unique(np.linspace(0, graph.n - 1, num=min(samples, graph.n)).astype(np.int64))
    eccs = {eccentricity(graph, int(r)) for r in roots}
    return len(eccs) == 1


def _triangles_bitset(graph) -> int:
    n = graph.n
    if n > _BITSET_TRIANGLE_CAP:
        raise TooLarge(f"bitset triangle count capped at {_BITSET_TRIANGLE_CAP} vertices")
    words = (n + 63) // 64
    rows = np.zeros(n * words, dtype=np.uint64)
    counts = np.diff(graph.indptr)
    us = np.repeat(np.arange(n, dtype=np.int64), counts)
    vs = graph.indices
    np.bitwise_or.at(
        rows,
        us * words + (vs >> 6),
        np.left_shift(np.uint64(1), (vs & 63).astype(np.uint64)),
    )
    rows = rows.reshape(n, words)
    eu, ev = graph.edge_arrays()
    total = 0
    step = max(1, 4_000_000 // max(1, words))
    for lo in range(0, len(eu), step):
        chunk_u = eu[lo:lo + step]
        chunk_v = ev[lo:lo + step]
        total += int(np.bitwise_count(rows[chunk_u] & rows[chunk_v]).sum())
    if total % 3:
        raise AssertionError("edge-wise common-neighbor total not divisible by 3")
    return total // 3


def _triangles_transitive(graph) -> int:
    nbrs = graph.neighbors(0)
    through_root = sum(
        1
        for i, u in enumerate(nbrs)
        for v in nbrs[i + 1:]
        if graph.adjacency_oracle(int(u), int(v))
    )
    total = graph.n * through_root
    if total % 3:
        raise AssertionError("transitive triangle total not divisible by 3")
    return total // 3


def triangle_count(graph) -> int:
    """Exact triangle count by packed-bitset neighbor intersections; for
    transitive families too large for bitsets, n/3 times the count through
    one vertex."""
    if graph.n <= _BITSET_TRIANGLE_CAP:
        return _triangles_bitset(graph)
    if _is_transitive_family(graph):
        return _triangles_transitive(graph)
    raise TooLarge(f"triangle count capped at {_BITSET_TRIANGLE_CAP} vertices")


def connected_components(graph):
    """(count, labels, sizes); components numbered by smallest vertex."""
    labels = np.full(graph.n, -1, dtype=np.int64)
    sizes = []
    comp = 0
    for start in range(graph.n):
        if labels[start] >= 0:
            continue
        dist = bfs_distances(graph, start)
        members = dist >= 0
        members &= labels < 0
        labels[members] = comp
        sizes.append(int(members.sum()))
        comp += 1
    return comp, labels, sizes


def _neighbor_masks(graph) -> list:
    masks = [0] * graph.n
    for u in range(graph.n):
        m = 0
        for v in graph.neighbors(u):
            m |= 1 << int(v)
        masks[u] = m
    return masks


def _mask_components(remaining: int, masks: list) -> int:
    comps = 0
    rem = remaining
    while rem:
        comps += 1
        frontier = rem & -rem
        grown = frontier
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= masks[b.bit_length() - 1]
            frontier = nxt & rem & ~grown
            grown |= frontier
        rem &= ~grown
    return comps


def exact_toughness(graph, cap: int = limits.TOUGHNESS_CAP) -> ToughnessResult:
    """min |S| / c(G - S) over vertex sets S with c(G - S) >= 2.

    Exhaustive over subsets by increasing size, lexicographic within a size,
    keeping the first strict improvement.  Complete graphs have no
    disconnecting set; the result is the math.inf sentinel, not an error.
    """
    n = graph.n
    if n > cap:
        raise TooLarge(f"exact toughness capped at {cap} vertices")
    masks = _neighbor_masks(graph)
    full = (1 << n) - 1
    if n:
        comps0 = _mask_components(full, masks)
        if comps0 > 1:
            return ToughnessResult(Fraction(0), (), comps0)
    best = None
    best_witness = None
    best_comps = None
    for size in range(1, n - 1):
        for subset in combinations(range(n), size):
            removed = 0
            for v in subset:
                removed |= 1 << v
            comps = _mask_components(full & ~removed, masks)
            if comps < 2:
                continue
            value = Fraction(size, comps)
            if best is None or value < best:
                best = value
                best_witness = subset
                best_comps = comps
    if best is None:
        return ToughnessResult(math.inf, None, None)
    return ToughnessResult(best, best_witness, best_comps)


def exact_independence(
    graph,
    cap: int = limits.INDEPENDENCE_CAP,
    node_budget: int = limits.NODE_BUDGET,
) -> IndependenceResult:
    """Maximum independent set by branch and bound over vertex bitmasks.

    Branches on the highest-degree vertex of the open set (lowest index on
    ties), include branch first, pruned by a greedy clique-cover bound.  If
    the node budget runs out the best set found so far comes back flagged
    ``exact=False`` rather than raising.
    """
    n = graph.n
    if n > cap:
        raise TooLarge(f"exact independence capped at {cap} vertices")
    masks = _neighbor_masks(graph)
    state = {"best": 0, "best_set": 0, "nodes": 0, "exceeded": False}

    def cover_bound(open_set: int) -> int:
        cliques = 0
        rem = open_set
        while rem:
            v = (rem & -rem).bit_length() - 1
            rem &= ~(1 << v)
            cand = rem & masks[v]
            while cand:
                u = (cand & -cand).bit_length() - 1
                rem &= ~(1 << u)
                cand &= masks[u]
            cliques += 1
        return cliques

    def branch(open_set: int, size: int, chosen: int):
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            state["exceeded"] = True
            return
        # every prefix of the include chain is independent, so record it even
        # when the budget cuts the search off before a leaf
        if size > state["best"]:
            state["best"] = size
            state["best_set"] = chosen
        if not open_set:
            return
        if size + cover_bound(open_set) <= state["best"]:
            return
        pick = -1
        pick_deg = -1
        scan = open_set
        while scan:
            b = scan & -scan
            scan ^= b
            v = b.bit_length() - 1
            deg = (open_set & masks[v]).bit_count()
            if deg > pick_deg:
                pick_deg = deg
                pick = v
        bit = 1 << pick
        branch(open_set & ~masks[pick] & ~bit, size + 1, chosen | bit)
        if state["exceeded"]:
            return
        branch(open_set & ~bit, size, chosen)

    branch((1 << n) - 1, 0, 0)
    chosen = state["best_set"]
    witness = tuple(v for v in range(n) if (chosen >> v) & 1)
    for v in witness:
        if masks[v] & chosen:
            raise AssertionError("branch and bound returned a non-independent set")
    return IndependenceResult(state["best"], witness, not state["exceeded"], state["nodes"])


def exact_max_cut_and_bisection(graph, cap: int = limits.CUT_CAP):
    """(max cut size, min balanced-bisection size) by enumerating all
    2^(n-1) two-colorings with vertex n-1 pinned to side 0."""
    n = graph.n
    if n > cap:
        raise TooLarge(f"exact cut enumeration capped at {cap} vertices")
    if n < 2:
        raise BadParameter("cuts need at least 2 vertices")
    assigns = np.arange(1 << (n - 1), dtype=np.int64)
    cut = np.zeros(len(assigns), dtype=np.int32)
    us, vs = graph.edge_arrays()
    for u, v in zip(us.tolist(), vs.tolist()):
        side_u = (assigns >> u) & 1 if u < n - 1 else np.zeros(len(assigns), dtype=np.int64)
        side_v = (assigns >> v) & 1 if v < n - 1 else np.zeros(len(assigns), dtype=np.int64)
        cut += (side_u ^ side_v).astype(np.int32)
    max_cut = int(cut.max())
    side1 = np.bitwise_count(assigns.astype(np.uint64))
    balanced = (side1 == n // 2) | (side1 == n - n // 2)
    bisection = int(cut[balanced].min())
    return max_cut, bisection


def greedy_coloring(graph, order: str = "degree-descending"):
    """(number of colors, color array). order: 'degree-descending' sorts by
    descending degree with index ties, 'index' takes vertices as numbered."""
    if order == "degree-descending":
        verts = sorted(range(graph.n), key=lambda v: (-graph.degree_of(v), v))
    elif order == "index":
        verts = range(graph.n)
    else:
        raise BadParameter(f"unknown order {order!r}")
    colors = [-1] * graph.n
    for v in verts:
        used = {colors[int(u)] for u in graph.neighbors(v)}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return max(colors) + 1 if colors else 0, colors


def metrics_report(graph) -> MetricsReport:
    comp_count, _, _ = connected_components(graph)
    return MetricsReport(
        n=graph.n,
        degree=graph.degree,
        girth=girth(graph),
        diameter=diameter(graph),
        triangles=triangle_count(graph),
        components=comp_count,
        is_vertex_transitive_assumed=_is_transitive_family(graph),
    )
