"""Regular graphs of prescribed girth and metric systoles of uniform graphs.

The constructor is a seeded randomized search (greedy distance-respecting
pairing with conflict-edge deletion and restarts); every returned graph is
re-verified independently, so a successful return is a certificate.
"""
from __future__ import annotations

import json
import math
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property


class InfeasibleGraphError(ValueError):
    """Requested parameters violate a known feasibility floor."""


class GirthSearchError(RuntimeError):
    """Search budget exhausted without a verified graph; never a silent failure."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in adj)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    def is_regular(self, degree: int) -> bool:
        return all(d == degree for d in self.degrees)

    def to_dict(self) -> dict:
        return {"n": self.vertex_count, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class MetricGraph:
    """Graph with one uniform rational edge length."""

    graph: Graph
    edge_length: Fraction

    def __post_init__(self):
        length = Fraction(self.edge_length)
        if length <= 0:
            raise ValueError("edge length must be positive")
        object.__setattr__(self, "edge_length", length)


def girth(graph: Graph, cutoff: int | None = None) -> int | float:
    """Length of a shortest cycle via BFS from every vertex; inf for forests.

    With ``cutoff`` the search stops early once no cycle of length <= cutoff
    can exist, still returning the exact girth whenever it is <= cutoff.
    """
    adjacency = graph.adjacency
    best = math.inf
    for root in range(graph.vertex_count):
        limit = (min(best, cutoff + 1) if cutoff is not None else best) / 2
        dist = {root: 0}
        queue = deque([(root, -1)])
        while queue:
            node, parent = queue.popleft()
            if dist[node] >= limit:
                break
            for nb in adjacency[node]:
                if nb == parent:  # the unique tree edge back; no parallel edges exist
                    continue
                if nb in dist:
                    # closed walk through root; contains a cycle no longer than it
                    best = min(best, dist[node] + dist[nb] + 1)
                else:
                    dist[nb] = dist[node] + 1
                    queue.append((nb, node))
    return best


def moore_bound(degree: int, girth_target: int) -> int:
    """Classical minimum vertex count of a degree-c graph with girth g."""
    if degree < 3 or girth_target < 3:
        raise ValueError("Moore bound defined for degree >= 3 and girth >= 3")
    if girth_target % 2:
        radius = (girth_target - 1) // 2
        return 1 + degree * sum((degree - 1) ** i for i in range(radius))
    radius = girth_target // 2
    return 2 * sum((degree - 1) ** i for i in range(radius))


def vertex_window(degree: int, path_scale: int) -> tuple[int, int]:
    """Admissible even-vertex-count window for degree-c sleeve assemblies.

    Exact integers: lower = ceil(4 ((c-1)^l - (c-1)) / (c-2)), upper = (c-1)^l.
    The window is nonempty for every c >= 7 (which is 2m+1 for dimension
    m >= 3, the regime where the assembly applies), so smaller degrees are
    refused.
    """
    if degree < 7:
        raise ValueError(
            "vertex window requires degree >= 7 (degree 2m+1 with dimension m >= 3)"
        )
    if path_scale < 1:
        raise ValueError("path scale l must be a positive integer")
    spread = (degree - 1) ** path_scale - (degree - 1)
    lower = -(-4 * spread // (degree - 2))
    upper = (degree - 1) ** path_scale
    assert lower <= upper
    return lower, upper


def metric_systole(metric_graph: MetricGraph) -> Fraction | float:
    """Shortest cycle length in the uniform metric: girth * edge length."""
    g = girth(metric_graph.graph)
    if g is math.inf:
        return math.inf
    return g * metric_graph.edge_length


def construct_regular_girth(
    degree: int,
    girth_target: int,
    vertices: int,
    seed: int = 0,
    *,
    max_restarts: int = 400,
    step_budget: int = 200_000,
) -> Graph:
    """Seeded search for a degree-regular graph with girth >= girth_target.

    Greedy pairing adds edges only between vertices at distance >= g-1,
    deleting blocking edges when stuck (Erdos-Sachs flavoured).  The result
    is re-verified (regularity and BFS girth) before being returned;
    infeasible requests are refused and an exhausted budget raises instead
    of returning an invalid graph.
    """
    if degree < 3 or girth_target < 3:
        raise InfeasibleGraphError("need degree >= 3 and girth >= 3")
    if vertices * degree % 2:
        raise InfeasibleGraphError(f"{degree}-regular graph needs an even degree sum")
    if vertices <= degree:
        raise InfeasibleGraphError(f"{degree}-regular graph needs more than {degree} vertices")
    floor = moore_bound(degree, girth_target)
    if vertices < floor:
        raise InfeasibleGraphError(
            f"{vertices} vertices is below the Moore bound {floor} for "
            f"degree {degree}, girth {girth_target}"
        )
    rng = random.Random(seed)
    for _ in range(max_restarts):
        edges = _greedy_attempt(degree, girth_target, vertices, rng, step_budget)
        if edges is None:
            continue
        graph = Graph(vertices, tuple(edges))
        if graph.is_regular(degree) and girth(graph, cutoff=girth_target) >= girth_target:
            return graph
    raise GirthSearchError(
        f"no {degree}-regular graph of girth >= {girth_target} on {vertices} "
        f"vertices found within the search budget (seed {seed})"
    )


def _greedy_attempt(degree, girth_target, n, rng, step_budget):
    """One randomized build: distance-respecting pairing with repairs.

    An edge (u, v) is only added when dist(u, v) >= g-1, so every created
    cycle has length >= g by construction.  A blocked deficient vertex is
    repaired either by a double swap (remove an edge (x, y), add (u, x) and
    (v, y) for another deficient v, re-checking distances after each step)
    or by rotating a stub from a saturated far vertex; deletions never
    shorten cycles, so the girth invariant holds throughout.
    """
    adj: list[set[int]] = [set() for _ in range(n)]
    state = {"edges": 0}
    target_edges = n * degree // 2
    reach = girth_target - 2  # partners must lie outside this ball

    def connect(a, b):
        adj[a].add(b)
        adj[b].add(a)
        state["edges"] += 1

    def disconnect(a, b):
        adj[a].discard(b)
        adj[b].discard(a)
        state["edges"] -= 1

    for _ in range(step_budget):
        if state["edges"] == target_edges:
            break
        deficient = [v for v in range(n) if len(adj[v]) < degree]
        u = deficient[rng.randrange(len(deficient))]
        near = _ball(adj, u, reach)
        partners = [v for v in deficient if v != u and v not in near]
        if partners:
            connect(u, partners[rng.randrange(len(partners))])
            continue
        if _double_swap(adj, connect, disconnect, u, deficient, reach, n, rng):
            continue
        # reshuffle: rotate a stub from a saturated far vertex onto u
        far = [w for w in range(n) if w != u and w not in near]
        if not far:
            return None
        w = far[rng.randrange(len(far))]
        others = [z for z in adj[w] if z != u]
        if not others:
            return None
        z = others[rng.randrange(len(others))]
        disconnect(w, z)
        connect(u, w)
    if state["edges"] != target_edges:
        return None
    return [(a, b) for a in range(n) for b in adj[a] if a < b]


def _double_swap(adj, connect, disconnect, u, deficient, reach, n, rng, trials=60):
    """Erdos-Sachs endgame repair: resolve two deficiencies through one edge.

    Remove a random edge (x, y) with x far from u, add (u, x), then add
    (v, y) for a deficient v whenever y is still far from v in the modified
    graph.  Reverts on failure.
    """
    mates = [v for v in deficient if v != u]
    edges = [(a, b) for a in range(n) for b in adj[a] if a < b]
    if not edges:
        return False
    for _ in range(trials):
        x, y = edges[rng.randrange(len(edges))]
        if rng.random() < 0.5:
            x, y = y, x
        if x == u or x in _ball(adj, u, reach):
            continue
        disconnect(x, y)
        connect(u, x)
        candidates = mates if mates else [u]
        v = candidates[rng.randrange(len(candidates))]
        if v != y and v != x and y not in _ball(adj, v, reach):
            connect(v, y)
            return True
        disconnect(u, x)
        connect(x, y)
    return False


def _ball(adj, root, radius):
    """Vertices within the given BFS distance of root."""
    seen = {root}
    frontier = [root]
    for _ in range(radius):
        nxt = []
        for node in frontier:
            for nb in adj[node]:
                if nb not in seen:
                    seen.add(nb)
                    nxt.append(nb)
        frontier = nxt
    return seen


def load_graph(source) -> Graph:
    """Read the JSON graph format {"n": k, "edges": [[u, v], ...]}."""
    if isinstance(source, (str, bytes)):
        data = json.loads(source)
    elif isinstance(source, dict):
        data = source
    else:
        data = json.load(source)
    if "n" not in data or "edges" not in data:
        raise ValueError("graph JSON must contain 'n' and 'edges'")
    return Graph(data["n"], tuple((u, v) for u, v in data["edges"]))


def dump_graph(graph: Graph) -> str:
    return json.dumps(graph.to_dict(), separators=(", ", ": "))
