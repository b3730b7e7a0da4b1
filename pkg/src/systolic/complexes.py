"""Finite simplicial complexes with exact integer boundary operators.

A complex is stored as its list of maximal simplices (facets); faces are
enumerated on demand.  Everything is pure and immutable: operations return
new values and never mutate their inputs.  All arithmetic is exact.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations


class MalformedSimplexError(ValueError):
    """Raised when a facet repeats a vertex."""


class NotPseudomanifoldError(ValueError):
    """Raised when an operation requires a pseudomanifold and the input is not one."""


class NonOrientableError(ValueError):
    """Raised when an operation requires an orientable input."""


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facets.

    ``facets`` are strictly increasing vertex tuples, lexicographically
    sorted, mutually non-contained.  ``vertex_count`` bounds the vertex id
    space; it may exceed the number of vertices actually used.
    """

    vertex_count: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        if len(set(self.facets)) != len(self.facets):
            raise ValueError("duplicate facets")
        for f in self.facets:
            if any(f[i] >= f[i + 1] for i in range(len(f) - 1)):
                raise ValueError(f"facet {f} is not strictly sorted")
            if f and (f[0] < 0 or f[-1] >= self.vertex_count):
                raise ValueError(f"facet {f} has vertices outside 0..{self.vertex_count - 1}")

    @property
    def dim(self) -> int | None:
        """Max facet dimension, or None for the empty complex."""
        if not self.facets:
            return None
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @cached_property
    def faces_by_dim(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """All faces of the closure, grouped by dimension, each group lex-sorted."""
        if not self.facets:
            return ()
        groups: list[set[tuple[int, ...]]] = [set() for _ in range(self.dim + 1)]
        for facet in self.facets:
            for k in range(1, len(facet) + 1):
                groups[k - 1].update(combinations(facet, k))
        return tuple(tuple(sorted(g)) for g in groups)

    def k_faces(self, k: int) -> tuple[tuple[int, ...], ...]:
        if self.dim is None or k < 0 or k > self.dim:
            return ()
        return self.faces_by_dim[k]

    def to_dict(self) -> dict:
        return {"vertices": self.vertex_count, "facets": [list(f) for f in self.facets]}


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse integer matrix of the k-th simplicial boundary operator.

    Rows are the (k-1)-faces and columns the k-faces, both in lexicographic
    order.  The column of a simplex carries sign (-1)^i on the face obtained
    by deleting its i-th vertex, so every column has exactly k+1 nonzeros.
    """

    k: int
    rows: tuple[tuple[int, ...], ...]
    cols: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[int, int, int], ...]  # (row, col, sign), column-major

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def sparse(self) -> dict[tuple[int, int], int]:
        return {(i, j): v for i, j, v in self.entries}

    def dense(self) -> list[list[int]]:
        mat = [[0] * len(self.cols) for _ in self.rows]
        for i, j, v in self.entries:
            mat[i][j] = v
        return mat


def from_facets(facets, vertex_count: int | None = None) -> SimplicialComplex:
    """Build a canonical complex from an iterable of vertex tuples.

    Vertices within a facet are sorted, duplicates and non-maximal input
    simplices are dropped.  A facet with a repeated vertex is rejected.
    """
    cleaned: list[tuple[int, ...]] = []
    for raw in facets:
        tup = tuple(raw)
        if len(set(tup)) != len(tup):
            raise MalformedSimplexError(f"repeated vertex in simplex {tup}")
        cleaned.append(tuple(sorted(tup)))
    cleaned = sorted(set(cleaned), key=lambda f: (-len(f), f))
    maximal: list[tuple[int, ...]] = []
    seen: set[frozenset[int]] = set()
    for f in cleaned:  # longest first, so containment checks see all candidates
        fs = frozenset(f)
        if any(fs <= other for other in seen):
            continue
        seen.add(fs)
        maximal.append(f)
    maximal.sort()
    used_max = max((f[-1] for f in maximal if f), default=-1)
    if vertex_count is None:
        vertex_count = used_max + 1
    elif vertex_count <= used_max:
        raise ValueError("vertex_count smaller than largest vertex id used")
    return SimplicialComplex(vertex_count, tuple(maximal))


def face_counts(complex_: SimplicialComplex) -> list[int]:
    """Number of k-faces of the closure for k = 0..dim."""
    return [len(g) for g in complex_.faces_by_dim]


def boundary_matrix(complex_: SimplicialComplex, k: int) -> BoundaryMatrix:
    """The k-th boundary operator, for 1 <= k <= dim."""
    if complex_.dim is None or k < 1 or k > complex_.dim:
        raise ValueError(f"boundary index k={k} out of range for dim {complex_.dim}")
    rows = complex_.k_faces(k - 1)
    cols = complex_.k_faces(k)
    row_index = {s: i for i, s in enumerate(rows)}
    entries: list[tuple[int, int, int]] = []
    for j, simplex in enumerate(cols):
        for i, vertex in enumerate(simplex):
            face = simplex[:i] + simplex[i + 1:]
            entries.append((row_index[face], j, -1 if i % 2 else 1))
    return BoundaryMatrix(k, rows, cols, tuple(entries))


@dataclass(frozen=True)
class PseudomanifoldReport:
    """Verdict plus diagnostics for the pseudomanifold predicate."""

    is_pseudomanifold: bool
    pure: bool
    bad_ridges: tuple[tuple[tuple[int, ...], int], ...]  # (ridge, facet count != 2)
    strongly_connected: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.is_pseudomanifold


def _ridge_incidence(complex_: SimplicialComplex) -> dict[tuple[int, ...], list[int]]:
    """Map each (m-1)-face to the indices of facets containing it."""
    incidence: dict[tuple[int, ...], list[int]] = {}
    for idx, facet in enumerate(complex_.facets):
        for i in range(len(facet)):
            ridge = facet[:i] + facet[i + 1:]
            incidence.setdefault(ridge, []).append(idx)
    return incidence


def is_pseudomanifold(complex_: SimplicialComplex) -> PseudomanifoldReport:
    """Pure + every ridge in exactly two facets + strongly connected."""
    if not complex_.facets:
        return PseudomanifoldReport(False, False, (), False, "empty complex")
    if not complex_.is_pure:
        return PseudomanifoldReport(False, False, (), False, "not dimension-homogeneous")
    incidence = _ridge_incidence(complex_)
    bad = tuple(
        (ridge, len(fs)) for ridge, fs in sorted(incidence.items()) if len(fs) != 2
    )
    connected = _facet_graph_connected(complex_, incidence)
    ok = not bad and connected
    detail = "" if ok else ("boundary or branching ridges" if bad else "facet adjacency graph disconnected")
    return PseudomanifoldReport(ok, True, bad, connected, detail)


def _facet_graph_connected(complex_, incidence) -> bool:
    n = len(complex_.facets)
    if n == 0:
        return False
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for facet_ids in incidence.values():
        for a in facet_ids:
            for b in facet_ids:
                if a != b:
                    adjacency[a].add(b)
    seen = {0}
    stack = [0]
    while stack:
        for nb in adjacency[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == n


@dataclass(frozen=True)
class OrientationResult:
    orientable: bool
    signs: tuple[int, ...] | None  # one sign per facet when orientable
    conflict_cycle: tuple[int, ...] | None  # facet indices witnessing inconsistency

    def __bool__(self) -> bool:
        return self.orientable


def orient(complex_: SimplicialComplex) -> OrientationResult:
    """Assign facet signs with opposite induced signs on each shared ridge.

    Propagates signs across the facet adjacency graph; an odd cycle of
    incompatibilities yields a non-orientable verdict with a certificate.
    """
    report = is_pseudomanifold(complex_)
    if not report:
        raise NotPseudomanifoldError(f"orientation undefined: {report.detail}")
    facets = complex_.facets
    incidence = _ridge_incidence(complex_)
    signs: list[int | None] = [None] * len(facets)
    parent: list[int] = [-1] * len(facets)
    signs[0] = 1
    queue = [0]
    while queue:
        current = queue.pop()
        facet = facets[current]
        for i in range(len(facet)):
            ridge = facet[:i] + facet[i + 1:]
            for other in incidence[ridge]:
                if other == current:
                    continue
                j = facets[other].index(_extra_vertex(facets[other], ridge))
                # opposite induced signs: s_other = -s_current * (-1)^(i+j)
                required = -signs[current] * (1 if (i + j) % 2 == 0 else -1)
                if signs[other] is None:
                    signs[other] = required
                    parent[other] = current
                    queue.append(other)
                elif signs[other] != required:
                    return OrientationResult(False, None, _conflict_path(parent, current, other))
    return OrientationResult(True, tuple(signs), None)


def _extra_vertex(facet: tuple[int, ...], ridge: tuple[int, ...]) -> int:
    return next(v for v in facet if v not in ridge)


def _conflict_path(parent: list[int], a: int, b: int) -> tuple[int, ...]:
    def chain(x):
        out = []
        while x != -1:
            out.append(x)
            x = parent[x]
        return out

    left, right = chain(a), chain(b)
    common = set(left) & set(right)
    trim = lambda path: path[: next(i for i, x in enumerate(path) if x in common) + 1]
    left, right = trim(left), trim(right)
    return tuple(left + right[-2::-1])


def orientation_is_valid(complex_: SimplicialComplex, signs) -> bool:
    """Check the ridge compatibility condition for a full sign assignment."""
    facets = complex_.facets
    if len(signs) != len(facets) or any(s not in (1, -1) for s in signs):
        return False
    incidence = _ridge_incidence(complex_)
    for ridge, facet_ids in incidence.items():
        if len(facet_ids) != 2:
            return False
        (fa, fb) = facet_ids
        ia = facets[fa].index(_extra_vertex(facets[fa], ridge))
        ib = facets[fb].index(_extra_vertex(facets[fb], ridge))
        if signs[fa] * (-1) ** ia + signs[fb] * (-1) ** ib != 0:
            return False
    return True


def is_admissible_dim2(complex_: SimplicialComplex) -> bool:
    """True iff every vertex link of a pure 2-complex is a single cycle.

    For a 2-pseudomanifold this characterises surfaces; pinch points (links
    with several cycle components) fail.
    """
    if complex_.dim != 2 or not complex_.is_pure:
        raise ValueError("admissibility test requires a pure complex of dimension 2")
    link_edges: dict[int, list[tuple[int, int]]] = {}
    for a, b, c in complex_.facets:
        link_edges.setdefault(a, []).append((b, c))
        link_edges.setdefault(b, []).append((a, c))
        link_edges.setdefault(c, []).append((a, b))
    for edges in link_edges.values():
        degree: dict[int, int] = {}
        for u, v in edges:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        if any(d != 2 for d in degree.values()):
            return False
        # single cycle <=> 2-regular link graph is connected
        adjacency: dict[int, list[int]] = {}
        for u, v in edges:
            adjacency.setdefault(u, []).append(v)
            adjacency.setdefault(v, []).append(u)
        start = min(adjacency)
        seen = {start}
        stack = [start]
        while stack:
            for nb in adjacency[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if len(seen) != len(adjacency):
            return False
    return True


def connected_sum(
    x: SimplicialComplex,
    y: SimplicialComplex,
    *,
    allow_nonorientable: bool = False,
) -> SimplicialComplex:
    """Connected sum: drop one facet from each side, glue along the boundary.

    Boundary vertices are matched in sorted order (the distinguished facets
    are the lexicographically first ones); remaining vertices of ``y`` are
    relabelled above ``x``'s id space.  Inputs must be pseudomanifolds of
    equal dimension >= 1, orientable unless ``allow_nonorientable`` is set
    (surface-level sums of non-orientable inputs are still well defined).
    """
    if x.dim is None or y.dim is None or x.dim != y.dim or x.dim < 1:
        raise ValueError(f"dimension mismatch: {x.dim} vs {y.dim}")
    for side, z in (("first", x), ("second", y)):
        report = is_pseudomanifold(z)
        if not report:
            raise NotPseudomanifoldError(f"{side} argument: {report.detail}")
        if not allow_nonorientable and not orient(z).orientable:
            raise NonOrientableError(f"{side} argument is non-orientable")
    removed_x = x.facets[0]
    removed_y = y.facets[0]
    mapping = dict(zip(removed_y, removed_x))
    fresh = x.vertex_count
    for v in range(y.vertex_count):
        if v not in mapping:
            mapping[v] = fresh
            fresh += 1
    facets = [f for f in x.facets if f != removed_x]
    facets += [
        tuple(sorted(mapping[v] for v in f)) for f in y.facets if f != removed_y
    ]
    return from_facets(facets, vertex_count=fresh)


def load_complex(source) -> SimplicialComplex:
    """Read the JSON complex format {"vertices": n, "facets": [[...], ...]}."""
    if isinstance(source, (str, bytes)):
        data = json.loads(source)
    elif isinstance(source, dict):
        data = source
    else:
        data = json.load(source)
    if "facets" not in data:
        raise ValueError("complex JSON must contain a 'facets' list")
    return from_facets(data["facets"], vertex_count=data.get("vertices"))


def dump_complex(complex_: SimplicialComplex) -> str:
    return json.dumps(complex_.to_dict(), separators=(", ", ": "))
