"""Immutable simple graphs on vertices 1..n, family constructors, and the
edge-list text format used by the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EdgeListParseError


def mask_of(vertices: Iterable[int]) -> int:
    """Pack a collection of 1-indexed vertices into a bitmask (bit v-1 set)."""
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> list[int]:
    """Unpack a bitmask into an ascending list of 1-indexed vertices."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


class Graph:
    """Simple undirected graph on vertices 1..n.

    No loops, no parallel edges; adjacency is symmetric by construction.
    Instances are immutable values, safe to share; operations that look like
    mutation return new graphs.  Vertices are 1-indexed throughout the
    package so worked examples keep their positional labels.
    """

    __slots__ = ("n", "_neighbors", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        adj: list[set[int]] = [set() for _ in range(n + 1)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            adj[u].add(v)
            adj[v].add(u)
        self._neighbors = tuple(frozenset(s) for s in adj)
        self._masks = tuple(mask_of(s) for s in adj)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u in self.vertices:
            for v in self._neighbors[u]:
                if u < v:
                    out.append((u, v))
        return tuple(sorted(out))

    @property
    def edge_count(self) -> int:
        return sum(len(self._neighbors[v]) for v in self.vertices) // 2

    def check_vertex(self, v: int) -> None:
        if not (1 <= v <= self.n):
            raise ValueError(f"vertex {v} out of range 1..{self.n}")

    def neighbors(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self._neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self._neighbors[u]

    def neighbor_mask(self, v: int) -> int:
        self.check_vertex(v)
        return self._masks[v]

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._neighbors == other._neighbors

    def __hash__(self) -> int:
        return hash((self.n, self._neighbors))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {list(self.edges())!r})"


@dataclass(frozen=True)
class PartitionShape:
    """A weakly decreasing sequence of positive integers.

    Generates staircase-shaped bipartite graphs via :func:`ferrers_graph`;
    ``parts[i]`` is the number of boxes in row i+1 of the diagram.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(parts)
        if not parts:
            raise ValueError("shape must have at least one part")
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    @property
    def cols(self) -> int:
        return self.parts[0]

    @property
    def total(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "PartitionShape":
        """Transpose of the diagram: part j of the result counts rows with at
        least j boxes."""
        return PartitionShape(
            tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.cols + 1))
        )

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def conjugate(shape: PartitionShape) -> PartitionShape:
    return shape.conjugate()


def complete(n: int) -> Graph:
    """The graph on n >= 1 vertices in which every pair is an edge."""
    if n < 1:
        raise ValueError(f"need at least one vertex, got {n}")
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def complete_multipartite(sizes: Iterable[int]) -> Graph:
    """Vertices grouped contiguously by part, in input order; two vertices
    form an edge iff they lie in different parts."""
    sizes = list(sizes)
    if not sizes:
        raise ValueError("need at least one part")
    if any(s < 1 for s in sizes):
        raise ValueError(f"part sizes must be positive, got {sizes}")
    n = sum(sizes)
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if part[u - 1] != part[v - 1]
    ]
    return Graph(n, edges)


def ferrers_graph(shape: PartitionShape | Iterable[int]) -> Graph:
    """Bipartite graph of a diagram: row i and column j are adjacent iff the
    diagram has a box at (i, j), i.e. j <= parts[i-1].

    Rows are labeled 1..m and columns m+1..m+cols, so the vertex order is
    rows first, then columns, each by diagram index.
    """
    if not isinstance(shape, PartitionShape):
        shape = PartitionShape(shape)
    m = shape.rows
    edges = [
        (i, m + j) for i, length in enumerate(shape.parts, 1) for j in range(1, length + 1)
    ]
    return Graph(m + shape.cols, edges)


def induced_subgraph(g: Graph, w: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Restriction of g to the vertex subset w, relabeled 1..|w|.

    Returns (subgraph, labels) where labels[i-1] is the original vertex that
    became vertex i; labels are ascending.
    """
    keep = sorted(set(w))
    for v in keep:
        g.check_vertex(v)
    index = {v: i for i, v in enumerate(keep, 1)}
    edges = [
        (index[u], index[v]) for u, v in g.edges() if u in index and v in index
    ]
    return Graph(len(keep), edges), tuple(keep)


def is_connected(g: Graph) -> bool:
    """True when every pair of vertices is joined by a path (vacuously for
    n <= 1)."""
    if g.n <= 1:
        return True
    seen = 1  # bit 0 = vertex 1
    frontier = [1]
    while frontier:
        v = frontier.pop()
        fresh = g.neighbor_mask(v) & ~seen
        seen |= fresh
        frontier.extend(vertices_of(fresh))
    return seen == g.full_mask()


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    """True when no edge of g has both endpoints in s."""
    vs = sorted(set(s))
    for v in vs:
        g.check_vertex(v)
    m = mask_of(vs)
    return all(g.neighbor_mask(v) & m == 0 for v in vs)


def parse_edge_list(text: str, *, source: str = "<input>") -> Graph:
    """Parse the package's edge-list format.

    Line 1 is "n m"; each of the following m lines is "u v" with
    1 <= u < v <= n.  '#' starts a comment; blank lines are ignored.
    Duplicate or loop edges, and any deviation from the format, raise
    :class:`EdgeListParseError`.
    """

    def fail(lineno: int, msg: str) -> EdgeListParseError:
        return EdgeListParseError(f"{source}:{lineno}: {msg}")

    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        data = raw.split("#", 1)[0].strip()
        if data:
            rows.append((lineno, data.split()))
    if not rows:
        raise EdgeListParseError(f"{source}: empty input, expected 'n m' header")

    lineno, header = rows[0]
    if len(header) != 2:
        raise fail(lineno, f"header must be 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise fail(lineno, f"header must be two integers, got {' '.join(header)!r}")
    if n < 1 or m < 0:
        raise fail(lineno, f"need n >= 1 and m >= 0, got n={n} m={m}")
    if len(rows) - 1 != m:
        raise EdgeListParseError(
            f"{source}: header promises {m} edges but {len(rows) - 1} edge lines found"
        )

    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, fields in rows[1:]:
        if len(fields) != 2:
            raise fail(lineno, f"edge line must be 'u v', got {' '.join(fields)!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise fail(lineno, f"edge line must be two integers, got {' '.join(fields)!r}")
        if u == v:
            raise fail(lineno, f"loop edge {u} {v}")
        if not (1 <= u < v <= n):
            raise fail(lineno, f"edge {u} {v} must satisfy 1 <= u < v <= {n}")
        if (u, v) in seen:
            raise fail(lineno, f"duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    """Render a graph in the edge-list format accepted by parse_edge_list."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
