"""Bitmask-backed simple graphs plus the Turán machinery for 5-vertex paths.

Vertices are integers 0..n-1. Row ``adj[v]`` is an int whose bit ``w`` is set
iff vw is an edge, so neighbourhood intersections and component sweeps are
single integer operations. Capacity is capped at 64 vertices so a row always
fits one machine word.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 64


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {n}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n: int = n
        self.adj: tuple[int, ...] = tuple(rows)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Graph):
            return self.n == other.n and self.adj == other.adj
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with i < j, ascending lexicographic."""
        out = []
        for i in range(self.n):
            row = self.adj[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    out.append((i, j))
                row >>= 1
                j += 1
        return out


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices, centre 0."""
    return Graph(n, ((0, i) for i in range(1, n)))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    h = Graph.__new__(Graph)
    h.n = g.n
    h.adj = tuple((full ^ g.adj[v]) & ~(1 << v) for v in range(g.n))
    return h


def union(g: Graph, h: Graph) -> Graph:
    """Edge-set union of two graphs on the same vertex set."""
    if g.n != h.n:
        raise ValueError(f"union needs equal orders, got {g.n} and {h.n}")
    out = Graph.__new__(Graph)
    out.n = g.n
    out.adj = tuple(a | b for a, b in zip(g.adj, h.adj))
    return out


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"disjoint union exceeds {MAX_VERTICES} vertices")
    out = Graph.__new__(Graph)
    out.n = n
    out.adj = tuple(list(g.adj) + [row << g.n for row in h.adj])
    return out


def connected_components(g: Graph) -> list[int]:
    """Vertex bitmasks of the components, ordered by smallest member."""
    comps = []
    rem = (1 << g.n) - 1
    adj = g.adj
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= adj[v]
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def find_path(g: Graph, t: int) -> tuple[int, ...] | None:
    """An ordered t-vertex path in g as a subgraph, or None.

    Exact depth-first search over simple paths; the visited mask prunes
    revisits and the search stops at the first hit.
    """
    if t < 1:
        raise ValueError("path order must be >= 1")
    if t > g.n:
        return None
    if t == 1:
        return (0,)
    adj = g.adj
    path: list[int] = []

    def extend(v: int, visited: int) -> bool:
        path.append(v)
        if len(path) == t:
            return True
        nb = adj[v] & ~visited
        while nb:
            b = nb & -nb
            nb ^= b
            if extend(b.bit_length() - 1, visited | b):
                return True
        path.pop()
        return False

    for s in range(g.n):
        if extend(s, 1 << s):
            return tuple(path)
    return None


def contains_path(g: Graph, t: int) -> bool:
    return find_path(g, t) is not None


def contains_clique(g: Graph, k: int) -> bool:
    if k <= 0:
        return True
    if k == 1:
        return g.n >= 1
    adj = g.adj

    def grow(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand:
            if cand.bit_count() < need:
                return False
            b = cand & -cand
            cand ^= b
            if grow(adj[b.bit_length() - 1] & cand, need - 1):
                return True
        return False

    return grow((1 << g.n) - 1, k)


def diameter(g: Graph) -> int:
    """Longest shortest-path distance; -1 if disconnected or empty."""
    if g.n == 0 or not is_connected(g):
        return -1
    best = 0
    adj = g.adj
    for s in range(g.n):
        seen = 1 << s
        frontier = seen
        d = 0
        while True:
            grow = 0
            for v in _bits(frontier):
                grow |= adj[v]
            frontier = grow & ~seen
            if not frontier:
                break
            seen |= frontier
            d += 1
        best = max(best, d)
    return best


# ---------------------------------------------------------------------------
# Turán numbers for the 5-vertex path
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TuranForm:
    """Order split n = 4a + b with 0 <= b <= 3 behind ex_p5/extremal_p5."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 0 or not 0 <= self.b <= 3:
            raise ValueError(f"invalid Turán form ({self.a}, {self.b})")

    @classmethod
    def of_order(cls, n: int) -> "TuranForm":
        if n < 0:
            raise ValueError("order must be non-negative")
        return cls(n // 4, n % 4)

    @property
    def order(self) -> int:
        return 4 * self.a + self.b

    @property
    def edges(self) -> int:
        return 6 * self.a + self.b * (self.b - 1) // 2


def ex_p5(n: int) -> int:
    """Maximum edges of an n-vertex graph with no 5-vertex path."""
    return TuranForm.of_order(n).edges


def extremal_p5(n: int) -> Graph:
    """The unique edge-maximal graph without a 5-vertex path: aK4 + K_b."""
    form = TuranForm.of_order(n)
    edges = []
    for i in range(form.a):
        edges.extend(combinations(range(4 * i, 4 * i + 4), 2))
    edges.extend(combinations(range(4 * form.a, n), 2))
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Text rendering (used in reports)
# ---------------------------------------------------------------------------

def to_text(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines.extend(f"{i} {j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln]
    if not lines or not lines[0].startswith("n="):
        raise ValueError("graph text must start with 'n=<n>'")
    n = int(lines[0][2:])
    edges = []
    for ln in lines[1:]:
        i, j = map(int, ln.split())
        edges.append((i, j))
    return Graph(n, edges)
