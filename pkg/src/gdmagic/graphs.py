"""Simple-graph kernel: named constructions, an expression parser, metrics,
graph powers, tree enumeration, and twin-pair (balanced) structure.

Vertex numbering conventions are part of the contract, since labelings are
reported against concrete ids:

* ``K(n)``, ``P(n)``: vertices 0..n-1, path edges i ~ i+1;
* ``C(n)``: i ~ i+-1 (mod n);
* ``S(n)``: vertex 0 is the center, leaves 1..n;
* ``Kb(m,n)``: first part 0..m-1, second part m..m+n-1;
* ``Km(m1,...,mt)``: parts consecutive in the given order;
* ``KmM(n)``: complete graph minus the matching {2i, 2i+1};
* ``join(g,h)``: g's vertices first, then h's shifted by |V(g)|.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "GraphParseError",
    "GraphMetrics",
    "TwinPairing",
    "complete",
    "cycle",
    "path",
    "star",
    "complete_bipartite",
    "complete_multipartite",
    "complete_minus_matching",
    "join",
    "graph_power",
    "construct_graph",
    "from_edge_list_text",
    "from_edge_list_file",
    "metrics",
    "find_twin_pairing",
    "validate_twin_pairing",
    "is_balanced_dmg",
    "complete_bipartite_parts",
    "enumerate_trees",
    "find_isomorphism",
    "is_isomorphic",
]


class GraphError(ValueError):
    """Malformed construction arguments or edge lists."""


class GraphParseError(GraphError):
    """Malformed graph expression."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    n: int
    adj: tuple[frozenset[int], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for {n} vertices")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return Graph(n, tuple(frozenset(s) for s in nbrs))

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adj)

    @property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def complement(self) -> "Graph":
        edges = [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                 if v not in self.adj[u]]
        return Graph.from_edges(self.n, edges)


# named constructions ------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"K(n) needs n >= 1, got {n}")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"C(n) needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"P(n) needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """K_{1,n}: center 0, leaves 1..n."""
    if n < 1:
        raise GraphError(f"S(n) needs n >= 1, got {n}")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError(f"Kb(m,n) needs m,n >= 1, got ({m},{n})")
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise GraphError(f"Km needs part sizes >= 1, got {tuple(sizes)}")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    n = starts[-1]
    part = [0] * n
    for p, (a, b) in enumerate(zip(starts, starts[1:])):
        for v in range(a, b):
            part[v] = p
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]]
    return Graph.from_edges(n, edges)


def complete_minus_matching(n: int) -> Graph:
    """K_n minus the perfect matching {2i, 2i+1}; n must be even."""
    if n < 2 or n % 2:
        raise GraphError(f"KmM(n) needs an even n >= 2, got {n}")
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2)
             if not (u // 2 == v // 2)]
    return Graph.from_edges(n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides; g comes first."""
    edges = list(g.edges())
    edges += [(g.n + u, g.n + v) for u, v in h.edges()]
    edges += [(u, g.n + w) for u in range(g.n) for w in range(h.n)]
    return Graph.from_edges(g.n + h.n, edges)


def _bfs_dist(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def graph_power(g: Graph, k: int) -> Graph:
    """Same vertices; u ~ v when 1 <= d(u,v) <= k."""
    if k < 1:
        raise GraphError(f"graph power needs k >= 1, got {k}")
    edges = []
    for u in range(g.n):
        dist = _bfs_dist(g, u)
        for v in range(u + 1, g.n):
            if 1 <= dist[v] <= k:
                edges.append((u, v))
    return Graph.from_edges(g.n, edges)


# metrics --------------------------------------------------------------------

@dataclass(frozen=True)
class GraphMetrics:
    degrees: tuple[int, ...]
    is_regular: bool
    is_connected: bool
    diameter: float  # math.inf when disconnected
    is_tree: bool


def metrics(g: Graph) -> GraphMetrics:
    degrees = g.degrees
    regular = len(set(degrees)) <= 1
    if g.n == 0:
        return GraphMetrics((), True, True, 0, False)
    diameter: float = 0
    connected = True
    for v in range(g.n):
        dist = _bfs_dist(g, v)
        if min(dist) < 0:
            connected = False
            diameter = math.inf
            break
        diameter = max(diameter, max(dist))
    is_tree = connected and g.num_edges == g.n - 1
    return GraphMetrics(degrees, regular, connected, diameter, is_tree)


# twin pairs -------------------------------------------------------------------

@dataclass(frozen=True)
class TwinPairing:
    """Partition of the vertex set into pairs with equal open neighborhoods."""

    pairs: tuple[tuple[int, int], ...]


def find_twin_pairing(g: Graph) -> Optional[TwinPairing]:
    """Pair up vertices with identical open neighborhoods.

    Vertices fall into classes of equal neighborhoods; the pairing exists
    exactly when every class has even size. Pairs are taken in ascending id
    order inside each class.
    """
    classes: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        classes.setdefault(g.adj[v], []).append(v)
    pairs = []
    for members in classes.values():
        if len(members) % 2:
            return None
        for t in range(0, len(members), 2):
            pairs.append((members[t], members[t + 1]))
    pairs.sort()
    return TwinPairing(tuple(pairs))


def validate_twin_pairing(g: Graph, pairing: TwinPairing) -> None:
    """Raise unless the pairing partitions V(g) into genuine twin pairs."""
    seen: set[int] = set()
    for a, b in pairing.pairs:
        if a == b or not (0 <= a < g.n and 0 <= b < g.n):
            raise GraphError(f"bad twin pair ({a},{b})")
        if a in seen or b in seen:
            raise GraphError(f"twin pair ({a},{b}) reuses a vertex")
        if g.adj[a] != g.adj[b]:
            raise GraphError(f"vertices {a} and {b} are not twins")
        seen.update((a, b))
    if len(seen) != g.n:
        raise GraphError("twin pairs do not cover every vertex")


def is_balanced_dmg(g: Graph) -> bool:
    """Regular, even order, and the vertex set splits into twin pairs."""
    if g.n < 2 or g.n % 2:
        return False
    if len(set(g.degrees)) != 1:
        return False
    return find_twin_pairing(g) is not None


def complete_bipartite_parts(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """The two color classes if g is a complete bipartite graph, else None."""
    if g.n < 2:
        return None
    color = [-1] * g.n
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if color[w] < 0:
                color[w] = 1 - color[u]
                queue.append(w)
            elif color[w] == color[u]:
                return None
    if any(c < 0 for c in color):
        return None
    part0 = [v for v in range(g.n) if color[v] == 0]
    part1 = [v for v in range(g.n) if color[v] == 1]
    if not part1 or g.num_edges != len(part0) * len(part1):
        return None
    return part0, part1


# isomorphism (desk scale only) ----------------------------------------------

def find_isomorphism(g: Graph, h: Graph) -> Optional[list[int]]:
    """Backtracking isomorphism search; returns a g->h vertex map or None.

    Intended for small instances (tree dedup, structure recognition); the
    only pruning is by degree and adjacency consistency.
    """
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    if sorted(g.degrees) != sorted(h.degrees):
        return None
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(pos: int) -> bool:
        if pos == g.n:
            return True
        v = order[pos]
        for w in range(h.n):
            if used[w] or h.degree(w) != g.degree(v):
                continue
            ok = True
            for u in order[:pos]:
                if (u in g.adj[v]) != (mapping[u] in h.adj[w]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(pos + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    return mapping if extend(0) else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


# tree enumeration -------------------------------------------------------------

def _tree_from_pruefer(seq: tuple[int, ...], n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    import heapq
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def _iso_signature(g: Graph):
    sigs = []
    for v in range(g.n):
        dist = _bfs_dist(g, v)
        sigs.append((g.degree(v), tuple(sorted(dist))))
    return tuple(sorted(sigs))


def enumerate_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees on n vertices.

    Decodes every Pruefer sequence and deduplicates: candidates are bucketed
    by a refined degree/distance signature, then confirmed with an exact
    isomorphism check. Supported for 1 <= n <= 10.
    """
    if not 1 <= n <= 10:
        raise GraphError(f"tree enumeration supports 1..10 vertices, got {n}")
    if n == 1:
        return [Graph.from_edges(1, [])]
    if n == 2:
        return [Graph.from_edges(2, [(0, 1)])]
    reps: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = {}
    for seq in itertools.product(range(n), repeat=n - 2):
        t = _tree_from_pruefer(seq, n)
        bucket = buckets.setdefault(_iso_signature(t), [])
        if not any(find_isomorphism(t, r) is not None for r in bucket):
            bucket.append(t)
            reps.append(t)
    return reps


# edge-list files ---------------------------------------------------------------

def from_edge_list_text(text: str) -> Graph:
    """Parse the edge-list format: first line "n m", then m lines "u v"."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or not all(p.lstrip("-").isdigit() for p in head):
        raise GraphError(f"edge list header must be 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphError(f"edge list declares {m} edges but has {len(lines) - 1}")
    edges = []
    seen = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise GraphError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def from_edge_list_file(filename: str) -> Graph:
    with open(filename, "r", encoding="utf-8") as fh:
        return from_edge_list_text(fh.read())


# expression parser --------------------------------------------------------------

class _ExprParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> GraphParseError:
        return GraphParseError(f"{message} (at position {self.pos} in {self.text!r})")

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a construction name")
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def raw_path(self) -> str:
        self.skip_ws()
        if self.peek() == '"':
            self.pos += 1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] != '"':
                self.pos += 1
            if self.pos >= len(self.text):
                raise self.error("unterminated quoted path")
            out = self.text[start:self.pos]
            self.pos += 1
            return out
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] != ")":
            self.pos += 1
        return self.text[start:self.pos].strip()

    def parse(self) -> Graph:
        g = self.graph()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing input after expression")
        return g

    def graph(self) -> Graph:
        name = self.name()
        self.expect("(")
        g = self.payload(name)
        self.expect(")")
        return g

    def payload(self, name: str) -> Graph:
        if name == "K":
            return complete(self.integer())
        if name == "C":
            return cycle(self.integer())
        if name == "P":
            return path(self.integer())
        if name == "S":
            return star(self.integer())
        if name == "KmM":
            return complete_minus_matching(self.integer())
        if name == "Kb":
            m = self.integer()
            self.expect(",")
            return complete_bipartite(m, self.integer())
        if name == "Km":
            sizes = [self.integer()]
            while self.peek() == ",":
                self.expect(",")
                sizes.append(self.integer())
            return complete_multipartite(sizes)
        if name == "join":
            a = self.graph()
            self.expect(",")
            return join(a, self.graph())
        if name == "pow":
            a = self.graph()
            self.expect(",")
            return graph_power(a, self.integer())
        if name in ("lex", "dir", "cart"):
            from . import products
            a = self.graph()
            self.expect(",")
            b = self.graph()
            fn = {"lex": products.lex_product,
                  "dir": products.direct_product,
                  "cart": products.cartesian_product}[name]
            return fn(a, b)
        if name == "file":
            return from_edge_list_file(self.raw_path())
        raise self.error(f"unknown construction {name!r}")


def construct_graph(expr: str) -> Graph:
    """Build a graph from an expression such as lex(C(3),C(4)) or Kb(2,3)."""
    return _ExprParser(expr).parse()
