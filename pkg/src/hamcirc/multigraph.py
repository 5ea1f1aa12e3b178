"""Finite undirected multigraphs: cycles, hamiltonian enumeration, cuts,
outerplanarity, DOT export.

Parallel edges are allowed, loops are rejected at construction (the quotient
constructions delete them before building a graph).  Vertices are integers
0..n-1 carrying opaque string labels; an edge is identified by its index in
the edge list, which is what distinguishes parallels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence


class Edge(NamedTuple):
    u: int
    v: int
    tag: Optional[str]


class Multigraph:
    __slots__ = ("labels", "edges", "_adj")

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple]):
        self.labels = tuple(str(x) for x in labels)
        n = len(self.labels)
        es = []
        for e in edges:
            if len(e) == 2:
                u, v = e
                tag = None
            else:
                u, v, tag = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: {e}")
            if u == v:
                raise ValueError(f"loops are not allowed: {e}")
            if u > v:
                u, v = v, u
            es.append(Edge(u, v, tag))
        self.edges = tuple(es)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for idx, e in enumerate(self.edges):
            adj[e.u].append((e.v, idx))
            adj[e.v].append((e.u, idx))
        self._adj = adj

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self._adj[v]]

    def incident_edges(self, v: int) -> list[int]:
        return [idx for _, idx in self._adj[v]]

    def edges_between(self, u: int, v: int) -> list[int]:
        return [idx for w, idx in self._adj[u] if w == v]

    def vertex(self, label: str) -> int:
        return self.labels.index(label)

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.n_vertices
        comps = []
        for start in range(self.n_vertices):
            if seen[start]:
                continue
            comp = [start]
            seen[start] = True
            stack = [start]
            while stack:
                v = stack.pop()
                for w, _ in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n_vertices <= 1 or len(self.connected_components()) == 1

    def is_cycle(self) -> bool:
        """Connected, at least 3 vertices, every degree exactly 2."""
        return (
            self.n_vertices >= 3
            and all(len(a) == 2 for a in self._adj)
            and self.is_connected()
        )

    def is_simple(self) -> bool:
        seen = set()
        for e in self.edges:
            key = (e.u, e.v)
            if key in seen:
                return False
            seen.add(key)
        return True

    def simple_support(self) -> "Multigraph":
        """Collapse parallel edges, keeping the first tag."""
        seen = {}
        for e in self.edges:
            seen.setdefault((e.u, e.v), e.tag)
        return Multigraph(
            self.labels, [(u, v, tag) for (u, v), tag in seen.items()]
        )

    def without_edges(self, drop: Iterable[int]) -> "Multigraph":
        dropset = set(drop)
        return Multigraph(
            self.labels,
            [e for i, e in enumerate(self.edges) if i not in dropset],
        )

    def induced_subgraph(self, keep: Iterable[int]) -> "Multigraph":
        kept = sorted(set(keep))
        index = {v: i for i, v in enumerate(kept)}
        edges = [
            (index[e.u], index[e.v], e.tag)
            for e in self.edges
            if e.u in index and e.v in index
        ]
        return Multigraph([self.labels[v] for v in kept], edges)

    def labeled_edges(self) -> list[tuple[str, str, Optional[str]]]:
        out = []
        for e in self.edges:
            a, b = sorted((self.labels[e.u], self.labels[e.v]))
            out.append((a, b, e.tag))
        return sorted(out, key=lambda t: (t[0], t[1], t[2] or ""))

    def to_dot(self, highlight: Iterable[int] = (), name: str = "") -> str:
        hi = set(highlight)
        esc = lambda s: s.replace('"', '\\"')
        head = f"graph {esc(name)} {{" if name else "graph {"
        lines = [head]
        for label in self.labels:
            lines.append(f'  "{esc(label)}";')
        for idx, e in enumerate(self.edges):
            attrs = []
            if e.tag:
                attrs.append(f'label="{esc(e.tag)}"')
            if idx in hi:
                attrs.append("penwidth=2.5")
            suffix = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(
                f'  "{esc(self.labels[e.u])}" -- "{esc(self.labels[e.v])}"{suffix};'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def parse_adjacency(text: str) -> Multigraph:
    """One edge per line (``u v``), ``#`` comments, single token = lone vertex."""
    order: list[str] = []
    index: dict[str, int] = {}

    def vid(token: str) -> int:
        if token not in index:
            index[token] = len(order)
            order.append(token)
        return index[token]

    edges = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            vid(parts[0])
        elif len(parts) == 2:
            edges.append((vid(parts[0]), vid(parts[1])))
        else:
            raise ValueError(f"bad adjacency line: {line!r}")
    return Multigraph(order, edges)


@dataclass(frozen=True)
class EdgeCut:
    """A vertex side together with the edges leaving it."""

    side: frozenset[int]
    cut_edges: tuple[int, ...]

    @classmethod
    def from_side(cls, g: Multigraph, side: Iterable[int]) -> "EdgeCut":
        s = frozenset(side)
        if not s or len(s) >= g.n_vertices:
            raise ValueError("cut side must be nonempty and proper")
        cut = tuple(
            i for i, e in enumerate(g.edges) if (e.u in s) != (e.v in s)
        )
        return cls(s, cut)


def enumerate_hamiltonian_cycles(g: Multigraph, max_vertices: int = 20) -> list[tuple[int, ...]]:
    """Every hamiltonian cycle exactly once, canonicalized.

    Canonical form: starts at vertex 0, and of the two directions the one
    whose second vertex is smaller than its last.  Backtracking search;
    requires a simple graph with at most ``max_vertices`` vertices.
    """
    n = g.n_vertices
    if n > max_vertices:
        raise ValueError(f"graph too large for enumeration: {n} > {max_vertices}")
    if not g.is_simple():
        raise ValueError("hamiltonian enumeration requires a simple graph")
    if n < 3:
        return []
    adj = [sorted(set(g.neighbors(v))) for v in range(n)]
    adj0 = set(adj[0])
    cycles = []
    path = [0]
    used = [False] * n
    used[0] = True

    def rec(v: int) -> None:
        if len(path) == n:
            if v in adj0 and path[1] < path[-1]:
                cycles.append(tuple(path))
            return
        for w in adj[v]:
            if not used[w]:
                used[w] = True
                path.append(w)
                rec(w)
                path.pop()
                used[w] = False

    rec(0)
    return sorted(cycles)


def cycle_contains_edge(cycle: Sequence[int], u: int, v: int) -> bool:
    k = len(cycle)
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        if (a, b) == (u, v) or (a, b) == (v, u):
            return True
    return False


def cubic_cycles_through_edge(g: Multigraph, edge_index: int) -> int:
    """Number of hamiltonian cycles through one edge of a cubic simple graph."""
    if any(d != 3 for d in g.degrees()):
        raise ValueError("graph is not cubic")
    e = g.edges[edge_index]
    return sum(
        1
        for cyc in enumerate_hamiltonian_cycles(g)
        if cycle_contains_edge(cyc, e.u, e.v)
    )


def find_cut_separating_pair(
    g: Multigraph,
    factor_edges: Iterable[int],
    e1: int,
    e2: int,
    max_vertices: int = 22,
) -> Optional[EdgeCut]:
    """A smallest edge cut meeting a designated 2-factor in exactly {e1, e2}.

    Exhaustive search over vertex sides.  Both named edges must cross the
    cut, so their endpoints are pinned to opposite sides (which also kills
    the side/complement symmetry) and only the remaining vertices are
    enumerated.  Returns None if no such cut exists.
    """
    n = g.n_vertices
    if n > max_vertices:
        raise ValueError(f"graph too large for cut search: {n} > {max_vertices}")
    factor = sorted(set(factor_edges))
    if e1 not in factor or e2 not in factor or e1 == e2:
        raise ValueError("e1, e2 must be distinct edges of the 2-factor")
    other_factor = [i for i in factor if i not in (e1, e2)]
    ends = [(e.u, e.v) for e in g.edges]
    f1, f2 = g.edges[e1], g.edges[e2]

    best: Optional[tuple[int, tuple[int, ...]]] = None
    for flip in (False, True):
        pin = {f1.u: True, f1.v: False}
        a2, b2 = (f2.u, f2.v) if not flip else (f2.v, f2.u)
        if pin.get(a2) is False or pin.get(b2) is True:
            continue
        pin[a2], pin[b2] = True, False
        free = [v for v in range(n) if v not in pin]
        for bits in range(2 ** len(free)):
            side = dict(pin)
            for i, v in enumerate(free):
                side[v] = bool(bits >> i & 1)
            ok = True
            for i in other_factor:
                u, v = ends[i]
                if side[u] != side[v]:
                    ok = False
                    break
            if not ok:
                continue
            cut_size = sum(1 for u, v in ends if side[u] != side[v])
            key = tuple(sorted(v for v in range(n) if side[v]))
            if best is None or (cut_size, key) < best:
                best = (cut_size, key)
    if best is None:
        return None
    return EdgeCut.from_side(g, best[1])


def is_outerplanar(g: Multigraph) -> bool:
    """No K4 and no K2,3 minor; equivalently, planar after adding a vertex
    adjacent to everything.  Computed on the simple support."""
    import networkx as nx

    simple = g.simple_support()
    n = simple.n_vertices
    if n <= 2:
        return True
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from((e.u, e.v) for e in simple.edges)
    apex = n
    G.add_edges_from((apex, v) for v in range(n))
    ok, _ = nx.check_planarity(G)
    return ok


# --- independent minor-search oracle (small graphs only) ------------------

def _contract(edges: frozenset, x, y) -> frozenset:
    z = x | y
    out = set()
    for e in edges:
        a, b = tuple(e)
        if a in (x, y):
            a = z
        if b in (x, y):
            b = z
        if a != b:
            out.add(frozenset((a, b)))
    return frozenset(out)


def _adjacency(edges: frozenset) -> dict:
    adj: dict = {}
    for e in edges:
        a, b = tuple(e)
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return adj


def _has_k4_subgraph(edges: frozenset) -> bool:
    adj = _adjacency(edges)
    verts = list(adj)
    for quad in itertools.combinations(verts, 4):
        if all(b in adj[a] for a, b in itertools.combinations(quad, 2)):
            return True
    return False


def _has_k23_subgraph(edges: frozenset) -> bool:
    adj = _adjacency(edges)
    verts = list(adj)
    for a, b in itertools.combinations(verts, 2):
        if len(adj[a] & adj[b] - {a, b}) >= 3:
            return True
    return False


def has_minor(g: Multigraph, target: str, max_vertices: int = 10) -> bool:
    """Exact minor test for K4 or K2,3 by contraction enumeration.

    A graph has an H minor iff H is a subgraph of some contraction, so the
    search contracts edges in all ways (memoized on the resulting graph)
    and tests for an H subgraph at each step.
    """
    if g.n_vertices > max_vertices:
        raise ValueError(
            f"minor oracle capped at {max_vertices} vertices, got {g.n_vertices}"
        )
    check = {"K4": _has_k4_subgraph, "K23": _has_k23_subgraph}[target]
    start = frozenset(
        frozenset((frozenset((e.u,)), frozenset((e.v,)))) for e in g.edges
    )
    seen = set()
    stack = [start]
    while stack:
        edges = stack.pop()
        if edges in seen:
            continue
        seen.add(edges)
        if check(edges):
            return True
        for e in edges:
            x, y = tuple(e)
            nxt = _contract(edges, x, y)
            if nxt not in seen:
                stack.append(nxt)
    return False


def outerplanar_by_minor_search(g: Multigraph) -> bool:
    simple = g.simple_support()
    return not (has_minor(simple, "K4") or has_minor(simple, "K23"))


# --- small standard graphs -------------------------------------------------

def cycle_graph(k: int) -> Multigraph:
    if k < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Multigraph([str(i) for i in range(k)], [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Multigraph:
    return Multigraph(
        [str(i) for i in range(k)], list(itertools.combinations(range(k), 2))
    )


def complete_bipartite(a: int, b: int) -> Multigraph:
    labels = [f"u{i}" for i in range(a)] + [f"w{j}" for j in range(b)]
    return Multigraph(labels, [(i, a + j) for i in range(a) for j in range(b)])


def generalized_petersen(k: int, j: int) -> Multigraph:
    labels = [f"u{i}" for i in range(k)] + [f"v{i}" for i in range(k)]
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
        edges.append((i, k + i))
        edges.append((k + i, k + (i + j) % k))
    return Multigraph(labels, edges)


def circulant_graph(n: int, offsets: Iterable[int]) -> Multigraph:
    edges = set()
    for s in offsets:
        s %= n
        if s == 0:
            raise ValueError("offset 0 would create loops")
        for i in range(n):
            u, v = i, (i + s) % n
            edges.add((min(u, v), max(u, v)))
    return Multigraph([str(i) for i in range(n)], sorted(edges))
