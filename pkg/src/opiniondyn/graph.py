"""Interaction graphs and their adjacency matrices.

Vertices are numbered 1..n in all user-facing structures (edge sets, JSON
files, reports); positions in numpy vectors and matrices are the usual
0-based offsets, so ``adjacency()[i-1, k-1]`` is the entry for the ordered
pair (i, k). Self-loops are excluded by construction: self-reinforcement is
a model parameter, not an edge.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np


class GraphGenerationError(RuntimeError):
    """Random graph generation exhausted its attempt budget."""


@dataclass(frozen=True, eq=False)
class Graph:
    """An unweighted interaction graph without self-loops.

    For undirected graphs ``edges`` contains both orientations of every
    edge; use :meth:`edge_list` for the one-per-edge view.
    """

    n_agents: int
    directed: bool
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n_agents < 1:
            raise ValueError(f"need at least one agent, got {self.n_agents}")
        for i, k in self.edges:
            if i == k:
                raise ValueError(f"self-loop ({i},{i}) is not allowed")
            if not (1 <= i <= self.n_agents and 1 <= k <= self.n_agents):
                raise ValueError(f"edge ({i},{k}) outside vertex range 1..{self.n_agents}")
            if not self.directed and (k, i) not in self.edges:
                raise ValueError(f"undirected graph is missing the reverse of ({i},{k})")

    @classmethod
    def from_edges(cls, n: int, pairs, directed: bool = False) -> "Graph":
        """Build a graph from an iterable of (i, k) pairs, symmetrizing if undirected."""
        edges = set()
        for i, k in pairs:
            edges.add((int(i), int(k)))
            if not directed:
                edges.add((int(k), int(i)))
        return cls(n_agents=n, directed=directed, edges=frozenset(edges))

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Unweighted adjacency matrix (zero diagonal, read-only)."""
        a = np.zeros((self.n_agents, self.n_agents))
        for i, k in self.edges:
            a[i - 1, k - 1] = 1.0
        a.flags.writeable = False
        return a

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges listed once each: sorted (i, k) pairs with i < k when undirected."""
        if self.directed:
            return sorted(self.edges)
        return sorted({(min(i, k), max(i, k)) for i, k in self.edges})

    def degrees(self) -> np.ndarray:
        """Out-degree of each vertex (plain degree for undirected graphs)."""
        return self.adjacency.sum(axis=1)

    def neighbors(self, i: int) -> list[int]:
        return sorted(k for (j, k) in self.edges if j == i)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def make_cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices: 1-2-...-n-1."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def make_path(n: int) -> Graph:
    """Path on n >= 2 vertices: 1-2-...-n."""
    if n < 2:
        raise ValueError(f"path needs n >= 2, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def make_star(n: int) -> Graph:
    """Star on n >= 2 vertices with hub 1 adjacent to 2..n."""
    if n < 2:
        raise ValueError(f"star needs n >= 2, got {n}")
    return Graph.from_edges(n, [(1, k) for k in range(2, n + 1)])


def make_wheel(n: int) -> Graph:
    """Wheel on n >= 4 vertices: hub 1 plus the cycle 2-3-...-n-2."""
    if n < 4:
        raise ValueError(f"wheel needs n >= 4, got {n}")
    rim = [(i, i + 1) for i in range(2, n)] + [(n, 2)]
    hub = [(1, k) for k in range(2, n + 1)]
    return Graph.from_edges(n, rim + hub)


def make_complete(n: int) -> Graph:
    """Complete graph on n >= 2 vertices."""
    if n < 2:
        raise ValueError(f"complete graph needs n >= 2, got {n}")
    return Graph.from_edges(n, [(i, k) for i in range(1, n + 1) for k in range(i + 1, n + 1)])


def make_balanced_tree(branching: int, depth: int) -> Graph:
    """Balanced tree: root 1, every internal vertex has `branching` children.

    Vertices are numbered level by level, so vertex i's children are
    branching*(i-1)+2 .. branching*(i-1)+branching+1. A tree of depth d has
    (branching**(d+1) - 1) / (branching - 1) vertices.
    """
    if branching < 2:
        raise ValueError(f"balanced tree needs branching >= 2, got {branching}")
    if depth < 1:
        raise ValueError(f"balanced tree needs depth >= 1, got {depth}")
    n = (branching ** (depth + 1) - 1) // (branching - 1)
    pairs = []
    for i in range(1, n + 1):
        for c in range(branching * (i - 1) + 2, branching * (i - 1) + branching + 2):
            if c <= n:
                pairs.append((i, c))
    return Graph.from_edges(n, pairs)


def make_hypercube(dim: int) -> Graph:
    """Hypercube graph Q_dim on 2**dim vertices (dim-regular); Q_3 is the cube."""
    if dim < 1:
        raise ValueError(f"hypercube needs dim >= 1, got {dim}")
    n = 2 ** dim
    pairs = []
    for v in range(n):
        for bit in range(dim):
            w = v ^ (1 << bit)
            if v < w:
                pairs.append((v + 1, w + 1))
    return Graph.from_edges(n, pairs)


def make_random_connected(n: int, p: float, seed: int, max_attempts: int = 10_000) -> Graph:
    """Erdos-Renyi G(n, p) conditioned on connectivity.

    Whole graphs are resampled (advancing the random stream) until a
    connected one appears, which keeps the conditional distribution clean.
    Deterministic for fixed (n, p, seed).
    """
    if n < 2:
        raise ValueError(f"random graph needs n >= 2, got {n}")
    if not 0.0 < p <= 1.0:
        raise ValueError(f"edge probability must be in (0, 1], got {p}")
    rng = np.random.default_rng(seed)
    pair_index = [(i, k) for i in range(1, n + 1) for k in range(i + 1, n + 1)]
    for _ in range(max_attempts):
        draws = rng.random(len(pair_index))
        g = Graph.from_edges(n, [pair_index[j] for j in np.flatnonzero(draws < p)])
        if is_connected(g):
            return g
    raise GraphGenerationError(
        f"no connected G({n}, {p}) graph found in {max_attempts} attempts"
    )


# ---------------------------------------------------------------------------
# Structure queries
# ---------------------------------------------------------------------------

def _reachable(adj: np.ndarray, start: int) -> np.ndarray:
    n = adj.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[start] = True
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in np.flatnonzero(adj[v]):
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return seen


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable ignoring edge directions."""
    sym = np.maximum(g.adjacency, g.adjacency.T)
    return bool(_reachable(sym, 0).all())


def is_strongly_connected(g: Graph) -> bool:
    """True iff vertex 1 reaches and is reached by every vertex along directed edges."""
    a = g.adjacency
    return bool(_reachable(a, 0).all() and _reachable(a.T, 0).all())


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """The 2-coloring (V1, V2) with vertex 1 in V1, or None if an odd cycle exists.

    Requires an undirected connected graph.
    """
    if g.directed:
        raise ValueError("bipartition is defined for undirected graphs")
    if not is_connected(g):
        raise ValueError("bipartition requires a connected graph")
    color = {1: 0}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in color:
                color[w] = 1 - color[v]
                queue.append(w)
            elif color[w] == color[v]:
                return None
    v1 = frozenset(v for v, c in color.items() if c == 0)
    v2 = frozenset(v for v, c in color.items() if c == 1)
    return v1, v2


def regularity(g: Graph) -> int | None:
    """Common degree K if the undirected graph is K-regular, else None."""
    if g.directed:
        raise ValueError("regularity is defined for undirected graphs")
    deg = g.degrees()
    k = int(deg[0])
    return k if np.all(deg == k) else None


# ---------------------------------------------------------------------------
# JSON I/O
# ---------------------------------------------------------------------------

def save_graph(g: Graph, path: str | Path) -> None:
    """Write `{"directed": ..., "n": ..., "edges": [[i, k], ...]}` (1-indexed)."""
    doc = {
        "directed": g.directed,
        "n": g.n_agents,
        "edges": [[i, k] for i, k in g.edge_list()],
    }
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def load_graph(path: str | Path) -> Graph:
    """Load a graph JSON file, validating vertex ranges and rejecting self-loops."""
    doc = json.loads(Path(path).read_text())
    try:
        n = int(doc["n"])
        directed = bool(doc["directed"])
        pairs = [(int(i), int(k)) for i, k in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed graph file {path}: {exc}") from exc
    return Graph.from_edges(n, pairs, directed=directed)
