"""Undirected graph construction and structural analysis.

Provides the three random-graph generators used by the simulator
(Barabasi-Albert, Watts-Strogatz, Erdos-Renyi), Brandes betweenness
centrality, a connectivity check, and a plain edge-list file format.
"""
from __future__ import annotations

import bisect
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

__all__ = [
    "Graph",
    "GraphGenerationError",
    "generate_barabasi_albert",
    "generate_watts_strogatz",
    "generate_erdos_renyi",
    "betweenness_centrality",
    "is_connected",
    "dump_edge_list",
    "load_edge_list",
]


class GraphGenerationError(RuntimeError):
    """Raised when a generator cannot produce a connected graph."""


@dataclass
class Graph:
    """Undirected simple graph over nodes ``0..node_count-1``.

    ``adjacency[i]`` is the sorted list of neighbors of node ``i``;
    ``edge_count`` counts undirected edges. Instances are treated as
    immutable once built.
    """

    node_count: int
    adjacency: list[list[int]]
    edge_count: int
    _indptr: np.ndarray | None = field(default=None, repr=False, compare=False)
    _nbrs: np.ndarray | None = field(default=None, repr=False, compare=False)
    _degrees: np.ndarray | None = field(default=None, repr=False, compare=False)

    @classmethod
    def from_edges(cls, node_count: int, edges) -> "Graph":
        """Build a graph from an iterable of (u, v) pairs.

        Rejects self-loops, duplicate edges, and out-of-range node ids.
        """
        if node_count < 1:
            raise ValueError("node_count must be positive")
        adjacency: list[list[int]] = [[] for _ in range(node_count)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError(f"edge ({u}, {v}) out of range for n={node_count}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
        for nbrs in adjacency:
            nbrs.sort()
        return cls(node_count, adjacency, len(seen))

    @property
    def degrees(self) -> np.ndarray:
        if self._degrees is None:
            self._degrees = np.array([len(a) for a in self.adjacency], dtype=np.int64)
        return self._degrees

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form: (indptr[n+1], neighbors[2*edge_count])."""
        if self._indptr is None:
            indptr = np.zeros(self.node_count + 1, dtype=np.int64)
            np.cumsum(self.degrees, out=indptr[1:])
            if self.edge_count:
                nbrs = np.concatenate(
                    [np.asarray(a, dtype=np.int64) for a in self.adjacency if a]
                )
            else:
                nbrs = np.empty(0, dtype=np.int64)
            self._indptr, self._nbrs = indptr, nbrs
        return self._indptr, self._nbrs

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        i = bisect.bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self):
        """Yield undirected edges (u, v) with u < v, in ascending order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v


def generate_barabasi_albert(n: int, m: int, seed: int) -> Graph:
    """Grow a scale-free graph by degree-proportional preferential attachment.

    Starts from a clique of ``m`` seed nodes; each later node attaches ``m``
    edges to distinct existing nodes drawn with probability proportional to
    their current degree (repeated draws, duplicates rejected). Connected by
    construction and deterministic for a fixed seed.

    Args:
        n: total node count (must exceed m).
        m: edges attached by each arriving node (>= 1).
        seed: RNG seed.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if n <= m:
        raise ValueError("n must be greater than m")
    rng = np.random.default_rng(seed)
    edges: list[tuple[int, int]] = [
        (i, j) for i in range(m) for j in range(i + 1, m)
    ]
    # one entry per degree unit; drawing uniformly from it is degree-proportional
    repeated: list[int] = [node for edge in edges for node in edge]
    for new in range(m, n):
        if repeated:
            targets: set[int] = set()
            while len(targets) < m:
                targets.add(repeated[rng.integers(len(repeated))])
        else:
            # m == 1 with a single isolated seed node: attach uniformly
            targets = {int(rng.integers(new))}
        chosen = sorted(targets)
        for t in chosen:
            edges.append((t, new))
        repeated.extend(chosen)
        repeated.extend([new] * m)
    return Graph.from_edges(n, edges)


def _watts_strogatz_once(n: int, k: int, p_rewire: float, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    half = k // 2
    for i in range(n):
        for off in range(1, half + 1):
            j = (i + off) % n
            adj[i].add(j)
            adj[j].add(i)
    for i in range(n):
        for off in range(1, half + 1):
            j = (i + off) % n
            if rng.random() >= p_rewire:
                continue
            if len(adj[i]) >= n - 1:
                continue  # no non-neighbor left to rewire to
            w = int(rng.integers(n))
            while w == i or w in adj[i]:
                w = int(rng.integers(n))
            adj[i].discard(j)
            adj[j].discard(i)
            adj[i].add(w)
            adj[w].add(i)
    return Graph.from_edges(
        n, [(i, j) for i in range(n) for j in adj[i] if i < j]
    )


def generate_watts_strogatz(
    n: int,
    k: int,
    p_rewire: float,
    seed: int,
    ensure_connected: bool = True,
) -> Graph:
    """Small-world graph: ring lattice of even degree ``k``, edges rewired
    with probability ``p_rewire`` to uniform non-duplicate, non-self targets.

    Edge count is exactly ``n*k/2``. With ``ensure_connected`` (the default,
    required by the simulator) a disconnected draw is regenerated with
    seed+1, up to 100 attempts.
    """
    if k % 2 != 0:
        raise ValueError("ring degree k must be even")
    if not 2 <= k < n:
        raise ValueError("require 2 <= k < n")
    if not 0.0 <= p_rewire <= 1.0:
        raise ValueError("p_rewire must be in [0, 1]")
    for attempt in range(100):
        g = _watts_strogatz_once(n, k, p_rewire, seed + attempt)
        if not ensure_connected or is_connected(g):
            return g
    raise GraphGenerationError(
        f"no connected Watts-Strogatz graph in 100 attempts (n={n}, k={k}, p={p_rewire})"
    )


def _erdos_renyi_once(n: int, p: float, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    us, vs = np.triu_indices(n, k=1)
    mask = rng.random(us.shape[0]) < p
    return Graph.from_edges(n, zip(us[mask].tolist(), vs[mask].tolist()))


def generate_erdos_renyi(
    n: int,
    p: float,
    seed: int,
    ensure_connected: bool = True,
) -> Graph:
    """G(n, p) random graph: each of the n(n-1)/2 pairs is an edge
    independently with probability ``p``.

    With ``ensure_connected`` (the default) a disconnected draw is
    regenerated with seed+1, up to 100 attempts.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    for attempt in range(100):
        g = _erdos_renyi_once(n, p, seed + attempt)
        if not ensure_connected or is_connected(g):
            return g
    raise GraphGenerationError(
        f"no connected Erdos-Renyi graph in 100 attempts (n={n}, p={p})"
    )


def betweenness_centrality(g: Graph) -> np.ndarray:
    """Shortest-path betweenness of every node, normalized to [0, 1].

    Hop-count shortest paths (Brandes accumulation); the per-node sum of
    pair dependencies is divided by (n-1)(n-2)/2, the number of pairs that
    could route through a node. Disconnected pairs contribute nothing.
    """
    n = g.node_count
    bet = np.zeros(n, dtype=np.float64)
    if n < 3:
        return bet
    adjacency = g.adjacency
    for s in range(n):
        dist = [-1] * n
        sigma = [0.0] * n
        preds: list[list[int]] = [[] for _ in range(n)]
        dist[s] = 0
        sigma[s] = 1.0
        order: list[int] = []
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            dv = dist[v]
            sv = sigma[v]
            for w in adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dv + 1
                    queue.append(w)
                if dist[w] == dv + 1:
                    sigma[w] += sv
                    preds[w].append(v)
        delta = [0.0] * n
        for w in reversed(order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                bet[w] += delta[w]
    # each unordered pair was accumulated from both endpoints
    bet /= 2.0
    bet /= (n - 1) * (n - 2) / 2.0
    return bet


def is_connected(g: Graph) -> bool:
    """True iff a traversal from node 0 reaches every node."""
    n = g.node_count
    if n <= 1:
        return True
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def dump_edge_list(g: Graph, path: str | Path) -> None:
    """Write the graph as text: first line "n m", then one "u v" per edge
    with u < v, ascending."""
    lines = [f"{g.node_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_edge_list(path: str | Path) -> Graph:
    """Read a graph written by :func:`dump_edge_list`."""
    text = Path(path).read_text(encoding="utf-8").split()
    if len(text) < 2:
        raise ValueError(f"{path}: missing 'n m' header")
    n, m = int(text[0]), int(text[1])
    values = text[2:]
    if len(values) != 2 * m:
        raise ValueError(f"{path}: expected {m} edges, found {len(values) // 2}")
    edges = []
    for i in range(m):
        u, v = int(values[2 * i]), int(values[2 * i + 1])
        if not u < v:
            raise ValueError(f"{path}: edge ({u}, {v}) must satisfy u < v")
        edges.append((u, v))
    return Graph.from_edges(n, edges)
