"""Shared brute-force oracles and random-graph helpers for the test suite.

The oracles here deliberately use the dumbest correct algorithms
(path enumeration, BFS layering) so they stay independent of the
implementations they check.
"""
from __future__ import annotations

import math
from collections import deque

import numpy as np

from congestsim.graphs import Graph


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist = [math.inf] * g.node_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if dist[w] == math.inf:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def enumerate_shortest_paths(g: Graph, s: int, t: int) -> list[list[int]]:
    """All hop-count-shortest simple paths from s to t, by explicit DFS
    over moves that strictly approach t."""
    dist_t = bfs_distances(g, t)
    if math.isinf(dist_t[s]):
        return []
    paths: list[list[int]] = []
    stack: list[list[int]] = [[s]]
    while stack:
        path = stack.pop()
        v = path[-1]
        if v == t:
            paths.append(path)
            continue
        for w in g.adjacency[v]:
            if dist_t[w] == dist_t[v] - 1:
                stack.append(path + [w])
    return paths


def brute_betweenness(g: Graph) -> np.ndarray:
    """Betweenness by enumerating every shortest path of every pair."""
    n = g.node_count
    raw = np.zeros(n, dtype=np.float64)
    for s in range(n):
        for t in range(s + 1, n):
            paths = enumerate_shortest_paths(g, s, t)
            if not paths:
                continue
            share = 1.0 / len(paths)
            for path in paths:
                for v in path[1:-1]:
                    raw[v] += share
    if n < 3:
        return raw
    return raw / ((n - 1) * (n - 2) / 2.0)


def enumerate_simple_paths(g: Graph, s: int, t: int, max_len: int | None = None):
    """Yield every simple path from s to t (no length restriction)."""
    limit = max_len if max_len is not None else g.node_count
    stack: list[tuple[list[int], set[int]]] = [([s], {s})]
    while stack:
        path, seen = stack.pop()
        v = path[-1]
        if v == t:
            yield path
            continue
        if len(path) > limit:
            continue
        for w in g.adjacency[v]:
            if w not in seen:
                stack.append((path + [w], seen | {w}))


def random_connected_graph(rng: np.random.Generator, n: int, extra_edge_prob: float = 0.3) -> Graph:
    """Small connected graph: a random spanning tree plus random extra edges."""
    edges = set()
    order = rng.permutation(n)
    for i in range(1, n):
        a = int(order[i])
        b = int(order[rng.integers(i)])
        edges.add((min(a, b), max(a, b)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_edge_prob:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))
