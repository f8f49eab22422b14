"""Simple undirected graphs, BFS distances, and distance-regularity oracles.

Vertices are 0..n-1.  Hypercube vertices are bitmasks: bit b set means
coordinate b is -1, and two vertices are adjacent iff their xor is a power of
two.  Distances are always realized by breadth-first search so the closed
formulas elsewhere can be checked against an independent oracle.

The brute-force intersection counts here are the ground truth that the
closed-form hypercube parameters are tested against.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .linalg import RationalMatrix

MAX_VERTICES = 1 << 12  # all-pairs distance table is the memory bound


class Graph:
    """Immutable connected simple graph with sorted adjacency lists."""

    __slots__ = ("n", "neighbors")

    def __init__(self, n: int, neighbors: tuple[tuple[int, ...], ...]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "neighbors", neighbors)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.neighbors) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Validated construction: simple, loop-free, connected.

        Raises:
            ValueError: on any malformed edge or a disconnected graph.
        """
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        if n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} exceeds cap {MAX_VERTICES}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        g = cls(n, tuple(tuple(sorted(s)) for s in adj))
        seen = _bfs(g.neighbors, 0)
        if -1 in seen:
            missing = int(np.argmax(seen == -1))
            raise ValueError(f"graph is not connected: vertex {missing} unreachable from 0")
        return g


def hypercube(d: int) -> Graph:
    """The d-dimensional hypercube on bitmask vertices 0..2^d - 1."""
    if not 0 <= d <= 12:
        raise ValueError(f"hypercube dimension must be in 0..12, got {d}")
    n = 1 << d
    edges = [
        (v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)
    ]
    return Graph.from_edges(n, edges)


def parse_graph_file(text: str) -> Graph:
    """Parse the plain edge-list format.

    First meaningful line is "n m", then m lines "u v" with 0-based vertex
    ids.  Anything after '#' on a line is a comment; blank lines are skipped.

    Raises:
        ValueError: with a precise message on any malformed input.
    """
    tokens: list[list[str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        tokens.append([str(lineno)] + body.split())
    if not tokens:
        raise ValueError("empty graph file")
    header = tokens[0]
    if len(header) != 3:
        raise ValueError(f"line {header[0]}: expected 'n m' header")
    try:
        n, m = int(header[1]), int(header[2])
    except ValueError:
        raise ValueError(f"line {header[0]}: expected integer 'n m' header") from None
    body_lines = tokens[1:]
    if len(body_lines) != m:
        raise ValueError(f"expected {m} edge lines, found {len(body_lines)}")
    edges = []
    for item in body_lines:
        if len(item) != 3:
            raise ValueError(f"line {item[0]}: expected 'u v' edge")
        try:
            u, v = int(item[1]), int(item[2])
        except ValueError:
            raise ValueError(f"line {item[0]}: expected integer 'u v' edge") from None
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _bfs(neighbors: Sequence[Sequence[int]], src: int) -> np.ndarray:
    dist = np.full(len(neighbors), -1, dtype=np.int64)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in neighbors[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceData:
    """All-pairs BFS distances plus the diameter."""

    dist: np.ndarray
    diameter: int

    @classmethod
    def compute(cls, g: Graph) -> "DistanceData":
        table = np.empty((g.n, g.n), dtype=np.int64)
        for src in range(g.n):
            table[src] = _bfs(g.neighbors, src)
        table.flags.writeable = False
        return cls(table, int(table.max()))


def distance_matrix(g: Graph, dd: DistanceData, i: int) -> RationalMatrix:
    """0/1 distance-i matrix; zero matrix when i is out of range."""
    arr = (dd.dist == i).astype(np.int64)
    return RationalMatrix(arr, 1, _canonical=True)


def brute_force_p(g: Graph, dd: DistanceData, h: int, i: int, j: int) -> int:
    """Count z with d(x,z)=i and d(y,z)=j, checked constant over all (x,y)
    at distance h.

    Raises:
        ValueError: when no pair is at distance h, or when the count is not
            constant (the witness pairs and counts are in the message).
    """
    mask = dd.dist == h
    if not mask.any():
        raise ValueError(f"no pair of vertices at distance {h}")
    bi = (dd.dist == i).astype(np.int64)
    bj = (dd.dist == j).astype(np.int64)
    counts = bi @ bj.T  # entries bounded by n, far below int64 limits
    vals = counts[mask]
    first = int(vals[0])
    if not bool((vals == first).all()):
        pairs = np.argwhere(mask)
        base = tuple(int(t) for t in pairs[0])
        bad_idx = int(np.argmax(vals != first))
        bad = tuple(int(t) for t in pairs[bad_idx])
        raise ValueError(
            f"count not constant for (h,i,j)=({h},{i},{j}): "
            f"pair {base} gives {first}, pair {bad} gives {int(vals[bad_idx])}"
        )
    return first


def is_distance_regular(g: Graph, dd: DistanceData):
    """Brute-force distance-regularity check.

    Returns:
        (True, table) with table[h][i][j] the intersection numbers, or
        (False, witness) where witness = (h, i, j, pair_a, count_a, pair_b,
        count_b) for the lexicographically first failing triple.
    """
    diam = dd.diameter
    table = np.zeros((diam + 1, diam + 1, diam + 1), dtype=np.int64)
    cache: dict[tuple[int, int], np.ndarray] = {}
    masks = [dd.dist == h for h in range(diam + 1)]
    for h in range(diam + 1):
        mask = masks[h]
        pairs = None
        for i in range(diam + 1):
            for j in range(diam + 1):
                if (i, j) not in cache:
                    bi = masks[i].astype(np.int64)
                    bj = masks[j].astype(np.int64)
                    cache[(i, j)] = bi @ bj.T
                vals = cache[(i, j)][mask]
                first = int(vals[0])
                if not bool((vals == first).all()):
                    if pairs is None:
                        pairs = np.argwhere(mask)
                    bad_idx = int(np.argmax(vals != first))
                    witness = (
                        h,
                        i,
                        j,
                        tuple(int(t) for t in pairs[0]),
                        first,
                        tuple(int(t) for t in pairs[bad_idx]),
                        int(vals[bad_idx]),
                    )
                    return False, witness
                table[h, i, j] = first
    table.flags.writeable = False
    return True, table
