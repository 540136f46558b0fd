"""
Generalized Petersen graphs G(n, k) and the cycle metrics the rest of the
package leans on.

Vertex ids are fixed: outer vertex u_i is id i, inner vertex v_i is id n + i.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence

import networkx as nx

from constants import Side, WITNESS_ENUMERATION_BOUND
from data_structures.linked_stack import LinkedStack

__docformat__ = 'reStructuredText'

logger = logging.getLogger(__name__)


class DomainError(ValueError):
    pass


class ParameterError(DomainError):
    pass


class NoOddCycleError(DomainError):
    pass


@dataclass(frozen=True)
class GPVertex:
    side: Side
    index: int

    def __str__(self) -> str:
        return f"{'u' if self.side is Side.OUTER else 'v'}{self.index}"


@dataclass(frozen=True)
class GPParams:
    """
    The pair (n, k) with 3 <= n and 0 < k < n/2.

    :raises ParameterError: when the pair is outside that window
    """
    n: int
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not isinstance(self.k, int):
            raise ParameterError(f"n and k must be integers, got ({self.n!r}, {self.k!r})")
        if self.n < 3:
            raise ParameterError(f"n must be at least 3, got {self.n}")
        if not 0 < self.k or 2 * self.k >= self.n:
            raise ParameterError(f"k must satisfy 0 < k < n/2, got (n, k) = ({self.n}, {self.k})")

    @property
    def d(self) -> int:
        return gcd(self.n, self.k)

    @property
    def inner_len(self) -> int:
        return self.n // self.d

    @property
    def order(self) -> int:
        return 2 * self.n

    def outer(self, i: int) -> int:
        return i % self.n

    def inner(self, i: int) -> int:
        return self.n + i % self.n

    def side(self, vid: int) -> Side:
        return Side.OUTER if vid < self.n else Side.INNER

    def vertex(self, vid: int) -> GPVertex:
        if not 0 <= vid < self.order:
            raise KeyError(vid)
        return GPVertex(self.side(vid), vid % self.n)

    def is_spoke(self, a: int, b: int) -> bool:
        return self.side(a) is not self.side(b)

    def adjacent(self, a: int, b: int) -> bool:
        """
        Edge test from the definition, without building the graph.
        :complexity: O(1)
        """
        n = self.n
        step = (b - a) % n
        if self.side(a) is not self.side(b):
            return step == 0
        if self.side(a) is Side.OUTER:
            return step in (1, n - 1)
        return step in (self.k, n - self.k)


@dataclass(frozen=True)
class SimpleGraph:
    """
    Undirected loop-free graph on ids 0..order-1.

    adjacency[v] is the neighbour set of v; labels are display names only.
    """
    adjacency: tuple[frozenset[int], ...]
    labels: Optional[tuple[str, ...]] = None
    params: Optional[GPParams] = None

    def __post_init__(self) -> None:
        order = len(self.adjacency)
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise ValueError(f"loop at vertex {v}")
            for w in nbrs:
                if not 0 <= w < order or v not in self.adjacency[w]:
                    raise ValueError(f"adjacency is not symmetric at {{{v}, {w}}}")
        if self.labels is not None and len(self.labels) != order:
            raise ValueError("one label per vertex expected")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]],
                   labels: Optional[Sequence[str]] = None,
                   params: Optional[GPParams] = None) -> SimpleGraph:
        adjacency = [set() for _ in range(order)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(tuple(frozenset(a) for a in adjacency),
                   None if labels is None else tuple(labels), params)

    @property
    def order(self) -> int:
        return len(self.adjacency)

    @property
    def vertices(self) -> range:
        return range(self.order)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        """ (u, v) with u < v, sorted lexicographically """
        return sorted((u, v) for u in self.vertices for v in self.adjacency[u] if u < v)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def label(self, v: int) -> str:
        return str(v) if self.labels is None else self.labels[v]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges())
        return g


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]
    spoke_count: int
    uses_inner: bool
    uses_outer: bool

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def build_gp(params: GPParams) -> SimpleGraph:
    """
    Outer rim u_i u_{i+1}, inner edges v_i v_{i+k}, spokes u_i v_i.
    :complexity: O(n)
    """
    n, k = params.n, params.k
    edges = []
    for i in range(n):
        edges.append((params.outer(i), params.outer(i + 1)))
        edges.append((params.inner(i), params.inner(i + k)))
        edges.append((params.outer(i), params.inner(i)))
    labels = [str(params.vertex(v)) for v in range(params.order)]
    return SimpleGraph.from_edges(params.order, edges, labels, params)


def generalized_prism(ell: int, m: int) -> SimpleGraph:
    """
    Two ell-cycles joined by ell disjoint paths of length m.
    z_{i,j} has id j*ell + i, so m = 1 reproduces the ids of G(ell, 1).

    :raises ParameterError: if ell < 3 or m < 1
    """
    if ell < 3:
        raise ParameterError(f"cycles need at least 3 vertices, got ell = {ell}")
    if m < 1:
        raise ParameterError(f"paths need length at least 1, got m = {m}")

    def z(i, j):
        return j * ell + i % ell

    edges = []
    for i in range(ell):
        edges.append((z(i, 0), z(i + 1, 0)))
        edges.append((z(i, m), z(i + 1, m)))
        for j in range(m):
            edges.append((z(i, j), z(i, j + 1)))
    labels = [f"z{i}.{j}" for j in range(m + 1) for i in range(ell)]
    return SimpleGraph.from_edges(ell * (m + 1), edges, labels)


def inner_components(params: GPParams) -> list[list[int]]:
    """ Vertex sets of the inner cycles, each sorted, ordered by smallest id. """
    forest = nx.utils.UnionFind(params.inner(i) for i in range(params.n))
    for i in range(params.n):
        forest.union(params.inner(i), params.inner(i + params.k))
    return sorted(sorted(part) for part in forest.to_sets())


def is_bipartite_gp(params: GPParams) -> bool:
    return params.n % 2 == 0 and params.k % 2 == 1


def bfs_distances(graph: SimpleGraph, source: int) -> list[Optional[int]]:
    dist: list[Optional[int]] = [None] * graph.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in graph.neighbors(v):
            if dist[w] is None:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def odd_girth(graph: SimpleGraph) -> Optional[int]:
    """
    Length of a shortest odd cycle, None when the graph is bipartite.

    Every BFS edge between two vertices on the same layer closes an odd walk
    of length 2*depth + 1; a shortest odd cycle shows up this way from any
    of its own vertices.
    :complexity: O(V * (V + E))
    """
    best = None
    for root in graph.vertices:
        dist = bfs_distances(graph, root)
        for u, v in graph.edges():
            if dist[u] is not None and dist[u] == dist[v]:
                length = 2 * dist[u] + 1
                if best is None or length < best:
                    best = length
    return best


def has_four_cycle(graph: SimpleGraph) -> bool:
    for u in graph.vertices:
        for v in range(u + 1, graph.order):
            if len(graph.neighbors(u) & graph.neighbors(v)) >= 2:
                return True
    return False


def enumerate_cycles(graph: SimpleGraph, length: int) -> list[tuple[int, ...]]:
    """
    All cycles with exactly `length` vertices, each listed once: it starts
    at its smallest vertex and its second vertex is smaller than its last.

    Iterative DFS; a branch is cut once the walk back to the start can no
    longer fit in the remaining edges.
    """
    found = []
    for start in graph.vertices:
        dist = bfs_distances(graph, start)
        frames: LinkedStack[tuple[int, ...]] = LinkedStack()
        frames.push((start,))
        while not frames.is_empty():
            path = frames.pop()
            if len(path) == length:
                if graph.has_edge(path[-1], start) and path[1] < path[-1]:
                    found.append(path)
                continue
            remaining = length - len(path)
            frames.push_all(path + (w,) for w in sorted(graph.neighbors(path[-1]), reverse=True)
                            if w > start and w not in path and dist[w] is not None and dist[w] <= remaining)
    return sorted(found)


def make_cycle_witness(params: GPParams, sequence: Sequence[int]) -> CycleWitness:
    """
    :raises ValueError: if the sequence is not a cycle of G(n, k)
    """
    vs = tuple(sequence)
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise ValueError(f"not a cycle: {vs}")
    spokes = 0
    for i, a in enumerate(vs):
        b = vs[(i + 1) % len(vs)]
        if not params.adjacent(a, b):
            raise ValueError(f"{params.vertex(a)} and {params.vertex(b)} are not adjacent")
        spokes += params.is_spoke(a, b)
    return CycleWitness(
        vertices=vs,
        spoke_count=spokes,
        uses_inner=any(params.side(v) is Side.INNER for v in vs),
        uses_outer=any(params.side(v) is Side.OUTER for v in vs),
    )


def min_odd_cycle_witnesses(params: GPParams,
                            bound: int = WITNESS_ENUMERATION_BOUND) -> list[CycleWitness]:
    """
    Every cycle of G(n, k) whose length is the odd girth.

    :raises NoOddCycleError: for bipartite G(n, k)
    :raises DomainError: if n exceeds the enumeration bound
    """
    if is_bipartite_gp(params):
        raise NoOddCycleError(f"G({params.n},{params.k}) is bipartite: no odd cycles")
    if params.n > bound:
        raise DomainError(f"witness enumeration is limited to n <= {bound}, got n = {params.n}")
    graph = build_gp(params)
    girth = odd_girth(graph)
    cycles = enumerate_cycles(graph, girth)
    logger.debug("G(%d,%d): %d cycles of odd girth %d", params.n, params.k, len(cycles), girth)
    return [make_cycle_witness(params, c) for c in cycles]


def kronecker_cover(graph: SimpleGraph) -> SimpleGraph:
    """ Tensor product with K2: (v, i) has id v + i*|V|; edges {(u,0),(v,1)}. """
    size = graph.order
    edges = []
    for u, v in graph.edges():
        edges.append((u, v + size))
        edges.append((v, u + size))
    labels = [f"({graph.label(v)},{i})" for i in (0, 1) for v in graph.vertices]
    return SimpleGraph.from_edges(2 * size, edges, labels)


def kronecker_projection(graph: SimpleGraph) -> list[int]:
    """ (v, i) -> v, as an id list over the cover's vertices """
    return [v % graph.order for v in range(2 * graph.order)]


def is_covering_map(cover: SimpleGraph, base: SimpleGraph, mapping: Sequence[int]) -> bool:
    """
    Surjective and a bijection from each neighbourhood N(v) onto N(mapping[v]).
    """
    if len(mapping) != cover.order or any(not 0 <= x < base.order for x in mapping):
        return False
    if set(mapping) != set(base.vertices):
        return False
    for v in cover.vertices:
        images = [mapping[w] for w in cover.neighbors(v)]
        if len(set(images)) != len(images) or set(images) != base.neighbors(mapping[v]):
            return False
    return True
