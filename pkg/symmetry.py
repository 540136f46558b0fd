"""
Automorphisms of G(n, k): the rotation alpha, the reflection beta and the
inside-out map gamma, the closed-form transitivity and group-order
predicates, and brute-force Aut for checking them. Also color endomorphisms
of Cayley digraphs.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Optional, Sequence

import networkx as nx

from algebra import OpTable, find_identity
from constants import AUT_VERTEX_BOUND, EXCEPTIONAL_PAIRS
from gp_core import DomainError, GPParams, SimpleGraph, build_gp
from hom_engine import SearchBudget, VertexMap, iter_homomorphisms, refined_domains, verify_isomorphism
from utils import square_is, square_is_pm_one

# Avoid circular imports for typing.
if TYPE_CHECKING:
    from cayley_builder import CayleyDigraph

__docformat__ = 'reStructuredText'

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Permutation:
    """ A bijection of 0..size-1; automorphism_verified is set only after an edge check. """
    image: tuple[int, ...]
    automorphism_verified: bool = False

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError("not a bijection")

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(size)), True)

    @property
    def size(self) -> int:
        return len(self.image)

    def __getitem__(self, v: int) -> int:
        return self.image[v]

    def compose(self, inner: Permutation) -> Permutation:
        """ self after inner """
        return Permutation(tuple(self.image[x] for x in inner.image),
                           self.automorphism_verified and inner.automorphism_verified)

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for v, x in enumerate(self.image):
            inv[x] = v
        return Permutation(tuple(inv), self.automorphism_verified)

    def power(self, e: int) -> Permutation:
        result = Permutation.identity(self.size)
        base = self if e >= 0 else self.inverse()
        for _ in range(abs(e)):
            result = base.compose(result)
        return Permutation(result.image, self.automorphism_verified)

    def is_identity(self) -> bool:
        return all(v == x for v, x in enumerate(self.image))

    def order(self) -> int:
        """ :complexity: O(size * order) """
        current, steps = self, 1
        while not current.is_identity():
            current = self.compose(current)
            steps += 1
        return steps

    def to_vertex_map(self) -> VertexMap:
        return VertexMap(self.image, self.size, self.automorphism_verified)


def is_automorphism(graph: SimpleGraph, f: Permutation | VertexMap | Sequence[int]) -> bool:
    image = f.image if isinstance(f, (Permutation, VertexMap)) else tuple(f)
    return verify_isomorphism(graph, graph, image)


def _checked(graph: SimpleGraph, image: list[int]) -> Permutation:
    perm = Permutation(tuple(image))
    if not is_automorphism(graph, perm):
        raise DomainError("map is not an automorphism")
    return Permutation(perm.image, True)


def rotation(params: GPParams) -> Permutation:
    """ alpha: u_i -> u_{i+1}, v_i -> v_{i+1} """
    n = params.n
    image = [params.outer(i + 1) for i in range(n)] + [params.inner(i + 1) for i in range(n)]
    return _checked(build_gp(params), image)


def reflection(params: GPParams) -> Permutation:
    """ beta: u_i -> u_{-i}, v_i -> v_{-i} """
    n = params.n
    image = [params.outer(-i) for i in range(n)] + [params.inner(-i) for i in range(n)]
    return _checked(build_gp(params), image)


def inside_out(params: GPParams) -> VertexMap:
    """
    gamma: u_i -> v_{ki}, v_i -> u_{ki}, unverified.

    Only a bijection when gcd(n, k) = 1, so it comes back as a VertexMap;
    callers test it with is_automorphism.
    """
    n, k = params.n, params.k
    image = [params.inner(k * i) for i in range(n)] + [params.outer(k * i) for i in range(n)]
    return VertexMap(tuple(image), params.order)


def is_vertex_transitive(n: int, k: int) -> bool:
    GPParams(n, k)
    return (n, k) == (10, 2) or square_is_pm_one(n, k)


def expected_aut_order(n: int, k: int) -> Optional[int]:
    """
    |Aut(G(n, k))| from the generic presentations: 4n when k^2 = +-1 (mod n),
    else 2n. None for the exceptional pairs.
    """
    GPParams(n, k)
    if (n, k) in EXCEPTIONAL_PAIRS:
        return None
    if square_is(n, k, 1) or square_is(n, k, -1):
        return 4 * n
    return 2 * n


def aut_group_bruteforce(graph: SimpleGraph, budget: Optional[SearchBudget] = None,
                         bound: int = AUT_VERTEX_BOUND) -> list[Permutation]:
    """
    Every automorphism, found by the homomorphism kernel with injectivity
    switched on.

    :raises DomainError: above the vertex bound
    :raises BudgetExhausted: when the search runs out of budget
    """
    if graph.order > bound:
        raise DomainError(f"automorphism search is limited to {bound} vertices, got {graph.order}")
    domains = refined_domains(graph, graph)
    perms = [Permutation(m.image, True)
             for m in iter_homomorphisms(graph, graph, domains, budget, injective=True)]
    logger.debug("found %d automorphisms on %d vertices", len(perms), graph.order)
    return perms


def is_closed_group(perms: Iterable[Permutation]) -> bool:
    """ closed under composition and inverses, and contains the identity """
    elements = {p.image: p for p in perms}
    if not elements:
        return False
    size = len(next(iter(elements)))
    if tuple(range(size)) not in elements:
        return False
    for p in elements.values():
        if p.inverse().image not in elements:
            return False
        for q in elements.values():
            if p.compose(q).image not in elements:
                return False
    return True


def orbits(size: int, perms: Iterable[Permutation]) -> list[list[int]]:
    forest = nx.utils.UnionFind(range(size))
    for p in perms:
        for v, x in enumerate(p.image):
            forest.union(v, x)
    return sorted(sorted(part) for part in forest.to_sets())


def left_multiplication(T: OpTable, m: int) -> VertexMap:
    """ lambda_m: x -> m*x """
    return VertexMap(tuple(int(x) for x in T.table[m]), T.order)


def is_color_endomorphism(D: CayleyDigraph, f: VertexMap | Sequence[int]) -> bool:
    """ f(m)*c == f(m*c) for every element m and connection element c """
    image = f.image if isinstance(f, VertexMap) else tuple(f)
    if len(image) != D.order:
        return False
    return all(image[D.successor(m, c)] == D.successor(image[m], c)
               for m in range(D.order) for c in D.connection)


def color_endomorphisms(D: CayleyDigraph) -> list[VertexMap]:
    """
    All color endomorphisms, when the identity reaches every element along
    arcs. Such a map is fixed by where it sends the identity, so each
    candidate image of the identity is propagated and kept if consistent.

    :raises DomainError: without an identity, or when C does not generate
    """
    e = find_identity(D.table)
    if e is None:
        raise DomainError("color endomorphisms are enumerated only for monoids")
    order_of_visit = [e]
    seen = {e}
    queue = deque([e])
    while queue:
        s = queue.popleft()
        for c in D.connection:
            t = D.successor(s, c)
            if t not in seen:
                seen.add(t)
                order_of_visit.append(t)
                queue.append(t)
    if len(seen) != D.order:
        raise DomainError("the connection set does not generate the monoid")

    found = []
    for start in range(D.order):
        image: list[Optional[int]] = [None] * D.order
        image[e] = start
        for s in order_of_visit:
            for c in D.connection:
                t, expected = D.successor(s, c), D.successor(image[s], c)
                if image[t] is None:
                    image[t] = expected
        candidate = VertexMap(tuple(image), D.order)
        if is_color_endomorphism(D, candidate):
            found.append(candidate)
    return found
