"""
Exact backtracking search for graph homomorphisms.

One kernel serves every search in the package: homomorphisms, proper
endomorphisms (core test), endomorphisms through a fixed pair
(endomorphism-transitivity), retractions, and, with the injectivity flag,
isomorphisms and automorphisms.
"""
from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from constants import BUDGET_ENV_VAR, DEFAULT_NODE_BUDGET
from gp_core import SimpleGraph

__docformat__ = 'reStructuredText'

logger = logging.getLogger(__name__)


class BudgetExhausted(Exception):
    """ The search ran out of budget before it could decide. """

    def __init__(self, nodes: int, reason: str = "node cap") -> None:
        super().__init__(f"search budget exhausted ({reason}) after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class SearchBudget:
    node_cap: int = DEFAULT_NODE_BUDGET
    wall_clock: Optional[float] = None

    def __post_init__(self) -> None:
        if self.node_cap <= 0:
            raise ValueError(f"node cap must be positive, got {self.node_cap}")
        if self.wall_clock is not None and self.wall_clock <= 0:
            raise ValueError(f"wall-clock cap must be positive, got {self.wall_clock}")

    @classmethod
    def from_env(cls) -> SearchBudget:
        """
        Node cap from GP_ORACLE_BUDGET, else the default.
        :raises ValueError: on a malformed value
        """
        raw = os.environ.get(BUDGET_ENV_VAR)
        if raw is None or raw.strip() == "":
            return cls()
        try:
            cap = int(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}") from None
        return cls(node_cap=cap)


@dataclass(frozen=True)
class VertexMap:
    """ f(v) = image[v]; `verified` means edge preservation was checked. """
    image: tuple[int, ...]
    codomain_size: int
    verified: bool = False

    def __post_init__(self) -> None:
        if any(not 0 <= x < self.codomain_size for x in self.image):
            raise ValueError("image outside the codomain")

    @property
    def domain_size(self) -> int:
        return len(self.image)

    def __getitem__(self, v: int) -> int:
        return self.image[v]

    def __len__(self) -> int:
        return len(self.image)

    def image_set(self) -> frozenset[int]:
        return frozenset(self.image)

    def is_injective(self) -> bool:
        return len(self.image_set()) == len(self.image)

    def compose(self, inner: VertexMap) -> VertexMap:
        """ self after inner: v -> self[inner[v]] """
        if inner.codomain_size != self.domain_size:
            raise ValueError("maps do not compose")
        return VertexMap(tuple(self.image[x] for x in inner.image), self.codomain_size,
                         self.verified and inner.verified)

    def to_json(self) -> list[int]:
        return list(self.image)

    @classmethod
    def identity(cls, size: int) -> VertexMap:
        return cls(tuple(range(size)), size, True)


def verify_homomorphism(G: SimpleGraph, H: SimpleGraph, f: VertexMap | Sequence[int]) -> bool:
    image = f.image if isinstance(f, VertexMap) else tuple(f)
    if len(image) != G.order or any(not 0 <= x < H.order for x in image):
        return False
    return all(H.has_edge(image[u], image[v]) for u, v in G.edges())


def verify_isomorphism(G: SimpleGraph, H: SimpleGraph, f: VertexMap | Sequence[int]) -> bool:
    image = f.image if isinstance(f, VertexMap) else tuple(f)
    return (G.order == H.order and G.edge_count() == H.edge_count()
            and len(set(image)) == len(image) and verify_homomorphism(G, H, image))


def _signatures(graph: SimpleGraph) -> list[tuple[int, tuple[int, ...]]]:
    return [(graph.degree(v), tuple(sorted(graph.degree(w) for w in graph.neighbors(v))))
            for v in graph.vertices]


def refined_domains(G: SimpleGraph, H: SimpleGraph) -> list[frozenset[int]]:
    """
    Candidate sets for a bijective search: v may only go to vertices of H
    with the same degree and the same sorted neighbour degrees.
    """
    by_signature: dict[tuple, set[int]] = {}
    for w, sig in enumerate(_signatures(H)):
        by_signature.setdefault(sig, set()).add(w)
    return [frozenset(by_signature.get(sig, ())) for sig in _signatures(G)]


class _Search:
    """
    Forward-checking backtracking over candidate sets.

    Assigning v -> x narrows every unassigned neighbour of v to the
    neighbours of x; with `injective` it also strikes x from every other
    candidate set. The next variable has the most assigned neighbours,
    then the fewest candidates, then the smallest id.
    """

    def __init__(self, G: SimpleGraph, H: SimpleGraph, domains: Sequence[Iterable[int]],
                 budget: SearchBudget, injective: bool = False) -> None:
        self.adj = G.adjacency
        self.target_adj = H.adjacency
        self.domains = [set(d) for d in domains]
        self.assignment: list[Optional[int]] = [None] * G.order
        self.assigned_neighbors = [0] * G.order
        self.injective = injective
        self.budget = budget
        self.nodes = 0
        self.deadline = None if budget.wall_clock is None else time.monotonic() + budget.wall_clock

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_cap:
            raise BudgetExhausted(self.nodes)
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise BudgetExhausted(self.nodes, "wall clock")

    def _pick(self) -> Optional[int]:
        best, best_key = None, None
        for v, x in enumerate(self.assignment):
            if x is None:
                key = (-self.assigned_neighbors[v], len(self.domains[v]), v)
                if best_key is None or key < best_key:
                    best, best_key = v, key
        return best

    def _assign(self, v: int, x: int) -> tuple[bool, list[tuple[int, set[int]]]]:
        """ returns (consistent, trail of replaced candidate sets) """
        self.assignment[v] = x
        trail = []
        ok = True
        for w in self.adj[v]:
            self.assigned_neighbors[w] += 1
            if self.assignment[w] is None:
                trail.append((w, self.domains[w]))
                self.domains[w] = self.domains[w] & self.target_adj[x]
                ok = ok and bool(self.domains[w])
        if self.injective and ok:
            for u, y in enumerate(self.assignment):
                if y is None and x in self.domains[u]:
                    trail.append((u, self.domains[u]))
                    self.domains[u] = self.domains[u] - {x}
                    if not self.domains[u]:
                        ok = False
                        break
        return ok, trail

    def _undo(self, v: int, trail: list[tuple[int, set[int]]]) -> None:
        for w, old in reversed(trail):
            self.domains[w] = old
        for w in self.adj[v]:
            self.assigned_neighbors[w] -= 1
        self.assignment[v] = None

    def solutions(self) -> Iterator[tuple[int, ...]]:
        v = self._pick()
        if v is None:
            yield tuple(self.assignment)
            return
        for x in sorted(self.domains[v]):
            self._tick()
            ok, trail = self._assign(v, x)
            if ok:
                yield from self.solutions()
            self._undo(v, trail)


def iter_homomorphisms(G: SimpleGraph, H: SimpleGraph,
                       domains: Optional[Sequence[Iterable[int]]] = None,
                       budget: Optional[SearchBudget] = None,
                       injective: bool = False) -> Iterator[VertexMap]:
    """
    Every homomorphism G -> H with f(v) in domains[v], in lexicographic
    order of the search.

    :raises BudgetExhausted: when the budget runs out
    """
    if budget is None:
        budget = SearchBudget.from_env()
    if domains is None:
        domains = [range(H.order)] * G.order
    if len(domains) != G.order:
        raise ValueError("one candidate set per vertex expected")
    search = _Search(G, H, domains, budget, injective)
    try:
        for image in search.solutions():
            yield VertexMap(image, H.order, verified=True)
    finally:
        logger.debug("search over %d -> %d vertices expanded %d nodes", G.order, H.order, search.nodes)


def _first(maps: Iterator[VertexMap]) -> Optional[VertexMap]:
    return next(maps, None)


def find_homomorphism(G: SimpleGraph, H: SimpleGraph,
                      partial: Optional[Mapping[int, int]] = None,
                      budget: Optional[SearchBudget] = None) -> Optional[VertexMap]:
    """
    A homomorphism extending `partial`, or None when none exists.

    :raises BudgetExhausted: when the search cannot decide within budget
    """
    domains = [set(range(H.order)) for _ in G.vertices]
    for v, x in (partial or {}).items():
        domains[v] = {x}
    return _first(iter_homomorphisms(G, H, domains, budget))


def find_proper_endomorphism(G: SimpleGraph, budget: Optional[SearchBudget] = None,
                             vertices: Optional[Iterable[int]] = None) -> Optional[VertexMap]:
    """
    An endomorphism missing some vertex w, trying each w in `vertices`
    (default: all). Restricting `vertices` to one vertex per orbit of a
    known automorphism group keeps the answer exact.
    """
    everything = frozenset(G.vertices)
    for w in (G.vertices if vertices is None else vertices):
        domains = [everything - {w}] * G.order
        found = _first(iter_homomorphisms(G, G, domains, budget))
        if found is not None:
            logger.debug("endomorphism avoiding %s found", G.label(w))
            return found
    return None


def is_core_oracle(G: SimpleGraph, budget: Optional[SearchBudget] = None,
                   vertices: Optional[Iterable[int]] = None) -> bool:
    return find_proper_endomorphism(G, budget, vertices) is None


def is_endo_transitive_oracle(G: SimpleGraph, budget: Optional[SearchBudget] = None,
                              sources: Optional[Iterable[int]] = None) -> bool:
    """
    For every u in `sources` (default: all) and every v, some endomorphism
    sends u to v.
    """
    for u in (G.vertices if sources is None else sources):
        for v in G.vertices:
            if find_homomorphism(G, G, {u: v}, budget) is None:
                logger.debug("no endomorphism sends %s to %s", G.label(u), G.label(v))
                return False
    return True


def verify_retraction(G: SimpleGraph, f: VertexMap, target_vertices: Iterable[int]) -> bool:
    target = frozenset(target_vertices)
    if not target <= frozenset(G.vertices):
        raise ValueError("target is not a vertex subset of G")
    return (verify_homomorphism(G, G, f)
            and f.image_set() <= target
            and all(f[x] == x for x in target))


def find_retraction(G: SimpleGraph, target_vertices: Iterable[int],
                    budget: Optional[SearchBudget] = None) -> Optional[VertexMap]:
    target = frozenset(target_vertices)
    domains = [frozenset({v}) if v in target else target for v in G.vertices]
    return _first(iter_homomorphisms(G, G, domains, budget))


def image_is_retract_check(G: SimpleGraph, f: VertexMap,
                           budget: Optional[SearchBudget] = None) -> bool:
    """
    Whether the subgraph induced by the image of the endomorphism f is a
    retract of G.

    :raises ValueError: if f is not an endomorphism of G
    """
    if not verify_homomorphism(G, G, f):
        raise ValueError("not an endomorphism")
    return find_retraction(G, f.image_set(), budget) is not None
