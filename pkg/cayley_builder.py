"""
Right Cayley digraphs Cay(T, C) of finite operation tables, their underlying
simple graphs, isomorphism with G(n, k), and the decisions of which G(n, k)
are group or monoid graphs.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from algebra import (AlgebraReport, OpTable, alpha_gamma_generators, analyze, cay1_monoid,
                     cyclic_group, desargues_M, direct_product, dodecahedron_M, element_order,
                     find_identity, invertibles, petersen_M, petersen_Mp, petersen_S,
                     petersen_Sp, presented_group_alpha_gamma)
from constants import Cay1Variant, ISOMORPHISM_VERTEX_BOUND
from core_classifier import classify_core
from gp_core import DomainError, GPParams, SimpleGraph, build_gp
from hom_engine import SearchBudget, VertexMap, iter_homomorphisms, refined_domains, verify_isomorphism
from utils import square_is, square_is_pm_k

__docformat__ = 'reStructuredText'

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Arc:
    source: int
    target: int
    color: int


@dataclass(frozen=True, eq=False)
class CayleyDigraph:
    """ one arc s -> s*c of color c for every element s and every c in the connection """
    table: OpTable
    connection: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.connection)) != len(self.connection):
            raise ValueError("connection elements must be distinct")
        if any(not 0 <= c < self.table.order for c in self.connection):
            raise ValueError("connection element outside the carrier")

    @property
    def order(self) -> int:
        return self.table.order

    def successor(self, s: int, c: int) -> int:
        return self.table.product(s, c)

    def arcs(self) -> list[Arc]:
        return [Arc(s, self.successor(s, c), c) for s in range(self.order) for c in self.connection]

    def loops(self) -> list[Arc]:
        return [arc for arc in self.arcs() if arc.source == arc.target]


@dataclass(frozen=True)
class MultiplicityReport:
    loops: int
    parallel_digons: int
    antiparallel_digons: int


@dataclass(frozen=True)
class RepresentationReport:
    associative: bool
    identity: Optional[int]
    generates: bool
    loopless: bool
    loop_count: int
    iso_target: Optional[tuple[int, int]]
    iso_witness: Optional[VertexMap]
    algebra: AlgebraReport

    @property
    def realizes_target(self) -> bool:
        return self.iso_witness is not None


@dataclass(frozen=True)
class Representation:
    """ a table, its connection set, the G(n, k) it should realize and an optional isomorphism hint """
    table: OpTable
    connection: tuple[int, ...]
    target: tuple[int, int]
    hint: Optional[tuple[int, ...]] = None


def build_cayley(T: OpTable, C: Iterable[int]) -> CayleyDigraph:
    return CayleyDigraph(T, tuple(int(c) for c in C))


def underlying_graph(D: CayleyDigraph) -> tuple[SimpleGraph, MultiplicityReport]:
    """
    Loops dropped, orientation forgotten, parallel edges merged. The report
    counts loops, ordered pairs joined by two or more arcs in the same
    direction, and pairs joined in both directions.
    """
    multiplicity: dict[tuple[int, int], int] = {}
    loops = 0
    for arc in D.arcs():
        if arc.source == arc.target:
            loops += 1
        else:
            key = (arc.source, arc.target)
            multiplicity[key] = multiplicity.get(key, 0) + 1
    parallel = sum(1 for count in multiplicity.values() if count >= 2)
    antiparallel = sum(1 for (s, t) in multiplicity if s < t and (t, s) in multiplicity)
    graph = SimpleGraph.from_edges(D.order, multiplicity.keys(), D.table.labels)
    return graph, MultiplicityReport(loops, parallel, antiparallel)


def generated_closure(T: OpTable, C: Iterable[int]) -> frozenset[int]:
    """
    <C>: the submonoid generated by C when T has an identity, otherwise the
    subsemigroup.
    """
    gens = sorted(set(C))
    seeds = set(gens)
    e = find_identity(T)
    if e is not None:
        seeds.add(e)
    seen = set(seeds)
    queue = deque(sorted(seeds))
    while queue:
        x = queue.popleft()
        for c in gens:
            y = T.product(x, c)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def generates(T: OpTable, C: Iterable[int]) -> bool:
    return len(generated_closure(T, C)) == T.order


def is_isomorphic(G: SimpleGraph, H: SimpleGraph, budget: Optional[SearchBudget] = None,
                  hint: Optional[Sequence[int]] = None,
                  bound: int = ISOMORPHISM_VERTEX_BOUND) -> Optional[VertexMap]:
    """
    An isomorphism G -> H or None. A hint that verifies is returned as is;
    otherwise backtracking over degree-refined candidates.

    :raises DomainError: when a search is needed above the vertex bound
    """
    if hint is not None and verify_isomorphism(G, H, hint):
        return VertexMap(tuple(hint), H.order, verified=True)
    if G.order != H.order or G.edge_count() != H.edge_count():
        return None
    if sorted(G.degree(v) for v in G.vertices) != sorted(H.degree(v) for v in H.vertices):
        return None
    if G.order > bound:
        raise DomainError(f"isomorphism search is limited to {bound} vertices, got {G.order}")
    domains = refined_domains(G, H)
    if any(not d for d in domains):
        return None
    return next(iter_homomorphisms(G, H, domains, budget, injective=True), None)


def is_group_graph(n: int, k: int) -> bool:
    GPParams(n, k)
    return square_is(n, k, 1)


def is_2gen_monoid_graph(n: int, k: int) -> bool:
    GPParams(n, k)
    return (n, k) == (5, 2) or square_is(n, k, 1) or square_is_pm_k(n, k)


def is_2conn_monoid_graph_restricted(n: int, k: int) -> Optional[bool]:
    """
    Monoid graph with a two-element connection set, with no generation
    hypothesis. Decided for gcd(n, k) = 1 and for odd n/gcd(n, k); None
    elsewhere.
    """
    params = GPParams(n, k)
    if params.d == 1:
        return (n, k) in ((5, 2), (10, 3)) or square_is(n, k, 1)
    if params.inner_len % 2 == 1:
        return (n, k) == (5, 2) or square_is(n, k, 1) or square_is_pm_k(n, k)
    return None


def loopless_semigroup_obstruction(n: int, k: int) -> bool:
    """
    A core without four-cycles that is not a group graph: every semigroup
    Cayley graph realizing it has loops.
    """
    return classify_core(n, k).is_core and n != 4 * k and not square_is(n, k, 1)


def verify_representation(T: OpTable, C: Iterable[int], n: int, k: int,
                          hint: Optional[Sequence[int]] = None,
                          budget: Optional[SearchBudget] = None) -> RepresentationReport:
    """
    Everything needed to confirm that Cay(T, C) realizes G(n, k). Failures
    are report fields; only an exhausted budget escapes as an exception.
    """
    connection = tuple(int(c) for c in C)
    D = build_cayley(T, connection)
    graph, census = underlying_graph(D)
    report = analyze(T, connection)
    witness = is_isomorphic(build_gp(GPParams(n, k)), graph, budget, hint)
    if witness is None:
        logger.warning("Cay(%s, %s) does not realize G(%d,%d)", T.name or "table", connection, n, k)
    return RepresentationReport(
        associative=report.associative,
        identity=report.identity,
        generates=generates(T, connection),
        loopless=census.loops == 0,
        loop_count=census.loops,
        iso_target=(n, k) if witness is not None else None,
        iso_witness=witness,
        algebra=report,
    )


def invertible_generator_witness(T: OpTable, C: Iterable[int]) -> Optional[tuple[int, int]]:
    """
    An invertible connection element g of order > 2 whose powers
    e, g, g^2, ... run around a cycle of the underlying graph.

    :raises DomainError: if T has no identity
    """
    e = find_identity(T)
    if e is None:
        raise DomainError("an identity is required")
    connection = tuple(int(c) for c in C)
    graph, _ = underlying_graph(build_cayley(T, connection))
    units = invertibles(T)
    for g in connection:
        if g not in units:
            continue
        order = element_order(T, g, e)
        if order <= 2:
            continue
        powers = [e]
        for _ in range(order - 1):
            powers.append(T.product(powers[-1], g))
        if all(graph.has_edge(powers[i], powers[(i + 1) % order]) for i in range(order)):
            return g, order
    logger.warning("no invertible connection element of order > 2 in %s", connection)
    return None


def kronecker_lift(T: OpTable, C: Iterable[int]) -> tuple[OpTable, tuple[int, ...]]:
    """
    T x Z2 with connection {(c, 1)}. For loopless Cay(T, C) the lifted
    underlying graph is the Kronecker cover of the original one.
    """
    return direct_product(T, cyclic_group(2)), tuple(2 * int(c) + 1 for c in C)


def group_hint(n: int) -> tuple[int, ...]:
    """ u_i -> (i,0), v_i -> (i,1) """
    return tuple(2 * i for i in range(n)) + tuple(2 * i + 1 for i in range(n))


def cay1_hint(n: int, k: int, variant: Cay1Variant = Cay1Variant.STANDARD) -> tuple[int, ...]:
    """ u_x -> x, v_x -> (x + s mod n/d, l_{x mod d}) with s = 1, -1 or 0 by variant """
    params = GPParams(n, k)
    d, g = params.d, params.inner_len
    shift = {Cay1Variant.STANDARD: 1, Cay1Variant.REVERSED: -1, Cay1Variant.LOOPED: 0}[variant]
    return tuple(range(n)) + tuple(n + ((x + shift) % g) * d + x % d for x in range(n))


def group_representation(n: int, k: int) -> Representation:
    GPParams(n, k)
    return Representation(presented_group_alpha_gamma(n, k), alpha_gamma_generators(), (n, k), group_hint(n))


def cay1_representation(n: int, k: int, variant: Cay1Variant = Cay1Variant.STANDARD) -> Representation:
    monoid, connection = cay1_monoid(n, k, variant)
    return Representation(monoid, connection, (n, k), cay1_hint(n, k, variant))


def representation_for(n: int, k: int) -> Optional[Representation]:
    """ the construction behind is_2gen_monoid_graph, or None when it is false """
    if square_is(n, k, 1):
        return group_representation(n, k)
    if square_is_pm_k(n, k):
        return cay1_representation(n, k)
    if (n, k) == (5, 2):
        return Representation(petersen_M(), (1, 6), (5, 2))
    return None


CONSTRUCTION_NAMES = (
    "petersen-s", "petersen-m", "petersen-sp", "petersen-mp", "dodecahedron",
    "desargues", "cay1", "cay1-rev", "cay1-loop", "group",
)

_FIXED = {
    "petersen-s": (petersen_S, (1, 6), (5, 2)),
    "petersen-m": (petersen_M, (1, 6), (5, 2)),
    "petersen-sp": (petersen_Sp, (0, 4, 8), (5, 2)),
    "petersen-mp": (petersen_Mp, (0, 4, 8), (5, 2)),
    "dodecahedron": (dodecahedron_M, (1, 11, 18), (10, 2)),
    # (1,1) and (6,0) in petersen_M x Z2
    "desargues": (desargues_M, (3, 12), (10, 3)),
}

_VARIANTS = {"cay1": Cay1Variant.STANDARD, "cay1-rev": Cay1Variant.REVERSED, "cay1-loop": Cay1Variant.LOOPED}


def named_construction(name: str, n: Optional[int] = None, k: Optional[int] = None) -> Representation:
    """
    :raises KeyError: for an unknown name
    :raises ValueError: when a family construction is missing n or k
    """
    if name in _FIXED:
        build, connection, target = _FIXED[name]
        return Representation(build(), connection, target)
    if name not in CONSTRUCTION_NAMES:
        raise KeyError(f"unknown construction {name!r}; valid names: {', '.join(CONSTRUCTION_NAMES)}")
    if n is None or k is None:
        raise ValueError(f"construction {name!r} needs n and k")
    if name == "group":
        return group_representation(n, k)
    return cay1_representation(n, k, _VARIANTS[name])
