"""
Closed-form core classification of G(n, k), the explicit retraction onto an
inner cycle when G(n, k) is not a core, and the prism folding map.

With d = gcd(n, k) and a the unique integer in (0, n/d) with a*k = d (mod n),
a non-bipartite G(n, k) is a core exactly when
    c1: n/d is even, or
    c2: a + d is even and a >= d + 2, or
    c3: a + d is odd and a + d + 2 <= n/d.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from constants import CoreReason, CoreStatus, NotCoreCase
from gp_core import (CycleWitness, DomainError, GPParams, build_gp,
                     generalized_prism, is_bipartite_gp, make_cycle_witness,
                     min_odd_cycle_witnesses)
from hom_engine import VertexMap, verify_homomorphism, verify_retraction
from symmetry import is_vertex_transitive
from utils import mod_inverse

__docformat__ = 'reStructuredText'

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoreParams:
    d: int
    a: int
    g_inner: int


@dataclass(frozen=True)
class CoreVerdict:
    status: CoreStatus
    reason: Optional[CoreReason]
    case: Optional[NotCoreCase]
    d: int
    a: int

    @property
    def is_core(self) -> bool:
        return self.status is CoreStatus.CORE


def compute_a(n: int, k: int) -> int:
    """
    The unique 0 < a < n/d with a*k = d (mod n), as (k/d)^-1 mod n/d.
    :complexity: O(log n)
    """
    params = GPParams(n, k)
    d, g = params.d, params.inner_len
    a = mod_inverse(k // d, g)
    if not (0 < a < g and (a * k - d) % n == 0):
        raise DomainError(f"no a in (0, {g}) with a*k = d (mod n) for (n, k) = ({n}, {k})")
    return a


def core_params(n: int, k: int) -> CoreParams:
    params = GPParams(n, k)
    return CoreParams(d=params.d, a=compute_a(n, k), g_inner=params.inner_len)


def classify_core(n: int, k: int) -> CoreVerdict:
    cp = core_params(n, k)
    d, a, g = cp.d, cp.a, cp.g_inner
    if is_bipartite_gp(GPParams(n, k)):
        return CoreVerdict(CoreStatus.BIPARTITE, None, None, d, a)
    if g % 2 == 0:
        return CoreVerdict(CoreStatus.CORE, CoreReason.C1, None, d, a)
    if (a + d) % 2 == 0:
        if a >= d + 2:
            return CoreVerdict(CoreStatus.CORE, CoreReason.C2, None, d, a)
        return CoreVerdict(CoreStatus.NOT_CORE, None, NotCoreCase.A_EVEN_SMALL, d, a)
    if a + d + 2 <= g:
        return CoreVerdict(CoreStatus.CORE, CoreReason.C3, None, d, a)
    return CoreVerdict(CoreStatus.NOT_CORE, None, NotCoreCase.A_ODD_LARGE, d, a)


def has_spoked_min_odd_cycle(n: int, k: int) -> bool:
    """
    Whether some shortest odd cycle of G(n, k) crosses a spoke.
    :raises NoOddCycleError: for bipartite G(n, k)
    """
    return any(w.spoke_count >= 1 for w in min_odd_cycle_witnesses(GPParams(n, k)))


def core_witness_cycle(n: int, k: int) -> Optional[CycleWitness]:
    """
    The odd cycle through two spokes that certifies case c2 or c3:

    c2: v_d = v_{ak}, v_{(a+1)k}, ..., v_{(n/d)k} = v_0, u_0, u_1, ..., u_d
        (length n/d - a + d + 2)
    c3: v_0, v_k, ..., v_{ak} = v_d, u_d, u_{d-1}, ..., u_0
        (length a + d + 2)

    None for the other verdicts.
    """
    params = GPParams(n, k)
    verdict = classify_core(n, k)
    d, a, g = verdict.d, verdict.a, params.inner_len
    if verdict.reason is CoreReason.C2:
        inner = [params.inner(j * k) for j in range(a, g + 1)]
        outer = [params.outer(i) for i in range(0, d + 1)]
    elif verdict.reason is CoreReason.C3:
        inner = [params.inner(j * k) for j in range(0, a + 1)]
        outer = [params.outer(i) for i in range(d, -1, -1)]
    else:
        return None
    return make_cycle_witness(params, inner + outer)


def retraction_target(n: int, k: int) -> list[int]:
    """ the inner cycle through v_0: v_0, v_k, v_2k, ... """
    params = GPParams(n, k)
    return [params.inner(j * k) for j in range(params.inner_len)]


def _retraction_images(n: int, d: int, k: int, a: int) -> list[int]:
    """
    The folding onto the inner cycle through v_0 for a + d even, a <= d.
    With i = q*d + r, u_i goes to
        v_{qd + (r+1)k}   if r < a
        v_{(q+1)d + k}    if a <= r < d and r = a (mod 2)
        v_{(q+1)d}        if a < r < d and r != a (mod 2)
    and v_i goes to v_{l-k} where u_i goes to v_l.
    """
    outer_image = []
    for i in range(n):
        q, r = divmod(i, d)
        if r < a:
            l = q * d + (r + 1) * k
        elif (r - a) % 2 == 0:
            l = (q + 1) * d + k
        else:
            l = (q + 1) * d
        outer_image.append(l % n)
    return [n + l for l in outer_image] + [n + (l - k) % n for l in outer_image]


def build_retraction(n: int, k: int) -> VertexMap:
    """
    Verified retraction of G(n, k) onto the inner cycle through v_0.

    When a + d is odd the same formula runs with k' = n - k and a' = n/d - a;
    G(n, n - k) has the same edge set.

    :raises DomainError: if G(n, k) is a core or bipartite
    """
    verdict = classify_core(n, k)
    if verdict.status is not CoreStatus.NOT_CORE:
        raise DomainError(f"G({n},{k}) is {verdict.status.value}: no retraction onto an inner cycle")
    params = GPParams(n, k)
    d, g = params.d, params.inner_len
    if verdict.case is NotCoreCase.A_EVEN_SMALL:
        step, a = k, verdict.a
    else:
        step, a = n - k, g - verdict.a
        if not 0 < a < g or (a * step - d) % n != 0:
            raise DomainError(f"a' = {a} does not satisfy a'k' = d (mod n) for k' = {step}")
        logger.debug("G(%d,%d): folding with k' = %d, a' = %d", n, k, step, a)
    graph = build_gp(params)
    f = VertexMap(tuple(_retraction_images(n, d, step, a)), graph.order)
    if not verify_retraction(graph, f, retraction_target(n, k)):
        raise DomainError(f"folding map for G({n},{k}) failed verification")
    return VertexMap(f.image, f.codomain_size, verified=True)


def prism_endomorphism(ell: int, m: int = 1) -> VertexMap:
    """ z_{i,j} -> x_{(i+j) mod ell}: folds the prism onto its first cycle """
    graph = generalized_prism(ell, m)
    image = tuple((i + j) % ell for j in range(m + 1) for i in range(ell))
    if not verify_homomorphism(graph, graph, image):
        raise DomainError(f"prism folding failed verification for ell={ell}, m={m}")
    return VertexMap(image, graph.order, verified=True)


def is_endomorphism_transitive(n: int, k: int) -> bool:
    return is_vertex_transitive(n, k) or is_bipartite_gp(GPParams(n, k))

