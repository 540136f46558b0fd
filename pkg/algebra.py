"""
Finite binary operations as numpy tables, their structural predicates, the
two semigroup extension constructions, and the concrete monoids whose
Cayley graphs are generalized Petersen graphs.

Elements are the ids 0..m-1; table[a, b] is the product a*b. Pairs (x, y)
from a product of carriers X and Y get the id x*|Y| + y.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from constants import Cay1Variant
from gp_core import DomainError, GPParams
from utils import square_is, square_is_pm_k

__docformat__ = 'reStructuredText'

logger = logging.getLogger(__name__)


class PreconditionError(DomainError):
    pass


@dataclass(frozen=True, eq=False)
class OpTable:
    """
    An order-m operation table. The array is copied and made read-only.

    :raises ValueError: if the table is not square, has a non-integer entry,
        or an entry leaves 0..m-1
    """
    table: np.ndarray
    labels: Optional[tuple[str, ...]] = None
    name: str = ""

    def __post_init__(self) -> None:
        raw = np.asarray(self.table)
        if raw.size and raw.dtype.kind not in "iu":
            raise ValueError(f"operation table entries must be integers, got dtype {raw.dtype}")
        arr = raw.astype(np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError(f"operation table must be a non-empty square, got shape {arr.shape}")
        if arr.min() < 0 or arr.max() >= arr.shape[0]:
            raise ValueError("operation table is not closed")
        arr.setflags(write=False)
        object.__setattr__(self, "table", arr)
        if self.labels is not None:
            if len(self.labels) != arr.shape[0]:
                raise ValueError("one label per element expected")
            object.__setattr__(self, "labels", tuple(str(l) for l in self.labels))

    @property
    def order(self) -> int:
        return self.table.shape[0]

    @property
    def elements(self) -> range:
        return range(self.order)

    def product(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def label(self, x: int) -> str:
        return str(x) if self.labels is None else self.labels[x]

    def to_lists(self) -> list[list[int]]:
        return self.table.tolist()

    def same_table(self, other: OpTable) -> bool:
        return np.array_equal(self.table, other.table)


@dataclass(frozen=True)
class AlgebraReport:
    associative: bool
    identity: Optional[int]
    is_group: bool
    is_monoid: bool
    idempotents: frozenset[int]
    idempotents_closed: bool
    completely_regular: bool
    is_orthogroup: bool


def _right_closure(T: OpTable, generators: Iterable[int]) -> set[int]:
    """ everything reachable from the generators by right multiplication by a generator """
    gens = sorted(set(generators))
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = T.product(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def _triple_products(T: OpTable) -> tuple[np.ndarray, np.ndarray]:
    """ ((ab)c, a(bc)) indexed [a, b, c] """
    t = T.table
    idx = np.arange(T.order)
    return t[t], t[idx[:, None, None], t[None, :, :]]


def is_associative(T: OpTable, generators: Optional[Iterable[int]] = None) -> bool:
    """
    With generators that generate T, Light's test: (xg)y == x(gy) for every
    generator g. Otherwise every triple is compared.
    :complexity: O(m^2 |generators|) or O(m^3)
    """
    t = T.table
    if generators is not None:
        gens = sorted(set(generators))
        if gens and len(_right_closure(T, gens)) == T.order:
            return all(np.array_equal(t[t[:, g], :], t[:, t[g, :]]) for g in gens)
        logger.debug("generators do not generate %s; scanning all triples", T.name or "table")
    left, right = _triple_products(T)
    return np.array_equal(left, right)


def associativity_witness(T: OpTable) -> Optional[tuple[int, int, int]]:
    """ the first triple with (ab)c != a(bc), or None """
    left, right = _triple_products(T)
    bad = np.argwhere(left != right)
    if bad.size == 0:
        return None
    a, b, c = bad[0]
    return int(a), int(b), int(c)


def find_identity(T: OpTable) -> Optional[int]:
    """ the two-sided identity; a one-sided one does not count """
    t = T.table
    idx = np.arange(T.order)
    left = np.all(t == idx[None, :], axis=1)
    right = np.all(t == idx[:, None], axis=0)
    found = np.flatnonzero(left & right)
    return int(found[0]) if found.size else None


def invertibles(T: OpTable) -> frozenset[int]:
    e = find_identity(T)
    if e is None:
        return frozenset()
    t = T.table
    units = np.any((t == e) & (t.T == e), axis=1)
    return frozenset(int(x) for x in np.flatnonzero(units))


def element_order(T: OpTable, g: int, identity: Optional[int] = None) -> int:
    """
    Least r >= 1 with g^r = e.

    :raises DomainError: without an identity, or if g is not invertible
    """
    e = find_identity(T) if identity is None else identity
    if e is None:
        raise DomainError("element order needs an identity")
    if g not in invertibles(T):
        raise DomainError(f"{T.label(g)} is not invertible")
    power, r = g, 1
    while power != e:
        power = T.product(power, g)
        r += 1
    return r


def idempotents(T: OpTable) -> frozenset[int]:
    idx = np.arange(T.order)
    return frozenset(int(x) for x in np.flatnonzero(np.diag(T.table) == idx))


def idempotents_closed(T: OpTable) -> bool:
    ids = np.array(sorted(idempotents(T)), dtype=np.int64)
    return bool(np.isin(T.table[np.ix_(ids, ids)], ids).all())


def is_completely_regular(T: OpTable) -> bool:
    """ every a has some x with axa = a, xax = x and ax = xa """
    t = T.table
    idx = np.arange(T.order)
    for a in idx:
        ax, xa = t[a, :], t[:, a]
        ok = (t[ax, a] == a) & (t[xa, idx] == idx) & (ax == xa)
        if not ok.any():
            return False
    return True


def analyze(T: OpTable, generators: Optional[Iterable[int]] = None) -> AlgebraReport:
    associative = is_associative(T, generators)
    e = find_identity(T)
    is_monoid = associative and e is not None
    is_group = is_monoid and len(invertibles(T)) == T.order
    closed = idempotents_closed(T)
    regular = is_completely_regular(T)
    return AlgebraReport(
        associative=associative,
        identity=e,
        is_group=is_group,
        is_monoid=is_monoid,
        idempotents=idempotents(T),
        idempotents_closed=closed,
        completely_regular=regular,
        is_orthogroup=associative and regular and closed,
    )


def is_orthogroup(T: OpTable) -> bool:
    return analyze(T).is_orthogroup


# constructions


def cyclic_group(n: int) -> OpTable:
    idx = np.arange(n)
    return OpTable(np.add.outer(idx, idx) % n, tuple(str(i) for i in range(n)), f"Z{n}")


def dihedral_group(n: int) -> OpTable:
    """
    Order 2n on Z_{2n}: a*b = a + (-1)^a b. The even elements are the
    rotations, the odd ones reflections.
    """
    m = 2 * n
    idx = np.arange(m)
    sign = np.where(idx % 2 == 0, 1, -1)
    return OpTable((idx[:, None] + sign[:, None] * idx[None, :]) % m,
                   tuple(str(i) for i in range(m)), f"D{n}")


def null_semigroup(size: int, zero_id: int, first_label: int = 0) -> OpTable:
    """ every product is zero_id; element i is labelled first_label + i """
    if not 0 <= zero_id < size:
        raise PreconditionError(f"zero {zero_id} outside 0..{size - 1}")
    labels = tuple(str(first_label + i) for i in range(size))
    return OpTable(np.full((size, size), zero_id), labels, f"N{size}")


def left_zero_band(size: int) -> OpTable:
    """ l_i * l_j = l_i """
    idx = np.arange(size)
    return OpTable(np.repeat(idx[:, None], size, axis=1),
                   tuple(f"l{i}" for i in range(size)), f"L{size}")


def direct_product(T1: OpTable, T2: OpTable) -> OpTable:
    m1, m2 = T1.order, T2.order
    table = T1.table[:, None, :, None] * m2 + T2.table[None, :, None, :]
    labels = tuple(f"({T1.label(x)},{T2.label(y)})" for x in range(m1) for y in range(m2))
    return OpTable(table.reshape(m1 * m2, m1 * m2), labels, f"{T1.name}x{T2.name}")


def presented_group_alpha_gamma(n: int, k: int) -> OpTable:
    """
    <alpha, gamma | alpha^n = gamma^2 = 1, gamma alpha gamma = alpha^k> on
    pairs (i, e) = alpha^i gamma^e with id 2i + e:
        (i,0)(j,f) = (i+j, f)    (i,1)(j,f) = (i+kj, 1+f)

    :raises PreconditionError: unless k^2 = 1 (mod n)
    """
    if not square_is(n, k, 1):
        raise PreconditionError(f"k^2 = 1 (mod n) is required, got (n, k) = ({n}, {k})")
    table = np.empty((2 * n, 2 * n), dtype=np.int64)
    for i in range(n):
        for e in (0, 1):
            for j in range(n):
                for f in (0, 1):
                    if e == 0:
                        table[2 * i + e, 2 * j + f] = 2 * ((i + j) % n) + f
                    else:
                        table[2 * i + e, 2 * j + f] = 2 * ((i + k * j) % n) + (1 + f) % 2
    labels = tuple(f"a^{i}" + (" g" if e else "") for i in range(n) for e in (0, 1))
    group = OpTable(table, labels, f"H({n},{k})")
    if not is_associative(group, alpha_gamma_generators()):
        raise PreconditionError(f"presentation for ({n}, {k}) is not associative")
    return group


def alpha_gamma_generators() -> tuple[int, int]:
    """ ids of alpha = (1,0) and gamma = (0,1) """
    return 2, 1


def combinator_null_extension(R: OpTable, ideal: Iterable[int], Rp: OpTable) -> OpTable:
    """
    R = S u T with T a two-sided ideal and S a subsemigroup, extended by Rp
    on R x Rp:
        (s,i)(r,j) = (sr, ij)     (t,i)(r,j) = (tr, i)
    so the S-part multiplies second coordinates and the ideal keeps them.
    An identity (e, e') comes from identities e in S and e' in Rp.

    :raises PreconditionError: if T is not an ideal, S is not closed, or the
        result fails the associativity check
    """
    m, p = R.order, Rp.order
    t_ids = np.array(sorted(set(ideal)), dtype=np.int64)
    in_t = np.isin(np.arange(m), t_ids)
    if not in_t.any() or in_t.all():
        raise PreconditionError("the ideal must be a proper non-empty subset")
    s_ids = np.flatnonzero(~in_t)
    if not np.isin(R.table[t_ids, :], t_ids).all() or not np.isin(R.table[:, t_ids], t_ids).all():
        raise PreconditionError("T is not a two-sided ideal of R")
    if not np.isin(R.table[np.ix_(s_ids, s_ids)], s_ids).all():
        raise PreconditionError("S = R \\ T is not closed")

    first = np.broadcast_to(R.table[:, None, :, None], (m, p, m, p))
    own = np.broadcast_to(np.arange(p)[None, :, None, None], (m, p, m, p))
    multiplied = np.broadcast_to(Rp.table[None, :, None, :], (m, p, m, p))
    second = np.where(in_t[:, None, None, None], own, multiplied)
    table = (first * p + second).reshape(m * p, m * p)
    labels = tuple(f"({R.label(x)},{Rp.label(i)})" for x in range(m) for i in range(p))
    result = OpTable(table, labels, f"{R.name}~{Rp.name}")
    if not is_associative(result):
        raise PreconditionError(f"extension is not associative at {associativity_witness(result)}")
    return result


def _is_homomorphism(A: OpTable, B: OpTable, f: np.ndarray) -> bool:
    return bool(np.array_equal(f[A.table], B.table[np.ix_(f, f)]))


def combinator_left_band_extension(S: OpTable, T: OpTable, R: OpTable,
                                   phi: Sequence[int], psi: Sequence[int]) -> OpTable:
    """
    S u (T x L_R), with (t, r) at id |S| + t*|R| + r:
        s(t, l_r) = (phi(s) t, l_{psi(s) r})
        (t, l_r)s = (t phi(s), l_r)
        (t, l_r)(t', l_r') = (t t', l_r)

    :raises PreconditionError: if phi or psi is not a homomorphism
    """
    phi_arr = np.array(phi, dtype=np.int64)
    psi_arr = np.array(psi, dtype=np.int64)
    if phi_arr.shape != (S.order,) or not _is_homomorphism(S, T, phi_arr):
        raise PreconditionError("phi is not a homomorphism S -> T")
    if psi_arr.shape != (S.order,) or not _is_homomorphism(S, R, psi_arr):
        raise PreconditionError("psi is not a homomorphism S -> R")

    ns, nt, nr = S.order, T.order, R.order
    size = ns + nt * nr
    r_idx = np.arange(nr)
    table = np.empty((size, size), dtype=np.int64)
    table[:ns, :ns] = S.table
    table[:ns, ns:] = ns + (T.table[phi_arr][:, :, None] * nr
                            + R.table[psi_arr][:, None, :]).reshape(ns, nt * nr)
    table[ns:, :ns] = ns + (T.table[:, phi_arr][:, None, :] * nr
                            + r_idx[None, :, None]).reshape(nt * nr, ns)
    table[ns:, ns:] = ns + np.broadcast_to(T.table[:, None, :, None] * nr + r_idx[None, :, None, None],
                                           (nt, nr, nt, nr)).reshape(nt * nr, nt * nr)
    labels = tuple(S.label(s) for s in range(ns)) + tuple(
        f"({T.label(t)},l{R.label(r)})" for t in range(nt) for r in range(nr))
    result = OpTable(table, labels, f"{S.name}u({T.name}xL{R.name})")
    if not is_associative(result):
        raise PreconditionError(f"extension is not associative at {associativity_witness(result)}")
    return result


def cay1_monoid(n: int, k: int, variant: Cay1Variant = Cay1Variant.STANDARD) -> tuple[OpTable, tuple[int, int]]:
    """
    Z_n u (Z_{n/d} x L_d) for k^2 = +-k (mod n), with
        x(i, l_j) = (x+i mod n/d, l_{x+j mod d})    (i, l_j)x = (x+i mod n/d, l_j)
    and its connection set: {1, (1,l_0)}, {1, (-1,l_0)} or {1, (0,l_0)}.

    :raises PreconditionError: unless k^2 = +-k (mod n)
    """
    params = GPParams(n, k)
    if not square_is_pm_k(n, k):
        raise PreconditionError(f"k^2 = +-k (mod n) is required, got (n, k) = ({n}, {k})")
    d, g = params.d, params.inner_len
    monoid = combinator_left_band_extension(
        cyclic_group(n), cyclic_group(g), cyclic_group(d),
        [x % g for x in range(n)], [x % d for x in range(n)])
    monoid = OpTable(monoid.table, monoid.labels, f"Cay1({n},{k})")
    shift = {Cay1Variant.STANDARD: 1, Cay1Variant.REVERSED: g - 1, Cay1Variant.LOOPED: 0}[variant]
    return monoid, (1, n + shift * d)


# tables for the Petersen graph, the dodecahedron and the Desargues graph

_PETERSEN_UNITS = [
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
    [1, 2, 3, 4, 5, 0, 7, 8, 6, 9],
    [2, 3, 4, 5, 0, 1, 8, 6, 7, 9],
    [3, 4, 5, 0, 1, 2, 6, 7, 8, 9],
    [4, 5, 0, 1, 2, 3, 7, 8, 6, 9],
    [5, 0, 1, 2, 3, 4, 8, 6, 7, 9],
]
_PETERSEN_UNITS_PRIME = [
    [5, 4, 3, 2, 1, 0, 8, 7, 6, 9],
    [2, 3, 4, 5, 0, 1, 8, 6, 7, 9],
    [1, 0, 5, 4, 3, 2, 7, 6, 8, 9],
    [4, 5, 0, 1, 2, 3, 7, 8, 6, 9],
    [3, 2, 1, 0, 5, 4, 6, 8, 7, 9],
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
]
_NULL_ROWS = [[9] * 10 for _ in range(4)]
_MONOID_ROWS = [[r] * 6 + [9] * 4 for r in (6, 7, 8)] + [[9] * 10]

_DODECAHEDRON_UNITS = [
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19],
    [1, 0, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 16, 18, 17, 19, 12, 14, 13, 15],
    [2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0, 1, 17, 18, 16, 19, 13, 14, 12, 15],
    [3, 2, 1, 0, 11, 10, 9, 8, 7, 6, 5, 4, 13, 12, 14, 15, 17, 16, 18, 19],
    [4, 5, 6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 14, 12, 13, 15, 18, 16, 17, 19],
    [5, 4, 3, 2, 1, 0, 11, 10, 9, 8, 7, 6, 18, 17, 16, 19, 14, 13, 12, 15],
    [6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5, 16, 17, 18, 19, 12, 13, 14, 15],
    [7, 6, 5, 4, 3, 2, 1, 0, 11, 10, 9, 8, 12, 14, 13, 15, 16, 18, 17, 19],
    [8, 9, 10, 11, 0, 1, 2, 3, 4, 5, 6, 7, 13, 14, 12, 15, 17, 18, 16, 19],
    [9, 8, 7, 6, 5, 4, 3, 2, 1, 0, 11, 10, 17, 16, 18, 19, 13, 12, 14, 15],
    [10, 11, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 18, 16, 17, 19, 14, 12, 13, 15],
    [11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0, 14, 13, 12, 15, 18, 17, 16, 19],
]
_DODECAHEDRON_REST = (
    [[r] * 12 + [15] * 8 for r in (12, 13, 14)] + [[15] * 20]
    + [[r] * 12 + [19] * 8 for r in (16, 17, 18)] + [[19] * 20]
)


def petersen_S() -> OpTable:
    return OpTable(_PETERSEN_UNITS + _NULL_ROWS, name="petersen_S")


def petersen_M() -> OpTable:
    return OpTable(_PETERSEN_UNITS + _MONOID_ROWS, name="petersen_M")


def petersen_Sp() -> OpTable:
    return OpTable(_PETERSEN_UNITS_PRIME + _NULL_ROWS, name="petersen_Sp")


def petersen_Mp() -> OpTable:
    return OpTable(_PETERSEN_UNITS_PRIME + _MONOID_ROWS, name="petersen_Mp")


def dodecahedron_M() -> OpTable:
    return OpTable(_DODECAHEDRON_UNITS + _DODECAHEDRON_REST, name="dodecahedron_M")


def desargues_M() -> OpTable:
    """ petersen_M x Z2 with Z6 = {0..5} acting on the Z2 coordinate and {6..9} as the ideal """
    table = combinator_null_extension(petersen_M(), range(6, 10), cyclic_group(2))
    return OpTable(table.table, table.labels, "desargues_M")


def builtin_tables() -> dict[str, OpTable]:
    return {
        "petersen_S": petersen_S(),
        "petersen_M": petersen_M(),
        "petersen_Sp": petersen_Sp(),
        "petersen_Mp": petersen_Mp(),
        "dodecahedron_M": dodecahedron_M(),
        "desargues_M": desargues_M(),
    }
