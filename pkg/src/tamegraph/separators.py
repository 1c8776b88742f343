"""Minimal separators: predicates, enumerators and structural certificates.

A full component of ``X`` is a component ``C`` of ``G - X`` with
``N(C) = X``; ``X`` is a minimal separator when it has two or more full
components. The empty set is never reported as a minimal separator, so an
edgeless or otherwise disconnected graph gets exactly the separators of its
connected components.
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import GraphInputError, LemmaViolationError, OracleLimitError
from .graph import (
    Graph,
    VertexSet,
    bits_to_set,
    cocomponent_masks,
    component_masks,
    induced_mask,
    iter_bits,
    lowest,
    nbhd_mask,
)
from .modular import _maximal_parts_mask, connected_module_masks

ORACLE_LIMIT_ENV = "TAMEGRAPH_ORACLE_LIMIT"
DEFAULT_ORACLE_LIMIT = 20


def oracle_limit() -> int:
    raw = os.environ.get(ORACLE_LIMIT_ENV)
    if raw is None:
        return DEFAULT_ORACLE_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise GraphInputError(f"{ORACLE_LIMIT_ENV} must be an integer, got {raw!r}") from None


def check_oracle_limit(g: Graph, limit: Optional[int] = None) -> None:
    limit = oracle_limit() if limit is None else limit
    if g.n > limit:
        raise OracleLimitError(
            f"brute-force oracle refuses n={g.n} (limit {limit}; set {ORACLE_LIMIT_ENV} to override)"
        )


@dataclass(frozen=True)
class SeparatorRecord:
    separator: VertexSet
    full_components: tuple

    def check(self, g: Graph) -> None:
        """Re-derive the record from scratch and raise if it is inconsistent."""
        fc = full_components(g, self.separator)
        if len(fc) < 2 or tuple(fc) != self.full_components:
            raise AssertionError(f"invalid separator record {self}")


def _full_component_masks(g: Graph, x: int) -> list:
    return [c for c in component_masks(g, g.all_mask & ~x) if nbhd_mask(g, c) == x]


def _is_minsep_mask(g: Graph, x: int) -> bool:
    if not x:
        return False
    hits = 0
    for c in component_masks(g, g.all_mask & ~x):
        if nbhd_mask(g, c) == x:
            hits += 1
            if hits == 2:
                return True
    return False


def _record(g: Graph, x: int) -> SeparatorRecord:
    return SeparatorRecord(bits_to_set(x), tuple(bits_to_set(c) for c in _full_component_masks(g, x)))


def _records(g: Graph, masks) -> list:
    return [_record(g, x) for x in sorted(masks, key=bits_to_set)]


def full_components(g: Graph, x) -> list:
    """Components ``C`` of ``G - x`` with ``N(C) = x``, ordered by minimum vertex."""
    return [bits_to_set(c) for c in _full_component_masks(g, g.mask(x))]


def is_minimal_separator(g: Graph, x) -> bool:
    return _is_minsep_mask(g, g.mask(x))


def enumerate_minseps_brute(g: Graph, limit: Optional[int] = None) -> list:
    """Scan every vertex subset. Refuses graphs above the oracle limit."""
    check_oracle_limit(g, limit)
    return _records(g, (x for x in range(1, 1 << g.n) if _is_minsep_mask(g, x)))


def minsep_masks_generic(g: Graph, universe: Optional[int] = None) -> set:
    """Minimal separators (of ``G[universe]``) as bitmasks, by closure from seeds.

    Seeds are ``N(C)`` for components ``C`` of ``G - N[v]``. Each separator
    ``S`` and vertex ``x`` in it yields new separators ``N(C)`` for the
    components ``C`` of ``G - (S | N(x))``. Every minimal separator is
    reached, and each one costs polynomially many component computations.
    """
    full = g.all_mask if universe is None else universe
    adj = g.adj
    found = set()
    queue = []

    def push(m):
        m &= full
        if m and m not in found:
            found.add(m)
            queue.append(m)

    for v in iter_bits(full):
        closed = adj[v] | (1 << v)
        for c in component_masks(g, full & ~closed):
            push(nbhd_mask(g, c))
    while queue:
        s = queue.pop()
        for x in iter_bits(s):
            for c in component_masks(g, full & ~(s | adj[x])):
                push(nbhd_mask(g, c))
    return found


def enumerate_minseps_generic(g: Graph) -> list:
    return _records(g, minsep_masks_generic(g))


# -- structural certificates -------------------------------------------------


class NeiCase(enum.Enum):
    P4_WITNESS = "P4_WITNESS"
    ADJACENT_PQ = "ADJACENT_PQ"
    COCOMPONENT_UNION = "COCOMPONENT_UNION"


@dataclass(frozen=True)
class NeiWitness:
    case: NeiCase
    p4: Optional[tuple] = None


class QCase(enum.Enum):
    SINGLETON_A = "SINGLETON_A"
    COCOMPONENT_TRANSVERSAL = "COCOMPONENT_TRANSVERSAL"
    TWO_MODULE_REPS = "TWO_MODULE_REPS"


@dataclass(frozen=True)
class QCover:
    q: VertexSet
    case: QCase
    p: Optional[int] = None
    q2: Optional[int] = None


def _induced_p4_from(g: Graph, x: int, a: int) -> Optional[tuple]:
    """Lexicographically first induced path ``x, a1, a2, a3`` with ``a_i`` in ``a``."""
    adj = g.adj
    nx_ = adj[x]
    for a1 in iter_bits(nx_ & a):
        for a2 in iter_bits(adj[a1] & a & ~nx_):
            for a3 in iter_bits(adj[a2] & a & ~nx_ & ~adj[a1] & ~(1 << a1)):
                return (x, a1, a2, a3)
    return None


def lemma_nei_witness(g: Graph, x_set, a, p: int, q: int, x: int) -> NeiWitness:
    """Certify how a separator vertex ``x`` relates to a full side ``a``.

    With ``p`` and ``q`` in different maximal proper strong modules of
    ``G[a]``, one of three things holds: ``x`` sees ``p`` or ``q``; ``x``
    starts an induced P4 whose other three vertices lie in ``a``; or the
    complement of ``G[a]`` is disconnected and ``N(x) & a`` is a union of its
    components. The first case is reported whenever it applies.
    """
    xm = g.mask(x_set)
    am = g.mask(a)
    if am not in _full_component_masks(g, xm):
        raise GraphInputError(f"{bits_to_set(am)} is not a full component of {bits_to_set(xm)}")
    if am.bit_count() < 2:
        raise GraphInputError("the full side must have at least two vertices")
    if not (xm >> x) & 1:
        raise GraphInputError(f"vertex {x} is not in the separator")
    parts = _maximal_parts_mask(g, am)
    part_of = {v: i for i, pm in enumerate(parts) for v in iter_bits(pm)}
    if p not in part_of or q not in part_of or part_of[p] == part_of[q]:
        raise GraphInputError("p and q must lie in different maximal proper strong modules of G[a]")

    if g.has_edge(x, p) or g.has_edge(x, q):
        return NeiWitness(NeiCase.ADJACENT_PQ)
    path = _induced_p4_from(g, x, am)
    if path is not None:
        return NeiWitness(NeiCase.P4_WITNESS, path)
    cocomps = cocomponent_masks(g, am)
    seen = g.adj[x] & am
    if len(cocomps) > 1 and all(c & seen in (0, c) for c in cocomps):
        return NeiWitness(NeiCase.COCOMPONENT_UNION)
    raise LemmaViolationError(
        f"no case applies to x={x} against side {bits_to_set(am)}", x=x, a=bits_to_set(am)
    )


def _adjacent_reps(g: Graph, am: int) -> tuple:
    """Smallest adjacent pair ``p < q`` lying in different maximal strong modules of ``G[am]``.

    Non-adjacent representatives are not enough: if ``G[A]`` is the path
    ``p - a - b - q`` and ``x`` sees exactly ``{a, b}``, none of the three
    cases relating ``x`` to ``A`` holds. ``G[am]`` is connected here, so an
    edge between two different parts always exists.
    """
    part_of = {}
    for i, pm in enumerate(_maximal_parts_mask(g, am)):
        for v in iter_bits(pm):
            part_of[v] = i
    for p in iter_bits(am):
        for q in iter_bits(g.adj[p] & am & ~((1 << (p + 1)) - 1)):
            if part_of[p] != part_of[q]:
                return p, q
    raise GraphInputError(f"G[{bits_to_set(am)}] has no edge between its maximal strong modules")


def build_q_cover(g: Graph, sep: SeparatorRecord, a_index: int, k: int) -> QCover:
    """Pick a small set ``Q`` inside one full side ``A`` of ``sep``.

    Every separator vertex outside ``N(Q)`` must be complete to each other
    full side ``B``. The guarantee needs a P6-free graph of clique number at
    most ``k``; it is checked here and a failure raises
    :class:`LemmaViolationError` with the offending ``x`` and ``B``.
    """
    k = max(k, 2)
    sides = [g.mask(c) for c in sep.full_components]
    xm = g.mask(sep.separator)
    am = sides[a_index]
    if am.bit_count() == 1:
        cover = QCover(bits_to_set(am), QCase.SINGLETON_A)
    else:
        cocomps = cocomponent_masks(g, am)
        if len(cocomps) > 1:
            cover = QCover(tuple(sorted(lowest(c) for c in cocomps)), QCase.COCOMPONENT_TRANSVERSAL)
        else:
            p, q2 = _adjacent_reps(g, am)
            cover = QCover((p, q2), QCase.TWO_MODULE_REPS, p=p, q2=q2)
    if len(cover.q) > k:
        raise LemmaViolationError(
            f"|Q|={len(cover.q)} exceeds k={k}; clique number is larger than assumed",
            q=cover.q,
        )
    qm = g.mask(cover.q)
    loose = xm & ~nbhd_mask(g, qm)
    for i, bm in enumerate(sides):
        if i == a_index:
            continue
        for x in iter_bits(loose):
            if g.adj[x] & bm != bm:
                raise LemmaViolationError(
                    f"vertex {x} outside N(Q) is not complete to side {bits_to_set(bm)}",
                    x=x,
                    b=bits_to_set(bm),
                    q=cover.q,
                )
    return cover


# -- enumeration through connected modules --------------------------------------


@dataclass(frozen=True)
class P6FreeSearch:
    separators: list
    candidates: int
    q_sets: int


def p6free_search(g: Graph, k: int) -> P6FreeSearch:
    """Run the connected-module enumeration and report how much it examined.

    For each ``Q`` of size ``1..k``, every connected module ``B`` of
    ``G - N(Q)`` gives the candidate ``N_G(B)``, kept when it is a minimal
    separator. Output is always sound; it is complete when ``G`` is P6-free
    with clique number at most ``k``. ``candidates`` counts the ``(Q, B)``
    pairs tried.
    """
    k = max(k, 2)
    found = set()
    candidates = 0
    q_sets = 0
    full = g.all_mask
    for size in range(1, min(k, g.n) + 1):
        for q in combinations(range(g.n), size):
            q_sets += 1
            qm = sum(1 << v for v in q)
            keep = full & ~nbhd_mask(g, qm)
            h = induced_mask(g, keep)
            labels = bits_to_set(keep)
            for bm_local in connected_module_masks(h, k):
                candidates += 1
                bm = 0
                for i in iter_bits(bm_local):
                    bm |= 1 << labels[i]
                x = nbhd_mask(g, bm)
                if x not in found and _is_minsep_mask(g, x):
                    found.add(x)
    return P6FreeSearch(_records(g, found), candidates, q_sets)


def enumerate_minseps_p6free(g: Graph, k: int) -> list:
    """Minimal separators of a P6-free graph whose clique number is at most ``k``."""
    return p6free_search(g, k).separators
