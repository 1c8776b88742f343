"""Induced-path detection and exact clique number."""
from __future__ import annotations

from typing import Optional

from .errors import GraphInputError
from .graph import Graph, iter_bits


def find_induced_path(g: Graph, t: int) -> Optional[list]:
    """Return an induced path on ``t`` vertices, or ``None`` if there is none.

    Partial induced paths are extended in ascending vertex order, so the
    returned path is the lexicographically smallest such vertex sequence.
    """
    if t < 1:
        raise GraphInputError(f"path length must be at least 1, got {t}")
    if t > g.n:
        return None
    adj = g.adj
    path = []

    def extend(blocked: int) -> bool:
        # blocked: path vertices and neighbours of every path vertex but the last
        if len(path) == t:
            return True
        last = path[-1]
        for v in iter_bits(adj[last] & ~blocked):
            path.append(v)
            if extend(blocked | (1 << v) | adj[last]):
                return True
            path.pop()
        return False

    for start in range(g.n):
        path.append(start)
        if extend(1 << start):
            return list(path)
        path.pop()
    return None


def is_pt_free(g: Graph, t: int) -> bool:
    return find_induced_path(g, t) is None


def clique_number(g: Graph) -> int:
    """Maximum clique size via Bron-Kerbosch with pivoting and size pruning."""
    adj = g.adj
    best = 0

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if not cand:
            if not excl and size > best:
                best = size
            return
        if size + cand.bit_count() <= best:
            return
        pivot = max(iter_bits(cand | excl), key=lambda u: (adj[u] & cand).bit_count())
        for v in iter_bits(cand & ~adj[pivot]):
            bit = 1 << v
            expand(size + 1, cand & adj[v], excl & adj[v])
            cand &= ~bit
            excl |= bit

    expand(0, g.all_mask, 0)
    return best
