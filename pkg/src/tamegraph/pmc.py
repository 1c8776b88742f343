"""Potential maximal cliques.

A nonempty set ``W`` is a potential maximal clique when no component of
``G - W`` is full for ``W`` and every non-adjacent pair inside ``W`` is
covered by ``N(C)`` for some component ``C`` of ``G - W``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import GraphInputError
from .graph import Graph, VertexSet, bits_to_set, component_masks, iter_bits, lowest, nbhd_mask
from .separators import check_oracle_limit, minsep_masks_generic


@dataclass(frozen=True)
class PmcRecord:
    members: VertexSet
    component_neighborhoods: tuple


def _is_pmc_mask(g: Graph, w: int, universe: Optional[int] = None) -> bool:
    """PMC test inside ``G[universe]`` (the whole graph by default)."""
    if not w:
        return False
    full = g.all_mask if universe is None else universe
    nbhds = []
    for c in component_masks(g, full & ~w):
        nc = nbhd_mask(g, c)
        if nc == w:
            return False
        if nc:
            nbhds.append(nc)
    adj = g.adj
    for u in iter_bits(w):
        # pairs are checked once, from their smaller end
        missing = w & ~adj[u] & ~((1 << (u + 1)) - 1)
        for v in iter_bits(missing):
            pair = (1 << u) | (1 << v)
            if not any(nc & pair == pair for nc in nbhds):
                return False
    return True


def _record(g: Graph, w: int) -> PmcRecord:
    nbhds = tuple(bits_to_set(nbhd_mask(g, c)) for c in component_masks(g, g.all_mask & ~w))
    return PmcRecord(bits_to_set(w), nbhds)


def _records(g: Graph, masks) -> list:
    return [_record(g, w) for w in sorted(masks, key=bits_to_set)]


def is_pmc(g: Graph, s) -> bool:
    m = g.mask(s)
    if not m:
        raise GraphInputError("a potential maximal clique must be nonempty")
    return _is_pmc_mask(g, m)


def enumerate_pmcs_brute(g: Graph, limit: Optional[int] = None) -> list:
    check_oracle_limit(g, limit)
    return _records(g, (w for w in range(1, 1 << g.n) if _is_pmc_mask(g, w)))


def _bfs_order(g: Graph, comp: int) -> list:
    order = [lowest(comp)]
    seen = 1 << order[0]
    i = 0
    while i < len(order):
        for u in iter_bits(g.adj[order[i]] & comp & ~seen):
            seen |= 1 << u
            order.append(u)
        i += 1
    return order


def _one_more_vertex(g: Graph, prev_pmcs: set, prev_seps: set, seps: set, universe: int, a: int) -> set:
    """PMCs of ``G[universe]`` from those of ``G[universe - a]``.

    Every PMC of the larger graph is an old PMC, an old PMC plus ``a``,
    ``S | {a}`` for a separator ``S``, or ``S | (T & C)`` for separators
    ``S``, ``T`` and a component ``C`` of the graph minus ``S``.
    """
    abit = 1 << a
    cands = set()
    for w in prev_pmcs:
        cands.add(w)
        cands.add(w | abit)
    trans = seps | prev_seps
    for s in seps:
        cands.add(s)
        cands.add(s | abit)
        for c in component_masks(g, universe & ~s):
            for t in trans:
                tc = t & c
                if tc:
                    cands.add(s | tc)
    return {w for w in cands if _is_pmc_mask(g, w, universe)}


def enumerate_pmcs_from_minseps(g: Graph, minseps: list) -> list:
    """All PMCs of ``g``, given the complete list of its minimal separators.

    Each connected component is grown one vertex at a time in BFS order;
    separators of the intermediate graphs are recomputed along the way and
    the supplied list is used for the final, full graph. The output is
    complete only if ``minseps`` is.
    """
    given = {g.mask(r.separator) for r in minseps}
    found = set()
    for comp in component_masks(g, g.all_mask):
        order = _bfs_order(g, comp)
        universe = 1 << order[0]
        pmcs = {universe}
        seps = set()
        for a in order[1:]:
            universe |= 1 << a
            if universe == comp:
                new_seps = {s for s in given if s & ~comp == 0}
            else:
                new_seps = minsep_masks_generic(g, universe)
            pmcs = _one_more_vertex(g, pmcs, seps, new_seps, universe, a)
            seps = new_seps
        found |= pmcs
    # a PMC of one component is a PMC of the whole graph
    return _records(g, (w for w in found if _is_pmc_mask(g, w)))
