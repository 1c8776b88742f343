"""Maximum weight independent set by dynamic programming over PMCs.

A block ``(S, C)`` pairs a minimal separator ``S`` with one of its full
components ``C``. For an independent ``X`` inside ``S``, the block value is
the best weight of ``Y`` inside ``C`` with ``X | Y`` independent. Any PMC
``W`` with ``S < W <= S | C`` splits ``C`` into ``W - S`` and the components
``C'`` of ``G[C - W]``, each of which is again a block ``(N(C'), C')``, so

    value(S, C, X) = max over W, Z of  w(Z) + sum value(N(C'), C', (X|Z) & N(C'))

with ``Z`` independent inside ``W - S`` and compatible with ``X``. The top
level does the same with ``S`` empty. Bags are enumerated exhaustively, so
bag size is capped.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import GraphInputError
from .graph import Graph, bits_to_set, component_masks, iter_bits, nbhd_mask
from .separators import check_oracle_limit

DEFAULT_BAG_LIMIT = 25


@dataclass(frozen=True)
class WeightedGraph:
    graph: Graph
    weights: tuple

    def __post_init__(self):
        if len(self.weights) != self.graph.n:
            raise GraphInputError(f"expected {self.graph.n} weights, got {len(self.weights)}")
        if any(not isinstance(w, int) or w < 0 for w in self.weights):
            raise GraphInputError("weights must be non-negative integers")


@dataclass(frozen=True)
class Block:
    separator: tuple
    component: tuple


def _weight(wg: WeightedGraph, m: int) -> int:
    return sum(wg.weights[v] for v in iter_bits(m))


def is_independent(g: Graph, s) -> bool:
    m = g.mask(s)
    return all(not (g.adj[v] & m) for v in iter_bits(m))


def mwis_brute(wg: WeightedGraph, limit: Optional[int] = None) -> tuple:
    """Best ``(weight, vertex set)`` over all independent sets; ties go to the first mask."""
    g = wg.graph
    check_oracle_limit(g, limit)
    best, best_m = 0, 0
    adj = g.adj
    # grow independent sets by always adding vertices above the current maximum
    stack = [(0, 0, g.all_mask)]
    while stack:
        m, w, cand = stack.pop()
        if w > best or (w == best and m < best_m):
            best, best_m = w, m
        for v in iter_bits(cand):
            higher = cand & ~((1 << (v + 1)) - 1)
            stack.append((m | (1 << v), w + wg.weights[v], higher & ~adj[v]))
    return best, bits_to_set(best_m)


def _independent_subsets(g: Graph, pool: int, forbidden: int):
    """Independent subsets of ``pool`` avoiding ``forbidden`` (which is already a neighbour mask)."""
    verts = list(iter_bits(pool & ~forbidden))
    adj = g.adj

    def rec(i, chosen, blocked):
        if i == len(verts):
            yield chosen
            return
        yield from rec(i + 1, chosen, blocked)
        v = verts[i]
        if not (blocked >> v) & 1:
            yield from rec(i + 1, chosen | (1 << v), blocked | adj[v])

    yield from rec(0, 0, 0)


class _Solver:
    def __init__(self, wg: WeightedGraph, pmcs: list, bag_limit: int):
        self.wg = wg
        self.g = wg.graph
        self.bag_limit = bag_limit
        self.pmcs = [self.g.mask(p.members) for p in pmcs]
        for w in self.pmcs:
            if w.bit_count() > bag_limit:
                raise GraphInputError(f"bag of size {w.bit_count()} exceeds limit {bag_limit}")
        self.memo = {}

    def _split(self, bag: int, region: int) -> list:
        """Child blocks: components of ``G[region - bag]`` with their neighbourhoods."""
        return [(nbhd_mask(self.g, c), c) for c in component_masks(self.g, region & ~bag)]

    def _best_over_bag(self, s: int, region: int, x: int, bags: list):
        g = self.g
        xn = nbhd_mask(g, x) if x else 0
        best = None
        for w in bags:
            children = self._split(w, region)
            for z in _independent_subsets(g, w & ~s, xn | x):
                chosen = x | z
                total = _weight(self.wg, z)
                for cs, cc in children:
                    total += self.value(cs, cc, chosen & cs)[0]
                if best is None or total > best[0]:
                    best = (total, w, z)
        return best

    def value(self, s: int, c: int, x: int):
        key = (s, c, x)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        region = s | c
        bags = [w for w in self.pmcs if w & s == s and w != s and w & ~region == 0]
        if not bags:
            raise GraphInputError(
                f"no PMC for block ({bits_to_set(s)}, {bits_to_set(c)}); PMC list is incomplete"
            )
        best = self._best_over_bag(s, region, x, bags)
        self.memo[key] = best
        return best

    def witness(self, s: int, c: int, x: int) -> int:
        _, w, z = self.value(s, c, x)
        out = z
        chosen = x | z
        for cs, cc in self._split(w, s | c):
            out |= self.witness(cs, cc, chosen & cs)
        return out

    def solve_component(self, comp: int) -> tuple:
        bags = [w for w in self.pmcs if w & ~comp == 0]
        if not bags:
            raise GraphInputError(f"no PMC inside component {bits_to_set(comp)}")
        total, w, z = self._best_over_bag(0, comp, 0, bags)
        chosen = z
        for cs, cc in self._split(w, comp):
            chosen |= self.witness(cs, cc, z & cs)
        return total, chosen


def blocks(g: Graph, minseps: list) -> list:
    """All full blocks ``(S, C)`` of the given separators."""
    out = []
    for r in minseps:
        for c in r.full_components:
            out.append(Block(r.separator, c))
    return out


def mwis_pmc(
    wg: WeightedGraph,
    pmcs: list,
    minseps: list,
    bag_limit: int = DEFAULT_BAG_LIMIT,
) -> tuple:
    """Maximum weight independent set from complete PMC and separator lists.

    Blocks are filled in order of ``|S | C|``; each disconnected component
    is solved separately and the results are summed.

    Raises
    ------
    GraphInputError
        If a bag exceeds ``bag_limit`` or a needed block has no PMC, which
        means the supplied lists were incomplete.
    """
    g = wg.graph
    solver = _Solver(wg, pmcs, bag_limit)
    known = {(g.mask(b.separator), g.mask(b.component)) for b in blocks(g, minseps)}
    for s, c in sorted(known, key=lambda sc: ((sc[0] | sc[1]).bit_count(), sc)):
        for x in _independent_subsets(g, s, 0):
            solver.value(s, c, x)
    total, chosen = 0, 0
    for comp in component_masks(g, g.all_mask):
        w, m = solver.solve_component(comp)
        total += w
        chosen |= m
    unknown = {(s, c) for (s, c, _x) in solver.memo} - known
    if unknown:
        s, c = min(unknown)
        raise GraphInputError(
            f"block ({bits_to_set(s)}, {bits_to_set(c)}) is missing from the separator list"
        )
    return total, bits_to_set(chosen)
