"""Immutable simple undirected graphs on vertices ``0..n-1``.

Vertex sets are exchanged as sorted tuples of ints (``VertexSet``). Internally
every algorithm works on Python ints used as bitsets, where bit ``v`` stands
for vertex ``v``.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import GraphInputError

VertexSet = tuple  # sorted, duplicate-free tuple of vertex ids


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_set(mask: int) -> VertexSet:
    return tuple(iter_bits(mask))


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Simple undirected graph with dense integer vertices.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of pairs
        Edges ``(u, v)`` with ``u != v``; repeated edges are merged.
    """

    __slots__ = ("_n", "_adj", "_all")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise GraphInputError(f"vertex count must be a non-negative int, got {n!r}")
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)
        self._all = (1 << n) - 1

    @classmethod
    def from_masks(cls, adj: Sequence[int]) -> "Graph":
        """Build from neighbourhood bitmasks; symmetry and loop-freeness are checked."""
        n = len(adj)
        full = (1 << n) - 1
        for v, m in enumerate(adj):
            if m & ~full or (m >> v) & 1:
                raise GraphInputError(f"invalid adjacency mask for vertex {v}")
            for u in iter_bits(m):
                if not (adj[u] >> v) & 1:
                    raise GraphInputError(f"asymmetric adjacency between {u} and {v}")
        g = cls.__new__(cls)
        g._n = n
        g._adj = tuple(adj)
        g._all = full
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple:
        """Neighbourhood bitmask per vertex."""
        return self._adj

    @property
    def all_mask(self) -> int:
        return self._all

    def __setattr__(self, name, value):
        if hasattr(self, "_all"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return f"Graph(n={self._n}, edges={self.edges()!r})"

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return bits_to_set(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def edges(self) -> list:
        """Edges as ``(u, v)`` pairs with ``u < v``, lexicographically sorted."""
        out = []
        for u, m in enumerate(self._adj):
            out.extend((u, v) for v in iter_bits(m >> (u + 1) << (u + 1)))
        return out

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    def _check_vertex(self, v):
        if not isinstance(v, int) or not 0 <= v < self._n:
            raise GraphInputError(f"vertex {v!r} out of range for n={self._n}")

    def mask(self, s: Iterable[int]) -> int:
        """Validate a vertex collection and return it as a bitmask."""
        m = 0
        for v in s:
            self._check_vertex(v)
            m |= 1 << v
        return m


def vertex_set(items: Iterable[int]) -> VertexSet:
    return tuple(sorted(set(items)))


def nbhd_mask(g: Graph, m: int) -> int:
    """Open neighbourhood of the vertex bitmask ``m``."""
    adj = g.adj
    out = 0
    for v in iter_bits(m):
        out |= adj[v]
    return out & ~m


def component_masks(g: Graph, allowed: int) -> list:
    """Connected components of ``G[allowed]``, ordered by minimum vertex."""
    adj = g.adj
    comps = []
    rest = allowed
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= adj[v]
            frontier = grow & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected_mask(g: Graph, m: int) -> bool:
    return m != 0 and len(component_masks(g, m)) == 1


def cocomponent_masks(g: Graph, allowed: int) -> list:
    """Connected components of the complement of ``G[allowed]``."""
    adj = g.adj
    comps = []
    rest = allowed
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= ~adj[v]
            frontier = grow & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def neighborhood(g: Graph, s: Iterable[int]) -> VertexSet:
    """Open neighbourhood ``N(s)``: vertices outside ``s`` adjacent to some member."""
    return bits_to_set(nbhd_mask(g, g.mask(s)))


def components(g: Graph, removed: Iterable[int] = ()) -> list:
    """Connected components of ``G - removed`` ordered by their minimum vertex."""
    rm = g.mask(removed)
    return [bits_to_set(c) for c in component_masks(g, g.all_mask & ~rm)]


def complement(g: Graph) -> Graph:
    full = g.all_mask
    return Graph.from_masks([full & ~a & ~(1 << v) for v, a in enumerate(g.adj)])


def induced(g: Graph, s: Iterable[int]) -> tuple:
    """Induced subgraph on ``s``.

    Returns ``(h, labels)`` where vertex ``i`` of ``h`` is ``labels[i]`` in ``g``;
    the relabelling preserves order.
    """
    labels = bits_to_set(g.mask(s))
    return induced_mask(g, sum(1 << v for v in labels)), labels


def induced_mask(g: Graph, m: int) -> Graph:
    labels = bits_to_set(m)
    index = {v: i for i, v in enumerate(labels)}
    adj = []
    for v in labels:
        adj.append(sum(1 << index[u] for u in iter_bits(g.adj[v] & m)))
    return Graph.from_masks(adj)
