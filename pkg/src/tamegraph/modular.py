"""Modules, strong modules and connected modules.

Strong modules are obtained from a recursive modular decomposition: a
vertex set splits into its components when disconnected, into its
co-components when the complement is disconnected, and otherwise (prime
case) into its maximal proper modules. Module closures are computed by
repeatedly absorbing splitters, which is polynomial and adequate for the
graph sizes this package targets.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import BoundViolationError, GraphInputError
from .graph import (
    Graph,
    VertexSet,
    bits_to_set,
    cocomponent_masks,
    component_masks,
    is_connected_mask,
    iter_bits,
)


class ContainerCase(enum.Enum):
    EQUALS_STRONG = "EQUALS_STRONG"
    UNION_OF_COMPONENTS = "UNION_OF_COMPONENTS"
    UNION_OF_COCOMPONENTS = "UNION_OF_COCOMPONENTS"


@dataclass(frozen=True)
class ModuleRecord:
    """A module together with its inclusion-minimal strong container."""

    members: VertexSet
    container: VertexSet
    case: ContainerCase


class NodeKind(enum.Enum):
    LEAF = "leaf"
    PARALLEL = "parallel"
    SERIES = "series"
    PRIME = "prime"


@dataclass
class _Node:
    mask: int
    kind: NodeKind
    children: list = field(default_factory=list)


def _is_module_mask(g: Graph, m: int, universe: int) -> bool:
    for u in iter_bits(universe & ~m):
        a = g.adj[u] & m
        if a and a != m:
            return False
    return True


def _module_closure(g: Graph, m: int, universe: int) -> int:
    """Smallest module of ``G[universe]`` containing ``m``."""
    changed = True
    while changed:
        changed = False
        for u in iter_bits(universe & ~m):
            a = g.adj[u] & m
            if a and a != m:
                m |= 1 << u
                changed = True
    return m


def _decompose(g: Graph, mask: int) -> _Node:
    if mask & (mask - 1) == 0:
        return _Node(mask, NodeKind.LEAF)
    comps = component_masks(g, mask)
    if len(comps) > 1:
        return _Node(mask, NodeKind.PARALLEL, [_decompose(g, c) for c in comps])
    cocomps = cocomponent_masks(g, mask)
    if len(cocomps) > 1:
        return _Node(mask, NodeKind.SERIES, [_decompose(g, c) for c in cocomps])
    # prime: u and v share a maximal strong module iff their closure is proper
    parts = []
    rest = mask
    while rest:
        v = rest & -rest
        part = v
        for u in iter_bits(rest & ~v):
            if _module_closure(g, v | (1 << u), mask) != mask:
                part |= 1 << u
        parts.append(part)
        rest &= ~part
    return _Node(mask, NodeKind.PRIME, [_decompose(g, p) for p in parts])


def decomposition_tree(g: Graph) -> _Node:
    if g.n == 0:
        raise GraphInputError("modular decomposition needs at least one vertex")
    return _decompose(g, g.all_mask)


def _walk(node):
    yield node
    for c in node.children:
        yield from _walk(c)


def _strong_masks(g: Graph) -> list:
    return sorted((nd.mask for nd in _walk(decomposition_tree(g))), key=bits_to_set)


def is_module(g: Graph, m) -> bool:
    """True when every vertex outside ``m`` sees all of ``m`` or none of it."""
    mm = g.mask(m)
    if not mm:
        raise GraphInputError("a module must be nonempty")
    return _is_module_mask(g, mm, g.all_mask)


def strong_modules(g: Graph) -> list:
    """All strong modules, including ``V(G)`` and the singletons."""
    return [bits_to_set(m) for m in _strong_masks(g)]


def maximal_proper_strong_modules(g: Graph) -> list:
    """The maximal proper strong modules; they partition ``V(G)``."""
    if g.n < 2:
        raise GraphInputError("maximal proper strong modules need at least two vertices")
    root = decomposition_tree(g)
    return sorted((bits_to_set(c.mask) for c in root.children))


def _maximal_parts_mask(g: Graph, mask: int) -> list:
    """Maximal proper strong modules of ``G[mask]`` as bitmasks."""
    return [c.mask for c in _decompose(g, mask).children]


def minimal_strong_container(g: Graph, m) -> ModuleRecord:
    """Locate the smallest strong module containing the module ``m``.

    Raises
    ------
    GraphInputError
        If ``m`` is empty or not a module.
    """
    if not is_module(g, m):
        raise GraphInputError(f"{bits_to_set(g.mask(m))} is not a module")
    mm = g.mask(m)
    node = decomposition_tree(g)
    while True:
        nxt = next((c for c in node.children if mm & c.mask == mm), None)
        if nxt is None:
            break
        node = nxt
    members = bits_to_set(mm)
    container = bits_to_set(node.mask)
    if node.mask == mm:
        case = ContainerCase.EQUALS_STRONG
    elif node.kind is NodeKind.PARALLEL:
        case = ContainerCase.UNION_OF_COMPONENTS
    elif node.kind is NodeKind.SERIES:
        case = ContainerCase.UNION_OF_COCOMPONENTS
    else:  # pragma: no cover - a prime node has no non-strong module unions
        raise AssertionError(f"module {members} strictly inside prime node {container}")
    return ModuleRecord(members, container, case)


def connected_module_masks(g: Graph, k: int) -> list:
    """Bitmask form of :func:`connected_modules`, in canonical order."""
    if g.n == 0:
        return []
    limit = 1 << k
    found = set()
    for sm in _strong_masks(g):
        cocomps = cocomponent_masks(g, sm)
        r = len(cocomps)
        if (1 << r) > limit:
            raise BoundViolationError(
                f"strong module {bits_to_set(sm)} has {r} co-components, "
                f"more than the clique bound k={k} allows"
            )
        for choice in range(1, 1 << r):
            u = 0
            for i in iter_bits(choice):
                u |= cocomps[i]
            if u not in found and is_connected_mask(g, u) and _is_module_mask(g, u, g.all_mask):
                found.add(u)
    return sorted(found, key=bits_to_set)


def connected_modules(g: Graph, k: int) -> list:
    """All modules ``M`` with ``G[M]`` connected.

    Each candidate is a union of co-components of some strong module, so at
    most ``2**k`` candidates are tried per strong module when ``k`` bounds the
    clique number. A strong module with more than ``k`` co-components means
    ``k`` is too small and raises :class:`BoundViolationError`.
    """
    return [bits_to_set(m) for m in connected_module_masks(g, k)]
