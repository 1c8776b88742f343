"""Deterministic graph families and a reproducible random graph generator.

Random graphs use SplitMix64 so that any language can reproduce them:
starting from ``state = seed``, each draw does::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    return z ^ (z >> 31)

``gnp(n, p, seed)`` visits pairs ``(u, v)`` with ``u < v`` in lexicographic
order, takes one draw per pair and keeps the edge when the draw is below
``floor(p * 2**64)``. With seed 0 the first three draws are
``0xE220A8397B1DCDAF``, ``0x6E789E6AA1B965F4`` and ``0x06C45D188009454F``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import GraphInputError
from .graph import Graph

_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)


def prism(n: int) -> Graph:
    """Two ``n``-cliques on ``0..n-1`` and ``n..2n-1`` joined by the matching ``i -- n+i``."""
    if n < 1:
        raise GraphInputError("prism needs n >= 1")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges += [(n + i, n + j) for i in range(n) for j in range(i + 1, n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph(2 * n, edges)


def path(n: int) -> Graph:
    _check_size(n)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n: int) -> Graph:
    _check_size(n)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def edgeless(n: int) -> Graph:
    _check_size(n)
    return Graph(n)


def gnp(n: int, p: float, seed: int) -> Graph:
    _check_size(n)
    if not 0.0 <= p <= 1.0:
        raise GraphInputError(f"edge probability must lie in [0, 1], got {p}")
    threshold = int(p * (1 << 64))
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next() < threshold:
                edges.append((u, v))
    return Graph(n, edges)


def p7free_many_separators(n: int) -> Graph:
    raise NotImplementedError(
        "the P7-free, triangle-free family with 3^n minimal separators is only "
        "cited in the literature; its construction is not provided here"
    )


def _check_size(n):
    if not isinstance(n, int) or n < 0:
        raise GraphInputError(f"size must be a non-negative int, got {n!r}")


class Family(enum.Enum):
    PRISM = "prism"
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    EDGELESS = "edgeless"
    GNP = "gnp"


_BUILDERS = {
    Family.PRISM: prism,
    Family.PATH: path,
    Family.CYCLE: cycle,
    Family.COMPLETE: complete,
    Family.EDGELESS: edgeless,
}


@dataclass(frozen=True)
class GenSpec:
    family: Family
    size: int
    p: Optional[float] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if self.size < 0:
            raise GraphInputError("size must be non-negative")
        if self.family is Family.GNP:
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise GraphInputError("gnp needs a probability in [0, 1]")
            if self.seed is None:
                raise GraphInputError("gnp needs a seed")

    @classmethod
    def parse(cls, text: str, seed: Optional[int] = None) -> "GenSpec":
        """Parse ``family:size[:p:seed]``; ``seed`` fills in a missing gnp seed."""
        parts = text.strip().split(":")
        try:
            family = Family(parts[0].lower())
        except ValueError:
            raise GraphInputError(f"unknown family {parts[0]!r}") from None
        if len(parts) < 2:
            raise GraphInputError(f"missing size in {text!r}")
        try:
            size = int(parts[1])
            p = float(parts[2]) if len(parts) > 2 else None
            sd = int(parts[3], 0) if len(parts) > 3 else seed
        except ValueError:
            raise GraphInputError(f"malformed family spec {text!r}") from None
        if len(parts) > 4 or (family is not Family.GNP and len(parts) > 2):
            raise GraphInputError(f"too many fields in {text!r}")
        return cls(family, size, p, sd)

    def build(self) -> Graph:
        if self.family is Family.GNP:
            return gnp(self.size, self.p, self.seed)
        return _BUILDERS[self.family](self.size)
