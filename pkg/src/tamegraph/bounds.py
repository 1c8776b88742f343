"""Count minimal separators, PMCs and modules and compare them with the bounds.

All arithmetic is on Python ints, so the large right-hand sides are exact.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import GraphInputError, OracleLimitError
from .graph import Graph
from .modular import connected_modules, strong_modules
from .pmc import enumerate_pmcs_brute, enumerate_pmcs_from_minseps
from .recognition import clique_number, is_pt_free
from .separators import enumerate_minseps_brute, enumerate_minseps_generic, oracle_limit

# checks that must hold on every graph; the rest only on P6-free graphs
UNCONDITIONAL = ("STRONG", "BT_A", "BT_B")


@dataclass(frozen=True)
class Check:
    name: str
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs


@dataclass
class BoundsReport:
    n: int
    k: int
    a: int
    b: int
    strong_module_count: int
    connected_module_count: int
    is_p6_free: bool
    method: str
    checks: list = field(default_factory=list)

    def required(self, check: Check) -> bool:
        return check.name in UNCONDITIONAL or self.is_p6_free

    @property
    def ok(self) -> bool:
        """True unless a check that must hold for this graph failed."""
        return all(c.passed for c in self.checks if self.required(c))

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "a": self.a,
            "b": self.b,
            "strong_module_count": self.strong_module_count,
            "connected_module_count": self.connected_module_count,
            "is_p6_free": self.is_p6_free,
            "method": self.method,
            "ok": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "lhs": c.lhs,
                    "rhs": c.rhs,
                    "pass": c.passed,
                    "required": self.required(c),
                }
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"n {self.n}",
            f"k {self.k}",
            f"a {self.a}",
            f"b {self.b}",
            f"strong_module_count {self.strong_module_count}",
            f"connected_module_count {self.connected_module_count}",
            f"is_p6_free {str(self.is_p6_free).lower()}",
            f"method {self.method}",
        ]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            tag = "" if self.required(c) else " (informational)"
            lines.append(f"check {c.name} {c.lhs} <= {c.rhs} {status}{tag}")
        lines.append(f"ok {str(self.ok).lower()}")
        return "\n".join(lines)


def verify_bounds(g: Graph, limit: Optional[int] = None) -> BoundsReport:
    """Compute every count for ``g`` and evaluate the seven bound checks.

    Brute-force enumerators are used up to the oracle limit and the
    polynomial enumerators above it. ``k`` is always the exact clique number.
    """
    n = g.n
    if n < 1:
        raise GraphInputError("bounds are evaluated on graphs with at least one vertex")
    limit = oracle_limit() if limit is None else limit
    try:
        seps = enumerate_minseps_brute(g, limit)
        pmcs = enumerate_pmcs_brute(g, limit)
        method = "brute"
    except OracleLimitError:
        seps = enumerate_minseps_generic(g)
        pmcs = enumerate_pmcs_from_minseps(g, seps)
        method = "generic"
    k = clique_number(g)
    a, b = len(seps), len(pmcs)
    sm = len(strong_modules(g))
    cm = len(connected_modules(g, k))
    checks = [Check("MINSEP_MAIN", a, (2 * n) ** (k + 1))]
    if n >= 2 and k >= 2:
        checks.append(Check("MINSEP_REFINED", a, (2 * n) ** k * (2 * n - 1)))
    checks += [
        Check("PMC_MAIN", b, 2 ** (2 * k + 2) * n ** (2 * k + 3)),
        Check("BT_B", b, n * (a * a + a + 1)),
        Check("BT_A", a, n * b),
        Check("STRONG", sm, 2 * n - 1),
        Check("CONNMOD", cm, 2**k * (2 * n - 1)),
    ]
    return BoundsReport(n, k, a, b, sm, cm, is_pt_free(g, 6), method, checks)
