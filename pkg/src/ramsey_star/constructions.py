"""Closed-form Ramsey values and the extremal colourings that realise their lower bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .coloring import HostSpec, TwoColoring


class FormulaRangeError(ValueError):
    """A closed form was requested outside the range where it is established."""


@dataclass(frozen=True)
class ConstructionParams:
    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"cycle length n={self.n} must be at least 3")
        if self.m < 2:
            raise ValueError(f"clique order m={self.m} must be at least 2")

    @property
    def theorem_range(self) -> bool:
        return self.m >= 7 and self.n >= (self.m - 3) * (self.m - 1)


@dataclass(frozen=True)
class RamseyValue:
    kind: str  # "cycle_vs_clique" | "path_vs_clique" | "star_critical"
    value: int
    provenance: str  # "formula" | "oracle"
    params: tuple[int, int] = ()
    witness: TwoColoring | None = field(default=None, compare=False, repr=False)
    nodes: int = field(default=0, compare=False)
    scan: tuple[Any, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError("Ramsey values are positive")


# r(C_n, K_m) for (n, m) outside the closed-form range, each re-derived by
# exhaustive search in the test suite.
SMALL_CYCLE_CLIQUE = {(3, 3): 6, (4, 3): 7}


def ramsey_formula_cycle_clique(p: ConstructionParams) -> RamseyValue:
    """r(C_n, K_m) = (m-1)(n-1) + 1 in the theorem range, else the oracle table."""
    if p.theorem_range:
        return RamseyValue("cycle_vs_clique", (p.m - 1) * (p.n - 1) + 1, "formula", (p.n, p.m))
    if (p.n, p.m) in SMALL_CYCLE_CLIQUE:
        return RamseyValue("cycle_vs_clique", SMALL_CYCLE_CLIQUE[(p.n, p.m)], "oracle", (p.n, p.m))
    raise FormulaRangeError(
        f"r(C_{p.n}, K_{p.m}) is not established here (need m >= 7 and n >= (m-3)(m-1))"
    )


def star_critical_formula(p: ConstructionParams) -> RamseyValue:
    """r_*(C_n, K_m) = (m-2)(n-1) + 2 for m >= 7, n >= (m-3)(m-1)."""
    if not p.theorem_range:
        raise FormulaRangeError(
            f"r_*(C_{p.n}, K_{p.m}) is not established here (need m >= 7 and n >= (m-3)(m-1))"
        )
    return RamseyValue("star_critical", (p.m - 2) * (p.n - 1) + 2, "formula", (p.n, p.m))


def ramsey_formula_path_clique(k: int, m: int) -> RamseyValue:
    """r(P_k, K_m) = (k-1)(m-1) + 1, P_k being the path on k vertices."""
    if k < 2 or m < 2:
        raise FormulaRangeError("path order and clique order must both be at least 2")
    return RamseyValue("path_vs_clique", (k - 1) * (m - 1) + 1, "formula", (k, m))


def _clique_blocks(count: int, size: int) -> list[tuple[int, int]]:
    edges = []
    for c in range(count):
        base = c * size
        edges.extend((base + i, base + j) for i in range(size) for j in range(i + 1, size))
    return edges


def build_ramsey_critical(p: ConstructionParams) -> TwoColoring:
    """Red (m-1)K_{n-1} on K_{(m-1)(n-1)}; blue is complete (m-1)-partite."""
    order = (p.m - 1) * (p.n - 1)
    return TwoColoring.from_edges(HostSpec.complete(order), _clique_blocks(p.m - 1, p.n - 1))


def star_critical_layout(p: ConstructionParams) -> dict[str, Any]:
    """Vertex roles in :func:`build_star_critical`."""
    size = p.n - 1
    order = (p.m - 1) * size + 1
    last = (p.m - 2) * size
    return {
        "order": order,
        "center": order - 1,
        "pendant": last,
        "cliques": [list(range(c * size, (c + 1) * size)) for c in range(p.m - 1)],
        "leaves": list(range(last + 1, last + size)),
    }


def build_star_critical(p: ConstructionParams) -> TwoColoring:
    """Good colouring of K_{(m-1)(n-1)+1} minus K_{1,n-2}.

    Red is m-1 disjoint K_{n-1} plus one pendant edge from the centre to the
    lowest vertex of the last clique; the deleted star joins the centre to the
    rest of that clique, so in blue the centre sees only the first m-2 cliques.
    """
    if p.n < 4 or p.m < 3:
        raise ValueError("the star-critical construction needs n >= 4 and m >= 3")
    lay = star_critical_layout(p)
    host = HostSpec.star_deleted(lay["order"], lay["leaves"], center=lay["center"])
    red = _clique_blocks(p.m - 1, p.n - 1) + [(lay["pendant"], lay["center"])]
    return TwoColoring.from_edges(host, red)


def center_degree(c: TwoColoring) -> int:
    h = c.host
    if h.star_k == 0:
        return h.order - 1
    return c.host.graph().degree(h.center)

