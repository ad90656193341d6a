"""Host graphs (K_N and K_N minus a star) and red/blue colourings of their edges."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator, Sequence

from . import graph as gc
from .graph import DEFAULT_NODE_BUDGET, Graph
from .graph6 import from_graph6, to_graph6

DEFAULT_ENUMERATION_CAP = 28


class HostSpecError(ValueError):
    pass


class EnumerationCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class HostSpec:
    """K_N with ``star_k`` edges ``{center, leaf}`` removed (none when ``star_k == 0``)."""

    order: int
    star_k: int = 0
    center: int | None = None
    leaves: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "leaves", frozenset(self.leaves))
        if self.order < 0:
            raise HostSpecError("order must be non-negative")
        if self.star_k < 0:
            raise HostSpecError("star_k must be non-negative")
        if self.star_k == 0:
            return
        if self.star_k > self.order - 1:
            raise HostSpecError(f"cannot delete {self.star_k} star edges from K_{self.order}")
        if self.center is None or not 0 <= self.center < self.order:
            raise HostSpecError(f"center {self.center} out of range")
        if self.center in self.leaves:
            raise HostSpecError("center listed among removed leaves")
        if len(self.leaves) != self.star_k:
            raise HostSpecError(f"expected {self.star_k} distinct leaves, got {len(self.leaves)}")
        if any(not 0 <= v < self.order for v in self.leaves):
            raise HostSpecError("leaf out of range")

    @classmethod
    def complete(cls, order: int) -> "HostSpec":
        return cls(order)

    @classmethod
    def star_deleted(cls, order: int, leaves: Sequence[int], center: int | None = None) -> "HostSpec":
        if len(set(leaves)) != len(leaves):
            raise HostSpecError("duplicate leaves")
        if center is None:
            center = order - 1
        return cls(order, len(leaves), center, frozenset(leaves))

    @classmethod
    def center_joined(cls, base: int, k: int) -> "HostSpec":
        """K_base plus a new vertex ``base`` joined to vertices ``0..k-1``."""
        if not 0 <= k <= base:
            raise HostSpecError(f"center degree {k} outside 0..{base}")
        return cls.star_deleted(base + 1, list(range(k, base)), center=base)

    @property
    def is_complete(self) -> bool:
        return self.star_k == 0

    def graph(self) -> Graph:
        return host_graph(self)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "star_k": self.star_k,
            "center": self.center if self.star_k else None,
            "leaves": sorted(self.leaves) if self.star_k else [],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "HostSpec":
        k = int(d.get("star_k", 0))
        leaves = [int(v) for v in d.get("leaves", [])]
        if k and len(set(leaves)) != len(leaves):
            raise HostSpecError("duplicate leaves")
        if k == 0:
            return cls(int(d["order"]))
        return cls(int(d["order"]), k, d.get("center"), frozenset(leaves))


def host_graph(h: HostSpec) -> Graph:
    g = gc.complete_graph(h.order)
    if h.star_k:
        g = gc.remove_edges(g, [(h.center, leaf) for leaf in h.leaves])
    return g


def host_spec_of(g: Graph) -> HostSpec:
    """Recover the HostSpec realised by ``g``; ties on the centre go to the higher index."""
    n = g.order
    missing = gc.complement(g).edges()
    if not missing:
        return HostSpec(n)
    ends = set(missing[0])
    for e in missing[1:]:
        ends &= set(e)
    if not ends:
        raise HostSpecError("graph is neither complete nor a star-deleted complete graph")
    center = max(ends)
    leaves = [a if b == center else b for a, b in missing]
    return HostSpec.star_deleted(n, leaves, center)


@dataclass(frozen=True)
class TwoColoring:
    """Red subgraph of a host; blue is every host edge that is not red."""

    host: HostSpec
    red: Graph

    def __post_init__(self) -> None:
        if self.red.order != self.host.order:
            raise ValueError("red graph order differs from host order")
        hg = host_graph(self.host)
        for i, row in enumerate(self.red.masks):
            if row & ~hg.masks[i]:
                raise ValueError(f"red edge at vertex {i} is not a host edge")

    @classmethod
    def from_edges(cls, host: HostSpec, red_edges) -> "TwoColoring":
        return cls(host, Graph(host.order, red_edges))

    def blue(self) -> Graph:
        hg = host_graph(self.host)
        return Graph.from_masks([h & ~r for h, r in zip(hg.masks, self.red.masks)])

    def swapped(self) -> "TwoColoring":
        return TwoColoring(self.host, self.blue())

    def to_dict(self) -> dict:
        return {"host": self.host.to_dict(), "red_edges": [list(e) for e in self.red.edges()]}

    @classmethod
    def from_dict(cls, d: dict) -> "TwoColoring":
        host = HostSpec.from_dict(d["host"])
        edges = []
        for e in d["red_edges"]:
            i, j = int(e[0]), int(e[1])
            edges.append((min(i, j), max(i, j)))
        return cls.from_edges(host, edges)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "TwoColoring":
        return cls.from_dict(json.loads(text))

    def to_graph6_pair(self) -> tuple[str, str]:
        return to_graph6(host_graph(self.host)), to_graph6(self.red)

    @classmethod
    def from_graph6_pair(cls, host_g6: str, red_g6: str) -> "TwoColoring":
        return cls(host_spec_of(from_graph6(host_g6)), from_graph6(red_g6))


def save_coloring(c: TwoColoring, path: str | Path) -> None:
    Path(path).write_text(json.dumps(c.to_dict(), indent=1) + "\n")


def load_coloring(path: str | Path) -> TwoColoring:
    return TwoColoring.from_dict(json.loads(Path(path).read_text()))


@dataclass(frozen=True)
class ColoringVerdict:
    red_cycle_found: list[int] | None
    blue_clique_found: tuple[int, ...] | None

    @property
    def good(self) -> bool:
        return self.red_cycle_found is None and self.blue_clique_found is None

    def to_dict(self) -> dict:
        return {
            "good": self.good,
            "red_cycle_found": self.red_cycle_found,
            "blue_clique_found": list(self.blue_clique_found) if self.blue_clique_found else None,
        }


def verify_coloring(
    c: TwoColoring,
    n: int,
    m: int,
    red_kind: str = "cycle",
    node_budget: int | None = DEFAULT_NODE_BUDGET,
) -> ColoringVerdict:
    """Exact check for a red C_n (or red P_n with ``red_kind="path"``) and a blue K_m.

    ``SearchBudgetExceeded`` propagates.
    """
    if red_kind == "cycle":
        if n < 3:
            raise ValueError("cycle length must be at least 3")
        red_hit = gc.find_cycle(c.red, n, node_budget)
    elif red_kind == "path":
        if n < 1:
            raise ValueError("path must have at least one vertex")
        red_hit = gc.find_path(c.red, n, node_budget)
    else:
        raise ValueError(f"unknown red target kind {red_kind!r}")
    if m < 2:
        raise ValueError("clique order must be at least 2")
    blue_hit = gc.find_clique(c.blue(), m, node_budget=node_budget)
    return ColoringVerdict(red_hit, blue_hit)


def host_edges(h: HostSpec) -> list[tuple[int, int]]:
    return host_graph(h).edges()


def iter_red_masks(h: HostSpec, fixed: Sequence[bool] = (), cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[int]:
    """Red edge sets as bitmasks over ``host_edges(h)``; bit e is edge e.

    ``fixed[e]`` pins the colour of edge ``e`` (True = red) for the leading edges,
    which partitions the space for parallel workers.
    """
    e = len(host_edges(h))
    if e > cap:
        raise EnumerationCapExceeded(f"host has {e} edges, enumeration cap is {cap}")
    if len(fixed) > e:
        raise ValueError("more fixed edges than host edges")
    t = len(fixed)
    base = sum(1 << i for i, red in enumerate(fixed) if red)
    for high in range(1 << (e - t)):
        yield base | (high << t)


def enumerate_colorings(
    h: HostSpec,
    visitor: Callable[[TwoColoring], object],
    cap: int = DEFAULT_ENUMERATION_CAP,
    fixed: Sequence[bool] = (),
) -> int:
    """Call ``visitor`` on every red subgraph of the host; returns the number visited.

    Colour vectors ``(colour(edge_0), colour(edge_1), ...)`` over the sorted host
    edges are visited in lexicographic order, blue before red.
    """
    edges = host_edges(h)
    e = len(edges)
    if e > cap:
        raise EnumerationCapExceeded(f"host has {e} edges, enumeration cap is {cap}")
    if len(fixed) > e:
        raise ValueError("more fixed edges than host edges")
    head = tuple(bool(x) for x in fixed)
    count = 0
    for tail in itertools.product((False, True), repeat=e - len(head)):
        colours = head + tail
        red = Graph(h.order, [edge for edge, is_red in zip(edges, colours) if is_red])
        visitor(TwoColoring(h, red))
        count += 1
    return count
