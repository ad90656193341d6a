"""Deciding host -> (red C_n or P_k, blue K_m) by backtracking, plus brute-force oracles.

The search builds the red graph edge by edge in lexicographic order, red
branch first. A branch dies as soon as the new red edge closes the red target
or the new blue edge completes a blue K_m among already-decided edges.
"""

from __future__ import annotations

import csv
import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from . import graph as gc
from .coloring import (
    HostSpec,
    TwoColoring,
    enumerate_colorings,
    host_edges,
    host_graph,
    verify_coloring,
)
from .constructions import RamseyValue
from .graph import Graph, SearchBudgetExceeded

ARROWS = "arrows"
DOES_NOT_ARROW = "does_not_arrow"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 10**8
    max_seconds: float = 300.0
    deterministic: bool = True
    max_edges: int = 64

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.max_seconds <= 0 or self.max_edges <= 0:
            raise ValueError("budget limits must be positive")

    def to_dict(self) -> dict:
        return {
            "max_nodes": self.max_nodes,
            "max_seconds": self.max_seconds,
            "deterministic": self.deterministic,
            "max_edges": self.max_edges,
        }


@dataclass(frozen=True)
class ArrowingVerdict:
    status: str
    host: HostSpec
    n: int
    m: int
    red_kind: str = "cycle"
    witness: TwoColoring | None = None
    nodes: int = 0
    red_prunes: int = 0
    blue_prunes: int = 0
    seconds: float = field(default=0.0, compare=False)
    reason: str | None = None

    @property
    def arrows(self) -> bool:
        return self.status == ARROWS

    def to_record(self, budget: SearchBudget, witness_ref: str | None = None) -> dict:
        return {
            "host": self.host.to_dict(),
            "red_kind": self.red_kind,
            "n": self.n,
            "m": self.m,
            "status": self.status,
            "witness_ref": witness_ref,
            "nodes": self.nodes,
            "seconds": round(self.seconds, 6),
            "budget": budget.to_dict(),
        }


class _Timeout(Exception):
    pass


def _symmetry_links(h: HostSpec, edges: Sequence[tuple[int, int]]) -> list[int]:
    """``links[e] = f`` means edge ``e`` may be red only if edge ``f`` is red.

    Vertex 0 is fixed; the other vertices fall into classes that host
    automorphisms fixing 0 may permute freely (for K_N, all of them). Within a
    class the red neighbours of 0 can then be taken to form a prefix.
    """
    links = [-1] * len(edges)
    index = {e: i for i, e in enumerate(edges)}

    def cls(w: int) -> tuple[bool, bool]:
        return (h.star_k > 0 and w == h.center, w in h.leaves)

    prev: dict[tuple[bool, bool], int] = {}
    for w in range(1, h.order):
        if (0, w) not in index:
            continue
        key = cls(w)
        if key in prev:
            links[index[(0, w)]] = index[(0, prev[key])]
        prev[key] = w
    return links


class _Search:
    def __init__(
        self,
        h: HostSpec,
        n: int,
        m: int,
        red_kind: str,
        budget: SearchBudget,
        symmetry: bool,
    ):
        self.h = h
        self.n = n
        self.m = m
        self.red_kind = red_kind
        self.edges = host_edges(h)
        self.links = _symmetry_links(h, self.edges) if symmetry else [-1] * len(self.edges)
        self.red = [0] * h.order
        self.blue = [0] * h.order
        self.colour = [None] * len(self.edges)
        self.max_nodes = budget.max_nodes
        self.deadline = time.monotonic() + budget.max_seconds
        self.nodes = 0
        self.red_prunes = 0
        self.blue_prunes = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise SearchBudgetExceeded(f"node budget of {self.max_nodes} exhausted")
        if self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _Timeout

    def _red_hit(self, u: int, v: int) -> bool:
        if self.red_kind == "cycle":
            return gc.find_cycle_through_edge(self.red, u, v, self.n) is not None
        comp = 0
        for c in gc._component_masks(self.red, (1 << self.h.order) - 1):
            if c >> u & 1:
                comp = c
                break
        if comp.bit_count() < self.n:
            return False
        return gc._find_path_masks(self.red, comp, self.n, gc._Counter(None)) is not None

    def _blue_hit(self, u: int, v: int) -> bool:
        if self.m == 2:
            return True
        common = self.blue[u] & self.blue[v]
        if common.bit_count() < self.m - 2:
            return False
        if self.m == 3:
            return True
        found = gc._clique_search(self.blue, common, self.m - 2, gc._Counter(None))
        return len(found) >= self.m - 2

    def assign(self, idx: int, red: bool) -> bool:
        """Colour edge ``idx``; False (and state unchanged) if that kills the branch."""
        u, v = self.edges[idx]
        if red:
            link = self.links[idx]
            if link >= 0 and self.colour[link] is not True:
                return False
            self.red[u] |= 1 << v
            self.red[v] |= 1 << u
            if self._red_hit(u, v):
                self.red_prunes += 1
                self.red[u] &= ~(1 << v)
                self.red[v] &= ~(1 << u)
                return False
        else:
            self.blue[u] |= 1 << v
            self.blue[v] |= 1 << u
            if self._blue_hit(u, v):
                self.blue_prunes += 1
                self.blue[u] &= ~(1 << v)
                self.blue[v] &= ~(1 << u)
                return False
        self.colour[idx] = red
        return True

    def unassign(self, idx: int) -> None:
        u, v = self.edges[idx]
        target = self.red if self.colour[idx] else self.blue
        target[u] &= ~(1 << v)
        target[v] &= ~(1 << u)
        self.colour[idx] = None

    def run(self, start: int) -> bool:
        """Depth-first from edge ``start``; True when every edge got a colour."""
        self._tick()
        if start == len(self.edges):
            return True
        for red in (True, False):
            if self.assign(start, red):
                if self.run(start + 1):
                    return True
                self.unassign(start)
        return False

    def prefixes(self, depth: int) -> list[tuple[bool, ...]]:
        out: list[tuple[bool, ...]] = []

        def rec(idx: int) -> None:
            if idx == depth:
                out.append(tuple(self.colour[:depth]))
                return
            for red in (True, False):
                if self.assign(idx, red):
                    rec(idx + 1)
                    self.unassign(idx)

        rec(0)
        return out

    def witness(self) -> TwoColoring:
        return TwoColoring(self.h, Graph.from_masks(list(self.red)))


def _check_target(n: int, m: int, red_kind: str) -> None:
    if red_kind == "cycle" and n < 3:
        raise ValueError("cycle length must be at least 3")
    if red_kind == "path" and n < 2:
        raise ValueError("path order must be at least 2")
    if red_kind not in ("cycle", "path"):
        raise ValueError(f"unknown red target kind {red_kind!r}")
    if m < 2:
        raise ValueError("clique order must be at least 2")


def _run_prefix(args) -> tuple[str, list[int] | None, int, int, int]:
    h, n, m, red_kind, budget, symmetry, prefix = args
    s = _Search(h, n, m, red_kind, budget, symmetry)
    for idx, red in enumerate(prefix):
        if not s.assign(idx, red):
            return DOES_NOT_ARROW, None, 0, s.red_prunes, s.blue_prunes  # unreachable for valid prefixes
    try:
        found = s.run(len(prefix))
    except (SearchBudgetExceeded, _Timeout):
        return INCONCLUSIVE, None, s.nodes, s.red_prunes, s.blue_prunes
    masks = list(s.red) if found else None
    return (DOES_NOT_ARROW if found else ARROWS), masks, s.nodes, s.red_prunes, s.blue_prunes


def arrows(
    h: HostSpec,
    n: int,
    m: int,
    budget: SearchBudget = SearchBudget(),
    red_kind: str = "cycle",
    workers: int = 1,
    symmetry: bool = True,
) -> ArrowingVerdict:
    """Decide whether every red/blue colouring of the host has a red target or a blue K_m."""
    _check_target(n, m, red_kind)
    t0 = time.monotonic()
    e = len(host_edges(h))
    if e > budget.max_edges:
        return ArrowingVerdict(
            INCONCLUSIVE, h, n, m, red_kind, seconds=time.monotonic() - t0,
            reason=f"host has {e} edges, budget allows {budget.max_edges}",
        )
    if workers <= 1 or budget.deterministic or e < 4:
        s = _Search(h, n, m, red_kind, budget, symmetry)
        try:
            found = s.run(0)
        except (SearchBudgetExceeded, _Timeout) as exc:
            return ArrowingVerdict(
                INCONCLUSIVE, h, n, m, red_kind, nodes=s.nodes, red_prunes=s.red_prunes,
                blue_prunes=s.blue_prunes, seconds=time.monotonic() - t0, reason=type(exc).__name__,
            )
        status = DOES_NOT_ARROW if found else ARROWS
        witness = s.witness() if found else None
        verdict = ArrowingVerdict(
            status, h, n, m, red_kind, witness, s.nodes, s.red_prunes, s.blue_prunes,
            time.monotonic() - t0,
        )
    else:
        verdict = _arrows_parallel(h, n, m, budget, red_kind, workers, symmetry, t0)
    if verdict.witness is not None and not verify_coloring(verdict.witness, n, m, red_kind).good:
        raise RuntimeError("search produced a witness that fails verification")
    return verdict


def _arrows_parallel(h, n, m, budget, red_kind, workers, symmetry, t0) -> ArrowingVerdict:
    e = len(host_edges(h))
    depth = min(e - 1, int(math.ceil(math.log2(workers))) + 3)
    planner = _Search(h, n, m, red_kind, budget, symmetry)
    prefixes = planner.prefixes(depth)
    tasks = [(h, n, m, red_kind, budget, symmetry, p) for p in prefixes]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_run_prefix, tasks))
    nodes = sum(r[2] for r in results)
    red_prunes = planner.red_prunes + sum(r[3] for r in results)
    blue_prunes = planner.blue_prunes + sum(r[4] for r in results)
    # Any good colouring settles the question; when every earlier prefix was
    # fully searched, the first one found matches the sequential witness.
    for status, masks, *_ in results:
        if status == DOES_NOT_ARROW:
            witness = TwoColoring(h, Graph.from_masks(masks))
            return ArrowingVerdict(
                DOES_NOT_ARROW, h, n, m, red_kind, witness, nodes, red_prunes, blue_prunes,
                time.monotonic() - t0,
            )
    if any(r[0] == INCONCLUSIVE for r in results):
        return ArrowingVerdict(
            INCONCLUSIVE, h, n, m, red_kind, None, nodes, red_prunes, blue_prunes,
            time.monotonic() - t0, reason="budget exhausted in a worker",
        )
    return ArrowingVerdict(ARROWS, h, n, m, red_kind, None, nodes, red_prunes, blue_prunes, time.monotonic() - t0)


# -- brute-force oracle ---------------------------------------------------------


def _target_edge_masks(h: HostSpec, size: int, red_kind: str) -> list[int]:
    """Edge masks of every red-target copy (cycle or path on ``size`` vertices) in the host."""
    edges = host_edges(h)
    index = {e: i for i, e in enumerate(edges)}
    masks = set()
    for combo in itertools.combinations(range(h.order), size):
        if red_kind == "cycle":
            orders = ((combo[0],) + p for p in itertools.permutations(combo[1:]))
        else:
            orders = itertools.permutations(combo)
        for seq in orders:
            pairs = zip(seq, seq[1:] + seq[:1]) if red_kind == "cycle" else zip(seq, seq[1:])
            mask = 0
            for a, b in pairs:
                key = (min(a, b), max(a, b))
                if key not in index:
                    break
                mask |= 1 << index[key]
            else:
                masks.add(mask)
    return sorted(masks)


def _clique_edge_masks(h: HostSpec, m: int) -> list[int]:
    edges = host_edges(h)
    index = {e: i for i, e in enumerate(edges)}
    out = []
    for combo in itertools.combinations(range(h.order), m):
        mask = 0
        for pair in itertools.combinations(combo, 2):
            if pair not in index:
                break
            mask |= 1 << index[pair]
        else:
            out.append(mask)
    return out


def brute_force_arrows(
    h: HostSpec,
    n: int,
    m: int,
    red_kind: str = "cycle",
    cap: int = 28,
    chunk: int = 1 << 20,
) -> tuple[bool, int | None]:
    """Check all 2^|E| colourings with vectorised pattern tests.

    Returns ``(arrows, first_good_red_mask)``; bit ``e`` of the mask is host edge ``e``.
    """
    _check_target(n, m, red_kind)
    e = len(host_edges(h))
    if e > cap:
        raise ValueError(f"host has {e} edges, oracle cap is {cap}")
    reds = np.array(_target_edge_masks(h, n, red_kind), dtype=np.int64)
    blues = np.array(_clique_edge_masks(h, m), dtype=np.int64)
    total = 1 << e
    for start in range(0, total, chunk):
        masks = np.arange(start, min(total, start + chunk), dtype=np.int64)
        bad = np.zeros(masks.shape, dtype=bool)
        for p in reds:
            bad |= (masks & p) == p
        for q in blues:
            bad |= (masks & q) == 0
        good = np.flatnonzero(~bad)
        if good.size:
            return False, int(masks[good[0]])
    return True, None


def coloring_from_mask(h: HostSpec, mask: int) -> TwoColoring:
    edges = host_edges(h)
    return TwoColoring.from_edges(h, [edges[i] for i in gc.bits(mask)])


# -- Ramsey and star-critical values --------------------------------------------


class Inconclusive(RuntimeError):
    def __init__(self, verdict: ArrowingVerdict):
        super().__init__(f"search inconclusive on host {verdict.host}: {verdict.reason}")
        self.verdict = verdict


_KIND = {"cycle": "cycle_vs_clique", "path": "path_vs_clique"}


def compute_ramsey(
    target: tuple[str, int],
    m: int,
    budget: SearchBudget = SearchBudget(),
    workers: int = 1,
    start: int = 1,
) -> RamseyValue:
    """Smallest N with K_N -> (target, K_m); the critical colouring on K_{N-1} is kept as witness."""
    red_kind, size = target
    _check_target(size, m, red_kind)
    nodes = 0
    scan = []
    witness = None
    order = start
    while True:
        verdict = arrows(HostSpec.complete(order), size, m, budget, red_kind, workers)
        nodes += verdict.nodes
        scan.append((order, verdict.status))
        if verdict.status == INCONCLUSIVE:
            raise Inconclusive(verdict)
        if verdict.arrows:
            if order > start and witness is None:
                raise RuntimeError("no critical colouring recorded below the Ramsey number")
            return RamseyValue(_KIND[red_kind], order, "oracle", (size, m), witness, nodes, tuple(scan))
        witness = verdict.witness
        order += 1


def compute_star_critical(
    n: int,
    m: int,
    budget: SearchBudget = SearchBudget(),
    r: int | None = None,
    workers: int = 1,
) -> RamseyValue:
    """Smallest k such that K_{r-1} plus a vertex joined to k of its vertices arrows (C_n, K_m).

    Every k from r-1 down to 0 is decided, and the arrowing k must form an
    upper interval; a gap raises ``RuntimeError``.
    """
    if r is None:
        r = compute_ramsey(("cycle", n), m, budget, workers).value
    base = r - 1
    probe = HostSpec.center_joined(base, base)
    if len(host_edges(probe)) > budget.max_edges:
        raise Inconclusive(
            ArrowingVerdict(INCONCLUSIVE, probe, n, m, reason="host edge count exceeds budget")
        )
    scan = []
    nodes = 0
    for k in range(base, -1, -1):
        verdict = arrows(HostSpec.center_joined(base, k), n, m, budget, "cycle", workers)
        nodes += verdict.nodes
        if verdict.status == INCONCLUSIVE:
            raise Inconclusive(verdict)
        scan.append((k, verdict.status))
    arrowing = sorted(k for k, st in scan if st == ARROWS)
    if not arrowing or arrowing != list(range(arrowing[0], base + 1)):
        raise RuntimeError(f"star monotonicity violated: arrowing degrees {arrowing}")
    return RamseyValue("star_critical", arrowing[0], "oracle", (n, m), None, nodes, tuple(sorted(scan)))


REGRESSION_FIELDS = ["kind", "red_size", "m", "value", "provenance", "nodes", "confirmed_by"]


def append_regression_row(path: str | Path, value: RamseyValue, confirmed_by: str = "backtracking") -> None:
    path = Path(path)
    new = not path.exists()
    with path.open("a", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=REGRESSION_FIELDS)
        if new:
            writer.writeheader()
        writer.writerow(
            {
                "kind": value.kind,
                "red_size": value.params[0],
                "m": value.params[1],
                "value": value.value,
                "provenance": value.provenance,
                "nodes": value.nodes,
                "confirmed_by": confirmed_by,
            }
        )


def read_regression_table(path: str | Path) -> list[dict]:
    with Path(path).open(newline="") as fh:
        return list(csv.DictReader(fh))


def naive_arrows(h: HostSpec, n: int, m: int, red_kind: str = "cycle") -> bool:
    """Slow reference: visit every colouring through ``verify_coloring``."""
    hits = []

    def visit(c: TwoColoring) -> None:
        if not hits and verify_coloring(c, n, m, red_kind).good:
            hits.append(c)

    enumerate_colorings(h, visit)
    return not hits


def host_is_supergraph(a: HostSpec, b: HostSpec) -> bool:
    """True if host ``a`` contains every edge of host ``b`` (same order)."""
    ga, gb = host_graph(a), host_graph(b)
    return a.order == b.order and all(ra & rb == rb for ra, rb in zip(ga.masks, gb.masks))
