"""Executable checks of the structural lemmas behind r_*(C_n, K_m), and instance generators.

Every checker evaluates its hypotheses exactly first; a conclusion is only
evaluated on instances that pass.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterator, Sequence

from . import graph as gc
from .constructions import ConstructionParams
from .graph import DEFAULT_NODE_BUDGET, Graph, SearchBudgetExceeded
from .graph6 import to_graph6


@dataclass
class LemmaReport:
    lemma: str
    hypotheses_hold: bool
    conclusion_holds: bool | None
    counterexample: dict | None = None
    inconclusive: bool = False
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def violated(self) -> bool:
        return self.hypotheses_hold and self.conclusion_holds is False

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "hypotheses_hold": self.hypotheses_hold,
            "conclusion_holds": self.conclusion_holds,
            "inconclusive": self.inconclusive,
            "counterexample": self.counterexample,
            "details": self.details,
        }


# -- minimum degree of C_n-free graphs with small independence number ---------


def check_lemma1(g: Graph, n: int, m: int, r_value: int) -> LemmaReport:
    """C_n-free with alpha <= m implies min degree >= |V| - r(C_n, K_m)."""
    cycle = gc.find_cycle(g, n) if n <= g.order else None
    alpha = gc.independence_number(g)
    details = {"alpha": alpha, "order": g.order, "bound": g.order - r_value}
    if cycle is not None or alpha > m:
        details["failed_hypothesis"] = "contains C_n" if cycle is not None else "alpha > m"
        if cycle is not None:
            details["cycle"] = cycle
        return LemmaReport("1", False, None, details=details)
    delta = gc.min_degree(g)
    details["min_degree"] = delta
    if delta >= g.order - r_value:
        return LemmaReport("1", True, True, details=details)
    worst = min(range(g.order), key=g.degree)
    return LemmaReport("1", True, False, {"vertex": worst, "degree": delta}, details=details)


# -- near-cycle structure -----------------------------------------------------


@dataclass(frozen=True)
class NearCycleInstance:
    """A graph with a marked cycle u_1..u_{n-1}; ``n`` is one more than the cycle length."""

    graph: Graph
    cycle: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not gc.is_cycle(self.graph, self.cycle):
            raise ValueError("marked vertices do not form a cycle in the graph")

    @property
    def n(self) -> int:
        return len(self.cycle) + 1

    @property
    def outside(self) -> frozenset[int]:
        return frozenset(range(self.graph.order)) - set(self.cycle)


def clause_d(g: Graph, cycle: tuple[int, ...], m: int) -> tuple[bool, list[dict]]:
    """Check that no vertex of an independent (m-1)-set off ``cycle`` has m-2 cycle neighbours.

    Only the counting part of clause (d) is checked; the caller decides
    whether alpha(G) = m-1 and m <= (n+2)/2. Returns (some set existed, violations).
    """
    on_cycle = set(cycle)
    ys = [v for v in range(g.order) if v not in on_cycle]
    cyc_mask = gc.mask_of(cycle)
    seen = False
    out = []
    for ind in itertools.combinations(ys, m - 1):
        if not gc.is_independent(g, ind):
            continue
        seen = True
        for y in ind:
            k = (g.masks[y] & cyc_mask).bit_count()
            if k >= m - 2:
                out.append({"clause": "d", "x": y, "independent_set": list(ind), "cycle_neighbours": k})
    return seen, out


def check_lemma3(inst: NearCycleInstance, m: int | None = None) -> LemmaReport:
    """Clauses (a)-(c) always; clause (d) when alpha(G) = m-1 <= ... holds.

    Cycle positions are 0-based and taken modulo the cycle length.
    """
    g, cyc, n = inst.graph, inst.cycle, inst.n
    length = len(cyc)
    details: dict[str, Any] = {"n": n, "index_convention": "cycle positions taken modulo n-1"}
    hit = gc.find_cycle(g, n) if n <= g.order else None
    if hit is not None:
        details["failed_hypothesis"] = "contains C_n"
        details["cycle"] = hit
        return LemmaReport("3", False, None, details=details)

    ys = sorted(inst.outside)
    on = {y: [i for i in range(length) if g.has_edge(y, cyc[i])] for y in ys}

    def u(i: int) -> int:
        return cyc[i % length]

    violations = []

    for y in ys:
        for i in on[y]:
            if g.has_edge(y, u(i + 1)):
                violations.append({"clause": "a", "x": y, "i": i})
    for y in ys:
        for i, j in itertools.permutations(on[y], 2):
            if g.has_edge(u(i + 1), u(j + 1)):
                violations.append({"clause": "b", "x": y, "i": i, "j": j})
            for y2 in ys:
                if g.has_edge(y2, u(i + 1)) and g.has_edge(y2, u(j + 2)):
                    violations.append({"clause": "c", "x": y, "x_prime": y2, "i": i, "j": j})

    d_evaluated = False
    if m is not None:
        alpha = gc.independence_number(g)
        details["alpha"] = alpha
        if alpha == m - 1 and 2 * m <= n + 2:
            d_evaluated, found = clause_d(g, cyc, m)
            violations += found
    details["clause_d_evaluated"] = d_evaluated
    if violations:
        return LemmaReport("3", True, False, {"violations": violations}, details=details)
    return LemmaReport("3", True, True, details=details)


def random_near_cycle(
    rng: random.Random,
    n: int,
    order: int,
    density: float | None = None,
    independent_outside: int = 0,
) -> NearCycleInstance:
    """Plant C_{n-1}, then add random edges, rejecting any that would close a C_n.

    ``independent_outside`` off-cycle vertices are kept pairwise non-adjacent,
    which is what makes clause (d) reachable.
    """
    if order < n - 1 + independent_outside:
        raise ValueError("order too small for the planted cycle")
    perm = list(range(order))
    rng.shuffle(perm)
    cyc = perm[: n - 1]
    masks = [0] * order
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        masks[a] |= 1 << b
        masks[b] |= 1 << a
    quiet = set(perm[n - 1 : n - 1 + independent_outside])
    pairs = [
        (a, b)
        for a in range(order)
        for b in range(a + 1, order)
        if not masks[a] >> b & 1 and not (a in quiet and b in quiet)
    ]
    rng.shuffle(pairs)
    p = rng.uniform(0.4, 1.0) if density is None else density
    for a, b in pairs:
        if rng.random() > p:
            continue
        masks[a] |= 1 << b
        masks[b] |= 1 << a
        if gc.find_cycle_through_edge(masks, a, b, n) is not None:
            masks[a] &= ~(1 << b)
            masks[b] &= ~(1 << a)
    return NearCycleInstance(Graph.from_masks(masks), tuple(cyc))


def _lemma3_job(args: tuple[int, int]) -> dict:
    seed, index = args
    rng = random.Random(seed * 1_000_003 + index)
    n = (6, 7, 8)[index % 3]
    planted = rng.randint(2, n // 2) if index % 2 else 0
    order = rng.randint(max(8, n - 1 + planted), 12)
    inst = random_near_cycle(rng, n, order, density=rng.uniform(0.7, 1.0) if planted else None,
                             independent_outside=planted)
    m = gc.independence_number(inst.graph) + 1
    rep = check_lemma3(inst, m)
    return {
        "index": index,
        "n": n,
        "order": order,
        "m": m,
        "hypotheses_hold": rep.hypotheses_hold,
        "conclusion_holds": rep.conclusion_holds,
        "clause_d_evaluated": rep.details.get("clause_d_evaluated", False),
        "counterexample": None
        if not rep.violated
        else {"graph6": to_graph6(inst.graph), "cycle": list(inst.cycle), **rep.counterexample},
    }


@dataclass
class SuiteReport:
    name: str
    seed: int
    instances: list[dict]

    @property
    def violations(self) -> list[dict]:
        return [r for r in self.instances if r["hypotheses_hold"] and r["conclusion_holds"] is False]

    @property
    def gated_out(self) -> int:
        return sum(1 for r in self.instances if not r["hypotheses_hold"])

    @property
    def inconclusive(self) -> int:
        return sum(1 for r in self.instances if r.get("inconclusive"))

    def summary(self) -> dict:
        out = {
            "suite": self.name,
            "seed": self.seed,
            "instances": len(self.instances),
            "hypotheses_failed": self.gated_out,
            "violations": len(self.violations),
            "inconclusive": self.inconclusive,
        }
        if self.name == "lemma3":
            out["clause_d_evaluated"] = sum(1 for r in self.instances if r["clause_d_evaluated"])
        return out


def _map(fn, jobs: Sequence, workers: int) -> list:
    if workers <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def run_lemma3_suite(count: int = 1000, seed: int = 0, workers: int = 1) -> SuiteReport:
    """Seeded near-cycle instances cycling through n = 6, 7, 8 on 8-12 vertices."""
    rows = _map(_lemma3_job, [(seed, i) for i in range(count)], workers)
    return SuiteReport("lemma3", seed, sorted(rows, key=lambda r: r["index"]))


# -- disjoint K_{n-1} packings ------------------------------------------------


def _iter_cliques(adj: Sequence[int], cand: int, size: int, counter: gc._Counter) -> Iterator[int]:
    """Every clique of ``size`` vertices inside ``cand``, as masks."""
    if size == 0:
        yield 0
        return
    chosen = 0

    def rec(p: int, need: int) -> Iterator[int]:
        nonlocal chosen
        counter.tick()
        if need == 0:
            yield chosen
            return
        order = gc._color_order(adj, p)
        if not order or order[-1][1] < need:
            return
        for v in gc.bits(p):
            if (p >> v).bit_count() < need:
                return
            chosen |= 1 << v
            yield from rec(p & adj[v] & ~((1 << (v + 1)) - 1), need - 1)
            chosen &= ~(1 << v)

    yield from rec(cand, size)


def find_clique_packing(
    g: Graph,
    count: int,
    size: int,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
) -> list[tuple[int, ...]] | None:
    """``count`` vertex-disjoint cliques on ``size`` vertices each, or ``None``."""
    adj = g.masks
    counter = gc._Counter(node_budget)

    def pack(alive: int, need: int) -> list[int] | None:
        counter.tick()
        if need == 0:
            return []
        if alive.bit_count() < need * size:
            return None
        v = (alive & -alive).bit_length() - 1
        if (adj[v] & alive).bit_count() >= size - 1:
            for rest in _iter_cliques(adj, adj[v] & alive, size - 1, counter):
                clique = rest | (1 << v)
                tail = pack(alive & ~clique, need - 1)
                if tail is not None:
                    return [clique] + tail
        return pack(alive & ~(1 << v), need)

    found = pack((1 << g.order) - 1, count)
    if found is None:
        return None
    return [tuple(gc.bits(c)) for c in found]


def lemma4_in_range(n: int, m: int) -> bool:
    return (m >= 7 and n >= (m - 3) * (m - 1)) or (m == 6 and n >= 15)


def check_lemma4(g: Graph, n: int, m: int, node_budget: int | None = DEFAULT_NODE_BUDGET) -> LemmaReport:
    """Order (m-1)(n-1), C_n-free, alpha <= m-1  implies  (m-1) disjoint K_{n-1}."""
    details: dict[str, Any] = {"order": g.order, "n": n, "m": m}
    if not lemma4_in_range(n, m):
        details["failed_hypothesis"] = "parameters outside m >= 7, n >= (m-3)(m-1) (or m = 6, n >= 15)"
        return LemmaReport("4", False, None, details=details)
    if g.order != (m - 1) * (n - 1):
        details["failed_hypothesis"] = f"order is not (m-1)(n-1) = {(m - 1) * (n - 1)}"
        return LemmaReport("4", False, None, details=details)
    try:
        hit = gc.find_cycle(g, n, node_budget)
        if hit is not None:
            details["failed_hypothesis"] = "contains C_n"
            details["cycle"] = hit
            return LemmaReport("4", False, None, details=details)
        alpha = gc.independence_number(g, node_budget)
        details["alpha"] = alpha
        if alpha > m - 1:
            details["failed_hypothesis"] = "alpha >= m"
            return LemmaReport("4", False, None, details=details)
        packing = find_clique_packing(g, m - 1, n - 1, node_budget)
    except SearchBudgetExceeded as exc:
        details["reason"] = str(exc)
        return LemmaReport("4", True, None, inconclusive=True, details=details)
    if packing is None:
        return LemmaReport("4", True, False, {"reason": f"no {m - 1} disjoint K_{n - 1}"}, details=details)
    details["packing"] = [list(c) for c in packing]
    return LemmaReport("4", True, True, details=details)


def lemma4_instance(p: ConstructionParams, bridges: Sequence[tuple[int, int]]) -> Graph:
    """(m-1)K_{n-1} plus the given inter-component edges."""
    size = p.n - 1
    base = gc.disjoint_union([gc.complete_graph(size)] * (p.m - 1))
    return gc.add_edges(base, bridges)


def random_bridge_forest(p: ConstructionParams, rng: random.Random) -> list[tuple[int, int]]:
    """Random forest on the clique quotient, one random edge per forest edge."""
    k = p.m - 1
    size = p.n - 1
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pairs = list(itertools.combinations(range(k), 2))
    rng.shuffle(pairs)
    want = rng.randint(0, k - 1)
    bridges = []
    for a, b in pairs:
        if len(bridges) == want:
            break
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[ra] = rb
        x = a * size + rng.randrange(size)
        y = b * size + rng.randrange(size)
        bridges.append((min(x, y), max(x, y)))
    return sorted(bridges)


def generate_lemma4_family(p: ConstructionParams, seed: int, size: int = 1) -> list[Graph]:
    """``size`` bridge-forest perturbations of (m-1)K_{n-1}, reproducible from ``seed``."""
    if not lemma4_in_range(p.n, p.m):
        raise ValueError("family is only defined for m >= 7, n >= (m-3)(m-1) or m = 6, n >= 15")
    rng = random.Random(seed)
    return [lemma4_instance(p, random_bridge_forest(p, rng)) for _ in range(size)]


def _lemma4_job(args: tuple[int, int, int]) -> dict:
    n, m, seed = args
    g = generate_lemma4_family(ConstructionParams(n, m), seed)[0]
    rep = check_lemma4(g, n, m)
    bridges = g.num_edges - (m - 1) * (n - 1) * (n - 2) // 2
    return {
        "index": seed,
        "n": n,
        "m": m,
        "bridges": bridges,
        "hypotheses_hold": rep.hypotheses_hold,
        "conclusion_holds": rep.conclusion_holds,
        "inconclusive": rep.inconclusive,
        "counterexample": None if not rep.violated else {"graph6": to_graph6(g), **rep.counterexample},
    }


def run_lemma4_suite(
    per_param: int = 100,
    seed: int = 0,
    params: Sequence[tuple[int, int]] = ((24, 7), (15, 6)),
    workers: int = 1,
) -> SuiteReport:
    jobs = [(n, m, seed * 1_000_003 + i) for n, m in params for i in range(per_param)]
    rows = _map(_lemma4_job, jobs, workers)
    return SuiteReport("lemma4", seed, sorted(rows, key=lambda r: (r["n"], r["m"], r["index"])))
