"""Immutable simple graphs over a dense vertex range, with exact search routines.

Adjacency is stored as one Python ``int`` bitmask per vertex; bit ``j`` of row
``i`` is set iff ``{i, j}`` is an edge. Every exponential routine takes a
``node_budget`` and raises :class:`SearchBudgetExceeded` instead of guessing.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

DEFAULT_NODE_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    """An exact search ran out of its node budget."""


class _Counter:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int | None):
        self.nodes = 0
        self.limit = limit

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise SearchBudgetExceeded(f"node budget of {self.limit} exhausted")


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected simple graph on vertices ``0 .. order-1``."""

    __slots__ = ("_order", "_adj")

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        if order < 0:
            raise ValueError("order must be non-negative")
        adj = [0] * order
        for i, j in edges:
            if not (0 <= i < order and 0 <= j < order):
                raise ValueError(f"edge ({i}, {j}) out of range for order {order}")
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self._order = order
        self._adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        order = len(masks)
        full = (1 << order) - 1
        for i, row in enumerate(masks):
            if row & ~full:
                raise ValueError(f"row {i} references a vertex out of range")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in bits(row):
                if not masks[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")
        g = cls.__new__(cls)
        g._order = order
        g._adj = tuple(masks)
        return g

    @property
    def order(self) -> int:
        return self._order

    @property
    def masks(self) -> tuple[int, ...]:
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self._adj[v]))

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self._adj[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(i, j)`` with ``i < j``, sorted lexicographically."""
        return [(i, j) for i in range(self._order) for j in bits(self._adj[i] >> (i + 1) << (i + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._order, self._adj))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={self.num_edges})"


# -- small constructors -----------------------------------------------------


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph.from_masks([full & ~(1 << i) for i in range(n)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    return complement(disjoint_union([complete_graph(s) for s in sizes]))


# -- structural operations ----------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph.from_masks([full & ~row & ~(1 << i) for i, row in enumerate(g.masks)])


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    masks: list[int] = []
    offset = 0
    for h in graphs:
        masks.extend(row << offset for row in h.masks)
        offset += h.order
    return Graph.from_masks(masks)


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(g.order, list(g.edges()) + list(edges))


def remove_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    masks = list(g.masks)
    for i, j in edges:
        masks[i] &= ~(1 << j)
        masks[j] &= ~(1 << i)
    return Graph.from_masks(masks)


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabelled to ``0..k-1`` in ascending order."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} out of range")
    pos = {v: k for k, v in enumerate(keep)}
    keep_mask = mask_of(keep)
    return Graph.from_masks([mask_of(pos[w] for w in bits(g.masks[v] & keep_mask)) for v in keep])


def min_degree(g: Graph) -> int:
    """Minimum degree; 0 for the graph with no vertices."""
    return min((row.bit_count() for row in g.masks), default=0)


def _component_masks(adj: Sequence[int], alive: int) -> list[int]:
    comps = []
    rest = alive
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= alive & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by smallest member."""
    full = (1 << g.order) - 1
    return [frozenset(bits(c)) for c in _component_masks(g.masks, full)]


def _two_core(adj: Sequence[int], alive: int) -> int:
    changed = True
    while changed:
        changed = False
        for v in bits(alive):
            if (adj[v] & alive).bit_count() < 2:
                alive &= ~(1 << v)
                changed = True
    return alive


def _blocks(adj: Sequence[int], alive: int, root: int, extra: tuple[int, int] | None = None) -> list[int]:
    """Vertex masks of the biconnected blocks reachable from ``root``.

    ``extra`` adds one virtual edge. Bridges come out as two-vertex blocks;
    an isolated root yields no block.
    """

    def nbrs(v: int) -> int:
        m = adj[v] & alive
        if extra is not None:
            if v == extra[0]:
                m |= 1 << extra[1]
            elif v == extra[1]:
                m |= 1 << extra[0]
        return m & ~(1 << v)

    disc = {root: 0}
    low = {root: 0}
    clock = 1
    vstack = [root]
    stack = [(root, -1, bits(nbrs(root)))]
    blocks = []
    while stack:
        v, parent, it = stack[-1]
        descended = False
        for w in it:
            if w not in disc:
                disc[w] = low[w] = clock
                clock += 1
                vstack.append(w)
                stack.append((w, v, bits(nbrs(w))))
                descended = True
                break
            if w != parent and disc[w] < low[v]:
                low[v] = disc[w]
        if descended:
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            if low[v] < low[p]:
                low[p] = low[v]
            if low[v] >= disc[p]:
                block = 1 << p
                while True:
                    x = vstack.pop()
                    block |= 1 << x
                    if x == v:
                        break
                blocks.append(block)
    return blocks


def _between(adj: Sequence[int], alive: int, u: int, s: int) -> int:
    """Mask of vertices lying on some simple u-s path inside ``alive``."""
    for block in _blocks(adj, alive, u, extra=(u, s)):
        if block >> s & 1 and block >> u & 1:
            return block
    return 0


# -- independence number (vertex branching) ---------------------------------


def _mis(adj: Sequence[int], alive: int, counter: _Counter) -> int:
    counter.tick()
    if not alive:
        return 0
    comps = _component_masks(adj, alive)
    if len(comps) > 1:
        out = 0
        for c in comps:
            out |= _mis(adj, c, counter)
        return out
    size = alive.bit_count()
    best_v, best_d = -1, -1
    for v in bits(alive):
        d = (adj[v] & alive).bit_count()
        if d <= 1:
            return (1 << v) | _mis(adj, alive & ~(1 << v) & ~adj[v], counter)
        if d > best_d:
            best_v, best_d = v, d
    if best_d == size - 1 and all((adj[v] & alive).bit_count() == size - 1 for v in bits(alive)):
        return alive & -alive
    v = best_v
    take = (1 << v) | _mis(adj, alive & ~(1 << v) & ~adj[v], counter)
    skip = _mis(adj, alive & ~(1 << v), counter)
    return take if take.bit_count() >= skip.bit_count() else skip


def maximum_independent_set(g: Graph, node_budget: int | None = DEFAULT_NODE_BUDGET) -> frozenset[int]:
    full = (1 << g.order) - 1
    return frozenset(bits(_mis(g.masks, full, _Counter(node_budget))))


def independence_number(g: Graph, node_budget: int | None = DEFAULT_NODE_BUDGET) -> int:
    """Exact size of a largest independent set."""
    return len(maximum_independent_set(g, node_budget))


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    m = mask_of(vertices)
    return all(not (g.masks[v] & m) for v in bits(m))


# -- cliques (branch and bound with greedy colouring bound) ------------------


def _color_order(adj: Sequence[int], cand: int) -> list[tuple[int, int]]:
    """Greedy sequential colouring; returns ``(vertex, colour)`` by ascending colour."""
    out = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        q = uncolored
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~(1 << v) & ~adj[v]
            uncolored &= ~(1 << v)
            out.append((v, color))
    return out


def _clique_search(adj: Sequence[int], cand: int, target: int | None, counter: _Counter) -> list[int]:
    best: list[int] = []
    current: list[int] = []

    def expand(p: int) -> bool:
        nonlocal best
        counter.tick()
        order = _color_order(adj, p)
        for v, color in reversed(order):
            bound = len(current) + color
            if target is None:
                if bound <= len(best):
                    return False
            elif bound < target:
                return False
            current.append(v)
            sub = p & adj[v]
            if len(current) > len(best):
                best = list(current)
                if target is not None and len(best) >= target:
                    return True
            if sub and expand(sub):
                return True
            current.pop()
            p &= ~(1 << v)
        return False

    expand(cand)
    return best


def find_clique(
    g: Graph,
    size: int,
    within: Iterable[int] | None = None,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
) -> tuple[int, ...] | None:
    """Return a clique on ``size`` vertices (sorted), or ``None`` if there is none."""
    if size < 1:
        raise ValueError("clique size must be at least 1")
    cand = (1 << g.order) - 1 if within is None else mask_of(within)
    if cand.bit_count() < size:
        return None
    found = _clique_search(g.masks, cand, size, _Counter(node_budget))
    if len(found) >= size:
        return tuple(sorted(found[:size]))
    return None


def max_clique_at_least(g: Graph, m: int, node_budget: int | None = DEFAULT_NODE_BUDGET) -> bool:
    return find_clique(g, m, node_budget=node_budget) is not None


def maximum_clique(g: Graph, node_budget: int | None = DEFAULT_NODE_BUDGET) -> tuple[int, ...]:
    full = (1 << g.order) - 1
    return tuple(sorted(_clique_search(g.masks, full, None, _Counter(node_budget))))


def clique_number(g: Graph, node_budget: int | None = DEFAULT_NODE_BUDGET) -> int:
    return len(maximum_clique(g, node_budget))


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    m = mask_of(vs)
    return all((g.masks[v] | (1 << v)) & m == m for v in vs)


# -- fixed-length cycles and paths -------------------------------------------


def _cycle_through(
    adj: Sequence[int], s: int, length: int, allowed: int, counter: _Counter
) -> list[int] | None:
    """Cycle on ``length`` vertices through ``s`` using only ``allowed`` vertices."""
    path = [s]

    def rec(u: int, on: int) -> bool:
        counter.tick()
        depth = len(path)
        if depth == length:
            return bool(adj[u] >> s & 1) and path[1] < u
        alive = (allowed & ~on) | (1 << u) | (1 << s)
        reach = _between(adj, alive, u, s)
        if reach.bit_count() - 2 < length - depth:
            return False
        for w in bits(adj[u] & reach & ~on):
            path.append(w)
            if rec(w, on | (1 << w)):
                return True
            path.pop()
        return False

    for w in bits(adj[s] & allowed):
        path.append(w)
        if rec(w, (1 << s) | (1 << w)):
            return list(path)
        path.pop()
    return None


def _find_cycle_masks(adj: Sequence[int], alive: int, length: int, counter: _Counter) -> list[int] | None:
    core = _two_core(adj, alive)
    pending = [b for c in _component_masks(adj, core) for b in _blocks(adj, c, (c & -c).bit_length() - 1)]
    for block in sorted(pending, key=lambda b: b & -b):
        if block.bit_count() < length:
            continue
        rest = block
        while rest.bit_count() >= length:
            s = (rest & -rest).bit_length() - 1
            found = _cycle_through(adj, s, length, rest, counter)
            if found is not None:
                return found
            rest &= ~(1 << s)
    return None


def find_cycle(g: Graph, length: int, node_budget: int | None = DEFAULT_NODE_BUDGET) -> list[int] | None:
    """A simple cycle on exactly ``length`` vertices, listed in cycle order, or ``None``."""
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    if length > g.order:
        return None
    full = (1 << g.order) - 1
    return _find_cycle_masks(g.masks, full, length, _Counter(node_budget))


def contains_cycle_of_length(g: Graph, length: int, node_budget: int | None = DEFAULT_NODE_BUDGET) -> bool:
    return find_cycle(g, length, node_budget) is not None


def find_cycle_through_edge(
    g_masks: Sequence[int], u: int, v: int, length: int, node_budget: int | None = None
) -> list[int] | None:
    """Cycle on ``length`` vertices using the edge ``uv`` (which must be present)."""
    counter = _Counter(node_budget)
    full = 0
    for i, row in enumerate(g_masks):
        if row:
            full |= 1 << i
    path = [u, v]

    def rec(x: int, on: int) -> bool:
        counter.tick()
        if len(path) == length:
            return bool(g_masks[x] >> u & 1)
        alive = (full & ~on) | (1 << x) | (1 << u)
        reach = _between(g_masks, alive, x, u)
        if reach.bit_count() - 2 < length - len(path):
            return False
        for w in bits(g_masks[x] & reach & ~on):
            path.append(w)
            if rec(w, on | (1 << w)):
                return True
            path.pop()
        return False

    if length < 3 or not g_masks[u] >> v & 1:
        return None
    return list(path) if rec(v, (1 << u) | (1 << v)) else None


def _find_path_masks(adj: Sequence[int], alive: int, k: int, counter: _Counter) -> list[int] | None:
    path: list[int] = []

    def rec(u: int, on: int) -> bool:
        counter.tick()
        if len(path) == k:
            return True
        reach = 0
        for c in _component_masks(adj, (alive & ~on) | (1 << u)):
            if c >> u & 1:
                reach = c
                break
        if reach.bit_count() - 1 < k - len(path):
            return False
        for w in bits(adj[u] & alive & ~on):
            path.append(w)
            if rec(w, on | (1 << w)):
                return True
            path.pop()
        return False

    for comp in _component_masks(adj, alive):
        if comp.bit_count() < k:
            continue
        for s in bits(comp):
            path.append(s)
            if rec(s, 1 << s):
                return list(path)
            path.pop()
    return None


def find_path(g: Graph, k: int, node_budget: int | None = DEFAULT_NODE_BUDGET) -> list[int] | None:
    """A simple path on exactly ``k`` vertices, in path order, or ``None``."""
    if k < 1:
        raise ValueError("path must have at least one vertex")
    if k > g.order:
        return None
    full = (1 << g.order) - 1
    return _find_path_masks(g.masks, full, k, _Counter(node_budget))


def contains_path_on(g: Graph, k: int, node_budget: int | None = DEFAULT_NODE_BUDGET) -> bool:
    return find_path(g, k, node_budget) is not None


def is_cycle(g: Graph, seq: Sequence[int]) -> bool:
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def is_path(g: Graph, seq: Sequence[int]) -> bool:
    if not seq or len(set(seq)) != len(seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))
