"""
Graph toolkit
=============

Exact invariants on small graphs: independence number, cliques, fixed-length
cycles and paths, plus graph6 and DOT output.
"""

from ramsey_star import graph as gc
from ramsey_star.graph6 import from_graph6, to_dot, to_graph6

# %%
# The Petersen graph is triangle-free with independence number 4.  It has
# cycles of lengths 5, 6, 8 and 9 but none of length 7 or 10.
p = gc.petersen_graph()
print("alpha(Petersen) =", gc.independence_number(p))
print("omega(Petersen) =", gc.clique_number(p))
print("cycle lengths:", [k for k in range(3, 11) if gc.contains_cycle_of_length(p, k)])

# %%
# Six disjoint copies of K_23 joined by a path of bridges.  The bridges lie on
# no cycle, so the graph still has no C_24, and the search sees that at once
# because it works block by block.
cliques = gc.disjoint_union([gc.complete_graph(23)] * 6)
bridged = gc.add_edges(cliques, [(23 * i + 5, 23 * (i + 1)) for i in range(5)])
print("order", bridged.order, "edges", bridged.num_edges)
print("alpha =", gc.independence_number(bridged), " C_24 present:", gc.contains_cycle_of_length(bridged, 24))

# %%
# A second bridge between the same two cliques closes cycles of every length
# from 4 to 46.
doubled = gc.add_edges(cliques, [(0, 23), (1, 24)])
cycle = gc.find_cycle(doubled, 24)
print("C_24 after a double bridge:", cycle)

# %%
# graph6 round trip and DOT export.
text = to_graph6(p)
print("graph6:", text, "round trip ok:", from_graph6(text) == p)
print(to_dot(gc.cycle_graph(4), red_edges=[(0, 1), (2, 3)]))
