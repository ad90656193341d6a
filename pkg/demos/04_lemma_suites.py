"""
Structural lemma checks
=======================

Each checker first tests the hypotheses exactly, then the conclusion, and
reports counterexamples in machine-readable form.
"""

from ramsey_star import graph as gc
from ramsey_star.constructions import ConstructionParams
from ramsey_star.lemmas import (
    NearCycleInstance,
    check_lemma1,
    check_lemma3,
    check_lemma4,
    generate_lemma4_family,
    run_lemma3_suite,
    run_lemma4_suite,
)

# %%
# Minimum degree of a C_n-free graph with small independence number.
print(check_lemma1(gc.disjoint_union([gc.complete_graph(3)] * 3), 4, 3, 7).to_dict())

# %%
# Neighbours of an outside vertex on a C_{n-1} are never consecutive.  Joining
# x to two consecutive cycle vertices creates a C_n, which the gate reports.
c5 = gc.disjoint_union([gc.cycle_graph(5), gc.empty_graph(1)])
ok = NearCycleInstance(gc.add_edges(c5, [(0, 5), (2, 5)]), (0, 1, 2, 3, 4))
bad = NearCycleInstance(gc.add_edges(c5, [(0, 5), (1, 5)]), (0, 1, 2, 3, 4))
print(check_lemma3(ok).conclusion_holds, check_lemma3(bad).details)

print(run_lemma3_suite(300, seed=0).summary())

# %%
# Bridge-forest perturbations of 6K_23 still contain six disjoint K_23.
g = generate_lemma4_family(ConstructionParams(24, 7), seed=1)[0]
rep = check_lemma4(g, 24, 7)
print("edges", g.num_edges, "hypotheses", rep.hypotheses_hold, "packing found", rep.conclusion_holds)
print(run_lemma4_suite(per_param=20, seed=0).summary())
