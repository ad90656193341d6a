"""
Extremal colourings
===================

The lower-bound colourings behind r(C_n, K_m) and r_*(C_n, K_m), built and
checked by exact search at full size.
"""

import time

from ramsey_star import graph as gc
from ramsey_star.coloring import verify_coloring
from ramsey_star.constructions import (
    ConstructionParams,
    build_ramsey_critical,
    build_star_critical,
    center_degree,
    ramsey_formula_cycle_clique,
    star_critical_formula,
)

# %%
# Critical colouring: red is (m-1) disjoint copies of K_{n-1}, so red has no
# C_n, and blue is complete (m-1)-partite, so blue has no K_m.
p = ConstructionParams(24, 7)
crit = build_ramsey_critical(p)
print("critical host order", crit.host.order, "= r - 1 with r =", ramsey_formula_cycle_clique(p).value)
print("verdict:", verify_coloring(crit, p.n, p.m).to_dict())

# %%
# Star-critical colouring: add a centre, colour one edge to the last clique
# red (a pendant edge, so no new red cycle) and delete the other n-2 edges to
# that clique.  The centre then has blue neighbours in only m-2 parts.
for n, m in [(24, 7), (30, 7), (35, 8)]:
    p = ConstructionParams(n, m)
    t0 = time.monotonic()
    c = build_star_critical(p)
    verdict = verify_coloring(c, n, m)
    print(
        f"n={n} m={m}: order {c.host.order}, deleted star K_1,{c.host.star_k}, "
        f"centre degree {center_degree(c)}, good={verdict.good}, "
        f"bound r_* >= {center_degree(c) + 1} (closed form {star_critical_formula(p).value}), "
        f"{time.monotonic() - t0:.2f}s"
    )

# %%
# The blue graph of the star-critical colouring has clique number m-1.
c = build_star_critical(ConstructionParams(24, 7))
print("blue clique number:", gc.clique_number(c.blue()))
