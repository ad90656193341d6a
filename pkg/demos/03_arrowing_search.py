"""
Arrowing search and small Ramsey values
=======================================

Backtracking over red/blue colourings with on-the-fly pruning, checked
against a vectorised enumeration of every colouring.
"""

import time

from ramsey_star.arrowing import (
    SearchBudget,
    arrows,
    brute_force_arrows,
    compute_ramsey,
    compute_star_critical,
)
from ramsey_star.coloring import HostSpec

# %%
# K_5 does not arrow (C_3, K_3): the search returns the pentagon colouring.
v = arrows(HostSpec.complete(5), 3, 3)
print(v.status, "witness red edges:", v.witness.red.edges())

# %%
# Small Ramsey numbers by scanning N upward.  Each is cross-checked against
# full enumeration on K_{r-1} and K_r.
for target, m in [(("cycle", 3), 3), (("cycle", 4), 3), (("path", 3), 3), (("path", 4), 3)]:
    t0 = time.monotonic()
    r = compute_ramsey(target, m)
    below = brute_force_arrows(HostSpec.complete(r.value - 1), target[1], m, target[0])[0]
    at = brute_force_arrows(HostSpec.complete(r.value), target[1], m, target[0])[0]
    print(f"r({target[0]} {target[1]}, K_{m}) = {r.value}  enumeration agrees: {not below and at}  "
          f"{r.nodes} nodes, {time.monotonic() - t0:.2f}s")

# %%
# Star-critical values: K_{r-1} plus a centre joined to k vertices, for every k.
for n in (3, 4):
    s = compute_star_critical(n, 3)
    print(f"r_*(C_{n}, K_3) = {s.value}; scan {s.scan}")

# %%
# Budgets make hard instances return "inconclusive" instead of running forever.
print(arrows(HostSpec.complete(7), 4, 3, SearchBudget(max_nodes=20)).status)
