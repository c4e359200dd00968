"""Tanisaki generators of (3,1) and the hook split I = J + E.

For mu = (3,1,0,0) the thresholds delta_k are (0,1,2,4): k = 1 contributes
nothing, k = 2 gives all squarefree quadratics, k = 3 gives e_2 and e_3 on
each 3-subset, and k = 4 gives e_1..e_4 in all variables. Most of that list is
redundant: the ideal is already generated by the six quadratics and e_1.
"""

from dpideals import Hook, hook_split, make_partition, tanisaki_generators
from dpideals.ideals import equal_as_ideals_truncated
from dpideals.polyring import render

mu = make_partition([3, 1])
gens = tanisaki_generators(mu)
print(f"mu = {mu}: {len(gens)} Tanisaki generators")
for g in gens:
    print("  ", render(g))

split = hook_split(Hook(2, 1))
print("\nhook split for (2|1):")
print("  J =", split.monomial_part)
print("  E =", [render(e) for e in split.symmetric_part])

same = equal_as_ideals_truncated(gens, split.flat(), 4, 4)
print("\nsame ideal up to degree 4:", same)
