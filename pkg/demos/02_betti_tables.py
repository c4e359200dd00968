"""Graded Betti numbers of R/I for hooks, from the closed-form Poincare series.

J (all squarefree monomials of degree b+1) has linear quotients, so its
resolution comes from the colon sizes; adding e_1..e_b, a regular sequence,
multiplies the series by (1 + q t^k) for each k. Both routes agree.
"""

from dpideals import Hook, betti_table, poincare_hook, poincare_J_hook
from dpideals.ideals import linear_quotients_lex, hook_split
from dpideals.series import herzog_takayama_poincare, mapping_cone_shift

for h in [Hook(2, 1), Hook(1, 2), Hook(2, 3)]:
    P = poincare_hook(h)
    print(f"hook {h}, n = {h.n}")
    print("P(q,t) =", P)
    print(betti_table(P).render("m2"))

h = Hook(3, 2)
ok, sizes = linear_quotients_lex(hook_split(h).monomial_part)
from_colons = herzog_takayama_poincare(sizes, h.b + 1)
cone = from_colons
for k in range(1, h.b + 1):
    cone = mapping_cone_shift(cone, k)
print(f"{h}: linear quotients {ok}, colon sizes give P_J exactly: {from_colons == poincare_J_hook(h)}")
print(f"{h}: after the mapping cones: {cone == poincare_hook(h)}")
