"""Hilbert series of R/I for hooks, three ways, and the total dimension.

The closed form, the factorization prod (1 - q^i) * H(R/J), and a brute-force
count of standard monomials must agree coefficient by coefficient. At q = 1
the series gives dim R/I = n!/(a+1)!.
"""

import time
from math import factorial

from dpideals import hilbert_hook, hilbert_oracle, hilbert_via_factorization, hook_split
from dpideals.partitions import hooks_up_to

start = time.perf_counter()
for h in hooks_up_to(6):
    closed = hilbert_hook(h)
    factored = hilbert_via_factorization(h)
    brute = hilbert_oracle(hook_split(h).flat(), h.n, h.b * (h.b + 1) // 2 + 1)
    agree = closed == factored and brute.dims == closed.coeffs + [0]
    print(f"{str(h):7} {closed.render('q'):60} dim {closed(1):4} = {factorial(h.n) // factorial(h.a + 1):4}  {'ok' if agree else 'MISMATCH'}")
print(f"({time.perf_counter() - start:.1f} s)")
