"""The two counting identities behind the Poincare series.

Cauchy's t-binomial theorem rewrites prod (1 + q t^k) as a sum of Gaussian
coefficients; the hockey-stick identity makes the colon sizes add up to the
number of generators of J.
"""

from math import comb

from dpideals import t_binomial
from dpideals.series import cauchy_identity_check, hockey_stick_check

for n in range(6):
    print(f"n={n}:", "  ".join(t_binomial(n, k).render("t") for k in range(n + 1)))

print("\nCauchy identity n <= 12:", all(cauchy_identity_check(n) for n in range(13)))
print("hockey stick n <= 20:", all(hockey_stick_check(n, b) for n in range(1, 21) for b in range(n)))
b, n = 2, 7
print(f"e.g. b={b}, n={n}:", " + ".join(str(comb(b + i, b)) for i in range(n - b)), "=", comb(n, b + 1))
