from math import comb

import pytest
import sympy

from dpideals.partitions import Hook, hooks_up_to
from dpideals.series import (
    BettiTable,
    BiPoly,
    InexactDivision,
    NegativeCoefficient,
    TruncationTooSmall,
    UniSeries,
    betti_table,
    cauchy_identity_check,
    euler_identity_check,
    herzog_takayama_poincare,
    hilbert_hook,
    hilbert_via_factorization,
    hockey_stick_check,
    koszul_factor,
    mapping_cone_shift,
    poincare_J_hook,
    poincare_hook,
    poincare_recursive,
    regularity_from_table,
    t_binomial,
    t_binomial_pascal,
    t_factorial,
)

q, t = sympy.symbols("q t")


def to_bipoly(expr) -> BiPoly:
    poly = sympy.Poly(sympy.expand(expr), q, t)
    return BiPoly({(int(i), int(j)): int(c) for (i, j), c in poly.terms()})


def sympy_poincare(a, b):
    s = sum(sympy.binomial(b + i, b) * (1 + q * t) ** i for i in range(a + 1))
    return sympy.prod([1 + q * t ** k for k in range(1, b + 1)]) * (1 + q * t ** (b + 1) * s)


def test_bipoly_arithmetic():
    x = BiPoly.term(1, 1, 1)
    assert (BiPoly.one() + x) ** 2 == to_bipoly((1 + q * t) ** 2)
    assert (x - x) == BiPoly()
    assert str(BiPoly.one() + x.scale(3)) == "1 + 3qt"


def test_poincare_hook_2_1():
    P = poincare_hook(Hook(2, 1))
    assert P == to_bipoly(1 + q*t + 6*q*t**2 + 14*q**2*t**3 + 11*q**3*t**4 + 3*q**4*t**5)
    assert poincare_J_hook(Hook(2, 1)) == to_bipoly(1 + 6*q*t**2 + 8*q**2*t**3 + 3*q**3*t**4)


def test_poincare_hook_1_1():
    assert poincare_hook(Hook(1, 1)) == to_bipoly(1 + q*t + 3*q*t**2 + 5*q**2*t**3 + 2*q**3*t**4)


@pytest.mark.parametrize("h", list(hooks_up_to(7)), ids=str)
def test_poincare_matches_symbolic_expansion(h):
    assert poincare_hook(h) == to_bipoly(sympy_poincare(h.a, h.b))


def test_ungraded_recursion():
    for h in hooks_up_to(9):
        assert poincare_recursive(h, graded=False) == poincare_hook(h).at_t_equal_one()


def test_mapping_cone_and_herzog_takayama():
    h = Hook(2, 1)
    assert mapping_cone_shift(poincare_J_hook(h), 1) == poincare_hook(h)
    assert herzog_takayama_poincare([0, 1, 2, 1, 2, 2], 2) == poincare_J_hook(h)


def test_betti_render_m2():
    T = betti_table(poincare_hook(Hook(2, 1)))
    assert T.render("m2") == (
        "       0 1  2  3 4\n"
        "total: 1 7 14 11 3\n"
        "    0: 1 1  .  . .\n"
        "    1: . 6 14 11 3\n"
    )
    assert T.render("text").splitlines()[0] == "j-i\\i 0 1  2  3 4"


def test_betti_table_properties_and_json():
    T = betti_table(poincare_hook(Hook(1, 2)))
    assert T.projective_dimension == 4
    assert regularity_from_table(T) == 3
    assert T.total(1) == comb(4, 3) + 2
    assert BettiTable.from_json(T.to_json()) == T


def test_betti_rejects_bad_series():
    with pytest.raises(NegativeCoefficient):
        betti_table(BiPoly.one() - BiPoly.term(1, 1, 1))
    with pytest.raises(NegativeCoefficient):
        betti_table(BiPoly.term(2, 0, 0))


def test_t_binomials():
    assert t_binomial(4, 2).coeffs == [1, 1, 2, 1, 1]
    for n in range(9):
        for k in range(n + 1):
            tb = t_binomial(n, k)
            assert tb == t_binomial_pascal(n, k)
            assert tb(1) == comb(n, k)
            expr = sympy.cancel(sympy.prod([1 - t ** (n - i) for i in range(k)])
                                / sympy.prod([1 - t ** (i + 1) for i in range(k)]))
            assert tb.coeffs == [int(c) for c in reversed(sympy.Poly(expr, t).all_coeffs())]


def test_exact_division_raises():
    with pytest.raises(InexactDivision):
        UniSeries([1, 0, 1]).divmod_exact(UniSeries([1, 1]))
    assert UniSeries([1, 0, -1]).divmod_exact(UniSeries([1, 1])) == UniSeries([1, -1])


def test_identities():
    assert all(cauchy_identity_check(n) for n in range(9))
    assert all(hockey_stick_check(n, b) for n in range(1, 15) for b in range(n))


def test_hilbert_hand_values():
    assert hilbert_hook(Hook(2, 1)).coeffs == [1, 3]
    assert hilbert_hook(Hook(1, 1)).coeffs == [1, 2]
    assert hilbert_hook(Hook(1, 2)).coeffs == [1, 3, 5, 3]
    assert hilbert_hook(Hook(3, 0)).coeffs == [1]
    assert t_factorial(3).coeffs == [1, 2, 2, 1]


def test_hilbert_factorization_and_symbolic():
    for h in hooks_up_to(8):
        hs = hilbert_hook(h)
        assert hs == hilbert_via_factorization(h)
        expr = sympy.prod([sum(q ** j for j in range(i)) for i in range(1, h.b + 1)]) * sum(
            sympy.binomial(h.n, c) * q ** c * (1 - q) ** (h.b - c) for c in range(h.b + 1))
        assert hs.coeffs == [int(c) for c in reversed(sympy.Poly(sympy.expand(expr), q).all_coeffs())]


def test_hilbert_truncation_guard():
    with pytest.raises(TruncationTooSmall):
        hilbert_via_factorization(Hook(1, 2), dmax=2)


def test_euler_identity_small():
    P = poincare_hook(Hook(1, 1)).at_q_equal_minus_one()
    assert P.coeffs == [1, -1, -3, 5, -2]
    assert all(euler_identity_check(h) for h in hooks_up_to(8))


def test_koszul_factor():
    assert koszul_factor(3) == to_bipoly(1 + q * t ** 3)
