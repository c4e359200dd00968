"""Tanisaki generators, the hook split I = J + E, and squarefree monomial ideal combinatorics."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .oracle import GradedQuotient
from .partitions import Hook, Partition, delta_sequence
from .polyring import (
    Monomial,
    MvPoly,
    divides,
    elementary_symmetric,
    index_word,
    is_squarefree,
    lcm,
    monomial_str,
    monomials_of_degree,
    quotient,
)

MAX_PRIME_SEARCH_VARS = 20


class TooLarge(ValueError):
    pass


def minimalize(gens: Iterable[Monomial]) -> list[Monomial]:
    """Drop every generator divisible by another; result sorted by degree then index-lex."""
    ordered = sorted(set(gens), key=lambda m: (sum(m), index_word(m)))
    kept: list[Monomial] = []
    for m in ordered:
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple[Monomial, ...]

    def __init__(self, nvars: int, gens: Iterable[Monomial] = ()):
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != nvars:
                raise ValueError(f"monomial {g} does not have {nvars} exponents")
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "gens", tuple(minimalize(gens)))

    @classmethod
    def from_indices(cls, nvars: int, words: Iterable[Iterable[int]]) -> "MonomialIdeal":
        from .polyring import from_indices

        return cls(nvars, [from_indices(w, nvars) for w in words])

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.gens)

    def as_polys(self) -> list[MvPoly]:
        return [MvPoly.monomial(g) for g in self.gens]

    def __str__(self):
        return "(" + ", ".join(monomial_str(g) for g in self.gens) + ")"


def squarefree_power(n: int, d: int) -> MonomialIdeal:
    """The ideal of all squarefree monomials of degree d in n variables."""
    return MonomialIdeal(n, monomials_of_degree(n, d, squarefree_only=True))


# -- generators ------------------------------------------------------------


def tanisaki_generators(p: Partition) -> list[MvPoly]:
    """Every e_r(S) with |S| = k >= 1 and k >= r > k - delta_k(p), without repeats.

    Listed by k, then r, then S in lexicographic order.
    """
    n = p.n
    deltas = delta_sequence(p)
    seen = set()
    out = []
    for k in range(1, n + 1):
        for r in range(max(1, k - deltas[k - 1] + 1), k + 1):
            for S in combinations(range(1, n + 1), k):
                g = elementary_symmetric(S, r, n)
                key = frozenset(g.terms)
                if key not in seen:
                    seen.add(key)
                    out.append(g)
    return out


@dataclass
class GeneratorSet:
    monomial_part: MonomialIdeal
    symmetric_part: list[MvPoly]

    def flat(self) -> list[MvPoly]:
        return self.monomial_part.as_polys() + list(self.symmetric_part)


def hook_split(h: Hook) -> GeneratorSet:
    """J = all squarefree monomials of degree b+1, E = (e_1, ..., e_b) in all n variables."""
    n = h.n
    J = squarefree_power(n, h.b + 1)
    E = [elementary_symmetric(range(1, n + 1), i, n) for i in range(1, h.b + 1)]
    return GeneratorSet(J, E)


def equal_as_ideals_truncated(A: Sequence[MvPoly], B: Sequence[MvPoly], n: int, dmax: int) -> bool:
    """Do the ideals (A) and (B) have the same graded pieces in degrees <= dmax?

    Each generator of degree <= dmax on one side must have zero normal form
    modulo the other ideal; those generators span each ideal in those degrees.
    """
    for gens, other in ((A, B), (B, A)):
        engine = GradedQuotient(gens, n)
        for g in other:
            d = g.homogeneous_degree()
            if g.is_zero() or d > dmax:
                continue
            if not engine.contains(g):
                return False
    return True


# -- colon ideals and linear quotients -----------------------------------


def colon_by_monomial(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    return MonomialIdeal(I.nvars, [quotient(lcm(g, m), m) for g in I.gens])


def lex_order(gens: Iterable[Monomial]) -> list[Monomial]:
    return sorted(gens, key=index_word)


def linear_quotients_lex(I: MonomialIdeal) -> tuple[bool, list[int]]:
    """Test linear quotients for the generators in ascending lex order.

    Returns ``(ok, sizes)`` where sizes[i] is the number of variables generating
    (M_1, ..., M_{i-1}) : M_i (0 for the first generator). When some colon is
    not generated by variables, ``ok`` is False and ``sizes`` stops there.
    """
    gens = lex_order(I.gens)
    if len({sum(g) for g in gens}) > 1:
        warnings.warn("ideal is not generated in a single degree", stacklevel=2)
    sizes = []
    for i, m in enumerate(gens):
        if i == 0:
            sizes.append(0)
            continue
        colon = colon_by_monomial(MonomialIdeal(I.nvars, gens[:i]), m)
        if any(sum(g) != 1 for g in colon.gens):
            return False, sizes
        sizes.append(len(colon.gens))
    return True, sizes


def set_size_multiset(h: Hook) -> dict[int, int]:
    """Predicted number of generators of J whose colon needs exactly i variables."""
    return {i: comb(h.b + i, h.b) for i in range(h.a + 1)}


# -- minimal primes, duality, dimension ----------------------------------


def _require_squarefree(I: MonomialIdeal):
    if not I.is_squarefree():
        raise ValueError("ideal must be generated by squarefree monomials")
    if I.nvars > MAX_PRIME_SEARCH_VARS:
        raise TooLarge(f"{I.nvars} variables; exhaustive search capped at {MAX_PRIME_SEARCH_VARS}")


def minimal_primes(I: MonomialIdeal) -> list[tuple[int, ...]]:
    """Minimal vertex covers of the generators, as sorted tuples of 1-based variable indices.

    Subsets are tried by increasing size; anything containing a cover already
    found is skipped, so every cover returned is minimal.
    """
    _require_squarefree(I)
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in I.gens]
    found: list[frozenset[int]] = []
    for size in range(I.nvars + 1):
        for subset in combinations(range(I.nvars), size):
            s = frozenset(subset)
            if any(f <= s for f in found):
                continue
            if all(s & sup for sup in supports):
                found.append(s)
    return sorted(tuple(sorted(i + 1 for i in f)) for f in found)


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    from .polyring import from_indices

    return MonomialIdeal(I.nvars, [from_indices(p, I.nvars) for p in minimal_primes(I)])


def krull_dim_quotient(I: MonomialIdeal) -> int:
    return I.nvars - min(len(p) for p in minimal_primes(I))
