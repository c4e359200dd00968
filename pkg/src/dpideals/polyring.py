"""Sparse multivariate polynomials over Q.

A monomial is a plain tuple of exponents of length n. Terms of an
``MvPoly`` live in a dict keyed by those tuples with nonzero ``Fraction``
coefficients; equality is therefore structural.

Monomials are ordered by *index-lex*: spell a monomial as the ascending
tuple of its variable indices with repetition (x1^2*x3 -> (1, 1, 3)) and
compare those tuples lexicographically. On squarefree monomials of a fixed
degree this gives x1x2 < x1x3 < x1x4 < x2x3 < ...
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

Monomial = tuple[int, ...]


class DimensionMismatch(ValueError):
    pass


def degree(m: Monomial) -> int:
    return sum(m)


def is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def product(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def support(m: Monomial) -> tuple[int, ...]:
    """1-based indices of the variables dividing m."""
    return tuple(i + 1 for i, e in enumerate(m) if e)


def index_word(m: Monomial) -> tuple[int, ...]:
    """Ascending 1-based variable indices with repetition; the index-lex sort key."""
    return tuple(i + 1 for i, e in enumerate(m) for _ in range(e))


def from_indices(indices: Iterable[int], n: int) -> Monomial:
    """Monomial x_{i1} x_{i2} ... from 1-based indices (repeats allowed)."""
    exps = [0] * n
    for i in indices:
        if not 1 <= i <= n:
            raise DimensionMismatch(f"variable index {i} outside 1..{n}")
        exps[i - 1] += 1
    return tuple(exps)


def variable(i: int, n: int) -> Monomial:
    return from_indices([i], n)


def monomials_of_degree(n: int, d: int, squarefree_only: bool = False) -> list[Monomial]:
    """All degree-d monomials in n variables, in index-lex order."""
    if squarefree_only:
        words: Iterator[tuple[int, ...]] = combinations(range(1, n + 1), d)
    else:
        words = combinations_with_replacement(range(1, n + 1), d)
    return [from_indices(w, n) for w in words]


def monomial_str(m: Monomial) -> str:
    factors = []
    for i, e in enumerate(m):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e > 1:
            factors.append(f"x{i + 1}^{e}")
    return "*".join(factors) if factors else "1"


class MvPoly:
    """Polynomial in ``nvars`` variables with exact rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Rational] | None = None):
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            if len(m) != nvars:
                raise DimensionMismatch(f"monomial {m} has {len(m)} exponents, expected {nvars}")
            if c:
                clean[tuple(m)] = Fraction(c)
        self.terms = clean

    @classmethod
    def monomial(cls, m: Monomial, coeff: Rational = 1) -> "MvPoly":
        return cls(len(m), {m: coeff})

    @classmethod
    def constant(cls, c: Rational, nvars: int) -> "MvPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int) -> "MvPoly":
        return cls.monomial(variable(i, nvars))

    def _check(self, other: "MvPoly"):
        if self.nvars != other.nvars:
            raise DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")

    def __add__(self, other):
        if not isinstance(other, MvPoly):
            other = MvPoly.constant(other, self.nvars)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return _raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return _raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MvPoly):
            other = MvPoly.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MvPoly):
            return scale(self, other)
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = product(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return _raw(self.nvars, out)

    def __rmul__(self, other):
        return scale(self, other)

    def __pow__(self, k: int):
        out = MvPoly.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, MvPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, Rational):
            return self == MvPoly.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms, or None for zero / mixed-degree polynomials."""
        degs = {sum(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms by ascending degree, then index-lex."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), index_word(t[0])))

    def evaluate(self, point: Sequence[Rational]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"MvPoly({self.nvars}, {render(self)!r})"


def _raw(nvars: int, terms: dict) -> MvPoly:
    p = MvPoly.__new__(MvPoly)
    p.nvars = nvars
    p.terms = terms
    return p


def add(p: MvPoly, q: MvPoly) -> MvPoly:
    return p + q


def mul(p: MvPoly, q: MvPoly) -> MvPoly:
    return p * q


def scale(p: MvPoly, c: Rational) -> MvPoly:
    c = Fraction(c)
    if not c:
        return _raw(p.nvars, {})
    return _raw(p.nvars, {m: v * c for m, v in p.terms.items()})


def render(p: MvPoly) -> str:
    """Text form ``c*x1^e1*x2 + ...`` in ascending index-lex term order; unit coefficients elided."""
    if not p.terms:
        return "0"
    pieces = []
    for m, c in p.sorted_terms():
        mono = monomial_str(m)
        if mono == "1":
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(pieces)


def elementary_symmetric(S: Iterable[int], r: int, nvars: int) -> MvPoly:
    """e_r in the variables x_i, i in S (1-based): every squarefree degree-r product."""
    S = sorted(set(S))
    if any(not 1 <= i <= nvars for i in S):
        raise DimensionMismatch(f"subset {S} not inside 1..{nvars}")
    if r < 0:
        raise ValueError("r must be nonnegative")
    return _raw(nvars, {from_indices(c, nvars): Fraction(1) for c in combinations(S, r)})
