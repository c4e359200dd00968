"""Brute-force exact verification of the closed forms.

Nothing here knows about hooks, Betti numbers or Poincaré series. Everything
is plain linear algebra over Q on graded pieces of R/I:

``graded_dim``
    the textbook Macaulay matrix: rows are all m*g with deg(m*g) = d, columns
    the degree-d monomials; dim (R/I)_d = #columns - rank.

``GradedQuotient``
    the same numbers computed degree by degree without ever writing down the
    whole of R_d. It keeps, for each degree d, the standard monomials of R/I
    under degrevlex and the reduced form of every other monomial it has met.
    Degree d+1 is spanned by x_j * s for standard s of degree d; the relations
    among those products are the commutation relations
    ``x_i * NF(x_j c) - x_j * NF(x_i c)`` for standard c of degree d-1, plus the
    degree-(d+1) generators pushed into that span. Reducing these relations
    gives the standard monomials and normal forms of degree d+1. Monomial
    generators are used to discard products up front.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, gcd, lcm
from typing import Iterable, Sequence

from . import linalg
from .polyring import MvPoly, Monomial, divides, index_word, monomials_of_degree

Vector = dict[Monomial, Fraction]


class NonHomogeneousGenerator(ValueError):
    pass


class NotArtinianWithinCap(RuntimeError):
    pass


def _homogeneous(gens: Iterable[MvPoly]) -> list[tuple[int, MvPoly]]:
    out = []
    for g in gens:
        if g.is_zero():
            continue
        d = g.homogeneous_degree()
        if d is None:
            raise NonHomogeneousGenerator(f"generator {g} is not homogeneous")
        out.append((d, g))
    return out


def graded_dim(gens: Sequence[MvPoly], n: int, d: int) -> int:
    """dim_k (R/I)_d from the full degree-d Macaulay matrix."""
    gens = _homogeneous(gens)
    basis = monomials_of_degree(n, d)
    col = {m: i for i, m in enumerate(basis)}
    rows = []
    for gd, g in gens:
        if gd > d:
            continue
        for m in monomials_of_degree(n, d - gd):
            row = {}
            for gm, c in g.terms.items():
                row[col[tuple(x + y for x, y in zip(m, gm))]] = c
            rows.append(linalg.integral_row(row))
    return len(basis) - linalg.rank(rows)


def _revlex_key(m: Monomial) -> tuple[int, ...]:
    # ascending sort on this key lists same-degree monomials from largest to smallest in degrevlex
    return m[::-1]


class GradedQuotient:
    """Standard monomials and normal forms of R/I, computed one degree at a time.

    A normal form is stored as ``(numerators, denominator)``: a dict from
    standard monomials to ints plus one positive int, so that the heavy
    lifting stays in integer arithmetic.
    """

    def __init__(self, gens: Iterable[MvPoly], n: int):
        self.n = n
        self.gens: dict[int, list[MvPoly]] = {}
        mono: list[Monomial] = []
        for d, g in _homogeneous(gens):
            if g.nvars != n:
                raise ValueError(f"generator in {g.nvars} variables, expected {n}")
            self.gens.setdefault(d, []).append(g)
            if len(g.terms) == 1:
                mono.append(next(iter(g.terms)))
        self._mono = [m for m in mono if not any(o != m and divides(o, m) for o in mono)]
        self._monomial_only = all(len(g.terms) == 1 for gs in self.gens.values() for g in gs)
        self._vars: list[int] = list(range(n))
        unit = any(sum(m) == 0 for m in self._mono) or 0 in self.gens
        self.std: list[list[Monomial]] = [[] if unit else [(0,) * n]]
        self._std_set: list[set[Monomial]] = [set(self.std[0])]
        self._nf: list[dict[Monomial, _NF]] = [{}]

    @property
    def top(self) -> int:
        """Highest degree computed so far."""
        return len(self.std) - 1

    def in_monomial_part(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self._mono)

    def dim(self, d: int) -> int:
        self.extend_to(d)
        return len(self.std[d])

    def dims(self, dmax: int) -> list[int]:
        return [self.dim(d) for d in range(dmax + 1)]

    def extend_to(self, d: int):
        while self.top < d:
            self._advance()

    def normal_form(self, m: Monomial) -> Vector:
        d = sum(m)
        self.extend_to(d)
        vec, den = self._normal_form(m, d)
        return {s: Fraction(v, den) for s, v in vec.items()}

    def reduce(self, p: MvPoly) -> Vector:
        """Normal form of a homogeneous polynomial, as standard monomial -> coefficient."""
        if p.is_zero():
            return {}
        d = p.homogeneous_degree()
        if d is None:
            raise NonHomogeneousGenerator(f"{p} is not homogeneous")
        self.extend_to(d)
        scale = 1
        for c in p.terms.values():
            scale = lcm(scale, c.denominator)
        vec, den = _combine((int(c * scale), self._normal_form(m, d)) for m, c in p.terms.items())
        return {s: Fraction(v, den * scale) for s, v in vec.items()}

    def contains(self, p: MvPoly) -> bool:
        return not self.reduce(p)

    def _normal_form(self, m: Monomial, d: int) -> "_NF":
        if m in self._std_set[d]:
            return {m: 1}, 1
        known = self._nf[d].get(m)
        if known is not None:
            return known
        if d == 0 or self.in_monomial_part(m):
            out: _NF = ({}, 1)
        else:
            vec, den = self._split_product(m, d)
            parts = ((v, self._normal_form(u, d)) for u, v in vec.items())
            num, den2 = _combine(parts)
            out = _normalize(num, den * den2)
        self._nf[d][m] = out
        return out

    def _split_product(self, m: Monomial, d: int) -> "_NF":
        """m = x_j * (m / x_j) rewritten as NF(x_j) * NF(m / x_j), a combination of products x_v * s.

        Every such product is a surviving variable times a standard monomial of
        degree d - 1, so it is either in the degree-d spanning set or in the
        monomial part. Prefers a surviving x_j so that NF(x_j) is x_j itself.
        """
        support = [i for i, e in enumerate(m) if e]
        keep = set(self._vars)
        j = next((i for i in support if i in keep), support[0])
        lower_vec, lower_den = self._normal_form(m[:j] + (m[j] - 1,) + m[j + 1:], d - 1)
        x = _unit(self.n, j)
        var_vec, var_den = self._normal_form(x, 1)
        out: dict[Monomial, int] = {}
        for v, a in var_vec.items():
            k = v.index(1)
            for s, c in lower_vec.items():
                u = _times(s, k)
                out[u] = out.get(u, 0) + a * c
        return _normalize({u: c for u, c in out.items() if c}, var_den * lower_den)

    def _advance(self):
        d = self.top + 1
        if d == 2:
            self._vars = [j for j in range(self.n) if _unit(self.n, j) in self._std_set[1]]
        span = set()
        for s in self.std[d - 1]:
            for j in self._vars:
                u = _times(s, j)
                if u not in span and not self.in_monomial_part(u):
                    span.add(u)
        order = sorted(span, key=_revlex_key)
        col = {m: i for i, m in enumerate(order)}

        def as_row(vec: dict[Monomial, int]) -> linalg.Row:
            return linalg.primitive({col[m]: v for m, v in vec.items() if v and m in col})

        rows = []
        nv = len(self._vars)
        if d >= 3 and not self._monomial_only:
            for c in self.std[d - 2]:
                images = []
                for j in self._vars:
                    up = _times(c, j)
                    images.append((up in self._std_set[d - 1], self._normal_form(up, d - 1)))
                for a in range(nv):
                    for b in range(a + 1, nv):
                        i, j = self._vars[a], self._vars[b]
                        if images[a][0] and images[b][0]:
                            continue
                        (vj, dj), (vi, di) = images[b][1], images[a][1]
                        rel: dict[Monomial, int] = {}
                        for s, v in vj.items():
                            rel[_times(s, i)] = di * v
                        for s, v in vi.items():
                            u = _times(s, j)
                            rel[u] = rel.get(u, 0) - dj * v
                        row = as_row(rel)
                        if row:
                            rows.append(row)
        for g in self.gens.get(d, ()):
            scale = 1
            for c in g.terms.values():
                scale = lcm(scale, c.denominator)
            parts = []
            for m, c in g.terms.items():
                c = int(c * scale)
                if m in col:
                    parts.append((c, ({m: 1}, 1)))
                elif d > 1:
                    # also for m in the monomial part: m may involve eliminated variables
                    parts.append((c, self._split_product(m, d)))
            row = as_row(_combine(parts)[0])
            if row:
                rows.append(row)

        pivots = linalg.back_substitute(linalg.echelon(sorted(rows, key=len)))
        nf: dict[Monomial, _NF] = {}
        for pc, row in pivots.items():
            lead = row[pc]
            nf[order[pc]] = _normalize({order[c]: -v for c, v in row.items() if c != pc}, lead)
        std = sorted((m for i, m in enumerate(order) if i not in pivots), key=index_word)
        self.std.append(std)
        self._std_set.append(set(std))
        self._nf.append(nf)


_NF = tuple  # (dict[Monomial, int], int)


def _unit(n: int, j: int) -> Monomial:
    return tuple(int(i == j) for i in range(n))


def _times(m: Monomial, j: int) -> Monomial:
    return m[:j] + (m[j] + 1,) + m[j + 1:]


def _normalize(vec: dict[Monomial, int], den: int) -> "_NF":
    if not vec:
        return {}, 1
    g = den
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            break
    if den < 0:
        g = -abs(g)
    if g != 1:
        vec = {s: v // g for s, v in vec.items()}
        den //= g
    return vec, den


def _combine(parts: Iterable[tuple[int, "_NF"]]) -> "_NF":
    """sum of coef * (vec / den) over the parts, as a normalized (vec, den)."""
    parts = [(c, nf) for c, nf in parts if c and nf[0]]
    den = 1
    for _, (_, d) in parts:
        den = lcm(den, d)
    out: dict[Monomial, int] = {}
    for c, (vec, d) in parts:
        f = c * (den // d)
        for s, v in vec.items():
            t = out.get(s, 0) + f * v
            if t:
                out[s] = t
            else:
                del out[s]
    return _normalize(out, den)


@dataclass
class GradedDims:
    dims: list[int]
    stabilized_zero: bool

    @property
    def total(self) -> int:
        return sum(self.dims)


def hilbert_oracle(gens: Sequence[MvPoly], n: int, dmax: int) -> GradedDims:
    """dim (R/I)_d for d = 0..dmax, stopping at the first zero.

    Stopping is safe: a zero degree-d piece means every monomial of degree d
    lies in I, so every later piece vanishes too.
    """
    engine = GradedQuotient(gens, n)
    dims = []
    for d in range(dmax + 1):
        dims.append(engine.dim(d))
        if dims[-1] == 0:
            return GradedDims(dims, True)
    return GradedDims(dims, False)


def total_dimension(gens: Sequence[MvPoly], n: int, hard_cap: int) -> int:
    result = hilbert_oracle(gens, n, hard_cap)
    if not result.stabilized_zero:
        raise NotArtinianWithinCap(f"no vanishing graded piece up to degree {hard_cap}")
    return result.total


def _first_non_injective(base: GradedQuotient, bigger: GradedQuotient, m: int, dmax: int):
    for d in range(dmax + 1):
        if base.dim(d + m) - bigger.dim(d + m) != base.dim(d):
            return d
    return None


def nzd_truncated_check(gens: Sequence[MvPoly], e: MvPoly, n: int, dmax: int,
                        witness: bool = False):
    """Is multiplication by e injective on (R/I)_d for every d <= dmax?

    The image of e*(R/I)_d inside (R/I)_{d+m} has dimension
    dim (R/I)_{d+m} - dim (R/(I+e))_{d+m}; injectivity means it equals dim (R/I)_d.
    A pass only says something about degrees up to dmax.
    With ``witness=True`` returns ``(ok, first_failing_degree_or_None)``.
    """
    m = e.homogeneous_degree()
    if m is None:
        raise NonHomogeneousGenerator(f"{e} is not homogeneous")
    where = _first_non_injective(GradedQuotient(gens, n), GradedQuotient(list(gens) + [e], n), m, dmax)
    ok = where is None
    return (ok, where) if witness else ok


def regular_sequence_check(gens: Sequence[MvPoly], seq: Sequence[MvPoly], n: int, dmax: int) -> list:
    """Stepwise nonzerodivisor test of seq[k] modulo (gens, seq[:k]), truncated at dmax.

    Returns, for each element, None if it passed or the first degree where
    multiplication fails to be injective. Each intermediate quotient is
    computed once and shared between consecutive steps.
    """
    current = list(gens)
    base = GradedQuotient(current, n)
    out = []
    for e in seq:
        m = e.homogeneous_degree()
        if m is None:
            raise NonHomogeneousGenerator(f"{e} is not homogeneous")
        current = current + [e]
        bigger = GradedQuotient(current, n)
        out.append(_first_non_injective(base, bigger, m, dmax))
        base = bigger
    return out


# -- hook verification report --------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    expected: object
    got: object

    def as_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "expected": self.expected, "got": self.got}


@dataclass
class VerificationReport:
    hook: tuple[int, int]
    dmax: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {"hook": list(self.hook), "checks": [c.as_dict() for c in self.checks], "dmax": self.dmax}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def render(self) -> str:
        lines = [f"hook ({self.hook[0]}|{self.hook[1]}), verified up to degree {self.dmax}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{status}] {c.name}: expected {c.expected}, got {c.got}")
        return "\n".join(lines)


def default_dmax(b: int) -> int:
    return b * (b + 1) // 2 + 2


def verify_hook(h, dmax: int | None = None) -> VerificationReport:
    """Run every closed-form claim for the hook h against brute force."""
    from . import ideals, series

    a, b = h.a, h.b
    n = h.n
    reg = b * (b + 1) // 2
    if dmax is None:
        dmax = default_dmax(b)
    if dmax < reg + 1:
        raise ValueError(f"dmax must be at least {reg + 1} for hook {h}")
    report = VerificationReport((a, b), dmax)
    add = report.checks.append

    split = ideals.hook_split(h)
    gens = split.flat()
    oracle_dims = hilbert_oracle(gens, n, dmax)
    closed = series.hilbert_hook(h).coeffs
    padded = closed + [0] * (len(oracle_dims.dims) - len(closed))
    add(Check("hilbert series", oracle_dims.stabilized_zero and padded == oracle_dims.dims,
              closed, oracle_dims.dims))

    expected_total = factorial(n) // factorial(a + 1)
    add(Check("total dimension", oracle_dims.stabilized_zero and oracle_dims.total == expected_total,
              expected_total, oracle_dims.total))

    table = series.betti_table(series.poincare_hook(h))
    beta1 = table.total(1)
    add(Check("beta_1 = generator count", beta1 == comb(n, b + 1) + b and
              len(split.monomial_part.gens) + len(split.symmetric_part) == beta1,
              comb(n, b + 1) + b, beta1))

    ok, sizes = ideals.linear_quotients_lex(split.monomial_part)
    got_counts = _counts(sizes) if ok else None
    want_counts = ideals.set_size_multiset(h)
    add(Check("set-size multiset", ok and got_counts == want_counts,
              _str_keys(want_counts), _str_keys(got_counts) if got_counts else None))

    add(Check("euler identity", series.euler_identity_check(h), True, series.euler_identity_check(h)))

    kd = ideals.krull_dim_quotient(split.monomial_part)
    add(Check("krull dimension of R/J", kd == b, b, kd))

    dual = ideals.alexander_dual(split.monomial_part)
    expected_dual = ideals.squarefree_power(n, n - b)
    add(Check("alexander dual of J", dual == expected_dual,
              f"all squarefree monomials of degree {n - b}",
              sorted({sum(g) for g in dual.gens})))

    nzd = regular_sequence_check(split.monomial_part.as_polys(), split.symmetric_part, n, dmax)
    add(Check(f"e_1..e_b regular on R/J (verified up to degree {dmax})",
              all(w is None for w in nzd), [None] * b, nzd))

    reg_table = series.regularity_from_table(table)
    add(Check("regularity", reg_table == reg == series.regularity_hook(h), reg, reg_table))
    return report


def verify_dimension(parts, hard_cap: int | None = None) -> Check:
    """Total dimension of R/I_mu versus the multinomial coefficient, for any partition."""
    from . import ideals
    from .partitions import multinomial

    n = parts.n
    if hard_cap is None:
        hard_cap = n * (n - 1) // 2 + 1
    got = total_dimension(ideals.tanisaki_generators(parts), n, hard_cap)
    want = multinomial(parts)
    return Check(f"dimension of R/I_{parts}", got == want, want, got)


def _counts(values: Iterable[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for v in values:
        out[v] = out.get(v, 0) + 1
    return dict(sorted(out.items()))


def _str_keys(d: dict) -> dict:
    return {str(k): v for k, v in d.items()}

