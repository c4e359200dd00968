"""Closed forms for hooks: Poincaré series, Betti tables, regularity and Hilbert series.

Two small exact polynomial types carry the data. ``BiPoly`` is an integer
polynomial in (q, t), with q tracking homological degree and t internal degree.
``UniSeries`` is an integer polynomial in one variable, optionally a
truncated power series.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Mapping, Optional

from .partitions import Hook


class NegativeCoefficient(ValueError):
    pass


class InexactDivision(ArithmeticError):
    pass


class TruncationTooSmall(ValueError):
    pass


# -- polynomial types ------------------------------------------------------


class BiPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        self.coeffs = {k: int(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, c: int, i: int, j: int) -> "BiPoly":
        return cls({(i, j): c})

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + other.scale(-1)

    def scale(self, c: int) -> "BiPoly":
        return BiPoly({k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), v1 in self.coeffs.items():
            for (i2, j2), v2 in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + v1 * v2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiPoly":
        out = BiPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.coeffs.get(key, 0)

    def at_t_equal_one(self) -> "UniSeries":
        """Ungraded Poincaré polynomial in q."""
        deg = max((i for i, _ in self.coeffs), default=0)
        out = [0] * (deg + 1)
        for (i, _), v in self.coeffs.items():
            out[i] += v
        return UniSeries(out)

    def at_q_equal_minus_one(self) -> "UniSeries":
        """Alternating sum over homological degree, as a polynomial in the internal degree."""
        deg = max((j for _, j in self.coeffs), default=0)
        out = [0] * (deg + 1)
        for (i, j), v in self.coeffs.items():
            out[j] += (-1) ** i * v
        return UniSeries(out)

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for (i, j), v in sorted(self.coeffs.items(), key=lambda kv: (kv[0][0], kv[0][1])):
            mono = "".join(
                f"{var}^{e}" if e > 1 else var for var, e in (("q", i), ("t", j)) if e
            )
            body = mono if abs(v) == 1 and mono else f"{abs(v)}{mono}"
            if not pieces:
                pieces.append(body if v > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if v > 0 else '-'} {body}")
        return " ".join(pieces)

    __repr__ = __str__


@dataclass
class UniSeries:
    """Integer polynomial, or power series known up to degree ``truncation``."""

    coeffs: list[int]
    truncation: Optional[int] = None

    def __post_init__(self):
        c = [int(v) for v in self.coeffs]
        if self.truncation is not None:
            c = c[: self.truncation + 1]
            c += [0] * (self.truncation + 1 - len(c))
        else:
            while len(c) > 1 and c[-1] == 0:
                c.pop()
            if not c:
                c = [0]
        self.coeffs = c

    @classmethod
    def one(cls) -> "UniSeries":
        return cls([1])

    @property
    def degree(self) -> int:
        nz = [i for i, v in enumerate(self.coeffs) if v]
        return nz[-1] if nz else -1

    def _trunc(self, other: "UniSeries") -> Optional[int]:
        ts = [t for t in (self.truncation, other.truncation) if t is not None]
        return min(ts) if ts else None

    def __add__(self, other: "UniSeries") -> "UniSeries":
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + [0] * (size - len(self.coeffs))
        b = other.coeffs + [0] * (size - len(other.coeffs))
        return UniSeries([x + y for x, y in zip(a, b)], self._trunc(other))

    def __sub__(self, other: "UniSeries") -> "UniSeries":
        return self + other.scale(-1)

    def scale(self, c: int) -> "UniSeries":
        return UniSeries([c * v for v in self.coeffs], self.truncation)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        trunc = self._trunc(other)
        size = len(self.coeffs) + len(other.coeffs) - 1
        if trunc is not None:
            size = min(size, trunc + 1)
        out = [0] * size
        for i, x in enumerate(self.coeffs):
            if not x or i >= size:
                continue
            for j, y in enumerate(other.coeffs[: size - i]):
                out[i + j] += x * y
        return UniSeries(out, trunc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniSeries":
        out = UniSeries([1], self.truncation)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        return self.coeffs == other.coeffs and self.truncation == other.truncation

    def shift(self, k: int) -> "UniSeries":
        return UniSeries([0] * k + self.coeffs, None if self.truncation is None else self.truncation + k)

    def __call__(self, x):
        total = 0
        for v in reversed(self.coeffs):
            total = total * x + v
        return total

    def divmod_exact(self, other: "UniSeries") -> "UniSeries":
        """Polynomial division; raises InexactDivision on a nonzero remainder."""
        num = list(self.coeffs)
        den = list(other.coeffs)
        while len(den) > 1 and den[-1] == 0:
            den.pop()
        if not any(den):
            raise ZeroDivisionError("division by the zero polynomial")
        lead = den[-1]
        out = [0] * max(1, len(num) - len(den) + 1)
        for k in range(len(num) - len(den), -1, -1):
            c, r = divmod(num[k + len(den) - 1], lead)
            if r:
                raise InexactDivision(f"{self} / {other}")
            out[k] = c
            for i, v in enumerate(den):
                num[k + i] -= c * v
        if any(num):
            raise InexactDivision(f"{self} / {other} leaves remainder {num}")
        return UniSeries(out)

    def render(self, var: str = "q") -> str:
        pieces = []
        for i, v in enumerate(self.coeffs):
            if not v:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            body = mono if abs(v) == 1 and mono else f"{abs(v)}{mono}"
            if not pieces:
                pieces.append(body if v > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if v > 0 else '-'} {body}")
        text = " ".join(pieces) if pieces else "0"
        if self.truncation is not None:
            text += f" + O({var}^{self.truncation + 1})"
        return text

    def __str__(self):
        return self.render()


def one_plus(c: int, i: int, j: int) -> BiPoly:
    """1 + c q^i t^j."""
    return BiPoly({(0, 0): 1}) + BiPoly.term(c, i, j)


def koszul_factor(m: int) -> BiPoly:
    return one_plus(1, 1, m)


# -- Poincaré series -------------------------------------------------------


def poincare_J_hook(h: Hook) -> BiPoly:
    """1 + q t^(b+1) * sum_{i=0}^{a} C(b+i, b) (1 + qt)^i."""
    inner = BiPoly()
    step = koszul_factor(1)
    power = BiPoly.one()
    for i in range(h.a + 1):
        inner = inner + power.scale(comb(h.b + i, h.b))
        power = power * step
    return BiPoly.one() + BiPoly.term(1, 1, h.b + 1) * inner


def poincare_hook(h: Hook) -> BiPoly:
    out = poincare_J_hook(h)
    for k in range(1, h.b + 1):
        out = koszul_factor(k) * out
    return out


def herzog_takayama_poincare(set_sizes: Iterable[int], gen_degree: int) -> BiPoly:
    """1 + sum over generators M of (1 + qt)^|set(M)| q t^d."""
    out = BiPoly.one()
    step = koszul_factor(1)
    shift = BiPoly.term(1, 1, gen_degree)
    for s in set_sizes:
        out = out + shift * step ** s
    return out


def mapping_cone_shift(P: BiPoly, m: int) -> BiPoly:
    return koszul_factor(m) * P


def poincare_recursive(h: Hook, graded: bool = True):
    """Grow P_(a|b) from the one-column hook by adding one cell to the first row at a time.

    ``graded=False`` returns the q-polynomial obtained at t = 1.
    """
    b = h.b
    column = BiPoly.one()
    for k in range(1, b + 2):
        column = column * koszul_factor(k)
    e_part = BiPoly.one()
    for k in range(1, b + 1):
        e_part = e_part * koszul_factor(k)
    P = column
    for a in range(1, h.a + 1):
        P = P + e_part * BiPoly.term(comb(b + a, a), 1, b + 1) * koszul_factor(1) ** a
    if graded:
        return P
    # recomputed from the ungraded recurrence, not by specializing P
    one_plus_q = UniSeries([1, 1])
    Pq = one_plus_q ** (b + 1)
    for a in range(1, h.a + 1):
        Pq = Pq + (one_plus_q ** (a + b)).shift(1).scale(comb(a + b, b))
    return Pq


# -- Betti tables ----------------------------------------------------------


@dataclass
class BettiTable:
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def total(self, i: int) -> int:
        return sum(v for (k, _), v in self.entries.items() if k == i)

    def totals(self) -> list[int]:
        return [self.total(i) for i in range(self.projective_dimension + 1)]

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def as_dict(self) -> dict:
        return {
            "betti": [[i, j, v] for (i, j), v in sorted(self.entries.items())],
            "regularity": regularity_from_table(self),
            "projective_dimension": self.projective_dimension,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        data = json.loads(text)
        return cls({(i, j): v for i, j, v in data["betti"]})

    def render(self, style: str = "m2") -> str:
        """Betti diagram: columns are homological degrees i, rows are j - i.

        ``m2`` adds a ``total:`` row; ``text`` labels the corner ``j-i\\i``
        instead. Zero entries print as a dot.
        """
        pd = self.projective_dimension
        rows = range(0, regularity_from_table(self) + 1)
        grid = [["." if not self[(i, i + r)] else str(self[(i, i + r)]) for i in range(pd + 1)] for r in rows]
        header = [str(i) for i in range(pd + 1)]
        labels = [f"{r}:" for r in rows]
        body = [header]
        if style == "m2":
            body.append([str(v) for v in self.totals()])
            labels = ["total:"] + labels
            corner = ""
        else:
            corner = "j-i\\i"
        body.extend(grid)
        widths = [max(len(line[c]) for line in body) for c in range(pd + 1)]
        label_w = max(len(x) for x in labels + [corner])
        all_labels = [corner] + labels
        lines = []
        for label, line in zip(all_labels, body):
            cells = " ".join(cell.rjust(w) for cell, w in zip(line, widths))
            lines.append(f"{label.rjust(label_w)} {cells}".rstrip())
        return "\n".join(lines) + "\n"


def betti_table(P: BiPoly) -> BettiTable:
    if P[(0, 0)] != 1 or any(v < 0 for v in P.coeffs.values()):
        raise NegativeCoefficient(f"{P} is not a Poincaré series of a cyclic module")
    if any(i == 0 and j != 0 for i, j in P.coeffs) or any(i < 0 or j < 0 for i, j in P.coeffs):
        raise NegativeCoefficient(f"{P} has entries outside the admissible range")
    return BettiTable(dict(P.coeffs))


def regularity_from_table(T: BettiTable) -> int:
    return max(j - i for (i, j), v in T.entries.items() if v)


def regularity_hook(h: Hook) -> int:
    return h.b * (h.b + 1) // 2


# -- t-binomials -----------------------------------------------------------


def t_integer(j: int) -> UniSeries:
    """[j]_t = 1 + t + ... + t^(j-1)."""
    return UniSeries([1] * j) if j > 0 else UniSeries([0])


def t_factorial(j: int) -> UniSeries:
    out = UniSeries.one()
    for i in range(1, j + 1):
        out = out * t_integer(i)
    return out


def t_binomial(n: int, k: int) -> UniSeries:
    if not 0 <= k <= n:
        raise ValueError(f"t_binomial needs 0 <= k <= n, got n={n}, k={k}")
    return t_factorial(n).divmod_exact(t_factorial(k) * t_factorial(n - k))


def t_binomial_pascal(n: int, k: int) -> UniSeries:
    """The q-Pascal recurrence C(n,k) = C(n-1,k-1) + t^k C(n-1,k); a cross-check for t_binomial."""
    rows = [[UniSeries.one()]]
    for m in range(1, n + 1):
        prev = rows[-1]
        row = []
        for i in range(m + 1):
            left = prev[i - 1] if i >= 1 else UniSeries([0])
            right = prev[i].shift(i) if i < m else UniSeries([0])
            row.append(left + right)
        rows.append(row)
    return rows[n][k]


def cauchy_identity_check(n: int) -> bool:
    """prod_{k=1}^n (1 + q t^k) == sum_k q^k t^(k(k+1)/2) [n choose k]_t."""
    left = BiPoly.one()
    for k in range(1, n + 1):
        left = left * koszul_factor(k)
    right = BiPoly()
    for k in range(n + 1):
        base = k * (k + 1) // 2
        for j, c in enumerate(t_binomial(n, k).coeffs):
            right = right + BiPoly.term(c, k, base + j)
    return left == right


def hockey_stick_check(n: int, b: int) -> bool:
    """sum_{i=0}^{n-b-1} C(b+i, b) == C(n, b+1)."""
    return sum(comb(b + i, b) for i in range(n - b)) == comb(n, b + 1)


# -- Hilbert series --------------------------------------------------------


def hilbert_hook(h: Hook) -> UniSeries:
    """[b]_q! * sum_{c=0}^{b} C(n, c) q^c (1 - q)^(b - c)."""
    n, b = h.n, h.b
    one_minus_q = UniSeries([1, -1])
    s = UniSeries([0])
    for c in range(b + 1):
        s = s + (one_minus_q ** (b - c)).shift(c).scale(comb(n, c))
    return t_factorial(b) * s


def hilbert_J_truncated(h: Hook, dmax: int) -> UniSeries:
    """Hilbert series of R/J up to q^dmax, counting monomials with at most b distinct variables."""
    n, b = h.n, h.b
    coeffs = [1] + [
        sum(comb(n, c) * comb(s - 1, c - 1) for c in range(1, b + 1)) for s in range(1, dmax + 1)
    ]
    return UniSeries(coeffs, dmax)


def hilbert_via_factorization(h: Hook, dmax: Optional[int] = None) -> UniSeries:
    """prod_{i=1}^b (1 - q^i) times the truncated Hilbert series of R/J.

    Every coefficient past the regularity must cancel inside the window;
    the returned polynomial is the part that survives.
    """
    reg = regularity_hook(h)
    if dmax is None:
        dmax = reg + 1
    if dmax < reg + 1:
        raise TruncationTooSmall(f"need dmax >= {reg + 1}, got {dmax}")
    out = hilbert_J_truncated(h, dmax)
    for i in range(1, h.b + 1):
        factor = [0] * (i + 1)
        factor[0], factor[i] = 1, -1
        out = out * UniSeries(factor, dmax)
    tail = out.coeffs[reg + 1:]
    if any(tail):
        raise ArithmeticError(f"coefficients beyond degree {reg} do not vanish: {tail}")
    return UniSeries(out.coeffs[: reg + 1])


def euler_identity_check(h: Hook) -> bool:
    """P(-1, q) == h(q) (1 - q)^n, with t renamed to q."""
    return poincare_hook(h).at_q_equal_minus_one() == hilbert_hook(h) * UniSeries([1, -1]) ** h.n
