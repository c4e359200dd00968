"""Exact sparse row reduction over Z (hence Q).

Rows are dicts ``column -> int`` with no zero entries. Elimination is
fraction-free: eliminating column c of row r with pivot row p computes
``p[c]*r - r[c]*p`` and then divides out the content, so entries stay
integral and small without ever forming a rational.

Pivot choice is always the *smallest* column index present in a row. Callers
that care about which columns end up as pivots (the normal-form engine uses a
monomial order) encode that preference in the column numbering.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

Row = dict[int, int]


def primitive(row: Row) -> Row:
    """Divide out the content and make the leading (smallest column) entry positive."""
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if row[min(row)] < 0:
        g = -g
    if g != 1:
        row = {c: v // g for c, v in row.items()}
    return row


def integral_row(row: Mapping[int, Fraction]) -> Row:
    """Scale a rational row by the lcm of its denominators."""
    den = 1
    for v in row.values():
        den = lcm(den, Fraction(v).denominator)
    out = {}
    for c, v in row.items():
        v = Fraction(v) * den
        if v:
            out[c] = v.numerator
    return primitive(out)


def eliminate(row: Row, pivot_row: Row, col: int) -> Row:
    a = pivot_row[col]
    b = row[col]
    g = gcd(a, b)
    a //= g
    b //= g
    out = {c: a * v for c, v in row.items()} if a != 1 else dict(row)
    for c, v in pivot_row.items():
        s = out.get(c, 0) - b * v
        if s:
            out[c] = s
        else:
            out.pop(c, None)
    return primitive(out)


def echelon(rows: Iterable[Row], pivots: dict[int, Row] | None = None) -> dict[int, Row]:
    """Insert rows into an echelon basis keyed by pivot column; returns the basis.

    Only leading entries are reduced, which is all a rank needs.
    """
    pivots = {} if pivots is None else pivots
    for row in rows:
        row = primitive({c: v for c, v in row.items() if v})
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                pivots[c] = row
                break
            row = eliminate(row, p, c)
    return pivots


def back_substitute(pivots: dict[int, Row]) -> dict[int, Row]:
    """Turn an echelon basis into reduced form: each row's only pivot column is its own."""
    for c in sorted(pivots, reverse=True):
        row = pivots[c]
        for c2 in sorted(k for k in row if k != c and k in pivots):
            if c2 in row:
                row = eliminate(row, pivots[c2], c2)
        pivots[c] = row
    return pivots


def rank(rows: Iterable[Mapping[int, int]]) -> int:
    return len(echelon(dict(r) for r in rows))


def dense_rank(matrix: list[list[int]]) -> int:
    """Bareiss fraction-free elimination on a dense integer matrix; used as an independent check."""
    m = [list(r) for r in matrix]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for k in range(c + 1, ncols):
                m[i][k] = (m[r][c] * m[i][k] - m[i][c] * m[r][k]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    return r

