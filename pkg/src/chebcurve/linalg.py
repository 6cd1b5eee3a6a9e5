"""Exact sparse linear algebra over Q and the cyclotomic fields.

Rank is computed by fraction-free elimination: rational rows are scaled to
primitive integers, each update is a two-term cross-multiplication followed
by content removal, and pivots are chosen by a Markowitz-style fill-in
estimate.  Field-valued matrices (AlgNum entries) use exact division
instead.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .numberfield import AlgNum

Row = dict[int, object]


def _entry(v):
    # plain ints are promoted so that later divisions stay exact
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, (Fraction, AlgNum)):
        return v
    raise TypeError(f"unsupported matrix entry type {type(v).__name__}")


def _to_rows(matrix: Iterable) -> list[Row]:
    rows: list[Row] = []
    for row in matrix:
        if isinstance(row, Mapping):
            rows.append({c: _entry(v) for c, v in row.items() if v})
        else:
            rows.append({c: _entry(v) for c, v in enumerate(row) if v})
    return rows


def _is_rational(rows: list[Row]) -> bool:
    for row in rows:
        for v in row.values():
            if isinstance(v, AlgNum):
                return False
    return True


def _scale_primitive(row: Row) -> Row:
    den = 1
    for v in row.values():
        f = Fraction(v)
        den = den * f.denominator // gcd(den, f.denominator)
    out = {}
    g = 0
    for c, v in row.items():
        f = Fraction(v)
        iv = f.numerator * (den // f.denominator)
        out[c] = iv
        g = gcd(g, iv)
    if g > 1:
        for c in out:
            out[c] //= g
    return out


def _strip_content(row: Row) -> None:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for c in row:
            row[c] //= g


def _pick_pivot(rows: list[tuple[int, Row]]) -> tuple[int, int]:
    """Return (list index, column) minimizing fill-in, deterministically."""
    col_count: dict[int, int] = {}
    for _, row in rows:
        for c in row:
            col_count[c] = col_count.get(c, 0) + 1
    best = None
    for li, (orig, row) in enumerate(rows):
        for c in row:
            score = ((len(row) - 1) * (col_count[c] - 1), len(row), col_count[c], orig, c)
            if best is None or score < best[0]:
                best = (score, li, c)
    return best[1], best[2]


def rank(matrix: Iterable) -> int:
    """Exact rank of a matrix given as rows (sequences or sparse dicts)."""
    rows = [r for r in _to_rows(matrix) if r]
    if not rows:
        return 0
    rational = _is_rational(rows)
    if rational:
        rows = [_scale_primitive(r) for r in rows]
    active = list(enumerate(rows))
    rk = 0
    while active:
        li, c = _pick_pivot(active)
        _, pivot = active.pop(li)
        pv = pivot[c]
        rk += 1
        updated: list[tuple[int, Row]] = []
        for orig, row in active:
            rv = row.get(c)
            if rv:
                if rational:
                    d = gcd(pv, rv)
                    a = pv // d
                    b = rv // d
                    new: Row = {}
                    for cc, v in row.items():
                        new[cc] = a * v
                    for cc, v in pivot.items():
                        nv = new.get(cc, 0) - b * v
                        if nv:
                            new[cc] = nv
                        else:
                            new.pop(cc, None)
                    _strip_content(new)
                    row = new
                else:
                    f = rv / pv
                    new = dict(row)
                    for cc, v in pivot.items():
                        nv = new.get(cc, 0) - f * v
                        if nv:
                            new[cc] = nv
                        else:
                            new.pop(cc, None)
                    row = new
                if not row:
                    continue
            updated.append((orig, row))
        active = updated
    return rk


def kernel_dim(matrix: Iterable, ncols: int) -> int:
    """Dimension of the null space of a matrix with the given column count."""
    return ncols - rank(matrix)


def solve_unique(matrix: Iterable, rhs: Sequence, ncols: int) -> list:
    """Solve A x = rhs when the solution exists and is unique.

    Raises ArithmeticError on an inconsistent system and ValueError when the
    solution is not unique (rank below ncols).
    """
    rows = _to_rows(matrix)
    rhs = [Fraction(b) if isinstance(b, int) else b for b in rhs]
    if len(rhs) != len(rows):
        raise ValueError("right-hand side length does not match row count")
    RHS = ncols  # sentinel column for the augmented part
    pivots: dict[int, Row] = {}
    for row, b in zip(rows, rhs):
        aug = dict(row)
        if b:
            aug[RHS] = b
        # reduce against existing pivot rows
        for c in sorted(k for k in aug if k != RHS):
            if c in pivots and aug.get(c):
                f = aug[c]
                for cc, v in pivots[c].items():
                    nv = aug.get(cc, 0) - f * v
                    if nv:
                        aug[cc] = nv
                    else:
                        aug.pop(cc, None)
        lead = min((k for k in aug if k != RHS), default=None)
        if lead is None:
            if aug.get(RHS):
                raise ArithmeticError("inconsistent linear system")
            continue
        # normalize and eliminate the new pivot from earlier rows
        pv = aug[lead]
        norm = {cc: v / pv for cc, v in aug.items()}
        for c, prow in pivots.items():
            f = prow.get(lead)
            if f:
                for cc, v in norm.items():
                    nv = prow.get(cc, 0) - f * v
                    if nv:
                        prow[cc] = nv
                    else:
                        prow.pop(cc, None)
        pivots[lead] = norm
    if len(pivots) < ncols:
        raise ValueError("linear system does not determine a unique solution")
    zero = Fraction(0)
    return [pivots[c].get(RHS, zero) for c in range(ncols)]
