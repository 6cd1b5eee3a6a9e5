"""Per-degree syzygies of the Jacobian triple and resolution verification.

A syzygy in degree r is a triple (a1, a2, a3) of degree-r forms with
a1*fx + a2*fy + a3*fz = 0.  Dimensions are kernel dimensions of exact
degree matrices; an independent count comes from the Hilbert data by
rank-nullity, and the distinguished non-Koszul relations are constructed
explicitly by dividing the companion curve by one conic factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .chebyshev import curve_affine, curve_polynomial, minus_conics
from .hilbert import milnor_profile
from .numberfield import real_cyclotomic_field
from .polyring import (
    GREVLEX,
    Monomial,
    MPoly,
    exact_div,
    homogenize,
    mono_mul,
    monomial_basis,
    partials,
)


def _dim_homog(e: int) -> int:
    """Dimension of the homogeneous forms of degree e in three variables."""
    return (e + 2) * (e + 1) // 2 if e >= 0 else 0


@dataclass(frozen=True)
class DegreeMatrix:
    """Matrix of (a1, a2, a3) -> a1*fx + a2*fy + a3*fz restricted to degree r.

    Columns come in three blocks of the degree-r monomial basis, rows are
    indexed by the monomials of degree r + d - 1.
    """

    d: int
    r: int
    column_blocks: int
    columns_per_block: int
    rows: tuple[dict[int, object], ...]

    @property
    def ncols(self) -> int:
        return self.column_blocks * self.columns_per_block


def _degree_rows(generators: list[MPoly], r: int) -> tuple[list[dict[int, object]], int]:
    """Sparse rows of the combination map restricted to coefficient degree r."""
    cols = monomial_basis(r, nvars=3)
    target_index: dict[Monomial, int] = {}
    rows: list[dict[int, object]] = []

    def row_of(mono: Monomial) -> dict[int, object]:
        idx = target_index.get(mono)
        if idx is None:
            idx = len(rows)
            target_index[mono] = idx
            rows.append({})
        return rows[idx]

    col = 0
    for g in generators:
        for u in cols:
            for m, c in g.terms.items():
                row = row_of(mono_mul(u, m))
                prev = row.get(col)
                acc = c if prev is None else prev + c
                if acc:
                    row[col] = acc
                else:
                    row.pop(col, None)
            col += 1
    return rows, col


def jacobian_degree_matrix(f: MPoly, r: int) -> DegreeMatrix:
    """Degree-r matrix of the Jacobian combination map of f."""
    if r < 0:
        raise ValueError("degree must be non-negative")
    gens = list(partials(f))
    rows, ncols = _degree_rows(gens, r)
    per_block = ncols // len(gens)
    return DegreeMatrix(
        d=f.degree(),
        r=r,
        column_blocks=len(gens),
        columns_per_block=per_block,
        rows=tuple(rows),
    )


def syzygy_dim(f: MPoly, r: int) -> int:
    """Exact dimension of the degree-r syzygies of the partials of f."""
    mat = jacobian_degree_matrix(f, r)
    return mat.ncols - linalg.rank(mat.rows)


def syzygy_dim_from_hilbert(f: MPoly, r: int) -> int:
    """Independent syzygy count by rank-nullity against the Hilbert data."""
    d = f.degree()
    prof = milnor_profile(f, kmax=max(3 * d, r + d - 1))
    s = r + d - 1
    dim_jacobian = _dim_homog(s) - prof.dims[s]
    return 3 * _dim_homog(r) - dim_jacobian


@lru_cache(maxsize=None)
def nontrivial_syzygy(d: int, j: int) -> tuple[MPoly, MPoly, MPoly]:
    """The j-th non-Koszul relation of the degree-d Chebyshev curve.

    The third component is the exact quotient of the homogenized companion
    curve by its j-th conic factor; the first two components (unique, of
    degree d-2) are then solved for exactly.  The returned triple satisfies
    a1*fx + a2*fy + a3*fz = 0 identically.
    """
    if d < 3:
        raise ValueError("require d >= 3")
    conics = minus_conics(d)
    if not 1 <= j <= len(conics):
        raise ValueError(f"require 1 <= j <= {len(conics)}")
    field = real_cyclotomic_field(d)
    f_minus = homogenize(curve_affine(d, "minus"), d).map_coefficients(field.from_rational)
    g_j = homogenize(conics[j - 1], 2)
    a3 = exact_div(f_minus, g_j)

    f = curve_polynomial(d)
    fx, fy, fz = partials(f)
    fx = fx.map_coefficients(field.from_rational)
    fy = fy.map_coefficients(field.from_rational)
    fz = fz.map_coefficients(field.from_rational)

    rhs_poly = -(a3 * fz)
    unknown_monos = monomial_basis(d - 2, nvars=3)
    target_monos = monomial_basis(2 * d - 3, nvars=3)
    target_index = {m: i for i, m in enumerate(target_monos)}
    ncols = 2 * len(unknown_monos)
    rows: list[dict[int, object]] = [{} for _ in target_monos]
    col = 0
    for g in (fx, fy):
        for u in unknown_monos:
            for m, c in g.terms.items():
                rows[target_index[mono_mul(u, m)]][col] = c
            col += 1
    rhs = [field.zero() for _ in target_monos]
    for m, c in rhs_poly.terms.items():
        rhs[target_index[m]] = c
    sol = linalg.solve_unique(rows, rhs, ncols)
    n = len(unknown_monos)
    a1 = MPoly(3, {m: sol[i] for i, m in enumerate(unknown_monos)})
    a2 = MPoly(3, {m: sol[n + i] for i, m in enumerate(unknown_monos)})
    if a1 * fx + a2 * fy + a3 * fz != MPoly.zero(3):
        raise ArithmeticError("constructed relation does not vanish")
    return a1, a2, a3


def _koszul_relations(f: MPoly) -> list[tuple[MPoly, MPoly, MPoly]]:
    fx, fy, fz = partials(f)
    zero = MPoly.zero(3)
    return [(fy, -fx, zero), (fz, zero, -fx), (zero, fz, -fy)]


def relation_module_kernel_dim(d: int, r: int) -> tuple[int, int]:
    """(rank, kernel dim) of assembling polynomial combinations of the
    distinguished relations and the Koszul trio in component degree r."""
    f = curve_polynomial(d)
    field = real_cyclotomic_field(d)
    n_extra = len(minus_conics(d))
    rels = [nontrivial_syzygy(d, j) for j in range(1, n_extra + 1)]
    rels += [
        tuple(p.map_coefficients(field.from_rational) for p in rel)
        for rel in _koszul_relations(f)
    ]
    degrees = [d - 2] * n_extra + [d - 1] * 3

    target_monos = monomial_basis(r, nvars=3)
    target_index = {m: i for i, m in enumerate(target_monos)}
    nrows = 3 * len(target_monos)
    rows: list[dict[int, object]] = [{} for _ in range(nrows)]
    col = 0
    for rel, rel_deg in zip(rels, degrees):
        coeff_deg = r - rel_deg
        if coeff_deg < 0:
            continue
        for u in monomial_basis(coeff_deg, nvars=3):
            for comp_idx, comp in enumerate(rel):
                for m, c in comp.terms.items():
                    ridx = comp_idx * len(target_monos) + target_index[mono_mul(u, m)]
                    row = rows[ridx]
                    prev = row.get(col)
                    acc = c if prev is None else prev + c
                    if acc:
                        row[col] = acc
                    else:
                        row.pop(col, None)
            col += 1
    rank = linalg.rank(rows)
    return rank, col - rank


def expected_relation_kernel_dim(d: int, r: int) -> int:
    """Kernel dimension of the assembled relation map predicted by the
    resolution shape: m copies in degree d plus, for odd d, one in d-1."""
    if d % 2 == 0:
        m = d // 2
        return m * _dim_homog(r - d)
    m = (d - 1) // 2
    return m * _dim_homog(r - d) + _dim_homog(r - d + 1)


@dataclass(frozen=True)
class DegreeCheck:
    r: int
    got: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.got == self.expected


@dataclass(frozen=True)
class ResolutionReport:
    d: int
    syzygy_checks: tuple[DegreeCheck, ...]
    first_syzygy_degree: int
    first_syzygy_count: int
    relations: tuple[tuple[MPoly, MPoly, MPoly], ...]
    rank_checks: tuple[DegreeCheck, ...]
    kernel_checks: tuple[DegreeCheck, ...]

    @property
    def ok(self) -> bool:
        m = self.d // 2 if self.d % 2 == 0 else (self.d - 1) // 2
        expected_count = m - 1 if self.d % 2 == 0 else m
        return (
            all(c.ok for c in self.syzygy_checks)
            and self.first_syzygy_degree == self.d - 2
            and self.first_syzygy_count == expected_count
            and all(c.ok for c in self.rank_checks)
            and all(c.ok for c in self.kernel_checks)
        )


def verify_resolution(d: int, r_max: int | None = None, second_level: bool = True) -> ResolutionReport:
    """Cross-check the graded resolution of the degree-d Chebyshev curve.

    Per degree r the elimination count of syzygies must match the
    rank-nullity count from the Hilbert data; the first non-zero degree is
    d-2; and the assembled relations have the rank and kernel dimensions the
    resolution shape dictates.
    """
    if d < 3:
        raise ValueError("require d >= 3")
    if r_max is None:
        r_max = 2 * d
    f = curve_polynomial(d)
    syz_checks = []
    first_degree = None
    first_count = 0
    for r in range(r_max + 1):
        got = syzygy_dim(f, r)
        expected = syzygy_dim_from_hilbert(f, r)
        syz_checks.append(DegreeCheck(r=r, got=got, expected=expected))
        if first_degree is None and got:
            first_degree = r
            first_count = got
    n_extra = len(minus_conics(d))
    # construction raises unless each relation holds identically
    relations = tuple(nontrivial_syzygy(d, j) for j in range(1, n_extra + 1))
    rank_checks = []
    kernel_checks = []
    if second_level:
        for r in range(d - 2, d + 3):
            rank, ker = relation_module_kernel_dim(d, r)
            rank_checks.append(DegreeCheck(r=r, got=rank, expected=syzygy_dim(f, r)))
            kernel_checks.append(DegreeCheck(r=r, got=ker, expected=expected_relation_kernel_dim(d, r)))
    return ResolutionReport(
        d=d,
        syzygy_checks=tuple(syz_checks),
        first_syzygy_degree=first_degree if first_degree is not None else -1,
        first_syzygy_count=first_count,
        relations=relations,
        rank_checks=tuple(rank_checks),
        kernel_checks=tuple(kernel_checks),
    )
