"""Evaluation matrices on the Chebyshev node grids and their exact ranks.

The degree-r evaluation map sends a polynomial of degree at most r to its
values on the companion-curve node grid; its rank thresholds certify the
interpolation behaviour, and the kernel dimensions feed the syzygy
cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .chebyshev import build
from .hilbert import expected_node_count
from .numberfield import AlgNum
from .polyring import Monomial, monomial_basis


@dataclass(frozen=True)
class EvalMatrix:
    points: tuple
    degree: int
    columns: tuple[Monomial, ...]
    rows: tuple[tuple[AlgNum, ...], ...]


def rank_exact(matrix) -> int:
    """Exact rank via fraction-free elimination with exact zero tests."""
    return linalg.rank(matrix)


def _evaluate_basis(points, monos) -> tuple[tuple, ...]:
    rows = []
    for pt in points:
        row = []
        for m in monos:
            v = None
            for xi, e in zip(pt, m):
                if e:
                    p = xi**e
                    v = p if v is None else v * p
            row.append(1 if v is None else v)
        rows.append(tuple(row))
    return tuple(rows)


def grid_matrix(d: int, r: int) -> EvalMatrix:
    """Evaluation of the 2-variable monomials of degree <= r on the companion grid."""
    data = build(d)
    monos = tuple(monomial_basis(r, nvars=2))
    return EvalMatrix(
        points=data.minus_nodes,
        degree=r,
        columns=monos,
        rows=_evaluate_basis(data.minus_nodes, monos),
    )


def evaluation_kernel_dim(d: int, r: int) -> int:
    """Dimension of the space of degree <= r polynomials vanishing on the grid."""
    mat = grid_matrix(d, r)
    return len(mat.columns) - rank_exact(mat.rows)


def evaluation_thresholds(d: int) -> tuple[int, int]:
    """(largest injective degree, smallest surjective degree) of grid evaluation.

    Scans r = 0..d: injective means full column rank, surjective means rank
    equal to the number of grid points.
    """
    if d < 3:
        raise ValueError("require d >= 3")
    npoints = len(build(d).minus_nodes)
    max_injective = None
    min_surjective = None
    for r in range(d + 1):
        mat = grid_matrix(d, r)
        rk = rank_exact(mat.rows)
        if rk == len(mat.columns):
            max_injective = r
        if rk == npoints and min_surjective is None:
            min_surjective = r
    return max_injective, min_surjective


def node_evaluation_surjective(d: int) -> bool:
    """Whether evaluating homogeneous polynomials of degree 2d-3 at the curve's
    nodes (lifted to z = 1) hits every function on the node set."""
    data = build(d)
    points = tuple((a, b, data.field.one()) for a, b in data.plus_nodes)
    monos = tuple(monomial_basis(2 * d - 3, nvars=3))
    rows = _evaluate_basis(points, monos)
    return rank_exact(rows) == expected_node_count(d)
