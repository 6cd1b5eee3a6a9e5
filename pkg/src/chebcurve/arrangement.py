"""Certificate deciding whether a nodal plane curve is a rational arrangement.

The test compares the number of nodes (the Tjurina number, read from the
Milnor algebra at the general stabilization bound) with the graded
dimension at 2d-3: equality certifies that every irreducible component is
rational, and the difference reports the total geometric genus otherwise.
Nodality itself is certified by counting distinct singular points through a
random coordinate change and lex elimination.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import upoly
from .groebner import GroebnerBasis, Ideal, buchberger, leading_ideal, normal_form
from .hilbert import milnor_profile
from .polyring import (
    Monomial,
    MPoly,
    exact_div,
    dehomogenize,
    partials,
)


class SingularLocusError(RuntimeError):
    """Raised when random coordinate changes fail to expose the singular points."""


# ---------------------------------------------------------------------------
# multivariate gcd over Q, by content/primitive-part recursion


def _as_univariate(p: MPoly, var: int) -> list[MPoly]:
    """Coefficient list of p in the chosen variable, ascending degree."""
    deg = max((m[var] for m in p.terms), default=-1)
    coeffs = [dict() for _ in range(deg + 1)]
    for m, c in p.terms.items():
        reduced = list(m)
        reduced[var] = 0
        coeffs[m[var]][tuple(reduced)] = c
    return [MPoly(p.nvars, t) for t in coeffs]


def _from_univariate(coeffs: list[MPoly], var: int, nvars: int) -> MPoly:
    total: dict[Monomial, object] = {}
    for e, p in enumerate(coeffs):
        for m, c in p.terms.items():
            lifted = list(m)
            lifted[var] += e
            total[tuple(lifted)] = c
    return MPoly(nvars, total)


def _rational_content(p: MPoly) -> Fraction:
    from math import gcd

    num = 0
    den = 1
    for c in p.terms.values():
        c = Fraction(c)
        num = gcd(num, c.numerator)
        den = den * c.denominator // gcd(den, c.denominator)
    return Fraction(num, den) if num else Fraction(0)


def _normalize_sign(p: MPoly) -> MPoly:
    if p.is_zero():
        return p
    lead = p.terms[p.leading_monomial()]
    if Fraction(lead) < 0:
        return -p
    return p


def mpoly_gcd(a: MPoly, b: MPoly) -> MPoly:
    """GCD over Q[x,y,(z)], primitive and with positive leading coefficient."""
    if a.is_zero():
        return _make_primitive(b)
    if b.is_zero():
        return _make_primitive(a)
    vars_used = [
        v
        for v in range(a.nvars)
        if any(m[v] for m in a.terms) or any(m[v] for m in b.terms)
    ]
    if not vars_used:
        return MPoly.constant(Fraction(1), a.nvars)
    var = vars_used[-1]
    if not any(m[var] for m in a.terms) or not any(m[var] for m in b.terms):
        # one side is free of the main variable: gcd divides its content
        free, other = (a, b) if not any(m[var] for m in a.terms) else (b, a)
        cont = _content_in_var(other, var)
        return mpoly_gcd(free, cont)
    cont_a = _content_in_var(a, var)
    cont_b = _content_in_var(b, var)
    cont = mpoly_gcd(cont_a, cont_b)
    f = _primitive_part_in_var(a, var, cont_a)
    g = _primitive_part_in_var(b, var, cont_b)
    if _deg_in_var(f, var) < _deg_in_var(g, var):
        f, g = g, f
    while not g.is_zero():
        r = _pseudo_rem(f, g, var)
        f, g = g, _primitive_part_in_var(r, var, None)
    return _make_primitive(cont * f)


def _deg_in_var(p: MPoly, var: int) -> int:
    return max((m[var] for m in p.terms), default=-1)


def _content_in_var(p: MPoly, var: int) -> MPoly:
    coeffs = [c for c in _as_univariate(p, var) if not c.is_zero()]
    acc = coeffs[0]
    for c in coeffs[1:]:
        acc = mpoly_gcd(acc, c)
        if acc.degree() == 0:
            break
    return _make_primitive(acc)


def _primitive_part_in_var(p: MPoly, var: int, cont: MPoly | None) -> MPoly:
    if p.is_zero():
        return p
    if cont is None:
        cont = _content_in_var(p, var)
    if cont.degree() == 0:
        c = cont.constant_coefficient()
        return p.map_coefficients(lambda v: Fraction(v) / Fraction(c))
    return exact_div(p, cont)


def _pseudo_rem(f: MPoly, g: MPoly, var: int) -> MPoly:
    fc = _as_univariate(f, var)
    gc = _as_univariate(g, var)
    dg = len(gc) - 1
    lead_g = gc[-1]
    rem = fc
    while len(rem) - 1 >= dg and rem:
        dr = len(rem) - 1
        lead_r = rem[-1]
        new = []
        for i in range(dr):
            t = lead_g * rem[i]
            j = i - (dr - dg)
            if 0 <= j < dg:
                t = t - lead_r * gc[j]
            new.append(t)
        while new and new[-1].is_zero():
            new.pop()
        rem = new
    return _from_univariate(rem, var, f.nvars) if rem else MPoly.zero(f.nvars)


def _make_primitive(p: MPoly) -> MPoly:
    if p.is_zero():
        return p
    cont = _rational_content(p)
    return _normalize_sign(p.map_coefficients(lambda v: Fraction(v) / cont))


# ---------------------------------------------------------------------------
# the certificate


def is_reduced(f: MPoly) -> bool:
    """Square-freeness of a nonzero homogeneous polynomial, via gcd with its partials."""
    if f.is_zero():
        raise ValueError("expected a nonzero polynomial")
    g = f
    for p in partials(f):
        if p.is_zero():
            continue
        g = mpoly_gcd(g, p)
        if g.degree() == 0:
            return True
    return g.degree() == 0


def _random_change(rng: random.Random, f: MPoly) -> MPoly | None:
    entries = [[rng.randint(-10, 10) for _ in range(3)] for _ in range(3)]
    det = (
        entries[0][0] * (entries[1][1] * entries[2][2] - entries[1][2] * entries[2][1])
        - entries[0][1] * (entries[1][0] * entries[2][2] - entries[1][2] * entries[2][0])
        + entries[0][2] * (entries[1][0] * entries[2][1] - entries[1][1] * entries[2][0])
    )
    if det == 0:
        return None
    images = [
        MPoly(3, {(1, 0, 0): row[0], (0, 1, 0): row[1], (0, 0, 1): row[2]})
        for row in entries
    ]
    return f.evaluate(images)


def _no_singular_points_at_infinity(g: MPoly) -> bool:
    """True when the singular subscheme avoids the line z = 0."""
    z = MPoly.variable(2, 3)
    gens = [p for p in partials(g) if not p.is_zero()]
    gb = buchberger(Ideal(tuple(gens) + (z,)))
    lead = leading_ideal(gb)
    for var in range(3):
        if not any(sum(m) == m[var] for m in lead):
            return False
    return True


def _standard_monomials(lead: tuple[Monomial, ...]) -> list[Monomial] | None:
    """Monomials outside the leading ideal, or None if infinitely many."""
    bound_x = min((m[0] for m in lead if sum(m) == m[0]), default=None)
    bound_y = min((m[1] for m in lead if sum(m) == m[1]), default=None)
    if bound_x is None or bound_y is None:
        return None
    out = []
    for a in range(bound_x):
        for b in range(bound_y):
            m = (a, b)
            if not any(all(e <= f for e, f in zip(g, m)) for g in lead):
                out.append(m)
    return out


def _shape_eliminant(gb: GroebnerBasis, standard: list[Monomial], var: int):
    """Eliminant of the lex basis eliminating the other variable, or None.

    Walks the powers of the kept variable through their normal forms until
    the first dependency, which is the pure eliminant; the shape holds when
    the other variable's class is a combination of those powers (the lex
    basis then contains an element linear in it).
    """
    index = {m: i for i, m in enumerate(standard)}
    dim = len(standard)

    def nf_vector(p: MPoly) -> list[Fraction]:
        r = normal_form(p, gb)
        vec = [Fraction(0)] * dim
        for m, c in r.terms.items():
            vec[index[m]] = Fraction(c)
        return vec

    kept_rows: list[tuple[int, list[Fraction], list[Fraction]]] = []  # pivot, vec, combo

    def reduce_against(vec: list[Fraction], combo: list[Fraction]):
        for piv, bvec, bcombo in kept_rows:
            if vec[piv]:
                f = vec[piv] / bvec[piv]
                vec = [a - f * b for a, b in zip(vec, bvec)]
                combo = [a - f * b for a, b in zip(combo, bcombo)]
        pivot = next((i for i, a in enumerate(vec) if a), None)
        return vec, combo, pivot

    v = MPoly.variable(var, 2)
    power = MPoly.constant(Fraction(1), 2)
    eliminant = None
    for k in range(dim + 1):
        vec = nf_vector(power)
        combo = [Fraction(0)] * (dim + 1)
        combo[k] = Fraction(1)
        vec, combo, pivot = reduce_against(vec, combo)
        if pivot is None:
            eliminant = upoly.upoly(combo[: k + 1])
            break
        kept_rows.append((pivot, vec, combo))
        power = power * v
    if eliminant is None:
        raise ArithmeticError("no univariate dependency in a finite quotient")
    other_vec = nf_vector(MPoly.variable(1 - var, 2))
    _, _, pivot = reduce_against(other_vec, [Fraction(0)] * (dim + 1))
    if pivot is not None:
        return None  # the other variable is not a polynomial in this one
    return eliminant


def _chart_point_count(g: MPoly) -> int | None:
    """Distinct singular points in the chart z = 1, or None on shape failure.

    Works with the lex elimination data of the dehomogenized Jacobian ideal:
    the univariate eliminant carries the point count as its squarefree
    degree, and the element linear in the complementary variable certifies
    one point per root.  Both elimination orientations are tried, since
    their degeneracies are independent.
    """
    gens = [dehomogenize(p) for p in partials(g)]
    gens = [p for p in gens if not p.is_zero()]
    gb = buchberger(Ideal(tuple(gens)))
    elements = gb.elements
    if len(elements) == 1 and elements[0].degree() == 0:
        return 0  # smooth curve: empty singular locus
    standard = _standard_monomials(leading_ideal(gb))
    if standard is None:
        return None  # singular locus is not zero-dimensional in this chart
    for var in (1, 0):
        eliminant = _shape_eliminant(gb, standard, var)
        if eliminant is not None:
            sqfree = upoly.exact_div(
                eliminant, upoly.gcd_poly(eliminant, upoly.derivative(eliminant))
            )
            return upoly.degree(sqfree)
    return None


def count_distinct_singular_points(f: MPoly, seed: int = 0) -> int:
    """Number of distinct singular points of the projective curve f = 0.

    Applies random invertible coordinate changes until the affine chart
    shows all singular points with the expected elimination shape and two
    independent trials agree; at most five trials.
    """
    if f.nvars != 3:
        raise ValueError("expected a polynomial in x, y, z")
    rng = random.Random(seed)
    counts: list[int] = []
    for _ in range(5):
        g = _random_change(rng, f)
        if g is None:
            continue
        if not _no_singular_points_at_infinity(g):
            continue
        count = _chart_point_count(g)
        if count is None:
            continue
        if count in counts:
            return count
        counts.append(count)
    raise SingularLocusError(
        "could not certify the singular point count after 5 coordinate changes"
    )


def is_nodal(f: MPoly, seed: int = 0) -> bool:
    """Whether every singularity is a node: the Tjurina number equals the
    number of distinct singular points exactly when all local types are A1."""
    prof = milnor_profile(f)
    return prof.tau == count_distinct_singular_points(f, seed=seed)


VERDICT_ALL_RATIONAL = "all_rational"
VERDICT_IRRATIONAL = "has_irrational_component"
VERDICT_NOT_NODAL = "not_nodal"
VERDICT_NOT_REDUCED = "not_reduced"


@dataclass(frozen=True)
class CurveReport:
    degree: int
    verdict: str
    tau: int | None = None
    distinct_singular_points: int | None = None
    dim_at_2d_minus_3: int | None = None
    genus_sum: int | None = None


def rationality_test(f: MPoly, seed: int = 0) -> CurveReport:
    """Classify a plane curve: rational arrangement, irrational component,
    not nodal, or not reduced.

    For nodal curves the verdict is all_rational exactly when the Milnor
    algebra dimension at 2d-3 equals the node count; their difference is
    the total geometric genus of the components.
    """
    if f.nvars != 3:
        raise ValueError("expected a polynomial in x, y, z")
    if f.is_zero() or not f.is_homogeneous():
        raise ValueError("expected a nonzero homogeneous polynomial")
    d = f.degree()
    if d < 3:
        raise ValueError("require degree >= 3")
    if not is_reduced(f):
        return CurveReport(degree=d, verdict=VERDICT_NOT_REDUCED)
    prof = milnor_profile(f)
    points = count_distinct_singular_points(f, seed=seed)
    if prof.tau != points:
        return CurveReport(
            degree=d,
            verdict=VERDICT_NOT_NODAL,
            tau=prof.tau,
            distinct_singular_points=points,
        )
    dim = prof.dims[2 * d - 3]
    genus_sum = dim - prof.tau
    verdict = VERDICT_ALL_RATIONAL if genus_sum == 0 else VERDICT_IRRATIONAL
    constant_tail = all(v == prof.dims[2 * d - 3] for v in prof.dims[2 * d - 3 :])
    if constant_tail != (verdict == VERDICT_ALL_RATIONAL):
        raise ArithmeticError(
            "stabilization at 2d-3 disagrees with the dimension test"
        )
    return CurveReport(
        degree=d,
        verdict=verdict,
        tau=prof.tau,
        distinct_singular_points=points,
        dim_at_2d_minus_3=dim,
        genus_sum=genus_sum,
    )
