"""Hilbert series of graded quotients and Milnor algebra profiles.

The numerator P(t) of a monomial quotient is computed by the classical
pivot recursion; graded dimensions come from expanding P(t)/(1-t)^3, and
the Tjurina number of a plane curve is read off at the general
stabilization bound 3(d-2)+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .groebner import Ideal, buchberger, leading_ideal
from .polyring import Monomial, MPoly, mono_divides, partials

IntPoly = tuple[int, ...]


def _trim(cs: list[int]) -> IntPoly:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(p: IntPoly, q: IntPoly) -> IntPoly:
    out = list(p) + [0] * max(0, len(q) - len(p))
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def _pshift(p: IntPoly, k: int) -> IntPoly:
    return _trim([0] * k + list(p)) if p else ()


def _pmul(p: IntPoly, q: IntPoly) -> IntPoly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return _trim(out)


def minimal_monomial_generators(gens) -> tuple[Monomial, ...]:
    """Drop generators divisible by another generator; dedupe and sort."""
    uniq = sorted(set(tuple(g) for g in gens), key=lambda m: (sum(m), m))
    out = []
    for m in uniq:
        if not any(mono_divides(k, m) for k in out):
            out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def _mono_numerator(gens: tuple[Monomial, ...]) -> IntPoly:
    if not gens:
        return (1,)
    nvars = len(gens[0])
    if any(sum(m) == 0 for m in gens):
        return ()
    counts = [0] * nvars
    for m in gens:
        for v in range(nvars):
            if m[v]:
                counts[v] += 1
    if max(counts) <= 1:
        # pairwise coprime generators: product formula
        out: IntPoly = (1,)
        for m in gens:
            out = _pmul(out, _trim([1] + [0] * (sum(m) - 1) + [-1]))
        return out
    v = counts.index(max(counts))
    exps = sorted(m[v] for m in gens if m[v])
    e = exps[(len(exps) - 1) // 2]
    pivot = tuple(e if i == v else 0 for i in range(nvars))
    sum_side = minimal_monomial_generators(list(gens) + [pivot])
    colon_side = minimal_monomial_generators(
        tuple(max(m[i] - pivot[i], 0) for i in range(nvars)) for m in gens
    )
    return _padd(_mono_numerator(sum_side), _pshift(_mono_numerator(colon_side), e))


def hilbert_numerator(gens) -> IntPoly:
    """Numerator P(t) of the series P(t)/(1-t)^3 of S modulo a monomial ideal."""
    return _mono_numerator(minimal_monomial_generators(gens))


def series_dims(numerator: IntPoly, kmax: int) -> list[int]:
    """Graded dimensions k = 0..kmax from the numerator over (1-t)^3."""
    dims = []
    for k in range(kmax + 1):
        total = 0
        for j, c in enumerate(numerator):
            if j > k:
                break
            if c:
                e = k - j
                total += c * (e + 2) * (e + 1) // 2
        dims.append(total)
    return dims


def _divide_by_one_minus_t(p: IntPoly) -> IntPoly | None:
    """Quotient p / (1 - t) when exact, else None."""
    if not p:
        return ()
    q = []
    carry = 0
    for c in p:
        carry += c
        q.append(carry)
    if q[-1] != 0:
        return None
    q.pop()
    return _trim(q)


@dataclass(frozen=True)
class HilbertData:
    numerator: IntPoly
    dims: tuple[int, ...]
    stabilized_value: int | None
    stabilized_from: int | None


@dataclass(frozen=True)
class MilnorProfile:
    d: int
    hilbert: HilbertData
    tau: int
    q_polynomial: IntPoly | None

    @property
    def dims(self) -> tuple[int, ...]:
        return self.hilbert.dims


def _stabilization(dims: list[int]) -> tuple[int | None, int | None]:
    # a plateau needs at least two equal trailing values to count
    kmax = len(dims) - 1
    if kmax < 1 or dims[kmax] != dims[kmax - 1]:
        return None, None
    k0 = kmax
    while k0 > 0 and dims[k0 - 1] == dims[kmax]:
        k0 -= 1
    return dims[kmax], k0


@lru_cache(maxsize=None)
def milnor_profile(f: MPoly, kmax: int | None = None) -> MilnorProfile:
    """Jacobian-quotient profile of a homogeneous polynomial in x, y, z."""
    if f.nvars != 3:
        raise ValueError("expected a polynomial in x, y, z")
    if f.is_zero() or not f.is_homogeneous():
        raise ValueError("expected a nonzero homogeneous polynomial")
    d = f.degree()
    if d < 2:
        raise ValueError("expected degree at least 2")
    gens = [p for p in partials(f) if not p.is_zero()]
    if not gens:
        raise ValueError("all partial derivatives vanish")
    gb = buchberger(Ideal(tuple(gens)))
    numerator = hilbert_numerator(leading_ideal(gb))
    if kmax is None:
        kmax = 3 * d
    if kmax < 0:
        raise ValueError("kmax must be non-negative")
    tau_degree = 3 * (d - 2) + 1
    dims_full = series_dims(numerator, max(kmax, tau_degree))
    tau = dims_full[tau_degree]
    dims = dims_full[: kmax + 1]
    stabilized_value, stabilized_from = _stabilization(dims)
    q1 = _divide_by_one_minus_t(numerator)
    q2 = _divide_by_one_minus_t(q1) if q1 is not None else None
    return MilnorProfile(
        d=d,
        hilbert=HilbertData(
            numerator=numerator,
            dims=tuple(dims),
            stabilized_value=stabilized_value,
            stabilized_from=stabilized_from,
        ),
        tau=tau,
        q_polynomial=q2,
    )


def chebyshev_milnor_numerator(d: int) -> IntPoly:
    """Closed-form Hilbert numerator for the Milnor algebra of the degree-d
    Chebyshev curve; agrees with the computed numerator coefficientwise."""
    if d < 2:
        raise ValueError("require d >= 2")
    out: dict[int, int] = {}

    def bump(e: int, c: int):
        out[e] = out.get(e, 0) + c

    if d % 2 == 0:
        m = d // 2
        bump(0, 1)
        bump(2 * m - 1, -3)
        bump(4 * m - 3, m - 1)
        bump(4 * m - 2, 3)
        bump(4 * m - 1, -m)
    else:
        m = (d - 1) // 2
        bump(0, 1)
        bump(2 * m, -3)
        bump(4 * m - 1, m)
        bump(4 * m, 2)
        bump(4 * m + 1, -m)
    top = max(out)
    return _trim([out.get(i, 0) for i in range(top + 1)])


def expected_node_count(d: int) -> int:
    """Node count of the degree-d Chebyshev curve: 2m(m-1) or 2m^2 by parity."""
    if d < 2:
        raise ValueError("require d >= 2")
    if d % 2 == 0:
        m = d // 2
        return 2 * m * (m - 1)
    m = (d - 1) // 2
    return 2 * m * m
