"""Buchberger's algorithm over Q with product/chain pruning and reduced bases.

Internally polynomials are primitive integer term-dicts (content removed
after every reduction), which keeps the Jacobian-ideal coefficient swell of
high-degree Chebyshev curves under control.  The returned reduced basis is
monic over Q and canonical, so it is independent of the pair-selection
strategy.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .polyring import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    MPoly,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


@dataclass(frozen=True)
class Ideal:
    generators: tuple[MPoly, ...]
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("ideal needs at least one generator")
        if any(g.is_zero() for g in gens):
            raise ValueError("ideal generators must be nonzero")
        if len({g.nvars for g in gens}) != 1:
            raise ValueError("generators must share a variable count")
        object.__setattr__(self, "generators", gens)

    @property
    def nvars(self) -> int:
        return self.generators[0].nvars


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[MPoly, ...]
    order: MonomialOrder = GREVLEX


class _GPoly:
    __slots__ = ("terms", "lm", "lc")

    def __init__(self, terms: dict[Monomial, int], lm: Monomial, lc: int):
        self.terms = terms
        self.lm = lm
        self.lc = lc


def _int_terms(p: MPoly) -> dict[Monomial, int]:
    den = 1
    for c in p.terms.values():
        c = Fraction(c)
        den = den * c.denominator // gcd(den, c.denominator)
    out = {}
    for m, c in p.terms.items():
        c = Fraction(c)
        out[m] = c.numerator * (den // c.denominator)
    return out


def _content(terms: dict[Monomial, int]) -> int:
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _make_gpoly(terms: dict[Monomial, int], keyf) -> _GPoly | None:
    if not terms:
        return None
    g = _content(terms)
    lm = max(terms, key=keyf)
    if terms[lm] < 0:
        g = -g
    if g != 1:
        terms = {m: c // g for m, c in terms.items()}
    return _GPoly(terms, lm, terms[lm])


def _joint_content_strip(work: dict[Monomial, int], rem: dict[Monomial, int]) -> None:
    g = 0
    for v in work.values():
        g = gcd(g, v)
        if g == 1:
            return
    for v in rem.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for k in work:
            work[k] //= g
        for k in rem:
            rem[k] //= g


def _normal_form_int(terms: dict[Monomial, int], basis: list[_GPoly], keyf) -> dict[Monomial, int]:
    """Full normal form of an integer term-dict against the basis."""
    work = dict(terms)
    rem: dict[Monomial, int] = {}
    steps = 0
    while work:
        m = max(work, key=keyf)
        c = work.pop(m)
        red = None
        for g in basis:
            if mono_divides(g.lm, m):
                red = g
                break
        if red is None:
            rem[m] = c
            continue
        d = gcd(c, red.lc)
        a = red.lc // d
        b = c // d
        if a < 0:
            a, b = -a, -b
        if a != 1:
            for k in work:
                work[k] *= a
            for k in rem:
                rem[k] *= a
        q = mono_div(m, red.lm)
        for gm, gc in red.terms.items():
            if gm == red.lm:
                continue
            mm = mono_mul(q, gm)
            nv = work.get(mm, 0) - b * gc
            if nv:
                work[mm] = nv
            else:
                work.pop(mm, None)
        steps += 1
        if steps % 64 == 0:
            # periodic strip keeps the cross-multiplied integers small
            _joint_content_strip(work, rem)
    return rem


def _s_poly(gi: _GPoly, gj: _GPoly) -> dict[Monomial, int]:
    lcm = mono_lcm(gi.lm, gj.lm)
    d = gcd(gi.lc, gj.lc)
    ci = gj.lc // d
    cj = gi.lc // d
    qi = mono_div(lcm, gi.lm)
    qj = mono_div(lcm, gj.lm)
    out: dict[Monomial, int] = {}
    for m, c in gi.terms.items():
        out[mono_mul(qi, m)] = ci * c
    for m, c in gj.terms.items():
        mm = mono_mul(qj, m)
        nv = out.get(mm, 0) - cj * c
        if nv:
            out[mm] = nv
        else:
            out.pop(mm, None)
    return out


def buchberger(ideal: Ideal, strategy: str = "normal", max_degree: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal.

    strategy selects the S-pair order: "normal" processes pairs by
    increasing lcm degree (so truncated runs are valid up to max_degree),
    "fifo" in creation order.  Both must and do return the same basis.
    """
    if strategy not in ("normal", "fifo"):
        raise ValueError(f"unknown strategy {strategy!r}")
    keyf = ideal.order.key
    basis: list[_GPoly] = []
    for p in sorted(ideal.generators, key=lambda q: keyf(q.leading_monomial(ideal.order))):
        r = _normal_form_int(_int_terms(p), basis, keyf)
        g = _make_gpoly(r, keyf)
        if g is not None:
            basis.append(g)

    pending: set[tuple[int, int]] = set()
    heap: list = []
    queue: deque = deque()

    def push_pair(i: int, j: int):
        lcm = mono_lcm(basis[i].lm, basis[j].lm)
        pending.add((i, j))
        if strategy == "normal":
            heapq.heappush(heap, (sum(lcm), keyf(lcm), i, j))
        else:
            queue.append((i, j))

    for j in range(len(basis)):
        for i in range(j):
            push_pair(i, j)

    def pop_pair():
        while True:
            if strategy == "normal":
                if not heap:
                    return None
                _, _, i, j = heapq.heappop(heap)
            else:
                if not queue:
                    return None
                i, j = queue.popleft()
            if (i, j) in pending:
                pending.discard((i, j))
                return i, j

    while True:
        pair = pop_pair()
        if pair is None:
            break
        i, j = pair
        gi, gj = basis[i], basis[j]
        lcm = mono_lcm(gi.lm, gj.lm)
        if max_degree is not None and sum(lcm) > max_degree:
            continue
        # product criterion: coprime leading monomials reduce to zero
        if lcm == mono_mul(gi.lm, gj.lm):
            continue
        # chain criterion: a third element divides the lcm and both side
        # pairs have already been handled
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if mono_divides(basis[k].lm, lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            continue
        r = _normal_form_int(_s_poly(gi, gj), basis, keyf)
        g = _make_gpoly(r, keyf)
        if g is None:
            continue
        basis.append(g)
        new = len(basis) - 1
        for k in range(new):
            push_pair(k, new)

    return GroebnerBasis(elements=_reduce_basis(basis, ideal.order, ideal.nvars), order=ideal.order)


def _reduce_basis(basis: list[_GPoly], order: MonomialOrder, nvars: int) -> tuple[MPoly, ...]:
    keyf = order.key
    # minimal subset: no leading monomial divides another's
    chosen: list[_GPoly] = []
    for g in sorted(basis, key=lambda g: keyf(g.lm)):
        if not any(mono_divides(h.lm, g.lm) for h in chosen):
            chosen.append(g)
    # tail-reduce every element against the others, then make monic
    reduced: list[MPoly] = []
    for idx, g in enumerate(chosen):
        others = chosen[:idx] + chosen[idx + 1 :]
        terms = _normal_form_int(dict(g.terms), others, keyf)
        lm = max(terms, key=keyf)
        lc = terms[lm]
        reduced.append(MPoly(nvars, {m: Fraction(c, lc) for m, c in terms.items()}))
    reduced.sort(key=lambda p: keyf(p.leading_monomial(order)))
    return tuple(reduced)


def normal_form(p: MPoly, G: GroebnerBasis) -> MPoly:
    """Remainder of p on division by the basis; p minus the result is in the ideal."""
    if p.is_zero():
        return p
    keyf = G.order.key
    lead = [(g.leading_monomial(G.order), g) for g in G.elements]
    work = dict(p.terms)
    rem: dict[Monomial, object] = {}
    while work:
        m = max(work, key=keyf)
        c = work.pop(m)
        hit = None
        for lm, g in lead:
            if mono_divides(lm, m):
                hit = (lm, g)
                break
        if hit is None:
            rem[m] = c
            continue
        lm, g = hit
        q = mono_div(m, lm)
        f = c / g.terms[lm]
        for gm, gc in g.terms.items():
            if gm == lm:
                continue
            mm = mono_mul(q, gm)
            nv = work.get(mm, Fraction(0)) - f * gc
            if nv:
                work[mm] = nv
            else:
                work.pop(mm, None)
    return MPoly(p.nvars, rem)


def leading_ideal(G: GroebnerBasis) -> tuple[Monomial, ...]:
    """Minimal monomial generators of the initial ideal of a reduced basis."""
    lms = sorted((g.leading_monomial(G.order) for g in G.elements), key=G.order.key)
    return tuple(lms)


def s_polynomial(f: MPoly, g: MPoly, order: MonomialOrder = GREVLEX) -> MPoly:
    """S-polynomial over Q, used by tests to confirm the Buchberger criterion."""
    lf = f.leading_monomial(order)
    lg = g.leading_monomial(order)
    lcm = mono_lcm(lf, lg)
    mf = MPoly(f.nvars, {mono_div(lcm, lf): 1 / Fraction(f.terms[lf])})
    mg = MPoly(g.nvars, {mono_div(lcm, lg): 1 / Fraction(g.terms[lg])})
    return mf * f - mg * g
