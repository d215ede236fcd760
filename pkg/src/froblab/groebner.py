"""Buchberger's algorithm and multivariate division over prime fields.

The engine is deliberately classical: normal pair selection (smallest lcm
degree, then order key, then pair index), Buchberger's coprimality and chain
criteria for pair elimination, and full interreduction at the end.  Output is
the reduced monic basis sorted by descending leading monomial, which is unique
for the ideal and order, so it does not depend on generator permutation.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import BudgetExceeded, RingMismatch
from .polyring import (
    MonomialOrder,
    PolyRing,
    Polynomial,
    monomial_degree,
    monomial_div,
    monomial_gcd,
    monomial_lcm,
)

# max S-pairs popped before giving up; runaway inputs become a clean error
DEFAULT_PAIR_BUDGET = 1_000_000


def _reduce_terms(terms: dict, prepared: Sequence[tuple], p: int, key) -> dict:
    """Full remainder of a term dict against monic divisors.

    ``prepared`` holds (lead monomial, tail items) pairs; divisors are scanned
    in list order and the first whose lead divides the working lead is used.
    """
    work = dict(terms)
    remainder: dict = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lead, tail in prepared:
            q = monomial_div(m, lead)
            if q is not None:
                for tm, tc in tail:
                    mm = tuple(x + y for x, y in zip(q, tm))
                    v = (work.get(mm, 0) - c * tc) % p
                    if v:
                        work[mm] = v
                    elif mm in work:
                        del work[mm]
                break
        else:
            remainder[m] = c
    return remainder


def _prepare(terms: dict, key) -> tuple:
    """Split a monic term dict into (lead, tail items)."""
    lead = max(terms, key=key)
    tail = tuple((m, c) for m, c in terms.items() if m != lead)
    return lead, tail


def _monic(terms: dict, p: int, key) -> dict:
    lead = max(terms, key=key)
    inv = pow(terms[lead], p - 2, p)
    if inv == 1:
        return dict(terms)
    return {m: (c * inv) % p for m, c in terms.items()}


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    """The S-polynomial of f and g; both must be nonzero."""
    if f.ring != g.ring:
        raise RingMismatch("polynomials from different rings")
    ring = f.ring
    order = order or ring.order
    lf, cf = f.leading_term(order)
    lg, cg = g.leading_term(order)
    lcm = monomial_lcm(lf, lg)
    mf = ring.monomial(monomial_div(lcm, lf), pow(int(cf), ring.p - 2, ring.p))
    mg = ring.monomial(monomial_div(lcm, lg), pow(int(cg), ring.p - 2, ring.p))
    return mf * f - mg * g


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced monic Groebner basis, sorted by descending leading monomial."""

    ring: PolyRing
    order: MonomialOrder
    polys: tuple[Polynomial, ...]

    @cached_property
    def _prepared(self) -> tuple:
        key = self.order.key
        return tuple(_prepare(g._terms, key) for g in self.polys)

    @property
    def leading_monomials(self) -> tuple:
        return tuple(lead for lead, _ in self._prepared)

    def normal_form(self, g: Polynomial) -> Polynomial:
        if g.ring != self.ring:
            raise RingMismatch("polynomial from a different ring")
        if not self.polys:
            return g
        reduced = _reduce_terms(g._terms, self._prepared, self.ring.p, self.order.key)
        return self.ring._poly(reduced)

    def contains(self, g: Polynomial) -> bool:
        return self.normal_form(g).is_zero

    def is_unit_ideal(self) -> bool:
        return len(self.polys) == 1 and not any(self.polys[0].leading_monomial(self.order))


def buchberger(
    generators: Iterable[Polynomial],
    order: MonomialOrder | None = None,
    budget: int = DEFAULT_PAIR_BUDGET,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal spanned by ``generators``."""
    gens = [g for g in generators if not g.is_zero]
    if not gens:
        raise ValueError("cannot infer the ring from an empty or all-zero generator list")
    ring = gens[0].ring
    for g in gens[1:]:
        if g.ring != ring:
            raise RingMismatch("generators from different rings")
    order = order or ring.order
    return _buchberger(ring, [dict(g._terms) for g in gens], order, budget)


def groebner_basis_of(
    ring: PolyRing,
    generators: Iterable[Polynomial],
    order: MonomialOrder | None = None,
    budget: int = DEFAULT_PAIR_BUDGET,
) -> GroebnerBasis:
    """Like ``buchberger`` but tolerates an empty generator list (zero ideal)."""
    order = order or ring.order
    gens = [g for g in generators if not g.is_zero]
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("generator from a different ring")
    if not gens:
        return GroebnerBasis(ring, order, ())
    return _buchberger(ring, [dict(g._terms) for g in gens], order, budget)


def _buchberger(ring: PolyRing, seeds: list[dict], order: MonomialOrder, budget: int) -> GroebnerBasis:
    p = ring.p
    key = order.key

    basis: list[dict] = []
    prepared: list[tuple] = []
    leads: list[tuple] = []
    heap: list[tuple] = []
    done: set[tuple[int, int]] = set()

    def push_pairs(t: int) -> None:
        lt = leads[t]
        for i in range(t):
            lcm = monomial_lcm(leads[i], lt)
            heapq.heappush(heap, (monomial_degree(lcm), key(lcm), i, t))

    def add_poly(terms: dict) -> None:
        basis.append(terms)
        prepared.append(_prepare(terms, key))
        leads.append(prepared[-1][0])
        push_pairs(len(basis) - 1)

    for seed in seeds:
        add_poly(_monic(seed, p, key))

    popped = 0
    while heap:
        _, _, i, j = heapq.heappop(heap)
        popped += 1
        if popped > budget:
            raise BudgetExceeded(f"S-pair budget of {budget} exhausted")
        pair = (i, j)
        if pair in done:
            continue
        done.add(pair)
        li, lj = leads[i], leads[j]
        # coprimality criterion: the S-polynomial reduces to zero on its own
        if not any(monomial_gcd(li, lj)):
            continue
        lcm = monomial_lcm(li, lj)
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if monomial_div(lcm, leads[k]) is None:
                continue
            ki = (min(i, k), max(i, k))
            kj = (min(j, k), max(j, k))
            if ki in done and kj in done:
                skip = True
                break
        if skip:
            continue
        qi = monomial_div(lcm, li)
        qj = monomial_div(lcm, lj)
        s: dict = {}
        for m, c in basis[i].items():
            mm = tuple(x + y for x, y in zip(qi, m))
            s[mm] = c
        for m, c in basis[j].items():
            mm = tuple(x + y for x, y in zip(qj, m))
            v = (s.get(mm, 0) - c) % p
            if v:
                s[mm] = v
            elif mm in s:
                del s[mm]
        r = _reduce_terms(s, prepared, p, key)
        if r:
            add_poly(_monic(r, p, key))

    # minimalize: drop elements whose lead is divisible by another kept lead
    by_lead = sorted(range(len(basis)), key=lambda t: key(leads[t]))
    kept: list[int] = []
    for t in by_lead:
        if not any(monomial_div(leads[t], leads[s]) is not None for s in kept):
            kept.append(t)

    # interreduce tails against the other kept elements
    reduced: list[dict] = []
    for t in kept:
        others = tuple(prepared[s] for s in kept if s != t)
        r = _reduce_terms(basis[t], others, p, key) if others else dict(basis[t])
        reduced.append(_monic(r, p, key))

    reduced.sort(key=lambda terms: key(max(terms, key=key)), reverse=True)
    return GroebnerBasis(ring, order, tuple(ring._poly(t) for t in reduced))
