"""Quotient-ring computations: nonzerodivisor and regular-sequence tests,
socles of Artinian reductions, a bounded Frobenius-closure test for parameter
ideals, and an independent linear-algebra membership oracle for Artinian
ideals.

Everything here works with an ambient presentation R = k[x1..xn]/defining and
represents residue classes by normal forms against the defining ideal's
grevlex basis.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BudgetExceeded,
    FroblabError,
    NotArtinian,
    RingMismatch,
    ZeroElement,
)
from .ideals import Ideal
from .linalg import Echelon, nullspace
from .polyring import Monomial, PolyRing, Polynomial
from .reports import (
    CLOSED_UP_TO,
    NOT_FROBENIUS_CLOSED,
    ClosureReport,
    ClosureWitness,
)

# combination sweeps stay exhaustive while p**socle_dim is at most this
ENUMERATION_LIMIT = 3 ** 5
DEFAULT_CLOSURE_EMAX = 3


@dataclass(frozen=True)
class SocleBasis:
    """Basis of the socle of R/(parameter + defining), as normal-form
    representatives.  dimension == 1 is the Gorenstein (type-1) case."""

    parameter: Ideal
    basis: tuple[Polynomial, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


class QuotientPresentation:
    """R = k[x1..xn]/defining with the defining ideal inside (x1..xn)."""

    def __init__(self, ring: PolyRing, defining: Ideal | Iterable[Polynomial]):
        if not isinstance(defining, Ideal):
            defining = Ideal(ring, tuple(defining))
        if defining.ring != ring:
            raise RingMismatch("defining ideal lives in a different ring")
        for g in defining.generators:
            if int(g.constant_coefficient()):
                raise FroblabError(
                    f"defining generator {g} has a nonzero constant term, so the "
                    "presentation is not local at the ideal of variables"
                )
        self.ring = ring
        self.defining = defining
        self._dimension: int | None = None

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def maximal_ideal(self) -> Ideal:
        return Ideal(self.ring, tuple(self.ring.variable(v) for v in self.ring.variables))

    @property
    def dimension(self) -> int:
        if self._dimension is None:
            self._dimension = self.defining.krull_dimension()
        return self._dimension

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.defining.generators) or "0"
        return f"QuotientPresentation(GF({self.p})[{', '.join(self.ring.variables)}] / ({gens}))"

    def normal_form(self, g: Polynomial) -> Polynomial:
        return self.defining.groebner_basis().normal_form(g)

    def is_zero_in_quotient(self, g: Polynomial) -> bool:
        return self.defining.contains(g)

    def is_nzd(self, g: Polynomial) -> bool:
        """True iff g is a nonzerodivisor on R, i.e. (defining : g) == defining."""
        if self.defining.contains(g):
            raise ZeroElement(f"{g} is zero in the quotient")
        return self.defining.colon(Ideal(self.ring, (g,))) == self.defining

    def is_regular_sequence(self, elements: Sequence[Polynomial]) -> bool:
        """Iterated nonzerodivisor test; also requires the final quotient to
        stay proper, so units and over-long sequences come back False."""
        current = self.defining
        for x in elements:
            if current.contains(x):
                return False
            if current.colon(Ideal(self.ring, (x,))) != current:
                return False
            current = current + Ideal(self.ring, (x,))
        return not current.is_unit()

    def socle(self, parameter: Ideal) -> SocleBasis:
        """Socle of R/(parameter + defining): the kernel of multiplication by
        every variable on the standard-monomial basis."""
        full = self.defining + parameter
        monomials = full.standard_monomials()
        if not monomials:
            return SocleBasis(parameter, ())
        gb = full.groebner_basis()
        n = len(monomials)
        index = {m: i for i, m in enumerate(monomials)}
        rows: list[list[int]] = [[0] * n for _ in range(self.ring.nvars * n)]
        for j, m in enumerate(monomials):
            for v in range(self.ring.nvars):
                bumped = tuple(e + 1 if i == v else e for i, e in enumerate(m))
                nf = gb.normal_form(self.ring.monomial(bumped))
                for mm, c in nf._terms.items():
                    rows[v * n + index[mm]][j] = c
        basis = []
        for coeffs in nullspace(rows, n, self.p):
            terms = {m: c for m, c in zip(monomials, coeffs) if c}
            basis.append(self.ring._poly(terms))
        basis.sort(key=lambda b: self.ring.order.key(b.leading_monomial()), reverse=True)
        return SocleBasis(parameter, tuple(basis))

    def frobenius_closure_test(
        self,
        parameter: Ideal,
        e_max: int = DEFAULT_CLOSURE_EMAX,
        enumeration_limit: int = ENUMERATION_LIMIT,
    ) -> ClosureReport:
        """Probe whether the parameter ideal is Frobenius closed, through
        socle elements: a witness s with s**(p**e) in the bracket power is
        decisive (NOT_FROBENIUS_CLOSED); exhausting e <= e_max is evidence
        only (CLOSED_UP_TO).

        Every nonzero k-linear combination of the socle basis is swept when
        p**dimension stays within ``enumeration_limit``; otherwise only the
        basis elements are probed and the report is flagged partial.
        """
        gens = list(parameter.generators)
        regular = self.is_regular_sequence(gens) if gens else True
        soc = self.socle(parameter)
        r = soc.dimension
        p = self.p

        if r == 0 or e_max == 0:
            return ClosureReport(
                verdict=CLOSED_UP_TO,
                e_max=e_max,
                witness=None,
                partial=False,
                regular_sequence_verified=regular,
                socle_dimension=r,
                combinations_tested=0,
                monotonicity_verified=None,
            )

        full_sweep = p ** r <= enumeration_limit
        if full_sweep:
            combos = [
                vec
                for vec in itertools.product(range(p), repeat=r)
                if any(vec)
            ]
        else:
            combos = [
                tuple(1 if i == j else 0 for i in range(r)) for j in range(r)
            ]

        targets = [
            self.defining + parameter.bracket_power(e) for e in range(1, e_max + 1)
        ]

        tested = 0
        for idx, vec in enumerate(combos):
            s = self.ring.zero()
            for c, b in zip(vec, soc.basis):
                if c:
                    s = s + b * c
            tested += 1
            for e in range(1, e_max + 1):
                power = s.frobenius_pow(e)
                if targets[e - 1].contains(power):
                    monotone = None
                    try:
                        bigger = self.defining + parameter.bracket_power(e + 1)
                        monotone = bigger.contains(s.frobenius_pow(e + 1))
                    except Exception:
                        monotone = None
                    witness = ClosureWitness(
                        element=str(s), e=e, combination_index=idx, coefficients=vec
                    )
                    return ClosureReport(
                        verdict=NOT_FROBENIUS_CLOSED,
                        e_max=e_max,
                        witness=witness,
                        partial=not full_sweep,
                        regular_sequence_verified=regular,
                        socle_dimension=r,
                        combinations_tested=tested,
                        monotonicity_verified=monotone,
                    )
        return ClosureReport(
            verdict=CLOSED_UP_TO,
            e_max=e_max,
            witness=None,
            partial=not full_sweep,
            regular_sequence_verified=regular,
            socle_dimension=r,
            combinations_tested=tested,
            monotonicity_verified=None,
        )


def artinian_membership_oracle(ideal: Ideal, g: Polynomial) -> bool:
    """Brute-force membership for Artinian ideals, independent of the
    Groebner engine: row-reduce the monomial multiples of the generators
    inside the finite box cut out by explicit pure-power generators, then
    reduce g against that row space.

    The box certificate must be visible in the generator list itself (a pure
    power of every variable); NotArtinian is raised otherwise.  This routine
    deliberately never calls normal_form.
    """
    if g.ring != ideal.ring:
        raise RingMismatch("polynomial from a different ring")
    ring = ideal.ring
    p = ring.p
    n = ring.nvars
    gens = [f for f in ideal.generators if not f.is_zero]
    for f in gens:
        if len(f._terms) == 1 and not any(next(iter(f._terms))):
            return True  # a unit generator: everything is a member
    bounds: list[int | None] = [None] * n
    for f in gens:
        if len(f._terms) != 1:
            continue
        (m,) = f._terms
        nz = [i for i, e in enumerate(m) if e]
        if len(nz) == 1:
            i = nz[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
    if any(b is None for b in bounds):
        missing = [ring.variables[i] for i, b in enumerate(bounds) if b is None]
        raise NotArtinian(
            f"no pure-power generator for {', '.join(missing)}; the oracle needs "
            "an explicit finite box"
        )
    size = 1
    for b in bounds:
        size *= b
    if size > 1 << 17:
        raise BudgetExceeded(f"oracle box of {size} monomials is too large")

    box = list(itertools.product(*(range(b) for b in bounds)))
    index = {m: i for i, m in enumerate(box)}

    def truncated(poly_terms: dict, shift: Monomial) -> list[int]:
        vec = [0] * len(box)
        for m, c in poly_terms.items():
            mm = tuple(x + y for x, y in zip(m, shift))
            slot = index.get(mm)
            if slot is not None:
                vec[slot] = (vec[slot] + c) % p
        return vec

    ech = Echelon(p)
    zero_shift = (0,) * n
    for f in gens:
        for alpha in box:
            ech.add(truncated(f._terms, alpha))
    return ech.contains(truncated(g._terms, zero_shift))


def suggest_parameter_sequence(
    presentation: QuotientPresentation,
    count: int,
    seed: int = 0,
    first_inside: Ideal | None = None,
    attempts: int = 200,
) -> list[Polynomial]:
    """Search for a regular sequence of ``count`` random linear combinations
    of the variables (the first element drawn from ``first_inside`` when
    given), deterministically for a fixed seed."""
    rng = random.Random(seed)
    ring = presentation.ring
    p = presentation.p
    variables = [ring.variable(v) for v in ring.variables]

    def random_combination(pool: Sequence[Polynomial]) -> Polynomial:
        out = ring.zero()
        while out.is_zero:
            out = ring.zero()
            for g in pool:
                out = out + g * rng.randrange(p)
        return out

    for _ in range(attempts):
        candidate = []
        if first_inside is not None:
            pool = [g for g in first_inside.generators if not g.is_zero]
            if not pool:
                raise FroblabError("cannot draw the first parameter from a zero ideal")
            candidate.append(random_combination(pool))
            while len(candidate) < count:
                candidate.append(random_combination(variables))
        else:
            while len(candidate) < count:
                candidate.append(random_combination(variables))
        if presentation.is_regular_sequence(candidate):
            return candidate
    raise FroblabError(f"no regular sequence of length {count} found in {attempts} attempts")
