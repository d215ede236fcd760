"""Frobenius singularity checks: Fedder's F-purity test, arithmetic in the
pseudocanonical cover R + I*t with t^2 = f, socle transfer along a
nonzerodivisor, and bounded F-injectivity criteria for the cover.

The cover element (a + b*t) multiplies as (ac + bd*f) + (ad + bc)*t, and for
p > 2 its Frobenius power collapses to a^q + b^q * f^((q-1)/2) * t.  For
p = 2 the cover is never F-injective; the only check offered there verifies
the degeneracy mechanism itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import (
    ContextMismatch,
    EvenCharacteristic,
    FroblabError,
    InjectivityFailure,
    InputAssumptionViolation,
    NotNZD,
    NotRegularSequence,
    OddCharacteristic,
    TypeNotOne,
)
from .ideals import Ideal
from .polyring import GREVLEX, PolyRing, Polynomial
from .quotients import QuotientPresentation
from .reports import (
    CLOSED_UP_TO,
    DECISIVE_NOT_F_INJECTIVE,
    NO_FAILURE_UP_TO,
    NOT_FROBENIUS_CLOSED,
    P2_DEGENERATE,
    ClosureReport,
    CriterionReport,
    PipelineReport,
)

ASSUMPTION_CM = "Cohen-Macaulayness of the ambient quotient is asserted by the caller, not verified"
ASSUMPTION_CANONICAL = (
    "canonicity of the coefficient ideal is asserted by the caller; only necessary "
    "conditions are checked (nonzerodivisor inside it, type-1 Artinian reduction)"
)


@dataclass(frozen=True)
class CoverElement:
    """a + b*t in the cover, with b constrained to the coefficient ideal."""

    context: "CoverContext"
    ring_part: Polynomial
    t_part: Polynomial

    def __str__(self) -> str:
        return f"({self.ring_part}) + ({self.t_part})*t"


class CoverContext:
    """The cover S = R + I*t over a presentation R, with t^2 = twist."""

    def __init__(self, quotient: QuotientPresentation, coefficient: Ideal, twist: Polynomial):
        ring = quotient.ring
        if coefficient.ring != ring or twist.ring != ring:
            raise FroblabError("coefficient ideal and twist must live in the presentation ring")
        membership = quotient.defining + coefficient
        if membership.is_unit():
            raise InputAssumptionViolation("coefficient ideal is the unit ideal")
        if all(quotient.defining.contains(g) for g in coefficient.generators):
            raise InputAssumptionViolation("coefficient ideal is zero in the quotient")
        for g in coefficient.generators:
            if int(quotient.normal_form(g).constant_coefficient()):
                raise InputAssumptionViolation(
                    f"coefficient generator {g} is a unit in the quotient; the ideal "
                    "must sit inside the maximal ideal"
                )
        self.quotient = quotient
        self.coefficient = coefficient
        self.twist = quotient.normal_form(twist)
        self._membership = membership

    @property
    def p(self) -> int:
        return self.quotient.p

    @property
    def ring(self) -> PolyRing:
        return self.quotient.ring

    def element(self, ring_part: Polynomial, t_part: Polynomial) -> CoverElement:
        if not self._membership.contains(t_part):
            raise InputAssumptionViolation(
                f"t-coefficient {t_part} is not in the coefficient ideal"
            )
        return CoverElement(
            self,
            self.quotient.normal_form(ring_part),
            self.quotient.normal_form(t_part),
        )

    def zero(self) -> CoverElement:
        z = self.ring.zero()
        return CoverElement(self, z, z)

    def one(self) -> CoverElement:
        return CoverElement(self, self.ring.one(), self.ring.zero())

    def _check(self, u: CoverElement) -> None:
        if u.context is not self:
            raise ContextMismatch("cover element from a different context")

    def add(self, u: CoverElement, v: CoverElement) -> CoverElement:
        self._check(u)
        self._check(v)
        nf = self.quotient.normal_form
        return CoverElement(self, nf(u.ring_part + v.ring_part), nf(u.t_part + v.t_part))

    def neg(self, u: CoverElement) -> CoverElement:
        self._check(u)
        return CoverElement(self, -u.ring_part, -u.t_part)

    def mul(self, u: CoverElement, v: CoverElement) -> CoverElement:
        self._check(u)
        self._check(v)
        nf = self.quotient.normal_form
        a, b = u.ring_part, u.t_part
        c, d = v.ring_part, v.t_part
        return CoverElement(
            self,
            nf(a * c + b * d * self.twist),
            nf(a * d + b * c),
        )

    def is_unit(self, u: CoverElement) -> bool:
        """Units are exactly the elements whose ring part avoids the maximal
        ideal, read off the constant term of the normal form."""
        self._check(u)
        return bool(int(u.ring_part.constant_coefficient()))

    def frobenius(self, u: CoverElement, e: int) -> CoverElement:
        """(a + b*t) ** (p**e) through the closed form, requiring p > 2."""
        self._check(u)
        if self.p == 2:
            raise EvenCharacteristic("the closed Frobenius form needs p > 2")
        if e < 0:
            raise ValueError("negative Frobenius power")
        if e == 0:
            return u
        q = self.p ** e
        nf = self.quotient.normal_form
        return CoverElement(
            self,
            nf(u.ring_part.frobenius_pow(e)),
            nf(u.t_part.frobenius_pow(e) * self.twist ** ((q - 1) // 2)),
        )


class SocleLift(NamedTuple):
    socle_rep: Polynomial  # generator of the socle of R/(I + tail)
    lift: Polynomial       # its image under multiplication by the first parameter


def socle_lift(
    context: CoverContext, first: Polynomial, tail: Sequence[Polynomial]
) -> SocleLift:
    """Transfer a socle generator z of R/(I + tail) to u = first*z, the socle
    generator of I/JI for J = (first, tail).

    Verifies: first lies in the coefficient ideal and is a nonzerodivisor on
    R; tail is regular on R/I and on R/(first); the Artinian reduction has
    type 1.  Postconditions checked: m*u inside J*I + defining and u outside
    it.
    """
    R = context.quotient
    ring = context.ring
    I = context.coefficient
    if not context._membership.contains(first):
        raise InputAssumptionViolation(f"{first} is not in the coefficient ideal")
    if not R.is_nzd(first):
        raise NotNZD(f"{first} is a zerodivisor on the quotient")
    tail = list(tail)
    mod_I = QuotientPresentation(ring, R.defining + I)
    if not mod_I.is_regular_sequence(tail):
        raise NotRegularSequence("tail is not regular on R modulo the coefficient ideal")
    mod_first = QuotientPresentation(ring, R.defining + Ideal(ring, (first,)))
    if not mod_first.is_regular_sequence(tail):
        raise NotRegularSequence("tail is not regular on R modulo the first parameter")

    soc = R.socle(I + Ideal(ring, tuple(tail)))
    if soc.dimension != 1:
        raise TypeNotOne(
            f"socle dimension {soc.dimension}; the Artinian reduction is not type 1"
        )
    z = soc.basis[0]
    u = R.normal_form(first * z)

    J = Ideal(ring, (first, *tail))
    kill = R.defining + J.product(I)
    for v in ring.variables:
        if not kill.contains(ring.variable(v) * u):
            raise InputAssumptionViolation(
                f"{v}*u escaped J*I; the transfer hypotheses do not hold"
            )
    if kill.contains(u):
        raise InjectivityFailure("the lifted socle generator lies in J*I")
    return SocleLift(z, u)


def cover_f_injectivity_criterion(
    context: CoverContext, sop: Sequence[Polynomial], e_max: int
) -> CriterionReport:
    """Bounded membership criterion for F-injectivity of the cover (p > 2).

    With u the lifted socle generator and q = p**e, membership
    u**q * twist**((q-1)/2) in J^[q]*I + defining for some e <= e_max proves
    the cover is NOT F-injective (decisive, monotone in e).  Exhausting the
    range is evidence only.
    """
    if context.p == 2:
        raise EvenCharacteristic("use the even-characteristic degeneracy check for p = 2")
    if not sop:
        raise InputAssumptionViolation("an empty system of parameters")
    R = context.quotient
    ring = context.ring
    if not R.is_regular_sequence(list(sop)):
        raise NotRegularSequence("the given parameters are not a regular sequence on R")
    lifted = socle_lift(context, sop[0], sop[1:])
    u = lifted.lift
    f = context.twist
    I = context.coefficient
    J = Ideal(ring, tuple(sop))
    p = context.p

    sub: dict = {
        "parameters_regular_on_ring": True,
        "first_parameter_in_coefficient_ideal": True,
        "nonzerodivisor": True,
        "tail_regular_mod_coefficient_ideal": True,
        "tail_regular_mod_first_parameter": True,
        "socle_dimension": 1,
        "socle_rep": str(lifted.socle_rep),
        "lift": str(u),
    }
    memberships = []
    witness_e = None
    for e in range(1, e_max + 1):
        q = p ** e
        target = u.frobenius_pow(e) * f ** ((q - 1) // 2)
        hit = (R.defining + J.bracket_power(e).product(I)).contains(target)
        memberships.append({"e": e, "member": hit})
        if hit:
            witness_e = e
            break
    sub["memberships"] = memberships
    if witness_e is not None:
        monotone = None
        try:
            e2 = witness_e + 1
            q2 = p ** e2
            target2 = u.frobenius_pow(e2) * f ** ((q2 - 1) // 2)
            monotone = (R.defining + J.bracket_power(e2).product(I)).contains(target2)
        except Exception:
            monotone = None
        sub["monotonicity_verified"] = monotone
        return CriterionReport(
            verdict=DECISIVE_NOT_F_INJECTIVE,
            e_max=e_max,
            witness_e=witness_e,
            assumptions=(ASSUMPTION_CM, ASSUMPTION_CANONICAL),
            sub_results=sub,
        )
    return CriterionReport(
        verdict=NO_FAILURE_UP_TO,
        e_max=e_max,
        witness_e=None,
        assumptions=(ASSUMPTION_CM, ASSUMPTION_CANONICAL),
        sub_results=sub,
    )


def even_char_degeneracy_check(
    context: CoverContext, sop: Sequence[Polynomial]
) -> CriterionReport:
    """For p = 2 the cover is never F-injective; verify the mechanism: the
    lifted socle generator u satisfies u*I inside J*I and u inside J (hence
    u^2 inside J^[2] by the freshman's dream)."""
    if context.p != 2:
        raise OddCharacteristic("the degeneracy check only applies in characteristic 2")
    if not sop:
        raise InputAssumptionViolation("an empty system of parameters")
    R = context.quotient
    ring = context.ring
    if not R.is_regular_sequence(list(sop)):
        raise NotRegularSequence("the given parameters are not a regular sequence on R")
    lifted = socle_lift(context, sop[0], sop[1:])
    u = lifted.lift
    I = context.coefficient
    J = Ideal(ring, tuple(sop))

    kill = R.defining + J.product(I)
    kills_coefficient = all(kill.contains(u * g) for g in I.generators)
    in_parameters = (R.defining + J).contains(u)
    square_in_bracket = (R.defining + J.bracket_power(1)).contains(u * u)
    if not (kills_coefficient and in_parameters and square_in_bracket):
        raise InputAssumptionViolation(
            "the degeneracy memberships failed; some stated hypothesis is violated"
        )
    return CriterionReport(
        verdict=P2_DEGENERATE,
        e_max=None,
        witness_e=None,
        assumptions=(ASSUMPTION_CM, ASSUMPTION_CANONICAL),
        sub_results={
            "socle_rep": str(lifted.socle_rep),
            "lift": str(u),
            "lift_multiplies_coefficient_ideal_into_JI": kills_coefficient,
            "lift_in_parameter_ideal": in_parameters,
            "lift_square_in_bracket_power": square_in_bracket,
        },
    )


def fedder_f_pure(presentation: QuotientPresentation) -> bool:
    """Fedder's criterion: R = S/A is F-pure iff (A^[p] : A) is not contained
    in the bracket power of the maximal ideal."""
    A = presentation.defining
    if all(g.is_zero for g in A.generators):
        return True  # the ring is regular
    colon = A.bracket_power(1).colon(A)
    gb = presentation.maximal_ideal.bracket_power(1).groebner_basis()
    return any(not gb.normal_form(g).is_zero for g in colon.generators)


def _variable_generated(ideal: Ideal) -> list[str] | None:
    """The variable names when every generator is a scalar multiple of a
    distinct single variable, else None."""
    names = []
    for g in ideal.generators:
        if len(g._terms) != 1:
            return None
        (m,) = g._terms
        nz = [i for i, e in enumerate(m) if e]
        if len(nz) != 1 or m[nz[0]] != 1:
            return None
        names.append(g.ring.variables[nz[0]])
    if len(set(names)) != len(names) or not names:
        return None
    return names


def run_cover_pipeline(
    presentation: QuotientPresentation,
    coefficient: Ideal,
    twist: Polynomial,
    sop: Sequence[Polynomial],
    e_max: int,
) -> PipelineReport:
    """Chain every check behind the main structural result: F-purity of R and
    of R/I (Fedder), the socle transfer, the bounded cover criterion with the
    given twist, and the Frobenius-closure probe of the tail parameters in
    R/I.

    When everything is consistent the conclusion (R is FH-finite with
    antinilpotent top local cohomology) is reported at evidence level; it
    follows from the hypotheses by the structural theory and is never
    recomputed here.
    """
    if presentation.p == 2:
        raise EvenCharacteristic("the pipeline requires p > 2")
    ring = presentation.ring
    context = CoverContext(presentation, coefficient, twist)

    ambient_pure = fedder_f_pure(presentation)

    tail = list(sop[1:])
    drop = _variable_generated(coefficient)
    quotient_full = presentation.defining + coefficient
    route = "ambient-presentation"
    small_tail = tail
    if drop is not None and len(drop) < ring.nvars:
        tail_support = set().union(*(t.support_variables() for t in tail)) if tail else set()
        if not (tail_support & set(drop)):
            eliminated = quotient_full.eliminate(drop)
            keep = [v for v in ring.variables if v not in set(drop)]
            small_ring = PolyRing(ring.p, tuple(keep), GREVLEX)
            small_gens = tuple(g.mapped_to(small_ring) for g in eliminated.generators)
            quotient_pres = QuotientPresentation(small_ring, small_gens)
            small_tail = [t.mapped_to(small_ring) for t in tail]
            route = "eliminated-presentation"
        else:
            quotient_pres = QuotientPresentation(ring, quotient_full)
    else:
        quotient_pres = QuotientPresentation(ring, quotient_full)

    quotient_pure = fedder_f_pure(quotient_pres)

    criterion = cover_f_injectivity_criterion(context, sop, e_max)

    closure = quotient_pres.frobenius_closure_test(
        Ideal(quotient_pres.ring, tuple(small_tail)), e_max
    )

    decisive = criterion.verdict == DECISIVE_NOT_F_INJECTIVE or closure.decisive
    supported = (
        ambient_pure
        and quotient_pure
        and criterion.verdict == NO_FAILURE_UP_TO
        and closure.verdict == CLOSED_UP_TO
    )
    if decisive:
        status = "decisive-counterexample"
        statement = (
            "a decisive witness refutes F-injectivity of the cover or Frobenius "
            "closure of the tail parameters; the conclusion is withheld"
        )
    elif supported:
        status = "supported-by-evidence"
        statement = (
            "all hypotheses verified up to e_max; implied conclusion: the ring is "
            "FH-finite and its top local cohomology module is antinilpotent"
        )
    else:
        status = "hypotheses-not-met"
        statement = "a hypothesis failed its check; the conclusion is withheld"

    return PipelineReport(
        ambient_f_pure=ambient_pure,
        quotient_f_pure=quotient_pure,
        quotient_route=route,
        quotient_presentation=tuple(str(g) for g in quotient_pres.defining.generators),
        criterion=criterion,
        closure=closure,
        conclusion_status=status,
        conclusion=statement,
        assumptions=(ASSUMPTION_CM, ASSUMPTION_CANONICAL),
    )
