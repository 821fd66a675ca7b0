"""Cores of zero-dimensional monomial ideals, two ways, plus the colon
formulas for first coefficient ideals and adjoints.

The colon route computes bracket(J, t+1) : (I^{dt} + bracket(J, t+1)) for a
monomial reduction J and t at least the reduction number; it is valid in
characteristic 0 (or larger than the reduction number) and, independently of
characteristic, for equigenerated ideals.  The mono route samples a general
locally minimal reduction K = (d random combinations of the generators,
x_i^{d n_i}) and extracts its largest monomial subideal by linkage; its value
is characteristic dependent, and genericity is certified by exact agreement
of independently seeded runs rather than by a dense-open-set argument.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field

from . import newton
from .errors import GenericityError, HypothesisError, OracleDisagreementError
from .grobner import PolyIdeal, monomial_part
from .monomials import MonomialIdeal, pure_power_ideal
from .scalars import FieldSpec

REDUCTION_NUMBER_CAP = 64
_GENERIC_FIELD_MIN = 1 << 16  # want at least this many scalars to sample from


@dataclass(frozen=True)
class ReductionData:
    """A certified monomial reduction J of I with its reduction number."""

    ideal: MonomialIdeal
    r: int
    alpha: tuple  # exponent vectors of x_i^{d n_i}, the locally-minimal tail


@dataclass
class CoreReport:
    core: MonomialIdeal
    method: str  # "mono" | "colon"
    parameters: dict = dataclass_field(default_factory=dict)
    validity: dict = dataclass_field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return all(self.validity.values())


def _require_zero_dimensional(I: MonomialIdeal):
    if not I.is_zero_dimensional():
        raise HypothesisError("ideal is not zero-dimensional (needs a pure "
                              "power of every variable)")
    if I.is_unit():
        raise HypothesisError("unit ideal has no proper theory here")


def _power_cache(I: MonomialIdeal):
    from .monomials import unit_ideal
    powers = {0: unit_ideal(I.ring), 1: I}

    def power(k: int) -> MonomialIdeal:
        top = max(powers)
        while top < k:
            powers[top + 1] = powers[top].product(I)
            top += 1
        return powers[k]

    return power


def find_monomial_reduction(I: MonomialIdeal):
    """The pure-power candidate J = (x_1^{n_1}, .., x_d^{n_d}), certified.

    J is a reduction of I iff I lies in the integral closure of J, i.e. every
    generator exponent sits in NP(J).  Returns None when the candidate fails;
    no other monomial reduction is attempted.
    """
    _require_zero_dimensional(I)
    n = I.pure_power_exponents()
    d = I.ring.dimension
    J = pure_power_ideal(I.ring, n)
    for v in I.gens:
        if not newton.np_member(J, v):
            return None
    r = reduction_number(J, I)
    alpha = tuple(tuple(d * n[i] if j == i else 0 for j in range(d)) for i in range(d))
    return ReductionData(J, r, alpha)


def reduction_number(J: MonomialIdeal, I: MonomialIdeal, cap: int = REDUCTION_NUMBER_CAP) -> int:
    """Least r with I^{r+1} = J I^r; the caller certifies J is a reduction."""
    if not I.contains_ideal(J):
        raise HypothesisError("J is not contained in I")
    power = _power_cache(I)
    for r in range(cap + 1):
        if power(r + 1) == J.product(power(r)):
            return r
    raise HypothesisError(f"not a reduction (or r > cap {cap})")


def core_colon(I: MonomialIdeal, rd: ReductionData | None = None,
               t: int | None = None) -> CoreReport:
    """Core by the colon formula, with a stability re-check at t+1."""
    _require_zero_dimensional(I)
    if rd is None:
        rd = find_monomial_reduction(I)
        if rd is None:
            raise HypothesisError("no monomial reduction: the pure-power "
                                  "candidate is not a reduction of the ideal")
    if t is None:
        t = rd.r
    if t < rd.r:
        raise HypothesisError(f"t = {t} is below the reduction number {rd.r}")
    d = I.ring.dimension
    J = rd.ideal
    power = _power_cache(I)

    def value(tt):
        bracket = J.bracket_power(tt + 1)
        return bracket.colon(power(d * tt).sum(bracket))

    core = value(t)
    if value(t + 1) != core:
        raise OracleDisagreementError(
            "colon value not stable from t to t+1; reduction number suspect")
    char = I.ring.field.characteristic
    char_ok = char == 0 or char > rd.r
    equi = I.is_equigenerated()
    return CoreReport(
        core, "colon",
        parameters={"t": t, "r": rd.r, "characteristic": char},
        validity={"reduction_found": True,
                  "char_or_equigenerated": char_ok or equi})


def genericity_field(field: FieldSpec) -> FieldSpec:
    """The field actually sampled for general combinations: small prime
    fields are replaced by an extension with at least 2^16 elements."""
    if field.characteristic == 0 or field.order >= _GENERIC_FIELD_MIN:
        return field
    p = field.characteristic
    e = 1
    while p ** e < _GENERIC_FIELD_MIN:
        e += 1
    return FieldSpec(p, e)


def random_locally_minimal_reduction(I: MonomialIdeal, seed: int,
                                     field: FieldSpec | None = None) -> PolyIdeal:
    """K = (d random combinations of the minimal generators, x_i^{d n_i}).

    Coefficients are sampled nonzero from a deterministic generator, so a
    seed pins K exactly.  The pure-power tail keeps K m-primary even when the
    combinations alone are not.
    """
    _require_zero_dimensional(I)
    if field is None:
        field = genericity_field(I.ring.field)
    d = I.ring.dimension
    n = I.pure_power_exponents()
    rng = random.Random(seed)
    gens = []
    for _ in range(d):
        gens.append({g: field.sample_nonzero(rng) for g in I.gens})
    for i in range(d):
        exp = tuple(d * n[i] if j == i else 0 for j in range(d))
        gens.append({exp: field.one()})
    return PolyIdeal(I.ring, gens, field)


def core_mono(I: MonomialIdeal, seeds=(0, 1, 2)) -> CoreReport:
    """Core as the largest monomial subideal of a general locally minimal
    reduction, accepted on exact agreement of two independent seeds
    (2-of-3 on a first disagreement)."""
    _require_zero_dimensional(I)
    if len(seeds) < 2:
        raise ValueError("need at least two seeds")
    field = genericity_field(I.ring.field)
    d = I.ring.dimension
    n = I.pure_power_exponents()
    witness = MonomialIdeal(I.ring, [tuple(d * n[i] if j == i else 0 for j in range(d))
                                     for i in range(d)])

    def trial(seed):
        K = random_locally_minimal_reduction(I, seed, field)
        result = monomial_part(K, witness)
        if not I.contains_ideal(result):
            raise OracleDisagreementError(
                "monomial part of a reduction escaped the ideal; engine bug")
        return result

    first, second = trial(seeds[0]), trial(seeds[1])
    used = list(seeds[:2])
    if first == second:
        core = first
    else:
        third_seed = seeds[2] if len(seeds) > 2 else max(seeds[:2]) + 1
        third = trial(third_seed)
        used.append(third_seed)
        if third == first or third == second:
            core = third
        else:
            raise GenericityError("genericity failure - enlarge field or re-seed")
    return CoreReport(
        core, "mono",
        parameters={"seeds": tuple(used),
                    "characteristic": field.characteristic,
                    "field_degree": field.degree},
        validity={"seed_agreement": True})


def first_coefficient_ideal(I: MonomialIdeal, rd: ReductionData | None = None,
                            s: int | None = None) -> MonomialIdeal:
    """The largest ideal with the same first two Hilbert coefficients as I,
    as the colon J : (J^s : I^s), stable in s once s reaches the reduction
    number."""
    _require_zero_dimensional(I)
    if rd is None:
        rd = find_monomial_reduction(I)
        if rd is None:
            raise HypothesisError("no monomial reduction available")
    if s is None:
        s = rd.r
    if s < rd.r:
        raise HypothesisError(f"s = {s} is below the reduction number {rd.r}")
    J = rd.ideal
    powerI = _power_cache(I)
    powerJ = _power_cache(J)

    def value(ss):
        return J.colon(powerJ(ss).colon(powerI(ss)))

    out = value(s)
    if value(s + 1) != out:
        raise OracleDisagreementError("coefficient ideal not stable from s to s+1")
    if not out.contains_ideal(I):
        raise OracleDisagreementError("coefficient ideal does not contain the ideal")
    for g in out.gens:
        if not newton.np_member(I, g):
            raise OracleDisagreementError(
                "coefficient ideal escapes the integral closure")
    return out


def adjoint_colon(I: MonomialIdeal, rd: ReductionData | None = None,
                  t: int | None = None) -> MonomialIdeal:
    """adj(I^d) as bracket(J, t+1) : closure(I^{dt}), cross-checked against
    the Newton-polyhedron description; disagreement is an error."""
    _require_zero_dimensional(I)
    if rd is None:
        rd = find_monomial_reduction(I)
        if rd is None:
            raise HypothesisError("no monomial reduction available")
    d = I.ring.dimension
    t_min = max(rd.r, d - 1)
    if t is None:
        t = t_min
    if t < t_min:
        raise HypothesisError(f"t = {t} is below max(r, d-1) = {t_min}")
    via_colon = rd.ideal.bracket_power(t + 1).colon(newton.closure_of_power(I, d * t))
    via_polyhedron = newton.adjoint(I, d)
    if via_colon != via_polyhedron:
        raise OracleDisagreementError("adjoint oracle disagreement")
    return via_colon


def check_adj_hypothesis(I: MonomialIdeal, rd: ReductionData, t: int) -> bool:
    """closure(I^{dt}) inside I^{dt} + bracket(J, t+1)?  (The condition under
    which the core is the adjoint of I^d.)"""
    d = I.ring.dimension
    if t < max(rd.r, d - 1):
        raise HypothesisError(f"t = {t} is below max(r, d-1)")
    target = _power_cache(I)(d * t).sum(rd.ideal.bracket_power(t + 1))
    return target.contains_ideal(newton.closure_of_power(I, d * t))


def check_colon_lemma(I: MonomialIdeal, rd: ReductionData, t: int, i: int) -> bool:
    """Equality of the three colon forms: J^{t+i} : I^t, bracket : I^{dt+(d-1)(i-1)},
    and the bracket form with the bracket summand absorbed."""
    if i < 0:
        raise HypothesisError("i must be >= 0")
    if t < max(rd.r, 1):
        raise HypothesisError(f"t = {t} must be >= max(r, 1) = {max(rd.r, 1)}")
    d = I.ring.dimension
    J = rd.ideal
    powerI = _power_cache(I)
    lhs = _power_cache(J)(t + i).colon(powerI(t))
    bracket = J.bracket_power(t + i)
    e = d * t + (d - 1) * (i - 1)
    mid = bracket.colon(powerI(e))
    rhs = bracket.colon(powerI(e).sum(bracket))
    return lhs == mid == rhs


def check_comes_out(I: MonomialIdeal, rd: ReductionData, s: int, i_max: int) -> bool:
    """J^{s+i} : I^s = J^i (J^s : I^s) for 0 <= i <= i_max."""
    if s < rd.r:
        raise HypothesisError(f"s = {s} is below the reduction number {rd.r}")
    J = rd.ideal
    powerJ = _power_cache(J)
    Is = _power_cache(I)(s)
    base = powerJ(s).colon(Is)
    for i in range(i_max + 1):
        if powerJ(s + i).colon(Is) != powerJ(i).product(base):
            return False
    return True


def containment_relation(A: MonomialIdeal, B: MonomialIdeal) -> str:
    """How A sits relative to B: equal / proper-superset / proper-subset /
    incomparable."""
    if A == B:
        return "equal"
    a_in_b, b_in_a = B.contains_ideal(A), A.contains_ideal(B)
    if b_in_a:
        return "proper-superset"
    if a_in_b:
        return "proper-subset"
    return "incomparable"
