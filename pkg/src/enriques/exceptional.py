"""Curves that could make a Seshadri constant drop below phi.

An irreducible curve C with a point of multiplicity m and C.H/m < phi(H) is
rational with C^2 = m(m-1) - 2. For C^2 > 0 one has phi(C) = l(C) = m - 1 and
C is numerically one of four templates (h >= 1):

    type_i        E9 + E910                      C^2 = 4,              phi = 2
    type_ii       2(E9 + E10 + E910)             C^2 = 40,             phi = 6
    type_iii(h)   h(E9 + E910) + E10             C^2 = 4h^2 + 6h,      phi = 2h + 1
    type_iv(h)    (h + 1)E910 + hE9 + E10        C^2 = 4h^2 + 10h + 4, phi = 2h + 2

type_ii and type_iv(2) share (C^2, phi, l) = (40, 6, 6); only type_ii is
2-divisible, which is how the classifier separates them.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .certificates import step, validate_steps
from .errors import BadParameter, NotEffective, UnsupportedModel
from .invariants import DEFAULT_LENGTH_CAP, length, phi
from .lattice import (
    E1, E2, E9, E10, E910, NumClass, SurfaceModel, divisibility, is_effective,
    is_two_divisible_num, pair,
)
from .limit_surface import l0_class, multiplicity_obstruction, pair_limit


class Tag(str, enum.Enum):
    MINUS_TWO = "minus_two"
    HALF_PENCIL = "half_pencil"
    TYPE_I = "type_i"
    TYPE_II = "type_ii"
    TYPE_III = "type_iii"
    TYPE_IV = "type_iv"
    NONE = "none"


@dataclass(frozen=True)
class ExceptionalType:
    tag: Tag
    h: int | None = None
    m: int | None = None

    def to_json(self):
        return {"tag": self.tag.value, "h": self.h, "m": self.m}

    def __str__(self):
        if self.h is not None:
            return f"{self.tag.value}(h={self.h})"
        return self.tag.value


def closed_forms(tag, h=None):
    """(C^2, phi, length) predicted for a template."""
    tag = Tag(tag)
    if tag is Tag.TYPE_I:
        return 4, 2, 2
    if tag is Tag.TYPE_II:
        return 40, 6, 6
    if tag is Tag.TYPE_III:
        return 4 * h * h + 6 * h, 2 * h + 1, 2 * h + 1
    if tag is Tag.TYPE_IV:
        return 4 * h * h + 10 * h + 4, 2 * h + 2, 2 * h + 2
    raise BadParameter(f"no closed form for {tag.value}")


def construct_exceptional(tag, h=None):
    tag = Tag(tag)
    if tag is Tag.TYPE_I:
        return E9 + E910
    if tag is Tag.TYPE_II:
        return (E9 + E10 + E910) * 2
    if tag in (Tag.TYPE_III, Tag.TYPE_IV):
        if h is None or int(h) < 1:
            raise BadParameter(f"{tag.value} needs h >= 1", h=h)
        h = int(h)
        if tag is Tag.TYPE_III:
            return (E9 + E910) * h + E10
        return E910 * (h + 1) + E9 * h + E10
    raise BadParameter(f"cannot construct a template for {tag.value}")


def classify_exceptional(C, cap=None):
    """Match C against the templates by (C^2, phi, length) and 2-divisibility."""
    sq = pair(C, C)
    if sq == -2:
        return ExceptionalType(Tag.MINUS_TWO, m=1)
    if not is_effective(C):
        raise NotEffective("C is not effective", coords=list(C.coords))
    if sq == 0:
        return ExceptionalType(Tag.HALF_PENCIL, m=2)
    p = phi(C)
    if sq != p * (p + 1) - 2:
        return ExceptionalType(Tag.NONE)
    cap = max(sq, DEFAULT_LENGTH_CAP) if cap is None else cap
    if length(C, cap=cap) != p:
        return ExceptionalType(Tag.NONE)
    m = p + 1
    if p == 2:
        return ExceptionalType(Tag.TYPE_I, m=m)
    if p == 6 and is_two_divisible_num(C):
        return ExceptionalType(Tag.TYPE_II, m=m)
    if p % 2:
        return ExceptionalType(Tag.TYPE_III, h=(p - 1) // 2, m=m)
    return ExceptionalType(Tag.TYPE_IV, h=(p - 2) // 2, m=m)


def rational_class_admissible(C, model=SurfaceModel.VERY_GENERAL):
    """Necessary conditions for C to carry an irreducible rational curve on a very general surface."""
    model = SurfaceModel.parse(model)
    if model is not SurfaceModel.VERY_GENERAL:
        raise UnsupportedModel("admissibility is only decided on a very general surface", model=model.value)
    if not is_effective(C):
        raise NotEffective("C is not effective", coords=list(C.coords))
    if not is_two_divisible_num(C):
        return False
    if pair(C, C) == 0 and divisibility(C) == 1:
        return False
    return True


INFINITY = None


@dataclass(frozen=True)
class PointBound:
    value: Fraction
    generic_value: Fraction | None = None
    note: str | None = None

    def to_json(self):
        return {
            "value": str(self.value),
            "generic_value": None if self.generic_value is None else str(self.generic_value),
            "note": self.note,
        }


def seshadri_point_lower_bound(phiH, d=INFINITY):
    """min(d, phi/2); ``d=None`` means no (-2)-curve passes through the point."""
    if phiH < 1:
        raise BadParameter("phi must be positive", phi=phiH)
    half = Fraction(phiH, 2)
    if d is None:
        return PointBound(half, Fraction(phiH),
                          "outside countably many points the bound improves to phi(H)")
    return PointBound(min(Fraction(d), half))


class Verdict(str, enum.Enum):
    NO_GAP = "no_gap"
    CONSTRAINED = "constrained"
    IMPOSSIBLE = "impossible"


@dataclass(frozen=True)
class GapCertificate:
    H: NumClass
    C: NumClass | None
    m: int | None
    verdict: Verdict
    steps: tuple
    exceptional_type: ExceptionalType | None = None
    obstruction: object = field(default=None, compare=False)

    def validate(self):
        ok = validate_steps(self.steps)
        if self.obstruction is not None:
            ok = ok and self.obstruction.validate() and self.obstruction.obstructed
        return ok

    def to_json(self):
        return {
            "H": list(self.H.coords),
            "C": None if self.C is None else list(self.C.coords),
            "m": self.m,
            "verdict": self.verdict.value,
            "type": None if self.exceptional_type is None else self.exceptional_type.to_json(),
            "steps": [s.to_json() for s in self.steps],
        }


def gap_check(H, C, m):
    """Test one candidate (C, m) against phi(H)."""
    p = phi(H)
    ch = pair(C, H)
    steps = [step(f"gap means C.H/m < phi(H), i.e. {ch} < {m}*{p}", "definition-of-seshadri-constant",
                  "lt", ch, m * p, expected=ch < m * p)]
    if ch >= m * p:
        return GapCertificate(H, C, m, Verdict.NO_GAP, tuple(steps))
    sq = pair(C, C)
    target = m * (m - 1) - 2
    steps.append(step(f"a submaximal curve has C^2 = m(m-1) - 2 = {target}",
                      "submaximal-curves-are-rational", "eq", sq, target, expected=sq == target))
    if sq != target:
        return GapCertificate(H, C, m, Verdict.IMPOSSIBLE, tuple(steps))
    if sq <= 0:
        t = classify_exceptional(C)
        return GapCertificate(H, C, m, Verdict.CONSTRAINED, tuple(steps), t)
    t = classify_exceptional(C, cap=max(sq, DEFAULT_LENGTH_CAP))
    ok = t.tag is not Tag.NONE and t.m == m
    steps.append(step(f"C^2 > 0 forces phi(C) = l(C) = m - 1 and a template; found {t}",
                      "submaximal-curve-templates", "is", ok, True, expected=ok))
    return GapCertificate(H, C, m, Verdict.CONSTRAINED if ok else Verdict.IMPOSSIBLE, tuple(steps), t)


def verify_eps_equals_phi(H):
    """Replay the argument that eps(H) = phi(H) on a very general surface, for this H."""
    sq = pair(H, H)
    p = phi(H)
    steps = []
    cite = "definition-of-phi"
    steps.append(step(f"phi(H) = {p} with H^2 = {sq}; an isotropic E computing phi gives eps(H) <= {p}",
                      cite, "le", p * p, sq))
    steps.append(step("suppose eps(H) < phi(H): some irreducible C with a point of multiplicity m has "
                      "C.H/m < phi(H), C rational and C^2 = m(m-1) - 2 >= -2",
                      "submaximal-curves-are-rational", "eq", 1 * 0 - 2, -2))
    minus_two = E1 - E2
    steps.append(step("m = 1 needs a (-2)-curve; a very general surface has none",
                      "no-minus-two-curves-on-general-surfaces", "is",
                      is_effective(minus_two, SurfaceModel.VERY_GENERAL), False))
    steps.append(step(f"m = 2: C^2 = 0, and C is not primitive since primitive isotropic divisors are smooth "
                      f"elliptic; so C = tE with t >= 2 and C.H/2 >= phi(H) = {p}, no gap",
                      "primitive-isotropic-divisors-are-smooth", "ge", Fraction(2 * p, 2), p))
    # m >= 3: only 2-divisible templates survive
    for tag, hs in ((Tag.TYPE_I, (None,)), (Tag.TYPE_III, range(1, 4)), (Tag.TYPE_IV, range(1, 4))):
        reps = [construct_exceptional(tag, h) for h in hs]
        e10_or_e9 = [c.coords[8] if tag is not Tag.TYPE_I else c.coords[7] for c in reps]
        steps.append(step(f"{tag.value} has a coefficient equal to 1 in every member, so it is not 2-divisible",
                          "rational-curves-are-2-divisible", "eq", sorted(set(e10_or_e9)), [1]))
    C = construct_exceptional(Tag.TYPE_II)
    steps.append(step("type_ii = 2(E9 + E10 + E910) is 2-divisible, the only surviving template",
                      "rational-curves-are-2-divisible", "is", is_two_divisible_num(C), True))
    pc = phi(C)
    lc = length(C, cap=DEFAULT_LENGTH_CAP)
    m = pc + 1
    steps.append(step(f"phi(C) = l(C) = {pc}, hence m = {m} and C^2 = m(m-1) - 2",
                      "submaximal-curve-templates", "eq", pair(C, C), m * (m - 1) - 2))
    steps.append(step("length of the template agrees with phi", "submaximal-curve-templates", "eq", lc, pc))
    L0 = l0_class()
    steps.append(step("the limit class L^0 = 2(E1^0 + E2^0 + E3^0) has the same square as C",
                      "isotropic-cartier-pairs", "eq", pair_limit(L0, L0), pair(C, C)))
    obstruction = multiplicity_obstruction(L0, m)
    steps.extend(obstruction.steps)
    verdict = Verdict.IMPOSSIBLE if obstruction.obstructed else Verdict.CONSTRAINED
    return GapCertificate(H, C, m, verdict, tuple(steps), ExceptionalType(Tag.TYPE_II, m=m), obstruction)
