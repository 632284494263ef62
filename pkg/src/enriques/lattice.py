"""The numerical lattice Num of an Enriques surface in a fixed isotropic basis.

Basis order is ``(E1, ..., E7, E9, E10, E910)``; ``E910`` is the isotropic
class ``(E1 + ... + E10)/3 - E9 - E10``. All basis vectors are isotropic,
``Ei.Ej = 1`` among the first nine, and ``E910`` pairs to 1 with ``E1..E7``
and to 2 with ``E9, E10``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from . import linalg
from .errors import UnsupportedModel

RANK = 10
SLOT_NAMES = ("E1", "E2", "E3", "E4", "E5", "E6", "E7", "E9", "E10", "E910")
E910_SLOT = 9


def _build_gram():
    g = [[0] * RANK for _ in range(RANK)]
    for i in range(9):
        for j in range(9):
            if i != j:
                g[i][j] = 1
    for i in range(9):
        g[i][E910_SLOT] = g[E910_SLOT][i] = 2 if i in (7, 8) else 1
    return tuple(tuple(row) for row in g)


GRAM = _build_gram()


class SurfaceModel(str, enum.Enum):
    """How general the surface is assumed to be.

    ``very_general`` implies ``general`` implies ``arbitrary``. The first two
    carry no (-2)-curves.
    """

    VERY_GENERAL = "very_general"
    GENERAL = "general"
    ARBITRARY = "arbitrary"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).replace("-", "_"))
        except ValueError:
            raise UnsupportedModel(f"unknown surface model {value!r}", model=str(value)) from None


@dataclass(frozen=True)
class NumClass:
    coords: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.coords)
        if len(c) != RANK:
            raise ValueError(f"NumClass needs {RANK} coordinates, got {len(c)}")
        object.__setattr__(self, "coords", c)

    @classmethod
    def basis(cls, slot):
        return cls(tuple(int(i == slot) for i in range(RANK)))

    @classmethod
    def zero(cls):
        return cls((0,) * RANK)

    def __add__(self, other):
        return NumClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return NumClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return NumClass(tuple(-a for a in self.coords))

    def __mul__(self, k):
        return NumClass(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __iter__(self):
        return iter(self.coords)

    def __lt__(self, other):
        return self.coords < other.coords

    def dot(self, other):
        return pair(self, other)

    @property
    def square(self):
        return pair(self, self)

    def is_zero(self):
        return not any(self.coords)

    def to_json(self):
        return {"coords": list(self.coords)}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(obj["coords"]))

    def __str__(self):
        terms = []
        for name, c in zip(SLOT_NAMES, self.coords):
            if c == 0:
                continue
            terms.append(name if c == 1 else f"-{name}" if c == -1 else f"{c}*{name}")
        return "+".join(terms).replace("+-", "-") or "0"


@dataclass(frozen=True)
class PicClass:
    """A numerical class plus the coefficient of K_S (a bit)."""

    num: NumClass
    torsion: int = 0

    def __post_init__(self):
        if not isinstance(self.num, NumClass):
            object.__setattr__(self, "num", NumClass(self.num))
        object.__setattr__(self, "torsion", int(self.torsion) % 2)

    @classmethod
    def canonical(cls):
        return cls(NumClass.zero(), 1)

    def __add__(self, other):
        return PicClass(self.num + other.num, self.torsion ^ other.torsion)

    def __sub__(self, other):
        return PicClass(self.num - other.num, self.torsion ^ other.torsion)

    def __mul__(self, k):
        return PicClass(self.num * k, (self.torsion * k) % 2)

    __rmul__ = __mul__

    def to_json(self):
        return {"coords": list(self.num.coords), "torsion": self.torsion}

    @classmethod
    def from_json(cls, obj):
        return cls(NumClass(tuple(obj["coords"])), obj.get("torsion", 0))


E = [NumClass.basis(i) for i in range(9)]
E1, E2, E3, E4, E5, E6, E7, E9, E10 = E
E910 = NumClass.basis(E910_SLOT)
E8_CLASS = NumClass((-1, -1, -1, -1, -1, -1, -1, 2, 2, 3))
AMPLE_REF = NumClass((1, 1, 1, 0, 0, 0, 0, 0, 0, 0))


def pair(u, v):
    cu = u.coords if isinstance(u, NumClass) else u
    cv = v.coords if isinstance(v, NumClass) else v
    total = 0
    for i, a in enumerate(cu):
        if a:
            row = GRAM[i]
            total += a * sum(g * b for g, b in zip(row, cv))
    return total


def gram_image(v):
    """Coordinates of the functional ``x -> x.v`` (i.e. ``G v``)."""
    c = v.coords if isinstance(v, NumClass) else v
    return tuple(sum(g * b for g, b in zip(row, c)) for row in GRAM)


@dataclass(frozen=True)
class GramReport:
    gram: tuple
    determinant: int
    even: bool
    signature: tuple
    smith: tuple

    def to_json(self):
        return {
            "gram": [list(r) for r in self.gram],
            "determinant": self.determinant,
            "even": self.even,
            "signature": list(self.signature),
            "smith": list(self.smith),
        }


def change_of_basis_certificate():
    """Certify that the fixed basis spans an even unimodular lattice of signature (1, 9)."""
    det = linalg.det_bareiss(GRAM)
    pos, neg, zero = linalg.inertia(GRAM)
    report = GramReport(
        gram=GRAM,
        determinant=det,
        even=all(GRAM[i][i] % 2 == 0 for i in range(RANK)),
        signature=(pos, neg),
        smith=tuple(linalg.smith_invariants(GRAM)),
    )
    assert det == -1, det
    assert report.even
    assert (pos, neg, zero) == (1, 9, 0)
    return report


def divisibility(v):
    return linalg.vec_gcd(v.coords)


def is_primitive(v):
    return divisibility(v) == 1


def is_two_divisible_num(v):
    return all(c % 2 == 0 for c in v.coords)


def epsilon_invariant(L):
    """1 iff L + K_S is 2-divisible in Pic."""
    return int(is_two_divisible_num(L.num) and L.torsion == 1)


def is_effective(v, model=SurfaceModel.GENERAL):
    """Effectivity on a surface without (-2)-curves.

    Orientation-relative: the positive half of the cone is the one containing
    ``AMPLE_REF``.
    """
    model = SurfaceModel.parse(model)
    if model is SurfaceModel.ARBITRARY:
        raise UnsupportedModel("effectivity of classes depends on the surface for model=arbitrary",
                               model=model.value)
    if v.is_zero():
        return False
    return pair(v, v) >= 0 and pair(v, AMPLE_REF) > 0
