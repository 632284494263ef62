"""Numerical intersection theory on the degenerate surface X = R u_T P.

R is an elliptic ruled surface with fiber class f and a section class C0
(C0^2 = k, a model parameter); P is the plane blown up in nine points with
basis (l, e1..e9). T is the gluing curve: T_R = 2 C0 - k f on R and
T_P = 3 l - sum e_i on P. A Cartier class is a pair (r, p) whose degrees on T
agree. The class xi = (T_R, -T_P) lies in the radical of the pairing on
Cartier classes; twisting by xi relates the different limit linear systems of
one polarization.

Only numerical data are modeled. The two Cartier lifts of an isotropic pair
that differ by K_X are numerically identical here.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .certificates import ObstructionCertificate, step
from .errors import NotCartier, PipelineInapplicable, UnsupportedMultiplicity

DEFAULT_K = 1
N_POINTS = 9


@dataclass(frozen=True)
class RClass:
    c0: int
    f: int
    k: int = DEFAULT_K

    def __add__(self, o):
        return RClass(self.c0 + o.c0, self.f + o.f, self.k)

    def __sub__(self, o):
        return RClass(self.c0 - o.c0, self.f - o.f, self.k)

    def __mul__(self, a):
        return RClass(a * self.c0, a * self.f, self.k)

    __rmul__ = __mul__

    def dot(self, o):
        return self.c0 * o.c0 * self.k + self.c0 * o.f + self.f * o.c0

    @property
    def fiber_degree(self):
        return self.c0  # C0.f = 1, f.f = 0

    def to_json(self):
        return {"c0": self.c0, "f": self.f, "k": self.k}


@dataclass(frozen=True)
class PClass:
    """Coefficients of (l, e1, ..., e9); the class is sum coords[i] * basis[i]."""

    coords: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.coords)
        if len(c) != N_POINTS + 1:
            raise ValueError("PClass needs 10 coordinates")
        object.__setattr__(self, "coords", c)

    @classmethod
    def of(cls, d, minus=()):
        """d*l - sum_{i in minus} e_i (indices 1..9, repeats add up)."""
        c = [d] + [0] * N_POINTS
        for i in minus:
            c[i] -= 1
        return cls(tuple(c))

    def __add__(self, o):
        return PClass(tuple(a + b for a, b in zip(self.coords, o.coords)))

    def __sub__(self, o):
        return PClass(tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __mul__(self, a):
        return PClass(tuple(a * x for x in self.coords))

    __rmul__ = __mul__

    def dot(self, o):
        d = self.coords[0] * o.coords[0]
        return d - sum(a * b for a, b in zip(self.coords[1:], o.coords[1:]))

    @property
    def degree(self):
        return self.coords[0]

    @property
    def multiplicities(self):
        return tuple(-x for x in self.coords[1:])

    def to_json(self):
        return {"coords": list(self.coords)}


def fiber(k=DEFAULT_K):
    return RClass(0, 1, k)


def section(k=DEFAULT_K):
    return RClass(1, 0, k)


def t_r(k=DEFAULT_K):
    return RClass(2, -k, k)


def canonical_r(k=DEFAULT_K):
    return RClass(-2, k, k)


T_P = PClass.of(3, range(1, N_POINTS + 1))
K_P = PClass.of(-3) + PClass((0,) + (1,) * N_POINTS)
LINE = PClass.of(1)


@dataclass(frozen=True)
class LimitClass:
    r: RClass
    p: PClass
    torsion_marker: int | None = field(default=None, compare=False)

    @property
    def degree_on_t(self):
        return self.r.dot(t_r(self.r.k)), self.p.dot(T_P)

    def __add__(self, o):
        return LimitClass(self.r + o.r, self.p + o.p)

    def __sub__(self, o):
        return LimitClass(self.r - o.r, self.p - o.p)

    def __mul__(self, a):
        return LimitClass(self.r * a, self.p * a)

    __rmul__ = __mul__

    def to_json(self):
        out = {"r": self.r.to_json(), "p": self.p.to_json()}
        if self.torsion_marker is not None:
            out["torsion_marker"] = self.torsion_marker
        return out

    @classmethod
    def from_json(cls, obj):
        r = obj["r"]
        return make_limit_class(RClass(r["c0"], r["f"], r.get("k", DEFAULT_K)), PClass(obj["p"]["coords"]))


def make_limit_class(r, p):
    dr = r.dot(t_r(r.k))
    dp = p.dot(T_P)
    if dr != dp:
        raise NotCartier(f"degrees on T differ: {dr} on R, {dp} on P", degree_r=dr, degree_p=dp)
    return LimitClass(r, p)


def pair_limit(a, b):
    return a.r.dot(b.r) + a.p.dot(b.p)


def xi(k=DEFAULT_K):
    return LimitClass(t_r(k), T_P * -1)


def twist(L, a):
    """L + a*xi: (r + a T_R, p - a T_P)."""
    return make_limit_class(L.r + t_r(L.r.k) * a, L.p - T_P * a)


def parity_obstruction(L):
    """True when every curve of every limit system dominates the base elliptic curve.

    Happens iff the fiber degree on R is odd; the parity is twist invariant
    since T_R.f = 2.
    """
    return L.r.fiber_degree % 2 == 1


def isotropic_pair(A, k=DEFAULT_K):
    """The numerical class (f, A) for a pencil |A| on P with A^2 = 0, A.T = 2."""
    if A.dot(A) != 0 or A.dot(T_P) != 2:
        raise PipelineInapplicable("A must satisfy A^2 = 0 and A.T = 2", square=A.dot(A), degree=A.dot(T_P))
    return make_limit_class(fiber(k), A)


def line_pencil(i):
    return PClass.of(1, (i,))


def conic_pencil(i, j, k, m):
    return PClass.of(2, (i, j, k, m))


def e0_classes(k=DEFAULT_K):
    """E1^0, E2^0, E3^0 built from pencils |l - e1|, |l - e2|, |2l - e3 - e4 - e5 - e6|."""
    return (
        isotropic_pair(line_pencil(1), k),
        isotropic_pair(line_pencil(2), k),
        isotropic_pair(conic_pencil(3, 4, 5, 6), k),
    )


def l0_class(k=DEFAULT_K):
    e1, e2, e3 = e0_classes(k)
    return (e1 + e2 + e3) * 2


def effective_on_P_general_points(d, mult):
    """Effectivity of d*l - sum mult_i e_i for general points with simple multiplicities."""
    mult = tuple(int(m) for m in mult)
    if any(m >= 2 for m in mult):
        raise UnsupportedMultiplicity("only multiplicities 0 and 1 are supported", mult=list(mult))
    if any(m < 0 for m in mult):
        raise UnsupportedMultiplicity("negative multiplicities are not point conditions", mult=list(mult))
    if d < 0:
        return False
    return d * (d + 3) // 2 - sum(mult) >= 0


def _normalize_twist(L):
    """Find a with L = L_base + a*xi and L_base.r a multiple of f; returns (a, base)."""
    c0 = L.r.c0
    if c0 % 2:
        raise PipelineInapplicable("odd fiber degree: no twist reaches a fiber class", fiber_degree=c0)
    a = c0 // 2
    return a, twist(L, -a)


def multiplicity_obstruction(L, m, general=False):
    """Replay the argument excluding a point of multiplicity m on limits of curves in |L|.

    The shipped pipeline takes L equal to L^0 = (6f, 8l - 2(e1 + ... + e6)) up
    to twist; m = 7 is the case that gets obstructed. With ``general=True`` any twist of (n f, p) whose
    P-side has only simple base points is accepted.
    """
    if not isinstance(L, LimitClass):
        raise PipelineInapplicable("expected a LimitClass")
    k = L.r.k
    a, base = _normalize_twist(L)
    if not general:
        if base != l0_class(k):
            raise PipelineInapplicable("pipeline is shipped for L^0 up to twist only; pass general=True",
                                       m=m, twist=a)
    n_fibers = base.r.f
    p = base.p
    steps = []

    # (1) rational components on R cannot dominate E: fiber degree 0 fixes the twist
    fdeg = L.r.fiber_degree - 2 * a
    steps.append(step(
        f"limit systems of L are the twists L + a*xi; C_R.f = {L.r.fiber_degree} + 2a must vanish, so a = {a} "
        "normalizes to the untwisted system",
        "rational-components-have-fiber-degree-zero", "eq", fdeg, 0))

    # (2) on T: each fiber meets T in f.T_R = 2 distinct points
    ft = fiber(k).dot(t_r(k))
    steps.append(step(
        f"C_R is {n_fibers} fibers, each meeting T in {ft} distinct points, so C_R meets T with "
        f"multiplicity at most {n_fibers} at any point; a limit point on T needs multiplicity >= {m}",
        "limit-singular-point-dichotomy", "lt", n_fibers, m))

    # (3) off T on R: at most n_fibers fibers through a point
    steps.append(step(
        f"off T, C_R (a union of {n_fibers} smooth fibers) has multiplicity at most {n_fibers} < {m}",
        "fibers-are-smooth-and-disjoint", "lt", n_fibers, m))

    # (4) pencil trick on P
    mults = p.multiplicities
    pencils = [i for i in range(1, N_POINTS + 1) if mults[i - 1] > 0]
    worst = max((p.dot(line_pencil(i)) for i in pencils), default=m)
    steps.append(step(
        f"for each of the {len(pencils)} pencils |l - e_i| through base points, C_P.(l - e_i) <= {worst} < {m}, "
        "so the member through the point of multiplicity >= m is a component of C_P",
        "pencil-member-through-high-multiplicity-point", "lt", worst, m))

    # (5) the residual class must be effective for general points
    residual = p
    for i in pencils:
        residual = residual - line_pencil(i)
    res_mult = residual.multiplicities
    try:
        eff = effective_on_P_general_points(residual.degree, res_mult)
        residual_claim = (
            f"residual C_P - sum(l - e_i) = {residual.degree}l - "
            f"sum of {sum(res_mult)} exceptional curves is not effective for general points")
    except UnsupportedMultiplicity:
        eff = True
        residual_claim = "residual class has non-simple base points; effectivity undecided"
    steps.append(step(residual_claim, "general-points-impose-independent-conditions", "is", eff, False))

    failed = tuple(i + 1 for i, s in enumerate(steps) if not s.check.holds)
    steps = tuple(s.__class__(s.claim, s.citation, s.check, s.check.holds) for s in steps)
    return ObstructionCertificate(m=m, twist=a, obstructed=not failed, steps=steps, failed=failed)


def cartier_generators(k=DEFAULT_K):
    """A Z-basis (11 vectors) of the Cartier sublattice of Num R + Num P, coordinates (c0, f, l, e1..e9)."""
    functional = [k, 2] + [-x for x in _t_p_pairing_row()]
    return linalg.integer_kernel(functional)


def _t_p_pairing_row():
    # x . T_P for x = basis vector of P
    return [PClass(tuple(int(i == j) for j in range(N_POINTS + 1))).dot(T_P) for i in range(N_POINTS + 1)]


def _split(v, k):
    return LimitClass(RClass(v[0], v[1], k), PClass(tuple(v[2:])))


@dataclass(frozen=True)
class QuotientInvariants:
    rank: int
    determinant: int
    even: bool
    signature: tuple
    xi_in_radical: bool
    xi_primitive: bool

    def to_json(self):
        return {
            "rank": self.rank,
            "determinant": self.determinant,
            "even": self.even,
            "signature": list(self.signature),
            "xi_in_radical": self.xi_in_radical,
            "xi_primitive": self.xi_primitive,
        }


def quotient_invariants(k=DEFAULT_K):
    """Invariants of (Cartier classes)/Z*xi; should match the Enriques lattice."""
    gens = [_split(v, k) for v in cartier_generators(k)]
    for g in gens:
        make_limit_class(g.r, g.p)
    gram = [[pair_limit(u, v) for v in gens] for u in gens]
    x = xi(k)
    in_radical = all(pair_limit(x, g) == 0 for g in gens)
    # coordinates of xi in the generator basis
    basis_cols = [[c for c in (g.r.c0, g.r.f) + g.p.coords] for g in gens]
    target = [x.r.c0, x.r.f] + list(x.p.coords)
    sol = _solve_integer(basis_cols, target)
    primitive = sol is not None and linalg.vec_gcd(sol) == 1
    pos, neg, zero = linalg.inertia(gram)
    snf = [v for v in linalg.smith_invariants(gram) if v]
    rank = len(snf)
    det = (-1) ** neg
    for v in snf:
        det *= v
    out = QuotientInvariants(
        rank=rank,
        determinant=det,
        even=all(gram[i][i] % 2 == 0 for i in range(len(gram))),
        signature=(pos, neg),
        xi_in_radical=in_radical,
        xi_primitive=primitive,
    )
    return out


def _solve_integer(cols, target):
    """Solve sum x_i cols[i] = target over Q and return x if integral."""
    from fractions import Fraction

    n = len(cols)
    rows = len(target)
    # least-squares free: pick n independent rows via normal equations
    a = [[sum(cols[i][r] * cols[j][r] for r in range(rows)) for j in range(n)] for i in range(n)]
    b = [sum(cols[i][r] * target[r] for r in range(rows)) for i in range(n)]
    inv = linalg.inverse(a)
    x = [sum(inv[i][j] * b[j] for j in range(n)) for i in range(n)]
    if any(Fraction(v).denominator != 1 for v in x):
        return None
    x = [int(v) for v in x]
    back = [sum(x[i] * cols[i][r] for i in range(n)) for r in range(rows)]
    return x if back == list(target) else None


def canonical_check(k=DEFAULT_K):
    """(K_R + T_R, K_P + T_P) is numerically trivial."""
    r = canonical_r(k) + t_r(k)
    p = K_P + T_P
    return r == RClass(0, 0, k) and p == PClass((0,) * (N_POINTS + 1))
