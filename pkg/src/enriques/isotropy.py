"""Isotropic vectors on the affine slices ``{x : x.H = c}``.

For ``n = H.H > 0`` the form ``N(x) = 2 (x.H)^2 - n x.x`` is positive
definite and integral (writing ``x = tH + z`` with ``z`` orthogonal to ``H``
gives ``N = n^2 t^2 - n z.z``). An isotropic ``x`` with ``x.H = c`` has
``N(x) = 2 c^2``, so the slice is contained in a bounded ellipsoid. We
enumerate that ellipsoid Fincke-Pohst style from an exact rational LDL^T of
``N`` and re-verify every hit with integer pairings.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from . import linalg
from .errors import BadParameter, InternalBoundViolation, NotPositive
from .lattice import AMPLE_REF, GRAM, RANK, NumClass, divisibility, gram_image, pair


@dataclass(frozen=True)
class SliceQuery:
    H: NumClass
    c: int
    primitive_only: bool = False
    effective_only: bool = True


@dataclass(frozen=True)
class SliceResult:
    solutions: tuple
    certificate: dict = field(default_factory=dict, compare=False)

    def __iter__(self):
        return iter(self.solutions)

    def __len__(self):
        return len(self.solutions)

    def __contains__(self, item):
        return item in self.solutions


def definite_form(H):
    """Integer Gram matrix of ``N(x) = 2 (x.H)^2 - (H.H) x.x``."""
    n = pair(H, H)
    w = gram_image(H)
    return [[2 * w[i] * w[j] - n * GRAM[i][j] for j in range(RANK)] for i in range(RANK)]


@lru_cache(maxsize=4096)
def _plan(hcoords):
    H = NumClass(hcoords)
    w = gram_image(H)
    # Solve the innermost variable from the linear constraint; prefer a small |w_i|.
    pivot = min((i for i in range(RANK) if w[i]), key=lambda i: (abs(w[i]), i))
    order = [pivot] + [i for i in range(RANK) if i != pivot]
    n_form = definite_form(H)
    permuted = [[n_form[i][j] for j in order] for i in order]
    lower, diag = linalg.ldl(permuted)
    # mu[j] lists (i, L_ij) for i > j
    mu = [[(i, lower[i][j]) for i in range(j + 1, RANK) if lower[i][j]] for j in range(RANK)]
    wp = [w[i] for i in order]
    return order, wp, diag, mu


def _interval(center, budget, d):
    """Integers t with d (t - center)^2 <= budget, as (lo, hi)."""
    if budget < 0:
        return 1, 0
    a, b = center.numerator, center.denominator
    q = budget * b * b / d
    s = isqrt(q.numerator // q.denominator)
    return -((s - a) // b), (a + s) // b


def iter_slice(H, c):
    """Yield every integer x (unsorted) with x.x = 0 and x.H = c, x != 0."""
    order, w, diag, mu = _plan(H.coords)
    bound = Fraction(2 * c * c)
    x = [0] * RANK

    def rec(j, budget):
        center = -sum((lij * x[i] for i, lij in mu[j]), Fraction(0))
        if j == 0:
            rest = sum(w[i] * x[i] for i in range(1, RANK))
            num = c - rest
            if num % w[0]:
                return
            t = num // w[0]
            if diag[0] * (t - center) ** 2 > budget:
                return
            x[0] = t
            v = [0] * RANK
            for slot, val in zip(order, x):
                v[slot] = val
            cand = NumClass(tuple(v))
            if not cand.is_zero() and pair(cand, cand) == 0 and pair(cand, H) == c:
                yield cand
            return
        lo, hi = _interval(center, budget, diag[j])
        for t in range(lo, hi + 1):
            x[j] = t
            yield from rec(j - 1, budget - diag[j] * (t - center) ** 2)
        x[j] = 0

    yield from rec(RANK - 1, bound)


def _check_positive(H):
    n = pair(H, H)
    if n <= 0:
        raise NotPositive(f"H.H = {n} is not positive", square=n)
    if pair(H, AMPLE_REF) <= 0:
        raise NotPositive("H lies in the negative half of the positive cone", H=list(H.coords))
    return n


def isotropic_slice(q, c=None, *, primitive_only=False, effective_only=True):
    """All isotropic classes x with x.H = c, sorted lexicographically.

    Accepts a :class:`SliceQuery` or ``(H, c)`` with keyword filters.
    """
    if not isinstance(q, SliceQuery):
        q = SliceQuery(q, c, primitive_only, effective_only)
    n = _check_positive(q.H)
    if q.c < 0:
        raise BadParameter("slice value c must be nonnegative", c=q.c)
    _, _, diag, _ = _plan(q.H.coords)
    cert = {
        "H_square": n,
        "scaled_bound": 2 * q.c * q.c,
        "ldl_diagonal": [str(d) for d in diag],
    }
    if q.c == 0:
        cert["reason"] = "H-perp is negative definite"
        return SliceResult((), cert)
    if q.c % divisibility(q.H):
        cert["reason"] = "EmptyByDivisibility"
        return SliceResult((), cert)
    sols = set()
    for v in iter_slice(q.H, q.c):
        if q.effective_only and pair(v, AMPLE_REF) <= 0:
            continue
        if q.primitive_only and divisibility(v) != 1:
            continue
        sols.add(v)
    return SliceResult(tuple(sorted(sols)), cert)


def min_isotropic_pairing(H):
    """Smallest c >= 1 with an effective isotropic x, x.H = c, and all such x."""
    n = _check_positive(H)
    top = isqrt(n)
    for c in range(1, top + 1):
        res = isotropic_slice(H, c, effective_only=True)
        if res.solutions:
            return c, list(res.solutions)
    raise InternalBoundViolation(f"no isotropic class with pairing <= {top}", H=list(H.coords))
