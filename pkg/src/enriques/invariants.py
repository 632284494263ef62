"""phi, length, genus arithmetic and Seshadri constants."""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import LengthCapExceeded, NegativeSquare, NonPositiveSquare, NotEffective, NotPositive
from .isotropy import isotropic_slice, min_isotropic_pairing
from .lattice import NumClass, SurfaceModel, divisibility, is_effective, pair

DEFAULT_LENGTH_CAP = 100


def _require_positive(H):
    sq = pair(H, H)
    if sq <= 0:
        raise NonPositiveSquare(f"H^2 = {sq} must be positive", square=sq)
    return sq


def phi(H):
    """Cossec's phi: the minimal pairing of H with a nonzero effective isotropic class."""
    _require_positive(H)
    return min_isotropic_pairing(H)[0]


def phi_witnesses(H):
    _require_positive(H)
    return min_isotropic_pairing(H)[1]


def arithmetic_genus(C):
    return pair(C, C) // 2 + 1


def genus_multiplicity_bound(C, m):
    """Largest possible geometric genus of C with a point of multiplicity m."""
    return arithmetic_genus(C) - m * (m - 1) // 2


def _check_length_input(L):
    sq = pair(L, L)
    if sq < 0:
        raise NegativeSquare(f"L^2 = {sq} is negative", square=sq)
    if not is_effective(L):
        raise NotEffective("L is not effective", coords=list(L.coords))
    return sq


def greedy_length(L):
    """Lower bound for length: peel off phi-minimizers until the square drops to 0.

    Fast but not guaranteed optimal.
    """
    sq = _check_length_input(L)
    count = 0
    while sq > 0:
        L = L - min_isotropic_pairing(L)[1][0]
        count += 1
        sq = pair(L, L)
    return count + divisibility(L)


_memo = {}
_memo_lock = threading.Lock()


def _length(L):
    hit = _memo.get(L.coords)
    if hit is not None:
        return hit
    sq = pair(L, L)
    if sq == 0:
        return divisibility(L)
    from .fundrep import reduce_to_chamber

    best = max(greedy_length(L), sum(reduce_to_chamber(L)[0].coords))
    # every summand pairs with L to at least phi(L), and the pairings add up to L^2
    ceiling = sq // phi(L)
    if best < ceiling:
        # A decomposition with k summands has one summand E with E.L <= L^2 / k;
        # peeling that one first leaves a class of length >= k - 1.
        c = 1
        while c <= sq // (best + 1):
            for E in isotropic_slice(L, c).solutions:
                rest = L - E
                if pair(rest, rest) < 0 or not is_effective(rest):
                    continue
                got = 1 + _length(rest)
                if got > best:
                    best = got
                    if best == ceiling:
                        break
            if best == ceiling:
                break
            c += 1
    with _memo_lock:
        _memo[L.coords] = best
    return best


def length(L, cap=DEFAULT_LENGTH_CAP):
    """Maximal number of effective isotropic summands of L (exact)."""
    sq = _check_length_input(L)
    if sq > cap:
        raise LengthCapExceeded(f"L^2 = {sq} exceeds the length cap {cap}", square=sq, cap=cap)
    return _length(L)


@dataclass(frozen=True)
class SeshadriReport:
    H: NumClass
    phi: int
    epsilon: Fraction | None
    lower: Fraction
    upper: Fraction
    model: SurfaceModel
    kleiman_ok: bool
    caveats: tuple = field(default=())

    def to_json(self):
        return {
            "H": list(self.H.coords),
            "phi": self.phi,
            "epsilon": None if self.epsilon is None else str(self.epsilon),
            "interval": [str(self.lower), str(self.upper)],
            "model": self.model.value,
            "kleiman_ok": self.kleiman_ok,
            "caveats": [dict(c) for c in self.caveats],
        }


def seshadri(H, model=SurfaceModel.VERY_GENERAL):
    """Seshadri constant of H; exact on a very general surface, an interval otherwise."""
    model = SurfaceModel.parse(model)
    sq = _require_positive(H)
    if not is_effective(H):
        raise NotPositive("H is not in the positive cone", coords=list(H.coords))
    p = phi(H)
    upper = Fraction(p)
    caveats = []
    if model is SurfaceModel.VERY_GENERAL:
        eps = upper
        lower = upper
    else:
        eps = None
        lower = Fraction(p, 2)
        caveats.append({
            "code": "no_minus_two_data",
            "note": "lower bound min(d(H,x), phi/2) with d(H,x) unknown",
        })
        caveats.append({
            "code": "countable_exception",
            "note": "off (-2)-curves and outside countably many points, eps(H,x) >= phi(H)",
        })
        if model is SurfaceModel.ARBITRARY:
            caveats.append({
                "code": "arbitrary_surface",
                "note": "(-2)-curves may exist; eps(H) can drop to their degree d(H,x)",
            })
    kleiman_ok = upper * upper <= sq
    return SeshadriReport(H, p, eps, lower, upper, model, kleiman_ok, tuple(caveats))
