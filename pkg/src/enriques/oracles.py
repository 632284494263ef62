"""Brute-force oracles used to cross-check the enumeration engine.

Nothing here shares code with the Fincke-Pohst path: coordinate radii come
from the exact inverse of the definite form, and candidates are produced by
scanning the whole box with numpy.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import isqrt

import numpy as np

from . import linalg
from .lattice import AMPLE_REF, GRAM, RANK, NumClass

_G = np.array(GRAM, dtype=np.int64)
_H0 = np.array(AMPLE_REF.coords, dtype=np.int64)


def _definite(H):
    h = np.array(H.coords, dtype=np.int64)
    n = int(h @ _G @ h)
    w = _G @ h
    return n, [[int(2 * w[i] * w[j] - n * _G[i, j]) for j in range(RANK)] for i in range(RANK)]


def box_radii(H, cmax):
    """Largest |x_i| over the ellipsoid 2(x.H)^2 - (H.H) x.x <= 2 cmax^2 (exact)."""
    _, form = _definite(H)
    inv = linalg.inverse(form)
    bound = Fraction(2 * cmax * cmax)
    radii = []
    for i in range(RANK):
        q = bound * inv[i][i]
        radii.append(isqrt(q.numerator // q.denominator))
    return radii


def box_size(radii):
    out = 1
    for r in radii:
        out *= 2 * r + 1
    return out


def iter_box(radii, block_rows=1 << 19):
    """Yield int64 arrays of shape (k, 10) covering the box, chunked by leading coordinates."""
    chunk_dims = RANK
    rows = 1
    while chunk_dims > 0 and rows * (2 * radii[chunk_dims - 1] + 1) <= block_rows:
        chunk_dims -= 1
        rows *= 2 * radii[chunk_dims] + 1
    chunk_dims = min(chunk_dims, RANK - 1)
    tail = [np.arange(-r, r + 1, dtype=np.int64) for r in radii[chunk_dims:]]
    mesh = np.stack(np.meshgrid(*tail, indexing="ij"), axis=-1).reshape(-1, RANK - chunk_dims)
    heads = [range(-r, r + 1) for r in radii[:chunk_dims]]
    for head in itertools.product(*heads):
        block = np.empty((mesh.shape[0], RANK), dtype=np.int64)
        block[:, :chunk_dims] = head
        block[:, chunk_dims:] = mesh
        yield block


def isotropic_in_box(H, cmin, cmax):
    """All nonzero isotropic x with x.h0 > 0 and cmin <= x.H <= cmax, by box scan."""
    radii = box_radii(H, cmax)
    h = np.array(H.coords, dtype=np.int64)
    gh = _G @ h
    gh0 = _G @ _H0
    found = []
    for block in iter_box(radii):
        xh = block @ gh
        sel = (xh >= cmin) & (xh <= cmax)
        if not sel.any():
            continue
        cand = block[sel]
        sq = np.einsum("ij,jk,ik->i", cand, _G, cand)
        pos = cand @ gh0
        keep = cand[(sq == 0) & (pos > 0)]
        found.extend(NumClass(tuple(int(v) for v in row)) for row in keep)
    return sorted(set(found))


def slice_oracle(H, c):
    if c <= 0:
        return []
    return isotropic_in_box(H, c, c)


def phi_oracle(H):
    """(phi, witnesses) by exhaustive box search up to floor(sqrt(H^2))."""
    n = int(np.array(H.coords) @ _G @ np.array(H.coords))
    for c in range(1, isqrt(n) + 1):
        vecs = isotropic_in_box(H, c, c)
        if vecs:
            return c, vecs
    return None, []


def length_oracle(L):
    """Exact length by exhaustive decomposition.

    A summand E of L leaves L - E with nonnegative square, so E.L <= L^2 / 2;
    every summand of a sub-sum of L is a summand of L, so one candidate list
    serves the whole recursion.
    """
    from functools import lru_cache

    n = int(np.array(L.coords) @ _G @ np.array(L.coords))
    if n == 0:
        return linalg.vec_gcd(L.coords)
    summands = isotropic_in_box(L, 1, n // 2)

    def sq(v):
        a = np.array(v, dtype=np.int64)
        return int(a @ _G @ a)

    @lru_cache(maxsize=None)
    def best(coords):
        if not any(coords):
            return 0
        out = -1
        for e in summands:
            rest = tuple(a - b for a, b in zip(coords, e.coords))
            if any(rest):
                if sq(rest) < 0 or int(np.array(rest) @ _G @ _H0) <= 0:
                    continue
            sub = best(rest)
            if sub >= 0:
                out = max(out, 1 + sub)
        return out

    return best(L.coords)


def census_oracle(square):
    """Count (a, eps) tuples with the ordering constraints and Q(a) = square, vectorized.

    Uses the closed form Q/2 = P7 + S7 (a9 + a10 + a0) + a9 a10 + 2 a0 (a9 + a10)
    with S7, P7 the first and second elementary symmetric sums of a1..a7.
    """
    cap = square // 2
    heads = np.array(list(itertools.combinations_with_replacement(range(cap, -1, -1), 7)), dtype=np.int64)
    s7 = heads.sum(axis=1)
    p7 = (s7 * s7 - (heads * heads).sum(axis=1)) // 2
    rows = []
    for a9, a10, a0 in itertools.product(range(cap + 1), repeat=3):
        if not (a9 + a10 >= a0 >= a9 >= a10 >= 0):
            continue
        q = 2 * (p7 + s7 * (a9 + a10 + a0) + a9 * a10 + 2 * a0 * (a9 + a10))
        for idx in np.nonzero(q == square)[0]:
            a = tuple(int(v) for v in heads[idx]) + (a9, a10, a0)
            rows.append((a, 0))
            if all(v % 2 == 0 for v in a):
                rows.append((a, 1))
    return sorted(rows)
