"""Fundamental coefficients of polarizations and the census of moduli components.

The ordering constraints on ``(a1..a7; a9, a10, a0)`` say exactly that the
coefficient vector ``a`` (read in the fixed basis) pairs nonnegatively with
ten (-2)-roots of the lattice:

    E2-E1, ..., E7-E6, E8-E7, E9-E8, E10-E9, E910-E8

These are the simple roots of a T(2,3,7) Coxeter diagram, so the constraint
set is a fundamental chamber for the reflection group acting on the positive
cone. Reflecting ``L`` into that chamber gives the coefficients; applying the
inverse reflections to the basis gives an isotropic sequence realizing them.
"""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import NonPositiveSquare, NotEffective, SearchExhausted
from .lattice import (
    E8_CLASS, GRAM, RANK, NumClass, PicClass, gram_image, is_effective,
    is_two_divisible_num, pair,
)

SLOT_LABELS = ("a1", "a2", "a3", "a4", "a5", "a6", "a7", "a9", "a10", "a0")


def _root(plus, minus):
    return plus - minus


_B = [NumClass.basis(i) for i in range(RANK)]
SIMPLE_ROOTS = tuple(
    [_root(_B[i + 1], _B[i]) for i in range(6)]
    + [_root(E8_CLASS, _B[6]), _root(_B[7], E8_CLASS), _root(_B[8], _B[7]), _root(_B[9], E8_CLASS)]
)


@dataclass(frozen=True)
class FundamentalCoefficients:
    a: tuple
    epsilon: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))

    @property
    def square(self):
        return quadratic_form_of_coeffs(self.a)

    @property
    def total(self):
        """a1 + ... + a7 + a9 + a10 + a0, which equals E8.L."""
        return sum(self.a)

    def satisfies_constraints(self):
        a1, a2, a3, a4, a5, a6, a7, a9, a10, a0 = self.a
        chain = a1 >= a2 >= a3 >= a4 >= a5 >= a6 >= a7 >= 0
        tail = a9 + a10 >= a0 >= a9 >= a10 >= 0
        parity = self.epsilon == 0 or all(x % 2 == 0 for x in self.a)
        return chain and tail and parity

    def as_class(self):
        return NumClass(self.a)

    def key(self):
        return self.a + (self.epsilon,)

    def to_json(self):
        return {"a": list(self.a), "epsilon": self.epsilon}

    def __str__(self):
        head = ",".join(map(str, self.a[:7]))
        tail = ",".join(map(str, self.a[7:]))
        return f"({head};{tail};eps={self.epsilon})"


@dataclass(frozen=True)
class FundRepWitness:
    coefficients: FundamentalCoefficients
    sequence: tuple  # PicClasses for E1..E7, E9, E10, E910
    target: PicClass

    def gram(self):
        return tuple(tuple(pair(u.num, v.num) for v in self.sequence) for u in self.sequence)

    def reconstruct(self):
        total = PicClass(NumClass.zero(), self.coefficients.epsilon)
        for k, e in zip(self.coefficients.a, self.sequence):
            total = total + e * k
        return total

    def check(self):
        """Re-verify Gram relations, effectivity and reconstruction."""
        return (
            self.gram() == GRAM
            and all(is_effective(e.num) for e in self.sequence)
            and self.reconstruct() == self.target
            and self.coefficients.satisfies_constraints()
            and self.coefficients.square == pair(self.target.num, self.target.num)
        )

    def to_json(self):
        return {
            "coefficients": self.coefficients.to_json(),
            "sequence": [e.to_json() for e in self.sequence],
            "target": self.target.to_json(),
        }


def quadratic_form_of_coeffs(a):
    """a^T G a for a coefficient tuple in slot order."""
    return pair(tuple(a), tuple(a))


def _check_input(L):
    if not isinstance(L, PicClass):
        L = PicClass(L)
    sq = pair(L.num, L.num)
    if sq <= 0:
        raise NonPositiveSquare(f"L^2 = {sq} must be positive", square=sq)
    if not is_effective(L.num):
        raise NotEffective("L is not effective", coords=list(L.num.coords))
    return L


def reduce_to_chamber(v, rng=None, max_steps=1_000_000):
    """Reflect ``v`` into the fundamental chamber.

    Returns ``(a, inverse_images)`` where ``a`` is the chamber vector and
    ``inverse_images[i]`` is the image of basis vector ``i`` under the inverse
    of the accumulated reflection, so ``v = sum a_i * inverse_images[i]``.
    ``rng`` randomizes which violated wall is crossed at each step.
    """
    cur = v
    inv = list(_B)
    for _ in range(max_steps):
        bad = [r for r in SIMPLE_ROOTS if pair(cur, r) < 0]
        if not bad:
            return cur, inv
        root = rng.choice(bad) if rng is not None else bad[0]
        k = pair(cur, root)
        cur = cur + root * k
        # inv <- inv o s_root ;  s(b) = b + (b.root) root
        img_root = NumClass.zero()
        for coef, col in zip(root.coords, inv):
            if coef:
                img_root = img_root + col * coef
        g = gram_image(root)
        inv = [col + img_root * g[i] if g[i] else col for i, col in enumerate(inv)]
    raise SearchExhausted("chamber reduction did not terminate", coords=list(v.coords))


def fundamental_coefficients(L, rng=None):
    """Fundamental coefficients of ``L`` with a certified isotropic sequence."""
    L = _check_input(L)
    if isinstance(rng, int):
        rng = random.Random(rng)
    a, inv = reduce_to_chamber(L.num, rng)
    eps = int(is_two_divisible_num(L.num) and L.torsion == 1)
    coeffs = FundamentalCoefficients(a.coords, eps)
    seq = [PicClass(e, 0) for e in inv]
    if not eps and L.torsion:
        # K_S has to be absorbed by an odd coefficient (E + K_S is isotropic too)
        odd = next((i for i, x in enumerate(a.coords) if x % 2), None)
        if odd is None:
            raise SearchExhausted("no odd coefficient to carry K_S", coords=list(L.num.coords))
        seq[odd] = PicClass(inv[odd], 1)
    witness = FundRepWitness(coeffs, tuple(seq), L)
    if not witness.check():
        raise SearchExhausted("witness failed certification", coords=list(L.num.coords))
    return witness


def search_witness(L, a, rng=None):
    """Look for an isotropic sequence realizing coefficient tuple ``a`` for ``L``.

    Independent of the chamber reduction: every member of the sequence is
    drawn from an isotropic slice of ``L`` and the sequence is assembled by
    backtracking on the Gram relations. Returns the NumClass sequence or None.
    """
    from .isotropy import isotropic_slice

    if not isinstance(L, NumClass):
        L = L.num
    targets = gram_image(tuple(a))
    if any(t <= 0 for t in targets):
        return None
    cands = []
    for j in range(RANK):
        sl = list(isotropic_slice(L, targets[j]).solutions)
        if rng is not None:
            rng.shuffle(sl)
        cands.append(sl)
    order = sorted(range(RANK), key=lambda j: len(cands[j]))
    chosen = {}

    def rec(k):
        if k == RANK:
            return True
        j = order[k]
        for e in cands[j]:
            if all(pair(e, chosen[i]) == GRAM[i][j] for i in chosen):
                chosen[j] = e
                if rec(k + 1):
                    return True
                del chosen[j]
        return False

    if not rec(0):
        return None
    seq = [chosen[j] for j in range(RANK)]
    total = NumClass.zero()
    for k, e in zip(a, seq):
        total = total + e * k
    return seq if total == L else None


def same_component(L1, L2):
    f1 = fundamental_coefficients(L1).coefficients
    f2 = fundamental_coefficients(L2).coefficients
    return f1 == f2


def _tails(square):
    """(a9, a10, a0) with a9 + a10 >= a0 >= a9 >= a10 >= 0 and room left in Q."""
    half = square // 2
    cap = max(half, 1)
    for a10 in range(cap + 1):
        for a9 in range(a10, cap + 1):
            for a0 in range(a9, a9 + a10 + 1):
                base = a9 * a10 + 2 * a0 * (a9 + a10)
                if base > half:
                    break
                yield a9, a10, a0, base


def _heads(target, t, cap):
    """Nonincreasing 7-tuples with P7 + S7 * t == target (P7 = sum_{i<j} a_i a_j)."""
    out = []
    seq = []

    def rec(pos, prev, s, p):
        f = p + s * t
        if pos == 7:
            if f == target:
                out.append(tuple(seq))
            return
        for x in range(0, prev + 1):
            nf = p + x * s + (s + x) * t
            if nf > target:
                break
            seq.append(x)
            rec(pos + 1, x, s + x, p + x * s)
            seq.pop()

    rec(0, cap, 0, 0)
    return out


def _census_for_tail(square, tail):
    a9, a10, a0, base = tail
    half = square // 2
    rows = []
    for head in _heads(half - base, a9 + a10 + a0, max(half, 1)):
        a = head + (a9, a10, a0)
        if quadratic_form_of_coeffs(a) != square:
            continue
        rows.append(FundamentalCoefficients(a, 0))
        if all(x % 2 == 0 for x in a):
            rows.append(FundamentalCoefficients(a, 1))
    return rows


def enumerate_components(square, threads=1):
    """All fundamental-coefficient tuples with Q(a) = square, sorted.

    Each tuple is assumed to label one irreducible component of the moduli of
    polarized Enriques surfaces of genus 1 + square/2.
    """
    if square < 2 or square % 2:
        return []
    tails = list(_tails(square))
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda t: _census_for_tail(square, t), tails))
    else:
        parts = [_census_for_tail(square, t) for t in tails]
    rows = [r for part in parts for r in part]
    return sorted(rows, key=FundamentalCoefficients.key)
