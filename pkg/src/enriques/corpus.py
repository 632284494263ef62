"""Deterministic test corpora of positive classes."""
from __future__ import annotations

import itertools
import random

from .lattice import AMPLE_REF, NumClass, pair

CORPUS_SEED = 20240917
BOX_COUNT = 30
RANDOM_COUNT = 20
MAX_SQUARE = 60


def _positive(v, max_square):
    sq = pair(v, v)
    return 0 < sq <= max_square and pair(v, AMPLE_REF) > 0


def box_classes(lo=0, hi=2, max_square=MAX_SQUARE):
    """Every class with coordinates in [lo, hi] and 0 < H^2 <= max_square."""
    out = []
    for coords in itertools.product(range(lo, hi + 1), repeat=10):
        v = NumClass(coords)
        if _positive(v, max_square):
            out.append(v)
    return out


def phi_corpus(seed=CORPUS_SEED):
    """50 positive classes with H^2 <= 60.

    30 are drawn from the [0, 2] box, 20 are random with coordinates in
    [-2, 3]; both draws use ``seed`` so the corpus is fixed.
    """
    rng = random.Random(seed)
    chosen = []
    seen = set()
    while len(chosen) < BOX_COUNT:
        v = NumClass(tuple(rng.randint(0, 2) for _ in range(10)))
        if v.coords not in seen and _positive(v, MAX_SQUARE):
            seen.add(v.coords)
            chosen.append(v)
    while len(chosen) < BOX_COUNT + RANDOM_COUNT:
        v = NumClass(tuple(rng.randint(-2, 3) for _ in range(10)))
        if v.coords not in seen and _positive(v, MAX_SQUARE):
            seen.add(v.coords)
            chosen.append(v)
    return chosen
