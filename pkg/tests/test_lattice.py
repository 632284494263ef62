import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from enriques import linalg
from enriques.errors import UnsupportedModel
from enriques.lattice import (
    AMPLE_REF, E1, E2, E8_CLASS, E9, E10, E910, GRAM, NumClass, PicClass, SurfaceModel,
    change_of_basis_certificate, divisibility, epsilon_invariant, is_effective,
    is_two_divisible_num, pair,
)

coords = st.lists(st.integers(-50, 50), min_size=10, max_size=10).map(lambda c: NumClass(tuple(c)))


def test_gram_shape():
    for i in range(10):
        assert GRAM[i][i] == 0
    for i, j in itertools.permutations(range(9), 2):
        assert GRAM[i][j] == 1
    assert [GRAM[i][9] for i in range(9)] == [1] * 7 + [2, 2]


def test_basis_pairings():
    assert pair(E1, E2) == 1
    assert pair(E9, E910) == 2


def test_e910_from_rational_expression():
    # E910 = (E1 + ... + E10)/3 - E9 - E10, with E8 recovered from the basis
    total = sum((NumClass.basis(i) for i in range(9)), NumClass.zero()) + E8_CLASS
    assert total == E910 * 3 + E9 * 3 + E10 * 3


def test_even_example():
    v = NumClass((1, 0, 1, 0, 2, 0, 0, 3, 0, 1))
    assert pair(v, v) % 2 == 0


def test_certificate():
    rep = change_of_basis_certificate()
    assert rep.determinant == -1
    assert rep.signature == (1, 9)
    assert rep.even
    assert rep.smith == (1,) * 10


def test_determinant_bordered_identity():
    # det G = -det(J9 - I9) * b^T (J9 - I9)^{-1} b with b the last column
    m = [[int(i != j) for j in range(9)] for i in range(9)]
    b = [GRAM[i][9] for i in range(9)]
    inv = linalg.inverse(m)
    quad = sum(b[i] * inv[i][j] * b[j] for i in range(9) for j in range(9))
    assert linalg.det_bareiss(m) == 8
    assert -8 * quad == -1 == linalg.det_bareiss(GRAM)


def test_signature_matches_numpy_eigenvalues():
    ev = np.linalg.eigvalsh(np.array(GRAM, dtype=float))
    assert (ev > 0).sum() == 1 and (ev < 0).sum() == 9


def test_e8_class_identities():
    for i in range(10):
        assert pair(E8_CLASS, NumClass.basis(i)) == 1
    assert pair(E8_CLASS, E8_CLASS) == 0
    assert pair(AMPLE_REF, AMPLE_REF) == 6


@settings(max_examples=1000, deadline=None)
@given(coords, coords, coords, st.integers(-5, 5))
def test_bilinear_symmetric_even(u, v, w, k):
    assert pair(u, v) == pair(v, u)
    assert pair(u + v, w) == pair(u, w) + pair(v, w)
    assert pair(u * k, w) == k * pair(u, w)
    assert pair(u, u) % 2 == 0


def test_isotropic_orthogonal_means_proportional():
    box = np.array(list(itertools.product(range(4), repeat=10)), dtype=np.int64)
    g = np.array(GRAM, dtype=np.int64)
    sq = np.einsum("ij,jk,ik->i", box, g, box)
    pos = box @ (g @ np.array(AMPLE_REF.coords))
    iso = box[(sq == 0) & (pos > 0)]
    assert len(iso) >= 20
    gram = iso @ g @ iso.T
    for i, j in zip(*np.nonzero(gram == 0)):
        u, v = iso[i], iso[j]
        # proportional iff every 2x2 minor vanishes
        assert np.all(np.outer(u, v) == np.outer(v, u))


def test_divisibility():
    assert divisibility((E9 + E10 + E910) * 2) == 2
    assert divisibility(E1) == 1
    assert divisibility(NumClass.zero()) == 0


def test_two_divisible():
    assert is_two_divisible_num((E9 + E10 + E910) * 2)
    assert not is_two_divisible_num(E1 * 2 + E2)
    assert is_two_divisible_num(NumClass.zero())


def test_epsilon_invariant():
    assert epsilon_invariant(PicClass(E1 * 2, 1)) == 1
    assert epsilon_invariant(PicClass(E1 * 2, 0)) == 0
    assert epsilon_invariant(PicClass(E1 * 2 + E2, 1)) == 0


def test_pic_arithmetic():
    K = PicClass.canonical()
    assert K == PicClass(NumClass.zero(), 1)
    assert (K + K).torsion == 0
    assert (PicClass(E1, 1) * 2).torsion == 0
    assert (PicClass(E1, 1) + PicClass(E2, 1)) == PicClass(E1 + E2, 0)


def test_effectivity():
    assert is_effective(E1)
    assert not is_effective(-E1)
    assert not is_effective(E1 - E2)  # square -2
    assert not is_effective(NumClass.zero())
    assert is_effective(E1, SurfaceModel.VERY_GENERAL)
    with pytest.raises(UnsupportedModel):
        is_effective(E1, SurfaceModel.ARBITRARY)


def test_json_roundtrip():
    v = NumClass((1, 2, 3, 4, 5, 6, 7, 8, 9, 10))
    assert NumClass.from_json(v.to_json()) == v
    p = PicClass(v, 1)
    assert PicClass.from_json(p.to_json()) == p
    assert p.to_json() == {"coords": list(range(1, 11)), "torsion": 1}
