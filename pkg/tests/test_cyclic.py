from __future__ import annotations

import numpy as np
import pytest

from qcforge.cyclic import (
    CosetMultiset,
    apply_multiplier,
    bch_bound,
    circulant,
    coordinate_multiplier,
    cyclic_code_from_gen,
    cyclic_distance,
    enumerate_class_reps,
    is_codeword,
    multiplier_image,
    multiplier_permutation,
    multiset_of,
)
from qcforge.errors import DivisibilityError, InvalidInputError
from qcforge.galois import Poly, field
from qcforge.linalg import GenMatrix, is_subspace, min_distance_exact, rref


def test_n7_classes():
    classes = enumerate_class_reps(field(2), 7)
    assert len(classes) == 5
    assert sorted(c.dim for c in classes) == [1, 3, 4, 6, 7]
    # the two Hamming codes {1,2,4} / {3,5,6} collapse into one class
    hamming = [c for c in classes if c.dim == 4][0]
    assert len(hamming.members) == 2


def test_trivial_lengths():
    (only,) = enumerate_class_reps(field(2), 1)
    assert only.is_full_space and only.generator.is_one()
    assert len(enumerate_class_reps(field(2), 3)) == 3


@pytest.mark.parametrize("q,n", [(2, 9), (2, 15), (3, 8), (4, 5), (5, 6)])
def test_members_are_all_multisets_once(q, n):
    classes = enumerate_class_reps(field(q), n)
    seen = [m.mults for c in classes for m, _ in c.members]
    assert len(seen) == len(set(seen))
    fld = field(q)
    for c in classes:
        assert (Poly.x_n_minus_1(fld, n) % c.generator).is_zero()
        assert c.generator.degree == n - c.dim
        for member, a in c.members:
            assert multiplier_image(c.multiset, a) == member


def test_dimension_filter():
    classes = enumerate_class_reps(field(2), 15, k_min=5, k_max=9)
    assert classes and all(5 <= c.dim <= 9 for c in classes)


def test_multiset_validation():
    with pytest.raises(InvalidInputError):
        CosetMultiset(2, 7, 0, (0, 2, 0))
    with pytest.raises(InvalidInputError):
        multiplier_image(CosetMultiset(2, 7, 0, (0, 1, 0)), 7)


def test_multiset_generator_roundtrip():
    for c in enumerate_class_reps(field(3), 12):
        assert multiset_of(c.generator, 12) == c.multiset


def test_circulant_rows_are_shifts():
    g = Poly(field(2), [1, 1, 0, 1])
    M = circulant(g, 7, 4).rows
    for i in range(1, 4):
        assert np.array_equal(M[i], np.roll(M[0], i))


def test_codeword_membership():
    code = cyclic_code_from_gen(Poly(field(2), [1, 1, 0, 1]), 7)
    for row in code.matrix.rows:
        assert is_codeword(row, code)
    assert not is_codeword([1, 0, 0, 0, 0, 0, 0], code)
    with pytest.raises(DivisibilityError):
        cyclic_code_from_gen(Poly(field(2), [1, 1, 1]), 7)


def test_multiplier_permutation_maps_codes():
    fld = field(2)
    h1 = cyclic_code_from_gen(Poly(fld, [1, 1, 0, 1]), 7)
    h2 = cyclic_code_from_gen(Poly(fld, [1, 0, 1, 1]), 7)
    # i -> -i sends the zeros {1,2,4} to {3,5,6}: the reciprocal Hamming code
    img = GenMatrix(fld, apply_multiplier(h1.matrix.rows, 6))
    assert rref(img)[0] == rref(h2.matrix)[0]
    assert sorted(multiplier_permutation(7, 3)) == list(range(7))
    with pytest.raises(InvalidInputError):
        multiplier_permutation(6, 2)


def test_coordinate_multiplier_realizes_zero_map():
    fld = field(2)
    for c in enumerate_class_reps(fld, 21):
        for member, a in c.members:
            A = coordinate_multiplier(a, 21, 21)
            img = GenMatrix(fld, apply_multiplier(c.code().matrix.rows, A))
            target = cyclic_code_from_gen(member.generator(), 21).matrix
            assert rref(img)[0] == rref(target)[0]


def test_bch_bound_is_a_lower_bound():
    for q, n in ((2, 15), (2, 21), (3, 13), (4, 9)):
        for c in enumerate_class_reps(field(q), n):
            if c.is_full_space or c.dim > 12:
                continue
            assert bch_bound(c.multiset) <= min_distance_exact(c.code().matrix)


def test_cyclic_distance_paths():
    fld = field(2)
    code = cyclic_code_from_gen(Poly(fld, [1, 0, 1, 1, 1]), 35)
    exact = cyclic_distance(code)
    assert exact == (2, True)
    # over budget: falls back to the dual via MacWilliams and stays exact
    assert cyclic_distance(code, budget=4) == (2, True)
    # over budget with a huge dual: BCH bound, flagged inexact
    d, ok = cyclic_distance(code, budget=4, max_dual_words=1)
    assert not ok and d <= 2
