# tests/framekit/core/test_frame.py
from __future__ import annotations

import numpy as np
import pytest

from framekit.core.ambient import NormSpec, rank_kernel
from framekit.core.c0detect import block_combination, example_blocks
from framekit.core.errors import InvalidBasisError, StructuralError
from framekit.core.frame import (
    FiniteFrame,
    delete,
    doubled_frame,
    identity_frame,
    index_set,
    normalize_columns,
    random_frame,
    repeated_frame,
    validate,
    zero_columns,
)
from framekit.core.minseq import min_norm


def test_identity_frame_validates():
    rep = validate(identity_frame(3))
    assert rep.ok
    assert rep.residual == 0.0
    assert rep.zero_columns == ()


def test_doubled_frame_layout():
    fr = doubled_frame(np.eye(2))
    assert fr.N == 4
    assert np.array_equal(fr.vectors, [[1, 1, 0, 0], [0, 0, 1, 1]])
    assert np.allclose(fr.functionals, 0.5 * fr.vectors)
    assert validate(fr).ok


def test_repeated_frame_with_skewed_basis_validates():
    z = np.array([[2.0, 1.0], [0.0, 1.0]])
    fr = repeated_frame(z, [3, 1])
    assert fr.N == 4
    assert validate(fr).residual < 1e-12


def test_repeated_frame_rejects_bad_multiplicities():
    with pytest.raises(StructuralError):
        repeated_frame(np.eye(2), [1])
    with pytest.raises(StructuralError):
        repeated_frame(np.eye(2), [0, 1])


def test_singular_basis_rejected():
    with pytest.raises(InvalidBasisError):
        doubled_frame(np.array([[1.0, 2.0], [2.0, 4.0]]))
    with pytest.raises(InvalidBasisError):
        doubled_frame(np.ones((2, 3)))


def test_normalize_columns_in_sup_norm():
    z = normalize_columns(np.array([[3.0, 0.0], [-4.0, 2.0]]), "inf")
    assert np.max(np.abs(z), axis=0) == pytest.approx([1.0, 1.0])


@pytest.mark.parametrize("d,N", [(1, 1), (2, 5), (4, 9), (8, 18)])
def test_random_frame_validates(d, N):
    fr = random_frame(d, N, seed=d * 100 + N)
    assert fr.d == d and fr.N == N
    assert validate(fr).ok


def test_random_frame_is_reproducible():
    a = random_frame(3, 6, seed=11)
    b = random_frame(3, 6, seed=11)
    assert np.array_equal(a.vectors, b.vectors)


def test_random_frame_needs_enough_vectors():
    with pytest.raises(StructuralError):
        random_frame(3, 2, seed=0)


def test_frame_arrays_are_read_only():
    fr = identity_frame(2)
    with pytest.raises(ValueError):
        fr.vectors[0, 0] = 5.0


def test_shape_mismatch_is_structural():
    with pytest.raises(StructuralError):
        FiniteFrame(np.eye(2), np.eye(3))


def test_perturbed_functionals_fail_validation():
    fr = doubled_frame(np.eye(2))
    f = np.array(fr.functionals)
    f[0, 0] += 1e-3
    rep = validate(FiniteFrame(fr.vectors, f))
    assert not rep.ok
    assert rep.residual == pytest.approx(1e-3)


def test_zero_column_fails_validation_even_with_identity_residual():
    v = np.array([[1.0, 0.0]])
    f = np.array([[1.0, 3.0]])
    fr = FiniteFrame(v, f)
    assert zero_columns(fr) == (1,)
    rep = validate(fr)
    assert rep.residual == 0.0
    assert not rep.ok


def test_delete_leaves_basis():
    fr = doubled_frame(np.eye(2))
    cut = delete(fr, [0, 2])
    assert cut.kept == (1, 3)
    assert cut.is_basis
    assert not delete(fr, [0, 1]).is_basis
    assert not delete(fr, [0]).is_basis


def test_index_set_sorts_and_checks_range():
    assert index_set([3, 1, 3], 4) == (1, 3)
    with pytest.raises(StructuralError):
        index_set([4], 4)
    with pytest.raises(StructuralError):
        index_set([-1], 4)


def test_norm_is_carried():
    fr = identity_frame(2, norm="inf")
    assert fr.norm == NormSpec(float("inf"))


def test_doubled_frame_of_skewed_basis_has_kernel_of_dimension_d():
    fr = doubled_frame(np.array([[1.0, 1.0], [0.0, 1.0]]))
    assert validate(fr).residual <= 1e-12
    assert rank_kernel(fr.vectors).nullity == 2


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_doubled_frame_of_random_basis_has_kernel_of_dimension_d(seed):
    z = np.random.default_rng(seed).standard_normal((4, 4))
    fr = doubled_frame(z)
    assert validate(fr).ok
    assert rank_kernel(fr.vectors).nullity == 4


@pytest.mark.parametrize("z", [np.array([[1.0, 1.0], [0.0, 1.0]]), np.array([[2.0, -1.0, 0.5], [0.0, 1.0, 1.0], [1.0, 0.0, 3.0]])])
def test_doubled_blocks_satisfy_closed_form_bounds_for_normalized_basis(z):
    fr = doubled_frame(normalize_columns(z))
    bs = example_blocks(fr)
    rng = np.random.default_rng(0)
    for a in rng.uniform(-3.0, 3.0, (100, bs.K)):
        value = min_norm(fr, block_combination(bs, a))
        top = float(np.max(np.abs(a)))
        assert top - 1e-12 <= value <= 2.0 * top + 1e-12
