# tests/framekit/core/test_operators.py
from __future__ import annotations

import numpy as np
import pytest

import config as cfg
from framekit.core.ambient import numerical_rank, subspace_residual
from framekit.core.errors import EnumerationCapError, InternalInconsistencyError, InvalidDeletionError
from framekit.core.frame import FiniteFrame, delete, doubled_frame, identity_frame, random_frame
from framekit.core.minseq import min_norm
from framekit.core.operators import (
    DecompOp,
    ReconOp,
    basis_equivalence,
    deletion_search,
    direct_sum_split,
    excess,
    kernel_basis_biorthogonal,
    kernel_basis_numerical,
    kernel_residual,
    operator_norms,
    projector_q,
    s_apply,
    t_apply,
    tail_injectivity,
)


def test_s_apply_kills_example_kernel_vector():
    fr = doubled_frame(np.eye(2))
    assert np.allclose(s_apply(fr, [-1.0, 1.0, 0.0, 0.0]), 0.0)
    assert np.allclose(s_apply(fr, [0.0, 0.0, 1.0, 0.0]), [0.0, 1.0])


def test_t_apply_on_doubled_frame():
    fr = doubled_frame(np.eye(2))
    assert t_apply(fr, [1.0, 0.0]) == pytest.approx([0.5, 0.5, 0.0, 0.0])
    assert np.all(t_apply(fr, [0.0, 0.0]) == 0.0)


def test_operator_objects_wrap_apply():
    fr = random_frame(2, 4, seed=3)
    x = np.array([0.3, -1.2])
    assert np.allclose(ReconOp(fr)(DecompOp(fr)(x)), x, atol=1e-12)
    assert ReconOp(fr).matrix.shape == (2, 4)
    assert DecompOp(fr).matrix.shape == (4, 2)


def test_s_after_t_is_identity_on_random_frame():
    fr = random_frame(4, 9, seed=2)
    xs = np.random.default_rng(0).standard_normal((50, 4))
    for x in xs:
        assert np.max(np.abs(s_apply(fr, t_apply(fr, x)) - x)) <= 1e-10


def test_operator_norm_bounds():
    ident = operator_norms(identity_frame(3), trials=50, seed=0)
    assert ident.S_norm_lower >= 1.0 - 1e-12

    fr = doubled_frame(np.eye(2))
    on = operator_norms(fr, trials=200, seed=0)
    assert on.T_norm_lower >= 0.5
    assert on.S_norm_lower * on.T_norm_lower >= 1.0 - 1e-9
    assert min_norm(fr, t_apply(fr, [1.0, 0.0])) == pytest.approx(1.0)


def test_projector_on_identity_is_zero():
    assert np.allclose(projector_q(identity_frame(3)), 0.0)


def test_projector_on_doubled_line():
    q = projector_q(doubled_frame(np.eye(1)))
    assert q == pytest.approx(np.array([[0.5, -0.5], [-0.5, 0.5]]))


@pytest.mark.parametrize("d,N,s", [(1, 3, 0), (3, 8, 1), (4, 9, 2)])
def test_projector_is_idempotent_onto_kernel(d, N, s):
    fr = random_frame(d, N, seed=s)
    q = projector_q(fr)
    assert np.max(np.abs(q @ q - q)) <= 1e-10
    assert np.max(np.abs(fr.vectors @ q)) <= 1e-10
    assert numerical_rank(q) == N - d


def test_direct_sum_split_recombines():
    fr = random_frame(2, 5, seed=4)
    a = np.arange(5, dtype=float)
    k, img = direct_sum_split(fr, a)
    assert np.allclose(k + img, a)
    assert np.max(np.abs(fr.vectors @ k)) <= 1e-10


def test_numerical_kernel_dimensions():
    assert kernel_basis_numerical(identity_frame(3)).dim == 0
    assert kernel_basis_numerical(doubled_frame(np.eye(2))).dim == 2
    assert kernel_basis_numerical(random_frame(3, 8, seed=0)).dim == 5


def test_biorthogonal_kernel_on_doubled_line():
    basis = kernel_basis_biorthogonal(doubled_frame(np.eye(1)), [1])
    assert basis.vectors == pytest.approx(np.array([[-1.0, 1.0]]))
    assert basis.sigma == (1,)


def test_biorthogonal_kernel_on_doubled_plane():
    fr = doubled_frame(np.eye(2))
    basis = kernel_basis_biorthogonal(fr, [0, 2])
    expected = np.array([[1.0, -1.0, 0.0, 0.0], [0.0, 0.0, 1.0, -1.0]])
    assert basis.vectors == pytest.approx(expected)
    assert kernel_residual(fr, basis) == pytest.approx(0.0)


def test_biorthogonal_kernel_empty_for_identity():
    basis = kernel_basis_biorthogonal(identity_frame(2), [])
    assert basis.dim == 0
    assert basis.vectors.shape == (0, 2)


@pytest.mark.parametrize("sigma", [[0, 1], [0], [0, 1, 2]])
def test_biorthogonal_kernel_rejects_bad_deletions(sigma):
    with pytest.raises(InvalidDeletionError):
        kernel_basis_biorthogonal(doubled_frame(np.eye(2)), sigma)


@pytest.mark.parametrize("s", range(5))
def test_kernel_constructions_span_the_same_space(s):
    fr = random_frame(3, 7, seed=s)
    sigma = deletion_search(fr)
    residual = subspace_residual(
        kernel_basis_numerical(fr).vectors,
        kernel_basis_biorthogonal(fr, sigma).vectors,
    )
    assert residual <= 1e-9


def test_deletion_search_on_identity_and_doubled():
    assert deletion_search(identity_frame(3)) == ()
    sigma = deletion_search(doubled_frame(np.eye(2)))
    assert len(sigma) == 2
    # one copy of each duplicate pair
    assert sorted(i // 2 for i in sigma) == [0, 1]


def test_lexicographic_deletion_is_least_witness():
    assert deletion_search(doubled_frame(np.eye(2)), lexicographic=True) == (0, 2)
    fr = random_frame(3, 5, seed=9)
    assert deletion_search(fr, lexicographic=True) == (0, 1)


def test_deletion_search_random_witness_is_basis():
    fr = random_frame(3, 5, seed=1)
    sigma = deletion_search(fr)
    assert len(sigma) == 2
    assert delete(fr, sigma).is_basis


def test_deletion_search_falls_back_to_enumeration(monkeypatch):
    import framekit.core.operators as ops

    fr = doubled_frame(np.eye(2))
    monkeypatch.setattr(ops, "_pivot_witness", lambda _fr: (0, 1))
    assert deletion_search(fr) == (0, 2)


def test_enumeration_cap(monkeypatch):
    import framekit.core.operators as ops

    monkeypatch.setattr(ops, "_pivot_witness", lambda _fr: (0, 1))
    monkeypatch.setattr(cfg.settings, "deletion_enum_cap", 1)
    with pytest.raises(EnumerationCapError):
        deletion_search(doubled_frame(np.eye(2)))


def test_deletion_search_requires_spanning_vectors():
    fr = FiniteFrame(np.array([[1.0, 1.0], [0.0, 0.0]]), np.zeros((2, 2)))
    with pytest.raises(InternalInconsistencyError):
        deletion_search(fr)


@pytest.mark.parametrize(
    "fr,expected",
    [
        (identity_frame(3), 0),
        (doubled_frame(np.eye(8)), 8),
        (random_frame(4, 9, seed=0), 5),
    ],
)
def test_excess_routes_agree(fr, expected):
    rep = excess(fr)
    assert rep.agree
    assert rep.kernel_dim == rep.deletion_excess == expected
    assert len(rep.witness_sigma) == expected


def test_basis_equivalence_on_doubled_frame():
    eq = basis_equivalence(doubled_frame(np.eye(2)), [1, 3], trials=200, seed=0)
    # survivors are orthonormal: the full segment dominates every other
    assert eq.upper <= 1.0 + 1e-12
    assert eq.lower > 0.0


def test_basis_equivalence_rejects_non_basis_deletion():
    with pytest.raises(InvalidDeletionError):
        basis_equivalence(doubled_frame(np.eye(2)), [0, 1])


def test_tail_injectivity_index():
    ti = tail_injectivity(doubled_frame(np.eye(2)))
    # tail from index 3 is {x_3} alone; from 2 it is {z_2, z_2}
    assert ti.index == 3
    assert ti.gap > 0.0
    assert tail_injectivity(identity_frame(2)).index == 0
