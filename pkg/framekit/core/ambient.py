# framekit/core/ambient.py
"""
Finite-dimensional normed-space primitives: l_p norms, matrix carriers and
tolerance-aware rank / kernel computation.

Kernels are returned as rows of an orthonormal (l_2) basis whatever the
ambient norm; norms are applied by callers per use.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
import scipy.linalg

import config as cfg
from .errors import InvalidNormError, StructuralError

log = logging.getLogger("framekit.ambient")

# Point: length-d real array. LinearMap: d_out x d_in real matrix.
Point = np.ndarray
LinearMap = np.ndarray


@dataclass(frozen=True)
class NormSpec:
    p: float = 2.0
    kind: str = "lp"

    def __post_init__(self) -> None:
        p = float(self.p)
        if math.isnan(p) or p < 1.0:
            raise InvalidNormError(f"l_p norm needs p >= 1 or p = inf; got p={self.p}")
        object.__setattr__(self, "p", p)

    @property
    def is_inf(self) -> bool:
        return math.isinf(self.p)

    @classmethod
    def parse(cls, value: Union[float, int, str, "NormSpec"]) -> "NormSpec":
        """Accept 2, 2.0, "2", "inf", "infinity" or an existing NormSpec."""
        if isinstance(value, NormSpec):
            return value
        if isinstance(value, str):
            vv = value.strip().lower()
            if vv in {"inf", "infinity", "max"}:
                return cls(math.inf)
            try:
                return cls(float(vv))
            except ValueError as e:
                raise InvalidNormError(f"cannot read norm exponent {value!r}") from e
        return cls(float(value))

    def label(self) -> Union[float, str]:
        return "inf" if self.is_inf else self.p


def as_point(v, d: Optional[int] = None) -> Point:
    arr = np.asarray(v, dtype=np.float64)
    if arr.ndim != 1:
        raise StructuralError(f"expected a 1-d vector; got shape {arr.shape}")
    if d is not None and arr.shape[0] != d:
        raise StructuralError(f"expected length {d}; got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise StructuralError("vector has non-finite entries")
    return arr


def as_linear_map(m) -> LinearMap:
    arr = np.asarray(m, dtype=np.float64)
    if arr.ndim != 2:
        raise StructuralError(f"expected a matrix; got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise StructuralError("matrix has non-finite entries")
    return arr


def norm(v, spec: NormSpec) -> float:
    arr = np.asarray(v, dtype=np.float64)
    if arr.size == 0:
        return 0.0
    if spec.is_inf:
        return float(np.max(np.abs(arr)))
    return float(np.linalg.norm(arr.ravel(), ord=spec.p))


def norms(stack: np.ndarray, spec: NormSpec) -> np.ndarray:
    """l_p norms along the last axis of an array of points."""
    arr = np.asarray(stack, dtype=np.float64)
    if arr.shape[-1] == 0:
        return np.zeros(arr.shape[:-1])
    if spec.is_inf:
        return np.max(np.abs(arr), axis=-1)
    if spec.p == 1.0:
        return np.sum(np.abs(arr), axis=-1)
    if spec.p == 2.0:
        return np.sqrt(np.sum(arr * arr, axis=-1))
    return np.sum(np.abs(arr) ** spec.p, axis=-1) ** (1.0 / spec.p)


@dataclass(frozen=True)
class RankTolerance:
    """Singular value cutoff sigma_max * max(d_out, d_in) * rel, unless absolute is set."""

    rel: Optional[float] = None
    absolute: Optional[float] = None

    def threshold(self, singular_values: np.ndarray, shape: tuple[int, int]) -> float:
        if self.absolute is not None:
            return float(self.absolute)
        rel = cfg.settings.rank_rel_tol if self.rel is None else self.rel
        smax = float(singular_values[0]) if singular_values.size else 0.0
        return smax * max(shape) * rel


@dataclass(frozen=True)
class RankKernel:
    rank: int
    kernel: np.ndarray  # (d_in - rank) x d_in, orthonormal rows
    singular_values: np.ndarray
    threshold: float

    @property
    def nullity(self) -> int:
        return int(self.kernel.shape[0])


def rank_kernel(m, tol: Optional[RankTolerance] = None) -> RankKernel:
    mat = as_linear_map(m)
    tol = tol or RankTolerance()
    d_out, d_in = mat.shape

    if mat.size == 0:
        return RankKernel(0, np.eye(d_in), np.zeros(0), 0.0)

    _u, s, vt = scipy.linalg.svd(mat, full_matrices=True, lapack_driver="gesvd")
    thr = tol.threshold(s, mat.shape)
    rank = int(np.count_nonzero(s > thr))
    kernel = vt[rank:].copy()
    log.debug("rank_kernel | shape=%s rank=%d thr=%.3e", mat.shape, rank, thr)
    return RankKernel(rank, kernel, s, thr)


def numerical_rank(m, tol: Optional[RankTolerance] = None) -> int:
    return rank_kernel(m, tol).rank


def row_span_basis(rows: np.ndarray, tol: Optional[RankTolerance] = None) -> np.ndarray:
    """Orthonormal rows spanning the row space of `rows`."""
    mat = np.atleast_2d(np.asarray(rows, dtype=np.float64))
    if mat.shape[0] == 0:
        return np.zeros((0, mat.shape[1]))
    _u, s, vt = scipy.linalg.svd(mat, full_matrices=False, lapack_driver="gesvd")
    thr = (tol or RankTolerance()).threshold(s, mat.shape)
    return vt[: int(np.count_nonzero(s > thr))]


def subspace_residual(a_rows: np.ndarray, b_rows: np.ndarray) -> float:
    """
    Mutual projection residual of two row spans: the largest l_2 distance of a
    unit vector of either span from the other span. 0 means equal spans.
    """
    qa = row_span_basis(a_rows)
    qb = row_span_basis(b_rows)
    if qa.shape[0] != qb.shape[0]:
        return math.inf if (qa.shape[0] or qb.shape[0]) else 0.0
    if qa.shape[0] == 0:
        return 0.0
    res_a = qa - (qa @ qb.T) @ qb
    res_b = qb - (qb @ qa.T) @ qa
    return float(max(np.max(np.linalg.norm(res_a, axis=1)), np.max(np.linalg.norm(res_b, axis=1))))
