# framekit/core/frame.py
"""
Truncated Schauder frames (x_i, f_i) in a d-dimensional normed space, the
frame-identity check and the frame generators.

Functionals act by the plain inner pairing f(x) = sum f[i] * x[i]; the frame
identity sum_j f_j(x) x_j = x is vectors @ functionals.T == Id_d.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

import config as cfg
from .ambient import NormSpec, as_linear_map, norms, rank_kernel
from .errors import InvalidBasisError, StructuralError

log = logging.getLogger("framekit.frame")

# Resampling guard for random_frame; a Gaussian matrix is full rank almost surely.
_MAX_RESAMPLES = 64


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=np.float64, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class FiniteFrame:
    """
    vectors:     d x N, column j is x_j
    functionals: d x N, column j is f_j
    """

    vectors: np.ndarray
    functionals: np.ndarray
    norm: NormSpec = field(default_factory=NormSpec)

    def __post_init__(self) -> None:
        v = as_linear_map(self.vectors)
        f = as_linear_map(self.functionals)
        if v.shape != f.shape:
            raise StructuralError(
                f"vectors {v.shape} and functionals {f.shape} must have the same shape"
            )
        if v.shape[0] < 1:
            raise StructuralError("ambient dimension must be >= 1")
        object.__setattr__(self, "vectors", _frozen(v))
        object.__setattr__(self, "functionals", _frozen(f))
        object.__setattr__(self, "norm", NormSpec.parse(self.norm))

    @property
    def d(self) -> int:
        return int(self.vectors.shape[0])

    @property
    def N(self) -> int:
        return int(self.vectors.shape[1])

    def vector(self, j: int) -> np.ndarray:
        return self.vectors[:, j]

    def functional(self, j: int) -> np.ndarray:
        return self.functionals[:, j]


@dataclass(frozen=True)
class ValidationReport:
    residual: float
    ok: bool
    zero_columns: Tuple[int, ...]


@dataclass(frozen=True)
class DeletionResult:
    survivors: np.ndarray  # d x |complement|
    kept: Tuple[int, ...]
    is_basis: bool


def zero_columns(fr: FiniteFrame) -> Tuple[int, ...]:
    """Indices j with x_j = 0 or f_j = 0 (stricter than the frame identity needs)."""
    zv = ~np.any(fr.vectors != 0.0, axis=0)
    zf = ~np.any(fr.functionals != 0.0, axis=0)
    return tuple(int(j) for j in np.flatnonzero(zv | zf))


def frame_residual(fr: FiniteFrame) -> float:
    gram = fr.vectors @ fr.functionals.T
    return float(np.max(np.abs(gram - np.eye(fr.d))))


def validate(fr: FiniteFrame, tol: Optional[float] = None) -> ValidationReport:
    tol = cfg.settings.validation_tol if tol is None else float(tol)
    residual = frame_residual(fr)
    zeros = zero_columns(fr)
    ok = residual <= tol and not zeros
    if not ok:
        log.debug("validate | residual=%.3e tol=%.1e zero_columns=%s", residual, tol, zeros)
    return ValidationReport(residual=residual, ok=ok, zero_columns=zeros)


# ---------- Generators ----------

def identity_frame(d: int, norm: NormSpec | float | str = 2.0) -> FiniteFrame:
    eye = np.eye(int(d))
    return FiniteFrame(eye, eye, NormSpec.parse(norm))


def _check_basis(z: np.ndarray) -> np.ndarray:
    mat = as_linear_map(z)
    if mat.shape[0] != mat.shape[1]:
        raise InvalidBasisError(f"basis matrix must be square; got {mat.shape}")
    if rank_kernel(mat).rank != mat.shape[0]:
        raise InvalidBasisError("basis matrix is singular at rank tolerance")
    return mat


def normalize_columns(z, norm: NormSpec | float | str = 2.0) -> np.ndarray:
    """Scale each column of z to unit ambient norm."""
    mat = _check_basis(z)
    col_norms = norms(mat.T, NormSpec.parse(norm))
    return mat / col_norms[np.newaxis, :]


def repeated_frame(
    z,
    multiplicities: Sequence[int],
    norm: NormSpec | float | str = 2.0,
) -> FiniteFrame:
    """
    Repeat basis vector z_k m_k times; each copy carries the functional z*_k / m_k,
    where z*_k is row k of Z^{-1}.
    """
    mat = _check_basis(z)
    d = mat.shape[0]
    mult = [int(m) for m in multiplicities]
    if len(mult) != d or any(m < 1 for m in mult):
        raise StructuralError(f"need {d} multiplicities >= 1; got {multiplicities!r}")

    z_dual = scipy.linalg.inv(mat)
    cols_x: list[np.ndarray] = []
    cols_f: list[np.ndarray] = []
    for k, m in enumerate(mult):
        for _ in range(m):
            cols_x.append(mat[:, k])
            cols_f.append(z_dual[k, :] / m)
    return FiniteFrame(np.column_stack(cols_x), np.column_stack(cols_f), NormSpec.parse(norm))


def doubled_frame(z, norm: NormSpec | float | str = 2.0) -> FiniteFrame:
    """x_{2k} = x_{2k+1} = z_k and f_{2k} = f_{2k+1} = z*_k / 2 (0-based)."""
    mat = _check_basis(z)
    return repeated_frame(mat, [2] * mat.shape[0], norm)


def random_frame(
    d: int,
    N: int,
    seed: int,
    norm: NormSpec | float | str = 2.0,
) -> FiniteFrame:
    """
    Gaussian vectors resampled until rank d; functionals are the canonical
    dual, the columns of pinv(V)^T, so V F^T = Id up to rounding.
    """
    d, N = int(d), int(N)
    if d < 1 or N < d:
        raise StructuralError(f"random_frame needs 1 <= d <= N; got d={d}, N={N}")
    rng = np.random.default_rng(seed)
    for attempt in range(_MAX_RESAMPLES):
        v = rng.standard_normal((d, N))
        if rank_kernel(v).rank == d:
            break
        log.debug("random_frame | resample %d (rank deficient)", attempt + 1)
    else:  # pragma: no cover - probability zero
        raise StructuralError("could not draw a full-rank frame")
    f = scipy.linalg.pinv(v).T
    return FiniteFrame(v, f, NormSpec.parse(norm))


# ---------- Deletion ----------

def index_set(sigma: Iterable[int], N: int) -> Tuple[int, ...]:
    idx = sorted({int(i) for i in sigma})
    if idx and (idx[0] < 0 or idx[-1] >= N):
        raise StructuralError(f"index set {idx} not inside 0..{N - 1}")
    return tuple(idx)


def delete(fr: FiniteFrame, sigma: Iterable[int]) -> DeletionResult:
    removed = set(index_set(sigma, fr.N))
    kept = tuple(j for j in range(fr.N) if j not in removed)
    survivors = fr.vectors[:, list(kept)]
    is_basis = survivors.shape[1] == fr.d and rank_kernel(survivors).rank == fr.d
    return DeletionResult(survivors=survivors, kept=kept, is_basis=bool(is_basis))
