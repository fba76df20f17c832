# framekit/core/hilbert.py
"""
Hilbert frames in R^d (l_2 ambient): frame operator and bounds, canonical
dual, pre-frame operator a -> sum a_i x_i, near-Riesz excess and the
Besselian constant 1 / sigma_min^+ of the pre-frame operator.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import scipy.linalg

import config as cfg
from .ambient import NormSpec, as_linear_map, rank_kernel
from .errors import NotAFrameError, StructuralError
from .frame import FiniteFrame

log = logging.getLogger("framekit.hilbert")


@dataclass(frozen=True)
class HilbertFrame:
    vectors: np.ndarray  # d x N

    def __post_init__(self) -> None:
        v = as_linear_map(self.vectors)
        if v.shape[0] < 1:
            raise StructuralError("ambient dimension must be >= 1")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)

    @property
    def d(self) -> int:
        return int(self.vectors.shape[0])

    @property
    def N(self) -> int:
        return int(self.vectors.shape[1])


@dataclass(frozen=True)
class HilbertReport:
    frame_bounds: Tuple[float, float]
    excess: int
    besselian_constant: float
    is_parseval: bool


def frame_operator(hf: HilbertFrame) -> np.ndarray:
    """sum_i x_i x_i^T."""
    v = hf.vectors
    return v @ v.T


def frame_bounds(hf: HilbertFrame) -> Tuple[float, float]:
    eig = scipy.linalg.eigvalsh(frame_operator(hf))
    return float(max(eig[0], 0.0)), float(eig[-1])


def _require_frame(hf: HilbertFrame, tol: Optional[float]) -> Tuple[float, float]:
    tol = cfg.settings.frame_bound_tol if tol is None else tol
    lo, hi = frame_bounds(hf)
    if lo <= tol:
        raise NotAFrameError(f"lower frame bound {lo:.3e} is not positive; the vectors do not span R^{hf.d}")
    return lo, hi


def canonical_dual(hf: HilbertFrame, tol: Optional[float] = None) -> FiniteFrame:
    """f_i = S^{-1} x_i paired with x_i, as a Schauder frame with l_2 ambient norm."""
    _require_frame(hf, tol)
    dual = scipy.linalg.solve(frame_operator(hf), hf.vectors, assume_a="pos")
    return FiniteFrame(hf.vectors, dual, NormSpec(2.0))


def pre_frame_norm(hf: HilbertFrame) -> float:
    """Operator norm l_2 -> l_2 of a -> sum a_i x_i."""
    svals = scipy.linalg.svdvals(hf.vectors)
    return float(svals[0]) if svals.size else 0.0


def near_riesz_report(hf: HilbertFrame, tol: Optional[float] = None) -> HilbertReport:
    bounds = _require_frame(hf, tol)
    rk = rank_kernel(hf.vectors)
    positive = rk.singular_values[rk.singular_values > rk.threshold]
    besselian = 1.0 / float(positive.min()) if positive.size else math.inf
    parseval = bool(
        np.max(np.abs(frame_operator(hf) - np.eye(hf.d))) <= cfg.settings.parseval_tol
    )
    report = HilbertReport(
        frame_bounds=bounds,
        excess=hf.N - rk.rank,
        besselian_constant=besselian,
        is_parseval=parseval,
    )
    log.debug("near_riesz_report | %s", report)
    return report


# ---------- Generators ----------

def orthonormal_frame(d: int) -> HilbertFrame:
    return HilbertFrame(np.eye(int(d)))


def mercedes_frame() -> HilbertFrame:
    """Three unit vectors of R^2 at 120 degrees; frame operator (3/2) Id."""
    angles = np.pi / 2 + np.array([0.0, 2.0, 4.0]) * np.pi / 3
    return HilbertFrame(np.vstack([np.cos(angles), np.sin(angles)]))


def doubled_orthonormal_frame(d: int) -> HilbertFrame:
    """Each e_k twice, in the order e_1, e_1, e_2, e_2, ..."""
    return HilbertFrame(np.repeat(np.eye(int(d)), 2, axis=1))
