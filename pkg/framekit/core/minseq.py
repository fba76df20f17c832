# framekit/core/minseq.py
"""
The minimal-associated sequence-space norm

    ||sum a_i e_i||_min = max_{m <= n} || sum_{i=m}^{n} a_i x_i ||_X

evaluated through prefix sums P_0 = 0, P_n = sum_{i<n} a_i x_i, so each
segment [m, n] costs one subtraction and one ambient norm. Indices are
0-based and segments inclusive.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

import config as cfg
from .ambient import NormSpec, as_point, norm, norms
from .errors import InvalidParameterError, StructuralError
from .frame import FiniteFrame

log = logging.getLogger("framekit.minseq")

CoeffVec = np.ndarray
CoeffNorm = Callable[[np.ndarray], float]

# Max floats materialised per chunk by the batched evaluation (P x N x N x d).
_BATCH_BUDGET = 4_000_000


def as_coeffs(fr: FiniteFrame, a) -> CoeffVec:
    arr = np.asarray(a, dtype=np.float64)
    if arr.ndim != 1 or arr.shape[0] != fr.N:
        raise StructuralError(f"coefficient vector must have length N={fr.N}; got shape {arr.shape}")
    return as_point(arr)


@dataclass(frozen=True)
class SegmentTable:
    prefix: np.ndarray  # (N + 1) x d, prefix[0] = 0
    norm_spec: NormSpec

    @classmethod
    def build(cls, fr: FiniteFrame, a) -> "SegmentTable":
        coeffs = as_coeffs(fr, a)
        terms = fr.vectors.T * coeffs[:, np.newaxis]
        prefix = np.zeros((fr.N + 1, fr.d))
        np.cumsum(terms, axis=0, out=prefix[1:])
        return cls(prefix=prefix, norm_spec=fr.norm)

    @property
    def N(self) -> int:
        return int(self.prefix.shape[0] - 1)

    def segment(self, m: int, n: int) -> np.ndarray:
        return self.prefix[n + 1] - self.prefix[m]

    def seg_norm(self, m: int, n: int) -> float:
        return norm(self.segment(m, n), self.norm_spec)

    def all_norms(self) -> np.ndarray:
        """N x N array, entry [m, n] = seg_norm(m, n) for m <= n and 0 below the diagonal."""
        diffs = self.prefix[np.newaxis, 1:, :] - self.prefix[:-1, np.newaxis, :]
        table = norms(diffs, self.norm_spec)
        return np.triu(table)


def min_norm(fr: FiniteFrame, a) -> float:
    table = SegmentTable.build(fr, a)
    if fr.N == 0:
        return 0.0
    return float(np.max(table.all_norms()))


def argmax_segment(fr: FiniteFrame, a) -> Tuple[float, Tuple[int, int]]:
    """min_norm together with the first segment (m, n) attaining it."""
    table = SegmentTable.build(fr, a).all_norms()
    if fr.N == 0:
        return 0.0, (0, 0)
    flat = int(np.argmax(table))
    m, n = divmod(flat, fr.N)
    return float(table[m, n]), (m, n)


def min_norm_naive(fr: FiniteFrame, a) -> float:
    coeffs = as_coeffs(fr, a)
    best = 0.0
    for m in range(fr.N):
        for n in range(m, fr.N):
            seg = fr.vectors[:, m : n + 1] @ coeffs[m : n + 1]
            best = max(best, norm(seg, fr.norm))
    return best


def min_norm_batch(fr: FiniteFrame, coeffs: np.ndarray) -> np.ndarray:
    """min_norm of every row of a P x N coefficient array."""
    rows = np.atleast_2d(np.asarray(coeffs, dtype=np.float64))
    if rows.shape[1] != fr.N:
        raise StructuralError(f"coefficient rows must have length N={fr.N}; got {rows.shape[1]}")
    P, N, d = rows.shape[0], fr.N, fr.d
    out = np.zeros(P)
    if N == 0 or P == 0:
        return out

    upper = np.triu(np.ones((N, N), dtype=bool))
    chunk = max(1, _BATCH_BUDGET // max(1, N * N * d))
    vt = fr.vectors.T
    for start in range(0, P, chunk):
        block = rows[start : start + chunk]
        prefix = np.zeros((block.shape[0], N + 1, d))
        np.cumsum(block[:, :, np.newaxis] * vt[np.newaxis, :, :], axis=1, out=prefix[:, 1:, :])
        diffs = prefix[:, np.newaxis, 1:, :] - prefix[:, :-1, np.newaxis, :]
        table = norms(diffs, fr.norm)
        out[start : start + chunk] = np.max(np.where(upper, table, 0.0), axis=(1, 2))
    return out


def restricted_min_norm(fr: FiniteFrame, a, m: int, n: int) -> float:
    """min_norm of a with every entry outside [m, n] zeroed."""
    coeffs = as_coeffs(fr, a)
    if not (0 <= m <= n < fr.N):
        raise StructuralError(f"bad interval [{m}, {n}] for N={fr.N}")
    cut = np.zeros_like(coeffs)
    cut[m : n + 1] = coeffs[m : n + 1]
    return min_norm(fr, cut)


def tail_profile(fr: FiniteFrame, a) -> np.ndarray:
    """r[m] = max over segments [p, q] with m <= p <= q of the segment norm."""
    if fr.N == 0:
        return np.zeros(0)
    table = SegmentTable.build(fr, a).all_norms()
    row_max = table.max(axis=1)
    return np.maximum.accumulate(row_max[::-1])[::-1].copy()


def is_degenerate(fr: FiniteFrame) -> bool:
    """
    True when min_norm can vanish on a nonzero vector. Single segments give
    min_norm(a) >= max |a_i| ||x_i||, so this happens only with some x_i = 0.
    """
    degenerate = bool(np.any(~np.any(fr.vectors != 0.0, axis=0)))
    if degenerate:
        log.warning("degenerate truncation: some x_i = 0, min-norm is only a seminorm")
    return degenerate


def lp_coefficient_norm(p: float | str = 2.0) -> CoeffNorm:
    spec = NormSpec.parse(p)
    return lambda a: norm(a, spec)


@dataclass(frozen=True)
class MinimalityReport:
    worst_ratio: float
    witness: np.ndarray
    trials: int

    @property
    def holds(self) -> bool:
        return self.worst_ratio <= 1.0 + 1e-9


def check_minimality(
    fr: FiniteFrame,
    assoc_norm: CoeffNorm,
    K: float,
    S_norm: float,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
) -> MinimalityReport:
    """
    Sampled check of ||sum a_i e^_i||_min <= K ||S|| ||sum a_i e_i||_E for an
    associated norm given as a callback. Returns the worst observed ratio.
    """
    if not (K > 0 and S_norm > 0):
        raise InvalidParameterError(f"K and S_norm must be positive; got K={K}, S_norm={S_norm}")
    s = cfg.settings
    trials = s.sample_trials if trials is None else int(trials)
    seed = s.seed if seed is None else int(seed)
    if trials < 1:
        raise InvalidParameterError("trials must be >= 1")

    rng = np.random.default_rng(seed)
    samples = rng.standard_normal((trials, fr.N))
    samples = samples[np.any(samples != 0.0, axis=1)]
    mins = min_norm_batch(fr, samples)
    assoc = np.array([assoc_norm(a) for a in samples])
    ratios = mins / (K * S_norm * assoc)
    worst = int(np.argmax(ratios))
    log.debug("check_minimality | trials=%d worst=%.6f", trials, ratios[worst])
    return MinimalityReport(worst_ratio=float(ratios[worst]), witness=samples[worst].copy(), trials=trials)
