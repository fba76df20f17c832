# framekit/core/operators.py
"""
Minimal-associated reconstruction S: a -> sum a_i x_i, decomposition
T: x -> (f_i(x)), the projector Q = Id - T S onto ker S, kernel bases and the
excess computed twice: as dim ker S and as the size of a deleted set leaving
a basis.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Literal, Optional, Tuple

import numpy as np
import scipy.linalg

import config as cfg
from .ambient import as_point, norms, numerical_rank, rank_kernel
from .errors import (
    EnumerationCapError,
    InternalInconsistencyError,
    InvalidDeletionError,
    InvalidParameterError,
)
from .frame import FiniteFrame, delete, index_set
from .minseq import as_coeffs, min_norm_batch

log = logging.getLogger("framekit.operators")


@dataclass(frozen=True)
class ReconOp:
    frame: FiniteFrame

    @property
    def matrix(self) -> np.ndarray:
        return self.frame.vectors

    def __call__(self, a) -> np.ndarray:
        return s_apply(self.frame, a)


@dataclass(frozen=True)
class DecompOp:
    frame: FiniteFrame

    @property
    def matrix(self) -> np.ndarray:
        return self.frame.functionals.T

    def __call__(self, x) -> np.ndarray:
        return t_apply(self.frame, x)


@dataclass(frozen=True)
class KernelBasis:
    vectors: np.ndarray  # dim x N, rows are coefficient vectors in ker S
    construction: Literal["numerical", "biorthogonal"]
    sigma: Optional[Tuple[int, ...]] = None

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[0])


@dataclass(frozen=True)
class ExcessReport:
    kernel_dim: int
    deletion_excess: int
    witness_sigma: Tuple[int, ...]
    agree: bool


@dataclass(frozen=True)
class OperatorNorms:
    S_norm_lower: float
    T_norm_lower: float


def s_apply(fr: FiniteFrame, a) -> np.ndarray:
    return fr.vectors @ as_coeffs(fr, a)


def t_apply(fr: FiniteFrame, x) -> np.ndarray:
    return fr.functionals.T @ as_point(x, fr.d)


def operator_norms(fr: FiniteFrame, trials: Optional[int] = None, seed: Optional[int] = None) -> OperatorNorms:
    """
    Sampled lower bounds on ||S_min|| and ||T_min||. The S sample contains the
    unit vectors e_i and the normalised images T x of the T sample, so the
    product of the two bounds is >= 1 (S T = Id).
    """
    s = cfg.settings
    trials = s.sample_trials if trials is None else int(trials)
    seed = s.seed if seed is None else int(seed)
    if trials < 1:
        raise InvalidParameterError("trials must be >= 1")
    rng = np.random.default_rng(seed)

    xs = rng.standard_normal((trials, fr.d))
    xs = xs / norms(xs, fr.norm)[:, np.newaxis]
    tx = xs @ fr.functionals
    tx_norms = min_norm_batch(fr, tx)
    T_lower = float(np.max(tx_norms))

    coeffs = np.vstack([np.eye(fr.N), rng.standard_normal((trials, fr.N)), tx])
    mins = min_norm_batch(fr, coeffs)
    keep = mins > 0.0
    images = (coeffs[keep] @ fr.vectors.T) / mins[keep][:, np.newaxis]
    S_lower = float(np.max(norms(images, fr.norm))) if images.size else 0.0
    return OperatorNorms(S_norm_lower=S_lower, T_norm_lower=T_lower)


def projector_q(fr: FiniteFrame) -> np.ndarray:
    """Q = Id_N - T S; its range is ker S."""
    return np.eye(fr.N) - fr.functionals.T @ fr.vectors


def direct_sum_split(fr: FiniteFrame, a) -> Tuple[np.ndarray, np.ndarray]:
    """a = Q a + T S a with Q a in ker S and T S a in T(X)."""
    coeffs = as_coeffs(fr, a)
    image = fr.functionals.T @ (fr.vectors @ coeffs)
    return coeffs - image, image


def kernel_basis_numerical(fr: FiniteFrame) -> KernelBasis:
    return KernelBasis(vectors=rank_kernel(fr.vectors).kernel, construction="numerical")


def kernel_basis_biorthogonal(fr: FiniteFrame, sigma: Iterable[int]) -> KernelBasis:
    """
    For k in sigma, u_k = e_k - sum_{i not in sigma} x_i*(x_k) e_i, with x_i*
    the biorthogonal functionals of the surviving basis (rows of its inverse).
    """
    removed = index_set(sigma, fr.N)
    cut = delete(fr, removed)
    if not cut.is_basis or len(removed) != fr.N - fr.d:
        raise InvalidDeletionError(
            f"deleting {list(removed)} does not leave a basis of the {fr.d}-dimensional space"
        )
    if not removed:
        return KernelBasis(vectors=np.zeros((0, fr.N)), construction="biorthogonal", sigma=())

    coords = scipy.linalg.solve(cut.survivors, fr.vectors[:, list(removed)])
    basis = np.zeros((len(removed), fr.N))
    for row, k in enumerate(removed):
        basis[row, k] = 1.0
        basis[row, list(cut.kept)] = -coords[:, row]
    return KernelBasis(vectors=basis, construction="biorthogonal", sigma=removed)


# ---------- Deletion search ----------

def _pivot_witness(fr: FiniteFrame) -> Tuple[int, ...]:
    _q, _r, piv = scipy.linalg.qr(fr.vectors, pivoting=True, mode="economic")
    return tuple(sorted(int(j) for j in piv[fr.d :]))


def _lexicographic_witness(fr: FiniteFrame) -> Tuple[int, ...]:
    """
    Delete index i whenever the remaining columns still span. Indices kept on
    the way are coloops of the remaining set, so the result is the least
    witness in lexicographic order.
    """
    target = fr.N - fr.d
    removed: list[int] = []
    for i in range(fr.N):
        if len(removed) == target:
            break
        trial = set(removed) | {i}
        rest = [j for j in range(fr.N) if j not in trial]
        if numerical_rank(fr.vectors[:, rest]) == fr.d:
            removed.append(i)
    return tuple(removed)


def _enumerate_witness(fr: FiniteFrame, cap: int) -> Optional[Tuple[int, ...]]:
    size = fr.N - fr.d
    if size > cap:
        raise EnumerationCapError(
            f"exhaustive deletion search needs N - d <= {cap}; got N - d = {size}"
        )
    for sigma in itertools.combinations(range(fr.N), size):
        if delete(fr, sigma).is_basis:
            return tuple(sigma)
    return None


def deletion_search(fr: FiniteFrame, lexicographic: bool = False) -> Tuple[int, ...]:
    """
    A set sigma with |sigma| = N - d whose complement is a basis. Greedy route
    first (pivoted QR, or the lexicographic scan), then exhaustive enumeration
    in lexicographic order when the greedy witness fails.
    """
    if fr.N < fr.d or numerical_rank(fr.vectors) < fr.d:
        raise InternalInconsistencyError(
            "vectors do not span the ambient space; the frame fails validation"
        )
    greedy = _lexicographic_witness(fr) if lexicographic else _pivot_witness(fr)
    if len(greedy) == fr.N - fr.d and delete(fr, greedy).is_basis:
        log.debug("deletion_search | greedy witness %s", greedy)
        return greedy

    log.warning("deletion_search | greedy witness %s rejected; enumerating", greedy)
    found = _enumerate_witness(fr, cfg.settings.deletion_enum_cap)
    if found is None:
        raise InternalInconsistencyError("no deletion leaves a basis; the frame fails validation")
    return found


def excess(fr: FiniteFrame) -> ExcessReport:
    kernel_dim = kernel_basis_numerical(fr).dim
    sigma = deletion_search(fr)
    report = ExcessReport(
        kernel_dim=kernel_dim,
        deletion_excess=len(sigma),
        witness_sigma=sigma,
        agree=kernel_dim == len(sigma),
    )
    if not report.agree:
        log.warning("excess | kernel dim %d != deletion excess %d", kernel_dim, len(sigma))
    return report


# ---------- Tail structure ----------

@dataclass(frozen=True)
class BasisEquivalence:
    lower: float
    upper: float
    trials: int


def basis_equivalence(
    fr: FiniteFrame,
    sigma: Iterable[int],
    trials: Optional[int] = None,
    seed: Optional[int] = None,
) -> BasisEquivalence:
    """
    Sampled constants lower <= ||sum a_i x_i|| / ||sum a_i e^_i||_min <= upper
    over a supported off sigma. The full segment gives upper <= 1; lower > 0
    exactly when the survivors are independent.
    """
    removed = index_set(sigma, fr.N)
    cut = delete(fr, removed)
    if not cut.is_basis:
        raise InvalidDeletionError(f"deleting {list(removed)} does not leave a basis")
    s = cfg.settings
    trials = s.sample_trials if trials is None else int(trials)
    seed = s.seed if seed is None else int(seed)
    rng = np.random.default_rng(seed)

    coeffs = np.zeros((trials + fr.d, fr.N))
    kept = list(cut.kept)
    coeffs[:trials, kept] = rng.standard_normal((trials, len(kept)))
    coeffs[trials:, kept] = np.eye(len(kept))
    mins = min_norm_batch(fr, coeffs)
    images = norms(coeffs @ fr.vectors.T, fr.norm)
    ratios = images / mins
    return BasisEquivalence(lower=float(ratios.min()), upper=float(ratios.max()), trials=trials)


@dataclass(frozen=True)
class TailInjectivity:
    index: int  # least n with ker S meeting span{e_i : i >= n} only in 0
    gap: float  # sigma_min of T S on the tail coordinates (l_2)


def tail_injectivity(fr: FiniteFrame) -> TailInjectivity:
    """
    Least n such that S is injective on span{e_i : i >= n}; at that n, T S
    restricted to the tail is bounded below by `gap` (the finite form of
    inf ||u - Q u|| > 0 over unit tail vectors).
    """
    ts = fr.functionals.T @ fr.vectors
    for n in range(fr.N + 1):
        tail = fr.vectors[:, n:]
        if tail.shape[1] == 0 or rank_kernel(tail).nullity == 0:
            svals = scipy.linalg.svdvals(ts[:, n:]) if tail.shape[1] else np.zeros(0)
            gap = float(svals.min()) if svals.size else 0.0
            return TailInjectivity(index=n, gap=gap)
    raise InternalInconsistencyError("unreachable: the empty tail is always injective")  # pragma: no cover


def kernel_residual(fr: FiniteFrame, basis: KernelBasis) -> float:
    """max ||S u|| over the basis rows (ambient norm)."""
    if basis.dim == 0:
        return 0.0
    return float(np.max(norms(basis.vectors @ fr.vectors.T, fr.norm)))
