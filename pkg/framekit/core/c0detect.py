# framekit/core/c0detect.py
"""
Finite c0-distortion measurement for block sequences of the min-norm basis.

For blocks u_1..u_K the constants satisfy

    A max|a_k| <= ||sum a_k u_k||_min <= B max|a_k|.

f(a) = ||sum a_k u_k||_min is a seminorm, so over the cube max|a_k| = 1 the
maximum sits at a vertex (B is exact over 2^(K-1) sign patterns, f(-a) = f(a))
and the minimum sits on a face a_j = 1, which is scanned on a grid and then
polished by coordinate descent (A is an upper estimate).
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np
import scipy.optimize

import config as cfg
from .ambient import norm, rank_kernel
from .errors import EnumerationCapError, InvalidParameterError, StructuralError
from .frame import FiniteFrame
from .minseq import min_norm, min_norm_batch

log = logging.getLogger("framekit.c0detect")

A_MODE = "vertex-and-face-sampled"


def numerical_support(a: np.ndarray, tol: Optional[float] = None) -> np.ndarray:
    tol = cfg.settings.support_tol if tol is None else tol
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    if scale == 0.0:
        return np.zeros(0, dtype=int)
    return np.flatnonzero(np.abs(a) > tol * scale)


@dataclass(frozen=True)
class BlockSeq:
    blocks: np.ndarray  # K x N

    def __post_init__(self) -> None:
        arr = np.atleast_2d(np.asarray(self.blocks, dtype=np.float64))
        supports = [numerical_support(row) for row in arr]
        for k, supp in enumerate(supports):
            if supp.size == 0:
                raise StructuralError(f"block {k} is zero")
        for k in range(1, len(supports)):
            if supports[k][0] <= supports[k - 1][-1]:
                raise StructuralError(
                    f"block {k} support starts at {supports[k][0]} inside or before block {k - 1}"
                )
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "blocks", arr)

    @classmethod
    def empty(cls, N: int) -> "BlockSeq":
        return cls(np.zeros((0, N)))

    @property
    def K(self) -> int:
        return int(self.blocks.shape[0])

    @property
    def N(self) -> int:
        return int(self.blocks.shape[1])

    def supports(self) -> List[Tuple[int, int]]:
        out = []
        for row in self.blocks:
            supp = numerical_support(row)
            out.append((int(supp[0]), int(supp[-1])))
        return out


@dataclass(frozen=True)
class C0Constants:
    A: float
    B: float
    distortion: float
    A_mode: str
    resolution: int
    A_witness: np.ndarray
    B_witness: np.ndarray


def block_combination(bs: BlockSeq, a) -> np.ndarray:
    coeffs = np.asarray(a, dtype=np.float64)
    if coeffs.shape != (bs.K,):
        raise StructuralError(f"need {bs.K} block coefficients; got shape {coeffs.shape}")
    return coeffs @ bs.blocks


def _sign_patterns(K: int, chunk: int = 4096) -> Iterator[np.ndarray]:
    """All of {+1} x {-1, +1}^(K-1), in chunks."""
    tails = itertools.product((1.0, -1.0), repeat=K - 1)
    while True:
        batch = list(itertools.islice(tails, chunk))
        if not batch:
            return
        body = np.array(batch, dtype=np.float64).reshape(len(batch), K - 1)
        yield np.hstack([np.ones((len(batch), 1)), body])


def _face_points(K: int, j: int, resolution: int, rng: np.random.Generator, grid_cap: int) -> np.ndarray:
    """Grid nodes on the face a_j = 1 (random subset when the grid is too large)."""
    axis = np.linspace(-1.0, 1.0, resolution)
    free = K - 1
    if free == 0:
        pts = np.zeros((1, 0))
    elif resolution ** free <= grid_cap:
        pts = np.array(list(itertools.product(axis, repeat=free)), dtype=np.float64)
    else:
        pts = rng.choice(axis, size=(grid_cap, free))
    pts = np.vstack([np.zeros((1, free)), pts])
    face = np.insert(pts, j, 1.0, axis=1)
    return face


def _descend(fr: FiniteFrame, bs: BlockSeq, start: np.ndarray, j: int, sweeps: int = 25) -> Tuple[float, np.ndarray]:
    """Coordinate descent on the face a_j = 1; f is convex along each coordinate."""
    a = start.copy()
    value = min_norm(fr, a @ bs.blocks)
    for _ in range(sweeps):
        before = value
        for k in range(bs.K):
            if k == j:
                continue

            def along(t: float, k: int = k) -> float:
                trial = a.copy()
                trial[k] = t
                return min_norm(fr, trial @ bs.blocks)

            res = scipy.optimize.minimize_scalar(along, bounds=(-1.0, 1.0), method="bounded",
                                                 options={"xatol": 1e-10})
            if res.fun < value:
                a[k] = float(res.x)
                value = float(res.fun)
        if before - value <= 1e-14:
            break
    return value, a


def c0_constants(fr: FiniteFrame, bs: BlockSeq, resolution: Optional[int] = None) -> C0Constants:
    s = cfg.settings
    resolution = s.c0_resolution if resolution is None else int(resolution)
    if resolution < 1:
        raise InvalidParameterError("resolution must be >= 1")
    if bs.N != fr.N:
        raise StructuralError(f"blocks have length {bs.N}, frame has N={fr.N}")
    K = bs.K
    if K < 1:
        raise StructuralError("c0 constants need at least one block")
    if K > s.c0_block_cap:
        raise EnumerationCapError(f"exact B enumerates 2^(K-1) sign patterns; K={K} exceeds cap {s.c0_block_cap}")

    # B: exact over vertices
    B, B_witness = -1.0, np.ones(K)
    for patterns in _sign_patterns(K):
        values = min_norm_batch(fr, patterns @ bs.blocks)
        best = int(np.argmax(values))
        if values[best] > B:
            B, B_witness = float(values[best]), patterns[best].copy()

    # A: face scan + descent
    rng = np.random.default_rng(s.seed)
    A, A_witness = math.inf, np.eye(K)[0]
    for j in range(K):
        pts = _face_points(K, j, resolution, rng, s.c0_grid_cap)
        values = min_norm_batch(fr, pts @ bs.blocks)
        start = pts[int(np.argmin(values))]
        value, point = _descend(fr, bs, start, j)
        if value < A:
            A, A_witness = value, point
    log.debug("c0_constants | K=%d A=%.6f B=%.6f", K, A, B)

    distortion = math.sqrt(B / A) if A > 0 else math.inf
    return C0Constants(
        A=float(A),
        B=float(B),
        distortion=distortion,
        A_mode=A_MODE,
        resolution=resolution,
        A_witness=A_witness,
        B_witness=B_witness,
    )


def example_bounds_hold(constants: C0Constants, tol: float = 1e-9) -> Tuple[bool, bool]:
    """(A >= 1 - tol, B <= 2 + tol): the closed-form bounds of the doubled-frame blocks."""
    return constants.A >= 1.0 - tol, constants.B <= 2.0 + tol


def example_blocks(fr: FiniteFrame, tol: float = 1e-12) -> BlockSeq:
    """u_k = e_{2k+1} - e_{2k} for a doubled frame x_{2k} = x_{2k+1}."""
    if fr.N % 2:
        raise StructuralError(f"a doubled frame has even length; got N={fr.N}")
    left = fr.vectors[:, 0::2]
    right = fr.vectors[:, 1::2]
    if np.max(np.abs(left - right), initial=0.0) > tol:
        raise StructuralError("frame is not doubled: x_{2k} != x_{2k+1}")
    d = fr.N // 2
    blocks = np.zeros((d, fr.N))
    for k in range(d):
        blocks[k, 2 * k] = -1.0
        blocks[k, 2 * k + 1] = 1.0
    return BlockSeq(blocks)


# ---------- Tail-supported kernel blocks ----------

def default_schedules(count: int) -> Tuple[np.ndarray, np.ndarray]:
    """eps_i = 2^(-i-2), delta_i = 2^(-i) for i = 1..count."""
    i = np.arange(1, count + 1, dtype=np.float64)
    return 2.0 ** (-i - 2), 2.0 ** (-i)


@dataclass(frozen=True)
class BlockDiagnostics:
    start: int
    end: int
    kernel_end: int  # last index of the kernel vector before truncation
    eps: float
    delta: float
    tail_norm: float  # achieved eps: min-norm of the discarded tail
    head_image_norm: float  # achieved delta: ambient norm of S applied to the block
    block_norm: float
    semi_normalized: bool  # block_norm > 1 - eps
    met_schedule: bool  # False when no cut met both eps and delta; end = kernel_end


@dataclass(frozen=True)
class Extraction:
    blocks: BlockSeq
    diagnostics: List[BlockDiagnostics] = field(default_factory=list)
    message: str = ""


def _earliest_kernel_vector(fr: FiniteFrame, start: int) -> Optional[Tuple[int, np.ndarray]]:
    """
    Kernel vector of S supported in [start, n] with n least; None when
    ker S meets span{e_i : i >= start} only in 0.
    """
    if rank_kernel(fr.vectors[:, start:]).nullity == 0:
        return None
    for n in range(start, fr.N):
        rk = rank_kernel(fr.vectors[:, start : n + 1])
        if rk.nullity:
            u = np.zeros(fr.N)
            u[start : n + 1] = rk.kernel[-1]
            return n, u
    return None  # pragma: no cover - guarded by the tail check above


def _cut_norms(fr: FiniteFrame, u: np.ndarray, n: int) -> Tuple[float, float]:
    """(min-norm of u after n, ||S|| of u up to n)."""
    tail = u.copy()
    tail[: n + 1] = 0.0
    head = u - tail
    return min_norm(fr, tail), norm(fr.vectors @ head, fr.norm)


def extract_kernel_blocks(
    fr: FiniteFrame,
    eps: Optional[Sequence[float]] = None,
    delta: Optional[Sequence[float]] = None,
) -> Extraction:
    """
    Successive unit kernel vectors u_i supported after n_{i-1}, each cut at the
    least n_i with tail min-norm < eps_i and ||S(head)|| < delta_i.
    """
    if eps is None and delta is None:
        eps_arr, delta_arr = default_schedules(fr.N)
    else:
        if eps is None or delta is None:
            raise InvalidParameterError("eps and delta schedules must be given together")
        eps_arr = np.asarray(eps, dtype=np.float64)
        delta_arr = np.asarray(delta, dtype=np.float64)
        if eps_arr.shape != delta_arr.shape or eps_arr.ndim != 1:
            raise InvalidParameterError("eps and delta schedules must be 1-d and of equal length")
    if np.any(eps_arr <= 0) or float(np.sum(eps_arr)) >= 0.5:
        raise InvalidParameterError("eps schedule must be positive with sum < 1/2")
    if np.any(delta_arr <= 0):
        raise InvalidParameterError("delta schedule must be positive")

    blocks: List[np.ndarray] = []
    diags: List[BlockDiagnostics] = []
    start = 0
    for i in range(eps_arr.size):
        if start >= fr.N:
            break
        found = _earliest_kernel_vector(fr, start)
        if found is None:
            break
        kernel_end, u = found
        u = u / min_norm(fr, u)

        e_i, d_i = float(eps_arr[i]), float(delta_arr[i])
        end, met = kernel_end, False
        for n in range(start, kernel_end + 1):
            tail_norm, head_norm = _cut_norms(fr, u, n)
            if tail_norm < e_i and head_norm < d_i:
                end, met = n, True
                break
        if not met:
            tail_norm, head_norm = _cut_norms(fr, u, end)
            log.warning("extract | block %d: no cut in [%d, %d] meets eps=%.3g delta=%.3g", i, start, end, e_i, d_i)

        block = u.copy()
        block[end + 1 :] = 0.0
        b_norm = min_norm(fr, block)
        diags.append(
            BlockDiagnostics(
                start=start,
                end=end,
                kernel_end=kernel_end,
                eps=e_i,
                delta=d_i,
                tail_norm=tail_norm,
                head_image_norm=head_norm,
                block_norm=b_norm,
                semi_normalized=b_norm > 1.0 - e_i,
                met_schedule=met,
            )
        )
        blocks.append(block)
        log.debug("extract | block %d on [%d, %d] norm=%.6f", i, start, end, b_norm)
        start = end + 1

    if not blocks:
        return Extraction(BlockSeq.empty(fr.N), [], "kernel trivial: no tail-supported kernel vector")
    message = f"{len(blocks)} block(s); tail kernel trivial after index {start - 1}"
    return Extraction(BlockSeq(np.vstack(blocks)), diags, message)
