from .ambient import NormSpec, RankTolerance, norm, rank_kernel
from .frame import FiniteFrame, delete, doubled_frame, random_frame, validate
from .minseq import min_norm, min_norm_naive, restricted_min_norm, tail_profile, check_minimality
from .operators import excess, deletion_search, kernel_basis_biorthogonal, kernel_basis_numerical, projector_q
from .c0detect import BlockSeq, c0_constants, example_blocks, extract_kernel_blocks
from .hilbert import HilbertFrame, canonical_dual, frame_operator, near_riesz_report

__all__ = [
    "NormSpec", "RankTolerance", "norm", "rank_kernel",
    "FiniteFrame", "delete", "doubled_frame", "random_frame", "validate",
    "min_norm", "min_norm_naive", "restricted_min_norm", "tail_profile", "check_minimality",
    "excess", "deletion_search", "kernel_basis_biorthogonal", "kernel_basis_numerical", "projector_q",
    "BlockSeq", "c0_constants", "example_blocks", "extract_kernel_blocks",
    "HilbertFrame", "canonical_dual", "frame_operator", "near_riesz_report",
]
