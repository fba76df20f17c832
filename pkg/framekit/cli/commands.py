# framekit/cli/commands.py
"""
One function per sub-command. Each returns (Report, exit_code); errors
propagate as FramekitError subclasses and are mapped to exit codes by main().
"""
from __future__ import annotations

import argparse
import logging
from typing import List, Optional, Tuple

import numpy as np

import config as cfg
from framekit.core.ambient import subspace_residual
from framekit.core.c0detect import (
    c0_constants,
    example_blocks,
    example_bounds_hold,
    extract_kernel_blocks,
)
from framekit.core.errors import FrameFileError, InvalidDeletionError
from framekit.core.frame import validate
from framekit.core.hilbert import (
    canonical_dual,
    near_riesz_report,
    pre_frame_norm,
)
from framekit.core.minseq import (
    argmax_segment,
    check_minimality,
    is_degenerate,
    lp_coefficient_norm,
    tail_profile,
)
from framekit.core.operators import (
    deletion_search,
    excess,
    kernel_basis_biorthogonal,
    kernel_basis_numerical,
    kernel_residual,
)
from framekit.io.frame_file import (
    file_digest,
    load_blocks,
    load_coefficients,
    load_frame,
    load_hilbert_frame,
    parse_coefficients,
)
from framekit.io.schemas import Inputs, Report

log = logging.getLogger("framekit.cli")

Outcome = Tuple[Report, int]

_DEGENERATE = "degenerate truncation: some x_i = 0, the min-norm is only a seminorm"


def _report(command: str, path: str, results: dict, warnings: Optional[List[str]] = None) -> Report:
    return Report(
        command=command,
        inputs=Inputs(path=str(path), sha256=file_digest(path)),
        results=results,
        warnings=warnings or [],
    )


def _parse_sigma(text: Optional[str], N: int) -> Optional[Tuple[int, ...]]:
    if text is None:
        return None
    try:
        sigma = tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError as e:
        raise FrameFileError(f"cannot read index list {text!r}") from e
    if any(not 0 <= i < N for i in sigma):
        raise InvalidDeletionError(f"sigma {list(sigma)} not inside 0..{N - 1}")
    return sigma


def cmd_validate(args: argparse.Namespace) -> Outcome:
    fr = load_frame(args.path)
    tol = cfg.settings.validation_tol if args.tol is None else args.tol
    rep = validate(fr, tol)
    log.info("validate | %s residual=%.3e ok=%s", args.path, rep.residual, rep.ok)
    results = {
        "d": fr.d,
        "N": fr.N,
        "tol": tol,
        "residual": rep.residual,
        "ok": rep.ok,
        "zero_columns": list(rep.zero_columns),
    }
    return _report("validate", args.path, results), 0 if rep.ok else 1


def cmd_excess(args: argparse.Namespace) -> Outcome:
    fr = load_frame(args.path)
    check = validate(fr)
    if not check.ok:
        msg = f"frame fails validation (residual {check.residual:.3e}, zero columns {list(check.zero_columns)})"
        return _report("excess", args.path, {"valid": False}, [msg]), 1

    rep = excess(fr)
    log.info("excess | %s kernel_dim=%d deletion=%d", args.path, rep.kernel_dim, rep.deletion_excess)
    results = {
        "valid": True,
        "d": fr.d,
        "N": fr.N,
        "kernel_dim": rep.kernel_dim,
        "deletion_excess": rep.deletion_excess,
        "witness_sigma": list(rep.witness_sigma),
        "agree": rep.agree,
    }
    return _report("excess", args.path, results), 0 if rep.agree else 1


def cmd_minnorm(args: argparse.Namespace) -> Outcome:
    fr = load_frame(args.path)
    if (args.coeffs is None) == (args.coeffs_file is None):
        raise FrameFileError("give exactly one of --coeffs or --coeffs-file")
    a = parse_coefficients(args.coeffs) if args.coeffs is not None else load_coefficients(args.coeffs_file)

    value, (m, n) = argmax_segment(fr, a)
    results = {"min_norm": value, "argmax_segment": [m, n], "coefficients": a}
    if args.tail_profile:
        results["tail_profile"] = tail_profile(fr, a)
    warnings = [_DEGENERATE] if is_degenerate(fr) else []
    log.info("minnorm | %s value=%.6g segment=[%d, %d]", args.path, value, m, n)
    return _report("minnorm", args.path, results, warnings), 0


def _basis_payload(fr, basis) -> dict:
    return {
        "construction": basis.construction,
        "dim": basis.dim,
        "sigma": None if basis.sigma is None else list(basis.sigma),
        "basis": basis.vectors,
        "max_image_norm": kernel_residual(fr, basis),
    }


def cmd_kernel(args: argparse.Namespace) -> Outcome:
    fr = load_frame(args.path)
    results: dict = {"d": fr.d, "N": fr.N}
    numerical = biorthogonal = None

    if args.method in ("numerical", "both"):
        numerical = kernel_basis_numerical(fr)
        results["numerical"] = _basis_payload(fr, numerical)
    if args.method in ("biorthogonal", "both"):
        sigma = _parse_sigma(args.sigma, fr.N)
        if sigma is None:
            sigma = deletion_search(fr)
        biorthogonal = kernel_basis_biorthogonal(fr, sigma)
        results["biorthogonal"] = _basis_payload(fr, biorthogonal)
    if numerical is not None and biorthogonal is not None:
        results["span_residual"] = subspace_residual(numerical.vectors, biorthogonal.vectors)

    warnings = [] if validate(fr).ok else ["frame fails validation; kernel reported for the vectors as given"]
    log.info("kernel | %s method=%s", args.path, args.method)
    return _report("kernel", args.path, results, warnings), 0


def cmd_c0(args: argparse.Namespace) -> Outcome:
    fr = load_frame(args.path)
    warnings: List[str] = []
    results: dict = {"blocks_source": args.blocks}

    if args.blocks == "example":
        bs = example_blocks(fr)
    elif args.blocks == "auto":
        extraction = extract_kernel_blocks(fr)
        bs = extraction.blocks
        results["extraction"] = {"message": extraction.message, "diagnostics": extraction.diagnostics}
    else:
        if args.blocks_path is None:
            raise FrameFileError("--blocks file needs --blocks-path")
        bs = load_blocks(args.blocks_path, fr.N)

    results["K"] = bs.K
    results["supports"] = [list(s) for s in bs.supports()]
    if bs.K == 0:
        warnings.append("kernel trivial: no blocks to measure")
        return _report("c0", args.path, results, warnings), 0

    const = c0_constants(fr, bs, args.resolution)
    results.update(
        {
            "A": const.A,
            "B": const.B,
            "distortion": const.distortion,
            "A_mode": const.A_mode,
            "resolution": const.resolution,
            "A_witness": const.A_witness,
            "B_witness": const.B_witness,
        }
    )
    code = 0
    if args.blocks == "example":
        lower_ok, upper_ok = example_bounds_hold(const)
        results["bounds"] = {"A_at_least_1": lower_ok, "B_at_most_2": upper_ok}
        if not (lower_ok and upper_ok):
            warnings.append("doubled-frame bounds 1 <= A, B <= 2 violated (is the basis normalized?)")
            code = 1
    if is_degenerate(fr):
        warnings.append(_DEGENERATE)
    log.info("c0 | %s K=%d A=%.6g B=%.6g", args.path, bs.K, const.A, const.B)
    return _report("c0", args.path, results, warnings), code


def cmd_hilbert(args: argparse.Namespace) -> Outcome:
    hf = load_hilbert_frame(args.path)
    rep = near_riesz_report(hf)
    fr = canonical_dual(hf)

    rng = np.random.default_rng(cfg.settings.seed)
    xs = rng.standard_normal((cfg.settings.sample_trials, hf.d))
    recon = (xs @ fr.functionals) @ fr.vectors.T
    recon_residual = float(np.max(np.abs(recon - xs)))

    op_norm = pre_frame_norm(hf)
    minimality = check_minimality(fr, lp_coefficient_norm(2.0), K=1.0, S_norm=op_norm)
    general = excess(fr)

    results = {
        "d": hf.d,
        "N": hf.N,
        "frame_bounds": list(rep.frame_bounds),
        "excess": rep.excess,
        "besselian_constant": rep.besselian_constant,
        "is_parseval": rep.is_parseval,
        "pre_frame_norm": op_norm,
        "canonical_dual": fr.functionals.T,
        "reconstruction_residual": recon_residual,
        "minimality_worst_ratio": minimality.worst_ratio,
        "general_route_excess": general.deletion_excess,
        "excess_agree": general.deletion_excess == rep.excess,
    }
    log.info("hilbert | %s bounds=(%.6g, %.6g) excess=%d", args.path, *rep.frame_bounds, rep.excess)
    return _report("hilbert", args.path, results), 0
