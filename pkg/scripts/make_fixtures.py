# scripts/make_fixtures.py
"""
Write the standard frame fixtures as JSON frame files.

    python scripts/make_fixtures.py [out_dir]    (default: ./fixtures)
"""
from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Dict, Optional

import numpy as np

import config as cfg
from framekit.core.frame import FiniteFrame, doubled_frame, identity_frame, random_frame
from framekit.core.hilbert import HilbertFrame, doubled_orthonormal_frame, mercedes_frame, orthonormal_frame
from framekit.io.frame_file import write_frame
from framekit.util.logging_setup import init_logging

log = logging.getLogger("framekit.fixtures")

# Size of the perturbation applied to the corrupted fixture's functionals
CORRUPTION = 1e-3


def corrupted(fr: FiniteFrame, amount: float = CORRUPTION) -> FiniteFrame:
    f = np.array(fr.functionals)
    f[0, 0] += amount
    return FiniteFrame(fr.vectors, f, fr.norm)


def fixtures(seed: Optional[int] = None) -> Dict[str, FiniteFrame | HilbertFrame]:
    seed = cfg.settings.seed if seed is None else seed
    out: Dict[str, FiniteFrame | HilbertFrame] = {"identity_d3": identity_frame(3)}
    for d in (1, 2, 4, 8):
        out[f"doubled_d{d}"] = doubled_frame(np.eye(d))
    out["random_d4_n9"] = random_frame(4, 9, seed)
    out["corrupted_doubled_d2"] = corrupted(out["doubled_d2"])  # type: ignore[arg-type]
    out["mercedes"] = mercedes_frame()
    out["orthonormal_d3"] = orthonormal_frame(3)
    out["doubled_orthonormal_d4"] = doubled_orthonormal_frame(4)
    out["collinear"] = HilbertFrame(np.array([[1.0, 2.0, -1.0], [0.0, 0.0, 0.0]]))
    return out


def write_fixtures(out_dir: Path | str, seed: Optional[int] = None) -> Dict[str, Path]:
    out_dir = Path(out_dir)
    written = {name: write_frame(fr, out_dir / f"{name}.json") for name, fr in fixtures(seed).items()}
    log.info("wrote %d fixtures to %s", len(written), out_dir)
    return written


def main() -> None:
    init_logging(cfg.settings.log_level)
    write_fixtures(sys.argv[1] if len(sys.argv) > 1 else "fixtures")


if __name__ == "__main__":
    main()
