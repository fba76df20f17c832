# framekit/io/frame_file.py
from __future__ import annotations

import hashlib
import json
import logging
from pathlib import Path
from typing import List, Union

import numpy as np
from pydantic import ValidationError

from framekit.core.ambient import NormSpec
from framekit.core.c0detect import BlockSeq
from framekit.core.errors import FrameFileError, StructuralError
from framekit.core.frame import FiniteFrame
from framekit.core.hilbert import HilbertFrame
from framekit.io.schemas import FrameFile, NormField
from framekit.io.serialize import dumps

log = logging.getLogger("framekit.io")

PathLike = Union[str, Path]


def file_digest(path: PathLike) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _load_json(path: PathLike):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FrameFileError(f"cannot read {path}: {e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FrameFileError(f"{path}: not valid JSON ({e})") from e


def read_frame_file(path: PathLike) -> FrameFile:
    raw = _load_json(path)
    try:
        return FrameFile.model_validate(raw)
    except ValidationError as e:
        raise FrameFileError(f"{path}: {e.error_count()} schema error(s)\n{e}") from e


def _columns(rows: List[List[float]], d: int) -> np.ndarray:
    arr = np.asarray(rows, dtype=np.float64).reshape(len(rows), d)
    return arr.T.copy()


def load_frame(path: PathLike) -> FiniteFrame:
    doc = read_frame_file(path)
    if doc.functionals is None:
        raise FrameFileError(f"{path}: `functionals` is required for a Schauder frame")
    try:
        return FiniteFrame(
            _columns(doc.vectors, doc.d),
            _columns(doc.functionals, doc.d),
            NormSpec.parse(doc.norm.p),
        )
    except StructuralError as e:
        raise FrameFileError(f"{path}: {e}") from e


def load_hilbert_frame(path: PathLike) -> HilbertFrame:
    """Functionals, if present, are ignored; the canonical dual is derived."""
    doc = read_frame_file(path)
    if doc.norm.p != 2.0:
        log.warning("%s: Hilbert analysis uses the l_2 norm; file declares p=%s", path, doc.norm.p)
    return HilbertFrame(_columns(doc.vectors, doc.d))


def frame_to_document(fr: Union[FiniteFrame, HilbertFrame]) -> FrameFile:
    if isinstance(fr, FiniteFrame):
        return FrameFile(
            d=fr.d,
            N=fr.N,
            norm=NormField(p=fr.norm.label()),
            vectors=fr.vectors.T.tolist(),
            functionals=fr.functionals.T.tolist(),
        )
    return FrameFile(d=fr.d, N=fr.N, norm=NormField(p=2.0), vectors=fr.vectors.T.tolist())


def write_frame(fr: Union[FiniteFrame, HilbertFrame], path: PathLike) -> Path:
    doc = frame_to_document(fr)
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    # exclude_none: Hilbert files omit `functionals`
    out.write_text(dumps(doc.model_dump(exclude_none=True)), encoding="utf-8")
    return out


def load_coefficients(path: PathLike) -> np.ndarray:
    """A JSON list of reals, or whitespace/comma separated reals."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FrameFileError(f"cannot read {path}: {e}") from e
    return parse_coefficients(text)


def parse_coefficients(text: str) -> np.ndarray:
    stripped = text.strip()
    try:
        if stripped.startswith("["):
            values = json.loads(stripped)
        else:
            values = [float(tok) for tok in stripped.replace(",", " ").split()]
        arr = np.asarray(values, dtype=np.float64)
    except (ValueError, TypeError) as e:
        raise FrameFileError(f"cannot read coefficients: {e}") from e
    if arr.ndim != 1 or not np.all(np.isfinite(arr)):
        raise FrameFileError("coefficients must be a flat list of finite reals")
    return arr


def load_blocks(path: PathLike, N: int) -> BlockSeq:
    """A JSON list of K coefficient rows of length N."""
    raw = _load_json(path)
    try:
        arr = np.asarray(raw, dtype=np.float64)
    except (ValueError, TypeError) as e:
        raise FrameFileError(f"{path}: blocks must be a list of rows ({e})") from e
    if arr.ndim != 2 or arr.shape[1] != N:
        raise FrameFileError(f"{path}: blocks must be a K x {N} array; got shape {arr.shape}")
    try:
        return BlockSeq(arr)
    except StructuralError as e:
        raise FrameFileError(f"{path}: {e}") from e
