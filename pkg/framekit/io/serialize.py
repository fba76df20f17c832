# framekit/io/serialize.py
"""
Deterministic JSON: sorted keys, reals printed with 17 significant digits
(lossless round trip for float64), numpy scalars/arrays unwrapped.
"""
from __future__ import annotations

import dataclasses
import json
import math
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel

import config as cfg


def format_real(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    text = format(x, ".17g")
    # keep a real a real on the way back in
    if not any(c in text for c in ".e"):
        text += ".0"
    return text


def to_plain(obj: Any) -> Any:
    """Reduce models, dataclasses, numpy values and tuples to JSON-ready builtins."""
    if isinstance(obj, BaseModel):
        # field by field: model_dump would pass numpy values in `Any` fields through untouched
        return {name: to_plain(getattr(obj, name)) for name in type(obj).model_fields}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_plain(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, np.ndarray):
        return to_plain(obj.tolist())
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    return obj


def _encode(obj: Any, indent: Optional[int], level: int) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_real(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)

    if isinstance(obj, dict):
        items = [(json.dumps(k, ensure_ascii=False), obj[k]) for k in sorted(obj)]
        if not items:
            return "{}"
        parts = [f"{k}: {_encode(v, indent, level + 1)}" for k, v in items]
        return _wrap("{", "}", parts, indent, level)
    if isinstance(obj, list):
        if not obj:
            return "[]"
        # numeric rows stay on one line
        flat = all(not isinstance(v, (dict, list)) for v in obj)
        parts = [_encode(v, indent, level + 1) for v in obj]
        return _wrap("[", "]", parts, None if flat else indent, level)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _wrap(open_: str, close: str, parts: list[str], indent: Optional[int], level: int) -> str:
    if not indent:
        return open_ + ", ".join(parts) + close
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    return open_ + "\n" + ",\n".join(pad + p for p in parts) + "\n" + end + close


def dumps(obj: Any, indent: Optional[int] = None) -> str:
    indent = cfg.settings.report_indent if indent is None else indent
    return _encode(to_plain(obj), indent, 0) + "\n"
