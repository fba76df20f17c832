# framekit/io/schemas.py
from __future__ import annotations

import math
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class _StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class NormField(_StrictModel):
    p: Union[float, str] = 2.0

    @field_validator("p", mode="before")
    @classmethod
    def _validate_p(cls, v: Any) -> Union[float, str]:
        if isinstance(v, str):
            vv = v.strip().lower()
            if vv in {"inf", "infinity"}:
                return "inf"
            raise ValueError(f"norm exponent must be a number or \"inf\"; got {v!r}")
        p = float(v)
        if math.isnan(p) or p < 1.0:
            raise ValueError(f"norm exponent must be >= 1; got {v!r}")
        return "inf" if math.isinf(p) else p


class FrameFile(_StrictModel):
    """
    On-disk frame: row j of `vectors` is x_j, row j of `functionals` is f_j.
    `functionals` may be omitted for Hilbert frames (derived canonically).
    """

    d: int = Field(ge=1)
    N: int = Field(ge=0)
    norm: NormField = Field(default_factory=NormField)
    vectors: List[List[float]]
    functionals: Optional[List[List[float]]] = None

    @model_validator(mode="after")
    def _check_shapes(self) -> "FrameFile":
        for name in ("vectors", "functionals"):
            rows = getattr(self, name)
            if rows is None:
                continue
            if len(rows) != self.N:
                raise ValueError(f"{name}: expected N={self.N} rows; got {len(rows)}")
            for j, row in enumerate(rows):
                if len(row) != self.d:
                    raise ValueError(f"{name}[{j}]: expected d={self.d} entries; got {len(row)}")
                if not all(math.isfinite(x) for x in row):
                    raise ValueError(f"{name}[{j}]: non-finite entry")
        return self


class Inputs(_StrictModel):
    path: str
    sha256: str


class Report(_StrictModel):
    command: str
    inputs: Inputs
    results: Dict[str, Any] = Field(default_factory=dict)
    warnings: List[str] = Field(default_factory=list)
