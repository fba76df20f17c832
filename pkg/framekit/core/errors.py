# framekit/core/errors.py
from __future__ import annotations


class FramekitError(Exception):
    """Base class for every error raised by framekit."""


class StructuralError(FramekitError, ValueError):
    """Shapes, lengths or index sets that do not fit together."""


class InvalidNormError(FramekitError, ValueError):
    pass


class InvalidBasisError(FramekitError, ValueError):
    pass


class InvalidParameterError(FramekitError, ValueError):
    pass


class InvalidDeletionError(FramekitError, ValueError):
    """The deleted index set does not leave a basis of the ambient space."""


class NotAFrameError(FramekitError, ValueError):
    """Lower frame bound is zero (the vectors do not span)."""


class FrameFileError(FramekitError, ValueError):
    """Unreadable or malformed frame, coefficient or block file."""


class EnumerationCapError(FramekitError, RuntimeError):
    pass


class InternalInconsistencyError(FramekitError, RuntimeError):
    """A search that cannot fail on a valid frame failed; the frame is not valid."""
