"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class DiffPolyError(Exception):
    """Base class for all errors raised by diffpoly."""


class DimensionMismatch(DiffPolyError, ValueError):
    pass


class ParentMismatch(DiffPolyError, ValueError):
    pass


class AssociativityViolation(DiffPolyError):
    def __init__(self, triple, left, right):
        self.triple = triple
        self.left = left
        self.right = right
        i, j, k = triple
        super().__init__(
            f"({i}*{j})*{k} = {left} but {i}*({j}*{k}) = {right}"
        )


class LeibnizViolation(DiffPolyError):
    def __init__(self, pair, left, right):
        self.pair = pair
        self.left = left
        self.right = right
        i, j = pair
        super().__init__(
            f"d({i}*{j}) = {left} but d({i})*{j} + {i}*d({j}) = {right}"
        )


class SizeExceeded(DiffPolyError):
    pass


class NotLocallyNilpotent(DiffPolyError):
    pass


class NTooSmall(DiffPolyError, ValueError):
    pass


class NotNilpotentWithinBound(DiffPolyError):
    pass


class PreconditionViolated(DiffPolyError):
    pass


class DuplicatePoint(DiffPolyError, ValueError):
    pass


class InconsistentSamples(DiffPolyError):
    pass


class ExponentOverflow(DiffPolyError, OverflowError):
    pass


class LemmaViolation(DiffPolyError):
    """A step that the theory guarantees came out false: an implementation defect."""


class TraceAssertionFailure(DiffPolyError):
    def __init__(self, step, message, context=None):
        self.step = step
        self.context = dict(context or {})
        super().__init__(f"[{step}] {message}")
