"""Domain errors, each carrying a stable machine-readable code.

The CLI maps these to exit code 2 and the HTTP service to status 422;
``code`` is what appears on the wire, ``data`` holds structured detail
(e.g. the offending pair of subsets).
"""

from __future__ import annotations


class WorkbenchError(Exception):
    code = "domain-error"

    def __init__(self, detail: str = "", **data):
        super().__init__(detail or self.code)
        self.detail = detail
        self.data = data

    def to_json(self) -> dict:
        doc = {"error": self.code, "detail": self.detail}
        if self.data:
            doc.update(self.data)
        return doc


class SizeMismatchError(WorkbenchError):
    code = "size-mismatch"


class PieceCountError(WorkbenchError):
    code = "wrong-piece-count"


class NotInIndexSetError(WorkbenchError):
    code = "not-in-index-set"


class NotAMemberError(WorkbenchError):
    code = "not-a-member"


class DuplicateTargetError(WorkbenchError):
    code = "duplicate-target"


class IntertwiningError(WorkbenchError):
    code = "intertwining-pair"


class InvalidCollectionError(WorkbenchError):
    code = "invalid-collection"


class WrongCollectionSizeError(WorkbenchError):
    code = "wrong-collection-size"


class NotASliceError(WorkbenchError):
    code = "not-a-slice"


class ParameterError(WorkbenchError):
    code = "bad-parameters"


class GuardError(WorkbenchError):
    code = "guard-exceeded"


class ConsistencyError(WorkbenchError):
    """A structural cross-check failed; indicates a bug, not bad input."""

    code = "internal-consistency"
