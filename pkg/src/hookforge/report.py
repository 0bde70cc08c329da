"""Verification reports shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of one identity check.

    ``params`` identifies the instance (``lambda``, ``d``, ``cap``...), ``detail``
    carries the evidence.  ``to_json`` flattens both around the ``pass`` flag.
    """

    kind: str
    params: dict[str, Any]
    passed: bool
    detail: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict[str, Any]:
        return {"check": self.kind, **self.params, "pass": self.passed, **self.detail}
