"""Hook-length combinatorics: partitions, plane partitions, tectonic movement, Fock space."""

from __future__ import annotations

__version__ = "0.1.0"

from .partition import Cell, Partition, PartitionError
from .report import Report

__all__ = ["Cell", "Partition", "PartitionError", "Report", "__version__"]
