"""Bead (beta-number) encoding of partitions.

Row ``k`` (0-based) of a charge-``c`` diagram carries a bead at the integer
position ``lam[k] - k - 1 + c``; the half-integer Maya position is that plus
``1/2``.  Column ``j`` of a charge-0 diagram leaves a hole at ``j - lam'[j]``.
Below the last part the beads are packed: every position ``<= c - len(lam) - 1``
is occupied.
"""

from __future__ import annotations

from .partition import Partition, PartitionError


def beads(lam: Partition, depth: int, charge: int = 0) -> list[int]:
    """The top ``depth`` bead positions, strictly decreasing."""
    if depth < len(lam):
        raise PartitionError(f"depth {depth} does not reach the last part of {lam}")
    return [lam.part(k) - k - 1 + charge for k in range(depth)]


def from_beads(positions, charge: int = 0) -> Partition:
    """Inverse of :func:`beads` for a finite top window.

    Every position below ``charge - len(window)`` counts as occupied, so no
    window bead may sit below that.
    """
    pos = sorted(positions, reverse=True)
    if len(set(pos)) != len(pos):
        raise PartitionError(f"two beads share a position: {pos}")
    if pos and pos[-1] < charge - len(pos):
        raise PartitionError(f"bead window {pos} reaches into the packed tail for charge {charge}")
    parts = [m + k + 1 - charge for k, m in enumerate(pos)]
    return Partition(tuple(p for p in parts if p > 0))


def move_bead(lam: Partition, src: int, dst: int) -> Partition:
    """Move the charge-0 bead at ``src`` to the empty position ``dst``."""
    depth = len(lam) + abs(dst - src) + 1
    depth = max(depth, -min(src, dst) + 1)
    pos = beads(lam, depth)
    if src not in pos:
        raise PartitionError(f"no bead at {src} for {lam}")
    if dst in pos:
        raise PartitionError(f"position {dst} already holds a bead for {lam}")
    pos[pos.index(src)] = dst
    return from_beads(pos)
