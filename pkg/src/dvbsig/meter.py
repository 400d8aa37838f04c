"""Operation-count instrumentation for the group layer.

A measured region is opened with `measure()`; inside it, every public group
operation reports itself via `tally`.  Counts are per operation *kind* at the
protocol level of accounting: a scalar multiplication counts once no matter
how many internal doublings it performs, and a map-to-point hash counts once
even though it clears the cofactor internally.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field

G1_SCALAR_MUL = "g1_scalar_mul"
G1_GROUP_OP = "g1_group_op"
G2_SCALAR_MUL = "g2_scalar_mul"
G2_GROUP_OP = "g2_group_op"
PAIRING = "pairing"
MAP_TO_POINT = "map_to_point"
G2_EXP = "g2_exp"

KINDS = (
    G1_SCALAR_MUL,
    G1_GROUP_OP,
    G2_SCALAR_MUL,
    G2_GROUP_OP,
    PAIRING,
    MAP_TO_POINT,
    G2_EXP,
)


@dataclass
class OpCounter:
    """Monotone per-kind counters for one measured region."""

    counts: dict[str, int] = field(default_factory=lambda: {k: 0 for k in KINDS})

    def bump(self, kind: str) -> None:
        self.counts[kind] += 1

    def __getitem__(self, kind: str) -> int:
        return self.counts[kind]

    def merge(self, other: OpCounter) -> None:
        for kind, n in other.counts.items():
            self.counts[kind] += n


_active: ContextVar[OpCounter | None] = ContextVar("dvbsig_op_counter", default=None)


def tally(kind: str) -> None:
    counter = _active.get()
    if counter is not None:
        counter.bump(kind)


@contextmanager
def measure():
    """Collect operation counts for the enclosed region.

    Regions are per thread of control (contextvar-scoped); nesting replaces
    the active counter for the inner region.
    """
    counter = OpCounter()
    token = _active.set(counter)
    try:
        yield counter
    finally:
        _active.reset(token)
