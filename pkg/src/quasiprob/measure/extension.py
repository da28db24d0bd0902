"""Canonical powerset extension of a ranking measure given on a finite subalgebra.

A finite subalgebra of ``2^S`` is generated by a partition of ``S``; its
events are the unions of blocks.  The maximal ranking measure on the whole
powerset that agrees with the partition measure assigns every event the
value of its smallest covering union of blocks, which is the same as
giving every world the value of its block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import InvalidPartition
from ..valuation import Algebra, Kind, RankValue
from .quasi import QuasiMeasure
from .space import Event, WorldSpace


@dataclass(frozen=True)
class PartitionMeasure:
    algebra: Algebra
    space: WorldSpace
    blocks: tuple[Event, ...]
    values: tuple[RankValue, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "values", tuple(self.values))
        if self.algebra.kind is not Kind.RANKING:
            raise InvalidPartition(f"partition measures take a ranking algebra, not {self.algebra}")
        if len(self.blocks) != len(self.values):
            raise InvalidPartition("one value per block is required")
        seen = 0
        for b in self.blocks:
            if b.space != self.space:
                raise InvalidPartition("block is over a different world space")
            if not b:
                raise InvalidPartition("blocks must be non-empty")
            if seen & b.mask:
                raise InvalidPartition(f"block {b!r} overlaps an earlier block")
            seen |= b.mask
        if seen != self.space.full_mask:
            missing = Event(self.space, self.space.full_mask & ~seen)
            raise InvalidPartition(f"blocks do not cover {missing!r}")
        for v in self.values:
            self.algebra.check(v)
        if self.algebra.fold_add(self.values) != self.algebra.e:
            raise InvalidPartition("block values are not normalized (their maximum must be e)")

    @classmethod
    def from_blocks(
        cls, algebra: Algebra, space: WorldSpace, blocks: Iterable[tuple[Iterable[str], RankValue]]
    ) -> PartitionMeasure:
        evs, vals = [], []
        for worlds, value in blocks:
            evs.append(space.event(worlds))
            vals.append(value)
        return cls(algebra, space, tuple(evs), tuple(vals))

    def value_of_union(self, which: Sequence[int]) -> RankValue:
        """Measure of the union of the blocks with the given indices."""
        return self.algebra.fold_add(self.values[i] for i in which)  # type: ignore[return-value]

    def block_of(self, world_index: int) -> int:
        bit = 1 << world_index
        for j, b in enumerate(self.blocks):
            if b.mask & bit:
                return j
        raise AssertionError("partition does not cover the world")


def extend(pm: PartitionMeasure) -> QuasiMeasure:
    """Maximal ranking measure on the powerset agreeing with ``pm`` on block unions."""
    values = [pm.values[pm.block_of(i)] for i in range(len(pm.space))]
    return QuasiMeasure(pm.algebra, pm.space, values)
