"""Finite world spaces and their events.

An :class:`Event` is a subset of a :class:`WorldSpace` stored as an integer
bitmask (bit ``i`` is world ``i``), so the boolean operations are plain
integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from ..errors import SpaceMismatch


@dataclass(frozen=True)
class WorldSpace:
    """An ordered, non-empty list of uniquely named worlds.

    ``atoms`` is set when the worlds are the truth assignments of a
    propositional vocabulary (see :func:`quasiprob.proplang.enumerate_worlds`).
    """

    worlds: tuple[str, ...]
    atoms: tuple[str, ...] | None = field(default=None)

    def __post_init__(self) -> None:
        object.__setattr__(self, "worlds", tuple(self.worlds))
        if self.atoms is not None:
            object.__setattr__(self, "atoms", tuple(self.atoms))
        if not self.worlds:
            raise ValueError("a world space needs at least one world")
        if len(set(self.worlds)) != len(self.worlds):
            raise ValueError("world identifiers must be unique")

    def __len__(self) -> int:
        return len(self.worlds)

    def __iter__(self) -> Iterator[str]:
        return iter(self.worlds)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {w: i for i, w in enumerate(self.worlds)}

    def index(self, world: str) -> int:
        try:
            return self._index[world]
        except KeyError:
            raise SpaceMismatch(f"no world named {world!r}") from None

    @property
    def full_mask(self) -> int:
        return (1 << len(self.worlds)) - 1

    @property
    def full(self) -> Event:
        return Event(self, self.full_mask)

    @property
    def empty(self) -> Event:
        return Event(self, 0)

    def event(self, worlds: Iterable[str]) -> Event:
        mask = 0
        for w in worlds:
            mask |= 1 << self.index(w)
        return Event(self, mask)

    def singleton(self, i: int) -> Event:
        return Event(self, 1 << i)

    def events(self) -> Iterator[Event]:
        """Every event of the powerset, in mask order."""
        for mask in range(1 << len(self.worlds)):
            yield Event(self, mask)

    def truth(self, i: int, atom: str) -> bool:
        """Truth value of ``atom`` at world ``i`` (first atom is the most significant bit)."""
        if self.atoms is None:
            raise SpaceMismatch("this world space has no atom vocabulary")
        j = self.atoms.index(atom)
        return bool((i >> (len(self.atoms) - 1 - j)) & 1)


@dataclass(frozen=True)
class Event:
    space: WorldSpace
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask > self.space.full_mask:
            raise SpaceMismatch(f"mask {self.mask:#x} is not a subset of the space")

    def _same(self, other: Event) -> None:
        if other.space is not self.space and other.space != self.space:
            raise SpaceMismatch("events belong to different world spaces")

    def __or__(self, other: Event) -> Event:
        self._same(other)
        return Event(self.space, self.mask | other.mask)

    def __and__(self, other: Event) -> Event:
        self._same(other)
        return Event(self.space, self.mask & other.mask)

    def __sub__(self, other: Event) -> Event:
        self._same(other)
        return Event(self.space, self.mask & ~other.mask)

    def __invert__(self) -> Event:
        return Event(self.space, self.space.full_mask & ~self.mask)

    def __le__(self, other: Event) -> bool:
        self._same(other)
        return self.mask & ~other.mask == 0

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def indices(self) -> Iterator[int]:
        m, i = self.mask, 0
        while m:
            if m & 1:
                yield i
            m >>= 1
            i += 1

    def worlds(self) -> list[str]:
        return [self.space.worlds[i] for i in self.indices()]

    def __repr__(self) -> str:
        return "Event{" + ", ".join(self.worlds()) + "}"
