"""Quasi-measures over finite world spaces.

A measure is stored per world; the value of an event is the ``#``-fold of
its members' values.  Finite additivity therefore holds by construction
and a union of impossible worlds is automatically impossible.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Mapping, Sequence

from ..errors import AllImpossible, ImpossibleEvidence, NotNormalized, SpaceMismatch
from ..report import Check, Report
from ..valuation import Algebra, Value
from .space import Event, WorldSpace

MAX_INDEPENDENCE_EVENTS = 10


class QuasiMeasure:
    """An immutable table ``world -> value`` over a :class:`WorldSpace`.

    The constructor only checks that every entry belongs to ``algebra``;
    pass ``normalized=True`` to also require the total to be ``e`` (use
    :func:`validate` for a full report instead of an exception).
    """

    __slots__ = ("algebra", "space", "values", "_cache")

    def __init__(
        self,
        algebra: Algebra,
        space: WorldSpace,
        values: Sequence[Value],
        *,
        normalized: bool = False,
    ) -> None:
        values = tuple(values)
        if len(values) != len(space):
            raise SpaceMismatch(f"{len(values)} values for {len(space)} worlds")
        for v in values:
            algebra.check(v)
        self.algebra = algebra
        self.space = space
        self.values = values
        self._cache: dict[int, Value] = {0: algebra.n}
        if normalized and self.total() != algebra.e:
            raise NotNormalized(f"table total is {self.total()!r}, not e")

    @classmethod
    def from_table(
        cls, algebra: Algebra, table: Mapping[str, Value], *, normalized: bool = False
    ) -> QuasiMeasure:
        space = WorldSpace(tuple(table))
        return cls(algebra, space, list(table.values()), normalized=normalized)

    @property
    def table(self) -> dict[str, Value]:
        return dict(zip(self.space.worlds, self.values))

    def __getitem__(self, world: str) -> Value:
        return self.values[self.space.index(world)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuasiMeasure):
            return NotImplemented
        return (self.algebra, self.space, self.values) == (other.algebra, other.space, other.values)

    def __hash__(self) -> int:
        return hash((self.algebra, self.space, self.values))

    def __repr__(self) -> str:
        from ..valuation import format_value

        body = ", ".join(f"{w}: {format_value(v)}" for w, v in zip(self.space.worlds, self.values))
        return f"QuasiMeasure({self.algebra}, {{{body}}})"

    def _check(self, A: Event) -> int:
        if A.space is not self.space and A.space != self.space:
            raise SpaceMismatch("event is over a different world space")
        return A.mask

    def _mask_value(self, mask: int) -> Value:
        cache = self._cache
        v = cache.get(mask)
        if v is None:
            low = mask & -mask
            v = self.algebra.add(self._mask_value(mask ^ low), self.values[low.bit_length() - 1])
            cache[mask] = v
        return v

    def total(self) -> Value:
        return self._mask_value(self.space.full_mask)

    def measure_of(self, A: Event) -> Value:
        """``#``-fold of the values of the worlds in ``A`` (``n`` for the empty event)."""
        return self._mask_value(self._check(A))

    def conditional(self, A: Event, B: Event) -> Value:
        """The unique ``w`` in ``[n, e]`` with ``R(A & B) = R(B) o w``; ``n`` if ``R(B) = n``."""
        b = self._check(B)
        rb = self._mask_value(b)
        if rb == self.algebra.n:
            return rb
        return self.algebra.solve_mul(rb, self._mask_value(self._check(A) & b))

    def conditionalize(self, B: Event) -> QuasiMeasure:
        """The measure ``X -> R(X | B)``, stored per world."""
        b = self._check(B)
        alg = self.algebra
        rb = self._mask_value(b)
        if rb == alg.n:
            raise ImpossibleEvidence("cannot condition on an event of measure n")
        n = alg.n
        values = [
            alg.solve_mul(rb, v) if (b >> i) & 1 else n for i, v in enumerate(self.values)
        ]
        return QuasiMeasure(alg, self.space, values)

    def dependence_witness(
        self, events: Sequence[Event], B: Event | None = None
    ) -> tuple[int, ...] | None:
        """First index subsequence whose conditional product condition fails, or ``None``.

        For every non-empty subsequence ``S`` of ``events`` the conditional
        of the intersection given ``B`` must equal the ``o``-product of the
        individual conditionals.  Subsequences are tried by increasing size.
        """
        alg = self.algebra
        B = self.space.full if B is None else B
        if self.measure_of(B) == alg.n:
            raise ImpossibleEvidence("independence given an event of measure n is undefined")
        if not 1 <= len(events) <= MAX_INDEPENDENCE_EVENTS:
            raise ValueError(f"between 1 and {MAX_INDEPENDENCE_EVENTS} events are supported")
        singles = [self.conditional(E, B) for E in events]
        for size in range(2, len(events) + 1):
            for combo in itertools.combinations(range(len(events)), size):
                meet = self.space.full
                for i in combo:
                    meet = meet & events[i]
                lhs = self.conditional(meet, B)
                rhs = alg.fold_mul(singles[i] for i in combo)
                if lhs != rhs:
                    return combo
        return None

    def independent(self, events: Sequence[Event], B: Event | None = None) -> bool:
        return self.dependence_witness(events, B) is None


def normalize(algebra: Algebra, raw: Mapping[str, Value] | QuasiMeasure) -> QuasiMeasure:
    """Divide every entry by the table total so that the result sums to ``e``."""
    if isinstance(raw, QuasiMeasure):
        space, values = raw.space, raw.values
    else:
        space, values = WorldSpace(tuple(raw)), tuple(raw.values())
    for v in values:
        algebra.check(v)
    total = algebra.fold_add(values)
    if total == algebra.n:
        raise AllImpossible("every entry is n; the table cannot be normalized")
    return QuasiMeasure(algebra, space, [algebra.solve_mul(total, v) for v in values])


def _disjoint_pairs(k: int, limit: int, rng: random.Random) -> Iterable[tuple[int, int]]:
    if 3**k <= limit:
        # assign every world to A, B or neither
        for labels in itertools.product(range(3), repeat=k):
            a = sum(1 << i for i, x in enumerate(labels) if x == 1)
            b = sum(1 << i for i, x in enumerate(labels) if x == 2)
            yield a, b
        return
    full = (1 << k) - 1
    for _ in range(limit):
        a = rng.getrandbits(k)
        yield a, rng.getrandbits(k) & ~a & full


def validate(m: QuasiMeasure, *, pairs: int = 256, seed: int | None = 0) -> Report:
    """Report on normalization, finite additivity, coherence and bounds.

    Additivity is checked on every disjoint pair of events when there are
    at most ``pairs`` of them, otherwise on ``pairs`` random ones.
    """
    alg, n, e = m.algebra, m.algebra.n, m.algebra.e
    rng = random.Random(seed)
    k = len(m.space)
    checks = []

    total = m.total()
    checks.append(Check("normalization", total == e, 1, None if total == e else (total,), "total is e"))
    checks.append(Check("empty event is n", m._mask_value(0) == n, 1))

    bad: tuple | None = None
    count = 0
    for a, b in _disjoint_pairs(k, pairs, rng):
        count += 1
        ra, rb = m._mask_value(a), m._mask_value(b)
        # the cached union is folded world by world, so this compares two different bracketings
        union = m._mask_value(a | b)
        if union != alg.add(ra, rb):
            bad = (ra, rb, union)
            break
    checks.append(Check("finite additivity", bad is None, count, bad))

    impossible = sum(1 << i for i, v in enumerate(m.values) if v == n)
    union = m._mask_value(impossible)
    checks.append(Check("coherence", union == n, 1, None if union == n else (union,)))

    out = None
    masks = range(1 << k) if k <= 10 else (rng.getrandbits(k) for _ in range(pairs))
    count = 0
    for mask in masks:
        count += 1
        v = m._mask_value(mask)
        if not (alg.le(n, v) and alg.le(v, e)):
            out = (v,)
            break
    checks.append(Check("n <= R(A) <= e", out is None, count, out))
    return Report(f"measure over {k} worlds in {alg}", tuple(checks))
