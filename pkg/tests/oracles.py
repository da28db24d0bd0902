"""Reference computations that do not go through ``quasiprob``'s algebra code.

Cumulative values are plain ``(rank, mass)`` tuples with ``rank=None`` for
the impossible value.  Event values are computed in one pass (lowest rank
wins, masses at that rank are summed) instead of by pairwise folding.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from quasiprob.valuation import CumulativeValue, MassValue, RankValue

Pair = tuple  # (rank | None, Fraction)


def to_pair(v: CumulativeValue) -> Pair:
    return (v.rank.rank, Fraction(v.mass))


def members(mask: int, k: int) -> list[int]:
    return [i for i in range(k) if mask >> i & 1]


def cum_value(table: Sequence[Pair], mask: int) -> Pair:
    live = [table[i] for i in members(mask, len(table)) if table[i][0] is not None]
    if not live:
        return (None, Fraction(0))
    top = min(r for r, _ in live)
    return (top, sum((m for r, m in live if r == top), Fraction(0)))


def cum_all(table: Sequence[Pair]) -> list[Pair]:
    """``cum_value`` for every mask, indexed by mask."""
    return [cum_value(table, mask) for mask in range(1 << len(table))]


def _divide(rab: Pair, rb: Pair) -> Pair:
    if rb[0] is None or rab[0] is None:
        return (None, Fraction(0))
    return (rab[0] - rb[0], rab[1] / rb[1])


def cum_conditional(table: Sequence[Pair], a: int, b: int) -> Pair:
    return _divide(cum_value(table, a & b), cum_value(table, b))


def cum_conditional_all(values: Sequence[Pair], a: int, b: int) -> Pair:
    """``cum_conditional`` from the precomputed ``cum_all`` list."""
    return _divide(values[a & b], values[b])


def cum_product(vals: Iterable[Pair]) -> Pair:
    rank, mass = 0, Fraction(1)
    for r, m in vals:
        if r is None or rank is None:
            rank, mass = None, Fraction(0)
        else:
            rank, mass = rank + r, mass * m
    return (rank, mass)


def rank_value(table: Sequence[int | None], mask: int) -> int | None:
    live = [table[i] for i in members(mask, len(table)) if table[i] is not None]
    return min(live) if live else None


def prob(table: Sequence[Fraction], mask: int) -> Fraction:
    return sum((table[i] for i in members(mask, len(table))), Fraction(0))


def prob_conditional(table: Sequence[Fraction], a: int, b: int) -> Fraction:
    pb = prob(table, b)
    return Fraction(0) if pb == 0 else prob(table, a & b) / pb


def prob_independent(table: Sequence[Fraction], events: Sequence[int], b: int) -> bool:
    for size in range(1, len(events) + 1):
        for combo in itertools.combinations(events, size):
            meet = b
            for e in combo:
                meet &= e
            lhs = prob_conditional(table, meet, b)
            rhs = Fraction(1)
            for e in combo:
                rhs *= prob_conditional(table, e, b)
            if lhs != rhs:
                return False
    return True


def random_cumulative_table(k: int, rng: random.Random, max_rank: int = 3) -> list[Pair]:
    """A normalized cumulative table built directly: shift ranks to 0, rescale top masses."""
    while True:
        raw = [
            (None, Fraction(0)) if rng.random() < 0.2 else (rng.randint(0, max_rank), Fraction(rng.randint(1, 9), rng.randint(1, 4)))
            for _ in range(k)
        ]
        live = [r for r, _ in raw if r is not None]
        if live:
            break
    low = min(live)
    top_mass = sum(m for r, m in raw if r == low)
    return [
        (None, Fraction(0)) if r is None else (r - low, m / top_mass if r == low else m)
        for r, m in raw
    ]


def to_values(table: Sequence[Pair]) -> list[CumulativeValue]:
    return [CumulativeValue(RankValue(r), m) for r, m in table]


def random_probability_table(k: int, rng: random.Random) -> list[Fraction]:
    while True:
        w = [Fraction(rng.randint(0, 6)) for _ in range(k)]
        total = sum(w)
        if total:
            return [x / total for x in w]


def set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def truth_table(f, atoms: Sequence[str]) -> int:
    """Mask of satisfying assignments, evaluating the AST node by node."""
    from quasiprob import proplang as P

    def ev(g, env):
        if isinstance(g, P.Atom):
            return env[g.name]
        if isinstance(g, P.Top):
            return True
        if isinstance(g, P.Bottom):
            return False
        if isinstance(g, P.Not):
            return not ev(g.arg, env)
        a, b = ev(g.left, env), ev(g.right, env)
        return {
            P.And: a and b,
            P.Or: a or b,
            P.Implies: (not a) or b,
            P.Iff: a == b,
        }[type(g)]

    k = len(atoms)
    mask = 0
    for i, bits in enumerate(itertools.product([False, True], repeat=k)):
        if ev(f, dict(zip(atoms, bits))):
            mask |= 1 << i
    return mask


__all__ = [
    "MassValue",
    "cum_all",
    "cum_conditional",
    "cum_conditional_all",
    "cum_product",
    "cum_value",
    "members",
    "prob",
    "prob_conditional",
    "prob_independent",
    "random_cumulative_table",
    "random_probability_table",
    "rank_value",
    "set_partitions",
    "to_pair",
    "to_values",
    "truth_table",
]
