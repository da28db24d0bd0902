"""Concrete valuation algebras: real, ranking and cumulative.

Every algebra is a tuple ``(V, #, o, n, e, <<)``: an additive connective
``#`` used to combine disjoint events, a multiplicative connective ``o``
used for conjunction of independent events and for conditioning, the
impossibility value ``n``, the certainty value ``e`` and a linear order.

Three families are provided:

* ``Real``: non-negative rationals with ``+``, ``*``, ``0``, ``1``, ``<``.
* ``Ranking(G)``: the non-negative half of the group ``G`` (integers or
  rationals), topped by an absorptive *impossible* element.  A larger rank
  number means *less* plausible, ``#`` is the plausibility maximum and
  ``o`` adds ranks.
* ``Cumulative(G)``: lexicographic pairs ``(rank, mass)`` combining a
  ranking algebra (global structure) with exact non-negative rationals
  (local structure).

Values are immutable; every operation is a pure function.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

from ..errors import InvalidValue, KindMismatch, PreconditionError

Rational = Union[int, Fraction]


def as_rational(x: Rational | str | float) -> Rational:
    if isinstance(x, bool):
        raise InvalidValue(f"not a rational number: {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        # floats are converted through their shortest repr so 0.6 means 3/5
        x = Fraction(repr(x))
    elif not isinstance(x, Fraction):
        x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


@dataclass(frozen=True, slots=True)
class RankValue:
    """Element of a ranking algebra.

    ``rank is None`` encodes the impossible value ``n``; ``RankValue(0)``
    is the certainty value ``e``.
    """

    rank: Rational | None

    def __post_init__(self) -> None:
        if self.rank is None:
            return
        r = as_rational(self.rank)
        if r < 0:
            raise InvalidValue(f"rank must be non-negative, got {r}")
        object.__setattr__(self, "rank", r)

    @property
    def impossible(self) -> bool:
        return self.rank is None

    def __repr__(self) -> str:
        return "RankValue(imp)" if self.rank is None else f"RankValue({self.rank})"


IMPOSSIBLE = RankValue(None)


@dataclass(frozen=True, slots=True)
class MassValue:
    """Element of the real algebra: an exact non-negative rational."""

    m: Rational

    def __post_init__(self) -> None:
        m = as_rational(self.m)
        if m < 0:
            raise InvalidValue(f"mass must be non-negative, got {m}")
        object.__setattr__(self, "m", m)

    def __repr__(self) -> str:
        return f"MassValue({self.m})"


@dataclass(frozen=True, slots=True)
class CumulativeValue:
    """A ``(rank, mass)`` pair of a cumulative algebra.

    Only pairs without zero divisors are representable: the rank is
    impossible exactly when the mass is zero.
    """

    rank: RankValue
    mass: Rational

    def __post_init__(self) -> None:
        rank = self.rank if isinstance(self.rank, RankValue) else RankValue(self.rank)
        mass = as_rational(self.mass)
        if mass < 0:
            raise InvalidValue(f"mass must be non-negative, got {mass}")
        if rank.impossible != (mass == 0):
            raise InvalidValue(
                f"({rank.rank if rank.rank is not None else 'imp'}, {mass}) is not a cumulative value:"
                " the rank is impossible exactly when the mass is 0"
            )
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "mass", mass)

    def __repr__(self) -> str:
        r = "imp" if self.rank.rank is None else self.rank.rank
        return f"CumulativeValue({r}, {self.mass})"


Value = Union[MassValue, RankValue, CumulativeValue]


class Kind(enum.Enum):
    REAL = "real"
    RANKING = "ranking"
    CUMULATIVE = "cumulative"


class Group(enum.Enum):
    """Ordered additive group supplying the ranks."""

    Z = "z"
    Q = "q"


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self) -> str:
        return self.name.lower()


def _rank_cmp(a: RankValue, b: RankValue) -> Order:
    """Plausibility order of ranks: impossible lowest, then larger numbers lower."""
    x, y = a.rank, b.rank
    if x == y:
        return Order.EQUAL
    if x is None:
        return Order.LESS
    if y is None:
        return Order.GREATER
    return Order.LESS if x > y else Order.GREATER


def _rank_add(a: RankValue, b: RankValue) -> RankValue:
    if a.rank is None or b.rank is None:
        return IMPOSSIBLE
    return RankValue(a.rank + b.rank)


_CUM_N = CumulativeValue(IMPOSSIBLE, 0)
_CUM_E = CumulativeValue(RankValue(0), 1)
_RANK_E = RankValue(0)
_REAL_N = MassValue(0)
_REAL_E = MassValue(1)


@dataclass(frozen=True)
class Algebra:
    """A valuation algebra context.

    >>> alg = Algebra.cumulative()
    >>> alg.add(CumulativeValue(0, Fraction(3, 5)), CumulativeValue(1, 1))
    CumulativeValue(0, 3/5)
    """

    kind: Kind
    group: Group | None = None

    def __post_init__(self) -> None:
        if self.kind is Kind.REAL:
            if self.group is not None:
                raise ValueError("the real algebra takes no rank group")
        elif self.group is None:
            object.__setattr__(self, "group", Group.Z)
        object.__setattr__(self, "_type", _VALUE_TYPE[self.kind])

    # -- construction -------------------------------------------------

    @classmethod
    def real(cls) -> Algebra:
        return cls(Kind.REAL)

    @classmethod
    def ranking(cls, group: Group | str = Group.Z) -> Algebra:
        return cls(Kind.RANKING, Group(group))

    @classmethod
    def cumulative(cls, group: Group | str = Group.Z) -> Algebra:
        return cls(Kind.CUMULATIVE, Group(group))

    @classmethod
    def from_name(cls, name: str) -> Algebra:
        """Parse ``real``, ``ranking [z|q]`` or ``cumulative [z|q]``.

        ``-``, ``_`` and ``:`` are accepted as separators so the name can be
        passed as a single shell word.
        """
        words = name.replace("-", " ").replace("_", " ").replace(":", " ").lower().split()
        if not words or len(words) > 2:
            raise ValueError(f"unknown algebra {name!r}")
        try:
            kind = Kind(words[0])
            group = Group(words[1]) if len(words) == 2 else None
        except ValueError:
            raise ValueError(f"unknown algebra {name!r}") from None
        if kind is Kind.REAL and group is not None:
            raise ValueError("the real algebra takes no rank group")
        return cls(kind, group)

    def __str__(self) -> str:
        if self.kind is Kind.REAL:
            return "real"
        assert self.group is not None
        return f"{self.kind.value} {self.group.value}"

    # -- distinguished constants ----------------------------------------

    @property
    def n(self) -> Value:
        if self.kind is Kind.REAL:
            return _REAL_N
        if self.kind is Kind.RANKING:
            return IMPOSSIBLE
        return _CUM_N

    @property
    def e(self) -> Value:
        if self.kind is Kind.REAL:
            return _REAL_E
        if self.kind is Kind.RANKING:
            return _RANK_E
        return _CUM_E

    def rank(self, g: Rational | None) -> RankValue:
        """Build a rank value of this algebra's group (``None`` -> impossible)."""
        r = RankValue(g)
        self._check_rank(r)
        return r

    def value(self, *args: Rational | str | None) -> Value:
        """Convenience constructor.

        ``value(m)`` for real, ``value(g)`` for ranking and ``value(g, m)``
        for cumulative algebras; ``None`` as a rank means impossible.
        """
        if self.kind is Kind.REAL:
            (m,) = args
            return MassValue(as_rational(m))  # type: ignore[arg-type]
        if self.kind is Kind.RANKING:
            (g,) = args
            return self.rank(None if g is None else as_rational(g))  # type: ignore[arg-type]
        g, m = args
        v = CumulativeValue(RankValue(None if g is None else as_rational(g)), as_rational(m))  # type: ignore[arg-type]
        self._check_rank(v.rank)
        return v

    # -- membership -----------------------------------------------------

    def _check_rank(self, r: RankValue) -> None:
        if self.group is Group.Z and r.rank is not None and not isinstance(r.rank, int):
            raise InvalidValue(f"rank {r.rank} is not an integer (group Z)")

    def check(self, v: object) -> Value:
        """Return ``v`` if it is a valid element of this algebra, else raise."""
        if self.kind is Kind.REAL:
            if not isinstance(v, MassValue):
                raise KindMismatch(f"{v!r} is not a value of the {self} algebra")
        elif self.kind is Kind.RANKING:
            if not isinstance(v, RankValue):
                raise KindMismatch(f"{v!r} is not a value of the {self} algebra")
            self._check_rank(v)
        else:
            if not isinstance(v, CumulativeValue):
                raise KindMismatch(f"{v!r} is not a value of the {self} algebra")
            self._check_rank(v.rank)
        return v  # type: ignore[return-value]

    def contains(self, v: object) -> bool:
        try:
            self.check(v)
        except (KindMismatch, InvalidValue):
            return False
        return True

    def _pair(self, v: object, w: object) -> None:
        t = self._type  # type: ignore[attr-defined]
        if type(v) is not t or type(w) is not t:
            bad = v if type(v) is not t else w
            raise KindMismatch(f"{bad!r} is not a value of the {self} algebra")

    # -- connectives ----------------------------------------------------

    def add(self, v: Value, w: Value) -> Value:
        """The additive connective ``#``."""
        self._pair(v, w)
        if self.kind is Kind.REAL:
            return MassValue(v.m + w.m)  # type: ignore[union-attr]
        if self.kind is Kind.RANKING:
            return v if _rank_cmp(v, w) >= 0 else w  # type: ignore[arg-type]
        c = _rank_cmp(v.rank, w.rank)  # type: ignore[union-attr]
        if c is Order.EQUAL:
            if v.rank.rank is None:  # type: ignore[union-attr]
                return v
            return CumulativeValue(v.rank, v.mass + w.mass)  # type: ignore[union-attr]
        return v if c is Order.GREATER else w

    def mul(self, v: Value, w: Value) -> Value:
        """The multiplicative connective ``o`` (ranks add, masses multiply)."""
        self._pair(v, w)
        if self.kind is Kind.REAL:
            return MassValue(v.m * w.m)  # type: ignore[union-attr]
        if self.kind is Kind.RANKING:
            return _rank_add(v, w)  # type: ignore[arg-type]
        rank = _rank_add(v.rank, w.rank)  # type: ignore[union-attr]
        if rank.rank is None:
            return _CUM_N
        return CumulativeValue(rank, v.mass * w.mass)  # type: ignore[union-attr]

    def cmp(self, v: Value, w: Value) -> Order:
        self._pair(v, w)
        if self.kind is Kind.REAL:
            a, b = v.m, w.m  # type: ignore[union-attr]
            return Order.EQUAL if a == b else (Order.LESS if a < b else Order.GREATER)
        if self.kind is Kind.RANKING:
            return _rank_cmp(v, w)  # type: ignore[arg-type]
        c = _rank_cmp(v.rank, w.rank)  # type: ignore[union-attr]
        if c is not Order.EQUAL:
            return c
        a, b = v.mass, w.mass  # type: ignore[union-attr]
        return Order.EQUAL if a == b else (Order.LESS if a < b else Order.GREATER)

    def le(self, v: Value, w: Value) -> bool:
        return self.cmp(v, w) <= 0

    def lt(self, v: Value, w: Value) -> bool:
        return self.cmp(v, w) < 0

    def max(self, v: Value, w: Value) -> Value:
        return w if self.cmp(v, w) < 0 else v

    def min(self, v: Value, w: Value) -> Value:
        return v if self.cmp(v, w) <= 0 else w

    def fold_add(self, values: Iterable[Value]) -> Value:
        return reduce(self.add, values, self.n)

    def fold_mul(self, values: Iterable[Value]) -> Value:
        return reduce(self.mul, values, self.e)

    def in_unit_interval(self, v: Value) -> bool:
        """``n <= v <= e``."""
        return self.cmp(v, self.e) <= 0

    # -- accessibility solvers ------------------------------------------

    def solve_add(self, v: Value, target: Value) -> Value:
        """Return a ``w`` with ``v # w == target``; requires ``v <= target``.

        The witness is canonical: ``n`` whenever ``v == target``, the
        difference of masses inside one rank, and ``target`` itself when
        ``target`` lies at a strictly more plausible rank.
        """
        if self.cmp(v, target) > 0:
            raise PreconditionError(f"solve_add needs v <= target, got v={v!r}, target={target!r}")
        if v == target:
            return self.n
        if self.kind is Kind.REAL:
            return MassValue(target.m - v.m)  # type: ignore[union-attr]
        if self.kind is Kind.RANKING:
            return target
        if v.rank == target.rank:  # type: ignore[union-attr]
            return CumulativeValue(target.rank, target.mass - v.mass)  # type: ignore[union-attr]
        return target

    def solve_mul(self, divisor: Value, target: Value) -> Value:
        """Return the unique ``w`` in ``[n, e]`` with ``divisor o w == target``.

        Requires ``target <= divisor``.  A divisor of ``n`` yields ``n`` by
        convention (the conditional value given an impossible event).
        """
        if self.cmp(target, divisor) > 0:
            raise PreconditionError(
                f"solve_mul needs target <= divisor, got divisor={divisor!r}, target={target!r}"
            )
        n = self.n
        if divisor == n or target == n:
            return n
        if self.kind is Kind.REAL:
            return MassValue(Fraction(target.m) / divisor.m)  # type: ignore[union-attr]
        if self.kind is Kind.RANKING:
            return RankValue(target.rank - divisor.rank)  # type: ignore[union-attr,operator]
        rank = RankValue(target.rank.rank - divisor.rank.rank)  # type: ignore[union-attr,operator]
        return CumulativeValue(rank, Fraction(target.mass) / divisor.mass)  # type: ignore[union-attr]

    def negligible(self, v: Value, w: Value) -> bool:
        """Additive magnitude ordering: ``v`` is negligible beside ``w`` iff ``w # v == w``."""
        return self.add(w, v) == w


_VALUE_TYPE = {
    Kind.REAL: MassValue,
    Kind.RANKING: RankValue,
    Kind.CUMULATIVE: CumulativeValue,
}

REAL = Algebra.real()
RANKING_Z = Algebra.ranking(Group.Z)
RANKING_Q = Algebra.ranking(Group.Q)
CUMULATIVE_Z = Algebra.cumulative(Group.Z)
CUMULATIVE_Q = Algebra.cumulative(Group.Q)

ALL_ALGEBRAS = (REAL, RANKING_Z, RANKING_Q, CUMULATIVE_Z, CUMULATIVE_Q)
