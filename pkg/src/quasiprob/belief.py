"""Plain belief and belief revision over cumulative measures.

A formula is plainly believed when its event has value ``(0, 1)``: top
rank and full local mass.  The negation may still be possible at a lower
rank, which is what lets a belief be retracted later.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BadShift, ImpossibleEvidence, KindMismatch, NotBelieved, NotNormalized, SpaceMismatch
from .measure import Event, QuasiMeasure
from .proplang import Formula, as_formula, eval_event
from .valuation import Group, Kind, Value
from .valuation.algebra import CumulativeValue, RankValue, as_rational


@dataclass(frozen=True)
class EpistemicState:
    measure: QuasiMeasure

    def __post_init__(self) -> None:
        m = self.measure
        if m.algebra.kind is not Kind.CUMULATIVE:
            raise KindMismatch(f"epistemic states need a cumulative algebra, not {m.algebra}")
        if m.space.atoms is None:
            raise SpaceMismatch("epistemic states need a world space built from atoms")
        # per-world storage makes additivity and coherence automatic; only the total can be off
        if m.total() != m.algebra.e:
            raise NotNormalized("the measure of an epistemic state must total e")

    @property
    def algebra(self):
        return self.measure.algebra

    @property
    def atoms(self) -> tuple[str, ...]:
        assert self.measure.space.atoms is not None
        return self.measure.space.atoms

    def event(self, phi: Formula | str) -> Event:
        return eval_event(as_formula(phi), self.measure.space)

    def value(self, phi: Formula | str) -> Value:
        return self.measure.measure_of(self.event(phi))

    def conditional(self, phi: Formula | str, given: Formula | str = "true") -> Value:
        return self.measure.conditional(self.event(phi), self.event(given))

    def believes(self, phi: Formula | str) -> bool:
        return self.value(phi) == self.algebra.e

    def entrenchment(self, phi: Formula | str) -> Value:
        """Value of the negation of a believed formula; lower means more entrenched."""
        A = self.event(phi)
        if self.measure.measure_of(A) != self.algebra.e:
            raise NotBelieved(f"{as_formula(phi)} is not plainly believed")
        return self.measure.measure_of(~A)

    def belief_set(self, candidates: Sequence[Formula | str]) -> list[Formula | str]:
        return [c for c in candidates if self.believes(c)]

    def revise_full(self, phi: Formula | str) -> EpistemicState:
        """Condition on ``phi``; its negation becomes impossible afterwards."""
        return EpistemicState(self.measure.conditionalize(self.event(phi)))

    def revise_shift(self, phi: Formula | str, delta: int | Fraction | str = 1) -> EpistemicState:
        """Make ``phi`` plainly believed while keeping its negation possible.

        Both halves are conditioned separately; the negation half is then
        pushed ``delta`` ranks down.  Top-rank conditionals given ``phi``
        are preserved exactly, and ``entrenchment(phi)`` afterwards has
        rank ``delta``.
        """
        alg = self.algebra
        shift = self._shift(delta)
        A = self.event(phi)
        m = self.measure
        ra, rna = m.measure_of(A), m.measure_of(~A)
        if ra == alg.n:
            raise ImpossibleEvidence(f"{as_formula(phi)} has measure n")
        if rna == alg.n:
            return self.revise_full(phi)
        lift = CumulativeValue(RankValue(shift), 1)
        values = []
        for i, v in enumerate(m.values):
            if (A.mask >> i) & 1:
                values.append(alg.solve_mul(ra, v))
            else:
                values.append(alg.mul(alg.solve_mul(rna, v), lift))
        return EpistemicState(QuasiMeasure(alg, m.space, values))

    def _shift(self, delta: int | Fraction | str) -> int | Fraction:
        try:
            d = as_rational(Fraction(delta) if isinstance(delta, str) else delta)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise BadShift(f"invalid shift {delta!r}: {exc}") from None
        if self.algebra.group is Group.Z and not isinstance(d, int):
            raise BadShift(f"shift must be an integer for group Z, got {d}")
        if d <= 0:
            raise BadShift(f"shift must be strictly positive, got {d}")
        return d
