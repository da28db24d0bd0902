"""Law checkers for valuation algebras.

The checkers are deliberately black-box: they only call the public
connectives of the algebra object they are given, so a deliberately broken
subclass can be handed in to confirm that a law actually bites.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from ..report import Check, Report
from .algebra import Algebra, Group, Kind, Order, Value


class Principle(enum.Enum):
    """Trichotomy of the additive magnitude ordering at ``e``.

    ``SP``: only ``n`` is negligible beside ``e``; ``SH``: some but not all
    smaller values are; ``SR``: every smaller value is (``#`` idempotent).
    """

    SP = "SP"
    SH = "SH"
    SR = "SR"

    def __str__(self) -> str:
        return self.value


# -- random values -----------------------------------------------------


def _random_rank(alg: Algebra, rng: random.Random) -> int | Fraction:
    if alg.group is Group.Q and rng.random() < 0.6:
        return Fraction(rng.randint(0, 12), rng.randint(1, 4))
    return rng.randint(0, 4)


def _random_mass(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 12), rng.randint(1, 8))


def random_value(alg: Algebra, rng: random.Random) -> Value:
    """Draw a value of ``alg``, biased towards ``n``, ``e`` and rank ties."""
    u = rng.random()
    if u < 0.08:
        return alg.n
    if u < 0.16:
        return alg.e
    if alg.kind is Kind.REAL:
        return alg.value(_random_mass(rng))
    if alg.kind is Kind.RANKING:
        return alg.value(_random_rank(alg, rng))
    return alg.value(_random_rank(alg, rng), _random_mass(rng))


def random_unit_value(alg: Algebra, rng: random.Random) -> Value:
    """Draw a value in ``[n, e]``."""
    while True:
        v = random_value(alg, rng)
        if alg.in_unit_interval(v):
            return v


def sample_values(alg: Algebra, count: int, seed: int | None = 0) -> list[Value]:
    rng = random.Random(seed)
    return [random_value(alg, rng) for _ in range(count)]


# -- classification ----------------------------------------------------


def classify(alg: Algebra) -> Principle:
    """Which of SP/SH/SR the algebra satisfies at ``e``.

    Computed from the kind: real addition is strictly increasing (SP),
    ranking addition is idempotent (SR), and a cumulative algebra over a
    non-trivial rank group neglects every lower rank but not its own (SH).
    """
    if alg.kind is Kind.REAL:
        return Principle.SP
    if alg.kind is Kind.RANKING:
        return Principle.SR
    return Principle.SH


def trichotomy_at(alg: Algebra, x: Value, probes: Iterable[Value]) -> Principle:
    """Evaluate the trichotomy at an arbitrary ``x != n`` by direct search.

    ``probes`` supplies candidate small values; they are also scaled by
    ``x`` so that values below ``x`` are always represented.
    """
    n, e = alg.n, alg.e
    if x == n:
        raise ValueError("the trichotomy is only defined for x != n")
    if alg.add(x, x) == x:
        return Principle.SR
    probes = list(probes)
    scaled = [alg.mul(x, p) for p in probes if alg.lt(n, p) and alg.lt(p, e)]
    for y in itertools.chain(probes, scaled):
        if alg.lt(n, y) and alg.lt(y, x) and alg.negligible(y, x):
            return Principle.SH
    return Principle.SP


# -- magnitude ordering --------------------------------------------------


@dataclass(frozen=True)
class ModularityResult:
    ok: bool
    checked: int
    witness: tuple[Value, Value, Value] | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_modular(
    alg: Algebra,
    triples: Iterable[tuple[Value, Value, Value]],
    relation: Callable[[Value, Value], bool] | None = None,
) -> ModularityResult:
    """Check that ``v << w2`` implies ``w << w2`` or ``v << w`` for the negligibility relation.

    Each triple is ``(w, v, v2)``.  ``relation`` defaults to
    ``alg.negligible`` and can be replaced to test the checker itself.
    """
    rel = relation or alg.negligible
    checked = 0
    for w, v, v2 in triples:
        checked += 1
        if rel(v, v2) and not (rel(w, v2) or rel(v, w)):
            return ModularityResult(False, checked, (w, v, v2))
    return ModularityResult(True, checked)


def _tuples(samples: Sequence[Value], arity: int, count: int, seed: int | None) -> list[tuple[Value, ...]]:
    if len(samples) ** arity <= count:
        return list(itertools.product(samples, repeat=arity))
    rng = random.Random(seed)
    return [tuple(rng.choice(samples) for _ in range(arity)) for _ in range(count)]


def check_magnitude_order(
    alg: Algebra, samples: Sequence[Value], *, tuples: int = 1000, seed: int | None = 0
) -> Report:
    """Structural properties of the negligibility relation on sampled values."""
    neg, le = alg.negligible, alg.le
    quads = _tuples(samples, 4, tuples, seed)

    def run(name: str, pred: Callable[..., tuple[bool, bool]], arity: int) -> Check:
        fired = 0
        for t in quads:
            args = t[:arity]
            premise, ok = pred(*args)
            fired += premise
            if premise and not ok:
                return Check(name, False, len(quads), args)
        return Check(name, True, len(quads), detail=f"premise held {fired}x")

    checks = [
        run("negligible implies <=", lambda v, w: (neg(v, w), le(v, w)), 2),
        run("transitive", lambda u, v, w: (neg(u, v) and neg(v, w), neg(u, w)), 3),
        run("anti-symmetric", lambda u, v: (neg(u, v) and neg(v, u), u == v), 2),
        run(
            "<<-extendible",
            lambda v, x, x2, v2: (le(v, x) and neg(x, x2) and le(x2, v2), neg(v, v2)),
            4,
        ),
    ]
    mod = check_modular(alg, (t[:3] for t in quads))  # type: ignore[misc]
    checks.append(Check("modular", mod.ok, mod.checked, mod.witness))
    return Report(f"magnitude ordering of {alg}", tuple(checks))


# -- axioms ------------------------------------------------------------


_Law = Callable[[Algebra, Value, Value, Value], bool]
LAWS: list[tuple[str, int, _Law]] = []


def _law(name: str, arity: int) -> Callable[[_Law], _Law]:
    def register(fn: _Law) -> _Law:
        LAWS.append((name, arity, fn))
        return fn

    return register


def _sorted2(A: Algebra, v: Value, w: Value) -> tuple[Value, Value]:
    return (v, w) if A.le(v, w) else (w, v)


@_law("# commutative", 2)
def _(A, v, w, _x):
    return A.add(v, w) == A.add(w, v)


@_law("# associative", 3)
def _(A, u, v, w):
    return A.add(A.add(u, v), w) == A.add(u, A.add(v, w))


@_law("n is the # identity", 1)
def _(A, v, _w, _x):
    return A.add(v, A.n) == v and A.add(A.n, v) == v


@_law("o commutative", 2)
def _(A, v, w, _x):
    return A.mul(v, w) == A.mul(w, v)


@_law("o associative", 3)
def _(A, u, v, w):
    return A.mul(A.mul(u, v), w) == A.mul(u, A.mul(v, w))


@_law("e is the o identity", 1)
def _(A, v, _w, _x):
    return A.mul(v, A.e) == v and A.mul(A.e, v) == v


@_law("n absorbs under o", 1)
def _(A, v, _w, _x):
    return A.mul(v, A.n) == A.n and A.mul(A.n, v) == A.n


@_law("distributivity", 3)
def _(A, w, v, v2):
    return A.mul(w, A.add(v, v2)) == A.add(A.mul(w, v), A.mul(w, v2))


@_law("linear order", 3)
def _(A, u, v, w):
    c = A.cmp(u, v)
    if (c == Order.EQUAL) != (u == v) or A.cmp(v, u) != -c:
        return False
    if A.le(u, v) and A.le(v, w) and not A.le(u, w):
        return False
    return not (A.lt(u, v) and A.le(v, w) and not A.lt(u, w))


@_law("additive monotony", 3)
def _(A, v, v2, w):
    return not A.le(v, v2) or A.le(A.add(v, w), A.add(v2, w))


@_law("multiplicative monotony", 3)
def _(A, v, v2, w):
    return not (A.lt(v, v2) and w != A.n) or A.lt(A.mul(v, w), A.mul(v2, w))


@_law("additive accessibility", 2)
def _(A, v, w, _x):
    lo, hi = _sorted2(A, v, w)
    return A.add(lo, A.solve_add(lo, hi)) == hi


@_law("multiplicative accessibility", 2)
def _(A, v, w, _x):
    lo, hi = _sorted2(A, v, w)
    return A.mul(hi, A.solve_mul(hi, lo)) == lo


@_law("n is minimal", 1)
def _(A, v, _w, _x):
    return A.le(A.n, v)


@_law("unique quotient in [n, e]", 3)
def _(A, v, w, x):
    lo, hi = _sorted2(A, v, w)
    if hi == A.n:
        return True
    q = A.solve_mul(hi, lo)
    if not (A.in_unit_interval(q) and A.mul(hi, q) == lo):
        return False
    return not (A.in_unit_interval(x) and A.mul(hi, x) == lo) or x == q


@_law("no zero divisors", 2)
def _(A, v, w, _x):
    return not (A.mul(v, w) == A.n and w != A.n) or v == A.n


@_law("order from o", 3)
def _(A, v, v2, x):
    if A.le(v, v2):
        q = A.solve_mul(v2, v)
        if not (A.le(q, A.e) and A.mul(v2, q) == v):
            return False
    elif A.le(x, A.e) and A.mul(v2, x) == v:
        return False
    return not A.le(x, A.e) or A.le(A.mul(v2, x), v2)


@_law("[n, e] closed under o", 2)
def _(A, v, w, _x):
    n, e = A.n, A.e
    if not (A.lt(n, v) and A.lt(n, w) and A.le(v, e) and A.le(w, e)):
        return True
    p = A.mul(v, w)
    return A.lt(n, p) and A.le(p, e)


@_law("complements stay in [n, e]", 1)
def _(A, v, _w, _x):
    if not A.le(v, A.e):
        return True
    c = A.solve_add(v, A.e)
    return A.add(v, c) == A.e and A.le(A.n, c) and A.le(c, A.e)


@_law("cancellation on [n, e]", 3)
def _(A, v, x, y):
    if v == A.n:
        return True
    if A.in_unit_interval(x) and A.in_unit_interval(y) and A.mul(v, x) == A.mul(v, y) and x != y:
        return False
    return not A.in_unit_interval(x) or A.solve_mul(v, A.mul(v, x)) == x


def check_axioms(
    alg: Algebra, samples: Sequence[Value], *, tuples: int = 1000, seed: int | None = 0
) -> Report:
    """Check the valuation algebra axioms and their consequences on ``samples``.

    Laws are evaluated on every triple of samples when there are at most
    ``tuples`` of them, otherwise on ``tuples`` seeded random triples.  A
    law that raises counts as a failure.
    """
    triples = _tuples(list(samples), 3, tuples, seed)
    checks = []
    for name, arity, fn in LAWS:
        failure: tuple[Any, ...] | None = None
        detail = ""
        for t in triples:
            try:
                ok = fn(alg, *t)
            except Exception as exc:  # noqa: BLE001 - any exception is a law failure
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            if not ok:
                failure = t[:arity]
                break
        checks.append(Check(name, failure is None, len(triples), failure, detail))
    return Report(f"axioms of {alg}", tuple(checks))
