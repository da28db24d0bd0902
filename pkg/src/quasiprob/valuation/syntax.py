"""Text syntax for values.

==========  ==============  ===============  ==========
algebra     impossible      certainty        example
==========  ==============  ===============  ==========
real        ``imp``         ``1``            ``3/5``
ranking     ``imp``         ``r0``           ``r2``
cumulative  ``imp``         ``0:1``          ``2:1/3``
==========  ==============  ===============  ==========

Masses and ranks accept decimals (``0.6``) or fractions (``3/5``) on
input and are always parsed exactly.  Output uses ``p/q`` unless the
reduced denominator is a power of ten, in which case a decimal is printed.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import InvalidValue, ValueSyntaxError
from .algebra import Algebra, CumulativeValue, Kind, MassValue, Rational, RankValue, Value

_NUMBER = re.compile(r"^(?:\d+(?:\.\d*)?|\.\d+)(?:/\d+)?$")


def parse_rational(text: str) -> Rational:
    text = text.strip()
    if not _NUMBER.match(text):
        raise ValueSyntaxError(f"not a non-negative rational: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueSyntaxError(f"zero denominator in {text!r}")
        x = Fraction(num) / Fraction(den)
    else:
        x = Fraction(text)
    return x.numerator if x.denominator == 1 else x


def format_rational(x: Rational) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    d = x.denominator
    digits = 0
    while d % 10 == 0:
        d //= 10
        digits += 1
    if d == 1:
        sign = "-" if x < 0 else ""
        whole, frac = divmod(abs(x.numerator), x.denominator)
        return f"{sign}{whole}.{frac:0{digits}d}"
    return f"{x.numerator}/{x.denominator}"


def parse_value(alg: Algebra, text: str) -> Value:
    """Parse ``text`` as an element of ``alg``.

    >>> from quasiprob.valuation import CUMULATIVE_Z
    >>> parse_value(CUMULATIVE_Z, "2:1/3")
    CumulativeValue(2, 1/3)
    """
    s = text.strip()
    if s == "imp":
        return alg.n
    try:
        if alg.kind is Kind.REAL:
            return alg.check(MassValue(parse_rational(s)))
        if alg.kind is Kind.RANKING:
            if not s.startswith("r"):
                raise ValueSyntaxError(f"ranking values look like r<rank>, got {text!r}")
            return alg.rank(parse_rational(s[1:]))
        rank, sep, mass = s.partition(":")
        if not sep:
            raise ValueSyntaxError(f"cumulative values look like <rank>:<mass>, got {text!r}")
        return alg.value(parse_rational(rank), parse_rational(mass))
    except InvalidValue as exc:
        raise ValueSyntaxError(f"{text!r}: {exc}") from None


def format_value(v: Value) -> str:
    if isinstance(v, MassValue):
        return "imp" if v.m == 0 else format_rational(v.m)
    if isinstance(v, RankValue):
        return "imp" if v.rank is None else "r" + format_rational(v.rank)
    if isinstance(v, CumulativeValue):
        if v.rank.rank is None:
            return "imp"
        return f"{format_rational(v.rank.rank)}:{format_rational(v.mass)}"
    raise TypeError(f"not a value: {v!r}")
