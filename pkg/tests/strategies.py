from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from quasiprob.valuation import Algebra, CumulativeValue, Group, Kind, MassValue, RankValue

masses = st.fractions(min_value=0, max_value=20, max_denominator=12)
positive_masses = st.fractions(min_value=Fraction(1, 12), max_value=20, max_denominator=12)


def ranks(group: Group):
    if group is Group.Z:
        return st.integers(0, 6)
    return st.fractions(min_value=0, max_value=6, max_denominator=6)


def values(alg: Algebra):
    if alg.kind is Kind.REAL:
        return st.one_of(st.just(alg.n), st.just(alg.e), masses.map(MassValue))
    r = ranks(alg.group)
    if alg.kind is Kind.RANKING:
        return st.one_of(st.just(alg.n), st.just(alg.e), r.map(RankValue))
    return st.one_of(
        st.just(alg.n),
        st.just(alg.e),
        st.builds(CumulativeValue, r.map(RankValue), positive_masses),
    )


def unit_values(alg: Algebra):
    return values(alg).filter(alg.in_unit_interval)


def nonzero_values(alg: Algebra):
    return values(alg).filter(lambda v: v != alg.n)
