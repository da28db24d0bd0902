"""Quasi-probabilistic valuation algebras, cumulative measures and plain belief."""
