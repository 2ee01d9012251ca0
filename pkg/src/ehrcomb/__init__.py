"""Ehrhart polynomials of comb-like order polytopes and the Bernoulli /
second Eulerian identities they encode."""

__version__ = "0.1.0"
