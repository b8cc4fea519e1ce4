"""Lattice Burnside rings of finite groups.

Coefficients come back from the extension as exact strings and are turned
into ``fractions.Fraction`` here.
"""

from fractions import Fraction

from ._core import BurnsideError, Ring as _Ring, run

__all__ = ["BurnsideError", "Ring", "run"]


def _element(coeffs):
    return {i: Fraction(c) for i, c in coeffs.items()}


class Ring(_Ring):
    def multiply(self, i, j):
        return _element(super().multiply(i, j))

    def idempotents(self, p="inf"):
        return [_element(e) for e in super().idempotents(p)]

    def units(self, cap_rank=20):
        u = super().units(cap_rank)
        u["generators"] = [_element(g) for g in u["generators"]]
        return u
