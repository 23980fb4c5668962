"""Frozen expected values for cones of dimension at most 4.

The closed forms below are classical for these dimensions: the stalk
polynomial of a full-dimensional cone is determined by the number of extremal
rays v (and for each 3-dimensional facet, its own ray count), and the de Rham
table follows from the stalk table.  They are evaluated here with concrete
integers per corpus cone and compared coefficientwise against the solver
output; the builders use only the constructors of the polynomial types.

Multiplicity golden values (the D table) refer to the interior-ray pipeline;
the stalk values hold for any simplicial subdivision.
"""

from __future__ import annotations

from .cones import FaceLattice
from .polynomials import (
    BiLaurentPolynomial,
    K_INV,
    K_INV_PLUS_L_INV,
    LaurentPolynomial,
    bipoly_from_triples,
    poly_from_pairs,
)

L = LaurentPolynomial
B = BiLaurentPolynomial


def _l_pow(k: int) -> B:
    return B.monomial(0, k)


def golden_stalks(lattice: FaceLattice) -> dict[int, LaurentPolynomial]:
    """Expected Ht_{0,tau} for every face, by face dimension."""
    if lattice.rank > 4:
        raise ValueError("golden data covers dimensions 0..4 only")
    out: dict[int, LaurentPolynomial] = {}
    for f in lattice.faces:
        if f.dim <= 2:
            out[f.id] = L.term(-f.dim)
        elif f.dim == 3:
            v = len(f.rays)
            out[f.id] = poly_from_pairs([(-3, 1), (-1, v - 3)])
        else:
            v = len(f.rays)
            out[f.id] = poly_from_pairs([(-4, 1), (-2, v - 4)])
    return out


def golden_multiplicities(lattice: FaceLattice) -> dict[int, LaurentPolynomial]:
    """Expected D_tau under the interior-ray subdivision, by face dimension."""
    if lattice.rank > 4:
        raise ValueError("golden data covers dimensions 0..4 only")
    n = lattice.rank
    out: dict[int, LaurentPolynomial] = {}
    for f in lattice.faces:
        if f.id == lattice.zero_id:
            out[f.id] = L.one()
        elif f.dim < min(n, 3):
            out[f.id] = L.zero()
        elif f.dim == n:
            v = len(f.rays)
            if n <= 2:
                # sigma simplicial in these dimensions: identity subdivision
                out[f.id] = L.zero()
            elif n == 3:
                out[f.id] = poly_from_pairs([(1, 1), (-1, 1)])
            else:
                out[f.id] = poly_from_pairs([(2, 1), (0, v - 3), (-2, 1)])
        elif f.dim == 3:
            out[f.id] = poly_from_pairs([(1, 1), (-1, 1)])
        else:
            out[f.id] = L.zero()
    return out


def golden_derham(lattice: FaceLattice) -> dict[int, BiLaurentPolynomial]:
    """Expected dR_{0,tau} for every face, by face dimension."""
    if lattice.rank > 4:
        raise ValueError("golden data covers dimensions 0..4 only")
    n = lattice.rank
    out: dict[int, BiLaurentPolynomial] = {}
    for f in lattice.faces:
        cofactor = K_INV_PLUS_L_INV ** (n - f.dim)
        if f.dim <= 2:
            out[f.id] = cofactor * _l_pow(-f.dim)
        elif f.dim == 3:
            v = len(f.rays)
            out[f.id] = cofactor * (
                _l_pow(-3) + (v - 3) * K_INV * _l_pow(-1)
            )
        else:
            v = len(f.rays)
            out[f.id] = bipoly_from_triples([(0, -4, 1), (-2, -2, v - 4)])
    return out
