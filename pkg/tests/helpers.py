"""Shared corpus builders and independent oracles for the test suite.

The random corpora here are frozen by (seed, label, index) through the
library's own splittable generator, so every test run sees the same
matrices.  The D_k oracle deliberately takes the long way around:
adjugate of tI - A over the polynomial ring, read off coefficientwise.
The production code computes the same matrices by a descending
recursion and never builds that adjugate, which is what makes the
comparison worth having.
"""

from __future__ import annotations

from ringmat.fuzz import sample_matrix, sample_singular, stream
from ringmat.matrix import Matrix, char_matrix
from ringmat.poly import PolynomialRing
from ringmat.rings import QQ, ZZ, ModRing

Z6 = ModRing(6)
Z8 = ModRing(8)
ZT = PolynomialRing(ZZ)

# the five ring families every acceptance corpus runs over
RINGS5 = (
    ("int", ZZ),
    ("mod6", Z6),
    ("mod8", Z8),
    ("rat", QQ),
    ("poly", ZT),
)


def corpus(ring, label: str, count: int, nmax: int, seed: int = 2026,
           singular_every: int = 0):
    """count square matrices with n drawn from 0..nmax.

    singular_every = k > 0 makes every k-th matrix singular (and at
    least 1 x 1, since a 0 x 0 matrix has determinant 1).
    """
    out = []
    for i in range(count):
        rng = stream(seed, label, i)
        n = rng.below(nmax + 1)
        if singular_every and i % singular_every == 0:
            out.append(sample_singular(rng, ring, max(n, 1)))
        else:
            out.append(sample_matrix(rng, ring, n, n))
    return out


def coefficient_matrices_oracle(a: Matrix) -> list:
    """D_0..D_{n-1} extracted from adj(tI - A) computed over K[t]."""
    n = a.rows
    adj = char_matrix(a).adjugate()
    out = []
    for k in range(n):
        entries = tuple(adj.entry(i, j).coeff(k)
                        for i in range(1, n + 1) for j in range(1, n + 1))
        out.append(Matrix(a.ring, n, n, entries))
    return out


def mat(ring, rows) -> Matrix:
    return Matrix.from_rows(ring, rows)
