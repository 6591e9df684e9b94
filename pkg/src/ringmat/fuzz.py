"""Deterministic input generation for the verification suite.

The generator is SplitMix64, pinned exactly so identical seeds give
identical fuzz reports everywhere:

    state' = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state'
    z = ((z XOR (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z XOR (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output = z XOR (z >> 31)

Streams are split by reseeding: the child seed for a labelled stream is
the first output of SplitMix64 seeded with parent_seed XOR FNV-1a64(label)
(integer tokens are XORed in directly).  Bounded draws use rejection
sampling on raw 64-bit outputs, and matrix entries are drawn row by row:

    integers        uniform in [-9, 9]
    mod m           uniform residue in [0, m)
    rationals       num/den with both uniform in [-5, 5] minus {0}
    polynomials     degree-bound + 1 base draws, low degree first
"""

from __future__ import annotations

from fractions import Fraction

from .matrix import Matrix, apply_poly
from .poly import Polynomial, PolynomialRing
from .rings import IntegerRing, ModRing, RationalRing, Ring, RingError

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _scramble(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """The pinned 64-bit generator; see the module docstring for the exact map."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return _scramble(self._state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), by rejection on raw outputs."""
        if n <= 0:
            raise ValueError("bound must be positive")
        if n == 1:
            return 0
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], inclusive."""
        return lo + self.below(hi - lo + 1)

    def split(self) -> "SplitMix64":
        return SplitMix64(self.next_u64())


def fnv1a64(text: str) -> int:
    h = 0xCBF29CE484222325
    for b in text.encode("utf-8"):
        h ^= b
        h = (h * 0x100000001B3) & _MASK
    return h


def derive_seed(seed: int, *tokens) -> int:
    """Fold string or integer tokens into seed, one reseeded step per token."""
    x = seed & _MASK
    for tok in tokens:
        t = fnv1a64(tok) if isinstance(tok, str) else tok & _MASK
        x = SplitMix64(x ^ t).next_u64()
    return x


def stream(seed: int, *tokens) -> SplitMix64:
    return SplitMix64(derive_seed(seed, *tokens))


def _nonzero_small(rng: SplitMix64) -> int:
    v = rng.below(10)
    return v - 5 if v < 5 else v - 4


def sample_element(rng: SplitMix64, ring: Ring, poly_degree: int = 1):
    """One entry from the pinned per-ring distribution."""
    if isinstance(ring, IntegerRing):
        return rng.randint(-9, 9)
    if isinstance(ring, ModRing):
        return rng.below(ring.m)
    if isinstance(ring, RationalRing):
        return Fraction(_nonzero_small(rng), _nonzero_small(rng))
    if isinstance(ring, PolynomialRing):
        return Polynomial(ring.base, [
            sample_element(rng, ring.base, poly_degree)
            for _ in range(poly_degree + 1)
        ])
    raise RingError(f"no sampler for ring {ring}")


def sample_matrix(rng: SplitMix64, ring: Ring, rows: int, cols: int,
                  poly_degree: int = 1) -> Matrix:
    return Matrix(ring, rows, cols, [
        sample_element(rng, ring, poly_degree)
        for _ in range(rows * cols)
    ])


def sample_singular(rng: SplitMix64, ring: Ring, n: int,
                    poly_degree: int = 1) -> Matrix:
    """A square matrix with determinant zero over any commutative ring.

    For n >= 2 the second row is a copy of the first; n = 1 gives (0).
    n = 0 is impossible (the empty determinant is 1) and rejected.
    """
    if n < 1:
        raise ValueError("no singular 0 x 0 matrix exists")
    if n == 1:
        return Matrix.zeros(ring, 1, 1)
    a = sample_matrix(rng, ring, n, n, poly_degree)
    entries = list(a._e)
    entries[n:2 * n] = entries[0:n]
    return Matrix(ring, n, n, entries)


def sample_strict_upper(rng: SplitMix64, ring: Ring, n: int, dist: int = 1,
                        poly_degree: int = 1) -> Matrix:
    """Entries only where column - row >= dist, hence nilpotent."""
    zero = ring.zero()
    entries = []
    for i in range(n):
        for j in range(n):
            if j - i >= dist:
                entries.append(sample_element(rng, ring, poly_degree))
            else:
                entries.append(zero)
    return Matrix(ring, n, n, entries)


def sample_nilpotent(rng: SplitMix64, ring: Ring, n: int, k: int,
                     poly_degree: int = 1) -> Matrix:
    """A matrix with A**(k+1) = 0: banded strictly upper triangular.

    Entries sit at distance >= ceil(n / (k+1)) above the diagonal, so the
    (k+1)-st power vanishes; k = 0 forces the zero matrix.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if n == 0:
        return Matrix(ring, 0, 0, ())
    dist = -(-n // (k + 1))
    return sample_strict_upper(rng, ring, n, dist, poly_degree)


def sample_commuting(rng: SplitMix64, a: Matrix, poly_degree: int = 1) -> Matrix:
    """A matrix that provably commutes with a: a random polynomial in a."""
    ring = a.ring
    p = Polynomial(ring, [
        sample_element(rng, ring, poly_degree) for _ in range(3)
    ])
    return apply_poly(p, a)


def sample_subset(rng: SplitMix64, n: int, k: int) -> tuple:
    """k distinct values from 1..n, sorted (partial Fisher-Yates)."""
    pool = list(range(1, n + 1))
    for i in range(k):
        j = i + rng.below(n - i)
        pool[i], pool[j] = pool[j], pool[i]
    return tuple(sorted(pool[:k]))


def sample_indicator(ring: Ring, rows: int, cols: int, i: int, j: int) -> Matrix:
    """Zero matrix with a single 1 in position (i, j), 1-based."""
    zero, one = ring.zero(), ring.one()
    return Matrix(ring, rows, cols, [
        one if (r, c) == (i - 1, j - 1) else zero
        for r in range(rows) for c in range(cols)
    ])


def characteristic(ring: Ring) -> int:
    """0 for the integers and rationals, m for mod-m, inherited by R[t]."""
    if isinstance(ring, ModRing):
        return ring.m
    if isinstance(ring, PolynomialRing):
        return characteristic(ring.base)
    return 0


def power_nilpotent(m: int):
    """(e, k) with e**(k+1) = 0 mod m and e**k nonzero, or None.

    e is the radical of m (the product of its distinct prime factors);
    when m is squarefree the mod-m ring has no nonzero nilpotents.
    """
    if m < 2:
        return None
    rest = m
    radical = 1
    max_exp = 0
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            radical *= d
            exp = 0
            while rest % d == 0:
                rest //= d
                exp += 1
            max_exp = max(max_exp, exp)
        d += 1
    if rest > 1:
        radical *= rest
        max_exp = max(max_exp, 1)
    if radical == m:
        return None
    return radical, max_exp - 1
