"""Characteristic polynomials, adjugates, and their exact invariants.

charpoly(A) computes chi_A = det(t*I - A) by running the generic
determinant over the polynomial ring, then recovers the coefficient
matrices D_0 .. D_(n-1) of adj(t*I - A) = sum_k t**k * D_k by the cheap
descending recursion

    D_(n-1) = I,        D_(k-1) = A @ D_k + c_(n-k) * I,

which never touches polynomial arithmetic.  The expensive route (the
adjugate computed over the polynomial ring and read off coefficientwise)
exists in the test suite as an independent oracle for this recursion.

Coefficients are indexed from the top: c_j is the coefficient of
t**(n-j), so c_0 = 1 and c_n = (-1)**n * det(A).  Everything here is
division-free except charpoly_newton, which resolves the trace recursion

    k * c_k = -(Tr(A) * c_(k-1) + Tr(A**2) * c_(k-2) + ... + Tr(A**k) * c_0)

and is therefore restricted to rings that divide exactly by integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import Matrix, apply_poly, char_matrix
from .poly import Polynomial
from .rings import QAlgebraRequiredError, ShapeError


@dataclass(frozen=True)
class CharPolyData:
    """chi_A with its coefficient family and adjugate coefficient matrices.

    chi is monic of degree n; c has length n + 1 with c[j] the coefficient
    of t**(n-j); D has length n with D[k] the coefficient matrix of t**k
    in adj(t*I - A).
    """

    n: int
    chi: Polynomial
    c: tuple
    D: tuple

    def coefficient(self, j: int):
        """c_j, defined as zero for j outside 0..n."""
        if 0 <= j <= self.n:
            return self.c[j]
        return self.chi.ring.zero()

    def coefficient_matrix(self, k: int) -> Matrix:
        """D_k, defined as the zero matrix for k outside 0..n-1."""
        if 0 <= k < self.n:
            return self.D[k]
        ring = self.chi.ring
        return Matrix.zeros(ring, self.n, self.n)

    def to_json(self) -> dict:
        ring = self.chi.ring
        return {
            "chi": self.chi.to_json(),
            "c": [ring.element_to_json(v) for v in self.c],
            "D": [d.to_json() for d in self.D],
        }


def _require_square(a: Matrix) -> None:
    if not a.is_square():
        raise ShapeError(
            f"characteristic polynomial requires a square matrix, "
            f"got {a.rows} x {a.cols}")


def _assemble(a: Matrix, chi: Polynomial) -> CharPolyData:
    K = a.ring
    n = a.rows
    c = tuple(chi.coeff(n - j) for j in range(n + 1))
    # adj(t*I - A) coefficient matrices, highest index first
    D = [None] * n
    if n:
        D[n - 1] = Matrix.identity(K, n)
        for k in range(n - 1, 0, -1):
            D[k - 1] = a @ D[k] + Matrix.identity(K, n).scale(c[n - k])
    return CharPolyData(n=n, chi=chi, c=c, D=tuple(D))


def charpoly(a: Matrix) -> CharPolyData:
    """Characteristic polynomial of a square matrix, division-free."""
    _require_square(a)
    chi = char_matrix(a).det()
    return _assemble(a, chi)


def charpoly_newton(a: Matrix) -> CharPolyData:
    """Characteristic polynomial via the trace recursion.

    Requires the ring to divide exactly by positive integers; raises
    QAlgebraRequiredError otherwise.  Agrees with charpoly() wherever both
    are defined.
    """
    _require_square(a)
    K = a.ring
    if not K.is_q_algebra:
        raise QAlgebraRequiredError(
            f"trace recursion needs exact division by integers; "
            f"ring {K} does not provide it")
    n = a.rows
    tr = power_traces(a, n)
    c = [K.one()]
    for k in range(1, n + 1):
        acc = K.zero()
        for i in range(1, k + 1):
            acc = K.add(acc, K.mul(tr[i], c[k - i]))
        c.append(K.neg(K.div_int(acc, k)))
    chi = Polynomial(K, [c[n - k] for k in range(n + 1)])
    return _assemble(a, chi)


def power_traces(a: Matrix, imax: int) -> list:
    """[_, Tr(A), Tr(A**2), ..., Tr(A**imax)] (index 0 unused)."""
    _require_square(a)
    K = a.ring
    out = [K.zero()]
    p = None
    for _ in range(imax):
        p = a if p is None else p @ a
        out.append(p.trace())
    return out


def adjugate_via_charpoly(a: Matrix) -> Matrix:
    """adj(A) = (-1)**(n-1) * (c_(n-1)*I + c_(n-2)*A + ... + c_0*A**(n-1)).

    An independent route to the adjugate that never forms a cofactor; for
    n = 0 it returns the empty matrix, matching Matrix.adjugate().
    """
    _require_square(a)
    K = a.ring
    n = a.rows
    if n == 0:
        return Matrix(K, 0, 0, ())
    data = charpoly(a)
    acc = Matrix.identity(K, n).scale(data.c[0])
    for i in range(1, n):
        acc = acc @ a + Matrix.identity(K, n).scale(data.c[i])
    if (n - 1) & 1:
        acc = -acc
    return acc


def cayley_hamilton_residual(a: Matrix) -> Matrix:
    """chi_A(A), which the Cayley-Hamilton theorem says is the zero matrix."""
    return apply_poly(charpoly(a).chi, a)


def trace_cayley_hamilton_residual(a: Matrix, k: int) -> object:
    """k*c_k + sum_i Tr(A**i)*c_(k-i) for i = 1..k; zero for every k >= 0.

    c_j denotes the coefficient of t**(n-j) in chi_A, taken as zero
    outside 0..n, so the residual is meaningful for every k (the
    interesting range is k <= 2n + 1).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    _require_square(a)
    K = a.ring
    data = charpoly(a)
    tr = power_traces(a, k)
    acc = K.mul(K.from_int(k), data.coefficient(k))
    for i in range(1, k + 1):
        acc = K.add(acc, K.mul(tr[i], data.coefficient(k - i)))
    return acc
