"""Mechanical checks for determinant and trace identities.

Every verify_* function instantiates one identity on concrete inputs,
computes both sides with exact ring arithmetic, and returns a
VerificationReport whose residual is the difference.  Nothing is proved
here; the point is that each equality is checked literally, over any
commutative ring, including rings with zero divisors.

Checks with a hypothesis (nilpotency, vanishing traces, prime
characteristic) first test the hypothesis on the given inputs and report
"hypothesis not met" without judging the identity; checks whose
precondition is the caller's responsibility (commuting factors) raise
PreconditionError instead, so a bad call is never confused with a
counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial

from .charpoly import (
    adjugate_via_charpoly,
    cayley_hamilton_residual,
    charpoly,
    charpoly_newton,
    power_traces,
)
from .matrix import Matrix, block2x2, char_matrix, ent
from .poly import Polynomial, PolynomialRing
from .report import VerificationReport, hypothesis_not_met, make_report
from .rings import ZZ, GuardError, PreconditionError, ShapeError

TERM_GUARD = 100_000


@dataclass(frozen=True)
class IndexSubset:
    """A subset of {1, .., n} kept as a strictly increasing member tuple."""

    n: int
    members: tuple

    def __init__(self, n: int, members):
        members = tuple(members)
        if sorted(set(members)) != list(members):
            raise ValueError(f"members must be strictly increasing, got {members}")
        if members and not (1 <= members[0] and members[-1] <= n):
            raise ValueError(f"members {members} out of range 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def weight(self) -> int:
        """Sum of the members (drives the sign in complementary-minor laws)."""
        return sum(self.members)

    def complement(self) -> "IndexSubset":
        chosen = set(self.members)
        return IndexSubset(self.n, [i for i in range(1, self.n + 1)
                                    if i not in chosen])


def subset_pairs(n: int):
    """All (P, Q) with P, Q subsets of {1..n}, |P| = |Q| >= 1, in a fixed order."""
    for k in range(1, n + 1):
        for p in combinations(range(1, n + 1), k):
            for q in combinations(range(1, n + 1), k):
                yield IndexSubset(n, p), IndexSubset(n, q)


def multinomial(m: int, parts) -> int:
    """m! / (i_1! * ... * i_n!) for a composition (i_1, .., i_n) of m."""
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"composition parts must be nonnegative, got {parts}")
    if sum(parts) != m:
        raise ValueError(f"parts {parts} sum to {sum(parts)}, expected {m}")
    out = factorial(m)
    for p in parts:
        out //= factorial(p)
    return out


def compositions(m: int, n: int):
    """All n-tuples of nonnegative integers summing to m, lexicographic."""
    if n == 0:
        if m == 0:
            yield ()
        return
    if n == 1:
        yield (m,)
        return
    for first in range(m + 1):
        for rest in compositions(m - first, n - 1):
            yield (first,) + rest


def _square(a: Matrix, what: str) -> None:
    if not a.is_square():
        raise ShapeError(f"{what} requires a square matrix, got {a.rows} x {a.cols}")


def _same_ring(*ms) -> None:
    for m in ms[1:]:
        ms[0]._check_ring(m)


# ---------------------------------------------------------------------------
# determinant and trace basics


def verify_det_oracle(a: Matrix) -> VerificationReport:
    """Production determinant against the naive permutation sum (n <= 8)."""
    _square(a, "det cross-check")
    K = a.ring
    return make_report(
        "det_oracle", K.sub(a.det(), a.det_leibniz()), ring=K,
        inputs={"matrix": a.to_json()},
    )


def verify_det_product(a: Matrix, b: Matrix) -> VerificationReport:
    """det(A @ B) = det(A) * det(B)."""
    _square(a, "det product")
    _square(b, "det product")
    _same_ring(a, b)
    K = a.ring
    return make_report(
        "det_product", K.sub((a @ b).det(), K.mul(a.det(), b.det())), ring=K,
        inputs={"matrix": a.to_json(), "matrix_b": b.to_json()},
    )


def verify_det_scalar(a: Matrix, lam) -> VerificationReport:
    """det(lam * A) = lam**n * det(A)."""
    _square(a, "scaled determinant")
    K = a.ring
    lam = K.coerce(lam)
    diff = K.sub(a.scale(lam).det(), K.mul(K.pow(lam, a.rows), a.det()))
    return make_report(
        "det_scalar", diff, ring=K,
        inputs={"matrix": a.to_json(), "scalar": K.element_to_json(lam)},
    )


def verify_trace_product(a: Matrix, b: Matrix) -> VerificationReport:
    """Tr(A @ B) as the double sum over entries, and Tr(A @ B) = Tr(B @ A)."""
    _same_ring(a, b)
    if a.cols != b.rows or b.cols != a.rows:
        raise ShapeError(
            f"need n x m against m x n, got {a.rows} x {a.cols} "
            f"and {b.rows} x {b.cols}")
    K = a.ring
    inputs = {"matrix": a.to_json(), "matrix_b": b.to_json()}
    acc = K.zero()
    for i in range(1, a.rows + 1):
        for j in range(1, a.cols + 1):
            acc = K.add(acc, K.mul(a.entry(i, j), b.entry(j, i)))
    diff = K.sub((a @ b).trace(), acc)
    if not K.is_zero(diff):
        return make_report("trace_product", diff, ring=K, inputs=inputs,
                           part="entry_double_sum")
    diff = K.sub((a @ b).trace(), (b @ a).trace())
    return make_report("trace_product", diff, ring=K, inputs=inputs,
                       part="cyclic_swap")


def verify_laplace(a: Matrix) -> VerificationReport:
    """Cofactor expansion of det(A) along every row."""
    _square(a, "Laplace expansion")
    K = a.ring
    n = a.rows
    d = a.det()
    inputs = {"matrix": a.to_json()}
    for p in range(1, n + 1):
        acc = K.zero()
        for q in range(1, n + 1):
            term = K.mul(a.entry(p, q), a.minor(p, q).det())
            if (p + q) & 1:
                term = K.neg(term)
            acc = K.add(acc, term)
        diff = K.sub(d, acc)
        if not K.is_zero(diff):
            return make_report("laplace", diff, ring=K, inputs=inputs,
                               part=f"row_{p}")
    return make_report("laplace", K.zero(), ring=K, inputs=inputs)


def verify_row_of_product(a: Matrix, b: Matrix) -> VerificationReport:
    """row_j(A @ B) = row_j(A) @ B for every row j."""
    _same_ring(a, b)
    if a.cols != b.rows:
        raise ShapeError("inner dimensions must agree")
    prod = a @ b
    inputs = {"matrix": a.to_json(), "matrix_b": b.to_json()}
    for j in range(1, a.rows + 1):
        diff = prod.row(j) - (a.row(j) @ b)
        if not diff.is_zero():
            return make_report("row_of_product", diff, inputs=inputs,
                               part=f"row_{j}")
    return make_report("row_of_product", Matrix.zeros(a.ring, 1, b.cols),
                       inputs=inputs)


def verify_adj_inverse(a: Matrix) -> VerificationReport:
    """A @ adj(A) = adj(A) @ A = det(A) * I."""
    _square(a, "adjugate law")
    K = a.ring
    n = a.rows
    adj = a.adjugate()
    target = Matrix.identity(K, n).scale(a.det())
    inputs = {"matrix": a.to_json()}
    diff = (a @ adj) - target
    if not diff.is_zero():
        return make_report("adj_inverse", diff, inputs=inputs, part="right")
    return make_report("adj_inverse", (adj @ a) - target, inputs=inputs,
                       part="left")


def verify_eval_zero_hom(a: Matrix) -> VerificationReport:
    """Evaluation at t = 0 carries det, adjugate, and entries of t*I + A back to A.

    Exercises the fact that entrywise ring maps commute with det and adj,
    using the evaluation map of the polynomial ring.
    """
    _square(a, "evaluation check")
    K = a.ring
    # t*I + A is the characteristic matrix of -A
    tia = char_matrix(-a)

    def eps(poly):
        return poly.eval_zero()

    inputs = {"matrix": a.to_json()}
    diff = K.sub(eps(tia.det()), a.det())
    if not K.is_zero(diff):
        return make_report("eval_zero_hom", diff, ring=K, inputs=inputs,
                           part="determinant")
    diffm = tia.adjugate().map_entries(eps, K) - a.adjugate()
    if not diffm.is_zero():
        return make_report("eval_zero_hom", diffm, inputs=inputs,
                           part="adjugate")
    return make_report("eval_zero_hom", tia.map_entries(eps, K) - a,
                       inputs=inputs, part="entries")


def verify_det_affine_degree(a: Matrix, b: Matrix) -> VerificationReport:
    """det(t*A + B) has degree <= n, constant term det(B), top term det(A)."""
    _square(a, "affine pencil")
    _square(b, "affine pencil")
    _same_ring(a, b)
    if a.rows != b.rows:
        raise ShapeError("pencil matrices must have equal size")
    K = a.ring
    L = PolynomialRing(K)
    n = a.rows
    t = L.t()
    pencil = Matrix(L, n, n, [
        t.scale(av) + Polynomial(K, (bv,))
        for av, bv in zip(a._e, b._e)
    ])
    p = pencil.det()
    inputs = {"matrix": a.to_json(), "matrix_b": b.to_json()}
    if p.degree > n:
        return make_report("det_affine_degree", p.coeff(p.degree), ring=K,
                           inputs=inputs, part="degree_bound")
    diff = K.sub(p.coeff(0), b.det())
    if not K.is_zero(diff):
        return make_report("det_affine_degree", diff, ring=K, inputs=inputs,
                           part="constant_term")
    return make_report("det_affine_degree", K.sub(p.coeff(n), a.det()),
                       ring=K, inputs=inputs, part="top_term")


# ---------------------------------------------------------------------------
# characteristic polynomial identities


def verify_cayley_hamilton(a: Matrix) -> VerificationReport:
    """chi_A(A) = 0."""
    _square(a, "Cayley-Hamilton")
    return make_report("cayley_hamilton", cayley_hamilton_residual(a),
                       inputs={"matrix": a.to_json()})


def verify_trace_cayley_hamilton(a: Matrix, kmax: int | None = None) -> VerificationReport:
    """k*c_k + sum_i Tr(A**i)*c_(k-i) = 0 for k = 0 .. kmax (default 2n+1)."""
    _square(a, "trace recursion")
    K = a.ring
    n = a.rows
    if kmax is None:
        kmax = 2 * n + 1
    data = charpoly(a)
    tr = power_traces(a, kmax)
    inputs = {"matrix": a.to_json(), "kmax": kmax}
    for k in range(kmax + 1):
        acc = K.mul(K.from_int(k), data.coefficient(k))
        for i in range(1, k + 1):
            acc = K.add(acc, K.mul(tr[i], data.coefficient(k - i)))
        if not K.is_zero(acc):
            return make_report("trace_cayley_hamilton", acc, ring=K,
                               inputs=inputs, part=f"k_{k}")
    return make_report("trace_cayley_hamilton", K.zero(), ring=K,
                       inputs=inputs)


def verify_newton_agreement(a: Matrix) -> VerificationReport:
    """charpoly and charpoly_newton produce identical data (Q-algebras)."""
    _square(a, "trace-recursion agreement")
    K = a.ring
    inputs = {"matrix": a.to_json()}
    if not K.is_q_algebra:
        return hypothesis_not_met(
            "newton_agreement", f"ring {K} is not a Q-algebra", inputs)
    direct = charpoly(a)
    newton = charpoly_newton(a)
    L = PolynomialRing(K)
    diff = L.sub(direct.chi, newton.chi)
    if not L.is_zero(diff):
        return make_report("newton_agreement", diff, ring=L, inputs=inputs,
                           part="chi")
    for j in range(a.rows + 1):
        d = K.sub(direct.c[j], newton.c[j])
        if not K.is_zero(d):
            return make_report("newton_agreement", d, ring=K, inputs=inputs,
                               part=f"c_{j}")
    for k in range(a.rows):
        dm = direct.D[k] - newton.D[k]
        if not dm.is_zero():
            return make_report("newton_agreement", dm, inputs=inputs,
                               part=f"D_{k}")
    return make_report("newton_agreement", K.zero(), ring=K, inputs=inputs)


def verify_adj_via_charpoly(a: Matrix) -> VerificationReport:
    """The coefficient-polynomial route to adj(A) against the cofactor route."""
    _square(a, "adjugate comparison")
    return make_report(
        "adj_via_charpoly", adjugate_via_charpoly(a) - a.adjugate(),
        inputs={"matrix": a.to_json()},
    )


def verify_charpoly_derivative(a: Matrix) -> VerificationReport:
    """d/dt chi_A = Tr(adj(t*I - A)), as polynomials."""
    _square(a, "characteristic derivative")
    K = a.ring
    L = PolynomialRing(K)
    diff = L.sub(charpoly(a).chi.derivative(), char_matrix(a).adjugate().trace())
    return make_report("charpoly_derivative", diff, ring=L,
                       inputs={"matrix": a.to_json()})


def verify_adj_trace(a: Matrix) -> VerificationReport:
    """Tr(adj A) = (-1)**(n-1) * c_(n-1) (the coefficient of t**1 in chi_A)."""
    _square(a, "adjugate trace")
    K = a.ring
    n = a.rows
    data = charpoly(a)
    rhs = data.coefficient(n - 1)
    if (n - 1) & 1:
        rhs = K.neg(rhs)
    return make_report(
        "adj_trace", K.sub(a.adjugate().trace(), rhs), ring=K,
        inputs={"matrix": a.to_json()},
    )


def verify_trace_of_D(a: Matrix) -> VerificationReport:
    """Tr(D_k) = (k+1) * c_(n-k-1) for every k, including out-of-range zeros."""
    _square(a, "adjugate coefficient traces")
    K = a.ring
    n = a.rows
    data = charpoly(a)
    inputs = {"matrix": a.to_json()}
    for k in range(-1, n + 2):
        lhs = data.coefficient_matrix(k).trace()
        rhs = K.mul(K.from_int(k + 1), data.coefficient(n - k - 1))
        diff = K.sub(lhs, rhs)
        if not K.is_zero(diff):
            return make_report("trace_of_D", diff, ring=K, inputs=inputs,
                               part=f"k_{k}")
    return make_report("trace_of_D", K.zero(), ring=K, inputs=inputs)


def verify_coefficient_family(a: Matrix) -> VerificationReport:
    """The two exact laws tying D_k to the coefficients of chi_A.

    Difference law: c_(n-k) * I = D_(k-1) - A @ D_k for k = 0..n, with
    D_j the zero matrix outside 0..n-1.  Summation law:
    sum_(i=0..k) c_(k-i) * A**i = D_(n-1-k) for k = 0..n (at k = n this
    is Cayley-Hamilton again, with a zero right side).
    """
    _square(a, "coefficient family")
    K = a.ring
    n = a.rows
    data = charpoly(a)
    ident = Matrix.identity(K, n)
    inputs = {"matrix": a.to_json()}
    for k in range(n + 1):
        lhs = ident.scale(data.coefficient(n - k))
        rhs = data.coefficient_matrix(k - 1) - (a @ data.coefficient_matrix(k))
        diff = lhs - rhs
        if not diff.is_zero():
            return make_report("coefficient_family", diff, inputs=inputs,
                               part=f"difference_k_{k}")
    for k in range(n + 1):
        total = Matrix.zeros(K, n, n)
        power = ident
        for i in range(k + 1):
            total = total + power.scale(data.coefficient(k - i))
            if i < k:
                power = power @ a
        diff = total - data.coefficient_matrix(n - 1 - k)
        if not diff.is_zero():
            return make_report("coefficient_family", diff, inputs=inputs,
                               part=f"summation_k_{k}")
    return make_report("coefficient_family", Matrix.zeros(K, n, n),
                       inputs=inputs)


def verify_trace_coefficient(a: Matrix) -> VerificationReport:
    """c_1 = -Tr(A), i.e. the coefficient of t**(n-1) in chi_A."""
    _square(a, "trace coefficient")
    K = a.ring
    data = charpoly(a)
    diff = K.add(data.coefficient(1), a.trace())
    return make_report("trace_coefficient", diff, ring=K,
                       inputs={"matrix": a.to_json()})


# ---------------------------------------------------------------------------
# adjugate identities


def verify_adj_product(a: Matrix, b: Matrix) -> VerificationReport:
    """adj(A @ B) = adj(B) @ adj(A) (order reverses)."""
    _square(a, "adjugate of product")
    _square(b, "adjugate of product")
    _same_ring(a, b)
    if a.rows != b.rows:
        raise ShapeError("factors must have equal size")
    diff = (a @ b).adjugate() - (b.adjugate() @ a.adjugate())
    return make_report("adj_product", diff,
                       inputs={"matrix": a.to_json(), "matrix_b": b.to_json()})


def verify_adj_of_adj(a: Matrix) -> VerificationReport:
    """det(adj A) = det(A)**(n-1) and adj(adj A) = det(A)**(n-2) * A.

    The determinant half applies for n >= 1, the adjugate half for n >= 2;
    a 0 x 0 input passes vacuously.
    """
    _square(a, "iterated adjugate")
    K = a.ring
    n = a.rows
    inputs = {"matrix": a.to_json()}
    if n == 0:
        return make_report("adj_of_adj", K.zero(), ring=K, inputs=inputs)
    adj = a.adjugate()
    d = a.det()
    diff = K.sub(adj.det(), K.pow(d, n - 1))
    if not K.is_zero(diff):
        return make_report("adj_of_adj", diff, ring=K, inputs=inputs,
                           part="det_of_adj")
    if n >= 2:
        diffm = adj.adjugate() - a.scale(K.pow(d, n - 2))
        return make_report("adj_of_adj", diffm, inputs=inputs,
                           part="adj_of_adj")
    return make_report("adj_of_adj", K.zero(), ring=K, inputs=inputs)


def verify_adj_scalar(a: Matrix, lam) -> VerificationReport:
    """adj(lam * A) = lam**(n-1) * adj(A), n >= 1."""
    _square(a, "scaled adjugate")
    if a.rows == 0:
        raise ShapeError("scaled-adjugate law requires n >= 1")
    K = a.ring
    lam = K.coerce(lam)
    diff = a.scale(lam).adjugate() - a.adjugate().scale(K.pow(lam, a.rows - 1))
    return make_report(
        "adj_scalar", diff,
        inputs={"matrix": a.to_json(), "scalar": K.element_to_json(lam)},
    )


def verify_jacobi(a: Matrix, p: IndexSubset, q: IndexSubset) -> VerificationReport:
    """Jacobi's complementary-minor law for the adjugate.

    For |P| = |Q| = k >= 1:
        det(adj(A)[P, Q])
          = (-1)**(weight(P) + weight(Q)) * det(A)**(k-1)
            * det(A[complement(Q), complement(P)])
    Note the complements swap sides.
    """
    _square(a, "complementary minors")
    n = a.rows
    if p.n != n or q.n != n:
        raise ShapeError(f"subsets are over 1..{p.n} and 1..{q.n}, matrix has n = {n}")
    k = len(p)
    if k != len(q):
        raise PreconditionError(f"|P| = {k} and |Q| = {len(q)} must be equal")
    if k == 0:
        raise PreconditionError("empty subsets are excluded (k >= 1)")
    K = a.ring
    lhs = a.adjugate().submatrix(p.members, q.members).det()
    rhs = K.mul(
        K.pow(a.det(), k - 1),
        a.submatrix(q.complement().members, p.complement().members).det(),
    )
    if (p.weight() + q.weight()) & 1:
        rhs = K.neg(rhs)
    return make_report(
        "jacobi", K.sub(lhs, rhs), ring=K,
        inputs={"matrix": a.to_json(), "P": list(p.members), "Q": list(q.members)},
    )


# ---------------------------------------------------------------------------
# block and perturbation identities


def verify_commute_swap(a: Matrix, b: Matrix, s: Matrix) -> VerificationReport:
    """If A and B commute then det(A @ S + B) = det(S @ A + B) for any S."""
    for m in (a, b, s):
        _square(m, "commuting swap")
    _same_ring(a, b, s)
    if not (a.rows == b.rows == s.rows):
        raise ShapeError("all three matrices must have equal size")
    if not ((a @ b) - (b @ a)).is_zero():
        raise PreconditionError("A and B do not commute; the law is not claimed")
    K = a.ring
    diff = K.sub(((a @ s) + b).det(), ((s @ a) + b).det())
    return make_report(
        "commute_swap", diff, ring=K,
        inputs={"matrix": a.to_json(), "matrix_b": b.to_json(),
                "matrix_s": s.to_json()},
    )


def verify_block_commute(a: Matrix, b: Matrix, c: Matrix,
                         d: Matrix) -> VerificationReport:
    """If A and C commute then det([[A, B], [C, D]]) = det(A @ D - C @ B)."""
    for m in (a, b, c, d):
        _square(m, "commuting block determinant")
    _same_ring(a, b, c, d)
    if not (a.rows == b.rows == c.rows == d.rows):
        raise ShapeError("all four blocks must be n x n for one n")
    if not ((a @ c) - (c @ a)).is_zero():
        raise PreconditionError("A and C do not commute; the law is not claimed")
    K = a.ring
    diff = K.sub(block2x2(a, b, c, d).det(), ((a @ d) - (c @ b)).det())
    return make_report(
        "block_commute", diff, ring=K,
        inputs={"matrix": a.to_json(), "matrix_b": b.to_json(),
                "matrix_c": c.to_json(), "matrix_d": d.to_json()},
    )


def _is_identity_1x1(m: Matrix) -> bool:
    return (m.rows, m.cols) == (1, 1) and m.ring.is_zero(
        m.ring.sub(m.entry(1, 1), m.ring.one()))


def _is_indicator(m: Matrix, i: int, j: int) -> bool:
    """True when m is zero except for a 1 in position (i, j)."""
    K = m.ring
    for r in range(1, m.rows + 1):
        for c in range(1, m.cols + 1):
            want = K.one() if (r, c) == (i, j) else K.zero()
            if not K.is_zero(K.sub(m.entry(r, c), want)):
                return False
    return True


def verify_rank1_block(a: Matrix, d: Matrix, p: Matrix, q: Matrix,
                       v: Matrix, u: Matrix) -> VerificationReport:
    """det([[A, p@v], [q@u, D]]) = det(A)*det(D) - ent(u@adj(A)@p) * ent(v@adj(D)@q).

    A is n x n, D is m x m, p is n x 1, q is m x 1, v is 1 x m, u is 1 x n.
    When the inputs match the bordered pattern (m = 1, q = v = (1)) the
    bordered-determinant corollary is checked as well, and when p, v, q, u
    are the corner indicator vectors the complementary-minor corollary
    det(A)*det(D) - det(A minor n,n)*det(D minor 1,1) is checked too.
    """
    _square(a, "rank-one block")
    _square(d, "rank-one block")
    _same_ring(a, d, p, q, v, u)
    n, m = a.rows, d.rows
    if (p.rows, p.cols) != (n, 1) or (q.rows, q.cols) != (m, 1):
        raise ShapeError("p must be n x 1 and q must be m x 1")
    if (v.rows, v.cols) != (1, m) or (u.rows, u.cols) != (1, n):
        raise ShapeError("v must be 1 x m and u must be 1 x n")
    K = a.ring
    adj_a = a.adjugate()
    adj_d = d.adjugate()
    lhs = block2x2(a, p @ v, q @ u, d).det()
    rhs = K.sub(
        K.mul(a.det(), d.det()),
        K.mul(ent(u @ adj_a @ p), ent(v @ adj_d @ q)),
    )
    inputs = {
        "matrix": a.to_json(), "matrix_d": d.to_json(),
        "p": p.to_json(), "q": q.to_json(),
        "v": v.to_json(), "u": u.to_json(),
    }
    diff = K.sub(lhs, rhs)
    if not K.is_zero(diff):
        return make_report("rank1_block", diff, ring=K, inputs=inputs,
                           part="general")
    if m == 1 and _is_identity_1x1(q) and _is_identity_1x1(v):
        bordered = K.sub(K.mul(ent(d), a.det()), ent(u @ adj_a @ p))
        diff = K.sub(lhs, bordered)
        if not K.is_zero(diff):
            return make_report("rank1_block", diff, ring=K, inputs=inputs,
                               part="bordered")
    if (n >= 1 and m >= 1
            and _is_indicator(p, n, 1) and _is_indicator(v, 1, 1)
            and _is_indicator(q, 1, 1) and _is_indicator(u, 1, n)):
        corner = K.sub(
            K.mul(a.det(), d.det()),
            K.mul(a.minor(n, n).det(), d.minor(1, 1).det()),
        )
        diff = K.sub(lhs, corner)
        return make_report("rank1_block", diff, ring=K, inputs=inputs,
                           part="corner_indicators")
    return make_report("rank1_block", K.zero(), ring=K, inputs=inputs)


def verify_matrix_det_lemma(a: Matrix, u: Matrix, v: Matrix) -> VerificationReport:
    """det(A + u@v) = det(A) + ent(v@adj(A)@u) for a column u and row v."""
    _square(a, "rank-one update")
    _same_ring(a, u, v)
    n = a.rows
    if (u.rows, u.cols) != (n, 1) or (v.rows, v.cols) != (1, n):
        raise ShapeError("u must be n x 1 and v must be 1 x n")
    K = a.ring
    diff = K.sub((a + u @ v).det(),
                 K.add(a.det(), ent(v @ a.adjugate() @ u)))
    return make_report(
        "matrix_det_lemma", diff, ring=K,
        inputs={"matrix": a.to_json(), "u": u.to_json(), "v": v.to_json()},
    )


# ---------------------------------------------------------------------------
# nilpotency and trace-power identities


def verify_nilpotency_criterion(a: Matrix) -> VerificationReport:
    """Vanishing power traces force nilpotency.

    Hypothesis: Tr(A**i) = 0 for i = 1..n.  Consequences checked:
    n! * A**n = 0 and n! * chi_A = n! * t**n always; over a Q-algebra also
    A**n = 0 and chi_A = t**n on the nose.
    """
    _square(a, "nilpotency criterion")
    K = a.ring
    n = a.rows
    inputs = {"matrix": a.to_json()}
    tr = power_traces(a, n)
    for i in range(1, n + 1):
        if not K.is_zero(tr[i]):
            return hypothesis_not_met(
                "nilpotency",
                f"Tr(A**{i}) = {K.format(tr[i])} is nonzero", inputs)
    nfact = K.from_int(factorial(n))
    an = a ** n
    diffm = an.scale(nfact)
    if not diffm.is_zero():
        return make_report("nilpotency", diffm, inputs=inputs,
                           part="factorial_power")
    L = PolynomialRing(K)
    chi = charpoly(a).chi
    tn = Polynomial(K, tuple([K.zero()] * n + [K.one()]))
    diffp = L.sub(chi.scale(nfact), tn.scale(nfact))
    if not L.is_zero(diffp):
        return make_report("nilpotency", diffp, ring=L, inputs=inputs,
                           part="factorial_charpoly")
    if K.is_q_algebra:
        if not an.is_zero():
            return make_report("nilpotency", an, inputs=inputs,
                               part="power")
        diffp = L.sub(chi, tn)
        if not L.is_zero(diffp):
            return make_report("nilpotency", diffp, ring=L, inputs=inputs,
                               part="charpoly")
    return make_report("nilpotency", K.zero(), ring=K, inputs=inputs)


def verify_nilpotency_converse(a: Matrix, imax: int) -> VerificationReport:
    """If chi_A = t**n then Tr(A**i) = 0 for every positive i (checked to imax)."""
    _square(a, "nilpotency converse")
    if imax < 1:
        raise ValueError("imax must be at least 1")
    K = a.ring
    n = a.rows
    inputs = {"matrix": a.to_json(), "imax": imax}
    chi = charpoly(a).chi
    tn = Polynomial(K, tuple([K.zero()] * n + [K.one()]))
    L = PolynomialRing(K)
    if not L.is_zero(L.sub(chi, tn)):
        return hypothesis_not_met(
            "nilpotency_converse", "chi_A is not t**n", inputs)
    tr = power_traces(a, imax)
    for i in range(1, imax + 1):
        if not K.is_zero(tr[i]):
            return make_report("nilpotency_converse", tr[i], ring=K,
                               inputs=inputs, part=f"trace_power_{i}")
    return make_report("nilpotency_converse", K.zero(), ring=K, inputs=inputs)


def verify_almkvist(a: Matrix, k: int) -> VerificationReport:
    """Trace powers of a nilpotent matrix.

    Hypothesis: A**(k+1) = 0.  Then Tr(A)**(n*k+1) = 0 and
    Tr(A)**(n*k) = ((n*k)! / (k!)**n) * det(A)**k, both exactly.
    """
    _square(a, "nilpotent trace powers")
    if k < 0:
        raise ValueError("k must be nonnegative")
    K = a.ring
    n = a.rows
    inputs = {"matrix": a.to_json(), "k": k}
    if not (a ** (k + 1)).is_zero():
        return hypothesis_not_met(
            "almkvist", f"A**{k + 1} is not the zero matrix", inputs)
    t = a.trace()
    diff = K.pow(t, n * k + 1)
    if not K.is_zero(diff):
        return make_report("almkvist", diff, ring=K, inputs=inputs,
                           part="vanishing_power")
    ratio = factorial(n * k) // factorial(k) ** n
    rhs = K.mul(K.from_int(ratio), K.pow(a.det(), k))
    return make_report("almkvist", K.sub(K.pow(t, n * k), rhs), ring=K,
                       inputs=inputs, part="closed_form")


def verify_trace_multinomial(a: Matrix, m: int) -> VerificationReport:
    """Tr(A)**m as a multinomial-weighted sum of row-mixed determinants.

    Sum over all compositions (i_1, .., i_n) of m: the multinomial
    coefficient times det of the matrix whose row j is row j of A**(i_j).
    The number of terms is C(m+n-1, n-1), guarded at 10**5.
    """
    _square(a, "trace multinomial")
    if m < 0:
        raise ValueError("m must be nonnegative")
    K = a.ring
    n = a.rows
    if n > 0 and comb(m + n - 1, n - 1) > TERM_GUARD:
        raise GuardError(
            f"{comb(m + n - 1, n - 1)} terms exceed the guard of {TERM_GUARD}")
    inputs = {"matrix": a.to_json(), "m": m}
    powers = [Matrix.identity(K, n)]
    for _ in range(m):
        powers.append(powers[-1] @ a)
    acc = K.zero()
    for parts in compositions(m, n):
        entries = []
        for j in range(1, n + 1):
            entries.extend(powers[parts[j - 1]].row_list(j))
        term = Matrix(K, n, n, entries).det()
        acc = K.add(acc, K.mul(K.from_int(multinomial(m, parts)), term))
    diff = K.sub(K.pow(a.trace(), m), acc)
    return make_report("trace_multinomial", diff, ring=K, inputs=inputs)


def verify_multinomial_recurrence(m: int, n: int) -> VerificationReport:
    """Pascal-style recurrence for multinomial coefficients, exhaustively.

    For every composition of m > 0 into n parts, the coefficient equals
    the sum of the coefficients of the compositions obtained by lowering
    one positive part of m-1 ... stated precisely:
    multinomial(m, parts) = sum over j with parts[j] >= 1 of
    multinomial(m-1, parts with parts[j] lowered by one).
    """
    if m < 1:
        raise ValueError("the recurrence needs m >= 1")
    inputs = {"m": m, "n": n}
    for parts in compositions(m, n):
        total = 0
        for j in range(n):
            if parts[j] >= 1:
                lowered = parts[:j] + (parts[j] - 1,) + parts[j + 1:]
                total += multinomial(m - 1, lowered)
        diff = multinomial(m, parts) - total
        if diff:
            return make_report("multinomial_recurrence", diff, ring=ZZ,
                               inputs=inputs, part=str(parts))
    return make_report("multinomial_recurrence", 0, ring=ZZ, inputs=inputs)


def verify_row_replacement(a: Matrix, b: Matrix) -> VerificationReport:
    """Sum over j of det(B with row j replaced by row j of B@A) = Tr(A)*det(B)."""
    _square(a, "row replacement")
    _square(b, "row replacement")
    _same_ring(a, b)
    if a.rows != b.rows:
        raise ShapeError("A and B must have equal size")
    K = a.ring
    n = a.rows
    ba = b @ a
    acc = K.zero()
    for j in range(1, n + 1):
        entries = []
        for i in range(1, n + 1):
            entries.extend((ba if i == j else b).row_list(i))
        acc = K.add(acc, Matrix(K, n, n, entries).det())
    diff = K.sub(acc, K.mul(a.trace(), b.det()))
    return make_report(
        "row_replacement", diff, ring=K,
        inputs={"matrix": a.to_json(), "matrix_b": b.to_json()},
    )


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def verify_frobenius_trace(a: Matrix, p: int) -> VerificationReport:
    """Tr(A**p) = Tr(A)**p when the prime p vanishes in the ring."""
    _square(a, "Frobenius trace")
    if not _is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    K = a.ring
    inputs = {"matrix": a.to_json(), "p": p}
    if not K.is_zero(K.from_int(p)):
        return hypothesis_not_met(
            "frobenius_trace", f"{p} is nonzero in {K}", inputs)
    diff = K.sub((a ** p).trace(), K.pow(a.trace(), p))
    return make_report("frobenius_trace", diff, ring=K, inputs=inputs)
