"""Derivations of a commutative ring and the derivative-of-determinant laws.

A derivation f of a ring L is an additive map L -> L with
f(ab) = a*f(b) + f(a)*b (so f(1) = 0).  Derivations here are extensional:
a label plus a Python callable on canonical values.  The axioms are not
decidable from the callable, so construct_* builds maps that satisfy them
and the test suite enforces the laws by sampling.

Two exact formulas are checked for any derivation f and square matrix A:

    f(det A) = Tr(f[A] @ adj A)          (f applied entrywise)
    f(det A) = sum_k det(A with row k replaced by its f-image)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .matrix import Matrix
from .poly import Polynomial, PolynomialRing
from .report import VerificationReport, make_report
from .rings import Ring, RingMismatchError, ShapeError


@dataclass(frozen=True)
class Derivation:
    """A labelled derivation acting on canonical values of one ring."""

    algebra: Ring
    label: str
    fn: Callable = field(repr=False)
    g: Polynomial | None = None

    def __call__(self, value):
        return self.fn(value)

    def describe(self) -> dict:
        out = {"label": self.label}
        if self.g is not None:
            out["g"] = self.g.to_json()
        return out

    def matrix_image(self, a: Matrix) -> Matrix:
        """Apply entrywise; the codomain ring is the same algebra."""
        if a.ring != self.algebra:
            raise RingMismatchError(
                f"derivation on {self.algebra} cannot act on a matrix "
                f"over {a.ring}")
        return a.map_entries(self.fn, self.algebra)


def zero_derivation(algebra: Ring) -> Derivation:
    """The zero map, a derivation of any ring."""
    return Derivation(algebra=algebra, label="zero", fn=lambda v: algebra.zero())


def ddt(algebra: PolynomialRing) -> Derivation:
    """Formal d/dt on a polynomial ring."""
    if not isinstance(algebra, PolynomialRing):
        raise RingMismatchError(
            f"d/dt is a derivation of polynomial rings only, got {algebra}")
    return Derivation(algebra=algebra, label="ddt",
                      fn=lambda v: v.derivative())


def scaled_ddt(algebra: PolynomialRing, g: Polynomial) -> Derivation:
    """g * d/dt for a caller-supplied polynomial g (any multiple works)."""
    if not isinstance(algebra, PolynomialRing):
        raise RingMismatchError(
            f"g*d/dt is a derivation of polynomial rings only, got {algebra}")
    g = algebra.coerce(g)
    return Derivation(algebra=algebra, label="g*ddt",
                      fn=lambda v: g * v.derivative(), g=g)


def standard_derivations(algebra: Ring, g: Polynomial | None = None) -> list:
    """The stock derivations on algebra: zero always, and on polynomial
    rings also d/dt plus g*d/dt (g defaults to t)."""
    out = [zero_derivation(algebra)]
    if isinstance(algebra, PolynomialRing):
        out.append(ddt(algebra))
        out.append(scaled_ddt(algebra, g if g is not None else algebra.t()))
    return out


def verify_leibniz_chain(f: Derivation, elems) -> VerificationReport:
    """f(a1*...*an) against both n-factor product rules.

    Ordered form: sum_i a1*...*a(i-1)*f(ai)*a(i+1)*...*an.
    Collected form: sum_k f(ak) * prod of the other factors.
    Both must equal f of the full product exactly.
    """
    L = f.algebra
    elems = [L.coerce(v) for v in elems]
    total = L.one()
    for v in elems:
        total = L.mul(total, v)
    lhs = f(total)

    ordered = L.zero()
    for i in range(len(elems)):
        term = L.one()
        for j, v in enumerate(elems):
            term = L.mul(term, f(v) if j == i else v)
        ordered = L.add(ordered, term)

    collected = L.zero()
    for k in range(len(elems)):
        rest = L.one()
        for j, v in enumerate(elems):
            if j != k:
                rest = L.mul(rest, v)
        collected = L.add(collected, L.mul(f(elems[k]), rest))

    inputs = {
        "derivation": f.describe(),
        "ring": L.descriptor(),
        "factors": [L.element_to_json(v) for v in elems],
    }
    diff = L.sub(lhs, ordered)
    if not L.is_zero(diff):
        return make_report("leibniz_chain", diff, ring=L, inputs=inputs,
                           part="ordered_product_rule")
    diff = L.sub(lhs, collected)
    return make_report("leibniz_chain", diff, ring=L, inputs=inputs,
                       part="collected_product_rule")


def verify_derivation_det(f: Derivation, a: Matrix) -> VerificationReport:
    """f(det A) = Tr(f[A] @ adj A), exactly."""
    if not a.is_square():
        raise ShapeError("the determinant formula needs a square matrix")
    L = f.algebra
    if a.ring != L:
        raise RingMismatchError(
            f"derivation on {L} cannot act on a matrix over {a.ring}")
    lhs = f(a.det())
    rhs = (f.matrix_image(a) @ a.adjugate()).trace()
    return make_report(
        "derivation_det", L.sub(lhs, rhs), ring=L,
        inputs={"derivation": f.describe(), "matrix": a.to_json()},
    )


def verify_derivation_det_rows(f: Derivation, a: Matrix) -> VerificationReport:
    """f(det A) = sum over rows k of det(A with row k replaced by f(row k))."""
    if not a.is_square():
        raise ShapeError("the determinant formula needs a square matrix")
    L = f.algebra
    if a.ring != L:
        raise RingMismatchError(
            f"derivation on {L} cannot act on a matrix over {a.ring}")
    lhs = f(a.det())
    n = a.rows
    rhs = L.zero()
    for k in range(1, n + 1):
        entries = []
        for i in range(1, n + 1):
            row = a.row_list(i)
            if i == k:
                row = [f(v) for v in row]
            entries.extend(row)
        rhs = L.add(rhs, Matrix(L, n, n, entries).det())
    return make_report(
        "derivation_det_rows", L.sub(lhs, rhs), ring=L,
        inputs={"derivation": f.describe(), "matrix": a.to_json()},
    )
