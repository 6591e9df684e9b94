"""Univariate polynomials over an arbitrary coefficient ring.

Coefficients are stored densely, index = degree, with trailing zeros
trimmed; the zero polynomial has an empty coefficient tuple and degree -1.
PolynomialRing(R) turns polynomials over R into ring elements in their own
right, so every matrix routine in this library works unchanged over R[t].
That instantiation is exactly how characteristic matrices t*I - A are
handled: no special-cased polynomial matrix code exists anywhere.
"""

from __future__ import annotations

from .rings import ParseError, Ring, RingMismatchError


class Polynomial:
    """Dense univariate polynomial over a fixed coefficient ring."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs=()):
        coeffs = tuple(coeffs)
        n = len(coeffs)
        while n and ring.is_zero(coeffs[n - 1]):
            n -= 1
        self.ring = ring
        self.coeffs = coeffs[:n]

    @classmethod
    def of(cls, ring: Ring, coeffs) -> "Polynomial":
        """Build from any coercible coefficient sequence (ints allowed)."""
        return cls(ring, [ring.coerce(c) for c in coeffs])

    @classmethod
    def constant(cls, ring: Ring, value) -> "Polynomial":
        return cls(ring, (ring.coerce(value),))

    @classmethod
    def indeterminate(cls, ring: Ring) -> "Polynomial":
        """The polynomial t."""
        return cls(ring, (ring.zero(), ring.one()))

    @property
    def degree(self) -> int:
        """Largest exponent with nonzero coefficient, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int):
        """Coefficient of t**k, zero for any k outside the stored range."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero()

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(
                f"polynomials over {self.ring} and {other.ring} cannot be combined")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        R = self.ring
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = R.add(out[i], v)
        return Polynomial(R, out)

    def __neg__(self) -> "Polynomial":
        R = self.ring
        return Polynomial(R, [R.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        R = self.ring
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(R)
        out = [R.zero()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if R.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = R.add(out[i + j], R.mul(ai, bj))
        return Polynomial(R, out)

    def scale(self, value) -> "Polynomial":
        """Multiply every coefficient by a base-ring value."""
        R = self.ring
        return Polynomial(R, [R.mul(value, c) for c in self.coeffs])

    def derivative(self) -> "Polynomial":
        """Formal derivative; over mod-m rings terms can vanish (8*t**7 = 0 mod 8)."""
        R = self.ring
        return Polynomial(
            R,
            [R.mul(R.from_int(k), self.coeffs[k]) for k in range(1, len(self.coeffs))],
        )

    def eval_zero(self):
        """Value at t = 0, i.e. the constant coefficient."""
        return self.coeff(0)

    def __eq__(self, other):
        return (isinstance(other, Polynomial)
                and self.ring == other.ring
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if self.ring.is_zero(c):
                continue
            base = self.ring.format(c)
            terms.append(base if k == 0 else f"({base})*t^{k}")
        return "Polynomial(" + " + ".join(terms) + ")"

    def to_json(self) -> dict:
        return {"coeffs": [self.ring.element_to_json(c) for c in self.coeffs]}


class PolynomialRing(Ring):
    """R[t] as a Ring whose elements are Polynomial values over R.

    A Q-algebra exactly when the base is: integer division acts on each
    coefficient.
    """

    def __init__(self, base: Ring):
        self.base = base

    @property
    def is_q_algebra(self):
        return self.base.is_q_algebra

    def zero(self):
        return Polynomial(self.base)

    def one(self):
        return Polynomial(self.base, (self.base.one(),))

    def t(self):
        return Polynomial.indeterminate(self.base)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def from_int(self, k):
        return Polynomial(self.base, (self.base.from_int(k),))

    def is_zero(self, a):
        return not a.coeffs

    def _div_int(self, a, k):
        base = self.base
        return Polynomial(base, [base.div_int(c, k) for c in a.coeffs])

    def coerce(self, v):
        if isinstance(v, Polynomial):
            if v.ring != self.base:
                raise RingMismatchError(
                    f"polynomial over {v.ring} is not an element of {self}")
            return v
        if isinstance(v, (list, tuple)):
            return Polynomial.of(self.base, v)
        return Polynomial(self.base, (self.base.coerce(v),))

    def descriptor(self):
        return {"kind": "poly", "base": self.base.descriptor()}

    def element_to_json(self, a):
        return [self.base.element_to_json(c) for c in a.coeffs]

    def element_from_json(self, obj, where="element"):
        if not isinstance(obj, list):
            raise ParseError(f"{where}: expected a coefficient array")
        coeffs = [
            self.base.element_from_json(c, f"{where}[{k}]")
            for k, c in enumerate(obj)
        ]
        return Polynomial(self.base, coeffs)

    def format(self, a):
        return repr(a)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.base == self.base

    def __hash__(self):
        return hash(("poly", self.base))

    def __repr__(self):
        return f"PolynomialRing({self.base!r})"

    def __str__(self):
        return f"poly over {self.base}"
