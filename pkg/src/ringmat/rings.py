"""Commutative rings as first-class runtime values.

A Ring object bundles the arithmetic of one coefficient domain and acts on
plain canonical values rather than wrapped elements:

  * integers             -> Python int
  * integers mod m       -> int in [0, m), m >= 1 (m = 1 is the zero ring)
  * rationals            -> fractions.Fraction (reduced, positive denominator)
  * polynomials over R   -> ringmat.poly.Polynomial (no trailing zeros)

Equality of elements is structural equality of canonical values, so == on
the raw values is always the right test.  Rings compare equal when they
describe the same domain, and every ring knows its JSON descriptor.

A ring may declare itself a Q-algebra, meaning division by any positive
integer is exact and well defined.  Rationals qualify, as do polynomial
rings over a qualifying base.  Integers and mod-m rings never divide, even
when a particular quotient happens to exist.
"""

from __future__ import annotations

from fractions import Fraction

from .report import VerificationReport, make_report


class RingError(Exception):
    """Base class for all errors raised by this library."""


class RingMismatchError(RingError):
    """Operands or samples belong to different rings."""


class ShapeError(RingError):
    """Matrix dimensions do not fit the requested operation."""


class QAlgebraRequiredError(RingError):
    """Exact division by an integer was requested on a ring without it."""


class PreconditionError(RingError):
    """Inputs violate a stated precondition (distinct from identity failure)."""


class GuardError(RingError):
    """A resource guard (term count, size cap) was exceeded."""


class ParseError(RingError):
    """Malformed JSON input; the message names the offending field."""


class Ring:
    """Abstract commutative ring; subclasses implement the arithmetic."""

    is_q_algebra = False

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def from_int(self, k: int):
        """Canonical image of the integer k (the unique map from the integers)."""
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def pow(self, a, k: int):
        """a**k for k >= 0, with a**0 = 1 (even for a = 0)."""
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        result = self.one()
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def try_div_int(self, a, k: int):
        """a / k when this ring divides by positive integers, else None.

        Never divides opportunistically: integers and mod-m return None
        even when k happens to divide a.
        """
        if k < 1:
            raise ValueError("divisor must be a positive integer")
        if not self.is_q_algebra:
            return None
        return self._div_int(a, k)

    def div_int(self, a, k: int):
        out = self.try_div_int(a, k)
        if out is None:
            raise QAlgebraRequiredError(
                f"ring {self} does not support division by integers")
        return out

    def _div_int(self, a, k: int):
        raise NotImplementedError

    def coerce(self, v):
        """Canonical value for v, raising RingMismatchError if v is foreign."""
        raise NotImplementedError

    def descriptor(self) -> dict:
        """JSON descriptor of this ring."""
        raise NotImplementedError

    def element_to_json(self, a):
        raise NotImplementedError

    def element_from_json(self, obj, where: str = "element"):
        raise NotImplementedError

    def format(self, a) -> str:
        """Short human-readable rendering used in messages."""
        return str(a)


class IntegerRing(Ring):
    """The ring of integers."""

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def from_int(self, k):
        return k

    def is_zero(self, a):
        return a == 0

    def coerce(self, v):
        if isinstance(v, int):
            return v
        raise RingMismatchError(f"{v!r} is not an integer")

    def descriptor(self):
        return {"kind": "int"}

    def element_to_json(self, a):
        return str(a)

    def element_from_json(self, obj, where="element"):
        return _parse_int(obj, where)

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("int")

    def __repr__(self):
        return "ZZ"

    def __str__(self):
        return "int"


class ModRing(Ring):
    """Integers mod m, m >= 1.  Residues are kept in [0, m)."""

    def __init__(self, m: int):
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"modulus must be a positive integer, got {m!r}")
        self.m = m

    def zero(self):
        return 0

    def one(self):
        return 1 % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def sub(self, a, b):
        return (a - b) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def from_int(self, k):
        return k % self.m

    def is_zero(self, a):
        return a == 0

    def coerce(self, v):
        if isinstance(v, int):
            return v % self.m
        raise RingMismatchError(f"{v!r} is not a residue mod {self.m}")

    def descriptor(self):
        return {"kind": "mod", "m": self.m}

    def element_to_json(self, a):
        return str(a)

    def element_from_json(self, obj, where="element"):
        return _parse_int(obj, where) % self.m

    def __eq__(self, other):
        return isinstance(other, ModRing) and other.m == self.m

    def __hash__(self):
        return hash(("mod", self.m))

    def __repr__(self):
        return f"ModRing({self.m})"

    def __str__(self):
        return f"mod {self.m}"


class RationalRing(Ring):
    """The field of rational numbers (a Q-algebra, so Newton recursion works)."""

    is_q_algebra = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def from_int(self, k):
        return Fraction(k)

    def is_zero(self, a):
        return a == 0

    def _div_int(self, a, k):
        return a / k

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise RingMismatchError(f"{v!r} is not a rational")

    def descriptor(self):
        return {"kind": "rat"}

    def element_to_json(self, a):
        return {"num": str(a.numerator), "den": str(a.denominator)}

    def element_from_json(self, obj, where="element"):
        if isinstance(obj, (str, int)):
            return Fraction(_parse_int(obj, where))
        if not isinstance(obj, dict) or set(obj) - {"num", "den"}:
            raise ParseError(f"{where}: expected {{num, den}} for a rational")
        num = _parse_int(obj.get("num", "0"), f"{where}.num")
        den = _parse_int(obj.get("den", "1"), f"{where}.den")
        if den == 0:
            raise ParseError(f"{where}.den: denominator must be nonzero")
        return Fraction(num, den)

    def __eq__(self, other):
        return isinstance(other, RationalRing)

    def __hash__(self):
        return hash("rat")

    def __repr__(self):
        return "QQ"

    def __str__(self):
        return "rat"


ZZ = IntegerRing()
QQ = RationalRing()


def _parse_int(obj, where: str) -> int:
    if isinstance(obj, bool):
        raise ParseError(f"{where}: expected an integer, got a boolean")
    if isinstance(obj, int):
        return obj
    if isinstance(obj, str):
        s = obj.strip()
        try:
            return int(s, 10)
        except ValueError:
            raise ParseError(f"{where}: invalid integer literal {obj!r}") from None
    raise ParseError(f"{where}: expected an integer or decimal string")


def int_embed(ring: Ring, k: int):
    """Image of the integer k under the unique ring map into ring."""
    return ring.from_int(k)


def try_div_int(ring: Ring, a, k: int):
    """Exact a / k on Q-algebras, None elsewhere.  See Ring.try_div_int."""
    return ring.try_div_int(a, k)


_AXIOMS = (
    ("add_commutes", lambda R, a, b, c: R.sub(R.add(a, b), R.add(b, a))),
    ("add_associates", lambda R, a, b, c:
        R.sub(R.add(R.add(a, b), c), R.add(a, R.add(b, c)))),
    ("mul_commutes", lambda R, a, b, c: R.sub(R.mul(a, b), R.mul(b, a))),
    ("mul_associates", lambda R, a, b, c:
        R.sub(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c)))),
    ("distributes", lambda R, a, b, c:
        R.sub(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c)))),
    ("one_acts", lambda R, a, b, c: R.sub(R.mul(R.one(), a), a)),
    ("zero_annihilates", lambda R, a, b, c: R.mul(R.zero(), a)),
    ("negation_cancels", lambda R, a, b, c: R.add(a, R.neg(a))),
)


def axiom_spotcheck(ring: Ring, samples) -> VerificationReport:
    """Check the commutative-ring axioms on concrete sample triples.

    samples is an iterable of (a, b, c) triples of elements of ring; a
    foreign value in any triple raises RingMismatchError.  The returned
    report carries the first violated axiom and its witness, if any.
    """
    checked = 0
    for a, b, c in samples:
        a, b, c = ring.coerce(a), ring.coerce(b), ring.coerce(c)
        checked += 1
        for name, law in _AXIOMS:
            diff = law(ring, a, b, c)
            if not ring.is_zero(diff):
                return make_report(
                    "ring_axioms", diff, ring=ring,
                    inputs={
                        "ring": ring.descriptor(),
                        "sample": [ring.element_to_json(x) for x in (a, b, c)],
                    },
                    part=name,
                )
    return make_report(
        "ring_axioms", ring.zero(), ring=ring,
        inputs={"ring": ring.descriptor(), "samples_checked": checked},
    )
