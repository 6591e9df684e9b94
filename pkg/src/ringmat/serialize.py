"""JSON input parsing: ring descriptors, matrices, polynomials.

The wire format is deliberately plain.  A ring is either a shorthand
string ("int", "rat", "mod:8", "poly:mod:8") or a descriptor object
{"kind": ..., ...}; a matrix is {"ring": ..., "rows": n, "cols": m,
"entries": [[...], ...]}; a polynomial is {"coeffs": [...]} with the
constant term first.  Everything coming in is canonicalized by the ring
(residues reduced, fractions lowered, polynomials trimmed), so two
inputs naming the same element always compare equal afterwards.
"""

from __future__ import annotations

from .matrix import Matrix
from .poly import Polynomial, PolynomialRing
from .rings import QQ, ZZ, ModRing, ParseError, Ring, _parse_int


def ring_from_descriptor(obj, where: str = "ring") -> Ring:
    """Build a ring from a {"kind": ...} descriptor object."""
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected a descriptor object, got "
                         f"{type(obj).__name__}")
    kind = obj.get("kind")
    if kind == "int":
        return ZZ
    if kind == "rat":
        return QQ
    if kind == "mod":
        if "m" not in obj:
            raise ParseError(f"{where}: modular descriptor needs \"m\"")
        m = _parse_int(obj["m"], f"{where}.m")
        if m < 1:
            raise ParseError(f"{where}.m: modulus must be >= 1, got {m}")
        return ModRing(m)
    if kind == "poly":
        if "base" not in obj:
            raise ParseError(f"{where}: polynomial descriptor needs \"base\"")
        return PolynomialRing(ring_from_descriptor(obj["base"], f"{where}.base"))
    raise ParseError(f"{where}: unknown ring kind {kind!r}")


def parse_ring(text_or_obj, where: str = "ring") -> Ring:
    """Accept a shorthand string or a descriptor object.

    Shorthands: "int", "rat", "mod:<m>", and "poly:<base>" where <base>
    is itself a shorthand, nesting as deep as needed.
    """
    if isinstance(text_or_obj, dict):
        return ring_from_descriptor(text_or_obj, where)
    if not isinstance(text_or_obj, str):
        raise ParseError(f"{where}: expected a string or descriptor object")
    text = text_or_obj.strip()
    if text == "int":
        return ZZ
    if text == "rat":
        return QQ
    if text.startswith("mod:"):
        tail = text[4:]
        try:
            m = int(tail, 10)
        except ValueError:
            raise ParseError(f"{where}: bad modulus {tail!r}") from None
        if m < 1:
            raise ParseError(f"{where}: modulus must be >= 1, got {m}")
        return ModRing(m)
    if text.startswith("poly:"):
        return PolynomialRing(parse_ring(text[5:], where))
    raise ParseError(
        f"{where}: unknown ring {text!r} (expected int, rat, mod:<m>, "
        f"or poly:<base>)")


def matrix_from_json(obj, ring: Ring | None = None,
                     where: str = "matrix") -> Matrix:
    """Decode a matrix object, canonicalizing every entry.

    A ring passed by the caller overrides the one embedded in the
    object; one of the two must be present.
    """
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object, got "
                         f"{type(obj).__name__}")
    if ring is None:
        if "ring" not in obj:
            raise ParseError(f"{where}: no ring given and none embedded")
        ring = parse_ring(obj["ring"], f"{where}.ring")
    entries = obj.get("entries")
    if not isinstance(entries, list):
        raise ParseError(f"{where}.entries: expected a list of rows")
    for i, row in enumerate(entries):
        if not isinstance(row, list):
            raise ParseError(f"{where}.entries[{i}]: expected a list")
    rows = len(entries)
    cols = len(entries[0]) if entries else 0
    if "rows" in obj:
        declared = _parse_int(obj["rows"], f"{where}.rows")
        if declared != rows:
            raise ParseError(f"{where}.rows: declared {declared}, "
                             f"entries have {rows}")
    if "cols" in obj:
        declared = _parse_int(obj["cols"], f"{where}.cols")
        cols = declared if rows == 0 else cols
        if rows and declared != cols:
            raise ParseError(f"{where}.cols: declared {declared}, "
                             f"entries have {cols}")
    data = []
    for i, row in enumerate(entries):
        if len(row) != cols:
            raise ParseError(f"{where}.entries[{i}]: expected {cols} "
                             f"entries, got {len(row)}")
        data.append([ring.element_from_json(cell, f"{where}.entries[{i}][{j}]")
                     for j, cell in enumerate(row)])
    if rows == 0:
        return Matrix(ring, 0, cols, ())
    return Matrix.from_rows(ring, data)


def polynomial_from_json(obj, ring: Ring, where: str = "poly") -> Polynomial:
    """Decode {"coeffs": [...]} over the given coefficient ring."""
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise ParseError(f"{where}: expected an object with \"coeffs\"")
    coeffs = obj["coeffs"]
    if not isinstance(coeffs, list):
        raise ParseError(f"{where}.coeffs: expected a list")
    vals = [ring.element_from_json(c, f"{where}.coeffs[{k}]")
            for k, c in enumerate(coeffs)]
    return Polynomial(ring, vals)
