"""Ring primitives: canonical values, integer embedding, division gates."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import Z6, Z8
from ringmat.rings import (
    QQ,
    ZZ,
    ModRing,
    ParseError,
    QAlgebraRequiredError,
    RingMismatchError,
    axiom_spotcheck,
    int_embed,
    try_div_int,
)

Z1 = ModRing(1)


def test_mod_residues_are_canonical():
    assert Z8.coerce(-3) == 5
    assert Z8.from_int(10) == 2
    assert Z8.neg(Z8.zero()) == 0
    assert Z6.add(4, 5) == 3
    assert Z6.mul(2, 3) == 0  # zero divisors are the point


def test_mod_rejects_bad_modulus():
    with pytest.raises(ValueError):
        ModRing(0)
    with pytest.raises(ValueError):
        ModRing(-5)


def test_zero_ring_is_legal():
    # m = 1 collapses everything, including the unity
    assert Z1.one() == Z1.zero() == 0
    assert Z1.is_zero(Z1.one())
    assert Z1.from_int(123456) == 0


def test_rational_values_are_reduced():
    assert QQ.coerce(Fraction(2, 4)) == Fraction(1, 2)
    assert QQ.element_from_json({"num": "2", "den": "-4"}) == Fraction(-1, 2)
    assert QQ.element_from_json("7") == Fraction(7)
    assert QQ.element_from_json(3) == Fraction(3)


def test_rational_json_rejects_zero_denominator():
    with pytest.raises(ParseError):
        QQ.element_from_json({"num": "1", "den": "0"})
    with pytest.raises(ParseError):
        QQ.element_from_json({"num": "1", "den": "2", "extra": "x"})


def test_foreign_values_are_rejected():
    with pytest.raises(RingMismatchError):
        ZZ.coerce(Fraction(1, 2))
    with pytest.raises(RingMismatchError):
        ZZ.coerce("3")
    with pytest.raises(RingMismatchError):
        Z8.coerce(1.5)


def test_element_json_round_trip():
    for ring, vals in ((ZZ, [-7, 0, 12]), (Z8, [0, 5]),
                       (QQ, [Fraction(-3, 4), Fraction(2)])):
        for v in vals:
            blob = ring.element_to_json(v)
            assert ring.element_from_json(blob) == v


def test_json_string_residues_reduce():
    assert Z8.element_from_json("10") == 2
    assert Z8.element_from_json("-1") == 7
    with pytest.raises(ParseError):
        Z8.element_from_json(True)
    with pytest.raises(ParseError):
        ZZ.element_from_json("3.5")


def test_pow_squares_and_multiplies():
    assert ZZ.pow(3, 5) == 243
    assert ZZ.pow(0, 0) == 1  # 0**0 = 1 by the empty product
    assert Z6.pow(2, 4) == 4
    with pytest.raises(ValueError):
        ZZ.pow(2, -1)


def test_try_div_int_never_divides_integers():
    # 4/2 would be exact, but Z is not a Q-algebra and must say so
    assert try_div_int(ZZ, 4, 2) is None
    assert try_div_int(Z8, 4, 2) is None
    assert try_div_int(QQ, Fraction(1), 3) == Fraction(1, 3)
    with pytest.raises(ValueError):
        try_div_int(QQ, Fraction(1), 0)


def test_div_int_gate():
    with pytest.raises(QAlgebraRequiredError):
        ZZ.div_int(4, 2)
    with pytest.raises(QAlgebraRequiredError):
        Z6.div_int(3, 3)
    assert QQ.div_int(Fraction(5), 2) == Fraction(5, 2)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_int_embed_is_a_ring_map(j, k):
    for ring in (ZZ, Z6, Z8, QQ, Z1):
        assert int_embed(ring, j + k) == ring.add(int_embed(ring, j),
                                                  int_embed(ring, k))
        assert int_embed(ring, j * k) == ring.mul(int_embed(ring, j),
                                                  int_embed(ring, k))
    assert int_embed(Z8, 1) == Z8.one()


def _triples(ring, raw):
    return [tuple(ring.from_int(v) for v in t) for t in raw]


def test_axiom_spotcheck_passes_on_stock_rings():
    raw = [(2, -3, 5), (0, 1, -1), (7, 7, -7), (4, 9, -2)]
    for ring in (ZZ, Z6, Z8, QQ, Z1):
        rep = axiom_spotcheck(ring, _triples(ring, raw))
        assert rep.passed, rep.inputs
        assert rep.identity == "ring_axioms"


def test_axiom_spotcheck_rejects_foreign_samples():
    with pytest.raises(RingMismatchError):
        axiom_spotcheck(ZZ, [(1, Fraction(1, 2), 3)])


def test_axiom_spotcheck_flags_a_broken_ring():
    class Lopsided(ModRing):
        # sabotage: addition forgets to reduce one argument
        def add(self, a, b):
            return (a + 2 * b) % self.m

    rep = axiom_spotcheck(Lopsided(7), _triples(ModRing(7), [(1, 2, 3)]))
    assert not rep.passed
    assert rep.inputs["failed_part"] == "add_commutes"


def test_ring_equality_is_structural():
    assert ModRing(8) == ModRing(8)
    assert ModRing(8) != ModRing(6)
    assert ZZ == ZZ and QQ == QQ
    assert ZZ != QQ
    assert len({ModRing(8), ModRing(8), ZZ}) == 2
