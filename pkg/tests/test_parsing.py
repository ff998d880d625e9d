import pytest

from gradedalg.fields import PrimeField, Rationals
from gradedalg.parsing import (ParseError, parse_series, parse_poly,
                               parse_homogeneous, ring_with_relations)
from gradedalg.rings import GradedRing, PresentationError


@pytest.fixture
def ring3():
    return GradedRing(PrimeField(2), [("x", 1), ("y", 1), ("z", 1)])


def test_homogeneous_polynomial_accepted(ring3):
    p = parse_poly("x^2 + 3*y*z", ring3)
    assert ring3.poly_codegree(p) == 2


def test_mixed_codegree_relation_rejected(ring3):
    parse_poly("x + y^2", ring3)  # parsing alone is fine
    with pytest.raises(PresentationError):
        parse_homogeneous("x + y^2", ring3)


def test_semidihedral_relation_is_homogeneous():
    ring = GradedRing(PrimeField(2), [("x", 1), ("y", 1), ("z", 3), ("t", 4)])
    p, d = parse_homogeneous("z^2+t*y^2", ring)
    assert d == 6


def test_unknown_identifier_reports_position(ring3):
    with pytest.raises(ParseError) as err:
        parse_poly("x + w", ring3)
    assert err.value.pos == 4


def test_implicit_multiplication_rejected(ring3):
    with pytest.raises(ParseError):
        parse_poly("2x", ring3)


def test_unbalanced_parenthesis_rejected():
    with pytest.raises(ParseError):
        parse_series("(1+t")


def test_non_integer_exponent_rejected(ring3):
    with pytest.raises(ParseError):
        parse_poly("x^y", ring3)


def test_series_grammar_operators():
    s = parse_series("(1 - t)^2 * (1 + t + t^2) / (1 - t^3)")
    assert s == parse_series("(1-t)")


def test_subtraction_and_unary_minus():
    assert parse_series("-t + 1") == parse_series("1 - t")


def test_constant_coefficients_reduce_in_the_field():
    ring = GradedRing(PrimeField(2), [("x", 1)])
    assert parse_poly("2*x", ring) == {}
    assert parse_poly("3*x", ring) == parse_poly("x", ring)


def test_ring_with_relations_builds_quotient():
    ring = ring_with_relations(PrimeField(2), [("x", 1), ("y", 1)], ["x*y"])
    assert [ring.dim(n) for n in range(5)] == [1, 2, 2, 2, 2]


def test_rational_coefficients():
    ring = GradedRing(Rationals(), [("u", 2), ("v", 2)])
    p = parse_poly("u^2 - 2*u*v", ring)
    assert ring.poly_codegree(p) == 4
