"""Tests for parsing element expressions in each ring."""

import unittest
from fractions import Fraction

import project_paths

project_paths.ensure_test_paths()

from hypothesis import given, settings

from hypothesis_strategies import ring_and_elements
from ring_core import Element, RingDescriptor
from ring_core.errors import (
    ConstructorRingError,
    ElementParseError,
    GeneratorIndexError,
    UnknownGeneratorError,
)
from cli_app import expression_parser, parse_element

F2 = RingDescriptor.free(2)
F3 = RingDescriptor.free(3)
U2 = RingDescriptor.upper_triangular()


class TestParseExamples(unittest.TestCase):
    def test_canonical_text_is_fixed_point(self):
        text = "1/2 - x1 - 2*x1^2 + x2*x3"
        self.assertEqual(str(parse_element(text, F3)), text)

    def test_commutator_and_powers(self):
        self.assertEqual(str(parse_element("[x1,x2]", F2)), "x1*x2 - x2*x1")
        self.assertEqual(str(parse_element("(x1 + x2)^2", F2)), "x1^2 + x1*x2 + x2*x1 + x2^2")
        self.assertEqual(str(parse_element("x1^2^2", F2)), "x1^4")

    def test_unary_minus_binds_below_power(self):
        self.assertEqual(str(parse_element("-x1^2", F2)), "-x1^2")
        self.assertEqual(str(parse_element("x1*-x2", F2)), "-x1*x2")
        self.assertEqual(parse_element("x1 - -x2", F2), parse_element("x1 + x2", F2))

    def test_rationals(self):
        q = RingDescriptor.rational()
        self.assertEqual(parse_element("3/4", q), Element.scalar(q, Fraction(3, 4)))
        self.assertEqual(str(parse_element("2/4 + 1", q)), "3/2")

    def test_upper_triangular_constructor(self):
        self.assertEqual(str(parse_element("u(1,-1/2,0)", U2)), "u(1,-1/2,0)")
        self.assertEqual(str(parse_element("u(0,1,0)*u(0,0,1)", U2)), "u(0,1,0)")
        commutator_text = "u(1,0,0)*u(0,1,0) - u(0,1,0)*u(1,0,0)"
        self.assertEqual(str(parse_element(commutator_text, U2)), "u(0,1,0)")

    def test_grassmann_generators(self):
        e4 = RingDescriptor.grassmann(4)
        self.assertEqual(str(parse_element("v2*v1", e4)), "-v1*v2")
        self.assertEqual(str(parse_element("v1*v1", e4)), "0")
        self.assertEqual(str(parse_element("v1*v2 + v2*v1", e4)), "0")

    def test_whitespace_is_ignored(self):
        self.assertEqual(parse_element(" x1 *  x2 ", F2), parse_element("x1*x2", F2))


class TestParseErrors(unittest.TestCase):
    def test_syntax_errors(self):
        for src in ("x1 +", "x1 x2", "[x1]", "(x1", "", "1/0"):
            with self.assertRaises(ElementParseError, msg=src) as ctx:
                parse_element(src, F2)
            self.assertIsNotNone(ctx.exception.offset, src)

    def test_generator_index_out_of_range(self):
        with self.assertRaises(GeneratorIndexError) as ctx:
            parse_element("x1 + x3", F2)
        self.assertEqual(ctx.exception.offset, 5)

    def test_offsets_count_source_bytes(self):
        with self.assertRaises(GeneratorIndexError) as ctx:
            parse_element("x1\t+ x3", F2)
        self.assertEqual(ctx.exception.offset, 5)
        self.assertEqual(expression_parser._byte_offset("λ1 + x3", 3), 4)

    def test_unknown_generator(self):
        with self.assertRaises(UnknownGeneratorError):
            parse_element("y1", F2)
        with self.assertRaises(UnknownGeneratorError):
            parse_element("x1", RingDescriptor.rational())

    def test_constructor_in_wrong_ring(self):
        with self.assertRaises(ConstructorRingError):
            parse_element("u(1,2,3)", F2)

    def test_non_integer_exponent(self):
        with self.assertRaises(ElementParseError):
            parse_element("x1^x2", F2)
        with self.assertRaises(ElementParseError):
            parse_element("x1^1/2", F2)


class TestParseRoundTrip(unittest.TestCase):
    @settings(deadline=None, max_examples=200)
    @given(ring_and_elements(1, max_terms=4))
    def test_printed_form_parses_back(self, drawn):
        ring, (e,) = drawn
        self.assertEqual(parse_element(str(e), ring), e)


if __name__ == "__main__":
    unittest.main()
