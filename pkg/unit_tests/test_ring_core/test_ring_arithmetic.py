"""Tests for ring descriptors, element arithmetic and canonical printing."""

import unittest
from fractions import Fraction
from pathlib import Path

import project_paths

ROOT = Path(__file__).resolve().parent.parent.parent
project_paths.ensure_paths((ROOT,))

from ring_core import (
    Element,
    RingDescriptor,
    RingKind,
    center_contains,
    commutator,
    elem_add,
    elem_mul,
    format_element,
)
from ring_core.errors import DescriptorMismatchError, NcchError, RingDescriptorError

Q = RingDescriptor.rational()
FREE = RingDescriptor.free(4)
E4 = RingDescriptor.grassmann(4)
U2 = RingDescriptor.upper_triangular()
POLY = RingDescriptor.commutative(2)


def x(i, ring=FREE):
    return Element.generator(ring, i)


def u(p, q, r):
    return Element.upper_triangular(U2, p, q, r)


class TestRingDescriptor(unittest.TestCase):
    def test_default_prefixes(self):
        self.assertEqual(RingDescriptor(RingKind.FREE_ALGEBRA, 2).generator_prefix, "x")
        self.assertEqual(RingDescriptor(RingKind.GRASSMANN, 2).generator_prefix, "v")
        self.assertEqual(Q.generator_prefix, "")

    def test_generatorless_kinds_reject_generators(self):
        with self.assertRaises(RingDescriptorError):
            RingDescriptor(RingKind.RATIONAL, 2)
        with self.assertRaises(RingDescriptorError):
            RingDescriptor(RingKind.UPPER_TRIANGULAR_2, 1)

    def test_bad_kind_and_prefix(self):
        with self.assertRaises(RingDescriptorError):
            RingDescriptor("octonion")
        with self.assertRaises(RingDescriptorError):
            RingDescriptor.free(2, "x_")
        with self.assertRaises(RingDescriptorError):
            RingDescriptor.free(-1)

    def test_errors_are_value_errors(self):
        with self.assertRaises(ValueError):
            RingDescriptor(RingKind.RATIONAL, 3)
        self.assertTrue(issubclass(DescriptorMismatchError, NcchError))

    def test_from_mapping_round_trip(self):
        for ring in (Q, FREE, E4, U2, POLY):
            self.assertEqual(RingDescriptor.from_mapping(ring.to_mapping()), ring)
        self.assertEqual(RingDescriptor.from_mapping({"kind": "grassmann"}).generator_count, 4)

    def test_zero_generators_collapse_to_scalars(self):
        empty = RingDescriptor.free(0)
        self.assertEqual(Element.scalar(empty, 2) * Element.scalar(empty, 3), Element.scalar(empty, 6))
        with self.assertRaises(RingDescriptorError):
            Element.generator(empty, 1)


class TestAddition(unittest.TestCase):
    def test_rational_sum_is_exact(self):
        total = elem_add(Element.scalar(Q, Fraction(1, 2)), Element.scalar(Q, Fraction(1, 3)))
        self.assertEqual(total.scalar_value(), Fraction(5, 6))

    def test_free_additive_inverse(self):
        w = x(1) * x(2)
        self.assertTrue(elem_add(w, w * -1).is_zero())
        self.assertEqual(len(elem_add(w, -w)), 0)

    def test_grassmann_anticommutativity(self):
        v1, v2 = x(1, E4), x(2, E4)
        self.assertTrue((v1 * v2 + v2 * v1).is_zero())

    def test_mismatched_rings(self):
        with self.assertRaises(DescriptorMismatchError):
            elem_add(x(1), Element.generator(RingDescriptor.free(5), 1))
        with self.assertRaises(DescriptorMismatchError):
            x(1, E4) * x(1)

    def test_keys_outside_the_ring_are_rejected(self):
        bad = [
            (FREE, (1, 5)),
            (FREE, (0,)),
            (E4, (2, 1)),
            (E4, (1, 1)),
            (E4, (5,)),
            (POLY, (1, 0, 0)),
            (U2, (2, 1)),
            (Q, (1,)),
        ]
        for ring, key in bad:
            with self.assertRaises(DescriptorMismatchError, msg=f"{ring.label} {key}"):
                Element.from_terms(ring, {key: 1})
        self.assertEqual(Element.from_terms(FREE, {(4, 1): 2}), x(4) * x(1) * 2)
        self.assertEqual(Element.from_terms(E4, {(1, 4): 1}), x(1, E4) * x(4, E4))


class TestMultiplication(unittest.TestCase):
    def test_grassmann_relations(self):
        v1, v2 = x(1, E4), x(2, E4)
        self.assertEqual(elem_mul(v1, v2), Element.from_terms(E4, {(1, 2): 1}))
        self.assertEqual(elem_mul(v2, v1), Element.from_terms(E4, {(1, 2): -1}))
        self.assertTrue(elem_mul(v1, v1).is_zero())

    def test_grassmann_generators_exhaustive(self):
        for i in range(1, 5):
            vi = x(i, E4)
            self.assertTrue((vi * vi).is_zero())
            for j in range(1, 5):
                vj = x(j, E4)
                self.assertTrue((vi * vj + vj * vi).is_zero())

    def test_grassmann_sign_of_longer_blades(self):
        v1, v2, v3 = x(1, E4), x(2, E4), x(3, E4)
        self.assertEqual(v3 * v1 * v2, v1 * v2 * v3)
        self.assertEqual(v2 * v1 * v3, -(v1 * v2 * v3))

    def test_upper_triangular_product(self):
        self.assertEqual(elem_mul(u(1, 1, 0), u(0, 1, 1)).as_triple(), (0, 2, 0))
        self.assertEqual(u(2, 3, 5) * u(7, 11, 13), u(14, 2 * 11 + 3 * 13, 65))

    def test_free_concatenation(self):
        self.assertEqual(elem_mul(x(1), x(2)).terms, (((1, 2), Fraction(1)),))
        self.assertNotEqual(x(1) * x(2), x(2) * x(1))

    def test_commutative_poly_commutes(self):
        a, b = x(1, POLY), x(2, POLY)
        self.assertEqual(a * b, b * a)
        self.assertEqual((a + b) ** 2, a * a + b * b + a * b * 2)

    def test_units(self):
        for ring, e in ((FREE, x(3)), (E4, x(2, E4)), (U2, u(1, 2, 3)), (POLY, x(1, POLY))):
            one = Element.one(ring)
            self.assertEqual(one * e, e)
            self.assertEqual(e * one, e)
        self.assertEqual(Element.one(U2).as_triple(), (1, 0, 1))


class TestCommutator(unittest.TestCase):
    def test_self_commutator_vanishes(self):
        for e in (x(1) + x(2) * x(3), x(1, E4) + x(2, E4), u(1, 2, 3), Element.scalar(Q, 7)):
            self.assertTrue(commutator(e, e).is_zero())

    def test_upper_triangular_commutator(self):
        self.assertEqual(commutator(u(1, 0, 0), u(0, 1, 0)).as_triple(), (0, 1, 0))

    def test_free_commutator(self):
        self.assertEqual(commutator(x(1), x(2)), x(1) * x(2) - x(2) * x(1))

    def test_grassmann_witness_against_product_of_commutators(self):
        v = [x(i, E4) for i in range(1, 5)]
        value = commutator(v[0], v[1]) * commutator(v[2], v[3])
        self.assertEqual(value, Element.from_terms(E4, {(1, 2, 3, 4): 4}))


class TestCentre(unittest.TestCase):
    def test_scalars_are_central(self):
        for ring in (Q, FREE, E4, U2, POLY):
            self.assertTrue(center_contains(Element.scalar(ring, 7)))

    def test_free_generator_is_not_central(self):
        self.assertFalse(center_contains(x(1)))

    def test_even_grassmann_blade_is_central(self):
        self.assertTrue(center_contains(x(1, E4) * x(2, E4)))
        self.assertFalse(center_contains(x(1, E4)))

    def test_upper_triangular_centre_is_scalars(self):
        self.assertTrue(center_contains(u(3, 0, 3)))
        self.assertFalse(center_contains(u(1, 0, 0)))
        self.assertFalse(center_contains(u(0, 1, 0)))


class TestPrinting(unittest.TestCase):
    def test_zero_and_scalars(self):
        self.assertEqual(format_element(Element.zero(FREE)), "0")
        self.assertEqual(str(Element.scalar(Q, Fraction(-3, 4))), "-3/4")

    def test_deglex_order_and_signs(self):
        e = x(2) * x(3) - x(1) + Element.scalar(FREE, Fraction(1, 2)) - x(1) * x(1) * 2
        self.assertEqual(str(e), "1/2 - x1 - 2*x1^2 + x2*x3")

    def test_generic_determinant_text(self):
        d = x(1) * x(4) - x(2) * x(3) - x(3) * x(2) + x(4) * x(1)
        self.assertEqual(str(d), "x1*x4 - x2*x3 - x3*x2 + x4*x1")

    def test_other_rings(self):
        self.assertEqual(str(u(1, Fraction(-1, 2), 0)), "u(1,-1/2,0)")
        self.assertEqual(str(x(2, E4) * x(1, E4)), "-v1*v2")
        self.assertEqual(str(x(1, POLY) * x(1, POLY) * x(2, POLY)), "x1^2*x2")


if __name__ == "__main__":
    unittest.main()
