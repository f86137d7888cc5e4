"""Tests for deciding membership in the ideal generated by [x,y][u,v]."""

import unittest
from fractions import Fraction
from pathlib import Path

import project_paths

ROOT = Path(__file__).resolve().parent.parent.parent
project_paths.ensure_paths((ROOT,))

from ring_core import Element, RingDescriptor, commutator
from ring_core.errors import CertificationDisabledError, NonHomogeneousError, RingDescriptorError
from matrix_algebra import Matrix
from identity_verifier import (
    IdealGenerator,
    IdealMembershipInstance,
    certify_sandwich,
    ideal_membership,
    sandwich_certificates,
)

F4 = RingDescriptor.free(4)
F5 = RingDescriptor.free(5)


def gens(ring):
    return [Element.generator(ring, i) for i in range(1, ring.generator_count + 1)]


def decide(target):
    return ideal_membership(IdealMembershipInstance.for_element(target))


class TestIdealGenerator(unittest.TestCase):
    def test_vector_expands_both_commutators(self):
        x1, x2, x3, x4 = gens(F4)
        g = IdealGenerator((), (1,), (2,), (3,), (4,), ())
        self.assertEqual(g.expand(F4), commutator(x1, x2) * commutator(x3, x4))
        self.assertEqual(g.describe(F4), "[x1,x2]*[x3,x4]")

    def test_describe_with_outer_words(self):
        g = IdealGenerator((1,), (2,), (3,), (4,), (5,), (1, 1))
        self.assertEqual(g.describe(F5), "x1*[x2,x3]*[x4,x5]*x1^2")


class TestMembership(unittest.TestCase):
    def test_generator_is_member(self):
        x1, x2, x3, x4 = gens(F4)
        target = commutator(x1, x2) * commutator(x3, x4)
        result = decide(target)
        self.assertTrue(result)
        self.assertEqual(result.certificate.expand(F4), target)
        self.assertEqual(len(result.certificate), 1)

    def test_double_commutator_is_member(self):
        x1, x2, x3, x4 = gens(F4)
        target = commutator(commutator(x1, x2), commutator(x3, x4))
        result = decide(target)
        self.assertTrue(result.member)
        self.assertEqual(result.certificate.expand(F4), target)

    def test_outer_words(self):
        x1, x2, x3, x4, x5 = gens(F5)
        target = x1 * commutator(x2, x3) * commutator(x4, x5) - commutator(x1, x2) * commutator(x3, x4) * x5
        result = decide(target * Fraction(3, 2))
        self.assertTrue(result)
        self.assertEqual(result.certificate.expand(F5), target * Fraction(3, 2))

    def test_repeated_letters(self):
        x1, x2, x3, x4 = gens(F4)
        target = commutator(x1, x1 * x2) * commutator(x3, x4)
        result = decide(target)
        self.assertTrue(result)
        self.assertEqual(result.certificate.expand(F4), target)

    def test_low_degree_is_not_member(self):
        x1, x2, _, _ = gens(F4)
        self.assertFalse(decide(commutator(x1, x2)))
        self.assertFalse(decide(x1 * x2 * x1))

    def test_monomial_is_not_member(self):
        x1, x2, x3, x4 = gens(F4)
        result = decide(x1 * x2 * x3 * x4)
        self.assertFalse(result.member)
        self.assertIsNone(result.certificate)

    def test_commutator_of_other_shape_is_not_member(self):
        x1, x2, x3, _ = gens(F4)
        self.assertFalse(decide(commutator(commutator(commutator(x1, x2), x3), x1)))

    def test_zero_is_member(self):
        result = decide(Element.zero(F4))
        self.assertTrue(result)
        self.assertEqual(len(result.certificate), 0)

    def test_instance_validation(self):
        x1, x2, _, _ = gens(F4)
        with self.assertRaises(NonHomogeneousError):
            IdealMembershipInstance.for_element(x1 + x1 * x2)
        with self.assertRaises(NonHomogeneousError):
            IdealMembershipInstance(x1 * x2, 3, 4)
        with self.assertRaises(RingDescriptorError):
            IdealMembershipInstance(x1 * x2, 2, 5)
        poly = RingDescriptor.commutative(2)
        with self.assertRaises(RingDescriptorError):
            IdealMembershipInstance.for_element(Element.generator(poly, 1))


class TestSandwichCertification(unittest.TestCase):
    def test_generic_two_by_two_is_certified(self):
        report = certify_sandwich(Matrix.generic(2))
        self.assertTrue(report.holds, report.summary_lines())
        self.assertEqual(report.stats["entries"], 4)
        self.assertGreater(report.stats["certificate_terms"], 0)

    def test_every_piece_has_checked_certificate(self):
        a = Matrix.generic(2)
        for pieces in sandwich_certificates(a).values():
            for result in pieces:
                self.assertTrue(result.member)
                self.assertEqual(result.certificate.expand(a.ring), result.instance.target)

    def test_size_three_needs_opt_in(self):
        with self.assertRaises(CertificationDisabledError):
            sandwich_certificates(Matrix.generic(3))

    def test_only_free_algebra_matrices(self):
        u2 = RingDescriptor.upper_triangular()
        with self.assertRaises(RingDescriptorError):
            certify_sandwich(Matrix.identity(u2, 2))


if __name__ == "__main__":
    unittest.main()
