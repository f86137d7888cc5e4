"""Property tests: ring axioms and the identities each ring is known to satisfy."""

import random
import unittest

import project_paths

project_paths.ensure_test_paths()

from hypothesis import given, settings
from hypothesis import strategies as st

from hypothesis_strategies import elements, ring_and_elements
from ring_core import Element, RingDescriptor, commutator, element_sum, random_element

U2 = RingDescriptor.upper_triangular()
E4 = RingDescriptor.grassmann(4)


class TestRingAxioms(unittest.TestCase):
    @settings(deadline=None, max_examples=150)
    @given(ring_and_elements(3))
    def test_associativity(self, drawn):
        _, (a, b, c) = drawn
        self.assertEqual((a * b) * c, a * (b * c))

    @settings(deadline=None, max_examples=150)
    @given(ring_and_elements(3))
    def test_distributivity(self, drawn):
        _, (a, b, c) = drawn
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual((a + b) * c, a * c + b * c)

    @settings(deadline=None, max_examples=100)
    @given(ring_and_elements(1))
    def test_two_sided_unit_and_inverse(self, drawn):
        ring, (a,) = drawn
        one = Element.one(ring)
        self.assertEqual(one * a, a)
        self.assertEqual(a * one, a)
        self.assertTrue((a - a).is_zero())
        self.assertEqual(element_sum(ring, [a, -a, a]), a)

    @settings(deadline=None, max_examples=100)
    @given(ring_and_elements(2))
    def test_commutator_is_antisymmetric(self, drawn):
        _, (a, b) = drawn
        self.assertEqual(commutator(a, b), -commutator(b, a))


class TestRingIdentities(unittest.TestCase):
    @settings(deadline=None, max_examples=1000)
    @given(elements(U2), elements(U2), elements(U2), elements(U2))
    def test_upper_triangular_product_of_commutators_vanishes(self, a, b, c, d):
        self.assertTrue((commutator(a, b) * commutator(c, d)).is_zero())

    @settings(deadline=None, max_examples=1000)
    @given(elements(E4, max_degree=3), elements(E4, max_degree=3), elements(E4, max_degree=3))
    def test_grassmann_is_lie_nilpotent_of_index_two(self, a, b, c):
        self.assertTrue(commutator(commutator(a, b), c).is_zero())

    def test_identities_on_seeded_samples(self):
        rng = random.Random(1000)
        for _ in range(1000):
            a, b, c, d = (random_element(U2, rng) for _ in range(4))
            self.assertTrue((commutator(a, b) * commutator(c, d)).is_zero())
        for _ in range(1000):
            a, b, c = (random_element(E4, rng, max_degree=3) for _ in range(3))
            self.assertTrue(commutator(commutator(a, b), c).is_zero())

    @settings(deadline=None, max_examples=50)
    @given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=4))
    def test_grassmann_generators_anticommute(self, i, j):
        vi, vj = Element.generator(E4, i), Element.generator(E4, j)
        self.assertTrue((vi * vj + vj * vi).is_zero())


if __name__ == "__main__":
    unittest.main()
