"""Tests for the preadjoint, the three determinants and the symmetric characteristic polynomial."""

import math
import random
import unittest
from pathlib import Path

import project_paths

ROOT = Path(__file__).resolve().parent.parent.parent
project_paths.ensure_paths((ROOT,))

from ring_core import Element, RingDescriptor
from matrix_algebra import Matrix, random_matrix
from charpoly_engine import (
    classical_adjugate,
    classical_charpoly,
    classical_det,
    fixing,
    ldet,
    permutations,
    preadjoint,
    preadjoint_pairs_per_column,
    rdet,
    sdet,
    sign,
    starred_pairs,
    symmetric_charpoly,
)

Q = RingDescriptor.rational()
POLY4 = RingDescriptor.commutative(4)
E4 = RingDescriptor.grassmann(4)
U2 = RingDescriptor.upper_triangular()


def gen(ring, i):
    return Element.generator(ring, i)


class TestPermutations(unittest.TestCase):
    def test_lexicographic_order_and_sign(self):
        self.assertEqual(permutations(3)[:3], ((1, 2, 3), (1, 3, 2), (2, 1, 3)))
        self.assertEqual([sign(p) for p in permutations(3)], [1, -1, -1, 1, 1, -1])

    def test_starred_set_sizes(self):
        for n in range(1, 5):
            self.assertEqual(len(starred_pairs(n)), math.factorial(n))
            for s in range(1, n + 1):
                self.assertEqual(len(fixing(n, s)), math.factorial(n - 1))

    def test_pairs_per_column(self):
        self.assertEqual(preadjoint_pairs_per_column(1), 1)
        self.assertEqual(preadjoint_pairs_per_column(3), 12)
        self.assertEqual(preadjoint_pairs_per_column(4), 144)


class TestPreadjoint(unittest.TestCase):
    def test_one_by_one_is_one(self):
        a = Matrix(RingDescriptor.free(1), [[Element.generator(RingDescriptor.free(1), 1)]])
        self.assertEqual(preadjoint(a), Matrix.identity(a.ring, 1))

    def test_generic_two_by_two(self):
        a = Matrix.generic(2)
        x = [gen(a.ring, i) for i in range(1, 5)]
        self.assertEqual(preadjoint(a), Matrix(a.ring, [[x[3], -x[1]], [-x[2], x[0]]]))

    def test_factor_order_follows_tau(self):
        a = Matrix.generic(3)
        star = preadjoint(a)
        # a*_{1,1} pairs rows 2 and 3 in both orders
        x5, x6, x8, x9 = (gen(a.ring, i) for i in (5, 6, 8, 9))
        expected = x5 * x9 - x6 * x8 + x9 * x5 - x8 * x6
        self.assertEqual(star[0, 0], expected)

    def test_commutative_preadjoint_is_scaled_adjugate(self):
        rng = random.Random(8)
        for _ in range(20):
            a = random_matrix(POLY4, 3, rng, max_degree=1)
            self.assertEqual(preadjoint(a), classical_adjugate(a) * 2)


class TestDeterminants(unittest.TestCase):
    def test_one_by_one(self):
        ring = RingDescriptor.free(1)
        a = Matrix(ring, [[gen(ring, 1)]])
        self.assertEqual(ldet(a), gen(ring, 1))
        self.assertEqual(rdet(a), gen(ring, 1))
        self.assertEqual(sdet(a), gen(ring, 1))

    def test_generic_two_by_two(self):
        a = Matrix.generic(2)
        self.assertEqual(str(ldet(a)), "x1*x4 - x2*x3 - x3*x2 + x4*x1")
        self.assertEqual(ldet(a), rdet(a))

    def test_integer_two_by_two(self):
        a = Matrix.from_scalars(Q, [[1, 2], [3, 4]])
        self.assertEqual(ldet(a), Element.scalar(Q, -4))
        self.assertEqual(rdet(a), Element.scalar(Q, -4))

    def test_diagonal(self):
        a = Matrix.from_scalars(Q, [[1, 0, 0], [0, 2, 0], [0, 0, 3]])
        self.assertEqual(sdet(a), Element.scalar(Q, 36))

    def test_grassmann_left_equals_right(self):
        a = Matrix(E4, [[gen(E4, 1), gen(E4, 2)], [gen(E4, 3), gen(E4, 4)]])
        self.assertEqual(ldet(a), rdet(a))
        rng = random.Random(12)
        for _ in range(20):
            b = random_matrix(E4, 3, rng)
            self.assertEqual(ldet(b), rdet(b))


class TestSymmetricCharpoly(unittest.TestCase):
    def test_one_by_one(self):
        ring = RingDescriptor.free(1)
        a = Matrix(ring, [[gen(ring, 1)]])
        self.assertEqual(symmetric_charpoly(a), (-gen(ring, 1), Element.one(ring)))

    def test_generic_two_by_two_text(self):
        lambdas = symmetric_charpoly(Matrix.generic(2))
        self.assertEqual(
            [str(l) for l in lambdas],
            ["x1*x4 - x2*x3 - x3*x2 + x4*x1", "-2*x1 - 2*x4", "2"],
        )

    def test_commutative_two_by_two(self):
        a, b, c, d = (gen(POLY4, i) for i in range(1, 5))
        lambdas = symmetric_charpoly(Matrix(POLY4, [[a, b], [c, d]]))
        self.assertEqual(lambdas, ((a * d - b * c) * 2, (a + d) * -2, Element.scalar(POLY4, 2)))

    def test_leading_coefficient_is_factorial(self):
        rng = random.Random(30)
        cases = [(Q, 4), (U2, 4), (POLY4, 3), (E4, 3), (RingDescriptor.free(3), 3)]
        for ring, max_n in cases:
            for n in range(1, max_n + 1):
                for _ in range(3):
                    lambdas = symmetric_charpoly(random_matrix(ring, n, rng, max_terms=2))
                    self.assertEqual(len(lambdas), n + 1)
                    self.assertEqual(lambdas[-1], Element.scalar(ring, math.factorial(n)))

    def test_constant_term_is_signed_sdet(self):
        rng = random.Random(31)
        for ring in (E4, U2, RingDescriptor.free(2)):
            for n in (1, 2, 3):
                a = random_matrix(ring, n, rng, max_terms=2)
                self.assertEqual(symmetric_charpoly(a)[0], sdet(-a))


class TestCommutativeOracle(unittest.TestCase):
    def test_integer_matrices_against_cofactor_expansion(self):
        rng = random.Random(2024)
        for n in (1, 2, 3, 4):
            for _ in range(100):
                a = random_matrix(Q, n, rng)
                self.assertEqual(preadjoint(a), classical_adjugate(a) * math.factorial(n - 1))
                self.assertEqual(sdet(a), classical_det(a) * math.factorial(n))
                expected = tuple(c * math.factorial(n) for c in classical_charpoly(a))
                self.assertEqual(symmetric_charpoly(a), expected)

    def test_polynomial_matrices(self):
        rng = random.Random(77)
        for n in (2, 3):
            for _ in range(10):
                a = random_matrix(POLY4, n, rng, max_degree=1)
                self.assertEqual(sdet(a), classical_det(a) * math.factorial(n))
                self.assertEqual(
                    symmetric_charpoly(a),
                    tuple(c * math.factorial(n) for c in classical_charpoly(a)),
                )

    def test_known_values(self):
        a = Matrix.from_scalars(Q, [[1, 2], [3, 4]])
        self.assertEqual(classical_det(a), Element.scalar(Q, -2))
        self.assertEqual(classical_adjugate(a), Matrix.from_scalars(Q, [[4, -2], [-3, 1]]))
        self.assertEqual(classical_charpoly(a), tuple(Element.scalar(Q, c) for c in (-2, -5, 1)))
        self.assertEqual(classical_adjugate(Matrix.from_scalars(Q, [[7]])), Matrix.identity(Q, 1))

        x1, x2 = gen(POLY4, 1), gen(POLY4, 2)
        b = Matrix(POLY4, [[x1, x2], [x2, x1]])
        self.assertEqual(classical_det(b), x1 * x1 - x2 * x2)
        self.assertEqual(classical_charpoly(b)[1], x1 * -2)

    def test_nilpotent_generator_is_reduced(self):
        e1 = RingDescriptor.grassmann(1)
        v1, one = gen(e1, 1), Element.one(e1)
        a = Matrix(e1, [[v1, one], [one, v1]])
        self.assertEqual(classical_det(a), -one)
        self.assertEqual(sdet(a), classical_det(a) * 2)

    def test_oracle_rejects_noncommutative_rings(self):
        with self.assertRaises(ValueError):
            classical_det(Matrix.generic(2))


if __name__ == "__main__":
    unittest.main()
