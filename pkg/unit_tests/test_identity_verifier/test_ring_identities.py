"""Tests for the polynomial-identity witness search over the coefficient rings."""

import unittest
from pathlib import Path

import project_paths

ROOT = Path(__file__).resolve().parent.parent.parent
project_paths.ensure_paths((ROOT,))

from ring_core import RingDescriptor
from ring_core.errors import NcchError
from identity_verifier import IDENTITIES, Verdict, check_ring_identity

U2 = RingDescriptor.upper_triangular()
E4 = RingDescriptor.grassmann(4)


class TestRingIdentities(unittest.TestCase):
    def test_upper_triangular(self):
        self.assertTrue(check_ring_identity(U2, "[x,y][u,v]", trials=50).holds)
        report = check_ring_identity(U2, "[[x,y],z]", trials=50)
        self.assertEqual(report.verdict, Verdict.VIOLATED)
        self.assertEqual(len(report.details["witness"]), 3)

    def test_grassmann(self):
        self.assertTrue(check_ring_identity(E4, "[[x,y],z]", trials=50).holds)
        self.assertTrue(check_ring_identity(E4, "[[x,y],[u,v]]", trials=50).holds)
        report = check_ring_identity(E4, "[x,y][u,v]", trials=50)
        self.assertFalse(report.holds)
        self.assertEqual(str(report.residual), "4*v1*v2*v3*v4")

    def test_commutative_rings_satisfy_everything(self):
        for ring in (RingDescriptor.rational(), RingDescriptor.commutative(2)):
            for name in IDENTITIES:
                report = check_ring_identity(ring, name, trials=20)
                self.assertTrue(report.holds, name)
                self.assertEqual(report.claim, f"identity {name}")

    def test_free_algebra_violates_everything(self):
        free = RingDescriptor.free(2)
        for name in IDENTITIES:
            self.assertFalse(check_ring_identity(free, name, trials=5).holds, name)

    def test_warning_logged_on_witness(self):
        with self.assertLogs("identity_verifier.ring_identities", level="WARNING"):
            check_ring_identity(U2, "[[x,y],z]", trials=5)

    def test_unknown_identity(self):
        with self.assertRaises(NcchError):
            check_ring_identity(U2, "[x,y]", trials=1)


if __name__ == "__main__":
    unittest.main()
