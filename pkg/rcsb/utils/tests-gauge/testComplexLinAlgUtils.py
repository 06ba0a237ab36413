##
# File:    testComplexLinAlgUtils.py
# Date:    16-Oct-2026
#
# Updates:
#  21-Oct-2026  add partial pair trace checks
#  30-Oct-2026  polar input residual bound
#
##
"""
Tests for dense complex linear algebra on qubit chains.

"""

__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"

import logging
import os
import platform
import resource
import time
import unittest

import numpy as np
import scipy.linalg

from rcsb.utils.gauge.ComplexLinAlgUtils import ComplexLinAlgUtils
from rcsb.utils.gauge.GaugeExceptions import IntegrationInstabilityError, RejectedInputError

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()

SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SY = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SZ = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
I2 = np.eye(2, dtype=complex)


def randomMatrix(rng, n, m=None):
    m = m if m else n
    return rng.standard_normal((n, m)) + 1.0j * rng.standard_normal((n, m))


def randomHermitian(rng, n):
    a = randomMatrix(rng, n)
    return 0.5 * (a + a.conj().T)


def randomUnitary(rng, n):
    q, r = np.linalg.qr(randomMatrix(rng, n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def krOracle(siteOps, L):
    """Full operator from {site: 2x2 op} with site 0 as the least significant bit."""
    full = np.ones((1, 1), dtype=complex)
    for site in range(L - 1, -1, -1):
        full = np.kron(full, siteOps.get(site, I2))
    return full


class ComplexLinAlgUtilsTests(unittest.TestCase):
    def setUp(self):
        self.__startTime = time.time()
        self.__laU = ComplexLinAlgUtils()
        self.__rng = np.random.default_rng(20261016)
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 1.0e6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testMatmul(self):
        """Test case: products against Pauli identities and a naive triple loop"""
        self.assertTrue(np.allclose(self.__laU.matmul(I2, I2), I2))
        self.assertLess(np.abs(self.__laU.matmul(SX, SZ) - (-1.0j * SY)).max(), 1.0e-15)
        a = randomMatrix(self.__rng, 8)
        b = randomMatrix(self.__rng, 8)
        naive = np.zeros((8, 8), dtype=complex)
        for i in range(8):
            for j in range(8):
                for k in range(8):
                    naive[i, j] += a[i, k] * b[k, j]
        self.assertLess(np.abs(self.__laU.matmul(a, b) - naive).max(), 1.0e-12)
        a, b, c = (randomMatrix(self.__rng, 12) for _ in range(3))
        lhs = self.__laU.matmul(self.__laU.matmul(a, b), c)
        rhs = self.__laU.matmul(a, self.__laU.matmul(b, c))
        self.assertLess(np.abs(lhs - rhs).max(), 1.0e-10)
        with self.assertRaises(RejectedInputError):
            self.__laU.matmul(randomMatrix(self.__rng, 3, 4), randomMatrix(self.__rng, 3, 4))

    def testAdjointAndTrace(self):
        self.assertTrue(np.array_equal(self.__laU.adjoint(np.eye(4, dtype=complex)), np.eye(4)))
        self.assertTrue(np.array_equal(self.__laU.adjoint(SY), SY))
        a = randomMatrix(self.__rng, 6)
        self.assertTrue(np.array_equal(self.__laU.adjoint(self.__laU.adjoint(a)), a))
        self.assertEqual(self.__laU.trace(np.eye(16)), 16.0)
        self.assertEqual(self.__laU.trace(SZ), 0.0)
        a = randomMatrix(self.__rng, 16)
        b = randomMatrix(self.__rng, 16)
        self.assertLess(abs(self.__laU.trace(a @ b) - self.__laU.trace(b @ a)), 1.0e-10)
        with self.assertRaises(RejectedInputError):
            self.__laU.trace(randomMatrix(self.__rng, 2, 3))

    def testPairTrace(self):
        self.assertAlmostEqual(self.__laU.pairTrace(np.eye(8), np.eye(8)), 8.0, places=14)
        u = randomUnitary(self.__rng, 8)
        self.assertLess(abs(self.__laU.pairTrace(u, u) - 8.0), 1.0e-12)
        a = randomMatrix(self.__rng, 8)
        b = randomMatrix(self.__rng, 8)
        self.assertLess(abs(self.__laU.pairTrace(a, b) - np.trace(a @ b.conj().T)), 1.0e-10)
        with self.assertRaises(RejectedInputError):
            self.__laU.pairTrace(np.eye(2), np.eye(4))

    def testEmbedLocal(self):
        """Test case: embedded operators against explicit Kronecker products"""
        self.assertTrue(np.allclose(self.__laU.embedLocal(SZ, [0], 1), SZ))
        plus = np.full(4, 0.5, dtype=complex)
        self.assertLess(np.abs(self.__laU.embedLocal(SX, [1], 2) @ plus - plus).max(), 1.0e-15)
        for i in range(3):
            emb = self.__laU.embedLocal(np.kron(SZ, SZ), [i, i + 1], 4)
            self.assertLess(np.abs(emb - krOracle({i: SZ, i + 1: SZ}, 4)).max(), 1.0e-12)
        # kron(A, B) acts with B on sites[0]
        a = randomMatrix(self.__rng, 2)
        b = randomMatrix(self.__rng, 2)
        emb = self.__laU.embedLocal(np.kron(a, b), [2, 0], 3)
        self.assertLess(np.abs(emb - krOracle({2: b, 0: a}, 3)).max(), 1.0e-12)
        with self.assertRaises(RejectedInputError):
            self.__laU.embedLocal(SZ, [3], 3)
        with self.assertRaises(RejectedInputError):
            self.__laU.embedLocal(np.kron(SZ, SZ), [1, 1], 3)
        with self.assertRaises(RejectedInputError):
            self.__laU.embedLocal(SZ, [0, 1], 3)

    def testApplyLocal(self):
        op = randomMatrix(self.__rng, 4)
        emb = self.__laU.embedLocal(op, [3, 1], 4)
        vec = randomMatrix(self.__rng, 16, 1)[:, 0]
        mat = randomMatrix(self.__rng, 16, 5)
        self.assertLess(np.abs(self.__laU.applyLocal(op, [3, 1], 4, vec) - emb @ vec).max(), 1.0e-12)
        self.assertLess(np.abs(self.__laU.applyLocal(op, [3, 1], 4, mat) - emb @ mat).max(), 1.0e-12)

    def testPartialTrace(self):
        """Test case: partial trace against factorized cases and an index-summation oracle"""
        self.assertTrue(np.allclose(self.__laU.partialTrace(np.eye(4), [0], 2), 2.0 * I2))
        a = randomMatrix(self.__rng, 4)
        b = randomMatrix(self.__rng, 2)
        # kron(a, b): b on site 0, a on sites (1, 2)
        red = self.__laU.partialTrace(np.kron(a, b), [0], 3)
        self.assertLess(np.abs(red - np.trace(b) * a).max(), 1.0e-12)
        #
        L = 4
        traced = [1, 3]
        kept = [0, 2]
        m = randomMatrix(self.__rng, 16)
        oracle = np.zeros((4, 4), dtype=complex)
        for i in range(16):
            for j in range(16):
                if all(((i >> s) & 1) == ((j >> s) & 1) for s in traced):
                    ki = sum(((i >> s) & 1) << n for n, s in enumerate(kept))
                    kj = sum(((j >> s) & 1) << n for n, s in enumerate(kept))
                    oracle[ki, kj] += m[i, j]
        red = self.__laU.partialTrace(m, traced, L)
        self.assertLess(np.abs(red - oracle).max(), 1.0e-12)
        self.assertLess(abs(np.trace(red) - np.trace(m)), 1.0e-10)
        #
        op = randomMatrix(self.__rng, 4)
        emb = self.__laU.embedLocal(op, [0, 2], L)
        self.assertLess(np.abs(self.__laU.partialTrace(emb, [1, 3], L) - 4.0 * op).max(), 1.0e-12)
        with self.assertRaises(RejectedInputError):
            self.__laU.partialTrace(m, [4], L)

    def testPartialPairTrace(self):
        a = randomMatrix(self.__rng, 32)
        b = randomMatrix(self.__rng, 32)
        for traced in ([0, 1], [4, 2], [3]):
            ref = self.__laU.partialTrace(a @ b.conj().T, traced, 5)
            self.assertLess(np.abs(self.__laU.partialPairTrace(a, b, traced, 5) - ref).max(), 1.0e-10)

    def testExpmAntiHermitian(self):
        """Test case: exponentials against analytic rotations and eigendecomposition"""
        self.assertLess(np.abs(self.__laU.expmAntiHermitian(np.zeros((4, 4), dtype=complex)) - np.eye(4)).max(), 1.0e-15)
        rot = self.__laU.expmAntiHermitian(-1.0j * (np.pi / 2.0) * SX)
        self.assertLess(np.abs(rot - (-1.0j * SX)).max(), 1.0e-12)
        for delta in (0.005, 0.3, 4.0):
            h = randomHermitian(self.__rng, 8)
            w, v = scipy.linalg.eigh(h)
            oracle = (v * np.exp(-1.0j * delta * w)) @ v.conj().T
            u = self.__laU.expmAntiHermitian(-1.0j * delta * h, 1.0e-13)
            self.assertLess(np.linalg.norm(u - oracle, 2), 1.0e-10)
            self.assertLess(np.abs(u - scipy.linalg.expm(-1.0j * delta * h)).max(), 1.0e-10)
            self.assertLess(self.__laU.unitarityResidual(u), 1.0e-10)
        with self.assertRaises(RejectedInputError):
            self.__laU.expmAntiHermitian(randomHermitian(self.__rng, 4))

    def testPolarUnitarize(self):
        """Test case: Newton-Schulz polar factor against an SVD oracle"""
        self.assertTrue(np.array_equal(self.__laU.polarUnitarize(np.eye(4, dtype=complex)), np.eye(4)))
        u = randomUnitary(self.__rng, 8)
        self.assertLess(np.abs(self.__laU.polarUnitarize(1.01 * u) - u).max(), 1.0e-12)
        near = u + 1.0e-3 * randomMatrix(self.__rng, 8)
        svdU, _, svdVh = scipy.linalg.svd(near)
        oracle = svdU @ svdVh
        pU = self.__laU.polarUnitarize(near)
        self.assertLess(np.abs(pU - oracle).max(), 1.0e-10)
        self.assertLess(np.abs(pU - scipy.linalg.polar(near)[0]).max(), 1.0e-10)
        self.assertLessEqual(self.__laU.unitarityResidual(pU), 1.0e-12)
        self.assertLess(np.abs(self.__laU.polarUnitarize(pU) - pU).max(), 1.0e-13)
        with self.assertRaises(IntegrationInstabilityError):
            self.__laU.polarUnitarize(3.0 * np.eye(4, dtype=complex))
        # outside ||u^dagger u - I||_F < 1 even though the scalar iteration would still converge
        with self.assertRaises(IntegrationInstabilityError):
            self.__laU.polarUnitarize(1.5 * u)


def linAlgSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(ComplexLinAlgUtilsTests("testMatmul"))
    suiteSelect.addTest(ComplexLinAlgUtilsTests("testEmbedLocal"))
    suiteSelect.addTest(ComplexLinAlgUtilsTests("testPartialTrace"))
    suiteSelect.addTest(ComplexLinAlgUtilsTests("testExpmAntiHermitian"))
    suiteSelect.addTest(ComplexLinAlgUtilsTests("testPolarUnitarize"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = linAlgSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
