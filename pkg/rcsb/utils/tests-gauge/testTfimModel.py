##
# File:    testTfimModel.py
# Date:    16-Oct-2026
#
# Updates:
#
##
"""
Tests for the periodic transverse-field Ising ring, its patch cover and local terms.

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
from rcsb.utils.gauge.GaugeExceptions import RejectedInputError, ResourceLimitError
from rcsb.utils.gauge.TfimModel import ModelSpec, TfimModel

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class TfimModelTests(unittest.TestCase):
    def setUp(self):
        self.__startTime = time.time()
        self.__tM = TfimModel()
        self.__laU = ComplexLinAlgUtils()
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 1.0e6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def __kronHamiltonian(self, spec):
        # independent construction from explicit Kronecker products
        L = spec.L
        x = self.__tM.pauli("x")
        z = self.__tM.pauli("z")

        def site(op, s):
            full = np.ones((1, 1), dtype=complex)
            for t in range(L - 1, -1, -1):
                full = np.kron(full, op if t == s else np.eye(2))
            return full

        h = np.zeros((2**L, 2**L), dtype=complex)
        for i in range(L):
            h += -spec.J * site(z, i) @ site(z, (i + 1) % L) - spec.hx * site(x, i) - spec.hz * site(z, i)
        return h

    def testChainCover(self):
        """Test case: nearest-neighbor ring covers"""
        cover = self.__tM.buildChainCover(3)
        self.assertEqual([p.sites for p in cover.patches], [(0, 1), (1, 2), (2, 0)])
        for iP in range(3):
            self.assertEqual(sorted(cover.overlaps[iP]), [0, 1, 2])
        self.assertEqual(cover.pairs, ((0, 1), (1, 2), (2, 0)))
        #
        cover = self.__tM.buildChainCover(4)
        self.assertEqual(sorted(cover.overlaps[0]), [0, 1, 3])
        self.assertNotIn(2, cover.overlaps[0])
        cover = self.__tM.buildChainCover(10)
        self.assertEqual(len(cover.patches), 10)
        self.assertTrue(all(len(ov) == 3 for ov in cover.overlaps))
        for iP, ov in enumerate(cover.overlaps):
            self.assertIn(iP, ov)
            for jP in ov:
                self.assertIn(iP, cover.overlaps[jP])
        with self.assertRaises(RejectedInputError):
            self.__tM.buildChainCover(2)

    def testGenericCover(self):
        cover = self.__tM.buildCover(4, [(0, 1, 2), (2, 3), (3, 0)])
        self.assertEqual(sorted(cover.overlaps[1]), [0, 1, 2])
        self.assertEqual(cover.pairs, ((0, 1), (0, 2), (1, 2)))
        with self.assertRaises(RejectedInputError):
            self.__tM.buildCover(4, [(0, 1), (1, 2)])
        with self.assertRaises(RejectedInputError):
            self.__tM.buildCover(3, [(0, 0), (1, 2)])

    def testLocalTerm(self):
        cover = self.__tM.buildChainCover(4)
        term = self.__tM.tfimLocalTerm(cover.patches[0], ModelSpec(4, 1.0, 0.0, 0.0))
        self.assertLess(np.abs(term.matrix - np.diag([-1.0, 1.0, 1.0, -1.0])).max(), 1.0e-15)
        term = self.__tM.tfimLocalTerm(cover.patches[0], ModelSpec(4, 1.0, 1.0, 0.0))
        self.assertLess(self.__laU.hermitianResidual(term.matrix), 1.0e-12)
        x = self.__tM.pauli("x")
        z = self.__tM.pauli("z")
        eye = np.eye(2)
        oracle = -np.kron(z, z) - 0.5 * (np.kron(x, eye) + np.kron(eye, x))
        self.assertLess(np.abs(np.linalg.eigvalsh(term.matrix) - scipy.linalg.eigh(oracle, eigvals_only=True)).max(), 1.0e-12)

    def testFullHamiltonian(self):
        """Test case: assembled Hamiltonian against patch sums and Kronecker oracles"""
        spec = ModelSpec(3, 1.0, 0.0, 0.0)
        h = self.__tM.assembleFullHamiltonian(spec)
        self.assertLess(np.abs(h - np.diag(np.diag(h))).max(), 1.0e-15)
        self.assertAlmostEqual(float(np.min(np.diag(h).real)), -3.0, places=12)
        spec = ModelSpec(3, 1.0, 1.0, 0.0)
        h = self.__tM.assembleFullHamiltonian(spec)
        self.assertLess(np.abs(np.linalg.eigvalsh(h) - scipy.linalg.eigh(self.__kronHamiltonian(spec), eigvals_only=True)).max(), 1.0e-10)
        for spec in (ModelSpec(4, 1.0, 1.0, 1.0), ModelSpec(5, 0.7, 1.3, -0.4)):
            h = self.__tM.assembleFullHamiltonian(spec)
            self.assertLess(self.__laU.hermitianResidual(h), 1.0e-12)
            self.assertLess(np.abs(h - self.__kronHamiltonian(spec)).max(), 1.0e-12)
            cover = self.__tM.buildChainCover(spec.L)
            hSum = sum(self.__laU.embedLocal(term.matrix, term.patch.sites, spec.L) for term in self.__tM.buildLocalTerms(spec, cover))
            self.assertLess(np.abs(hSum - h).max(), 1.0e-12)
        psi = self.__tM.plusXState(4)
        e = np.vdot(psi, self.__tM.assembleFullHamiltonian(ModelSpec(4, 1.0, 1.0, 1.0)) @ psi).real
        self.assertAlmostEqual(e, -4.0, places=12)

    def testTranslationCovariance(self):
        L = 5
        spec = ModelSpec(L, 1.0, 0.8, 0.3)
        cover = self.__tM.buildChainCover(L)
        terms = self.__tM.buildLocalTerms(spec, cover)
        t0 = self.__laU.embedLocal(terms[0].matrix, terms[0].patch.sites, L)
        N = 2**L
        for shift in range(1, L):
            perm = np.zeros((N, N))
            for b in range(N):
                bNew = sum(((b >> s) & 1) << ((s + shift) % L) for s in range(L))
                perm[bNew, b] = 1.0
            tI = self.__laU.embedLocal(terms[shift].matrix, terms[shift].patch.sites, L)
            self.assertLess(np.abs(tI - perm @ t0 @ perm.T).max(), 1.0e-12)

    def testModelSpecChecks(self):
        with self.assertRaises(RejectedInputError):
            self.__tM.assembleFullHamiltonian(ModelSpec(4, boundary="open"))
        with self.assertRaises(RejectedInputError):
            self.__tM.checkModelSpec(ModelSpec(2))
        with self.assertRaises(ResourceLimitError):
            TfimModel(maxLength=4).assembleFullHamiltonian(ModelSpec(5))
        with self.assertRaises(RejectedInputError):
            self.__tM.pauli("w")

    def testStates(self):
        self.assertLess(np.abs(self.__tM.plusXState(1) - np.array([1.0, 1.0]) / np.sqrt(2.0)).max(), 1.0e-15)
        psi = self.__tM.plusXState(2)
        self.assertTrue(np.allclose(psi, 0.5))
        for L in (2, 10):
            psi = self.__tM.plusXState(L)
            self.assertAlmostEqual(float(np.linalg.norm(psi)), 1.0, places=12)
            for site in range(L):
                sx = self.__laU.applyLocal(self.__tM.pauli("x"), [site], L, psi)
                self.assertAlmostEqual(float(np.vdot(psi, sx).real), 1.0, places=12)
        up = self.__tM.initialState(3, "z_up")
        self.assertEqual(up[0], 1.0)
        self.assertEqual(float(np.linalg.norm(up)), 1.0)
        self.assertEqual(self.__tM.basisState(3, 5)[5], 1.0)
        with self.assertRaises(RejectedInputError):
            self.__tM.basisState(3, 8)
        with self.assertRaises(RejectedInputError):
            self.__tM.initialState(3, "minus_x")
        self.assertLess(np.abs(self.__tM.siteOperator("z", 1, 2) - np.kron(self.__tM.pauli("z"), np.eye(2))).max(), 1.0e-15)


def tfimModelSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(TfimModelTests("testChainCover"))
    suiteSelect.addTest(TfimModelTests("testLocalTerm"))
    suiteSelect.addTest(TfimModelTests("testFullHamiltonian"))
    suiteSelect.addTest(TfimModelTests("testStates"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = tfimModelSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
