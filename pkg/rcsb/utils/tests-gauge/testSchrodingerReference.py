##
# File:    testSchrodingerReference.py
# Date:    18-Oct-2026
#
# Updates:
#  27-Oct-2026  RK4 control convergence
#  30-Oct-2026  non-Hermitian observable rejection
#
##
"""
Tests for exact fixed-step Schrodinger propagation and the RK4 control integrator.

"""

__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"

import logging
import os
import time
import unittest

import numpy as np
import scipy.linalg

from rcsb.utils.gauge.GaugeExceptions import RejectedInputError
from rcsb.utils.gauge.SchrodingerReference import SchrodingerReference
from rcsb.utils.gauge.TfimModel import ModelSpec, TfimModel

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class SchrodingerReferenceTests(unittest.TestCase):
    def setUp(self):
        self.__startTime = time.time()
        self.__sR = SchrodingerReference()
        self.__tM = TfimModel()
        self.__h3 = self.__tM.assembleFullHamiltonian(ModelSpec(3, 1.0, 1.0, 0.0))
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def __eighState(self, hMat, psi0, t):
        w, v = scipy.linalg.eigh(hMat)
        return v @ (np.exp(-1.0j * w * t) * (v.conj().T @ psi0))

    def testTrivialEvolution(self):
        psi0 = self.__tM.plusXState(3)
        prop = self.__sR.buildPropagator(np.zeros((8, 8)), 0.1)
        traj = self.__sR.evolveExact(prop, psi0, [0.0, 1.0, 2.0])
        for psi in traj.states:
            self.assertLess(np.abs(psi - psi0).max(), 1.0e-14)
        prop = self.__sR.buildPropagator(self.__h3, 0.01)
        traj = self.__sR.evolveExact(prop, psi0, [0.0])
        self.assertTrue(np.array_equal(traj.states[0], psi0))

    def testSingleSpin(self):
        """Test case: H = sigma_z rotates <sigma_x> as cos(2t)"""
        sz = self.__tM.pauli("z")
        sx = self.__tM.pauli("x")
        psi0 = self.__tM.plusXState(1)
        delta = np.pi / 2000.0
        prop = self.__sR.buildPropagator(sz, delta)
        traj = self.__sR.evolveExact(prop, psi0, [0.0, np.pi / 4.0, np.pi / 2.0])
        series = self.__sR.observableSeries(traj, sx, "sx")
        self.assertEqual(series.label, "sx")
        self.assertAlmostEqual(series.values[0], 1.0, places=12)
        self.assertAlmostEqual(series.values[1], 0.0, places=9)
        self.assertAlmostEqual(series.values[2], -1.0, places=9)

    def testAgainstEigendecomposition(self):
        """Test case: L = 3 ring against the eigendecomposition oracle"""
        psi0 = self.__tM.plusXState(3)
        times = [0.0, 0.5, 1.0]
        traj = self.__sR.evolveExact(self.__sR.buildPropagator(self.__h3, 0.01), psi0, times)
        for t, psi in zip(times, traj.states):
            self.assertLess(np.abs(psi - self.__eighState(self.__h3, psi0, t)).max(), 1.0e-10)
            self.assertAlmostEqual(float(np.linalg.norm(psi)), 1.0, places=10)
        sx0 = self.__tM.siteOperator("x", 0, 3)
        exact = self.__sR.expectation(self.__eighState(self.__h3, psi0, 1.0), sx0)
        self.assertAlmostEqual(self.__sR.expectation(traj.states[-1], sx0), exact, places=9)
        # eigenstates only acquire a global phase
        _, v = scipy.linalg.eigh(self.__h3)
        traj = self.__sR.evolveExact(self.__sR.buildPropagator(self.__h3, 0.05), v[:, 0], [0.0, 1.0, 2.5])
        for psi in traj.states:
            self.assertAlmostEqual(abs(np.vdot(v[:, 0], psi)), 1.0, places=10)

    def testComposition(self):
        psi0 = self.__tM.plusXState(3)
        fine = self.__sR.evolveExact(self.__sR.buildPropagator(self.__h3, 0.001), psi0, [1.0])
        coarse = self.__sR.evolveExact(self.__sR.buildPropagator(self.__h3, 1.0), psi0, [1.0])
        self.assertLess(np.abs(fine.states[0] - coarse.states[0]).max(), 1.0e-10)

    def testRejectedInputs(self):
        prop = self.__sR.buildPropagator(self.__h3, 0.01)
        psi0 = self.__tM.plusXState(3)
        with self.assertRaises(RejectedInputError):
            self.__sR.evolveExact(prop, psi0, [0.015])
        with self.assertRaises(RejectedInputError):
            self.__sR.evolveExact(prop, psi0, [0.02, 0.01])
        with self.assertRaises(RejectedInputError):
            self.__sR.evolveExact(prop, self.__tM.plusXState(2), [0.01])
        with self.assertRaises(RejectedInputError):
            self.__sR.buildPropagator(np.array([[0.0, 1.0], [0.0, 0.0]]), 0.1)
        with self.assertRaises(RejectedInputError):
            self.__sR.buildPropagator(self.__h3, 0.0)
        with self.assertRaises(RejectedInputError):
            self.__sR.expectation(psi0, self.__tM.siteOperator("x", 0, 3) @ self.__tM.siteOperator("z", 1, 3) + 0.5j * np.eye(8))
        self.assertAlmostEqual(self.__sR.expectation(psi0, self.__tM.siteOperator("x", 2, 3)), 1.0, places=12)

    def testRk4Control(self):
        """Test case: RK4 control integrator converges at fourth order"""
        psi0 = self.__tM.plusXState(3)
        exact = self.__eighState(self.__h3, psi0, 1.0)
        errL = []
        for dt in (0.02, 0.01):
            traj = self.__sR.integrateRk4(self.__h3, psi0, dt, [0.0, 1.0])
            self.assertTrue(np.array_equal(traj.states[0], psi0))
            errL.append(float(np.linalg.norm(traj.states[-1] - exact)))
        self.assertLess(errL[1], 1.0e-5)
        self.assertGreater(errL[0] / errL[1], 10.0)
        with self.assertRaises(RejectedInputError):
            self.__sR.integrateRk4(self.__h3, psi0, 0.01, [0.005])


def schrodingerReferenceSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(SchrodingerReferenceTests("testSingleSpin"))
    suiteSelect.addTest(SchrodingerReferenceTests("testAgainstEigendecomposition"))
    suiteSelect.addTest(SchrodingerReferenceTests("testRk4Control"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = schrodingerReferenceSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
