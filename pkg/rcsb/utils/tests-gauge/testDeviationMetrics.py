##
# File:    testDeviationMetrics.py
# Date:    17-Oct-2026
#
# Updates:
#
##
"""
Tests for the connection deviation S and picture comparison errors.

"""

__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"

import logging
import unittest

import numpy as np

from rcsb.utils.gauge.DeviationMetrics import DeviationMetrics
from rcsb.utils.gauge.GaugeExceptions import RejectedInputError
from rcsb.utils.gauge.GaugePictureEngine import GaugeState

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class DeviationMetricsTests(unittest.TestCase):
    def setUp(self):
        self.__dM = DeviationMetrics()
        self.__rng = np.random.default_rng(17)

    def __state(self, frames):
        return GaugeState(None, np.asarray(frames, dtype=complex), None, 0.0, 0)

    def __randomUnitary(self, n):
        q, r = np.linalg.qr(self.__rng.standard_normal((n, n)) + 1.0j * self.__rng.standard_normal((n, n)))
        return q * (np.diag(r) / np.abs(np.diag(r)))

    def testDeviation(self):
        eye = np.eye(8)
        self.assertEqual(self.__dM.sDeviation(self.__state([eye, eye]), 0, 1), 0.0)
        self.assertAlmostEqual(self.__dM.sDeviation(self.__state([eye, -eye]), 0, 1), 2.0, places=14)
        for theta in (0.1, 1.0, 2.5):
            st = self.__state([eye, np.exp(1.0j * theta) * eye])
            self.assertAlmostEqual(self.__dM.sDeviation(st, 0, 1), 1.0 - np.cos(theta), places=13)
            self.assertEqual(self.__dM.sDeviation(st, 0, 1), self.__dM.sDeviation(st, 1, 0))

    def testDeviationRandomFrames(self):
        frames = [self.__randomUnitary(16) for _ in range(4)]
        st = self.__state(frames)
        pairs = [(0, 1), (1, 2), (2, 3), (3, 0)]
        sL = []
        for iP, jP in pairs:
            naive = 1.0 - np.trace(frames[iP] @ frames[jP].conj().T).real / 16.0
            sV = self.__dM.sDeviation(st, iP, jP)
            self.assertLess(abs(sV - naive), 1.0e-12)
            self.assertGreaterEqual(sV, 0.0)
            self.assertLessEqual(sV, 2.0)
            sL.append(sV)
        self.assertAlmostEqual(self.__dM.meanDeviation(st, pairs), float(np.mean(sL)), places=14)

    def testMakeTimeSeries(self):
        ts = self.__dM.makeTimeSeries("s_mean", [0.0, 0.1, 0.2], [0.0, 1.0e-3, 2.0e-3])
        self.assertEqual(ts.label, "s_mean")
        self.assertEqual(ts.times.dtype, np.float64)
        self.assertEqual(len(self.__dM.makeTimeSeries("one", [0.0], [1.0]).values), 1)
        with self.assertRaises(RejectedInputError):
            self.__dM.makeTimeSeries("bad", [0.0, 0.1], [1.0])
        with self.assertRaises(RejectedInputError):
            self.__dM.makeTimeSeries("bad", [0.0, 0.2, 0.1], [1.0, 2.0, 3.0])

    def testPictureError(self):
        times = np.linspace(0.0, 1.0, 11)
        gauge = self.__dM.makeTimeSeries("sx_site0", times, np.cos(times))
        exact = self.__dM.makeTimeSeries("sx_exact_site0", times, np.cos(times) + 1.0e-7 * (-1.0) ** np.arange(11))
        err = self.__dM.pictureError(gauge, exact)
        self.assertEqual(err.label, "error_sx_site0")
        self.assertLess(np.abs(err.values - 1.0e-7).max(), 1.0e-15)
        self.assertEqual(self.__dM.pictureError(gauge, exact, label="err").label, "err")
        shifted = self.__dM.makeTimeSeries("sx", times + 1.0e-6, np.cos(times))
        with self.assertRaises(RejectedInputError):
            self.__dM.pictureError(gauge, shifted)
        with self.assertRaises(RejectedInputError):
            self.__dM.pictureError(gauge, self.__dM.makeTimeSeries("sx", times[:5], np.cos(times[:5])))


def deviationMetricsSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(DeviationMetricsTests("testDeviation"))
    suiteSelect.addTest(DeviationMetricsTests("testDeviationRandomFrames"))
    suiteSelect.addTest(DeviationMetricsTests("testPictureError"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = deviationMetricsSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
