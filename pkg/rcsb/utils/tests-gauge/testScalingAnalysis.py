##
# File:    testScalingAnalysis.py
# Date:    19-Oct-2026
#
# Updates:
#  26-Oct-2026  gamma exponent and convergence order checks
#  30-Oct-2026  non-uniform onset grid rejection
#
##
"""
Tests for asymptote extraction, the scaling and onset fits and error growth rates on synthetic data.

"""

__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"

import logging
import time
import unittest

import numpy as np

from rcsb.utils.gauge.DeviationMetrics import TimeSeries
from rcsb.utils.gauge.GaugeExceptions import AnalysisError, RejectedInputError
from rcsb.utils.gauge.ScalingAnalysis import AsymptoteEstimate, ScalingAnalysis, ScalingPoint

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


def syntheticPoints(a, b, c, lengths=range(4, 11), gammas=(8.0, 12.0, 16.0, 20.0), scale=1.0):
    return [ScalingPoint(g, L, scale * g**-2 * np.exp(a * L + b + c / L)) for g in gammas for L in lengths]


class ScalingAnalysisTests(unittest.TestCase):
    def setUp(self):
        self.__startTime = time.time()
        self.__sA = ScalingAnalysis()
        self.__grid = np.arange(51) * 0.1

    def tearDown(self):
        logger.debug("Completed %s (%.4f seconds)", self.id(), time.time() - self.__startTime)

    def testScalingFit(self):
        """Test case: exact recovery of (a, b, c) from noiseless synthetic points"""
        for a, b, c in ((2.63, 0.19, -20.63), (4.21, 0.13, -25.35)):
            fit = self.__sA.fitScaling(syntheticPoints(a, b, c))
            self.assertAlmostEqual(fit.a, a, places=8)
            self.assertAlmostEqual(fit.b, b, places=7)
            self.assertAlmostEqual(fit.c, c, places=7)
            self.assertLess(fit.residual, 1.0e-10)
        # a constant factor k^2 on S moves only b
        fit = self.__sA.fitScaling(syntheticPoints(2.63, 0.19, -20.63, scale=9.0))
        self.assertAlmostEqual(fit.a, 2.63, places=8)
        self.assertAlmostEqual(fit.b, 0.19 + np.log(9.0), places=7)
        self.assertAlmostEqual(fit.c, -20.63, places=7)
        fit = self.__sA.fitScaling(syntheticPoints(1.0, 0.0, -5.0, lengths=(5, 6, 7), gammas=(10.0,)))
        self.assertAlmostEqual(fit.a, 1.0, places=8)

    def testScalingFitRejects(self):
        with self.assertRaises(RejectedInputError):
            self.__sA.fitScaling(syntheticPoints(2.63, 0.19, -20.63, lengths=(6,)))
        with self.assertRaises(RejectedInputError):
            self.__sA.fitScaling(syntheticPoints(2.63, 0.19, -20.63, lengths=(5, 6)))
        with self.assertRaises(RejectedInputError):
            self.__sA.fitScaling(syntheticPoints(2.63, 0.19, -20.63, lengths=(5, 6), gammas=(10.0,)))
        with self.assertRaises(RejectedInputError):
            self.__sA.fitScaling([ScalingPoint(10.0, 5, 1.0e-3), ScalingPoint(10.0, 6, 0.0), ScalingPoint(10.0, 7, 1.0e-3)])

    def testOnsetFit(self):
        """Test case: recovery of gamma0 = 2.7 and t0 = 5 from exact onset times"""
        gammas = (2.8, 3.0, 3.2, 3.5, 4.0)
        points = [(g, 5.0 / np.sqrt(g - 2.7)) for g in gammas]
        fit = self.__sA.fitOnsetDivergence(points)
        self.assertAlmostEqual(fit.gamma0, 2.7, places=8)
        self.assertAlmostEqual(fit.t0, 5.0, places=8)
        self.assertAlmostEqual(fit.rSquared, 1.0, places=10)
        self.assertLess(fit.residual, 1.0e-12)
        with self.assertRaises(RejectedInputError):
            self.__sA.fitOnsetDivergence(points[:2])
        with self.assertRaises(RejectedInputError):
            self.__sA.fitOnsetDivergence(points[:2] + [points[0]])
        with self.assertRaises(AnalysisError):
            self.__sA.fitOnsetDivergence([(2.8, 5.0), (3.0, 6.0), (3.2, 7.0)])

    def testDetectOnset(self):
        times = np.arange(101) * 0.1
        series = TimeSeries("s_mean", times, 7.3 - np.abs(times - 7.3))
        self.assertAlmostEqual(self.__sA.detectOnset(series), 7.3, places=9)
        scaled = TimeSeries("s_mean", times, 1.0e-6 * series.values)
        self.assertAlmostEqual(self.__sA.detectOnset(scaled), 7.3, places=9)
        self.assertIsNone(self.__sA.detectOnset(TimeSeries("s_mean", times, times.copy())))
        self.assertIsNone(self.__sA.detectOnset(TimeSeries("s_mean", times[:1], times[:1])))
        # an early dip is ignored before t_min
        vals = times.copy()
        vals[6] = vals[5] - 0.05
        early = TimeSeries("s_mean", times, vals)
        self.assertIsNone(self.__sA.detectOnset(early, tMin=1.0))
        self.assertAlmostEqual(self.__sA.detectOnset(early, tMin=0.0), 0.5, places=9)
        skewed = np.concatenate([times[:50], times[50:] + 0.05 * np.arange(51)])
        with self.assertRaises(RejectedInputError):
            self.__sA.detectOnset(TimeSeries("s_mean", skewed, 7.3 - np.abs(skewed - 7.3)))

    def testGrowth(self):
        times = np.arange(251) * 0.1
        fit = self.__sA.fitGrowth(TimeSeries("err", times, 1.0e-9 * np.exp(0.8 * times)))
        self.assertAlmostEqual(fit.rate, 0.8, places=6)
        self.assertAlmostEqual(fit.intercept, np.log(1.0e-9), places=5)
        self.assertLess(fit.window[1], 20.2)
        self.assertEqual(fit.window[0], 0.0)
        fit = self.__sA.fitGrowth(TimeSeries("err", times, np.full(times.size, 1.0e-5)))
        self.assertAlmostEqual(fit.rate, 0.0, places=10)
        with self.assertRaises(RejectedInputError):
            self.__sA.fitGrowth(TimeSeries("err", times, np.full(times.size, 1.0e-12)))
        with self.assertRaises(RejectedInputError):
            self.__sA.fitGrowth(TimeSeries("err", times, -np.ones(times.size)))

    def testAsymptote(self):
        est = self.__sA.extractAsymptote(TimeSeries("s_mean", self.__grid, np.full(51, 0.3)))
        self.assertAlmostEqual(est.value, 0.3, places=14)
        self.assertEqual(est.fluctuation, 0.0)
        linear = TimeSeries("s_mean", self.__grid, self.__grid.copy())
        est = self.__sA.extractAsymptote(linear, tEval=5.0, window=0.5)
        self.assertAlmostEqual(est.value, 4.75, places=12)
        self.assertAlmostEqual(est.fluctuation, 0.5 / 4.75, places=9)
        self.assertAlmostEqual(self.__sA.extractAsymptote(linear, tEval=3.0, window=0.5).value, 2.75, places=12)
        est = self.__sA.extractAsymptote(linear, tEval=5.0, window=0.0)
        self.assertAlmostEqual(est.value, 5.0, places=12)
        self.assertEqual(est.fluctuation, 0.0)
        with self.assertRaises(RejectedInputError):
            self.__sA.extractAsymptote(linear, tEval=6.0)
        with self.assertRaises(RejectedInputError):
            self.__sA.extractAsymptote(linear, tEval=5.0, window=6.0)

    def testCleanGate(self):
        self.assertTrue(self.__sA.isCleanAsymptote(AsymptoteEstimate(0.1, 0.02)))
        self.assertFalse(self.__sA.isCleanAsymptote(AsymptoteEstimate(0.1, 0.021)))
        self.assertFalse(self.__sA.isCleanAsymptote(AsymptoteEstimate(0.0, 0.0)))
        self.assertTrue(ScalingAnalysis(gateFluctuation=0.05).isCleanAsymptote(AsymptoteEstimate(0.1, 0.04)))

    def testGammaExponent(self):
        gammas = [8.0, 16.0, 32.0]
        slope, intercept = self.__sA.fitGammaExponent(gammas, [3.0 * g**-2 for g in gammas])
        self.assertAlmostEqual(slope, -2.0, places=10)
        self.assertAlmostEqual(intercept, np.log(3.0), places=10)
        with self.assertRaises(RejectedInputError):
            self.__sA.fitGammaExponent([8.0], [1.0e-3])
        with self.assertRaises(RejectedInputError):
            self.__sA.fitGammaExponent([8.0, 16.0], [1.0e-3, 0.0])

    def testConvergenceOrder(self):
        base = np.sin(self.__grid)
        bump = np.cos(3.0 * self.__grid)
        sL = [TimeSeries("sx", self.__grid, base + 1.0e-6 * f * bump) for f in (16.0, 1.0, 1.0 / 16.0)]
        self.assertAlmostEqual(self.__sA.measureConvergenceOrder(*sL), 4.0, places=6)
        with self.assertRaises(AnalysisError):
            self.__sA.measureConvergenceOrder(sL[0], sL[0], sL[0])
        with self.assertRaises(RejectedInputError):
            self.__sA.measureConvergenceOrder(sL[0], TimeSeries("sx", self.__grid[:10], base[:10]), sL[2])


def scalingAnalysisSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(ScalingAnalysisTests("testScalingFit"))
    suiteSelect.addTest(ScalingAnalysisTests("testOnsetFit"))
    suiteSelect.addTest(ScalingAnalysisTests("testDetectOnset"))
    suiteSelect.addTest(ScalingAnalysisTests("testGrowth"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = scalingAnalysisSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
