##
# File:    testGaugeExperimentWorkflow.py
# Date:    21-Oct-2026
#
# Updates:
#  25-Oct-2026  synthetic injection for sweep and squiggle fits
#  28-Oct-2026  command line exit codes
#  30-Oct-2026  deviation runs use the normalized X default
#
##
"""
Tests for the gauge picture experiment workflow and its command line entry point.

"""

__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"

import io
import logging
import os
import platform
import resource
import time
import unittest
from collections import OrderedDict

import numpy as np

from rcsb.utils.gauge.GaugeExceptions import AnalysisError
from rcsb.utils.gauge.GaugeExperimentExec import EXIT_ANALYSIS, EXIT_INSTABILITY, EXIT_SUCCESS, EXIT_USAGE, main
from rcsb.utils.gauge.GaugeExperimentWorkflow import GaugeExperimentWorkflow
from rcsb.utils.io.FileUtil import FileUtil
from rcsb.utils.io.MarshalUtil import MarshalUtil

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class GaugeExperimentWorkflowTests(unittest.TestCase):
    skipFlag = os.environ.get("GAUGE_LONG_TESTS", "0") != "1"

    def setUp(self):
        self.__startTime = time.time()
        self.__workPath = os.path.join(HERE, "test-output", "gauge-workflow")
        self.__mU = MarshalUtil()
        FileUtil().mkdir(self.__workPath)
        self.__report = io.StringIO()
        #
        self.__abc = (2.63, 0.19, -20.63)
        a, b, c = self.__abc
        rowL = []
        for gamma in (8.0, 12.0, 16.0, 20.0):
            for length in range(4, 11):
                sVal = gamma**-2 * np.exp(a * length + b + c / length)
                fluct = 0.0
                if (gamma, length) == (8.0, 4):
                    sVal *= 10.0
                elif (gamma, length) == (20.0, 10):
                    sVal *= 0.1
                    fluct = 0.5
                rowL.append(OrderedDict([("gamma", "%.17g" % gamma), ("length", str(length)), ("s_asymptote", "%.17g" % sVal), ("fluctuation", "%.17g" % fluct)]))
        self.__sweepPath = os.path.join(self.__workPath, "sweep-points.csv")
        self.__mU.doExport(self.__sweepPath, rowL, fmt="csv", fieldNames=["gamma", "length", "s_asymptote", "fluctuation"])
        for rowD in rowL:
            rowD["fluctuation"] = "0.5"
        self.__sweepRejectPath = os.path.join(self.__workPath, "sweep-points-rejected.csv")
        self.__mU.doExport(self.__sweepRejectPath, rowL, fmt="csv", fieldNames=["gamma", "length", "s_asymptote", "fluctuation"])
        #
        rowL = [OrderedDict([("gamma", "%.17g" % g), ("t_s", "%.17g" % (5.0 / np.sqrt(g - 2.7)))]) for g in (2.8, 3.0, 3.2, 3.5, 4.0)]
        rowL.append(OrderedDict([("gamma", "2.6"), ("t_s", "")]))
        self.__onsetPath = os.path.join(self.__workPath, "onsets.csv")
        self.__mU.doExport(self.__onsetPath, rowL, fmt="csv", fieldNames=["gamma", "t_s"])
        self.__onsetShortPath = os.path.join(self.__workPath, "onsets-short.csv")
        self.__mU.doExport(self.__onsetShortPath, rowL[:2], fmt="csv", fieldNames=["gamma", "t_s"])
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 1.0e6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def __outPath(self, name):
        return os.path.join(self.__workPath, name)

    def __workflow(self, raiseExceptions=True):
        return GaugeExperimentWorkflow(raiseExceptions=raiseExceptions, reportStream=self.__report)

    def __readText(self, path):
        with open(path, "r", encoding="utf-8") as ifh:
            return ifh.read()

    def testQuench(self):
        """Test case: short L = 3 quench against the exact reference columns"""
        outPath = self.__outPath("quench.csv")
        gWf = self.__workflow()
        ok = gWf.run("quench", {"length_list": [3], "gamma_list": [2.0], "t_max": 0.5, "output_path": outPath})
        self.assertTrue(ok)
        rowL = self.__mU.doImport(outPath, fmt="csv", rowFormat="dict")
        self.assertEqual(len(rowL), 6)
        self.assertEqual(float(rowL[0]["t"]), 0.0)
        self.assertAlmostEqual(float(rowL[-1]["t"]), 0.5, places=9)
        self.assertAlmostEqual(float(rowL[0]["sx_site0"]), 1.0, places=12)
        for rowD in rowL:
            for site in range(3):
                self.assertLess(abs(float(rowD["sx_site%d" % site]) - float(rowD["sx_exact_site%d" % site])), 1.0e-6)
                self.assertLess(abs(float(rowD["sz_site%d" % site]) - float(rowD["sz_exact_site%d" % site])), 1.0e-6)
            self.assertLess(float(rowD["unitarity_residual"]), 1.0e-10)
            self.assertAlmostEqual(float(rowD["energy"]), float(rowL[0]["energy"]), places=6)
        #
        outPath = self.__outPath("quench-zup.csv")
        ok = gWf.run("quench", {"length_list": [3], "hx": 0.0, "hz": 0.0, "t_max": 0.2, "initial_state": "z_up", "with_reference": False, "output_path": outPath})
        self.assertTrue(ok)
        rowL = self.__mU.doImport(outPath, fmt="csv", rowFormat="dict")
        self.assertNotIn("sx_exact_site0", rowL[0])
        for rowD in rowL:
            self.assertLess(abs(float(rowD["sx_site1"])), 1.0e-12)
            self.assertAlmostEqual(float(rowD["sz_site1"]), 1.0, places=10)

    def testDeviation(self):
        outPath = self.__outPath("deviation.csv")
        ok = self.__workflow().run("deviation", {"length_list": [4], "gamma_list": [10.0, 20.0], "t_max": 0.5, "t_eval": 0.5, "window": 0.2, "output_path": outPath})
        self.assertTrue(ok)
        for gS in ("10", "20"):
            path = self.__outPath("deviation_g%s.csv" % gS)
            self.assertTrue(os.access(path, os.R_OK))
            rowL = self.__mU.doImport(path, fmt="csv", rowFormat="dict")
            self.assertEqual(len(rowL), 6)
            self.assertEqual([float(rowL[0]["s_pair_%d" % ii]) for ii in range(4)] + [float(rowL[0]["s_mean"])], [0.0] * 5)
            self.assertTrue(all(0.0 <= float(rowD["s_mean"]) <= 2.0 for rowD in rowL))
            # frames separate once L > 3
            self.assertGreater(float(rowL[-1]["s_mean"]), 0.0)
        reportD = self.__mU.doImport(self.__outPath("deviation.fit.json"), fmt="json")
        self.assertEqual([aD["gamma"] for aD in reportD["asymptotes"]], [10.0, 20.0])
        self.assertTrue(os.access(self.__outPath("deviation.fit.txt"), os.R_OK))
        self.assertIn("gamma 10 s_asymptote", self.__report.getvalue())

    def testDeterminism(self):
        """Test case: identical inputs give byte-identical files (serial and parallel cells)"""
        textL = []
        for ii, threads in enumerate((1, 1, 2)):
            outPath = self.__outPath("determinism-%d.csv" % ii)
            ok = self.__workflow().run("deviation", {"length_list": [3], "gamma_list": [1.0, 4.0], "t_max": 0.3, "t_eval": 0.3, "threads": threads, "output_path": outPath})
            self.assertTrue(ok)
            textL.append(self.__readText(self.__outPath("determinism-%d_g4.csv" % ii)))
        self.assertEqual(textL[0], textL[1])
        self.assertEqual(textL[0], textL[2])

    def testSweepInjection(self):
        """Test case: the scaling fit recovers (a, b, c) from injected points with exclusions"""
        outPath = self.__outPath("sweep.csv")
        ok = self.__workflow().run("sweep", {"inject_path": self.__sweepPath, "exclude_cells": ["8:4"], "output_path": outPath})
        self.assertTrue(ok)
        reportD = self.__mU.doImport(self.__outPath("sweep.fit.json"), fmt="json")
        for key, val in zip(("a", "b", "c"), self.__abc):
            self.assertAlmostEqual(reportD[key], val, places=6)
        self.assertLess(reportD["residual"], 1.0e-9)
        self.assertEqual(reportD["points"], 26)
        self.assertEqual(sorted(eD["reason"] for eD in reportD["excluded"]), ["excluded", "not_clean"])
        rowL = self.__mU.doImport(outPath, fmt="csv", rowFormat="dict")
        self.assertEqual(len(rowL), 28)
        reasonD = {(float(rowD["gamma"]), int(rowD["length"])): (rowD["included"], rowD["reason"]) for rowD in rowL}
        self.assertEqual(reasonD[(8.0, 4)], ("0", "excluded"))
        self.assertEqual(reasonD[(20.0, 10)], ("0", "not_clean"))
        self.assertEqual(reasonD[(12.0, 6)], ("1", ""))
        #
        with self.assertRaises(AnalysisError):
            self.__workflow().run("sweep", {"inject_path": self.__sweepRejectPath, "output_path": self.__outPath("sweep-rejected.csv")})
        self.assertFalse(self.__workflow(raiseExceptions=False).run("sweep", {"inject_path": self.__sweepRejectPath, "output_path": self.__outPath("sweep-rejected.csv")}))

    def testSquiggleInjection(self):
        outPath = self.__outPath("squiggle.csv")
        ok = self.__workflow().run("squiggle", {"inject_path": self.__onsetPath, "output_path": outPath})
        self.assertTrue(ok)
        reportD = self.__mU.doImport(self.__outPath("squiggle.fit.json"), fmt="json")
        self.assertEqual(len(reportD["fits"]), 1)
        fitD = reportD["fits"][0]
        self.assertAlmostEqual(fitD["gamma0"], 2.7, places=8)
        self.assertAlmostEqual(fitD["t0"], 5.0, places=8)
        self.assertEqual(fitD["points"], 5)
        self.assertEqual(fitD["no_onset"], [2.6])
        self.assertIn("no onset for gamma 2.6", self.__report.getvalue())
        rowL = self.__mU.doImport(outPath, fmt="csv", rowFormat="dict")
        self.assertEqual([float(rowD["gamma"]) for rowD in rowL], [2.6, 2.8, 3.0, 3.2, 3.5, 4.0])
        self.assertEqual(rowL[0]["t_s"], "")
        #
        self.assertFalse(self.__workflow(raiseExceptions=False).run("squiggle", {"inject_path": self.__onsetShortPath, "output_path": self.__outPath("squiggle-short.csv")}))
        with self.assertRaises(AnalysisError):
            self.__workflow().run("squiggle", {"inject_path": self.__onsetShortPath, "output_path": self.__outPath("squiggle-short.csv")})

    def testChaos(self):
        outPath = self.__outPath("chaos.csv")
        overrideD = {"length_list": [3], "gamma_list": [0.0, 5.0], "dt_list": [0.01, 0.005], "t_max": 1.0, "sample_stride": 10, "output_path": outPath}
        ok = self.__workflow().run("chaos", overrideD)
        self.assertTrue(ok)
        rowL = self.__mU.doImport(outPath, fmt="csv", rowFormat="dict")
        self.assertEqual(len(rowL), 11)
        for key in ("sx_exact", "sx_gauge_g0_dt0.01", "err_g5_dt0.005", "err_exact_control", "err_rk4_control"):
            self.assertIn(key, rowL[0])
        for rowD in rowL:
            for key in ("err_g0_dt0.01", "err_g0_dt0.005", "err_g5_dt0.01", "err_g5_dt0.005", "err_exact_control", "err_rk4_control"):
                self.assertLess(float(rowD[key]), 1.0e-4)
        reportD = self.__mU.doImport(self.__outPath("chaos.fit.json"), fmt="json")
        self.assertEqual(len(reportD["variants"]), 4)
        self.assertIn("err_rk4_control", reportD)
        self.assertIsNone(reportD["variants"][0]["breakdown_t"])

    def testExecExitCodes(self):
        """Test case: command line exit codes for success, usage, analysis and instability failures"""
        self.assertEqual(main(["quench", "--length", "3", "--tmax", "0.2", "--out", self.__outPath("exec-quench.csv")]), EXIT_SUCCESS)
        self.assertEqual(main(["sweep", "--length", "5", "6", "--out", self.__outPath("exec-sweep.csv")]), EXIT_USAGE)
        self.assertEqual(main(["deviation", "--config", os.path.join(HERE, "test-data", "missing-config.cfg")]), EXIT_USAGE)
        self.assertEqual(main(["sweep", "--inject", self.__sweepRejectPath, "--out", self.__outPath("exec-sweep.csv")]), EXIT_ANALYSIS)
        argL = ["quench", "--length", "3", "--gamma", "5", "--dt", "10", "--stride", "1", "--tmax", "10", "--out", self.__outPath("exec-unstable.csv")]
        self.assertEqual(main(argL), EXIT_INSTABILITY)

    @unittest.skipIf(skipFlag, "Long test")
    def testDeviationL6(self):
        """Test case: L = 6, gamma = 20 reaches a clean asymptote by t = 5"""
        outPath = self.__outPath("deviation-l6.csv")
        ok = self.__workflow().run("deviation", {"length_list": [6], "gamma_list": [20.0], "output_path": outPath})
        self.assertTrue(ok)
        reportD = self.__mU.doImport(self.__outPath("deviation-l6.fit.json"), fmt="json")
        self.assertTrue(reportD["asymptotes"][0]["clean"])
        self.assertGreater(reportD["asymptotes"][0]["s_asymptote"], 0.0)
        # fluctuation over [3, 5] for the same trajectory
        rowL = self.__mU.doImport(outPath, fmt="csv", rowFormat="dict")
        sL = [float(rowD["s_mean"]) for rowD in rowL if float(rowD["t"]) >= 3.0 - 1.0e-9]
        self.assertLess((max(sL) - min(sL)) / np.mean(sL), 0.01)

    @unittest.skipIf(skipFlag, "Long test")
    def testGammaLawL6(self):
        outPath = self.__outPath("deviation-gamma-law.csv")
        ok = self.__workflow().run("deviation", {"length_list": [6], "gamma_list": [8.0, 16.0, 32.0], "output_path": outPath})
        self.assertTrue(ok)
        reportD = self.__mU.doImport(self.__outPath("deviation-gamma-law.fit.json"), fmt="json")
        self.assertAlmostEqual(reportD["gamma_exponent"], -2.0, delta=0.1)
        sD = {aD["gamma"]: aD["s_asymptote"] for aD in reportD["asymptotes"]}
        self.assertAlmostEqual(sD[16.0] / sD[32.0], 4.0, delta=0.8)

    @unittest.skipIf(skipFlag, "Long test")
    def testSweepL567(self):
        outPath = self.__outPath("sweep-l567.csv")
        ok = self.__workflow().run("sweep", {"output_path": outPath})
        self.assertTrue(ok)
        reportD = self.__mU.doImport(self.__outPath("sweep-l567.fit.json"), fmt="json")
        self.assertGreater(reportD["a"], 0.0)
        self.assertLess(reportD["c"], 0.0)

    @unittest.skipIf(skipFlag, "Long test")
    def testSquiggleL6(self):
        """Test case: onset divergence near gamma0 = 2.7 for the default L = 6 squiggle grid"""
        outPath = self.__outPath("squiggle-l6.csv")
        ok = self.__workflow().run("squiggle", {"threads": 4, "output_path": outPath})
        self.assertTrue(ok)
        rowL = self.__mU.doImport(outPath, fmt="csv", rowFormat="dict")
        self.assertNotEqual([rowD["t_s"] for rowD in rowL if float(rowD["gamma"]) == 2.2], [""])
        fitD = self.__mU.doImport(self.__outPath("squiggle-l6.fit.json"), fmt="json")["fits"][0]
        self.assertAlmostEqual(fitD["gamma0"], 2.7, delta=0.3)
        self.assertGreaterEqual(fitD["r_squared"], 0.99)

    @unittest.skipIf(skipFlag, "Long test")
    def testChaosL6(self):
        """Test case: exponential error growth in the gauge picture, none in the exact control"""
        outPath = self.__outPath("chaos-l6.csv")
        ok = self.__workflow().run("chaos", {"threads": 4, "output_path": outPath})
        self.assertTrue(ok)
        reportD = self.__mU.doImport(self.__outPath("chaos-l6.fit.json"), fmt="json")
        vD = {(rD["gamma"], rD["dt"]): rD for rD in reportD["variants"]}
        for gamma in (0.0, 20.0):
            rD = vD[(gamma, 0.005)]
            self.assertGreater(rD["rate"], 0.1)
            self.assertLessEqual(rD["max_error_t10"], 1.0e-3)
            self.assertIsNotNone(rD["breakdown_t"])
            self.assertTrue(10.0 <= rD["breakdown_t"] <= 30.0)
        controlD = reportD["err_exact_control"]
        self.assertTrue(controlD["rate"] is None or controlD["rate"] <= 0.05)

    @unittest.skipIf(os.environ.get("GAUGE_FULL_TIER_TESTS", "0") != "1", "Full tier test (multi-hour)")
    def testSweepFullTier(self):
        for hz, excludeL, aRef in ((0.0, None, 2.63), (1.0, ["12:10"], 4.21)):
            outPath = self.__outPath("sweep-full-hz%d.csv" % int(hz))
            overrideD = {"tier": "full", "gamma_list": [12.0, 16.0, 20.0], "length_list": [7, 8, 9, 10], "hz": hz, "threads": 4, "exclude_cells": excludeL, "output_path": outPath}
            ok = self.__workflow().run("sweep", overrideD)
            self.assertTrue(ok)
            reportD = self.__mU.doImport(self.__outPath("sweep-full-hz%d.fit.json" % int(hz)), fmt="json")
            self.assertAlmostEqual(reportD["a"], aRef, delta=0.15 * aRef)


def gaugeWorkflowSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(GaugeExperimentWorkflowTests("testQuench"))
    suiteSelect.addTest(GaugeExperimentWorkflowTests("testSweepInjection"))
    suiteSelect.addTest(GaugeExperimentWorkflowTests("testSquiggleInjection"))
    suiteSelect.addTest(GaugeExperimentWorkflowTests("testExecExitCodes"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = gaugeWorkflowSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
