##
# File:    testRunConfigProvider.py
# Date:    20-Oct-2026
#
# Updates:
#  25-Oct-2026  exclusion cells and injection path checks
#  30-Oct-2026  normalized X convention default
#
##
"""
Tests for run configuration defaults, configuration file sections, override precedence and validation.

"""

__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"

import logging
import os
import time
import unittest

from rcsb.utils.gauge.GaugeExceptions import UsageError
from rcsb.utils.gauge.RunConfigProvider import RunConfigProvider

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class RunConfigProviderTests(unittest.TestCase):
    def setUp(self):
        self.__startTime = time.time()
        self.__configPath = os.path.join(HERE, "test-data", "gauge-config-example.cfg")
        self.__outPath = os.path.join(HERE, "test-output", "config-check.csv")
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def __runConfig(self, command, **kwargs):
        overrideD = {"output_path": self.__outPath}
        overrideD.update(kwargs)
        return RunConfigProvider().getRunConfig(command, overrideD)

    def __assertUsage(self, field, command, **kwargs):
        with self.assertRaises(UsageError) as ctx:
            self.__runConfig(command, **kwargs)
        self.assertEqual(ctx.exception.field, field)

    def testCommandDefaults(self):
        """Test case: built-in defaults for every command"""
        rc = self.__runConfig("quench")
        self.assertTrue(rc.with_reference)
        self.assertEqual(rc.model.L, 6)
        self.assertEqual(rc.gamma_list, [0.0])
        self.assertEqual(rc.dt_list, [0.005])
        self.assertEqual(rc.evolution.sample_stride, 20)
        self.assertEqual(rc.evolution.x_convention, "normalized")
        self.assertEqual(rc.output_path, self.__outPath)
        rc = self.__runConfig("deviation")
        self.assertEqual(rc.gamma_list, [20.0])
        self.assertEqual(rc.evolution.gamma, 20.0)
        self.assertFalse(rc.with_reference)
        rc = self.__runConfig("sweep")
        self.assertEqual(rc.gamma_list, [8.0, 16.0, 32.0])
        self.assertEqual(rc.length_list, [5, 6, 7])
        self.assertEqual(rc.model.L, 5)
        self.assertEqual(rc.tier, "desk")
        rc = self.__runConfig("squiggle")
        self.assertEqual(rc.evolution.dt, 0.004)
        self.assertEqual(rc.evolution.sample_stride, 25)
        self.assertEqual(rc.evolution.t_max, 60.0)
        self.assertEqual(len(rc.gamma_list), 5)
        self.assertEqual(self.__runConfig("squiggle", dt_list=[0.005]).evolution.sample_stride, 20)
        self.assertEqual(self.__runConfig("squiggle", sample_stride=50).evolution.sample_stride, 50)
        rc = self.__runConfig("chaos")
        self.assertEqual(rc.dt_list, [0.005, 0.0005])
        self.assertEqual(rc.evolution.dt, 0.005)
        self.assertEqual(rc.evolution.t_max, 30.0)
        self.assertIsNone(RunConfigProvider().getConfigValue("command"))

    def testConfigFile(self):
        """Test case: configuration file sections and override precedence"""
        cfgP = RunConfigProvider(configPath=self.__configPath)
        self.assertEqual(cfgP.getConfigValue("command"), "deviation")
        rc = cfgP.getRunConfig(overrideD={"output_path": self.__outPath})
        self.assertEqual(rc.command, "deviation")
        self.assertEqual(rc.model.L, 5)
        self.assertEqual(rc.length_list, [5])
        self.assertEqual(rc.gamma_list, [10.0, 20.0])
        self.assertAlmostEqual(rc.model.hz, 0.1)
        self.assertEqual(rc.evolution.t_max, 2.0)
        self.assertEqual(rc.t_eval, 2.0)
        rc = cfgP.getRunConfig(overrideD={"output_path": self.__outPath, "hz": 0.3, "gamma_list": [30.0], "threads": None})
        self.assertAlmostEqual(rc.model.hz, 0.3)
        self.assertEqual(rc.gamma_list, [30.0])
        self.assertEqual(rc.threads, 1)
        # the command argument wins over the file key
        rc = cfgP.getRunConfig("quench", overrideD={"output_path": self.__outPath, "gamma_list": [1.0]})
        self.assertEqual(rc.command, "quench")
        #
        cfgP = RunConfigProvider(configPath=self.__configPath, configName="sweep_example")
        rc = cfgP.getRunConfig(overrideD={"output_path": self.__outPath})
        self.assertEqual(rc.command, "sweep")
        self.assertEqual(rc.length_list, [4, 5, 6])
        self.assertEqual(rc.model.L, 4)
        self.assertEqual(rc.exclude_cells, ((8.0, 4), (16.0, 6)))
        self.assertFalse(rc.with_reference)
        with self.assertRaises(UsageError) as ctx:
            RunConfigProvider(configPath=os.path.join(HERE, "test-data", "missing-config.cfg"))
        self.assertEqual(ctx.exception.field, "config")

    def testCoercion(self):
        rc = self.__runConfig("sweep", exclude_cells=["12:10", "8:5"], tier="full", length_list=[5, 6, 9])
        self.assertEqual(rc.exclude_cells, ((12.0, 10), (8.0, 5)))
        self.assertEqual(self.__runConfig("quench", with_reference="no").with_reference, False)
        self.assertEqual(self.__runConfig("quench", length="4").model.L, 4)
        self.assertEqual(self.__runConfig("deviation", gamma=12.0).gamma_list, [12.0])
        self.__assertUsage("length", "quench", length="abc")
        self.__assertUsage("length", "quench", length=2.5)
        self.__assertUsage("exclude_cells", "sweep", exclude_cells=["8-4"])
        self.__assertUsage("with_reference", "quench", with_reference="maybe")

    def testValidation(self):
        """Test case: invalid configurations name the offending field"""
        self.__assertUsage("command", "relax")
        self.__assertUsage("length", "quench", length_list=[2])
        self.__assertUsage("length", "quench", length_list=[9])
        self.__assertUsage("tier", "quench", tier="huge")
        self.__assertUsage("dt", "quench", dt_list=[-1.0])
        self.__assertUsage("sample_stride", "quench", sample_stride=0)
        self.__assertUsage("x_convention", "quench", x_convention="other")
        self.__assertUsage("initial_state", "quench", initial_state="minus_x")
        self.__assertUsage("threads", "quench", threads=0)
        self.__assertUsage("gamma", "quench", gamma_list=[1.0, 2.0])
        self.__assertUsage("length", "deviation", length_list=[5, 6])
        self.__assertUsage("length_list", "sweep", length_list=[5, 6])
        self.__assertUsage("t_eval", "deviation", t_eval=6.0)
        self.__assertUsage("window", "deviation", window=-0.5)
        self.__assertUsage("growth_floor", "chaos", growth_floor=1.0, growth_ceiling=1.0e-2)
        self.__assertUsage("dt_list", "chaos", dt_list=[0.005, 0.003])
        self.__assertUsage("inject_path", "quench", inject_path=self.__configPath)
        self.__assertUsage("inject_path", "sweep", inject_path=os.path.join(HERE, "test-data", "missing-points.csv"))
        rc = self.__runConfig("sweep", inject_path=self.__configPath, length_list=[5])
        self.assertEqual(rc.inject_path, self.__configPath)
        self.assertEqual(self.__runConfig("quench", tier="full", length_list=[10]).model.L, 10)


def runConfigSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(RunConfigProviderTests("testCommandDefaults"))
    suiteSelect.addTest(RunConfigProviderTests("testConfigFile"))
    suiteSelect.addTest(RunConfigProviderTests("testValidation"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = runConfigSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
