##
# File:    testGaugePictureEngine.py
# Date:    17-Oct-2026
#
# Updates:
#  24-Oct-2026  invariant residual and energy checks on sampled trajectories
#  30-Oct-2026  L = 4 runs with separated frames and frame drift checks
#
##
"""
Tests for the gauge picture state, generators and RK4 integration against exact evolution.

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
from rcsb.utils.gauge.DeviationMetrics import DeviationMetrics
from rcsb.utils.gauge.GaugeExceptions import IntegrationInstabilityError, RejectedInputError
from rcsb.utils.gauge.GaugePictureEngine import EvolutionConfig, GaugePictureEngine
from rcsb.utils.gauge.TfimModel import LocalTerm, ModelSpec, TfimModel

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


def randomUnitary(rng, n):
    q, r = np.linalg.qr(rng.standard_normal((n, n)) + 1.0j * rng.standard_normal((n, n)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def randomHermitian(rng, n):
    a = rng.standard_normal((n, n)) + 1.0j * rng.standard_normal((n, n))
    return 0.5 * (a + a.conj().T)


class GaugePictureEngineTests(unittest.TestCase):
    skipFlag = os.environ.get("GAUGE_LONG_TESTS", "0") != "1"

    def setUp(self):
        self.__startTime = time.time()
        self.__laU = ComplexLinAlgUtils()
        self.__tM = TfimModel()
        self.__metrics = DeviationMetrics()
        self.__rng = np.random.default_rng(20261017)
        self.__spec3 = ModelSpec(3, 1.0, 1.0, 0.0)
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 1.0e6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def __randomState(self, engine, spec):
        state = engine.initGaugeState(engine.getCover(), self.__tM.plusXState(spec.L))
        frames = np.array([randomUnitary(self.__rng, 2**spec.L) for _ in engine.getCover().patches])
        return state._replace(frames=frames)

    def __exactSx(self, spec, times, site=0):
        h = self.__tM.assembleFullHamiltonian(spec)
        w, v = scipy.linalg.eigh(h)
        psi0 = self.__tM.plusXState(spec.L)
        c0 = v.conj().T @ psi0
        sx = self.__tM.siteOperator("x", site, spec.L)
        vals = []
        for t in times:
            psi = v @ (np.exp(-1.0j * w * t) * c0)
            vals.append(np.vdot(psi, sx @ psi).real)
        return np.array(vals)

    def testInitGaugeState(self):
        """Test case: identity frames and equal local wavefunctions at t = 0"""
        engine = GaugePictureEngine(modelSpec=self.__spec3)
        cover = engine.getCover()
        psi0 = self.__tM.plusXState(3)
        state = engine.initGaugeState(cover, psi0)
        self.assertEqual(state.frames.shape, (3, 8, 8))
        self.assertEqual(state.t, 0.0)
        for iP, jP in cover.pairs:
            self.assertEqual(self.__metrics.sDeviation(state, iP, jP), 0.0)
            self.assertTrue(np.array_equal(engine.connection(state, iP, jP), np.eye(8)))
        for iP in range(3):
            self.assertTrue(np.allclose(engine.localWavefunction(state, iP), psi0))
            self.assertAlmostEqual(engine.localExpectation(state, iP, np.eye(4)), 1.0, places=12)
            self.assertAlmostEqual(engine.localExpectation(state, iP, self.__tM.pauli("x"), sites=[cover.patches[iP].sites[0]]), 1.0, places=12)
        with self.assertRaises(RejectedInputError):
            engine.initGaugeState(cover, 2.0 * psi0)
        with self.assertRaises(RejectedInputError):
            engine.initGaugeState(cover, np.ones(4) / 2.0)
        frames = GaugePictureEngine(modelSpec=ModelSpec(10)).initGaugeState(self.__tM.buildChainCover(10), self.__tM.plusXState(10)).frames
        self.assertEqual(frames.shape, (10, 1024, 1024))

    def testConnections(self):
        engine = GaugePictureEngine(modelSpec=ModelSpec(4))
        state = self.__randomState(engine, ModelSpec(4))
        for iP in range(4):
            self.assertLess(np.abs(engine.connection(state, iP, iP) - np.eye(16)).max(), 1.0e-12)
            for jP in range(4):
                uIJ = engine.connection(state, iP, jP)
                self.assertLess(self.__laU.unitarityResidual(uIJ), 1.0e-10)
                self.assertLess(np.abs(uIJ - self.__laU.adjoint(engine.connection(state, jP, iP))).max(), 1.0e-12)
                for kP in range(4):
                    flat = engine.connection(state, iP, jP) @ engine.connection(state, jP, kP) - engine.connection(state, iP, kP)
                    self.assertLess(np.abs(flat).max(), 1.0e-10)
        uR, fR, cR = engine.invariantResiduals(state)
        self.assertLess(max(uR, fR, cR), 1.0e-10)

    def testEffectiveHamiltonian(self):
        """Test case: H<I> at t = 0, its conjugation invariants and a sandwich-product oracle"""
        spec = ModelSpec(4, 1.0, 1.0, 0.5)
        engine = GaugePictureEngine(modelSpec=spec)
        cover = engine.getCover()
        terms = self.__tM.buildLocalTerms(spec, cover)
        embedded = [self.__laU.embedLocal(term.matrix, term.patch.sites, 4) for term in terms]
        state = engine.initGaugeState(cover, self.__tM.plusXState(4))
        hEff = engine.effectiveHamiltonian(state, 0)
        self.assertLess(np.abs(hEff - (embedded[3] + embedded[0] + embedded[1])).max(), 1.0e-12)
        #
        rState = self.__randomState(engine, spec)
        frames = rState.frames
        for iP in range(4):
            oracle = np.zeros((16, 16), dtype=complex)
            for jP in cover.overlaps[iP]:
                uIJ = frames[iP] @ frames[jP].conj().T
                oracle += uIJ @ embedded[jP] @ uIJ.conj().T
            hR = engine.effectiveHamiltonian(rState, iP)
            self.assertLess(np.abs(hR - oracle).max(), 1.0e-10)
            self.assertLess(self.__laU.hermitianResidual(hR), 1.0e-10)
            # summands are conjugated separately so only the trace is frame independent
            h0 = engine.effectiveHamiltonian(state, iP)
            self.assertLess(abs(np.trace(h0) - np.trace(hR)), 1.0e-8)

    def testXtildeAndXTerm(self):
        """Test case: X~ and X against direct summation, partial trace and commutator checks"""
        spec = ModelSpec(4, 1.0, 1.0, 0.0)
        engine = GaugePictureEngine(modelSpec=spec)
        cover = engine.getCover()
        state = engine.initGaugeState(cover, self.__tM.plusXState(4))
        for iP in range(4):
            self.assertLess(np.abs(engine.xtilde(state, iP)).max(), 1.0e-15)
            self.assertLess(np.abs(engine.xTerm(state, iP)).max(), 1.0e-15)
        # scalar phase on frame 0 only
        theta = 0.37
        frames = state.frames.copy()
        frames[0] = np.exp(1.0j * theta) * np.eye(16)
        pState = state._replace(frames=frames)
        xT = engine.xtilde(pState, 0)
        self.assertLess(np.abs(xT - 2.0 * 2.0 * np.sin(theta) * np.eye(16)).max(), 1.0e-12)
        #
        rState = self.__randomState(engine, spec)
        for iP in range(4):
            oracle = np.zeros((16, 16), dtype=complex)
            for jP in cover.overlaps[iP]:
                uIJ = rState.frames[iP] @ rState.frames[jP].conj().T
                oracle += -1.0j * (uIJ - uIJ.conj().T)
            xT = engine.xtilde(rState, iP)
            self.assertLess(np.abs(xT - oracle).max(), 1.0e-12)
            self.assertLess(self.__laU.hermitianResidual(xT), 1.0e-12)
            sites = cover.patches[iP].sites
            rest = [s for s in range(4) if s not in sites]
            literal = engine.xTerm(rState, iP, "literal")
            expected = self.__laU.embedLocal(self.__laU.partialTrace(oracle, sites, 4), rest, 4)
            self.assertLess(np.abs(literal - expected).max(), 1.0e-10)
            self.assertLess(np.abs(engine.xTerm(rState, iP, "normalized") - literal / 4.0).max(), 1.0e-12)
            self.assertLess(self.__laU.hermitianResidual(literal), 1.0e-10)
            for _ in range(20):
                aI = self.__laU.embedLocal(randomHermitian(self.__rng, 4), sites, 4)
                self.assertLess(np.linalg.norm(literal @ aI - aI @ literal), 1.0e-10)
        with self.assertRaises(RejectedInputError):
            engine.xTerm(rState, 0, "other")

    def testGenerator(self):
        spec = ModelSpec(4, 1.0, 1.0, 0.2)
        engine = GaugePictureEngine(modelSpec=spec)
        state = engine.initGaugeState(engine.getCover(), self.__tM.plusXState(4))
        for iP in range(4):
            self.assertLess(np.abs(engine.generator(state, iP, 7.0) - engine.effectiveHamiltonian(state, iP)).max(), 1.0e-12)
        rState = self.__randomState(engine, spec)
        for iP in range(4):
            self.assertTrue(np.array_equal(engine.generator(rState, iP, 0.0), engine.effectiveHamiltonian(rState, iP)))
            gI = engine.generator(rState, iP, 3.0, "literal")
            self.assertLess(self.__laU.hermitianResidual(gI), 1.0e-10)
            self.assertLess(np.abs(gI - engine.effectiveHamiltonian(rState, iP) - 3.0 * engine.xTerm(rState, iP, "literal")).max(), 1.0e-10)
        # frame derivative agrees with -i G_I U_I built from the generator
        dF = engine.frameDerivative(rState.frames, 3.0, "normalized")
        for iP in range(4):
            ref = -1.0j * engine.generator(rState, iP, 3.0, "normalized") @ rState.frames[iP]
            self.assertLess(np.abs(dF[iP] - ref).max(), 1.0e-10)

    def testRk4Step(self):
        """Test case: one RK4 step against the eigendecomposition oracle"""
        engine = GaugePictureEngine(modelSpec=self.__spec3)
        state = engine.initGaugeState(engine.getCover(), self.__tM.plusXState(3))
        config = EvolutionConfig(gamma=0.0, dt=0.005)
        state = engine.rk4Step(state, config)
        self.assertAlmostEqual(state.t, 0.005, places=15)
        self.assertEqual(state.step, 1)
        exact = self.__exactSx(self.__spec3, [0.005], site=0)[0]
        for iP in (0, 2):
            self.assertLess(abs(engine.localExpectation(state, iP, self.__tM.pauli("x"), sites=[0]) - exact), 1.0e-10)
        # zero Hamiltonian keeps every frame at the identity for any gamma
        cover = self.__tM.buildChainCover(3)
        zeroTerms = [LocalTerm(p, np.zeros((4, 4), dtype=complex)) for p in cover.patches]
        zEngine = GaugePictureEngine(cover=cover, localTerms=zeroTerms)
        zState = zEngine.initGaugeState(cover, self.__tM.plusXState(3))
        for _ in range(10):
            zState = zEngine.rk4Step(zState, EvolutionConfig(gamma=5.0, dt=0.01))
        self.assertLess(np.abs(zState.frames - np.eye(8)).max(), 1.0e-14)

    def testRunAgainstExact(self):
        """Test case: L = 3 patches all overlap, so frames stay equal for any gamma"""
        engine = GaugePictureEngine(modelSpec=self.__spec3)
        for gamma in (0.0, 5.0):
            config = EvolutionConfig(gamma=gamma, dt=0.005, t_max=1.0, sample_stride=20)
            seriesD = engine.run(config, observables=("sx", "sz", "s", "energy", "residuals"))
            times = seriesD["sx_site0"].times
            self.assertEqual(len(times), 200 // 20 + 1)
            self.assertAlmostEqual(times[-1], 1.0, places=12)
            for site in range(3):
                exact = self.__exactSx(self.__spec3, times, site=site)
                self.assertLess(np.abs(seriesD["sx_site%d" % site].values - exact).max(), 1.0e-6)
            self.assertLess(np.abs(seriesD["energy"].values - seriesD["energy"].values[0]).max(), 1.0e-6)
            for label in ("unitarity_residual", "flatness_residual", "consistency_residual"):
                self.assertLess(seriesD[label].values.max(), 1.0e-10)
            sMean = seriesD["s_mean"].values
            self.assertEqual(sMean[0], 0.0)
            self.assertTrue(np.all((sMean >= 0.0) & (sMean <= 2.0)))
            # on three sites every patch overlaps every other so the frames stay equal
            self.assertLess(sMean.max(), 1.0e-10)
            for pair in range(3):
                self.assertLess(np.abs(seriesD["s_pair_%d" % pair].values - sMean).max(), 1.0e-8)
        self.assertEqual(list(seriesD.keys())[:3], ["sx_site0", "sx_site1", "sx_site2"])
        with self.assertRaises(RejectedInputError):
            engine.run(EvolutionConfig(dt=0.0))
        with self.assertRaises(RejectedInputError):
            engine.run(EvolutionConfig(t_max=0.1), observables=("entropy",))

    def testRunFramesDiffer(self):
        """Test case: L = 4 frames separate, gamma damps S and local observables stay exact"""
        spec = ModelSpec(4, 1.0, 1.0, 0.0)
        engine = GaugePictureEngine(modelSpec=spec)
        sLate = []
        for gamma in (0.0, 4.0, 16.0):
            config = EvolutionConfig(gamma=gamma, dt=0.005, t_max=1.5, sample_stride=20)
            seriesD = engine.run(config, observables=("sx", "s", "energy", "residuals"))
            times = seriesD["s_mean"].times
            self.assertEqual(len(times), 16)
            for site in range(4):
                exact = self.__exactSx(spec, times, site=site)
                self.assertLess(np.abs(seriesD["sx_site%d" % site].values - exact).max(), 1.0e-4)
            energy = seriesD["energy"].values
            self.assertLess(np.abs(energy - energy[0]).max(), 1.0e-6)
            for label in ("unitarity_residual", "flatness_residual", "consistency_residual"):
                self.assertLess(seriesD[label].values.max(), 1.0e-10)
            sMean = seriesD["s_mean"].values
            self.assertGreater(sMean[-1], 0.0)
            sLate.append(float(np.mean(sMean[times >= 0.5 - 1.0e-9])))
        logger.info("Mean S over [0.5, 1.5] for gamma 0, 4, 16: %r", sLate)
        self.assertGreater(sLate[0], sLate[1])
        self.assertGreater(sLate[1], sLate[2])
        self.assertGreater(sLate[2], 0.0)

    def testLocalExpectationSupport(self):
        engine = GaugePictureEngine(modelSpec=ModelSpec(4))
        state = engine.initGaugeState(engine.getCover(), self.__tM.plusXState(4))
        with self.assertRaises(RejectedInputError):
            engine.localExpectation(state, 0, self.__tM.pauli("x"), sites=[2])
        with self.assertRaises(RejectedInputError):
            engine.localExpectation(state, 0, np.array([[0.0, 1.0], [0.0, 0.0]]), sites=[0])

    def testInstability(self):
        engine = GaugePictureEngine(modelSpec=self.__spec3)
        state = engine.initGaugeState(engine.getCover(), self.__tM.plusXState(3))
        with self.assertRaises(IntegrationInstabilityError) as ctx:
            engine.rk4Step(state, EvolutionConfig(gamma=5.0, dt=10.0))
        self.assertEqual(ctx.exception.t, 10.0)

    def testFrameDriftGuard(self):
        """Test case: frames that drift from unitarity raise before re-unitarization"""
        engine = GaugePictureEngine(modelSpec=ModelSpec(4), maxFrameDrift=1.0e-16)
        state = engine.initGaugeState(engine.getCover(), self.__tM.plusXState(4))
        with self.assertRaises(IntegrationInstabilityError) as ctx:
            engine.rk4Step(state, EvolutionConfig(dt=0.005))
        self.assertEqual(ctx.exception.patchId, 0)
        self.assertEqual(ctx.exception.t, 0.005)
        # literal X at gamma = 20 is too stiff for dt = 0.005
        engine = GaugePictureEngine(modelSpec=ModelSpec(5, 1.0, 1.0, 0.0))
        with self.assertRaises(IntegrationInstabilityError) as ctx:
            engine.run(EvolutionConfig(gamma=20.0, dt=0.005, t_max=5.0, x_convention="literal"), observables=("s",))
        self.assertGreater(ctx.exception.t, 0.0)
        self.assertLessEqual(ctx.exception.t, 5.0 + 1.0e-9)
        self.assertIsNotNone(ctx.exception.patchId)

    @unittest.skipIf(skipFlag, "Long test")
    def testRunL6(self):
        """Test case: L = 6 clean asymptote, translation symmetry and picture equivalence"""
        spec = ModelSpec(6, 1.0, 1.0, 0.0)
        engine = GaugePictureEngine(modelSpec=spec)
        seriesD = engine.run(EvolutionConfig(gamma=20.0, dt=0.005, t_max=5.0, sample_stride=20), observables=("sx", "s"))
        sMean = seriesD["s_mean"]
        sel = sMean.times >= 3.0 - 1.0e-9
        fluct = (sMean.values[sel].max() - sMean.values[sel].min()) / sMean.values[sel].mean()
        self.assertLess(fluct, 0.01)
        for pair in range(6):
            self.assertLess(np.abs(seriesD["s_pair_%d" % pair].values - sMean.values).max(), 1.0e-8)
        exact = self.__exactSx(spec, sMean.times, site=0)
        self.assertLess(np.abs(seriesD["sx_site0"].values - exact).max(), 1.0e-4)


def gaugeEngineSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(GaugePictureEngineTests("testInitGaugeState"))
    suiteSelect.addTest(GaugePictureEngineTests("testEffectiveHamiltonian"))
    suiteSelect.addTest(GaugePictureEngineTests("testXtildeAndXTerm"))
    suiteSelect.addTest(GaugePictureEngineTests("testRk4Step"))
    suiteSelect.addTest(GaugePictureEngineTests("testRunAgainstExact"))
    suiteSelect.addTest(GaugePictureEngineTests("testRunFramesDiffer"))
    suiteSelect.addTest(GaugePictureEngineTests("testFrameDriftGuard"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = gaugeEngineSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
