##
# File:    GaugePictureEngine.py
# Date:    17-Oct-2026
# Version: 0.001 Initial version
#
# Updates:
#  22-Oct-2026  recompute connections and X terms from the provisional frames at every RK4 stage
#  24-Oct-2026  add invariant residual and total energy samples to run()
#  30-Oct-2026  default to the normalized X convention and reject drifted frames before projection
#
##
"""
Integrator for the (modified) gauge picture equations of motion.

The evolved objects are the per-patch frames U_I with

    d/dt U_I = -i G_I U_I,    G_I = H<I> + gamma X_I,    H<I> = sum_{J overlaps I} U_IJ H_J U_JI

Connections U_IJ = U_I U_J^dagger and local wavefunctions psi_I = U_I psi0 are derived views, so
flatness (U_IJ U_JK = U_IK) and consistency (psi_I = U_IJ psi_J) hold by construction.

"""
__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"

import logging
import time
from collections import OrderedDict, namedtuple

import numpy as np

from rcsb.utils.gauge.ComplexLinAlgUtils import ComplexLinAlgUtils
from rcsb.utils.gauge.DeviationMetrics import DeviationMetrics
from rcsb.utils.gauge.GaugeExceptions import IntegrationInstabilityError, RejectedInputError
from rcsb.utils.gauge.TfimModel import TfimModel

logger = logging.getLogger(__name__)

GaugeState = namedtuple("GaugeState", ("cover", "frames", "psi0", "t", "step"))
EvolutionConfigFields = ("gamma", "dt", "t_max", "sample_stride", "x_convention", "unitarize_every")
X_CONVENTIONS = ("literal", "normalized")
# literal X_I is 2^|I| times stiffer than normalized
DEFAULT_X_CONVENTION = "normalized"
EvolutionConfig = namedtuple("EvolutionConfig", EvolutionConfigFields, defaults=(0.0, 0.005, 5.0, 20, DEFAULT_X_CONVENTION, 1))
OBSERVABLES = ("sx", "sz", "s", "energy", "residuals")


class GaugePictureEngine(object):
    """Gauge picture state construction, generators and Runge-Kutta time stepping."""

    def __init__(self, modelSpec=None, cover=None, localTerms=None, **kwargs):
        """Engine bound to one model.

        Args:
            modelSpec (ModelSpec, optional): TFIM ring; builds the chain cover and local terms
            cover (PatchCover, optional): generic cover (used with localTerms when modelSpec is None)
            localTerms (list, optional): one LocalTerm per patch, in cover order
            laUtil (ComplexLinAlgUtils, optional): shared linear algebra helper
            maxFrameDrift (float, optional): largest unitarity residual a frame may reach between projections. Defaults to 1.0e-2.
        """
        self.__laU = kwargs.get("laUtil", ComplexLinAlgUtils())
        self.__maxFrameDrift = kwargs.get("maxFrameDrift", 1.0e-2)
        self.__model = TfimModel()
        if modelSpec is not None:
            self.__model.checkModelSpec(modelSpec)
            cover = self.__model.buildChainCover(int(modelSpec.L))
            localTerms = self.__model.buildLocalTerms(modelSpec, cover)
        if cover is None or localTerms is None:
            raise RejectedInputError("engine requires a model spec or a cover with local terms")
        if len(localTerms) != len(cover.patches):
            raise RejectedInputError("expected %d local terms, got %d" % (len(cover.patches), len(localTerms)))
        for term, patch in zip(localTerms, cover.patches):
            if tuple(term.patch.sites) != tuple(patch.sites):
                raise RejectedInputError("local term for patch %d is bound to sites %r" % (patch.patchId, term.patch.sites))
            if self.__laU.hermitianResidual(term.matrix) > 1.0e-12:
                raise RejectedInputError("local term on patch %d is not Hermitian" % patch.patchId)
        self.__cover = cover
        self.__terms = [np.asarray(term.matrix, dtype=complex) for term in localTerms]
        self.__L = int(cover.L)
        self.__N = 2**self.__L
        self.__complements = [tuple(s for s in range(self.__L) if s not in p.sites) for p in cover.patches]
        self.__metrics = DeviationMetrics(laUtil=self.__laU)
        logger.debug("Engine L %d patches %d", self.__L, len(cover.patches))

    def getCover(self):
        return self.__cover

    def checkConfig(self, config):
        if not config.dt > 0.0:
            raise RejectedInputError("dt must be positive (got %r)" % config.dt)
        if config.t_max < 0.0:
            raise RejectedInputError("t_max must be non-negative (got %r)" % config.t_max)
        if int(config.sample_stride) < 1 or int(config.unitarize_every) < 1:
            raise RejectedInputError("sample_stride and unitarize_every must be positive integers")
        if config.x_convention not in X_CONVENTIONS:
            raise RejectedInputError("unknown X convention %r" % config.x_convention)
        if config.gamma < 0.0:
            logger.warning("Negative gamma %r drives connections away from the identity", config.gamma)
        return True

    #
    # --- state and derived views ---
    #
    def initGaugeState(self, cover, psi0):
        """Return the t = 0 state: every frame is the identity and psi_I = psi0."""
        psi0 = np.asarray(psi0, dtype=complex)
        N = 2 ** int(cover.L)
        if psi0.shape != (N,):
            raise RejectedInputError("initial state has shape %r, expected (%d,)" % (psi0.shape, N))
        nrm = np.linalg.norm(psi0)
        if abs(nrm - 1.0) > 1.0e-10:
            raise RejectedInputError("initial state is not normalized (norm %r)" % nrm)
        frames = np.tile(np.eye(N, dtype=complex), (len(cover.patches), 1, 1))
        return GaugeState(cover, frames, psi0.copy(), 0.0, 0)

    def connection(self, state, iP, jP):
        """U_IJ = U_I U_J^dagger."""
        return self.__laU.matmul(state.frames[iP], self.__laU.adjoint(state.frames[jP]))

    def localWavefunction(self, state, iP):
        return self.__laU.matmul(state.frames[iP], state.psi0)

    def effectiveHamiltonian(self, state, iP):
        """H<I> = sum_{J overlaps I} U_IJ H_J U_JI = U_I (sum_J U_J^dagger H_J U_J) U_I^dagger."""
        frames = state.frames
        sM = sum(self.__heisenbergTerm(frames, jP) for jP in self.__cover.overlaps[iP])
        return frames[iP] @ sM @ self.__laU.adjoint(frames[iP])

    def xtilde(self, state, iP):
        """X~_I = sum_{J overlaps I} (-i) (U_IJ - U_IJ^dagger); the J = I summand vanishes."""
        xT = np.zeros((self.__N, self.__N), dtype=complex)
        for jP in self.__cover.overlaps[iP]:
            if jP == iP:
                continue
            uIJ = self.connection(state, iP, jP)
            xT += -1.0j * (uIJ - self.__laU.adjoint(uIJ))
        return xT

    def xTerm(self, state, iP, convention=DEFAULT_X_CONVENTION):
        """X_I = Tr_I X~_I tensored with the identity on patch I (divided by 2^|I| when normalized)."""
        patch = self.__cover.patches[iP]
        reduced = self.__laU.partialTrace(self.xtilde(state, iP), patch.sites, self.__L)
        if convention == "normalized":
            reduced = reduced / 2 ** len(patch.sites)
        elif convention != "literal":
            raise RejectedInputError("unknown X convention %r" % convention)
        return self.__laU.embedLocal(reduced, self.__complements[iP], self.__L)

    def generator(self, state, iP, gamma, convention=DEFAULT_X_CONVENTION):
        """G_I = H<I> + gamma X_I."""
        gI = self.effectiveHamiltonian(state, iP)
        if gamma != 0.0:
            gI = gI + gamma * self.xTerm(state, iP, convention)
        return gI

    def localExpectation(self, state, iP, op, sites=None):
        """Return <psi_I| op |psi_I> for an operator supported on patch I.

        Args:
            state (GaugeState): current state
            iP (int): patch id
            op (ndarray): 2^k x 2^k Hermitian operator
            sites (list, optional): sites op acts on (subset of patch I). Defaults to the patch sites.
        """
        patch = self.__cover.patches[iP]
        sites = tuple(patch.sites) if sites is None else tuple(sites)
        if not set(sites) <= set(patch.sites):
            raise RejectedInputError("operator on sites %r is not supported on patch %d %r" % (sites, iP, patch.sites))
        if self.__laU.hermitianResidual(op) > 1.0e-10:
            raise RejectedInputError("local observable is not Hermitian")
        psiI = self.localWavefunction(state, iP)
        return float(np.real(np.vdot(psiI, self.__laU.applyLocal(op, sites, self.__L, psiI))))

    def totalEnergy(self, state):
        """Sum of <psi_J| H_J |psi_J> with every local term read in its own patch frame."""
        return sum(self.localExpectation(state, patch.patchId, self.__terms[patch.patchId]) for patch in self.__cover.patches)

    def invariantResiduals(self, state):
        """Return (unitarity, flatness, consistency) residual maxima for the current frames."""
        unitarity = max(self.__laU.unitarityResidual(u) for u in state.frames)
        nP = len(self.__cover.patches)
        flatness = 0.0
        if nP >= 3:
            for iP in range(nP):
                jP, kP = (iP + 1) % nP, (iP + 2) % nP
                d = self.connection(state, iP, jP) @ self.connection(state, jP, kP) - self.connection(state, iP, kP)
                flatness = max(flatness, float(np.linalg.norm(d)))
        consistency = 0.0
        for iP in range(nP):
            psiI = self.localWavefunction(state, iP)
            for jP in self.__cover.overlaps[iP]:
                d = self.connection(state, iP, jP) @ self.localWavefunction(state, jP) - psiI
                consistency = max(consistency, float(np.linalg.norm(d)))
        return unitarity, flatness, consistency

    #
    # --- equations of motion ---
    #
    def __heisenbergTerm(self, frames, jP):
        # M_J = U_J^dagger H_J U_J with H_J applied locally
        patch = self.__cover.patches[jP]
        hU = self.__laU.applyLocal(self.__terms[jP], patch.sites, self.__L, frames[jP])
        return frames[jP].conj().T @ hU

    def __xReduced(self, frames, iP, convention):
        # Tr_I X~_I from partial pair traces: Tr_I(U_IJ^dagger) = (Tr_I U_IJ)^dagger
        patch = self.__cover.patches[iP]
        dk = 2 ** len(self.__complements[iP])
        red = np.zeros((dk, dk), dtype=complex)
        for jP in self.__cover.overlaps[iP]:
            if jP == iP:
                continue
            pIJ = self.__laU.partialPairTrace(frames[iP], frames[jP], patch.sites, self.__L)
            red += -1.0j * (pIJ - pIJ.conj().T)
        if convention == "normalized":
            red /= 2 ** len(patch.sites)
        return red

    def frameDerivative(self, frames, gamma, convention=DEFAULT_X_CONVENTION):
        """Return -i G_I U_I for every frame, with G_I built from the given frames."""
        mL = [self.__heisenbergTerm(frames, jP) for jP in range(len(self.__cover.patches))]
        dF = np.empty_like(frames)
        for iP in range(len(self.__cover.patches)):
            sM = sum(mL[jP] for jP in self.__cover.overlaps[iP])
            # H<I> U_I = U_I (sum_J M_J)
            gU = frames[iP] @ sM
            if gamma != 0.0:
                red = self.__xReduced(frames, iP, convention)
                gU = gU + gamma * self.__laU.applyLocal(red, self.__complements[iP], self.__L, frames[iP])
            dF[iP] = -1.0j * gU
        return dF

    def rk4Step(self, state, config):
        """Advance all frames by one classical RK4 step of size config.dt.

        Raises:
            IntegrationInstabilityError: a frame drifted past maxFrameDrift or re-unitarization failed,
                carries t and the patch id
        """
        dt = config.dt
        gamma = config.gamma
        conv = config.x_convention
        u0 = state.frames
        k1 = self.frameDerivative(u0, gamma, conv)
        k2 = self.frameDerivative(u0 + (0.5 * dt) * k1, gamma, conv)
        k3 = self.frameDerivative(u0 + (0.5 * dt) * k2, gamma, conv)
        k4 = self.frameDerivative(u0 + dt * k3, gamma, conv)
        frames = u0 + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        step = state.step + 1
        tNew = step * dt
        for iP in range(frames.shape[0]):
            drift = self.__laU.unitarityResidual(frames[iP])
            if not drift <= self.__maxFrameDrift:
                raise IntegrationInstabilityError("frame unitarity residual %.3e exceeds %.1e (gamma %r dt %r)" % (drift, self.__maxFrameDrift, gamma, dt), t=tNew, patchId=iP)
        if step % int(config.unitarize_every) == 0:
            for iP in range(frames.shape[0]):
                try:
                    frames[iP] = self.__laU.polarUnitarize(frames[iP])
                except IntegrationInstabilityError as e:
                    raise IntegrationInstabilityError(str(e), t=tNew, patchId=iP) from e
        return state._replace(frames=frames, t=tNew, step=step)

    #
    # --- trajectories ---
    #
    def __owningPatch(self, site):
        for patch in self.__cover.patches:
            if site in patch.sites:
                return patch.patchId
        raise RejectedInputError("site %d is not covered" % site)

    def __sample(self, state, observables, valD):
        L = self.__L
        if "sx" in observables or "sz" in observables:
            for site in range(L):
                iP = self.__owningPatch(site)
                for name in ("sx", "sz"):
                    if name in observables:
                        valD["%s_site%d" % (name, site)].append(self.localExpectation(state, iP, self.__model.pauli(name[1]), sites=[site]))
        if "s" in observables:
            sL = [self.__metrics.sDeviation(state, iP, jP) for iP, jP in self.__cover.pairs]
            for ii, sV in enumerate(sL):
                valD["s_pair_%d" % ii].append(sV)
            valD["s_mean"].append(float(np.mean(sL)))
        if "energy" in observables:
            valD["energy"].append(self.totalEnergy(state))
        if "residuals" in observables:
            uR, fR, cR = self.invariantResiduals(state)
            valD["unitarity_residual"].append(uR)
            valD["flatness_residual"].append(fR)
            valD["consistency_residual"].append(cR)

    def __seriesLabels(self, observables):
        labels = []
        if "sx" in observables:
            labels.extend("sx_site%d" % site for site in range(self.__L))
        if "sz" in observables:
            labels.extend("sz_site%d" % site for site in range(self.__L))
        if "s" in observables:
            labels.extend("s_pair_%d" % ii for ii in range(len(self.__cover.pairs)))
            labels.append("s_mean")
        if "energy" in observables:
            labels.append("energy")
        if "residuals" in observables:
            labels.extend(["unitarity_residual", "flatness_residual", "consistency_residual"])
        return labels

    def run(self, config, observables=("sx", "sz", "s"), psi0=None, initialState="plus_x"):
        """Integrate from t = 0 to config.t_max and sample every config.sample_stride steps.

        Args:
            config (EvolutionConfig): integration settings
            observables (tuple, optional): any of "sx", "sz", "s", "energy", "residuals"
            psi0 (ndarray, optional): initial state (overrides initialState)
            initialState (str, optional): "plus_x" or "z_up". Defaults to "plus_x".

        Returns:
            OrderedDict: {label: TimeSeries, ...} in deterministic column order
        """
        self.checkConfig(config)
        unknown = [ob for ob in observables if ob not in OBSERVABLES]
        if unknown:
            raise RejectedInputError("unknown observables %r" % unknown)
        if psi0 is None:
            psi0 = self.__model.initialState(self.__L, initialState)
        state = self.initGaugeState(self.__cover, psi0)
        numSteps = int(round(config.t_max / config.dt))
        stride = int(config.sample_stride)
        labels = self.__seriesLabels(observables)
        valD = OrderedDict((label, []) for label in labels)
        times = []
        startTime = time.time()
        times.append(0.0)
        self.__sample(state, observables, valD)
        for _ in range(numSteps):
            state = self.rk4Step(state, config)
            if state.step % stride == 0:
                times.append(state.t)
                self.__sample(state, observables, valD)
        logger.info(
            "Completed L %d gamma %r dt %r steps %d samples %d (%.2f seconds)", self.__L, config.gamma, config.dt, numSteps, len(times), time.time() - startTime
        )
        tA = np.asarray(times)
        return OrderedDict((label, self.__metrics.makeTimeSeries(label, tA, vL)) for label, vL in valD.items())
