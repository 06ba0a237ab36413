##
# File:    SchrodingerReference.py
# Date:    18-Oct-2026
# Version: 0.001 Initial version
#
# Updates:
#  27-Oct-2026  add integrateRk4() as the linear-equation control for integration error growth
#  30-Oct-2026  expectation() rejects non-Hermitian observables
#
##
"""
Schrodinger picture evolution used as the truth oracle for gauge picture runs.

"""
__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"

import logging
from collections import namedtuple

import numpy as np

from rcsb.utils.gauge.ComplexLinAlgUtils import ComplexLinAlgUtils
from rcsb.utils.gauge.DeviationMetrics import DeviationMetrics
from rcsb.utils.gauge.GaugeExceptions import RejectedInputError

logger = logging.getLogger(__name__)

ExactPropagator = namedtuple("ExactPropagator", ("dim", "step", "delta"))
StateTrajectory = namedtuple("StateTrajectory", ("times", "states"))


class SchrodingerReference(object):
    """Fixed-step exact propagation and RK4 integration of i d/dt psi = H psi."""

    def __init__(self, **kwargs):
        self.__laU = kwargs.get("laUtil", ComplexLinAlgUtils())
        self.__metrics = DeviationMetrics(laUtil=self.__laU)
        self.__gridTol = kwargs.get("gridTol", 1.0e-9)

    def buildPropagator(self, hMat, delta):
        """Return the exact one-step propagator exp(-i H delta)."""
        hMat = np.asarray(hMat, dtype=complex)
        if not delta > 0.0:
            raise RejectedInputError("propagator step must be positive (got %r)" % delta)
        if self.__laU.hermitianResidual(hMat) > 1.0e-10 * max(1.0, float(np.linalg.norm(hMat))):
            raise RejectedInputError("Hamiltonian is not Hermitian")
        step = self.__laU.expmAntiHermitian(-1.0j * delta * hMat, 1.0e-13)
        return ExactPropagator(hMat.shape[0], step, float(delta))

    def __stepCounts(self, sampleTimes, delta):
        counts = []
        for t in sampleTimes:
            k = t / delta
            kR = int(round(k))
            if kR < 0 or abs(k - kR) > self.__gridTol * max(1.0, abs(k)):
                raise RejectedInputError("sample time %r is not a non-negative multiple of %r" % (t, delta))
            counts.append(kR)
        if any(b <= a for a, b in zip(counts, counts[1:])):
            raise RejectedInputError("sample times must be strictly increasing")
        return counts

    def evolveExact(self, prop, psi0, sampleTimes):
        """Return psi(t_k) = step^k psi0 at every sample time (multiples of prop.delta)."""
        psi = np.asarray(psi0, dtype=complex)
        if psi.shape != (prop.dim,):
            raise RejectedInputError("state dimension %r does not match propagator %d" % (psi.shape, prop.dim))
        counts = self.__stepCounts(sampleTimes, prop.delta)
        states = np.empty((len(counts), prop.dim), dtype=complex)
        kNow = 0
        for ii, k in enumerate(counts):
            while kNow < k:
                psi = prop.step @ psi
                kNow += 1
            states[ii] = psi
        return StateTrajectory(np.asarray(sampleTimes, dtype=float), states)

    def integrateRk4(self, hMat, psi0, dt, sampleTimes):
        """Classical RK4 integration of the Schrodinger equation (no renormalization)."""
        hMat = np.asarray(hMat, dtype=complex)
        psi = np.asarray(psi0, dtype=complex)
        counts = self.__stepCounts(sampleTimes, dt)
        states = np.empty((len(counts), psi.shape[0]), dtype=complex)
        kNow = 0
        for ii, k in enumerate(counts):
            while kNow < k:
                k1 = -1.0j * (hMat @ psi)
                k2 = -1.0j * (hMat @ (psi + 0.5 * dt * k1))
                k3 = -1.0j * (hMat @ (psi + 0.5 * dt * k2))
                k4 = -1.0j * (hMat @ (psi + dt * k3))
                psi = psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
                kNow += 1
            states[ii] = psi
        return StateTrajectory(np.asarray(sampleTimes, dtype=float), states)

    def expectation(self, psi, op):
        """Return the real expectation value <psi| op |psi> for Hermitian op.

        Raises:
            RejectedInputError: op is not Hermitian
        """
        psi = np.asarray(psi, dtype=complex)
        op = np.asarray(op)
        if self.__laU.hermitianResidual(op) > 1.0e-10 * max(1.0, float(np.linalg.norm(op))):
            raise RejectedInputError("observable is not Hermitian")
        return float(np.real(np.vdot(psi, op @ psi)))

    def observableSeries(self, trajectory, op, label):
        values = [self.expectation(psi, op) for psi in trajectory.states]
        return self.__metrics.makeTimeSeries(label, trajectory.times, values)
