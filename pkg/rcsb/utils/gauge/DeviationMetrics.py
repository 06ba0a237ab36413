##
# File:    DeviationMetrics.py
# Date:    17-Oct-2026
# Version: 0.001 Initial version
#
# Updates:
#
##
"""
Scalar diagnostics comparing the modified gauge picture with the Schrodinger picture.

"""
__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"

import logging
from collections import namedtuple

import numpy as np

from rcsb.utils.gauge.ComplexLinAlgUtils import ComplexLinAlgUtils
from rcsb.utils.gauge.GaugeExceptions import RejectedInputError

logger = logging.getLogger(__name__)

TimeSeries = namedtuple("TimeSeries", ("label", "times", "values"))


class DeviationMetrics(object):
    """Deviation S_IJ of connections from the identity and picture comparison errors."""

    def __init__(self, **kwargs):
        self.__laU = kwargs.get("laUtil", ComplexLinAlgUtils())
        self.__gridTol = kwargs.get("gridTol", 1.0e-9)

    def makeTimeSeries(self, label, times, values):
        """Return a validated TimeSeries (strictly increasing times, aligned values)."""
        tA = np.asarray(times, dtype=float)
        vA = np.asarray(values, dtype=float)
        if tA.ndim != 1 or tA.shape != vA.shape:
            raise RejectedInputError("series %r has misaligned times %r and values %r" % (label, tA.shape, vA.shape))
        if tA.size > 1 and not np.all(np.diff(tA) > 0.0):
            raise RejectedInputError("series %r times are not strictly increasing" % label)
        return TimeSeries(label, tA, vA)

    def sDeviation(self, state, iP, jP):
        """S_IJ = 1 - Re Tr(U_I U_J^dagger) / N, clipped to [0, 2].

        The pair is canonicalized so that S_IJ and S_JI are computed identically.
        """
        aP, bP = min(iP, jP), max(iP, jP)
        uA = state.frames[aP]
        n = uA.shape[0]
        val = 1.0 - self.__laU.pairTrace(uA, state.frames[bP]).real / n
        return float(min(2.0, max(0.0, val)))

    def meanDeviation(self, state, pairs):
        return float(np.mean([self.sDeviation(state, iP, jP) for iP, jP in pairs]))

    def pictureError(self, gaugeSeries, exactSeries, label=None):
        """Return |gauge - exact| pointwise on identical time grids."""
        if gaugeSeries.times.shape != exactSeries.times.shape or np.max(np.abs(gaugeSeries.times - exactSeries.times), initial=0.0) > self.__gridTol:
            raise RejectedInputError("time grids of %r and %r differ" % (gaugeSeries.label, exactSeries.label))
        label = label if label else "error_%s" % gaugeSeries.label
        return TimeSeries(label, gaugeSeries.times.copy(), np.abs(gaugeSeries.values - exactSeries.values))
