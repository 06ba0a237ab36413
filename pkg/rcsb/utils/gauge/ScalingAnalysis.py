##
# File:    ScalingAnalysis.py
# Date:    19-Oct-2026
# Version: 0.001 Initial version
#
# Updates:
#  26-Oct-2026  add fitGammaExponent() and measureConvergenceOrder()
#  30-Oct-2026  detectOnset() rejects non-uniform sample grids
#
##
"""
Regressions and detectors for deviation time series:

  - asymptote extraction with a clean-asymptote fluctuation gate
  - S = gamma^-2 exp(a L + b + c / L) scaling fit (linear in log space)
  - squiggle onset detection and the t_s^2 = t0^2 / (gamma - gamma0) divergence fit
  - exponential growth rate of integration errors

All fits are closed-form linear least squares.

"""
__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"

import logging
from collections import namedtuple

import numpy as np
from scipy import stats

from rcsb.utils.gauge.GaugeExceptions import AnalysisError, RejectedInputError

logger = logging.getLogger(__name__)

ScalingPoint = namedtuple("ScalingPoint", ("gamma", "L", "s_asymptote"))
ScalingFit = namedtuple("ScalingFit", ("a", "b", "c", "residual"))
OnsetFitFields = ("gamma0", "t0", "residual", "rSquared")
OnsetFit = namedtuple("OnsetFit", OnsetFitFields, defaults=(None,))
GrowthFit = namedtuple("GrowthFit", ("rate", "intercept", "window"))
AsymptoteEstimate = namedtuple("AsymptoteEstimate", ("value", "fluctuation"))


class ScalingAnalysis(object):
    """Fits and detectors over TimeSeries / ScalingPoint data."""

    def __init__(self, **kwargs):
        """
        Args:
            gateFluctuation (float, optional): clean-asymptote relative fluctuation limit. Defaults to 0.02.
            rankTol (float, optional): relative singular value cutoff for design rank checks. Defaults to 1.0e-10.
        """
        self.__gateFluctuation = kwargs.get("gateFluctuation", 0.02)
        self.__rankTol = kwargs.get("rankTol", 1.0e-10)

    def extractAsymptote(self, series, tEval=5.0, window=0.5):
        """Return the mean of the series over [tEval - window, tEval] and its relative fluctuation.

        A zero window returns the sample at tEval.

        Raises:
            RejectedInputError: the series does not cover the window
        """
        times = series.times
        tol = 1.0e-9 * max(1.0, abs(tEval))
        if times.size == 0 or times[0] > tEval - window + tol or times[-1] < tEval - tol:
            raise RejectedInputError("series %r does not cover [%r, %r]" % (series.label, tEval - window, tEval))
        sel = (times >= tEval - window - tol) & (times <= tEval + tol)
        vals = series.values[sel]
        if vals.size == 0:
            raise RejectedInputError("no samples of %r inside [%r, %r]" % (series.label, tEval - window, tEval))
        if window <= 0.0:
            vals = vals[-1:]
        mean = float(np.mean(vals))
        fluct = float((np.max(vals) - np.min(vals)) / abs(mean)) if mean != 0.0 else float("inf")
        if vals.size == 1:
            fluct = 0.0
        return AsymptoteEstimate(mean, fluct)

    def isCleanAsymptote(self, estimate):
        return estimate.value > 0.0 and estimate.fluctuation <= self.__gateFluctuation

    def __checkRank(self, design, what):
        sv = np.linalg.svd(design, compute_uv=False)
        rank = int(np.sum(sv > self.__rankTol * sv[0])) if sv.size and sv[0] > 0.0 else 0
        if rank < design.shape[1]:
            raise RejectedInputError("%s design is rank deficient (rank %d < %d)" % (what, rank, design.shape[1]))

    def fitScaling(self, points):
        """Fit ln(gamma^2 S) = a L + b + c / L by linear least squares.

        Raises:
            RejectedInputError: fewer than 3 points, non-positive S, or fewer than 3 distinct L
                (the columns L, 1 and 1/L are dependent on two system sizes)
        """
        if len(points) < 3:
            raise RejectedInputError("scaling fit needs at least 3 points (got %d)" % len(points))
        if any(pt.s_asymptote <= 0.0 or pt.gamma <= 0.0 for pt in points):
            raise RejectedInputError("scaling fit needs positive gamma and S values")
        lA = np.array([float(pt.L) for pt in points])
        gA = np.array([float(pt.gamma) for pt in points])
        sA = np.array([float(pt.s_asymptote) for pt in points])
        if len(set(lA.tolist())) < 3:
            raise RejectedInputError("scaling fit needs 3 distinct L values to separate a, b and c (got %r)" % sorted(set(lA.tolist())))
        design = np.column_stack([lA, np.ones_like(lA), 1.0 / lA])
        self.__checkRank(design, "scaling")
        y = np.log(gA**2 * sA)
        coef, _, _, _ = np.linalg.lstsq(design, y, rcond=None)
        resid = y - design @ coef
        fit = ScalingFit(float(coef[0]), float(coef[1]), float(coef[2]), float(np.sqrt(np.mean(resid**2))))
        logger.info("Scaling fit a %.6f b %.6f c %.6f residual %.3e (%d points)", fit.a, fit.b, fit.c, fit.residual, len(points))
        return fit

    def fitGammaExponent(self, gammas, values):
        """Return (slope, intercept) of ln S against ln gamma."""
        gA = np.asarray(gammas, dtype=float)
        vA = np.asarray(values, dtype=float)
        if gA.size < 2 or len(set(gA.tolist())) < 2 or np.any(gA <= 0.0) or np.any(vA <= 0.0):
            raise RejectedInputError("exponent fit needs two or more distinct positive gamma values with positive S")
        res = stats.linregress(np.log(gA), np.log(vA))
        return float(res.slope), float(res.intercept)

    def detectOnset(self, series, tMin=1.0, epsilon=1.0e-4):
        """Return the first time after tMin at which the series starts to decrease, or None.

        A decrease is a forward difference below -epsilon times the running maximum of the series.

        Raises:
            RejectedInputError: the sample times are not a uniform increasing grid
        """
        vals = series.values
        times = series.times
        if vals.size < 2:
            return None
        steps = np.diff(times)
        if not steps[0] > 0.0 or np.abs(steps - steps[0]).max() > 1.0e-6 * steps[0]:
            raise RejectedInputError("onset detection needs uniformly spaced sample times")
        runMax = np.maximum.accumulate(vals)
        diffs = np.diff(vals)
        for k in range(diffs.size):
            if times[k] <= tMin:
                continue
            if diffs[k] < -epsilon * runMax[k]:
                return float(times[k])
        return None

    def fitOnsetDivergence(self, points):
        """Fit t_s^-2 = (gamma - gamma0) / t0^2 by ordinary least squares.

        Args:
            points (list): [(gamma, t_s), ...] with distinct gamma

        Raises:
            RejectedInputError: fewer than 3 points or repeated gamma values
            AnalysisError: non-positive slope (no divergence consistent with the model)
        """
        if len(points) < 3:
            raise RejectedInputError("onset fit needs at least 3 points (got %d)" % len(points))
        gA = np.array([float(g) for g, _ in points])
        tA = np.array([float(t) for _, t in points])
        if len(set(gA.tolist())) != gA.size:
            raise RejectedInputError("onset fit needs distinct gamma values")
        if np.any(tA <= 0.0):
            raise RejectedInputError("onset times must be positive")
        y = tA**-2
        res = stats.linregress(gA, y)
        slope, intercept = float(res.slope), float(res.intercept)
        if not slope > 0.0:
            raise AnalysisError("onset fit slope %r is not positive" % slope)
        resid = y - (slope * gA + intercept)
        fit = OnsetFit(-intercept / slope, slope**-0.5, float(np.sqrt(np.mean(resid**2))), float(res.rvalue**2))
        logger.info("Onset fit gamma0 %.6f t0 %.6f residual %.3e R^2 %.6f", fit.gamma0, fit.t0, fit.residual, fit.rSquared)
        return fit

    def fitGrowth(self, errSeries, floor=1.0e-10, ceiling=1.0e-2, minSamples=5):
        """Fit ln(err) = rate t + intercept over the samples with floor < err < ceiling.

        Raises:
            RejectedInputError: negative errors or fewer than minSamples samples in the band
        """
        vals = errSeries.values
        if np.any(vals < 0.0):
            raise RejectedInputError("error series %r has negative values" % errSeries.label)
        sel = (vals > floor) & (vals < ceiling)
        if int(np.sum(sel)) < minSamples:
            raise RejectedInputError("only %d samples of %r inside (%r, %r)" % (int(np.sum(sel)), errSeries.label, floor, ceiling))
        tS = errSeries.times[sel]
        res = stats.linregress(tS, np.log(vals[sel]))
        return GrowthFit(float(res.slope), float(res.intercept), (float(tS[0]), float(tS[-1])))

    def measureConvergenceOrder(self, seriesDt, seriesHalf, seriesQuarter):
        """Return the observed order log2(|s(dt) - s(dt/2)| / |s(dt/2) - s(dt/4)|) on a common grid."""
        for other in (seriesHalf, seriesQuarter):
            if other.times.shape != seriesDt.times.shape or np.max(np.abs(other.times - seriesDt.times), initial=0.0) > 1.0e-9:
                raise RejectedInputError("convergence series must share one time grid")
        e1 = float(np.linalg.norm(seriesDt.values - seriesHalf.values))
        e2 = float(np.linalg.norm(seriesHalf.values - seriesQuarter.values))
        if e2 == 0.0 or e1 == 0.0:
            raise AnalysisError("convergence differences vanish; order is undefined")
        return float(np.log2(e1 / e2))
