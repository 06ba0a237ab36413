##
# File:    GaugeExperimentWorkflow.py
# Date:    21-Oct-2026
# Version: 0.001 Initial version
#
# Updates:
#  25-Oct-2026  synthetic injection for sweep and squiggle, explicit cell exclusions
#  27-Oct-2026  chaos command emits the RK4 Schrodinger control next to the exact-vs-exact control
#  28-Oct-2026  write fit summaries as .fit.json in addition to .fit.txt
#
##
"""
Workflow for the gauge picture experiments: quench, deviation, sweep, squiggle and chaos.

Simulation cells (gamma, L, dt) are independent and are distributed with MultiProcUtil when more
than one worker is requested; results are merged by sorted cell key before anything is written.

"""
__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"

import logging
import os
import platform
import resource
import sys
import time
from collections import OrderedDict

from rcsb.utils.gauge import GaugeExceptions
from rcsb.utils.gauge.DeviationMetrics import DeviationMetrics
from rcsb.utils.gauge.GaugeExceptions import AnalysisError, GaugePictureError, RejectedInputError, UsageError
from rcsb.utils.gauge.GaugePictureEngine import EvolutionConfig, GaugePictureEngine
from rcsb.utils.gauge.RunConfigProvider import DEFAULT_SECTION_NAME, RunConfigProvider
from rcsb.utils.gauge.ScalingAnalysis import AsymptoteEstimate, ScalingAnalysis, ScalingPoint
from rcsb.utils.gauge.SchrodingerReference import SchrodingerReference
from rcsb.utils.gauge.TfimModel import ModelSpec, TfimModel
from rcsb.utils.io.FileUtil import FileUtil
from rcsb.utils.io.MarshalUtil import MarshalUtil
from rcsb.utils.multiproc.MultiProcUtil import MultiProcUtil

logger = logging.getLogger(__name__)


class GaugeCellWorker(object):
    """A skeleton class that implements the interface expected by the multiprocessing
    for running one gauge picture trajectory per (gamma, L, dt) cell.
    """

    def __init__(self, **kwargs):
        _ = kwargs

    def build(self, dataList, procName, optionsD, workingDir):
        """Run the trajectories for the input cells.

        Returns:
            (list, list, list): successful cells, [(cell, {label: TimeSeries}), ...], [(cell, errorClassName, message), ...]
        """
        _ = workingDir
        successList = []
        retList = []
        diagList = []
        for cell in dataList:
            try:
                retList.append((cell, self.runCell(cell, optionsD)))
                successList.append(cell)
            except GaugePictureError as e:
                logger.error("%s failing for cell %r with %s", procName, cell, str(e))
                diagList.append((cell, e.__class__.__name__, str(e)))
            except Exception as e:
                logger.exception("%s failing for cell %r with %s", procName, cell, str(e))
                diagList.append((cell, "GaugePictureError", str(e)))
        logger.debug("%s completed %d/%d cells", procName, len(successList), len(dataList))
        return successList, retList, diagList

    def runCell(self, cell, optionsD):
        gamma, length, dt = cell
        spec = ModelSpec(int(length), optionsD["j"], optionsD["hx"], optionsD["hz"], "periodic")
        stride = max(1, int(round(optionsD["interval"] / dt)))
        config = EvolutionConfig(float(gamma), float(dt), optionsD["t_max"], stride, optionsD["x_convention"], optionsD["unitarize_every"])
        engine = GaugePictureEngine(modelSpec=spec)
        return engine.run(config, observables=tuple(optionsD["observables"]), initialState=optionsD["initial_state"])


class GaugeExperimentWorkflow(object):
    def __init__(self, **kwargs):
        """Workflow -- run gauge picture experiment commands and persist their CSV and fit reports

        Args:
            configPath (str, optional): INI configuration file path (default: None, built-in defaults)
            configName (str, optional): configuration section name (default: gauge_picture_configuration)
            mockTopPath (str, optional): prefix applied to path configuration options (default: None)
            raiseExceptions (bool, optional): re-raise failures rather than logging and returning False (default: False)
            reportStream (file, optional): stream receiving fit reports (default: sys.stdout)
            debugFlag (bool, optional): sets logger to debug mode (default: False)
        """
        self.__startTime = time.time()
        self.__raiseExceptions = kwargs.get("raiseExceptions", False)
        self.__reportStream = kwargs.get("reportStream", sys.stdout)
        self.__debugFlag = kwargs.get("debugFlag", False)
        if self.__debugFlag:
            logger.setLevel(logging.DEBUG)
            logger.debug("Starting at %s", time.strftime("%Y %m %d %H:%M:%S", time.localtime()))
        self.__cfgP = RunConfigProvider(
            configPath=kwargs.get("configPath", None), configName=kwargs.get("configName", DEFAULT_SECTION_NAME), mockTopPath=kwargs.get("mockTopPath", None)
        )
        self.__mU = MarshalUtil()
        self.__fU = FileUtil()
        self.__model = TfimModel()
        self.__metrics = DeviationMetrics()
        self.__reference = SchrodingerReference()
        self.__analysis = ScalingAnalysis()
        self.__dispatchD = {"quench": self.cmdQuench, "deviation": self.cmdDeviation, "sweep": self.cmdSweep, "squiggle": self.cmdSquiggle, "chaos": self.cmdChaos}

    def getRunConfig(self, command=None, overrideD=None):
        return self.__cfgP.getRunConfig(command, overrideD)

    def run(self, command=None, overrideD=None):
        """Build the run configuration and execute the selected command.

        Returns:
            bool: True for success or False otherwise
        """
        try:
            runConfig = self.getRunConfig(command, overrideD)
        except GaugePictureError as e:
            if self.__raiseExceptions:
                raise
            logger.exception("Failing with %s", str(e))
            return False
        return self.__dispatchD[runConfig.command](runConfig)

    def reportUsage(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 1.0e6, unitS)
        logger.info("Completed at %s (%.4f seconds)", time.strftime("%Y %m %d %H:%M:%S", time.localtime()), time.time() - self.__startTime)

    #
    # --- commands ---
    #
    def cmdQuench(self, runConfig):
        """Local expectation trajectories (and the exact reference columns when requested)."""
        return self.__execute("quench", self.__quench, runConfig)

    def cmdDeviation(self, runConfig):
        """Deviation S_IJ(t) per gamma, with asymptotes and the gamma exponent in the fit report."""
        return self.__execute("deviation", self.__deviation, runConfig)

    def cmdSweep(self, runConfig):
        """Asymptote per (gamma, L) cell and the (a, b, c) scaling fit over the clean cells."""
        return self.__execute("sweep", self.__sweep, runConfig)

    def cmdSquiggle(self, runConfig):
        """Squiggle onset per (gamma, dt) cell and the t_s divergence fit."""
        return self.__execute("squiggle", self.__squiggle, runConfig)

    def cmdChaos(self, runConfig):
        """Gauge picture error against the exact reference and exponential growth rates."""
        return self.__execute("chaos", self.__chaos, runConfig)

    def __execute(self, name, func, runConfig):
        startTime = time.time()
        try:
            logger.info("Starting %s with output %s", name, runConfig.output_path)
            func(runConfig)
            logger.info("Completed %s (%.4f seconds)", name, time.time() - startTime)
            return True
        except Exception as e:
            if self.__raiseExceptions:
                raise
            logger.exception("Failing %s with %s", name, str(e))
        return False

    def __quench(self, rc):
        length = rc.model.L
        gamma = rc.gamma_list[0]
        dt = rc.dt_list[0]
        cell = (gamma, length, dt)
        seriesD = self.__runCells([cell], rc, ("sx", "sz", "energy", "residuals"))[cell]
        times = self.__firstSeries(seriesD).times
        columns = OrderedDict((label, series.values) for label, series in seriesD.items())
        if rc.with_reference:
            trajectory = self.__exactTrajectory(rc.model._replace(L=length), rc.initial_state, dt, times)
            maxErr = 0.0
            for name in ("sx", "sz"):
                for site in range(length):
                    exact = self.__reference.observableSeries(trajectory, self.__model.siteOperator(name[1], site, length), "%s_exact_site%d" % (name, site))
                    columns[exact.label] = exact.values
                    err = self.__metrics.pictureError(seriesD["%s_site%d" % (name, site)], exact)
                    maxErr = max(maxErr, float(err.values.max()))
            logger.info("Quench L %d gamma %r maximum deviation from the exact reference %.3e", length, gamma, maxErr)
        self.__exportSeries(rc.output_path, times, columns)

    def __deviation(self, rc):
        length = rc.model.L
        dt = rc.dt_list[0]
        cells = [(gamma, length, dt) for gamma in self.__unique(rc.gamma_list)]
        resultD = self.__runCells(cells, rc, ("s",))
        gammaL = []
        valueL = []
        lines = ["deviation L %d t_eval %.12g window %.12g" % (length, rc.t_eval, rc.window)]
        reportD = OrderedDict([("command", "deviation"), ("length", length), ("t_eval", rc.t_eval), ("window", rc.window), ("asymptotes", [])])
        for cell, seriesD in resultD.items():
            gamma = cell[0]
            outPath = rc.output_path if len(cells) == 1 else self.__suffixPath(rc.output_path, "g%s" % self.__fmt(gamma))
            self.__exportSeries(outPath, self.__firstSeries(seriesD).times, OrderedDict((label, series.values) for label, series in seriesD.items()))
            est = self.__analysis.extractAsymptote(seriesD["s_mean"], tEval=rc.t_eval, window=rc.window)
            clean = self.__analysis.isCleanAsymptote(est)
            lines.append("gamma %s s_asymptote %.12g fluctuation %.6g clean %s" % (self.__fmt(gamma), est.value, est.fluctuation, clean))
            reportD["asymptotes"].append(OrderedDict([("gamma", gamma), ("s_asymptote", est.value), ("fluctuation", est.fluctuation), ("clean", clean)]))
            if gamma > 0.0 and est.value > 0.0:
                gammaL.append(gamma)
                valueL.append(est.value)
        if len(set(gammaL)) >= 2:
            slope, intercept = self.__analysis.fitGammaExponent(gammaL, valueL)
            lines.append("gamma exponent %.12g intercept %.12g" % (slope, intercept))
            reportD["gamma_exponent"] = slope
            reportD["gamma_exponent_intercept"] = intercept
        self.__writeReport(rc, lines, reportD)

    def __sweep(self, rc):
        rowList = []
        if rc.inject_path:
            for pt, fluct in self.__readScalingPoints(rc.inject_path):
                rowList.append([pt.gamma, pt.L, pt.s_asymptote, fluct])
        else:
            dt = rc.dt_list[0]
            cells = [(gamma, length, dt) for gamma in self.__unique(rc.gamma_list) for length in self.__unique(rc.length_list)]
            resultD = self.__runCells(cells, rc, ("s",))
            for cell, seriesD in resultD.items():
                est = self.__analysis.extractAsymptote(seriesD["s_mean"], tEval=rc.t_eval, window=rc.window)
                rowList.append([cell[0], cell[1], est.value, est.fluctuation])
        included = []
        excluded = []
        for row in rowList:
            gamma, length, sVal, fluct = row
            pt = ScalingPoint(gamma, length, sVal)
            if any(abs(gamma - eG) <= 1.0e-9 * max(1.0, abs(eG)) and length == eL for eG, eL in rc.exclude_cells):
                reason = "excluded"
            elif not self.__analysis.isCleanAsymptote(AsymptoteEstimate(sVal, fluct)):
                reason = "not_clean"
            else:
                reason = ""
            row.extend([0 if reason else 1, reason])
            if reason:
                excluded.append((pt, reason))
                logger.info("Excluding gamma %r L %r S %r (%s)", gamma, length, sVal, reason)
            else:
                included.append(pt)
        self.__exportRows(rc.output_path, ["gamma", "length", "s_asymptote", "fluctuation", "included", "reason"], rowList)
        if not included:
            raise AnalysisError("all %d sweep points were excluded from the fit set" % len(rowList))
        try:
            fit = self.__analysis.fitScaling(included)
        except RejectedInputError as e:
            raise AnalysisError("scaling fit failed: %s" % str(e)) from e
        lines = [
            "scaling fit S = gamma^-2 exp(a L + b + c / L) over %d points" % len(included),
            "a %.12g" % fit.a,
            "b %.12g" % fit.b,
            "c %.12g" % fit.c,
            "residual %.6g" % fit.residual,
        ]
        lines.extend("excluded gamma %s L %d (%s)" % (self.__fmt(pt.gamma), pt.L, reason) for pt, reason in excluded)
        reportD = OrderedDict(
            [
                ("command", "sweep"),
                ("a", fit.a),
                ("b", fit.b),
                ("c", fit.c),
                ("residual", fit.residual),
                ("points", len(included)),
                ("excluded", [OrderedDict([("gamma", pt.gamma), ("length", pt.L), ("reason", reason)]) for pt, reason in excluded]),
            ]
        )
        self.__writeReport(rc, lines, reportD)

    def __squiggle(self, rc):
        rowList = []
        if rc.inject_path:
            rowList = self.__readOnsets(rc.inject_path)
        else:
            length = rc.model.L
            cells = [(gamma, length, dt) for dt in self.__unique(rc.dt_list) for gamma in self.__unique(rc.gamma_list)]
            resultD = self.__runCells(cells, rc, ("s",))
            for cell, seriesD in resultD.items():
                tS = self.__analysis.detectOnset(seriesD["s_mean"], tMin=rc.t_min, epsilon=rc.epsilon)
                logger.info("Onset gamma %r dt %r t_s %r", cell[0], cell[2], tS)
                rowList.append([cell[0], cell[2], tS])
        rowList.sort(key=lambda row: (row[1] if row[1] is not None else -1.0, row[0]))
        self.__exportRows(rc.output_path, ["gamma", "dt", "t_s"], rowList)
        groupD = OrderedDict()
        for gamma, dt, tS in rowList:
            groupD.setdefault(dt, []).append((gamma, tS))
        lines = []
        reportD = OrderedDict([("command", "squiggle"), ("fits", [])])
        for dt, pointL in groupD.items():
            present = [(gamma, tS) for gamma, tS in pointL if tS is not None]
            absent = [gamma for gamma, tS in pointL if tS is None]
            if len(present) < 3:
                raise AnalysisError("only %d finite onsets for dt %r (3 required)" % (len(present), dt))
            try:
                fit = self.__analysis.fitOnsetDivergence(present)
            except RejectedInputError as e:
                raise AnalysisError("onset fit failed: %s" % str(e)) from e
            dtS = self.__fmt(dt) if dt is not None else "injected"
            lines.append(
                "onset fit t_s^2 = t0^2 / (gamma - gamma0) dt %s: gamma0 %.12g t0 %.12g residual %.6g R^2 %.6f points %d"
                % (dtS, fit.gamma0, fit.t0, fit.residual, fit.rSquared, len(present))
            )
            if absent:
                lines.append("no onset for gamma %s" % ", ".join(self.__fmt(gamma) for gamma in absent))
            reportD["fits"].append(
                OrderedDict(
                    [("dt", dt), ("gamma0", fit.gamma0), ("t0", fit.t0), ("residual", fit.residual), ("r_squared", fit.rSquared), ("points", len(present)), ("no_onset", absent)]
                )
            )
        self.__writeReport(rc, lines, reportD)

    def __chaos(self, rc):
        length = rc.model.L
        dtList = self.__unique(rc.dt_list)
        cells = [(gamma, length, dt) for gamma in self.__unique(rc.gamma_list) for dt in dtList]
        resultD = self.__runCells(cells, rc, ("sx",))
        dt0 = rc.dt_list[0]
        # the primary variant fixes the common grid and the reference step
        times = resultD[(self.__unique(rc.gamma_list)[0], length, dt0)]["sx_site0"].times
        sxOp = self.__model.siteOperator("x", 0, length)
        hMat = self.__model.assembleFullHamiltonian(rc.model._replace(L=length))
        psi0 = self.__model.initialState(length, rc.initial_state)
        exact = self.__reference.observableSeries(self.__reference.evolveExact(self.__reference.buildPropagator(hMat, dt0), psi0, times), sxOp, "sx_exact")
        exactHalf = self.__reference.observableSeries(self.__reference.evolveExact(self.__reference.buildPropagator(hMat, 0.5 * dt0), psi0, times), sxOp, "sx_exact_half")
        rk4 = self.__reference.observableSeries(self.__reference.integrateRk4(hMat, psi0, dt0, times), sxOp, "sx_rk4")
        columns = OrderedDict([("sx_exact", exact.values)])
        errL = []
        for cell, seriesD in resultD.items():
            tag = "g%s_dt%s" % (self.__fmt(cell[0]), self.__fmt(cell[2]))
            err = self.__metrics.pictureError(seriesD["sx_site0"], exact, label="err_%s" % tag)
            columns["sx_gauge_%s" % tag] = seriesD["sx_site0"].values
            columns[err.label] = err.values
            errL.append((cell, err))
        controlL = [self.__metrics.pictureError(exactHalf, exact, label="err_exact_control"), self.__metrics.pictureError(rk4, exact, label="err_rk4_control")]
        for err in controlL:
            columns[err.label] = err.values
        self.__exportSeries(rc.output_path, times, columns)
        lines = ["chaos L %d <sx_0> error growth in band (%.3g, %.3g)" % (length, rc.growth_floor, rc.growth_ceiling)]
        reportD = OrderedDict([("command", "chaos"), ("length", length), ("growth_floor", rc.growth_floor), ("growth_ceiling", rc.growth_ceiling), ("variants", [])])
        for cell, err in errL:
            rD = self.__growthSummary(err, rc)
            rD["gamma"] = cell[0]
            rD["dt"] = cell[2]
            reportD["variants"].append(rD)
            lines.append(self.__growthLine("gamma %s dt %s" % (self.__fmt(cell[0]), self.__fmt(cell[2])), rD))
        for err in controlL:
            rD = self.__growthSummary(err, rc)
            reportD[err.label] = rD
            lines.append(self.__growthLine(err.label, rD))
        self.__writeReport(rc, lines, reportD)

    #
    # --- helpers ---
    #
    def __runCells(self, cells, rc, observables):
        """Return {cell: {label: TimeSeries}} in sorted cell order."""
        optD = {
            "j": rc.model.J,
            "hx": rc.model.hx,
            "hz": rc.model.hz,
            "t_max": rc.evolution.t_max,
            "interval": rc.evolution.sample_stride * rc.evolution.dt,
            "x_convention": rc.evolution.x_convention,
            "unitarize_every": rc.evolution.unitarize_every,
            "initial_state": rc.initial_state,
            "observables": list(observables),
        }
        worker = GaugeCellWorker()
        numProc = min(int(rc.threads), len(cells))
        logger.info("Running %d cells with %d worker(s)", len(cells), numProc)
        if numProc <= 1:
            successList, retList, diagList = worker.build(cells, "serial", optD, None)
            failList = [cell for cell in cells if cell not in successList]
        else:
            mpu = MultiProcUtil(verbose=True)
            mpu.setOptions(optD)
            mpu.set(workerObj=worker, workerMethod="build")
            _, failList, resultList, diagList = mpu.runMulti(dataList=cells, numProc=numProc, numResults=1, chunkSize=1)
            retList = resultList[0]
        if failList:
            self.__raiseCellFailure(failList, diagList)
        return OrderedDict(sorted(retList, key=lambda tup: tup[0]))

    def __raiseCellFailure(self, failList, diagList):
        entries = []
        for item in diagList or []:
            if isinstance(item, (list, tuple)) and len(item) == 3 and isinstance(item[1], str):
                entries.append(item)
            elif isinstance(item, (list, tuple)):
                entries.extend(sub for sub in item if isinstance(sub, (list, tuple)) and len(sub) == 3)
        errCls = GaugePictureError
        for name in ("IntegrationInstabilityError", "ResourceLimitError", "RejectedInputError", "AnalysisError"):
            if any(entry[1] == name for entry in entries):
                errCls = getattr(GaugeExceptions, name)
                break
        message = "; ".join("cell %r: %s" % (entry[0], entry[2]) for entry in entries) or "cells failed %r" % (failList,)
        raise errCls(message)

    def __exactTrajectory(self, spec, initialState, dt, times):
        hMat = self.__model.assembleFullHamiltonian(spec)
        psi0 = self.__model.initialState(spec.L, initialState)
        return self.__reference.evolveExact(self.__reference.buildPropagator(hMat, dt), psi0, times)

    def __growthSummary(self, err, rc):
        rD = OrderedDict()
        try:
            fit = self.__analysis.fitGrowth(err, floor=rc.growth_floor, ceiling=rc.growth_ceiling)
            rD["rate"] = fit.rate
            rD["intercept"] = fit.intercept
            rD["window"] = list(fit.window)
        except RejectedInputError as e:
            logger.info("No growth fit for %s: %s", err.label, str(e))
            rD["rate"] = None
            rD["intercept"] = None
            rD["window"] = None
        early = err.values[err.times <= 10.0 + 1.0e-9]
        rD["max_error_t10"] = float(early.max()) if early.size else None
        over = err.times[err.values > 1.0e-1]
        rD["breakdown_t"] = float(over[0]) if over.size else None
        return rD

    def __growthLine(self, name, rD):
        rateS = "%.6g" % rD["rate"] if rD["rate"] is not None else "none (too few in-band samples)"
        winS = "[%.6g, %.6g]" % tuple(rD["window"]) if rD["window"] else "-"
        maxS = "%.3e" % rD["max_error_t10"] if rD["max_error_t10"] is not None else "-"
        brkS = "%.6g" % rD["breakdown_t"] if rD["breakdown_t"] is not None else "none"
        return "%s: rate %s window %s max error (t <= 10) %s breakdown t %s" % (name, rateS, winS, maxS, brkS)

    def __readScalingPoints(self, path):
        rowL = self.__mU.doImport(path, fmt="csv", rowFormat="dict")
        pointL = []
        for ii, rowD in enumerate(rowL or []):
            try:
                fS = rowD.get("fluctuation", "")
                pointL.append((ScalingPoint(float(rowD["gamma"]), int(float(rowD["length"])), float(rowD["s_asymptote"])), float(fS) if fS not in (None, "") else 0.0))
            except (KeyError, TypeError, ValueError) as e:
                raise UsageError("row %d of %s needs gamma, length and s_asymptote (%s)" % (ii + 1, path, str(e)), field="inject_path") from e
        if not pointL:
            raise UsageError("no scaling points in %s" % path, field="inject_path")
        logger.info("Read %d injected scaling points from %s", len(pointL), path)
        return pointL

    def __readOnsets(self, path):
        rowL = self.__mU.doImport(path, fmt="csv", rowFormat="dict")
        onsetL = []
        for ii, rowD in enumerate(rowL or []):
            try:
                tS = rowD.get("t_s", "")
                dtS = rowD.get("dt", "")
                onsetL.append([float(rowD["gamma"]), float(dtS) if dtS not in (None, "") else None, float(tS) if tS not in (None, "") else None])
            except (KeyError, TypeError, ValueError) as e:
                raise UsageError("row %d of %s needs gamma and t_s (%s)" % (ii + 1, path, str(e)), field="inject_path") from e
        if not onsetL:
            raise UsageError("no onset rows in %s" % path, field="inject_path")
        logger.info("Read %d injected onset rows from %s", len(onsetL), path)
        return onsetL

    def __firstSeries(self, seriesD):
        return next(iter(seriesD.values()))

    def __unique(self, valueList):
        return sorted(set(valueList))

    def __fmt(self, value):
        if value is None:
            return ""
        if isinstance(value, bool):
            return "1" if value else "0"
        if isinstance(value, int):
            return str(value)
        if isinstance(value, float):
            return "%.12g" % value
        return str(value)

    def __suffixPath(self, path, suffix):
        stem, ext = os.path.splitext(path)
        return "%s_%s%s" % (stem, suffix, ext or ".csv")

    def __exportSeries(self, path, times, columns):
        fieldNames = ["t"] + list(columns.keys())
        rowList = []
        for ii, tV in enumerate(times):
            rowList.append([float(tV)] + [float(vA[ii]) for vA in columns.values()])
        self.__exportRows(path, fieldNames, rowList)

    def __exportRows(self, path, fieldNames, rowList):
        self.__fU.mkdir(os.path.dirname(os.path.abspath(path)))
        rowDL = [OrderedDict((name, self.__fmt(value)) for name, value in zip(fieldNames, row)) for row in rowList]
        ok = self.__mU.doExport(path, rowDL, fmt="csv", fieldNames=fieldNames)
        if not ok:
            raise UsageError("failed writing %s" % path, field="output_path")
        logger.info("Wrote %d rows to %s", len(rowDL), path)
        return ok

    def __writeReport(self, rc, lines, reportD):
        stem = os.path.splitext(rc.output_path)[0]
        for line in lines:
            self.__reportStream.write(line + "\n")
            logger.info("%s", line)
        self.__reportStream.flush()
        ok1 = self.__mU.doExport(stem + ".fit.txt", lines, fmt="list")
        ok2 = self.__mU.doExport(stem + ".fit.json", reportD, fmt="json", indent=2)
        if not (ok1 and ok2):
            raise UsageError("failed writing fit report for %s" % rc.output_path, field="output_path")
        return True
