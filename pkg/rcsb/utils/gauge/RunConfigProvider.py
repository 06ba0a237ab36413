##
# File:    RunConfigProvider.py
# Date:    20-Oct-2026
# Version: 0.001 Initial version
#
# Updates:
#  25-Oct-2026  add dt_list, exclude_cells and inject_path keys
#  30-Oct-2026  x_convention defaults to the engine default (normalized)
#
##
"""
Assemble validated experiment run configurations from built-in defaults, an optional INI
configuration file section and command-line overrides (in increasing precedence).

Example configuration section:

    [gauge_picture_configuration]
    command = sweep
    gamma_list = 8, 16, 32
    length_list = 5, 6, 7
    hz = 0.0
    output_path = ./test-output/sweep.csv

"""
__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"

import logging
import os
from collections import namedtuple

from rcsb.utils.config.ConfigUtil import ConfigUtil
from rcsb.utils.gauge.GaugeExceptions import UsageError
from rcsb.utils.gauge.GaugePictureEngine import DEFAULT_X_CONVENTION, X_CONVENTIONS, EvolutionConfig
from rcsb.utils.gauge.TfimModel import ModelSpec

logger = logging.getLogger(__name__)

COMMANDS = ("quench", "deviation", "sweep", "squiggle", "chaos")
TIER_MAX_LENGTH = {"desk": 8, "full": 10}
DEFAULT_SECTION_NAME = "gauge_picture_configuration"

RunConfigFields = (
    "command",
    "model",
    "evolution",
    "gamma_list",
    "length_list",
    "dt_list",
    "output_path",
    "threads",
    "t_eval",
    "window",
    "tier",
    "t_min",
    "epsilon",
    "growth_floor",
    "growth_ceiling",
    "initial_state",
    "with_reference",
    "inject_path",
    "exclude_cells",
)
RunConfig = namedtuple("RunConfig", RunConfigFields)

# key -> (kind, default); per-command defaults below override these
BASE_DEFAULTS = {
    "length": ("int", 6),
    "j": ("float", 1.0),
    "hx": ("float", 1.0),
    "hz": ("float", 0.0),
    "gamma": ("float", 0.0),
    "dt": ("float", 0.005),
    "t_max": ("float", 5.0),
    "sample_stride": ("int", 20),
    "x_convention": ("str", DEFAULT_X_CONVENTION),
    "unitarize_every": ("int", 1),
    "gamma_list": ("floatlist", None),
    "length_list": ("intlist", None),
    "dt_list": ("floatlist", None),
    "output_path": ("str", None),
    "threads": ("int", 1),
    "t_eval": ("float", 5.0),
    "window": ("float", 0.5),
    "tier": ("str", "desk"),
    "t_min": ("float", 1.0),
    "epsilon": ("float", 1.0e-4),
    "growth_floor": ("float", 1.0e-10),
    "growth_ceiling": ("float", 1.0e-2),
    "initial_state": ("str", "plus_x"),
    "with_reference": ("bool", False),
    "inject_path": ("str", None),
    "exclude_cells": ("cells", ()),
}

COMMAND_DEFAULTS = {
    "quench": {"with_reference": True},
    "deviation": {"gamma_list": [20.0]},
    "sweep": {"gamma_list": [8.0, 16.0, 32.0], "length_list": [5, 6, 7]},
    "squiggle": {"gamma_list": [2.2, 2.3, 2.4, 2.5, 2.6], "dt": 0.004, "sample_stride": 25, "t_max": 60.0},
    "chaos": {"gamma_list": [0.0, 20.0], "dt_list": [0.005, 0.0005], "t_max": 30.0},
}


class RunConfigProvider(object):
    """Configuration layer for the gauge picture experiment commands."""

    def __init__(self, **kwargs):
        """
        Args:
            configPath (str, optional): INI configuration file path. Defaults to None (built-in defaults only).
            configName (str, optional): configuration section name. Defaults to "gauge_picture_configuration".
            mockTopPath (str, optional): prefix applied to path options. Defaults to None.
        """
        self.__configPath = kwargs.get("configPath", None)
        self.__configName = kwargs.get("configName", DEFAULT_SECTION_NAME) or DEFAULT_SECTION_NAME
        self.__cfgOb = None
        if self.__configPath:
            if not os.access(self.__configPath, os.R_OK):
                raise UsageError("configuration file %r is not readable" % self.__configPath, field="config")
            self.__cfgOb = ConfigUtil(configPath=self.__configPath, defaultSectionName=self.__configName, mockTopPath=kwargs.get("mockTopPath", None))
            logger.info("Using configuration %s section %s", self.__configPath, self.__configName)

    def getConfigValue(self, key):
        """Return the raw configuration file value for key (None when absent)."""
        if not self.__cfgOb:
            return None
        return self.__cfgOb.get(key, default=None, sectionName=self.__configName)

    def getRunConfig(self, command=None, overrideD=None):
        """Return a validated RunConfig.

        Args:
            command (str, optional): command name; falls back to the configuration file "command" key
            overrideD (dict, optional): {key: value} command-line overrides (None values are ignored)

        Raises:
            UsageError: naming the offending field
        """
        overrideD = {k: v for k, v in (overrideD or {}).items() if v is not None}
        command = command or self.getConfigValue("command")
        if command not in COMMANDS:
            raise UsageError("unknown command %r (expected one of %s)" % (command, ", ".join(COMMANDS)), field="command")
        vD = {}
        givenS = set()
        for key, (kind, default) in BASE_DEFAULTS.items():
            default = COMMAND_DEFAULTS[command].get(key, default)
            raw = self.getConfigValue(key) if key not in overrideD else None
            if key in overrideD:
                value = self.__coerce(key, kind, overrideD[key])
                givenS.add(key)
            elif raw not in (None, ""):
                value = self.__coerce(key, kind, raw)
                givenS.add(key)
            else:
                value = default
            vD[key] = value
        self.__applyListDefaults(command, vD, givenS)
        runConfig = self.__assemble(command, vD)
        self.__validate(runConfig)
        return runConfig

    def __applyListDefaults(self, command, vD, givenS):
        # an explicit scalar (gamma, length, dt) narrows the corresponding list unless the list was given too
        for scalar, listKey in (("gamma", "gamma_list"), ("length", "length_list"), ("dt", "dt_list")):
            if scalar in givenS and listKey not in givenS:
                vD[listKey] = [vD[scalar]]
            elif vD[listKey]:
                vD[scalar] = vD[listKey][0]
            else:
                vD[listKey] = [vD[scalar]]
        if command == "squiggle" and "sample_stride" not in givenS:
            vD["sample_stride"] = max(1, int(round(0.1 / vD["dt"])))

    def __assemble(self, command, vD):
        model = ModelSpec(vD["length"], vD["j"], vD["hx"], vD["hz"], "periodic")
        evolution = EvolutionConfig(vD["gamma"], vD["dt"], vD["t_max"], vD["sample_stride"], vD["x_convention"], vD["unitarize_every"])
        outputPath = vD["output_path"] or os.path.join(".", "gauge-%s.csv" % command)
        return RunConfig(
            command,
            model,
            evolution,
            list(vD["gamma_list"]),
            list(vD["length_list"]),
            list(vD["dt_list"]),
            outputPath,
            vD["threads"],
            vD["t_eval"],
            vD["window"],
            vD["tier"],
            vD["t_min"],
            vD["epsilon"],
            vD["growth_floor"],
            vD["growth_ceiling"],
            vD["initial_state"],
            vD["with_reference"],
            vD["inject_path"],
            tuple(vD["exclude_cells"]),
        )

    def __coerce(self, key, kind, value):
        try:
            if kind == "int":
                fV = float(value)
                if fV != int(fV):
                    raise ValueError("not an integer")
                return int(fV)
            if kind == "float":
                return float(value)
            if kind == "str":
                return str(value).strip()
            if kind == "bool":
                if isinstance(value, bool):
                    return value
                sV = str(value).strip().lower()
                if sV in ("1", "true", "yes", "y", "on"):
                    return True
                if sV in ("0", "false", "no", "n", "off"):
                    return False
                raise ValueError("not a boolean")
            if kind in ("floatlist", "intlist"):
                itemL = value if isinstance(value, (list, tuple)) else [tS for tS in str(value).replace(",", " ").split() if tS]
                return [self.__coerce(key, kind[:-4], item) for item in itemL]
            if kind == "cells":
                itemL = value if isinstance(value, (list, tuple)) else [tS for tS in str(value).replace(",", " ").split() if tS]
                cells = []
                for item in itemL:
                    if isinstance(item, (list, tuple)):
                        gS, lS = item
                    else:
                        gS, lS = str(item).split(":")
                    cells.append((float(gS), int(lS)))
                return cells
        except (TypeError, ValueError) as e:
            raise UsageError("invalid value %r for %s (%s)" % (value, key, str(e)), field=key) from e
        raise UsageError("unsupported value kind %r for %s" % (kind, key), field=key)

    def __validate(self, rc):
        lengths = sorted(set([rc.model.L] + list(rc.length_list)))
        if rc.tier not in TIER_MAX_LENGTH:
            raise UsageError("tier must be one of %s (got %r)" % (", ".join(TIER_MAX_LENGTH), rc.tier), field="tier")
        if lengths[0] < 3:
            raise UsageError("chain length must be at least 3 (got %r)" % lengths[0], field="length")
        if lengths[-1] > TIER_MAX_LENGTH[rc.tier]:
            raise UsageError("length %d exceeds the %s tier limit %d" % (lengths[-1], rc.tier, TIER_MAX_LENGTH[rc.tier]), field="length")
        if rc.tier == "full" and lengths[-1] > TIER_MAX_LENGTH["desk"]:
            logger.warning("Full tier with L=%d: expect multi-hour runtimes (%d frames of dimension %d)", lengths[-1], lengths[-1], 2 ** lengths[-1])
        if any(not dt > 0.0 for dt in rc.dt_list):
            raise UsageError("dt must be positive (got %r)" % rc.dt_list, field="dt")
        if rc.evolution.t_max < 0.0:
            raise UsageError("t_max must be non-negative", field="t_max")
        if rc.evolution.sample_stride < 1:
            raise UsageError("sample_stride must be a positive integer", field="sample_stride")
        if rc.evolution.unitarize_every < 1:
            raise UsageError("unitarize_every must be a positive integer", field="unitarize_every")
        if rc.evolution.x_convention not in X_CONVENTIONS:
            raise UsageError("x_convention must be one of %s" % ", ".join(X_CONVENTIONS), field="x_convention")
        if rc.initial_state not in ("plus_x", "z_up"):
            raise UsageError("initial_state must be plus_x or z_up (got %r)" % rc.initial_state, field="initial_state")
        if rc.threads < 1:
            raise UsageError("threads must be at least 1", field="threads")
        if not rc.gamma_list:
            raise UsageError("gamma_list is empty", field="gamma_list")
        if rc.window < 0.0 or rc.t_eval < 0.0:
            raise UsageError("t_eval and window must be non-negative", field="window")
        if not 0.0 <= rc.growth_floor < rc.growth_ceiling:
            raise UsageError("growth_floor must lie below growth_ceiling", field="growth_floor")
        if rc.command in ("quench",) and len(set(rc.gamma_list)) > 1:
            raise UsageError("quench takes a single gamma (got %r)" % rc.gamma_list, field="gamma")
        if rc.command in ("quench", "deviation", "squiggle", "chaos") and len(set(rc.length_list)) > 1:
            raise UsageError("%s takes a single length (got %r)" % (rc.command, rc.length_list), field="length")
        if rc.command == "sweep" and not rc.inject_path and len(set(rc.length_list)) < 3:
            raise UsageError("sweep needs at least 3 distinct lengths to separate a, b and c (got %r)" % rc.length_list, field="length_list")
        if rc.command in ("deviation", "sweep") and not rc.inject_path and rc.t_eval > rc.evolution.t_max + 1.0e-9:
            raise UsageError("t_eval %r lies beyond t_max %r" % (rc.t_eval, rc.evolution.t_max), field="t_eval")
        if rc.inject_path and rc.command not in ("sweep", "squiggle"):
            raise UsageError("inject_path applies to sweep and squiggle only", field="inject_path")
        if rc.inject_path and not os.access(rc.inject_path, os.R_OK):
            raise UsageError("injection file %r is not readable" % rc.inject_path, field="inject_path")
        interval = rc.evolution.sample_stride * rc.evolution.dt
        for dt in rc.dt_list:
            ratio = interval / dt
            if abs(ratio - round(ratio)) > 1.0e-9 * max(1.0, ratio) or round(ratio) < 1:
                raise UsageError("sample interval %r is not a multiple of dt %r" % (interval, dt), field="dt_list")
        outDir = os.path.dirname(os.path.abspath(rc.output_path))
        existing = outDir
        while existing and not os.path.exists(existing):
            existing = os.path.dirname(existing)
        if not existing or not os.access(existing, os.W_OK):
            raise UsageError("output path %r is not writable" % rc.output_path, field="output_path")
        return True
