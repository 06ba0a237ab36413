##
# File:    GaugeExperimentExec.py
# Date:    22-Oct-2026
# Version: 0.001 Initial version
#
# Updates:
#  25-Oct-2026  add --inject and --exclude options
#
##
"""
Command line entry point for the gauge picture experiments.

    gauge_picture_exec <quench|deviation|sweep|squiggle|chaos> [--config <path>] [--gamma g ...] [--length L ...]
                       [--hz hz] [--dt dt ...] [--tmax t] [--out <path>] [--threads N]
                       [--convention literal|normalized] [--tier desk|full]

Exit codes: 0 success, 2 usage or configuration error, 3 analysis error, 4 integration instability.

"""
__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"

import argparse
import logging
import sys

from rcsb.utils.gauge import __version__
from rcsb.utils.gauge.GaugeExceptions import AnalysisError, GaugePictureError, IntegrationInstabilityError, RejectedInputError, ResourceLimitError, UsageError
from rcsb.utils.gauge.GaugeExperimentWorkflow import GaugeExperimentWorkflow
from rcsb.utils.gauge.GaugePictureEngine import X_CONVENTIONS
from rcsb.utils.gauge.RunConfigProvider import COMMANDS, DEFAULT_SECTION_NAME, TIER_MAX_LENGTH

logger = logging.getLogger()

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_ANALYSIS = 3
EXIT_INSTABILITY = 4


def buildParser():
    parser = argparse.ArgumentParser(description="Gauge picture quantum dynamics experiments (version %s)" % __version__)
    parser.add_argument("command", choices=COMMANDS, help="experiment to run")
    parser.add_argument("--config", dest="configPath", default=None, help="INI configuration file")
    parser.add_argument("--config_name", dest="configName", default=DEFAULT_SECTION_NAME, help="configuration section name")
    parser.add_argument("--gamma", nargs="+", type=float, default=None, help="gamma value(s)")
    parser.add_argument("--length", nargs="+", type=int, default=None, help="chain length(s)")
    parser.add_argument("--j", type=float, default=None, help="Ising coupling J")
    parser.add_argument("--hx", type=float, default=None, help="transverse field")
    parser.add_argument("--hz", type=float, default=None, help="longitudinal field")
    parser.add_argument("--dt", nargs="+", type=float, default=None, help="time step(s)")
    parser.add_argument("--tmax", type=float, default=None, help="final time")
    parser.add_argument("--stride", type=int, default=None, help="steps between samples")
    parser.add_argument("--out", default=None, help="output CSV path")
    parser.add_argument("--threads", type=int, default=None, help="worker processes (1 = in-process, deterministic)")
    parser.add_argument("--convention", choices=X_CONVENTIONS, default=None, help="X term embedding convention (default normalized)")
    parser.add_argument("--tier", choices=sorted(TIER_MAX_LENGTH), default=None, help="size tier")
    parser.add_argument("--t_eval", type=float, default=None, help="asymptote evaluation time")
    parser.add_argument("--window", type=float, default=None, help="trailing asymptote window (0 = instantaneous)")
    parser.add_argument("--t_min", type=float, default=None, help="onset detection start time")
    parser.add_argument("--epsilon", type=float, default=None, help="relative onset threshold")
    parser.add_argument("--initial_state", choices=("plus_x", "z_up"), default=None, help="initial product state")
    parser.add_argument("--with_reference", dest="withReference", action="store_true", default=None, help="add exact reference columns (quench)")
    parser.add_argument("--inject", default=None, help="synthetic points CSV (sweep, squiggle)")
    parser.add_argument("--exclude", nargs="+", default=None, help="gamma:L cells removed from the sweep fit")
    parser.add_argument("--debug", action="store_true", default=False, help="debug logging")
    return parser


def overridesFromArgs(args):
    return {
        "gamma_list": args.gamma,
        "length_list": args.length,
        "j": args.j,
        "hx": args.hx,
        "hz": args.hz,
        "dt_list": args.dt,
        "t_max": args.tmax,
        "sample_stride": args.stride,
        "output_path": args.out,
        "threads": args.threads,
        "x_convention": args.convention,
        "tier": args.tier,
        "t_eval": args.t_eval,
        "window": args.window,
        "t_min": args.t_min,
        "epsilon": args.epsilon,
        "initial_state": args.initial_state,
        "with_reference": args.withReference,
        "inject_path": args.inject,
        "exclude_cells": args.exclude,
    }


def main(argv=None):
    logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
    args = buildParser().parse_args(argv)
    if args.debug:
        logger.setLevel(logging.DEBUG)
    try:
        gWf = GaugeExperimentWorkflow(configPath=args.configPath, configName=args.configName, raiseExceptions=True, debugFlag=args.debug)
        ok = gWf.run(args.command, overridesFromArgs(args))
        gWf.reportUsage()
        return EXIT_SUCCESS if ok else EXIT_FAILURE
    except (UsageError, RejectedInputError, ResourceLimitError) as e:
        logger.error("Usage error: %s", str(e))
        return EXIT_USAGE
    except AnalysisError as e:
        logger.error("Analysis error: %s", str(e))
        return EXIT_ANALYSIS
    except IntegrationInstabilityError as e:
        logger.error("Integration instability: %s", str(e))
        return EXIT_INSTABILITY
    except GaugePictureError as e:
        logger.exception("Failing with %s", str(e))
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
