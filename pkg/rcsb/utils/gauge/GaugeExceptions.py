##
# File:    GaugeExceptions.py
# Date:    16-Oct-2026
#
# Updates:
#
##
"""
Exception classes shared by the gauge picture simulation and analysis modules.

"""
__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"


class GaugePictureError(Exception):
    """Base class for errors raised by rcsb.utils.gauge."""


class RejectedInputError(GaugePictureError, ValueError):
    """Precondition violation (shape, site index, Hermiticity, grid alignment ...)."""


class ResourceLimitError(GaugePictureError):
    """Requested Hilbert space exceeds the configured dimension cap."""


class IntegrationInstabilityError(GaugePictureError):
    """Frames lost unitarity beyond the drift bound, or re-unitarization failed, during time integration."""

    def __init__(self, message, t=None, patchId=None):
        super(IntegrationInstabilityError, self).__init__(message)
        self.t = t
        self.patchId = patchId

    def __str__(self):
        msg = super(IntegrationInstabilityError, self).__str__()
        if self.t is None and self.patchId is None:
            return msg
        return "%s (t=%r patch=%r)" % (msg, self.t, self.patchId)


class AnalysisError(GaugePictureError):
    """A fit could not be performed (empty or degenerate fit set)."""


class UsageError(GaugePictureError):
    """Invalid run configuration; carries the offending field name."""

    def __init__(self, message, field=None):
        super(UsageError, self).__init__(message)
        self.field = field

    def __str__(self):
        msg = super(UsageError, self).__str__()
        return "%s [%s]" % (msg, self.field) if self.field else msg
