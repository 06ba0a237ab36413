__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__email__ = ""
__license__ = "Apache 2.0"
__version__ = "0.11"
