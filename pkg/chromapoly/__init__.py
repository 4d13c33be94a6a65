import logging

from chromapoly.logger_name import LOGGER_NAME
from chromapoly.version import VERSION

__version__ = VERSION
__logger_name__ = LOGGER_NAME

logger = logging.getLogger(__logger_name__)
