import logging
from .constants import FREEMCG_LOGNAME
logger = logging.getLogger(FREEMCG_LOGNAME)
