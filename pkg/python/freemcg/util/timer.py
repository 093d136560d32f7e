import time
import logging

from ..setup_logger import logger

class Timer:
    """
    Context manager that logs a banner when entered and the elapsed time
    when left.
    """

    def __init__(self, message, level=logging.DEBUG):
        self.message = message
        self.level = level
        self.start = None
        self.elapsed = None

    def __enter__(self):
        self.start = time.perf_counter()
        logger.log(self.level, self.message)
        return self

    def __exit__(self, exc_type, exc_value, exc_traceback):
        self.elapsed = time.perf_counter() - self.start
        logger.log(self.level, '... done in {:.3f} sec.'.format(self.elapsed))
        return False
