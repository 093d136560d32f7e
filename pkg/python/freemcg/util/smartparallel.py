import os
import sys
import logging
import traceback
import multiprocessing
from tqdm import tqdm

SMARTPARALLEL_LOGNAME = 'freemcg.smartparallel'
logger = logging.getLogger(SMARTPARALLEL_LOGNAME)

class SmartParallelError(Exception):
    def __init__(self, type, exception, traceback):
        self.type = type
        self.exception = exception
        self.traceback = traceback

class SmartParallel():
    """
    Maps a worker function over a list of items either serially or on a
    process pool. Results are always returned in item order, so reductions
    over them are deterministic regardless of the number of processes.
    """

    def __init__(self, verbose=False, parallel=True, threads=None):
        if threads is not None:
            self.cpus = threads
        else:
            self.cpus = max(1, multiprocessing.cpu_count() // 2)

        self.pool = None
        self.verbose = verbose
        self.parallel = parallel and self.cpus > 1

    def __enter__(self):
        if self.parallel:
            logger.debug("Starting parallel execution on {} CPUs.".format(self.cpus))
            self.pool = multiprocessing.Pool(processes=self.cpus)
        else:
            logger.debug("Starting serial execution.")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.parallel:
            logger.debug("Joining worker processes.")
            self.pool.close()
            self.pool.join()
            self.pool = None
            logger.debug("Finished parallel execution.")
        else:
            logger.debug("Finished serial execution.")
        return False

    @staticmethod
    def pool_worker(args):
        # This executes in the worker process
        worker, i, wargs, wkwargs = args
        try:
            return worker(i, *wargs, **wkwargs)
        except Exception:
            return SmartParallelError(*sys.exc_info()[:2], traceback.format_exception(*sys.exc_info()))

    @staticmethod
    def check_result(o):
        if isinstance(o, SmartParallelError):
            msg = "An error occured in a Smart Parallel worker process.\n\nOriginal {}".format(''.join(o.traceback))
            logger.error(msg)
            raise o.exception
        return o

    def map(self, worker, items, *args, **kwargs):
        # This executes in the main process

        items = list(items)
        if self.parallel:
            logger.info(f'Starting parallel map with {len(items)} items on pid {os.getpid()}.')
            m = self.pool.imap(SmartParallel.pool_worker, [(worker, i, args, kwargs) for i in items])
            m = map(SmartParallel.check_result, m)
        else:
            m = map(lambda i: worker(i, *args, **kwargs), items)

        if self.verbose:
            m = tqdm(m, total=len(items))

        return m
