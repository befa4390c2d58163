"""Worker processes for the per-initial-seed loops of the verification suites"""

import logging
import multiprocessing as mp
import os
import queue
from typing import Any, Callable, List, Sequence, Tuple

from .constants import STOP_SENTINEL, THREADS_ENV_VAR, WORKER_POLL_SECONDS
from .errors import ConfigurationError, WorkerFailure

logger = logging.getLogger("ClusterTube-Workers")
logger.setLevel(logging.DEBUG)


def configured_threads() -> int:
    """Worker count from CTUBE_THREADS, 1 when unset"""
    raw = os.environ.get(THREADS_ENV_VAR, "").strip()
    if not raw:
        return 1
    try:
        threads = int(raw)
    except ValueError:
        raise ConfigurationError(
            f"{THREADS_ENV_VAR}={raw!r} is not an integer"
        )
    if threads < 1:
        raise ConfigurationError(
            f"{THREADS_ENV_VAR} must be at least 1, got {threads}"
        )
    return threads


### Multiprocessing Worker ###
class SuiteWorker(mp.Process):
    """A subclass of process class to run suite tasks in a parallel process"""

    def __init__(self, request_queue, response_queue):
        super(SuiteWorker, self).__init__()
        self.request_queue = request_queue
        self.response_queue = response_queue

    def run(self):
        # handle incoming requests from the request queue until STOP condition
        for request in iter(self.request_queue.get, STOP_SENTINEL):
            position, task, args = request
            try:
                response = task(*args)
            except Exception as e:  # handed back to the parent unchanged
                response = e
            self.response_queue.put((position, response))


def run_tasks(
    task: Callable[..., Any],
    argument_list: Sequence[Tuple[Any, ...]],
    threads: int = 1,
) -> List[Any]:
    """Results of task(*args) in the order of argument_list"""
    if threads <= 1 or len(argument_list) <= 1:
        return [task(*args) for args in argument_list]

    request_queue = mp.Queue()
    response_queue = mp.Queue()
    for position, args in enumerate(argument_list):
        request_queue.put((position, task, args))

    worker_count = min(threads, len(argument_list))
    logger.debug(
        f"Starting {worker_count} workers for {len(argument_list)} tasks"
    )
    workers = [
        SuiteWorker(request_queue, response_queue) for _ in range(worker_count)
    ]
    for worker in workers:
        worker.start()

    results: List[Any] = [None] * len(argument_list)
    pending = len(argument_list)
    while pending:
        try:
            position, response = response_queue.get(
                timeout=WORKER_POLL_SECONDS
            )
        except queue.Empty:
            dead = [w for w in workers if not w.is_alive()]
            if dead:
                for worker in workers:
                    worker.terminate()
                raise WorkerFailure(
                    f"{len(dead)} worker(s) exited, {pending} task(s) open,"
                    f" exit codes {[w.exitcode for w in dead]}"
                )
            continue
        results[position] = response
        pending -= 1

    # stop and join worker processes
    for _ in workers:
        request_queue.put(STOP_SENTINEL)
    for worker in workers:
        worker.join()

    for response in results:
        if isinstance(response, Exception):
            raise response
    return results
