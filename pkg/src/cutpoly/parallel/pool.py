"""Serial and process-pool execution backends."""

import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import Any

from ..exceptions import PreconditionError
from .base import ExecutionBackend
from .worker import decode_result, encode_task, run_task

logger = logging.getLogger(__name__)


class SerialBackend(ExecutionBackend):
    """Runs tasks in-process through the same encode/run/decode path as the pool."""

    @property
    def workers(self) -> int:
        return 1

    def map(self, fn: Callable[..., Any], tasks: Sequence[tuple[Any, ...]]) -> list[Any]:
        return [decode_result(run_task(encode_task(fn, args))) for args in tasks]


class ProcessPoolBackend(ExecutionBackend):
    """Fans tasks out to a pool of worker processes."""

    def __init__(self, workers: int) -> None:
        """Initialize the backend; processes start on first use.

        Args:
            workers: Maximum number of worker processes
        """
        if workers < 1:
            raise PreconditionError(f"workers must be >= 1, got {workers}")
        self._workers = workers
        self._executor: ProcessPoolExecutor | None = None
        self.tasks_executed = 0

    @property
    def workers(self) -> int:
        return self._workers

    def _ensure_executor(self) -> ProcessPoolExecutor:
        if self._executor is None:
            logger.debug(f"Starting process pool with {self._workers} workers")
            self._executor = ProcessPoolExecutor(max_workers=self._workers)
        return self._executor

    def map(self, fn: Callable[..., Any], tasks: Sequence[tuple[Any, ...]]) -> list[Any]:
        executor = self._ensure_executor()
        futures = [executor.submit(run_task, encode_task(fn, args)) for args in tasks]
        results = [decode_result(future.result()) for future in futures]
        self.tasks_executed += len(tasks)
        logger.debug(f"Pool finished {len(tasks)} tasks ({self.tasks_executed} total)")
        return results

    def close(self) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None
