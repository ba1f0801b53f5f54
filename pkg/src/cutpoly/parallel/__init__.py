"""Backend selection for parallel enumeration."""

from ..limits import get_limits
from .base import ExecutionBackend
from .pool import ProcessPoolBackend, SerialBackend
from .worker import decode_result, encode_task, run_task


def get_backend(workers: int | None = None) -> ExecutionBackend:
    """Get a backend for the requested worker count.

    Args:
        workers: Number of worker processes (default: the ``workers`` limit)

    Returns:
        SerialBackend for one worker, ProcessPoolBackend otherwise
    """
    count = get_limits().workers if workers is None else workers
    if count <= 1:
        return SerialBackend()
    return ProcessPoolBackend(count)


__all__ = [
    "ExecutionBackend",
    "ProcessPoolBackend",
    "SerialBackend",
    "decode_result",
    "encode_task",
    "get_backend",
    "run_task",
]
