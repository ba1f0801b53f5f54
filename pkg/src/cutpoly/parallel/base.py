"""Base interface for execution backends."""

from abc import ABC, abstractmethod
from collections.abc import Callable, Sequence
from types import TracebackType
from typing import Any


class ExecutionBackend(ABC):
    """Runs independent tasks and returns their results in task order."""

    @property
    @abstractmethod
    def workers(self) -> int:
        """Number of tasks that may run at once."""
        pass

    @abstractmethod
    def map(self, fn: Callable[..., Any], tasks: Sequence[tuple[Any, ...]]) -> list[Any]:
        """Apply fn to each argument tuple.

        Args:
            fn: Picklable function returning msgpack-encodable values
            tasks: Positional arguments, one tuple per call

        Returns:
            Results in the order of tasks

        Raises:
            WorkerError: If any call raised
        """
        pass

    def close(self) -> None:
        """Release any worker processes."""
        pass

    def __enter__(self) -> "ExecutionBackend":
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        tb: TracebackType | None,
    ) -> None:
        self.close()
