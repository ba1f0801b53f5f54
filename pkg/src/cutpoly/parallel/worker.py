"""Task runner shared by every execution backend.

A task travels as cloudpickle bytes and its outcome comes back as msgpack bytes:

    {"error": false, "result": <msgpack-encodable value>}
    OR
    {
        "error": true,
        "error_type": "ExceptionName",
        "error_message": "error message",
        "traceback": "full traceback"
    }
"""

import traceback
from collections.abc import Callable
from typing import Any

import cloudpickle
import msgpack

from ..exceptions import WorkerError


def encode_task(fn: Callable[..., Any], args: tuple[Any, ...]) -> bytes:
    """Pickle a function together with its positional arguments."""
    return cloudpickle.dumps((fn, args))


def run_task(payload: bytes) -> bytes:
    """Execute a pickled task and pack its outcome.

    Args:
        payload: Bytes from encode_task

    Returns:
        msgpack-encoded result envelope (errors included, never raised)
    """
    try:
        fn, args = cloudpickle.loads(payload)
        result = fn(*args)
        return msgpack.packb({"error": False, "result": result})
    except Exception as e:
        return msgpack.packb(
            {
                "error": True,
                "error_type": type(e).__name__,
                "error_message": str(e),
                "traceback": traceback.format_exc(),
            }
        )


def decode_result(data: bytes) -> Any:
    """Unpack a result envelope.

    Raises:
        WorkerError: If the task raised
    """
    envelope = msgpack.unpackb(data)
    if envelope.get("error"):
        raise WorkerError(
            f"{envelope.get('error_type', 'Error')}: {envelope.get('error_message', '')}",
            error_type=envelope.get("error_type"),
            traceback_str=envelope.get("traceback"),
        )
    return envelope["result"]
