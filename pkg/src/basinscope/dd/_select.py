"""Kernel backend selection: compiled extension if available, else pure Python.

Set BASINSCOPE_DD_BACKEND=py or =cy to force a backend.
"""

import os

_choice = os.environ.get("BASINSCOPE_DD_BACKEND")
if _choice not in (None, "py", "cy"):
    raise ImportError(f"BASINSCOPE_DD_BACKEND must be 'py' or 'cy', got {_choice!r}")

if _choice == "py":
    from ._kernel_py import (  # noqa: F401
        BACKEND, OP_AND, OP_DIFF, OP_OR, OP_XOR, Kernel, NodeLimitError)
else:
    try:
        from ._kernel_cy import (  # noqa: F401
            BACKEND, OP_AND, OP_DIFF, OP_OR, OP_XOR, Kernel, NodeLimitError)
    except ImportError:
        if _choice == "cy":
            raise
        from ._kernel_py import (  # noqa: F401
            BACKEND, OP_AND, OP_DIFF, OP_OR, OP_XOR, Kernel, NodeLimitError)
