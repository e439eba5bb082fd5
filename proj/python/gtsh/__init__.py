"""GT-shadows for the dihedral poset of PB_3."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import run as _run

__version__ = "0.1.0"


def report(command, **kwargs):
    """Runs a CLI command in-process and returns the parsed JSON report.

    Raises RuntimeError with the diagnostic when the exit code is nonzero.
    """
    code, output, error = _run(command, **kwargs)
    if code != 0:
        raise RuntimeError(f"{command} exited {code}: {error}")
    return _json.loads(output)
