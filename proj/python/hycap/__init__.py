"""Hyperbolic p-capacities of radial condensers, bounds and certificates."""

from ._hycap import *  # noqa: F401,F403
from ._hycap import Error, __version__, run_command

import json as _json


def run_json(*argv):
    """Run a CLI command and parse its JSON report. Raises on usage errors."""
    code, out, err = run_command([str(a) for a in argv])
    if code == 1 or (code == 2 and not out):
        raise Error(err.strip())
    return code, _json.loads(out)
