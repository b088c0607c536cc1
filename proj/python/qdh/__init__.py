"""Associated continuous dual q-Hahn polynomials and their limit families."""

import json

from ._core import *  # noqa: F401,F403
from ._core import Error, run_check_json



def run_check(name, seed=42):
    """Run a named check group (or "all") and return the reports as dicts."""
    return json.loads(run_check_json(name, seed))
