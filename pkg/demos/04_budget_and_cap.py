"""
Stopping early
==============

A search that has not closed up can be stopped by a distance-key budget or
by a facet cap.  Sessions can be saved and resumed from the command line.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

from vinberg import QuadraticForm
from vinberg.engine import RunConfig, initial_state, run

form = QuadraticForm.diagonal([-1, 1, 1])
for cap in (3, 2, 0):
    v = run(form, (1, 0, 0), RunConfig(facet_cap=cap))
    print(f"cap {cap}: {v.status.value}, {len(v.roots)} roots")

###############################################################################
# Passing a state lets a run continue where the previous one stopped.
f = QuadraticForm.diagonal([-13, 1, 1])
state = initial_state(f, (1, 0, 0))
for budget in (5, 20, 80, 320):
    v = run(f, (1, 0, 0), RunConfig(batch_budget=budget), state)
    print(f"budget {budget:3d}: {v.status.value}, {len(v.roots)} roots so far")

###############################################################################
# diag(-25,1,1) does not close within a few thousand keys.
v = run(QuadraticForm.diagonal([-25, 1, 1]), (1, 0, 0), RunConfig(batch_budget=2000))
print(v.status.value, len(v.roots), "roots,", v.stats["keys_examined"], "keys")

###############################################################################
# The same thing from the shell, with a session cache.
with tempfile.TemporaryDirectory() as tmp:
    cache = Path(tmp) / "session.json"
    cmd = [sys.executable, "-m", "vinberg", "--form", "-13,1,1", "--resume", str(cache)]
    first = subprocess.run(cmd + ["--budget", "10"], capture_output=True, text=True)
    second = subprocess.run(cmd, capture_output=True, text=True)
    print("exit codes", first.returncode, second.returncode)
    print(second.stdout)
