"""
The tracenorm command
=====================

Every subcommand prints a JSON report (or key: value lines with
--format text).  Exit status 2 means a proven inequality failed to hold.
"""

import json
import os
import subprocess
import sys
import tempfile


def tracenorm(*args):
    proc = subprocess.run([sys.executable, "-m", "tracenorm", *args], capture_output=True, text=True)
    print("$ tracenorm", " ".join(args), "  -> exit", proc.returncode)
    return proc.stdout


print(tracenorm("gamma", "--n", "4"))

tmp = tempfile.mkdtemp()
path = os.path.join(tmp, "jm.json")
tracenorm("construct", "--family", "jn-minus-in", "--n", "4", "--output", path)
print(open(path).read())
print(tracenorm("verify", "--file", path, "--format", "text"))
print(tracenorm("eig", "--file", path))

# fuzz mode draws seeded random matrices
print(tracenorm("verify", "--kind", "hermitian", "--n", "6", "--count", "500", "--seed", "5"))

rand = os.path.join(tmp, "r.json")
tracenorm("random", "--kind", "hermitian", "--n", "4", "--seed", "3", "--keep-diag", "--output", rand)
print(json.loads(tracenorm("nearest-diag", "--file", rand))["within_theorem"])

print(tracenorm("lemma-max", "--n", "5", "--restarts", "8"))
print(tracenorm("seidel-min", "--n", "4"))
