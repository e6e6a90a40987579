"""Drive the installed command line tools end to end.

Writes a scratch edge list, runs the dense and oracle commands on it the
way a shell user would, and shows what comes back on each stream.
Requires the package to be installed (pip install -e .) so the console
scripts are on PATH.
"""

import json
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

for tool in ("dense", "oracle"):
    if shutil.which(tool) is None:
        sys.exit(f"{tool} not on PATH; install the package first")


def run(*args):
    return subprocess.run(list(args), capture_output=True, text=True)


scratch = Path(tempfile.mkdtemp())
graph = scratch / "two_triangles_bridged.txt"
graph.write_text(
    "# two triangles sharing an edge, plus a pendant\n"
    "0 1\n0 2\n1 2\n1 3\n2 3\n3 4\n"
)

print(f"$ oracle cliques {graph.name} --k 3")
print(run("oracle", "cliques", str(graph), "--k", "3").stdout, end="")

print(f"$ oracle densest {graph.name} --k 3 --nodes")
print(run("oracle", "densest", str(graph), "--k", "3", "--nodes").stdout,
      end="")

print(f"$ dense {graph.name} --algo psctl --k 3 --iters 20")
p = run("dense", str(graph), "--algo", "psctl", "--k", "3", "--iters", "20")
report = json.loads(p.stdout)
print(json.dumps(report, indent=2))
print("timing lines went to stderr:", [
    ln.split()[0] for ln in p.stderr.splitlines() if ln.startswith("[")
])

out = scratch / "report.json"
print(f"$ dense {graph.name} --algo spath --k 3 --samples 20000 --out ...")
p = run("dense", str(graph), "--algo", "spath", "--k", "3",
        "--samples", "20000", "--out", str(out))
print(p.stdout, end="")
print("file holds:", out.read_text().strip()[:72], "...")
