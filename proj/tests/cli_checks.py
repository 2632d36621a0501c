"""Exit-code and determinism checks for the command-line binary."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

BINARY = sys.argv[1]


def run(*args, expect):
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True)
    assert proc.returncode == expect, (
        f"{args}: exit {proc.returncode}, expected {expect}\n{proc.stderr}\n{proc.stdout[:500]}"
    )
    return proc


def main():
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)

        run("generate", "--family", "C", "--D", "2", "--q", "2", "--out", str(tmp / "a.json"),
            expect=0)
        run("generate", "--family", "C", "--D", "2", "--q", "2", "--out", str(tmp / "b.json"),
            expect=0)
        assert (tmp / "a.json").read_bytes() == (tmp / "b.json").read_bytes(), "nondeterministic"

        run("generate", "--family", "C", "--D", "2", "--q", "6", expect=2)
        run("generate", "--family", "nope", "--D", "2", expect=2)
        run("analyze", expect=2)  # neither --family nor --in

        proc = run("analyze", "--in", str(tmp / "a.json"), expect=0)
        doc = json.loads(proc.stdout)
        assert doc["eigenvalues"] == ["6", "1", "-3"]

        p3 = {"family": "imported", "vertices": ["0", "1", "2"], "adjacency": [[0, 1], [1, 2]]}
        (tmp / "p3.json").write_text(json.dumps(p3))
        proc = run("analyze", "--in", str(tmp / "p3.json"), expect=1)
        assert "witness" in json.loads(proc.stdout)

        run("verify", "--family", "C", "--D", "2", "--q", "2", expect=0)
        run("verify", "--family", "C", "--D", "3", "--q", "3", expect=2)  # needs --large

        proc = run("verify", "--family", "D", "--D", "2", "--q", "2", expect=0)
        doc = json.loads(proc.stdout)
        assert doc["summary"]["skip"] > 0

        proc = run("verify", "--family", "C", "--D", "2", "--q", "2", "--only", "pmain", expect=0)
        doc = json.loads(proc.stdout)
        assert doc["checks"] and all("Pmain" in c["name"] for c in doc["checks"])

        run("verify", "--family", "C", "--D", "2", "--q", "2", "--only", "nonexistent", expect=2)
        run("verify", "--family", "C", "--D", "9", "--q", "4", expect=2)  # preflight gate

    print("cli checks passed")


if __name__ == "__main__":
    main()
