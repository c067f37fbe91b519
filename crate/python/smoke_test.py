"""Smoke test for the extension module.

Build it first with
    cargo build --release -p graphcover-py --features extension-module
then run this file. The shared library is copied next to a temporary
``graphcover_py.so`` so no install step is needed.
"""

import importlib
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def load():
    for profile in ("release", "debug"):
        lib = ROOT / "target" / profile / "libgraphcover_py.so"
        if lib.exists():
            tmp = Path(tempfile.mkdtemp())
            shutil.copy(lib, tmp / "graphcover_py.so")
            sys.path.insert(0, str(tmp))
            return importlib.import_module("graphcover_py")
    sys.exit("libgraphcover_py.so not found; build the extension first")


def main():
    gc = load()
    n, edges = gc.generate("petersen", [])
    assert (n, len(edges)) == (10, 15)

    status, value, _, cert = gc.compute_number(n, edges, "cycle_collection", "folded")
    assert (status, value) == ("feasible", 2), (status, value)
    valid, _, max_pre, _ = gc.verify_cover(n, edges, cert, "cycle_collection", "folded")
    assert valid and max_pre == 2

    lsa, star = gc.local_star_arboricity(n, edges)
    assert lsa == 3
    assert gc.verify_cover(n, edges, star, "star_forest", "local")[0]
    assert gc.pseudoarboricity(n, edges) == 2 and gc.arboricity(n, edges) == 2

    status, _, _, _ = gc.compute_number(n, edges, "caterpillar_forest", "global", max_nodes=1)
    assert status == "unknown"

    try:
        gc.recognize("trees", 2, [(0, 1)])
    except ValueError as e:
        assert "trees" in str(e)
    else:
        raise AssertionError("unknown class accepted")

    rows = gc.report(0, [1, 9])
    assert all(passed for _, _, passed, _ in rows), rows
    print("smoke test ok:", ", ".join(f"{i} {name}" for i, name, _, _ in rows))


if __name__ == "__main__":
    main()
