#!/usr/bin/env python3
"""Smoke test for the floodgraph_py extension module.

Builds nothing itself: run `cargo build --release -p floodgraph-py` (or a
debug build) first. The script locates the compiled cdylib under target/,
exposes it under the importable module name, and exercises the bindings
against known-good values.
"""

import os
import shutil
import sys
import tempfile

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def import_extension():
    candidates = [
        os.path.join(REPO_ROOT, "target", profile, name)
        for profile in ("release", "debug")
        for name in ("libfloodgraph_py.so", "floodgraph_py.so", "libfloodgraph_py.dylib")
    ]
    built = next((p for p in candidates if os.path.exists(p)), None)
    if built is None:
        sys.exit("extension not built; run: cargo build --release -p floodgraph-py")
    staging = tempfile.mkdtemp(prefix="floodgraph_py_")
    shutil.copy(built, os.path.join(staging, "floodgraph_py.so"))
    sys.path.insert(0, staging)
    import floodgraph_py

    return floodgraph_py


def main():
    fg = import_extension()

    # the running example: path 0-1-2 with colours (1, 0, 1)
    p3 = fg.Graph.parse("floodgraph 1\nn 3\nc 2\ncolours 1 0 1\nedges 2\n0 1\n1 2\n")
    assert p3.vertex_count == 3 and p3.colour_count == 2
    assert p3.edges == [(0, 1), (1, 2)]
    assert p3.monochromatic_component(1) == [1]

    per_colour, overall, subgraphs = p3.solve_free()
    assert per_colour == [2, 1] and overall == 1 and subgraphs == 6

    flooded = p3.apply_move(1, 1)
    assert flooded.colours == [1, 1, 1]
    assert p3.colours == [1, 0, 1], "apply_move must not mutate"

    per_colour, overall, best_colour, witness, states = p3.solve_fixed(0)
    assert overall == 2 and witness == [0, 1] and best_colour == 1
    assert per_colour[1] == 2 and states > 0

    assert p3.solve_link([0, 2], target=1) == 1
    assert p3.oracle_link([0, 2], target=1) == 1

    moves, witness = p3.oracle_free()
    assert moves == 1 and len(witness) == 1
    assert p3.min_over_spanning_trees(1) == 1

    # a rainbow complete graph floods in colours - 1
    k4 = fg.generate_graph("complete", n=4, colour_list=[0, 1, 2, 3])
    assert k4.solve_free()[1] == 3

    # solver agrees with the oracle on a generated board
    g = fg.generate_graph("random", n=7, colours=3, edge_prob=0.4, seed=11)
    assert g.is_connected()
    per_colour, overall, _ = g.solve_free()
    assert overall == g.oracle_free()[0]
    for d in range(3):
        assert per_colour[d] == g.oracle_free(target=d)[0]

    quotient, mapping = fg.generate_graph("path", n=6, colour_list=[0, 0, 1, 1, 2, 2]).contract()
    assert quotient.vertex_count == 3 and mapping == [0, 0, 1, 1, 2, 2]

    # round trip through the text format
    text = g.to_text()
    again = fg.Graph.parse(text)
    assert again.to_text() == text

    print("floodgraph_py smoke test passed")


if __name__ == "__main__":
    main()
