"""Smoke test for the pycfcolor extension module.

Build and install first:  pip install ./crates/python
"""

import pycfcolor as cf


def main():
    # five-cycle: open complete needs 3 colors
    c5 = [(i, (i + 1) % 5) for i in range(5)]
    best, cert = cf.oracle(5, c5, "open", "complete")
    assert best == 3, best
    assert cf.verify(5, c5, cert, "open", "complete")[0]
    ok, failures = cf.verify(5, c5, [1, 1, 1, 1, 1], "open", "partial")
    assert not ok and len(failures) == 5

    n, edges = cf.generate_graph("outerplanar", 30, 7)
    colors = cf.color_outerplanar(n, edges)
    assert max(colors) <= 4 and min(colors) >= 1
    assert cf.verify(n, edges, colors, "open", "complete")[0]

    n, edges = cf.generate_graph("cactus", 25, 3)
    colors = cf.color_cactus(n, edges)
    assert max(colors) <= 3 and cf.verify(n, edges, colors, "open", "complete")[0]

    n, edges = cf.generate_graph("planar", 40, 1)
    partial = cf.color_planar(n, edges)
    assert max(partial) <= 5 and cf.verify(n, edges, partial)[0]
    complete = cf.color_planar(n, edges, kind="complete")
    assert max(complete) <= 6 and cf.verify(n, edges, complete, kind="complete")[0]

    subsets = cf.kneser_subsets(8, 3)
    colors = cf.kneser_coloring(8, 3)
    assert len(subsets) == len(colors) == 56 and max(colors) == 5
    assert colors[subsets.index([1, 2, 3])] == 1
    assert cf.kneser_failures(8, 3, colors, "open", "complete") == []

    subset, index = cf.kneser_witness(19, 2, [1] * 171)
    assert cf.kneser_subsets(19, 2)[index] == subset

    try:
        cf.color_outerplanar(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    except ValueError as e:
        print("K4 rejected:", e)
    else:
        raise AssertionError("K4 is not outerplanar")

    print("smoke test passed")


if __name__ == "__main__":
    main()
