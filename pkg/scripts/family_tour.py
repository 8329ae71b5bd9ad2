#!/usr/bin/env python3
"""Tour of the named polymatroid families.

Runs the generic engine over the built-in families, prints the class
group, the canonical class, and the Gorenstein verdict for each, and
confirms the closed-form predictions along the way.
"""

import argparse

from polytoric import (
    Polymatroid,
    canonical_class,
    class_group,
    closed_inseparable_family,
    compare_paths,
    is_gorenstein,
)
from polytoric.families import (
    graph_complement_family,
    nested_chain_family,
    rank_bounded_polymatroid,
    uniform_transversal,
)


def describe(name, p, cone=False):
    fam = closed_inseparable_family(p)
    pres = class_group(fam)
    canon = canonical_class(fam, pres)
    a = is_gorenstein(fam)
    verdict = f"Gorenstein (a={a})" if a is not None else "not Gorenstein"
    print(f"{name:28s} |A|={len(fam):3d}  Cl = {str(pres.invariants):14s} {verdict}")
    print(f"{'':28s} relation {pres.relation}  canonical {canon.coords}")
    if cone:
        agreement = compare_paths(p, family=fam)
        print(f"{'':28s} cone path agrees: {agreement.ok}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--cone",
        action="store_true",
        help="also run the facet-enumeration path on the small instances",
    )
    args = parser.parse_args()

    print("== uniform transversal families ==")
    for n, i in [(5, 3), (6, 4), (7, 4)]:
        describe(f"all {i}-subsets of [{n}]", uniform_transversal(n, i).to_polymatroid())

    print("\n== degree-bounded families ==")
    for n, d in [(3, 2), (4, 2), (3, 4)]:
        describe(f"|v| <= {d} on [{n}]", rank_bounded_polymatroid(n, d), args.cone)

    print("\n== boxes ==")
    for v in [(1, 1), (2, 2), (2, 4, 6), (2, 3)]:
        describe(f"box {v}", Polymatroid.box(v), args.cone)

    print("\n== Veronese type ==")
    for s, d in [((1, 1, 1), 2), ((2, 2, 2), 4), ((1, 2, 2), 3), ((1, 2), 2)]:
        describe(f"caps {s}, degree {d}", Polymatroid.veronese(s, d), args.cone)

    print("\n== nested chains ==")
    for n, chain in [
        (3, [(0b001, 2), (0b111, 2)]),
        (4, [(0b0001, 3), (0b0011, 3), (0b1111, 3)]),
    ]:
        t = nested_chain_family(n, chain)
        describe(f"chain x{[k for _, k in chain]} on [{n}]", t.to_polymatroid(), args.cone)

    print("\n== graph complement families ==")
    graphs = [
        ("triangle", 3, [(0, 1), (1, 2), (0, 2)]),
        ("path on 4", 4, [(0, 1), (1, 2), (2, 3)]),
        ("4-cycle", 4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    ]
    for name, n, edges in graphs:
        t, predicted, inv = graph_complement_family(n, edges)
        describe(f"{name} (predicted {inv})", t.to_polymatroid(), args.cone)


if __name__ == "__main__":
    main()
