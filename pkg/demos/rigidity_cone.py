"""Generic 2D rigidity as a delta-matroid, and the cone identities.

Run with `python3 demos/rigidity_cone.py`.  For each graph in the built-in
corpus we build the family of edge sets that are simultaneously spanning
trees-or-better for connectivity and (2,3)-sparse for rigidity, certify it
as a delta-matroid, and check the cone identities relating the rigidity
matroid of the coned graph to both matroids of the original.
"""

from deltamatroids import (
    CORPUS,
    DeltaMatroid,
    cone,
    cycle_matroid,
    is_quotient,
    rigidity_feasible_family,
    rigidity_matroid,
    verify_cone_quotient,
)

for name, g in CORPUS.items():
    fam = rigidity_feasible_family(g)
    d = DeltaMatroid.certify(fam)
    mc = cycle_matroid(g)
    mr = rigidity_matroid(g)
    print(f"{name}: |V|={len(g.vertices)} |E|={len(g.edges)}")
    print(f"  feasible edge sets: {len(fam)}")
    print(f"  lower matroid = cycle matroid? {d.lower == mc}")
    print(f"  cycle matroid is a quotient of the rigidity matroid? {is_quotient(mc, mr)}")

    result = cone(g)
    rep = verify_cone_quotient(g)
    print(
        f"  cone adds {len(result.cone_edges)} apex edges; deletion identity {rep.deletion_identity}, "
        f"contraction identity {rep.contraction_identity}"
    )
    print()

print("cone identities hold across the corpus:",
      all(verify_cone_quotient(g).both_hold for g in CORPUS.values()))
