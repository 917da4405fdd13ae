"""Tour of upper/lower matroids and the pairability construction.

Run with `python3 demos/upper_lower_tour.py`.  Everything here is tiny and
prints as it goes; read it top to bottom.
"""

from deltamatroids import (
    DeltaMatroid,
    GroundSet,
    SetFamily,
    construct_sandwich,
    default_ground,
    direct_sum,
    is_pairable,
    uniform,
)


def show_family(title, fam):
    print(f"{title}: {[''.join(s.labels) or '{}' for s in fam]}")


# -- a delta-matroid and its two matroids --------------------------------

g = default_ground(4)
fam = SetFamily(g, tuple(m for m in g.all_masks() if m.bit_count() in (1, 3)))
d = DeltaMatroid.certify(fam)

show_family("feasible sets", d.feasibles)
show_family("upper matroid bases (max feasibles)", d.upper.bases)
show_family("lower matroid bases (min feasibles)", d.lower.bases)
print()

# Every feasible set sits between a lower basis and an upper basis: it is
# independent in the upper matroid and spanning in the lower one.
for s in d.feasibles:
    assert d.upper.is_independent(s) and d.lower.is_spanning(s)
print("every feasible set is upper-independent and lower-spanning: ok")
print()

# -- two matroids sharing their ground set: when do they pair up? --------

# Take the rank-5 uniform matroid over six elements as the upper matroid,
# and a direct sum of two rank-2 uniform pieces as the lower one.
ml = direct_sum(uniform(2, GroundSet.of("1", "2", "3")), uniform(2, GroundSet.of("a", "b", "c")))
mu = uniform(5, ml.ground)

rep = is_pairable(mu, ml)
print(f"rank-5 uniform over the split lower matroid pairable? {rep.pairable}")

# The sandwich family (upper-independent AND lower-spanning sets) is then a
# delta-matroid realizing exactly this pair.
sandwich = DeltaMatroid.certify(construct_sandwich(mu, ml))
print(f"sandwich family has {len(sandwich.feasibles)} feasible sets")
assert sandwich.upper == mu and sandwich.lower == ml
print("sandwich realizes the pair: ok")
print()

# -- a pair that fails: circuits that don't decompose --------------------

# A loop of the lower matroid that is not a loop of the upper one breaks the
# condition "every upper circuit is a union of lower circuits".
g2 = default_ground(2)
mu2 = DeltaMatroid.certify(SetFamily.from_labels(g2, [["a"]])).upper
ml2 = DeltaMatroid.certify(SetFamily.from_labels(g2, [["b"]])).upper
bad = is_pairable(mu2, ml2)
print(f"loop-mismatch pair pairable? {bad.pairable}")
print(f"offending upper circuit: {list(bad.offending_circuit.labels)}")
