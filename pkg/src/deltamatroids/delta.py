"""Delta-matroids: symmetric exchange checking, upper/lower matroids,
duals and minors, the sandwich construction, pairability, and the maximal
feasible-family constructions.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Optional, Sequence, Union

from .core import GroundSet, InputError, SetFamily, Subset, default_ground
from .matroids import AxiomError, ExchangeViolation, Matroid, uniform


def _delta_violation(masks: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """First symmetric-exchange failure (f1, f2, pivot_bit), or None.

    Same canonical order as the basis-exchange checker: partner set outer,
    first set inner, pivots ascending.  The exchange partner y ranges over
    the whole symmetric difference and may equal the pivot.
    """
    fam = set(masks)
    for f2 in masks:
        for f1 in masks:
            diff = f1 ^ f2
            x = diff
            while x:
                xb = x & -x
                x ^= xb
                y = diff
                ok = False
                while y:
                    yb = y & -y
                    y ^= yb
                    # f1 ^ (xb|yb) covers y == x as well: {x,y} collapses to {x}
                    if f1 ^ (xb | yb) in fam:
                        ok = True
                        break
                if not ok:
                    return f1, f2, xb
    return None


@lru_cache(maxsize=1 << 18)
def _delta_ok(masks: tuple[int, ...]) -> bool:
    """Memoized pass/fail view of the exchange check; the subfamily exhausts
    and augmentation sweeps re-test many repeated families."""
    return _delta_violation(masks) is None


class DeltaMatroid:
    """A feasible family certified against the symmetric exchange axiom."""

    def __init__(self, ground: GroundSet, feasibles: SetFamily, _certified: bool = False):
        if not _certified:
            raise TypeError(
                "use DeltaMatroid.certify or check_symmetric_exchange to build delta-matroids"
            )
        self.ground = ground
        self.feasibles = feasibles

    @classmethod
    def certify(cls, fam: SetFamily) -> "DeltaMatroid":
        if len(fam) == 0:
            raise InputError("a delta-matroid needs at least one feasible set")
        bad = _delta_violation(fam.masks)
        if bad is not None:
            f1, f2, xb = bad
            raise AxiomError(
                ExchangeViolation(
                    first=Subset(fam.ground, f1),
                    second=Subset(fam.ground, f2),
                    pivot=fam.ground.labels[xb.bit_length() - 1],
                    axiom="DF",
                )
            )
        return cls(fam.ground, fam, _certified=True)

    @classmethod
    def _trusted(cls, ground: GroundSet, masks: Sequence[int]) -> "DeltaMatroid":
        return cls(ground, SetFamily(ground, tuple(masks)), _certified=True)

    # -- upper and lower matroids ----------------------------------------

    @cached_property
    def upper(self) -> Matroid:
        """Matroid of the maximum-cardinality feasible sets.

        Certification of the extracted family must succeed; a failure would
        be a bug in the exchange checker, not bad input.
        """
        top = max(m.bit_count() for m in self.feasibles.masks)
        fam = SetFamily(self.ground, tuple(m for m in self.feasibles.masks if m.bit_count() == top))
        return Matroid.certify(fam)

    @cached_property
    def lower(self) -> Matroid:
        """Matroid of the minimum-cardinality feasible sets."""
        bot = min(m.bit_count() for m in self.feasibles.masks)
        fam = SetFamily(self.ground, tuple(m for m in self.feasibles.masks if m.bit_count() == bot))
        return Matroid.certify(fam)

    # -- operations -------------------------------------------------------

    def complement_dual(self) -> "DeltaMatroid":
        """Replace every feasible set by its complement; re-certify."""
        full = self.ground.full_mask
        fam = SetFamily(self.ground, tuple(full ^ m for m in self.feasibles.masks))
        return DeltaMatroid.certify(fam)

    def delete(self, x_set: Subset, strict: bool = True) -> "DeltaMatroid":
        """Remove x_set from the ground set and from every feasible set.

        Requires x_set to be contained in at least one feasible set.  The
        feasible sets of the result are {F without X} for *every* feasible F,
        which is the construction taken literally; `strict` controls whether
        a failed re-certification raises or only warns with the witness.
        """
        if x_set.ground != self.ground:
            raise InputError("deletion set over a different ground set")
        if not any(x_set.mask & ~f == 0 for f in self.feasibles.masks):
            raise InputError(f"{x_set!r} is contained in no feasible set")
        keep_labels = [lab for lab in self.ground.labels if lab not in x_set]
        sub = GroundSet(tuple(keep_labels))
        old_bits = [self.ground.index(lab) for lab in keep_labels]

        def remap(m: int) -> int:
            return sum(1 << i for i, ob in enumerate(old_bits) if m >> ob & 1)

        fam = SetFamily(sub, tuple(remap(f & ~x_set.mask) for f in self.feasibles.masks))
        try:
            return DeltaMatroid.certify(fam)
        except AxiomError as e:
            if strict:
                raise
            warnings.warn(f"minor is not a delta-matroid: {e.violation.describe()}")
            return DeltaMatroid._trusted(sub, fam.masks)

    def contract(self, x_set: Subset, strict: bool = True) -> "DeltaMatroid":
        """Contraction via the complement dual: (D* delete X)*."""
        star = self.complement_dual()
        minor = star.delete(x_set, strict=strict)
        try:
            return minor.complement_dual()
        except AxiomError as e:
            if strict:
                raise
            warnings.warn(f"minor is not a delta-matroid: {e.violation.describe()}")
            full = minor.ground.full_mask
            return DeltaMatroid._trusted(minor.ground, tuple(full ^ m for m in minor.feasibles.masks))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DeltaMatroid)
            and self.ground == other.ground
            and self.feasibles.masks == other.feasibles.masks
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.feasibles.masks))

    def __repr__(self) -> str:
        return f"DeltaMatroid(feasibles={self.feasibles!r})"


def check_symmetric_exchange(fam: SetFamily) -> Union[DeltaMatroid, ExchangeViolation]:
    """Certify a feasible family, or return the first violating triple."""
    try:
        return DeltaMatroid.certify(fam)
    except AxiomError as e:
        return e.violation


def upper_matroid(d: DeltaMatroid) -> Matroid:
    return d.upper


def lower_matroid(d: DeltaMatroid) -> Matroid:
    return d.lower


@dataclass(frozen=True)
class PairabilityReport:
    """Verdict on whether two matroids can be the upper and lower matroids
    of a common delta-matroid, with the offending circuit when they cannot."""

    pairable: bool
    offending_circuit: Optional[Subset] = None

    def __post_init__(self) -> None:
        assert self.pairable == (self.offending_circuit is None)

    def to_json(self) -> dict:
        out: dict = {"pairable": self.pairable}
        if self.offending_circuit is not None:
            out["offending_circuit"] = list(self.offending_circuit.labels)
        return out


def construct_sandwich(mu: Matroid, ml: Matroid) -> SetFamily:
    """All subsets that are independent in mu and spanning in ml.

    This is the canonical realization: whenever the pair is pairable at all,
    this family is a delta-matroid with upper matroid mu and lower matroid ml.
    """
    if mu.ground != ml.ground:
        raise InputError("sandwich requires a common ground set")
    indep = mu._indep_masks
    span = ml._spanning_masks
    return SetFamily(mu.ground, tuple(m for m in mu.ground.all_masks() if m in indep and m in span))


def is_pairable(mu: Matroid, ml: Matroid) -> PairabilityReport:
    """Pairable iff every circuit of mu is a union of circuits of ml."""
    if mu.ground != ml.ground:
        raise InputError("pairability test requires a common ground set")
    ml_circuits = ml._circuit_masks
    for c in mu._circuit_masks:
        union = 0
        for lc in ml_circuits:
            if lc & ~c == 0:
                union |= lc
        if union != c:
            return PairabilityReport(False, Subset(mu.ground, c))
    return PairabilityReport(True)


def bouchet_triple(m: Matroid) -> tuple[DeltaMatroid, DeltaMatroid, DeltaMatroid]:
    """The three delta-matroids naturally attached to a matroid: feasible
    sets equal to its bases, its independent sets, and its spanning sets."""
    return (
        DeltaMatroid.certify(m.bases),
        DeltaMatroid.certify(m.independents()),
        DeltaMatroid.certify(m.spanning_sets()),
    )


def fmax_upper_uniform(d: DeltaMatroid) -> SetFamily:
    """Largest feasible family sharing d's lower matroid, when the upper
    matroid is uniform: the lower bases together with every strictly larger
    lower-spanning set of size at most the upper rank."""
    mu, ml = d.upper, d.lower
    if mu != uniform(mu.rank, d.ground):
        raise InputError("upper matroid is not uniform over the full ground set")
    masks = set(ml.bases.masks)
    for m in d.ground.all_masks():
        if ml.rank < m.bit_count() <= mu.rank and m in ml._spanning_masks:
            masks.add(m)
    return SetFamily(d.ground, tuple(masks))


def fmax_lower_uniform(d: DeltaMatroid) -> SetFamily:
    """Largest feasible family sharing d's upper matroid, when the lower
    matroid is uniform: lower bases, upper bases, and every intermediate
    upper-independent set below the upper rank."""
    mu, ml = d.upper, d.lower
    if ml != uniform(ml.rank, d.ground):
        raise InputError("lower matroid is not uniform over the full ground set")
    masks = set(ml.bases.masks) | set(mu.bases.masks)
    for m in d.ground.all_masks():
        if ml.rank <= m.bit_count() < mu.rank and m in mu._indep_masks:
            masks.add(m)
    return SetFamily(d.ground, tuple(masks))


def restrict_to_contained(d: DeltaMatroid, c: Subset, strict: bool = True) -> DeltaMatroid:
    """Restriction reading one: keep only the feasible sets inside c,
    on the ground set c."""
    if c.ground != d.ground:
        raise InputError("restriction set over a different ground set")
    inside = [f for f in d.feasibles.masks if f & ~c.mask == 0]
    if not inside:
        raise InputError(f"no feasible set is contained in {c!r}")
    keep_labels = list(c.labels)
    sub = GroundSet(tuple(keep_labels))
    old_bits = [d.ground.index(lab) for lab in keep_labels]
    remapped = tuple(
        sum(1 << i for i, ob in enumerate(old_bits) if f >> ob & 1) for f in inside
    )
    fam = SetFamily(sub, remapped)
    try:
        return DeltaMatroid.certify(fam)
    except AxiomError as e:
        if strict:
            raise
        warnings.warn(f"restriction is not a delta-matroid: {e.violation.describe()}")
        return DeltaMatroid._trusted(sub, fam.masks)


def restrict_by_deletion(d: DeltaMatroid, c: Subset, strict: bool = True) -> DeltaMatroid:
    """Restriction reading two: delete the complement of c, so every feasible
    set is intersected with c."""
    if c.ground != d.ground:
        raise InputError("restriction set over a different ground set")
    return d.delete(c.complement(), strict=strict)


def enumerate_delta_matroids(n: int, ground: Optional[GroundSet] = None) -> Iterator[DeltaMatroid]:
    """Every nonempty feasible family on n elements satisfying symmetric
    exchange, exactly once, in canonical order of the family code.

    Family code: bit i set means subset-mask i is a member.  Exhaustive mode
    is capped at n <= 4 (65,535 candidate families).
    """
    if n > 4:
        raise InputError(f"exhaustive delta-matroid enumeration capped at n <= 4, got {n}")
    g = ground if ground is not None else default_ground(n)
    if g.size != n:
        raise InputError("ground size does not match n")
    for code in range(1, 1 << (1 << n)):
        masks = _decode_family(code)
        if _delta_violation(masks) is None:
            yield DeltaMatroid._trusted(g, masks)


def _decode_family(code: int) -> tuple[int, ...]:
    """Family code -> member masks, ascending."""
    masks = []
    i = 0
    while code:
        if code & 1:
            masks.append(i)
        code >>= 1
        i += 1
    return tuple(masks)
