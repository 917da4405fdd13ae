"""Matroids given by their basis families: axiom checking and derived structure.

A `Matroid` value only exists after its basis family passed the basis
exchange axiom, so downstream code never re-checks.  All derived objects
(rank, independents, spanning sets, circuits, duals, minors, quotient tests)
are computed by brute force over bit masks; with at most 16 elements that is
both fast enough and hard to get wrong.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence, Union

from .core import (
    GroundSet,
    InputError,
    SetFamily,
    Subset,
    _maximal_masks,
    _minimal_masks,
)


@dataclass(frozen=True)
class ExchangeViolation:
    """Witness that an exchange axiom fails at a specific triple.

    Replaying the axiom at (first, second, pivot) finds no valid exchange
    partner y: no candidate first Δ {pivot, y} lies in the family.
    """

    first: Subset
    second: Subset
    pivot: str
    axiom: str  # "MB" or "DF"

    def describe(self) -> str:
        return (
            f"axiom ({self.axiom}) fails: no exchange partner for pivot "
            f"{self.pivot!r} with first={self.first!r}, second={self.second!r}"
        )

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "first": list(self.first.labels),
            "second": list(self.second.labels),
            "pivot": self.pivot,
        }


class AxiomError(ValueError):
    """A family failed certification; carries the violating triple."""

    def __init__(self, violation: ExchangeViolation):
        super().__init__(violation.describe())
        self.violation = violation


def _mb_violation(masks: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """First basis-exchange failure (b1, b2, pivot_bit), or None.

    Canonical order: the partner basis b2 varies in the outer loop, b1 in the
    inner, both ascending by mask, and pivots ascend by element index.
    """
    fam = set(masks)
    for b2 in masks:
        for b1 in masks:
            moved = b1 & ~b2
            x = moved
            while x:
                xb = x & -x
                x ^= xb
                cand = b2 & ~b1
                y = cand
                ok = False
                while y:
                    yb = y & -y
                    y ^= yb
                    if b1 ^ xb ^ yb in fam:
                        ok = True
                        break
                if not ok:
                    return b1, b2, xb
    return None


class Matroid:
    """A basis family certified against the basis exchange axiom."""

    def __init__(self, ground: GroundSet, bases: SetFamily, _certified: bool = False):
        if not _certified:
            raise TypeError("use Matroid.certify or check_basis_axiom to build matroids")
        self.ground = ground
        self.bases = bases
        self.rank = bases.masks[0].bit_count()

    @classmethod
    def certify(cls, fam: SetFamily) -> "Matroid":
        if len(fam) == 0:
            raise InputError("a matroid needs at least one basis")
        bad = _mb_violation(fam.masks)
        if bad is not None:
            b1, b2, xb = bad
            raise AxiomError(
                ExchangeViolation(
                    first=Subset(fam.ground, b1),
                    second=Subset(fam.ground, b2),
                    pivot=fam.ground.labels[xb.bit_length() - 1],
                    axiom="MB",
                )
            )
        m = cls(fam.ground, fam, _certified=True)
        # (MB) forces equicardinality; a failure here would be an engine bug.
        assert all(b.bit_count() == m.rank for b in fam.masks)
        return m

    @classmethod
    def _trusted(cls, ground: GroundSet, masks: Iterable[int]) -> "Matroid":
        """Build without re-running (MB); for constructions correct by theory."""
        return cls(ground, SetFamily(ground, tuple(masks)), _certified=True)

    # -- derived structure ------------------------------------------------

    @cached_property
    def _indep_masks(self) -> frozenset[int]:
        out: set[int] = set()
        for b in self.bases.masks:
            # enumerate all submasks of b
            s = b
            while True:
                out.add(s)
                if s == 0:
                    break
                s = (s - 1) & b
        return frozenset(out)

    @cached_property
    def _spanning_masks(self) -> frozenset[int]:
        full = self.ground.full_mask
        out: set[int] = set()
        for b in self.bases.masks:
            free = full & ~b
            s = free
            while True:
                out.add(b | s)
                if s == 0:
                    break
                s = (s - 1) & free
        return frozenset(out)

    @cached_property
    def _circuit_masks(self) -> tuple[int, ...]:
        indep = self._indep_masks
        dependent = [m for m in self.ground.all_masks() if m not in indep]
        return _minimal_masks(dependent)

    def independents(self) -> SetFamily:
        """All subsets of some basis."""
        return SetFamily(self.ground, tuple(self._indep_masks))

    def spanning_sets(self) -> SetFamily:
        """All supersets of some basis."""
        return SetFamily(self.ground, tuple(self._spanning_masks))

    def circuits(self) -> SetFamily:
        """Minimal dependent subsets."""
        return SetFamily(self.ground, self._circuit_masks)

    def is_independent(self, s: Subset) -> bool:
        if s.ground != self.ground:
            raise InputError("subset over a different ground set")
        return s.mask in self._indep_masks

    def is_spanning(self, s: Subset) -> bool:
        if s.ground != self.ground:
            raise InputError("subset over a different ground set")
        return s.mask in self._spanning_masks

    # -- operations -------------------------------------------------------

    def dual(self) -> "Matroid":
        full = self.ground.full_mask
        return Matroid._trusted(self.ground, (full ^ b for b in self.bases.masks))

    def delete(self, x_set: Subset) -> "Matroid":
        """Restrict to the complement of x_set: independents avoiding x_set."""
        if x_set.ground != self.ground:
            raise InputError("deletion set over a different ground set")
        keep_labels = [lab for lab in self.ground.labels if lab not in x_set]
        sub = GroundSet(tuple(keep_labels))
        old_bits = [self.ground.index(lab) for lab in keep_labels]
        surviving = [m for m in self._indep_masks if m & x_set.mask == 0]
        new_bases = []
        for m in _maximal_masks(surviving):
            new_bases.append(sum(1 << i for i, ob in enumerate(old_bits) if m >> ob & 1))
        return Matroid._trusted(sub, new_bases)

    def contract(self, x_set: Subset) -> "Matroid":
        """Contraction, computed as the dual of deletion on the dual."""
        return self.dual().delete(x_set).dual()

    def is_uniform(self) -> bool:
        """True iff the bases are exactly all rank-sized subsets of the ground."""
        from math import comb

        return len(self.bases) == comb(self.ground.size, self.rank)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matroid)
            and self.ground == other.ground
            and self.bases.masks == other.bases.masks
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.bases.masks))

    def __repr__(self) -> str:
        return f"Matroid(rank={self.rank}, bases={self.bases!r})"


def check_basis_axiom(fam: SetFamily) -> Union[Matroid, ExchangeViolation]:
    """Certify a basis family, or return the first violating triple."""
    try:
        return Matroid.certify(fam)
    except AxiomError as e:
        return e.violation


def uniform(k: int, ground: GroundSet) -> Matroid:
    """The uniform matroid whose bases are all k-subsets of the ground set."""
    if not 0 <= k <= ground.size:
        raise InputError(f"uniform rank {k} out of range for ground of size {ground.size}")
    bases = [m for m in ground.all_masks() if m.bit_count() == k]
    return Matroid._trusted(ground, bases)


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """Direct sum on disjoint grounds: bases are unions of one basis from each."""
    if set(m1.ground.labels) & set(m2.ground.labels):
        raise InputError("direct sum requires disjoint ground sets")
    ground = GroundSet(m1.ground.labels + m2.ground.labels)
    shift = m1.ground.size
    bases = [b1 | (b2 << shift) for b1 in m1.bases.masks for b2 in m2.bases.masks]
    return Matroid._trusted(ground, bases)


def is_union_of_circuits(s: Subset, m: Matroid) -> bool:
    """True iff s equals the union of the circuits of m contained in it.

    The empty set is vacuously a union (of no circuits).
    """
    if s.ground != m.ground:
        raise InputError("subset over a different ground set")
    union = 0
    for c in m._circuit_masks:
        if c & ~s.mask == 0:
            union |= c
    return union == s.mask


def is_quotient(q: Matroid, m: Matroid) -> bool:
    """Oxley's criterion: q is a quotient of m iff every circuit of m is a
    union of circuits of q."""
    if q.ground != m.ground:
        raise InputError("quotient test requires a common ground set")
    return all(is_union_of_circuits(Subset(m.ground, c), q) for c in m._circuit_masks)
