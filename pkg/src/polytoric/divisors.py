"""Divisor class group presentations, the canonical class, and Gorensteinness.

The class group is Z^r on the generators indexed by the closed and
inseparable family, modulo the single relation whose coefficients are the
ranks.  The canonical class has coordinate |A| + 1 on the generator of A.
Both facts are recomputed independently by the cone path (cone.py); this
module owns the combinatorial side and the divisor arithmetic shared by
both.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import bitset
from .abelian import GroupInvariants, quotient_by_relation
from .errors import InvariantViolationError, UsageError
from .polymatroid import MatroidBases, Polymatroid
from .structure import ClosedInseparableFamily


def support_form_key(mask: int, rank: int, n: int) -> tuple:
    """Coefficient vector of the facet form of a family member:
    -x_i for i in A, plus rank(A) times the degree coordinate."""
    return tuple(-1 if mask >> i & 1 else 0 for i in range(n)) + (rank,)


def label_for_key(key: tuple) -> str:
    """Generator label derived from a support-form coefficient vector."""
    n = len(key) - 1
    body = key[:n]
    if key[n] > 0 and all(c in (0, -1) for c in body):
        mask = 0
        for i, c in enumerate(body):
            if c == -1:
                mask |= 1 << i
        return "P_" + bitset.set_label(mask)
    return "P(" + ",".join(str(c) for c in key) + ")"


@dataclass(frozen=True)
class DivisorPresentation:
    """Generators of the class group with their single relation.

    `keys` holds one support-form coefficient vector per generator; it fixes
    the labels and lets the two computation paths align their presentations.
    """

    labels: tuple
    relation: tuple
    invariants: GroupInvariants
    keys: tuple

    @classmethod
    def from_keys(cls, keys: Sequence[tuple]) -> "DivisorPresentation":
        keys = tuple(keys)
        relation = tuple(k[-1] for k in keys)
        return cls(
            labels=tuple(label_for_key(k) for k in keys),
            relation=relation,
            invariants=quotient_by_relation(len(relation), relation),
            keys=keys,
        )

    @property
    def rank_count(self) -> int:
        return len(self.relation)

    def zero(self) -> "DivisorClass":
        return DivisorClass(coords=(0,) * self.rank_count, presentation=self)


@dataclass(frozen=True)
class DivisorClass:
    coords: tuple
    presentation: DivisorPresentation

    def shifted_by_relation(self, k: int = 1) -> "DivisorClass":
        rel = self.presentation.relation
        return DivisorClass(
            coords=tuple(c + k * r for c, r in zip(self.coords, rel)),
            presentation=self.presentation,
        )


def class_group(family: ClosedInseparableFamily) -> DivisorPresentation:
    """Presentation on the family members in their canonical order."""
    if not family.members:
        raise InvariantViolationError(
            "empty closed/inseparable family; the full ground set is always closed"
        )
    keys = tuple(
        support_form_key(m.mask, m.rank, family.n) for m in family.members
    )
    return DivisorPresentation.from_keys(keys)


def canonical_class(
    family: ClosedInseparableFamily,
    presentation: Optional[DivisorPresentation] = None,
) -> DivisorClass:
    """The canonical divisor class: coordinate |A| + 1 on each generator."""
    if presentation is None:
        presentation = class_group(family)
    coords = tuple(m.size + 1 for m in family.members)
    return DivisorClass(coords=coords, presentation=presentation)


def classes_equal(x: DivisorClass, y: DivisorClass) -> bool:
    """Whether x and y differ by an integer multiple of the relation."""
    px, py = x.presentation, y.presentation
    if px.keys != py.keys or px.relation != py.relation:
        raise UsageError("divisor classes live in different presentations")
    diff = [a - b for a, b in zip(x.coords, y.coords)]
    rel = px.relation
    pivot = next((i for i, r in enumerate(rel) if r != 0), None)
    if pivot is None:
        return all(d == 0 for d in diff)
    if diff[pivot] % rel[pivot] != 0:
        return False
    lam = diff[pivot] // rel[pivot]
    return all(d == lam * r for d, r in zip(diff, rel))


def relation_multiple(x: DivisorClass) -> Optional[int]:
    """The integer lambda with coords = lambda * relation, if one exists."""
    pres = x.presentation
    if classes_equal(x, pres.zero()):
        rel = pres.relation
        pivot = next((i for i, r in enumerate(rel) if r != 0), None)
        if pivot is None:
            return 0
        return x.coords[pivot] // rel[pivot]
    return None


def is_gorenstein(family: ClosedInseparableFamily) -> Optional[int]:
    """The integer a with |A| + 1 = a * rho(A) across the family, if any.

    Computed twice: by the ratio test and by checking that the canonical
    class is zero; the two must agree.
    """
    ratio: Optional[int] = None
    for m in family.members:
        if m.rank <= 0:
            raise InvariantViolationError(
                f"family member {bitset.set_label(m.mask)} has nonpositive rank {m.rank}"
            )
        if (m.size + 1) % m.rank != 0:
            ratio = None
            break
        a = (m.size + 1) // m.rank
        if ratio is None:
            ratio = a
        elif ratio != a:
            ratio = None
            break
    pres = class_group(family)
    lam = relation_multiple(canonical_class(family, pres))
    if (ratio is None) != (lam is None) or (ratio is not None and ratio != lam):
        raise InvariantViolationError(
            f"Gorenstein ratio test ({ratio}) disagrees with zero-class test ({lam})"
        )
    return ratio


# ---------------------------------------------------------------------------
# matroid one-skeleton unmixedness (necessary condition screen)


@dataclass(frozen=True)
class UnmixedReport:
    unmixed: bool
    edges: tuple  # pairs {i,j} independent in the matroid, as masks
    maximal_independent_sets: tuple  # vertex sets of the skeleton graph, as masks

    def sizes(self) -> tuple:
        return tuple(sorted({bitset.card(s) for s in self.maximal_independent_sets}))


def matroid_unmixed_check(p: Polymatroid) -> UnmixedReport:
    """Whether all maximal independent sets of the one-skeleton graph have
    equal size.  The skeleton's edges are the two-element subsets contained
    in some basis, i.e. those of rank two."""
    if not isinstance(p.rep, MatroidBases):
        raise UsageError("unmixedness check needs a matroid-bases representation")
    n = p.n
    edges = tuple(
        (1 << i) | (1 << j)
        for i in range(n)
        for j in range(i + 1, n)
        if p.rank((1 << i) | (1 << j)) == 2
    )
    independent = [
        s
        for s in bitset.subsets(n)
        if not any(e & s == e for e in edges)
    ]
    indep_set = set(independent)
    maximal = tuple(
        s
        for s in independent
        if all(s | (1 << j) not in indep_set for j in bitset.elements(bitset.full_mask(n) & ~s))
    )
    sizes = {bitset.card(s) for s in maximal}
    return UnmixedReport(
        unmixed=len(sizes) <= 1,
        edges=edges,
        maximal_independent_sets=maximal,
    )
