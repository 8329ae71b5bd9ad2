"""Agreement harness between the rank-function path and the cone path.

For a valid polymatroid the facet forms of the cone must be the coordinate
forms plus one form per closed/inseparable subset, and then the class
group presentation, the canonical class, and the Gorenstein verdict from
the two paths must coincide.  This module aligns the two presentations by
their support-form keys and reports any discrepancy, for use both by the
CLI verify command and by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cone import (
    canonical_from_cone,
    class_group_from_cone,
    cone_facets,
    semigroup_generators,
)
from .divisors import (
    DivisorClass,
    DivisorPresentation,
    canonical_class,
    class_group,
    classes_equal,
    is_gorenstein,
    relation_multiple,
    support_form_key,
)
from .polymatroid import DEFAULT_POINT_CAP, Polymatroid
from .structure import ClosedInseparableFamily, closed_inseparable_family


@dataclass
class PathAgreement:
    facets_match: bool
    missing_forms: tuple = ()
    unexpected_forms: tuple = ()
    invariants_match: bool = False
    canonical_match: bool = False
    gorenstein_match: bool = False
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.facets_match
            and self.invariants_match
            and self.canonical_match
            and self.gorenstein_match
        )


def expected_form_keys(family: ClosedInseparableFamily) -> set:
    """Facet forms forced by the family: one per member plus coordinates."""
    n = family.n
    keys = {support_form_key(m.mask, m.rank, n) for m in family.members}
    for i in range(n):
        keys.add(tuple(1 if j == i else 0 for j in range(n + 1)))
    return keys


def align_presentation(
    pres: DivisorPresentation, target: DivisorPresentation
) -> Optional[DivisorPresentation]:
    """Reorder `pres` onto the generator order of `target`, matching by key.

    Returns None when the two generator sets differ.
    """
    if set(pres.keys) != set(target.keys):
        return None
    index = {k: i for i, k in enumerate(pres.keys)}
    order = tuple(index[k] for k in target.keys)
    return DivisorPresentation(
        labels=tuple(pres.labels[i] for i in order),
        relation=tuple(pres.relation[i] for i in order),
        invariants=pres.invariants,
        keys=tuple(pres.keys[i] for i in order),
    )


def reorder_class(x: DivisorClass, aligned: DivisorPresentation) -> DivisorClass:
    index = {k: i for i, k in enumerate(x.presentation.keys)}
    coords = tuple(x.coords[index[k]] for k in aligned.keys)
    return DivisorClass(coords=coords, presentation=aligned)


def compare_paths(
    p: Polymatroid,
    family: Optional[ClosedInseparableFamily] = None,
    forms: Optional[list] = None,
    point_cap: int = DEFAULT_POINT_CAP,
) -> PathAgreement:
    """Run both paths on a validated polymatroid and compare everything."""
    if family is None:
        family = closed_inseparable_family(p)
    if forms is None:
        forms = cone_facets(semigroup_generators(p, point_cap))

    expected = expected_form_keys(family)
    actual = {f.coefficients for f in forms}
    result = PathAgreement(facets_match=expected == actual)
    if not result.facets_match:
        result.missing_forms = tuple(sorted(expected - actual))
        result.unexpected_forms = tuple(sorted(actual - expected))
        result.notes.append(
            f"facet sets differ: {len(result.missing_forms)} missing, "
            f"{len(result.unexpected_forms)} unexpected"
        )
        return result

    comb_pres = class_group(family)
    cone_pres = class_group_from_cone(forms)
    aligned = align_presentation(cone_pres, comb_pres)
    if aligned is None:
        result.notes.append("degree-carrying facets do not match the family")
        return result
    result.invariants_match = (
        comb_pres.invariants == cone_pres.invariants
        and aligned.relation == comb_pres.relation
    )
    if not result.invariants_match:
        result.notes.append(
            f"invariants differ: {comb_pres.invariants} vs {cone_pres.invariants}"
        )

    comb_canonical = canonical_class(family, comb_pres)
    cone_canonical = reorder_class(canonical_from_cone(forms, cone_pres), aligned)
    # Compare in the combinatorial presentation; after alignment the keys and
    # relation agree, so the classes live in the same group.
    if result.invariants_match:
        same = classes_equal(
            comb_canonical,
            DivisorClass(coords=cone_canonical.coords, presentation=comb_pres),
        )
        result.canonical_match = same
        if not same:
            result.notes.append(
                f"canonical classes differ: {comb_canonical.coords} vs "
                f"{cone_canonical.coords}"
            )

    comb_g = is_gorenstein(family)
    cone_g = relation_multiple(canonical_from_cone(forms, cone_pres))
    result.gorenstein_match = comb_g == cone_g
    if not result.gorenstein_match:
        result.notes.append(f"Gorenstein verdicts differ: {comb_g} vs {cone_g}")
    return result
