"""Convex-cone path: facets of the cone over the degree-one generators.

Every vector v of a multicomplex or polymatroid gives a generator
(v, 1) in Z^(n+1).  The facets of the nonnegative span of these points are
found by the double description method over exact integers, and each facet
is returned as its normalized support form: the integer linear form with
coprime coefficients that vanishes on the facet and is nonnegative on the
cone.  Forms with a positive degree coefficient correspond to the
height-one primes over the degree element; the rest must be the n
coordinate forms.  The class group, canonical class, and a bounded-degree
normality witness all come out of this data, independently of the
rank-function path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .divisors import DivisorClass, DivisorPresentation
from .errors import InvariantViolationError, ResourceLimitError, UsageError
from .polymatroid import (
    DEFAULT_POINT_CAP,
    Multicomplex,
    Polymatroid,
    lattice_points,
)


@dataclass(frozen=True)
class SupportForm:
    """Normalized facet form: gcd-1 integer coefficients, nonnegative on the
    cone, zero exactly on one facet.  The last coefficient is the degree
    coordinate."""

    coefficients: tuple

    @property
    def contains_t(self) -> bool:
        return self.coefficients[-1] > 0

    def value_on(self, point: Sequence[int]) -> int:
        return sum(c * x for c, x in zip(self.coefficients, point))

    def __str__(self):
        return " ".join(str(c) for c in self.coefficients)


@dataclass(frozen=True)
class SemigroupGenerators:
    """The points (v, 1) in Z^(n+1), one per vector of the input."""

    n: int
    points: tuple

    def vectors(self) -> tuple:
        """The degree-one part: the v with (v, 1) a generator."""
        return tuple(p[:-1] for p in self.points)


ConeInput = Union[Multicomplex, Polymatroid]


def semigroup_generators(
    source: ConeInput, point_cap: int = DEFAULT_POINT_CAP
) -> SemigroupGenerators:
    """Degree-one generator points of the affine semigroup of the input."""
    if isinstance(source, Polymatroid):
        vecs = lattice_points(source, point_cap)
        n = source.n
    elif isinstance(source, Multicomplex):
        vecs = source.points(point_cap)
        n = source.n
    else:
        raise UsageError(f"cannot build semigroup generators from {type(source).__name__}")
    pts = tuple(tuple(v) + (1,) for v in vecs)
    zero = (0,) * n + (1,)
    if zero not in set(pts):
        raise UsageError("generator set must contain the zero vector")
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n)) + (1,)
        if e not in set(pts):
            raise UsageError(f"generator set must contain the unit vector e_{i + 1}")
    return SemigroupGenerators(n=n, points=pts)


def _normalize_ray(ray: Sequence[int]) -> tuple:
    g = math.gcd(*ray)
    if g == 0:
        raise InvariantViolationError("zero ray produced during facet enumeration")
    return tuple(c // g for c in ray)


def cone_facets(gens: SemigroupGenerators) -> list:
    """All facet support forms of the cone spanned by the generators.

    Double description on the polar side: the support forms are exactly the
    extreme rays of {c : <c, p> >= 0 for all generators p}.  The run is
    seeded with the simplex generators (0,1) and (e_i,1), whose polar cone
    is simplicial with known rays, and the remaining generators are added
    one at a time.  All arithmetic is exact; adjacency of rays is decided
    by the standard zero-set inclusion test, valid here because every
    intermediate cone is pointed.
    """
    n = gens.n
    dim = n + 1
    seed = [tuple(0 if j != n else 1 for j in range(dim))]
    seed += [
        tuple(1 if j in (i, n) else 0 for j in range(dim)) for i in range(n)
    ]
    seed_set = set(seed)
    if not seed_set <= set(gens.points):
        raise UsageError(
            "generator set must contain the zero and unit degree-one points"
        )
    rest = sorted(set(gens.points) - seed_set)

    # Polar cone of the seed simplex: e_1, ..., e_n and (-1, ..., -1, 1).
    rays = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(n)]
    rays.append(tuple(-1 if j != n else 1 for j in range(dim)))

    processed = list(seed)
    zero_sets = [
        sum(1 << k for k, p in enumerate(processed) if sum(c * x for c, x in zip(r, p)) == 0)
        for r in rays
    ]

    for constraint in rest:
        values = [sum(c * x for c, x in zip(r, constraint)) for r in rays]
        if all(v >= 0 for v in values):
            idx = len(processed)
            processed.append(constraint)
            zero_sets = [
                z | (1 << idx) if v == 0 else z for z, v in zip(zero_sets, values)
            ]
            continue
        plus = [i for i, v in enumerate(values) if v > 0]
        zero = [i for i, v in enumerate(values) if v == 0]
        minus = [i for i, v in enumerate(values) if v < 0]
        new_rays = []
        for ip in plus:
            for im in minus:
                meet = zero_sets[ip] & zero_sets[im]
                if meet.bit_count() < dim - 2:
                    continue
                adjacent = True
                for k, z in enumerate(zero_sets):
                    if k != ip and k != im and meet & ~z == 0:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = tuple(
                    values[ip] * rays[im][j] - values[im] * rays[ip][j]
                    for j in range(dim)
                )
                new_rays.append(_normalize_ray(combo))
        idx = len(processed)
        processed.append(constraint)
        kept = [
            (rays[i], zero_sets[i] | ((1 << idx) if values[i] == 0 else 0))
            for i in plus + zero
        ]
        for ray in new_rays:
            z = sum(
                1 << k
                for k, p in enumerate(processed)
                if sum(c * x for c, x in zip(ray, p)) == 0
            )
            kept.append((ray, z))
        # Distinct extreme rays stay distinct under normalization; dedupe
        # defensively anyway so a repeat cannot corrupt the adjacency test.
        seen = {}
        for ray, z in kept:
            seen[ray] = z
        rays = list(seen.keys())
        zero_sets = [seen[r] for r in rays]

    for ray in rays:
        for p in gens.points:
            if sum(c * x for c, x in zip(ray, p)) < 0:
                raise InvariantViolationError(
                    f"support form {ray} is negative on generator {p}"
                )
    return [SupportForm(coefficients=r) for r in sorted(rays)]


def minimal_primes_of_t(forms: Sequence[SupportForm]) -> list:
    """The forms whose facets carry the primes containing the degree element
    (positive degree coefficient).  The remaining forms must be exactly the
    n coordinate forms; anything else violates the facet classification."""
    if not forms:
        raise UsageError("need a complete list of support forms")
    dim = len(forms[0].coefficients)
    n = dim - 1
    t_forms = [f for f in forms if f.contains_t]
    others = {f.coefficients for f in forms if not f.contains_t}
    expected = {
        tuple(1 if j == i else 0 for j in range(dim)) for i in range(n)
    }
    if others != expected:
        raise InvariantViolationError(
            "degree-zero facet forms are not exactly the coordinate forms: "
            f"got {sorted(others)}"
        )
    return t_forms


def monomial_divisor(u: Sequence[int], forms: Sequence[SupportForm]) -> tuple:
    """Valuation vector of a monomial exponent u against every facet form."""
    if not forms:
        raise UsageError("need a complete list of support forms")
    if len(u) != len(forms[0].coefficients):
        raise UsageError(
            f"exponent vector has length {len(u)}, expected {len(forms[0].coefficients)}"
        )
    return tuple(f.value_on(u) for f in forms)


def class_group_from_cone(forms: Sequence[SupportForm]) -> DivisorPresentation:
    """Presentation on the degree-carrying facets; relation = degree
    coefficients (the valuations of the degree element)."""
    t_forms = minimal_primes_of_t(forms)
    return DivisorPresentation.from_keys(tuple(f.coefficients for f in t_forms))


def canonical_from_cone(
    forms: Sequence[SupportForm],
    presentation: Optional[DivisorPresentation] = None,
) -> DivisorClass:
    """Canonical class coordinates 1 - c_1 - ... - c_n on each generator."""
    if presentation is None:
        presentation = class_group_from_cone(forms)
    coords = tuple(1 - sum(k[:-1]) for k in presentation.keys)
    return DivisorClass(coords=coords, presentation=presentation)


def principal_class(
    u: Sequence[int],
    forms: Sequence[SupportForm],
    presentation: Optional[DivisorPresentation] = None,
) -> DivisorClass:
    """Class of the principal divisor of the monomial u, expressed on the
    degree-carrying generators by eliminating each coordinate generator
    [Q_i] = -sum_j c_{i,j} [P_j].  Must always be zero in the class group."""
    if presentation is None:
        presentation = class_group_from_cone(forms)
    n = len(presentation.keys[0]) - 1
    if len(u) != n + 1:
        raise UsageError(f"exponent vector has length {len(u)}, expected {n + 1}")
    coords = tuple(
        sum(c * x for c, x in zip(key, u)) - sum(key[i] * u[i] for i in range(n))
        for key in presentation.keys
    )
    return DivisorClass(coords=coords, presentation=presentation)


# ---------------------------------------------------------------------------
# bounded-degree normality witness


@dataclass(frozen=True)
class NormalityWitness:
    max_degree: int
    violation: Optional[tuple]  # offending point (w, k), or None

    @property
    def ok(self) -> bool:
        return self.violation is None

    def __str__(self):
        if self.ok:
            return f"no violation up to degree {self.max_degree}"
        return f"degree-{self.violation[-1]} cone point {self.violation} is not a sum of generators"


def normality_witness(
    source: ConeInput,
    degree_bound: Optional[int] = None,
    point_cap: int = DEFAULT_POINT_CAP,
) -> NormalityWitness:
    """Check that every cone lattice point of degree k <= degree_bound is a
    sum of k degree-one generators; reports the first failure.

    A pass is a witness for normality up to the bound, not a certificate.
    The default bound is the ground-set size.
    """
    gens = semigroup_generators(source, point_cap)
    n = gens.n
    if degree_bound is None:
        degree_bound = n
    if degree_bound < 1:
        raise UsageError(f"degree bound must be >= 1, got {degree_bound}")
    forms = cone_facets(gens)
    vectors = sorted(set(gens.vectors()), key=lambda v: (-sum(v), v))
    vector_set = set(vectors)
    coord_max = [max(v[i] for v in vectors) for i in range(n)]

    memo: dict = {}

    def decomposable(w: tuple, k: int) -> bool:
        if k == 0:
            return all(x == 0 for x in w)
        if k == 1:
            return w in vector_set
        cached = memo.get((w, k))
        if cached is not None:
            return cached
        result = False
        for v in vectors:
            if all(a >= b for a, b in zip(w, v)):
                if decomposable(tuple(a - b for a, b in zip(w, v)), k - 1):
                    result = True
                    break
        memo[(w, k)] = result
        return result

    counter = [0]
    coeffs = [f.coefficients for f in forms]

    def scan(k: int):
        """Lex depth-first over cone points of degree k.  A prefix is pruned
        when some form cannot reach 0 even with the most optimistic choice
        of the remaining coordinates."""
        bounds = [c * k for c in coord_max]
        # headroom[pos][f]: max of sum(c_i * w_i, i >= pos) over the box
        headroom = [[0] * len(coeffs) for _ in range(n + 1)]
        for pos in range(n - 1, -1, -1):
            for fi, c in enumerate(coeffs):
                gain = c[pos] * bounds[pos] if c[pos] > 0 else 0
                headroom[pos][fi] = headroom[pos + 1][fi] + gain
        w = [0] * n

        def extend(pos: int, partial: list):
            if pos == n:
                counter[0] += 1
                if counter[0] > point_cap:
                    raise ResourceLimitError(
                        f"cone point enumeration exceeds cap of {point_cap}"
                    )
                if all(v >= 0 for v in partial):
                    yield tuple(w)
                return
            room = headroom[pos + 1]
            for val in range(bounds[pos] + 1):
                w[pos] = val
                nxt = [p + c[pos] * val for p, c in zip(partial, coeffs)]
                if all(v + r >= 0 for v, r in zip(nxt, room)):
                    yield from extend(pos + 1, nxt)
            w[pos] = 0

        start = [c[n] * k for c in coeffs]
        yield from extend(0, start)

    for k in range(1, degree_bound + 1):
        for point in scan(k):
            if not decomposable(point, k):
                return NormalityWitness(
                    max_degree=degree_bound, violation=point + (k,)
                )
    return NormalityWitness(max_degree=degree_bound, violation=None)
