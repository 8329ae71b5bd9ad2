"""Polymatroids represented through their ground-set rank functions.

A polymatroid on [n] is a downward-closed finite set of nonnegative
integer vectors containing every unit vector, with the exchange property
between vectors of different total degree.  Everything downstream only
needs the rank function rho(A) = max v(A) over the vectors v, so this
module represents a polymatroid by one of several rank-function encodings
and exposes exact evaluation, axiom validation, and lattice-point /
basis enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from . import bitset
from .errors import ResourceLimitError, UsageError

# Full 2^n rank tables are materialized eagerly up to this size; above it,
# ranks are memoized per subset on demand.
EAGER_TABLE_LIMIT = 20

DEFAULT_POINT_CAP = 10**6

LatticeVector = tuple  # nonnegative integer coordinates, length n


def vec_total(v: Sequence[int]) -> int:
    """|v| = sum of all coordinates."""
    return sum(v)


def vec_on(v: Sequence[int], mask: int) -> int:
    """v(A) = sum of the coordinates indexed by the subset mask; v(0) = 0."""
    return sum(v[i] for i in bitset.elements(mask))


def dominates(v: Sequence[int], w: Sequence[int]) -> bool:
    """Componentwise v >= w."""
    return all(a >= b for a, b in zip(v, w))


# ---------------------------------------------------------------------------
# rank-function encodings


@dataclass(frozen=True)
class RankTable:
    """Explicit table of ranks, indexed by subset mask (length 2^n)."""

    values: tuple

    def rank_of(self, mask: int) -> int:
        return self.values[mask]


@dataclass(frozen=True)
class Transversal:
    """Family (A_1, ..., A_s) of subset masks; repeats are significant.

    rho(X) counts the family members that meet X.
    """

    sets: tuple

    def rank_of(self, mask: int) -> int:
        return sum(1 for a in self.sets if a & mask)


@dataclass(frozen=True)
class Veronese:
    """Vectors v with v_i <= s_i and |v| <= d; rho(A) = min(s(A), d)."""

    s: tuple
    d: int

    def rank_of(self, mask: int) -> int:
        return min(vec_on(self.s, mask), self.d) if mask else 0


@dataclass(frozen=True)
class Box:
    """Vectors below a fixed positive vector v; rho(A) = v(A)."""

    v: tuple

    def rank_of(self, mask: int) -> int:
        return vec_on(self.v, mask)


@dataclass(frozen=True)
class MatroidBases:
    """Bases of a matroid as equal-cardinality subset masks.

    rho(A) = max |A intersect F| over the bases F.
    """

    bases: tuple

    def rank_of(self, mask: int) -> int:
        return max(bitset.card(b & mask) for b in self.bases)


@dataclass(frozen=True)
class PointSet:
    """Explicit list of lattice vectors; rho(A) = max v(A) over the list."""

    points: tuple

    def rank_of(self, mask: int) -> int:
        return max(vec_on(p, mask) for p in self.points)


Representation = (RankTable, Transversal, Veronese, Box, MatroidBases, PointSet)


class Polymatroid:
    """A ground set [n] with an exactly evaluated, memoized rank function.

    Construction does not check the polymatroid axioms; run validate() to
    get a report.  rank() results are cached: for n <= EAGER_TABLE_LIMIT the
    whole 2^n table is built up front (downstream analyses touch most
    subsets anyway), above that a per-key memo is filled lazily.  Cached
    writes are idempotent, so concurrent readers are safe.
    """

    def __init__(self, n: int, rep):
        bitset.check_ground_set(n)
        if not isinstance(rep, Representation):
            raise UsageError(f"unknown rank representation {type(rep).__name__}")
        self.n = n
        self.rep = rep
        self._full = bitset.full_mask(n)
        if n <= EAGER_TABLE_LIMIT:
            self._table: Optional[list] = [rep.rank_of(m) for m in bitset.subsets(n)]
            self._memo = None
        else:
            self._table = None
            self._memo = {}

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rank_table(cls, n: int, table) -> "Polymatroid":
        """table: mapping from subset mask to rank; rho(empty) defaults to 0."""
        bitset.check_ground_set(n)
        values = [0] * (1 << n)
        for mask in bitset.nonempty_subsets(n):
            if mask not in table:
                raise UsageError(f"rank table is missing subset {bitset.set_label(mask)}")
            values[mask] = int(table[mask])
        if table.get(0, 0) != 0:
            values[0] = int(table[0])  # kept so validate() can flag it
        return cls(n, RankTable(tuple(values)))

    @classmethod
    def transversal(cls, n: int, sets: Iterable[int]) -> "Polymatroid":
        sets = tuple(sets)
        if not sets:
            raise UsageError("a transversal family needs at least one set")
        for a in sets:
            if a == 0:
                raise UsageError("transversal family members must be nonempty")
            if a & ~bitset.full_mask(n):
                raise UsageError("transversal family member outside ground set")
        return cls(n, Transversal(sets))

    @classmethod
    def veronese(cls, s: Sequence[int], d: int) -> "Polymatroid":
        s = tuple(int(x) for x in s)
        if any(x < 1 for x in s):
            raise UsageError("coordinate caps must be >= 1")
        if d < 1:
            raise UsageError("total-degree cap must be >= 1")
        return cls(len(s), Veronese(s, int(d)))

    @classmethod
    def box(cls, v: Sequence[int]) -> "Polymatroid":
        v = tuple(int(x) for x in v)
        if any(x < 1 for x in v):
            raise UsageError("box bounds must be >= 1")
        return cls(len(v), Box(v))

    @classmethod
    def from_matroid_bases(cls, n: int, bases: Iterable[int]) -> "Polymatroid":
        bases = tuple(bases)
        if not bases:
            raise UsageError("need at least one basis")
        for b in bases:
            if b & ~bitset.full_mask(n):
                raise UsageError("basis outside ground set")
        return cls(n, MatroidBases(bases))

    @classmethod
    def from_points(cls, n: int, points: Iterable[Sequence[int]]) -> "Polymatroid":
        pts = tuple(tuple(int(x) for x in p) for p in points)
        if not pts:
            raise UsageError("need at least one lattice point")
        for p in pts:
            if len(p) != n:
                raise UsageError(f"point {p} does not have {n} coordinates")
            if any(x < 0 for x in p):
                raise UsageError(f"point {p} has a negative coordinate")
        return cls(n, PointSet(pts))

    # -- evaluation ----------------------------------------------------------

    def rank(self, mask: int) -> int:
        """rho(A) for the subset mask A; raises UsageError off the ground set."""
        if mask & ~self._full or mask < 0:
            raise UsageError(f"subset {mask:#x} not contained in [{self.n}]")
        if self._table is not None:
            return self._table[mask]
        cached = self._memo.get(mask)
        if cached is None:
            cached = self.rep.rank_of(mask)
            self._memo[mask] = cached
        return cached

    def unit_ranks(self) -> tuple:
        return tuple(self.rank(1 << i) for i in range(self.n))

    def __repr__(self):
        return f"Polymatroid(n={self.n}, rep={type(self.rep).__name__})"


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    kind: str  # normalization | unit-rank | monotonicity | submodularity | basis-cardinality
    subsets: tuple
    detail: str

    def __str__(self):
        where = ", ".join(bitset.set_label(m) for m in self.subsets)
        return f"{self.kind} at {where}: {self.detail}"


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(p: Polymatroid) -> ValidationReport:
    """Check the rank-function axioms over every pair of subsets.

    Normalization rho(empty) = 0, rho({i}) >= 1 for each element,
    monotonicity on all nested pairs, and submodularity on all pairs.
    Violations are report entries, not exceptions.  For closed-form
    representations this doubles as a consistency check of the evaluator.
    """
    report = ValidationReport()
    n = p.n
    rank = p.rank
    if rank(0) != 0:
        report.violations.append(
            Violation("normalization", (0,), f"rho(empty) = {rank(0)}, expected 0")
        )
    for i in range(n):
        m = 1 << i
        if rank(m) < 1:
            report.violations.append(
                Violation("unit-rank", (m,), f"rho({{{i + 1}}}) = {rank(m)} < 1")
            )
    for b in bitset.subsets(n):
        rb = rank(b)
        for a in bitset.submasks(b):
            if a != b and rank(a) > rb:
                report.violations.append(
                    Violation("monotonicity", (a, b), f"{rank(a)} > {rb}")
                )
    for a in bitset.subsets(n):
        ra = rank(a)
        for b in range(a + 1, 1 << n):
            if ra + rank(b) < rank(a | b) + rank(a & b):
                report.violations.append(
                    Violation(
                        "submodularity",
                        (a, b),
                        f"{ra} + {rank(b)} < {rank(a | b)} + {rank(a & b)}",
                    )
                )
    if isinstance(p.rep, MatroidBases):
        _check_matroid_bases(p, report)
    return report


def _check_matroid_bases(p: Polymatroid, report: ValidationReport) -> None:
    sizes = {bitset.card(b) for b in p.rep.bases}
    if len(sizes) > 1:
        report.violations.append(
            Violation(
                "basis-cardinality",
                tuple(sorted(p.rep.bases)[:2]),
                f"bases of unequal sizes {sorted(sizes)}",
            )
        )
        return
    # Exchange property is only a warning: rank analysis stays meaningful for
    # any equal-cardinality family, but the matroid-specific screens assume it.
    bases = set(p.rep.bases)
    for b1 in bases:
        for b2 in bases:
            for i in bitset.elements(b1 & ~b2):
                if not any((b1 ^ (1 << i)) | (1 << j) in bases for j in bitset.elements(b2 & ~b1)):
                    report.warnings.append(
                        f"basis exchange fails from {bitset.set_label(b1)} to "
                        f"{bitset.set_label(b2)} at element {i + 1}"
                    )
                    return


# ---------------------------------------------------------------------------
# lattice points and bases


def lattice_points(p: Polymatroid, point_cap: int = DEFAULT_POINT_CAP) -> list:
    """All v in Z_+^n with v(A) <= rho(A) for every subset A, in lex order.

    Depth-first over coordinates with the per-coordinate bound
    v_i <= rho({i}); a partial assignment is pruned as soon as some subset
    inside the assigned prefix exceeds its rank.
    """
    n = p.n
    caps = p.unit_ranks()
    out: list = []
    v = [0] * n

    def extend(k: int, prefix_mask: int) -> None:
        if k == n:
            if len(out) >= point_cap:
                raise ResourceLimitError(
                    f"lattice point count exceeds cap of {point_cap}"
                )
            out.append(tuple(v))
            return
        bit = 1 << k
        for val in range(caps[k] + 1):
            v[k] = val
            ok = True
            for sub in bitset.submasks(prefix_mask):
                a = sub | bit
                if vec_on(v, a) > p.rank(a):
                    ok = False
                    break
            if ok:
                extend(k + 1, prefix_mask | bit)
        v[k] = 0

    extend(0, 0)
    return out


def maximal_points(points: Sequence[LatticeVector]) -> list:
    """The vectors with no strictly larger vector in the list."""
    ordered = sorted(points, key=vec_total, reverse=True)
    kept: list = []
    for v in ordered:
        if not any(dominates(w, v) for w in kept):
            kept.append(v)
    return sorted(kept)


def bases(p: Polymatroid, point_cap: int = DEFAULT_POINT_CAP) -> list:
    """The maximal lattice vectors of the polymatroid, in lex order."""
    return maximal_points(lattice_points(p, point_cap))


# ---------------------------------------------------------------------------
# multicomplexes (inputs for the convex-cone path)


@dataclass(frozen=True)
class Multicomplex:
    """A finite generator list for the cone path.

    In the default mode, `facets` is the antichain of maximal vectors and
    the vector set is its downward closure.  With generalized=True the list
    is taken verbatim as the degree-one generator set; it must then contain
    the zero vector and every unit vector.
    """

    n: int
    facets: tuple
    generalized: bool = False

    def __post_init__(self):
        bitset.check_ground_set(self.n)
        for f in self.facets:
            if len(f) != self.n:
                raise UsageError(f"facet {f} does not have {self.n} coordinates")
            if any(x < 0 for x in f):
                raise UsageError(f"facet {f} has a negative coordinate")
        if not self.facets:
            raise UsageError("need at least one facet/generator")

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        if self.generalized:
            pts = set(self.facets)
            zero = (0,) * self.n
            if zero not in pts:
                report.violations.append(
                    Violation("generator-set", (0,), "zero vector missing")
                )
            for i in range(self.n):
                e = tuple(1 if j == i else 0 for j in range(self.n))
                if e not in pts:
                    report.violations.append(
                        Violation("generator-set", (1 << i,), f"unit vector e_{i + 1} missing")
                    )
            return report
        for a, b in itertools.combinations(self.facets, 2):
            if dominates(a, b) or dominates(b, a):
                report.violations.append(
                    Violation("antichain", (0,), f"facets {a} and {b} are comparable")
                )
        for i in range(self.n):
            if not any(f[i] >= 1 for f in self.facets):
                report.violations.append(
                    Violation("unit-rank", (1 << i,), f"e_{i + 1} lies below no facet")
                )
        return report

    def points(self, point_cap: int = DEFAULT_POINT_CAP) -> list:
        """The vector set: downward closure of the facets, or the raw list."""
        if self.generalized:
            return sorted(set(self.facets))
        seen = set()
        for f in self.facets:
            for w in itertools.product(*(range(x + 1) for x in f)):
                seen.add(w)
                if len(seen) > point_cap:
                    raise ResourceLimitError(
                        f"multicomplex point count exceeds cap of {point_cap}"
                    )
        return sorted(seen)
