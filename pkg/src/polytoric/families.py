"""Constructors and closed-form analyzers for the named polymatroid families.

Each analyzer predicts the closed/inseparable family, the class group
invariants, or the Gorenstein verdict without running the generic engine,
so it can serve as an oracle against it (and vice versa).  Predictions are
compared as sets of (subset, rank) pairs; the generic engine is always the
authority when the two disagree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import bitset
from .abelian import GroupInvariants, gcd_of
from .errors import ClosedFormUnavailable, UsageError
from .polymatroid import Polymatroid
from .structure import ClosedInseparableFamily, FamilyMember


def _family(n: int, pairs) -> ClosedInseparableFamily:
    members = tuple(
        FamilyMember(mask=mask, rank=rank, size=bitset.card(mask))
        for mask, rank in sorted(pairs)
    )
    return ClosedInseparableFamily(n=n, members=members)


# ---------------------------------------------------------------------------
# transversal families


@dataclass(frozen=True)
class TransversalFamily:
    """Ordered list (A_1, ..., A_s) of nonempty subsets covering [n];
    repeats are allowed and significant."""

    n: int
    sets: tuple

    def __post_init__(self):
        bitset.check_ground_set(self.n)
        if not self.sets:
            raise UsageError("a transversal family needs at least one set")
        union = 0
        for a in self.sets:
            if a == 0:
                raise UsageError("family members must be nonempty")
            if a & ~bitset.full_mask(self.n):
                raise UsageError("family member outside the ground set")
            union |= a
        if union != bitset.full_mask(self.n):
            raise UsageError("family members must cover the ground set")

    @property
    def s(self) -> int:
        return len(self.sets)

    def to_polymatroid(self) -> Polymatroid:
        return Polymatroid.transversal(self.n, self.sets)

    def multiplicities(self) -> dict:
        counts: dict = {}
        for a in self.sets:
            counts[a] = counts.get(a, 0) + 1
        return counts


@dataclass(frozen=True)
class ClassificationResult:
    """Outcome of the shape classification of a transversal family.

    `invariants` is filled only when a closed form applies; the
    torsion-free tag guarantees torsion 1 without predicting the rank.
    """

    tag: str  # unique-member | two-members-partition | two-members-nested |
    #           torsion-free-witness | generic
    invariants: Optional[GroupInvariants] = None
    detail: str = ""


def uniform_transversal_analysis(n: int, i: int):
    """Family of all i-element subsets of [n], for 1 < i < n.

    Predicted members: every X with 1 <= |X| <= n - i, with rank
    C(n, i) - C(n - |X|, i), plus the full set with rank C(n, i).  The
    resulting class group is free.
    """
    if not 1 < i < n:
        raise UsageError(f"need 1 < i < n, got i={i}, n={n}")
    bitset.check_ground_set(n)
    full = bitset.full_mask(n)
    total = math.comb(n, i)
    pairs = [(full, total)]
    for mask in bitset.nonempty_subsets(n):
        size = bitset.card(mask)
        if size <= n - i:
            pairs.append((mask, total - math.comb(n - size, i)))
    family = _family(n, pairs)
    r = sum(math.comb(n, k) for k in range(1, n - i + 1)) + 1
    return family, GroupInvariants(free_rank=r - 1, torsion=1)


def uniform_transversal(n: int, i: int) -> TransversalFamily:
    """The actual family of all i-subsets, for feeding the generic engine."""
    if not 1 < i < n:
        raise UsageError(f"need 1 < i < n, got i={i}, n={n}")
    sets = [
        mask for mask in bitset.nonempty_subsets(n) if bitset.card(mask) == i
    ]
    return TransversalFamily(n=n, sets=tuple(sorted(sets)))


def nested_chain_analysis(n: int, chain: Sequence) -> tuple:
    """Chain A_1 < A_2 < ... < A_r = [n] with multiplicities k_i >= 1.

    Predicted members: the full set and the complements [n] - A_i for
    i < r, with rank k_{i+1} + ... + k_r; invariants Z^(r-1) (+) Z/dZ with
    d = gcd(k_1, ..., k_r).
    """
    if not chain:
        raise UsageError("chain must be nonempty")
    masks = [c[0] for c in chain]
    mults = [c[1] for c in chain]
    full = bitset.full_mask(n)
    if masks[-1] != full:
        raise UsageError("chain must end at the full ground set")
    for a, b in zip(masks, masks[1:]):
        if a == b or a & ~b:
            raise UsageError("chain sets must be strictly nested")
    if masks[0] == 0:
        raise UsageError("chain sets must be nonempty")
    if any(k < 1 for k in mults):
        raise UsageError("multiplicities must be >= 1")
    r = len(chain)
    suffix = list(mults)
    for i in range(r - 2, -1, -1):
        suffix[i] += suffix[i + 1]
    pairs = [(full, suffix[0])]
    for i in range(r - 1):
        pairs.append((full & ~masks[i], suffix[i + 1]))
    family = _family(n, pairs)
    return family, GroupInvariants(free_rank=r - 1, torsion=gcd_of(mults))


def nested_chain_family(n: int, chain: Sequence) -> TransversalFamily:
    sets: list = []
    for mask, k in chain:
        sets.extend([mask] * k)
    return TransversalFamily(n=n, sets=tuple(sets))


def classify_transversal(t: TransversalFamily) -> ClassificationResult:
    """Detect the family shapes with a known class group.

    All members equal to the ground set give a finite cyclic group; exactly
    two distinct members that either partition the ground set or are nested
    with the larger one full give Z (+) Z/gcd Z; a member not covered by
    the union of the others forces a torsion-free group.  Anything else is
    tagged generic with no prediction.
    """
    full = bitset.full_mask(t.n)
    counts = t.multiplicities()
    distinct = sorted(counts)
    s = t.s
    if distinct == [full]:
        return ClassificationResult(
            tag="unique-member",
            invariants=GroupInvariants(free_rank=0, torsion=s),
            detail=f"all {s} members equal the ground set",
        )
    if len(distinct) == 2:
        a, b = distinct
        q = counts[a]
        if a & b == 0 and a | b == full:
            return ClassificationResult(
                tag="two-members-partition",
                invariants=GroupInvariants(free_rank=1, torsion=math.gcd(q, s - q)),
                detail=f"partition into {bitset.set_label(a)} and {bitset.set_label(b)}",
            )
        if b == full:
            return ClassificationResult(
                tag="two-members-nested",
                invariants=GroupInvariants(free_rank=1, torsion=math.gcd(q, s - q)),
                detail=f"{bitset.set_label(a)} nested below the ground set",
            )
    for i, a in enumerate(t.sets):
        others = 0
        for j, b in enumerate(t.sets):
            if j != i:
                others |= b
        if a & ~others:
            return ClassificationResult(
                tag="torsion-free-witness",
                invariants=None,
                detail=f"member {i + 1} has elements covered by no other member",
            )
    return ClassificationResult(tag="generic")


# ---------------------------------------------------------------------------
# graph complement families


def graph_complement_family(n: int, edges: Sequence) -> tuple:
    """Family ([n] - e) over the edges e of a connected non-star graph.

    Returns the TransversalFamily, the predicted closed/inseparable family,
    and the predicted invariants.  For n > 3 the group is free of rank
    n - l + m where l counts leaves and m counts edges with a disjoint
    partner edge; for n = 3 the only admissible graph is the triangle and
    the group is free of rank 2.
    """
    if n < 3:
        raise UsageError("need at least three vertices")
    edge_masks = []
    seen = set()
    for e in edges:
        i, j = sorted(e)
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise UsageError(f"bad edge {e}")
        if (i, j) in seen:
            raise UsageError(f"repeated edge {e}")
        seen.add((i, j))
        edge_masks.append((1 << i) | (1 << j))
    if not _connected(n, edge_masks):
        raise UsageError("graph must be connected")
    common = bitset.full_mask(n)
    for e in edge_masks:
        common &= e
    if common:
        raise UsageError("star graphs are excluded (all edges share a vertex)")

    s = len(edge_masks)
    full = bitset.full_mask(n)
    family = TransversalFamily(
        n=n, sets=tuple(full & ~e for e in edge_masks)
    )
    degree = [sum(1 for e in edge_masks if e >> i & 1) for i in range(n)]
    non_cover = [
        e for e in edge_masks if any(e & f == 0 for f in edge_masks)
    ]
    pairs = [
        ((1 << i), s - degree[i]) for i in range(n) if degree[i] >= 2
    ]
    pairs += [(e, s - 1) for e in non_cover]
    if n > 3:
        pairs.append((full, s))
    predicted = _family(n, pairs)
    leaves = sum(1 for d in degree if d == 1)
    rank = n - leaves + len(non_cover) if n > 3 else 2
    return family, predicted, GroupInvariants(free_rank=rank, torsion=1)


def _connected(n: int, edge_masks: Sequence[int]) -> bool:
    if n == 0:
        return True
    reached = 1
    frontier = [0]
    adjacency = [0] * n
    for e in edge_masks:
        i, j = list(bitset.elements(e))
        adjacency[i] |= 1 << j
        adjacency[j] |= 1 << i
    while frontier:
        v = frontier.pop()
        new = adjacency[v] & ~reached
        reached |= new
        frontier.extend(bitset.elements(new))
    return reached == bitset.full_mask(n)


# ---------------------------------------------------------------------------
# Veronese-type and box families


@dataclass(frozen=True)
class VeroneseParams:
    """Caps (s_1 <= ... <= s_n) and total degree d with d < s_1 + ... + s_n."""

    s: tuple
    d: int

    def __post_init__(self):
        if not self.s:
            raise UsageError("need at least one coordinate cap")
        if any(x < 1 for x in self.s):
            raise UsageError("coordinate caps must be >= 1")
        if list(self.s) != sorted(self.s):
            raise UsageError("coordinate caps must be nondecreasing")
        if self.s[-1] > self.d:
            raise UsageError("coordinate caps must not exceed the degree cap")
        if self.d >= sum(self.s):
            raise UsageError(
                "degree cap must be smaller than the sum of coordinate caps"
            )

    @property
    def n(self) -> int:
        return len(self.s)

    def to_polymatroid(self) -> Polymatroid:
        return Polymatroid.veronese(self.s, self.d)


def veronese_analysis(params: VeroneseParams) -> tuple:
    """Closed-form family and Gorenstein verdict for Veronese type.

    Requires every cap strictly below the degree bound: when s_i = d the
    cap on coordinate i is inactive and {i} stops being closed, so the
    closed form does not apply and the generic engine must be used.

    Returns (predicted family, invariants, gorenstein a or None).
    """
    n, d, s = params.n, params.d, params.s
    if s[-1] >= d:
        raise ClosedFormUnavailable(
            f"cap s_{n} = {s[-1]} reaches the degree bound {d}, so the last "
            "singleton is not closed; use the generic engine"
        )
    pairs = [(1 << i, s[i]) for i in range(n)] + [(bitset.full_mask(n), d)]
    family = _family(n, pairs)
    invariants = GroupInvariants(
        free_rank=n, torsion=gcd_of(list(s) + [d])
    )
    a: Optional[int] = None
    if all(x == 2 for x in s) and n == d - 1 and n >= 2:
        a = 1
    elif all(x == 1 for x in s) and n == 2 * d - 1 and n >= 3:
        a = 2
    return family, invariants, a


def box_analysis(v: Sequence[int]) -> tuple:
    """Box below a positive vector v: the family is the singletons with
    ranks v_i; Gorenstein exactly when all v_i are equal and at most 2.

    Returns (predicted family, invariants, gorenstein a or None).
    """
    v = tuple(int(x) for x in v)
    if any(x < 1 for x in v):
        raise UsageError("box bounds must be >= 1")
    n = len(v)
    bitset.check_ground_set(n)
    family = _family(n, [(1 << i, v[i]) for i in range(n)])
    invariants = GroupInvariants(free_rank=n - 1, torsion=gcd_of(v))
    a: Optional[int] = None
    if all(x == v[0] for x in v) and v[0] <= 2:
        a = 2 // v[0]
    return family, invariants, a


def rank_bounded_analysis(n: int, d: int) -> tuple:
    """All vectors of total degree at most d: the family is the full set
    alone with rank d; Gorenstein exactly when d divides n + 1.

    Returns (predicted family, invariants, gorenstein a or None).
    """
    bitset.check_ground_set(n)
    if d < 1:
        raise UsageError("degree bound must be >= 1")
    family = _family(n, [(bitset.full_mask(n), d)])
    invariants = GroupInvariants(free_rank=0, torsion=d)
    a = (n + 1) // d if (n + 1) % d == 0 else None
    return family, invariants, a


def rank_bounded_polymatroid(n: int, d: int) -> Polymatroid:
    """The degree-d simplex polymatroid as a runnable representation."""
    return Polymatroid.veronese((d,) * n, d)
