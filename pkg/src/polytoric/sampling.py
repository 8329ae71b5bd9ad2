"""Random generation of valid and deliberately broken rank tables.

Valid tables are sampled level by level: once all ranks on smaller
subsets are fixed, the admissible range for rho(A) is
[max_i rho(A - i), min_{i != j} rho(A - i) + rho(A - j) - rho(A - i - j)],
which is never empty, and the pairwise local constraints are equivalent to
full monotonicity plus submodularity.  Every polymatroid rank function on
[n] can be produced this way.
"""

from __future__ import annotations

import random
from typing import Optional

from . import bitset
from .errors import UsageError
from .polymatroid import Polymatroid


def level_window(table: dict, mask: int) -> tuple:
    """Admissible range for rho(mask) given all smaller subsets.

    Lower bound from monotonicity over the covers, upper bound from
    submodularity over all co-cover pairs.  The window can be empty: the
    lower levels of a partial table are not always extensible, in which
    case the sampler restarts.
    """
    els = list(bitset.elements(mask))
    low = max(table[mask ^ (1 << i)] for i in els)
    high = min(
        table[mask ^ (1 << i)]
        + table[mask ^ (1 << j)]
        - table[mask ^ (1 << i) ^ (1 << j)]
        for i in els
        for j in els
        if i < j
    )
    return low, high


def random_rank_table(
    n: int, rng: random.Random, max_unit_rank: int = 3, max_attempts: int = 10_000
) -> dict:
    """A random valid rank table, as a mask -> rank dict.

    Draws level by level inside the admissible window and restarts when a
    partial table turns out to be inextensible.  Any valid table remains
    inside its own windows throughout, so all of them stay reachable.
    The restart rate grows steeply with n (mean attempts are about 3 at
    n = 4 and 25 at n = 5); past n = 5 use random_atom_rank_table instead.
    """
    bitset.check_ground_set(n)
    if max_unit_rank < 1:
        raise UsageError("unit ranks must be allowed to reach at least 1")
    for _ in range(max_attempts):
        table = {0: 0}
        for i in range(n):
            table[1 << i] = rng.randint(1, max_unit_rank)
        stuck = False
        for mask in sorted(bitset.nonempty_subsets(n), key=bitset.card):
            if bitset.card(mask) < 2:
                continue
            low, high = level_window(table, mask)
            if low > high:
                stuck = True
                break
            table[mask] = rng.randint(low, high)
        if not stuck:
            return table
    raise ResourceLimitError(
        f"no extensible table found in {max_attempts} attempts at n={n}; "
        "use random_atom_rank_table for larger ground sets"
    )


def random_atom_rank_table(
    n: int, rng: random.Random, max_atoms: int = 4, max_weight: int = 2
) -> dict:
    """A random valid rank table built as a sum of truncated weighted
    modular functions min(cap, w(A intersect S)).

    Each summand is normalized, monotone, and submodular, so the sum always
    is too; the supports are forced to cover the ground set so every unit
    rank is positive.  Practical at any n (unlike the window sampler), at
    the price of covering a narrower slice of the polymatroid landscape.
    """
    bitset.check_ground_set(n)
    atoms = []
    cover = 0
    for _ in range(rng.randint(1, max_atoms)):
        support = rng.randrange(1, 1 << n)
        weights = {
            i: rng.randint(1, max_weight) for i in bitset.elements(support)
        }
        cap = rng.randint(1, sum(weights.values()))
        atoms.append((weights, cap))
        cover |= support
    missing = bitset.full_mask(n) & ~cover
    if missing:
        weights = {i: 1 for i in bitset.elements(missing)}
        atoms.append((weights, len(weights)))
    table = {}
    for mask in bitset.subsets(n):
        table[mask] = sum(
            min(cap, sum(w.get(i, 0) for i in bitset.elements(mask)))
            for w, cap in atoms
        )
    return table


def random_polymatroid(
    n: int, rng: random.Random, max_unit_rank: int = 3
) -> Polymatroid:
    return Polymatroid.from_rank_table(n, random_rank_table(n, rng, max_unit_rank))


def corrupt_rank_table(
    table: dict, n: int, rng: random.Random, kind: Optional[str] = None
) -> tuple:
    """Break one axiom of a valid table; returns (bad table, planted fault).

    kind 'monotonicity' raises rho(A) above the smallest proper-superset
    rank; kind 'submodularity' raises rho(A | B) above the submodular cap
    of an incomparable pair.  The planted fault names the subsets involved.
    """
    if kind is None:
        kind = rng.choice(("monotonicity", "submodularity"))
    bad = dict(table)
    full = bitset.full_mask(n)
    if kind == "monotonicity":
        candidates = [m for m in bitset.nonempty_subsets(n) if m != full]
        mask = rng.choice(candidates)
        above = min(
            table[mask | (1 << j)]
            for j in bitset.elements(full & ~mask)
        )
        bad[mask] = above + 1 + rng.randint(0, 2)
        return bad, {"kind": "monotonicity", "subsets": (mask,)}
    if kind == "submodularity":
        if n < 2:
            raise UsageError("submodular corruption needs n >= 2")
        while True:
            a = rng.randrange(1, 1 << n)
            b = rng.randrange(1, 1 << n)
            if a & ~b and b & ~a:
                break
        cap = table[a] + table[b] - table[a & b]
        bad[a | b] = cap + 1 + rng.randint(0, 2)
        return bad, {"kind": "submodularity", "subsets": (a, b)}
    raise UsageError(f"unknown corruption kind {kind!r}")
