import pytest
from hypothesis import given, settings

from polytoric import (
    Polymatroid,
    ResourceLimitError,
    UsageError,
    closed_inseparable_family,
    is_closed,
    is_closed_full,
    is_inseparable,
)
from polytoric import bitset
from polytoric.families import rank_bounded_polymatroid, uniform_transversal

from tests.strategies import rank_tables


def brute_family(p):
    """Both definitions checked verbatim, independently of structure.py."""
    out = set()
    for mask in bitset.nonempty_subsets(p.n):
        closed = True
        outside = bitset.full_mask(p.n) & ~mask
        for extra in bitset.submasks(outside):
            if extra and p.rank(mask | extra) <= p.rank(mask):
                closed = False
                break
        if not closed:
            continue
        inseparable = True
        for part in bitset.submasks(mask):
            if part in (0, mask):
                continue
            if p.rank(part) + p.rank(mask ^ part) == p.rank(mask):
                inseparable = False
                break
        if inseparable:
            out.add((mask, p.rank(mask)))
    return out


def test_closedness_requires_nonempty():
    p = Polymatroid.box((1, 1))
    with pytest.raises(UsageError):
        is_closed(p, 0)
    with pytest.raises(UsageError):
        is_inseparable(p, 0)


def test_full_set_is_always_closed():
    p = Polymatroid.box((2, 3, 4))
    assert is_closed(p, bitset.full_mask(3))


def test_veronese_singletons_closed_when_capped():
    p = Polymatroid.veronese((1, 2, 2), 3)
    for i in range(3):
        assert is_closed(p, 1 << i)


def test_uniform_transversal_closedness_threshold():
    n, i = 5, 3
    p = uniform_transversal(n, i).to_polymatroid()
    for mask in bitset.nonempty_subsets(n):
        size = bitset.card(mask)
        expected = size <= n - i or mask == bitset.full_mask(n)
        assert is_closed(p, mask) == expected
        if 1 <= size <= n - i:
            assert is_inseparable(p, mask)


def test_singletons_are_inseparable():
    p = Polymatroid.box((3, 1))
    assert is_inseparable(p, 0b01)
    assert is_inseparable(p, 0b10)


def test_box_sets_of_size_two_or_more_separate():
    p = Polymatroid.box((2, 3, 4))
    for mask in bitset.nonempty_subsets(3):
        assert is_inseparable(p, mask) == (bitset.card(mask) == 1)


def test_degree_bounded_family_is_full_set_only():
    for n in (2, 3, 4):
        for d in (1, 2, 3):
            fam = closed_inseparable_family(rank_bounded_polymatroid(n, d))
            assert fam.masks() == (bitset.full_mask(n),)
            assert fam.ranks() == (d,)


def test_veronese_family_members():
    fam = closed_inseparable_family(Polymatroid.veronese((1, 1, 1), 2))
    assert fam.as_pairs() == {(0b001, 1), (0b010, 1), (0b100, 1), (0b111, 2)}


def test_box_family_is_singletons():
    v = (2, 4, 6)
    fam = closed_inseparable_family(Polymatroid.box(v))
    assert fam.as_pairs() == {(1 << i, v[i]) for i in range(3)}


def test_family_order_is_by_mask():
    fam = closed_inseparable_family(Polymatroid.veronese((1, 1, 1), 2))
    assert fam.masks() == tuple(sorted(fam.masks()))


def test_enumeration_cap():
    p = Polymatroid.box((1,) * 18)
    with pytest.raises(ResourceLimitError):
        closed_inseparable_family(p, max_n=16)


@settings(max_examples=60, deadline=None)
@given(rank_tables(max_n=4))
def test_family_matches_double_brute_force(table_n):
    table, n = table_n
    p = Polymatroid.from_rank_table(n, table)
    assert closed_inseparable_family(p).as_pairs() == brute_family(p)


@settings(max_examples=60, deadline=None)
@given(rank_tables(max_n=5))
def test_closedness_shortcut_equals_full_definition(table_n):
    table, n = table_n
    p = Polymatroid.from_rank_table(n, table)
    for mask in bitset.nonempty_subsets(n):
        assert is_closed(p, mask) == is_closed_full(p, mask)


def test_closedness_shortcut_randomized_up_to_n10():
    import random

    from polytoric.sampling import random_rank_table

    rng = random.Random(2718)
    for n in (8, 9, 10):
        p = Polymatroid.from_rank_table(n, random_rank_table(n, rng))
        for _ in range(60):
            mask = rng.randrange(1, 1 << n)
            assert is_closed(p, mask) == is_closed_full(p, mask)


@settings(max_examples=40, deadline=None)
@given(rank_tables(max_n=4))
def test_every_member_rank_positive_and_full_set_rule(table_n):
    table, n = table_n
    p = Polymatroid.from_rank_table(n, table)
    fam = closed_inseparable_family(p)
    full = bitset.full_mask(n)
    assert all(m.rank >= 1 for m in fam.members)
    assert (full in fam.masks()) == is_inseparable(p, full)
