import random

import pytest

from polytoric import Polymatroid, UsageError, validate
from polytoric import bitset
from polytoric.sampling import corrupt_rank_table, random_rank_table


def test_sampled_tables_are_valid():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 5)
        table = random_rank_table(n, rng)
        assert validate(Polymatroid.from_rank_table(n, table)).ok


def test_sampler_covers_all_subsets():
    rng = random.Random(1)
    table = random_rank_table(4, rng)
    assert set(table) == set(bitset.subsets(4))


def test_monotonicity_corruption_detected():
    rng = random.Random(13)
    for _ in range(20):
        table = random_rank_table(3, rng)
        bad, fault = corrupt_rank_table(table, 3, rng, kind="monotonicity")
        report = validate(Polymatroid.from_rank_table(3, bad))
        assert not report.ok
        planted = fault["subsets"][0]
        assert any(
            v.kind == "monotonicity" and v.subsets[0] == planted
            for v in report.violations
        )


def test_submodularity_corruption_detected():
    rng = random.Random(17)
    for _ in range(20):
        table = random_rank_table(4, rng)
        bad, fault = corrupt_rank_table(table, 4, rng, kind="submodularity")
        report = validate(Polymatroid.from_rank_table(4, bad))
        assert not report.ok
        a, b = sorted(fault["subsets"])
        assert any(
            v.kind == "submodularity" and v.subsets == (a, b)
            for v in report.violations
        )


def test_unknown_corruption_kind():
    rng = random.Random(0)
    with pytest.raises(UsageError):
        corrupt_rank_table(random_rank_table(2, rng), 2, rng, kind="nope")
