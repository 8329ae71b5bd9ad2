import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polytoric import (
    DivisorClass,
    GroupInvariants,
    Polymatroid,
    UsageError,
    canonical_class,
    class_group,
    classes_equal,
    closed_inseparable_family,
    is_gorenstein,
    matroid_unmixed_check,
)
from polytoric import bitset
from polytoric.families import rank_bounded_polymatroid, uniform_transversal

from tests.strategies import rank_tables


def family_of(p):
    return closed_inseparable_family(p)


def test_uniform_transversal_class_group():
    fam = family_of(uniform_transversal(7, 4).to_polymatroid())
    pres = class_group(fam)
    assert pres.invariants == GroupInvariants(63, 1)
    assert sorted(set(pres.relation)) == [20, 30, 34, 35]


def test_box_class_group():
    fam = family_of(Polymatroid.box((2, 4, 6)))
    assert class_group(fam).invariants == GroupInvariants(2, 2)


def test_polynomial_ring_trivial_group():
    fam = family_of(rank_bounded_polymatroid(3, 1))
    pres = class_group(fam)
    assert pres.invariants.is_trivial
    assert pres.relation == (1,)


def test_labels_follow_canonical_order():
    fam = family_of(Polymatroid.veronese((1, 1, 1), 2))
    pres = class_group(fam)
    assert pres.labels == ("P_{1}", "P_{2}", "P_{3}", "P_{1,2,3}")
    assert pres.relation == (1, 1, 1, 2)


def test_canonical_class_degree_bounded():
    for n, d in [(2, 2), (3, 2), (4, 3)]:
        fam = family_of(rank_bounded_polymatroid(n, d))
        assert canonical_class(fam).coords == (n + 1,)


def test_canonical_class_veronese():
    fam = family_of(Polymatroid.veronese((1, 1, 1), 2))
    assert canonical_class(fam).coords == (2, 2, 2, 4)


def test_canonical_class_unit_box():
    fam = family_of(Polymatroid.box((1, 1)))
    assert canonical_class(fam).coords == (2, 2)


def test_classes_equal_relation_is_zero():
    fam = family_of(Polymatroid.box((2, 4, 6)))
    pres = class_group(fam)
    rel = DivisorClass(coords=pres.relation, presentation=pres)
    assert classes_equal(rel, pres.zero())


def test_classes_equal_rejects_non_multiple():
    fam = family_of(uniform_transversal(7, 4).to_polymatroid())
    pres = class_group(fam)
    unit = DivisorClass(
        coords=(1,) + (0,) * (pres.rank_count - 1), presentation=pres
    )
    assert not classes_equal(unit, pres.zero())


def test_classes_equal_reflexive_and_shift_invariant():
    fam = family_of(Polymatroid.veronese((1, 2, 2), 4))
    pres = class_group(fam)
    x = DivisorClass(coords=tuple(range(pres.rank_count)), presentation=pres)
    assert classes_equal(x, x)
    assert classes_equal(x, x.shifted_by_relation(1))
    assert classes_equal(x.shifted_by_relation(-3), x)


def test_classes_equal_presentation_mismatch():
    a = class_group(family_of(Polymatroid.box((1, 1))))
    b = class_group(family_of(Polymatroid.box((2, 2))))
    with pytest.raises(UsageError):
        classes_equal(a.zero(), b.zero())


@given(st.integers(min_value=-5, max_value=5), st.integers(min_value=-5, max_value=5))
def test_classes_equal_is_transitive_on_multiples(k1, k2):
    fam = family_of(Polymatroid.box((2, 3)))
    pres = class_group(fam)
    base = DivisorClass(coords=(7, -1), presentation=pres)
    x = base.shifted_by_relation(k1)
    y = base.shifted_by_relation(k2)
    assert classes_equal(x, y)
    assert classes_equal(y, x)


def test_gorenstein_veronese_unit_caps():
    fam = family_of(Polymatroid.veronese((1, 1, 1), 2))
    assert is_gorenstein(fam) == 2


def test_gorenstein_box_of_threes_fails():
    fam = family_of(Polymatroid.box((3, 3)))
    assert is_gorenstein(fam) is None


def test_gorenstein_degree_bounded_divisibility():
    for n in range(2, 7):
        for d in range(1, 6):
            fam = family_of(rank_bounded_polymatroid(n, d))
            a = is_gorenstein(fam)
            if (n + 1) % d == 0:
                assert a == (n + 1) // d
            else:
                assert a is None


def test_gorenstein_matches_zero_canonical_class():
    for v in itertools.product((1, 2, 3), repeat=2):
        fam = family_of(Polymatroid.box(v))
        pres = class_group(fam)
        zero = classes_equal(canonical_class(fam, pres), pres.zero())
        assert (is_gorenstein(fam) is not None) == zero


@settings(max_examples=40, deadline=None)
@given(rank_tables(max_n=4), st.randoms(use_true_random=False))
def test_relabeling_leaves_invariants_unchanged(table_n, rnd):
    table, n = table_n
    p = Polymatroid.from_rank_table(n, table)
    inv = class_group(family_of(p)).invariants
    perm = list(range(n))
    rnd.shuffle(perm)
    permuted = {
        sum(1 << perm[i] for i in bitset.elements(mask)): r
        for mask, r in table.items()
    }
    q = Polymatroid.from_rank_table(n, permuted)
    assert class_group(family_of(q)).invariants == inv


@settings(max_examples=40, deadline=None)
@given(rank_tables(max_n=4))
def test_unit_rank_member_forces_free_group(table_n):
    table, n = table_n
    p = Polymatroid.from_rank_table(n, table)
    fam = family_of(p)
    if any(m.rank == 1 for m in fam.members):
        assert class_group(fam).invariants.torsion == 1


# -- matroid one-skeleton screen ------------------------------------------------


def test_uniform_matroid_unmixed():
    bases_u24 = [m for m in bitset.subsets(4) if bitset.card(m) == 2]
    report = matroid_unmixed_check(Polymatroid.from_matroid_bases(4, bases_u24))
    assert report.unmixed
    assert len(report.edges) == 6  # complete skeleton K_4
    assert report.sizes() == (1,)


def test_star_skeleton_is_mixed():
    # rank-2 matroid with 2,3,4 parallel: bases {1,j}, skeleton K_{1,3}
    p = Polymatroid.from_matroid_bases(4, (0b0011, 0b0101, 0b1001))
    report = matroid_unmixed_check(p)
    assert not report.unmixed
    assert report.sizes() == (1, 3)


def test_single_element_matroid_vacuously_unmixed():
    p = Polymatroid.from_matroid_bases(1, (0b1,))
    report = matroid_unmixed_check(p)
    assert report.unmixed
    assert report.edges == ()


def test_unmixed_check_needs_matroid_representation():
    with pytest.raises(UsageError):
        matroid_unmixed_check(Polymatroid.box((1, 1)))


def test_gorenstein_matroid_has_unmixed_skeleton():
    # necessary-condition screen on a couple of small matroids
    for bases in [
        [m for m in bitset.subsets(4) if bitset.card(m) == 2],  # U_{2,4}
        [m for m in bitset.subsets(3) if bitset.card(m) == 2],  # U_{2,3}
        [0b0011, 0b0101, 0b1001],  # star skeleton, mixed
    ]:
        p = Polymatroid.from_matroid_bases(4 if max(bases) > 7 else 3, bases)
        fam = family_of(p)
        if is_gorenstein(fam) is not None:
            assert matroid_unmixed_check(p).unmixed
