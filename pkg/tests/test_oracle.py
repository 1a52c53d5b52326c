import pytest

from tiltlab.bijectlab import cogen_class, enumerate_set, gen_class, support_tilting_census
from tiltlab.census import build_census
from tiltlab.oracle import (
    ClosureSpec,
    OracleBoundError,
    all_thick_subcategories,
    all_torsion_classes,
    all_torsionfree_classes,
    classify,
    contains_cover,
    cover_witnesses,
)
from tiltlab.quiverroots import Quiver, family_quiver

F = frozenset
S2, S1, P1 = 0, 1, 2


@pytest.fixture(scope="module")
def a2():
    return build_census(Quiver(2, ((0, 1),)), 2)


def test_a2_torsion(a2):
    assert set(all_torsion_classes(a2)) == {F(), F({S1}), F({S2}), F({P1, S1}), F({S2, S1, P1})}


def test_a2_torsionfree(a2):
    assert set(all_torsionfree_classes(a2)) == {F(), F({S1}), F({S2}), F({P1, S2}), F({S2, S1, P1})}


def test_a2_thick(a2):
    assert set(all_thick_subcategories(a2)) == {F(), F({S1}), F({S2}), F({P1}), F({S2, S1, P1})}


def test_a1():
    c = build_census(Quiver(1, ()), 5)
    for kind in ("torsion", "torsionfree", "thick"):
        assert len(classify(c, ClosureSpec(kind))) == 2


@pytest.mark.parametrize("tag", ["A3", "A3:<>", "A3:><"])
def test_a3_matches_constructions(tag):
    c = build_census(family_quiver(tag), 2)
    tilting = support_tilting_census(c)
    assert set(all_torsion_classes(c)) == {gen_class(c, t) for t in tilting}
    assert set(all_thick_subcategories(c)) == set(enumerate_set(c, 2))
    assert len(all_torsionfree_classes(c)) == 14


def test_torsion_torsionfree_complements():
    c = build_census(family_quiver("A3:<<"), 3)
    tors = all_torsion_classes(c)
    free = set(all_torsionfree_classes(c))
    for t in tors:
        perp = F(x for x in range(len(c)) if all(c.hom_table[m][x] == 0 for m in t))
        assert perp in free
    assert len(tors) == len(free)


def test_covers(a2):
    found = {
        "torsion": all_torsion_classes(a2),
        "torsionfree": all_torsionfree_classes(a2),
        "thick": all_thick_subcategories(a2),
    }
    assert all(cover_witnesses(a2, found).values())
    # the sum of all members is a summand-wise cover of any finite class
    for s in ([], [S1, S2], [S2, P1], [S2, S1, P1]):
        assert contains_cover(a2, F(s)) and contains_cover(a2, F(s), co=True)
    assert contains_cover(a2, cogen_class(a2, [P1]), co=True)


def test_bounds():
    c = build_census(family_quiver("D4"), 2)
    with pytest.raises(OracleBoundError):
        all_torsion_classes(c, bound=2)
    big = build_census(family_quiver("A5"), 2)
    with pytest.raises(OracleBoundError):
        all_thick_subcategories(big)
    with pytest.raises(ValueError):
        classify(c, ClosureSpec("wide"))
