import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tiltlab.quiverroots import (
    InvalidQuiverError,
    Quiver,
    diagnose,
    euler_form,
    family_quiver,
    orientations,
    positive_roots,
    root_leq,
    root_poset_antichains,
    validate,
)

A2 = Quiver(2, ((0, 1),))


def test_validate_examples():
    validate(A2)
    assert diagnose(Quiver(2, ((0, 1), (1, 0))))["error"] == "cycle"
    assert diagnose(Quiver(2, ((0, 1), (0, 1))))["error"] == "non-Dynkin underlying graph"


@pytest.mark.parametrize(
    "q, error",
    [
        (Quiver(1, ((0, 0),)), "loop"),
        (Quiver(3, ((0, 1), (1, 2), (2, 0))), "cycle"),
        (Quiver(4, ((0, 1), (1, 2), (2, 3), (0, 3))), "non-Dynkin underlying graph"),  # affine A3
        (Quiver(5, ((0, 4), (1, 4), (2, 4), (3, 4))), "non-Dynkin underlying graph"),  # affine D4
    ],
)
def test_validate_rejects(q, error):
    with pytest.raises(InvalidQuiverError) as exc:
        validate(q)
    assert exc.value.diagnostic["error"] == error
    assert exc.value.diagnostic["witness"]


def test_json_roundtrip_and_errors():
    q = Quiver.from_json('{"vertices": 3, "arrows": [[1, 2], [3, 2]]}')
    assert q.arrows == ((0, 1), (2, 1))
    assert Quiver.from_json(q.to_json()) == q
    with pytest.raises(InvalidQuiverError):
        Quiver.from_json("{nope")
    with pytest.raises(InvalidQuiverError):
        Quiver.from_json('{"vertices": 2, "arrows": [[1, 3]]}')


def test_euler_examples():
    assert euler_form(A2, (1, 0), (0, 1)) == -1
    assert euler_form(A2, (1, 1), (1, 0)) == 1
    d4 = family_quiver("D4")
    for v in range(4):
        e = tuple(int(i == v) for i in range(4))
        assert euler_form(d4, e, e) == 1


vec = st.lists(st.integers(-3, 3), min_size=4, max_size=4)


@given(vec, vec, vec)
def test_euler_bilinear(d, d2, e):
    q = family_quiver("D4:<><")
    s = [x + y for x, y in zip(d, d2)]
    assert euler_form(q, s, e) == euler_form(q, d, e) + euler_form(q, d2, e)
    assert euler_form(q, e, s) == euler_form(q, e, d) + euler_form(q, e, d2)


def test_euler_length_mismatch():
    with pytest.raises(ValueError):
        euler_form(A2, (1,), (1, 0))


@pytest.mark.parametrize("tag, count", [("A1", 1), ("A2", 3), ("A3", 6), ("A5", 15), ("D4", 12), ("D5", 20), ("E6", 36)])
def test_root_counts(tag, count):
    assert len(positive_roots(family_quiver(tag))) == count


def test_a2_roots():
    assert set(positive_roots(A2)) == {(1, 0), (0, 1), (1, 1)}


@pytest.mark.parametrize("name", ["A3", "A4", "D4"])
def test_roots_orientation_independent(name):
    sets = {frozenset(positive_roots(family_quiver(t))) for t in orientations(name)}
    assert len(sets) == 1


def test_disconnected_quiver_roots():
    q = Quiver(3, ((0, 1),))  # A2 + A1
    assert set(positive_roots(q)) == {(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)}


def brute_antichains(roots):
    roots = list(roots)
    count = 0
    for r in range(len(roots) + 1):
        for sub in itertools.combinations(roots, r):
            if all(not root_leq(a, b) and not root_leq(b, a) for a, b in itertools.combinations(sub, 2)):
                count += 1
    return count


@pytest.mark.parametrize("tag, expected", [("A1", 2), ("A2", 5), ("A3", 14)])
def test_root_poset_antichains(tag, expected):
    roots = positive_roots(family_quiver(tag))
    assert brute_antichains(roots) == expected
    assert root_poset_antichains(roots) == expected
    assert len(root_poset_antichains(roots, listing=True)) == expected


@pytest.mark.parametrize("tag", ["A4", "D4"])
def test_root_poset_antichains_vs_brute(tag):
    roots = positive_roots(family_quiver(tag))
    assert root_poset_antichains(roots) == brute_antichains(roots)


def test_family_tags():
    assert family_quiver("A3:><").arrows == ((0, 1), (2, 1))
    assert family_quiver("A1").arrows == ()
    assert len(orientations("D4")) == 8
    for bad in ["X3", "A3:>", "A3:>?", "D3", "E9"]:
        with pytest.raises(InvalidQuiverError):
            family_quiver(bad)
