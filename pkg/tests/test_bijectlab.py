"""Constructive maps on small quivers.  A2 census order: S2 = 0, S1 = 1, P1 = 2."""
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tiltlab.bijectlab import (
    BijectionError,
    antichains,
    cogen_class,
    cogenerates,
    delta_antichain,
    dual_index_map,
    enumerate_set,
    ext_projectives,
    factor_complement,
    filt_closure,
    gen_class,
    generates,
    injective_cogenerator,
    is_antichain,
    is_conormal,
    is_exceptional,
    is_normal,
    is_self_orthogonal,
    is_sincere,
    is_support_tilting,
    minimal_factor_complement,
    normalization,
    opposite_census,
    presentation_closure,
    projective_generator,
    simples_of_thick,
    support,
    support_rank,
    support_tilting_census,
    universal_foundation,
    verify_bijections,
)
from tiltlab.census import build_census, decompose
from tiltlab.quiverroots import Quiver, family_quiver
from tiltlab.repcore import zero_rep

S2, S1, P1 = 0, 1, 2
F = frozenset


@pytest.fixture(scope="module")
def a2():
    return build_census(Quiver(2, ((0, 1),)), 2)


def test_census_order(a2):
    assert a2.roots == [(0, 1), (1, 0), (1, 1)]


def test_support(a2):
    assert support(a2, []) == F() and support_rank(a2, []) == 0
    assert support(a2, [P1]) == F({0, 1}) and support_rank(a2, [P1]) == 2
    assert support(a2, [S2]) == F({1}) and support_rank(a2, [S2]) == 1


def test_generates(a2):
    assert generates(a2, [P1], S1)
    assert not generates(a2, [P1], S2)
    assert generates(a2, [P1], zero_rep(a2.quiver, 2))
    assert generates(a2, [P1], a2.indecs[S1])
    assert cogenerates(a2, [P1], S2)
    assert not cogenerates(a2, [P1], S1)


def test_gen_class(a2):
    assert gen_class(a2, [P1]) == F({P1, S1})
    assert gen_class(a2, [P1, S2]) == F({S2, S1, P1})
    assert gen_class(a2, []) == F()
    assert cogen_class(a2, [P1]) == F({P1, S2})


def test_antichains(a2):
    found = antichains(a2)
    assert set(found) == {F(), F({S1}), F({S2}), F({P1}), F({S1, S2})}
    assert is_exceptional(a2, [S1, S2])
    assert is_exceptional(a2, [])
    assert not is_antichain(a2, [S2, P1])


def test_filt_closure(a2):
    assert filt_closure(a2, [S1, S2]) == F({S2, S1, P1})
    assert filt_closure(a2, [P1]) == F({P1})
    assert filt_closure(a2, []) == F()


def test_simples_of_thick(a2):
    assert simples_of_thick(a2, [S2, S1, P1]) == F({S1, S2})
    assert simples_of_thick(a2, [P1]) == F({P1})
    assert simples_of_thick(a2, []) == F()


def test_projective_generator(a2):
    assert projective_generator(a2, [S2, S1, P1]) == F({P1, S2})
    assert projective_generator(a2, [P1]) == F({P1})
    assert projective_generator(a2, []) == F()


def test_presentation_closure(a2):
    assert presentation_closure(a2, F({P1, S2})) == F({S2, S1, P1})
    assert presentation_closure(a2, F({P1})) == F({P1})
    assert presentation_closure(a2, F()) == F()


def test_normal(a2):
    assert not is_normal(a2, [P1, S1])
    assert is_normal(a2, [P1, S2])
    assert is_normal(a2, [])
    assert is_conormal(a2, [P1, S1])
    assert not is_conormal(a2, [P1, S2])


def test_normalization(a2):
    assert normalization(a2, [P1, S1]) == F({P1})
    assert normalization(a2, [P1, S2]) == F({P1, S2})
    assert normalization(a2, []) == F()


def test_delta_antichain(a2):
    assert delta_antichain(a2, [P1, S2]) == F({S1, S2})
    assert delta_antichain(a2, [S1]) == F({S1})
    assert delta_antichain(a2, [P1]) == F({P1})


def test_support_tilting(a2):
    assert is_support_tilting(a2, [P1, S1])
    assert not is_support_tilting(a2, [S1, S2])
    assert is_support_tilting(a2, [])
    found = support_tilting_census(a2)
    assert set(found) == {F(), F({S1}), F({S2}), F({S1, P1}), F({S2, P1})}


def test_injective_cogenerator(a2):
    assert injective_cogenerator(a2, [0, 1]) == F({S1, P1})
    assert injective_cogenerator(a2, [1]) == F({S2})
    assert injective_cogenerator(a2, []) == F()


def test_universal_foundation(a2):
    y, seq = universal_foundation(a2, [P1])
    assert decompose(y, a2) == {S1: 1, P1: 1}
    y, seq = universal_foundation(a2, [P1, S2])
    assert decompose(y, a2) == {P1: 3}
    assert seq.is_exact()
    y, _ = universal_foundation(a2, [S2])
    assert decompose(y, a2) == {S2: 1}
    with pytest.raises(BijectionError):
        universal_foundation(a2, [S1, S2])


def test_factor_complement(a2):
    assert factor_complement(a2, [P1]) == F({P1, S1})
    assert minimal_factor_complement(a2, [P1]) == F({S1})
    assert factor_complement(a2, [P1, S2]) == F({P1, S2})
    assert factor_complement(a2, []) == F()


def test_ext_projectives(a2):
    assert ext_projectives(a2, gen_class(a2, [P1, S2])) == F({P1, S2})
    assert ext_projectives(a2, [S2]) == F({S2})
    assert ext_projectives(a2, []) == F()


def test_seven_sets_a2(a2):
    expected = {
        1: [[], [0], [1], [2], [0, 1]],
        2: [[], [0], [1], [2], [0, 1, 2]],
        3: [[], [0], [1], [2], [0, 2]],
        4: [[], [0], [1], [0, 2], [1, 2]],
        5: [[], [0], [1], [1, 2], [0, 1, 2]],
        6: [[], [0], [1], [2], [1, 2]],
        7: [[], [0], [1], [0, 2], [0, 1, 2]],
    }
    for k, sets in expected.items():
        assert set(enumerate_set(a2, k)) == {F(s) for s in sets}


def test_a1_sets():
    c = build_census(Quiver(1, ()), 3)
    for k in range(1, 8):
        assert len(enumerate_set(c, k)) == 2
    report = verify_bijections(c, oracle=True)
    assert report["passed"]
    assert all(v == 1 for v in report["sincere"].values())


def test_unknown_set(a2):
    with pytest.raises(ValueError):
        enumerate_set(a2, 8)


@pytest.mark.parametrize("tag", ["A2", "A2:<", "A3", "A3:<>", "A3:><"])
def test_verify_small(tag):
    c = build_census(family_quiver(tag), 2)
    report = verify_bijections(c, oracle=True)
    assert report["passed"], [r for r in report["roundtrips"] if not r["pass"]]
    expected = {"A2": 5, "A3": 14}[tag[:2]]
    assert set(report["counts"].values()) == {expected}
    assert report["root_poset_antichains"] == expected


@pytest.fixture(scope="module")
def d4():
    return build_census(family_quiver("D4:<><"), 3)


def test_support_tilting_properties(d4):
    n = d4.quiver.n
    for t in support_tilting_census(d4):
        assert len(t) <= n
        for i, j in itertools.product(t, repeat=2):
            assert d4.ext_table[i][j] == 0


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_normalization_order_independent(d4, data):
    s = data.draw(st.frozensets(st.integers(0, len(d4) - 1), max_size=5))
    order = data.draw(st.permutations(sorted(s)))
    nu = normalization(d4, s)
    assert normalization(d4, s, order=order) == nu
    assert is_normal(d4, nu)
    assert all(generates(d4, nu, x) for x in s - nu)


def test_normal_roundtrips(d4):
    for n in enumerate_set(d4, 3):
        assert normalization(d4, factor_complement(d4, n)) == n
        assert delta_antichain(d4, n) == simples_of_thick(d4, presentation_closure(d4, n))


def test_duality_maps(d4):
    c_op = opposite_census(d4)
    to_op = dual_index_map(d4, c_op)
    back = dual_index_map(c_op, d4)
    assert [back[to_op[i]] for i in range(len(d4))] == list(range(len(d4)))
    set3_op = {F(to_op[i] for i in s) for s in enumerate_set(d4, 3)}
    assert set3_op == set(enumerate_set(c_op, 6))
    assert all(is_self_orthogonal(c_op, s) for s in set3_op)


def test_sincere_tilting_counts():
    c = build_census(family_quiver("A2"), 2)
    assert sum(is_sincere(c, t) for t in support_tilting_census(c)) == 2
    c = build_census(family_quiver("A3:<>"), 5)
    assert sum(is_sincere(c, t) for t in support_tilting_census(c)) == 5
