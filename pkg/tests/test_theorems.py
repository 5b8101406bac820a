import pytest

from wedge_crystal.cartan import from_label
from wedge_crystal import crystal
from wedge_crystal.theorems import (decomposition_report, h_diamond,
                                    isomorphic_components, partition_ids,
                                    verify_classical_branching,
                                    verify_component_partition,
                                    verify_delta_shift,
                                    verify_involution_commutes,
                                    verify_multiplicities, verify_sigma_range,
                                    verify_sigma_characterization,
                                    verify_spin_decomposition)

DOUBLED = ("C1", "A2even", "A2evenDagger", "A2odd")


def test_h_diamond_examples():
    assert h_diamond(from_label("C1", 2)) == [(0, 0), (0, 1), (0, 2), (1, 0),
                                              (1, 1), (2, 0)]
    assert h_diamond(from_label("A2even", 2)) == [(0, 2), (1, 1), (2, 0)]
    assert h_diamond(from_label("A2odd", 2)) == [(0, 1), (0, 2), (1, 1), (2, 0)]
    assert h_diamond(from_label("A2evenDagger", 3)) == [(0, 0), (1, 0), (2, 0),
                                                        (3, 0)]
    with pytest.raises(ValueError):
        h_diamond(from_label("B1", 3))


def test_component_partition_counts():
    r = verify_component_partition(from_label("C1", 2))
    assert r.passed
    assert r.stats["components"] == 6
    assert sum(r.stats["sizes"].values()) == 16


@pytest.mark.parametrize("token", DOUBLED)
@pytest.mark.parametrize("n", (2, 3))
def test_component_partition(token, n):
    assert verify_component_partition(from_label(token, n)).passed


def test_same_component_for_the_shared_pair():
    t = from_label("A2odd", 3)
    uf, _ = partition_ids(t)
    for k in (1, 2):
        assert uf.find(crystal.v_kl(t, k, 3 - k).id) == \
            uf.find(crystal.v_kl(t, k, 2 - k).id)


@pytest.mark.parametrize("token", DOUBLED)
@pytest.mark.parametrize("n", (2, 3))
def test_classical_branching(token, n):
    assert verify_classical_branching(from_label(token, n)).passed


def test_branching_shapes():
    # one classical summand per component for the all-double labeling
    t = from_label("C1", 3)
    rep = decomposition_report(t)
    for row in rep.rows:
        k = row.key[0]
        assert row.branching == [k]
    # staircase for the mixed labeling
    t = from_label("A2even", 3)
    rep = decomposition_report(t)
    for row in rep.rows:
        k = row.key[0]
        assert row.branching == list(range(k + 1))
    # doubled ladder for the fork labeling, simple ladder at the top index
    t = from_label("A2odd", 3)
    rep = decomposition_report(t)
    by_key = {row.key: row for row in rep.rows}
    assert by_key[(2, 1)].branching == [0, 0, 2, 2]
    assert by_key[(3, 0)].branching == [1, 3]
    assert by_key[(1, 2)].branching == [1, 1]


@pytest.mark.parametrize("n", (2, 3))
def test_sigma_range_and_involution(n):
    t = from_label("A2odd", n)
    assert verify_sigma_range(t).passed
    assert verify_involution_commutes(t).passed


@pytest.mark.parametrize("token", DOUBLED)
@pytest.mark.parametrize("n", (2, 3))
def test_sigma_characterization(token, n):
    assert verify_sigma_characterization(from_label(token, n)).passed


def test_sigma_level_sets_are_components():
    # every component of the all-double labeling is a level set
    t = from_label("C1", 3)
    from wedge_crystal import bicrystal

    for (k, l) in h_diamond(t):
        comp = {el.id for el in
                crystal.component(t, crystal.v_kl(t, k, l)).vertices}
        level = {el.id for el in crystal.all_elements(t)
                 if bicrystal.sigma(el) == (3 - k - l, l)}
        assert comp == level


def test_component_isomorphism_between_level_sets():
    # same k, different l: isomorphic colored digraphs
    t = from_label("C1", 3)
    g1 = crystal.component(t, crystal.v_kl(t, 1, 0))
    g2 = crystal.component(t, crystal.v_kl(t, 1, 2))
    from wedge_crystal.cartan import fundamental_weight_cl

    target = fundamental_weight_cl(t, 1)
    r1 = [v for v in g1.vertices if g1.weights[v.id] == target]
    r2 = [v for v in g2.vertices if g2.weights[v.id] == target]
    assert len(r1) == len(r2) == 1
    assert isomorphic_components(g1, g2, r1[0].id, r2[0].id)
    g3 = crystal.component(t, crystal.v_kl(t, 2, 0))
    r3 = [v for v in g3.vertices
          if g3.weights[v.id] == fundamental_weight_cl(t, 2)]
    assert not isomorphic_components(g1, g3, r1[0].id, r3[0].id)


@pytest.mark.parametrize("token", DOUBLED)
@pytest.mark.parametrize("n", (2, 3))
def test_multiplicities(token, n):
    r = verify_multiplicities(from_label(token, n))
    assert r.passed
    if token == "C1":
        assert r.stats["multiplicities"][1] == n
    if token == "A2odd":
        assert r.stats["multiplicities"][0] == 2


@pytest.mark.parametrize("token", ("B1", "D1", "D2"))
@pytest.mark.parametrize("n", (2, 3, 4, 5))
def test_spin_decomposition(token, n):
    r = verify_spin_decomposition(from_label(token, n))
    assert r.passed
    assert r.stats["components"] == (2 if token == "D1" else 1)


@pytest.mark.parametrize("n", (2, 3, 4))
def test_delta_shift(n):
    assert verify_delta_shift(from_label("A2odd", n)).passed


def test_report_sizes_sum():
    for token in DOUBLED:
        t = from_label(token, 3)
        rep = decomposition_report(t)
        assert rep.total == 4 ** 3
    rep = decomposition_report(from_label("D1", 3))
    assert rep.total == 2 ** 3
    assert [row.size for row in rep.rows] == [4, 4]


def test_suite_type_guards():
    with pytest.raises(ValueError):
        verify_component_partition(from_label("B1", 3))
    with pytest.raises(ValueError):
        verify_spin_decomposition(from_label("C1", 3))
    with pytest.raises(ValueError):
        verify_sigma_range(from_label("C1", 3))
    with pytest.raises(ValueError):
        verify_delta_shift(from_label("A2even", 3))
