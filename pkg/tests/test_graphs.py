import json
import random

import pytest

from brauer_blocks.errors import NotAdjacent, WrongOrbit
from brauer_blocks.geometry import Reflection, apply_word, is_regular, shift
from brauer_blocks.graphs import (
    alcove_transport, check_isomorphism, edge_colour_key, mbs_graph, orbit_graph,
    par_e_cover_oracle, par_e_graph, par_e_successors, phi, phi_inverse, reg_graph_pair,
    regularise, strict_even_partitions, transpose_map, verify_iso,
)
from brauer_blocks.partitions import Partition, partitions_up_to

P = Partition


@pytest.fixture(scope="module")
def graphs16():
    return mbs_graph((), 1, 16), orbit_graph((), 1, 16)


def test_mbs_small():
    g = mbs_graph((), 1, 0)
    assert g.vertices == [()] and not g.edges
    assert ((), (2, 2)) in mbs_graph((), 1, 8).edge_pairs()


def test_mbs_out_degree_of_empty(graphs16):
    mbs, _ = graphs16
    assert mbs.out_neighbours(P()) == [(2, 2)]


def test_orbit_graph_of_zero(graphs16):
    _, orb = graphs16
    assert len(orb.vertices) == 18
    assert orb.root == ()
    assert orb.out_neighbours(P()) == [(2, 2)]
    assert orb.is_acyclic()
    assert orbit_graph((), 1, 0).vertices == [()]


def test_graphs_graded_and_acyclic(graphs16):
    for g in graphs16:
        assert g.is_acyclic()
        assert all(g.grade[s] < g.grade[t] for s, t, _ in g.edges)
        assert g.sources() == [g.root]


def test_isomorphisms(graphs16):
    mbs, orb = graphs16
    assert verify_iso(mbs, orb, transpose_map(mbs))
    iso = check_isomorphism(mbs, orb)
    assert iso is not None and verify_iso(mbs, orb, iso.vertex_map)
    same = check_isomorphism(orb, orb)
    assert same is not None


def test_isomorphism_rejects_different_graphs(graphs16):
    _, orb = graphs16
    assert check_isomorphism(orb, orbit_graph((), 1, 12)) is None


def test_orbit_to_par_e(graphs16):
    _, orb = graphs16
    image = {v: alcove_transport(shift(v, 1)) for v in orb.vertices}
    assert len(set(image.values())) == len(image)
    top = max(p.degree for p in image.values())
    pe = par_e_graph(top).induced(image.values())
    assert verify_iso(orb, pe, image)
    assert check_isomorphism(orb, pe) is not None


def test_edge_colours(graphs16):
    _, orb = graphs16
    cols = {(s, t): c for s, t, c in orb.edges}
    assert cols[(P(), P((2, 2)))] != cols[(P((2, 2)), P((3, 2, 1)))]
    x, y = shift((), 1), shift((2, 2), 1)
    assert edge_colour_key(x, y) == edge_colour_key(y, x)
    with pytest.raises(NotAdjacent):
        edge_colour_key(shift((), 1), shift((3, 2, 1), 1))


def test_edge_colour_invariance():
    rng = random.Random(7)
    _, orb = mbs_graph((), 1, 4), orbit_graph((), 1, 16)
    checked = 0
    for s, t, c in sorted(orb.edges, key=str):
        x, y = shift(s, 1, 8), shift(t, 1, 8)
        for _ in range(30):
            i, j = rng.sample(range(1, 9), 2)
            r = Reflection.minus(i, j) if rng.random() < 0.5 else Reflection.plain(i, j)
            wx, wy = apply_word([r], x), apply_word([r], y)
            if wx.is_dominant() and wy.is_dominant():
                assert edge_colour_key(wx, wy) == c
                checked += 1
    assert checked > 0


def test_regularise_examples():
    assert regularise((9, 8, 7, 0, -1, -2, -7, -9, -11)) == (8, 0, -1, -2, -11)
    assert regularise((5, 3, -1)) == (5, 3, -1)
    r = regularise(shift((), -2))
    assert r.extend(3).halved() == (0, -2, -3)


def test_par_e_rules():
    assert (2, 1) in par_e_successors(())
    assert (3, 1) in par_e_successors((2, 1))
    assert (4, 3, 2, 1) in par_e_successors((4, 3))
    assert (3, 2, 2, 1) not in par_e_successors((3, 2))
    assert all(len(p) % 2 == 0 for p in strict_even_partitions(12))


def test_par_e_matches_cover_oracle():
    assert par_e_graph(16).edge_pairs() == par_e_cover_oracle(16)


def test_phi():
    assert phi((6, 5, 3, 1, -2, -4, -7, -8)) == (6, 5, 3, 1)
    assert phi(shift((), 2)) == ()
    assert phi((2, 1, -3, -4)) == (2, 1)
    with pytest.raises(WrongOrbit):
        phi((3, -1, -2))
    with pytest.raises(WrongOrbit):
        phi(shift((), 1))
    for p in strict_even_partitions(10):
        assert phi(phi_inverse(p)) == p


@pytest.mark.parametrize("delta", [-2, 1, 2])
def test_reg_invariance_sample(delta):
    rng = random.Random(delta)
    singular = [p for p in partitions_up_to(6) if not is_regular(p, delta)]
    for w in rng.sample(singular, 3):
        g, h, mapping = reg_graph_pair(w, delta, 8)
        assert verify_iso(g, h, mapping)


def test_serialisation_is_deterministic(graphs16):
    _, orb = graphs16
    assert orb.to_dot() == orbit_graph((), 1, 16).to_dot()
    d = json.loads(orb.to_json())
    assert d["root"] == "0" and len(d["vertices"]) == 18
    assert len(d["edges"]) == len(orb.edges)
    assert orb.to_dot().startswith("digraph G {")
