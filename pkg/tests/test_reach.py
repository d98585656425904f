import itertools
import random

import pytest

from misnet.graphs import DiGraph, family, mask_from_str
from misnet.networks import NetworkKind
from misnet.reach import (bfs_reachability_oracle, dom_reachable,
                          ind_reachable, mis_reach_some_fixed_point,
                          mis_reachable, mis_universal, verify_geodesic)
from misnet.networks import fixed_points

from _corpus import all_digraphs, all_graphs, digraph_corpus

MIS = NetworkKind.MIS


def cfg(s):
    return mask_from_str(s)


def test_mis_reachable_examples(p3):
    assert mis_reachable(p3, cfg("011"), cfg("101")).reachable
    v = mis_reachable(p3, cfg("101"), cfg("101"))
    assert v.reachable and v.geodesic == ()
    v = mis_reachable(p3, cfg("010"), cfg("000"))
    assert not v.reachable and v.violated_condition == "component_emptied"
    v = mis_reachable(p3, cfg("000"), cfg("110"))
    assert not v.reachable and v.violated_condition == "edge_created"


def test_mis_reachable_requires_undirected(dc3):
    with pytest.raises(ValueError):
        mis_reachable(dc3, 0, 0)


def test_mis_universal(p3):
    assert mis_universal(p3, 0) == (True, None)
    assert mis_universal(p3, p3.full_mask)[0]
    ok, witness = mis_universal(p3, cfg("100"))
    assert not ok and witness == cfg("010")


def test_mis_reach_some_fixed_point(p3):
    y, w = mis_reach_some_fixed_point(p3, cfg("011"))
    assert y == cfg("010") and w == (2,)
    y, w = mis_reach_some_fixed_point(p3, 0)
    assert y == cfg("101") and w == (0, 2)
    y, w = mis_reach_some_fixed_point(p3, cfg("101"))
    assert y == cfg("101") and w == ()


def test_ind_dom_examples(dc3):
    assert ind_reachable(dc3, 0b111, 0b001).reachable
    v = ind_reachable(dc3, 0b001, 0b011)
    assert not v.reachable and v.violated_condition == "not_monotone"
    assert ind_reachable(dc3, 0, 0).reachable

    k2 = DiGraph.graph(2, [(0, 1)])
    v = dom_reachable(k2, 0b01, 0b11)
    assert not v.reachable and v.violated_condition == "a_set_violated"
    assert dom_reachable(k2, 0b01, 0b01).reachable
    v = dom_reachable(k2, 0, 0b11)
    assert not v.reachable and v.violated_condition == "b_set_cyclic"
    # from the all-zero config, an acyclic support can be raised
    assert dom_reachable(dc3, 0, 0b011).reachable


def test_mis_reachable_vs_oracle_exhaustive_small():
    for n in range(1, 5):
        for g in all_graphs(n):
            for x in range(1 << n):
                reach = bfs_reachability_oracle(g, MIS, x)
                for y in range(1 << n):
                    v = mis_reachable(g, x, y)
                    assert v.reachable == (y in reach), (n, g.sym_pairs(), x, y)
                    if v.reachable:
                        assert verify_geodesic(g, MIS, x, y, v.geodesic)


def test_ind_dom_vs_oracle_exhaustive_small():
    for n in range(1, 4):
        for g in all_digraphs(n):
            for x in range(1 << n):
                ro_i = bfs_reachability_oracle(g, NetworkKind.INDEPENDENT, x)
                ro_d = bfs_reachability_oracle(g, NetworkKind.DOMINATING, x)
                for y in range(1 << n):
                    vi = ind_reachable(g, x, y)
                    assert vi.reachable == (y in ro_i)
                    if vi.reachable:
                        assert verify_geodesic(g, NetworkKind.INDEPENDENT, x, y, vi.geodesic)
                    vd = dom_reachable(g, x, y)
                    assert vd.reachable == (y in ro_d)
                    if vd.reachable:
                        assert verify_geodesic(g, NetworkKind.DOMINATING, x, y, vd.geodesic)


def test_ind_dom_vs_oracle_random_n5_n6():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.choice([5, 6])
        arcs = [(u, v) for u in range(n) for v in range(n)
                if u != v and rng.random() < 0.35]
        g = DiGraph(n, arcs)
        for _ in range(40):
            x = rng.randrange(1 << n)
            y = rng.randrange(1 << n)
            oi = bfs_reachability_oracle(g, NetworkKind.INDEPENDENT, x)
            od = bfs_reachability_oracle(g, NetworkKind.DOMINATING, x)
            assert ind_reachable(g, x, y).reachable == (y in oi)
            assert dom_reachable(g, x, y).reachable == (y in od)


def test_universal_equals_all_fixed_points_reachable():
    from _corpus import load_connected
    pool = [g for n in range(1, 5) for g in all_graphs(n)] + load_connected(5)
    for g in pool:
        fps = set(fixed_points(g, MIS))
        for x in range(1 << g.n):
            reach = bfs_reachability_oracle(g, MIS, x)
            assert mis_universal(g, x)[0] == fps.issubset(reach)


def test_oracle_guard():
    g = DiGraph.graph(13, [(i, i + 1) for i in range(12)])
    with pytest.raises(ValueError):
        bfs_reachability_oracle(g, MIS, 0)
