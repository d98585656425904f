import itertools
import random

import pytest

from misnet.graphs import DiGraph, family, mask_from_str, mask_to_str
from misnet.networks import (NetworkKind, apply_word, batch_apply,
                             fixed_points, is_fixed_point, is_permutation,
                             subword, update_vertex, visited)
from misnet.reach import bfs_reachability_oracle

MIS = NetworkKind.MIS
KER = NetworkKind.KERNEL
IND = NetworkKind.INDEPENDENT
DOM = NetworkKind.DOMINATING


def cfg(s: str) -> int:
    return mask_from_str(s)


def test_update_vertex_examples(p3):
    assert update_vertex(p3, MIS, cfg("010"), 0) == cfg("010")
    assert update_vertex(p3, MIS, cfg("000"), 1) == cfg("010")
    k1 = family("complete", 1)
    assert update_vertex(k1, MIS, 0, 0) == 1


def test_update_vertex_empty_in_neighbourhood_conventions():
    lone = DiGraph(1)
    assert update_vertex(lone, MIS, 0, 0) == 1
    assert update_vertex(lone, KER, 0, 0) == 1
    assert update_vertex(lone, IND, 0, 0) == 0
    assert update_vertex(lone, IND, 1, 0) == 1
    assert update_vertex(lone, DOM, 0, 0) == 1


def test_apply_word_example_p3(p3):
    # the path example: starting from {b,c}, abc ends at {c}; acb keeps b
    assert apply_word(p3, MIS, cfg("011"), (0, 1, 2)) == cfg("001")
    assert apply_word(p3, MIS, cfg("011"), (0, 2, 1)) == cfg("010")
    assert apply_word(p3, MIS, cfg("101"), ()) == cfg("101")
    end, traj = apply_word(p3, MIS, cfg("011"), (0, 1, 2), record=True)
    assert traj == [cfg("011"), cfg("011"), cfg("001"), cfg("001")]
    assert end == traj[-1]


def test_word_helpers():
    assert visited((2, 0, 2)) == 0b101
    assert subword((0, 1, 2, 1), 0b010) == (1, 1)
    assert is_permutation(3, (2, 0, 1))
    assert not is_permutation(3, (2, 0, 2))


def test_is_fixed_point(p3, dc3):
    assert is_fixed_point(p3, MIS, cfg("101"))
    assert is_fixed_point(p3, MIS, cfg("010"))
    assert not is_fixed_point(p3, MIS, cfg("000"))
    assert not any(is_fixed_point(dc3, KER, x) for x in range(8))


def test_fixed_points_examples(p3, dc3):
    assert sorted(fixed_points(p3, MIS)) == sorted([cfg("010"), cfg("101")])
    assert fixed_points(dc3, KER) == []
    # independent-network fixed points are exactly the independent sets
    ind = fixed_points(p3, IND)
    assert 0 in ind
    expect = [x for x in range(8)
              if all(not (x >> u & 1 and x >> v & 1) for u, v in p3.sym_pairs())]
    assert sorted(ind) == expect
    dom = fixed_points(p3, DOM)
    assert p3.full_mask in dom and 0 not in dom


def test_batch_apply_matches_scalar():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 6)
        if rng.random() < 0.5:
            edges = [e for e in itertools.combinations(range(n), 2)
                     if rng.random() < 0.5]
            g = DiGraph.graph(n, edges)
        else:
            arcs = [(u, v) for u in range(n) for v in range(n)
                    if u != v and rng.random() < 0.4]
            g = DiGraph(n, arcs)
        kind = rng.choice(list(NetworkKind))
        w = tuple(rng.randrange(n) for _ in range(rng.randint(0, n + 2)))
        table = batch_apply(g, kind, w)
        for x in range(1 << n):
            assert table[x] == apply_word(g, kind, x, w)


def test_batch_apply_specifics(p3):
    table = batch_apply(p3, MIS, (0, 1, 2))
    assert table[cfg("011")] == cfg("001")
    assert batch_apply(p3, MIS, ()) == list(range(8))


def test_batch_apply_size_guard():
    g = DiGraph.graph(25, [(i, i + 1) for i in range(24)])
    with pytest.raises(ValueError, match="n <= 24"):
        batch_apply(g, MIS, (0,))


def test_mis_update_pair_commutation():
    rng = random.Random(9)
    for _ in range(150):
        n = rng.randint(2, 6)
        edges = [e for e in itertools.combinations(range(n), 2)
                 if rng.random() < 0.5]
        g = DiGraph.graph(n, edges)
        u, v = rng.sample(range(n), 2)
        if g.has_arc(u, v):
            continue
        for x in range(1 << n):
            assert apply_word(g, MIS, x, (u, v)) == apply_word(g, MIS, x, (v, u))
            assert apply_word(g, MIS, x, (v, v)) == apply_word(g, MIS, x, (v,))


def test_double_permutation_fixes_small():
    # sampled here; the full n <= 5 sweep lives in the acceptance suite
    rng = random.Random(2)
    for _ in range(60):
        n = rng.randint(1, 6)
        edges = [e for e in itertools.combinations(range(n), 2)
                 if rng.random() < 0.5]
        g = DiGraph.graph(n, edges)
        w = list(range(n))
        rng.shuffle(w)
        for x in range(1 << n):
            assert is_fixed_point(g, MIS, apply_word(g, MIS, x, w + w))


def test_monotone_trajectories():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randint(1, 5)
        arcs = [(u, v) for u in range(n) for v in range(n)
                if u != v and rng.random() < 0.4]
        g = DiGraph(n, arcs)
        x = rng.randrange(1 << n)
        w = [rng.randrange(n) for _ in range(2 * n)]
        _, traj_i = apply_word(g, IND, x, w, record=True)
        for a, b in zip(traj_i, traj_i[1:]):
            assert b & ~a == 0  # never increases
        _, traj_d = apply_word(g, DOM, x, w, record=True)
        for a, b in zip(traj_d, traj_d[1:]):
            assert a & ~b == 0  # never decreases


def test_kernel_zero_avoidance_exhaustive():
    # from x != 0 the kernel network can never reach the all-zero config;
    # exhaustive over every digraph with n <= 4 via a can-reach-zero fixpoint
    for n in range(1, 5):
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
        for code in range(1 << len(pairs)):
            g = DiGraph(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])
            reaches_zero = {0}
            changed = True
            while changed:
                changed = False
                for x in range(1 << n):
                    if x in reaches_zero:
                        continue
                    if any(update_vertex(g, KER, x, v) in reaches_zero
                           for v in range(n)):
                        reaches_zero.add(x)
                        changed = True
            assert reaches_zero == {0}


def test_mask_str_roundtrip():
    assert mask_to_str(cfg("0110"), 4) == "0110"
