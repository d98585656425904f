import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from misnet.graphs import DiGraph, bit_list, bits, family, mask_from_str
from misnet.networks import NetworkKind, apply_word, batch_apply, is_fixed_point
from misnet.decide import (Certificate, dom_fixing_word, fixes_mis,
                           has_nontrivial_fixing_set,
                           has_nontrivial_nondistrict, ind_fixing_word,
                           is_constituency, is_district, is_empty_type,
                           is_complete_type, is_fixing_set, is_independent,
                           maximal_independent_sets, normalize_complete,
                           normalize_empty, prefixes_mis, suffixes_mis,
                           verify_constituency_certificate,
                           verify_district_certificate)

from _corpus import all_digraphs, all_graphs, load_connected

MIS = NetworkKind.MIS


def cfg(s):
    return mask_from_str(s)


def test_maximal_independent_sets(p3, c4):
    assert sorted(maximal_independent_sets(p3)) == sorted([cfg("010"), cfg("101")])
    assert sorted(maximal_independent_sets(c4)) == sorted([0b0101, 0b1010])
    lone = DiGraph.graph(1)
    assert list(maximal_independent_sets(lone)) == [1]


def test_is_constituency_examples(p3):
    ok, cert = is_constituency(p3, cfg("101"))  # {a, c}
    assert ok and cert.vertices == cfg("010")
    assert verify_constituency_certificate(p3, cfg("101"), cert)
    ok, cert = is_constituency(p3, cfg("110"))  # {a, b}
    assert not ok and cert.tag == "none"
    assert is_constituency(p3, 0)[0]


def test_is_district_examples(c3, c4, k1):
    ok, cert = is_district(c4, 0b1110)
    assert ok and cert.vertex == 0
    assert verify_district_certificate(c4, 0b1110, cert)
    assert not is_district(c3, 0b110)[0]
    # the empty set is a district of any graph with a vertex
    assert is_district(k1, 0)[0]
    assert is_district(c4, 0)[0]


def test_has_nontrivial_nondistrict_examples(p3, c3, c4):
    assert not has_nontrivial_nondistrict(c4)[0]
    assert has_nontrivial_nondistrict(c3)[0]
    ok, cert = has_nontrivial_nondistrict(p3)
    assert ok and cert.vertex == 1  # skipping b works
    # no-certificate carries one dominating independent set per vertex
    ok, cert = has_nontrivial_nondistrict(c4)
    assert not ok and len(cert.collection) == 4
    for v, i in cert.collection:
        assert is_independent(c4, i)
        assert c4.out[v] & ~c4.out_set(i) == 0


def test_prefix_suffix_examples(p3, c4, k1):
    assert prefixes_mis(p3, (1,))
    assert not prefixes_mis(p3, (0,))
    assert prefixes_mis(p3, (0, 2, 1))
    ok, _ = suffixes_mis(p3, (0, 2, 1))
    assert ok
    ok, cert = suffixes_mis(c4, (1, 2, 3))
    assert not ok and cert.vertex == 0
    ok, _ = suffixes_mis(k1, ())
    assert not ok


def test_fixes_mis_examples(p3):
    ok, cert = fixes_mis(p3, (0, 1, 2))
    assert not ok and cert.config == cfg("011")
    assert fixes_mis(p3, (0, 2, 1))[0]
    assert fixes_mis(p3, (0, 1, 2, 0, 1, 2))[0]
    assert fixes_mis(p3, (0, 2, 1, 0, 2, 1))[0]


def test_fixing_sets(c4):
    k3 = family("complete", 3)
    for pair in itertools.combinations(range(3), 2):
        assert is_fixing_set(k3, bits(pair))[0]
    for triple in itertools.combinations(range(4), 3):
        ok, _ = is_fixing_set(c4, bits(triple))
        assert not ok
    assert is_fixing_set(c4, c4.full_mask)[0]
    ok, cert = is_fixing_set(c4, 0b0011)
    assert not ok and cert.tag == "vertex_cover_gap"


def test_has_nontrivial_fixing_set(c4, k1):
    assert not has_nontrivial_fixing_set(c4)[0]
    assert has_nontrivial_fixing_set(family("complete", 3))[0]
    assert not has_nontrivial_fixing_set(k1)[0]


def test_ind_dom_fixing_words(p3):
    k2 = DiGraph.graph(2, [(0, 1)])
    assert ind_fixing_word(k2, (0,))
    arc = DiGraph(2, [(0, 1)])
    assert not ind_fixing_word(arc, (0,))
    assert ind_fixing_word(arc, (1,))
    k4 = family("complete", 4)
    assert dom_fixing_word(k4, (2,))
    assert not dom_fixing_word(p3, (1,))
    assert dom_fixing_word(p3, (0, 1, 2))


def test_fixing_word_characterizations_vs_dynamics():
    """prefix <=> all endpoints independent, suffix <=> independent starts
    end maximal, fixes <=> all ends maximal; exhaustively on small graphs."""
    rng = random.Random(17)
    for n in range(1, 5):
        for g in all_graphs(n):
            if not g.is_connected():
                continue
            words = [tuple(p) for p in itertools.permutations(range(n))]
            words += [tuple(rng.randrange(n) for _ in range(rng.randint(0, n + 2)))
                      for _ in range(25)]
            for w in words:
                table = batch_apply(g, MIS, w)
                all_ind = all(is_independent(g, y) for y in table)
                ind_to_max = all(is_fixed_point(g, MIS, table[x])
                                 for x in range(1 << n) if is_independent(g, x))
                all_max = all(is_fixed_point(g, MIS, y) for y in table)
                assert prefixes_mis(g, w) == all_ind
                assert suffixes_mis(g, w)[0] == ind_to_max
                assert fixes_mis(g, w)[0] == all_max


def test_fixing_set_equals_double_word_property():
    rng = random.Random(23)
    for n in range(2, 5):
        for g in all_graphs(n):
            for s in range(1, 1 << n):
                ok, _ = is_fixing_set(g, s)
                perm = bit_list(s)
                rng.shuffle(perm)
                fixes, _ = fixes_mis(g, tuple(perm) * 2)
                assert ok == fixes


def test_ind_dom_fixing_vs_dynamics_exhaustive():
    rng = random.Random(29)
    for n in range(1, 4):
        for g in all_digraphs(n):
            words = [tuple(p) for p in itertools.permutations(range(n))]
            words += [tuple(rng.randrange(n) for _ in range(rng.randint(0, n + 1)))
                      for _ in range(8)]
            for w in words:
                for kind, decide in ((NetworkKind.INDEPENDENT, ind_fixing_word),
                                     (NetworkKind.DOMINATING, dom_fixing_word)):
                    table = batch_apply(g, kind, w)
                    truth = all(is_fixed_point(g, kind, y) for y in table)
                    assert decide(g, w) == truth, (n, g, kind, w)


@given(st.integers(2, 6), st.integers(0, 2 ** 15 - 1), st.data())
@settings(max_examples=100, deadline=None)
def test_constituency_monotone_and_edge_independent(n, code, data):
    pairs = list(itertools.combinations(range(n), 2))
    edges = [pairs[i] for i in range(len(pairs)) if code >> i & 1]
    g = DiGraph.graph(n, edges)
    s = data.draw(st.integers(0, (1 << n) - 1))
    ok, _ = is_constituency(g, s)
    if ok and s:
        sub = data.draw(st.integers(0, (1 << n) - 1)) & s
        assert is_constituency(g, sub)[0]
    # edges inside S are irrelevant
    inner = [(u, v) for u, v in pairs if s >> u & 1 and s >> v & 1]
    kept = [e for e in edges if e not in inner]
    g2 = DiGraph.graph(n, kept)
    assert is_constituency(g2, s)[0] == ok


@given(st.integers(2, 5), st.integers(0, 2 ** 10 - 1), st.data())
@settings(max_examples=60, deadline=None)
def test_district_monotone(n, code, data):
    pairs = list(itertools.combinations(range(n), 2))
    g = DiGraph.graph(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])
    t = data.draw(st.integers(0, (1 << n) - 1))
    if is_district(g, t)[0]:
        assert is_district(g, data.draw(st.integers(0, (1 << n) - 1)) & t)[0]
    else:
        assert not is_district(g, t | data.draw(st.integers(0, (1 << n) - 1)))[0]


def test_normalizers_preserve_answer():
    for n in range(1, 5):
        for g in all_graphs(n):
            for s in range(1 << n):
                want, _ = is_constituency(g, s)
                ge, se = normalize_empty(g, s)
                gc, sc = normalize_complete(g, s)
                assert is_empty_type(ge, se)
                assert is_complete_type(gc, sc)
                assert is_constituency(ge, se)[0] == want
                assert is_constituency(gc, sc)[0] == want


def test_p3_ab_normalization_case(p3):
    # {a,b} on the path is a non-constituency and must stay one
    s = cfg("110")
    assert not is_constituency(p3, s)[0]
    ge, se = normalize_complete(p3, s)
    assert not is_constituency(ge, se)[0]
