from fractions import Fraction

import pytest

from misnet.graphs import DiGraph, family
from misnet.networks import (NetworkKind, apply_word, batch_apply,
                             fixed_points, is_fixed_point)
from misnet.kernelfix import kernel_fixable, profile_search, word_fix_fraction

from _corpus import all_digraphs, digraph_corpus

KER = NetworkKind.KERNEL


def tethered_c3_on_k2() -> DiGraph:
    """A directed triangle tethered to one endpoint of an undirected edge."""
    arcs = [(0, 1), (1, 2), (2, 0)]
    for v in (0, 1, 2):
        arcs += [(3, v), (v, 3)]
    arcs += [(3, 4), (4, 3)]
    return DiGraph(5, arcs)


def test_directed_odd_cycles_not_fixable():
    for k in (3, 5):
        res = kernel_fixable(family("directed_cycle", k))
        assert res.status == "not_fixable" and res.method == "no_kernel"


def test_undirected_always_fixable(p3, c4):
    for g in (p3, c4, family("complete", 4)):
        res = kernel_fixable(g)
        assert res.status == "fixable"
        assert res.fixing_word == tuple(range(g.n)) * 2


def test_tethered_instance_has_kernel_but_unfixable():
    g = tethered_c3_on_k2()
    assert fixed_points(g, KER) == [0b01000]  # {3} is the unique kernel
    res = kernel_fixable(g)
    assert res.status == "not_fixable" and res.method == "tethered_shortcut"
    # ground truth by the profile search itself
    assert profile_search(g) is None


def test_profile_search_returns_shortest_verified_word():
    # an oriented path fixes quickly; verify the word it returns
    g = DiGraph(3, [(0, 1), (1, 2)])
    res = kernel_fixable(g)
    assert res.status == "fixable"
    for x in range(8):
        assert is_fixed_point(g, KER, apply_word(g, KER, x, res.fixing_word))


def test_kernel_fixable_vs_profile_search_corpus():
    mismatch = 0
    for g in digraph_corpus(120, seed=7):
        res = kernel_fixable(g)
        truth = profile_search(g)
        if res.status == "fixable":
            ok = truth is not None
        elif res.status == "not_fixable":
            ok = truth is None
        else:
            ok = False
        if not ok:
            mismatch += 1
    assert mismatch == 0


def test_profile_words_verify_on_small_corpus():
    for g in all_digraphs(2) + all_digraphs(3):
        w = profile_search(g)
        if w is not None:
            table = batch_apply(g, KER, w)
            assert all(is_fixed_point(g, KER, y) for y in table)


def test_word_fix_fraction(p3, dc3):
    assert word_fix_fraction(p3, NetworkKind.MIS, (0, 2, 1)) == 1
    # both 011 and 111 fail under abc (endpoint {c} is not maximal)
    assert word_fix_fraction(p3, NetworkKind.MIS, (0, 1, 2)) == Fraction(3, 4)
    failures = [x for x in range(8)
                if not is_fixed_point(p3, NetworkKind.MIS,
                                      apply_word(p3, NetworkKind.MIS, x, (0, 1, 2)))]
    assert failures == [0b110, 0b111]
    assert word_fix_fraction(dc3, KER, (0, 1, 2)) == 0


def test_unknown_beyond_exhaustive_range():
    # oriented 6-cycle with a chord pattern that defeats the shortcuts
    g = DiGraph(6, [(i, (i + 1) % 6) for i in range(6)])
    res = kernel_fixable(g)
    assert res.status in ("fixable", "not_fixable", "unknown")
    res5 = kernel_fixable(g, exhaustive_limit=6)
    assert res5.status in ("fixable", "not_fixable")
