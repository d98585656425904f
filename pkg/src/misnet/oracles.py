"""Brute-force oracles, kept independent of the algorithms they validate.

The orientation oracle enumerates all 2^m edge orientations of an undirected
graph (optionally only the acyclic ones) with vectorized numpy batches and
reports whether any is near-transitive. It shares no code with the
implication-class recognizer it cross-checks.
"""

from __future__ import annotations

import numpy as np

from .graphs import DiGraph


def near_transitive_orientation_exists(g: DiGraph, acyclic_only: bool = False,
                                       chunk_bits: int = 16) -> bool:
    """Does some (acyclic) orientation of g make every vertex near-transitive?"""
    if not g.undirected:
        raise ValueError("orientation oracle expects an undirected graph")
    n = g.n
    edges = g.sym_pairs()
    m = len(edges)
    if n == 0:
        return True
    # containment[t, v] = 1 iff N[t] <= N[v] in g
    closed = [g.out[v] | (1 << v) for v in range(n)]
    contain = np.zeros((n, n), dtype=np.uint8)
    for t in range(n):
        for v in range(n):
            if closed[t] & ~closed[v] == 0:
                contain[t, v] = 1
    if m == 0:
        return True  # no edges: every vertex trivially transitive
    chunk = 1 << min(chunk_bits, m)
    eye = np.eye(n, dtype=bool)
    for start in range(0, 1 << m, chunk):
        codes = np.arange(start, min(start + chunk, 1 << m), dtype=np.int64)
        sel = ((codes[:, None] >> np.arange(m)) & 1).astype(bool)  # (b, m)
        a = np.zeros((len(codes), n, n), dtype=bool)
        for e, (u, v) in enumerate(edges):
            a[:, u, v] = sel[:, e]
            a[:, v, u] = ~sel[:, e]
        au = a.astype(np.uint8)
        two_step = (au @ au) > 0
        trans = ~((two_step & ~a).any(axis=2))  # (b, n)
        covered = (trans.astype(np.uint8) @ contain) > 0
        good = covered.all(axis=1)
        if acyclic_only and good.any():
            reach = a.copy()
            for _ in range(max(1, int(np.ceil(np.log2(max(n, 2)))))):
                reach = reach | ((reach.astype(np.uint8) @ reach.astype(np.uint8)) > 0)
            cyclic = (reach & eye).any(axis=(1, 2))
            good &= ~cyclic
        if good.any():
            return True
    return False


def fixing_word_oracle(g: DiGraph, kind, w) -> bool:
    """Plain per-configuration check that w fixes the network."""
    from .networks import apply_word, is_fixed_point
    return all(is_fixed_point(g, kind, apply_word(g, kind, x, w))
               for x in range(1 << g.n))
