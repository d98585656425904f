"""Exact fixability of the kernel network on small digraphs.

The exhaustive decision tracks the whole profile (the map from every start
configuration to its current configuration) under single-vertex updates; the
kernel network is fixable iff a profile whose entries are all kernels is
reachable from the identity profile. Shortcuts run first: no kernel at all,
an undirected graph (any permutation twice fixes), or a tethered subset whose
induced kernel network is itself unfixable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .graphs import DiGraph, bits, iter_bits
from .networks import (MAX_ENUM_VERTICES, NetworkKind, Word, fixed_lane,
                       initial_lanes, run_word_lanes, update_lane)


@dataclass(frozen=True)
class KernelFixability:
    status: str  # "fixable" | "not_fixable" | "unknown"
    fixing_word: Optional[tuple[int, ...]] = None
    method: str = "profile_search"


def word_fix_fraction(g: DiGraph, kind: NetworkKind, w: Word) -> Fraction:
    """Exact fraction of start configurations that w sends to a fixed point."""
    lanes = run_word_lanes(g, kind, w)
    good = fixed_lane(g, kind, lanes)
    return Fraction(good.bit_count(), 1 << g.n)


def _has_kernel(g: DiGraph) -> bool:
    lanes = initial_lanes(g.n)
    return fixed_lane(g, NetworkKind.KERNEL, lanes) != 0


def profile_search(g: DiGraph) -> Optional[tuple[int, ...]]:
    """Shortest fixing word by breadth-first search over reachable profiles.

    Profiles are the lane tuples themselves; the search runs to closure, so
    a None answer is a proof that no fixing word exists.
    """
    n = g.n
    full = (1 << (1 << n)) - 1
    start = tuple(initial_lanes(n))
    if fixed_lane(g, NetworkKind.KERNEL, list(start)) == full:
        return ()
    seen = {start}
    q = deque([(start, ())])
    while q:
        lanes, word = q.popleft()
        for v in range(n):
            nl = list(lanes)
            update_lane(g, NetworkKind.KERNEL, nl, v, full)
            key = tuple(nl)
            if key in seen:
                continue
            seen.add(key)
            nw = word + (v,)
            if fixed_lane(g, NetworkKind.KERNEL, nl) == full:
                return nw
            q.append((key, nw))
    return None


def _tethered_unfixable(g: DiGraph, exhaustive_limit: int,
                        subset_limit: int) -> bool:
    """Tethered S with Kernel(G[S]) not fixable forces non-fixability."""
    n = g.n
    if n > subset_limit:
        return False
    for size in range(1, n):
        for comb in combinations(range(n), size):
            s = bits(comb)
            t = g.in_set(s) & ~s
            tethered = all(
                g.has_arc(u, v) and g.has_arc(v, u)
                for u in comb for v in iter_bits(t))
            if not tethered:
                continue
            sub, _ = g.induced(s)
            if kernel_fixable(sub, exhaustive_limit, subset_limit=0).status == "not_fixable":
                return True
    return False


def kernel_fixable(g: DiGraph, exhaustive_limit: int = 5,
                   subset_limit: int = 12) -> KernelFixability:
    """Decide whether the kernel network of g has a fixing word.

    Beyond the exhaustive profile-search range the answer is "unknown" unless
    a shortcut settles it; the returned fixing word, when present, is
    shortest (profile search) or an explicit doubled permutation (undirected
    shortcut).
    """
    if g.n > MAX_ENUM_VERTICES:
        raise ValueError("kernel fixability needs the 2^n sweep; n too large")
    if not _has_kernel(g):
        return KernelFixability("not_fixable", method="no_kernel")
    if g.undirected:
        w = tuple(range(g.n)) * 2
        lanes = run_word_lanes(g, NetworkKind.KERNEL, w)
        assert fixed_lane(g, NetworkKind.KERNEL, lanes) == (1 << (1 << g.n)) - 1
        return KernelFixability("fixable", w, method="undirected_double_permutation")
    if _tethered_unfixable(g, exhaustive_limit, subset_limit):
        return KernelFixability("not_fixable", method="tethered_shortcut")
    if g.n <= exhaustive_limit:
        w = profile_search(g)
        if w is None:
            return KernelFixability("not_fixable", method="profile_search")
        return KernelFixability("fixable", w, method="profile_search")
    return KernelFixability("unknown", method="limit")
