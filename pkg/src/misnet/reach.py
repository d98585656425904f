"""Exact reachability for the MIS, independent, and dominating networks.

Each characterization returns a verdict carrying either a geodesic (a word
that visits exactly the differing vertices, each once) or the first violated
clause of the characterization. A brute-force oracle over single-vertex
updates backs the characterizations in tests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graphs import DiGraph, bit_list, forest_word, iter_bits, strong_components
from .networks import NetworkKind, apply_word, update_vertex
from .decide import is_constituency

VIOLATIONS = ("edge_created", "component_emptied", "not_monotone",
              "a_set_violated", "b_set_cyclic")


@dataclass(frozen=True)
class ReachabilityVerdict:
    reachable: bool
    geodesic: Optional[tuple[int, ...]] = None
    violated_condition: Optional[str] = None


def _und_components(g: DiGraph, mask: int) -> list[int]:
    """Connected components of G[mask], ordered by smallest vertex."""
    comps = []
    seen = 0
    for s in iter_bits(mask):
        if seen >> s & 1:
            continue
        comp = 0
        frontier = 1 << s
        while frontier:
            comp |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= (g.out[v] | g.inn[v]) & mask
            frontier = nxt & ~comp
        comps.append(comp)
        seen |= comp
    return comps


def mis_reachable(g: DiGraph, x: int, y: int) -> ReachabilityVerdict:
    """y reachable from x under MIS iff no new edge appears among the ones of
    y and no connected component of G[ones(x)] is emptied."""
    if not g.undirected:
        raise ValueError("the MIS network lives on undirected graphs")
    for u, v in g.sym_pairs():
        both_y = (y >> u & 1) and (y >> v & 1)
        if both_y and not ((x >> u & 1) and (x >> v & 1)):
            return ReachabilityVerdict(False, violated_condition="edge_created")
    comps = _und_components(g, x)
    for comp in comps:
        if comp & y == 0:
            return ReachabilityVerdict(False, violated_condition="component_emptied")
    word: list[int] = []
    for comp in comps:
        roots = comp & y
        if comp & ~roots:
            word.extend(forest_word(g, comp, roots))
    word.extend(bit_list(y & ~x))
    assert apply_word(g, NetworkKind.MIS, x, word) == y
    return ReachabilityVerdict(True, geodesic=tuple(word))


def mis_universal(g: DiGraph, x: int) -> tuple[bool, Optional[int]]:
    """True iff every fixed point is reachable from x; a witness unreachable
    fixed point is returned otherwise."""
    for comp in _und_components(g, x):
        ok, cert = is_constituency(g, comp)
        if ok:
            # the avoiding MIS is a fixed point that empties this component
            return False, cert.vertices
    return True, None


def mis_reach_some_fixed_point(g: DiGraph, x: int) -> tuple[int, tuple[int, ...]]:
    """A fixed point reachable from x, with its geodesic.

    Picks the lowest-index vertex of each component of G[ones(x)] and extends
    greedily by index to a maximal independent set.
    """
    if not g.undirected:
        raise ValueError("the MIS network lives on undirected graphs")
    picked = 0
    for comp in _und_components(g, x):
        picked |= comp & -comp
    m = picked
    for v in range(g.n):
        if not (m >> v & 1) and (g.out[v] & m) == 0:
            m |= 1 << v
    verdict = mis_reachable(g, x, m)
    assert verdict.reachable
    return m, verdict.geodesic


def ind_reachable(g: DiGraph, x: int, y: int) -> ReachabilityVerdict:
    """y reachable from x under the independent network iff y <= x and no
    initial strong component of G[ones(x)] is emptied."""
    if y & ~x:
        return ReachabilityVerdict(False, violated_condition="not_monotone")
    if x == 0:
        return ReachabilityVerdict(True, geodesic=())
    sub, vmap = g.induced(x)
    scd = strong_components(sub)
    for i in iter_bits(scd.initial):
        comp = scd.components[i]
        orig = 0
        for v in iter_bits(comp):
            orig |= 1 << vmap[v]
        if orig & y == 0:
            return ReachabilityVerdict(False, violated_condition="component_emptied")

    word: list[int] = []
    # components in reverse topological order; zeroed non-initial components
    # are felled from a vertex fed by a parent component
    for i in reversed(range(len(scd.components))):
        comp = scd.components[i]
        orig = 0
        for v in iter_bits(comp):
            orig |= 1 << vmap[v]
        keep = orig & y
        if keep:
            if orig & ~keep:
                word.extend(forest_word(g, orig, keep))
        else:
            root = None
            for v in sorted(iter_bits(comp)):
                if sub.inn[v] & ~comp:
                    root = vmap[v]
                    break
            assert root is not None, "non-initial component must have a parent arc"
            inner = forest_word(g, orig, 1 << root)
            word.extend(inner)
            word.append(root)
    assert apply_word(g, NetworkKind.INDEPENDENT, x, word) == y
    return ReachabilityVerdict(True, geodesic=tuple(word))


def dom_reachable(g: DiGraph, x: int, y: int) -> ReachabilityVerdict:
    """y reachable from x under the dominating network iff y >= x, y is zero
    on A(x) = zeros(x) out-dominated by ones(x), and the ones of y inside
    B(x) = the remaining zeros induce an acyclic subgraph."""
    if x & ~y:
        return ReachabilityVerdict(False, violated_condition="not_monotone")
    a_set = ~x & g.out_set(x) & g.full_mask
    if y & a_set:
        return ReachabilityVerdict(False, violated_condition="a_set_violated")
    b_set = ~x & ~g.out_set(x) & g.full_mask
    grow = y & b_set
    sub, vmap = g.induced(grow)
    scd = strong_components(sub)
    if any(comp.bit_count() > 1 for comp in scd.components):
        return ReachabilityVerdict(False, violated_condition="b_set_cyclic")
    # reverse topological traversal: update each vertex before its in-neighbours
    order = sorted(range(sub.n), key=lambda v: (scd.comp_of[v], v))
    word = [vmap[v] for v in reversed(order)]
    assert apply_word(g, NetworkKind.DOMINATING, x, word) == y
    return ReachabilityVerdict(True, geodesic=tuple(word))


def bfs_reachability_oracle(g: DiGraph, kind: NetworkKind, x: int) -> set[int]:
    """All configurations reachable from x under arbitrary words."""
    if g.n > 12:
        raise ValueError("oracle limited to n <= 12 (state space 2^n)")
    seen = {x}
    q = deque([x])
    while q:
        z = q.popleft()
        for v in range(g.n):
            nz = update_vertex(g, kind, z, v)
            if nz not in seen:
                seen.add(nz)
                q.append(nz)
    return seen


def verify_geodesic(g: DiGraph, kind: NetworkKind, x: int, y: int,
                    w: tuple[int, ...]) -> bool:
    """Independent re-check of the geodesic contract."""
    if len(set(w)) != len(w):
        return False
    delta = x ^ y
    if sum(1 << v for v in set(w)) != delta:
        return False
    return apply_word(g, kind, x, w) == y
