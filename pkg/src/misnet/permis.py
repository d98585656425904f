"""Permis verification and search.

A permutation w of the vertices induces an acyclic orientation (edges point
from earlier-updated to later-updated endpoints), and whether w fixes the MIS
network depends only on that orientation. Vertices that are near-transitive
in the orientation are covered for free; the rest are checked by an
exhaustive bit-parallel sweep. Permissibility search enumerates acyclic
orientations once each (as source-layer sequences) and prunes a branch as
soon as some vertex with a fully-updated closed neighbourhood is uncovered.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import DiGraph, benjamins, bit_list, bits, iter_bits
from .networks import (MAX_ENUM_VERTICES, NetworkKind, Word, initial_lanes,
                       is_permutation, run_word_lanes)
from .decide import fixes_mis


@dataclass(frozen=True)
class Orientation:
    """An edge-direction assignment for an undirected base graph."""
    base: DiGraph
    out: tuple[int, ...]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.base.n) for v in bit_list(self.out[u])]

    def is_acyclic(self) -> bool:
        return self.topological_order() is not None

    def topological_order(self) -> Optional[tuple[int, ...]]:
        """Kahn with smallest-index tie-break; None if cyclic."""
        n = self.base.n
        indeg = [0] * n
        for u in range(n):
            for v in iter_bits(self.out[u]):
                indeg[v] += 1
        import heapq
        heap = [v for v in range(n) if indeg[v] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            v = heapq.heappop(heap)
            order.append(v)
            for u in iter_bits(self.out[v]):
                indeg[u] -= 1
                if indeg[u] == 0:
                    heapq.heappush(heap, u)
        return tuple(order) if len(order) == n else None

    def transitive_mask(self) -> int:
        """Vertices t with t->a->b implying t->b."""
        m = 0
        for t in range(self.base.n):
            if all(self.out[a] & ~self.out[t] == 0 for a in iter_bits(self.out[t])):
                m |= 1 << t
        return m

    def near_transitive_mask(self) -> int:
        """Vertices v with some transitive t satisfying N[t;G] <= N[v;G]."""
        g = self.base
        trans = self.transitive_mask()
        closed = [g.out[v] | (1 << v) for v in range(g.n)]
        m = 0
        for v in range(g.n):
            for t in iter_bits(trans):
                if closed[t] & ~closed[v] == 0:
                    m |= 1 << v
                    break
        return m


def orientation_of(g: DiGraph, w: Word) -> Orientation:
    """Orientation induced by a permutation: u -> v when u is updated first."""
    if not g.undirected:
        raise ValueError("orientations are taken of undirected graphs")
    if not is_permutation(g.n, w):
        raise ValueError("w must be a permutation of the vertex set")
    pos = [0] * g.n
    for i, v in enumerate(w):
        pos[v] = i
    out = [0] * g.n
    for u, v in g.sym_pairs():
        if pos[u] < pos[v]:
            out[u] |= 1 << v
        else:
            out[v] |= 1 << u
    return Orientation(g, tuple(out))


def is_transitive_vertex(o: Orientation, t: int) -> bool:
    return all(o.out[a] & ~o.out[t] == 0 for a in iter_bits(o.out[t]))


def is_near_transitive_vertex(o: Orientation, v: int) -> bool:
    g = o.base
    cv = g.out[v] | (1 << v)
    for t in iter_bits(o.transitive_mask()):
        if (g.out[t] | (1 << t)) & ~cv == 0:
            return True
    return False


@dataclass(frozen=True)
class PermisReport:
    is_permis: bool
    uncovered_vertex: Optional[int] = None
    witness_config: Optional[int] = None
    covered_by_near_transitivity: int = 0


def _uncovered_lane(g: DiGraph, lanes: Sequence[int], v: int, full: int) -> int:
    acc = lanes[v]
    for u in g.out_list[v]:
        acc |= lanes[u]
    return ~acc & full


def is_covered(g: DiGraph, w: Word, v: int) -> tuple[bool, Optional[int]]:
    """Is v covered by the permutation w (endpoint never zero on N[v])?

    Near-transitive vertices are certified without a sweep; otherwise all 2^n
    start configurations are checked and a violating one is returned.
    """
    if not g.undirected:
        raise ValueError("covered vertices are defined on undirected graphs")
    o = orientation_of(g, w)
    if is_near_transitive_vertex(o, v):
        return True, None
    lanes = run_word_lanes(g, NetworkKind.MIS, w)
    full = (1 << (1 << g.n)) - 1
    bad = _uncovered_lane(g, lanes, v, full)
    if bad:
        return False, (bad & -bad).bit_length() - 1
    return True, None


def is_permis(g: DiGraph, w: Word) -> PermisReport:
    """A permutation is a permis iff it covers every vertex."""
    if not g.undirected:
        raise ValueError("permises are defined on undirected graphs")
    if not is_permutation(g.n, w):
        raise ValueError("a permis must be a permutation of the vertex set")
    o = orientation_of(g, w)
    nt = o.near_transitive_mask()
    rest = g.full_mask & ~nt
    if rest == 0:
        return PermisReport(True, covered_by_near_transitivity=nt)
    lanes = run_word_lanes(g, NetworkKind.MIS, w)
    full = (1 << (1 << g.n)) - 1
    for v in iter_bits(rest):
        bad = _uncovered_lane(g, lanes, v, full)
        if bad:
            return PermisReport(False, uncovered_vertex=v,
                                witness_config=(bad & -bad).bit_length() - 1,
                                covered_by_near_transitivity=nt)
    return PermisReport(True, covered_by_near_transitivity=nt)


# ---------------------------------------------------------------------------
# Comparability and near-comparability recognition
# ---------------------------------------------------------------------------

def comparability_orientation(g: DiGraph) -> Optional[tuple[int, ...]]:
    """A transitive orientation (out-masks), or None.

    Implication-class decomposition: repeatedly orient the smallest
    unoriented edge, propagate the forcing relation (orienting a->b forces
    a->c whenever bc is a non-edge, and d->b whenever ad is a non-edge,
    within the not-yet-removed edges), reject if a class forces an edge both
    ways, and remove the class. The final orientation is verified for
    transitivity, so a positive answer is always sound.
    """
    if not g.undirected:
        raise ValueError("comparability is a property of undirected graphs")
    n = g.n
    adj = list(g.out)
    remaining = set(g.sym_pairs())
    out = [0] * n
    while remaining:
        u0, v0 = min(remaining)
        cls = {(u0, v0)}
        queue = [(u0, v0)]
        while queue:
            a, b = queue.pop()
            for c in iter_bits(adj[a] & ~adj[b] & ~(1 << b)):
                if (a, c) not in cls:
                    cls.add((a, c))
                    queue.append((a, c))
            for d in iter_bits(adj[b] & ~adj[a] & ~(1 << a)):
                if (d, b) not in cls:
                    cls.add((d, b))
                    queue.append((d, b))
        for a, b in cls:
            if (b, a) in cls:
                return None
        for a, b in cls:
            out[a] |= 1 << b
            remaining.discard((a, b) if a < b else (b, a))
            adj[a] &= ~(1 << b)
            adj[b] &= ~(1 << a)
    for t in range(n):
        for a in iter_bits(out[t]):
            if out[a] & ~out[t]:
                return None
    return tuple(out)


def is_near_comparability(g: DiGraph) -> tuple[bool, Optional[Orientation]]:
    """G is a near-comparability graph iff its benjamin subgraph is a
    comparability graph; a positive answer yields a near-transitive acyclic
    orientation (benjamins transitively oriented and placed after everything
    else; edges into benjamins point at them; the rest ascending by index)."""
    if not g.undirected:
        raise ValueError("near-comparability is a property of undirected graphs")
    b = benjamins(g)
    sub, vmap = g.induced(b)
    tor = comparability_orientation(sub)
    if tor is None:
        return False, None
    out = [0] * g.n
    for i in range(sub.n):
        for j in iter_bits(tor[i]):
            out[vmap[i]] |= 1 << vmap[j]
    for u, v in g.sym_pairs():
        bu, bv = b >> u & 1, b >> v & 1
        if bu and bv:
            continue
        if bv:
            out[u] |= 1 << v
        elif bu:
            out[v] |= 1 << u
        else:
            out[u] |= 1 << v
    return True, Orientation(g, tuple(out))


# ---------------------------------------------------------------------------
# Permissibility search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PermisSearch:
    verdict: str  # "permissible" | "non_permissible" | "unknown"
    permis: Optional[tuple[int, ...]] = None
    method: str = "search"


def _independent_subsets(adj: Sequence[int], pool: int):
    """All nonempty independent subsets of the pool, as masks."""
    if pool == 0:
        return
    low = pool & -pool
    v = low.bit_length() - 1
    rest = pool ^ low
    yield from _independent_subsets(adj, rest)
    yield low
    for s in _independent_subsets(adj, rest & ~adj[v]):
        yield s | low


def _search_permis(g: DiGraph) -> Optional[tuple[int, ...]]:
    """Exhaustive search over acyclic orientations via source-layer sequences.

    Each acyclic orientation corresponds to exactly one sequence of layers
    (layer = the sources of what remains), so orientations are enumerated
    once each. After a layer is updated, any vertex whose closed
    neighbourhood is now fully updated has its final neighbourhood values;
    if some start configuration zeroes it, no completion can be a permis and
    the branch is cut.
    """
    n = g.n
    if n == 0:
        return ()
    adj = g.out
    all_mask = g.full_mask
    full = (1 << (1 << n)) - 1
    closed = [adj[v] | (1 << v) for v in range(n)]
    closed_lists = [tuple(bit_list(m)) for m in closed]
    in_lists = g.in_list
    iso = bits(v for v in range(n) if adj[v] == 0)
    pool_subsets: dict[int, tuple[int, ...]] = {}

    def subsets_of(pool: int) -> tuple[int, ...]:
        got = pool_subsets.get(pool)
        if got is None:
            got = tuple(_independent_subsets(adj, pool))
            pool_subsets[pool] = got
        return got

    def extend(placed: int, layer_pool: int, lanes: list[int],
               word: list[int], unchecked: int) -> Optional[tuple[int, ...]]:
        if placed == all_mask:
            return tuple(word)
        if layer_pool == 0:
            return None
        first = placed == 0
        for layer in subsets_of(layer_pool & ~iso):
            if first:
                layer |= iso
            got = try_layer(placed, layer, lanes, word, unchecked)
            if got is not None:
                return got
        if first and iso:
            got = try_layer(0, iso, lanes, word, unchecked)
            if got is not None:
                return got
        return None

    def try_layer(placed: int, layer: int, lanes: list[int],
                  word: list[int], unchecked: int) -> Optional[tuple[int, ...]]:
        new_placed = placed | layer
        nl = list(lanes)
        lvs = []
        m = layer
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            lvs.append(v)
            acc = 0
            for u in in_lists[v]:
                acc |= nl[u]
            nl[v] = ~acc & full
        inv_placed = ~new_placed
        m = unchecked
        new_unchecked = unchecked
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            cv = closed[v]
            if cv & inv_placed:
                continue
            new_unchecked ^= low
            if cv & layer:
                acc = 0
                for u in closed_lists[v]:
                    acc |= nl[u]
                if ~acc & full:
                    return None
        nxt = 0
        for v in lvs:
            nxt |= adj[v]
        return extend(new_placed, nxt & ~new_placed, nl, word + lvs,
                      new_unchecked)

    return extend(0, all_mask, initial_lanes(n), [], all_mask)


def _tethered_nonpermissible(g: DiGraph, classify) -> bool:
    """Try the sufficient condition: a tethered proper subset inducing a
    non-permissible subgraph. Only subsets of size >= 7 can qualify (the
    smallest non-permissible graph has 7 vertices)."""
    from itertools import combinations
    n = g.n
    if n < 8 or n > 14:
        return False
    for size in range(n - 1, 6, -1):
        for comb in combinations(range(n), size):
            s = bits(comb)
            t = g.in_set(s) & ~s
            ok = True
            for u in comb:
                for v in iter_bits(t):
                    if not (g.has_arc(u, v) and g.has_arc(v, u)):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            sub, _ = g.induced(s)
            if classify(sub).verdict == "non_permissible":
                return True
    return False


def find_permis(g: DiGraph, exhaustive_limit: int = 12,
                use_tethered: bool = True,
                _memo: Optional[dict] = None) -> PermisSearch:
    """Decide permissibility and produce a verified permis when one exists.

    Fast path: near-comparability graphs get a near-transitive acyclic
    orientation and its topological order. Otherwise a tethered
    non-permissible subgraph is looked for, and failing that the orientation
    search runs when n <= exhaustive_limit; beyond that the answer is an
    explicit "unknown".
    """
    if not g.undirected:
        raise ValueError("permissibility is defined for undirected graphs")
    if _memo is None:
        _memo = {}
    key = (g.n, g.out)
    if key in _memo:
        return _memo[key]

    result: PermisSearch
    ok, orient = is_near_comparability(g)
    if ok:
        w = orient.topological_order()
        assert w is not None
        if g.n <= MAX_ENUM_VERTICES:
            report = is_permis(g, w)
            assert report.is_permis, "near-comparability order failed coverage"
        result = PermisSearch("permissible", w, "near_comparability")
    elif use_tethered and _tethered_nonpermissible(
            g, lambda s: find_permis(s, exhaustive_limit, use_tethered, _memo)):
        result = PermisSearch("non_permissible", None, "tethered_shortcut")
    elif g.n <= exhaustive_limit:
        w = _search_permis(g)
        if w is None:
            result = PermisSearch("non_permissible", None, "search")
        else:
            report = is_permis(g, w)
            assert report.is_permis, "search returned a non-permis"
            result = PermisSearch("permissible", w, "search")
    else:
        result = PermisSearch("unknown", None, "limit")
    _memo[key] = result
    return result


# ---------------------------------------------------------------------------
# Composition
# ---------------------------------------------------------------------------

def composition_permis(h: DiGraph, parts: Sequence[DiGraph],
                       host_permis: Word,
                       part_permises: Sequence[Word]) -> tuple[int, ...]:
    """Splice part permises into a host permis.

    With compose(h, parts) numbering (parts laid out in h's vertex order),
    replacing each host vertex in the host permis by that part's permis gives
    a permis of the composition. The output is re-verified when feasible.
    """
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.n
    word: list[int] = []
    for hv in host_permis:
        word.extend(offsets[hv] + u for u in part_permises[hv])
    if total <= MAX_ENUM_VERTICES:
        from .graphs import compose
        composed = compose(h, parts)
        ok, _ = fixes_mis(composed, word)
        if not ok:
            raise RuntimeError("composition splice failed verification; "
                               "this indicates a bug")
    return tuple(word)
