"""Exact decision procedures: constituency, district, prefixing/suffixing/
fixing words, fixing sets, and the polynomial fixing-word tests for the
independent and dominating networks.

Every answer carries a Certificate that an independent verifier can re-check
in polynomial time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import (DiGraph, benjamins, bit_list, bits, iter_bits,
                     twin_class_mask)
from .networks import NetworkKind, Word, fixed_lane, run_word_lanes, visited


@dataclass(frozen=True)
class Certificate:
    """Checkable evidence for a yes/no answer.

    tag: one of independent_dominator, witness_fixed_point, witness_config,
    witness_vertex, vertex_cover_gap, none. Payload fields are filled as the
    tag requires; `collection` holds per-vertex (v, I_v) dominator pairs for
    the no-certificate of the non-trivial non-district problem.
    """
    tag: str
    vertices: Optional[int] = None
    config: Optional[int] = None
    vertex: Optional[int] = None
    collection: Optional[tuple[tuple[int, int], ...]] = None

    def to_json(self, n: int) -> dict:
        out: dict = {"tag": self.tag}
        if self.vertices is not None:
            out["vertices"] = bit_list(self.vertices)
        if self.config is not None:
            out["config"] = "".join(
                "1" if self.config >> v & 1 else "0" for v in range(n))
        if self.vertex is not None:
            out["vertex"] = self.vertex
        if self.collection is not None:
            out["collection"] = [
                {"vertex": v, "dominator": bit_list(i)} for v, i in self.collection]
        return out


NONE_CERT = Certificate(tag="none")


def _require_undirected(g: DiGraph) -> None:
    if not g.undirected:
        raise ValueError("operation defined for undirected graphs")


# ---------------------------------------------------------------------------
# Maximal independent sets (pivoting clique enumeration on the complement)
# ---------------------------------------------------------------------------

def maximal_independent_sets(g: DiGraph) -> Iterator[int]:
    """Yield all maximal independent sets of an undirected graph as masks.

    Bron-Kerbosch with pivoting, run on the complement graph; the pivot is
    the candidate with the most candidates among its complement-neighbours,
    ties broken by smallest index.
    """
    _require_undirected(g)
    n = g.n
    full = g.full_mask
    comp = [full & ~g.out[v] & ~(1 << v) for v in range(n)]

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        if p == 0 and x == 0:
            yield r
            return
        best, pivot = -1, -1
        m = p | x
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            score = (p & comp[u]).bit_count()
            if score > best:
                best, pivot = score, u
        cand = p & ~comp[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from expand(r | low, p & comp[v], x & comp[v])
            p &= ~low
            x |= low

    yield from expand(0, full, 0)


def is_independent(g: DiGraph, s: int) -> bool:
    return all((g.out[v] & s) == 0 for v in iter_bits(s))


def dominates(g: DiGraph, i: int, s: int) -> bool:
    """True iff s is contained in the out-neighbourhood of i."""
    return s & ~g.out_set(i) == 0


def is_vertex_cover(g: DiGraph, s: int) -> bool:
    return all((s >> u & 1) or (s >> v & 1) for u, v in g.sym_pairs())


# ---------------------------------------------------------------------------
# Constituencies and districts
# ---------------------------------------------------------------------------

def is_constituency(g: DiGraph, s: int) -> tuple[bool, Certificate]:
    """S is a constituency iff some maximal independent set avoids S.

    The yes-certificate is that MIS, which is an independent set dominating S.
    """
    _require_undirected(g)
    for m in maximal_independent_sets(g):
        if m & s == 0:
            return True, Certificate(tag="independent_dominator", vertices=m)
    return False, NONE_CERT


def is_district(g: DiGraph, t: int) -> tuple[bool, Certificate]:
    """T is a district iff for some v outside T, T cap N(v) is dominated by
    an independent set avoiding N[v]. Yes-certificate: (v, that set).

    The dominating set must stay clear of v's closed neighbourhood: that is
    what the suffixing-word characterization consumes (its witness start
    configuration needs every unvisited neighbour of v to be 0), and it is
    how the worked examples pick their dominators. Dropping the avoidance
    breaks the characterization, e.g. on the triangle with the single-vertex
    word.
    """
    _require_undirected(g)
    for v in range(g.n):
        if t >> v & 1:
            continue
        target = t & g.out[v]
        keep = (g.full_mask & ~(g.out[v] | (1 << v))) | target
        sub, vmap = g.induced(keep)
        pos = {orig: i for i, orig in enumerate(vmap)}
        w = bits(pos[u] for u in iter_bits(target))
        ok, cert = is_constituency(sub, w)
        if ok:
            dom = bits(vmap[u] for u in iter_bits(cert.vertices))
            return True, Certificate(tag="independent_dominator",
                                     vertex=v, vertices=dom)
    return False, NONE_CERT


def has_nontrivial_nondistrict(g: DiGraph) -> tuple[bool, Certificate]:
    """Is some set other than V a non-district?  It suffices to test the n
    sets V - {v}; the witness is that v.  The no-certificate is the
    collection of per-vertex dominating independent sets."""
    _require_undirected(g)
    collection = []
    for v in range(g.n):
        world = g.full_mask & ~(1 << v)
        ok, cert = is_district(g, world)
        if not ok:
            return True, Certificate(tag="witness_vertex", vertex=v)
        collection.append((cert.vertex, cert.vertices))
    return False, Certificate(tag="independent_dominator",
                              collection=tuple(collection))


# ---------------------------------------------------------------------------
# Prefixing / suffixing / fixing words and fixing sets (MIS network)
# ---------------------------------------------------------------------------

def prefixes_mis(g: DiGraph, w: Word) -> bool:
    """w prefixes MIS(G) iff [w] is a vertex cover."""
    _require_undirected(g)
    return is_vertex_cover(g, visited(w))


def suffixes_mis(g: DiGraph, w: Word) -> tuple[bool, Certificate]:
    """w suffixes MIS(G) iff [w] is a non-district."""
    district, cert = is_district(g, visited(w))
    return not district, cert


def fixes_mis(g: DiGraph, w: Word) -> tuple[bool, Certificate]:
    """Exhaustive test over all 2^n start configurations.

    A no-answer carries a witness start configuration whose endpoint is not
    a maximal independent set.
    """
    _require_undirected(g)
    lanes = run_word_lanes(g, NetworkKind.MIS, w)
    bad = ~fixed_lane(g, NetworkKind.MIS, lanes) & ((1 << (1 << g.n)) - 1)
    if bad:
        witness = (bad & -bad).bit_length() - 1
        return False, Certificate(tag="witness_config", config=witness)
    return True, NONE_CERT


def is_fixing_set(g: DiGraph, s: int) -> tuple[bool, Certificate]:
    """S is a fixing set iff S is a vertex cover and a non-district."""
    _require_undirected(g)
    for u, v in g.sym_pairs():
        if not (s >> u & 1) and not (s >> v & 1):
            return False, Certificate(tag="vertex_cover_gap",
                                      vertices=(1 << u) | (1 << v))
    district, cert = is_district(g, s)
    if district:
        return False, cert
    return True, NONE_CERT


def has_nontrivial_fixing_set(g: DiGraph) -> tuple[bool, Certificate]:
    """G has a fixing set other than V iff it has a non-trivial non-district
    (that set, minus-one-vertex, is automatically a vertex cover)."""
    return has_nontrivial_nondistrict(g)


# ---------------------------------------------------------------------------
# Fixing words for the independent and dominating networks (polynomial)
# ---------------------------------------------------------------------------

def ind_fixing_word(g: DiGraph, w: Word) -> bool:
    """w fixes the independent network iff [w] is a directed vertex cover:
    it meets every symmetric edge and contains the head of every oriented arc."""
    s = visited(w)
    for u, v in g.sym_pairs():
        if not (s >> u & 1) and not (s >> v & 1):
            return False
    for _, v in g.oriented_arcs():
        if not s >> v & 1:
            return False
    return True


def dom_fixing_word(g: DiGraph, w: Word) -> bool:
    """w fixes the dominating network iff [w] meets the closed-twin class of
    every benjamin."""
    s = visited(w)
    for m in iter_bits(benjamins(g)):
        if s & twin_class_mask(g, m) == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Canonical-type normalizers for constituency instances
# ---------------------------------------------------------------------------

def _pendant_fix(g: DiGraph, s: int) -> tuple[DiGraph, int]:
    """Attach a pendant to every isolated vertex of G - S.

    Adding a vertex adjacent only to t never changes whether S is a
    constituency, and it removes the isolated-vertex obstruction required by
    the canonical instance types.
    """
    outside = g.full_mask & ~s
    lonely = [t for t in iter_bits(outside) if g.out[t] & outside == 0]
    if not lonely:
        return g, s
    edges = list(g.sym_pairs())
    n = g.n
    for t in lonely:
        edges.append((t, n))
        n += 1
    return DiGraph.graph(n, edges), s


def normalize_empty(g: DiGraph, s: int) -> tuple[DiGraph, int]:
    """Equivalent empty-type instance: G[S] edgeless, G - S isolated-free."""
    _require_undirected(g)
    edges = [(u, v) for u, v in g.sym_pairs() if not (s >> u & 1 and s >> v & 1)]
    return _pendant_fix(DiGraph.graph(g.n, edges), s)


def normalize_complete(g: DiGraph, s: int) -> tuple[DiGraph, int]:
    """Equivalent complete-type instance: G[S] a clique, G - S isolated-free."""
    _require_undirected(g)
    edges = list(g.sym_pairs())
    sl = bit_list(s)
    edges.extend((u, v) for i, u in enumerate(sl) for v in sl[i + 1:]
                 if not g.has_arc(u, v))
    return _pendant_fix(DiGraph.graph(g.n, edges), s)


def is_empty_type(g: DiGraph, s: int) -> bool:
    outside = g.full_mask & ~s
    return all(g.out[u] & s == 0 for u in iter_bits(s)) and \
        all(g.out[t] & outside for t in iter_bits(outside))


def is_complete_type(g: DiGraph, s: int) -> bool:
    outside = g.full_mask & ~s
    return all(g.out[u] & s == s & ~(1 << u) for u in iter_bits(s)) and \
        all(g.out[t] & outside for t in iter_bits(outside))


# ---------------------------------------------------------------------------
# Certificate verifiers (independent re-checks used by callers and tests)
# ---------------------------------------------------------------------------

def verify_constituency_certificate(g: DiGraph, s: int, cert: Certificate) -> bool:
    i = cert.vertices
    return i is not None and is_independent(g, i) and dominates(g, i, s)


def verify_district_certificate(g: DiGraph, t: int, cert: Certificate) -> bool:
    v, i = cert.vertex, cert.vertices
    if v is None or i is None or t >> v & 1:
        return False
    if i & (g.out[v] | (1 << v)):
        return False  # the dominator must avoid N[v]
    target = t & g.out[v]
    return is_independent(g, i) and dominates(g, i, target)
