"""Digraphs with bitmask adjacency, canonical families, and graph6/digraph6 I/O.

Vertices are dense indices 0..n-1; vertex sets and configurations are plain
Python ints used as bitmasks (bit v = vertex v). Graphs are treated as the
special case of digraphs in which every edge is symmetric.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

# Exhaustive procedures sweep all 2^n configurations; beyond this the answer
# is not computable at desk scale and callers get a hard error.
MAX_ENUM_VERTICES = 24


def bits(vertices: Iterable[int]) -> int:
    """Pack vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bit_list(mask: int) -> list[int]:
    """Unpack a bitmask into an ascending list of vertex indices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_to_str(mask: int, n: int) -> str:
    """Render a configuration/vertex-set mask as a 0/1 string, vertex 0 leftmost."""
    return "".join("1" if mask >> v & 1 else "0" for v in range(n))


def mask_from_str(s: str) -> int:
    """Parse a 0/1 string written with vertex 0 leftmost."""
    m = 0
    for v, ch in enumerate(s):
        if ch == "1":
            m |= 1 << v
        elif ch != "0":
            raise ValueError(f"invalid configuration character {ch!r} at position {v}")
    return m


class DiGraph:
    """Immutable irreflexive directed graph on vertices 0..n-1.

    `out[v]` / `inn[v]` are bitmasks of out-/in-neighbours. A graph whose
    edges are all symmetric reports `undirected = True`; there is one code
    path for both cases. Instances are safe to share across workers.
    """

    __slots__ = ("n", "out", "inn", "out_list", "in_list", "undirected", "labels")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = (),
                 labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        out = [0] * n
        inn = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} (graphs are irreflexive)")
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self.n = n
        self.out = tuple(out)
        self.inn = tuple(inn)
        self.out_list = tuple(tuple(bit_list(m)) for m in out)
        self.in_list = tuple(tuple(bit_list(m)) for m in inn)
        self.undirected = self.out == self.inn
        self.labels = tuple(labels) if labels is not None else None

    # -- constructors -----------------------------------------------------

    @classmethod
    def graph(cls, n: int, edges: Iterable[tuple[int, int]] = (),
              labels: Optional[Sequence[str]] = None) -> "DiGraph":
        """Undirected graph: every edge is added in both directions."""
        arcs = []
        for u, v in edges:
            arcs.append((u, v))
            arcs.append((v, u))
        return cls(n, arcs, labels)

    # -- basic accessors ---------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def closed_in(self, v: int) -> int:
        return self.inn[v] | (1 << v)

    def closed_out(self, v: int) -> int:
        return self.out[v] | (1 << v)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.out_list[u]:
                yield (u, v)

    def num_arcs(self) -> int:
        return sum(m.bit_count() for m in self.out)

    def sym_pairs(self) -> list[tuple[int, int]]:
        """Symmetric edges as (u, v) with u < v."""
        return [(u, v) for u in range(self.n) for v in self.out_list[u]
                if u < v and self.out[v] >> u & 1]

    def oriented_arcs(self) -> list[tuple[int, int]]:
        """Arcs whose reverse is absent."""
        return [(u, v) for u in range(self.n) for v in self.out_list[u]
                if not self.out[v] >> u & 1]

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def out_set(self, mask: int) -> int:
        """Union of out-neighbourhoods over a vertex-set mask."""
        m = 0
        for v in iter_bits(mask):
            m |= self.out[v]
        return m

    def in_set(self, mask: int) -> int:
        m = 0
        for v in iter_bits(mask):
            m |= self.inn[v]
        return m

    # -- derived graphs ----------------------------------------------------

    def induced(self, mask: int) -> tuple["DiGraph", list[int]]:
        """Induced subgraph on the masked vertices.

        Returns (subgraph, vertices) where vertices[i] is the original index
        of the subgraph's vertex i.
        """
        verts = bit_list(mask)
        pos = {v: i for i, v in enumerate(verts)}
        arcs = [(pos[u], pos[v]) for u in verts for v in self.out_list[u] if mask >> v & 1]
        return DiGraph(len(verts), arcs), verts

    def minus(self, vmask: int) -> tuple["DiGraph", list[int]]:
        """Delete the masked vertices (G - S)."""
        return self.induced(self.full_mask & ~vmask)

    def connected_components(self) -> list[int]:
        """Masks of weakly connected components, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 0
            frontier = 1 << s
            while frontier:
                comp |= frontier
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.out[v] | self.inn[v]
                frontier = nxt & ~comp
            comps.append(comp)
            seen |= comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DiGraph) and self.n == other.n and self.out == other.out

    def __hash__(self) -> int:
        return hash((self.n, self.out))

    def __repr__(self) -> str:
        kind = "graph" if self.undirected else "digraph"
        return f"<{kind} n={self.n} m={self.num_arcs()}>"


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------

def closed_twins(g: DiGraph) -> list[list[int]]:
    """Partition vertices into classes with identical closed in-neighbourhoods."""
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(g.closed_in(v), []).append(v)
    return sorted(classes.values(), key=lambda c: c[0])


def twin_class_mask(g: DiGraph, v: int) -> int:
    """Mask of vertices sharing v's closed in-neighbourhood."""
    key = g.closed_in(v)
    return bits(u for u in range(g.n) if g.closed_in(u) == key)


def benjamins(g: DiGraph) -> int:
    """Vertices whose closed in-neighbourhood is inclusion-minimal, as a mask."""
    hoods = [g.closed_in(v) for v in range(g.n)]
    mask = 0
    for v in range(g.n):
        hv = hoods[v]
        if not any(hu != hv and hu & ~hv == 0 for hu in hoods):
            mask |= 1 << v
    return mask


def benjamin_subgraph(g: DiGraph) -> tuple[DiGraph, list[int]]:
    """Induced subgraph on the benjamins."""
    return g.induced(benjamins(g))


def is_tethered(g: DiGraph, s: int) -> bool:
    """True iff every vertex of S has a symmetric edge to every t in N^-(S) \\ S."""
    t = g.in_set(s) & ~s
    for u in iter_bits(s):
        for v in iter_bits(t):
            if not (g.has_arc(u, v) and g.has_arc(v, u)):
                return False
    return True


# ---------------------------------------------------------------------------
# Composition
# ---------------------------------------------------------------------------

def compose(h: DiGraph, parts: Sequence[DiGraph]) -> DiGraph:
    """Replace each vertex of h by a graph, joining parts across h's edges.

    All inputs must be undirected. Vertices are numbered part by part in
    h's vertex order.
    """
    if not h.undirected or any(not p.undirected for p in parts):
        raise ValueError("composition is defined for undirected graphs")
    if len(parts) != h.n:
        raise ValueError("need one part per vertex of the host graph")
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.n
    edges = []
    for i, p in enumerate(parts):
        base = offsets[i]
        edges.extend((base + u, base + v) for u, v in p.sym_pairs())
    for a, b in h.sym_pairs():
        for u in range(parts[a].n):
            for v in range(parts[b].n):
                edges.append((offsets[a] + u, offsets[b] + v))
    return DiGraph.graph(total, edges)


def compose_one(h: DiGraph, b: int, g_b: DiGraph) -> DiGraph:
    """Single-vertex substitution: all other parts are K1."""
    parts = [family("complete", 1)] * h.n
    parts[b] = g_b
    return compose(h, parts)


# ---------------------------------------------------------------------------
# Canonical families
# ---------------------------------------------------------------------------

FAMILY_NAMES = ("path", "cycle", "complete", "directed_cycle", "wheel",
                "odd_hole_plus", "odd_hole_plus_plus", "petersen")


def family(name: str, k: int = 0) -> DiGraph:
    """Named graph families; k is the size parameter where applicable."""
    if name == "path":
        if k < 1:
            raise ValueError("path needs k >= 1")
        return DiGraph.graph(k, [(i, i + 1) for i in range(k - 1)])
    if name == "cycle":
        if k < 3:
            raise ValueError("cycle needs k >= 3")
        return DiGraph.graph(k, [(i, (i + 1) % k) for i in range(k)])
    if name == "complete":
        if k < 1:
            raise ValueError("complete needs k >= 1")
        return DiGraph.graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])
    if name == "directed_cycle":
        if k < 3:
            raise ValueError("directed_cycle needs k >= 3")
        return DiGraph(k, [(i, (i + 1) % k) for i in range(k)])
    if name == "wheel":
        # W_k = K_2(C_{k-1}, K_1): hub is the last vertex
        if k < 4:
            raise ValueError("wheel needs k >= 4")
        return compose(family("complete", 2), [family("cycle", k - 1), family("complete", 1)])
    if name == "odd_hole_plus":
        # C_{2k+1} plus a pendant vertex attached to cycle vertex 0
        if k < 1:
            raise ValueError("odd_hole_plus needs k >= 1")
        m = 2 * k + 1
        edges = [(i, (i + 1) % m) for i in range(m)] + [(0, m)]
        return DiGraph.graph(m + 1, edges)
    if name == "odd_hole_plus_plus":
        # a second pendant attached to the first pendant's tail
        if k < 1:
            raise ValueError("odd_hole_plus_plus needs k >= 1")
        m = 2 * k + 1
        edges = [(i, (i + 1) % m) for i in range(m)] + [(0, m), (m, m + 1)]
        return DiGraph.graph(m + 2, edges)
    if name == "petersen":
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        edges += [(i, 5 + i) for i in range(5)]
        return DiGraph.graph(10, edges)
    raise ValueError(f"unknown family {name!r}")


# ---------------------------------------------------------------------------
# Strong components and spanning out-forests
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StrongComponents:
    """Strong component decomposition.

    `components` holds vertex masks in topological order (every inter-component
    arc goes from a lower to a higher index); `comp_of[v]` is v's component
    index; `initial` is the bitmask of component indices with no parent.
    """
    components: tuple[int, ...]
    comp_of: tuple[int, ...]
    initial: int

    @property
    def dag_order(self) -> tuple[int, ...]:
        return tuple(range(len(self.components)))


def strong_components(g: DiGraph) -> StrongComponents:
    """Tarjan decomposition, re-sorted topologically with min-vertex tie-break."""
    n = g.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[int] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            out = g.out_list[v]
            for i in range(pi, len(out)):
                u = out[i]
                if index[u] == -1:
                    work[-1] = (v, i + 1)
                    work.append((u, 0))
                    advanced = True
                    break
                if on_stack[u]:
                    low[v] = min(low[v], index[u])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = 0
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp |= 1 << u
                    if u == v:
                        break
                comps.append(comp)

    # component DAG, then Kahn with smallest-min-vertex tie-break
    k = len(comps)
    cid = [0] * n
    for i, c in enumerate(comps):
        for v in iter_bits(c):
            cid[v] = i
    succ = [set() for _ in range(k)]
    pred_count = [0] * k
    for u, v in g.arcs():
        a, b = cid[u], cid[v]
        if a != b and b not in succ[a]:
            succ[a].add(b)
            pred_count[b] += 1
    import heapq
    heap = [(comps[i] & -comps[i], i) for i in range(k) if pred_count[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, i = heapq.heappop(heap)
        order.append(i)
        for j in succ[i]:
            pred_count[j] -= 1
            if pred_count[j] == 0:
                heapq.heappush(heap, (comps[j] & -comps[j], j))
    assert len(order) == k
    new_comps = tuple(comps[i] for i in order)
    newid = {old: new for new, old in enumerate(order)}
    comp_of = tuple(newid[cid[v]] for v in range(n))
    has_parent = [False] * k
    for u, v in g.arcs():
        a, b = comp_of[u], comp_of[v]
        if a != b:
            has_parent[b] = True
    initial = bits(i for i in range(k) if not has_parent[i])
    return StrongComponents(new_comps, comp_of, initial)


def spanning_out_forest(g: DiGraph, roots: int) -> dict[int, int]:
    """Parent map of a spanning out-forest rooted at the given vertices.

    Every non-root is assigned to its nearest root (ties: smallest root
    index) and parented to its smallest-index in-neighbour one step closer
    to that root. Raises if some vertex is unreachable from the roots.
    """
    if roots == 0:
        raise ValueError("roots must be nonempty")
    root_list = bit_list(roots)
    n = g.n
    INF = n + 1
    dist_from = {}
    for r in root_list:
        d = [INF] * n
        d[r] = 0
        q = deque([r])
        while q:
            u = q.popleft()
            for v in g.out_list[u]:
                if d[v] == INF:
                    d[v] = d[u] + 1
                    q.append(v)
        dist_from[r] = d
    parent: dict[int, int] = {}
    for v in range(n):
        if roots >> v & 1:
            continue
        best = min((dist_from[r][v], i) for i, r in enumerate(root_list))
        d, ri = best
        if d >= INF:
            raise ValueError(f"vertex {v} is unreachable from the roots")
        r = root_list[ri]
        for p in g.in_list[v]:
            if dist_from[r][p] == d - 1:
                parent[v] = p
                break
        else:  # pragma: no cover - BFS guarantees a predecessor
            raise AssertionError("no shortest-path predecessor found")
    return parent


def forest_word(g: DiGraph, vertices: int, roots: int) -> list[int]:
    """Leaf-to-root traversal of the spanning out-forest of G[vertices].

    Returns the non-root vertices ordered so every child precedes its
    parent (decreasing distance, ties by ascending index), in original
    vertex numbering.
    """
    sub, vmap = g.induced(vertices)
    pos = {v: i for i, v in enumerate(vmap)}
    sub_roots = bits(pos[r] for r in iter_bits(roots & vertices))
    parent = spanning_out_forest(sub, sub_roots)
    depth = {}

    def depth_of(v: int) -> int:
        if sub_roots >> v & 1:
            return 0
        if v not in depth:
            depth[v] = depth_of(parent[v]) + 1
        return depth[v]

    order = sorted(parent.keys(), key=lambda v: (-depth_of(v), vmap[v]))
    return [vmap[v] for v in order]


# ---------------------------------------------------------------------------
# graph6 / digraph6
# ---------------------------------------------------------------------------

class Graph6Error(ValueError):
    """Malformed graph6/digraph6 input."""


def _decode_number(data: bytes, pos: int) -> tuple[int, int]:
    if pos >= len(data):
        raise Graph6Error(f"truncated input at byte {pos}: missing vertex count")
    c = data[pos]
    if not 63 <= c <= 126:
        raise Graph6Error(f"byte {pos} out of range: {c}")
    if c != 126:
        return c - 63, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        chunk, start = 6, pos + 2
    else:
        chunk, start = 3, pos + 1
    if start + chunk > len(data):
        raise Graph6Error(f"truncated vertex count at byte {len(data)}")
    n = 0
    for i in range(chunk):
        c = data[start + i]
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {start + i} out of range: {c}")
        n = (n << 6) | (c - 63)
    return n, start + chunk


def _encode_number(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> (6 * i)) & 63) + 63 for i in range(5, -1, -1)])
    raise ValueError("vertex count too large for graph6")


def _bit_reader(data: bytes, pos: int):
    """Yield bits from 6-bit groups starting at byte pos, validating range."""
    for i in range(pos, len(data)):
        c = data[i]
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {i} out of range: {c}")
        val = c - 63
        for shift in range(5, -1, -1):
            yield (val >> shift) & 1


def parse_graph6(line: str | bytes) -> DiGraph:
    """Parse one line of graph6 or digraph6 ('&'-prefixed) format."""
    data = line.encode("ascii") if isinstance(line, str) else line
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    elif data.startswith(b">>digraph6<<"):
        data = data[12:]
    if not data:
        raise Graph6Error("empty line")
    directed = data.startswith(b"&")
    pos = 1 if directed else 0
    n, pos = _decode_number(data, pos)
    nbits = n * n if directed else n * (n - 1) // 2
    expect = pos + (nbits + 5) // 6
    if len(data) != expect:
        raise Graph6Error(
            f"length mismatch: expected {expect} bytes for n={n}, got {len(data)}")
    reader = _bit_reader(data, pos)
    arcs = []
    if directed:
        for i in range(n):
            for j in range(n):
                if next(reader):
                    if i == j:
                        raise Graph6Error(f"loop bit set for vertex {i}")
                    arcs.append((i, j))
        return DiGraph(n, arcs)
    for j in range(1, n):
        for i in range(j):
            if next(reader):
                arcs.append((i, j))
                arcs.append((j, i))
    return DiGraph(n, arcs)


def _pack_bits(bitlist: list[int]) -> bytes:
    out = bytearray()
    for i in range(0, len(bitlist), 6):
        group = bitlist[i:i + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def format_graph6(g: DiGraph) -> str:
    """graph6 encoding of an undirected graph."""
    if not g.undirected:
        raise ValueError("graph6 encodes undirected graphs; use format_digraph6")
    bitlist = [g.out[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    return (_encode_number(g.n) + _pack_bits(bitlist)).decode("ascii")


def format_digraph6(g: DiGraph) -> str:
    """digraph6 encoding (row-major adjacency matrix, '&' header)."""
    bitlist = [g.out[i] >> j & 1 for i in range(g.n) for j in range(g.n)]
    return (b"&" + _encode_number(g.n) + _pack_bits(bitlist)).decode("ascii")


def read_graph6_file(path) -> Iterator[tuple[int, DiGraph]]:
    """Yield (line_number, graph) from a graph6/digraph6 file, skipping
    comment lines starting with '#' and blank lines."""
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            yield lineno, parse_graph6(line)


def parse_edge_list(text: str) -> DiGraph:
    """Parse an edge-list string like "0-1,1-2,2>3".

    "u-v" adds a symmetric edge, "u>v" an oriented arc. Vertex labels are
    integers; they are mapped to dense indices and retained as labels.
    """
    pairs = []
    seen: set[int] = set()
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if ">" in item:
            a, b = item.split(">")
            sym = False
        elif "-" in item:
            a, b = item.split("-")
            sym = True
        else:
            raise ValueError(f"bad edge {item!r}: use u-v or u>v")
        u, v = int(a), int(b)
        seen.update((u, v))
        pairs.append((u, v, sym))
    order = sorted(seen)
    pos = {label: i for i, label in enumerate(order)}
    arcs = []
    for u, v, sym in pairs:
        arcs.append((pos[u], pos[v]))
        if sym:
            arcs.append((pos[v], pos[u]))
    return DiGraph(len(order), arcs, labels=[str(x) for x in order])
