"""Reduction gadget constructors, used as correctness test generators.

Each constructor maps a source instance to a target instance with a
deterministic vertex numbering (source vertices first, then gadget vertices
in the order the construction introduces them) and a total role map. The
paired verifiers re-decide both sides with the exact procedures from
`decide`/`permis`/`kernelfix` and check the yes/no correspondence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import ceil, log2
from typing import Optional, Sequence

from .graphs import DiGraph, bit_list, bits, iter_bits
from .networks import NetworkKind, apply_word, is_fixed_point, update_vertex
from .decide import (is_constituency, is_district, is_empty_type,
                     is_fixing_set, has_nontrivial_nondistrict)
from .permis import find_permis, is_permis
from .kernelfix import word_fix_fraction


@dataclass
class ReductionInstance:
    """A constructed target instance with provenance.

    `target_set` / `target_word` are filled as the target problem requires;
    `roles` names every constructed vertex; `extra` carries gadget-specific
    anchors (e.g. the 3-cycle vertices).
    """
    source: dict
    graph: DiGraph
    roles: dict[int, str]
    target_set: Optional[int] = None
    target_word: Optional[tuple[int, ...]] = None
    extra: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# DNF expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DnfExpression:
    """A DNF over variables 1..num_vars; literals are signed ints.

    clauses is a tuple of literal tuples; every clause must be nonempty.
    """
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for cl in self.clauses:
            if not cl:
                raise ValueError("empty clause in DNF")
            for lit in cl:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range")

    def literal_occurrences(self) -> dict[int, int]:
        occ: dict[int, int] = {}
        for cl in self.clauses:
            for lit in cl:
                occ[lit] = occ.get(lit, 0) + 1
        return occ

    def clause_value(self, idx: int, z: int) -> bool:
        return all((z >> (abs(l) - 1) & 1) == (l > 0) for l in self.clauses[idx])

    def value(self, z: int) -> bool:
        return any(self.clause_value(i, z) for i in range(len(self.clauses)))

    def is_tautology(self) -> bool:
        if self.num_vars > 20:
            raise ValueError("tautology check limited to 20 variables")
        return all(self.value(z) for z in range(1 << self.num_vars))


def parse_dnf(text: str) -> DnfExpression:
    """One clause per line, literals as signed integers; '#' comments."""
    clauses = []
    top = 0
    for line in text.splitlines():
        line = line.split("#")[0].strip()
        if not line:
            continue
        lits = tuple(int(tok) for tok in line.split())
        clauses.append(lits)
        top = max(top, max(abs(l) for l in lits))
    return DnfExpression(top, tuple(clauses))


def parse_setcover(text: str) -> tuple[int, list[set[int]], int]:
    """Format "n; S1; S2; ...; k" with 1-based element lists."""
    parts = [p.strip() for p in text.split(";")]
    if len(parts) < 2:
        raise ValueError("set-cover input needs at least 'n; k'")
    n = int(parts[0])
    k = int(parts[-1])
    sets = []
    for body in parts[1:-1]:
        body = body.replace(",", " ")
        items = {int(t) for t in body.split()} if body else set()
        if any(not 1 <= x <= n for x in items):
            raise ValueError("set element out of range")
        sets.append(items)
    return n, sets, k


def setcover_solvable(n: int, sets: Sequence[set[int]], k: int) -> bool:
    universe = set(range(1, n + 1))
    for size in range(0, min(k, len(sets)) + 1):
        for comb in combinations(range(len(sets)), size):
            covered = set().union(*(sets[i] for i in comb)) if comb else set()
            if covered >= universe:
                return True
    return False


# ---------------------------------------------------------------------------
# Set Cover -> Constituency
# ---------------------------------------------------------------------------

def setcover_to_constituency(x_count: int, sets: Sequence[set[int]],
                             k: int) -> ReductionInstance:
    """Clique layers q_j^l joined to the element vertices their set covers;
    the target set is the element vertices."""
    if k < 1:
        raise ValueError("set cover needs k >= 1")
    m = len(sets)
    n = x_count

    def q(j: int, l: int) -> int:  # 1-based j in [m], l in [k]
        return (j - 1) * k + (l - 1)

    def v(i: int) -> int:  # 1-based i in [n]
        return m * k + (i - 1)

    edges = []
    for j in range(1, m + 1):
        for i in sorted(sets[j - 1]):
            for l in range(1, k + 1):
                edges.append((q(j, l), v(i)))
    for l in range(1, k + 1):
        col = [q(j, l) for j in range(1, m + 1)]
        edges.extend((a, b) for ai, a in enumerate(col) for b in col[ai + 1:])
    g = DiGraph.graph(m * k + n, edges)
    expected_edges = k * sum(len(s) for s in sets) + k * m * (m - 1) // 2
    assert len(g.sym_pairs()) == expected_edges
    roles = {q(j, l): f"q_{j}^{l}" for j in range(1, m + 1) for l in range(1, k + 1)}
    roles.update({v(i): f"v_{i}" for i in range(1, n + 1)})
    s_mask = bits(v(i) for i in range(1, n + 1))
    return ReductionInstance(
        source={"problem": "set_cover", "n": n, "sets": [sorted(s) for s in sets], "k": k},
        graph=g, roles=roles, target_set=s_mask)


def verify_setcover_reduction(inst: ReductionInstance) -> bool:
    src = inst.source
    want = setcover_solvable(src["n"], [set(s) for s in src["sets"]], src["k"])
    got, _ = is_constituency(inst.graph, inst.target_set)
    return want == got


# ---------------------------------------------------------------------------
# Constituency -> District
# ---------------------------------------------------------------------------

def constituency_to_district(g: DiGraph, s: int) -> ReductionInstance:
    """Pendant copies of T = V - S plus an apex joined to S; the target set
    is S together with the copies."""
    if not g.undirected:
        raise ValueError("source must be undirected")
    n = g.n
    t_list = [v for v in range(n) if not s >> v & 1]
    copy = {t: n + i for i, t in enumerate(t_list)}
    vhat = n + len(t_list)
    edges = list(g.sym_pairs())
    edges += [(t, copy[t]) for t in t_list]
    edges += [(u, vhat) for u in iter_bits(s)]
    gg = DiGraph.graph(vhat + 1, edges)
    assert len(gg.sym_pairs()) == len(g.sym_pairs()) + len(t_list) + s.bit_count()
    roles = {v: f"v_{v}" for v in range(n)}
    roles.update({copy[t]: f"t'_{t}" for t in t_list})
    roles[vhat] = "vhat"
    shat = s | bits(copy[t] for t in t_list)
    return ReductionInstance(source={"problem": "constituency", "graph6": None,
                                     "n": n, "edges": g.sym_pairs(), "set": bit_list(s)},
                             graph=gg, roles=roles, target_set=shat)


def verify_district_reduction(g: DiGraph, s: int) -> bool:
    inst = constituency_to_district(g, s)
    want, _ = is_constituency(g, s)
    got, _ = is_district(inst.graph, inst.target_set)
    return want == got


# ---------------------------------------------------------------------------
# Non-Constituency -> Non-Trivial Non-District
# ---------------------------------------------------------------------------

def nonconstituency_to_nontrivial_nondistrict(g: DiGraph, s: int) -> ReductionInstance:
    """Instance must be of empty type with |S| >= 2.

    Construction: a pendant copy v' of every vertex, a second copy t'' of
    every T-vertex forming a clique, a hub sigma'' adjacent to the S-copies
    and the T''-clique, and an apex vhat adjacent to S and its copies; each
    t'' is also attached to t'. The target graph has a non-trivial
    non-district iff S is a non-constituency of the source.
    """
    if not g.undirected:
        raise ValueError("source must be undirected")
    if not is_empty_type(g, s):
        raise ValueError("instance must be normalized to empty type")
    if s.bit_count() < 2:
        raise ValueError("the construction needs |S| >= 2")
    n = g.n
    prime = {v: n + v for v in range(n)}
    t_list = [v for v in range(n) if not s >> v & 1]
    second = {t: 2 * n + i for i, t in enumerate(t_list)}
    sigma = 2 * n + len(t_list)
    vhat = sigma + 1
    edges = list(g.sym_pairs())
    edges += [(v, prime[v]) for v in range(n)]
    for u in iter_bits(s):
        edges += [(vhat, u), (vhat, prime[u]), (prime[u], sigma)]
    edges += [(second[a], second[b]) for ai, a in enumerate(t_list)
              for b in t_list[ai + 1:]]
    for t in t_list:
        edges += [(second[t], sigma), (prime[t], second[t])]
    gg = DiGraph.graph(vhat + 1, edges)
    tcount = len(t_list)
    expected = (len(g.sym_pairs()) + n + 3 * s.bit_count()
                + tcount * (tcount - 1) // 2 + 2 * tcount)
    assert len(gg.sym_pairs()) == expected
    roles = {v: f"v_{v}" for v in range(n)}
    roles.update({prime[v]: f"v'_{v}" for v in range(n)})
    roles.update({second[t]: f"t''_{t}" for t in t_list})
    roles[sigma] = "sigma''"
    roles[vhat] = "vhat"
    return ReductionInstance(source={"problem": "non_constituency", "n": n,
                                     "edges": g.sym_pairs(), "set": bit_list(s)},
                             graph=gg, roles=roles)


def verify_nontrivial_nondistrict_reduction(g: DiGraph, s: int) -> bool:
    inst = nonconstituency_to_nontrivial_nondistrict(g, s)
    const, _ = is_constituency(g, s)
    got, _ = has_nontrivial_nondistrict(inst.graph)
    return got == (not const)


# ---------------------------------------------------------------------------
# Non-District -> Fixing Set
# ---------------------------------------------------------------------------

def nondistrict_to_fixingset(g: DiGraph, s: int) -> ReductionInstance:
    """Disjoint union of per-t gadgets; the target set is every non-hat copy.

    The gadget for t keeps a copy of G minus t's closed T-side neighbourhood
    plus a hat vertex adjacent to the copies of S cap N(t). Removing t's
    T-side neighbours entirely (rather than just their edges to the hat)
    makes the hat's district witnesses coincide with t's district witnesses
    under the avoidance-corrected district notion that the fixing-set
    characterization actually uses.
    """
    if not g.undirected:
        raise ValueError("source must be undirected")
    n = g.n
    t_list = [v for v in range(n) if not s >> v & 1]
    edges = []
    roles: dict[int, str] = {}
    shat = 0
    offset = 0
    for t in t_list:
        drop = (g.out[t] & ~s) | (1 << t)
        others = [v for v in range(n) if not drop >> v & 1]
        pos = {v: offset + i for i, v in enumerate(others)}
        that = offset + len(others)
        for a, b in g.sym_pairs():
            if a in pos and b in pos:
                edges.append((pos[a], pos[b]))
        for u in iter_bits(s & g.out[t]):
            edges.append((pos[u], that))
        shat |= bits(pos[v] for v in others)
        roles.update({pos[v]: f"{v}_{t}" for v in others})
        roles[that] = f"hat_{t}"
        offset += len(others) + 1
    gg = DiGraph.graph(offset, edges)
    return ReductionInstance(source={"problem": "non_district", "n": n,
                                     "edges": g.sym_pairs(), "set": bit_list(s)},
                             graph=gg, roles=roles, target_set=shat)


def verify_fixingset_reduction(g: DiGraph, s: int) -> bool:
    inst = nondistrict_to_fixingset(g, s)
    district, _ = is_district(g, s)
    fixing, _ = is_fixing_set(inst.graph, inst.target_set)
    return fixing == (not district)


# ---------------------------------------------------------------------------
# Non-Constituency -> Permis
# ---------------------------------------------------------------------------

def nonconstituency_to_permis(g: DiGraph, s: int) -> ReductionInstance:
    """Head path v-a-b with v joined to S, plus pendant copies of T; the
    stated permutation (v, a, b, T, T', S) is a permis iff S is a
    non-constituency. Instance must be of empty type."""
    if not g.undirected:
        raise ValueError("source must be undirected")
    if not is_empty_type(g, s):
        raise ValueError("instance must be normalized to empty type")
    n = g.n
    v_id, a_id, b_id = n, n + 1, n + 2
    t_list = [u for u in range(n) if not s >> u & 1]
    copy = {t: n + 3 + i for i, t in enumerate(t_list)}
    edges = list(g.sym_pairs())
    edges += [(u, v_id) for u in iter_bits(s)]
    edges += [(v_id, a_id), (a_id, b_id)]
    edges += [(t, copy[t]) for t in t_list]
    gg = DiGraph.graph(n + 3 + len(t_list), edges)
    assert len(gg.sym_pairs()) == len(g.sym_pairs()) + s.bit_count() + 2 + len(t_list)
    word = ([v_id, a_id, b_id] + t_list + [copy[t] for t in t_list]
            + bit_list(s))
    roles = {u: f"v_{u}" for u in range(n)}
    roles.update({v_id: "v", a_id: "a", b_id: "b"})
    roles.update({copy[t]: f"t'_{t}" for t in t_list})
    return ReductionInstance(source={"problem": "non_constituency", "n": n,
                                     "edges": g.sym_pairs(), "set": bit_list(s)},
                             graph=gg, roles=roles, target_word=tuple(word))


def verify_permis_reduction(g: DiGraph, s: int) -> bool:
    inst = nonconstituency_to_permis(g, s)
    const, _ = is_constituency(g, s)
    report = is_permis(inst.graph, inst.target_word)
    return report.is_permis == (not const)


# ---------------------------------------------------------------------------
# Non-Constituency -> Permissible
# ---------------------------------------------------------------------------

def nonconstituency_to_permissible(g: DiGraph, s: int) -> ReductionInstance:
    """Pendant copies of T plus a heptagon whose distinguished vertex is
    joined to S; the target graph is permissible iff S is a non-constituency.
    Instance must be of empty type."""
    if not g.undirected:
        raise ValueError("source must be undirected")
    if not is_empty_type(g, s):
        raise ValueError("instance must be normalized to empty type")
    n = g.n
    t_list = [u for u in range(n) if not s >> u & 1]
    copy = {t: n + i for i, t in enumerate(t_list)}
    a0 = n + len(t_list)  # distinguished heptagon vertex
    hepta = list(range(a0, a0 + 7))
    edges = list(g.sym_pairs())
    edges += [(t, copy[t]) for t in t_list]
    edges += [(hepta[i], hepta[(i + 1) % 7]) for i in range(7)]
    edges += [(u, a0) for u in iter_bits(s)]
    gg = DiGraph.graph(a0 + 7, edges)
    assert len(gg.sym_pairs()) == len(g.sym_pairs()) + len(t_list) + 7 + s.bit_count()
    roles = {u: f"v_{u}" for u in range(n)}
    roles.update({copy[t]: f"t'_{t}" for t in t_list})
    roles.update({h: f"hepta_{i}" for i, h in enumerate(hepta)})
    roles[a0] = "hepta_v"
    return ReductionInstance(source={"problem": "non_constituency", "n": n,
                                     "edges": g.sym_pairs(), "set": bit_list(s)},
                             graph=gg, roles=roles)


def verify_permissible_reduction(g: DiGraph, s: int) -> bool:
    inst = nonconstituency_to_permissible(g, s)
    const, _ = is_constituency(g, s)
    res = find_permis(inst.graph, exhaustive_limit=16)
    assert res.verdict != "unknown"
    return (res.verdict == "permissible") == (not const)


# ---------------------------------------------------------------------------
# Tautology -> Fixable (kernel network)
# ---------------------------------------------------------------------------

def tautology_to_fixable(phi: DnfExpression) -> ReductionInstance:
    """Literal pairs, a NOR layer per clause, a NOR collector for not-phi,
    and the output feeding a directed 3-cycle.

    Vertex order: x1, !x1, x2, !x2, ..., clauses, not_phi, phi, a, b, c.
    """
    na = phi.num_vars
    nc = len(phi.clauses)

    def pos_lit(i: int) -> int:  # variable i, 1-based
        return 2 * (i - 1)

    def neg_lit(i: int) -> int:
        return 2 * (i - 1) + 1

    def lit_vertex(lit: int) -> int:
        return pos_lit(lit) if lit > 0 else neg_lit(-lit)

    clause0 = 2 * na
    not_phi = clause0 + nc
    phi_v = not_phi + 1
    a, b, c = phi_v + 1, phi_v + 2, phi_v + 3
    arcs = []
    for i in range(1, na + 1):
        arcs += [(pos_lit(i), neg_lit(i)), (neg_lit(i), pos_lit(i))]
    for ci, cl in enumerate(phi.clauses):
        for lit in cl:
            arcs.append((lit_vertex(-lit), clause0 + ci))
    for ci in range(nc):
        arcs.append((clause0 + ci, not_phi))
    arcs += [(not_phi, phi_v), (phi_v, a), (a, b), (b, c), (c, a)]
    g = DiGraph(a + 3, arcs)
    assert g.num_arcs() == 2 * na + sum(len(cl) for cl in phi.clauses) + nc + 5
    roles = {}
    for i in range(1, na + 1):
        roles[pos_lit(i)] = f"lit_{i}"
        roles[neg_lit(i)] = f"lit_-{i}"
    roles.update({clause0 + ci: f"clause_{ci}" for ci in range(nc)})
    roles.update({not_phi: "not_phi", phi_v: "phi", a: "a", b: "b", c: "c"})
    word = (list(range(2 * na)) + [clause0 + ci for ci in range(nc)]
            + [not_phi, phi_v, a, b, c])
    return ReductionInstance(source={"problem": "tautology",
                                     "num_vars": na, "clauses": phi.clauses},
                             graph=g, roles=roles, target_word=tuple(word),
                             extra={"c3": (a, b, c)})


def _witness_config(phi: DnfExpression, inst: ReductionInstance, z: int,
                    abc_bits: int) -> int:
    """The proof's unfixed configuration for an assignment falsifying phi."""
    na = phi.num_vars
    nc = len(phi.clauses)
    x = 0
    for i in range(1, na + 1):
        if z >> (i - 1) & 1:
            x |= 1 << (2 * (i - 1))
        else:
            x |= 1 << (2 * (i - 1) + 1)
    for ci in range(nc):
        if phi.clause_value(ci, z):
            x |= 1 << (2 * na + ci)
    val = phi.value(z)
    if not val:
        x |= 1 << (2 * na + nc)  # not_phi
    else:
        x |= 1 << (2 * na + nc + 1)  # phi
    a, b, c = inst.extra["c3"]
    for k, vtx in enumerate((a, b, c)):
        if abc_bits >> k & 1:
            x |= 1 << vtx
    return x


def verify_fixable_reduction(phi: DnfExpression) -> bool:
    """Exhaustively check the correspondence at verifier scale (<= 8 vars).

    Yes direction: the proof's word fixes every configuration and the
    circuit values at the end of the word match the clause/phi evaluations.
    No direction: for each falsifying assignment and every choice of 3-cycle
    bits, the witness configuration is invariant under every update outside
    the 3-cycle, and the 3-cycle (kernel-less) never fixes.
    """
    if phi.num_vars > 8:
        raise ValueError("verifier limited to 8 variables")
    inst = tautology_to_fixable(phi)
    g = inst.graph
    na, nc = phi.num_vars, len(phi.clauses)
    word = inst.target_word
    # circuit evaluation check for every assignment
    for z in range(1 << na):
        x = 0
        for i in range(1, na + 1):
            if not z >> (i - 1) & 1:
                x |= 1 << (2 * (i - 1) + 1)  # set !x_i so updating x_i yields z_i
        y = apply_word(g, NetworkKind.KERNEL, x, word)
        for ci in range(nc):
            if bool(y >> (2 * na + ci) & 1) != phi.clause_value(ci, z):
                return False
        if bool(y >> (2 * na + nc) & 1) != (not phi.value(z)):
            return False
        if bool(y >> (2 * na + nc + 1) & 1) != phi.value(z):
            return False
    taut = phi.is_tautology()
    if taut:
        if g.n > 20:
            raise ValueError("target too large for the exhaustive sweep")
        from .networks import run_word_lanes, fixed_lane
        lanes = run_word_lanes(g, NetworkKind.KERNEL, word)
        return fixed_lane(g, NetworkKind.KERNEL, lanes) == (1 << (1 << g.n)) - 1
    # no direction
    abc = inst.extra["c3"]
    for z in range(1 << na):
        if phi.value(z):
            continue
        for abc_bits in range(8):
            x = _witness_config(phi, inst, z, abc_bits)
            for v in range(g.n):
                if v in abc:
                    continue
                if update_vertex(g, NetworkKind.KERNEL, x, v) != x:
                    return False
            if is_fixed_point(g, NetworkKind.KERNEL, x):
                return False
    c3, _ = g.induced(bits(abc))
    from .networks import fixed_points
    return fixed_points(c3, NetworkKind.KERNEL) == []


# ---------------------------------------------------------------------------
# 3-Tautology (literals at most twice) -> Fixable, oriented, degree <= 2
# ---------------------------------------------------------------------------

def tautology3_to_fixable_refined(phi: DnfExpression,
                                  epsilon: Fraction) -> ReductionInstance:
    """Oriented target of max in/out-degree 2 that is (1-epsilon)-fixable.

    Adds ceil(-log2 eps) padding variables as singleton clauses, replaces
    each variable pair by a directed 4-cycle u -> !u -> u. -> !u. -> u so
    every literal value has two carrier vertices, and decomposes wide gates
    into fan-in-2 NOR/NOT trees.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    occ = phi.literal_occurrences()
    if any(len(cl) > 3 for cl in phi.clauses):
        raise ValueError("clause width must be at most 3")
    if any(cnt > 2 for cnt in occ.values()):
        raise ValueError("each literal may appear at most twice")
    pad = max(0, ceil(-log2(float(epsilon)))) if epsilon < 1 else 0
    nv = phi.num_vars + pad
    clauses = list(phi.clauses) + [(phi.num_vars + i + 1,) for i in range(pad)]

    arcs: list[tuple[int, int]] = []
    roles: dict[int, str] = {}

    def v_pos(i):
        return 4 * (i - 1)

    def v_neg(i):
        return 4 * (i - 1) + 1

    def v_posdot(i):
        return 4 * (i - 1) + 2

    def v_negdot(i):
        return 4 * (i - 1) + 3

    for i in range(1, nv + 1):
        arcs += [(v_pos(i), v_neg(i)), (v_neg(i), v_posdot(i)),
                 (v_posdot(i), v_negdot(i)), (v_negdot(i), v_pos(i))]
        roles[v_pos(i)] = f"lit_{i}"
        roles[v_neg(i)] = f"lit_-{i}"
        roles[v_posdot(i)] = f"lit_{i}."
        roles[v_negdot(i)] = f"lit_-{i}."
    # carriers[value-literal] = vertices holding that literal's value after w'
    carriers = {}
    for i in range(1, nv + 1):
        carriers[i] = [v_pos(i), v_posdot(i)]
        carriers[-i] = [v_neg(i), v_negdot(i)]
    used: dict[int, int] = {}

    def take_carrier(value_lit: int) -> int:
        for cand in carriers[value_lit]:
            if used.get(cand, 0) == 0:
                used[cand] = 1
                return cand
        raise AssertionError("carrier capacity exceeded; precondition broken")

    nxt = 4 * nv
    word2: list[int] = []

    def new_vertex(role: str) -> int:
        nonlocal nxt
        v = nxt
        nxt += 1
        roles[v] = role
        word2.append(v)
        return v

    clause_out = []
    for ci, cl in enumerate(clauses):
        ins = [take_carrier(-lit) for lit in cl]  # NOR of negations = AND of literals
        if len(ins) == 1:
            out = new_vertex(f"clause_{ci}")
            arcs.append((ins[0], out))
        elif len(ins) == 2:
            out = new_vertex(f"clause_{ci}")
            arcs += [(ins[0], out), (ins[1], out)]
        else:
            g1 = new_vertex(f"clause_{ci}_and01")
            arcs += [(ins[0], g1), (ins[1], g1)]
            h1 = new_vertex(f"clause_{ci}_nand01")
            arcs.append((g1, h1))
            out = new_vertex(f"clause_{ci}")
            arcs += [(h1, out), (ins[2], out)]
        clause_out.append(out)

    def or_tree(nodes: list[int], tag: str) -> int:
        """Vertex holding the OR of the given gate outputs."""
        if len(nodes) == 1:
            return nodes[0]
        mid = len(nodes) // 2
        left = or_tree(nodes[:mid], tag + "l")
        right = or_tree(nodes[mid:], tag + "r")
        nor = new_vertex(f"or_{tag}_nor")
        arcs.append((left, nor))
        arcs.append((right, nor))
        out = new_vertex(f"or_{tag}")
        arcs.append((nor, out))
        return out

    if len(clause_out) == 1:
        not_psi = new_vertex("not_psi")
        arcs.append((clause_out[0], not_psi))
    else:
        mid = len(clause_out) // 2
        left = or_tree(clause_out[:mid], "L")
        right = or_tree(clause_out[mid:], "R")
        not_psi = new_vertex("not_psi")
        arcs += [(left, not_psi), (right, not_psi)]
    psi = new_vertex("psi")
    arcs.append((not_psi, psi))
    a = nxt
    b, c = a + 1, a + 2
    nxt += 3
    roles.update({a: "a", b: "b", c: "c"})
    arcs += [(psi, a), (a, b), (b, c), (c, a)]
    g = DiGraph(nxt, arcs)
    word1 = []
    for i in range(1, nv + 1):
        word1 += [v_neg(i), v_posdot(i), v_negdot(i)]
    word = tuple(word1 + word2 + [a, b, c])
    return ReductionInstance(
        source={"problem": "3tautology", "num_vars": phi.num_vars,
                "clauses": phi.clauses, "epsilon": str(epsilon), "pad": pad},
        graph=g, roles=roles, target_word=word,
        extra={"psi_vars": nv, "psi_clauses": tuple(tuple(cl) for cl in clauses),
               "c3": (a, b, c), "not_psi": not_psi, "psi": psi})


def verify_refined_reduction(phi: DnfExpression, epsilon: Fraction) -> bool:
    """Check orientedness, the degree bound, and the fixing fraction."""
    inst = tautology3_to_fixable_refined(phi, epsilon)
    g = inst.graph
    if g.sym_pairs():
        return False
    for v in range(g.n):
        if g.out[v].bit_count() > 2 or g.inn[v].bit_count() > 2:
            return False
    if g.n > 20:
        raise ValueError("target too large for the exhaustive sweep")
    frac = word_fix_fraction(g, NetworkKind.KERNEL, inst.target_word)
    if frac < 1 - epsilon:
        return False
    psi = DnfExpression(inst.extra["psi_vars"], inst.extra["psi_clauses"])
    if psi.is_tautology():
        return frac == 1
    return True
