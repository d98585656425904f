"""The four Boolean networks and their sequential dynamics.

Update rules (x_v is vertex v's Boolean state, u ranges over in-neighbours):

    MIS:         x_v <- AND_u not x_u            (1 when no in-neighbours)
    Kernel:      x_v <- AND_u not x_u            (same rule; digraph reading)
    Independent: x_v <- x_v and AND_u not x_u    (x_v when no in-neighbours)
    Dominating:  x_v <- x_v or AND_u not x_u     (1 when no in-neighbours)

On undirected graphs MIS and Kernel coincide; MIS is the undirected reading.
Fixed points are, respectively: maximal independent sets, kernels,
independent sets, dominating sets.

Besides the scalar dynamics there is a transposed bit-parallel layer: one
big-int lane per vertex, bit i of lane v holding vertex v's state on the
trajectory started from configuration i. A single vertex update then
processes all 2^n start configurations in a handful of big-int operations.
"""

from __future__ import annotations

import enum
from typing import Optional, Sequence

import numpy as np

from .graphs import MAX_ENUM_VERTICES, DiGraph


class NetworkKind(enum.Enum):
    MIS = "mis"
    KERNEL = "kernel"
    INDEPENDENT = "independent"
    DOMINATING = "dominating"


Word = Sequence[int]


def is_permutation(n: int, w: Word) -> bool:
    return len(w) == n and sorted(w) == list(range(n))


def visited(w: Word) -> int:
    """[w]: the set of vertices a word visits, as a mask."""
    m = 0
    for v in w:
        m |= 1 << v
    return m


def subword(w: Word, mask: int) -> tuple[int, ...]:
    """w[S]: the subword induced by a vertex-set mask."""
    return tuple(v for v in w if mask >> v & 1)


# ---------------------------------------------------------------------------
# Scalar dynamics
# ---------------------------------------------------------------------------

def update_vertex(g: DiGraph, kind: NetworkKind, x: int, v: int) -> int:
    """Apply the kind's local rule at v, leaving all other bits unchanged."""
    quiet = (x & g.inn[v]) == 0  # no in-neighbour is 1
    if kind in (NetworkKind.MIS, NetworkKind.KERNEL):
        bit = quiet
    elif kind is NetworkKind.INDEPENDENT:
        bit = quiet and bool(x >> v & 1)
    else:
        bit = quiet or bool(x >> v & 1)
    return (x | (1 << v)) if bit else (x & ~(1 << v))


def apply_word(g: DiGraph, kind: NetworkKind, x: int, w: Word,
               record: bool = False):
    """Left-to-right sequential composition of single-vertex updates.

    With record=True returns (endpoint, trajectory) where trajectory is the
    list y^0..y^l of intermediate configurations.
    """
    traj = [x] if record else None
    for v in w:
        x = update_vertex(g, kind, x, v)
        if record:
            traj.append(x)
    if record:
        return x, traj
    return x


def _synchronous(g: DiGraph, kind: NetworkKind, x: int) -> int:
    y = 0
    for v in range(g.n):
        if update_vertex(g, kind, x, v) >> v & 1:
            y |= 1 << v
    return y


def is_fixed_point(g: DiGraph, kind: NetworkKind, x: int) -> bool:
    """True iff applying the rule at every vertex simultaneously returns x."""
    return _synchronous(g, kind, x) == x


# ---------------------------------------------------------------------------
# Bit-parallel lanes
# ---------------------------------------------------------------------------

def _require_enumerable(n: int) -> None:
    if n > MAX_ENUM_VERTICES:
        raise ValueError(
            f"exhaustive sweep over 2^{n} configurations refused (limit "
            f"n <= {MAX_ENUM_VERTICES})")


def initial_lanes(n: int) -> list[int]:
    """Identity lanes: bit i of lane v is bit v of the integer i."""
    lanes = []
    total = 1 << n
    for v in range(n):
        block = 1 << v
        pat = ((1 << block) - 1) << block  # one block of ones in a 2*block window
        width = 2 * block
        while width < total:
            pat |= pat << width
            width *= 2
        lanes.append(pat & ((1 << total) - 1))
    return lanes


def update_lane(g: DiGraph, kind: NetworkKind, lanes: list[int], v: int,
                full: int) -> None:
    """In-place bit-parallel single-vertex update across all lanes."""
    acc = 0
    for u in g.in_list[v]:
        acc |= lanes[u]
    quiet = ~acc & full
    if kind in (NetworkKind.MIS, NetworkKind.KERNEL):
        lanes[v] = quiet
    elif kind is NetworkKind.INDEPENDENT:
        lanes[v] = lanes[v] & quiet
    else:
        lanes[v] = lanes[v] | quiet


def run_word_lanes(g: DiGraph, kind: NetworkKind, w: Word,
                   lanes: Optional[list[int]] = None) -> list[int]:
    """Apply a word to every start configuration at once; returns end lanes."""
    _require_enumerable(g.n)
    if lanes is None:
        lanes = initial_lanes(g.n)
    else:
        lanes = list(lanes)
    full = (1 << (1 << g.n)) - 1
    for v in w:
        update_lane(g, kind, lanes, v, full)
    return lanes


def lanes_to_configs(lanes: list[int], n: int) -> list[int]:
    """Transpose lanes back to one endpoint configuration per start index."""
    total = 1 << n
    if n == 0:
        return [0]
    cols = np.zeros(total, dtype=np.uint32)
    for v in range(n):
        raw = lanes[v].to_bytes(total // 8 if total >= 8 else 1, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8),
                             bitorder="little")[:total]
        cols |= bits.astype(np.uint32) << v
    return cols.tolist()


def batch_apply(g: DiGraph, kind: NetworkKind, w: Word) -> list[int]:
    """endpoints[i] = apply_word(g, kind, i, w) for every start config i."""
    lanes = run_word_lanes(g, kind, w)
    return lanes_to_configs(lanes, g.n)


def fixed_lane(g: DiGraph, kind: NetworkKind, lanes: list[int]) -> int:
    """Lane marking the start configs whose current configuration is fixed."""
    full = (1 << (1 << g.n)) - 1
    fixed = full
    for v in range(g.n):
        acc = 0
        for u in g.in_list[v]:
            acc |= lanes[u]
        quiet = ~acc & full
        if kind in (NetworkKind.MIS, NetworkKind.KERNEL):
            rule = quiet
        elif kind is NetworkKind.INDEPENDENT:
            rule = lanes[v] & quiet
        else:
            rule = lanes[v] | quiet
        fixed &= ~(lanes[v] ^ rule) & full
    return fixed


def fixed_points(g: DiGraph, kind: NetworkKind) -> list[int]:
    """All fixed points of the synchronous map, by exhaustive enumeration."""
    _require_enumerable(g.n)
    lanes = initial_lanes(g.n)
    mask = fixed_lane(g, kind, lanes)
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out
