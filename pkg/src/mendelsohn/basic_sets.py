"""Seed dipath tables for decomposing the digon blow-up of X(m, {1,3}).

``g_digraph(m)`` has 10m arcs (differences 1, 3 and the "vertical"
arcs of difference 0), so a directed m-cycle factorization needs five
factors of two cycles each.  Writing ``m = p + 12k`` with
``p in {11, 13, 17, 19}`` covers every odd m >= 11 not divisible by 3.

For each p this module carries five *basic sets* of dipaths over the
index window ``0 .. p+14``:

* three sets of eight dipaths (W, X, Y, Z, Q, R, S, T) that generate a
  factor of two type-2 cycles, and
* two sets of four dipaths (X, Y, R, S) that generate a factor of two
  type-1 cycles.

The "heads" (W/X/Y/Z, resp. X/Y) live on indices below p plus a
terminus at ``p``..``p+2``; the "tails" (Q/R/S/T, resp. R/S) cross the
window ``p .. p+11`` and advance their endpoint by exactly 12.  A
factor for general k is assembled by chaining k shifted copies of each
tail (shift 12 per copy) between the heads; for ``k = 0`` the tails
are truncated to their sources and the heads alone close up.

``check_basic_set`` re-derives the six defining conditions (C1-C6
below) for given k, and ``check_cover_hypothesis`` confirms that the
five sets together consume every out-arc of the seed windows exactly
once -- together these guarantee the assembled five factors partition
the arcs for every k.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Dict, List, Sequence, Tuple

from .core import (
    DirectedCycle,
    UnsupportedOrderError,
    Vertex,
    cycle_type,
    join_cycle,
)

__all__ = [
    "BasicSet",
    "basic_set_tables",
    "truncate_for_k0",
    "instantiate",
    "check_basic_set",
    "extend_type2",
    "extend_type1",
    "extend",
    "check_cover_hypothesis",
    "SUPPORTED_P",
]

SUPPORTED_P = (11, 13, 17, 19)

RawPath = Tuple[Tuple[str, int], ...]  # ((layer, raw index), ...)
Piece = Tuple[Vertex, ...]


@dataclass(frozen=True)
class BasicSet:
    """One seed table: heads and tails as raw (layer, index) paths.

    ``cycle_kind`` is the type (1 or 2) of the two directed m-cycles
    the set generates.  Type-2 sets have four heads (W, X, Y, Z) and
    four tails (Q, R, S, T); type-1 sets two heads (X, Y) and two
    tails (R, S).
    """

    p: int
    cycle_kind: int
    heads: Tuple[RawPath, ...]
    tails: Tuple[RawPath, ...]

    @property
    def paths(self) -> Tuple[RawPath, ...]:
        return self.heads + self.tails


def _raw(spec: str) -> RawPath:
    return tuple((tok[0], int(tok[1:])) for tok in spec.split())


def _set2(w, x, y, z, q, r, s, t, p) -> BasicSet:
    return BasicSet(p, 2, tuple(map(_raw, (w, x, y, z))), tuple(map(_raw, (q, r, s, t))))


def _set1(x, y, r, s, p) -> BasicSet:
    return BasicSet(p, 1, (_raw(x), _raw(y)), (_raw(r), _raw(s)))


_TABLES: Dict[int, List[BasicSet]] = {
    11: [
        _set2(
            "x0 x3 x4 y7 x7 y8 y11",
            "y0 y1 y4 y5 x8 x11",
            "x1 y2 x5 x6 x9 x10 y10 x13",
            "x2 y3 y6 y9 x12",
            "y11 y14 y17 y18 y19 x22 y23",
            "x11 y12 y13 x16 x17 y20 x23",
            "x13 x14 x15 y16 x19 x20 x21 y22 x25",
            "x12 y15 x18 y21 x24",
            11,
        ),
        _set2(
            "x0 y1 x4 y5 y8 y9 x9 x12",
            "x1 y4 x7 y10 x11",
            "y0 y3 x3 x6 y6 y7 x10 y13",
            "y2 x2 x5 x8 y11",
            "x12 y12 y15 x15 x18 y18 y21 x21 x24",
            "x11 y14 x17 x20 x23",
            "y13 x13 y16 x16 y19 x19 y22 x22 y25",
            "y11 x14 y17 y20 y23",
            11,
        ),
        _set2(
            "x0 y3 x6 y9 y10 y11",
            "y0 x3 y4 y7 x8 y8 x11",
            "y1 x1 x4 x7 x10 x13",
            "x2 y2 y5 x5 y6 x9 y12",
            "y11 x12 y13 y16 y17 x20 y23",
            "x11 x14 x17 x18 y19 y22 x23",
            "x13 y14 y15 x16 x19 y20 y21 x22 x25",
            "y12 x15 y18 x21 y24",
            11,
        ),
        _set1(
            "x0 y0 x1 y1 x2 x3 y6 x7 x8 y9 x10 x11",
            "y2 y3 x4 y4 x5 y5 x6 y7 y8 x9 y10 y13",
            "x11 y11 y12 x12 x13 x16 y17 x17 y18 x18 x19 x22 x23",
            "y13 x14 y14 x15 y15 y16 y19 x20 y20 x21 y21 y22 y25",
            11,
        ),
        _set1(
            "y0 x0 x1 x2 y5 y6 x6 x7 y7 y10 x10 y11",
            "y1 y2 x3 y3 y4 x4 x5 y8 x8 x9 y9 y12",
            "y11 x11 x12 x15 x16 y16 x17 y17 x18 x21 x22 y22 y23",
            "y12 x13 y13 y14 x14 y15 y18 x19 y19 y20 x20 y21 y24",
            11,
        ),
    ],
    13: [
        _set2(
            "y0 x1 x2 y5 x6 x9 y12 x13",
            "x0 y3 y4 y7 y10 x10 y13",
            "y1 x4 x5 x8 y9 x12 y15",
            "y2 x3 y6 x7 y8 x11 y11 y14",
            "x13 y16 y19 x20 x21 y24 x25",
            "y13 x14 x15 y18 x19 y22 y25",
            "y15 x16 y17 x18 y21 x22 y23 x24 y27",
            "y14 x17 y20 x23 y26",
            13,
        ),
        _set2(
            "x0 y0 x3 x6 x7 y10 y11 x14",
            "x1 y4 x5 y6 y9 x10 x13",
            "y2 y5 x8 x11 y14",
            "y1 x2 y3 x4 y7 y8 x9 x12 y12 y15",
            "x14 x17 x20 x23 x26",
            "x13 y13 y16 x16 x19 y19 y22 x22 x25",
            "y14 y17 y20 y23 y26",
            "y15 x15 x18 y18 y21 x21 x24 y24 y27",
            13,
        ),
        _set2(
            "x0 x3 y3 y6 x9 y10 y13",
            "y0 y1 y4 x7 x8 y11 x12 x13",
            "x2 y2 x5 x6 y7 x10 x11 x14",
            "x1 x4 y5 y8 y9 y12 x15",
            "y13 y14 y15 x18 x19 x22 y25",
            "x13 x16 y19 y20 y21 x24 x25",
            "x14 y17 x20 y23 x26",
            "x15 y16 x17 y18 x21 y22 x23 y24 x27",
            13,
        ),
        _set1(
            "y0 x0 y1 x1 y2 y3 x6 y6 y7 x7 x10 y11 y12 y13",
            "x2 x3 x4 y4 y5 x5 y8 x8 x9 y9 y10 x11 x12 x15",
            "y13 x13 y14 x14 y15 y18 y19 x19 y20 x20 y21 y24 y25",
            "x15 x16 y16 y17 x17 x18 x21 x22 y22 y23 x23 x24 x27",
            13,
        ),
        _set1(
            "x0 x1 y1 y2 x2 x5 y5 y6 x6 y9 x9 x10 y10 x13",
            "y0 y3 x3 y4 x4 x7 y7 x8 y8 y11 x11 y12 x12 y13",
            "x13 x14 y14 x15 y15 y16 x19 x20 y20 x21 y21 y22 x25",
            "y13 x16 x17 y17 y18 x18 y19 x22 x23 y23 y24 x24 y25",
            13,
        ),
    ],
    17: [
        _set2(
            "y0 x0 y3 x6 y7 x8 x11 y12 x15 x18",
            "x1 y2 x5 y6 y9 x10 x13 y14 y17",
            "y1 y4 y5 y8 x9 x12 y13 y16 x16 x19",
            "x2 x3 x4 x7 y10 y11 x14 y15 y18",
            "x18 y21 x24 y27 x30",
            "y17 x17 y20 x20 y23 x23 y26 x26 y29",
            "x19 y19 x22 y22 x25 y25 x28 y28 x31",
            "y18 x21 y24 x27 y30",
            17,
        ),
        _set2(
            "x1 x4 y4 x7 y7 x10 y10 y13 y14 x17",
            "x0 x3 y3 y6 x6 x9 y12 y15 x18",
            "y0 y1 y2 y5 x8 y11 x11 x14 x15 y16 x19",
            "x2 x5 y8 y9 x12 x13 x16 y17",
            "x17 y18 y19 y22 x23 y24 y25 y28 x29",
            "x18 x21 x24 x27 x30",
            "x19 x20 y21 x22 x25 x26 y27 x28 x31",
            "y17 y20 y23 y26 y29",
            17,
        ),
        _set2(
            "y0 x3 x6 x7 y8 y11 y14 x14 x17",
            "x0 x1 y4 x5 x8 y9 y12 x13 y16 y17",
            "y1 x2 y5 y6 x9 x10 y13 x16 y19",
            "y2 y3 x4 y7 y10 x11 x12 y15 x15 y18",
            "x17 x18 x19 y22 y23 x26 x29",
            "y17 x20 x23 x24 x25 y28 y29",
            "y19 y20 x21 x22 y25 y26 x27 x28 y31",
            "y18 y21 y24 y27 y30",
            17,
        ),
        _set1(
            "x0 y0 x1 y1 x4 y5 x5 x6 y6 x7 x10 x11 y11 y12 x12 x15 x16 x17",
            "y2 x2 y3 x3 y4 y7 y8 x8 x9 y9 y10 x13 y13 x14 y14 y15 y16 y19",
            "x17 y17 x18 y18 x19 x22 x23 y23 x24 y24 x25 x28 x29",
            "y19 x20 y20 y21 x21 y22 y25 x26 y26 y27 x27 y28 y31",
            17,
        ),
        _set1(
            "x0 y1 x1 x2 y2 x3 y6 y7 x7 x8 y8 x11 y14 x15 y15 x16 y16 x17",
            "y0 y3 y4 x4 x5 y5 x6 y9 x9 y10 x10 y11 x12 y12 y13 x13 x14 y17",
            "x17 x20 x21 y21 y22 x22 y23 y24 x24 y25 x25 y26 x29",
            "y17 y18 x18 y19 x19 y20 x23 x26 x27 y27 y28 x28 y29",
            17,
        ),
    ],
    19: [
        _set2(
            "y0 y1 x4 y4 y7 x10 x13 y14 y17 x20",
            "x1 y2 y5 y6 x7 y10 x11 y12 y13 y16 y19",
            "x0 y3 x3 x6 y9 x9 x12 y15 x18 x21",
            "x2 x5 y8 x8 y11 x14 x15 x16 x17 y18 x19",
            "x20 y21 x22 y23 x26 y27 x28 y29 x32",
            "y19 y22 y25 y28 y31",
            "x21 x24 x27 x30 x33",
            "x19 y20 x23 y24 x25 y26 x29 y30 x31",
            19,
        ),
        _set2(
            "y2 x2 y5 x8 y9 y12 x12 y13 x16 y17 x17 x20",
            "x1 x4 x7 y8 x11 x14 y15 y18 y21",
            "x0 y1 y4 x5 y6 x9 x10 y11 y14 x15 x18 y19",
            "y0 x3 y3 x6 y7 y10 x13 y16 x19",
            "x20 x21 y22 x23 x26 x27 y28 x29 x32",
            "y21 y24 y27 y30 y33",
            "y19 y20 y23 x24 x25 x28 y31",
            "x19 x22 y25 y26 y29 x30 x31",
            19,
        ),
        _set2(
            "y2 x5 y5 x6 x9 y10 y13 x13 x14 y17 y20",
            "y1 x1 y4 x7 x10 x11 y14 x17 x18 y21",
            "x0 y0 y3 y6 y9 x12 x15 y18 x21",
            "x2 x3 x4 y7 x8 y8 y11 y12 y15 y16 x16 x19",
            "y20 x20 x23 y23 y26 x26 x29 y29 y32",
            "y21 x24 y27 x30 y33",
            "x21 y24 x27 y30 x33",
            "x19 y19 x22 y22 x25 y25 x28 y28 x31",
            19,
        ),
        _set1(
            "y0 x1 y1 x2 y2 y3 x4 x5 x6 y6 y7 x7 x8 x11 y11 x12 y12 x13 x16 y19",
            "x0 x3 y4 y5 y8 x9 y9 y10 x10 y13 x14 y14 y15 x15 y16 x17 y17 y18 x18 x19",
            "y19 x20 y20 y21 x21 x22 x25 y28 y29 x29 x30 y30 y31",
            "x19 y22 y23 x23 x24 y24 y25 x26 y26 y27 x27 x28 x31",
            19,
        ),
        _set1(
            "y1 y2 x3 y6 x6 x7 y7 y8 y9 x10 y10 y11 x11 x12 x13 y13 y14 x14 x17 y20",
            "y0 x0 x1 x2 y3 y4 x4 y5 x5 x8 x9 y12 x15 y15 x16 y16 y17 x18 y18 y19",
            "y20 x21 y21 y22 x22 x23 y26 x27 y27 y28 x28 x29 y32",
            "y19 x19 x20 y23 y24 x24 y25 x25 x26 y29 y30 x30 y31",
            19,
        ),
    ],
}


def basic_set_tables(p: int) -> List[BasicSet]:
    """The five seed sets for p: three type-2 then two type-1."""
    if p not in _TABLES:
        raise UnsupportedOrderError(f"no seed tables for p={p}; need one of {SUPPORTED_P}")
    return list(_TABLES[p])


def truncate_for_k0(bs: BasicSet) -> BasicSet:
    """Replace each tail with the length-0 dipath at its source."""
    return replace(bs, tails=tuple((path[0],) for path in bs.tails))


def instantiate(path: RawPath, m: int, shift: int = 0) -> Piece:
    """Raw (layer, index) path to vertices mod m, optionally shifted."""
    return tuple(Vertex(layer, (idx + shift) % m, m) for layer, idx in path)


# ---------------------------------------------------------------------------
# the six defining conditions


def _disjoint(paths: Sequence[Piece]) -> List[str]:
    problems = []
    for i in range(len(paths)):
        for j in range(i + 1, len(paths)):
            shared = set(paths[i]) & set(paths[j])
            if shared:
                problems.append(f"paths {i} and {j} share {sorted(shared)}")
    return problems


def check_basic_set(bs: BasicSet, k: int) -> List[str]:
    """All C1-C6 failures of a seed set at m = p + 12k (empty if valid).

    For ``k = 0`` the set must already be truncated
    (:func:`truncate_for_k0`); the conditions then reduce to: tails of
    length 0, and the heads alone closing into two disjoint cycles of
    length m and the right type.

    For ``k >= 1``:

    * C1: tails pairwise vertex-disjoint; heads pairwise vertex-disjoint.
    * C2: each head starts at the 12k-shift of its partner's terminus
      (the cycle closure condition).
    * C3: head lengths pair up to p; tail lengths pair up to 12.
    * C4: heads run inside indices < p and end at index p, p+1 or p+2.
    * C5: each tail starts at its head's terminus.
    * C6: each tail advances its endpoint by 12, same layer, through
      interior vertices with indices in p .. p+11.
    """
    p, m = bs.p, bs.p + 12 * k
    if k < 0:
        raise UnsupportedOrderError(f"negative k={k}")
    problems = []
    heads = [instantiate(path, m) for path in bs.heads]
    tails = [instantiate(path, m) for path in bs.tails]
    nh = len(heads)

    if k == 0:
        for idx, path in enumerate(bs.tails):
            if len(path) != 1:
                problems.append(f"tail {idx} not truncated for k=0")
        if problems:
            return problems
        cycles = []
        try:
            if bs.cycle_kind == 2:
                w, x, y, z = heads
                q, r, s, t = tails
                cycles = [join_cycle([w, q, x, r]), join_cycle([y, s, z, t])]
            else:
                x, y = heads
                r, s = tails
                cycles = [join_cycle([x, r]), join_cycle([y, s])]
        except ValueError as exc:
            problems.append(f"C1: heads do not close: {exc}")
            return problems
        for idx, cyc in enumerate(cycles):
            if len(cyc) != m:
                problems.append(f"C1: cycle {idx} has length {len(cyc)} != {m}")
            if cycle_type(cyc) != bs.cycle_kind:
                problems.append(
                    f"C1: cycle {idx} has type {cycle_type(cyc)} != {bs.cycle_kind}"
                )
        if set(cycles[0].vertices) & set(cycles[1].vertices):
            problems.append("C1: the two cycles intersect")
        return problems

    problems += [f"C1 tails: {msg}" for msg in _disjoint(tails)]
    problems += [f"C1 heads: {msg}" for msg in _disjoint(heads)]

    # C2: pair each head with the head its tail-chain feeds into
    partner = {0: 1, 1: 0, 2: 3, 3: 2} if nh == 4 else {0: 0, 1: 1}
    for i, path in enumerate(heads):
        target = heads[partner[i]]
        want = path[-1].shifted(-p)
        if target[0] != want:
            problems.append(
                f"C2: head {partner[i]} starts at {target[0]}, expected {want}"
            )

    def length(piece):
        return len(piece) - 1

    if bs.cycle_kind == 2:
        if length(heads[0]) + length(heads[1]) != p:
            problems.append("C3: len(W)+len(X) != p")
        if length(heads[2]) + length(heads[3]) != p:
            problems.append("C3: len(Y)+len(Z) != p")
        if length(tails[0]) + length(tails[1]) != 12:
            problems.append("C3: len(Q)+len(R) != 12")
        if length(tails[2]) + length(tails[3]) != 12:
            problems.append("C3: len(S)+len(T) != 12")
    else:
        if any(length(h) != p for h in heads):
            problems.append("C3: head length != p")
        if any(length(t) != 12 for t in tails):
            problems.append("C3: tail length != 12")

    for i, path in enumerate(bs.heads):
        if any(idx >= p for _, idx in path[:-1]):
            problems.append(f"C4: head {i} leaves indices 0..{p - 1}")
        if path[-1][1] not in (p, p + 1, p + 2):
            problems.append(f"C4: head {i} ends at index {path[-1][1]}")

    for i in range(len(tails)):
        if heads[i][-1] != tails[i][0]:
            problems.append(
                f"C5: tail {i} starts at {tails[i][0]}, expected {heads[i][-1]}"
            )

    for i, path in enumerate(bs.tails):
        (l0, i0), (l1, i1) = path[0], path[-1]
        if l0 != l1 or i1 != i0 + 12:
            problems.append(f"C6: tail {i} runs {l0}{i0} to {l1}{i1}, not +12")
        if any(not (p <= idx < p + 12) for _, idx in path[1:-1]):
            problems.append(f"C6: tail {i} interior leaves indices {p}..{p + 11}")
    return problems


# ---------------------------------------------------------------------------
# assembling cycles for arbitrary k


def _chained(head_a, tail_a, head_b, tail_b, m: int, k: int) -> DirectedCycle:
    pieces = [instantiate(head_a, m)]
    pieces += [instantiate(tail_a, m, 12 * j) for j in range(k)]
    pieces.append(instantiate(head_b, m))
    pieces += [instantiate(tail_b, m, 12 * j) for j in range(k)]
    return join_cycle(pieces)


def extend_type2(bs: BasicSet, k: int) -> Tuple[DirectedCycle, DirectedCycle]:
    """The two type-2 m-cycles a type-2 seed set generates at m = p + 12k."""
    if bs.cycle_kind != 2:
        raise ValueError("need a type-2 basic set")
    if k == 0:
        bs = truncate_for_k0(bs)
        k = 1  # a single truncated chunk per side closes the cycle
        m = bs.p
    else:
        m = bs.p + 12 * k
    w, x, y, z = bs.heads
    q, r, s, t = bs.tails
    return (
        _chained(w, q, x, r, m, k),
        _chained(y, s, z, t, m, k),
    )


def extend_type1(bs: BasicSet, k: int) -> Tuple[DirectedCycle, DirectedCycle]:
    """The two type-1 m-cycles a type-1 seed set generates at m = p + 12k."""
    if bs.cycle_kind != 1:
        raise ValueError("need a type-1 basic set")
    if k == 0:
        bs = truncate_for_k0(bs)
        k = 1
        m = bs.p
    else:
        m = bs.p + 12 * k
    x, y = bs.heads
    r, s = bs.tails
    return (
        join_cycle(
            [instantiate(x, m)] + [instantiate(r, m, 12 * j) for j in range(k)]
        ),
        join_cycle(
            [instantiate(y, m)] + [instantiate(s, m, 12 * j) for j in range(k)]
        ),
    )


def extend(bs: BasicSet, k: int) -> Tuple[DirectedCycle, DirectedCycle]:
    return extend_type2(bs, k) if bs.cycle_kind == 2 else extend_type1(bs, k)


# ---------------------------------------------------------------------------
# the arc-coverage hypothesis behind the factor assembly


def _out_arcs(v: Vertex) -> set:
    m = v.modulus
    other = "y" if v.layer == "x" else "x"
    return {
        (v, Vertex(v.layer, (v.index + 1) % m, m)),
        (v, Vertex(other, (v.index + 1) % m, m)),
        (v, Vertex(v.layer, (v.index + 3) % m, m)),
        (v, Vertex(other, (v.index + 3) % m, m)),
        (v, Vertex(other, v.index, m)),
    }


def check_cover_hypothesis(p: int) -> List[str]:
    """Seed arcs must cover each window vertex's five out-arcs exactly once.

    Checked at k = 1 (m = p + 12): the heads of the five sets consume
    every out-arc of every vertex with index < p; the tails consume
    every out-arc of every vertex with index in p .. p+11.  This is
    the hypothesis that makes the assembled factors arc-disjoint for
    every k.
    """
    m = p + 12
    problems = []
    head_arcs: List[Tuple[Vertex, Vertex]] = []
    tail_arcs: List[Tuple[Vertex, Vertex]] = []
    for bs in basic_set_tables(p):
        for path in bs.heads:
            piece = instantiate(path, m)
            head_arcs += list(zip(piece, piece[1:]))
        for path in bs.tails:
            piece = instantiate(path, m)
            tail_arcs += list(zip(piece, piece[1:]))
    for arcs, lo, hi, label in (
        (head_arcs, 0, p, "heads"),
        (tail_arcs, p, p + 12, "tails"),
    ):
        wanted = set()
        for idx in range(lo, hi):
            for layer in "xy":
                wanted |= _out_arcs(Vertex(layer, idx, m))
        have = list(arcs)
        if len(have) != len(set(have)):
            problems.append(f"{label}: some arc repeated")
        extra = set(have) - wanted
        missing = wanted - set(have)
        if extra:
            problems.append(f"{label}: unexpected arcs {sorted(extra)[:4]}")
        if missing:
            problems.append(f"{label}: missing arcs {sorted(missing)[:4]}")
    return problems
