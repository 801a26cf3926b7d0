"""Digraph primitives for directed-cycle decompositions.

Everything in this package works over a small vocabulary of immutable
values.  A :class:`Vertex` carries a *layer* tag and an integer index
modulo some ``m``.  Two-layer digraphs (the blown-up circulants used by
the constructions) put their vertices on layers ``"x"`` and ``"y"``;
plain complete symmetric digraphs use the single layer ``"v"``.

An *arc* is an ordered pair of distinct vertices.  For arcs between
layered vertices the *difference* ``(head.index - tail.index) mod m``
is the quantity the constructions track: a directed m-cycle on layered
vertices has differences summing to ``k * m`` for an integer ``k``, its
*type*.  Arcs joining the two layers at the same index ("vertical"
arcs) have difference 0.

The module also provides the generators every other module builds on:
complete symmetric digraphs, directed circulants, the wreath product
``g * h`` (blow-up of each vertex of ``g`` into a copy of ``h``), and
the rotation map ``rho`` that shifts all indices by one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "Vertex",
    "Arc",
    "Dipath",
    "DirectedCycle",
    "Factor",
    "Factorization",
    "Digraph",
    "InvalidOrderError",
    "InvalidConnectionSetError",
    "UnsupportedOrderError",
    "NonexistenceError",
    "PathConcatenationError",
    "MalformedCycleError",
    "ModulusMismatchError",
    "ConstructionError",
    "SearchExhaustedError",
    "SearchTimeoutError",
    "complete_symmetric",
    "directed_circulant",
    "empty_digraph",
    "wreath",
    "relabel_digraph",
    "blown_up_circulant",
    "h_digraph",
    "l_digraph",
    "g_digraph",
    "ambient_digraph",
    "arc_difference",
    "walk_arc_sum",
    "cycle_type",
    "apply_rho",
    "concatenate",
    "join_cycle",
    "vertex",
    "x_vertex",
    "y_vertex",
]


class InvalidOrderError(ValueError):
    """A digraph order that the generator cannot realize."""


class InvalidConnectionSetError(ValueError):
    """A circulant connection set outside {1, ..., m-1}."""


class UnsupportedOrderError(ValueError):
    """A parameter outside the range a construction supports."""


class NonexistenceError(ValueError):
    """The requested object provably does not exist.

    Carries a ``certificate`` attribute when the caller can inspect the
    reason machine-readably.
    """

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class PathConcatenationError(ValueError):
    """Dipaths that do not chain head-to-tail, or collide internally."""


class MalformedCycleError(ValueError):
    """A vertex sequence that is not a directed cycle."""


class ModulusMismatchError(ValueError):
    """Vertices from different cyclic groups combined in one arc."""


class ConstructionError(RuntimeError):
    """A construction produced output that failed its own verification."""


class SearchExhaustedError(RuntimeError):
    """A search ran to completion without finding the target object."""


class SearchTimeoutError(SearchExhaustedError):
    """A search hit its time budget before finding the target object."""


@dataclass(frozen=True, order=True)
class Vertex:
    """A vertex ``layer`` + ``index`` living in Z_modulus.

    Layers ``"x"`` and ``"y"`` are the two levels of a blown-up
    circulant; layer ``"v"`` is used for vertices of a plain complete
    symmetric digraph.
    """

    layer: str
    index: int
    modulus: int

    def __post_init__(self):
        if self.layer not in ("x", "y", "v"):
            raise ValueError(f"unknown layer {self.layer!r}")
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.index < self.modulus:
            raise ValueError(
                f"index {self.index} out of range for modulus {self.modulus}"
            )

    @property
    def token(self) -> str:
        return f"{self.layer}{self.index}"

    def shifted(self, amount: int) -> "Vertex":
        return Vertex(self.layer, (self.index + amount) % self.modulus, self.modulus)

    def __repr__(self) -> str:  # compact: x3 rather than Vertex('x', 3, 11)
        return self.token


def vertex(layer: str, index: int, modulus: int) -> Vertex:
    """Build a vertex with the index reduced modulo ``modulus``."""
    return Vertex(layer, index % modulus, modulus)


def x_vertex(index: int, modulus: int) -> Vertex:
    return vertex("x", index, modulus)


def y_vertex(index: int, modulus: int) -> Vertex:
    return vertex("y", index, modulus)


@dataclass(frozen=True, order=True)
class Arc:
    """An ordered pair of distinct vertices."""

    tail: Vertex
    head: Vertex

    def __post_init__(self):
        if self.tail == self.head:
            raise ValueError(f"loop at {self.tail}")

    def __repr__(self) -> str:
        return f"{self.tail!r}->{self.head!r}"


def _check_walk(vertices: Sequence[Vertex], *, closed: bool) -> tuple:
    seq = tuple(vertices)
    if closed and len(seq) < 2:
        raise MalformedCycleError("a directed cycle needs at least 2 vertices")
    if not closed and len(seq) < 1:
        raise PathConcatenationError("a dipath needs at least one vertex")
    if len(set(seq)) != len(seq):
        kind = MalformedCycleError if closed else PathConcatenationError
        seen = set()
        for v in seq:
            if v in seen:
                raise kind(f"repeated vertex {v}")
            seen.add(v)
    return seq


@dataclass(frozen=True)
class Dipath:
    """A directed path; ``length`` counts arcs, so a single vertex has length 0."""

    vertices: tuple

    def __init__(self, vertices: Iterable[Vertex]):
        object.__setattr__(self, "vertices", _check_walk(vertices, closed=False))

    @property
    def source(self) -> Vertex:
        return self.vertices[0]

    @property
    def terminus(self) -> Vertex:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def arcs(self) -> Iterator[Arc]:
        for a, b in itertools.pairwise(self.vertices):
            yield Arc(a, b)

    def shifted(self, amount: int) -> "Dipath":
        return Dipath(v.shifted(amount) for v in self.vertices)

    def __repr__(self) -> str:
        return " ".join(v.token for v in self.vertices)


@dataclass(frozen=True)
class DirectedCycle:
    """A directed cycle, stored in canonical rotation (least vertex first).

    Equality and hashing therefore ignore which vertex the caller
    started from, but not orientation.
    """

    vertices: tuple

    def __init__(self, vertices: Iterable[Vertex]):
        seq = _check_walk(vertices, closed=True)
        pivot = seq.index(min(seq))
        object.__setattr__(self, "vertices", seq[pivot:] + seq[:pivot])

    def __len__(self) -> int:
        return len(self.vertices)

    def arcs(self) -> Iterator[Arc]:
        for a, b in itertools.pairwise(self.vertices):
            yield Arc(a, b)
        yield Arc(self.vertices[-1], self.vertices[0])

    def shifted(self, amount: int) -> "DirectedCycle":
        return DirectedCycle(v.shifted(amount) for v in self.vertices)

    def __repr__(self) -> str:
        return "(" + " ".join(v.token for v in self.vertices) + ")"


@dataclass(frozen=True)
class Factor:
    """A candidate cycle factor: a set of cycles meant to span ``order`` vertices.

    Spanning-ness and disjointness are *not* enforced here; the
    verifier module owns those judgements.
    """

    cycles: frozenset
    order: int

    def __init__(self, cycles: Iterable[DirectedCycle], order: int):
        object.__setattr__(self, "cycles", frozenset(cycles))
        object.__setattr__(self, "order", order)

    def sorted_cycles(self) -> list:
        return sorted(self.cycles, key=lambda c: c.vertices)

    def arcs(self) -> Iterator[Arc]:
        for c in self.sorted_cycles():
            yield from c.arcs()


@dataclass(frozen=True)
class Factorization:
    """An ordered list of factors claimed to partition the arcs of an ambient digraph.

    ``kind`` names the ambient family (``"complete_symmetric"``, ``"H"``,
    ``"L"`` or ``"G"``), ``n`` its vertex count, and ``cycle_length`` the
    common length of all cycles.
    """

    kind: str
    n: int
    cycle_length: int
    factors: tuple

    def __init__(self, kind: str, n: int, cycle_length: int, factors: Iterable[Factor]):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "cycle_length", cycle_length)
        object.__setattr__(self, "factors", tuple(factors))


@dataclass(frozen=True)
class Digraph:
    """An immutable digraph: frozensets of vertices and arcs."""

    vertices: frozenset
    arcs: frozenset

    def __init__(self, vertices: Iterable, arcs: Iterable[Arc]):
        vset = frozenset(vertices)
        aset = frozenset(arcs)
        for arc in aset:
            if arc.tail not in vset or arc.head not in vset:
                raise ValueError(f"arc {arc} leaves the vertex set")
        object.__setattr__(self, "vertices", vset)
        object.__setattr__(self, "arcs", aset)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.arcs)

    def sorted_vertices(self) -> list:
        return sorted(self.vertices)

    def sorted_arcs(self) -> list:
        return sorted(self.arcs)

    def out_degree(self, v) -> int:
        return sum(1 for a in self.arcs if a.tail == v)


# ---------------------------------------------------------------------------
# generators


def complete_symmetric(n: int) -> Digraph:
    """K*_n: n vertices, all n(n-1) ordered pairs as arcs."""
    if n < 2:
        raise InvalidOrderError(f"complete symmetric digraph needs n >= 2, got {n}")
    verts = [Vertex("v", i, n) for i in range(n)]
    arcs = [Arc(u, w) for u in verts for w in verts if u != w]
    return Digraph(verts, arcs)


def directed_circulant(m: int, connections: Iterable[int]) -> Digraph:
    """X(m, D): vertices Z_m, arcs i -> i+d for each d in the connection set D."""
    if m < 2:
        raise InvalidOrderError(f"circulant needs m >= 2, got {m}")
    conn = sorted(set(connections))
    if not conn:
        raise InvalidConnectionSetError("empty connection set")
    for d in conn:
        if not 1 <= d <= m - 1:
            raise InvalidConnectionSetError(
                f"connection {d} outside 1..{m - 1} for modulus {m}"
            )
    verts = [Vertex("v", i, m) for i in range(m)]
    arcs = [Arc(v, v.shifted(d)) for v in verts for d in conn]
    return Digraph(verts, arcs)


def empty_digraph(n: int) -> Digraph:
    """n isolated vertices, no arcs."""
    if n < 1:
        raise InvalidOrderError(f"empty digraph needs n >= 1, got {n}")
    return Digraph([Vertex("v", i, n) for i in range(n)], [])


def wreath(g: Digraph, h: Digraph) -> Digraph:
    """The wreath product ``g`` into ``h``: blow up each vertex of g into a copy of h.

    Vertices are pairs ``(u, w)`` with u in V(g), w in V(h).  There is
    an arc ``(u1, w1) -> (u2, w2)`` iff ``u1 -> u2`` is an arc of g, or
    ``u1 == u2`` and ``w1 -> w2`` is an arc of h.
    """
    verts = [(u, w) for u in g.sorted_vertices() for w in h.sorted_vertices()]
    arcs = []
    for garc in g.arcs:
        for w1 in h.vertices:
            for w2 in h.vertices:
                arcs.append(Arc((garc.tail, w1), (garc.head, w2)))
    for u in g.vertices:
        for harc in h.arcs:
            arcs.append(Arc((u, harc.tail), (u, harc.head)))
    return Digraph(verts, arcs)


def relabel_digraph(g: Digraph, mapping: Mapping) -> Digraph:
    """Apply a vertex bijection to a digraph."""
    if len(set(mapping[v] for v in g.vertices)) != g.order:
        raise ValueError("relabeling is not injective on the vertex set")
    return Digraph(
        (mapping[v] for v in g.vertices),
        (Arc(mapping[a.tail], mapping[a.head]) for a in g.arcs),
    )


def blown_up_circulant(m: int, connections: Iterable[int], vertical: bool) -> Digraph:
    """X(m, D) wreath K2 (complete if ``vertical`` else empty), on layers x/y."""
    base = directed_circulant(m, connections)
    two = complete_symmetric(2) if vertical else empty_digraph(2)
    product = wreath(base, two)
    layer_of = {0: "x", 1: "y"}
    mapping = {
        (u, w): Vertex(layer_of[w.index], u.index, m) for (u, w) in product.vertices
    }
    return relabel_digraph(product, mapping)


def h_digraph(m: int) -> Digraph:
    """The blow-up of X(m, {1, m-1}) by two independent vertices: 2m vertices, 8m arcs."""
    if m < 3 or m % 2 == 0:
        raise UnsupportedOrderError(f"need odd m >= 3, got {m}")
    return blown_up_circulant(m, (1, m - 1), vertical=False)


def l_digraph(m: int) -> Digraph:
    """The blow-up of X(m, {1, 3}) by two independent vertices: 2m vertices, 8m arcs."""
    if m < 5 or m % 2 == 0:
        raise UnsupportedOrderError(f"need odd m >= 5, got {m}")
    return blown_up_circulant(m, (1, 3), vertical=False)


def g_digraph(m: int) -> Digraph:
    """The blow-up of X(m, {1, 3}) by a digon: 2m vertices, 10m arcs."""
    if m < 5 or m % 2 == 0:
        raise UnsupportedOrderError(f"need odd m >= 5, got {m}")
    return blown_up_circulant(m, (1, 3), vertical=True)


def ambient_digraph(kind: str, n: int, cycle_length: int) -> Digraph:
    """The ambient digraph a factorization of the given header claims to decompose."""
    if kind == "complete_symmetric":
        return complete_symmetric(n)
    builders = {"H": h_digraph, "L": l_digraph, "G": g_digraph}
    if kind not in builders:
        raise ValueError(f"unknown factorization kind {kind!r}")
    if n != 2 * cycle_length:
        raise InvalidOrderError(
            f"kind {kind} needs n = 2 * cycle_length, got n={n}, m={cycle_length}"
        )
    return builders[kind](cycle_length)


# ---------------------------------------------------------------------------
# arithmetic on layered walks


def arc_difference(arc: Arc) -> int:
    """(head - tail) mod m for an arc on layered vertices; vertical arcs give 0."""
    if arc.tail.modulus != arc.head.modulus:
        raise ModulusMismatchError(f"{arc} mixes moduli")
    return (arc.head.index - arc.tail.index) % arc.tail.modulus


def walk_arc_sum(walk: Union[Dipath, DirectedCycle]) -> int:
    """Sum of arc differences along a dipath or directed cycle (not reduced)."""
    return sum(arc_difference(a) for a in walk.arcs())


def cycle_type(cycle: DirectedCycle) -> int:
    """The integer k with arc differences summing to k*m.

    Every directed cycle on layered vertices modulo m sums to a
    multiple of m; anything else means the input was not closed.
    """
    m = cycle.vertices[0].modulus
    total = walk_arc_sum(cycle)
    if total % m != 0:
        raise MalformedCycleError(
            f"arc differences sum to {total}, not a multiple of {m}"
        )
    return total // m


def apply_rho(obj, shift: int = 1):
    """Shift every index by ``shift`` (mod m), preserving layers.

    Accepts a Vertex, Arc, Dipath, DirectedCycle, or Digraph and
    returns the same kind of object.
    """
    if isinstance(obj, Vertex):
        return obj.shifted(shift)
    if isinstance(obj, Arc):
        return Arc(obj.tail.shifted(shift), obj.head.shifted(shift))
    if isinstance(obj, (Dipath, DirectedCycle)):
        return obj.shifted(shift)
    if isinstance(obj, Digraph):
        return Digraph(
            (v.shifted(shift) for v in obj.vertices),
            (Arc(a.tail.shifted(shift), a.head.shifted(shift)) for a in obj.arcs),
        )
    raise TypeError(f"cannot rotate object of type {type(obj).__name__}")


def join_cycle(pieces: Sequence[Sequence[Vertex]]) -> DirectedCycle:
    """Concatenate vertex sequences sharing junction vertices into a cycle.

    Each piece must start at the previous piece's last vertex, and the
    final vertex must return to the start.  Unlike :func:`concatenate`
    this works on plain sequences, so a piece may itself close a cycle.
    """
    walk = list(pieces[0])
    for piece in pieces[1:]:
        if piece[0] != walk[-1]:
            raise PathConcatenationError(
                f"junction mismatch: {walk[-1]} then {piece[0]}"
            )
        walk.extend(piece[1:])
    if walk[0] != walk[-1]:
        raise PathConcatenationError(f"pieces do not close: {walk[0]} vs {walk[-1]}")
    return DirectedCycle(walk[:-1])


def concatenate(segments: Sequence[Dipath]):
    """Join dipaths end-to-start into one dipath, or a directed cycle if it closes.

    Consecutive segments must share exactly their junction vertex
    (terminus of one = source of the next); apart from junctions, no
    vertex may appear twice.  Length-0 segments are allowed and act as
    junction markers.
    """
    if not segments:
        raise PathConcatenationError("nothing to concatenate")
    for left, right in itertools.pairwise(segments):
        if left.terminus != right.source:
            raise PathConcatenationError(
                f"terminus {left.terminus} does not meet source {right.source}"
            )
    chain = list(segments[0].vertices)
    for seg in segments[1:]:
        chain.extend(seg.vertices[1:])
    if len(chain) > 1 and chain[0] == chain[-1]:
        return DirectedCycle(chain[:-1])
    return Dipath(chain)
