"""Independent certification of claimed factorizations.

Nothing here trusts the construction modules.  The ambient digraph is
rebuilt from the header alone (via the core generators), and every
property is re-derived from raw vertex sequences:

* each listed cycle really is a directed cycle of the declared length
  whose arcs exist in the ambient digraph,
* the cycles of each factor are vertex-disjoint and span all vertices,
* across factors, every ambient arc is used exactly once.

Violations carry machine-readable codes:

==================== =====================================================
code                 meaning
==================== =====================================================
bad-header           kind/n/cycle_length are inconsistent
wrong-factor-count   number of factors != arcs(ambient) / n
bad-cycle-length     a cycle does not have cycle_length vertices
repeated-vertex      a cycle visits some vertex twice
unknown-vertex       a vertex outside the ambient vertex set
arc-not-in-ambient   a cycle uses an arc the ambient digraph lacks
factor-not-disjoint  two cycles of one factor share a vertex
factor-not-spanning  a factor misses some ambient vertex
arc-reused           an arc appears in more than one place
arc-missing          an ambient arc is covered by no factor
pair-repeated        (Mendelsohn check) an ordered pair covered twice
pair-missing         (Mendelsohn check) an ordered pair never covered
vertex-not-resolved  (Mendelsohn check) a factor's vertex counts are off
==================== =====================================================

``verify_mendelsohn`` is a deliberately separate implementation for
complete symmetric ambients: it counts consecutive ordered pairs the
way one checks a Mendelsohn design, sharing no set-algebra with
``verify_factorization``.  On complete ambients the two must agree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from .core import (
    Digraph,
    Factorization,
    InvalidOrderError,
    UnsupportedOrderError,
    Vertex,
    ambient_digraph,
)
from .serialize import RawFactorization, from_factorization

__all__ = [
    "Violation",
    "VerificationReport",
    "verify_factor",
    "verify_factorization",
    "verify_mendelsohn",
    "certify_file",
]


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    factor: Optional[int] = None
    cycle: Optional[int] = None

    def __str__(self) -> str:
        where = ""
        if self.factor is not None:
            where = f" [factor {self.factor}" + (
                f", cycle {self.cycle}]" if self.cycle is not None else "]"
            )
        return f"{self.code}{where}: {self.message}"


@dataclass
class VerificationReport:
    ok: bool
    violations: Tuple[Violation, ...]
    checked_arcs: int = 0
    factor_count: int = 0

    def codes(self) -> set:
        return {v.code for v in self.violations}

    def __str__(self) -> str:
        if self.ok:
            return (
                f"ok: {self.factor_count} factors, {self.checked_arcs} arcs, "
                "all checks passed"
            )
        head = f"FAILED: {len(self.violations)} violation(s)"
        return "\n".join([head] + [f"  {v}" for v in self.violations[:25]])


_MAX_PER_CODE = 50  # cap repeated reports so huge broken inputs stay readable


class _Collector:
    def __init__(self):
        self.violations: List[Violation] = []
        self._counts = Counter()

    def add(self, code, message, factor=None, cycle=None):
        self._counts[code] += 1
        if self._counts[code] <= _MAX_PER_CODE:
            self.violations.append(Violation(code, message, factor, cycle))


def _cycle_arcs(vertices: Sequence[Vertex]) -> List[Tuple[Vertex, Vertex]]:
    n = len(vertices)
    return [(vertices[i], vertices[(i + 1) % n]) for i in range(n)]


def verify_factor(
    cycles: Sequence[Sequence[Vertex]],
    ambient: Digraph,
    cycle_length: int,
    collector: Optional[_Collector] = None,
    factor_index: Optional[int] = None,
) -> List[Violation]:
    """Check one factor's cycles against an ambient digraph.

    Returns the violations found (also appended to ``collector`` when
    given, as used by :func:`verify_factorization`).
    """
    col = collector or _Collector()
    start = len(col.violations)
    seen_vertices = Counter()
    for ci, cyc in enumerate(cycles):
        if len(cyc) != cycle_length:
            col.add(
                "bad-cycle-length",
                f"cycle has {len(cyc)} vertices, expected {cycle_length}",
                factor_index,
                ci,
            )
        counts = Counter(cyc)
        for v, k in counts.items():
            if k > 1:
                col.add("repeated-vertex", f"{v} appears {k} times", factor_index, ci)
        for v in counts:
            if v not in ambient.vertices:
                col.add("unknown-vertex", f"{v} not in ambient", factor_index, ci)
        seen_vertices.update(counts)
        if len(cyc) >= 2:
            for tail, head in _cycle_arcs(list(cyc)):
                if tail == head:
                    continue  # already reported as repeated-vertex
                if (
                    tail in ambient.vertices
                    and head in ambient.vertices
                    and not _has_arc(ambient, tail, head)
                ):
                    col.add(
                        "arc-not-in-ambient",
                        f"{tail}->{head} is not an ambient arc",
                        factor_index,
                        ci,
                    )
    for v, k in seen_vertices.items():
        if k > 1 and v in ambient.vertices:
            col.add(
                "factor-not-disjoint",
                f"{v} lies on {k} cycles of one factor",
                factor_index,
            )
    missing = ambient.vertices - set(seen_vertices)
    for v in sorted(missing):
        col.add("factor-not-spanning", f"{v} not covered", factor_index)
    return col.violations[start:]


_ARCSET_CACHE: dict = {}


def _has_arc(ambient: Digraph, tail: Vertex, head: Vertex) -> bool:
    key = id(ambient)
    pairs = _ARCSET_CACHE.get(key)
    if pairs is None or pairs[0] is not ambient:
        pairs = (ambient, {(a.tail, a.head) for a in ambient.arcs})
        _ARCSET_CACHE.clear()
        _ARCSET_CACHE[key] = pairs
    return (tail, head) in pairs[1]


def _as_raw(fac: Union[Factorization, RawFactorization]) -> RawFactorization:
    if isinstance(fac, Factorization):
        return from_factorization(fac)
    return fac


def verify_factorization(
    fac: Union[Factorization, RawFactorization],
    ambient: Optional[Digraph] = None,
) -> VerificationReport:
    """Full check: factors are valid and together partition the ambient arcs.

    The ambient digraph is rebuilt from the header unless one is passed
    explicitly.
    """
    raw = _as_raw(fac)
    col = _Collector()
    if ambient is None:
        try:
            ambient = ambient_digraph(raw.kind, raw.n, raw.cycle_length)
        except (ValueError, UnsupportedOrderError, InvalidOrderError) as exc:
            col.add("bad-header", str(exc))
            return VerificationReport(False, tuple(col.violations))
    if raw.n != ambient.order:
        col.add("bad-header", f"header n={raw.n} but ambient has {ambient.order}")
    expected_factors, remainder = divmod(ambient.size, ambient.order)
    if remainder != 0:
        col.add(
            "bad-header",
            f"ambient size {ambient.size} not divisible by order {ambient.order}",
        )
    if len(raw.factors) != expected_factors:
        col.add(
            "wrong-factor-count",
            f"{len(raw.factors)} factors, expected {expected_factors}",
        )
    arc_uses = Counter()
    for fi, cycles in enumerate(raw.factors):
        verify_factor(cycles, ambient, raw.cycle_length, col, fi)
        for cyc in cycles:
            if len(cyc) >= 2 and len(set(cyc)) == len(cyc):
                arc_uses.update(_cycle_arcs(list(cyc)))
    for (tail, head), k in sorted(arc_uses.items()):
        if k > 1:
            col.add("arc-reused", f"{tail}->{head} used {k} times")
    covered = set(arc_uses)
    for arc in ambient.sorted_arcs():
        if (arc.tail, arc.head) not in covered:
            col.add("arc-missing", f"{arc.tail}->{arc.head} never used")
    return VerificationReport(
        ok=not col.violations,
        violations=tuple(col.violations),
        checked_arcs=sum(arc_uses.values()),
        factor_count=len(raw.factors),
    )


def verify_mendelsohn(
    fac: Union[Factorization, RawFactorization]
) -> VerificationReport:
    """Check the Mendelsohn-design view of a complete symmetric factorization.

    Counts, for every ordered pair of distinct vertices, how often the
    pair occurs consecutively around the listed cycles: each must occur
    exactly once.  Resolvability is checked by per-factor vertex
    counts.  This is an independent implementation from
    :func:`verify_factorization`; on complete ambients the two verdicts
    must coincide.
    """
    raw = _as_raw(fac)
    col = _Collector()
    if raw.kind != "complete_symmetric":
        col.add("bad-header", f"Mendelsohn check needs complete_symmetric, got {raw.kind}")
        return VerificationReport(False, tuple(col.violations))
    n, m = raw.n, raw.cycle_length
    points = [Vertex("v", i, n) for i in range(n)]
    point_set = set(points)
    pair_counts: Counter = Counter()
    for fi, cycles in enumerate(raw.factors):
        vertex_counts: Counter = Counter()
        for ci, cyc in enumerate(cycles):
            if len(cyc) != m:
                col.add(
                    "bad-cycle-length",
                    f"block has {len(cyc)} points, expected {m}",
                    fi,
                    ci,
                )
            for v in cyc:
                if v not in point_set:
                    col.add("unknown-vertex", f"{v} is not a point", fi, ci)
                vertex_counts[v] += 1
            for i, v in enumerate(cyc):
                w = cyc[(i + 1) % len(cyc)]
                if v != w:
                    pair_counts[(v, w)] += 1
        for v in points:
            if vertex_counts[v] != 1:
                col.add(
                    "vertex-not-resolved",
                    f"{v} occurs {vertex_counts[v]} times in factor",
                    fi,
                )
    for u in points:
        for w in points:
            if u == w:
                continue
            k = pair_counts[(u, w)]
            if k == 0:
                col.add("pair-missing", f"pair ({u},{w}) never consecutive")
            elif k > 1:
                col.add("pair-repeated", f"pair ({u},{w}) consecutive {k} times")
    if len(raw.factors) != n - 1:
        col.add(
            "wrong-factor-count", f"{len(raw.factors)} factors, expected {n - 1}"
        )
    return VerificationReport(
        ok=not col.violations,
        violations=tuple(col.violations),
        checked_arcs=sum(pair_counts.values()),
        factor_count=len(raw.factors),
    )


def certify_file(path, mendelsohn: bool = False) -> VerificationReport:
    """Load a factorization file and verify it (optionally also as a design)."""
    from . import serialize

    raw = serialize.load(path)
    report = verify_factorization(raw)
    if mendelsohn and raw.kind == "complete_symmetric":
        design = verify_mendelsohn(raw)
        if not design.ok:
            report = VerificationReport(
                ok=False,
                violations=report.violations + design.violations,
                checked_arcs=report.checked_arcs,
                factor_count=report.factor_count,
            )
    return report
