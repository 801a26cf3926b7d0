"""Four-factor decomposition of the blown-up {1,3} circulant (kind ``L``).

``l_digraph(m)`` is the blow-up of X(m, {1, 3}) by two independent
vertices: 8m arcs of differences 1 and 3 with free layer choice.  A
directed m-cycle here has arc differences summing to ``k*m`` (its
type); a factorization exists iff ``3`` does not divide ``m`` (and
``m >= 13``), in which case each of the four factors consists of one
type-1 cycle (all differences 1) and one type-3 cycle (all
differences 3).

Non-existence for ``3 | m`` is by counting: with ``k1`` arcs of
difference 1 and ``k2`` of difference 3, a type-t cycle needs
``k1 + k2 = m`` and ``k1 + 3*k2 = t*m``; the three possible types all
fail to produce a cycle through a difference-3 arc
(:func:`l_nonexistence_certificate` tabulates this).

The construction is a family of vertex-sequence tables indexed by
``m mod 6``: per factor, four short literal "heads" plus four
arithmetic "tail" chains of stride 1 or 3 whose length grows with m.
Pieces are stored as plain vertex tuples rather than dipath values
because at the smallest order the type-1 head already closes on its
own start.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .core import (
    ConstructionError,
    DirectedCycle,
    Factor,
    Factorization,
    NonexistenceError,
    UnsupportedOrderError,
    Vertex,
    join_cycle,
    l_digraph,
)
from .verify import verify_factorization

__all__ = [
    "LCaseTables",
    "NonexistenceCertificate",
    "case_tables",
    "l_nonexistence_certificate",
    "l_factorization",
]

Piece = Tuple[Vertex, ...]


def _literal(m: int, spec: str) -> Piece:
    """Parse a compact literal like 'y0 y1 x3' into vertices modulo m."""
    return tuple(Vertex(tok[0], int(tok[1:]) % m, m) for tok in spec.split())


def _chain(m: int, start: int, stride: int, stop: int, layers: Tuple[str, str]) -> Piece:
    """Vertices at raw indices start, start+stride, ..., stop (inclusive).

    ``layers`` gives the layer at even/odd positions along the chain;
    raw indices may pass m and wrap when reduced.
    """
    assert (stop - start) % stride == 0 and stop >= start
    return tuple(
        Vertex(layers[pos % 2], raw % m, m)
        for pos, raw in enumerate(range(start, stop + 1, stride))
    )


# Head pieces, shared by both residue cases.  Row i feeds factor i.
_W = (
    "y0 y1 y2 x3 x4 x5 y6 y7 x8 x9 x10 y11 x12 y13",
    "x0 x1 x2 y3 x4 y5 y6 x7 x8 y9 y10 x11 y12 x13",
    "x0 y1 x2 x3 y4 x5 x6 x7 y8 y9 x10 x11 x12 x13",
    "y0 x1 y2 y3 y4 y5 x6 y7 y8 x9 y10 y11 y12 y13",
)
_X = (
    "x2 y5 y8 x11 x14",
    "y2 x5 y8 y11 y14",
    "y2 y5 x8 y11 x14",
    "x2 x5 x8 x11 y14",
)
_Y = (
    "x1 y4 x7 y10 x13",
    "y1 y4 y7 x10 y13",
    "x1 x4 y7 y10 y13",
    "y1 x4 x7 x10 x13",
)
_Z = (
    "x0 y3 x6 y9 y12 x15",
    "y0 x3 x6 x9 x12 y15",
    "y0 y3 y6 x9 y12 y15",
    "x0 x3 y6 y9 x12 x15",
)

# (even-position layer, odd-position layer) of each tail chain, per factor.
_Q_LAYERS = (("y", "y"), ("x", "x"), ("x", "y"), ("y", "x"))
_R_LAYERS = (("x", "x"), ("y", "y"), ("x", "y"), ("y", "x"))
_S_LAYERS = (("x", "x"), ("y", "y"), ("y", "x"), ("x", "y"))
_T_LAYERS = (("x", "x"), ("y", "y"), ("y", "x"), ("x", "y"))


@dataclass
class LCaseTables:
    """The pieces behind one factor family: heads plus tail chains.

    ``p`` is ``m mod 6`` (1 or 5) and ``k = (m - p) // 6 >= 2``.  For
    each factor index i in 0..3, ``heads[i]`` holds the four literal
    pieces (W, X, Y, Z) and ``tails[i]`` the four chains (Q, R, S, T),
    as vertex tuples.  The stride-1 chain Q has m-13 arcs; for
    ``p == 1`` the stride-3 chains have 2(k-2) arcs each, for
    ``p == 5`` they have 2(k-2)+1, 2(k-2)+1 and 2(k-2)+2 arcs.
    """

    m: int
    p: int
    k: int
    heads: Dict[int, Tuple[Piece, Piece, Piece, Piece]]
    tails: Dict[int, Tuple[Piece, Piece, Piece, Piece]]

    def factor_cycles(self, i: int) -> Tuple[DirectedCycle, DirectedCycle]:
        """The type-1 and type-3 cycles of factor i."""
        w, x, y, z = self.heads[i]
        q, r, s, t = self.tails[i]
        type1 = join_cycle([w, q])
        if self.p == 1:
            type3 = join_cycle([x, r, y, s, z, t])
        else:
            type3 = join_cycle([x, r, z, s, y, t])
        return type1, type3


def case_tables(m: int) -> LCaseTables:
    """Build the piece tables for odd m >= 13 with 3 not dividing m."""
    if m % 2 == 0 or m < 13:
        raise UnsupportedOrderError(f"need odd m >= 13, got {m}")
    if m % 3 == 0:
        raise NonexistenceError(
            f"no decomposition for m={m}", l_nonexistence_certificate(m)
        )
    p = m % 6
    k = (m - p) // 6
    heads = {
        i: tuple(_literal(m, table[i]) for table in (_W, _X, _Y, _Z))
        for i in range(4)
    }
    tails = {}
    for i in range(4):
        q = _chain(m, 13, 1, m, _Q_LAYERS[i])
        if p == 1:
            r = _chain(m, 14, 3, m + 1, _R_LAYERS[i])
            s = _chain(m, 13, 3, m, _S_LAYERS[i])
            t = _chain(m, 15, 3, m + 2, _T_LAYERS[i])
        else:
            r = _chain(m, 14, 3, m, _R_LAYERS[i])
            s = _chain(m, 15, 3, m + 1, _S_LAYERS[i])
            t = _chain(m, 13, 3, m + 2, _T_LAYERS[i])
        tails[i] = (q, r, s, t)
    return LCaseTables(m, p, k, heads, tails)


@dataclass
class NonexistenceCertificate:
    """Why no directed m-cycle of the {1,3} blow-up covers a difference-3 arc.

    Each row fixes the cycle type t and solves ``k1 + k2 = m``,
    ``k1 + 3*k2 = t*m`` for the difference-1 / difference-3 arc counts,
    then records why that solution admits no cycle through a
    difference-3 arc.  The rows exhaust t because m arc differences in
    {1, 3} sum to at least m and at most 3m.
    """

    m: int
    rows: List[Tuple[int, Optional[int], Optional[int], str]]

    def check(self) -> bool:
        """Re-derive every row; True iff the table is exhaustive and airtight."""
        if self.m % 3 != 0 or self.m % 2 == 0:
            return False
        if [row[0] for row in self.rows] != [1, 2, 3]:
            return False
        for t, k1, k2, _reason in self.rows:
            if k1 is not None:
                if k1 + k2 != self.m or k1 + 3 * k2 != t * self.m:
                    return False
                if t == 1 and k2 != 0:
                    return False
                if t == 3 and (k1 != 0 or self.m % 3 != 0):
                    return False
            else:
                # claims no integer solution: 2*k2 = (t-1)*m must be odd
                if ((t - 1) * self.m) % 2 == 0:
                    return False
        return True

    def __str__(self) -> str:
        lines = [
            f"m = {self.m}: no directed {self.m}-cycle covers a difference-3 arc"
        ]
        for t, k1, k2, reason in self.rows:
            counts = f"k1={k1}, k2={k2}" if k1 is not None else "no integer solution"
            lines.append(f"  type {t}: {counts}: {reason}")
        return "\n".join(lines)


def l_nonexistence_certificate(m: int) -> NonexistenceCertificate:
    """The machine-checkable non-existence table for odd m divisible by 3."""
    if m % 2 == 0 or m % 3 != 0 or m < 9:
        raise UnsupportedOrderError(
            f"certificate applies to odd multiples of 3 (>= 9), got {m}"
        )
    rows = [
        (1, m, 0, "all arcs have difference 1, so no difference-3 arc is covered"),
        (
            2,
            None,
            None,
            "k1 + k2 = m is odd but k1 + 3*k2 = 2m is even; no integer solution",
        ),
        (
            3,
            0,
            m,
            f"all arcs have difference 3, but then the walk returns to its "
            f"start after m/3 = {m // 3} steps",
        ),
    ]
    return NonexistenceCertificate(m, rows)


def l_factorization(m: int) -> Factorization:
    """A verified 4-factor decomposition of ``l_digraph(m)``.

    Raises :class:`NonexistenceError` (with certificate) when 3 | m,
    and :class:`UnsupportedOrderError` for m < 13 or even m.
    """
    tables = case_tables(m)
    factors = []
    for i in range(4):
        type1, type3 = tables.factor_cycles(i)
        factors.append(Factor([type1, type3], 2 * m))
    fac = Factorization("L", 2 * m, m, factors)
    report = verify_factorization(fac, l_digraph(m))
    if not report.ok:
        raise ConstructionError(f"L construction failed self-check:\n{report}")
    return fac
