"""Four-factor decomposition of the blown-up ±1 circulant (kind ``H``).

``h_digraph(m)`` is the blow-up of the two-way circulant X(m, {1, m-1})
by two independent vertices: every arc goes from index ``i`` to
``i + 1`` or ``i - 1`` with free choice of layer on both ends, 8m arcs
in total.  For every odd ``m >= 5`` these arcs split into eight
directed m-cycles: four "ascending" cycles using only +1 steps and
four "descending" cycles using only -1 steps, paired off so that each
pair covers both layers at every index and hence forms a spanning
factor.

Each cycle is determined by a layer rule: which indices it visits on
layer x and which on layer y.  The rules of an ascending/descending
pair are complementary, which is exactly what makes the pair a factor.
"""

from __future__ import annotations

from typing import Callable, List

from .core import (
    ConstructionError,
    DirectedCycle,
    Factor,
    Factorization,
    UnsupportedOrderError,
    Vertex,
    h_digraph,
)
from .verify import verify_factorization

__all__ = ["h_cycles", "h_factorization"]


def _x_at_0(i: int) -> bool:
    return True


def _asc_pair_1(i: int) -> bool:
    # x at index 0, y at 1 and 2, then x exactly at odd indices
    if i == 0:
        return True
    if i in (1, 2):
        return False
    return i % 2 == 1


def _asc_pair_2(i: int) -> bool:
    # y at indices 0 and 1, then x exactly at even indices
    if i in (0, 1):
        return False
    return i % 2 == 0


def _asc_pair_3(i: int) -> bool:
    return i == 1


def _complement(rule: Callable[[int], bool]) -> Callable[[int], bool]:
    return lambda i: not rule(i)


# Layer rules for the four ascending cycles; each descending partner
# uses the complementary rule so the pair covers all 2m vertices.
_ASCENDING_RULES = (_x_at_0, _asc_pair_1, _asc_pair_2, _asc_pair_3)


def _cycle(m: int, indices: List[int], x_rule: Callable[[int], bool]) -> DirectedCycle:
    return DirectedCycle(
        Vertex("x" if x_rule(i) else "y", i, m) for i in indices
    )


def h_cycles(m: int) -> List[DirectedCycle]:
    """The eight directed m-cycles partitioning the arcs of ``h_digraph(m)``.

    Returned in pairing order: entries 2j and 2j+1 form the j-th
    factor.  Entry 2j ascends (all differences +1), entry 2j+1
    descends (all differences -1).
    """
    if m < 5 or m % 2 == 0:
        raise UnsupportedOrderError(f"need odd m >= 5, got {m}")
    ascending = list(range(m))
    descending = [0] + list(range(m - 1, 0, -1))
    cycles = []
    for rule in _ASCENDING_RULES:
        cycles.append(_cycle(m, ascending, rule))
        cycles.append(_cycle(m, descending, _complement(rule)))
    return cycles


def h_factorization(m: int) -> Factorization:
    """A verified 4-factor decomposition of ``h_digraph(m)`` into directed m-cycles."""
    cycles = h_cycles(m)
    factors = [
        Factor([cycles[2 * j], cycles[2 * j + 1]], 2 * m) for j in range(4)
    ]
    fac = Factorization("H", 2 * m, m, factors)
    report = verify_factorization(fac, h_digraph(m))
    if not report.ok:
        raise ConstructionError(f"H construction failed self-check:\n{report}")
    return fac
