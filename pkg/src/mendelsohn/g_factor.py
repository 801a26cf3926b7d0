"""Five-factor decomposition of the digon blow-up of X(m, {1,3}) (kind ``G``).

``g_digraph(m)`` adds the 2m vertical arcs (x_i <-> y_i) to the
blown-up {1,3} circulant, for 10m arcs altogether, and admits a
directed m-cycle factorization into five spanning factors for every
odd ``m >= 11`` not divisible by 3.  Each such m is ``p + 12k`` for a
unique ``p in {11, 13, 17, 19}``; the five factors are assembled from
that p's seed tables (see :mod:`.basic_sets`) by chaining k shifted
copies of the tail dipaths.
"""

from __future__ import annotations

from typing import List, Tuple

from .core import (
    ConstructionError,
    Factor,
    Factorization,
    UnsupportedOrderError,
    g_digraph,
)
from .basic_sets import basic_set_tables, check_basic_set, extend, truncate_for_k0
from .verify import verify_factorization

__all__ = ["g_parameters", "g_factorization"]

_P_FOR_RESIDUE = {11: 11, 1: 13, 5: 17, 7: 19}


def g_parameters(m: int) -> Tuple[int, int]:
    """Split m as p + 12k; raises for unsupported m (even, 3 | m, m < 11)."""
    residue = m % 12
    if m % 2 == 0 or residue not in _P_FOR_RESIDUE:
        raise UnsupportedOrderError(
            f"m={m} is not an odd integer coprime to 3"
        )
    p = _P_FOR_RESIDUE[residue]
    k = (m - p) // 12
    if k < 0:
        raise UnsupportedOrderError(f"m={m} is below the smallest case m={p}")
    return p, k


def g_factorization(m: int) -> Factorization:
    """A verified 5-factor decomposition of ``g_digraph(m)`` into m-cycles."""
    p, k = g_parameters(m)
    factors: List[Factor] = []
    for bs in basic_set_tables(p):
        checked = truncate_for_k0(bs) if k == 0 else bs
        problems = check_basic_set(checked, k)
        if problems:
            raise ConstructionError(
                f"seed table p={p} kind={bs.cycle_kind} invalid at k={k}: {problems}"
            )
        factors.append(Factor(extend(bs, k), 2 * m))
    fac = Factorization("G", 2 * m, m, factors)
    report = verify_factorization(fac, g_digraph(m))
    if not report.ok:
        raise ConstructionError(f"G construction failed self-check:\n{report}")
    return fac
