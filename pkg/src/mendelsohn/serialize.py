"""Reading and writing factorizations.

Two formats share one header vocabulary:

* JSON: ``{"kind": ..., "n": ..., "cycle_length": ..., "factors": [...]}``
  where ``factors`` is a list of factors, each a list of cycles, each a
  list of vertex tokens.
* text: a ``key=value`` header line, a blank line, then one factor per
  paragraph with one cycle per line (space-separated vertex tokens).

Vertex tokens are ``x<i>`` / ``y<i>`` for the two-layer component
digraphs and ``v<i>`` for complete symmetric digraphs (layered vertices
are flattened to ``v<a>`` / ``v<m+b>`` before they ever reach a file).

Cycles are written in canonical rotation (lexicographically least
vertex first) and sorted within each factor, so serialization is
deterministic and ``parse(serialize(f)) == f`` bit-exactly.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Union

from .core import DirectedCycle, Factor, Factorization, MalformedCycleError, Vertex

__all__ = [
    "RawFactorization",
    "SerializationError",
    "from_factorization",
    "to_factorization",
    "dumps",
    "loads",
    "save",
    "load",
]

KINDS = ("complete_symmetric", "H", "L", "G")

_TOKEN = re.compile(r"^([vxy])(\d+)$")


class SerializationError(ValueError):
    """A file or token that does not parse as a factorization."""


@dataclass
class RawFactorization:
    """A factorization as plain nested vertex lists, before any validation.

    This is what the file parsers produce and what the verifier
    consumes: the verifier re-derives every property from these raw
    sequences rather than trusting typed invariants.
    """

    kind: str
    n: int
    cycle_length: int
    factors: List[List[List[Vertex]]]


def _parse_token(token: str, kind: str, n: int, cycle_length: int) -> Vertex:
    match = _TOKEN.match(token)
    if not match:
        raise SerializationError(f"bad vertex token {token!r}")
    layer, index = match.group(1), int(match.group(2))
    if kind == "complete_symmetric":
        if layer != "v":
            raise SerializationError(
                f"token {token!r}: complete symmetric files use v<i> tokens"
            )
        modulus = n
    else:
        if layer == "v":
            raise SerializationError(
                f"token {token!r}: component files use x<i>/y<i> tokens"
            )
        modulus = cycle_length
    if index >= modulus:
        raise SerializationError(f"token {token!r} out of range (modulus {modulus})")
    return Vertex(layer, index, modulus)


def _check_header(kind, n, cycle_length) -> None:
    if kind not in KINDS:
        raise SerializationError(f"unknown kind {kind!r}")
    if not (isinstance(n, int) and isinstance(cycle_length, int)):
        raise SerializationError("n and cycle_length must be integers")
    if n < 2 or cycle_length < 2:
        raise SerializationError(f"bad header n={n} cycle_length={cycle_length}")


def from_factorization(fac: Factorization) -> RawFactorization:
    factors = [
        [list(c.vertices) for c in factor.sorted_cycles()] for factor in fac.factors
    ]
    return RawFactorization(fac.kind, fac.n, fac.cycle_length, factors)


def to_factorization(raw: RawFactorization) -> Factorization:
    """Promote raw lists to typed values; malformed cycles raise."""
    factors = []
    for cycles in raw.factors:
        try:
            factors.append(Factor((DirectedCycle(c) for c in cycles), raw.n))
        except MalformedCycleError as exc:
            raise SerializationError(f"malformed cycle: {exc}") from exc
    return Factorization(raw.kind, raw.n, raw.cycle_length, factors)


def dumps(raw: Union[RawFactorization, Factorization], fmt: str = "json") -> str:
    if isinstance(raw, Factorization):
        raw = from_factorization(raw)
    if fmt == "json":
        payload = {
            "kind": raw.kind,
            "n": raw.n,
            "cycle_length": raw.cycle_length,
            "factors": [
                [[v.token for v in cycle] for cycle in factor]
                for factor in raw.factors
            ],
        }
        return json.dumps(payload, indent=1)
    if fmt == "text":
        lines = [f"kind={raw.kind} n={raw.n} cycle_length={raw.cycle_length}", ""]
        for factor in raw.factors:
            for cycle in factor:
                lines.append(" ".join(v.token for v in cycle))
            lines.append("")
        return "\n".join(lines)
    raise SerializationError(f"unknown format {fmt!r}")


def _loads_json(text: str) -> RawFactorization:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SerializationError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise SerializationError("top-level JSON value must be an object")
    try:
        kind = payload["kind"]
        n = payload["n"]
        cycle_length = payload["cycle_length"]
        factors_tokens = payload["factors"]
    except KeyError as exc:
        raise SerializationError(f"missing field {exc}") from exc
    _check_header(kind, n, cycle_length)
    factors = [
        [[_parse_token(t, kind, n, cycle_length) for t in cycle] for cycle in factor]
        for factor in factors_tokens
    ]
    return RawFactorization(kind, n, cycle_length, factors)


def _loads_text(text: str) -> RawFactorization:
    stripped = [line.strip() for line in text.splitlines()]
    # drop leading blank/comment lines
    lines = [ln for ln in stripped if not ln.startswith("#")]
    while lines and not lines[0]:
        lines.pop(0)
    if not lines:
        raise SerializationError("empty file")
    header = {}
    for part in lines[0].split():
        if "=" not in part:
            raise SerializationError(f"bad header entry {part!r}")
        key, _, value = part.partition("=")
        header[key] = value
    try:
        kind = header["kind"]
        n = int(header["n"])
        cycle_length = int(header["cycle_length"])
    except (KeyError, ValueError) as exc:
        raise SerializationError(f"bad header line {lines[0]!r}") from exc
    _check_header(kind, n, cycle_length)
    factors: List[List[List[Vertex]]] = []
    paragraph: List[List[Vertex]] = []
    for line in lines[1:]:
        if not line:
            if paragraph:
                factors.append(paragraph)
                paragraph = []
            continue
        paragraph.append(
            [_parse_token(t, kind, n, cycle_length) for t in line.split()]
        )
    if paragraph:
        factors.append(paragraph)
    return RawFactorization(kind, n, cycle_length, factors)


def loads(text: str) -> RawFactorization:
    """Parse either format, sniffing JSON by its leading brace."""
    if text.lstrip().startswith("{"):
        return _loads_json(text)
    return _loads_text(text)


def save(fac: Union[RawFactorization, Factorization], path, fmt: str = "json") -> None:
    Path(path).write_text(dumps(fac, fmt) + "\n")


def load(path) -> RawFactorization:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SerializationError(f"cannot read {path}: {exc}") from exc
    return loads(text)
