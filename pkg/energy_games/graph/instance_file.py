"""
This module reads and writes the line-oriented instance file format and the
energy and reachability output formats.

Instance format:

    c <comment>
    p eg <n> <m> <W>
    o <v> <A|B>
    e <u> <v> <w>

Energy output: one line "v <id> <energy|inf>" per vertex, ids ascending.
Reachability output: "r <n>" followed by n rows of '0'/'1' characters.
"""
import logging
from typing import List, Optional, Union

from energy_games.graph.game_graph import (
    MAX_PREFIX_MAGNITUDE,
    INFINITY,
    Digraph,
    Edge,
    EnergyFunction,
    GameGraph,
    Owner,
)
from energy_games.utils.exceptions import ParseError, ValidationError

logger = logging.getLogger(__name__)

_OWNER_TAGS = {owner.value: owner for owner in Owner}


def _decode(text: Union[str, bytes]) -> str:
    if isinstance(text, (bytes, bytearray)):
        try:
            return bytes(text).decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"instance is not valid UTF-8 ({e})") from e
    return text


def _ints(fields: List[str], line_number: int) -> List[int]:
    try:
        return [int(f) for f in fields]
    except ValueError as e:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", line_number) from e


def parse_instance(text: Union[str, bytes], require_owners: bool = True) -> GameGraph:
    """
    Parses an instance file.

    Args:
        text (Union[str, bytes]): The file contents.
        require_owners (bool): When True every vertex needs exactly one "o" line.
            When False missing owners default to Alice (APNP instances).

    Returns:
        GameGraph: The parsed graph, with W taken from the header.

    Raises:
        ParseError: On a malformed line, a duplicate header or owner line, or an
            edge count that does not match the header.
        ValidationError: On an edge weight above W in absolute value or an
            n * W beyond the 64-bit prefix-sum range.
    """
    source = _decode(text)
    header: Optional[List[int]] = None
    owners: List[Optional[Owner]] = []
    edges: List[Edge] = []
    weight_violations: List[str] = []

    for line_number, raw in enumerate(source.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        tag = fields[0]

        if tag == "p":
            if header is not None:
                raise ParseError("duplicate 'p' line", line_number)
            if len(fields) != 5 or fields[1] != "eg":
                raise ParseError("expected 'p eg <n> <m> <W>'", line_number)
            n, m, w_max = _ints(fields[2:], line_number)
            if n < 1 or m < 0 or w_max < 0:
                raise ParseError("header values must satisfy n >= 1, m >= 0, W >= 0", line_number)
            if n * max(w_max, 1) > MAX_PREFIX_MAGNITUDE:
                raise ValidationError([f"n * W = {n * w_max} exceeds the 64-bit prefix-sum range"])
            header = [n, m, w_max]
            owners = [None] * n
            continue

        if header is None:
            raise ParseError("the 'p' line must come before any other line", line_number)
        n, _, w_max = header

        if tag == "o":
            if len(fields) != 3 or fields[2] not in _OWNER_TAGS:
                raise ParseError("expected 'o <v> <A|B>'", line_number)
            (v,) = _ints(fields[1:2], line_number)
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} outside [1, {n}]", line_number)
            if owners[v - 1] is not None:
                raise ParseError(f"duplicate owner line for vertex {v}", line_number)
            owners[v - 1] = _OWNER_TAGS[fields[2]]
        elif tag == "e":
            if len(fields) != 4:
                raise ParseError("expected 'e <u> <v> <w>'", line_number)
            u, v, w = _ints(fields[1:], line_number)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"edge ({u}, {v}) has an endpoint outside [1, {n}]", line_number)
            if abs(w) > w_max:
                weight_violations.append(f"line {line_number}: weight {w} exceeds declared W={w_max}")
            edges.append(Edge(u, v, w))
        else:
            raise ParseError(f"unknown line type {tag!r}", line_number)

    if header is None:
        raise ParseError("missing 'p eg <n> <m> <W>' line")
    n, m, w_max = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges but {len(edges)} were given")
    if weight_violations:
        raise ValidationError(weight_violations)

    missing = [v for v in range(1, n + 1) if owners[v - 1] is None]
    if missing and require_owners:
        raise ParseError(f"missing owner line for vertices {missing[:10]}")
    resolved = tuple(o if o is not None else Owner.ALICE for o in owners)

    logger.debug("Parsed instance with n=%d m=%d W=%d", n, m, w_max)
    return GameGraph(n, tuple(edges), w_max, resolved)


def serialize_instance(g: Digraph) -> str:
    """
    Writes g in canonical form: header, owner lines (game graphs only), edge lines.

    Args:
        g (Digraph): The graph. Plain digraphs are written without "o" lines.

    Returns:
        str: The instance text, newline terminated.
    """
    lines = [f"p eg {g.n} {g.m} {g.W}"]
    if isinstance(g, GameGraph):
        lines.extend(f"o {v} {g.owner(v).value}" for v in g.vertices)
    lines.extend(f"e {u} {v} {w}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


def format_energy(e: EnergyFunction) -> str:
    """Renders an energy function, one "v <id> <value>" line per vertex."""
    return "".join(f"v {v} {'inf' if value is INFINITY else value}\n" for v, value in e.items())


def format_reach(reach) -> str:
    """
    Renders a reachability matrix: "r <n>" then one row per source vertex.

    Args:
        reach (ReachMatrix): The matrix.

    Returns:
        str: The rendered matrix, newline terminated.
    """
    rows = ["".join("1" if bit else "0" for bit in row) for row in reach.bits]
    return "\n".join([f"r {reach.n}", *rows]) + "\n"
