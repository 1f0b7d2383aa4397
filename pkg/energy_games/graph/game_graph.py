"""
This module defines the core data types of the package: weighted digraphs,
game graphs with vertex owners, and energy functions.

Vertex ids are 1-based and contiguous. Graphs are immutable once built.

Classes:
--------
Owner, Edge, Digraph, GameGraph, EnergyFunction

Functions:
----------
validate_game(g: GameGraph) -> List[str]
induced_subgraph(g: Digraph, vertices: Iterable[int]) -> Tuple[Digraph, Dict[int, int]]
reverse(g: Digraph, negate: bool = False) -> Digraph
"""
import enum
import functools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from energy_games.utils.exceptions import ValidationError

# Largest n * W for which every prefix sum fits a signed 64-bit integer.
MAX_PREFIX_MAGNITUDE = 2 ** 63 - 1


@functools.total_ordering
class _Infinity:
    """Sentinel for an unbounded energy. Compares above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash("energy_games.INFINITY")

    def __add__(self, other):
        if other is self or isinstance(other, int):
            return self
        return NotImplemented

    __radd__ = __add__

    def __reduce__(self):
        return (_Infinity, ())


class _Unreachable:
    """Sentinel distance for vertices a shortest-path search never reached."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


INFINITY = _Infinity()
UNREACHABLE = _Unreachable()

Energy = Union[int, _Infinity]


class Owner(enum.Enum):
    """The player controlling a vertex. The value is the instance file tag."""
    ALICE = "A"
    BOB = "B"


class Edge(NamedTuple):
    """A weighted directed edge."""
    source: int
    target: int
    weight: int


@dataclass(frozen=True)
class Digraph:
    """
    A weighted directed graph on vertices 1..n. Parallel edges and self-loops
    are allowed, and vertices may have no outgoing edges.

    Attributes:
    -----------
    n : int
        The number of vertices.
    edges : Tuple[Edge, ...]
        The edges in stored order.
    W : int
        The declared maximum absolute weight. Defaults to the largest absolute
        weight present (at least 1).
    """
    n: int
    edges: Tuple[Edge, ...] = ()
    W: Optional[int] = None

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError([f"vertex count must be nonnegative, got {self.n}"])
        edges = tuple(Edge(int(u), int(v), int(w)) for u, v, w in self.edges)
        bad = [f"edge ({u}, {v}) has an endpoint outside [1, {self.n}]"
               for u, v, _ in edges if not (1 <= u <= self.n and 1 <= v <= self.n)]
        if bad:
            raise ValidationError(bad)
        object.__setattr__(self, "edges", edges)
        if self.W is None:
            object.__setattr__(self, "W", max([abs(e.weight) for e in edges], default=0) or 1)

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def vertices(self) -> range:
        """The vertex ids 1..n."""
        return range(1, self.n + 1)

    @cached_property
    def out_edges(self) -> Tuple[Tuple[Edge, ...], ...]:
        """Outgoing edges per vertex; index 0 is unused."""
        buckets: List[List[Edge]] = [[] for _ in range(self.n + 1)]
        for e in self.edges:
            buckets[e.source].append(e)
        return tuple(tuple(b) for b in buckets)

    def out_neighbors(self, v: int) -> List[int]:
        """Sorted, deduplicated out-neighbours of v."""
        return sorted({e.target for e in self.out_edges[v]})

    def out_degree(self, v: int) -> int:
        """Number of distinct out-neighbours of v."""
        return len(self.out_neighbors(v))

    def with_edges(self, edges: Iterable[Edge]) -> "Digraph":
        """A digraph on the same vertices with different edges."""
        return Digraph(self.n, tuple(edges), self.W)


@dataclass(frozen=True)
class GameGraph(Digraph):
    """
    A digraph whose vertices are owned by Alice or Bob.

    Attributes:
    -----------
    owners : Tuple[Owner, ...]
        Owner of vertex v at position v - 1.
    """
    owners: Tuple[Owner, ...] = field(default=())

    def __post_init__(self):
        super().__post_init__()
        owners = tuple(self.owners)
        if len(owners) != self.n:
            raise ValidationError([f"expected {self.n} owner tags, got {len(owners)}"])
        object.__setattr__(self, "owners", owners)

    def owner(self, v: int) -> Owner:
        """Owner of vertex v."""
        return self.owners[v - 1]

    def vertices_of(self, player: Owner) -> List[int]:
        """The vertices owned by player, ascending."""
        return [v for v in self.vertices if self.owners[v - 1] is player]

    @property
    def is_all_alice(self) -> bool:
        return all(o is Owner.ALICE for o in self.owners)

    @property
    def is_all_bob(self) -> bool:
        return all(o is Owner.BOB for o in self.owners)

    @classmethod
    def from_digraph(cls, g: Digraph, owners: Sequence[Owner]) -> "GameGraph":
        """Attaches owner tags to a digraph."""
        return cls(g.n, g.edges, g.W, tuple(owners))

    def with_edges(self, edges: Iterable[Edge]) -> "GameGraph":
        return GameGraph(self.n, tuple(edges), self.W, self.owners)


@dataclass(frozen=True)
class EnergyFunction:
    """
    A map from vertices to nonnegative integers or INFINITY.

    Attributes:
    -----------
    values : Tuple[Energy, ...]
        The energy of vertex v at position v - 1.
    """
    values: Tuple[Energy, ...]

    def __post_init__(self):
        values = tuple(v if v is INFINITY else int(v) for v in self.values)
        negative = [i + 1 for i, v in enumerate(values) if v is not INFINITY and v < 0]
        if negative:
            raise ValidationError([f"energy of vertex {v} is negative" for v in negative])
        object.__setattr__(self, "values", values)

    def __getitem__(self, v: int) -> Energy:
        return self.values[v - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Energy]:
        return iter(self.values)

    def items(self) -> Iterator[Tuple[int, Energy]]:
        """Pairs (vertex, energy) in ascending vertex order."""
        return ((i + 1, v) for i, v in enumerate(self.values))

    @classmethod
    def zeros(cls, n: int) -> "EnergyFunction":
        return cls((0,) * n)

    @classmethod
    def from_mapping(cls, n: int, values: Dict[int, Energy], default: Energy = 0) -> "EnergyFunction":
        return cls(tuple(values.get(v, default) for v in range(1, n + 1)))


def validate_game(g: GameGraph) -> List[str]:
    """
    Lists every reason g cannot be used as a game graph.

    Args:
        g (GameGraph): The graph to check.

    Returns:
        List[str]: One message per vertex with out-degree 0 and per edge whose
        weight exceeds W in absolute value. Empty when the graph is valid.
    """
    violations = []
    for v in g.vertices:
        if not g.out_edges[v]:
            violations.append(f"vertex {v}: out-degree 0")
    for u, v, w in g.edges:
        if abs(w) > g.W:
            violations.append(f"edge ({u}, {v}): weight {w} outside [-{g.W}, {g.W}]")
    if g.n * g.W > MAX_PREFIX_MAGNITUDE:
        violations.append(f"n * W = {g.n * g.W} exceeds the 64-bit prefix-sum range")
    return violations


def require_valid_game(g: GameGraph) -> None:
    """Raises ValidationError when validate_game reports anything."""
    violations = validate_game(g)
    if violations:
        raise ValidationError(violations)


def induced_subgraph(g: Digraph, vertices: Iterable[int]) -> Tuple[Digraph, Dict[int, int]]:
    """
    Restricts g to the given vertices and relabels them 1..k in ascending order.

    Args:
        g (Digraph): The graph.
        vertices (Iterable[int]): The vertices to keep.

    Returns:
        Tuple[Digraph, Dict[int, int]]: The induced subgraph and the map from
        original ids to new ids.
    """
    keep = sorted(set(vertices))
    relabel = {v: i + 1 for i, v in enumerate(keep)}
    edges = tuple(Edge(relabel[u], relabel[v], w) for u, v, w in g.edges if u in relabel and v in relabel)
    return Digraph(len(keep), edges, g.W), relabel


def reverse(g: Digraph, negate: bool = False) -> Digraph:
    """Flips every edge, optionally negating the weights."""
    sign = -1 if negate else 1
    return Digraph(g.n, tuple(Edge(v, u, sign * w) for u, v, w in g.edges), g.W)
