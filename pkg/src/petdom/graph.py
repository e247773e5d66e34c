"""Generalized Petersen graphs P(n,k) and their structural partitions.

The graph P(n,k) has outer vertices u_0..u_{n-1} forming a cycle, inner
vertices v_0..v_{n-1}, spokes u_i-v_i and inner skip edges v_i-v_{i+k}
(all indices modulo n).  Adjacency is computed arithmetically, so a graph
is just the pair (n, k) and neighbor queries cost O(1) regardless of n.

Two proof-oriented partitions of P(n,2) are exposed as queryable objects:

* blocks: six-vertex windows {v_{i-1}, v_i, v_{i+1}, u_{i-1}, u_i, u_{i+1}}
  centered at each column i, signed by the parity of their inner indices;
* pairs: the columns p_i = {u_i, v_i}.

Everything here is immutable after construction and safe for unrestricted
concurrent use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

from .errors import ParameterError

__all__ = [
    "Ring",
    "Vertex",
    "cached_vertex",
    "VertexSet",
    "BlockSign",
    "Block",
    "Pair",
    "PetersenGraph",
    "build_petersen",
    "parse_vertex",
]


class Ring(Enum):
    """Which of the two n-cycles a vertex belongs to."""

    OUTER = "u"
    INNER = "v"


_VERTEX_RE = re.compile(r"^([uv])(\d+)$")


@dataclass(frozen=True, order=False)
class Vertex:
    """A vertex u_i or v_i with its index stored reduced modulo n.

    Ordering is canonical: all outer vertices (ascending index) precede
    all inner vertices (ascending index).  This ordering fixes every
    serialized output of the package.
    """

    ring: Ring
    index: int

    def __post_init__(self) -> None:
        # precomputed: vertices are hashed heavily by set machinery
        object.__setattr__(
            self, "_hash", hash((self.ring is Ring.INNER, self.index))
        )

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    @property
    def name(self) -> str:
        return f"{self.ring.value}{self.index}"

    def sort_key(self) -> tuple[int, int]:
        return (0 if self.ring is Ring.OUTER else 1, self.index)

    def __lt__(self, other: "Vertex") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"Vertex({self.name})"


_OUTER_CACHE: dict[int, Vertex] = {}
_INNER_CACHE: dict[int, Vertex] = {}


def cached_vertex(ring: Ring, index: int) -> Vertex:
    """Interned Vertex instances; equality semantics are unchanged."""
    cache = _OUTER_CACHE if ring is Ring.OUTER else _INNER_CACHE
    v = cache.get(index)
    if v is None:
        v = Vertex(ring, index)
        cache[index] = v
    return v


def parse_vertex(name: str, n: int) -> Vertex:
    """Parse "u<i>" / "v<i>" into a Vertex, reducing the index mod n."""
    m = _VERTEX_RE.match(name.strip())
    if m is None:
        raise ParameterError(f"vertex name must match u<i> or v<i>, got {name!r}")
    ring = Ring.OUTER if m.group(1) == "u" else Ring.INNER
    return cached_vertex(ring, int(m.group(2)) % n)


@dataclass(frozen=True)
class VertexSet:
    """An immutable subset S of the vertices, with O(1) membership tests.

    Text form is the comma-separated list of vertex names in canonical
    order, e.g. "u1,u4,v1,v4".
    """

    members: frozenset[Vertex] = field(default_factory=frozenset)

    @classmethod
    def of(cls, vertices: Iterable[Vertex]) -> "VertexSet":
        return cls(frozenset(vertices))

    @classmethod
    def from_names(cls, names: Iterable[str] | str, n: int) -> "VertexSet":
        if isinstance(names, str):
            names = [s for s in names.split(",") if s.strip()]
        return cls(frozenset(parse_vertex(s, n) for s in names))

    def __contains__(self, v: Vertex) -> bool:
        return v in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self.sorted())

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.members | other.members)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.members & other.members)

    def sorted(self) -> list[Vertex]:
        return sorted(self.members, key=Vertex.sort_key)

    def names(self) -> list[str]:
        return [v.name for v in self.sorted()]

    def text(self) -> str:
        return ",".join(self.names())


class BlockSign(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class Block:
    """The six-vertex window centered at column i of P(n,2).

    sign is POSITIVE exactly when two of the residues {i-1, i, i+1}
    (representatives in [0, n)) are odd.  Blocks overlap; the
    non-overlapping tiling used in arguments about consecutive blocks
    shifts the center by 3 (see PetersenGraph.blocks_stride3).
    """

    center: int
    vertices: tuple[Vertex, ...]
    sign: BlockSign

    @property
    def vertex_set(self) -> VertexSet:
        return VertexSet(frozenset(self.vertices))


@dataclass(frozen=True)
class Pair:
    """The column p_i = {u_i, v_i}.  The n pairs partition the vertices."""

    index: int
    outer: Vertex
    inner: Vertex

    @property
    def vertices(self) -> tuple[Vertex, Vertex]:
        return (self.outer, self.inner)

    @property
    def vertex_set(self) -> VertexSet:
        return VertexSet(frozenset(self.vertices))


@dataclass(frozen=True)
class PetersenGraph:
    """The generalized Petersen graph P(n,k).

    Vertices: 2n, edges: 3n, every vertex has degree exactly 3.
    Requires n >= 3 and 1 <= k < n/2.
    """

    n: int
    k: int = 2

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ParameterError(f"n must satisfy n >= 3, got n={self.n}")
        if not 1 <= self.k:
            raise ParameterError(f"k must satisfy k >= 1, got k={self.k}")
        if not 2 * self.k < self.n:
            raise ParameterError(
                f"k must satisfy k < n/2, got k={self.k} for n={self.n}"
            )

    # -- basic structure ------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return 2 * self.n

    @property
    def edge_count(self) -> int:
        return 3 * self.n

    def outer(self, i: int) -> Vertex:
        return cached_vertex(Ring.OUTER, i % self.n)

    def inner(self, i: int) -> Vertex:
        return cached_vertex(Ring.INNER, i % self.n)

    def vertices(self) -> Iterator[Vertex]:
        """All 2n vertices in canonical order."""
        for i in range(self.n):
            yield cached_vertex(Ring.OUTER, i)
        for i in range(self.n):
            yield cached_vertex(Ring.INNER, i)

    def vertex_set(self) -> VertexSet:
        return VertexSet(frozenset(self.vertices()))

    def contains(self, v: Vertex) -> bool:
        return 0 <= v.index < self.n

    def _check_vertex(self, v: Vertex) -> None:
        if not self.contains(v):
            raise ParameterError(
                f"vertex {v.name} has index outside [0, {self.n})"
            )

    def neighbors(self, v: Vertex) -> list[Vertex]:
        """The three neighbors of v, canonically sorted.

        Outer u_i: u_{i-1}, u_{i+1}, v_i.  Inner v_i: v_{i-k}, v_{i+k}, u_i.
        """
        self._check_vertex(v)
        n, i = self.n, v.index
        if v.ring is Ring.OUTER:
            nbrs = [self.outer(i - 1), self.outer(i + 1), self.inner(i)]
        else:
            nbrs = [self.inner(i - self.k), self.inner(i + self.k), self.outer(i)]
        return sorted(nbrs, key=Vertex.sort_key)

    def adjacent(self, a: Vertex, b: Vertex) -> bool:
        return b in self.neighbors(a)

    # -- proof partitions (k = 2 only) ----------------------------------

    def _require_k2(self, what: str) -> None:
        if self.k != 2:
            raise ParameterError(f"{what} requires k = 2, got k={self.k}")

    def block_at(self, i: int) -> Block:
        """The block centered at column i (reduced mod n); needs k=2, n>=5."""
        self._require_k2("block_at")
        if self.n < 5:
            raise ParameterError(f"block_at requires n >= 5, got n={self.n}")
        i %= self.n
        cols = [(i - 1) % self.n, i, (i + 1) % self.n]
        odd = sum(c % 2 for c in cols)
        sign = BlockSign.POSITIVE if odd == 2 else BlockSign.NEGATIVE
        verts = [cached_vertex(Ring.INNER, c) for c in cols]
        verts += [cached_vertex(Ring.OUTER, c) for c in cols]
        return Block(i, tuple(sorted(verts, key=Vertex.sort_key)), sign)

    def blocks(self) -> Iterator[Block]:
        """All n (overlapping) blocks, by ascending center."""
        for i in range(self.n):
            yield self.block_at(i)

    def blocks_stride3(self, start: int = 1) -> Iterator[Block]:
        """Blocks at centers start, start+3, start+6, ... covering every
        column.  When 3 | n this is the non-overlapping tiling in which
        each block's right neighbor is the next one; otherwise the last
        window wraps past the first."""
        count = -(-self.n // 3)
        for t in range(count):
            yield self.block_at(start + 3 * t)

    def pair_at(self, i: int) -> Pair:
        """The pair {u_i, v_i}; the index is reduced mod n."""
        i %= self.n
        return Pair(i, cached_vertex(Ring.OUTER, i), cached_vertex(Ring.INNER, i))

    def pairs(self) -> Iterator[Pair]:
        for i in range(self.n):
            yield self.pair_at(i)


def build_petersen(n: int, k: int) -> PetersenGraph:
    """Construct P(n,k), rejecting parameters with n < 3 or k >= n/2."""
    return PetersenGraph(n, k)
