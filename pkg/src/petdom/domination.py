"""Domination predicates and proof artifacts for P(n,k).

Four predicates over a vertex subset S, stated via c(v) = |N(v) & S|:

* PLAIN:          c(v) >= 1        for every v not in S,
* TOTAL:          c(v) >= 1        for every v,
* ONE_TWO:        1 <= c(v) <= 2   for every v not in S,
* ONE_TWO_TOTAL:  1 <= c(v) <= 2   for every v.

``is_valid`` reports every offending vertex (never just the first), so
tests can assert exact violation sets.  Counts are recomputed from
scratch on each call; nothing is cached.

On top of the validators sit the proof artifacts for P(n,2):
gamma_s counts, the bucketing of blocks by |block & S|, the
classification of blocks containing exactly one member of S, and the
path/cycle census of the subgraph induced by a [1,2]-total dominating
set together with its counting inequalities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import CensusError, ClassificationImpossibleError, ParameterError
from .graph import Block, PetersenGraph, Ring, Vertex, VertexSet

__all__ = [
    "DominationKind",
    "Bound",
    "Violation",
    "ValidationReport",
    "domination_count",
    "is_valid",
    "gamma_s",
    "blocks_by_count",
    "BlockType",
    "classify_singleton_block",
    "Component",
    "induced_components",
    "ComponentCensus",
    "component_census",
    "InequalityCheck",
    "CensusChecks",
    "census_inequalities",
]


class DominationKind(Enum):
    PLAIN = "plain"
    TOTAL = "total"
    ONE_TWO = "one-two"
    ONE_TWO_TOTAL = "one-two-total"

    @property
    def covers_members(self) -> bool:
        """Whether members of S are themselves subject to the condition."""
        return self in (DominationKind.TOTAL, DominationKind.ONE_TWO_TOTAL)

    @property
    def upper_bounded(self) -> bool:
        """Whether the condition caps the count at two."""
        return self in (DominationKind.ONE_TWO, DominationKind.ONE_TWO_TOTAL)

    @classmethod
    def from_text(cls, text: str) -> "DominationKind":
        for kind in cls:
            if kind.value == text:
                return kind
        raise ParameterError(
            f"kind must be one of {[k.value for k in cls]}, got {text!r}"
        )


class Bound(Enum):
    TOO_FEW = "TooFew"
    TOO_MANY = "TooMany"


@dataclass(frozen=True)
class Violation:
    vertex: Vertex
    count: int
    bound: Bound

    def as_dict(self) -> dict:
        return {
            "vertex": self.vertex.name,
            "count": self.count,
            "bound": self.bound.value,
        }


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[Violation, ...]


def domination_count(g: PetersenGraph, S: VertexSet, v: Vertex) -> int:
    """|N(v) & S|, an integer in [0, 3]."""
    return sum(1 for w in g.neighbors(v) if w in S)


def _membership_arrays(g: PetersenGraph, S: VertexSet) -> tuple[np.ndarray, np.ndarray]:
    outer = np.zeros(g.n, dtype=np.int8)
    inner = np.zeros(g.n, dtype=np.int8)
    for v in S.members:
        if not g.contains(v):
            raise ParameterError(f"vertex {v.name} has index outside [0, {g.n})")
        if v.ring is Ring.OUTER:
            outer[v.index] = 1
        else:
            inner[v.index] = 1
    return outer, inner


def neighbor_counts(g: PetersenGraph, S: VertexSet) -> tuple[np.ndarray, np.ndarray]:
    """Vectors of |N(u_i) & S| and |N(v_i) & S| for all columns i."""
    outer, inner = _membership_arrays(g, S)
    cu = np.roll(outer, 1) + np.roll(outer, -1) + inner
    cv = np.roll(inner, g.k) + np.roll(inner, -g.k) + outer
    return cu, cv


def is_valid(g: PetersenGraph, S: VertexSet, kind: DominationKind) -> ValidationReport:
    """Check the domination predicate, listing every offending vertex."""
    outer, inner = _membership_arrays(g, S)
    cu = np.roll(outer, 1) + np.roll(outer, -1) + inner
    cv = np.roll(inner, g.k) + np.roll(inner, -g.k) + outer
    violations: list[Violation] = []
    for ring, member, counts in ((Ring.OUTER, outer, cu), (Ring.INNER, inner, cv)):
        for i in range(g.n):
            if not kind.covers_members and member[i]:
                continue
            c = int(counts[i])
            if c < 1:
                violations.append(Violation(Vertex(ring, i), c, Bound.TOO_FEW))
            elif kind.upper_bounded and c > 2:
                violations.append(Violation(Vertex(ring, i), c, Bound.TOO_MANY))
    violations.sort(key=lambda w: w.vertex.sort_key())
    return ValidationReport(not violations, tuple(violations))


def gamma_s(g: PetersenGraph, S: VertexSet, U: VertexSet) -> int:
    """|U & S|."""
    return len(U.members & S.members)


def blocks_by_count(g: PetersenGraph, S: VertexSet) -> dict[int, list[Block]]:
    """Bucket the n blocks of P(n,2) by |block & S|.

    Every block lands in exactly one of the buckets 0..6; bucket 0 is
    empty whenever S is a dominating set.
    """
    g._require_k2("blocks_by_count")
    buckets: dict[int, list[Block]] = {c: [] for c in range(7)}
    for b in g.blocks():
        buckets[gamma_s(g, S, b.vertex_set)].append(b)
    return buckets


class BlockType(Enum):
    """The four possible placements of the single S-member of a block b
    with |b & S| = 1.

    The central outer vertex u_i of the block is adjacent only to
    vertices inside the block, so the unique member must lie in its
    closed neighborhood {v_i, u_i, u_{i-1}, u_{i+1}}; the classification
    is total for every valid [1,2]-dominating set and applies uniformly
    to positive and negative blocks.
    """

    CENTER_INNER = "center-inner"   # v_i in S
    CENTER_OUTER = "center-outer"   # u_i in S
    LEFT_OUTER = "left-outer"       # u_{i-1} in S
    RIGHT_OUTER = "right-outer"     # u_{i+1} in S


def classify_singleton_block(g: PetersenGraph, S: VertexSet, b: Block) -> BlockType:
    """Classify a block with exactly one member of S.

    Raises ParameterError when |b & S| != 1 and
    ClassificationImpossibleError when the unique member is v_{i-1} or
    v_{i+1}, which would leave the block's central vertex undominated
    and therefore contradicts S being a valid [1,2]-dominating set.
    """
    hit = b.vertex_set.members & S.members
    if len(hit) != 1:
        raise ParameterError(
            f"block centered at {b.center} has gamma_S = {len(hit)}, expected 1"
        )
    (member,) = hit
    i = b.center
    if member == g.inner(i):
        return BlockType.CENTER_INNER
    if member == g.outer(i):
        return BlockType.CENTER_OUTER
    if member == g.outer(i - 1):
        return BlockType.LEFT_OUTER
    if member == g.outer(i + 1):
        return BlockType.RIGHT_OUTER
    raise ClassificationImpossibleError(
        f"singleton block centered at {i} holds only {member.name}, which "
        f"cannot dominate the central vertex u{i}; S is not a valid "
        f"[1,2]-dominating set"
    )


@dataclass(frozen=True)
class Component:
    """A connected component of the induced subgraph G[S].

    kind is "path" or "cycle".  Path vertices run end to end starting
    from the canonically smaller endpoint; cycle vertices start at the
    canonically smallest member and proceed toward its smaller neighbor.
    """

    kind: str
    vertices: tuple[Vertex, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)


def induced_components(g: PetersenGraph, S: VertexSet) -> list[Component]:
    """Path/cycle decomposition of G[S], in canonical discovery order.

    Raises CensusError if any member has induced degree 0 or 3.
    """
    members = S.sorted()
    member_set = S.members
    adj: dict[Vertex, list[Vertex]] = {}
    for v in members:
        nbrs = [w for w in g.neighbors(v) if w in member_set]
        if len(nbrs) == 0 or len(nbrs) == 3:
            raise CensusError(
                f"vertex {v.name} has induced degree {len(nbrs)}; the input "
                f"set is not [1,2]-total dominating"
            )
        adj[v] = nbrs

    seen: set[Vertex] = set()
    components: list[Component] = []
    for start in members:
        if start in seen:
            continue
        comp: set[Vertex] = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        seen |= comp
        ends = sorted((v for v in comp if len(adj[v]) == 1), key=Vertex.sort_key)
        if ends:
            walk = _walk(adj, ends[0], comp)
            components.append(Component("path", tuple(walk)))
        else:
            first = min(comp, key=Vertex.sort_key)
            second = min(adj[first], key=Vertex.sort_key)
            walk = _walk(adj, first, comp, toward=second)
            components.append(Component("cycle", tuple(walk)))
    return components


def _walk(
    adj: dict[Vertex, list[Vertex]],
    start: Vertex,
    comp: set[Vertex],
    toward: Vertex | None = None,
) -> list[Vertex]:
    walk = [start]
    prev: Vertex | None = None
    cur = start
    if toward is not None:
        walk.append(toward)
        prev, cur = start, toward
    while len(walk) < len(comp):
        nxt = [w for w in adj[cur] if w != prev]
        prev, cur = cur, nxt[0]
        walk.append(cur)
    return walk


@dataclass(frozen=True)
class ComponentCensus:
    """Counts x[l] of path components P_l and y[l] of cycle components
    C_l in G[S].  Satisfies sum(l * (x_l + y_l)) = |S|."""

    x: dict[int, int] = field(default_factory=dict)
    y: dict[int, int] = field(default_factory=dict)

    @property
    def total_vertices(self) -> int:
        return sum(l * c for l, c in self.x.items()) + sum(
            l * c for l, c in self.y.items()
        )

    def as_dict(self) -> dict:
        return {
            "x": {str(l): self.x[l] for l in sorted(self.x)},
            "y": {str(l): self.y[l] for l in sorted(self.y)},
        }


def component_census(g: PetersenGraph, S: VertexSet) -> ComponentCensus:
    """Census of G[S] for a valid [1,2]-total dominating set S.

    Every component must be a path (two degree-1 ends) or a cycle (all
    degree 2); induced degree 0 or 3 raises CensusError.
    """
    x: dict[int, int] = {}
    y: dict[int, int] = {}
    for comp in induced_components(g, S):
        counter = x if comp.kind == "path" else y
        counter[comp.order] = counter.get(comp.order, 0) + 1
    return ComponentCensus(x, y)


@dataclass(frozen=True)
class InequalityCheck:
    ok: bool
    lhs: int
    rhs: int

    def as_dict(self) -> dict:
        return {"ok": self.ok, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class CensusChecks:
    """The four counting checks tying a census to n and s = |S|.

    eq2: sum((2l+2) x_l + 2l y_l) >= 2n   (coverage of all 2n vertices)
    eq3: sum(l (x_l + y_l)) == s          (components partition S)
    eq4: s + sum(x_l) >= n                (derived from eq2 and eq3)
    eq5: sum(l x_l) >= 2 sum(x_l)         (paths have order >= 2)
    """

    eq2: InequalityCheck
    eq3: InequalityCheck
    eq4: InequalityCheck
    eq5: InequalityCheck

    @property
    def all_ok(self) -> bool:
        return self.eq2.ok and self.eq3.ok and self.eq4.ok and self.eq5.ok

    def as_dict(self) -> dict:
        return {
            "eq2": self.eq2.as_dict(),
            "eq3": self.eq3.as_dict(),
            "eq4": self.eq4.as_dict(),
            "eq5": self.eq5.as_dict(),
        }


def census_inequalities(c: ComponentCensus, n: int, s: int) -> CensusChecks:
    """Evaluate the four counting checks for a census of P(n,2)."""
    lhs2 = sum((2 * l + 2) * cnt for l, cnt in c.x.items()) + sum(
        2 * l * cnt for l, cnt in c.y.items()
    )
    lhs3 = c.total_vertices
    paths = sum(c.x.values())
    path_vertices = sum(l * cnt for l, cnt in c.x.items())
    return CensusChecks(
        eq2=InequalityCheck(lhs2 >= 2 * n, lhs2, 2 * n),
        eq3=InequalityCheck(lhs3 == s, lhs3, s),
        eq4=InequalityCheck(s + paths >= n, s + paths, n),
        eq5=InequalityCheck(path_vertices >= 2 * paths, path_vertices, 2 * paths),
    )
