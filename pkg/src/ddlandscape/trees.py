"""Free trees, the families of interest, and hubiness."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from ddlandscape.errors import DomainError

TAGS = ("star", "quasistar", "path", "balanced_bistar", "bistar", "caterpillar", "other")


@dataclass(frozen=True)
class FreeTree:
    """Undirected tree on vertices ``0..n-1``.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``, in sorted
    order, so equal edge sets compare equal.
    """

    n: int
    edges: tuple

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("a tree needs at least one vertex")
        norm = []
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise DomainError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DomainError(f"edge ({u}, {v}) has a label outside 0..{self.n - 1}")
            norm.append((min(u, v), max(u, v)))
        norm = tuple(sorted(norm))
        if len(set(norm)) != len(norm):
            raise DomainError("duplicate edge")
        if len(norm) != self.n - 1:
            raise DomainError(f"a tree on {self.n} vertices has {self.n - 1} edges, got {len(norm)}")
        # n-1 edges + no cycle <=> connected
        parent = list(range(self.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in norm:
            ru, rv = find(u), find(v)
            if ru == rv:
                raise DomainError(f"edge ({u}, {v}) closes a cycle")
            parent[ru] = rv
        object.__setattr__(self, "edges", norm)

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: Optional[int] = None) -> "FreeTree":
        edges = [tuple(e) for e in edges]
        if n is None:
            n = 1 + max((max(e) for e in edges), default=0)
        return cls(n, tuple(edges))

    @property
    def degrees(self) -> tuple:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def neighbours(self, v: int) -> list:
        return [b if a == v else a for a, b in self.edges if v in (a, b)]

    # -- serialisation ------------------------------------------------------

    def to_edge_list(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges)

    @classmethod
    def from_edge_list(cls, text: str, n: Optional[int] = None) -> "FreeTree":
        edges = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise DomainError(f"line {lineno}: expected 'u v', got {line!r}")
            edges.append((int(parts[0]), int(parts[1])))
        if not edges and n is None:
            n = 1
        return cls.from_edges(edges, n)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges], "tags": sorted(classify(self).tags)}

    @classmethod
    def from_json(cls, obj) -> "FreeTree":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["n"]), tuple(tuple(e) for e in obj["edges"]))


@dataclass(frozen=True)
class TreeFamily:
    tags: frozenset
    hub: Optional[int] = None

    def __contains__(self, tag: str) -> bool:
        return tag in self.tags


def make_star(n: int) -> FreeTree:
    """Hub 0 joined to leaves 1..n-1."""
    if n < 3:
        raise DomainError(f"a star needs n >= 3 for its hub to be defined, got {n}")
    return FreeTree(n, tuple((0, v) for v in range(1, n)))


def make_quasistar(n: int) -> FreeTree:
    """Star on ``n - 1`` vertices (hub 0) with vertex ``n-1`` hung from leaf 1.

    Vertex 1 is the degree-2 vertex and ``n - 1`` its pendant leaf; the
    landscape module relies on this labelling.
    """
    if n < 4:
        raise DomainError(f"a quasistar needs n >= 4, got {n}")
    edges = [(0, v) for v in range(1, n - 1)] + [(1, n - 1)]
    return FreeTree(n, tuple(edges))


def make_path(n: int) -> FreeTree:
    if n < 2:
        raise DomainError(f"a path needs n >= 2, got {n}")
    return FreeTree(n, tuple((v, v + 1) for v in range(n - 1)))


def make_balanced_bistar(n: int) -> FreeTree:
    """Hubs 0 and 1 joined by an edge; the ``n - 2`` leaves are split evenly."""
    if n < 4:
        raise DomainError(f"a balanced bistar needs n >= 4, got {n}")
    leaves = list(range(2, n))
    half = (len(leaves) + 1) // 2
    edges = [(0, 1)] + [(0, v) for v in leaves[:half]] + [(1, v) for v in leaves[half:]]
    return FreeTree(n, tuple(edges))


def make_caterpillar(spine_degrees: Sequence[int]) -> FreeTree:
    """Caterpillar whose spine vertices ``0..s-1`` have the given degrees.

    Each spine vertex receives enough pendant leaves to reach its degree, so
    a spine vertex cannot have fewer edges than it has spine neighbours.
    """
    spine = [int(k) for k in spine_degrees]
    if not spine:
        raise DomainError("empty spine")
    s = len(spine)
    edges = [(i, i + 1) for i in range(s - 1)]
    nxt = s
    for i, k in enumerate(spine):
        on_spine = (i > 0) + (i < s - 1)
        if k < 1 or k < on_spine:
            raise DomainError(f"spine vertex {i} needs degree >= {max(1, on_spine)}, got {k}")
        for _ in range(k - on_spine):
            edges.append((i, nxt))
            nxt += 1
    if nxt == 1:
        raise DomainError("spine [0] describes no edge")
    return FreeTree(nxt, tuple(edges))


def hubiness(t: FreeTree) -> Fraction:
    """Mean squared degree, ``sum(k_i**2) / n``, as an exact rational."""
    return Fraction(sum(k * k for k in t.degrees), t.n)


def _is_caterpillar(t: FreeTree, deg) -> bool:
    internal = {v for v in range(t.n) if deg[v] > 1}
    if len(internal) <= 1:
        return True
    # the internal vertices induce a subtree; it is a path iff max degree <= 2
    inner_deg = Counter()
    for u, v in t.edges:
        if u in internal and v in internal:
            inner_deg[u] += 1
            inner_deg[v] += 1
    return max(inner_deg.values()) <= 2


def classify(t: FreeTree) -> TreeFamily:
    """All family tags that apply to ``t``.

    Families overlap for small n: n = 3 is star and path, n = 4 path is
    also quasistar and balanced bistar.  Stars and quasistars are bistars
    (every vertex lies within one edge of a central edge).
    """
    n = t.n
    deg = t.degrees
    tags = set()
    hub = None
    kmax = max(deg) if n > 1 else 0
    by_degree = sorted(deg, reverse=True)

    if n >= 2 and kmax <= 2:
        tags.add("path")
    if n >= 3 and kmax == n - 1:
        tags.add("star")
        hub = deg.index(n - 1)
    if n >= 4 and by_degree == [n - 2, 2] + [1] * (n - 2):
        tags.add("quasistar")
        if hub is None:
            hub = deg.index(n - 2)
    if n >= 3:
        internal = [v for v in range(n) if deg[v] > 1]
        if _is_caterpillar(t, deg):
            tags.add("caterpillar")
        if n >= 4 and len(internal) <= 2:
            tags.add("bistar")
            if len(internal) == 2:
                a, b = internal
                balanced = abs(deg[a] - deg[b]) <= 1
            else:
                balanced = False  # star: hub degree n-1 vs leaf degree 1
            if balanced:
                tags.add("balanced_bistar")
            if hub is None:
                hub = deg.index(kmax)
    if not tags:
        tags.add("other")
    return TreeFamily(frozenset(tags), hub)


FAMILY_BUILDERS = {
    "star": make_star,
    "quasistar": make_quasistar,
    "path": make_path,
    "balanced_bistar": make_balanced_bistar,
}


def make_family(family: str, n: int) -> FreeTree:
    try:
        builder = FAMILY_BUILDERS[family]
    except KeyError:
        raise DomainError(f"no constructor for family {family!r}; choose from {sorted(FAMILY_BUILDERS)}") from None
    return builder(n)
