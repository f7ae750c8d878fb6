"""Bipartite graph container, text format, and instance generators.

Vertices carry string labels and get dense integer indices in first
appearance order.  Side 0 is called A, side 1 is called B.  Edges are
stored index based with the A endpoint first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BipartitenessViolation, IllegalEdge, ParseError, UnknownVertex


class BipartiteGraph:
    """Immutable bipartite graph.

    Attributes:
        labels: vertex labels, index position is the vertex id.
        sides: 0 for A side vertices, 1 for B side.
        edges: canonical (a, b) index pairs sorted ascending.
        adj: per vertex sorted tuples of neighbour indices.
    """

    __slots__ = ("labels", "sides", "edges", "adj", "edge_set", "label_index")

    def __init__(
        self,
        labels: Sequence[str],
        sides: Sequence[int],
        edges: Iterable[tuple[int, int]],
    ):
        self.labels: tuple[str, ...] = tuple(labels)
        self.sides: tuple[int, ...] = tuple(sides)
        if len(self.labels) != len(self.sides):
            raise ValueError("labels and sides length mismatch")
        self.label_index: dict[str, int] = {}
        for i, lab in enumerate(self.labels):
            if lab in self.label_index:
                raise ParseError(f"duplicate vertex label {lab!r}")
            self.label_index[lab] = i

        canon = set()
        for u, v in edges:
            if not (0 <= u < len(self.labels)) or not (0 <= v < len(self.labels)):
                raise IllegalEdge(f"edge ({u}, {v}) references missing vertex")
            if self.sides[u] == self.sides[v]:
                raise BipartitenessViolation(
                    f"edge joins same side vertices {self.labels[u]!r} and {self.labels[v]!r}"
                )
            if self.sides[u] == 1:
                u, v = v, u
            if (u, v) in canon:
                raise ParseError(
                    f"duplicate edge {self.labels[u]!r} {self.labels[v]!r}"
                )
            canon.add((u, v))
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canon))
        self.edge_set: frozenset[tuple[int, int]] = frozenset(canon)

        lists: list[list[int]] = [[] for _ in self.labels]
        for u, v in self.edges:
            lists[u].append(v)
            lists[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(nb)) for nb in lists
        )

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def side(self, u: int) -> int:
        return self.sides[u]

    def label(self, u: int) -> str:
        return self.labels[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def a_vertices(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.sides) if s == 0)

    def b_vertices(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.sides) if s == 1)

    def has_edge(self, u: int, v: int) -> bool:
        if self.sides[u] == 1:
            u, v = v, u
        return (u, v) in self.edge_set

    def with_added_edges(self, pairs: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        """Return a copy with the index pairs added.

        Raises IllegalEdge when a pair duplicates an existing or requested
        edge or joins two vertices on the same side.
        """
        new_edges = list(self.edges)
        seen = set(self.edge_set)
        for u, v in pairs:
            if self.sides[u] == self.sides[v]:
                raise IllegalEdge(
                    f"cannot add same side edge {self.labels[u]!r} {self.labels[v]!r}"
                )
            if self.sides[u] == 1:
                u, v = v, u
            if (u, v) in seen:
                raise IllegalEdge(
                    f"edge {self.labels[u]!r} {self.labels[v]!r} already present"
                )
            seen.add((u, v))
            new_edges.append((u, v))
        return BipartiteGraph(self.labels, self.sides, new_edges)

    def edge_labels(self) -> tuple[tuple[str, str], ...]:
        return tuple((self.labels[u], self.labels[v]) for u, v in self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def _key(self):
        a = frozenset(l for l, s in zip(self.labels, self.sides) if s == 0)
        b = frozenset(l for l, s in zip(self.labels, self.sides) if s == 1)
        return (a, b, frozenset(self.edge_labels()))

    def __repr__(self) -> str:
        return f"BipartiteGraph(n={self.n}, m={self.m})"


def build_graph(
    a_labels: Sequence[str],
    b_labels: Sequence[str],
    edge_pairs: Iterable[tuple[str, str]],
) -> BipartiteGraph:
    """Construct a graph from label lists and (a label, b label) pairs."""
    labels = list(a_labels) + list(b_labels)
    sides = [0] * len(a_labels) + [1] * len(b_labels)
    index = {}
    for i, lab in enumerate(labels):
        if lab in index:
            raise ParseError(f"duplicate vertex label {lab!r}")
        index[lab] = i
    edges = []
    for x, y in edge_pairs:
        if x not in index or y not in index:
            missing = x if x not in index else y
            raise ParseError(f"edge references undeclared vertex {missing!r}")
        edges.append((index[x], index[y]))
    return BipartiteGraph(labels, sides, edges)


def parse_graph(text: str) -> BipartiteGraph:
    """Parse the line oriented text format.

    Directives: ``A <id>...`` and ``B <id>...`` declare vertices,
    ``E <a-id> <b-id>`` declares one edge.  ``#`` starts a comment line.
    Duplicate edges, undeclared endpoints, redeclared labels and same
    side edges are hard errors.
    """
    labels: list[str] = []
    sides: list[int] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    edge_seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        kind, args = tokens[0], tokens[1:]
        if kind in ("A", "B"):
            if not args:
                raise ParseError(f"line {lineno}: empty {kind} directive")
            side = 0 if kind == "A" else 1
            for lab in args:
                if lab in index:
                    prior = "A" if sides[index[lab]] == 0 else "B"
                    if prior != kind:
                        raise BipartitenessViolation(
                            f"line {lineno}: vertex {lab!r} declared on both sides"
                        )
                    raise ParseError(
                        f"line {lineno}: vertex {lab!r} declared twice"
                    )
                index[lab] = len(labels)
                labels.append(lab)
                sides.append(side)
        elif kind == "E":
            if len(args) != 2:
                raise ParseError(f"line {lineno}: E takes exactly two vertex ids")
            x, y = args
            for lab in (x, y):
                if lab not in index:
                    raise ParseError(
                        f"line {lineno}: edge references undeclared vertex {lab!r}"
                    )
            u, v = index[x], index[y]
            if sides[u] == sides[v]:
                raise BipartitenessViolation(
                    f"line {lineno}: edge {x!r} {y!r} joins vertices on the same side"
                )
            if sides[u] == 1:
                u, v = v, u
            if (u, v) in edge_seen:
                raise ParseError(f"line {lineno}: duplicate edge {x!r} {y!r}")
            edge_seen.add((u, v))
            edges.append((u, v))
        else:
            raise ParseError(f"line {lineno}: unknown directive {kind!r}")
    return BipartiteGraph(labels, sides, edges)


def serialize_graph(g: BipartiteGraph) -> str:
    """Render a graph back to the text format, deterministically.

    Vertices are listed in index order, edges sorted by index pair, so
    equal graphs built the same way serialize byte identically.
    """
    out = []
    a = [g.labels[i] for i in g.a_vertices()]
    b = [g.labels[i] for i in g.b_vertices()]
    if a:
        out.append("A " + " ".join(a))
    if b:
        out.append("B " + " ".join(b))
    for u, v in g.edges:
        out.append(f"E {g.labels[u]} {g.labels[v]}")
    return "\n".join(out) + ("\n" if out else "")


def is_legal_edge(g: BipartiteGraph, u: int, v: int) -> bool:
    """True iff u and v sit on opposite sides and are not adjacent."""
    for x in (u, v):
        if not 0 <= x < g.n:
            raise UnknownVertex(f"vertex index {x} out of range")
    return g.sides[u] != g.sides[v] and not g.has_edge(u, v)


def add_edges(
    g: BipartiteGraph, pairs: Iterable[tuple[int, int]]
) -> BipartiteGraph:
    """Copy of g with the index pairs added, value semantics.

    Every pair must be a legal edge and the list free of repeats.
    """
    seen: set[tuple[int, int]] = set()
    checked = []
    for u, v in pairs:
        if not is_legal_edge(g, u, v):
            raise IllegalEdge(
                f"cannot add {g.labels[u]!r} {g.labels[v]!r}: same side or already present"
            )
        key = (u, v) if g.sides[u] == 0 else (v, u)
        if key in seen:
            raise IllegalEdge(
                f"edge {g.labels[key[0]]!r} {g.labels[key[1]]!r} repeated in the added list"
            )
        seen.add(key)
        checked.append(key)
    return g.with_added_edges(checked)


@dataclass(frozen=True)
class ComponentPartition:
    component_id: dict[int, int]
    component_members: list[list[int]]


def connected_components(g: BipartiteGraph) -> ComponentPartition:
    """Connected components with a vertex to component index map."""
    members = components(g)
    cid: dict[int, int] = {}
    for i, comp in enumerate(members):
        for v in comp:
            cid[v] = i
    return ComponentPartition(component_id=cid, component_members=members)


def components(g: BipartiteGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        comp = []
        while queue:
            u = queue.pop()
            comp.append(u)
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def path_graph(k: int) -> BipartiteGraph:
    """Path with k vertices labelled a1, b1, a2, b2, ... along the path."""
    labels = []
    for i in range(k):
        side = i % 2
        num = i // 2 + 1
        labels.append(("a" if side == 0 else "b") + str(num))
    a = [lab for i, lab in enumerate(labels) if i % 2 == 0]
    b = [lab for i, lab in enumerate(labels) if i % 2 == 1]
    edges = [(labels[i], labels[i + 1]) for i in range(k - 1)]
    edges = [(x, y) if x.startswith("a") else (y, x) for x, y in edges]
    return build_graph(a, b, edges)


def cycle_graph(k: int) -> BipartiteGraph:
    """Even cycle with k >= 4 vertices; same labelling as path_graph."""
    if k < 4 or k % 2 != 0:
        raise ValueError("bipartite cycle needs an even k >= 4")
    g = path_graph(k)
    first, last = g.labels[0], g.labels[k - 1]
    return build_graph(
        [g.labels[i] for i in g.a_vertices()],
        [g.labels[i] for i in g.b_vertices()],
        list(g.edge_labels()) + [(first, last)],
    )


def spider_graph(chain_lengths: Sequence[int]) -> BipartiteGraph:
    """Chains hanging off one hub.

    The hub is ``x`` on side A.  Chain i starts with ``b{i}`` adjacent to
    the hub, then ``a{i}``, then suffixed labels for longer chains.
    """
    a = ["x"]
    b = []
    edges = []
    for i, length in enumerate(chain_lengths, start=1):
        prev = "x"
        for j in range(1, length + 1):
            if j == 1:
                lab = f"b{i}"
            elif j == 2:
                lab = f"a{i}"
            else:
                base = "b" if j % 2 == 1 else "a"
                lab = f"{base}{i}_{j}"
            (b if j % 2 == 1 else a).append(lab)
            if j % 2 == 1:
                edges.append((prev, lab))
            else:
                edges.append((lab, prev))
            prev = lab
    return build_graph(a, b, edges)


def broom_graph(left: int, right: int) -> BipartiteGraph:
    """Two adjacent hubs a0 and b0 with left B leaves and right A leaves."""
    a = ["a0"] + [f"a{i}" for i in range(1, right + 1)]
    b = ["b0"] + [f"b{i}" for i in range(1, left + 1)]
    edges = [("a0", f"b{i}") for i in range(1, left + 1)]
    edges.append(("a0", "b0"))
    edges += [(f"a{i}", "b0") for i in range(1, right + 1)]
    return build_graph(a, b, edges)


def caterpillar_graph(spine: int) -> BipartiteGraph:
    """Path of spine vertices with one leaf on every internal spine vertex."""
    a, b, edges = [], [], []
    labels = []
    for i in range(1, spine + 1):
        lab = f"s{i}"
        labels.append(lab)
        (a if i % 2 == 1 else b).append(lab)
    for i in range(spine - 1):
        x, y = labels[i], labels[i + 1]
        edges.append((x, y) if i % 2 == 0 else (y, x))
    for i in range(2, spine):
        leaf = f"l{i}"
        spine_lab = labels[i - 1]
        if i % 2 == 1:
            # odd spine position sits on side A, leaf goes to B
            b.append(leaf)
            edges.append((spine_lab, leaf))
        else:
            a.append(leaf)
            edges.append((leaf, spine_lab))
    return build_graph(a, b, edges)


def random_bipartite(na: int, nb: int, p: float, seed: int) -> BipartiteGraph:
    """Independent edge coin flips with a fixed scan order, so one seed
    always yields one graph."""
    rng = random.Random(seed)
    a = [f"a{i}" for i in range(1, na + 1)]
    b = [f"b{j}" for j in range(1, nb + 1)]
    edges = []
    for i in range(na):
        for j in range(nb):
            if rng.random() < p:
                edges.append((a[i], b[j]))
    return build_graph(a, b, edges)


def generate_instance(
    kind: str, size: int, seed: int = 0, p: float | None = None
) -> BipartiteGraph:
    """Named instance families used by the gen and bench commands.

    size is the approximate vertex count.  Only kind random consumes
    seed and p.
    """
    if size < 1:
        raise ValueError("size must be positive")
    if kind == "path":
        return path_graph(size)
    if kind == "cycle":
        return cycle_graph(max(4, size + (size % 2)))
    if kind == "spider":
        k = max(2, (size - 1) // 3)
        return spider_graph([1] * k + [2] * k)
    if kind == "broom":
        half = max(2, (size - 2) // 2)
        return broom_graph(half, half)
    if kind == "caterpillar":
        spine = max(4, (size + 2) * 2 // 3)
        return caterpillar_graph(spine)
    if kind == "random":
        na = size // 2
        nb = size - na
        if p is None:
            p = min(1.0, 2.0 / max(1, nb))
        return random_bipartite(na, nb, p, seed)
    raise ValueError(f"unknown instance kind {kind!r}")
