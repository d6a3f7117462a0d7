"""Exact integer root-system data for the simple Lie types.

Roots are stored as integer coordinate vectors in the simple-root basis;
there is no Euclidean realization and no floating point anywhere.  Node
numbering follows Bourbaki (A/B/C/D chains numbered left to right, the
branch node of E6/E7/E8 is node 4 with node 2 hanging off it, G2 has the
short root first).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import CharvarError

_RANK_BOUNDS = {"A": 1, "B": 2, "C": 3, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

# Low-rank coincidences.  These labels are rejected at construction; the
# value names the canonical isomorphic type.
_ALIASES = {
    ("B", 1): "A1",
    ("C", 1): "A1",
    ("C", 2): "B2",
    ("D", 2): "A1+A1 (not simple)",
    ("D", 3): "A3",
}


@dataclass(frozen=True, order=True)
class SimpleType:
    """A simple Lie-algebra type label such as A4, D7, or E8."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in "ABCDEFG":
            raise CharvarError(f"unknown family {self.family!r}")
        if (self.family, self.rank) in _ALIASES:
            canonical = _ALIASES[(self.family, self.rank)]
            raise CharvarError(
                f"{self.family}{self.rank} is an alias: use {canonical}"
            )
        if self.family in _FIXED_RANKS:
            if self.rank not in _FIXED_RANKS[self.family]:
                raise CharvarError(f"invalid rank {self.rank} for family {self.family}")
        elif self.rank < _RANK_BOUNDS[self.family]:
            raise CharvarError(f"invalid rank {self.rank} for family {self.family}")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        text = text.strip()
        if len(text) < 2 or text[0] not in "ABCDEFG" or not text[1:].isdigit():
            raise CharvarError(f"cannot parse simple type {text!r}")
        return cls(text[0], int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class DynkinEdge:
    """An edge of a Dynkin diagram.

    ``short`` is the node id at the short-root end of a multiple bond, or
    None for single bonds and for the length-symmetric affine-A1 bond.
    """

    i: int
    j: int
    multiplicity: int = 1
    short: Optional[int] = None

    def other(self, node: int) -> int:
        return self.j if node == self.i else self.i


@dataclass(frozen=True)
class DynkinDiagram:
    """A disjoint union of Dynkin diagram components, optionally marked.

    ``marks`` maps node ids to the coefficient of that node's simple root
    in the highest root (affine node marked 1).
    """

    nodes: tuple[int, ...]
    edges: tuple[DynkinEdge, ...]
    marks: Optional[dict[int, int]] = None

    def without_node(self, k: int) -> "DynkinDiagram":
        if k not in self.nodes:
            raise CharvarError(f"node {k} not in diagram")
        nodes = tuple(n for n in self.nodes if n != k)
        edges = tuple(e for e in self.edges if k not in (e.i, e.j))
        return DynkinDiagram(nodes, edges, None)


def _chain_edges(ids: Iterable[int]) -> list[DynkinEdge]:
    ids = list(ids)
    return [DynkinEdge(a, b) for a, b in zip(ids, ids[1:])]


def diagram_of(t: SimpleType) -> DynkinDiagram:
    """The (unextended, unmarked) Dynkin diagram of a simple type."""
    r = t.rank
    nodes = tuple(range(1, r + 1))
    if t.family == "A":
        edges = _chain_edges(nodes)
    elif t.family == "B":
        edges = _chain_edges(range(1, r))
        edges.append(DynkinEdge(r - 1, r, 2, short=r))
    elif t.family == "C":
        edges = _chain_edges(range(1, r))
        edges.append(DynkinEdge(r - 1, r, 2, short=r - 1))
    elif t.family == "D":
        edges = _chain_edges(range(1, r))
        edges.append(DynkinEdge(r - 2, r, 1))
    elif t.family == "E":
        edges = _chain_edges([1] + list(range(3, r + 1)))
        edges.append(DynkinEdge(2, 4))
    elif t.family == "F":
        edges = [DynkinEdge(1, 2), DynkinEdge(2, 3, 2, short=3), DynkinEdge(3, 4)]
    else:  # G2: alpha_1 short, alpha_2 long
        edges = [DynkinEdge(1, 2, 3, short=1)]
    return DynkinDiagram(nodes, tuple(edges))


@functools.cache
def cartan_matrix(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entries a[i][j] = 2(a_i, a_j)/(a_j, a_j)."""
    r = t.rank
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    for e in diagram_of(t).edges:
        i, j = e.i - 1, e.j - 1
        if e.multiplicity == 1:
            a[i][j] = a[j][i] = -1
        else:
            s, l = e.short - 1, (e.j if e.short == e.i else e.i) - 1
            a[l][s] = -e.multiplicity
            a[s][l] = -1
    return tuple(tuple(row) for row in a)


@functools.cache
def positive_roots(t: SimpleType) -> frozenset[tuple[int, ...]]:
    """All positive roots in simple-root coordinates.

    Breadth-first closure by height: beta + alpha_j is a root iff the
    alpha_j-string through beta reaches it, i.e. p - <beta, alpha_j^v> > 0
    where p is the depth of the string below beta.
    """
    r = t.rank
    cartan = cartan_matrix(t)
    simples = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots: set[tuple[int, ...]] = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for c in frontier:
            for j in range(r):
                pairing = sum(c[i] * cartan[i][j] for i in range(r))
                p = 0
                down = list(c)
                while True:
                    down[j] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(c)
                    up[j] += 1
                    cand = tuple(up)
                    if cand not in roots:
                        roots.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return frozenset(roots)


def dimension(t: SimpleType) -> int:
    """dim of the simple Lie algebra: rank + number of roots."""
    return t.rank + 2 * len(positive_roots(t))


@functools.cache
def highest_root(t: SimpleType) -> tuple[int, ...]:
    """The unique positive root dominating all others coordinatewise."""
    best = max(positive_roots(t), key=sum)
    assert all(all(b >= c for b, c in zip(best, root)) for root in positive_roots(t))
    return best


def marks(t: SimpleType) -> dict[int, int]:
    """Highest-root coefficient of each node (1-based node ids)."""
    return {i + 1: c for i, c in enumerate(highest_root(t))}


def _norms_squared(t: SimpleType) -> dict[int, Fraction]:
    """Relative squared root lengths per node (normalization arbitrary)."""
    d = diagram_of(t)
    adj: dict[int, list[DynkinEdge]] = {n: [] for n in d.nodes}
    for e in d.edges:
        adj[e.i].append(e)
        adj[e.j].append(e)
    norms: dict[int, Fraction] = {1: Fraction(1)}
    frontier = [1]
    while frontier:
        n = frontier.pop()
        for e in adj[n]:
            m = e.other(n)
            if m in norms:
                continue
            if e.multiplicity == 1:
                norms[m] = norms[n]
            elif e.short == n:
                norms[m] = norms[n] * e.multiplicity
            else:
                norms[m] = norms[n] / e.multiplicity
            frontier.append(m)
    return norms


def extended_diagram(t: SimpleType) -> DynkinDiagram:
    """The affine diagram: add node 0 carrying the minimal root -theta."""
    base = diagram_of(t)
    cartan = cartan_matrix(t)
    theta = highest_root(t)
    r = t.rank
    norms = _norms_squared(t)
    theta_norm = max(norms.values())  # the highest root is long
    edges = list(base.edges)
    for j in range(r):
        p = sum(theta[i] * cartan[i][j] for i in range(r))  # <theta, a_j^v>
        if p == 0:
            continue
        q_frac = p * norms[j + 1] / theta_norm  # <a_j, theta^v>
        assert q_frac.denominator == 1
        q = int(q_frac)
        mult = max(p, q)
        short = j + 1 if norms[j + 1] < theta_norm else None
        edges.append(DynkinEdge(0, j + 1, mult, short=short))
    node_marks = {i + 1: c for i, c in enumerate(theta)}
    node_marks[0] = 1
    return DynkinDiagram((0,) + base.nodes, tuple(edges), node_marks)


def _component_nodes(d: DynkinDiagram) -> list[list[int]]:
    adj: dict[int, set[int]] = {n: set() for n in d.nodes}
    for e in d.edges:
        adj[e.i].add(e.j)
        adj[e.j].add(e.i)
    seen: set[int] = set()
    comps = []
    for n in d.nodes:
        if n in seen:
            continue
        comp = []
        stack = [n]
        seen.add(n)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _classify_component(nodes: list[int], edges: list[DynkinEdge]) -> SimpleType:
    n = len(nodes)
    if any(e.multiplicity >= 2 and e.short is None for e in edges):
        raise CharvarError(f"component {nodes} is not of finite type")
    if len(edges) != n - 1:
        raise CharvarError(f"component {nodes} contains a cycle (affine shape)")
    degree = {v: 0 for v in nodes}
    for e in edges:
        degree[e.i] += 1
        degree[e.j] += 1

    triples = [e for e in edges if e.multiplicity == 3]
    doubles = [e for e in edges if e.multiplicity == 2]
    if any(e.multiplicity > 3 for e in edges):
        raise CharvarError(f"component {nodes} has a bond of multiplicity > 3")
    if triples:
        if n == 2 and not doubles:
            return SimpleType("G", 2)
        raise CharvarError(f"component {nodes} is not of finite type")
    if len(doubles) > 1:
        raise CharvarError(f"component {nodes} is not of finite type")

    if doubles:
        if max(degree.values()) > 2:
            raise CharvarError(f"component {nodes} is not of finite type")
        if n == 2:
            return SimpleType("B", 2)
        # split the path at the double bond and measure the two sides
        e = doubles[0]
        long_end = e.other(e.short)
        sides = {}
        for start in (e.short, long_end):
            count, prev, cur = 1, e.other(start), start
            while True:
                nbrs = [x.other(cur) for x in edges if cur in (x.i, x.j)]
                nxt = [w for w in nbrs if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                count += 1
            sides[start] = count
        if sides[e.short] == 1:
            return SimpleType("B", n)
        if sides[long_end] == 1:
            return SimpleType("C", n)
        if sides[e.short] == 2 and sides[long_end] == 2:
            return SimpleType("F", 4)
        raise CharvarError(f"component {nodes} is not of finite type")

    # simply laced
    if max(degree.values(), default=0) <= 2:
        return SimpleType("A", n)
    branches = [v for v, d in degree.items() if d >= 3]
    if len(branches) != 1 or degree[branches[0]] != 3:
        raise CharvarError(f"component {nodes} is not of finite type")
    b = branches[0]
    arms = []
    for e in (x for x in edges if b in (x.i, x.j)):
        length, prev, cur = 1, b, e.other(b)
        while True:
            nbrs = [x.other(cur) for x in edges if cur in (x.i, x.j)]
            nxt = [w for w in nbrs if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return SimpleType("D", n)
    if arms == [1, 2, 2]:
        return SimpleType("E", 6)
    if arms == [1, 2, 3]:
        return SimpleType("E", 7)
    if arms == [1, 2, 4]:
        return SimpleType("E", 8)
    raise CharvarError(f"component {nodes} is not of finite type")


def classify_diagram(d: DynkinDiagram) -> list[SimpleType]:
    """Types of the diagram's components, low-rank shapes canonicalized.

    A two-node double bond reports B2 and a fork of three nodes reports A3,
    so deletions from extended diagrams (which produce such shapes) come
    back under their canonical names.
    """
    result = []
    for comp in _component_nodes(d):
        comp_set = set(comp)
        comp_edges = [e for e in d.edges if e.i in comp_set and e.j in comp_set]
        result.append(_classify_component(comp, comp_edges))
    return sorted(result)


def all_roots(t: SimpleType) -> frozenset[tuple[int, ...]]:
    """Positive and negative roots together."""
    pos = positive_roots(t)
    return pos | frozenset(tuple(-c for c in root) for root in pos)
