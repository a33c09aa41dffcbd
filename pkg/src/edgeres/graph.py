"""Simple graphs on vertices 1..n stored as neighbourhood bitsets.

Vertex ``v`` occupies bit ``v - 1`` of every mask.  All public functions take
and return 1-based vertex labels.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_CYCLE_SCAN = 20
MAX_CANON = 9


class SizeGuardError(ValueError):
    """Raised when an input exceeds the brute-force size limit of an operation."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for i, a in enumerate(self.adj):
            if a & ~full:
                raise ValueError(f"vertex {i + 1} has a neighbour outside 1..{self.n}")
            if a >> i & 1:
                raise ValueError(f"self-loop at vertex {i + 1}")
            for j in iter_bits(a):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i + 1} and {j + 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def cycle(cls, r: int) -> "Graph":
        return cls.from_edges(r, [(i, i % r + 1) for i in range(1, r + 1)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, itertools.combinations(range(1, n + 1), 2))

    def edges(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i in range(self.n) for j in iter_bits(self.adj[i]) if j > i]

    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def neighbors(self, v: int) -> list[int]:
        return [j + 1 for j in iter_bits(self.adj[v - 1])]

    def degree(self, v: int) -> int:
        return self.adj[v - 1].bit_count()

    def isolated_vertices(self) -> list[int]:
        return [i + 1 for i, a in enumerate(self.adj) if a == 0]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v - 1]`` (a permutation of 1..n)."""
        return Graph.from_edges(self.n, [(perm[u - 1], perm[v - 1]) for u, v in self.edges()])


def iter_bits(mask: int) -> Iterator[int]:
    """Yield 0-based positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based vertices."""
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> list[int]:
    return [b + 1 for b in iter_bits(mask)]


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~a & ~(1 << i) for i, a in enumerate(g.adj)))


def induced_subgraph(g: Graph, w: int | Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``w`` relabelled 1..|w| in increasing order.

    Returns the subgraph and the list ``labels`` with ``labels[k - 1]`` the
    original name of new vertex ``k``.
    """
    wmask = w if isinstance(w, int) else mask_of(w)
    labels = vertices_of(wmask)
    pos = {v: k for k, v in enumerate(labels)}
    adj = []
    for v in labels:
        a = 0
        for u in iter_bits(g.adj[v - 1] & wmask):
            a |= 1 << pos[u + 1]
        adj.append(a)
    return Graph(len(labels), tuple(adj)), labels


def _component_mask(g: Graph, start: int, within: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for b in iter_bits(frontier):
            nxt |= g.adj[b]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise ValueError("connectivity of the graph on zero vertices is undefined")
    full = (1 << g.n) - 1
    return _component_mask(g, 0, full) == full


def is_connected_on(g: Graph, w: int) -> bool:
    """Connectivity of the induced subgraph on the nonempty vertex mask ``w``."""
    if w == 0:
        raise ValueError("connectivity of the graph on zero vertices is undefined")
    start = (w & -w).bit_length() - 1
    return _component_mask(g, start, w) == w


def _canonical_cycle(g: Graph, s: int) -> tuple[int, ...]:
    start = (s & -s).bit_length() - 1
    a, b = iter_bits(g.adj[start] & s)
    seq = [start, a]
    prev, cur = start, a
    while True:
        nbrs = g.adj[cur] & s & ~(1 << prev)
        nxt = nbrs.bit_length() - 1
        if nxt == start:
            break
        seq.append(nxt)
        prev, cur = cur, nxt
    return tuple(v + 1 for v in seq)


def enumerate_induced_cycles(g: Graph, min_len: int = 3) -> list[tuple[int, ...]]:
    """All chordless cycles of length >= ``min_len`` found by scanning vertex subsets.

    Each cycle starts at its smallest vertex and proceeds towards the smaller
    of that vertex's two cycle neighbours.
    """
    if min_len < 3:
        raise ValueError("min_len must be at least 3")
    if g.n > MAX_CYCLE_SCAN:
        raise SizeGuardError(f"induced-cycle scan supports n <= {MAX_CYCLE_SCAN}")
    found = []
    adj = g.adj
    for s in range(1, 1 << g.n):
        if s.bit_count() < min_len:
            continue
        if any((adj[b] & s).bit_count() != 2 for b in iter_bits(s)):
            continue
        if not is_connected_on(g, s):
            continue
        found.append(_canonical_cycle(g, s))
    found.sort(key=lambda c: (len(c), c))
    return found


def min_minimal_cycle_length(g: Graph) -> int | None:
    """Length of the shortest induced cycle of length > 3, or None if ``g`` is chordal."""
    cycles = enumerate_induced_cycles(g, 4)
    return len(cycles[0]) if cycles else None


def is_chordal(g: Graph) -> bool:
    # maximum cardinality search; reversed visit order is a perfect elimination order iff chordal
    weight = [0] * g.n
    unvisited = (1 << g.n) - 1
    order = []
    while unvisited:
        v = max(iter_bits(unvisited), key=lambda b: (weight[b], -b))
        order.append(v)
        unvisited &= ~(1 << v)
        for u in iter_bits(g.adj[v] & unvisited):
            weight[u] += 1
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in iter_bits(g.adj[v]) if position[u] < position[v]]
        if not earlier:
            continue
        parent = max(earlier, key=position.__getitem__)
        rest = 0
        for u in earlier:
            if u != parent:
                rest |= 1 << u
        if rest & ~g.adj[parent]:
            return False
    return True


PATTERNS: dict[str, Graph] = {
    "gap": Graph.from_edges(4, [(1, 2), (3, 4)]),
    "c4": Graph.cycle(4),
    "diamond": Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]),
    # triangle 1-2-3 with two pendant vertices hanging from 1
    "cricket": Graph.from_edges(5, [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5)]),
}


def find_pattern(g: Graph, pattern: str) -> list[int] | None:
    """Vertex set of some induced copy of ``pattern`` in ``g``, or None."""
    try:
        h = PATTERNS[pattern]
    except KeyError:
        raise ValueError(f"unknown pattern {pattern!r}; expected one of {sorted(PATTERNS)}") from None
    target = canonical_form(h)
    m = h.num_edges()
    for w in itertools.combinations(range(1, g.n + 1), h.n):
        sub, _ = induced_subgraph(g, w)
        if sub.num_edges() == m and canonical_form(sub) == target:
            return list(w)
    return None


def detect_pattern(g: Graph, pattern: str) -> bool:
    return find_pattern(g, pattern) is not None


@lru_cache(maxsize=None)
def _permutations(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string: the lexicographically largest upper-triangle
    adjacency bitstring over all vertex permutations, prefixed by n."""
    n = g.n
    if n > MAX_CANON:
        raise SizeGuardError(f"canonical_form supports n <= {MAX_CANON}")
    pairs = list(itertools.combinations(range(n), 2))
    if not pairs:
        return bytes([n])
    a = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges():
        a[u - 1, v - 1] = a[v - 1, u - 1] = 1
    perms = _permutations(n)
    value = np.zeros(len(perms), dtype=np.int64)
    for i, j in pairs:
        value = (value << 1) | a[perms[:, i], perms[:, j]]
    best = int(value.max())
    return bytes([n]) + best.to_bytes((len(pairs) + 7) // 8, "big")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degree(v) for v in range(1, g.n + 1)) != sorted(h.degree(v) for v in range(1, h.n + 1)):
        return False
    return canonical_form(g) == canonical_form(h)


# -- serialization -----------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the plain-text edge list (first line n, then ``u v`` per line) or the JSON form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        return Graph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise ValueError("empty graph file")
    if len(rows[0]) != 1:
        raise ValueError("first line must hold the vertex count")
    n = int(rows[0][0])
    edges = []
    for r in rows[1:]:
        if len(r) != 2:
            raise ValueError(f"bad edge line: {' '.join(r)!r}")
        edges.append((int(r[0]), int(r[1])))
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}
