"""Even-connection with respect to a product of edges, and the graph it defines.

For an edge ideal I = I(g) and m = x_{e_1}...x_{e_s}, the polarization of
(I^{s+1} : m) is the edge ideal of ``even_connection_graph(g, edges)``.  The
whisker vertex attached to a self-connected u is numbered n + rank(u), where
u ranges over the self-connected vertices in ascending order; this matches
the position of the second copy of x_u after polarization.
"""
from __future__ import annotations

from collections import Counter
from typing import Sequence

from .graph import Graph
from .monomial import colon_ideal, edge_ideal, ideal_power, polarize

Edge = tuple[int, int]


def _normalize(g: Graph, edges: Sequence[Sequence[int]]) -> tuple[Edge, ...]:
    out = []
    for e in edges:
        u, v = sorted(e)
        if not (1 <= u <= g.n and 1 <= v <= g.n) or not g.has_edge(u, v):
            raise ValueError(f"{u}-{v} is not an edge of the graph")
        out.append((u, v))
    return tuple(sorted(out))


def is_even_connected(g: Graph, u: int, v: int, edges: Sequence[Sequence[int]]) -> bool:
    """Whether a walk u = p_0, ..., p_{2k+1} = v (k >= 1) exists in g whose pairs
    (p_{2l+1}, p_{2l+2}) are distinct uses of the multiset ``edges``."""
    multiset = _normalize(g, edges)
    for w in (u, v):
        if not 1 <= w <= g.n:
            raise ValueError(f"vertex {w} outside 1..{g.n}")
    kinds = sorted(Counter(multiset).items())
    keys = [e for e, _ in kinds]
    start = tuple(c for _, c in kinds)
    seen: set[tuple[int, tuple[int, ...]]] = set()
    stack = [(u, start)]
    while stack:
        x, rem = stack.pop()
        if rem != start and g.has_edge(x, v):
            return True
        for k, (a, b) in enumerate(keys):
            if not rem[k]:
                continue
            nxt = rem[:k] + (rem[k] - 1,) + rem[k + 1:]
            # enter the edge at either end from a neighbour of x, leave at the other
            for enter, leave in ((a, b), (b, a)):
                if g.has_edge(x, enter) and (leave, nxt) not in seen:
                    seen.add((leave, nxt))
                    stack.append((leave, nxt))
    return False


def even_connection_graph(g: Graph, edges: Sequence[Sequence[int]]) -> Graph:
    """g plus an edge for every even-connected pair and a whisker at every self-connected vertex."""
    multiset = _normalize(g, edges)
    new_edges = set(g.edges())
    loops = []
    for u in range(1, g.n + 1):
        if is_even_connected(g, u, u, multiset):
            loops.append(u)
        for v in range(u + 1, g.n + 1):
            if not g.has_edge(u, v) and is_even_connected(g, u, v, multiset):
                new_edges.add((u, v))
    n = g.n + len(loops)
    for rank, u in enumerate(loops, start=1):
        new_edges.add((u, g.n + rank))
    return Graph.from_edges(n, sorted(new_edges))


def colon_graph(g: Graph, edges: Sequence[Sequence[int]]) -> Graph | None:
    """Graph read off the polarized colon ideal (I^{s+1} : x_{e_1}...x_{e_s}); None if some
    generator is not a squarefree quadric."""
    multiset = _normalize(g, edges)
    ideal = edge_ideal(g)
    m = [0] * g.n
    for a, b in multiset:
        m[a - 1] += 1
        m[b - 1] += 1
    pol, _ = polarize(colon_ideal(ideal_power(ideal, len(multiset) + 1), tuple(m)))
    out = []
    for gen in pol.gens:
        support = [k + 1 for k, e in enumerate(gen) if e]
        if sum(gen) != 2 or len(support) != 2:
            return None
        out.append(tuple(support))
    return Graph.from_edges(pol.nvars, out)


def verify_even_connection_lemma(g: Graph, edges: Sequence[Sequence[int]]) -> bool:
    """Compare the combinatorial graph with the one obtained from the colon ideal."""
    if not edges:
        raise ValueError("need at least one edge in the product")
    expected = even_connection_graph(g, edges)
    actual = colon_graph(g, edges)
    return actual is not None and actual == expected
