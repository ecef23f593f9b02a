"""Lexicographic, direct, and Cartesian graph products.

All three share one vertex numbering: the pair (i, j) with i a vertex of the
left factor and j a vertex of the right factor gets id i * |V(H)| + j. Block
i is the copy of H sitting over vertex i, so every labeler and the verifier
agree on which physical vertex carries which block/twin role.
"""

from __future__ import annotations

from .graphs import Graph

__all__ = ["composite_id", "lex_product", "direct_product", "cartesian_product"]


def composite_id(i: int, j: int, h_order: int) -> int:
    return i * h_order + j


def lex_product(g: Graph, h: Graph) -> Graph:
    """(i,j) ~ (i',j') when i ~ i' in g, or i = i' and j ~ j' in h."""
    hn = h.n
    edges = []
    for u, v in g.edges():
        for j in range(hn):
            for jp in range(hn):
                edges.append((u * hn + j, v * hn + jp))
    for i in range(g.n):
        for j, jp in h.edges():
            edges.append((i * hn + j, i * hn + jp))
    return Graph.from_edges(g.n * hn, edges)


def direct_product(g: Graph, h: Graph) -> Graph:
    """(i,j) ~ (i',j') when i ~ i' in g and j ~ j' in h."""
    hn = h.n
    edges = []
    for u, v in g.edges():
        for j, jp in h.edges():
            edges.append((u * hn + j, v * hn + jp))
            edges.append((u * hn + jp, v * hn + j))
    return Graph.from_edges(g.n * hn, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """(i,j) ~ (i',j') when i = i' and j ~ j', or j = j' and i ~ i'."""
    hn = h.n
    edges = []
    for i in range(g.n):
        for j, jp in h.edges():
            edges.append((i * hn + j, i * hn + jp))
    for u, v in g.edges():
        for j in range(hn):
            edges.append((u * hn + j, v * hn + j))
    return Graph.from_edges(g.n * hn, edges)
