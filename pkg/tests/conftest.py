"""Shared helpers: named small graphs and seeded random graphs."""

from __future__ import annotations

import random
from math import comb

from sepcodes import Graph, build_graph, graph_from_code


def k1() -> Graph:
    return build_graph(1, [])


def k2() -> Graph:
    return build_graph(2, [(0, 1)])


def k3() -> Graph:
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


def p3() -> Graph:
    return build_graph(3, [(0, 1), (1, 2)])


def p4() -> Graph:
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])


def two_k1() -> Graph:
    return build_graph(2, [])


def random_graph(rng: random.Random, n: int) -> Graph:
    return graph_from_code(n, rng.getrandbits(comb(n, 2)))


def relabeled(g: Graph, perm: list[int]) -> Graph:
    adj = [0] * g.order
    for u, v in g.edges():
        adj[perm[u]] |= 1 << perm[v]
        adj[perm[v]] |= 1 << perm[u]
    return Graph(g.order, tuple(adj))
