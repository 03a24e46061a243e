"""Slow, independent reference implementations used only by the tests."""

from collections import deque
from itertools import combinations

import networkx as nx
import numpy as np


def labeled_realizations(degrees):
    """Every labeled graph (as a frozenset of edges) on vertices 0..n-1 where
    vertex i has degree degrees[i]. Plain backtracking, no symmetry pruning."""
    n = len(degrees)
    residual = list(degrees)
    edges = []

    def rec(v):
        while v < n and residual[v] == 0:
            v += 1
        if v == n:
            yield frozenset(edges)
            return
        need = residual[v]
        later = [w for w in range(v + 1, n) if residual[w] > 0]
        for nbrs in combinations(later, need):
            residual[v] = 0
            for w in nbrs:
                residual[w] -= 1
                edges.append((v, w))
            yield from rec(v + 1)
            for w in nbrs:
                residual[w] += 1
                edges.pop()
            residual[v] = need

    yield from rec(0)


def _connected(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == n


def unicyclic_classes(degrees):
    """Isomorphism classes of connected unicyclic realizations having at
    least one boundary vertex, deduplicated with networkx. Returns a list of networkx graphs."""
    n = len(degrees)
    if 1 not in degrees:
        return []
    reps = {}
    for es in labeled_realizations(degrees):
        if len(es) != n or not _connected(n, es):
            continue
        h = nx.Graph(list(es))
        key = nx.weisfeiler_lehman_graph_hash(h)
        bucket = reps.setdefault(key, [])
        if not any(nx.is_isomorphic(h, other) for other in bucket):
            bucket.append(h)
    return [h for bucket in reps.values() for h in bucket]


def is_realizable(degrees):
    return bool(unicyclic_classes(degrees))


def to_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def dense_dirichlet_lambda(g):
    """First Dirichlet eigenvalue through numpy on the full Laplacian with
    boundary rows and columns deleted."""
    h = to_networkx(g)
    lap = nx.laplacian_matrix(h, nodelist=range(g.n)).toarray().astype(float)
    keep = [v for v in range(g.n) if h.degree(v) > 1]
    return float(np.linalg.eigvalsh(lap[np.ix_(keep, keep)])[0])
