"""Exact maximum-leaf spanning tree computation at desk scale.

The solver is a branch-and-bound over edges: each edge is either forced into
the growing forest or excluded, the forest must stay acyclic, and the graph
minus the excluded edges must stay connected.  The admissible upper bound is
the number of vertices not yet forced internal; a vertex with two forest
edges can never become a leaf.  Everything is deterministic: edges are
processed in (low, high) order and the include branch is explored first.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import CapExceededError, InvalidParamsError, NotConnectedError
from .graph import Graph, norm_edge
from .trees import SpanningTree, spanning_tree


@dataclass(frozen=True)
class ExactResult:
    """Outcome of an exact solve.

    When the node budget ran out, optimal is False and u_value is only a
    lower bound carried by a valid witness tree.
    """

    u_value: int
    witness: SpanningTree
    nodes_explored: int
    elapsed: float
    optimal: bool


class _Abort(Exception):
    pass


def greedy_leafy(g: Graph) -> SpanningTree:
    """Leafy spanning tree heuristic; valid but not optimal in general.

    Starts from a maximum-degree vertex and repeatedly expands the tree
    vertex with the most neighbors outside the tree, claiming all of them at
    once.  Ties break toward the lowest id.
    """
    if not g.is_connected:
        raise NotConnectedError("greedy_leafy requires a connected graph")
    if g.v == 1:
        return spanning_tree(g, ())
    start = max(g.sorted_vertices, key=lambda x: (g.degree(x), -x))
    in_tree = {start}
    edges = []
    while len(in_tree) < g.v:
        best_x, best_new = None, ()
        for x in sorted(in_tree):
            new = tuple(nb for nb in g.neighbors(x) if nb not in in_tree)
            if len(new) > len(best_new):
                best_x, best_new = x, new
        for nb in best_new:
            edges.append(norm_edge(best_x, nb))
            in_tree.add(nb)
    return spanning_tree(g, edges)


def exact_mlst(
    g: Graph, node_budget: Optional[int] = None, prune: bool = True
) -> ExactResult:
    """Maximum leaf count over all spanning trees, with a witness tree.

    node_budget caps the number of search nodes; on exhaustion the best tree
    found so far is returned flagged non-optimal.  prune=False disables the
    upper-bound cut and is only useful for cross-checking the bound.
    """
    if not g.is_connected:
        raise NotConnectedError("exact_mlst requires a connected graph")
    if g.v < 2:
        raise InvalidParamsError("exact_mlst requires at least two vertices")
    start_time = time.perf_counter()

    verts = g.sorted_vertices
    index = {x: i for i, x in enumerate(verts)}
    n = len(verts)
    edges = [(index[u], index[v]) for u, v in g.sorted_edges]
    m = len(edges)
    incident = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)

    seed = greedy_leafy(g)
    best_val = seed.leaf_count
    best_edges = seed.tree_edges
    nodes = 0
    aborted = False

    chosen: list = []
    deg = [0] * n
    parent = list(range(n))

    def find(p, x):
        while p[x] != x:
            x = p[x]
        return x

    excluded = [False] * m

    def still_connected(from_i):
        """Connectivity of chosen edges plus the undecided tail edges[from_i:]."""
        adj = [[] for _ in range(n)]
        for u, v in chosen:
            adj[u].append(v)
            adj[v].append(u)
        for j in range(from_i, m):
            if not excluded[j]:
                u, v = edges[j]
                adj[u].append(v)
                adj[v].append(u)
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            cur = stack.pop()
            for nb in adj[cur]:
                if not seen[nb]:
                    seen[nb] = True
                    count += 1
                    stack.append(nb)
        return count == n

    def rec(i, p):
        nonlocal nodes, best_val, best_edges, aborted
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            aborted = True
            raise _Abort
        if len(chosen) == n - 1:
            val = sum(1 for d in deg if d == 1)
            if val > best_val:
                best_val = val
                best_edges = frozenset(
                    norm_edge(verts[u], verts[v]) for u, v in chosen
                )
            return
        if i == m:
            return
        if len(chosen) + (m - i) < n - 1:
            return
        if prune:
            ub = sum(1 for d in deg if d <= 1)
            if ub <= best_val:
                return
        u, v = edges[i]
        ru, rv = find(p, u), find(p, v)
        if ru != rv:
            p2 = list(p)
            p2[ru] = rv
            chosen.append((u, v))
            deg[u] += 1
            deg[v] += 1
            rec(i + 1, p2)
            deg[u] -= 1
            deg[v] -= 1
            chosen.pop()
        excluded[i] = True
        if still_connected(i + 1):
            rec(i + 1, p)
        excluded[i] = False

    try:
        rec(0, parent)
    except _Abort:
        pass

    witness = spanning_tree(g, best_edges)
    return ExactResult(
        u_value=best_val,
        witness=witness,
        nodes_explored=nodes,
        elapsed=time.perf_counter() - start_time,
        optimal=not aborted,
    )


def enumerate_spanning_trees(
    g: Graph, cap: Optional[int] = None
) -> Iterator[SpanningTree]:
    """Yield every spanning tree exactly once, in deterministic order.

    Same include/exclude recursion as the solver but without bounds; each
    tree corresponds to a unique decision sequence over the sorted edge
    list.  Raises CapExceeded as soon as more than cap trees appear.
    """
    if not g.is_connected:
        raise NotConnectedError("enumeration requires a connected graph")
    if g.v == 1:
        yield spanning_tree(g, ())
        return

    verts = g.sorted_vertices
    index = {x: i for i, x in enumerate(verts)}
    n = len(verts)
    edges = [(index[u], index[v]) for u, v in g.sorted_edges]
    m = len(edges)
    chosen: list = []
    excluded = [False] * m
    produced = 0

    def still_connected(from_i):
        adj = [[] for _ in range(n)]
        for u, v in chosen:
            adj[u].append(v)
            adj[v].append(u)
        for j in range(from_i, m):
            if not excluded[j]:
                u, v = edges[j]
                adj[u].append(v)
                adj[v].append(u)
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            cur = stack.pop()
            for nb in adj[cur]:
                if not seen[nb]:
                    seen[nb] = True
                    count += 1
                    stack.append(nb)
        return count == n

    def find(p, x):
        while p[x] != x:
            x = p[x]
        return x

    def rec(i, p):
        nonlocal produced
        if len(chosen) == n - 1:
            produced += 1
            if cap is not None and produced > cap:
                raise CapExceededError(f"more than {cap} spanning trees")
            yield spanning_tree(
                g, frozenset(norm_edge(verts[u], verts[v]) for u, v in chosen)
            )
            return
        if i == m or len(chosen) + (m - i) < n - 1:
            return
        u, v = edges[i]
        ru, rv = find(p, u), find(p, v)
        if ru != rv:
            p2 = list(p)
            p2[ru] = rv
            chosen.append((u, v))
            yield from rec(i + 1, p2)
            chosen.pop()
        excluded[i] = True
        if still_connected(i + 1):
            yield from rec(i + 1, p)
        excluded[i] = False

    yield from rec(0, list(range(n)))
