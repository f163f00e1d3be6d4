"""Spanning trees as explicit certificates: validation, the leaf-preserving
glue of two trees, and the one-leaf-gaining extension across a cut vertex."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InvalidParamsError,
    NotALeafError,
    PreconditionViolatedError,
)
from .graph import ContractResult, Graph, GlueResult, norm_edge


@dataclass(frozen=True)
class SpanningTree:
    """A spanning tree of a host graph, with its leaf count precomputed.

    Construction does not validate; build candidates freely and let
    validate() report what is wrong, so tests can exercise bad inputs.
    """

    host: Graph
    tree_edges: frozenset
    leaf_count: int


def tree_degrees(t: SpanningTree) -> dict:
    deg = {x: 0 for x in t.host.vertices}
    for u, v in t.tree_edges:
        if u in deg:
            deg[u] += 1
        if v in deg:
            deg[v] += 1
    return deg


def leaves(t: SpanningTree) -> frozenset:
    return frozenset(x for x, d in tree_degrees(t).items() if d == 1)


def spanning_tree(host: Graph, edges) -> SpanningTree:
    """Package an edge set as a SpanningTree with its leaf count."""
    es = frozenset(norm_edge(u, v) for u, v in edges)
    deg: dict = {}
    for u, v in es:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if host.v == 1:
        lc = 0
    else:
        lc = sum(1 for x in host.vertices if deg.get(x, 0) == 1)
    return SpanningTree(host=host, tree_edges=es, leaf_count=lc)


def validate(t: SpanningTree) -> str | None:
    """Return None for a valid spanning tree, else the first violated clause.

    Checked in order: every tree edge exists in the host, the edge count is
    v - 1, the edges are acyclic and span every host vertex, and the stored
    leaf count matches the actual one.
    """
    host = t.host
    for e in sorted(t.tree_edges):
        if e not in host.edges:
            return f"edge {e} not in host"
    if host.v == 1:
        if t.tree_edges:
            return "edge count"
        return None if t.leaf_count == 0 else "leaf count"
    if len(t.tree_edges) != host.v - 1:
        return "edge count"
    sub = Graph(host.vertices, t.tree_edges)
    if not sub.is_connected:
        return "not spanning"
    # v - 1 edges and connected implies acyclic, but report cycles first
    # when the edge count already gave them away above.
    actual = sum(1 for x in host.vertices if sub.degree(x) == 1)
    if actual != t.leaf_count:
        return "leaf count"
    return None


def check_valid(t: SpanningTree, context: str = "tree") -> None:
    problem = validate(t)
    if problem is not None:
        raise InvalidParamsError(f"{context}: invalid spanning tree ({problem})")


def relabel_tree(t: SpanningTree, mapping: dict, new_host: Graph) -> SpanningTree:
    """Translate a tree through an id mapping onto a new host graph."""
    es = frozenset(norm_edge(mapping[u], mapping[v]) for u, v in t.tree_edges)
    return spanning_tree(new_host, es)


def glue_trees(t1: SpanningTree, t2: SpanningTree, glued: GlueResult) -> SpanningTree:
    """Spanning tree of a glued graph from spanning trees of the two parts.

    Both glue points must be leaves of their trees; the merged vertex then
    becomes internal and the leaf count is exactly leaf1 + leaf2 - 2.
    """
    inv1 = {v: k for k, v in glued.map1.items()}
    inv2 = {v: k for k, v in glued.map2.items()}
    x1 = inv1[glued.merged]
    x2 = inv2[glued.merged]
    if x1 not in leaves(t1):
        raise NotALeafError(f"glue point {x1} is not a leaf of the first tree")
    if x2 not in leaves(t2):
        raise NotALeafError(f"glue point {x2} is not a leaf of the second tree")
    es = set()
    for u, v in t1.tree_edges:
        es.add(norm_edge(glued.map1[u], glued.map1[v]))
    for u, v in t2.tree_edges:
        es.add(norm_edge(glued.map2[u], glued.map2[v]))
    out = spanning_tree(glued.graph, es)
    if out.leaf_count != t1.leaf_count + t2.leaf_count - 2:
        raise AssertionError("glued leaf count drifted; gluing bug")
    return out


def contract_tree_edge(t: SpanningTree, res: ContractResult) -> SpanningTree:
    """Carry a spanning tree through the contraction of one of its own edges."""
    lo = res.merged
    hi = next(x for x, y in res.vertex_map.items() if y == lo and x != lo)
    e = norm_edge(lo, hi)
    if e not in t.tree_edges:
        raise InvalidParamsError(f"contracted edge {e} is not a tree edge")
    es = set()
    for a, b in t.tree_edges - {e}:
        es.add(norm_edge(res.vertex_map[a], res.vertex_map[b]))
    return spanning_tree(res.graph, es)


def lift_tree_through_contraction(
    t: SpanningTree, res: ContractResult, original: Graph
) -> SpanningTree:
    """Undo a contraction on a tree of the contracted graph.

    Each tree edge at the merged vertex is pulled back to whichever original
    endpoint carries it (lower endpoint preferred when both do), and the
    contracted edge itself is re-added, which keeps the edge count at v - 1.
    """
    lo = res.merged
    hi = next(x for x, y in res.vertex_map.items() if y == lo and x != lo)
    es = set()
    for a, b in t.tree_edges:
        if lo not in (a, b):
            es.add(norm_edge(a, b))
            continue
        other = b if a == lo else a
        if original.has_edge(lo, other):
            es.add(norm_edge(lo, other))
        elif original.has_edge(hi, other):
            es.add(norm_edge(hi, other))
        else:
            raise InvalidParamsError(f"tree edge ({lo}, {other}) has no preimage")
    es.add(norm_edge(lo, hi))
    return spanning_tree(original, es)


def extend_tree_lemma3(
    t_prime: SpanningTree, a: int, b: int, g: Graph
) -> SpanningTree:
    """Grow a spanning tree of the component of g - a containing b to all of g.

    The edge ab joins a to the given tree and every other component of g - a
    is hung below a with a breadth-first subtree.  Because b is a cutpoint of
    its component it is internal in t_prime, so the result has at least one
    more leaf than t_prime: either a itself ends up pendant, or every extra
    component contributes a leaf of its own.
    """
    from .blocks import decompose_blocks

    if a not in g.vertices or b not in g.vertices:
        raise PreconditionViolatedError("vertices: a and b must lie in g")
    if not g.has_edge(a, b):
        raise PreconditionViolatedError("adjacent: a and b must be adjacent in g")
    rest = g.without_vertex(a)
    comp_b = next((c for c in rest.components if b in c), None)
    if comp_b is None or t_prime.host != g.induced(comp_b):
        raise PreconditionViolatedError(
            "component: t_prime's host must be the component of g - a containing b"
        )
    if b not in decompose_blocks(t_prime.host).cutpoints:
        raise PreconditionViolatedError(
            "cutpoint: b must be a cutpoint of its component"
        )
    check_valid(t_prime, "extend_tree_lemma3")
    es = set(t_prime.tree_edges)
    es.add(norm_edge(a, b))
    for comp in rest.components:
        if comp == comp_b:
            continue
        attach = min(x for x in comp if g.has_edge(a, x))
        es.add(norm_edge(a, attach))
        es |= g.induced(comp).bfs_tree(attach)
    out = spanning_tree(g, es)
    if out.leaf_count < t_prime.leaf_count + 1:
        raise AssertionError("extension failed to gain a leaf; construction bug")
    return out
