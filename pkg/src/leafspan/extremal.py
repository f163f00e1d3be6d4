"""Generators for the families on which the lower bounds are exact.

Three families: trees of triangles (tight for the s-count bound), and
cycle-with-pendant-path graphs in two regimes (tight for the girth/chain
bound).  A gluing operator chains copies while preserving tightness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvalidParamsError
from .graph import Graph, chain_metric, contract_edge, girth, glue

TRIANGLE_TREE = "TriangleTree"
CYCLE_SPINE_SPARSE = "CycleSpineSparse"
CYCLE_SPINE_DENSE = "CycleSpineDense"


@dataclass(frozen=True)
class FamilySpec:
    """Which extremal family to build, and at which parameters."""

    kind: str
    n: Optional[int] = None
    g: Optional[int] = None
    k: Optional[int] = None
    chain_count: int = 1

    def __post_init__(self):
        if self.chain_count < 1:
            raise InvalidParamsError("chain_count must be >= 1")
        if self.kind == TRIANGLE_TREE:
            if self.n is None or self.n < 1:
                raise InvalidParamsError("triangle tree needs n >= 1")
        elif self.kind in (CYCLE_SPINE_SPARSE, CYCLE_SPINE_DENSE):
            if self.g is None or self.g < 3:
                raise InvalidParamsError("cycle spine needs g >= 3")
            if self.k is None or self.k < 1:
                raise InvalidParamsError("cycle spine needs k >= 1")
            sparse = self.k < self.g - 2
            if sparse and self.kind == CYCLE_SPINE_DENSE:
                raise InvalidParamsError("dense regime needs k >= g-2")
            if not sparse and self.kind == CYCLE_SPINE_SPARSE:
                raise InvalidParamsError("sparse regime needs k < g-2")
            want_n = (self.g + 1) // 2 - 1
            if self.kind == CYCLE_SPINE_SPARSE and self.n not in (None, want_n):
                raise InvalidParamsError(
                    f"sparse cycle spine at g={self.g} forces n={want_n}"
                )
        else:
            raise InvalidParamsError(f"unknown family kind {self.kind!r}")


def gen_triangle_tree(n: int) -> Graph:
    """Caterpillar of n triangles, each vertex carrying one outside edge.

    The host shape is a path of triangles; end triangles carry two pendant
    vertices, inner ones carry one, so there are n+2 pendants and v = 4n+2.
    Every non-pendant vertex is a cutpoint, which is what pins the maximum
    leaf count to exactly n+2.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParamsError(f"n must be an integer >= 1, got {n!r}")
    edges = []
    for i in range(n):
        a, b, c = 3 * i, 3 * i + 1, 3 * i + 2
        edges += [(a, b), (a, c), (b, c)]
    for i in range(n - 1):
        # right hook of triangle i meets the left hook of triangle i+1
        right = 3 * i + 1 if i > 0 else 0
        edges.append((right, 3 * (i + 1)))
    pend = 3 * n
    for i in range(n):
        spots = []
        if i == 0 and n == 1:
            spots = [0, 1, 2]
        elif i == 0:
            spots = [1, 2]
        elif i == n - 1:
            spots = [3 * i + 1, 3 * i + 2]
        else:
            spots = [3 * i + 2]
        for s in spots:
            edges.append((s, pend))
            pend += 1
    g = Graph.build(edges)
    assert g.v == 4 * n + 2
    assert sum(1 for x in g.vertices if g.degree(x) == 1) == n + 2
    return g


def _cycle_with_spines(cycle_len: int, marked, k: int) -> Graph:
    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    nxt = cycle_len
    for base in marked:
        prev = base
        for _ in range(k + 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.build(edges)


def gen_cycle_spine(g: int, k: int) -> Graph:
    """Cycle with pendant paths of k+1 vertices; regime chosen by k vs g-2.

    Dense (k >= g-2): a g-cycle with a pendant path on every cycle vertex,
    v = g(k+2).  Sparse (k < g-2): an even cycle of 2n+2 vertices with
    n = ceil(g/2)-1, pendant paths on the n+1 alternating positions,
    v = 2n+2 + (n+1)(k+1).  Both have chain metric exactly k and girth at
    least g.
    """
    if not isinstance(g, int) or isinstance(g, bool) or g < 3:
        raise InvalidParamsError(f"g must be an integer >= 3, got {g!r}")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InvalidParamsError(f"k must be an integer >= 1, got {k!r}")
    if k >= g - 2:
        out = _cycle_with_spines(g, range(g), k)
        assert out.v == g * (k + 2)
    else:
        n = (g + 1) // 2 - 1
        out = _cycle_with_spines(2 * n + 2, range(0, 2 * n + 2, 2), k)
        assert out.v == 2 * n + 2 + (n + 1) * (k + 1)
    assert chain_metric(out) == k
    assert girth(out) >= g
    return out


def _pendants(g: Graph):
    return sorted(x for x in g.vertices if g.degree(x) == 1)


def glue_extremal_chain(base: FamilySpec, copies: int) -> Graph:
    """Chain copies of a family instance, gluing pendant ends together.

    Each junction glues the lowest pendant of the running graph to the
    lowest pendant of a fresh copy, then contracts k+1 of the resulting
    junction bridges (one bridge for the triangle family) so the junction
    becomes a chain of at most k degree-2 vertices again.  Vertex counts
    drop by k+2 per junction relative to the disjoint union, and the bound
    stays exactly attained.
    """
    if copies < 1:
        raise InvalidParamsError("copies must be >= 1")
    piece = _gen_base(base)
    fold = (base.k + 1) if base.k is not None else 1
    out = piece
    for _ in range(copies - 1):
        off = max(out.vertices) + 1 - min(piece.vertices)
        nxt = piece.relabel({x: x + off for x in piece.vertices})
        x1 = _pendants(out)[0]
        x2 = _pendants(nxt)[0]
        glued = glue(out, x1, nxt, x2)
        cur = glued.graph
        joint = glued.merged
        # walk into the fresh copy, folding bridges until the junction is short
        for _ in range(fold):
            nb = min(nb for nb in cur.neighbors(joint) if nb >= off + min(piece.vertices))
            res = contract_edge(cur, joint, nb)
            cur = res.graph
            joint = res.merged
        out = cur
    if base.k is not None:
        assert chain_metric(out) == base.k
    return out


def _gen_base(spec: FamilySpec) -> Graph:
    if spec.kind == TRIANGLE_TREE:
        return gen_triangle_tree(spec.n)
    return gen_cycle_spine(spec.g, spec.k)


def from_spec(spec: FamilySpec) -> Graph:
    """Build the graph a FamilySpec describes, chained copies included."""
    if spec.chain_count == 1:
        return _gen_base(spec)
    return glue_extremal_chain(spec, spec.chain_count)
