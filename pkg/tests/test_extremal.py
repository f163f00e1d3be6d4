import pytest

from leafspan import (
    CYCLE_SPINE_DENSE,
    CYCLE_SPINE_SPARSE,
    TRIANGLE_TREE,
    FamilySpec,
    Graph,
    InvalidParamsError,
    bound_theorem1,
    bound_theorem2,
    chain_metric,
    decompose_blocks,
    exact_mlst,
    from_spec,
    gen_cycle_spine,
    gen_triangle_tree,
    girth,
    glue_extremal_chain,
    s_count,
)


def test_triangle_tree_shape():
    for n in range(1, 6):
        g = gen_triangle_tree(n)
        assert g.v == 4 * n + 2
        assert g.e == 3 * n + (n - 1) + (n + 2)
        pendants = [x for x in g.vertices if g.degree(x) == 1]
        assert len(pendants) == n + 2
        assert all(g.degree(x) == 3 for x in g.vertices if g.degree(x) != 1)
        assert s_count(g) == g.v
        assert girth(g) == 3
        # every non-pendant vertex separates the graph
        cuts = decompose_blocks(g).cutpoints
        assert cuts == frozenset(x for x in g.vertices if g.degree(x) > 1)


def test_triangle_tree_leaf_number():
    for n in range(1, 5):
        g = gen_triangle_tree(n)
        assert exact_mlst(g).u_value == n + 2
        assert bound_theorem1(s_count(g)).value == n + 2


def test_triangle_tree_rejects_bad_n():
    with pytest.raises(InvalidParamsError):
        gen_triangle_tree(0)
    with pytest.raises(InvalidParamsError):
        gen_triangle_tree(True)


def test_cycle_spine_dense_shape():
    for g_, k_ in [(3, 1), (3, 2), (4, 2), (5, 3)]:
        G = gen_cycle_spine(g_, k_)
        assert G.v == g_ * (k_ + 2)
        assert girth(G) == g_
        assert chain_metric(G) == k_


def test_cycle_spine_sparse_shape():
    for g_, k_ in [(5, 1), (5, 2), (6, 2), (7, 1), (9, 3)]:
        G = gen_cycle_spine(g_, k_)
        n = (g_ + 1) // 2 - 1
        assert G.v == 2 * n + 2 + (n + 1) * (k_ + 1)
        assert girth(G) == 2 * n + 2
        assert girth(G) >= g_
        assert chain_metric(G) == k_


def test_cycle_spine_tight_small():
    for g_, k_ in [(3, 1), (4, 2), (5, 1), (6, 2)]:
        G = gen_cycle_spine(g_, k_)
        u = exact_mlst(G).u_value
        assert bound_theorem2(G.v, g_, k_).value == u


def test_cycle_spine_rejects_bad_params():
    with pytest.raises(InvalidParamsError):
        gen_cycle_spine(2, 1)
    with pytest.raises(InvalidParamsError):
        gen_cycle_spine(5, 0)


def test_family_spec_validation():
    with pytest.raises(InvalidParamsError):
        FamilySpec(kind="Unknown", n=1)
    with pytest.raises(InvalidParamsError):
        FamilySpec(kind=TRIANGLE_TREE)
    with pytest.raises(InvalidParamsError):
        FamilySpec(kind=CYCLE_SPINE_DENSE, g=6, k=2)  # k < g-2 is sparse
    with pytest.raises(InvalidParamsError):
        FamilySpec(kind=CYCLE_SPINE_SPARSE, g=3, k=1)  # k >= g-2 is dense
    with pytest.raises(InvalidParamsError):
        FamilySpec(kind=CYCLE_SPINE_SPARSE, g=6, k=2, n=5)  # n is forced by g
    with pytest.raises(InvalidParamsError):
        FamilySpec(kind=TRIANGLE_TREE, n=2, chain_count=0)
    ok = FamilySpec(kind=CYCLE_SPINE_SPARSE, g=6, k=2, n=2)
    assert from_spec(ok).v == 15


def test_from_spec_single():
    assert from_spec(FamilySpec(kind=TRIANGLE_TREE, n=3)).v == 14
    assert from_spec(FamilySpec(kind=CYCLE_SPINE_DENSE, g=3, k=1)).v == 9


def test_chain_counts_and_tightness_triangle():
    base = FamilySpec(kind=TRIANGLE_TREE, n=1)
    for copies in (2, 3):
        g = glue_extremal_chain(base, copies)
        assert g.v == 6 + (copies - 1) * 4
        u = exact_mlst(g).u_value
        assert u == copies + 2
        assert bound_theorem1(s_count(g)).value == u


def test_chain_counts_and_tightness_dense():
    base = FamilySpec(kind=CYCLE_SPINE_DENSE, g=3, k=1)
    g = glue_extremal_chain(base, 2)
    assert g.v == 9 + 9 - 1 - 2
    assert chain_metric(g) == 1
    u = exact_mlst(g).u_value
    assert u == 4
    assert bound_theorem2(g.v, 3, 1).value == u


def test_chain_counts_and_tightness_sparse():
    base = FamilySpec(kind=CYCLE_SPINE_SPARSE, g=6, k=2)
    g = glue_extremal_chain(base, 2)
    assert g.v == 15 + 15 - 2 - 2
    assert chain_metric(g) == 2
    assert girth(g) == 6
    u = exact_mlst(g).u_value
    assert u == 6
    assert bound_theorem2(g.v, 6, 2).value == u


def test_chain_via_from_spec():
    spec = FamilySpec(kind=CYCLE_SPINE_DENSE, g=3, k=1, chain_count=3)
    g = from_spec(spec)
    assert g.v == 9 + 2 * (9 - 3)
    assert exact_mlst(g).u_value == bound_theorem2(g.v, 3, 1).value == 5


def test_chain_of_one_is_base():
    base = FamilySpec(kind=TRIANGLE_TREE, n=2)
    assert glue_extremal_chain(base, 1) == gen_triangle_tree(2)
