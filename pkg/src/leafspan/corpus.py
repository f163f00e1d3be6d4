"""Seeded random instances and batch verification of the bounds.

Generation is rejection sampling on top of a random recursive tree: extra
edges are only ever added between vertices far enough apart to respect the
girth floor, then the finished graph is re-measured against every
constraint.  Verification runs a corpus of such instances and checks each
one against the requested bound, either with the exact solver or with the
constructive procedure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .bounds import BoundReport, bound_theorem1, bound_theorem2
from .constructive import construct_theorem1, construct_theorem2, replay_trace
from .errors import InfeasibleError, InvalidParamsError
from .exact import exact_mlst
from .graph import Graph, chain_metric, girth, s_count
from .graph_io import graph_hash

SEED_STRIDE = 7919
ATTEMPTS = 400


def _tree_skeleton(v, rng):
    return [(rng.randrange(i), i) for i in range(1, v)]


def _far_enough(g: Graph, x, y, floor):
    if g.has_edge(x, y):
        return False
    d = g.distance(x, y)
    return d is not None and d >= floor - 1


def random_constrained_graph(
    v: int,
    min_degree: int = 1,
    girth_at_least: int = 3,
    ell_at_most: Optional[int] = None,
    seed: int = 0,
) -> Graph:
    """Connected graph on v vertices meeting the requested floors.

    Chords are only added between vertices at distance >= girth floor - 1,
    which keeps every cycle long enough by construction.  Degree deficits
    are repaired by targeted chords when possible; the chain constraint is
    handled by rejection.  Raises Infeasible once the attempt budget runs
    out, which is the expected outcome for contradictory parameters.
    """
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise InvalidParamsError(f"v must be an integer >= 1, got {v!r}")
    if min_degree < 0 or min_degree > max(v - 1, 0):
        raise InvalidParamsError(f"min_degree {min_degree} out of range for v={v}")
    if girth_at_least < 3:
        raise InvalidParamsError("girth floor below 3 is meaningless")
    if ell_at_most is not None and ell_at_most < 0:
        raise InvalidParamsError("ell_at_most must be >= 0")
    if v == 1:
        return Graph.build([], isolated=[0])

    rng = random.Random(seed)
    for _ in range(ATTEMPTS):
        g = Graph.build(_tree_skeleton(v, rng))
        # sprinkle chords, then chase remaining degree deficits directly
        for _ in range(rng.randint(0, v)):
            x, y = rng.sample(range(v), 2)
            if _far_enough(g, x, y, girth_at_least):
                g = g.with_edge(x, y)
        ok = True
        for _ in range(v * max(min_degree, 1)):
            needy = [x for x in g.sorted_vertices if g.degree(x) < min_degree]
            if not needy:
                break
            x = rng.choice(needy)
            cands = [y for y in g.sorted_vertices if y != x and _far_enough(g, x, y, girth_at_least)]
            if not cands:
                ok = False
                break
            far_needy = [y for y in cands if g.degree(y) < min_degree]
            g = g.with_edge(x, rng.choice(far_needy or cands))
        if not ok or any(g.degree(x) < min_degree for x in g.vertices):
            continue
        gv = girth(g)
        if gv is not None and gv < girth_at_least:
            continue
        if ell_at_most is not None and chain_metric(g) > ell_at_most:
            continue
        assert g.is_connected
        return g
    raise InfeasibleError(
        f"no graph found for v={v} min_degree={min_degree} "
        f"girth>={girth_at_least} ell<={ell_at_most} seed={seed}"
    )


@dataclass(frozen=True)
class InstanceRecord:
    index: int
    hash: str
    v: int
    e: int
    girth: Optional[int]
    ell: int
    s: int
    report: BoundReport
    achieved: int
    passed: bool
    note: str = ""

    def line(self) -> str:
        gtxt = "acyclic" if self.girth is None else str(self.girth)
        fields = [
            f"i={self.index}",
            f"hash={self.hash}",
            f"v={self.v}",
            f"e={self.e}",
            f"girth={gtxt}",
            f"ell={self.ell}",
            f"s={self.s}",
            f"kind={self.report.kind}",
            f"bound={self.report.value.numerator}/{self.report.value.denominator}",
            f"achieved={self.achieved}",
            f"pass={int(self.passed)}",
        ]
        if self.note:
            fields.append(f"note={self.note}")
        return " ".join(fields)


@dataclass(frozen=True)
class CorpusReport:
    theorem: int
    mode: str
    seed: int
    records: tuple

    @property
    def failures(self):
        return [r for r in self.records if not r.passed]

    def lines(self):
        out = [r.line() for r in self.records]
        out.append(
            f"total={len(self.records)} passed={len(self.records) - len(self.failures)} "
            f"failed={len(self.failures)} theorem={self.theorem} mode={self.mode} seed={self.seed}"
        )
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def _achieve(g: Graph, theorem: int, k: Optional[int], mode: str) -> int:
    if mode == "exact":
        return exact_mlst(g).u_value
    if theorem == 1:
        t, tr = construct_theorem1(g)
        check = replay_trace(g, tr, theorem=1)
    else:
        t, tr = construct_theorem2(g, k)
        check = replay_trace(g, tr, theorem=2, k=k)
    assert check.tree_edges == t.tree_edges
    return t.leaf_count


def verify_corpus(
    theorem: int,
    count: int,
    max_v: int,
    seed: int = 0,
    mode: str = "exact",
) -> CorpusReport:
    """Generate count seeded instances and check each bound claim.

    Theorem 1 instances are scored against the s-count rate.  Theorem 2
    instances use k = max(chain metric, 1) and the measured girth, with
    trees scored at the triangle-girth rate since no cycle pins anything
    higher.  Instance i uses seed + 7919*i, so corpora are reproducible
    and extensible.
    """
    if theorem not in (1, 2):
        raise InvalidParamsError(f"theorem must be 1 or 2, got {theorem!r}")
    if mode not in ("exact", "construct"):
        raise InvalidParamsError(f"mode must be exact or construct, got {mode!r}")
    if count < 1 or max_v < 2:
        raise InvalidParamsError("count must be >= 1 and max_v >= 2")
    records = []
    for i in range(count):
        si = seed + SEED_STRIDE * i
        rng = random.Random(si)
        v = rng.randint(2, max_v)
        g = random_constrained_graph(v, min_degree=1, seed=si)
        gv = girth(g)
        ell = chain_metric(g)
        s = s_count(g)
        note = ""
        if theorem == 1:
            rep = bound_theorem1(s)
            k = None
        else:
            k = max(ell, 1)
            if gv is None:
                rep = bound_theorem2(g.v, 3, k)
                note = "tree"
            else:
                rep = bound_theorem2(g.v, gv, k)
        achieved = _achieve(g, theorem, k, mode)
        records.append(
            InstanceRecord(
                index=i,
                hash=graph_hash(g),
                v=g.v,
                e=g.e,
                girth=gv,
                ell=ell,
                s=s,
                report=rep,
                achieved=achieved,
                passed=achieved >= rep.value,
                note=note,
            )
        )
    return CorpusReport(theorem=theorem, mode=mode, seed=seed, records=tuple(records))
