"""Tests for graph family builders, codecs, the adjacency oracle, and exporters."""

import json

import numpy as np
import pytest

from ramseyforge.algebra import quadrance
from ramseyforge.errors import (
    BadParameter,
    BadSigma,
    DegenerateDistance,
    SizeLimitExceeded,
)
from ramseyforge.exactmetrics import diameter, girth, triangle_count
from ramseyforge.graphs import (
    FamilySpec,
    alon_connection_set,
    alon_split,
    bch_connection_set,
    build_family,
    euclidean_degree,
    export_graph,
    graph_from_edges,
)
from ramseyforge.spectral import cayley_spectrum_abelian


def build(kind, **kw):
    return build_family(FamilySpec(kind=kind, **kw))


# ---------------------------------------------------------------------------
# family sizes and regularity
# ---------------------------------------------------------------------------

def test_euclidean_sizes():
    g = build("euclidean", q=3, a=1)
    assert g.n == 9 and g.degree == 4
    g = build("euclidean", q=7, a=1)
    assert g.n == 49 and g.degree == 8
    g = build("euclidean", q=3, m=3, a=1)
    assert g.n == 27 and g.degree == 6


def test_half_plane_sizes():
    g = build("noneuclidean", q=5, sigma=2, a=4)
    assert g.n == 20 and g.degree == 6
    g = build("noneuclidean", q=17, sigma=3, a=6)
    assert g.n == 272 and g.degree == 18


def test_half_plane_regular_q_plus_one():
    for q, sigma in [(5, 2), (13, 2), (17, 3)]:
        for a in range(1, q):
            if a == (2 * sigma) % q or a == 0:
                pass
            if a == (4 * sigma) % q:
                continue
            g = build("noneuclidean", q=q, sigma=sigma, a=a)
            assert g.is_regular and g.degree == q + 1


def test_half_plane_degenerate_a():
    with pytest.raises(DegenerateDistance):
        build("noneuclidean", q=5, sigma=2, a=3)  # a = 4*sigma mod 5
    with pytest.raises(DegenerateDistance):
        FamilySpec(kind="noneuclidean", q=5, sigma=2, a=0)


def test_half_plane_sigma_must_be_nonsquare():
    with pytest.raises(BadSigma):
        FamilySpec(kind="noneuclidean", q=5, sigma=4, a=1)


def test_euclidean_rejects_bad_field():
    with pytest.raises(BadParameter):
        FamilySpec(kind="euclidean", q=4, a=1)
    with pytest.raises(BadParameter):
        FamilySpec(kind="euclidean", q=2, a=1)


def test_zero_distance_parameter_rejected():
    with pytest.raises(BadParameter):
        FamilySpec(kind="euclidean", q=7, a=7)  # a = 0 mod q would create loops


def test_alon_k_multiple_of_three_rejected():
    with pytest.raises(BadParameter):
        FamilySpec(kind="alon", k=3)
    with pytest.raises(BadParameter):
        FamilySpec(kind="alon", k=6)


# ---------------------------------------------------------------------------
# code graph connection sets
# ---------------------------------------------------------------------------

def test_bch_connection_set_k2():
    assert bch_connection_set(2) == [5, 6, 7]


def test_bch_connection_set_sizes():
    for k in [2, 3, 4, 5]:
        s = bch_connection_set(k)
        assert len(s) == (1 << k) - 1
        assert len(set(s)) == len(s)
        assert all(0 < v < (1 << (2 * k)) for v in s)


def test_alon_split_k2():
    w0, w1 = alon_split(2)
    assert w0 == [1] and sorted(w1) == [2, 3]


def test_alon_split_sizes():
    for k in [2, 4, 5, 7]:
        w0, w1 = alon_split(k)
        assert len(w0) == (1 << (k - 1)) - 1
        assert len(w1) == 1 << (k - 1)
        assert sorted(w0 + w1) == list(range(1, 1 << k))


def test_alon_connection_set_k2():
    assert alon_connection_set(2) == [35, 50]


def test_alon_graph_meta():
    g = build("alon", k=2)
    assert g.n == 64 and g.degree == 2
    assert g.meta["w0_size"] == 1
    assert g.meta["w1_size"] == 2
    assert g.meta["sum_set_size"] == 2
    assert g.meta["sum_set_claimed"] == 2
    assert g.meta["sum_set_matches_claim"] is True


def test_bch_graph_shape():
    for k in [2, 3]:
        g = build("bch", k=k)
        assert g.n == 1 << (2 * k)
        assert g.degree == (1 << k) - 1
        assert g.is_regular


def test_bch_k2_neighbors_of_zero():
    g = build("bch", k=2)
    assert list(g.neighbors(0)) == [5, 6, 7]


def test_alon_k2_neighbors_of_zero():
    g = build("alon", k=2)
    assert list(g.neighbors(0)) == [35, 50]


# ---------------------------------------------------------------------------
# codecs and the adjacency oracle
# ---------------------------------------------------------------------------

def test_euclidean_codec_roundtrip():
    g = build("euclidean", q=5, m=3, a=1)
    for u in range(g.n):
        assert g.encode(g.decode(u)) == u
    assert g.decode(0) == (0, 0, 0)
    assert g.decode(1) == (1, 0, 0)
    assert g.decode(5) == (0, 1, 0)


def test_half_plane_codec_roundtrip():
    g = build("noneuclidean", q=13, sigma=2, a=1)
    seen = set()
    for u in range(g.n):
        x, y = g.decode(u)
        assert 0 <= x < 13 and 1 <= y < 13
        seen.add((x, y))
        assert g.encode((x, y)) == u
    assert len(seen) == g.n


def test_adjacency_oracle_euclidean():
    g = build("euclidean", q=3, a=1)
    u = g.encode((0, 0))
    assert g.adjacency_oracle(u, g.encode((0, 1)))
    assert not g.adjacency_oracle(u, g.encode((1, 1)))
    assert not g.adjacency_oracle(u, u)
    with pytest.raises(IndexError):
        g.adjacency_oracle(0, g.n)
    with pytest.raises(IndexError):
        g.adjacency_oracle(-1, 0)


def test_adjacency_matches_quadrance():
    g = build("euclidean", q=7, a=2)
    for u in [0, 5, 17, 30, 48]:
        pu = g.decode(u)
        for v in range(g.n):
            want = quadrance(pu, g.decode(v), 7) == 2
            assert g.adjacency_oracle(u, v) == want


def test_graph_is_symmetric_csr():
    for spec in [
        FamilySpec(kind="euclidean", q=5, a=2),
        FamilySpec(kind="noneuclidean", q=5, sigma=2, a=1),
        FamilySpec(kind="bch", k=2),
        FamilySpec(kind="alon", k=2),
    ]:
        g = build_family(spec)
        for u in range(g.n):
            for v in g.neighbors(u):
                assert u != v
                assert u in g.neighbors(v)


def test_translation_invariance_sampled():
    """Cayley structure: u ~ v iff u+t ~ v+t for any translation t."""
    g = build("euclidean", q=7, a=3)
    rng = np.random.default_rng(3)
    for _ in range(100):
        u, v = (int(x) for x in rng.integers(0, g.n, 2))
        t = tuple(int(x) for x in rng.integers(0, 7, 2))
        pu, pv = g.decode(u), g.decode(v)
        su = g.encode(tuple((a + b) % 7 for a, b in zip(pu, t)))
        sv = g.encode(tuple((a + b) % 7 for a, b in zip(pv, t)))
        assert g.adjacency_oracle(u, v) == g.adjacency_oracle(su, sv)


# ---------------------------------------------------------------------------
# distance-parameter equivalence
# ---------------------------------------------------------------------------

def test_euclidean_families_isomorphic_across_a():
    """Scaling coordinates maps D_q(a) onto D_q(b): all invariants agree."""
    for q in [5, 7, 11, 13]:
        prints = []
        for a in range(1, q):
            g = build("euclidean", q=q, a=a)
            spec = cayley_spectrum_abelian(g)
            prints.append(
                (
                    g.degree,
                    girth(g),
                    diameter(g),
                    triangle_count(g),
                    tuple(np.round(spec.eigenvalues, 9)),
                )
            )
        # a ranges over squares and nonsquares; both classes collapse to one
        # isomorphism type because -1 times a square hits every residue class
        assert len({p[:4] for p in prints}) <= 2
        degs = {p[0] for p in prints}
        assert len(degs) <= 2


def test_euclidean_degree_formula_small():
    for q in [3, 5, 7, 11, 13]:
        for m in [2, 3, 4]:
            if q ** m > 30000:
                continue
            grid = np.indices((q,) * m).reshape(m, -1).T
            qd = (grid ** 2).sum(axis=1) % q
            counts = np.bincount(qd, minlength=q)
            for a in range(1, q):
                assert counts[a] == euclidean_degree(q, m, a), (q, m, a)


# ---------------------------------------------------------------------------
# exporters
# ---------------------------------------------------------------------------

def test_dimacs_header_lines():
    cases = [
        (FamilySpec(kind="euclidean", q=3, a=1), "p edge 9 18"),
        (FamilySpec(kind="noneuclidean", q=5, sigma=2, a=4), "p edge 20 60"),
        (FamilySpec(kind="bch", k=2), "p edge 16 24"),
    ]
    for spec, header in cases:
        data = export_graph(build_family(spec), "dimacs")
        lines = data.decode().splitlines()
        assert lines[0] == header
        m = int(header.split()[3])
        edge_lines = [l for l in lines if l.startswith("e ")]
        assert len(edge_lines) == m
        # 1-based endpoints, u < v
        for l in edge_lines:
            _, u, v = l.split()
            assert 1 <= int(u) < int(v) <= int(header.split()[2])


def test_edge_jsonl_export():
    g = build("euclidean", q=3, a=1)
    data = export_graph(g, "edge-jsonl")
    rows = [json.loads(l) for l in data.decode().splitlines()]
    assert len(rows) == 18
    for row in rows:
        assert set(row) == {"u", "v", "pu", "pv"}
        assert row["u"] < row["v"]
        assert g.adjacency_oracle(row["u"], row["v"])
        assert tuple(row["pu"]) == g.decode(row["u"])
        assert tuple(row["pv"]) == g.decode(row["v"])


def test_export_bad_format():
    g = build("euclidean", q=3, a=1)
    with pytest.raises(BadParameter):
        export_graph(g, "graphml")


# ---------------------------------------------------------------------------
# ad-hoc graphs and size limits
# ---------------------------------------------------------------------------

def test_graph_from_edges():
    g = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.n == 4
    assert g.degree == 2
    assert list(g.neighbors(0)) == [1, 3]
    assert g.is_regular


def test_graph_from_edges_irregular():
    g = graph_from_edges(3, [(0, 1), (1, 2)])
    assert g.degree is None
    assert not g.is_regular
    assert g.degree_of(1) == 2


def test_graph_from_edges_validation():
    with pytest.raises(BadParameter):
        graph_from_edges(3, [(0, 0)])
    with pytest.raises(BadParameter):
        graph_from_edges(3, [(0, 3)])


def test_size_limit_env(monkeypatch):
    monkeypatch.setenv("RAMSEY_FORGE_MAX_N", "100")
    with pytest.raises(SizeLimitExceeded):
        build_family(FamilySpec(kind="euclidean", q=11, a=1))
    # 9 vertices still fits
    build_family(FamilySpec(kind="euclidean", q=3, a=1))
