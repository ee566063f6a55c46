"""Tests for certificates: theorem verifiers, JSON serialization, and sweeps."""

import json
import math
import os
from fractions import Fraction

import numpy as np
import pytest

from ramseyforge.algebra import quadratic_character
from ramseyforge.certify import (
    CSV_COLUMNS,
    SweepConfig,
    _jsonable,
    certificate_to_json,
    primes_in,
    ramsey_certificate,
    run_sweep,
    verify_circle_lemma,
    verify_code_graphs,
    verify_degree_formula,
    verify_girth_diameter,
    verify_main_theorem,
    verify_mt1,
)
from ramseyforge.errors import (
    BadParameter,
    BadResidue,
    NotTriangleFree,
    TooLarge,
)
from ramseyforge.graphs import FamilySpec, build_family


def statuses(cert):
    return [(c.claim_id, c.status) for c in cert.claims]


# ---------------------------------------------------------------------------
# prime enumeration
# ---------------------------------------------------------------------------

def test_primes_in():
    assert primes_in(3, 31) == [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    assert primes_in(7, 31, residue={"mod": 12, "value": 7}) == [7, 19, 31]
    assert primes_in(17, 29, residue={"mod": 12, "value": 5}) == [17, 29]
    assert primes_in(24, 28) == []


# ---------------------------------------------------------------------------
# circle-intersection lemma
# ---------------------------------------------------------------------------

def test_circle_lemma_q7():
    cert = verify_circle_lemma(7)
    assert cert.overall == "pass"
    assert statuses(cert) == [
        ("intersection_predictor", "pass"),
        ("isotropic_intersections", "recorded"),
    ]
    ev = cert.claim("intersection_predictor").evidence
    # 48 non-isotropic targets, 36 radius pairs each
    assert ev["triples_checked"]["value"] == 48 * 36
    assert ev["mismatches"]["value"] == 0


def test_circle_lemma_q13_isotropic():
    cert = verify_circle_lemma(13)
    assert cert.overall == "pass"
    assert cert.claim("isotropic_intersections").status == "pass"


def test_circle_lemma_gates():
    with pytest.raises(BadParameter):
        verify_circle_lemma(9)
    with pytest.raises(TooLarge):
        verify_circle_lemma(37)


# ---------------------------------------------------------------------------
# girth / diameter certificates
# ---------------------------------------------------------------------------

def test_girth_diameter_euclidean():
    for q, want_girth in [(7, 4), (19, 4), (13, 3)]:
        cert = verify_girth_diameter(q)
        assert cert.overall == "pass", q
        assert cert.claim("euclidean_girth").status == "pass"
        assert cert.claim("euclidean_girth").evidence["girth"]["value"] == want_girth
        assert cert.claim("euclidean_diameter").status == "pass"


def test_girth_diameter_q3_degenerate():
    """The diameter rule does not extend to the smallest field: measured 2."""
    cert = verify_girth_diameter(3)
    assert cert.overall == "pass"
    assert cert.claim("euclidean_diameter").status == "recorded"
    assert cert.claim("euclidean_diameter").evidence["diameter"]["value"] == 2


def test_girth_diameter_one_mod_four_range():
    for q in [5, 13, 17]:
        cert = verify_girth_diameter(q)
        diam = cert.claim("euclidean_diameter").evidence["diameter"]["value"]
        assert diam in (3, 4)
        assert cert.claim("euclidean_diameter").status == "pass"


def test_girth_diameter_half_plane_layout():
    for q in [5, 13, 17]:
        cert = verify_girth_diameter(q, family="noneuclidean")
        assert cert.overall == "pass", q
        assert [c.claim_id for c in cert.claims] == [
            "halfplane_girth_range",
            "halfplane_girth_sufficient",
            "halfplane_girth_unclassified",
            "halfplane_diameter",
            "sigma_generator",
        ]
        assert cert.claim("halfplane_girth_unclassified").status == "recorded"
        assert cert.claim("sigma_generator").status == "recorded"


def test_half_plane_diameter_squareness_rule():
    """sigma - a square (or zero, or a = 2*sigma) gives 3; non-square gives 4."""
    cert = verify_girth_diameter(13, family="noneuclidean")
    cases = cert.claim("halfplane_diameter").evidence["cases"]["value"]
    got = {a: d for a, d, _ in cases}
    sigma = 2
    for a, diam in got.items():
        if a == (2 * sigma) % 13:
            assert diam == 3
        elif quadratic_character(sigma - a, 13) >= 0:
            assert diam == 3
        else:
            assert diam == 4
    assert {a for a, d in got.items() if d == 4} == {7, 9, 10}


def test_half_plane_diameter_small_exception():
    # q = 5 with a = 2*sigma collapses to diameter 2
    cert = verify_girth_diameter(5, family="noneuclidean")
    cases = cert.claim("halfplane_diameter").evidence["cases"]["value"]
    got = {a: d for a, d, _ in cases}
    assert got[4] == 2  # a = 2*sigma = 4
    assert cert.claim("halfplane_diameter").status == "pass"


# ---------------------------------------------------------------------------
# degree formula
# ---------------------------------------------------------------------------

def test_degree_formula_certificates():
    cert = verify_degree_formula(3, 3)
    assert cert.overall == "pass"
    cases = cert.claim("sphere_size_formula").evidence["cases"]["value"]
    assert cases == [[1, 6, 6], [2, 12, 12]]
    cert = verify_degree_formula(7, 2)
    cases = cert.claim("sphere_size_formula").evidence["cases"]["value"]
    assert cases[0] == [1, 8, 8]
    assert all(formula == counted for _, formula, counted in cases)


# ---------------------------------------------------------------------------
# main theorem (q = 12k + 7)
# ---------------------------------------------------------------------------

def test_main_theorem_q7_layout():
    cert = verify_main_theorem(7)
    assert statuses(cert) == [
        ("triangle_free", "pass"),
        ("diameter_three", "pass"),
        ("toughness_spectral", "pass"),
        ("bisection_width", "recorded"),
        ("bipartite_subgraph", "recorded"),
        ("edge_corollary", "fail"),
        ("ramanujan", "pass"),
        ("independence_ratio", "pass"),
        ("independence_exact", "pass"),
    ]
    assert cert.overall == "fail"


def test_main_theorem_edge_corollary_is_the_honest_failure():
    """The edge-count cap e/2 + e^(5/6)/2 sits below the spectral bip bound.

    With e = 196 the cap is about 138.66 while the bound from the measured
    spectrum is about 153.05, so this claim fails on real numbers.  See the
    decision ledger for the analysis; the certificate reports it honestly.
    """
    cert = verify_main_theorem(7)
    ev = cert.claim("edge_corollary").evidence
    assert ev["edge_count"]["value"] == 196
    assert ev["corollary_cap"]["value"] == pytest.approx(138.66150013494592, abs=1e-9)
    assert ev["spectral_bip_upper"]["value"] == pytest.approx(
        153.05100029107794, abs=1e-9
    )
    assert ev["corollary_cap"]["value"] < ev["spectral_bip_upper"]["value"]


def test_main_theorem_q7_ramsey_record():
    cert = verify_main_theorem(7)
    assert cert.ramsey == {
        "s": 3,
        "t": 15,
        "n": 49,
        "alpha_bound": 14,
        "method": "exact",
        "witness": [0, 2, 10, 12, 15, 20, 23, 25, 28, 33, 36, 38, 46, 48],
    }


def test_main_theorem_q19_uses_ratio_route():
    cert = verify_main_theorem(19)
    ids = [c.claim_id for c in cert.claims]
    assert "independence_exact" not in ids  # 361 vertices is past the exact cap
    assert cert.claim("independence_ratio").status == "pass"
    assert cert.ramsey["method"] == "spectral-ratio"
    assert cert.ramsey["t"] == 100
    assert cert.ramsey["alpha_bound"] == pytest.approx(99.49797307973638, abs=1e-9)


def test_main_theorem_residue_gate():
    for q in [11, 13, 5, 49]:
        with pytest.raises(BadResidue):
            verify_main_theorem(q)


# ---------------------------------------------------------------------------
# half-plane theorem (q = 12k + 5)
# ---------------------------------------------------------------------------

def test_mt1_q17_layout():
    cert = verify_mt1(17)
    assert cert.overall == "pass"
    assert statuses(cert) == [
        ("sigma_nonsquare", "pass"),
        ("sigma_generator", "recorded"),
        ("girth_four", "pass"),
        ("triangle_free", "pass"),
        ("diameter_three", "pass"),
        ("toughness_spectral", "pass"),
        ("bisection_width", "recorded"),
        ("bipartite_subgraph", "recorded"),
        ("ramanujan", "pass"),
        ("independence_recorded", "recorded"),
    ]
    assert cert.ramsey == {
        "s": 3,
        "t": 82,
        "n": 272,
        "alpha_bound": pytest.approx(81.17380001498566, abs=1e-9),
        "method": "spectral-ratio",
    }


def test_mt1_residue_gate():
    for q in [13, 7, 5, 12]:
        with pytest.raises(BadResidue):
            verify_mt1(q)


# ---------------------------------------------------------------------------
# code graphs
# ---------------------------------------------------------------------------

def test_code_graphs_k2():
    cert = verify_code_graphs(2)
    assert cert.overall == "pass"
    assert statuses(cert) == [
        ("bch_regular", "pass"),
        ("bch_triangle_free", "pass"),
        ("bch_independence", "pass"),
        ("alon_partition", "pass"),
        ("alon_degree", "pass"),
        ("alon_triangle_free", "pass"),
        ("alon_independence", "recorded"),
    ]


def test_code_graphs_k3_skips_alon():
    cert = verify_code_graphs(3)
    assert cert.overall == "pass"
    assert statuses(cert) == [
        ("bch_regular", "pass"),
        ("bch_triangle_free", "pass"),
        ("bch_independence", "pass"),
        ("alon_skipped", "recorded"),
    ]


def test_code_graphs_k4_bch_cap_via_ratio():
    cert = verify_code_graphs(4)
    assert cert.overall == "pass"
    claim = cert.claim("bch_independence")
    assert claim.status == "pass"
    # 2 * 256^(3/4) = 128; the ratio bound lands at 96 which proves the cap
    assert claim.evidence["cap_form"]["value"] == pytest.approx(128.0)
    assert claim.evidence["ratio_bound"]["value"] == pytest.approx(96.0)
    assert claim.evidence["method"]["value"] == "spectral-ratio"


def test_code_graphs_bad_k():
    with pytest.raises(BadParameter):
        verify_code_graphs(1)
    with pytest.raises(BadParameter):
        verify_code_graphs(9)


# ---------------------------------------------------------------------------
# Ramsey certificates
# ---------------------------------------------------------------------------

def test_ramsey_certificate_exact_route():
    cert = ramsey_certificate(build_family(FamilySpec(kind="euclidean", q=7, a=1)))
    assert cert.overall == "pass"
    assert cert.ramsey["t"] == 15 and cert.ramsey["method"] == "exact"
    # the witness re-verifies independently
    g = build_family(FamilySpec(kind="euclidean", q=7, a=1))
    w = cert.ramsey["witness"]
    for i, u in enumerate(w):
        for v in w[i + 1:]:
            assert not g.adjacency_oracle(u, v)


def test_ramsey_certificate_ratio_route():
    g = build_family(FamilySpec(kind="noneuclidean", q=17, sigma=3, a=6))
    cert = ramsey_certificate(g)
    assert cert.overall == "pass"
    assert cert.ramsey["t"] == 82
    assert cert.ramsey["method"] == "spectral-ratio"


def test_ramsey_certificate_rejects_triangles():
    g = build_family(FamilySpec(kind="euclidean", q=13, a=1))
    with pytest.raises(NotTriangleFree):
        ramsey_certificate(g)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def test_jsonable_scalars():
    assert _jsonable(math.inf) == "inf"
    assert _jsonable(-math.inf) == "-inf"
    assert _jsonable(Fraction(3, 2)) == "3/2"
    assert _jsonable(np.int64(7)) == 7
    assert _jsonable(np.float64(2.5)) == 2.5
    assert _jsonable({"x": [np.int32(1), Fraction(2)]}) == {"x": [1, "2"]}


def test_certificate_json_shape():
    cert = verify_main_theorem(7)
    doc = json.loads(certificate_to_json(cert))
    assert doc["schema_version"] == 1
    assert doc["kind"] == "main-theorem"
    assert doc["overall"] == "fail"
    assert doc["family"] == {"kind": "euclidean", "q": 7, "m": 2, "a": 1}
    for claim in doc["claims"]:
        assert set(claim) == {"claim_id", "statement", "status", "evidence"}
        assert claim["status"] in ("pass", "fail", "recorded")
        for entry in claim["evidence"].values():
            assert set(entry) == {"value", "provenance"}
            assert entry["provenance"] in (
                "computed-exact",
                "computed-float",
                "paper-bound",
            )


def test_certificate_json_deterministic():
    a = certificate_to_json(verify_main_theorem(7))
    b = certificate_to_json(verify_main_theorem(7))
    assert a == b


def test_certificate_self_consistent():
    """Re-running a verifier reproduces every status from the stored claims."""
    first = verify_mt1(17)
    second = verify_mt1(17)
    assert statuses(first) == statuses(second)
    assert certificate_to_json(first) == certificate_to_json(second)


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

def test_sweep_euclidean_residue_filter(tmp_path):
    cfg = SweepConfig(
        q_min=7, q_max=31, families=("euclidean",),
        residue={"mod": 12, "value": 7}, out_dir=str(tmp_path / "out"),
    )
    res = run_sweep(cfg)
    assert res["rows"] == 3
    names = [os.path.basename(p) for p in res["json_files"]]
    assert names == [
        "euclidean_q7_a1.json",
        "euclidean_q19_a1.json",
        "euclidean_q31_a1.json",
    ]
    with open(res["csv"], newline="") as fh:
        lines = fh.read().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 4
    assert [l.split(",")[1] for l in lines[1:]] == ["7", "19", "31"]


def test_sweep_half_plane_residue_filter(tmp_path):
    cfg = SweepConfig(
        q_min=17, q_max=29, families=("noneuclidean",),
        residue={"mod": 12, "value": 5}, out_dir=str(tmp_path / "out"),
    )
    res = run_sweep(cfg)
    names = [os.path.basename(p) for p in res["json_files"]]
    assert names == [
        "noneuclidean_q17_s3_a6.json",
        "noneuclidean_q29_s3_a6.json",
    ]
    assert res["statuses"] == ["pass", "pass"]


def test_sweep_bch_rows(tmp_path):
    cfg = SweepConfig(
        families=("bch",), ks=(2, 3, 4), out_dir=str(tmp_path / "out"),
    )
    res = run_sweep(cfg)
    assert res["rows"] == 3
    with open(res["csv"], newline="") as fh:
        rows = fh.read().splitlines()[1:]
    tri_col = CSV_COLUMNS.index("triangles")
    assert [r.split(",")[tri_col] for r in rows] == ["0", "0", "0"]


def test_sweep_thread_count_invariance(tmp_path):
    cfg1 = SweepConfig(
        q_min=3, q_max=19, families=("euclidean", "bch"), ks=(2, 3),
        out_dir=str(tmp_path / "t1"), threads=1,
    )
    cfg4 = SweepConfig(
        q_min=3, q_max=19, families=("euclidean", "bch"), ks=(2, 3),
        out_dir=str(tmp_path / "t4"), threads=4,
    )
    res1, res4 = run_sweep(cfg1), run_sweep(cfg4)
    assert [os.path.basename(p) for p in res1["json_files"]] == [
        os.path.basename(p) for p in res4["json_files"]
    ]
    for p1, p4 in zip(res1["json_files"], res4["json_files"]):
        with open(p1, "rb") as fh:
            b1 = fh.read()
        with open(p4, "rb") as fh:
            b4 = fh.read()
        assert b1 == b4, os.path.basename(p1)
    with open(res1["csv"], "rb") as fh:
        c1 = fh.read()
    with open(res4["csv"], "rb") as fh:
        c4 = fh.read()
    assert c1 == c4


def test_sweep_records_errors_per_row(tmp_path, monkeypatch):
    monkeypatch.setenv("RAMSEY_FORGE_MAX_N", "100")
    cfg = SweepConfig(
        q_min=3, q_max=13, families=("euclidean",), out_dir=str(tmp_path / "out"),
    )
    res = run_sweep(cfg)
    assert res["statuses"] == [
        "pass",
        "pass",
        "fail",  # q = 7 hits the honest edge-corollary failure
        "error:SizeLimitExceeded",
        "error:SizeLimitExceeded",
    ]
    # the error rows still produce readable certificates
    doc = json.loads(open(res["json_files"][-1]).read())
    assert doc["overall"] == "fail"
    assert doc["kind"] == "sweep-error"


def test_sweep_csv_is_rfc4180(tmp_path):
    cfg = SweepConfig(
        q_min=3, q_max=5, families=("euclidean",), out_dir=str(tmp_path / "out"),
    )
    res = run_sweep(cfg)
    with open(res["csv"], "rb") as fh:
        data = fh.read()
    assert b"\r\n" in data
    body = data.decode()
    assert body.count("\r\n") == len(body.strip().split("\r\n"))


def test_sweep_config_validation():
    with pytest.raises(BadParameter):
        SweepConfig.from_dict({"families": ["klein-bottle"]})
    with pytest.raises(BadParameter):
        SweepConfig.from_dict({"nonsense_key": 1})
    with pytest.raises(BadParameter):
        SweepConfig.from_dict({"residue": [12]})
    cfg = SweepConfig.from_dict({"q_min": 5, "q_max": 11, "threads": 2})
    assert cfg.q_min == 5 and cfg.threads == 2
