"""Theorem-replication certificates, Ramsey lower-bound records, sweeps.

A Certificate is a list of claims, each pass / fail / recorded, with every
number tagged by provenance: computed-exact (integer or rational oracle),
computed-float (floating-point spectral value), or paper-bound (a closed-form
cap evaluated at these parameters).  Claims whose caps carry unquantified
asymptotic factors are always `recorded`, never asserted.  A certificate
fails overall iff any claim fails.

Ramsey records state R(3, t) > n with t = floor(alpha_bound) + 1: the graph
has no triangle (computed-exact) and no independent set of size t (exact
search when feasible, else a spectral ratio bound).
"""
import csv
import io
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from . import limits
from .algebra import (
    find_nonsquare,
    is_odd_prime,
    predicted_intersections,
    predicted_intersections_null,
    quadratic_character,
)
from .errors import (
    BadParameter,
    BadResidue,
    NotTriangleFree,
    TooLarge,
    UnsupportedFamily,
)
from .exactmetrics import (
    connected_components,
    diameter,
    eccentricity_uniformity_check,
    exact_independence,
    exact_toughness,
    girth,
    metrics_report,
    triangle_count,
)
from .graphs import (
    FamilySpec,
    Graph,
    alon_split,
    build_euclidean,
    build_family,
    build_non_euclidean,
    euclidean_degree,
)
from .spectral import (
    alon_toughness_bound,
    bisection_and_bip_bounds,
    cayley_spectrum_abelian,
    chromatic_lower_bound,
    dense_spectrum,
    ramanujan_check,
    ratio_independence_bound,
)

SCHEMA_VERSION = 1
_EPS = 1e-9


@dataclass
class Claim:
    claim_id: str
    statement: str
    status: str  # pass | fail | recorded
    evidence: dict = field(default_factory=dict)


@dataclass
class Certificate:
    kind: str
    family: Optional[dict]
    params: dict
    claims: list
    ramsey: Optional[dict] = None

    @property
    def overall(self) -> str:
        return "fail" if any(c.status == "fail" for c in self.claims) else "pass"

    def claim(self, claim_id: str) -> Claim:
        for c in self.claims:
            if c.claim_id == claim_id:
                return c
        raise KeyError(claim_id)

    def to_dict(self) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "kind": self.kind,
            "family": self.family,
            "params": self.params,
            "claims": [
                {
                    "claim_id": c.claim_id,
                    "statement": c.statement,
                    "status": c.status,
                    "evidence": c.evidence,
                }
                for c in self.claims
            ],
            "overall": self.overall,
        }
        if self.ramsey is not None:
            out["ramsey"] = self.ramsey
        return out


def _ev(value, provenance: str) -> dict:
    return {"value": value, "provenance": provenance}


def _jsonable(x):
    """Make a value JSON-safe: infinities to strings, exact rationals to
    strings, numpy scalars/arrays to Python values."""
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, np.generic):
        x = x.item()
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    return x


def certificate_to_json(cert: Certificate) -> str:
    return json.dumps(_jsonable(cert.to_dict()), indent=2)


def primes_in(lo: int, hi: int, residue: Optional[dict] = None) -> list:
    """Odd primes in [lo, hi], optionally filtered by q % mod == value."""
    out = []
    for q in range(max(3, lo), hi + 1):
        if not is_odd_prime(q):
            continue
        if residue is not None and q % residue["mod"] != residue["value"]:
            continue
        out.append(q)
    return out


def _is_generator(g: int, q: int) -> bool:
    order = 1
    acc = g % q
    while acc != 1:
        acc = (acc * g) % q
        order += 1
        if order > q:
            return False
    return order == q - 1


# --- circle lemma -------------------------------------------------------------

def verify_circle_lemma(q: int) -> Certificate:
    """Exhaustively compare circle-intersection counts against the quadratic
    character predictor, for every pair of centers and all nonzero radii."""
    if not is_odd_prime(q):
        raise BadParameter(f"q={q} is not an odd prime")
    if q > limits.CIRCLE_LEMMA_CAP:
        raise TooLarge(f"exhaustive circle check capped at q={limits.CIRCLE_LEMMA_CAP}")
    xs = np.arange(q * q, dtype=np.int64)
    px, py = xs % q, xs // q
    quad_from_origin = (px * px + py * py) % q

    pred_cache = {}

    def predictor_table(k: int) -> np.ndarray:
        if k not in pred_cache:
            table = np.empty((q - 1, q - 1), dtype=np.int64)
            for i in range(1, q):
                for j in range(1, q):
                    table[i - 1, j - 1] = predicted_intersections(i, j, k, q)
            pred_cache[k] = table
        return pred_cache[k]

    null_table = np.empty((q - 1, q - 1), dtype=np.int64)
    for i in range(1, q):
        for j in range(1, q):
            null_table[i - 1, j - 1] = predicted_intersections_null(i, j, q)

    checked = mismatches = 0
    null_checked = null_mismatches = 0
    for target in range(1, q * q):
        tx, ty = target % q, target // q
        k = (tx * tx + ty * ty) % q
        quad_from_target = ((px - tx) ** 2 + (py - ty) ** 2) % q
        counts = np.zeros((q, q), dtype=np.int64)
        np.add.at(counts, (quad_from_origin, quad_from_target), 1)
        observed = counts[1:, 1:]
        if k != 0:
            checked += observed.size
            mismatches += int((observed != predictor_table(k)).sum())
        else:
            null_checked += observed.size
            null_mismatches += int((observed != null_table).sum())

    claims = [
        Claim(
            "intersection_predictor",
            "for centers at nonzero quadrance k, circles of radii i, j meet "
            "in chi(i*j - (k-i-j)^2/4) + 1 points",
            "pass" if mismatches == 0 else "fail",
            {
                "triples_checked": _ev(checked, "computed-exact"),
                "mismatches": _ev(mismatches, "computed-exact"),
            },
        )
    ]
    if q % 4 == 1:
        claims.append(
            Claim(
                "isotropic_intersections",
                "for distinct centers at quadrance 0, circles of radii i, j "
                "meet in exactly one point iff i != j, else not at all",
                "pass" if null_mismatches == 0 else "fail",
                {
                    "pairs_checked": _ev(null_checked, "computed-exact"),
                    "mismatches": _ev(null_mismatches, "computed-exact"),
                },
            )
        )
    else:
        claims.append(
            Claim(
                "isotropic_intersections",
                "no distinct points at quadrance 0 exist when q = 3 mod 4; "
                "the isotropic case is vacuous",
                "recorded",
                {"pairs_checked": _ev(null_checked, "computed-exact")},
            )
        )
    return Certificate(
        kind="circle-lemma",
        family={"kind": "euclidean", "q": q, "m": 2},
        params={"q": q},
        claims=claims,
    )


# --- girth / diameter theorems ------------------------------------------------

def _euclidean_girth_diameter_claims(q: int) -> list:
    g = build_euclidean(q, 2, 1)
    measured_girth = girth(g)
    uniform = eccentricity_uniformity_check(g, samples=8)
    measured_diam = diameter(g)
    chi3 = quadratic_character(3, q)
    expected_girth = 3 if chi3 >= 0 else 4
    claims = [
        Claim(
            "euclidean_girth",
            "girth is 3 when 3 is a square (or zero) mod q, else 4",
            "pass" if measured_girth == expected_girth else "fail",
            {
                "chi_3": _ev(chi3, "computed-exact"),
                "expected": _ev(expected_girth, "paper-bound"),
                "girth": _ev(measured_girth, "computed-exact"),
            },
        )
    ]
    if q == 3:
        # the 9-vertex graph has diameter 2: the smallest prime degenerates
        # below the rule's range, like the half-plane q in {3, 5} exception
        status = "recorded"
        statement = (
            "the diameter-3 rule for q = 3 mod 4 does not extend to q = 3; "
            "measured value recorded"
        )
    elif q % 4 == 3:
        status = "pass" if (measured_diam == 3 and uniform) else "fail"
        statement = "diameter is exactly 3 when q = 3 mod 4"
    else:
        status = "pass" if (measured_diam in (3, 4) and uniform) else "fail"
        statement = (
            "diameter is 3 or 4 when q = 1 mod 4; the measured value is "
            "recorded, no rule selects between them"
        )
    claims.append(
        Claim(
            "euclidean_diameter",
            statement,
            status,
            {
                "diameter": _ev(measured_diam, "computed-exact"),
                "eccentricity_uniform": _ev(uniform, "computed-exact"),
            },
        )
    )
    return claims


def _non_euclidean_girth_diameter_claims(q: int, sigma: int) -> list:
    girth_rows, girth_bad = [], 0
    unclassified = []
    range_bad = 0
    diam_rows, diam_bad = [], 0
    for a in range(1, q):
        if a == (4 * sigma) % q:
            continue
        g = build_non_euclidean(q, sigma, a)
        gg = girth(g)
        dd = diameter(g)
        if gg not in (3, 4):
            range_bad += 1
        # girth: sufficient conditions only; a - 3*sigma = 0 counts as square
        if a == (2 * sigma) % q:
            expected = 3 if q % 4 == 3 else 4
            girth_rows.append([a, expected, gg])
            girth_bad += gg != expected
        elif quadratic_character(a, q) == 1 and quadratic_character(a - 3 * sigma, q) >= 0:
            girth_rows.append([a, 3, gg])
            girth_bad += gg != 3
        else:
            unclassified.append([a, gg])
        # diameter: total rule
        if a == (2 * sigma) % q:
            expected_d = 2 if q in (3, 5) else 3
        else:
            expected_d = 3 if quadratic_character(sigma - a, q) >= 0 else 4
        diam_rows.append([a, expected_d, dd])
        diam_bad += dd != expected_d
    claims = [
        Claim(
            "halfplane_girth_range",
            "girth of every half-plane graph is 3 or 4",
            "pass" if range_bad == 0 else "fail",
            {"violations": _ev(range_bad, "computed-exact")},
        ),
        Claim(
            "halfplane_girth_sufficient",
            "girth is 3 if a = 2*sigma and q = 3 mod 4, or if a and a-3*sigma "
            "are both squares (zero counted as square); girth is 4 if "
            "a = 2*sigma and q = 1 mod 4",
            "pass" if girth_bad == 0 else "fail",
            {
                "cases": _ev(girth_rows, "computed-exact"),
                "mismatches": _ev(girth_bad, "computed-exact"),
            },
        ),
        Claim(
            "halfplane_girth_unclassified",
            "values of a matched by no sufficient condition; measured girths recorded",
            "recorded",
            {"cases": _ev(unclassified, "computed-exact")},
        ),
        Claim(
            "halfplane_diameter",
            "diameter is 3 or 4 according to whether sigma - a is a square "
            "(zero counted as square); for a = 2*sigma it is 3, except 2 at "
            "q in {3, 5}",
            "pass" if diam_bad == 0 else "fail",
            {
                "cases": _ev(diam_rows, "computed-exact"),
                "mismatches": _ev(diam_bad, "computed-exact"),
            },
        ),
        Claim(
            "sigma_generator",
            "whether sigma generates the multiplicative group (non-squareness "
            "is all the construction uses)",
            "recorded",
            {"is_generator": _ev(_is_generator(sigma, q), "computed-exact")},
        ),
    ]
    return claims


def verify_girth_diameter(q: int, family: str = "euclidean") -> Certificate:
    """Measure girth and diameter and compare against every theorem clause
    whose hypothesis applies; inapplicable clauses are recorded."""
    if not is_odd_prime(q):
        raise BadParameter(f"q={q} is not an odd prime")
    if family == "euclidean":
        claims = _euclidean_girth_diameter_claims(q)
        fam = {"kind": "euclidean", "q": q, "m": 2, "a": 1}
        params = {"q": q, "family": family}
    elif family == "noneuclidean":
        sigma = find_nonsquare(q)
        claims = _non_euclidean_girth_diameter_claims(q, sigma)
        fam = {"kind": "noneuclidean", "q": q, "sigma": sigma}
        params = {"q": q, "family": family, "sigma": sigma}
    else:
        raise UnsupportedFamily(f"no girth/diameter theorems for family {family!r}")
    return Certificate(kind="girth-diameter", family=fam, params=params, claims=claims)


# --- degree formula -----------------------------------------------------------

def verify_degree_formula(q: int, m: int) -> Certificate:
    """Brute-force sphere sizes |{v : Q(0,v) = a}| against the closed form,
    for every a != 0."""
    if not is_odd_prime(q):
        raise BadParameter(f"q={q} is not an odd prime")
    if m < 2:
        raise BadParameter(f"dimension m={m} must be >= 2")
    n = q**m
    if n > limits.max_vertices():
        raise TooLarge(f"q^m = {n} exceeds the vertex limit")
    idx = np.arange(n, dtype=np.int64)
    total = np.zeros(n, dtype=np.int64)
    for i in range(m):
        c = (idx // q**i) % q
        total += c * c
    counts = np.bincount(total % q, minlength=q)
    rows = []
    mismatches = 0
    for a in range(1, q):
        formula = euclidean_degree(q, m, a)
        rows.append([a, formula, int(counts[a])])
        mismatches += int(counts[a]) != formula
    claims = [
        Claim(
            "sphere_size_formula",
            "sphere sizes match q^(m-1) + chi((-1)^((m-1)/2) * a) * q^((m-1)/2) "
            "for odd m and q^(m-1) - chi((-1)^(m/2)) * q^((m-2)/2) for even m, "
            "with m used consistently throughout",
            "pass" if mismatches == 0 else "fail",
            {
                "cases": _ev(rows, "computed-exact"),
                "mismatches": _ev(mismatches, "computed-exact"),
            },
        )
    ]
    return Certificate(
        kind="degree-formula",
        family={"kind": "euclidean", "q": q, "m": m},
        params={"q": q, "m": m},
        claims=claims,
    )


# --- main theorems ------------------------------------------------------------

def _spectral_theorem_claims(n, d, q, summary, include_edge_corollary, headline_n):
    """Shared toughness / bisection / bip / independence / Ramanujan claims."""
    lam = summary.lam
    theta2, theta_n = summary.theta2, summary.theta_n
    cap_lam = 2.0 * math.sqrt(q)
    claims = []

    bound_measured = alon_toughness_bound(d, lam)
    bound_cap = alon_toughness_bound(d, cap_lam)
    claims.append(
        Claim(
            "toughness_spectral",
            "toughness exceeds (1/3)(d^2/(lam*d+lam^2) - 1); the bound at the "
            "measured lam must beat the bound at the lam <= 2*sqrt(q) cap; "
            "the sqrt(q)/6 headline is asymptotic shorthand",
            "pass" if bound_measured > bound_cap else "recorded",
            {
                "bound_at_measured_lambda": _ev(bound_measured, "computed-float"),
                "bound_at_ramanujan_cap": _ev(bound_cap, "paper-bound"),
                "headline_sqrt_q_over_6": _ev(math.sqrt(q) / 6.0, "paper-bound"),
            },
        )
    )

    bis_lower, bip_upper = bisection_and_bip_bounds(n, theta2, theta_n)
    claims.append(
        Claim(
            "bisection_width",
            "bisection width is at least n*theta2/4 up to an unquantified "
            "asymptotic factor; values recorded, not asserted",
            "recorded",
            {
                "spectral_lower": _ev(bis_lower, "computed-float"),
                "cap_form": _ev(headline_n * (q - cap_lam) / 4.0, "paper-bound"),
            },
        )
    )
    claims.append(
        Claim(
            "bipartite_subgraph",
            "every spanning bipartite subgraph has at most n*theta_n/4 edges; "
            "value recorded alongside the closed-form cap at lam = 2*sqrt(q)",
            "recorded",
            {
                "spectral_upper": _ev(bip_upper, "computed-float"),
                "cap_form": _ev(headline_n * (q + cap_lam) / 4.0, "paper-bound"),
            },
        )
    )

    if include_edge_corollary:
        e = n * d // 2
        cap = e / 2.0 + (e ** (5.0 / 6.0)) / 2.0
        claims.append(
            Claim(
                "edge_corollary",
                "the corollary cap bip <= e/2 + e^(5/6)/2, tested against the "
                "spectral bip upper bound n*theta_n/4",
                "pass" if bip_upper <= cap + _EPS else "fail",
                {
                    "edge_count": _ev(e, "computed-exact"),
                    "corollary_cap": _ev(cap, "paper-bound"),
                    "spectral_bip_upper": _ev(bip_upper, "computed-float"),
                },
            )
        )

    claims.append(
        Claim(
            "ramanujan",
            "every nontrivial eigenvalue satisfies |lam| <= 2*sqrt(q)",
            "pass" if ramanujan_check(summary, q) else "fail",
            {
                "lambda": _ev(lam, "computed-float"),
                "cap": _ev(cap_lam, "paper-bound"),
            },
        )
    )
    return claims


def _ramsey_record(n, alpha_bound, method, witness=None):
    if alpha_bound >= n:
        return None
    rec = {
        "s": 3,
        "t": int(math.floor(alpha_bound)) + 1,
        "n": n,
        "alpha_bound": alpha_bound,
        "method": method,
    }
    if witness is not None:
        rec["witness"] = list(witness)
    return rec


def verify_main_theorem(q: int) -> Certificate:
    """Certificate for the quadrance-graph theorem at primes q = 7 mod 12:
    triangle-free, diameter 3, spectral toughness / bisection / bipartite /
    independence bounds, the edge-count corollary, and a Ramsey record."""
    if not is_odd_prime(q) or q % 12 != 7:
        raise BadResidue(f"q={q} is not a prime of the form 12k + 7")
    g = build_euclidean(q, 2, 1)
    n, d = g.n, g.degree
    triangles = triangle_count(g)
    uniform = eccentricity_uniformity_check(g, samples=8)
    diam = diameter(g)
    summary = cayley_spectrum_abelian(g)

    claims = [
        Claim(
            "triangle_free",
            "the graph contains no triangle",
            "pass" if triangles == 0 else "fail",
            {"triangles": _ev(triangles, "computed-exact")},
        ),
        Claim(
            "diameter_three",
            "the graph has diameter exactly 3",
            "pass" if (diam == 3 and uniform) else "fail",
            {
                "diameter": _ev(diam, "computed-exact"),
                "eccentricity_uniform": _ev(uniform, "computed-exact"),
            },
        ),
    ]
    claims.extend(
        _spectral_theorem_claims(
            n, d, q, summary, include_edge_corollary=True, headline_n=q * q
        )
    )

    ratio = ratio_independence_bound(n, d, summary.theta_n)
    cap = 2.0 * q ** 1.5
    claims.append(
        Claim(
            "independence_ratio",
            "the spectral ratio bound on the independence number is at most "
            "2*q^(3/2)",
            "pass" if ratio <= cap + _EPS else "fail",
            {
                "ratio_bound": _ev(ratio, "computed-float"),
                "cap": _ev(cap, "paper-bound"),
                "chromatic_lower": _ev(chromatic_lower_bound(n, ratio), "computed-float"),
                "chromatic_headline": _ev(math.sqrt(q) / 2.0, "paper-bound"),
            },
        )
    )

    alpha_bound, method, witness = ratio, "spectral-ratio", None
    if n <= limits.VERIFY_ALPHA_CAP_GEOMETRIC:
        res = exact_independence(g)
        if res.exact:
            ok = res.size <= ratio + 1e-6 and res.size <= cap + _EPS
            claims.append(
                Claim(
                    "independence_exact",
                    "the exact independence number is at most the ratio bound "
                    "and at most 2*q^(3/2)",
                    "pass" if ok else "fail",
                    {
                        "alpha": _ev(res.size, "computed-exact"),
                        "witness": _ev(list(res.witness), "computed-exact"),
                        "ratio_bound": _ev(ratio, "computed-float"),
                        "cap": _ev(cap, "paper-bound"),
                    },
                )
            )
            alpha_bound, method, witness = res.size, "exact", res.witness

    ramsey = _ramsey_record(n, alpha_bound, method, witness) if triangles == 0 else None
    return Certificate(
        kind="main-theorem",
        family=g.family.to_dict(),
        params={"q": q},
        claims=claims,
        ramsey=ramsey,
    )


def verify_mt1(q: int) -> Certificate:
    """Certificate for the half-plane theorem at primes q = 5 mod 12, q >= 17:
    the graph V_q(3, 6) with sigma = 3 non-square and a = 2*sigma."""
    if not is_odd_prime(q) or q % 12 != 5 or q < 17:
        raise BadResidue(f"q={q} is not a prime of the form 12k + 5 with k >= 1")
    sigma, a = 3, 6
    g = build_non_euclidean(q, sigma, a)
    n, d = g.n, g.degree
    triangles = triangle_count(g)
    measured_girth = girth(g)
    uniform = eccentricity_uniformity_check(g, samples=8)
    diam = diameter(g)
    summary = dense_spectrum(g)

    claims = [
        Claim(
            "sigma_nonsquare",
            "3 is a non-square mod q",
            "pass" if quadratic_character(3, q) == -1 else "fail",
            {"chi_3": _ev(quadratic_character(3, q), "computed-exact")},
        ),
        Claim(
            "sigma_generator",
            "whether sigma = 3 generates the multiplicative group "
            "(non-squareness is all the construction uses)",
            "recorded",
            {"is_generator": _ev(_is_generator(sigma, q), "computed-exact")},
        ),
        Claim(
            "girth_four",
            "girth is 4 by the sufficient condition a = 2*sigma with q = 1 mod 4",
            "pass" if measured_girth == 4 else "fail",
            {"girth": _ev(measured_girth, "computed-exact")},
        ),
        Claim(
            "triangle_free",
            "the graph contains no triangle",
            "pass" if triangles == 0 else "fail",
            {"triangles": _ev(triangles, "computed-exact")},
        ),
        Claim(
            "diameter_three",
            "the graph has diameter exactly 3 (a = 2*sigma, q not in {3, 5})",
            "pass" if (diam == 3 and uniform) else "fail",
            {
                "diameter": _ev(diam, "computed-exact"),
                "eccentricity_uniform": _ev(uniform, "computed-exact"),
            },
        ),
    ]
    claims.extend(
        _spectral_theorem_claims(
            n, d, q, summary, include_edge_corollary=False, headline_n=q * q - q
        )
    )

    ratio = ratio_independence_bound(n, d, summary.theta_n)
    cap_form = 2.0 * n ** 0.75
    claims.append(
        Claim(
            "independence_recorded",
            "the independence number is at most (2 + o(1)) * n^(3/4); the "
            "asymptotic factor is unquantified, so the spectral ratio bound "
            "and the cap are recorded, not asserted",
            "recorded",
            {
                "ratio_bound": _ev(ratio, "computed-float"),
                "cap_form": _ev(cap_form, "paper-bound"),
            },
        )
    )
    ramsey = _ramsey_record(n, ratio, "spectral-ratio") if triangles == 0 else None
    return Certificate(
        kind="half-plane-theorem",
        family=g.family.to_dict(),
        params={"q": q, "sigma": sigma, "a": a},
        claims=claims,
        ramsey=ramsey,
    )


# --- code graphs ----------------------------------------------------------------

def _greedy_independent_size(graph) -> int:
    chosen = np.zeros(graph.n, dtype=bool)
    blocked = np.zeros(graph.n, dtype=bool)
    for v in range(graph.n):
        if not blocked[v]:
            chosen[v] = True
            blocked[v] = True
            blocked[graph.neighbors(v)] = True
    return int(chosen.sum())


def _code_alpha_claims(g, prefix, cap_value, cap_label, assert_cap) -> Claim:
    n = g.n
    greedy_lower = _greedy_independent_size(g)
    evidence = {
        "greedy_lower": _ev(greedy_lower, "computed-exact"),
        "cap_form": _ev(cap_value, "paper-bound"),
    }
    if n <= limits.VERIFY_ALPHA_CAP_CODE:
        res = exact_independence(g)
        if res.exact:
            evidence["alpha"] = _ev(res.size, "computed-exact")
            upper = float(res.size)
            method = "exact"
        else:
            summary = cayley_spectrum_abelian(g)
            upper = ratio_independence_bound(n, g.degree, summary.theta_n)
            evidence["ratio_bound"] = _ev(upper, "computed-float")
            method = "spectral-ratio"
    else:
        summary = cayley_spectrum_abelian(g)
        upper = ratio_independence_bound(n, g.degree, summary.theta_n)
        evidence["ratio_bound"] = _ev(upper, "computed-float")
        method = "spectral-ratio"
    evidence["method"] = _ev(method, "computed-exact")
    if assert_cap:
        status = "pass" if upper <= cap_value + _EPS else "fail"
        statement = (
            f"the independence number is at most {cap_label}; certified via the "
            "best available exact or spectral upper bound"
        )
    else:
        status = "recorded"
        statement = (
            f"the independence number is at most {cap_label} with an "
            "unquantified asymptotic factor; bounds recorded, not asserted"
        )
    return Claim(f"{prefix}_independence", statement, status, evidence)


def _verify_bch(k: int) -> Certificate:
    family = FamilySpec(kind="bch", k=k)
    g = build_family(family)
    n = g.n
    triangles = triangle_count(g)
    claims = [
        Claim(
            "bch_regular",
            "the graph is (2^k - 1)-regular on 2^(2k) vertices",
            "pass" if (g.degree == (1 << k) - 1 and n == 1 << (2 * k)) else "fail",
            {
                "degree": _ev(g.degree, "computed-exact"),
                "n": _ev(n, "computed-exact"),
            },
        ),
        Claim(
            "bch_triangle_free",
            "the graph contains no triangle",
            "pass" if triangles == 0 else "fail",
            {"triangles": _ev(triangles, "computed-exact")},
        ),
        _code_alpha_claims(
            g,
            "bch",
            2.0 * n ** 0.75,
            "2 * n^(3/4)",
            assert_cap=True,
        ),
    ]
    return Certificate(
        kind="code-graphs",
        family=family.to_dict(),
        params={"k": k, "code": "bch"},
        claims=claims,
    )


def _verify_alon(k: int) -> Certificate:
    family = FamilySpec(kind="alon", k=k)
    g = build_family(family)
    n = g.n
    triangles = triangle_count(g)
    w0, w1 = alon_split(k)
    claimed_degree = (1 << (k - 1)) * ((1 << (k - 1)) - 1)
    actual_degree = g.degree
    claims = [
        Claim(
            "alon_partition",
            "|W0| = 2^(k-1) - 1 and |W1| = 2^(k-1)",
            "pass"
            if (len(w0) == (1 << (k - 1)) - 1 and len(w1) == (1 << (k - 1)))
            else "fail",
            {
                "w0_size": _ev(len(w0), "computed-exact"),
                "w1_size": _ev(len(w1), "computed-exact"),
            },
        ),
        Claim(
            "alon_degree",
            "degree equals the deduplicated sum-set size, compared against the "
            "claimed 2^(k-1) * (2^(k-1) - 1); a discrepancy is recorded, not an error",
            "pass" if actual_degree == claimed_degree else "recorded",
            {
                "degree": _ev(actual_degree, "computed-exact"),
                "claimed": _ev(claimed_degree, "paper-bound"),
            },
        ),
        Claim(
            "alon_triangle_free",
            "the graph contains no triangle",
            "pass" if triangles == 0 else "fail",
            {"triangles": _ev(triangles, "computed-exact")},
        ),
        _code_alpha_claims(
            g,
            "alon",
            36.0 * n ** (2.0 / 3.0),
            "(36 + o(1)) * n^(2/3)",
            assert_cap=False,
        ),
    ]
    return Certificate(
        kind="code-graphs",
        family=family.to_dict(),
        params={"k": k, "code": "alon"},
        claims=claims,
    )


def verify_code_graphs(k: int) -> Certificate:
    """Certificate covering both code families at parameter k; the second
    family is skipped (recorded) when k is divisible by 3."""
    bch_cert = _verify_bch(k)
    claims = list(bch_cert.claims)
    if k % 3 != 0:
        claims.extend(_verify_alon(k).claims)
    else:
        claims.append(
            Claim(
                "alon_skipped",
                "the sum-set family needs alpha -> alpha^7 bijective, which "
                "fails when 3 divides k",
                "recorded",
                {"k": _ev(k, "computed-exact")},
            )
        )
    return Certificate(
        kind="code-graphs",
        family=bch_cert.family,
        params={"k": k},
        claims=claims,
    )


# --- Ramsey certificates --------------------------------------------------------

def ramsey_certificate(graph: Graph) -> Certificate:
    """R(3, t) > n record for a triangle-free graph: t = floor(alpha_bound)+1
    where alpha_bound is the exact independence number when feasible, else a
    spectral ratio bound."""
    triangles = triangle_count(graph)
    if triangles != 0:
        raise NotTriangleFree(f"graph has {triangles} triangles")
    n = graph.n
    fam = graph.family
    is_code = fam is not None and fam.kind in ("bch", "alon")
    alpha_cap = limits.VERIFY_ALPHA_CAP_CODE if is_code else limits.VERIFY_ALPHA_CAP_GEOMETRIC
    alpha_bound, method, witness = None, None, None
    if n <= alpha_cap:
        res = exact_independence(graph)
        if res.exact:
            alpha_bound, method, witness = float(res.size), "exact", res.witness
    if alpha_bound is None:
        if fam is not None and fam.kind in ("euclidean", "bch", "alon"):
            summary = cayley_spectrum_abelian(graph)
        else:
            summary = dense_spectrum(graph)
        alpha_bound = ratio_independence_bound(n, summary.d, summary.theta_n)
        method = "spectral-ratio"
    claims = [
        Claim(
            "triangle_free",
            "the graph contains no triangle",
            "pass",
            {"triangles": _ev(0, "computed-exact")},
        ),
        Claim(
            "independence_bound",
            "the independence number is at most alpha_bound",
            "pass",
            {
                "alpha_bound": _ev(alpha_bound, "computed-exact" if method == "exact" else "computed-float"),
                "method": _ev(method, "computed-exact"),
            },
        ),
    ]
    ramsey = _ramsey_record(n, alpha_bound, method, witness)
    if ramsey is not None:
        claims.append(
            Claim(
                "ramsey_lower_bound",
                f"R(3, {ramsey['t']}) > {n}: no triangle and no independent "
                f"set of size {ramsey['t']}",
                "pass",
                {
                    "s": _ev(3, "computed-exact"),
                    "t": _ev(ramsey["t"], "computed-exact"),
                    "n": _ev(n, "computed-exact"),
                },
            )
        )
    return Certificate(
        kind="ramsey",
        family=fam.to_dict() if fam is not None else None,
        params={"n": n},
        claims=claims,
        ramsey=ramsey,
    )


# --- sweeps ----------------------------------------------------------------------

CSV_COLUMNS = [
    "family", "q", "sigma", "a", "m", "k", "n", "d",
    "girth", "diameter", "triangles", "components",
    "lambda", "theta2", "theta_n",
    "toughness_lower", "independence_upper", "bisection_lower", "bip_upper",
    "chromatic_lower", "alpha_exact", "toughness_exact", "status",
]

_FAMILY_ORDER = {"euclidean": 0, "noneuclidean": 1, "bch": 2, "alon": 3}


@dataclass(frozen=True)
class SweepConfig:
    q_min: int = 3
    q_max: int = 31
    families: tuple = ("euclidean",)
    residue: Optional[dict] = None
    ks: tuple = (2, 3, 4)
    out_dir: str = "sweep-out"
    threads: int = 1

    @staticmethod
    def from_dict(d: dict) -> "SweepConfig":
        known = {f for f in ("q_min", "q_max", "families", "residue", "ks", "out_dir", "threads")}
        bad = set(d) - known
        if bad:
            raise BadParameter(f"unknown sweep config keys: {sorted(bad)}")
        cfg = dict(d)
        if "families" in cfg:
            cfg["families"] = tuple(cfg["families"])
        if "ks" in cfg:
            cfg["ks"] = tuple(cfg["ks"])
        out = SweepConfig(**cfg)
        for fam in out.families:
            if fam not in _FAMILY_ORDER:
                raise BadParameter(f"unknown family {fam!r} in sweep config")
        if out.residue is not None and set(out.residue) != {"mod", "value"}:
            raise BadParameter("residue filter needs exactly the keys mod and value")
        return out


def _default_halfplane_params(q: int):
    if q % 12 == 5 and q >= 17:
        return 3, 6
    sigma = find_nonsquare(q)
    for a in range(1, q):
        if a != (4 * sigma) % q:
            return sigma, a
    raise BadParameter(f"no valid distance parameter mod {q}")


def _sweep_jobs(config: SweepConfig) -> list:
    jobs = []
    for fam in config.families:
        if fam == "euclidean":
            for q in primes_in(config.q_min, config.q_max, config.residue):
                jobs.append(FamilySpec(kind="euclidean", q=q, m=2, a=1))
        elif fam == "noneuclidean":
            for q in primes_in(config.q_min, config.q_max, config.residue):
                sigma, a = _default_halfplane_params(q)
                jobs.append(FamilySpec(kind="noneuclidean", q=q, sigma=sigma, a=a))
        elif fam == "bch":
            for k in config.ks:
                jobs.append(FamilySpec(kind="bch", k=k))
        elif fam == "alon":
            for k in config.ks:
                if k % 3 != 0:
                    jobs.append(FamilySpec(kind="alon", k=k))
    jobs.sort(
        key=lambda s: (_FAMILY_ORDER[s.kind], s.q or 0, s.a or 0, s.k or 0)
    )
    return jobs


def _certificate_for(spec: FamilySpec) -> Certificate:
    if spec.kind == "euclidean":
        if spec.q % 12 == 7:
            return verify_main_theorem(spec.q)
        return verify_girth_diameter(spec.q, "euclidean")
    if spec.kind == "noneuclidean":
        if spec.q % 12 == 5 and spec.q >= 17 and spec.sigma == 3 and spec.a == 6:
            return verify_mt1(spec.q)
        return verify_girth_diameter(spec.q, "noneuclidean")
    if spec.kind == "bch":
        return _verify_bch(spec.k)
    return _verify_alon(spec.k)


def _json_name(spec: FamilySpec) -> str:
    if spec.kind == "euclidean":
        return f"euclidean_q{spec.q}_a{spec.a}.json"
    if spec.kind == "noneuclidean":
        return f"noneuclidean_q{spec.q}_s{spec.sigma}_a{spec.a}.json"
    return f"{spec.kind}_k{spec.k}.json"


def _sweep_row(spec: FamilySpec):
    row = {c: None for c in CSV_COLUMNS}
    row.update(
        family=spec.kind, q=spec.q, sigma=spec.sigma, a=spec.a,
        m=spec.m, k=spec.k,
    )
    try:
        g = build_family(spec)
        met = metrics_report(g)
        row.update(
            n=g.n, d=g.degree, girth=met.girth, diameter=met.diameter,
            triangles=met.triangles, components=met.components,
        )
        if spec.kind == "noneuclidean":
            summary = dense_spectrum(g) if g.n <= limits.DENSE_SPECTRUM_CAP else None
        else:
            summary = cayley_spectrum_abelian(g)
        if summary is not None:
            ratio = ratio_independence_bound(g.n, g.degree, summary.theta_n)
            bis_lower, bip_upper = bisection_and_bip_bounds(
                g.n, summary.theta2, summary.theta_n
            )
            row["lambda"] = summary.lam
            row.update(
                theta2=summary.theta2,
                theta_n=summary.theta_n,
                independence_upper=ratio,
                bisection_lower=bis_lower,
                bip_upper=bip_upper,
                chromatic_lower=chromatic_lower_bound(g.n, ratio),
            )
            if summary.lam > 0:
                row["toughness_lower"] = alon_toughness_bound(g.degree, summary.lam)
        alpha_cap = (
            limits.VERIFY_ALPHA_CAP_CODE
            if spec.kind in ("bch", "alon")
            else limits.VERIFY_ALPHA_CAP_GEOMETRIC
        )
        if g.n <= alpha_cap:
            res = exact_independence(g)
            if res.exact:
                row["alpha_exact"] = res.size
        if g.n <= limits.TOUGHNESS_CAP:
            row["toughness_exact"] = exact_toughness(g).value
        cert = _certificate_for(spec)
        row["status"] = cert.overall
        return row, cert
    except (ValueError, RuntimeError) as exc:
        row["status"] = f"error:{type(exc).__name__}"
        cert = Certificate(
            kind="sweep-error",
            family=spec.to_dict(),
            params={},
            claims=[
                Claim(
                    "build_or_verify",
                    "the graph could not be built or verified",
                    "fail",
                    {"error": _ev(f"{type(exc).__name__}: {exc}", "computed-exact")},
                )
            ],
        )
        return row, cert


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return repr(value)
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


def run_sweep(config: SweepConfig) -> dict:
    """Run every qualifying graph job, write one certificate JSON per graph
    plus summary.csv; failures are recorded per row, never abort the sweep.
    Output bytes are independent of the thread count."""
    jobs = _sweep_jobs(config)
    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            results = list(pool.map(_sweep_row, jobs))
    else:
        results = [_sweep_row(spec) for spec in jobs]
    os.makedirs(config.out_dir, exist_ok=True)
    json_files = []
    for spec, (row, cert) in zip(jobs, results):
        name = _json_name(spec)
        path = os.path.join(config.out_dir, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(certificate_to_json(cert))
            fh.write("\n")
        json_files.append(path)
    csv_path = os.path.join(config.out_dir, "summary.csv")
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_COLUMNS)
    for _, (row, _) in zip(jobs, results):
        writer.writerow([_csv_cell(row[c]) for c in CSV_COLUMNS])
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        fh.write(buf.getvalue())
    return {
        "rows": len(jobs),
        "out_dir": config.out_dir,
        "csv": csv_path,
        "json_files": json_files,
        "statuses": [row["status"] for row, _ in results],
    }
