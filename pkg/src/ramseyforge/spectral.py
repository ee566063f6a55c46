"""Adjacency spectra and the spectral bounds derived from them.

Eigenvalues come by two independent routes: dense symmetric diagonalization
of the adjacency matrix, and exact character sums for the abelian Cayley
families (cosine sums over (Z_p)^m, a Walsh-Hadamard transform over
(Z_2)^t).  Tests cross-check the routes against each other.

Bound conventions, for a d-regular graph on n vertices with adjacency
eigenvalues d = lambda_1 >= ... >= lambda_n and Laplacian eigenvalues
theta_i = d - lambda_{n+1-i}:

  * toughness      t(G) > (1/3) * (d^2 / (lam*d + lam^2) - 1),
                   lam = max_{i>=2} |lambda_i|
  * independence   alpha(G) <= n * (theta_n - d) / theta_n  (trivial bound n
                   when the denominator route is vacuous, theta_n <= d)
  * bisection      bisection width >= n * theta_2 / 4
  * max bipartite subgraph size <= n * theta_n / 4
  * chromatic      chi(G) >= n / alpha_ub
"""
import math
from dataclasses import dataclass

import numpy as np

from . import limits
from .errors import (
    BadParameter,
    NoConvergence,
    TooLarge,
    UnsupportedFamily,
    ZeroVector,
)


@dataclass(frozen=True)
class SpectralSummary:
    n: int
    d: int
    eigenvalues: np.ndarray  # descending
    method: str

    @property
    def lam(self) -> float:
        """Largest nontrivial eigenvalue modulus, max_{i >= 2} |lambda_i|."""
        return float(np.abs(self.eigenvalues[1:]).max())

    @property
    def theta2(self) -> float:
        return float(self.d - self.eigenvalues[1])

    @property
    def theta_n(self) -> float:
        return float(self.d - self.eigenvalues[-1])


def _require_regular(graph) -> int:
    if graph.degree is None:
        raise BadParameter("spectral summaries need a regular graph")
    return graph.degree


def dense_spectrum(graph, cap: int = limits.DENSE_SPECTRUM_CAP) -> SpectralSummary:
    """Full spectrum via symmetric dense diagonalization."""
    d = _require_regular(graph)
    n = graph.n
    if n > cap:
        raise TooLarge(f"dense spectrum capped at {cap} vertices")
    adj = np.zeros((n, n), dtype=np.float64)
    counts = np.diff(graph.indptr)
    rows = np.repeat(np.arange(n, dtype=np.int64), counts)
    adj[rows, graph.indices] = 1.0
    try:
        eig = np.linalg.eigvalsh(adj)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(f"dense eigensolver failed: {exc}") from exc
    return SpectralSummary(n=n, d=d, eigenvalues=eig[::-1].copy(), method="dense")


def _character_spectrum_euclidean(graph) -> np.ndarray:
    fam = graph.family
    q, m, n = fam.q, fam.m, graph.n
    idx = np.arange(n, dtype=np.int64)
    coords = np.empty((n, m), dtype=np.int64)
    for i in range(m):
        coords[:, i] = (idx // q**i) % q
    conn = coords[graph.neighbors(0)]  # sphere through the origin
    cos_table = np.cos(2.0 * np.pi * np.arange(q) / q)
    phases = (coords @ conn.T) % q
    return cos_table[phases].sum(axis=1)


def _character_spectrum_xor(graph) -> np.ndarray:
    """Walsh-Hadamard transform of the connection-set indicator; exact integers."""
    n = graph.n
    vec = np.zeros(n, dtype=np.int64)
    vec[graph.neighbors(0)] = 1
    h = 1
    while h < n:
        vec = vec.reshape(-1, 2, h)
        top = vec[:, 0, :] + vec[:, 1, :]
        bot = vec[:, 0, :] - vec[:, 1, :]
        vec = np.stack([top, bot], axis=1).reshape(-1)
        h *= 2
    return vec.astype(np.float64)


def cayley_spectrum_abelian(family) -> SpectralSummary:
    """Exact eigenvalues by additive characters; abelian families only.

    Accepts a FamilySpec or an already-built Graph.  The half-plane family
    lives on a non-abelian affine group and is rejected.
    """
    from .graphs import Graph, build_family

    graph = family if isinstance(family, Graph) else None
    fam = graph.family if graph is not None else family
    if fam is None:
        raise UnsupportedFamily("character spectra need a known family")
    if fam.kind == "noneuclidean":
        raise UnsupportedFamily(
            "half-plane graphs live on a non-abelian group; use dense_spectrum"
        )
    if fam.kind not in ("euclidean", "bch", "alon"):
        raise UnsupportedFamily(f"unknown family kind {fam.kind!r}")
    if graph is None:
        graph = build_family(fam)
    if fam.kind == "euclidean":
        eig = _character_spectrum_euclidean(graph)
    else:
        eig = _character_spectrum_xor(graph)
    eig = np.sort(eig)[::-1]
    return SpectralSummary(
        n=graph.n, d=graph.degree, eigenvalues=eig, method="character-sum"
    )


def alon_toughness_bound(d: float, lam: float) -> float:
    """Lower bound (1/3) * (d^2 / (lam*d + lam^2) - 1) on toughness."""
    if lam <= 0:
        raise BadParameter("the toughness bound needs lam > 0")
    return (d * d / (lam * d + lam * lam) - 1.0) / 3.0


def ratio_independence_bound(n: int, d: float, theta_n: float) -> float:
    """Hoffman-type bound n * (theta_n - d) / theta_n; trivial n if vacuous."""
    if theta_n <= d or theta_n <= 0:
        return float(n)
    return n * (theta_n - d) / theta_n


def bisection_and_bip_bounds(n: int, theta2: float, theta_n: float):
    """(bisection width lower bound, bipartite subgraph upper bound)."""
    return n * theta2 / 4.0, n * theta_n / 4.0


def rayleigh_quotient(graph, x) -> float:
    """Laplacian Rayleigh quotient of x projected against the constant vector.

    For a connected regular graph the value lies in [theta_2, theta_n].
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (graph.n,):
        raise BadParameter(f"vector length {x.shape} does not match n={graph.n}")
    y = x - x.mean()
    norm = float(np.linalg.norm(y))
    if norm < 1e-9 * max(1.0, float(np.linalg.norm(x))):
        raise ZeroVector("projection against the constant vector is numerically zero")
    us, vs = graph.edge_arrays()
    energy = float(((y[us] - y[vs]) ** 2).sum())
    return energy / (norm * norm)


def chromatic_lower_bound(n: int, alpha_upper: float) -> float:
    if alpha_upper <= 0:
        raise BadParameter("alpha upper bound must be positive")
    return n / alpha_upper


def ramanujan_check(summary: SpectralSummary, q: int, slack: float = 1e-6) -> bool:
    """lam <= 2*sqrt(q) up to float slack."""
    return summary.lam <= 2.0 * math.sqrt(q) + slack
