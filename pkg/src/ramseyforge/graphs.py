"""Graph families over finite fields, stored as immutable CSR adjacency.

Four families:
  * euclidean     D_q^m(a): vertices F_q^m, edges at quadrance a
  * noneuclidean  V_q(sigma, a): vertices the half-plane y != 0, edges at
                  Poincare distance a
  * bch           vertices GF(2)^{2k}, difference set {(z, z^3) : z != 0}
  * alon          vertices GF(2)^{3k}, difference set the sums
                  (w0, w0^3, w0^5) + (w1, w1^3, w1^5), w0 in W0, w1 in W1

Vertex codecs are frozen: euclidean index = sum x_i * q^i (coordinate 0 least
significant), half-plane index = x*(q-1) + (y-1), code-graph index = integer
value of the concatenated bitvector (first component least significant).
"""
import json
from bisect import bisect_left
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import limits
from .algebra import (
    GF2K_MODULI,
    gf2k_pow,
    is_odd_prime,
    modular_sqrts,
    quadratic_character,
)
from .errors import BadParameter, BadSigma, DegenerateDistance, SizeLimitExceeded


@dataclass(frozen=True)
class FamilySpec:
    """Which family a graph belongs to, with its parameters normalized."""

    kind: str
    q: Optional[int] = None
    m: Optional[int] = None
    a: Optional[int] = None
    sigma: Optional[int] = None
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind == "euclidean":
            if not is_odd_prime(self.q):
                raise BadParameter(f"q={self.q} is not an odd prime")
            m = self.m if self.m is not None else 2
            if m < 2:
                raise BadParameter(f"dimension m={m} must be >= 2")
            a = (self.a if self.a is not None else 1) % self.q
            if a == 0:
                raise BadParameter("a = 0 would put every vertex on its own sphere")
            object.__setattr__(self, "m", m)
            object.__setattr__(self, "a", a)
        elif self.kind == "noneuclidean":
            if not is_odd_prime(self.q):
                raise BadParameter(f"q={self.q} is not an odd prime")
            if self.sigma is None or quadratic_character(self.sigma, self.q) != -1:
                raise BadSigma(f"sigma={self.sigma} is not a non-square mod {self.q}")
            sigma = self.sigma % self.q
            a = (self.a if self.a is not None else 1) % self.q
            if a == 0 or a == (4 * sigma) % self.q:
                raise DegenerateDistance(f"a={a} is in {{0, 4*sigma}} mod {self.q}")
            object.__setattr__(self, "sigma", sigma)
            object.__setattr__(self, "a", a)
        elif self.kind == "bch":
            if self.k not in GF2K_MODULI:
                raise BadParameter(f"k={self.k} outside 2..8")
        elif self.kind == "alon":
            if self.k not in GF2K_MODULI:
                raise BadParameter(f"k={self.k} outside 2..8")
            if self.k % 3 == 0:
                raise BadParameter(f"k={self.k} divisible by 3: alpha -> alpha^7 is not a bijection")
        else:
            raise BadParameter(f"unknown family kind {self.kind!r}")

    @property
    def n(self) -> int:
        if self.kind == "euclidean":
            return self.q**self.m
        if self.kind == "noneuclidean":
            return self.q * (self.q - 1)
        if self.kind == "bch":
            return 1 << (2 * self.k)
        return 1 << (3 * self.k)

    def label(self) -> str:
        if self.kind == "euclidean":
            if self.m == 2:
                return f"D_{self.q}({self.a})"
            return f"D_{self.q}^{self.m}({self.a})"
        if self.kind == "noneuclidean":
            return f"V_{self.q}({self.sigma},{self.a})"
        if self.kind == "bch":
            return f"BCH_{self.k}"
        return f"ALON_{self.k}"

    def to_dict(self) -> dict:
        d = {"kind": self.kind}
        for field in ("q", "m", "a", "sigma", "k"):
            value = getattr(self, field)
            if value is not None:
                d[field] = value
        return d


class Graph:
    """Immutable undirected graph in CSR form with a vertex codec.

    Neighbor lists are sorted ascending, duplicate-free and loop-free;
    adjacency is symmetric by construction.
    """

    def __init__(self, family, n, indptr, indices, degree=None, meta=None):
        self.family = family
        self.n = int(n)
        self.indptr = indptr
        self.indices = indices
        self.degree = degree
        self.meta = meta or {}
        indptr.setflags(write=False)
        indices.setflags(write=False)

    @property
    def num_edges(self) -> int:
        return len(self.indices) // 2

    def neighbors(self, u: int) -> np.ndarray:
        return self.indices[self.indptr[u]:self.indptr[u + 1]]

    def degree_of(self, u: int) -> int:
        return int(self.indptr[u + 1] - self.indptr[u])

    @property
    def is_regular(self) -> bool:
        return self.degree is not None

    def adjacency_oracle(self, u: int, v: int) -> bool:
        """Membership test on the sorted neighbor list of u."""
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError(f"vertex out of range 0..{self.n - 1}")
        row = self.neighbors(u)
        pos = bisect_left(row, v)
        return pos < len(row) and row[pos] == v

    def edge_arrays(self):
        """All edges as (us, vs) with us < vs, in lexicographic order."""
        counts = np.diff(self.indptr)
        us = np.repeat(np.arange(self.n, dtype=np.int64), counts)
        vs = self.indices
        keep = us < vs
        return us[keep], vs[keep]

    def decode(self, idx: int):
        """Domain point for a vertex index."""
        fam = self.family
        if fam.kind == "euclidean":
            coords = []
            for _ in range(fam.m):
                coords.append(idx % fam.q)
                idx //= fam.q
            return tuple(coords)
        if fam.kind == "noneuclidean":
            return (idx // (fam.q - 1), idx % (fam.q - 1) + 1)
        return int(idx)

    def encode(self, point) -> int:
        fam = self.family
        if fam.kind == "euclidean":
            if len(point) != fam.m:
                raise BadParameter(f"point has dimension {len(point)}, expected {fam.m}")
            idx = 0
            for i, c in enumerate(point):
                idx += (c % fam.q) * fam.q**i
            return idx
        if fam.kind == "noneuclidean":
            x, y = point
            if y % fam.q == 0:
                raise BadParameter("half-plane points need y != 0")
            return (x % fam.q) * (fam.q - 1) + (y % fam.q) - 1
        return int(point)


def _check_size(n: int):
    cap = limits.max_vertices()
    if n > cap:
        raise SizeLimitExceeded(f"graph on {n} vertices exceeds the limit {cap}")


def _csr_from_rows(rows: np.ndarray) -> tuple:
    """CSR arrays from an (n, d) neighbor matrix; rows get sorted in place."""
    rows.sort(axis=1)
    n, d = rows.shape
    if d > 1 and (rows[:, 1:] == rows[:, :-1]).any():
        raise AssertionError("duplicate neighbor produced by a builder")
    indptr = np.arange(0, n * d + 1, d, dtype=np.int64)
    return indptr, rows.reshape(-1).astype(np.int64, copy=False)


def _csr_from_coo(n: int, us: np.ndarray, vs: np.ndarray) -> tuple:
    order = np.lexsort((vs, us))
    us, vs = us[order], vs[order]
    dup = (us[1:] == us[:-1]) & (vs[1:] == vs[:-1])
    if dup.any():
        raise AssertionError("duplicate edge entry produced by a builder")
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, us + 1, 1)
    np.cumsum(indptr, out=indptr)
    return indptr, vs.astype(np.int64, copy=False)


def euclidean_degree(q: int, m: int, a: int) -> int:
    """Number of points on the sphere Q(0, v) = a in F_q^m, a != 0.

    Odd m:  q^(m-1) + chi((-1)^((m-1)/2) * a) * q^((m-1)/2)
    Even m: q^(m-1) - chi((-1)^(m/2)) * q^((m-2)/2)
    """
    if a % q == 0:
        raise BadParameter("the sphere count formula needs a != 0")
    if m % 2 == 1:
        sign = quadratic_character(pow(-1, (m - 1) // 2, q) * a, q)
        return q ** (m - 1) + sign * q ** ((m - 1) // 2)
    sign = quadratic_character(pow(-1, m // 2, q), q)
    return q ** (m - 1) - sign * q ** ((m - 2) // 2)


def _coords_matrix(n: int, q: int, m: int) -> np.ndarray:
    idx = np.arange(n, dtype=np.int64)
    coords = np.empty((n, m), dtype=np.int64)
    for i in range(m):
        coords[:, i] = (idx // q**i) % q
    return coords


def build_euclidean(q: int, m: int = 2, a: int = 1) -> Graph:
    """Cayley graph on (F_q^m, +) whose connection set is the sphere Q = a."""
    family = FamilySpec(kind="euclidean", q=q, m=m, a=a)
    n = family.n
    _check_size(n)
    coords = _coords_matrix(n, q, m)
    sphere = np.flatnonzero((coords**2).sum(axis=1) % q == family.a)
    weights = q ** np.arange(m, dtype=np.int64)
    rows = np.empty((n, len(sphere)), dtype=np.int64)
    for col, s_idx in enumerate(sphere):
        rows[:, col] = ((coords + coords[s_idx]) % q) @ weights
    indptr, indices = _csr_from_rows(rows)
    expected = euclidean_degree(q, m, family.a)
    if len(sphere) != expected:
        raise AssertionError(f"sphere size {len(sphere)} != formula {expected}")
    return Graph(family, n, indptr, indices, degree=len(sphere))


def build_non_euclidean(q: int, sigma: int, a: int) -> Graph:
    """Graph on the finite half-plane with edges at Poincare distance a.

    d(z, w) = a unfolds to (x-u)^2 = a*y*v + sigma*(y-v)^2; for each (y, v)
    pair the right side is a constant whose square roots give the x-u offsets.
    """
    family = FamilySpec(kind="noneuclidean", q=q, sigma=sigma, a=a)
    n = family.n
    _check_size(n)
    sigma, a = family.sigma, family.a
    roots = modular_sqrts(q)
    xs = np.arange(q, dtype=np.int64)
    us_parts, vs_parts = [], []
    for y in range(1, q):
        for v in range(1, q):
            c = (a * y * v + sigma * (y - v) ** 2) % q
            for t in roots[c]:
                # edge ((u+t) mod q, y) -- (u, v) for every u
                src = ((xs + t) % q) * (q - 1) + (y - 1)
                dst = xs * (q - 1) + (v - 1)
                us_parts.append(src)
                vs_parts.append(dst)
    us = np.concatenate(us_parts)
    vs = np.concatenate(vs_parts)
    indptr, indices = _csr_from_coo(n, us, vs)
    degrees = np.diff(indptr)
    if degrees.min() != degrees.max() or degrees[0] != q + 1:
        raise AssertionError(f"half-plane graph is not (q+1)-regular: {set(np.unique(degrees))}")
    return Graph(family, n, indptr, indices, degree=q + 1)


def bch_connection_set(k: int) -> list:
    """Difference set {(z, z^3) : z != 0} packed as 2k-bit ints."""
    return [z | (gf2k_pow(z, 3, k) << k) for z in range(1, 1 << k)]


def alon_split(k: int) -> tuple:
    """Partition of GF(2^k)* by bit k-1 of alpha^7: (W0, W1)."""
    w0, w1 = [], []
    for alpha in range(1, 1 << k):
        high = (gf2k_pow(alpha, 7, k) >> (k - 1)) & 1
        (w1 if high else w0).append(alpha)
    return w0, w1


def alon_connection_set(k: int) -> list:
    """Deduplicated sums (w0, w0^3, w0^5) + (w1, w1^3, w1^5) as 3k-bit ints."""
    w0s, w1s = alon_split(k)

    def pack(w):
        return w | (gf2k_pow(w, 3, k) << k) | (gf2k_pow(w, 5, k) << (2 * k))

    sums = {pack(w0) ^ pack(w1) for w0 in w0s for w1 in w1s}
    return sorted(sums)


def _build_xor_cayley(family: FamilySpec, conn: list) -> Graph:
    n = family.n
    _check_size(n)
    verts = np.arange(n, dtype=np.int64)
    rows = verts[:, None] ^ np.asarray(conn, dtype=np.int64)[None, :]
    indptr, indices = _csr_from_rows(rows)
    return Graph(family, n, indptr, indices, degree=len(conn))


def build_code_graph_bch(k: int) -> Graph:
    """Cayley graph on GF(2)^{2k} with connection set {(z, z^3)}; (2^k - 1)-regular."""
    family = FamilySpec(kind="bch", k=k)
    return _build_xor_cayley(family, bch_connection_set(k))


def build_code_graph_alon(k: int) -> Graph:
    """Cayley graph on GF(2)^{3k} over the W0 + W1 sum set.

    The claimed degree 2^(k-1) * (2^(k-1) - 1) is checked against the actual
    deduplicated sum count; a mismatch is recorded in meta, not an error.
    """
    family = FamilySpec(kind="alon", k=k)
    conn = alon_connection_set(k)
    w0s, w1s = alon_split(k)
    claimed = (1 << (k - 1)) * ((1 << (k - 1)) - 1)
    graph = _build_xor_cayley(family, conn)
    graph.meta.update(
        {
            "w0_size": len(w0s),
            "w1_size": len(w1s),
            "sum_set_size": len(conn),
            "sum_set_claimed": claimed,
            "sum_set_matches_claim": len(conn) == claimed,
        }
    )
    return graph


def build_family(family: FamilySpec) -> Graph:
    if family.kind == "euclidean":
        return build_euclidean(family.q, family.m, family.a)
    if family.kind == "noneuclidean":
        return build_non_euclidean(family.q, family.sigma, family.a)
    if family.kind == "bch":
        return build_code_graph_bch(family.k)
    return build_code_graph_alon(family.k)


def graph_from_edges(n: int, edges) -> Graph:
    """Ad-hoc graph (family None) from an iterable of (u, v) pairs."""
    pairs = {(min(u, v), max(u, v)) for u, v in edges}
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise BadParameter(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise BadParameter(f"loop at vertex {u}")
    us = np.fromiter((u for u, _ in pairs), dtype=np.int64, count=len(pairs))
    vs = np.fromiter((v for _, v in pairs), dtype=np.int64, count=len(pairs))
    indptr, indices = _csr_from_coo(
        n, np.concatenate([us, vs]), np.concatenate([vs, us])
    )
    degrees = np.diff(indptr)
    degree = int(degrees[0]) if n and degrees.min() == degrees.max() else None
    return Graph(None, n, indptr, indices, degree=degree)


def export_graph(graph: Graph, fmt: str) -> bytes:
    """Serialize as DIMACS ('p edge n m', 1-based 'e u v') or edge JSON lines."""
    us, vs = graph.edge_arrays()
    if fmt == "dimacs":
        lines = [f"p edge {graph.n} {len(us)}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in zip(us.tolist(), vs.tolist()))
        return ("\n".join(lines) + "\n").encode()
    if fmt == "edge-jsonl":
        lines = []
        for u, v in zip(us.tolist(), vs.tolist()):
            pu, pv = graph.decode(u), graph.decode(v)
            pu = list(pu) if isinstance(pu, tuple) else pu
            pv = list(pv) if isinstance(pv, tuple) else pv
            lines.append(json.dumps({"u": u, "v": v, "pu": pu, "pv": pv}))
        return ("\n".join(lines) + "\n").encode()
    raise BadParameter(f"unknown export format {fmt!r}")
