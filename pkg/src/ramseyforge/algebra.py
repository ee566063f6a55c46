"""Arithmetic over F_q, its quadratic extension, and GF(2^k).

Field elements are plain ints reduced mod q.  Points in F_q^m are int tuples.
Elements of F_q(sqrt(sigma)) are pairs (x, y) meaning x + y*sqrt(sigma).
GF(2^k) elements are ints whose bit i is the coefficient of x^i in the
polynomial basis fixed by GF2K_MODULI.
"""
import math

from .errors import (
    BadParameter,
    DimensionMismatch,
    NotInHalfPlane,
    SingularMatrix,
    ZeroParameter,
)

# Irreducible moduli for GF(2^k), bit i = coefficient of x^i.
GF2K_MODULI = {
    2: 0b111,          # x^2 + x + 1
    3: 0b1011,         # x^3 + x + 1
    4: 0b10011,        # x^4 + x + 1
    5: 0b100101,       # x^5 + x^2 + 1
    6: 0b1000011,      # x^6 + x + 1
    7: 0b10000011,     # x^7 + x + 1
    8: 0b100011011,    # x^8 + x^4 + x^3 + x + 1
}


def is_odd_prime(q: int) -> bool:
    if q < 3 or q % 2 == 0:
        return False
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def mod_inv(a: int, q: int) -> int:
    """Multiplicative inverse of a mod q."""
    a %= q
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {q}")
    return pow(a, -1, q)


def quadratic_character(a: int, q: int) -> int:
    """chi(a): +1 for a nonzero square, 0 at 0, -1 for a non-square.

    Euler's criterion: a^((q-1)/2) is 1 exactly on the nonzero squares.
    """
    a %= q
    if a == 0:
        return 0
    return 1 if pow(a, (q - 1) // 2, q) == 1 else -1


def find_nonsquare(q: int) -> int:
    """Smallest non-square >= 2 modulo the odd prime q."""
    for s in range(2, q):
        if quadratic_character(s, q) == -1:
            return s
    raise BadParameter(f"no non-square mod {q}; q must be an odd prime")


def find_generator(q: int) -> int:
    """Smallest primitive root modulo the odd prime q."""
    order = q - 1
    factors = []
    rest, f = order, 2
    while f * f <= rest:
        if rest % f == 0:
            factors.append(f)
            while rest % f == 0:
                rest //= f
        f += 1
    if rest > 1:
        factors.append(rest)
    for g in range(2, q):
        if all(pow(g, order // p, q) != 1 for p in factors):
            return g
    raise BadParameter(f"no generator mod {q}; q must be an odd prime")


def quadrance(x_pt, y_pt, q: int) -> int:
    """Sum of squared coordinate differences of two points in F_q^m."""
    if len(x_pt) != len(y_pt):
        raise DimensionMismatch(f"points of dimension {len(x_pt)} and {len(y_pt)}")
    return sum((xc - yc) ** 2 for xc, yc in zip(x_pt, y_pt)) % q


def circle_points(center, k: int, q: int):
    """All points of F_q^2 at quadrance k from center, as a set of tuples."""
    cx, cy = center
    return {
        (x, y)
        for x in range(q)
        for y in range(q)
        if ((x - cx) ** 2 + (y - cy) ** 2) % q == k % q
    }


def predicted_intersections(i: int, j: int, k: int, q: int) -> int:
    """Intersection count of two circles of radii i, j with centers at quadrance k.

    Evaluates f(i,j,k) = i*j - (k-i-j)^2/4 and maps its character to 0/1/2.
    """
    if i % q == 0 or j % q == 0 or k % q == 0:
        raise ZeroParameter("i, j, k must all be nonzero")
    f = (i * j - (k - i - j) ** 2 * mod_inv(4, q)) % q
    return quadratic_character(f, q) + 1


def predicted_intersections_null(i: int, j: int, q: int) -> int:
    """Intersection count when the centers are distinct but at quadrance 0."""
    if i % q == 0 or j % q == 0:
        raise ZeroParameter("i, j must be nonzero")
    return 0 if i % q == j % q else 1


def count_intersections_bruteforce(x_pt, y_pt, i: int, j: int, q: int) -> int:
    """|C_i(X) ∩ C_j(Y)| by exhaustive scan of F_q^2."""
    if len(x_pt) != 2 or len(y_pt) != 2:
        raise DimensionMismatch("circle intersection is a planar operation")
    count = 0
    for px in range(q):
        for py in range(q):
            p = (px, py)
            if quadrance(p, x_pt, q) == i % q and quadrance(p, y_pt, q) == j % q:
                count += 1
    return count


# --- quadratic extension F_q(sqrt(sigma)) -----------------------------------

def quad_add(z, w, q):
    return ((z[0] + w[0]) % q, (z[1] + w[1]) % q)


def quad_sub(z, w, q):
    return ((z[0] - w[0]) % q, (z[1] - w[1]) % q)


def quad_mul(z, w, sigma, q):
    x1, y1 = z
    x2, y2 = w
    return ((x1 * x2 + sigma * y1 * y2) % q, (x1 * y2 + x2 * y1) % q)


def quad_conj(z, q):
    return (z[0] % q, -z[1] % q)


def quad_norm(z, sigma, q) -> int:
    """N(x + y*sqrt(sigma)) = x^2 - sigma*y^2."""
    x, y = z
    return (x * x - sigma * y * y) % q


def quad_inv(z, sigma, q):
    n = quad_norm(z, sigma, q)
    if n == 0:
        raise ZeroDivisionError("element of norm 0 has no inverse")
    ninv = mod_inv(n, q)
    return ((z[0] * ninv) % q, (-z[1] * ninv) % q)


def poincare_distance(z, w, sigma: int, q: int) -> int:
    """d(z, w) = N(z - w) / (Im z * Im w) on the half-plane y != 0."""
    if z[1] % q == 0 or w[1] % q == 0:
        raise NotInHalfPlane("both points need nonzero imaginary part")
    num = quad_norm(quad_sub(z, w, q), sigma, q)
    return (num * mod_inv(z[1] * w[1], q)) % q


def mobius_action(g, z, sigma: int, q: int):
    """Apply a GL(2, F_q) matrix to z via (a*z + b) / (c*z + d).

    The result stays in the half-plane: its imaginary part is
    y * det(g) / N(c*z + d), and both factors are nonzero.
    """
    (a, b), (c, d) = ((int(v) for v in row) for row in g)
    if (a * d - b * c) % q == 0:
        raise SingularMatrix("matrix has determinant 0")
    if z[1] % q == 0:
        raise NotInHalfPlane("z must have nonzero imaginary part")
    num = ((a * z[0] + b) % q, (a * z[1]) % q)
    den = ((c * z[0] + d) % q, (c * z[1]) % q)
    return quad_mul(num, quad_inv(den, sigma, q), sigma, q)


# --- GF(2^k) -----------------------------------------------------------------

def gf2k_add(a: int, b: int) -> int:
    """Addition in GF(2^k) is bitwise XOR."""
    return a ^ b


def gf2k_mul(a: int, b: int, k: int) -> int:
    """Carry-less product reduced mod the table polynomial for GF(2^k)."""
    if k not in GF2K_MODULI:
        raise BadParameter(f"no modulus table entry for k={k}")
    mod = GF2K_MODULI[k]
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> k) & 1:
            a ^= mod
    return r


def gf2k_pow(a: int, e: int, k: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = gf2k_mul(r, a, k)
        a = gf2k_mul(a, a, k)
        e >>= 1
    return r


def modular_sqrts(q: int):
    """roots[r] = sorted list of t in F_q with t^2 = r, by exhaustive search.

    Intended for moderate q (say q <= 10^4); builders and tests only.
    """
    roots = [[] for _ in range(q)]
    for t in range(q):
        roots[(t * t) % q].append(t)
    return roots
