"""GL2(Z) classification of nondegenerate rank-2 integer Gram matrices.

A Gram matrix [[A, B], [B, C]] corresponds to the quadratic form
A x^2 + 2B xy + C y^2 (even middle coefficient), and two Gram matrices are
isometric iff the forms are equivalent under GL2(Z).  Three regimes:

* definite (det > 0): classical Gauss reduction, unique reduced triple;
* indefinite anisotropic (det < 0, -det not a square): reduced-cycle method,
  canonical representative = lexicographic minimum over the cycles of the
  form and its middle-sign flip;
* indefinite isotropic (-det a perfect square sigma^2): classified by the
  pair of residues q(w) mod 2*sigma attached to the two isotropic lines.
"""

from __future__ import annotations

from math import gcd, isqrt

Gram = list[list[int]]

_MAX_REDUCTION_STEPS = 100000


class DegenerateFormError(ValueError):
    """The Gram matrix is singular; no isometry class is defined."""


def _check_gram(g: Gram) -> tuple[int, int, int]:
    if len(g) != 2 or any(len(row) != 2 for row in g):
        raise ValueError("expected a 2x2 Gram matrix")
    a, b, b2, c = g[0][0], g[0][1], g[1][0], g[1][1]
    if b != b2:
        raise ValueError("Gram matrix must be symmetric")
    if a * c - b * b == 0:
        raise DegenerateFormError("Gram matrix is degenerate")
    return a, b, c


def _reduce_definite(a: int, b: int, c: int) -> tuple[int, int, int]:
    # Positive definite form (a, b, c), b even; returns the GL2-reduced
    # triple with 0 <= b <= a <= c.
    while True:
        if c < a:
            a, b, c = c, -b, a
            continue
        if abs(b) > a:
            d = b * b - 4 * a * c
            r = b % (2 * a)
            if r > a:
                r -= 2 * a
            c = (r * r - d) // (4 * a)
            b = r
            continue
        break
    return a, abs(b), c


def _indef_rho(a: int, b: int, c: int, d: int, s: int) -> tuple[int, int, int]:
    # One reduction step for an indefinite form of nonsquare discriminant d
    # (s = isqrt(d)).
    m = 2 * abs(c)
    r = (-b) % m
    if abs(c) > s:
        if r > abs(c):
            r -= m
    else:
        r = s - (s - r) % m
    return c, r, (r * r - d) // (4 * c)


def _indef_is_reduced(a: int, b: int, c: int, s: int) -> bool:
    # 0 < b < sqrt(d) and |sqrt(d) - 2|a|| < b, with sqrt(d) irrational.
    return 0 < b <= s and b >= s + 1 - 2 * abs(a) and b >= 2 * abs(a) - s


def _indef_cycle(a: int, b: int, c: int, d: int) -> list[tuple[int, int, int]]:
    # Reduce, then walk the full cycle of reduced forms.
    s = isqrt(d)
    steps = 0
    while not _indef_is_reduced(a, b, c, s):
        a, b, c = _indef_rho(a, b, c, d, s)
        steps += 1
        if steps > _MAX_REDUCTION_STEPS:
            raise RuntimeError("indefinite reduction did not terminate")
    first = (a, b, c)
    cycle = [first]
    while True:
        a, b, c = _indef_rho(a, b, c, d, s)
        if (a, b, c) == first:
            return cycle
        cycle.append((a, b, c))
        if len(cycle) > _MAX_REDUCTION_STEPS:
            raise RuntimeError("reduced cycle did not close")


def _primitive(x: int, y: int) -> tuple[int, int]:
    g = gcd(x, y)
    x, y = x // g, y // g
    if x < 0 or (x == 0 and y < 0):
        x, y = -x, -y
    return x, y


def _isotropic_lines(a: int, b: int, c: int, sigma: int) -> list[tuple[int, int]]:
    # Primitive representatives of the two isotropic lines of
    # q(x, y) = a x^2 + 2b xy + c y^2 with b^2 - ac = sigma^2 > 0.
    if a == 0:
        lines = [(1, 0), _primitive(-c, 2 * b)]
    else:
        lines = [_primitive(-b + sigma, a), _primitive(-b - sigma, a)]
    assert lines[0] != lines[1]
    return lines


def _line_residue(g: Gram, u: tuple[int, int], sigma: int) -> int:
    # Complete the primitive isotropic u to a basis (u, w); q(w) mod 2*sigma
    # only depends on the line spanned by u.
    _g, x, y = xgcd_pair(u)
    w = (-y, x)
    bw = (u[0] * g[0][0] + u[1] * g[1][0]) * w[0] + (u[0] * g[0][1] + u[1] * g[1][1]) * w[1]
    assert abs(bw) == sigma
    qw = g[0][0] * w[0] * w[0] + 2 * g[0][1] * w[0] * w[1] + g[1][1] * w[1] * w[1]
    return qw % (2 * sigma)


def xgcd_pair(u: tuple[int, int]) -> tuple[int, int, int]:
    """(g, x, y) with x*u0 + y*u1 == g == gcd(u0, u1)."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = u[0], u[1]
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def canonical_form(g: Gram) -> tuple:
    """Canonical invariant of the GL2(Z) isometry class of a Gram matrix.

    Two nondegenerate symmetric 2x2 integer matrices are isometric iff their
    canonical forms are equal.
    """
    a, b, c = _check_gram(g)
    delta = a * c - b * b
    if delta > 0:
        if a > 0:
            return ("posdef",) + _reduce_definite(a, 2 * b, c)
        return ("negdef",) + _reduce_definite(-a, -2 * b, -c)
    d = -4 * delta  # form discriminant (2b)^2 - 4ac > 0
    sigma = isqrt(-delta)
    if sigma * sigma == -delta:
        residues = sorted(_line_residue(g, u, sigma)
                          for u in _isotropic_lines(a, b, c, sigma))
        return ("isotropic", sigma, residues[0], residues[1])
    best = min(min(_indef_cycle(a, 2 * b, c, d)),
               min(_indef_cycle(a, -2 * b, c, d)))
    return ("indef",) + best


def rank2_isometric(g1: Gram, g2: Gram) -> bool:
    """Decide whether two nondegenerate 2x2 Gram matrices are isometric."""
    a1, b1, c1 = _check_gram(g1)
    a2, b2, c2 = _check_gram(g2)
    if a1 * c1 - b1 * b1 != a2 * c2 - b2 * b2:
        return False
    return canonical_form(g1) == canonical_form(g2)


def class_id(g: Gram) -> str:
    """Stable string identifier for the isometry class of a Gram matrix."""
    return ":".join(str(part) for part in canonical_form(g))
