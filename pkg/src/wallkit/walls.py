"""Wall decisions for divisor classes with negative square.

A divisor D with q(D) < 0 is a wall divisor exactly when the saturation T
of span{v, D} inside the ambient rank-3 lattice contains a vector s with

  (i)   0 <= q(s) < b(s, v) <= (q(v) + q(s)) / 2, or
  (ii)  epsilon = 0,  q(s) = -2,  0 <= b(s, v) <= q(v) / 2.

Everything below is exact integer arithmetic; the brute-force box oracle
re-derives witness sets independently of the line-by-line enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from . import intmat
from .model import (
    CurveClass,
    DivisorClass,
    DomainError,
    SurfaceContext,
    ambient_gram,
    divisor_divisibility,
    embed_divisor,
    moduli_vector,
)

Gram2 = list[list[int]]


@dataclass(frozen=True)
class Witness:
    coords: tuple[int, int]  # in the basis carried by the span lattice
    q: int
    b: int                   # pairing with the distinguished vector v
    branch: str              # "case_i" or "case_ii"

    def sort_key(self) -> tuple:
        return (self.branch, self.b, self.q, self.coords)


@dataclass(frozen=True)
class SpanLattice:
    """Saturation of span{v, D}, presented in a basis (w, v)."""

    gram: tuple[tuple[int, int], tuple[int, int]]
    v_coords: tuple[int, int]
    basis: tuple[tuple[int, int, int], tuple[int, int, int]]
    index: int               # index of span{v, D} inside its saturation


@dataclass(frozen=True)
class WallVerdict:
    is_wall: bool
    branch: str | None       # witness branch; "nonnegative-square" when q >= 0
    divisor: DivisorClass    # primitive integral representative
    divisor_div: int
    q_divisor: Fraction
    span: SpanLattice | None
    witnesses: tuple[Witness, ...]
    witness_ambient: tuple[int, int, int] | None
    oracle_agrees: bool | None = None

    @property
    def witness(self) -> Witness | None:
        return self.witnesses[0] if self.witnesses else None

    @property
    def t_gram(self) -> tuple[tuple[int, int], tuple[int, int]] | None:
        return self.span.gram if self.span is not None else None


def primitive_dual_divisor(curve: CurveClass,
                           ctx: SurfaceContext) -> tuple[DivisorClass, int]:
    """Primitive integral divisor class D proportional to the curve class,
    together with div(D); D / div(D) is q-dual to the curve."""
    x, y = curve.l, curve.r
    if x == 0 and y == 0:
        raise DomainError("curve class must be nonzero")
    g = gcd(ctx.ek_div * x, y)
    d = DivisorClass(Fraction(ctx.ek_div * x, g), Fraction(y, g))
    return d, divisor_divisibility(d, ctx)


def _coords_in_basis(vec: tuple[int, int, int],
                     basis: tuple[tuple[int, int, int], ...]) -> tuple[int, int]:
    """Integer coordinates of vec in a rank-2 basis of a rank-3 lattice."""
    b1, b2 = basis
    for i in range(3):
        for j in range(i + 1, 3):
            det = b1[i] * b2[j] - b1[j] * b2[i]
            if det == 0:
                continue
            x_num = vec[i] * b2[j] - vec[j] * b2[i]
            y_num = b1[i] * vec[j] - b1[j] * vec[i]
            if x_num % det or y_num % det:
                break
            x, y = x_num // det, y_num // det
            if all(x * b1[t] + y * b2[t] == vec[t] for t in range(3)):
                return x, y
            break
    raise AssertionError(f"{vec} is not an integer combination of {basis}")


def saturated_span(divisor: DivisorClass, ctx: SurfaceContext) -> SpanLattice:
    """Saturation T of span{v, D} with D embedded in the rank-3 model.

    The result is presented in a basis (w, v) with 0 <= b(w, v) <= q(v)/2,
    which pins the Gram matrix [[q(w), b], [b, q(v)]] uniquely.
    """
    if divisor.square(ctx) >= 0:
        raise DomainError(
            f"wall test needs q(D) < 0, got q(D) = {divisor.square(ctx)}")
    v = moduli_vector(ctx)
    d3 = embed_divisor(divisor, ctx)
    amb = ambient_gram(ctx)
    basis, index = intmat.saturate([list(v), list(d3)])
    rows = tuple(tuple(r) for r in basis)
    gram_t = intmat.gram_matrix([list(r) for r in rows], amb)
    vx, vy = _coords_in_basis(v, rows)
    assert gcd(vx, vy) == 1
    _, a, b = intmat.xgcd(vx, vy)
    w0 = (b, -a)  # det [[w0], [v]] = b*vy + a*vx = 1

    def pair(s: tuple[int, int], t: tuple[int, int]) -> int:
        return sum(s[i] * gram_t[i][j] * t[j] for i in range(2) for j in range(2))

    qv = pair((vx, vy), (vx, vy))
    b0 = pair(w0, (vx, vy))
    b_red = b0 % qv
    if 2 * b_red > qv:
        sign, t = -1, (qv - b_red + b0) // qv
        b_fin = qv - b_red
    else:
        sign, t = 1, (b_red - b0) // qv
        b_fin = b_red
    w = (sign * w0[0] + t * vx, sign * w0[1] + t * vy)
    assert pair(w, (vx, vy)) == b_fin
    qw = pair(w, w)
    w3 = tuple(w[0] * rows[0][i] + w[1] * rows[1][i] for i in range(3))
    return SpanLattice(
        gram=((qw, b_fin), (b_fin, qv)),
        v_coords=(0, 1),
        basis=(w3, v),
        index=index,
    )


def _pairing_with(gram: Gram2, v: tuple[int, int]) -> tuple[int, int]:
    return (gram[0][0] * v[0] + gram[0][1] * v[1],
            gram[1][0] * v[0] + gram[1][1] * v[1])


def _check_span_signature(gram: Gram2, v: tuple[int, int]) -> int:
    det = gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0]
    if det >= 0:
        raise DomainError(f"span lattice must be hyperbolic, det = {det}")
    qv = (v[0] * gram[0][0] + v[1] * gram[1][0]) * v[0] + \
         (v[0] * gram[0][1] + v[1] * gram[1][1]) * v[1]
    if qv <= 0:
        raise DomainError(f"distinguished vector must have q > 0, got {qv}")
    return qv


def _line_solutions(c: tuple[int, int], n: int,
                    gram: Gram2) -> tuple[tuple[int, int], tuple[int, int]]:
    """Particular solution s0 of b(s, v) = n and the primitive direction u
    of the solution line (b(u, v) = 0)."""
    d, x0, y0 = intmat.xgcd(c[0], c[1])
    m = n // d
    s0 = (x0 * m, y0 * m)
    u = (-(c[1] // d), c[0] // d)
    return s0, u


def _q_of(gram: Gram2, s: tuple[int, int]) -> int:
    return (gram[0][0] * s[0] + 2 * gram[0][1] * s[1]) * s[0] + gram[1][1] * s[1] * s[1]


def _ts_with_q_at_least(qu: int, b0: int, q0: int, lo: int) -> range:
    """Integer t with q(s0 + t*u) >= lo; qu < 0 so this is a bounded range."""
    # q(s0 + t*u) = qu*t^2 + 2*b0*t + q0
    disc = b0 * b0 - qu * (q0 - lo)
    if disc < 0:
        return range(0)
    r = isqrt(disc)
    t_min = (-b0 + r) // qu - 2
    t_max = (-b0 - r) // qu + 2
    return range(t_min, t_max + 1)


def enumerate_witnesses(gram: Gram2, v: tuple[int, int],
                        epsilon: int) -> list[Witness]:
    """All witnesses in the rank-2 lattice (complete, exact).

    Works line by line: for each admissible value n of b(s, v), the set
    {s : b(s, v) = n} is s0 + Z*u with q negative on u, so q restricted to
    the line is a downward parabola and each q-window cuts out finitely
    many integer points.
    """
    qv = _check_span_signature(gram, v)
    c = _pairing_with(gram, v)
    d = gcd(c[0], c[1])
    found: list[Witness] = []

    for n in range(1, qv):
        if n % d:
            continue
        s0, u = _line_solutions(c, n, gram)
        qu = _q_of(gram, u)
        assert qu < 0
        b0 = sum(s0[i] * gram[i][j] * u[j] for i in range(2) for j in range(2))
        q0 = _q_of(gram, s0)
        lo, hi = max(0, 2 * n - qv), n - 1
        if lo > hi:
            continue
        for t in _ts_with_q_at_least(qu, b0, q0, lo):
            qs = qu * t * t + 2 * b0 * t + q0
            if lo <= qs <= hi:
                s = (s0[0] + t * u[0], s0[1] + t * u[1])
                found.append(Witness(s, qs, n, "case_i"))

    if epsilon == 0:
        for n in range(0, qv // 2 + 1):
            if n % d:
                continue
            s0, u = _line_solutions(c, n, gram)
            qu = _q_of(gram, u)
            b0 = sum(s0[i] * gram[i][j] * u[j]
                     for i in range(2) for j in range(2))
            q0 = _q_of(gram, s0)
            for t in _ts_with_q_at_least(qu, b0, q0, -2):
                if qu * t * t + 2 * b0 * t + q0 == -2:
                    s = (s0[0] + t * u[0], s0[1] + t * u[1])
                    found.append(Witness(s, -2, n, "case_ii"))

    found.sort(key=Witness.sort_key)
    return found


def _witness_conditions(qs: int, n: int, qv: int, epsilon: int) -> str | None:
    if 0 <= qs < n and 2 * n <= qv + qs:
        return "case_i"
    if epsilon == 0 and qs == -2 and 0 <= 2 * n <= qv:
        return "case_ii"
    return None


def box_witnesses(gram: Gram2, v: tuple[int, int], epsilon: int,
                  radius: int | None = None) -> list[Witness]:
    """Brute-force witness search over a box that provably contains all
    witnesses; serves as an independent oracle for enumerate_witnesses."""
    qv = _check_span_signature(gram, v)
    c = _pairing_with(gram, v)
    if radius is None:
        d = gcd(c[0], c[1])
        u = (-(c[1] // d), c[0] // d)
        qu = _q_of(gram, u)
        bound = 0
        for i in range(2):
            num = (qv + 2) * u[i] * u[i]
            beta_i = isqrt((num + abs(qu) - 1) // abs(qu)) + 1
            bound = max(bound, abs(v[i]) + beta_i)
        radius = 2 * bound
    found = []
    for x in range(-radius, radius + 1):
        for y in range(-radius, radius + 1):
            s = (x, y)
            qs = _q_of(gram, s)
            n = c[0] * x + c[1] * y
            branch = _witness_conditions(qs, n, qv, epsilon)
            if branch is not None:
                found.append(Witness(s, qs, n, branch))
    found.sort(key=Witness.sort_key)
    return found


def primitive_integral_divisor(divisor: DivisorClass,
                               ctx: SurfaceContext) -> DivisorClass:
    """Primitive integral class positively proportional to the input."""
    a, b = Fraction(divisor.l), Fraction(divisor.e)
    if a == 0 and b == 0:
        raise DomainError("divisor class must be nonzero")
    m = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    x, y = int(a * m), int(b * m)
    g = gcd(x, y)
    return DivisorClass(Fraction(x, g), Fraction(y, g))


def mbm_bound_check(curve: CurveClass, ctx: SurfaceContext) -> bool:
    """Exact comparison q(R) >= -(k + 3 - 2*epsilon)/2."""
    bound = Fraction(-(ctx.k + 3 - 2 * ctx.epsilon), 2)
    return curve.square(ctx) >= bound


def wall_test(obj: CurveClass | DivisorClass, ctx: SurfaceContext,
              with_oracle: bool = False) -> WallVerdict:
    """Decide whether the (divisor dual to the) given class spans a wall."""
    if isinstance(obj, CurveClass):
        divisor, div = primitive_dual_divisor(obj, ctx)
    else:
        divisor = primitive_integral_divisor(obj, ctx)
        div = divisor_divisibility(divisor, ctx)
    q_d = divisor.square(ctx)
    if q_d >= 0:
        return WallVerdict(False, "nonnegative-square", divisor, div, q_d,
                           None, (), None)
    span = saturated_span(divisor, ctx)
    gram = [list(r) for r in span.gram]
    witnesses = tuple(enumerate_witnesses(gram, span.v_coords, ctx.epsilon))
    agrees = None
    if with_oracle:
        agrees = witnesses == tuple(box_witnesses(gram, span.v_coords,
                                                  ctx.epsilon))
    ambient = None
    if witnesses:
        s = witnesses[0].coords
        ambient = tuple(s[0] * span.basis[0][i] + s[1] * span.basis[1][i]
                        for i in range(3))
    branch = witnesses[0].branch if witnesses else None
    return WallVerdict(bool(witnesses), branch, divisor, div, q_d, span,
                       witnesses, ambient, agrees)
