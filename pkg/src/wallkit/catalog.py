"""Catalog of rank-2 wall lattices reachable from the minimal-square seeds.

Each entry records a Gram matrix [[q(w), b], [b, q(v)]] together with the
parameters (p, delta) realizing it, the curve square, and the wall verdict.
Two moves generate the catalog from the seed: adding a node (delta + 1,
top-left + 2, off-diagonal - 1) and dropping the genus (p - 1,
off-diagonal - 1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable

from . import binforms
from .curves import BNParams, curve_class, curve_square, exists_pencil
from .model import DomainError
from .walls import wall_test

Gram = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class CatalogEntry:
    epsilon: int
    k: int
    p: int
    delta: int
    gram: Gram
    q_curve: Fraction
    is_wall: bool
    witness: tuple[int, int, int] | None  # ambient coordinates
    class_id: str | None                  # None when the gram is degenerate
    verified: bool
    note: str | None = None


def seed_lattice(k: int, epsilon: int) -> tuple[Gram, int, int]:
    """Seed Gram with its realizing (p, delta) = (2k-2+5*epsilon, 0)."""
    if k < 2 or epsilon not in (0, 1):
        raise DomainError(f"need k >= 2 and epsilon in {{0, 1}}, got ({k}, {epsilon})")
    h = k - 1 + 2 * epsilon
    gram = ((-2 + 2 * epsilon, h), (h, 2 * h))
    return gram, 2 * k - 2 + 5 * epsilon, 0


def delta_move(gram: Gram, p: int, delta: int) -> tuple[Gram, int, int]:
    """One extra node: top-left + 2, off-diagonal - 1, same p."""
    (a, b), (_, c) = gram
    return ((a + 2, b - 1), (b - 1, c)), p, delta + 1


def genus_move(gram: Gram, p: int, delta: int) -> tuple[Gram, int, int]:
    """One genus lower: off-diagonal - 1, same delta."""
    (a, b), (_, c) = gram
    return ((a, b - 1), (b - 1, c)), p - 1, delta


def _entry_for(gram: Gram, p: int, delta: int, k: int,
               epsilon: int) -> CatalogEntry:
    params = BNParams(p, delta, k, epsilon)
    q_r = curve_square(params).value
    try:
        class_id = binforms.class_id([list(r) for r in gram])
    except binforms.DegenerateFormError:
        class_id = None
    if q_r < 0:
        verdict = wall_test(curve_class(params), params.context())
        verified = (verdict.is_wall
                    and verdict.t_gram is not None
                    and binforms.rank2_isometric(
                        [list(r) for r in verdict.t_gram],
                        [list(r) for r in gram]))
        return CatalogEntry(epsilon, k, p, delta, gram, q_r,
                            verdict.is_wall, verdict.witness_ambient,
                            class_id, verified)
    return CatalogEntry(epsilon, k, p, delta, gram, q_r, False, None,
                        class_id, False, note="not a wall (square >= 0)")


def generate_catalog(k: int, epsilon: int, p_min: int = 2,
                     p_max: int | None = None,
                     delta_max: int | None = None) -> list[CatalogEntry]:
    """All move-reachable entries within the ranges, one per isometry class.

    Range violations (p < 2 or delta > p - 2*epsilon) prune eagerly: both
    moves shrink p - delta, so an invalid state never becomes valid again.
    The pencil-existence bound is checked per entry after generation.
    """
    seed_gram, seed_p, _ = seed_lattice(k, epsilon)
    if p_max is None or p_max > seed_p:
        p_max = seed_p
    p_min = max(p_min, 2)
    states = []
    p = seed_p
    gram: Gram = seed_gram
    while p >= p_min:
        if p <= p_max:
            # delta-chain at this genus
            g, pp, d = gram, p, 0
            while d <= (p - 2 * epsilon if delta_max is None
                        else min(delta_max, p - 2 * epsilon)):
                states.append((g, pp, d))
                g, pp, d = delta_move(g, pp, d)
        gram, p, _ = genus_move(gram, p, 0)
    states.sort(key=lambda s: (s[2], -s[1]))

    entries: list[CatalogEntry] = []
    seen: set = set()
    for g, pp, d in states:
        if not exists_pencil(BNParams(pp, d, k, epsilon)):
            continue
        entry = _entry_for(g, pp, d, k, epsilon)
        key = entry.class_id if entry.class_id is not None \
            else ("degenerate", entry.gram)
        if key in seen:
            continue
        seen.add(key)
        entries.append(entry)
    return entries


def realize_gram(target: Gram, k: int, epsilon: int) -> tuple[int, int] | None:
    """Invert the move arithmetic: (p, delta) whose saturation is isometric
    to the target, verified by reconstruction; None when unrealizable."""
    (a, b), (b2, c) = target
    if b != b2:
        raise DomainError(f"gram must be symmetric, got {target}")
    if c != 2 * k - 2 + 4 * epsilon:
        raise DomainError(
            f"corner must equal 2k-2+4*epsilon = {2 * k - 2 + 4 * epsilon}, got {c}")
    if a % 2 or c % 2:
        raise DomainError(f"diagonal entries must be even, got {target}")
    delta = (a + 2 - 2 * epsilon) // 2
    p = b + delta + k - 1 + 3 * epsilon
    if delta < 0 or p < 2 or delta > p - 2 * epsilon:
        return None
    params = BNParams(p, delta, k, epsilon)
    if not exists_pencil(params):
        return None
    if curve_square(params).value >= 0:
        return None
    verdict = wall_test(curve_class(params), params.context())
    if verdict.t_gram is None or not binforms.rank2_isometric(
            [list(r) for r in verdict.t_gram], [list(r) for r in target]):
        return None
    return p, delta


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, n + 1):
        if q * q > n:
            return True  # n itself is prime
        if n % q == 0:
            while n % q == 0:
                n //= q
            return n == 1
    return False


def classification_complete(k: int, epsilon: int) -> bool:
    """Whether isometry classes classify walls completely here (the
    catalog is a full list of wall lattices exactly when k-1+2*epsilon
    is a prime power)."""
    return is_prime_power(k - 1 + 2 * epsilon)


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def entry_record(entry: CatalogEntry) -> dict:
    gram = entry.gram
    return {
        "epsilon": entry.epsilon,
        "k": entry.k,
        "p": entry.p,
        "delta": entry.delta,
        "gram": [gram[0][0], gram[0][1], gram[1][0], gram[1][1]],
        "q_R": _fraction_str(entry.q_curve),
        "is_wall": entry.is_wall,
        "witness": list(entry.witness) if entry.witness is not None else None,
        "isometry_class_id": entry.class_id,
    }


def export_catalog(entries: Iterable[CatalogEntry], stream: IO[str]) -> int:
    count = 0
    for entry in entries:
        stream.write(json.dumps(entry_record(entry)) + "\n")
        count += 1
    return count
