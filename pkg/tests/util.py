"""Random generators and independent brute-force oracles used by the tests.

Oracles here deliberately avoid the library's own machinery: picture counting
falls back to checking raw bijections, and restriction multiplicities come
straight from character inner products.
"""

from __future__ import annotations

import itertools
from math import factorial
from random import Random

from hookkron.oracle import character_value, cycle_type_class_size
from hookkron.shapes import (
    SkewShape,
    contains,
    leq_nw,
    leq_sw,
    partition,
    partitions,
)
from hookkron.tableaux import PartialTableau


def lt_sw(a, b) -> bool:
    return a != b and leq_sw(a, b)


def random_subpartition(rng: Random, outer) -> tuple[int, ...]:
    prev = outer[0] if outer else 0
    parts = []
    for x in outer:
        part = rng.randint(0, min(prev, x))
        parts.append(part)
        prev = part
    return partition(parts)


def random_skew_shape(rng: Random, max_outer: int = 9, min_outer: int = 1) -> SkewShape:
    n = rng.randint(min_outer, max_outer)
    pool = partitions(n)
    outer = pool[rng.randrange(len(pool))]
    return SkewShape(outer, random_subpartition(rng, outer))


def random_tableau(rng: Random, shape: SkewShape, value_span: int = 3) -> PartialTableau:
    """Uniform-ish valid filling: a random linear extension of the cell order
    paired with a random set of distinct values."""
    n = shape.size
    values = sorted(rng.sample(range(1, value_span * n + 5), n))
    remaining = set(shape.cells())
    entries = {}
    for v in values:
        ready = sorted(
            c
            for c in remaining
            if (c[0], c[1] - 1) not in remaining and (c[0] - 1, c[1]) not in remaining
        )
        cell = ready[rng.randrange(len(ready))]
        entries[cell] = v
        remaining.remove(cell)
    return PartialTableau(shape, entries)


def random_reading(rng: Random, cells) -> dict:
    """Random injective southwest-to-integer order map on ``cells``."""
    remaining = set(cells)
    out = {}
    value = 0
    while remaining:
        minimal = sorted(
            c for c in remaining if not any(lt_sw(d, c) for d in remaining)
        )
        cell = minimal[rng.randrange(len(minimal))]
        value += rng.randint(1, 3)
        out[cell] = value
        remaining.remove(cell)
    return out


def brute_force_picture_maps(source: SkewShape, target: SkewShape) -> list[dict]:
    """Every bijection satisfying both order conditions, checked from scratch."""
    if source.size != target.size:
        return []
    src = source.cells()
    tgt = target.cells()
    found = []
    for perm in itertools.permutations(tgt):
        mapping = dict(zip(src, perm))
        inverse = {y: x for x, y in mapping.items()}
        ok = all(
            leq_sw(mapping[x], mapping[y])
            for x in src
            for y in src
            if x != y and leq_nw(x, y)
        ) and all(
            leq_sw(inverse[s], inverse[t])
            for s in tgt
            for t in tgt
            if s != t and leq_nw(s, t)
        )
        if ok:
            found.append(mapping)
    return found


def small_skew_shapes(max_outer: int, max_cells: int) -> list[SkewShape]:
    out = []
    for n in range(0, max_outer + 1):
        for outer in partitions(n):
            for k in range(0, n + 1):
                for inner in partitions(k):
                    if contains(outer, inner) and n - k <= max_cells:
                        out.append(SkewShape(outer, inner))
    return out


def lr_via_characters(lam, zeta, xi) -> int:
    """Restriction multiplicity by direct character inner product over the
    Young subgroup; exact integers throughout."""
    a, b = sum(zeta), sum(xi)
    if a + b != sum(lam):
        raise ValueError("sizes must match")
    total = 0
    for alpha in partitions(a):
        size_a = cycle_type_class_size(alpha, a) if a else 1
        for beta in partitions(b):
            size_b = cycle_type_class_size(beta, b) if b else 1
            merged = partition(sorted(alpha + beta, reverse=True))
            total += (
                size_a
                * size_b
                * character_value(lam, merged)
                * character_value(zeta, alpha)
                * character_value(xi, beta)
            )
    quotient, remainder = divmod(total, factorial(a) * factorial(b))
    assert remainder == 0
    return quotient


def hook_length_dimension(lam) -> int:
    """Irreducible dimension by the hook length product."""
    if not lam:
        return 1
    from hookkron.shapes import conjugate

    tlam = conjugate(lam)
    result = factorial(sum(lam))
    for i in range(len(lam)):
        for j in range(lam[i]):
            result //= lam[i] - j + tlam[j] - i - 1
    return result
