"""Littlewood-Richardson coefficients via picture counting.

With a straight source shape the picture count collapses to a single LR
coefficient, so the one enumeration engine serves both purposes.  Values are
memoized; the double sum over restriction labels repeats queries heavily.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import RangeError, SizeMismatchError
from .pictures import enumerate_pictures
from .shapes import Partition, conjugate, contains, partitions, skew


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, zeta: Partition, xi: Partition) -> int:
    """Multiplicity of the ``zeta`` x ``xi`` outer product inside the
    restriction of the ``lam`` irreducible to the Young subgroup."""
    if sum(zeta) + sum(xi) != sum(lam):
        raise SizeMismatchError(f"need |zeta| + |xi| = |lam|: {zeta}, {xi}, {lam}")
    if not contains(lam, zeta):
        return 0
    return len(enumerate_pictures(skew(xi, ()), skew(lam, zeta)))


def exterior_multiplicity_via_lr(lam: Partition, mu: Partition, m: int) -> int:
    """Multiplicity of ``mu`` in ``lam`` tensored with the m-th exterior power
    of the defining module, as the LR double sum over a shared restriction
    label and a pair of conjugate shapes."""
    n = sum(lam)
    if sum(mu) != n:
        raise SizeMismatchError(f"labels must partition the same n: {lam}, {mu}")
    if not 0 <= m <= n:
        raise RangeError(f"need 0 <= m <= n, got m={m}, n={n}")
    total = 0
    for zeta in partitions(n - m):
        if not (contains(lam, zeta) and contains(mu, zeta)):
            continue
        for xi in partitions(m):
            left = lr_coefficient(lam, zeta, xi)
            if left:
                total += left * lr_coefficient(mu, zeta, conjugate(xi))
    return total
