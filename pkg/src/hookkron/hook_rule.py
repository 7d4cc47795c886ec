"""Hook tensor multiplicities via balanced corners of pictures.

For partitions ``lam`` and ``mu`` of n and an overlap ``zeta``, the pictures
from the transposed shape mu/zeta onto lam/zeta count the multiplicity of
``mu`` in ``lam`` tensored with an exterior power.  Every such picture carries
exactly one of two mutually exclusive features: a *balanced cocorner* (a
target inner cocorner whose insertion lands on its own transpose) or a
*balanced corner* (a source inner corner whose deletion emits its own
transpose).  Counting the balanced-cocorner pictures over all overlaps gives
the multiplicity of ``mu`` in ``lam`` tensored with the hook of leg ``m``, and
inserting/deleting at the balanced cell steps bijectively between adjacent
leg sizes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    NotCoHookShapeError,
    NotHookShapeError,
    NotRemovableError,
    RangeError,
    SizeMismatchError,
)
from .parallel import ordered_map
from .pictures import (
    Picture,
    enumerate_pictures,
    picture_bump_destination,
    picture_delete,
    picture_insert,
    picture_to_rw,
)
from .shapes import (
    Cell,
    Partition,
    add_cell,
    contains,
    format_partition,
    inner_cocorners,
    inner_corners,
    partitions,
    remove_cell,
    skew,
    transpose_cell,
    transpose_shape,
)
from .tableaux import delete, row_reading


@dataclass(frozen=True)
class TypedPicture:
    """A picture from the transposed mu-overlap shape onto the lam-overlap shape."""

    lam: Partition
    mu: Partition
    zeta: Partition
    picture: Picture

    def __post_init__(self):
        n = sum(self.lam)
        if sum(self.mu) != n:
            raise SizeMismatchError(
                f"labels must partition the same n: {self.lam}, {self.mu}"
            )
        if not (contains(self.lam, self.zeta) and contains(self.mu, self.zeta)):
            raise ValueError(f"{self.zeta} must sit inside both {self.lam} and {self.mu}")
        if self.picture.source != transpose_shape(skew(self.mu, self.zeta)):
            raise ValueError("picture source must be the transposed mu/zeta shape")
        if self.picture.target != skew(self.lam, self.zeta):
            raise ValueError("picture target must be the lam/zeta shape")

    @property
    def m(self) -> int:
        return sum(self.lam) - sum(self.zeta)


def pw_set(lam: Partition, mu: Partition, zeta: Partition) -> list[TypedPicture]:
    """All pictures of type (lam, mu; zeta); empty unless zeta sits in both."""
    if sum(lam) != sum(mu):
        raise SizeMismatchError(f"labels must partition the same n: {lam}, {mu}")
    if not (contains(lam, zeta) and contains(mu, zeta)):
        return []
    source = transpose_shape(skew(mu, zeta))
    target = skew(lam, zeta)
    return [TypedPicture(lam, mu, zeta, p) for p in enumerate_pictures(source, target)]


def pw_m_set(lam: Partition, mu: Partition, m: int) -> list[TypedPicture]:
    """Union of the per-overlap picture sets, overlaps in the fixed order."""
    n = sum(lam)
    if sum(mu) != n:
        raise SizeMismatchError(f"labels must partition the same n: {lam}, {mu}")
    if not 0 <= m <= n:
        raise RangeError(f"need 0 <= m <= n, got m={m}, n={n}")
    out: list[TypedPicture] = []
    for zeta in partitions(n - m):
        out.extend(pw_set(lam, mu, zeta))
    return out


def balanced_cocorner(tp: TypedPicture) -> Cell | None:
    """The unique target inner cocorner that bumps onto its own transpose,
    or None.  Scans in southwest order; the first hit is the only one."""
    p = tp.picture
    for z in inner_cocorners(p.target):
        destination, _ = picture_bump_destination(p, z)
        if destination == transpose_cell(z):
            return z
    return None


def balanced_corner(tp: TypedPicture) -> Cell | None:
    """The target-side cell emitted by the unique self-transpose deletion,
    or None.  The deleted source corner is the transpose of the result."""
    p = tp.picture
    corners = inner_corners(p.source)
    if not corners:
        return None
    tableau = picture_to_rw(p, row_reading(p.target))
    tgt_cells = p.target.cells()
    for v in corners:
        try:
            _, out_value = delete(tableau, v)
        except NotRemovableError:
            continue
        w = tgt_cells[out_value - 1]
        if w == transpose_cell(v):
            return w
    return None


def step_E(tp: TypedPicture) -> TypedPicture:
    """Insert at the balanced cocorner: leg size m grows by one."""
    z = balanced_cocorner(tp)
    if z is None:
        raise NotHookShapeError(
            f"picture of type ({format_partition(tp.lam)}, {format_partition(tp.mu)}; "
            f"{format_partition(tp.zeta)}) has no balanced cocorner"
        )
    return TypedPicture(tp.lam, tp.mu, remove_cell(tp.zeta, z), picture_insert(tp.picture, z))


def step_F(tp: TypedPicture) -> TypedPicture:
    """Delete at the balanced corner: leg size m shrinks by one."""
    w = balanced_corner(tp)
    if w is None:
        raise NotCoHookShapeError(
            f"picture of type ({format_partition(tp.lam)}, {format_partition(tp.mu)}; "
            f"{format_partition(tp.zeta)}) has no balanced corner"
        )
    shrunk, emitted = picture_delete(tp.picture, transpose_cell(w))
    assert emitted == w
    return TypedPicture(tp.lam, tp.mu, add_cell(tp.zeta, w), shrunk)


def multiplicity_exterior(lam: Partition, mu: Partition, m: int) -> int:
    """Multiplicity of ``mu`` in ``lam`` tensored with the m-th exterior power
    of the defining module: the total picture count."""
    return len(pw_m_set(lam, mu, m))


def multiplicity_hook(lam: Partition, mu: Partition, m: int) -> int:
    """Multiplicity of ``mu`` in ``lam`` tensored with the hook of leg ``m``:
    the number of pictures with a balanced cocorner."""
    n = sum(lam)
    if not 0 <= m < n:
        raise RangeError(f"need 0 <= m < n, got m={m}, n={n}")
    return sum(1 for tp in pw_m_set(lam, mu, m) if balanced_cocorner(tp) is not None)


def picture_counts(lam: Partition, mu: Partition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Per-leg counts (hook, exterior) for m = 0..n in one enumeration sweep."""
    n = sum(lam)
    if sum(mu) != n:
        raise SizeMismatchError(f"labels must partition the same n: {lam}, {mu}")
    hook = [0] * (n + 1)
    exterior = [0] * (n + 1)
    for m in range(n + 1):
        for tp in pw_m_set(lam, mu, m):
            exterior[m] += 1
            if balanced_cocorner(tp) is not None:
                hook[m] += 1
    return tuple(hook), tuple(exterior)


@dataclass(frozen=True)
class ZetaCount:
    zeta: Partition
    ph: int | None
    pw: int


@dataclass(frozen=True)
class TableRow:
    mu: Partition
    ph: int | None
    pw: int
    by_zeta: tuple[ZetaCount, ...]


@dataclass(frozen=True)
class DecompositionTable:
    """Multiplicity table of one tensor product, rows in the fixed partition
    order, all-zero rows omitted.  ``ph`` is None in exterior-power tables."""

    lam: Partition
    m: int
    rows: tuple[TableRow, ...]

    def to_json(self) -> dict:
        rows = []
        for row in self.rows:
            entry: dict = {"mu": list(row.mu)}
            if row.ph is not None:
                entry["ph"] = row.ph
            entry["pw"] = row.pw
            entry["by_zeta"] = [
                {"zeta": list(zc.zeta)}
                | ({"ph": zc.ph} if zc.ph is not None else {})
                | {"pw": zc.pw}
                for zc in row.by_zeta
            ]
            rows.append(entry)
        return {"lambda": list(self.lam), "m": self.m, "rows": rows}


def _table_row(lam: Partition, mu: Partition, m: int, with_hook: bool) -> TableRow | None:
    n = sum(lam)
    by_zeta = []
    ph_total = 0
    pw_total = 0
    for zeta in partitions(n - m):
        pics = pw_set(lam, mu, zeta)
        if not pics:
            continue
        ph = None
        if with_hook:
            ph = sum(1 for tp in pics if balanced_cocorner(tp) is not None)
            ph_total += ph
        pw_total += len(pics)
        by_zeta.append(ZetaCount(zeta, ph, len(pics)))
    if pw_total == 0:
        return None
    return TableRow(mu, ph_total if with_hook else None, pw_total, tuple(by_zeta))


def _decompose(lam: Partition, m: int, with_hook: bool, jobs: int = 1) -> DecompositionTable:
    n = sum(lam)
    tasks = [(lam, mu, m, with_hook) for mu in partitions(n)]
    rows = ordered_map(_row_task, tasks, jobs)
    return DecompositionTable(lam, m, tuple(row for row in rows if row is not None))


def _row_task(args: tuple) -> TableRow | None:
    return _table_row(*args)


def decompose_tensor_hook(lam: Partition, m: int, jobs: int = 1) -> DecompositionTable:
    """Decomposition of ``lam`` tensored with the hook of leg ``m``."""
    n = sum(lam)
    if not 0 <= m < n:
        raise RangeError(f"need 0 <= m < n, got m={m}, n={n}")
    return _decompose(lam, m, with_hook=True, jobs=jobs)


def decompose_tensor_exterior(lam: Partition, m: int, jobs: int = 1) -> DecompositionTable:
    """Decomposition of ``lam`` tensored with the m-th exterior power of the
    defining module."""
    n = sum(lam)
    if not 0 <= m <= n:
        raise RangeError(f"need 0 <= m <= n, got m={m}, n={n}")
    return _decompose(lam, m, with_hook=False, jobs=jobs)


def hook_hook_multiplicity(e: int, f: int, m: int, n: int) -> int:
    """Closed form for a hook tensor hook: multiplicity of the hook with leg
    ``f`` in the product of the hook with leg ``e`` and the hook with leg
    ``m``, all of degree ``n``.  Always 0 or 1, supported on the leg interval
    fixed by ``e`` and ``f``."""
    if not (0 <= 2 * e <= n and 2 * f <= n and e <= f):
        raise RangeError(f"need 2e <= n, 2f <= n, e <= f: e={e}, f={f}, n={n}")
    if not 0 <= m < n:
        raise RangeError(f"need 0 <= m < n, got m={m}, n={n}")
    i = m - (f - e)
    if i < 0:
        return 0
    if e + f < n:
        return 1 if i <= 2 * e else 0
    return 1 if i <= n - 2 else 0
