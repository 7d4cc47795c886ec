"""Partial tableaux on skew shapes and backward row insertion/deletion.

A partial tableau is an injective filling by distinct positive integers that
increases left to right along rows and top to bottom along columns.  Insertion
works upward from the bottom row: the inserted value bumps the right-most
smaller entry of the row, the bumped entry moves one row up, and the procedure
stops at the first row it cannot enter, vacating a cell on the inner boundary
(the bumping destination).  Deletion is the exact inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import (
    DuplicateValueError,
    NotAddableError,
    NotInnerCornerError,
    NotRemovableError,
    RangeError,
)
from .shapes import (
    Cell,
    SkewShape,
    add_cell,
    format_cell,
    inner_corners,
    remove_cell,
    skew,
)


class PartialTableau:
    """Immutable injective order-preserving filling of a skew shape."""

    __slots__ = ("shape", "_entries", "_hash")

    def __init__(self, shape: SkewShape, entries: Mapping[Cell, int]):
        entries = {cell: int(v) for cell, v in entries.items()}
        _validate(shape, entries)
        self.shape = shape
        self._entries = entries
        self._hash = None

    def __getitem__(self, cell: Cell) -> int:
        return self._entries[cell]

    def get(self, cell: Cell) -> int | None:
        return self._entries.get(cell)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.shape.cells())

    def image(self) -> frozenset[int]:
        return frozenset(self._entries.values())

    def items(self) -> list[tuple[Cell, int]]:
        """Entries in reading order (bottom row first)."""
        return [(cell, self._entries[cell]) for cell in self.shape.cells()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialTableau):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, tuple(self.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"PartialTableau({self.shape}, {dict(self.items())})"


def _validate(shape: SkewShape, entries: dict[Cell, int]) -> None:
    cells = shape.cells()
    if set(entries) != set(cells):
        raise ValueError(f"entries must fill {shape} exactly")
    seen: set[int] = set()
    for v in entries.values():
        if v <= 0:
            raise ValueError(f"entries must be positive, got {v}")
        if v in seen:
            raise DuplicateValueError(f"value {v} appears twice")
        seen.add(v)
    for i, j in cells:
        right = entries.get((i, j + 1))
        if right is not None and entries[(i, j)] >= right:
            raise ValueError(f"row {i} is not increasing at column {j}")
        below = entries.get((i + 1, j))
        if below is not None and entries[(i, j)] >= below:
            raise ValueError(f"column {j} is not increasing at row {i}")


def row_reading(shape: SkewShape) -> dict[Cell, int]:
    """Number the cells 1..size in reading order: bottom row first, then upward.

    The result is an injective order map for the southwest order, so it can
    serve as a reading of a picture's target shape.  It is generally *not* a
    partial tableau (columns decrease downward).
    """
    return {cell: k + 1 for k, cell in enumerate(shape.cells())}


@dataclass(frozen=True)
class BumpRoute:
    """One cell per visited row, bottom-up; the last cell is the destination.

    ``displaced[k]`` is what comes to rest in ``cells[k]`` when the insertion
    is carried out; ``displaced[0]`` is the inserted value itself.  For
    picture-level bumping the displaced entries are target cells instead of
    integers.
    """

    cells: tuple[Cell, ...]
    displaced: tuple

    @property
    def destination(self) -> Cell:
        return self.cells[-1]


def bump_destination(t: PartialTableau, a: int) -> BumpRoute:
    """Trace the insertion of ``a`` without modifying the tableau.

    Rows are scanned from the bottom up.  In each row the carried value
    replaces the right-most strictly smaller entry; a row all of whose entries
    are larger (in particular an empty row) stops the route just left of it,
    and falling off the top stops at ``(0, outer[0])``.
    """
    shape = t.shape
    if shape.length == 0:
        raise RangeError("cannot bump into a shape with no rows")
    if a <= 0:
        raise ValueError(f"inserted value must be positive, got {a}")
    if a in t.image():
        raise DuplicateValueError(f"value {a} is already present")
    cells: list[Cell] = []
    landed: list[int] = []
    carry = a
    for i in range(shape.length, 0, -1):
        lo, hi = shape.row_bounds(i)
        hit = None
        for j in range(hi, lo, -1):
            if t[(i, j)] < carry:
                hit = j
                break
        if hit is None:
            cells.append((i, lo))
            landed.append(carry)
            return BumpRoute(tuple(cells), tuple(landed))
        cells.append((i, hit))
        landed.append(carry)
        carry = t[(i, hit)]
    cells.append((0, shape.outer[0]))
    landed.append(carry)
    return BumpRoute(tuple(cells), tuple(landed))


def insert(t: PartialTableau, a: int) -> PartialTableau:
    """Backward row insertion of ``a``; grows the tableau at an inner cocorner."""
    route = bump_destination(t, a)
    r, c = route.destination
    if r == 0 or c == 0:
        raise NotAddableError(
            f"{a} is not addable: destination {format_cell(route.destination)} is extreme"
        )
    entries = dict(t._entries)
    for cell, value in zip(route.cells, route.displaced):
        entries[cell] = value
    new_shape = skew(t.shape.outer, remove_cell(t.shape.inner, route.destination))
    return PartialTableau(new_shape, entries)


def delete(t: PartialTableau, v: Cell) -> tuple[PartialTableau, int]:
    """Inverse of :func:`insert`: vacate inner corner ``v`` and emit a value.

    Starting from ``v`` the displaced entry drops one row at a time into the
    left-most strictly larger entry; the value pushed out of the bottom row is
    returned.  The chain must reach the bottom row for ``v`` to be removable.
    """
    shape = t.shape
    if v not in inner_corners(shape):
        raise NotInnerCornerError(f"{format_cell(v)} is not an inner corner of {shape}")
    seq = [v]
    carry = t[v]
    for i in range(v[0] + 1, shape.length + 1):
        lo, hi = shape.row_bounds(i)
        hit = None
        for j in range(lo + 1, hi + 1):
            if t[(i, j)] > carry:
                hit = j
                break
        if hit is None:
            raise NotRemovableError(
                f"{format_cell(v)} is not removable: no larger entry in row {i}"
            )
        seq.append((i, hit))
        carry = t[(i, hit)]
    entries = dict(t._entries)
    for k in range(len(seq) - 1, 0, -1):
        entries[seq[k]] = t[seq[k - 1]]
    del entries[v]
    new_shape = skew(shape.outer, add_cell(shape.inner, v))
    return PartialTableau(new_shape, entries), carry


def removable_corners(t: PartialTableau) -> list[Cell]:
    """Inner corners at which :func:`delete` succeeds, in southwest order."""
    out = []
    for v in inner_corners(t.shape):
        try:
            delete(t, v)
        except NotRemovableError:
            continue
        out.append(v)
    return out


def tableau_to_json(t: PartialTableau) -> dict:
    return {
        "outer": list(t.shape.outer),
        "inner": list(t.shape.inner),
        "entries": [[cell[0], cell[1], v] for cell, v in t.items()],
    }


def tableau_from_json(obj: dict) -> PartialTableau:
    shape = skew(obj["outer"], obj["inner"])
    entries = {(int(r), int(c)): int(v) for r, c, v in obj["entries"]}
    return PartialTableau(shape, entries)


def render_tableau(t: PartialTableau, route: BumpRoute | None = None) -> str:
    """ASCII grid, one line per row; inner cells blank, route cells starred."""
    marked = set(route.cells) if route is not None else set()
    width = max((len(str(v)) for v in t.image()), default=1)
    if marked:
        width += 1
    lines = []
    for i in range(1, t.shape.length + 1):
        lo, hi = t.shape.row_bounds(i)
        boxes = []
        for j in range(1, hi + 1):
            if j > lo:
                text = str(t[(i, j)])
                if (i, j) in marked:
                    text += "*"
                boxes.append(f"[{text.rjust(width)}]")
            elif (i, j) in marked:
                # an inner destination cell: show where the route stops
                boxes.append(f"[{'*'.rjust(width)}]")
            else:
                boxes.append(" " * (width + 2))
        lines.append("".join(boxes).rstrip())
    return "\n".join(lines)
