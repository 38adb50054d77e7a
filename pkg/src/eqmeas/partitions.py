"""Partitions, Young-diagram combinatorics, and plane partitions.

Cells use zero-indexed (row, column) matrix coordinates.  Hook deformations
live in the shared linear-form type with the w-coefficient 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .forms import LinearForm, canonical_linear_form


class CellNotInPartition(KeyError):
    """The requested cell lies outside the diagram."""


class BadCornerIndex(IndexError):
    """Corner index outside 1..m for the partition at hand."""


class _Infinity:
    """Sentinel for the two artificial corner coordinates.

    Deliberately supports no arithmetic or ordering: any formula that touches
    an artificial corner coordinate is a bug and should fail loudly.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return "INF"


INF = _Infinity()


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; the empty tuple is the empty partition."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        for i, p in enumerate(self.parts):
            if p < 1:
                raise ValueError("parts must be positive, got %r" % (p,))
            if i and self.parts[i - 1] < p:
                raise ValueError("parts must be weakly decreasing: %r" % (self.parts,))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def cells(self):
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield (i, j)

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 0 <= i < len(self.parts) and 0 <= j < self.parts[i]

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = tuple(int(p) for p in text.split(","))
        except ValueError:
            raise ValueError("cannot parse partition %r" % (text,))
        return cls(parts)

    def text(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return "Partition(%s)" % (self.text() or "empty")


def conjugate(lam: Partition) -> Partition:
    """Reflect the diagram across the main diagonal."""
    if not lam.parts:
        return Partition(())
    return Partition(tuple(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])))


def contains(mu: Partition, lam: Partition) -> bool:
    """Componentwise containment mu <= lam of diagrams."""
    if len(mu) > len(lam):
        return False
    return all(mp <= lp for mp, lp in zip(mu.parts, lam.parts))


def _require_cell(lam: Partition, cell) -> None:
    if cell not in lam:
        raise CellNotInPartition("cell %r not in %r" % (cell, lam))


def arm(lam: Partition, cell) -> int:
    """Number of cells strictly right of the cell in its row."""
    _require_cell(lam, cell)
    i, j = cell
    return lam.parts[i] - j - 1


def leg(lam: Partition, cell) -> int:
    """Number of cells strictly below the cell in its column."""
    _require_cell(lam, cell)
    i, j = cell
    return sum(1 for i2 in range(i + 1, len(lam.parts)) if lam.parts[i2] > j)


def classical_hook(lam: Partition, cell) -> int:
    return arm(lam, cell) + leg(lam, cell) + 1


def hook_upper(lam: Partition, cell) -> tuple[LinearForm, Fraction]:
    """The deformed hook u*leg + v*(arm+1), canonicalized with its scalar."""
    return canonical_linear_form((leg(lam, cell), arm(lam, cell) + 1, 0))


def hook_lower(lam: Partition, cell) -> tuple[LinearForm, Fraction]:
    """The deformed hook u*(leg+1) + v*arm, canonicalized with its scalar."""
    return canonical_linear_form((leg(lam, cell) + 1, arm(lam, cell), 0))


@dataclass(frozen=True)
class CornerData:
    """Inside corners of a partition, labeled bottom-left to top-right.

    rho and gamma have entries 0..m+1 where index 0 and m+1 are the two
    artificial corners: rho[0] = gamma[m+1] = INF and rho[m+1] = gamma[0] = -1.
    True inside corners are (rho[k], gamma[k]) for 1 <= k <= m, with rho
    strictly decreasing and gamma strictly increasing; outside corners are
    (rho[k] + 1, gamma[k-1] + 1) for 1 <= k <= m+1.
    """

    rho: tuple
    gamma: tuple
    m: int

    def inside_corners(self) -> list[tuple[int, int]]:
        return [(self.rho[k], self.gamma[k]) for k in range(1, self.m + 1)]

    def outside_corners(self) -> list[tuple[int, int]]:
        return [(self.rho[k] + 1, self.gamma[k - 1] + 1) for k in range(1, self.m + 2)]


def corner_data(lam: Partition) -> CornerData:
    """Locate inside corners (cells with no right or lower neighbor in the diagram)."""
    inside = [cell for cell in lam.cells() if (cell[0] + 1, cell[1]) not in lam and (cell[0], cell[1] + 1) not in lam]
    inside.sort(key=lambda c: -c[0])  # bottom left to top right
    m = len(inside)
    rho = (INF,) + tuple(c[0] for c in inside) + (-1,)
    gamma = (-1,) + tuple(c[1] for c in inside) + (INF,)
    return CornerData(rho, gamma, m)


def removable_corners(lam: Partition) -> list[int]:
    """Indices 1..m; every true inside corner is removable."""
    return list(range(1, corner_data(lam).m + 1))


def remove_corner(lam: Partition, ell: int) -> Partition:
    """Delete the ell-th inside corner, yielding a partition one cell smaller."""
    cd = corner_data(lam)
    if not 1 <= ell <= cd.m:
        raise BadCornerIndex("corner index %r outside 1..%d" % (ell, cd.m))
    row = cd.rho[ell]
    parts = list(lam.parts)
    parts[row] -= 1
    if parts[row] == 0:
        parts.pop(row)
    return Partition(tuple(parts))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


@dataclass(frozen=True)
class PlanePartition:
    """A finite box set in the nonnegative octant, downward closed."""

    boxes: frozenset[tuple[int, int, int]] = frozenset()

    def __post_init__(self):
        for b in self.boxes:
            i, j, k = b
            if min(b) < 0:
                raise ValueError("box %r has a negative coordinate" % (b,))
            for below in ((i - 1, j, k), (i, j - 1, k), (i, j, k - 1)):
                if min(below) >= 0 and below not in self.boxes:
                    raise ValueError("box set not downward closed at %r" % (b,))

    @property
    def size(self) -> int:
        return len(self.boxes)

    def heights(self) -> list[list[int]]:
        """Column heights of the projection to the (i, j) plane."""
        h: dict[tuple[int, int], int] = {}
        for i, j, k in self.boxes:
            h[(i, j)] = max(h.get((i, j), 0), k + 1)
        if not h:
            return []
        rows = max(i for i, _ in h) + 1
        return [[h[(i, j)] for j in range(max(jj for ii, jj in h if ii == i) + 1)] for i in range(rows)]

    @classmethod
    def from_heights(cls, rows) -> "PlanePartition":
        boxes = set()
        for i, row in enumerate(rows):
            for j, height in enumerate(row):
                for k in range(height):
                    boxes.add((i, j, k))
        return cls(frozenset(boxes))

    @classmethod
    def from_text(cls, text: str) -> "PlanePartition":
        text = text.strip()
        if not text:
            return cls(frozenset())
        try:
            rows = [[int(x) for x in row.split(",")] for row in text.split(";")]
        except ValueError:
            raise ValueError("cannot parse plane partition %r" % (text,))
        if any(x < 1 for row in rows for x in row):
            raise ValueError("heights must be positive in %r" % (text,))
        return cls.from_heights(rows)

    def text(self) -> str:
        return ";".join(",".join(str(x) for x in row) for row in self.heights())

    def permuted(self, axis_map) -> "PlanePartition":
        """Send coordinate j of every box to position axis_map[j]."""
        out = set()
        for box in self.boxes:
            new = [0, 0, 0]
            for j, x in enumerate(box):
                new[axis_map[j]] = x
            out.add(tuple(new))
        return PlanePartition(frozenset(out))

    def __repr__(self) -> str:
        return "PlanePartition(%s)" % (self.text() or "empty")


def _addable_boxes(pi: PlanePartition) -> list[tuple[int, int, int]]:
    candidates = set()
    if not pi.boxes:
        return [(0, 0, 0)]
    for i, j, k in pi.boxes:
        for cand in ((i + 1, j, k), (i, j + 1, k), (i, j, k + 1)):
            candidates.add(cand)
    out = []
    for cand in candidates:
        if cand in pi.boxes:
            continue
        i, j, k = cand
        ok = all(min(below) < 0 or below in pi.boxes for below in ((i - 1, j, k), (i, j - 1, k), (i, j, k - 1)))
        if ok:
            out.append(cand)
    return sorted(out)


def _removable_boxes(pi: PlanePartition) -> list[tuple[int, int, int]]:
    out = []
    for b in pi.boxes:
        i, j, k = b
        if all(above not in pi.boxes for above in ((i + 1, j, k), (i, j + 1, k), (i, j, k + 1))):
            out.append(b)
    return sorted(out)


@lru_cache(maxsize=None)
def _plane_partition_levels(n: int) -> tuple[tuple[PlanePartition, ...], ...]:
    # Grow size by size; pi survives only when the added box is the
    # lexicographically largest removable box, so each set appears once.
    levels = [(PlanePartition(frozenset()),)]
    for _ in range(n):
        nxt = set()
        for pi in levels[-1]:
            for box in _addable_boxes(pi):
                grown = PlanePartition(pi.boxes | {box})
                if max(_removable_boxes(grown)) == box:
                    nxt.add(grown)
        levels.append(tuple(sorted(nxt, key=lambda p: sorted(p.boxes))))
    return tuple(levels)


def enumerate_plane_partitions(n: int) -> list[PlanePartition]:
    """All downward-closed box sets of size exactly n, deterministic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_plane_partition_levels(n)[n])


def enumerate_plane_partitions_up_to(n: int) -> list[list[PlanePartition]]:
    """Lists of plane partitions of sizes 0..n (index = size)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [list(level) for level in _plane_partition_levels(n)]
