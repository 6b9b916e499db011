"""Finite point-line incidence geometries.

Point sets are integer masks over point indices (bit i is point i).

Usage:
    g = grid_geometry(3, 3)
    verify_gq(g)  # (2, 1)
    enumerate_hyperplanes(g)
"""

from collections.abc import Iterable, Sequence
from itertools import combinations

from errors import CapacityError, DomainError, GeometryError
from gf2 import Gf2Vector
from models import (
    GqViolation,
    Hyperplane,
    HyperplaneKind,
    TriadKind,
    TriadReport,
    mask_indices,
)

PointSet = int

MAX_HYPERPLANE_SCAN_POINTS = 24

_TRIAD_KINDS = {0: TriadKind.ACENTRIC, 1: TriadKind.UNICENTRIC, 3: TriadKind.TRICENTRIC}


def mask_of(points: Iterable[int]) -> PointSet:
    """Point mask of an iterable of point indices."""
    mask = 0
    for point in points:
        mask |= 1 << point
    return mask


class PointLineGeometry:
    """Points 0..num_points-1 and lines as point masks.

    Two distinct points lie on at most one common line; lines have at
    least two points and never repeat.
    """

    def __init__(
        self,
        num_points: int,
        lines: Iterable[Iterable[int]],
        labels: Sequence[Gf2Vector] | None = None,
        name: str = "",
    ) -> None:
        """Init.

        :param num_points: number of points
        :param lines: each line as point indices
        :param labels: optional per-point annotation
        :param name: used in reports only
        """
        if num_points < 1:
            raise GeometryError(f"Geometry needs at least one point, got {num_points}")
        if labels is not None and len(labels) != num_points:
            raise GeometryError(f"Got {len(labels)} labels for {num_points} points")
        self.num_points = num_points
        self.name = name
        self.labels: tuple[Gf2Vector, ...] | None = tuple(labels) if labels is not None else None
        self.lines: tuple[PointSet, ...] = tuple(mask_of(line) for line in lines)
        self.all_points: PointSet = (1 << num_points) - 1
        self._validate()
        self.point_lines: tuple[tuple[int, ...], ...] = tuple(
            tuple(index for index, line in enumerate(self.lines) if line >> point & 1)
            for point in range(num_points)
        )
        # x-perp: x together with every point collinear with it
        self.neighbors: tuple[PointSet, ...] = tuple(
            _union((self.lines[index] for index in self.point_lines[point]), 1 << point)
            for point in range(num_points)
        )
        self._line_index = {line: index for index, line in enumerate(self.lines)}

    def _validate(self) -> None:
        """Check line sizes, repeats and the two-points-one-line rule."""
        covered: dict[tuple[int, int], int] = {}
        for index, line in enumerate(self.lines):
            if line & ~self.all_points:
                raise GeometryError(f"Line {index} has points outside 0..{self.num_points - 1}")
            points = mask_indices(line)
            if len(points) < 2:  # noqa: PLR2004
                raise GeometryError(f"Line {index} has fewer than two points: {points}")
            for pair in combinations(points, 2):
                if pair in covered:
                    raise GeometryError(
                        f"Points {pair} lie on lines {covered[pair]} and {index}",
                    )
                covered[pair] = index

    @property
    def num_lines(self) -> int:
        """Number of lines."""
        return len(self.lines)

    def line_points(self, index: int) -> list[int]:
        """Points of line `index`, ascending."""
        return mask_indices(self.lines[index])

    def line_index(self, mask: PointSet) -> int | None:
        """Index of the line with exactly these points."""
        return self._line_index.get(mask)

    def is_line(self, mask: PointSet) -> bool:
        """True if `mask` is the point set of a line."""
        return mask in self._line_index

    def collinear(self, x: int, y: int) -> bool:
        """True if x and y lie on a common line (every point is collinear with itself)."""
        return bool(self.neighbors[x] >> y & 1)

    def check_mask(self, mask: PointSet) -> None:
        """Raise DomainError unless `mask` is a subset of the points."""
        if mask < 0 or mask & ~self.all_points:
            raise DomainError(f"Point set {mask:#x} is not inside 0..{self.num_points - 1}")

    def check_point(self, x: int) -> None:
        """Raise DomainError unless `x` is a point index."""
        if not 0 <= x < self.num_points:
            raise DomainError(f"Point {x} is not inside 0..{self.num_points - 1}")

    def __repr__(self) -> str:
        """Short description."""
        name = f"{self.name} " if self.name else ""
        return f"<{name}geometry: {self.num_points} points, {self.num_lines} lines>"


def _union(masks: Iterable[PointSet], start: PointSet = 0) -> PointSet:
    """Union of point masks."""
    result = start
    for mask in masks:
        result |= mask
    return result


def verify_gq(g: PointLineGeometry) -> tuple[int, int] | GqViolation:
    """Order (s, t) of a generalized quadrangle, or the first violated axiom.

    Checks run in the order: line sizes and line intersections (ii),
    unique transversal (iii), point degrees (i), then point and line counts.
    """
    if not g.lines:
        return GqViolation(axiom="ii", witness=(), message="geometry has no lines")
    s = g.lines[0].bit_count() - 1
    for index, line in enumerate(g.lines):
        if line.bit_count() != s + 1:
            return GqViolation(
                axiom="ii",
                witness=(index,),
                message=f"line {index} has {line.bit_count()} points, line 0 has {s + 1}",
            )
    for i, j in combinations(range(g.num_lines), 2):
        if (g.lines[i] & g.lines[j]).bit_count() > 1:
            return GqViolation(
                axiom="ii",
                witness=(i, j),
                message=f"lines {i} and {j} share more than one point",
            )
    for x in range(g.num_points):
        for index, line in enumerate(g.lines):
            if line >> x & 1:
                continue
            transversals = (g.neighbors[x] & line).bit_count()
            if transversals != 1:
                return GqViolation(
                    axiom="iii",
                    witness=(x, index),
                    message=(
                        f"point {x} is collinear with {transversals} points of line {index},"
                        " expected exactly one"
                    ),
                )
    t = len(g.point_lines[0]) - 1
    for x, on_lines in enumerate(g.point_lines):
        if len(on_lines) != t + 1 or t < 1:
            return GqViolation(
                axiom="i",
                witness=(x,),
                message=f"point {x} is on {len(on_lines)} lines, point 0 on {t + 1}",
            )
    if g.num_points != (s + 1) * (s * t + 1) or g.num_lines != (t + 1) * (s * t + 1):
        return GqViolation(
            axiom="counts",
            witness=(g.num_points, g.num_lines),
            message=f"{g.num_points} points and {g.num_lines} lines do not fit order ({s}, {t})",
        )
    return s, t


def perp(g: PointLineGeometry, a: PointSet) -> PointSet:
    """Points collinear with every point of `a` (each point counts as collinear with itself)."""
    if not a:
        raise DomainError("perp of the empty set is not defined")
    g.check_mask(a)
    result = g.all_points
    for x in mask_indices(a):
        result &= g.neighbors[x]
    return result


def enumerate_triads(g: PointLineGeometry) -> list[TriadReport]:
    """All triples of pairwise non-collinear points, in lexicographic order."""
    triads = []
    for x, y, z in combinations(range(g.num_points), 3):
        if g.collinear(x, y) or g.collinear(x, z) or g.collinear(y, z):
            continue
        centers = perp(g, mask_of((x, y, z)))
        kind = _TRIAD_KINDS.get(centers.bit_count(), TriadKind.CENTRIC_OTHER)
        triads.append(TriadReport(triple=(x, y, z), centers=centers, kind=kind))
    return triads


def is_hyperplane(g: PointLineGeometry, s: PointSet) -> bool:
    """True if `s` is a proper point subset met by every line in one or all of its points."""
    if s < 0 or s & ~g.all_points or s == g.all_points:
        return False
    for line in g.lines:
        met = line & s
        if met != line and met.bit_count() != 1:
            return False
    return True


def induced_geometry(g: PointLineGeometry, s: PointSet) -> PointLineGeometry:
    """Points of `s` with the lines of `g` lying entirely inside `s`."""
    g.check_mask(s)
    points = mask_indices(s)
    index_of = {point: new for new, point in enumerate(points)}
    lines = [[index_of[point] for point in mask_indices(line)] for line in g.lines if line & s == line]
    labels = [g.labels[point] for point in points] if g.labels is not None else None
    return PointLineGeometry(len(points), lines, labels=labels, name=f"{g.name} induced".strip())


def trace_geometry(g: PointLineGeometry, s: PointSet) -> PointLineGeometry:
    """Points of `s` with the traces of lines of `g` that keep two or more points."""
    g.check_mask(s)
    points = mask_indices(s)
    index_of = {point: new for new, point in enumerate(points)}
    lines = [
        [index_of[point] for point in mask_indices(line & s)]
        for line in g.lines
        if (line & s).bit_count() >= 2  # noqa: PLR2004
    ]
    labels = [g.labels[point] for point in points] if g.labels is not None else None
    return PointLineGeometry(len(points), lines, labels=labels, name=f"{g.name} trace".strip())


def classify_hyperplane(
    g: PointLineGeometry,
    s: PointSet,
    order: tuple[int, int] | GqViolation | None = None,
) -> Hyperplane:
    """Tag a hyperplane as perp, ovoid, grid or other.

    :param order: result of verify_gq(g) if already known
    """
    if order is None:
        order = verify_gq(g)
    for x, x_perp in enumerate(g.neighbors):
        if x_perp == s:
            return Hyperplane(points=s, kind=HyperplaneKind.PERP, center=x)
    if all((line & s).bit_count() == 1 for line in g.lines):
        return Hyperplane(points=s, kind=HyperplaneKind.OVOID)
    if isinstance(order, tuple):
        sub_order = verify_gq(induced_geometry(g, s))
        if isinstance(sub_order, tuple) and sub_order[0] == order[0] and sub_order[1] < order[1]:
            return Hyperplane(points=s, kind=HyperplaneKind.GRID)
    return Hyperplane(points=s, kind=HyperplaneKind.OTHER)


def hyperplane_masks(g: PointLineGeometry) -> list[PointSet]:
    """Masks of all geometric hyperplanes in ascending order (exhaustive subset scan)."""
    if g.num_points > MAX_HYPERPLANE_SCAN_POINTS:
        raise CapacityError(
            f"Hyperplane scan needs at most {MAX_HYPERPLANE_SCAN_POINTS} points, "
            f"got {g.num_points}",
        )
    # the scan body is is_hyperplane without the range checks
    lines = sorted(g.lines, key=lambda line: line.bit_count())
    found = []
    for s in range(g.all_points):
        for line in lines:
            met = line & s
            if met != line and met.bit_count() != 1:
                break
        else:
            found.append(s)
    return found


def enumerate_hyperplanes(g: PointLineGeometry) -> list[Hyperplane]:
    """All geometric hyperplanes, classified, in ascending mask order."""
    order = verify_gq(g)
    return [classify_hyperplane(g, s, order) for s in hyperplane_masks(g)]


def dual(g: PointLineGeometry) -> PointLineGeometry:
    """Swap points and lines: dual point j is line j, dual line i is the pencil of point i."""
    for x, on_lines in enumerate(g.point_lines):
        if len(on_lines) < 2:  # noqa: PLR2004
            raise GeometryError(f"Point {x} is on {len(on_lines)} lines, the dual needs two or more")
    return PointLineGeometry(g.num_lines, g.point_lines, name=f"{g.name} dual".strip())


def grid_geometry(rows: int, cols: int) -> PointLineGeometry:
    """Rows x cols grid: point r*cols + c, lines are the rows and the columns."""
    if rows < 2 or cols < 2:  # noqa: PLR2004
        raise DomainError(f"Grid needs at least 2 rows and 2 columns, got {rows}x{cols}")
    row_lines = [[r * cols + c for c in range(cols)] for r in range(rows)]
    col_lines = [[r * cols + c for r in range(rows)] for c in range(cols)]
    return PointLineGeometry(rows * cols, row_lines + col_lines, name=f"{rows}x{cols} grid")


def collinearity_edges(g: PointLineGeometry) -> list[tuple[int, int]]:
    """Unordered pairs of distinct collinear points, sorted."""
    return [
        (x, y)
        for x in range(g.num_points)
        for y in mask_indices(g.neighbors[x])
        if y > x
    ]


if __name__ == "__main__":  # pragma: no cover
    from pprint import pprint

    grid = grid_geometry(3, 3)
    print(grid, verify_gq(grid))
    pprint(enumerate_hyperplanes(grid))
