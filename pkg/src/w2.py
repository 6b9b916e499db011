"""The doily W(2) in its symplectic and quadric models.

Usage:
    w = build_w2_symplectic()
    q = build_q42()
    find_isomorphism(w, q)
    automorphism_count(w)  # 720
"""

from collections.abc import Iterator, Sequence
from itertools import combinations
from typing import NamedTuple

from errors import CapacityError, DomainError, GeometryError
from geometry import PointLineGeometry, PointSet, mask_of, perp
from gf2 import (
    Gf2Vector,
    ProjectiveSpace,
    projective_points,
    quadratic_form_q42,
    symplectic_form,
)
from models import mask_indices

SYMPLECTIC = "symplectic"
QUADRIC = "quadric"
MAX_AUTOMORPHISM_POINTS = 15
FANO_ORDER = 2


class LabeledW2(PointLineGeometry):
    """W(2) whose points carry GF(2)^4 (symplectic) or GF(2)^5 (quadric) labels."""

    def __init__(self, labels: Sequence[Gf2Vector], lines: list[list[int]], model: str) -> None:
        """Init.

        :param labels: coordinates of each point
        :param lines: lines as point indices
        :param model: SYMPLECTIC or QUADRIC
        """
        super().__init__(len(labels), lines, labels=labels, name=f"W(2) {model}")
        self.model = model
        self._index_of_mask = {label.mask: index for index, label in enumerate(labels)}

    def index_of(self, label: Gf2Vector) -> int:
        """Point index carrying `label`."""
        try:
            return self._index_of_mask[label.mask]
        except KeyError as e:
            raise DomainError(f"{label} is not a point of {self.name}") from e

    def label_of(self, x: int) -> Gf2Vector:
        """Coordinates of point `x`."""
        self.check_point(x)
        return self.labels[x]  # type: ignore[index]


class IsomorphismMap(NamedTuple):
    """Point bijection from geometry A to geometry B that maps lines onto lines."""

    point_bijection: tuple[int, ...]

    def image(self, mask: PointSet) -> PointSet:
        """Image of a point set."""
        return mask_of(self.point_bijection[x] for x in mask_indices(mask))


def _labeled_from_space(space: ProjectiveSpace, points: list[Gf2Vector], model: str) -> LabeledW2:
    """Keep the lines of `space` whose three points are all in `points`."""
    index_of = {point.mask: index for index, point in enumerate(points)}
    lines = [
        [index_of[mask] for mask in line]
        for line in space.lines
        if all(mask in index_of for mask in line)
    ]
    return LabeledW2(points, lines, model)


def build_w2_symplectic() -> LabeledW2:
    """Points of PG(3,2) with the lines totally isotropic for the symplectic form."""
    space = ProjectiveSpace(3)
    points = projective_points(3)
    by_mask = {point.mask: point for point in points}
    index_of = {point.mask: index for index, point in enumerate(points)}
    lines = [
        [index_of[mask] for mask in line]
        for line in space.lines
        if all(
            symplectic_form(by_mask[u], by_mask[v]) == 0 for u, v in combinations(line, 2)
        )
    ]
    return LabeledW2(points, lines, SYMPLECTIC)


def build_q42() -> LabeledW2:
    """Points and lines of the parabolic quadric x0 + x1*x2 + x3*x4 = 0 in PG(4,2)."""
    points = [point for point in projective_points(4) if quadratic_form_q42(point) == 0]
    return _labeled_from_space(ProjectiveSpace(4), points, QUADRIC)


def _profile(g: PointLineGeometry, x: int) -> tuple[int, ...]:
    """Sizes of the lines through `x`, sorted."""
    return tuple(sorted(g.lines[index].bit_count() for index in g.point_lines[x]))


def _isomorphisms(a: PointLineGeometry, b: PointLineGeometry) -> Iterator[IsomorphismMap]:
    """All line-preserving point bijections a -> b in lexicographic order.

    Points of `a` are assigned in index order; candidate images are tried
    in ascending order and pruned on line profiles, collinearity with the
    points already placed, and lines whose last point is being placed.
    """
    if a.num_points != b.num_points or a.num_lines != b.num_lines:
        return
    a_profiles = [_profile(a, x) for x in range(a.num_points)]
    b_profiles = [_profile(b, y) for y in range(b.num_points)]
    if sorted(a_profiles) != sorted(b_profiles):
        return
    completed_at: list[list[PointSet]] = [[] for _ in range(a.num_points)]
    for line in a.lines:
        completed_at[line.bit_length() - 1].append(line)

    n = a.num_points
    images = [-1] * n
    used = [False] * n

    def fits(x: int, y: int) -> bool:
        if used[y] or a_profiles[x] != b_profiles[y]:
            return False
        for p in range(x):
            if a.collinear(p, x) != b.collinear(images[p], y):
                return False
        images[x] = y
        for line in completed_at[x]:
            if not b.is_line(mask_of(images[p] for p in mask_indices(line))):
                return False
        return True

    def extend(x: int) -> Iterator[IsomorphismMap]:
        if x == n:
            yield IsomorphismMap(tuple(images))
            return
        for y in range(n):
            if fits(x, y):
                used[y] = True
                yield from extend(x + 1)
                used[y] = False
        images[x] = -1

    yield from extend(0)


def find_isomorphism(a: PointLineGeometry, b: PointLineGeometry) -> IsomorphismMap | None:
    """Lexicographically first isomorphism a -> b, or None."""
    return next(_isomorphisms(a, b), None)


def automorphism_count(g: PointLineGeometry) -> int:
    """Number of line-preserving point permutations."""
    if g.num_points > MAX_AUTOMORPHISM_POINTS:
        raise CapacityError(
            f"Automorphism search needs at most {MAX_AUTOMORPHISM_POINTS} points, "
            f"got {g.num_points}",
        )
    return sum(1 for _ in _isomorphisms(g, g))


def is_projective_plane(g: PointLineGeometry, order: int) -> bool:
    """Projective plane axioms: n^2+n+1 points and lines, n+1 points per line, pairs on one line."""
    size = order * order + order + 1
    if g.num_points != size or g.num_lines != size:
        return False
    if any(line.bit_count() != order + 1 for line in g.lines):
        return False
    # every pair lies on at most one line by construction; count the covered pairs
    covered = sum(line.bit_count() * (line.bit_count() - 1) // 2 for line in g.lines)
    return covered == size * (size - 1) // 2


def fano_plane_at(w: LabeledW2, x: int) -> PointLineGeometry:
    """Projective plane on x-perp whose lines are the double perps {u, v}-perp-perp."""
    if not isinstance(x, int) or not 0 <= x < w.num_points:
        raise DomainError(f"Point {x} is not inside 0..{w.num_points - 1}")
    points = mask_indices(w.neighbors[x])
    spans = sorted(
        {perp(w, perp(w, mask_of(pair))) for pair in combinations(points, 2)},
    )
    index_of = {point: new for new, point in enumerate(points)}
    plane = PointLineGeometry(
        len(points),
        [[index_of[point] for point in mask_indices(span)] for span in spans],
        labels=[w.labels[point] for point in points] if w.labels is not None else None,
        name=f"Fano plane at {x}",
    )
    if not is_projective_plane(plane, FANO_ORDER):
        raise GeometryError(f"Double perps on the perp of {x} do not form a Fano plane")
    return plane


def fano_point_indices(w: LabeledW2, x: int) -> list[int]:
    """W(2) point index of every point of fano_plane_at(w, x), in plane order."""
    return mask_indices(w.neighbors[x])


def standard_fano_plane() -> PointLineGeometry:
    """PG(2,2) built from the nonzero vectors of GF(2)^3."""
    space = ProjectiveSpace(2)
    return PointLineGeometry(
        len(space.points),
        [[mask - 1 for mask in line] for line in space.lines],
        labels=space.points,
        name="PG(2,2)",
    )


if __name__ == "__main__":  # pragma: no cover
    from geometry import dual, verify_gq

    w = build_w2_symplectic()
    q = build_q42()
    print(w, verify_gq(w))
    print(q, verify_gq(q))
    print("model isomorphism:", find_isomorphism(w, q))
    print("self-duality:", find_isomorphism(w, dual(w)))
    print("automorphisms:", automorphism_count(w))
