"""Veldkamp space of a point-line geometry, with the W(2) line census.

Usage:
    space = build_veldkamp_space(build_w2_symplectic())
    space.table1()
"""

from collections import Counter
from itertools import combinations

from errors import ClassificationError, DomainError, GeometryError, IsomorphismError
from geometry import (
    PointLineGeometry,
    PointSet,
    enumerate_hyperplanes,
    enumerate_triads,
    is_hyperplane,
    verify_gq,
)
from gf2 import dot, projective_points
from models import (
    Hyperplane,
    LineType,
    Pg42Report,
    Table1Row,
    TriadKind,
    VeldkampLine,
    mask_indices,
)
from w2 import QUADRIC, IsomorphismMap, LabeledW2

_TRIAD_LINE_TYPES = {
    TriadKind.UNICENTRIC: LineType.UNICENTRIC_TRIAD,
    TriadKind.TRICENTRIC: LineType.TRICENTRIC_TRIAD,
}
PENTAD_SIZE = 5
W2_ORDER = (2, 2)


class VeldkampSpace:
    """Hyperplanes as points, Veldkamp lines as lines.

    Lines carry a type only when the geometry is a GQ(2, 2).
    """

    def __init__(
        self,
        geometry: PointLineGeometry,
        points: list[Hyperplane],
        lines: list[VeldkampLine],
    ) -> None:
        """Init."""
        self.geometry = geometry
        self.points = points
        self.lines = lines
        self.census: Counter[LineType | None] = Counter(line.line_type for line in lines)
        self.compositions: dict[LineType | None, set[tuple[int, int, int]]] = {}
        for line in lines:
            self.compositions.setdefault(line.line_type, set()).add(line.composition)
        self._by_mask = {point.points: point for point in points}

    def hyperplane(self, mask: PointSet) -> Hyperplane:
        """Veldkamp point with this point mask."""
        try:
            return self._by_mask[mask]
        except KeyError as e:
            raise DomainError(f"{mask:#x} is not a hyperplane of {self.geometry}") from e

    def table1(self) -> list[Table1Row]:
        """Per line type: hyperplane composition of a line and the number of lines.

        A type without lines gets composition (0, 0, 0).
        """
        rows = []
        for line_type in LineType:
            compositions = sorted(self.compositions.get(line_type, set()))
            if len(compositions) > 1:
                raise ClassificationError(
                    f"{line_type} lines have {len(compositions)} compositions: {compositions}",
                )
            perps, grids, ovoids = compositions[0] if compositions else (0, 0, 0)
            rows.append(
                Table1Row(
                    line_type=line_type,
                    perps=perps,
                    grids=grids,
                    ovoids=ovoids,
                    count=self.census[line_type],
                ),
            )
        return rows


def third_member(g: PointLineGeometry, h1: PointSet, h2: PointSet) -> PointSet:
    """Complement of the symmetric difference: the third hyperplane on the line h1 h2."""
    return g.all_points & ~(h1 ^ h2)


def pentad_center(g: PointLineGeometry, core: PointSet) -> int | None:
    """Common point of two distinct lines whose union is `core`, if any."""
    for c in mask_indices(core):
        inside = [g.lines[index] for index in g.point_lines[c] if g.lines[index] & core == g.lines[index]]
        for first, second in combinations(inside, 2):
            if first | second == core:
                return c
    return None


def _core_type(
    g: PointLineGeometry,
    core: PointSet,
    triad_kinds: dict[PointSet, TriadKind],
) -> LineType:
    """Line type from the cardinality and structure of a core-set."""
    size = core.bit_count()
    if size == 1:
        return LineType.SINGLE_POINT
    if size == 3:  # noqa: PLR2004
        if g.is_line(core):
            return LineType.COLLINEAR_TRIPLE
        if (kind := triad_kinds.get(core)) in _TRIAD_LINE_TYPES:
            return _TRIAD_LINE_TYPES[kind]  # type: ignore[index]
    if size == PENTAD_SIZE and pentad_center(g, core) is not None:
        return LineType.PENTAD
    raise ClassificationError(f"Core-set {mask_indices(core)} matches no Veldkamp line type")


def _triad_kinds(g: PointLineGeometry) -> dict[PointSet, TriadKind] | None:
    """Triad mask -> kind, or None when `g` is not a GQ(2, 2) and its lines stay untyped."""
    if verify_gq(g) != W2_ORDER:
        return None
    return {triad.mask: triad.kind for triad in enumerate_triads(g)}


def classify_veldkamp_line(
    g: PointLineGeometry,
    line: VeldkampLine,
    triad_kinds: dict[PointSet, TriadKind] | None = None,
) -> LineType:
    """Type of a Veldkamp line of a GQ(2, 2), from its core-set."""
    if triad_kinds is None and (triad_kinds := _triad_kinds(g)) is None:
        raise ClassificationError(f"Veldkamp line types are defined for GQ(2, 2) only, got {g}")
    return _core_type(g, line.core, triad_kinds)


def veldkamp_line_through(
    g: PointLineGeometry,
    h1: Hyperplane,
    h2: Hyperplane,
    hyperplanes: list[Hyperplane] | None = None,
    triad_kinds: dict[PointSet, TriadKind] | None = None,
) -> VeldkampLine:
    """All hyperplanes H with h1 & h2 == h1 & H == h2 & H, plus h1 and h2.

    The line is typed when `g` is a GQ(2, 2), otherwise line_type is None.

    :param hyperplanes: enumerate_hyperplanes(g), if already known
    :param triad_kinds: triad mask -> kind, if already known
    """
    if triad_kinds is None:
        triad_kinds = _triad_kinds(g)
    return _line_through(g, h1, h2, hyperplanes, triad_kinds)


def _line_through(
    g: PointLineGeometry,
    h1: Hyperplane,
    h2: Hyperplane,
    hyperplanes: list[Hyperplane] | None,
    triad_kinds: dict[PointSet, TriadKind] | None,
) -> VeldkampLine:
    if h1.points == h2.points:
        raise DomainError(f"A Veldkamp line needs two distinct hyperplanes, got {h1.indices} twice")
    for h in (h1, h2):
        if not is_hyperplane(g, h.points):
            raise DomainError(f"{h.indices} is not a geometric hyperplane of {g}")
    if hyperplanes is None:
        hyperplanes = enumerate_hyperplanes(g)
    core = h1.points & h2.points
    members = [
        h
        for h in hyperplanes
        if h.points in (h1.points, h2.points)
        or (h.points & h1.points == core and h.points & h2.points == core)
    ]
    if len(members) != 3:  # noqa: PLR2004
        raise GeometryError(
            f"Line through {h1.indices} and {h2.indices} has {len(members)} points, expected 3",
        )
    members.sort(key=lambda h: h.points)
    return VeldkampLine(
        members=tuple(members),  # type: ignore[arg-type]
        core=core,
        line_type=_core_type(g, core, triad_kinds) if triad_kinds is not None else None,
    )


def build_veldkamp_space(g: PointLineGeometry) -> VeldkampSpace:
    """Veldkamp space of `g` from the lines through every pair of hyperplanes."""
    hyperplanes = enumerate_hyperplanes(g)
    triad_kinds = _triad_kinds(g)
    lines: dict[tuple[int, int, int], VeldkampLine] = {}
    for h1, h2 in combinations(hyperplanes, 2):
        line = _line_through(g, h1, h2, hyperplanes, triad_kinds)
        lines.setdefault(line.key, line)
    return VeldkampSpace(g, hyperplanes, [lines[key] for key in sorted(lines)])


def lines_through(v: VeldkampSpace, h: Hyperplane) -> list[VeldkampLine]:
    """Veldkamp lines containing `h`."""
    return [line for line in v.lines if h.points in line.key]


def core_set_census(v: VeldkampSpace) -> dict[int, tuple[int, int]]:
    """Per point x: unicentric-triad cores centered at x and pentad cores centered at x."""
    g = v.geometry
    triad_centers = {triad.mask: triad.centers for triad in enumerate_triads(g)}
    census = {x: [0, 0] for x in range(g.num_points)}
    for line in v.lines:
        if line.line_type is LineType.UNICENTRIC_TRIAD:
            (center,) = mask_indices(triad_centers[line.core])
            census[center][0] += 1
        elif line.line_type is LineType.PENTAD:
            census[pentad_center(g, line.core)][1] += 1  # type: ignore[index]
    return {x: (uni, pentads) for x, (uni, pentads) in census.items()}


def verify_pg42_isomorphism(
    v: VeldkampSpace,
    q: LabeledW2,
    model_map: IsomorphismMap | None = None,
) -> Pg42Report:
    """Label every Veldkamp point by the dual functional of GF(2)^5 that cuts it out of the quadric.

    :param v: Veldkamp space, built on `q` or on a geometry mapped onto `q` by `model_map`
    :param q: the quadric model
    :param model_map: isomorphism from v.geometry onto q, when v is not built on q
    """
    if q.model != QUADRIC:
        raise DomainError(f"Expected the quadric model, got {q.name}")
    zero_sets: dict[PointSet, list[int]] = {}
    for functional in projective_points(4):
        zeros = sum(1 << x for x, label in enumerate(q.labels) if dot(functional, label) == 0)  # type: ignore[arg-type]
        zero_sets.setdefault(zeros, []).append(functional.mask)

    functionals: dict[PointSet, int] = {}
    for h in v.points:
        on_quadric = model_map.image(h.points) if model_map is not None else h.points
        matches = zero_sets.get(on_quadric, [])
        if len(matches) != 1:
            raise IsomorphismError(
                f"Hyperplane {h.indices} is cut out by {len(matches)} functionals, expected one",
            )
        functionals[h.points] = matches[0]
    if len(set(functionals.values())) != len(functionals) or len(functionals) != len(zero_sets):
        raise IsomorphismError(
            f"{len(functionals)} hyperplanes do not match the {len(zero_sets)} functionals one to one",
        )
    for line in v.lines:
        f1, f2, f3 = (functionals[mask] for mask in line.key)
        if f1 ^ f2 ^ f3:
            raise IsomorphismError(
                f"Line {[mask_indices(mask) for mask in line.key]} maps to functionals "
                f"{f1:05b}, {f2:05b}, {f3:05b} which do not sum to zero",
            )
    return Pg42Report(functionals=functionals, lines_checked=len(v.lines))


if __name__ == "__main__":  # pragma: no cover
    from pprint import pprint

    from w2 import build_q42

    quadric = build_q42()
    space = build_veldkamp_space(quadric)
    print(f"{len(space.points)} points, {len(space.lines)} lines")
    pprint(space.table1())
    report = verify_pg42_isomorphism(space, quadric)
    print(f"PG(4,2) labels checked on {report.lines_checked} lines")
