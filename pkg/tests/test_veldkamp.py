from itertools import combinations

import pytest

from errors import ClassificationError, DomainError, IsomorphismError
from geometry import enumerate_hyperplanes, grid_geometry
from models import Hyperplane, HyperplaneKind, LineType, VeldkampLine, mask_indices
from veldkamp import (
    VeldkampSpace,
    build_veldkamp_space,
    classify_veldkamp_line,
    core_set_census,
    lines_through,
    pentad_center,
    third_member,
    veldkamp_line_through,
    verify_pg42_isomorphism,
)
from w2 import IsomorphismMap, build_q42


@pytest.fixture(scope="module")
def space(doily):
    return doily.veldkamp


def test_counts(space):
    assert len(space.points) == 31
    assert len(space.lines) == 155
    assert sum(space.census.values()) == 155


def test_table1(space):
    rows = [(row.line_type, row.perps, row.grids, row.ovoids, row.count) for row in space.table1()]
    assert rows == [
        (LineType.SINGLE_POINT, 1, 0, 2, 15),
        (LineType.COLLINEAR_TRIPLE, 3, 0, 0, 15),
        (LineType.UNICENTRIC_TRIAD, 1, 1, 1, 60),
        (LineType.TRICENTRIC_TRIAD, 3, 0, 0, 20),
        (LineType.PENTAD, 1, 2, 0, 45),
    ]


def test_lines_are_sorted_and_unique(space):
    keys = [line.key for line in space.lines]
    assert keys == sorted(set(keys))
    for line in space.lines:
        assert list(line.key) == sorted(line.key)


def test_third_member_rule(doily, space):
    for line in space.lines:
        a, b, c = line.key
        assert third_member(doily.w2, a, b) == c
        assert third_member(doily.w2, b, c) == a


def test_every_pair_on_one_line(space):
    seen = set()
    for line in space.lines:
        for pair in combinations(line.key, 2):
            assert pair not in seen
            seen.add(pair)
    assert len(seen) == 31 * 30 // 2


def test_line_through_two_perps(doily, space):
    first, second = doily.hyperplanes_of(HyperplaneKind.PERP)[:2]
    line = veldkamp_line_through(doily.w2, first, second, doily.hyperplanes)
    assert line in space.lines
    assert line.core == first.points & second.points


def test_line_through_rejects_bad_input(doily):
    h = doily.hyperplanes[0]
    with pytest.raises(DomainError):
        veldkamp_line_through(doily.w2, h, h)
    fake = Hyperplane(points=0b11, kind=HyperplaneKind.OTHER)
    with pytest.raises(DomainError):
        veldkamp_line_through(doily.w2, h, fake)


def test_lines_through_each_point(space):
    for h in space.points:
        assert len(lines_through(space, h)) == 15


def test_core_set_census(space):
    assert core_set_census(space) == {x: (4, 3) for x in range(15)}


def test_pentad_center(doily, space):
    pentad = next(line for line in space.lines if line.line_type == LineType.PENTAD)
    center = pentad_center(doily.w2, pentad.core)
    assert center is not None
    assert doily.w2.neighbors[center] & pentad.core == pentad.core
    single = next(line for line in space.lines if line.line_type == LineType.SINGLE_POINT)
    assert pentad_center(doily.w2, single.core) is None


def test_classify_veldkamp_line(doily, space):
    for line in space.lines[::10]:
        assert classify_veldkamp_line(doily.w2, line) == line.line_type


def test_classify_unknown_core(doily):
    members = tuple(doily.hyperplanes[:3])
    line = VeldkampLine(members=members, core=0b11, line_type=LineType.SINGLE_POINT)
    with pytest.raises(ClassificationError):
        classify_veldkamp_line(doily.w2, line)


def test_hyperplane_lookup(space):
    h = space.points[5]
    assert space.hyperplane(h.points) is h
    with pytest.raises(DomainError):
        space.hyperplane(0b1)


def test_pg42_on_quadric_model():
    q = build_q42()
    report = verify_pg42_isomorphism(build_veldkamp_space(q), q)
    assert report.lines_checked == 155
    assert len(set(report.functionals.values())) == 31


def test_pg42_through_model_map(doily):
    report = doily.pg42
    assert len(report.functionals) == 31
    for line in doily.veldkamp.lines:
        a, b, c = (report.functionals[mask] for mask in line.key)
        assert a ^ b ^ c == 0


def test_pg42_needs_quadric(doily):
    with pytest.raises(DomainError):
        verify_pg42_isomorphism(doily.veldkamp, doily.w2)


def test_pg42_with_bad_map(doily):
    collapse = IsomorphismMap(tuple([0] * 15))
    with pytest.raises(IsomorphismError):
        verify_pg42_isomorphism(doily.veldkamp, doily.q42, collapse)


def test_grid_veldkamp_space_is_pg32():
    grid = grid_geometry(3, 3)
    space = build_veldkamp_space(grid)
    assert len(space.points) == 15
    assert len(space.lines) == 35
    assert {line.line_type for line in space.lines} == {None}
    for h in space.points:
        assert len(lines_through(space, h)) == 7


def test_grid_lines_have_no_type():
    grid = grid_geometry(3, 3)
    first, second = enumerate_hyperplanes(grid)[:2]
    line = veldkamp_line_through(grid, first, second)
    assert line.line_type is None
    with pytest.raises(ClassificationError):
        classify_veldkamp_line(grid, line)


def test_line_through_two_ovoids(doily):
    first, second = doily.hyperplanes_of(HyperplaneKind.OVOID)[:2]
    line = veldkamp_line_through(doily.w2, first, second, doily.hyperplanes)
    assert line.core.bit_count() == 1
    assert line.line_type == LineType.SINGLE_POINT
    (third,) = [h for h in line.members if h.points not in (first.points, second.points)]
    assert third.kind == HyperplaneKind.PERP
    assert third.points == doily.w2.neighbors[mask_indices(line.core)[0]]


def test_line_through_two_grids_sharing_a_pentad(doily):
    first, second = next(
        (a, b)
        for a, b in combinations(doily.hyperplanes_of(HyperplaneKind.GRID), 2)
        if (a.points & b.points).bit_count() == 5  # noqa: PLR2004
    )
    line = veldkamp_line_through(doily.w2, first, second)
    assert line.line_type == LineType.PENTAD
    assert line.composition == (1, 2, 0)
    assert pentad_center(doily.w2, line.core) is not None


def test_table1_rejects_mixed_compositions(doily, space):
    single = next(line for line in space.lines if line.line_type == LineType.SINGLE_POINT)
    perps = next(line for line in space.lines if line.line_type == LineType.COLLINEAR_TRIPLE)
    mislabeled = perps.model_copy(update={"line_type": LineType.SINGLE_POINT})
    mixed = VeldkampSpace(doily.w2, space.points, [single, mislabeled])
    with pytest.raises(ClassificationError):
        mixed.table1()
