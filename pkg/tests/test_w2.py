import pytest

from errors import CapacityError, DomainError, GeometryError
from geometry import PointLineGeometry, dual, grid_geometry, verify_gq
from gf2 import Gf2Vector, quadratic_form_q42, span_closure, symplectic_form
from models import mask_indices
from w2 import (
    QUADRIC,
    SYMPLECTIC,
    automorphism_count,
    build_q42,
    build_w2_symplectic,
    fano_plane_at,
    fano_point_indices,
    find_isomorphism,
    is_projective_plane,
    standard_fano_plane,
)


@pytest.fixture(scope="module")
def q42():
    return build_q42()


def test_symplectic_model(w2):
    assert w2.model == SYMPLECTIC
    assert (w2.num_points, w2.num_lines) == (15, 15)
    assert verify_gq(w2) == (2, 2)
    assert [w2.label_of(x).mask for x in range(15)] == list(range(1, 16))


def test_symplectic_lines_are_totally_isotropic(w2):
    for line in w2.lines:
        a, b, c = (w2.label_of(x) for x in mask_indices(line))
        assert symplectic_form(a, b) == symplectic_form(a, c) == symplectic_form(b, c) == 0
        assert (a ^ b) == c


def test_quadric_model(q42):
    assert q42.model == QUADRIC
    assert (q42.num_points, q42.num_lines) == (15, 15)
    assert verify_gq(q42) == (2, 2)
    for label in q42.labels:
        assert quadratic_form_q42(label) == 0


def test_index_of(w2):
    label = Gf2Vector.from_bits((1, 1, 0, 1))
    assert w2.index_of(label) == label.mask - 1
    with pytest.raises(DomainError):
        w2.index_of(Gf2Vector(0, 4))
    with pytest.raises(DomainError):
        w2.label_of(15)


def test_models_are_isomorphic(w2, q42):
    iso = find_isomorphism(w2, q42)
    assert iso is not None
    assert sorted(iso.point_bijection) == list(range(15))
    for line in w2.lines:
        assert q42.is_line(iso.image(line))


def test_first_isomorphism_onto_itself_is_the_identity(w2):
    assert find_isomorphism(w2, w2).point_bijection == tuple(range(15))


def test_non_isomorphic():
    assert find_isomorphism(grid_geometry(3, 3), dual(grid_geometry(3, 3))) is None
    assert find_isomorphism(grid_geometry(3, 3), grid_geometry(2, 3)) is None


def test_transposed_grids_are_isomorphic():
    assert find_isomorphism(grid_geometry(2, 3), grid_geometry(3, 2)) is not None


def test_w2_is_self_dual(w2):
    assert find_isomorphism(w2, dual(w2)) is not None


@pytest.mark.parametrize(
    "geometry, expected",
    [
        (build_w2_symplectic(), 720),
        (grid_geometry(3, 3), 72),
        (PointLineGeometry(3, [[0, 1, 2]]), 6),
    ],
)
def test_automorphisms(geometry, expected):
    assert automorphism_count(geometry) == expected


@pytest.mark.parametrize(
    "geometry",
    [build_w2_symplectic(), build_q42(), grid_geometry(3, 3), grid_geometry(2, 3)],
)
def test_double_dual_is_isomorphic(geometry):
    assert find_isomorphism(dual(dual(geometry)), geometry) is not None


def test_w2_is_not_a_grid(w2):
    assert find_isomorphism(w2, grid_geometry(3, 3)) is None


def test_automorphism_capacity():
    with pytest.raises(CapacityError):
        automorphism_count(grid_geometry(4, 4))


def test_standard_fano_plane():
    plane = standard_fano_plane()
    assert is_projective_plane(plane, 2)
    for line in plane.lines:
        labels = {plane.labels[x] for x in mask_indices(line)}
        assert labels == span_closure(labels)


def test_is_projective_plane_rejects_grid():
    assert not is_projective_plane(grid_geometry(3, 3), 2)


@pytest.mark.parametrize("x", [0, 7, 14])
def test_fano_plane_at(w2, x):
    plane = fano_plane_at(w2, x)
    assert plane.num_points == plane.num_lines == 7
    assert is_projective_plane(plane, 2)
    assert find_isomorphism(plane, standard_fano_plane()) is not None
    points = fano_point_indices(w2, x)
    assert x in points
    assert points == mask_indices(w2.neighbors[x])


def test_fano_lines_are_spans(w2):
    plane = fano_plane_at(w2, 3)
    for line in plane.lines:
        first, second, _ = (plane.labels[p] for p in mask_indices(line))
        assert {plane.labels[p] for p in mask_indices(line)} == span_closure([first, second])


def test_fano_plane_at_bad_point(w2):
    with pytest.raises(DomainError):
        fano_plane_at(w2, 15)


def test_fano_plane_at_broken_geometry(broken_w2):
    with pytest.raises(GeometryError):
        fano_plane_at(broken_w2, mask_indices(build_w2_symplectic().lines[0])[0])
