"""Linear algebra over the two-element field.

Vectors are integer masks: coordinate ``i`` lives in bit ``i``.
The symplectic model of the doily uses coordinates ``(a1, b1, a2, b2)``,
the quadric model uses ``(x0, x1, x2, x3, x4)``.

Usage:
    symplectic_form(Gf2Vector.from_bits((1, 0, 0, 0)), Gf2Vector.from_bits((0, 1, 0, 0)))
"""

from collections.abc import Iterable, Sequence
from itertools import combinations
from typing import NamedTuple

from errors import DimensionError, DomainError

SYMPLECTIC_LENGTH = 4
QUADRIC_LENGTH = 5


class Gf2Vector(NamedTuple):
    """Vector of ``length`` bits packed into ``mask``.

    >>> v = Gf2Vector.from_bits((1, 0, 1, 0))
    >>> v.mask
    5
    >>> str(v ^ v)
    '0000'
    """

    mask: int
    length: int

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "Gf2Vector":
        """Build from coordinates, first coordinate in bit 0."""
        mask = 0
        for index, bit in enumerate(bits):
            if bit not in (0, 1):
                raise DomainError(f"Coordinate {index} is {bit}, expected 0 or 1")
            mask |= bit << index
        return cls(mask, len(bits))

    @property
    def bits(self) -> tuple[int, ...]:
        """Coordinates in order."""
        return tuple((self.mask >> index) & 1 for index in range(self.length))

    @property
    def is_zero(self) -> bool:
        """True for the zero vector."""
        return self.mask == 0

    def __xor__(self, other: "Gf2Vector") -> "Gf2Vector":
        """Vector addition."""
        _check_lengths(self, other)
        return Gf2Vector(self.mask ^ other.mask, self.length)

    def __str__(self) -> str:
        """Coordinates as a bit string."""
        return "".join(str(bit) for bit in self.bits)


class ProjectiveSpace:
    """PG(n,2): all nonzero vectors of length n+1 and all lines {u, v, u+v}."""

    def __init__(self, dimension: int) -> None:
        """Init.

        :param dimension: projective dimension n, at least 1
        """
        self.dimension = dimension
        self.points = projective_points(dimension)
        self.lines = self._lines()

    def _lines(self) -> list[tuple[int, int, int]]:
        """Lines as ascending mask triples, in lexicographic order."""
        return sorted({self.line_through(u, v) for u, v in combinations(self.points, 2)})

    def line_through(self, u: Gf2Vector, v: Gf2Vector) -> tuple[int, int, int]:
        """The unique line through two distinct points."""
        _check_lengths(u, v)
        if u == v or u.is_zero or v.is_zero:
            raise DomainError(f"{u} and {v} are not two distinct projective points")
        return tuple(sorted((u.mask, v.mask, u.mask ^ v.mask)))  # type: ignore[return-value]


def _check_lengths(*vectors: Gf2Vector, expected: int | None = None) -> None:
    """Raise DimensionError unless all vectors share one length (optionally `expected`)."""
    lengths = {vector.length for vector in vectors}
    if expected is not None:
        lengths.add(expected)
    if len(lengths) > 1:
        raise DimensionError(f"Vector lengths differ: {sorted(lengths)}")


def parity(mask: int) -> int:
    """Sum of the bits of `mask` modulo 2."""
    return mask.bit_count() & 1


def dot(u: Gf2Vector, v: Gf2Vector) -> int:
    """Standard inner product, used to evaluate dual functionals."""
    _check_lengths(u, v)
    return parity(u.mask & v.mask)


def symplectic_form(u: Gf2Vector, v: Gf2Vector) -> int:
    """Alternating form a1*b1' + a1'*b1 + a2*b2' + a2'*b2 on GF(2)^4.

    >>> symplectic_form(Gf2Vector.from_bits((1, 0, 1, 0)), Gf2Vector.from_bits((0, 0, 0, 1)))
    1
    """
    _check_lengths(u, v, expected=SYMPLECTIC_LENGTH)
    # swap a_i and b_i of v, then take the plain inner product
    swapped = ((v.mask & 0b0101) << 1) | ((v.mask & 0b1010) >> 1)
    return parity(u.mask & swapped)


def quadratic_form_q42(v: Gf2Vector) -> int:
    """Parabolic form x0 + x1*x2 + x3*x4 on GF(2)^5.

    >>> quadratic_form_q42(Gf2Vector.from_bits((0, 1, 0, 0, 0)))
    0
    """
    _check_lengths(v, expected=QUADRIC_LENGTH)
    x0, x1, x2, x3, x4 = v.bits
    return (x0 + x1 * x2 + x3 * x4) & 1


def q42_polar_form(u: Gf2Vector, v: Gf2Vector) -> int:
    """Bilinear form B(u, v) = Q(u+v) + Q(u) + Q(v) of the parabolic quadric."""
    return quadratic_form_q42(u ^ v) ^ quadratic_form_q42(u) ^ quadratic_form_q42(v)


def projective_points(n: int) -> list[Gf2Vector]:
    """All points of PG(n,2) in ascending mask order.

    >>> [point.mask for point in projective_points(1)]
    [1, 2, 3]
    """
    if n < 1:
        raise DomainError(f"Projective dimension must be at least 1, got {n}")
    return [Gf2Vector(mask, n + 1) for mask in range(1, 1 << (n + 1))]


def span_closure(vectors: Iterable[Gf2Vector]) -> set[Gf2Vector]:
    """All nonzero GF(2)-linear combinations of `vectors`."""
    generators = list(vectors)
    if not generators:
        raise DomainError("Cannot span an empty set of vectors")
    _check_lengths(*generators)
    length = generators[0].length
    span = {0}
    for vector in generators:
        span |= {mask ^ vector.mask for mask in span}
    return {Gf2Vector(mask, length) for mask in span if mask}


if __name__ == "__main__":  # pragma: no cover
    space = ProjectiveSpace(4)
    print(f"PG(4,2): {len(space.points)} points, {len(space.lines)} lines")
    on_quadric = [point for point in space.points if not quadratic_form_q42(point)]
    print(f"Q(4,2): {len(on_quadric)} points")
