"""Everything built from one W(2), computed once on first use."""

from functools import cached_property

from errors import IsomorphismError
from geometry import enumerate_triads, verify_gq
from models import GqViolation, Hyperplane, HyperplaneKind, MerminSquare, Pg42Report, TriadReport
from pauli import PauliBijection, build_bijection, mermin_square
from veldkamp import VeldkampSpace, build_veldkamp_space, verify_pg42_isomorphism
from w2 import IsomorphismMap, LabeledW2, build_q42, build_w2_symplectic, find_isomorphism


class DoilyModel:
    """Lazily built W(2) artefacts.

    The symplectic model can be replaced, which is how the verification
    suite is fed a damaged quadrangle in tests.
    """

    def __init__(self, symplectic: LabeledW2 | None = None) -> None:
        """Init.

        :param symplectic: W(2) to use instead of build_w2_symplectic()
        """
        self._symplectic = symplectic

    @cached_property
    def w2(self) -> LabeledW2:
        """Symplectic model."""
        return self._symplectic if self._symplectic is not None else build_w2_symplectic()

    @cached_property
    def q42(self) -> LabeledW2:
        """Quadric model."""
        return build_q42()

    @cached_property
    def order(self) -> tuple[int, int] | GqViolation:
        """verify_gq of the symplectic model."""
        return verify_gq(self.w2)

    @cached_property
    def model_map(self) -> IsomorphismMap | None:
        """Isomorphism from the symplectic onto the quadric model."""
        return find_isomorphism(self.w2, self.q42)

    @cached_property
    def veldkamp(self) -> VeldkampSpace:
        """Veldkamp space of the symplectic model."""
        return build_veldkamp_space(self.w2)

    @property
    def hyperplanes(self) -> list[Hyperplane]:
        """Veldkamp points, ascending mask."""
        return self.veldkamp.points

    def hyperplanes_of(self, kind: HyperplaneKind) -> list[Hyperplane]:
        """Hyperplanes of one kind."""
        return [h for h in self.hyperplanes if h.kind == kind]

    @cached_property
    def triads(self) -> list[TriadReport]:
        """All triads of the symplectic model."""
        return enumerate_triads(self.w2)

    @cached_property
    def bijection(self) -> PauliBijection:
        """Certified point -> Pauli operator map."""
        return build_bijection(self.w2)

    @cached_property
    def mermin_squares(self) -> list[MerminSquare]:
        """One square per grid, in grid mask order."""
        return [mermin_square(h, self.bijection) for h in self.hyperplanes_of(HyperplaneKind.GRID)]

    @cached_property
    def pg42(self) -> Pg42Report:
        """PG(4,2) coordinates of the Veldkamp points."""
        if self.model_map is None:
            raise IsomorphismError(f"{self.w2.name} is not isomorphic to {self.q42.name}")
        return verify_pg42_isomorphism(self.veldkamp, self.q42, self.model_map)
