from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field, computed_field


def mask_indices(mask: int) -> list[int]:
    """Indices of the set bits of `mask`, ascending."""
    indices = []
    index = 0
    while mask:
        if mask & 1:
            indices.append(index)
        mask >>= 1
        index += 1
    return indices


class HyperplaneKind(StrEnum):
    """Kind of a geometric hyperplane."""

    PERP = "perp"
    GRID = "grid"
    OVOID = "ovoid"
    OTHER = "other"


class TriadKind(StrEnum):
    """Triad classification by the number of centers."""

    ACENTRIC = "acentric"
    UNICENTRIC = "unicentric"
    TRICENTRIC = "tricentric"
    CENTRIC_OTHER = "centric-other"


class LineType(StrEnum):
    """Veldkamp line types, named after their core-sets."""

    SINGLE_POINT = "Single Point"
    COLLINEAR_TRIPLE = "Collinear Triple"
    UNICENTRIC_TRIAD = "Unicentric Triad"
    TRICENTRIC_TRIAD = "Tricentric Triad"
    PENTAD = "Pentad"


class GqViolation(BaseModel):
    """First generalized quadrangle axiom a geometry breaks."""

    model_config = ConfigDict(frozen=True)

    axiom: str = Field(..., description="'i', 'ii', 'iii' or 'counts'")
    witness: tuple[int, ...] = Field(..., description="Point and/or line indices")
    message: str


class TriadReport(BaseModel):
    """Three pairwise non-collinear points and their centers."""

    model_config = ConfigDict(frozen=True)

    triple: tuple[int, int, int]
    centers: int = Field(..., description="Point mask of the common perp")
    kind: TriadKind

    @property
    def mask(self) -> int:
        """Point mask of the triple."""
        return sum(1 << point for point in self.triple)


class Hyperplane(BaseModel):
    """Geometric hyperplane with its classification."""

    model_config = ConfigDict(frozen=True)

    points: int = Field(..., description="Point mask")
    kind: HyperplaneKind
    center: int | None = Field(None, description="Center point index for perp-sets")

    @property
    def size(self) -> int:
        """Number of points."""
        return self.points.bit_count()

    @property
    def indices(self) -> list[int]:
        """Point indices, ascending."""
        return mask_indices(self.points)


class VeldkampLine(BaseModel):
    """Three hyperplanes pairwise meeting in the same core-set."""

    model_config = ConfigDict(frozen=True)

    members: tuple[Hyperplane, Hyperplane, Hyperplane] = Field(
        ...,
        description="Sorted by point mask",
    )
    core: int = Field(..., description="Point mask of the common intersection")
    line_type: LineType | None = Field(None, description="None unless the geometry is a GQ(2, 2)")

    @property
    def key(self) -> tuple[int, int, int]:
        """Member masks, ascending."""
        return tuple(member.points for member in self.members)  # type: ignore[return-value]

    @property
    def composition(self) -> tuple[int, int, int]:
        """Number of (perp, grid, ovoid) members."""
        kinds = [member.kind for member in self.members]
        return (
            kinds.count(HyperplaneKind.PERP),
            kinds.count(HyperplaneKind.GRID),
            kinds.count(HyperplaneKind.OVOID),
        )


class Table1Row(BaseModel):
    """One row of the Veldkamp line census."""

    line_type: LineType
    perps: int
    grids: int
    ovoids: int
    count: int


class Check(BaseModel):
    """One verified claim."""

    name: str
    expected: str
    actual: str
    passed: bool
    witness: str | None = Field(None, description="First counterexample when the check fails")


class VerificationReport(BaseModel):
    """All checks of a verification run."""

    checks: list[Check] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def overall(self) -> bool:
        """True when every check passed."""
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self) -> Check | None:
        """First failing check, if any."""
        return next((check for check in self.checks if not check.passed), None)


class Pg42Report(BaseModel):
    """Veldkamp points labelled by dual functionals of GF(2)^5."""

    functionals: dict[int, int] = Field(
        ...,
        description="Hyperplane point mask -> functional mask",
    )
    lines_checked: int


class MerminSquare(BaseModel):
    """3x3 arrangement of a grid's operators, by symplectic label."""

    model_config = ConfigDict(frozen=True)

    grid: int = Field(..., description="Point mask of the grid hyperplane")
    cells: tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]] = Field(
        ...,
        description="Symplectic label masks, row-major",
    )
    row_signs: tuple[int, int, int]
    col_signs: tuple[int, int, int]

    @property
    def sign_product(self) -> int:
        """Product of all six line signs."""
        product = 1
        for sign in (*self.row_signs, *self.col_signs):
            product *= sign
        return product

    @property
    def minus_count(self) -> int:
        """How many of the six products are minus the identity."""
        return (*self.row_signs, *self.col_signs).count(-1)


class PointRecord(BaseModel):
    """Exported W(2) point."""

    index: int
    label: int = Field(..., description="Symplectic label mask (a1, b1, a2, b2 in bits 0..3)")
    bits: str
    mnemonic: str


class LineRecord(BaseModel):
    """Exported W(2) line."""

    index: int
    mask: int
    points: list[int]


class HyperplaneRecord(BaseModel):
    """Exported Veldkamp point."""

    mask: int
    points: list[int]
    kind: HyperplaneKind
    center: int | None = None
    functional: int = Field(..., description="PG(4,2) coordinates of the dual functional")


class CoreSetReport(BaseModel):
    """Pauli operators of a Veldkamp line core-set."""

    line_type: LineType | None
    operators: list[str] = Field(..., description="Mnemonics in point order")
    commuting_pairs: int
    non_commuting_pairs: int
    center: str | None = Field(None, description="Common commuting operator of a triad or pentad")


class VeldkampLineRecord(BaseModel):
    """Exported Veldkamp line."""

    members: list[int]
    core: int
    core_points: list[int]
    line_type: LineType | None
    core_operators: CoreSetReport


class DoilyExport(BaseModel):
    """Full model as written by `export --format=json`."""

    points: list[PointRecord]
    lines: list[LineRecord]
    hyperplanes: list[HyperplaneRecord]
    veldkamp_lines: list[VeldkampLineRecord]
    table1: list[Table1Row]
    hyperplane_census: dict[str, int]


class Table2Kind(StrEnum):
    """Operator reading of a W(2) hyperplane."""

    MUTUALLY_NON_COMMUTING = "set of five mutually non-commuting operators"
    COMMUTING_WITH_REFERENCE = "set of six operators commuting with a given one"
    MERMIN_SQUARE = "nine operators of a Mermin square"


class Table2Tag(BaseModel):
    """A hyperplane read as a set of two-qubit Pauli operators."""

    model_config = ConfigDict(frozen=True)

    kind: Table2Kind
    operators: tuple[str, ...] = Field(..., description="Mnemonics, reference operator excluded")
    reference: str | None = Field(None, description="Mnemonic of the perp-set center")


class Table2Row(BaseModel):
    """Hyperplanes of one kind read as operator sets."""

    kind: HyperplaneKind
    size: int
    count: int
    reading: Table2Kind
