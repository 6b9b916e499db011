"""Two-qubit Pauli operators on the points of W(2).

A label (a1, b1, a2, b2) stands for (X^a1 Z^b1) (x) (X^a2 Z^b2). No factor of i
is used, so every matrix is real with entries 0 and +-1; the operator XZ
(which is -iY) is called W in mnemonics, e.g. (1, 1, 0, 1) is "WZ".

Usage:
    bijection = build_bijection(build_w2_symplectic())
    mermin_square(grid, bijection)
"""

from collections import Counter
from collections.abc import Iterable, Sequence
from itertools import combinations
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from errors import CorrespondenceError, DomainError, StructureError
from geometry import PointSet
from gf2 import SYMPLECTIC_LENGTH, Gf2Vector, symplectic_form
from models import (
    CoreSetReport,
    Hyperplane,
    HyperplaneKind,
    LineType,
    MerminSquare,
    Table2Kind,
    Table2Tag,
    VeldkampLine,
    mask_indices,
)
from w2 import LabeledW2

QUBIT_MNEMONICS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "W"}
GRID_LINES = 6

IntMatrix = npt.NDArray[np.int64]


class GaussianMatrix:
    """Square matrix over the Gaussian integers, as integer real and imaginary parts."""

    def __init__(self, re: npt.ArrayLike, im: npt.ArrayLike | None = None) -> None:
        """Init."""
        self.re: IntMatrix = np.array(re, dtype=np.int64)
        self.im: IntMatrix = (
            np.zeros_like(self.re) if im is None else np.array(im, dtype=np.int64)
        )
        if self.re.shape != self.im.shape or self.re.ndim != 2:  # noqa: PLR2004
            raise DomainError(f"Real and imaginary parts disagree: {self.re.shape}, {self.im.shape}")

    @classmethod
    def identity(cls, size: int) -> "GaussianMatrix":
        """Identity matrix."""
        return cls(np.eye(size, dtype=np.int64))

    @property
    def size(self) -> int:
        """Number of rows."""
        return int(self.re.shape[0])

    def __matmul__(self, other: "GaussianMatrix") -> "GaussianMatrix":
        """(A + iB)(C + iD) = (AC - BD) + i(AD + BC)."""
        return GaussianMatrix(
            self.re @ other.re - self.im @ other.im,
            self.re @ other.im + self.im @ other.re,
        )

    def __neg__(self) -> "GaussianMatrix":
        """Negation."""
        return GaussianMatrix(-self.re, -self.im)

    def __eq__(self, other: object) -> bool:
        """Exact entrywise equality."""
        if not isinstance(other, GaussianMatrix):
            return NotImplemented
        return bool(np.array_equal(self.re, other.re) and np.array_equal(self.im, other.im))

    __hash__ = None  # type: ignore[assignment]

    def kron(self, other: "GaussianMatrix") -> "GaussianMatrix":
        """Tensor product, self on the left."""
        return GaussianMatrix(
            np.kron(self.re, other.re) - np.kron(self.im, other.im),
            np.kron(self.re, other.im) + np.kron(self.im, other.re),
        )

    def identity_multiple(self) -> complex | None:
        """Scalar c with self == c * identity, or None."""
        c_re, c_im = int(self.re[0, 0]), int(self.im[0, 0])
        identity = np.eye(self.size, dtype=np.int64)
        if np.array_equal(self.re, c_re * identity) and np.array_equal(self.im, c_im * identity):
            return complex(c_re, c_im)
        return None


_X = GaussianMatrix([[0, 1], [1, 0]])
_Z = GaussianMatrix([[1, 0], [0, -1]])
_I2 = GaussianMatrix.identity(2)


def _qubit(a: int, b: int) -> GaussianMatrix:
    """X^a Z^b."""
    return (_X if a else _I2) @ (_Z if b else _I2)


def mnemonic(label: Gf2Vector) -> str:
    """Two-character name: I, X, Z or W (= XZ) per qubit.

    >>> mnemonic(Gf2Vector.from_bits((1, 1, 0, 1)))
    'WZ'
    """
    a1, b1, a2, b2 = label.bits
    return QUBIT_MNEMONICS[(a1, b1)] + QUBIT_MNEMONICS[(a2, b2)]


class PauliOperator(NamedTuple):
    """Symplectic label with its exact matrix."""

    label: Gf2Vector
    matrix: GaussianMatrix

    @property
    def mnemonic(self) -> str:
        """Two-character name."""
        return mnemonic(self.label)


def pauli_from_label(label: Gf2Vector) -> PauliOperator:
    """(X^a1 Z^b1) (x) (X^a2 Z^b2); the zero label gives the identity."""
    if label.length != SYMPLECTIC_LENGTH:
        raise DomainError(f"Pauli labels have {SYMPLECTIC_LENGTH} bits, got {label.length}")
    a1, b1, a2, b2 = label.bits
    return PauliOperator(label, _qubit(a1, b1).kron(_qubit(a2, b2)))


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    """Exact test of pq == qp."""
    return p.matrix @ q.matrix == q.matrix @ p.matrix


def commutation_phase(p: PauliOperator, q: PauliOperator) -> int:
    """+1 if pq == qp, -1 if pq == -qp; anything else is a structure error."""
    pq, qp = p.matrix @ q.matrix, q.matrix @ p.matrix
    if pq == qp:
        return 1
    if pq == -qp:
        return -1
    raise StructureError(f"{p.mnemonic} and {q.mnemonic} neither commute nor anticommute")


def product_sign(operators: Iterable[PauliOperator]) -> int:
    """Sign s with (product of the operators, in order) == s * identity."""
    operators = list(operators)
    product = GaussianMatrix.identity(operators[0].matrix.size)
    for operator in operators:
        product = product @ operator.matrix
    scalar = product.identity_multiple()
    if scalar not in (1, -1):
        names = ", ".join(operator.mnemonic for operator in operators)
        raise StructureError(f"Product of {names} is not plus or minus the identity")
    return int(scalar.real)  # type: ignore[union-attr]


class PauliBijection:
    """Points of the symplectic W(2) model and their Pauli operators."""

    def __init__(self, geometry: LabeledW2, operators: Sequence[PauliOperator]) -> None:
        """Init."""
        self.geometry = geometry
        self.operators = tuple(operators)

    def operator_at(self, x: int) -> PauliOperator:
        """Operator of point `x`."""
        self.geometry.check_point(x)
        return self.operators[x]

    def point_of(self, operator: PauliOperator) -> int:
        """Point carrying `operator`."""
        return self.geometry.index_of(operator.label)

    def operators_of(self, mask: PointSet) -> list[PauliOperator]:
        """Operators of a point set, in point order."""
        return [self.operators[x] for x in mask_indices(mask)]


def build_bijection(w: LabeledW2) -> PauliBijection:
    """Label map point -> operator, certified: collinear iff commuting, lines are commuting triples."""
    if w.labels is None or any(label.length != SYMPLECTIC_LENGTH for label in w.labels):
        raise CorrespondenceError(f"{w.name} does not carry GF(2)^4 labels")
    bijection = PauliBijection(w, [pauli_from_label(label) for label in w.labels])
    for x, y in combinations(range(w.num_points), 2):
        p, q = bijection.operators[x], bijection.operators[y]
        if w.collinear(x, y) != commutes(p, q):
            raise CorrespondenceError(
                f"Points {x} and {y} ({p.mnemonic}, {q.mnemonic}): collinear={w.collinear(x, y)}"
                f" but commuting={commutes(p, q)}",
            )
    for index, line in enumerate(w.lines):
        operators = bijection.operators_of(line)
        if any(not commutes(p, q) for p, q in combinations(operators, 2)):
            raise CorrespondenceError(f"Line {index} holds non-commuting operators")
        total = operators[0].label ^ operators[1].label ^ operators[2].label
        if not total.is_zero:
            raise CorrespondenceError(f"Labels on line {index} sum to {total}, not zero")
        product_sign(operators)
    return bijection


def symplectic_agrees(p: PauliOperator, q: PauliOperator) -> bool:
    """Matrix commutation verdict equals the symplectic form verdict."""
    return commutes(p, q) == (symplectic_form(p.label, q.label) == 0)


def _grid_lines(w: LabeledW2, grid: PointSet) -> list[tuple[int, ...]]:
    """Lines of W(2) inside the grid, as sorted point tuples in lexicographic order."""
    return sorted(tuple(mask_indices(line)) for line in w.lines if line & grid == line)


def mermin_square(h: Hyperplane, bijection: PauliBijection) -> MerminSquare:
    """Arrange a grid as a 3x3 square: rows and columns are its two parallel classes of lines.

    Rows are the class holding the lexicographically smallest line.
    """
    if h.kind != HyperplaneKind.GRID:
        raise DomainError(f"{h.indices} is a {h.kind}, not a grid")
    w = bijection.geometry
    lines = _grid_lines(w, h.points)
    if len(lines) != GRID_LINES:
        raise StructureError(f"Grid {h.indices} contains {len(lines)} lines, expected {GRID_LINES}")
    first = lines[0]
    rows = [line for line in lines if line == first or not set(line) & set(first)]
    cols = [line for line in lines if line not in rows]
    if len(rows) != 3 or len(cols) != 3:  # noqa: PLR2004
        raise StructureError(f"Grid {h.indices} does not split into two parallel classes")
    for a, b in (*combinations(rows, 2), *combinations(cols, 2)):
        if set(a) & set(b):
            raise StructureError(f"Lines {a} and {b} of grid {h.indices} are not parallel")
    cells = []
    for row in rows:
        cell_row = []
        for col in cols:
            common = set(row) & set(col)
            if len(common) != 1:
                raise StructureError(f"Row {row} and column {col} of grid {h.indices} meet in {common}")
            cell_row.append(common.pop())
        cells.append(cell_row)
    operators = [[bijection.operators[x] for x in row] for row in cells]
    return MerminSquare(
        grid=h.points,
        cells=tuple(tuple(operator.label.mask for operator in row) for row in operators),  # type: ignore[arg-type]
        row_signs=tuple(product_sign(row) for row in operators),  # type: ignore[arg-type]
        col_signs=tuple(product_sign(col) for col in zip(*operators, strict=True)),  # type: ignore[arg-type]
    )


def square_mnemonics(square: MerminSquare) -> list[list[str]]:
    """Cell mnemonics, row-major."""
    return [
        [mnemonic(Gf2Vector(label, SYMPLECTIC_LENGTH)) for label in row] for row in square.cells
    ]


def minus_sign_distribution(squares: Iterable[MerminSquare]) -> dict[int, int]:
    """Number of minus-identity line products per square -> number of squares."""
    return dict(sorted(Counter(square.minus_count for square in squares).items()))


def interpret_hyperplane(h: Hyperplane, bijection: PauliBijection) -> Table2Tag:
    """Read a W(2) hyperplane as an operator set (ovoid, perp-set or grid)."""
    operators = bijection.operators_of(h.points)
    if h.kind == HyperplaneKind.OVOID:
        if any(commutes(p, q) for p, q in combinations(operators, 2)):
            raise CorrespondenceError(f"Ovoid {h.indices} holds commuting operators")
        return Table2Tag(
            kind=Table2Kind.MUTUALLY_NON_COMMUTING,
            operators=tuple(operator.mnemonic for operator in operators),
        )
    if h.kind == HyperplaneKind.PERP:
        reference = bijection.operator_at(h.center)  # type: ignore[arg-type]
        others = [operator for operator in operators if operator.label != reference.label]
        if not all(commutes(reference, operator) for operator in others):
            raise CorrespondenceError(f"Perp-set of {h.center} holds an operator not commuting with its center")
        return Table2Tag(
            kind=Table2Kind.COMMUTING_WITH_REFERENCE,
            operators=tuple(operator.mnemonic for operator in others),
            reference=reference.mnemonic,
        )
    if h.kind == HyperplaneKind.GRID:
        mermin_square(h, bijection)
        return Table2Tag(
            kind=Table2Kind.MERMIN_SQUARE,
            operators=tuple(operator.mnemonic for operator in operators),
        )
    raise DomainError(f"{h.indices} is not a perp-set, grid or ovoid of W(2)")


def core_set_operators(line: VeldkampLine, bijection: PauliBijection) -> CoreSetReport:
    """Operators of a core-set with their commutation pattern."""
    w = bijection.geometry
    operators = bijection.operators_of(line.core)
    commuting = sum(1 for p, q in combinations(operators, 2) if commutes(p, q))
    center: int | None = None
    if line.line_type in (LineType.UNICENTRIC_TRIAD, LineType.PENTAD):
        others = mask_indices(line.core)
        centers = [
            x
            for x in range(w.num_points)
            if all(w.collinear(x, y) for y in others)
        ]
        if line.line_type == LineType.PENTAD:
            centers = [x for x in centers if x in others]
        if len(centers) == 1:
            center = centers[0]
    return CoreSetReport(
        line_type=line.line_type,
        operators=[operator.mnemonic for operator in operators],
        commuting_pairs=commuting,
        non_commuting_pairs=len(operators) * (len(operators) - 1) // 2 - commuting,
        center=bijection.operators[center].mnemonic if center is not None else None,
    )


if __name__ == "__main__":  # pragma: no cover
    from geometry import enumerate_hyperplanes
    from w2 import build_w2_symplectic

    doily = build_w2_symplectic()
    pauli = build_bijection(doily)
    for grid in (h for h in enumerate_hyperplanes(doily) if h.kind == HyperplaneKind.GRID):
        square = mermin_square(grid, pauli)
        print(square_mnemonics(square), square.row_signs, square.col_signs, square.sign_product)
