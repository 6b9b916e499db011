"""Every count and structural claim about W(2), its Veldkamp space and the Pauli operators.

Usage:
    report = run_checks(DoilyModel())
    print(format_report(report))
"""

from collections import Counter
from collections.abc import Callable
from itertools import combinations

from doily_model import DoilyModel
from geometry import dual, is_hyperplane, perp, trace_geometry, verify_gq
from gf2 import q42_polar_form, span_closure, symplectic_form
from models import (
    Check,
    GqViolation,
    HyperplaneKind,
    LineType,
    Table2Kind,
    TriadKind,
    VerificationReport,
    mask_indices,
)
from pauli import commutation_phase, interpret_hyperplane, product_sign, symplectic_agrees
from veldkamp import core_set_census, lines_through, third_member, veldkamp_line_through
from w2 import (
    automorphism_count,
    fano_plane_at,
    fano_point_indices,
    find_isomorphism,
    standard_fano_plane,
)

Outcome = tuple[str, str | None]
CheckFn = Callable[[DoilyModel], Outcome]

CHECKS: list[tuple[str, str, CheckFn]] = []


def check(name: str, expected: str) -> Callable[[CheckFn], CheckFn]:
    """Register a check; it returns (actual, witness) and passes when actual == expected."""

    def register(func: CheckFn) -> CheckFn:
        CHECKS.append((name, expected, func))
        return func

    return register


def _counted(passing: int, total: int, unit: str, witness: str | None) -> Outcome:
    return f"{passing} of {total} {unit}", witness


def _order_outcome(order: tuple[int, int] | GqViolation) -> Outcome:
    if isinstance(order, GqViolation):
        return f"axiom {order.axiom} violated", f"{order.message}; witness {order.witness}"
    return str(order), None


@check("W(2) symplectic model", "15 points, 15 lines")
def _symplectic_counts(m: DoilyModel) -> Outcome:
    return f"{m.w2.num_points} points, {m.w2.num_lines} lines", None


@check("W(2) symplectic GQ order", "(2, 2)")
def _symplectic_order(m: DoilyModel) -> Outcome:
    return _order_outcome(m.order)


@check("W(2) quadric model", "15 points, 15 lines")
def _quadric_counts(m: DoilyModel) -> Outcome:
    return f"{m.q42.num_points} points, {m.q42.num_lines} lines", None


@check("W(2) quadric GQ order", "(2, 2)")
def _quadric_order(m: DoilyModel) -> Outcome:
    return _order_outcome(verify_gq(m.q42))


@check("Point degrees and line sizes", "point degrees [3], line sizes [3]")
def _degrees(m: DoilyModel) -> Outcome:
    degrees = sorted({len(on_lines) for on_lines in m.w2.point_lines})
    sizes = sorted({line.bit_count() for line in m.w2.lines})
    return f"point degrees {degrees}, line sizes {sizes}", None


@check("Symplectic collinearity is isotropy", "105 of 105 pairs")
def _isotropy(m: DoilyModel) -> Outcome:
    w = m.w2
    bad = [
        (x, y)
        for x, y in combinations(range(w.num_points), 2)
        if w.collinear(x, y) != (symplectic_form(w.label_of(x), w.label_of(y)) == 0)
    ]
    total = w.num_points * (w.num_points - 1) // 2
    return _counted(total - len(bad), total, "pairs", f"pair {bad[0]}" if bad else None)


@check("Quadric collinearity is polar orthogonality", "105 of 105 pairs")
def _polarity(m: DoilyModel) -> Outcome:
    q = m.q42
    bad = [
        (x, y)
        for x, y in combinations(range(q.num_points), 2)
        if q.collinear(x, y) != (q42_polar_form(q.label_of(x), q.label_of(y)) == 0)
    ]
    total = q.num_points * (q.num_points - 1) // 2
    return _counted(total - len(bad), total, "pairs", f"pair {bad[0]}" if bad else None)


@check("Symplectic and quadric models", "isomorphic, 105 of 105 pairs agree")
def _models(m: DoilyModel) -> Outcome:
    if m.model_map is None:
        return "not isomorphic", "no line-preserving bijection found"
    w, q, image = m.w2, m.q42, m.model_map.point_bijection
    bad = [
        (x, y)
        for x, y in combinations(range(w.num_points), 2)
        if (symplectic_form(w.label_of(x), w.label_of(y)) == 0) != q.collinear(image[x], image[y])
    ]
    total = w.num_points * (w.num_points - 1) // 2
    return f"isomorphic, {total - len(bad)} of {total} pairs agree", f"pair {bad[0]}" if bad else None


@check("Self-duality", "isomorphic to its dual")
def _self_dual(m: DoilyModel) -> Outcome:
    found = find_isomorphism(m.w2, dual(m.w2))
    return ("isomorphic to its dual", None) if found else ("not isomorphic to its dual", None)


@check("Hyperplanes", "31")
def _hyperplane_total(m: DoilyModel) -> Outcome:
    return str(len(m.hyperplanes)), None


def _census_text(sizes: dict[HyperplaneKind, list[int]]) -> str:
    parts = []
    for kind in HyperplaneKind:
        found = sizes.get(kind, [])
        distinct = "/".join(str(size) for size in sorted(set(found)))
        parts.append(f"{len(found)} {kind}" + (f" x{distinct}" if found else ""))
    return ", ".join(parts)


@check("Hyperplane census", "15 perp x7, 10 grid x9, 6 ovoid x5, 0 other")
def _hyperplane_census(m: DoilyModel) -> Outcome:
    sizes: dict[HyperplaneKind, list[int]] = {}
    for h in m.hyperplanes:
        sizes.setdefault(h.kind, []).append(h.size)
    return _census_text(sizes), None


@check("Hyperplane scan against full oracle scan", "identical")
def _oracle(m: DoilyModel) -> Outcome:
    w = m.w2
    oracle = [s for s in range(1 << w.num_points) if is_hyperplane(w, s)]
    found = [h.points for h in m.hyperplanes]
    if oracle == found:
        return "identical", None
    extra = sorted(set(found) ^ set(oracle))
    return "different", f"first disagreement at mask {extra[0]:#x}"


@check("Triad census", "60 unicentric, 20 tricentric, 0 acentric, 0 other, 80 total")
def _triads(m: DoilyModel) -> Outcome:
    kinds = Counter(triad.kind for triad in m.triads)
    return (
        f"{kinds[TriadKind.UNICENTRIC]} unicentric, {kinds[TriadKind.TRICENTRIC]} tricentric, "
        f"{kinds[TriadKind.ACENTRIC]} acentric, {kinds[TriadKind.CENTRIC_OTHER]} other, "
        f"{len(m.triads)} total"
    ), None


@check("Triads inside ovoids", "60 of 60 unicentric, 0 of 20 tricentric")
def _triads_in_ovoids(m: DoilyModel) -> Outcome:
    ovoids = [h.points for h in m.hyperplanes_of(HyperplaneKind.OVOID)]

    def in_ovoid(mask: int) -> bool:
        return any(mask & ovoid == mask for ovoid in ovoids)

    uni = [t for t in m.triads if t.kind == TriadKind.UNICENTRIC]
    tri = [t for t in m.triads if t.kind == TriadKind.TRICENTRIC]
    return (
        f"{sum(in_ovoid(t.mask) for t in uni)} of {len(uni)} unicentric, "
        f"{sum(in_ovoid(t.mask) for t in tri)} of {len(tri)} tricentric"
    ), None


def _grid_complement_witness(m: DoilyModel, grid: int) -> str | None:
    """Why the complement of `grid` is not two mutually perp tricentric triads spanning K(3,3)."""
    w = m.w2
    complement = w.all_points & ~grid
    halves = [
        t.mask
        for t in m.triads
        if t.kind == TriadKind.TRICENTRIC and t.mask & complement == t.mask
    ]
    if len(halves) != 2 or halves[0] | halves[1] != complement:  # noqa: PLR2004
        return f"complement {mask_indices(complement)} holds tricentric triads {halves}"
    first, second = halves
    if perp(w, first) != second or perp(w, second) != first:
        return f"triads {mask_indices(first)} and {mask_indices(second)} are not mutually perp"
    edges = {(x, y) for x, y in combinations(mask_indices(complement), 2) if w.collinear(x, y)}
    bipartite = {
        tuple(sorted((x, y))) for x in mask_indices(first) for y in mask_indices(second)
    }
    if edges != bipartite:
        return f"complement {mask_indices(complement)} does not induce K(3,3)"
    if (order := verify_gq(trace_geometry(w, complement))) != (1, 2):
        return f"complement {mask_indices(complement)} traces {order}, not a dual grid"
    return None


@check("Grid complements", "10 of 10 grids")
def _grid_complements(m: DoilyModel) -> Outcome:
    grids = m.hyperplanes_of(HyperplaneKind.GRID)
    witnesses = [w for h in grids if (w := _grid_complement_witness(m, h.points))]
    return _counted(len(grids) - len(witnesses), len(grids), "grids", next(iter(witnesses), None))


@check("Unicentric triads per center", "15 of 15 points")
def _triads_per_center(m: DoilyModel) -> Outcome:
    w = m.w2
    bad = []
    for x in range(w.num_points):
        centered = [
            t.mask for t in m.triads if t.kind == TriadKind.UNICENTRIC and t.centers == 1 << x
        ]
        union = 0
        for mask in centered:
            union |= mask
        pairwise = all((a & b).bit_count() == 1 for a, b in combinations(centered, 2))
        if len(centered) != 4 or not pairwise or union | 1 << x != w.neighbors[x]:  # noqa: PLR2004
            bad.append(x)
    return _counted(
        w.num_points - len(bad), w.num_points, "points", f"center {bad[0]}" if bad else None
    )


@check("Ovoid pairs", "15 of 15 pairs meet in one point")
def _ovoid_pairs(m: DoilyModel) -> Outcome:
    pairs = list(combinations(m.hyperplanes_of(HyperplaneKind.OVOID), 2))
    bad = [(a.indices, b.indices) for a, b in pairs if (a.points & b.points).bit_count() != 1]
    return f"{len(pairs) - len(bad)} of {len(pairs)} pairs meet in one point", (
        f"ovoids {bad[0]}" if bad else None
    )


@check("Veldkamp points", "31")
def _veldkamp_points(m: DoilyModel) -> Outcome:
    return str(len(m.veldkamp.points)), None


@check("Veldkamp lines", "155")
def _veldkamp_lines(m: DoilyModel) -> Outcome:
    return str(len(m.veldkamp.lines)), None


@check("Veldkamp line structure", "155 of 155 lines")
def _line_structure(m: DoilyModel) -> Outcome:
    w = m.w2
    bad = []
    for line in m.veldkamp.lines:
        masks = line.key
        size = line.core.bit_count()
        if (
            len(set(masks)) != 3  # noqa: PLR2004
            or any(a & b != line.core for a, b in combinations(masks, 2))
            or masks[0] | masks[1] | masks[2] != w.all_points
            or size % 2 == 0
            or size > 5  # noqa: PLR2004
        ):
            bad.append([mask_indices(mask) for mask in masks])
    total = len(m.veldkamp.lines)
    return _counted(total - len(bad), total, "lines", f"line {bad[0]}" if bad else None)


@check("Hyperplane pairs on exactly one line", "465 of 465 pairs")
def _pairs_on_lines(m: DoilyModel) -> Outcome:
    covered = Counter(pair for line in m.veldkamp.lines for pair in combinations(line.key, 2))
    pairs = list(combinations([h.points for h in m.hyperplanes], 2))
    bad = [pair for pair in pairs if covered[pair] != 1]
    return _counted(len(pairs) - len(bad), len(pairs), "pairs", f"pair {bad[0]}" if bad else None)


@check("Veldkamp lines through each point", "15 per point")
def _lines_per_point(m: DoilyModel) -> Outcome:
    counts = sorted({len(lines_through(m.veldkamp, h)) for h in m.hyperplanes})
    return " or ".join(f"{count} per point" for count in counts), None


@check(
    "Table 1 counts",
    "Single Point 15, Collinear Triple 15, Unicentric Triad 60, Tricentric Triad 20, Pentad 45",
)
def _table1_counts(m: DoilyModel) -> Outcome:
    return ", ".join(f"{row.line_type} {row.count}" for row in m.veldkamp.table1()), None


@check("Table 1 composition", "(1, 0, 2), (3, 0, 0), (1, 1, 1), (3, 0, 0), (1, 2, 0)")
def _table1_composition(m: DoilyModel) -> Outcome:
    rows = m.veldkamp.table1()
    return ", ".join(f"({row.perps}, {row.grids}, {row.ovoids})" for row in rows), None


@check("Perp-set on every line", "155 of 155 lines")
def _perp_everywhere(m: DoilyModel) -> Outcome:
    lines = m.veldkamp.lines
    bad = [line for line in lines if line.composition[0] == 0]
    return _counted(len(lines) - len(bad), len(lines), "lines", None)


@check("Lines made of grids and ovoids only", "0 lines")
def _no_grid_ovoid_lines(m: DoilyModel) -> Outcome:
    return f"{sum(1 for line in m.veldkamp.lines if line.composition[0] == 0)} lines", None


@check("Homogeneous line types", "Collinear Triple, Tricentric Triad")
def _homogeneous(m: DoilyModel) -> Outcome:
    types = sorted(
        {line.line_type for line in m.veldkamp.lines if line.composition == (3, 0, 0)},
        key=list(LineType).index,
    )
    return ", ".join(types), None


@check("Third member is the complement of the symmetric difference", "465 of 465 pairs")
def _third_member(m: DoilyModel) -> Outcome:
    w, hyperplanes = m.w2, m.hyperplanes
    triad_kinds = {triad.mask: triad.kind for triad in m.triads}
    bad = []
    pairs = list(combinations(hyperplanes, 2))
    for h1, h2 in pairs:
        line = veldkamp_line_through(w, h1, h2, hyperplanes, triad_kinds)
        (scanned,) = set(line.key) - {h1.points, h2.points}
        if scanned != third_member(w, h1.points, h2.points):
            bad.append((h1.indices, h2.indices))
    return _counted(len(pairs) - len(bad), len(pairs), "pairs", f"pair {bad[0]}" if bad else None)


@check("Core-sets at each point", "4 unicentric triads and 3 pentads at each of 15 points, 45 pentads")
def _core_sets(m: DoilyModel) -> Outcome:
    census = core_set_census(m.veldkamp)
    shapes = sorted(set(census.values()))
    pentads = {line.core for line in m.veldkamp.lines if line.line_type == LineType.PENTAD}
    text = "; ".join(
        f"{uni} unicentric triads and {pent} pentads at each of "
        f"{sum(1 for value in census.values() if value == (uni, pent))} points"
        for uni, pent in shapes
    )
    return f"{text}, {len(pentads)} pentads", None


@check("PG(4,2) isomorphism", "31 functionals, 155 lines")
def _pg42(m: DoilyModel) -> Outcome:
    report = m.pg42
    return f"{len(set(report.functionals.values()))} functionals, {report.lines_checked} lines", None


@check("Pauli commutation equals the symplectic form", "105 of 105 pairs")
def _pauli_pairs(m: DoilyModel) -> Outcome:
    operators = m.bijection.operators
    pairs = list(combinations(operators, 2))
    bad = [(p.mnemonic, q.mnemonic) for p, q in pairs if not symplectic_agrees(p, q)]
    return _counted(len(pairs) - len(bad), len(pairs), "pairs", f"pair {bad[0]}" if bad else None)


@check("Pauli phase discipline", "105 of 105 pairs")
def _phases(m: DoilyModel) -> Outcome:
    pairs = list(combinations(m.bijection.operators, 2))
    for p, q in pairs:
        commutation_phase(p, q)
    return _counted(len(pairs), len(pairs), "pairs", None)


@check("Lines as commuting triples", "15 of 15 lines, products +-identity")
def _pauli_lines(m: DoilyModel) -> Outcome:
    signs = [product_sign(m.bijection.operators_of(line)) for line in m.w2.lines]
    return f"{len(signs)} of {m.w2.num_lines} lines, products +-identity", None


@check("Table 2 readings", "6 ovoids, 15 perp-sets, 10 grids")
def _table2(m: DoilyModel) -> Outcome:
    kinds = Counter(interpret_hyperplane(h, m.bijection).kind for h in m.hyperplanes)
    return (
        f"{kinds[Table2Kind.MUTUALLY_NON_COMMUTING]} ovoids, "
        f"{kinds[Table2Kind.COMMUTING_WITH_REFERENCE]} perp-sets, "
        f"{kinds[Table2Kind.MERMIN_SQUARE]} grids"
    ), None


@check("Mermin squares", "10 squares, six-sign product -1 for 10")
def _mermin(m: DoilyModel) -> Outcome:
    squares = m.mermin_squares
    negative = [square for square in squares if square.sign_product == -1]
    witness = next(
        (f"grid {mask_indices(s.grid)}" for s in squares if s.sign_product != -1),
        None,
    )
    return f"{len(squares)} squares, six-sign product -1 for {len(negative)}", witness


@check("Automorphism group order", "720")
def _automorphisms(m: DoilyModel) -> Outcome:
    return str(automorphism_count(m.w2)), None


@check("Automorphism group order of the dual", "720")
def _dual_automorphisms(m: DoilyModel) -> Outcome:
    return str(automorphism_count(dual(m.w2))), None


@check("Fano planes on perp-sets", "15 of 15 points")
def _fano(m: DoilyModel) -> Outcome:
    w = m.w2
    reference = standard_fano_plane()
    bad = []
    for x in range(w.num_points):
        plane = fano_plane_at(w, x)
        points = fano_point_indices(w, x)
        spans_agree = all(
            {w.label_of(points[p]) for p in mask_indices(line)}
            == span_closure(w.label_of(points[p]) for p in mask_indices(line)[:2])
            for line in plane.lines
        )
        if find_isomorphism(plane, reference) is None or not spans_agree:
            bad.append(x)
    return _counted(
        w.num_points - len(bad), w.num_points, "points", f"point {bad[0]}" if bad else None
    )


def run_checks(
    model: DoilyModel | None = None,
    progress: Callable[[Check], None] | None = None,
) -> VerificationReport:
    """Run every registered check; a check that raises fails with the error as witness."""
    if model is None:
        model = DoilyModel()
    report = VerificationReport()
    for name, expected, func in CHECKS:
        try:
            actual, witness = func(model)
        except Exception as e:  # noqa: BLE001
            actual, witness = f"error: {type(e).__name__}", str(e)
        result = Check(
            name=name,
            expected=expected,
            actual=actual,
            passed=actual == expected,
            witness=None if actual == expected else witness,
        )
        report.checks.append(result)
        if progress:
            progress(result)
    return report


def format_check(result: Check) -> str:
    """One report line."""
    status = "PASS" if result.passed else "FAIL"
    text = f"{status} {result.name}: expected {result.expected}"
    if not result.passed:
        text += f", got {result.actual}"
        if result.witness:
            text += f" ({result.witness})"
    return text


def format_report(report: VerificationReport) -> str:
    """Text report with a final verdict line."""
    lines = [format_check(result) for result in report.checks]
    passed = sum(result.passed for result in report.checks)
    lines.append(f"{passed} of {len(report.checks)} checks passed")
    return "\n".join(lines)


if __name__ == "__main__":  # pragma: no cover
    print(format_report(run_checks()))
