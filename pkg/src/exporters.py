"""JSON, DOT and CSV renderings of the doily model, plus the text tables.

Usage:
    text = export_json(DoilyModel())
    export = read_json(text)
"""

import csv
import io
from collections import Counter
from pathlib import Path

import networkx as nx

from doily_model import DoilyModel
from geometry import PointLineGeometry, collinearity_edges
from gf2 import QUADRIC_LENGTH, SYMPLECTIC_LENGTH, Gf2Vector
from models import (
    DoilyExport,
    HyperplaneKind,
    HyperplaneRecord,
    LineRecord,
    MerminSquare,
    PointRecord,
    Table1Row,
    Table2Row,
    VeldkampLineRecord,
    mask_indices,
)
from pauli import core_set_operators, interpret_hyperplane, mnemonic, square_mnemonics
from veldkamp import VeldkampSpace
from w2 import SYMPLECTIC, LabeledW2

TABLE2_ORDER = (HyperplaneKind.OVOID, HyperplaneKind.PERP, HyperplaneKind.GRID)
CSV_TABLES = ("table1.csv", "table2.csv", "hyperplanes.csv")


def build_export(model: DoilyModel) -> DoilyExport:
    """Everything `export --format=json` writes."""
    w = model.w2
    functionals = model.pg42.functionals
    return DoilyExport(
        points=[
            PointRecord(index=x, label=label.mask, bits=str(label), mnemonic=mnemonic(label))
            for x, label in enumerate(w.labels)  # type: ignore[arg-type]
        ],
        lines=[
            LineRecord(index=index, mask=line, points=mask_indices(line))
            for index, line in enumerate(w.lines)
        ],
        hyperplanes=[
            HyperplaneRecord(
                mask=h.points,
                points=h.indices,
                kind=h.kind,
                center=h.center,
                functional=functionals[h.points],
            )
            for h in model.hyperplanes
        ],
        veldkamp_lines=[
            VeldkampLineRecord(
                members=list(line.key),
                core=line.core,
                core_points=mask_indices(line.core),
                line_type=line.line_type,
                core_operators=core_set_operators(line, model.bijection),
            )
            for line in model.veldkamp.lines
        ],
        table1=model.veldkamp.table1(),
        hyperplane_census={str(kind): len(model.hyperplanes_of(kind)) for kind in HyperplaneKind},
    )


def export_json(model: DoilyModel) -> str:
    return build_export(model).model_dump_json(indent=2)


def read_json(text: str) -> DoilyExport:
    """Parse a json export back; pydantic validation errors propagate."""
    return DoilyExport.model_validate_json(text)


def geometry_from_export(export: DoilyExport) -> LabeledW2:
    """Rebuild the symplectic W(2) model from its exported points and lines."""
    labels = [Gf2Vector(point.label, SYMPLECTIC_LENGTH) for point in export.points]
    return LabeledW2(labels, [line.points for line in export.lines], SYMPLECTIC)


def collinearity_graph(g: PointLineGeometry) -> nx.Graph:
    """Points as nodes, collinear pairs as edges."""
    graph = nx.Graph()
    for x in range(g.num_points):
        label = g.labels[x] if g.labels is not None else None
        name = mnemonic(label) if label is not None and label.length == SYMPLECTIC_LENGTH else str(x)
        graph.add_node(x, label=name)
    graph.add_edges_from(collinearity_edges(g))
    return graph


def veldkamp_incidence_graph(v: VeldkampSpace) -> nx.Graph:
    """Bipartite graph: hyperplane nodes h<i>, Veldkamp line nodes l<j>."""
    graph = nx.Graph()
    index_of = {}
    for index, h in enumerate(v.points):
        index_of[h.points] = index
        graph.add_node(f"h{index}", label=str(h.kind))
    for index, line in enumerate(v.lines):
        graph.add_node(f"l{index}", label=str(line.line_type))
        graph.add_edges_from((f"l{index}", f"h{index_of[mask]}") for mask in line.key)
    return graph


def to_dot(graph: nx.Graph, name: str) -> str:
    """Undirected DOT text, nodes and edges in insertion order."""
    lines = [f"graph {name} {{"]
    lines.extend(f'  {node} [label="{data["label"]}"];' for node, data in graph.nodes(data=True))
    lines.extend(f"  {u} -- {v};" for u, v in graph.edges())
    lines.append("}")
    return "\n".join(lines)


def export_dot(model: DoilyModel) -> str:
    """The collinearity graph followed by the Veldkamp incidence graph."""
    return "\n".join(
        (
            to_dot(collinearity_graph(model.w2), "collinearity"),
            to_dot(veldkamp_incidence_graph(model.veldkamp), "veldkamp"),
        ),
    )


def table2_rows(model: DoilyModel) -> list[Table2Row]:
    """Per hyperplane kind: size, number of hyperplanes and operator reading."""
    tags = {h.points: interpret_hyperplane(h, model.bijection) for h in model.hyperplanes}
    rows = []
    for kind in TABLE2_ORDER:
        hyperplanes = model.hyperplanes_of(kind)
        if not hyperplanes:
            continue
        readings = Counter(tags[h.points].kind for h in hyperplanes)
        rows.append(
            Table2Row(
                kind=kind,
                size=hyperplanes[0].size,
                count=len(hyperplanes),
                reading=readings.most_common(1)[0][0],
            ),
        )
    return rows


def _csv(header: list[str], rows: list[list[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def table1_csv(rows: list[Table1Row]) -> str:
    return _csv(
        ["line_type", "perps", "grids", "ovoids", "count"],
        [[row.line_type, row.perps, row.grids, row.ovoids, row.count] for row in rows],
    )


def table2_csv(rows: list[Table2Row]) -> str:
    return _csv(
        ["kind", "size", "count", "reading"],
        [[row.kind, row.size, row.count, row.reading] for row in rows],
    )


def hyperplanes_csv(model: DoilyModel) -> str:
    """One row per hyperplane with its PG(4,2) functional and operators."""
    functionals = model.pg42.functionals
    rows = []
    for h in model.hyperplanes:
        tag = interpret_hyperplane(h, model.bijection)
        rows.append(
            [
                h.points,
                " ".join(str(x) for x in h.indices),
                h.kind,
                "" if h.center is None else h.center,
                str(Gf2Vector(functionals[h.points], QUADRIC_LENGTH)),
                tag.kind,
                tag.reference or "",
                " ".join(tag.operators),
            ],
        )
    return _csv(
        ["mask", "points", "kind", "center", "functional", "reading", "reference", "operators"],
        rows,
    )


def write_csv_tables(model: DoilyModel, folder: Path) -> list[Path]:
    """Write table1.csv, table2.csv and hyperplanes.csv into `folder`."""
    folder.mkdir(parents=True, exist_ok=True)
    contents = (
        table1_csv(model.veldkamp.table1()),
        table2_csv(table2_rows(model)),
        hyperplanes_csv(model),
    )
    paths = []
    for name, text in zip(CSV_TABLES, contents, strict=True):
        path = folder / name
        path.write_text(text, encoding="utf-8")
        paths.append(path)
    return paths


def format_table1(rows: list[Table1Row]) -> str:
    lines = [f"{'Type':<18}{'Perps':>6}{'Grids':>6}{'Ovoids':>7}{'Lines':>7}"]
    lines.extend(
        f"{row.line_type:<18}{row.perps:>6}{row.grids:>6}{row.ovoids:>7}{row.count:>7}"
        for row in rows
    )
    lines.append(f"{'Total':<37}{sum(row.count for row in rows):>7}")
    return "\n".join(lines)


def format_table2(rows: list[Table2Row]) -> str:
    lines = [f"{'Kind':<7}{'Size':>4}{'Count':>6}  Operators"]
    lines.extend(f"{row.kind:<7}{row.size:>4}{row.count:>6}  {row.reading}" for row in rows)
    return "\n".join(lines)


def _sign(sign: int) -> str:
    return "+1" if sign > 0 else "-1"


def format_mermin(square: MerminSquare) -> str:
    """3x3 mnemonics with the row sign after each row and column signs underneath."""
    lines = [f"grid {' '.join(str(x) for x in mask_indices(square.grid))}"]
    for row, sign in zip(square_mnemonics(square), square.row_signs, strict=True):
        lines.append("  " + "  ".join(row) + f"  {_sign(sign)}")
    lines.append("  " + "  ".join(_sign(sign) for sign in square.col_signs))
    lines.append(f"  six-sign product {_sign(square.sign_product)}")
    return "\n".join(lines)


if __name__ == "__main__":  # pragma: no cover
    doily = DoilyModel()
    print(format_table1(doily.veldkamp.table1()))
    print(format_table2(table2_rows(doily)))
    print(format_mermin(doily.mermin_squares[0]))
