"""end-to-end reproductions compared against the published values"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field as dataclass_field
from math import comb
from typing import Any, Callable, Optional

from .arrangement import (Arrangement, AtLeast, ExactIn, LatticeSummary, gen_c8, gen_hesse,
                          gen_ngon, lambda_at_least, lambda_operator, lattice)
from .codec.definitions import Comparison, RigidityVerdict, Verdict
from .exactcore import FieldElement, NumberField, cyclotomic_field, embedding
from .fixtures import load, monodromy_table, published, published_nk
from .freeness import CurveSpec, FreenessCertificate, curve_from_arrangement, freeness_certificate
from .monodromy import (AlexanderSpec, MonodromyTable, alexander_from_table, compare_alexander,
                        degree_identity_check, euler_complement, parse_alexander, total_milnor)
from .pencil import (CubicPencil, IndeterminateAt, PencilMember, RationalMap, assemble_conic_line,
                     cubics_through, degenerate_members, map_evaluate)
from .projgeom import ProjPoint
from .rigidity import RigidityReport, matroid_from_lattice, rigidity_check
from .unexpected import UnexpectedReport, slp_failures, unexpected_degrees

LOGGER: logging.Logger = logging.getLogger('arrangement-freeness')
LOGGER.addHandler(logging.NullHandler())  # in case wrapping application hasn't set a default handler


@dataclass(frozen=True)
class ComparisonRow:
    """one computed value next to its published counterpart"""
    item: str
    computed: Any
    published: Any
    status: Comparison
    note: str = ''

    def to_dict(self) -> dict:
        """serializable form"""
        data: dict = {"item": self.item, "computed": self.computed, "published": self.published,
                      "status": str(self.status)}
        if self.note:
            data["note"] = self.note
        return data


@dataclass
class ReproOptions:
    """which expensive stages run"""
    freeness: bool = True
    rigidity: bool = True
    modular_only: bool = False


@dataclass
class ReproReport:
    """rows of comparisons plus computed details"""
    name: str
    rows: list[ComparisonRow] = dataclass_field(default_factory=list)
    details: dict[str, Any] = dataclass_field(default_factory=dict)

    def compare(self, item: str, computed: Any, printed: Any, note: str = '') -> ComparisonRow:
        """record MATCH or MISMATCH"""
        row: ComparisonRow = ComparisonRow(item, computed, printed,
                                           Comparison.MATCH if computed == printed else Comparison.MISMATCH, note)
        if row.status == Comparison.MISMATCH:
            LOGGER.warning(f"{self.name}: {item} computed {computed}, published {printed}")
        self.rows.append(row)
        return row

    def flag(self, item: str, computed: Any, printed: Any, note: str) -> ComparisonRow:
        """record a published value that contradicts other published data"""
        LOGGER.warning(f"{self.name}: {item}: {note}")
        row: ComparisonRow = ComparisonRow(item, computed, printed, Comparison.PUBLISHED_INCONSISTENT, note)
        self.rows.append(row)
        return row

    def status_of(self, item: str) -> Optional[Comparison]:
        """status of the first row with this item"""
        return next((row.status for row in self.rows if row.item == item), None)

    @property
    def mismatches(self) -> list[ComparisonRow]:
        """rows where the computation disagrees with a consistent published value"""
        return [row for row in self.rows if row.status == Comparison.MISMATCH]

    def to_dict(self) -> dict:
        """serializable form"""
        return {"name": self.name, "rows": [row.to_dict() for row in self.rows], "details": self.details}

    def render(self) -> str:
        """aligned text table followed by the details"""
        cells: list[tuple[str, str, str, str]] = [("item", "computed", "published", "status")]
        cells.extend((row.item, _cell(row.computed), _cell(row.published), str(row.status)) for row in self.rows)
        widths: list[int] = [max(len(cell[i]) for cell in cells) for i in range(4)]
        lines: list[str] = [f"== {self.name} =="]
        lines.extend('  '.join(cell[i].ljust(widths[i]) for i in range(4)).rstrip() for cell in cells)
        lines.extend(f"  note [{row.item}]: {row.note}" for row in self.rows if row.note)
        lines.extend(f"{key}: {_cell(value)}" for key, value in self.details.items())
        return '\n'.join(lines) + '\n'


def _cell(value: Any) -> str:
    """compact text for a table cell"""
    if isinstance(value, dict):
        return json.dumps(dict(sorted(value.items(), key=lambda item: _key_order(item[0]))))
    if isinstance(value, (list, tuple)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def _key_order(key: Any) -> tuple[int, Any]:
    """integer-like keys numerically, then the rest as text"""
    text: str = str(key)
    return (0, int(text)) if text.lstrip('-').isdigit() else (1, text)


def _nk(nk: dict[int, int]) -> dict[str, int]:
    """n_k with text keys as in the published tables"""
    return {str(k): v for k, v in sorted(nk.items())}


def _freeness_rows(report: ReproReport, curve: CurveSpec, summary: Any, table: dict,
                   options: ReproOptions) -> Optional[FreenessCertificate]:
    """verdict, exponents, resolution and Terao rows"""
    if not options.freeness:
        report.details["freeness"] = "skipped"
        return None
    certificate: FreenessCertificate = freeness_certificate(curve, summary, modular_only=options.modular_only)
    report.details["freeness"] = certificate.to_dict()
    report.compare("verdict", certificate.verdict.label, Verdict.FREE.label)
    if "exponents" in table:
        report.compare("exponents", [certificate.d1, certificate.d2], table["exponents"])
    if "resolution" in table:
        report.compare("resolution", str(certificate.resolution) if certificate.resolution else None,
                       table["resolution"])
    if certificate.terao is not None:
        report.compare("Terao factorization", certificate.terao.holds, True,
                       f"b2 = {certificate.terao.b2}, d1*d2 + d1 + d2 = {certificate.terao.expected}")
    return certificate


def _rigidity_rows(report: ReproReport, arr: Arrangement, summary: LatticeSummary, options: ReproOptions) -> None:
    """first-order rigidity against the published rigidity claim"""
    if not options.rigidity:
        report.details["rigidity"] = "skipped"
        return
    rigidity: RigidityReport = rigidity_check(arr, matroid_from_lattice(summary))
    report.details["rigidity"] = rigidity.to_dict()
    report.compare("rigid", rigidity.verdict == RigidityVerdict.FIRST_ORDER_RIGID, True,
                   f"Jacobian kernel {rigidity.kernel_dim}, trivial {rigidity.trivial_dim}")


def _unexpected_rows(report: ReproReport, arr: Arrangement, summary: LatticeSummary, table: dict,
                     certificate: Optional[FreenessCertificate]) -> None:
    """unexpected curves of the dual points and the Lefschetz failures"""
    note: str = ''
    if certificate is not None and certificate.d1 is not None:
        d1: int = certificate.d1
    else:
        d1, note = min(table["exponents"]), "d1 taken from the published exponents"
    # the arrangement of the duals of the dual points is the arrangement itself
    unexpected: UnexpectedReport = unexpected_degrees(len(arr), d1, summary.max_multiplicity)
    report.details["unexpected"] = unexpected.to_dict()
    report.compare("unexpected degrees", unexpected.degrees, table["unexpected_degrees"], note)
    report.compare("SLP failure degrees (range 2)", [f.degree for f in slp_failures(unexpected)],
                   table["slp_degrees"], note)


def _alexander_rows(report: ReproReport, computed: AlexanderSpec, stated: AlexanderSpec,
                    inconsistent_note: str = '') -> None:
    """per eigenvalue comparison, disagreements flagged when the published sources disagree"""
    for comparison in compare_alexander(computed, stated):
        item: str = f"m(alpha_{comparison.q})"
        if comparison.status == Comparison.MATCH or not inconsistent_note:
            report.compare(item, comparison.computed, comparison.stated)
        else:
            report.flag(item, comparison.computed, comparison.stated, inconsistent_note)


def reproduce_theorem_a(options: Optional[ReproOptions] = None) -> ReproReport:
    """Hesse -> 57 lines: lattice, freeness, rigidity, unexpected curves, monodromy"""
    options = options or ReproOptions()
    report: ReproReport = ReproReport("thmA")
    tables: dict = published()
    table: dict = tables["H57"]
    hesse: Arrangement = gen_hesse()
    report.compare("Hesse lines equal the fixture", hesse.as_set() == load('hesse12').arrangement().as_set(), True)
    report.compare("Hesse n_k", _nk(lattice(hesse).nk), tables["H"]["nk"])
    h57: Arrangement = lambda_at_least(hesse, 2, 2)
    report.compare("line count", len(h57), table["lines"])
    report.compare("lines equal the printed list", h57.as_set() == load('h57').arrangement().as_set(), True)
    summary: LatticeSummary = lattice(h57)
    report.compare("n_k", _nk(summary.nk), table["nk"])
    report.compare("pair double count", summary.pair_count, comb(len(h57), 2))
    report.details["tau"] = summary.tjurina()
    certificate: Optional[FreenessCertificate] = _freeness_rows(report, curve_from_arrangement(h57), summary,
                                                                table, options)
    _rigidity_rows(report, h57, summary, options)
    _unexpected_rows(report, h57, summary, table, certificate)
    trivial: AlexanderSpec = alexander_from_table(len(h57), len(h57), MonodromyTable.trivial(len(h57), len(h57)))
    report.details["alexander"] = str(trivial)
    _alexander_rows(report, trivial, parse_alexander(table["alexander"], len(h57), len(h57)))
    _hesse_remark(report, tables["H"]["alexander"])
    return report


def _hesse_remark(report: ReproReport, literal: str) -> None:
    """the published Hesse Alexander polynomial checked for m(1) and the degree identity"""
    hesse_alexander: AlexanderSpec = parse_alexander(literal, 12, 12)
    report.compare("Hesse m(1) = r - 1", hesse_alexander.mults[0], 11)
    chi: int = euler_complement(12, total_milnor(lattice(gen_hesse())))
    identity = degree_identity_check(12, chi, hesse_alexander)
    report.details["hesse_degree_identity"] = identity.to_dict()
    report.compare("Hesse deg Delta^2 >= 0", identity.consistent, True)


def reproduce_theorem_b(options: Optional[ReproOptions] = None) -> ReproReport:
    """octagon -> 33 lines: lattice, freeness, rigidity, unexpected curves"""
    options = options or ReproOptions()
    report: ReproReport = ReproReport("thmB")
    tables: dict = published()
    table: dict = tables["O33"]
    octagon: Arrangement = gen_c8()
    report.compare("octagon lines equal the fixture", octagon.as_set() == load('c8').arrangement().as_set(), True)
    report.compare("octagon n_k", _nk(lattice(octagon).nk), tables["C8"]["nk"])
    o33: Arrangement = lambda_operator(octagon, ExactIn(frozenset({2})), AtLeast(3), "O33")
    report.compare("line count", len(o33), table["lines"])
    report.compare("lines equal the printed list", o33.as_set() == load('o33').arrangement().as_set(), True)
    summary: LatticeSummary = lattice(o33)
    report.compare("n_k", _nk(summary.nk), table["nk"])
    report.compare("pair double count", summary.pair_count, comb(len(o33), 2))
    report.details["tau"] = summary.tjurina()
    certificate: Optional[FreenessCertificate] = _freeness_rows(report, curve_from_arrangement(o33), summary,
                                                                table, options)
    _rigidity_rows(report, o33, summary, options)
    _unexpected_rows(report, o33, summary, table, certificate)
    return report


def reproduce_theorem_c(options: Optional[ReproOptions] = None) -> ReproReport:
    """pencil through the indeterminacy points -> conic-line arrangement"""
    options = options or ReproOptions()
    report: ReproReport = ReproReport("thmC")
    table: dict = published()["CL"]
    base = load('cl_points')
    rational_map: RationalMap = RationalMap(tuple(load('rational_map').polys))  # type: ignore[arg-type]
    images = [map_evaluate(rational_map, point) for point in base.points]
    report.compare("indeterminacy points", sum(isinstance(image, IndeterminateAt) for image in images),
                   len(base.points))
    report.details["map(1:1:1)"] = str(map_evaluate(rational_map, ProjPoint.of(base.field, 1, 1, 1)))
    # the double points need i and sqrt(3), so the pencil is split over Q(z12) with e -> z^4
    extended: NumberField = cyclotomic_field(12)
    image: FieldElement = embedding(base.field, extended)
    pencil: CubicPencil = cubics_through([p.substitute_generator(image) for p in base.points])  # type: ignore[misc]
    report.details["pencil"] = [str(cubic) for cubic in pencil.basis]
    members: list[PencilMember] = degenerate_members(pencil)
    report.compare("degenerate members", len(members), table["degenerate_members"])
    report.details["members"] = [str(member) for member in members]
    assembled, cl_lattice = assemble_conic_line(members)
    printed: CurveSpec = load('cl').curve()
    report.compare("product equals the printed polynomial", assembled.f.is_proportional(printed.f.lift(extended)), True)
    report.compare("n_k", _nk(cl_lattice.nk), table["nk"])
    report.compare("all points ordinary", cl_lattice.all_ordinary, True)
    report.compare("Bezout audit", cl_lattice.point_bezout, cl_lattice.component_bezout)
    tau: int = total_milnor(cl_lattice)
    report.details["tau"] = tau
    _freeness_rows(report, printed, cl_lattice, table, options)
    d: int = printed.d
    r: int = printed.r_components
    computed: AlexanderSpec = alexander_from_table(d, r, monodromy_table())
    stated: AlexanderSpec = parse_alexander(table["alexander"], d, r)
    report.details["alexander_from_table"] = str(computed)
    _alexander_rows(report, computed, stated,
                    "the printed n_2(q) table and the printed Alexander polynomial disagree")
    chi: int = euler_complement(d, tau)
    report.details["euler_characteristic"] = chi
    report.details["degree_identity"] = degree_identity_check(d, chi, stated).to_dict()
    return report


def reproduce_remark_ngons(options: Optional[ReproOptions] = None) -> ReproReport:
    """decagon and dodecagon operators and the symmetry-line count"""
    options = options or ReproOptions()
    report: ReproReport = ReproReport("remark-ngons")
    tables: dict = published()
    for n, threshold, label in ((10, 3, "O61"), (12, 4, "O49")):
        result: Arrangement = lambda_operator(gen_ngon(n), ExactIn(frozenset({2})), AtLeast(threshold), label)
        report.compare(f"{label} line count", len(result), tables[label]["lines"])
        summary: LatticeSummary = lattice(result)
        printed_nk: dict[int, int] = published_nk(label)
        printed_pairs: int = sum(count * comb(k, 2) for k, count in printed_nk.items())
        if printed_pairs != comb(len(result), 2):
            report.flag(f"{label} n_k", _nk(summary.nk), tables[label]["nk"],
                        f"printed table counts {printed_pairs} pairs of lines, C({len(result)}, 2) = "
                        f"{comb(len(result), 2)}")
        else:
            report.compare(f"{label} n_k", _nk(summary.nk), tables[label]["nk"])
        report.compare(f"{label} pair double count", summary.pair_count, comb(len(result), 2))
        if options.freeness:
            # exact lifting over a degree 8 field is slow, the modular probe decides the verdict
            certificate: FreenessCertificate = freeness_certificate(curve_from_arrangement(result), summary,
                                                                    modular_only=True)
            report.details[f"{label} freeness"] = certificate.to_dict()
            report.compare(f"{label} verdict", certificate.verdict.label, Verdict.FREE.label)
    for key, expected in sorted(tables["ngon_symmetry"].items()):
        n = int(key)
        symmetric: Arrangement = lambda_operator(gen_ngon(n), ExactIn(frozenset({2})), AtLeast(n // 2 - 1))
        report.compare(f"C{n} sides, symmetry lines and line at infinity", len(symmetric), expected)
    return report


REPRODUCTIONS: dict[str, Callable[[Optional[ReproOptions]], ReproReport]] = {
    "thmA": reproduce_theorem_a,
    "thmB": reproduce_theorem_b,
    "thmC": reproduce_theorem_c,
    "remark-ngons": reproduce_remark_ngons,
}
