"""arrfree: command line access to the arrangement computations and the reproductions"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence, Union

from .arrangement import Arrangement, LatticeSummary, gen_c8, gen_hesse, gen_ngon, lambda_operator, lattice, \
    parse_selector
from .codec.arrangement_file import ArrangementFile, dumps, read_arrangement_file, write_arrangement_file
from .codec.definitions import ExitCode
from .errors import ArrangementError, ArrangementValueError
from .exactcore import FieldElement, MultiPoly, NumberField, builtin_field, embedding
from .fixtures import data_path, load, update_manifest, verify_manifest
from .freeness import CurveSpec, FreenessCertificate, MdrResult, curve_from_arrangement, freeness_certificate, mdr
from .monodromy import (AlexanderSpec, alexander_from_table, compare_alexander, degree_identity_check,
                        euler_complement, mults_to_dict, parse_alexander, read_table)
from .pencil import (ConicLineLattice, CubicPencil, IndeterminateAt, PencilMember, RationalMap,
                     assemble_conic_line, conic_line_lattice, cubics_through, degenerate_members, map_evaluate)
from .projgeom import ProjLine, ProjPoint
from .repro import REPRODUCTIONS, ReproOptions, ReproReport
from .rigidity import ArrMatroid, RigidityReport, emit_ideal, matroid_from_lattice, rigidity_check
from .unexpected import UnexpectedReport, slp_failures, unexpected_degrees
from .version import backend_versions, get_version

LOGGER: logging.Logger = logging.getLogger('arrangement-freeness')
LOGGER.addHandler(logging.NullHandler())  # in case wrapping application hasn't set a default handler

LOG_FORMAT: str = '%(asctime)s\t%(levelname)s \t[%(filename)s:%(lineno)d] - %(message)s'

Outcome = tuple[dict[str, Any], str]


class ArgumentParser(argparse.ArgumentParser):
    """usage errors exit with ExitCode.USAGE"""

    def error(self, message: str):  # type: ignore[override]
        """print usage and leave"""
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"{self.prog}: error: {message}\n")


def _nk(nk: dict[int, int]) -> dict[str, int]:
    """JSON friendly n_k"""
    return {str(k): v for k, v in sorted(nk.items())}


def _nk_text(nk: dict[int, int]) -> str:
    """n_2=252 n_3=108 ..."""
    return ' '.join(f"n_{k}={v}" for k, v in sorted(nk.items())) or 'none'


def _read_lines(path: Union[str, Path]) -> Arrangement:
    """arrangement held in a file, conics are not allowed"""
    contents: ArrangementFile = read_arrangement_file(path)
    if contents.conics:
        raise ArrangementValueError(f"{path} holds conics, this command needs a line arrangement")
    return contents.arrangement()


def _target_field(requested: Optional[str], source: NumberField) -> tuple[NumberField, FieldElement]:
    """the field to work over and the image of the source generator in it"""
    target: NumberField = builtin_field(requested) if requested else source
    return target, embedding(source, target)


def cmd_gen(args: argparse.Namespace) -> Outcome:
    """Hesse, octagon or regular n-gon arrangement"""
    if args.kind == 'ngon':
        if args.n is None:
            raise ArrangementValueError("gen ngon needs --n")
        arr: Arrangement = gen_ngon(args.n)
    else:
        arr = gen_hesse() if args.kind == 'hesse' else gen_c8()
    contents: ArrangementFile = ArrangementFile.of(arr, source=f"arrfree gen {args.kind}")
    if args.output:
        write_arrangement_file(args.output, contents)
        return ({"label": arr.label, "field": arr.field.label, "lines": len(arr), "output": str(args.output)},
                f"wrote {arr} to {args.output}\n")
    return contents.to_json(), dumps(contents)


def cmd_op(args: argparse.Namespace) -> Outcome:
    """the point-line operator"""
    arr: Arrangement = _read_lines(args.input)
    result: Arrangement = lambda_operator(arr, parse_selector(args.mult), parse_selector(args.count))
    payload: dict[str, Any] = {"input": arr.label, "mult": args.mult, "count": args.count,
                               "lines": len(result), "empty": result.is_empty}
    if args.output:
        write_arrangement_file(args.output, ArrangementFile.of(result, source=f"lambda[{args.mult};{args.count}]"))
        payload["output"] = str(args.output)
    text: str = f"{result}" + (" (empty)" if result.is_empty else '') + '\n'
    return payload, text


def cmd_lattice(args: argparse.Namespace) -> Outcome:
    """n_k table, double count and Tjurina number"""
    arr: Arrangement = _read_lines(args.input)
    summary: LatticeSummary = lattice(arr)
    payload: dict[str, Any] = {"label": arr.label, "lines": len(arr), "nk": _nk(summary.nk),
                               "pairs": summary.pair_count, "double_count_ok": summary.double_count_ok,
                               "max_multiplicity": summary.max_multiplicity, "tau": summary.tjurina()}
    text: str = (f"{arr}\n{_nk_text(summary.nk)}\n"
                 f"pairs {summary.pair_count} (double count {'ok' if summary.double_count_ok else 'FAILED'})\n"
                 f"tau {summary.tjurina()}\n")
    return payload, text


def _conic_line_summary(contents: ArrangementFile, requested: Optional[str]) -> ConicLineLattice:
    """singular points of a file with conics, computed over a field where they split"""
    _, image = _target_field(requested, contents.field)
    components: list[Union[ProjLine, MultiPoly]] = [line.substitute_generator(image) for line in contents.lines]  # type: ignore[misc]
    components.extend(conic.substitute_generator(image) for conic in contents.conics)
    return conic_line_lattice(components)


def cmd_free(args: argparse.Namespace) -> Outcome:
    """freeness certificate of a line or conic-line arrangement"""
    contents: ArrangementFile = read_arrangement_file(args.input)
    summary: Union[LatticeSummary, ConicLineLattice]
    if contents.conics:
        summary = _conic_line_summary(contents, args.lattice_field)
        curve: CurveSpec = contents.curve()
    else:
        arr: Arrangement = contents.arrangement()
        summary = lattice(arr)
        curve = curve_from_arrangement(arr)
    certificate: FreenessCertificate = freeness_certificate(curve, summary, modular_only=args.modular_only)
    payload: dict[str, Any] = certificate.to_dict()
    payload["nk"] = _nk(summary.nk)
    lines: list[str] = [f"{curve}", f"{certificate.describe()} tau={certificate.tau}"
                        + ('' if certificate.exact else ' (modular)')]
    if certificate.resolution is not None:
        lines.append(str(certificate.resolution))
    if certificate.witness is not None:
        lines.append(f"witness {certificate.witness.digest()}")
    return payload, '\n'.join(lines) + '\n'


def cmd_rigid(args: argparse.Namespace) -> Outcome:
    """first-order rigidity and optionally the realization ideal"""
    arr: Arrangement = _read_lines(args.input)
    matroid: ArrMatroid = matroid_from_lattice(lattice(arr))
    report: RigidityReport = rigidity_check(arr, matroid)
    payload: dict[str, Any] = report.to_dict()
    text: str = (f"{arr}\nJacobian {report.jacobian_rows}x{3 * report.n}, kernel {report.kernel_dim}, "
                 f"trivial {report.trivial_dim}\n{report.describe()}\n")
    if args.emit_ideal:
        with open(args.emit_ideal, 'w', encoding='utf-8') as stream:
            payload["ideal_generators"] = emit_ideal(matroid, stream, args.basis_limit)
        text += f"wrote {payload['ideal_generators']} generators to {args.emit_ideal}\n"
    return payload, text


def cmd_unexpected(args: argparse.Namespace) -> Outcome:
    """unexpected curves of the dual point set"""
    arr: Arrangement = _read_lines(args.input)
    summary: LatticeSummary = lattice(arr)
    search: MdrResult = mdr(curve_from_arrangement(arr), modular_only=args.modular_only)
    if search.r is None:
        # mdr above (d - 1) / 2 leaves no room for d1 + 1 < d / 2
        return ({"d": len(arr), "d1": None, "max_mult": summary.max_multiplicity, "admits": False, "degrees": [],
                 "slp_failures": []}, f"{arr}\nno syzygy up to degree {search.bound}, no unexpected curves\n")
    report: UnexpectedReport = unexpected_degrees(len(arr), search.r, summary.max_multiplicity)
    text: str = f"{arr}\nd1={report.d1}, max multiplicity {report.max_mult}\n"
    if report.admits:
        text += f"unexpected curves in degrees {report.degrees}\n"
        text += ''.join(f"  L^{failure.power} fails maximal rank in degree {failure.degree}\n"
                        for failure in slp_failures(report))
    else:
        text += "no unexpected curves\n"
    return report.to_dict(), text


def cmd_monodromy(args: argparse.Namespace) -> Outcome:
    """Alexander polynomial from an n_2(q) table"""
    computed: AlexanderSpec = alexander_from_table(args.d, args.r, read_table(args.table))
    payload: dict[str, Any] = {"d": args.d, "r": args.r, "mults": dict(mults_to_dict(computed)),
                               "alexander": str(computed), "degree": computed.degree}
    lines: list[str] = [f"Delta = {computed}", f"deg = {computed.degree}"]
    stated: Optional[AlexanderSpec] = parse_alexander(args.stated, args.d, args.r) if args.stated else None
    if stated is not None:
        comparisons = compare_alexander(computed, stated)
        payload["comparison"] = [{"q": c.q, "computed": c.computed, "stated": c.stated, "status": str(c.status)}
                                 for c in comparisons]
        lines.extend(f"m(alpha_{c.q}): {c.computed} vs {c.stated} {c.status}" for c in comparisons)
    if args.mu is not None:
        chi: int = euler_complement(args.d, args.mu)
        identity = degree_identity_check(args.d, chi, stated or computed)
        payload["degree_identity"] = identity.to_dict()
        lines.append(f"chi = {chi}, deg Delta^2 = {identity.degree_delta2}")
    return payload, '\n'.join(lines) + '\n'


def cmd_pencil(args: argparse.Namespace) -> Outcome:
    """cubic pencil through nine points and its degenerate members"""
    contents: ArrangementFile = read_arrangement_file(args.points)
    _, image = _target_field(args.field, contents.field)
    pencil: CubicPencil = cubics_through([point.substitute_generator(image) for point in contents.points])  # type: ignore[misc]
    members: list[PencilMember] = degenerate_members(pencil)
    payload: dict[str, Any] = {"field": pencil.field.label, "basis": [str(cubic) for cubic in pencil.basis],
                               "degenerate_members": [str(member) for member in members]}
    lines: list[str] = [f"pencil over {pencil.field.label}"] + [f"  {cubic}" for cubic in pencil.basis]
    lines.append(f"{len(members)} degenerate members")
    lines.extend(f"  {member}" for member in members)
    if members and all(member.conic_smooth and not member.shared for member in members):
        curve, summary = assemble_conic_line(members)
        payload["conic_line"] = {"d": curve.d, "components": curve.r_components, "nk": _nk(summary.nk),
                                 "all_ordinary": summary.all_ordinary, "bezout": summary.point_bezout}
        lines.append(f"{curve}: {_nk_text(summary.nk)}, Bezout {summary.point_bezout}")
    return payload, '\n'.join(lines) + '\n'


def _parse_point(text: str, number_field: NumberField) -> ProjPoint:
    """'a:b:c' with generator expressions"""
    pieces: list[str] = text.split(':')
    if len(pieces) != 3:
        raise ArrangementValueError(f"point '{text}' needs three ':' separated coordinates")
    return ProjPoint([number_field.parse(piece) for piece in pieces])


def cmd_map_eval(args: argparse.Namespace) -> Outcome:
    """evaluate a rational map at a point"""
    contents: ArrangementFile = read_arrangement_file(args.map) if args.map else load('rational_map')
    rational_map: RationalMap = RationalMap(tuple(contents.polys))  # type: ignore[arg-type]
    number_field: NumberField = builtin_field(args.field) if args.field else contents.field
    point: ProjPoint = _parse_point(args.point, number_field)
    image: Union[ProjPoint, IndeterminateAt] = map_evaluate(rational_map, point)
    if isinstance(image, IndeterminateAt):
        return {"point": str(point), "image": None, "indeterminate": True}, f"{image}\n"
    return {"point": str(point), "image": str(image), "indeterminate": False}, f"{point} -> {image}\n"


def cmd_repro(args: argparse.Namespace) -> Outcome:
    """run a reproduction against the published values"""
    verify_manifest()
    options: ReproOptions = ReproOptions(freeness=not args.skip_freeness, rigidity=not args.skip_rigidity,
                                         modular_only=args.modular_only)
    report: ReproReport = REPRODUCTIONS[args.name](options)
    return report.to_dict(), report.render()


def cmd_manifest(args: argparse.Namespace) -> Outcome:
    """verify or pin the fixture hashes"""
    if args.update:
        changed: dict[str, str] = update_manifest()
        return {"updated": changed}, ''.join(f"pinned {name} {digest}\n" for name, digest in changed.items()) \
            or "manifest up to date\n"
    verified: dict[str, str] = verify_manifest()
    return {"verified": sorted(verified)}, f"{len(verified)} fixtures verified in {data_path('manifest.json').parent}\n"


def build_parser() -> ArgumentParser:
    """the arrfree argument tree"""
    parser: ArgumentParser = ArgumentParser(prog='arrfree', description=__doc__)
    parser.add_argument('--json', action='store_true', help="machine readable output on stdout")
    parser.add_argument('-v', '--verbose', action='count', default=0, help="-v for INFO, -vv for DEBUG on stderr")
    backends: str = ', '.join(f"{name} {version}" for name, version in backend_versions().items())
    parser.add_argument('--version', action='version',
                        version=f"%(prog)s {get_version('arrangement-freeness')} ({backends})")
    commands = parser.add_subparsers(dest='command', required=True)

    gen = commands.add_parser('gen', help="write a built-in arrangement")
    gen.add_argument('kind', choices=['hesse', 'c8', 'ngon'])
    gen.add_argument('--n', type=int, help="sides of the regular polygon")
    gen.add_argument('-o', '--output', type=Path)
    gen.set_defaults(handler=cmd_gen)

    operator = commands.add_parser('op', help="apply the point-line operator")
    operator.add_argument('operator', choices=['lambda'])
    operator.add_argument('--mult', required=True, help="'exact:2,3' or 'atleast:2'")
    operator.add_argument('--count', required=True, help="'exact:3' or 'atleast:3'")
    operator.add_argument('-i', '--input', required=True, type=Path)
    operator.add_argument('-o', '--output', type=Path)
    operator.set_defaults(handler=cmd_op)

    summary = commands.add_parser('lattice', help="intersection lattice summary")
    summary.add_argument('-i', '--input', required=True, type=Path)
    summary.set_defaults(handler=cmd_lattice)

    free = commands.add_parser('free', help="freeness certificate")
    free.add_argument('-i', '--input', required=True, type=Path)
    free.add_argument('--modular-only', action='store_true', help="decide from the modular probes only")
    free.add_argument('--lattice-field', help="field where the conic intersections split, e.g. 'Q(z12)'")
    free.set_defaults(handler=cmd_free)

    rigid = commands.add_parser('rigid', help="first-order rigidity")
    rigid.add_argument('-i', '--input', required=True, type=Path)
    rigid.add_argument('--emit-ideal', type=Path, help="write the realization ideal generators here")
    rigid.add_argument('--basis-limit', type=int, help="bases used in the saturation generator")
    rigid.set_defaults(handler=cmd_rigid)

    unexpected = commands.add_parser('unexpected', help="unexpected curves of the dual points")
    unexpected.add_argument('-i', '--input', required=True, type=Path)
    unexpected.add_argument('--modular-only', action='store_true')
    unexpected.set_defaults(handler=cmd_unexpected)

    monodromy = commands.add_parser('monodromy', help="Alexander polynomial from an n_2(q) table")
    monodromy.add_argument('--table', required=True, type=Path)
    monodromy.add_argument('-d', type=int, required=True, help="degree of the curve")
    monodromy.add_argument('-r', type=int, required=True, help="number of components")
    monodromy.add_argument('--stated', help="factored Alexander polynomial to compare with")
    monodromy.add_argument('--mu', type=int, help="total Milnor number, enables the degree identity")
    monodromy.set_defaults(handler=cmd_monodromy)

    pencil = commands.add_parser('pencil', help="cubic pencil through nine points")
    pencil.add_argument('--points', required=True, type=Path)
    pencil.add_argument('--field', help="extend to this field first, e.g. 'Q(z12)'")
    pencil.set_defaults(handler=cmd_pencil)

    map_eval = commands.add_parser('map-eval', help="evaluate a rational map")
    map_eval.add_argument('--point', required=True, help="'a:b:c'")
    map_eval.add_argument('--field', help="field of the point coordinates")
    map_eval.add_argument('--map', type=Path, help="file with three forms, default the shipped sextic map")
    map_eval.set_defaults(handler=cmd_map_eval)

    repro = commands.add_parser('repro', help="reproduce a published result")
    repro.add_argument('name', choices=sorted(REPRODUCTIONS))
    repro.add_argument('--skip-freeness', action='store_true')
    repro.add_argument('--skip-rigidity', action='store_true')
    repro.add_argument('--modular-only', action='store_true')
    repro.set_defaults(handler=cmd_repro)

    manifest = commands.add_parser('manifest', help="check the fixture hashes")
    manifest.add_argument('--update', action='store_true', help="pin the current hashes")
    manifest.set_defaults(handler=cmd_manifest)
    return parser


def _emit(payload: Any, as_json: bool, text: str = '') -> None:
    """stdout in the selected format"""
    if as_json:
        sys.stdout.write(json.dumps(payload, indent=1, sort_keys=True, default=str) + '\n')
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """entry point, returns the exit code"""
    try:
        args: argparse.Namespace = build_parser().parse_args(argv)
    except SystemExit as exit_request:
        return int(exit_request.code or 0)
    logging.basicConfig(level={0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG),
                        format=LOG_FORMAT, stream=sys.stderr)
    handler: Callable[[argparse.Namespace], Outcome] = args.handler
    try:
        payload, text = handler(args)
    except ArrangementError as err:
        LOGGER.error(f"{args.command}: {err}")
        _emit(err.as_dict(), True)
        return ExitCode.COMPUTATION
    except ArithmeticError as err:
        LOGGER.error(f"{args.command}: consistency audit failed: {err}")
        _emit({"error": "AuditFailure", "detail": str(err)}, True)
        return ExitCode.COMPUTATION
    except (ArrangementValueError, OSError) as err:
        LOGGER.error(f"{args.command}: {err}")
        _emit({"error": "Usage", "detail": str(err)}, True)
        return ExitCode.USAGE
    _emit(payload, args.json, text)
    return ExitCode.SUCCESS
