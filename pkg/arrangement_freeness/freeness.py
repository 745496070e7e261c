"""defining polynomials, Jacobian syzygies and freeness certificates"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Optional, Sequence

from .arrangement import Arrangement, LatticeSummary
from .codec.definitions import Verdict
from .codec.packets import witness_digest
from .errors import ArrangementValueError, NonOrdinarySingularityError, RepeatedComponentError
from .exactcore import Exponent, FieldElement, MultiPoly, NumberField, product
from .linalg import GoodPrime, KernelResult, SparseMatrix, good_primes

LOGGER: logging.Logger = logging.getLogger('arrangement-freeness')
LOGGER.addHandler(logging.NullHandler())  # in case wrapping application hasn't set a default handler


def monomials(degree: int) -> list[Exponent]:
    """exponent triples of a given total degree, descending lexicographic"""
    return [(a, b, degree - a - b) for a in range(degree, -1, -1) for b in range(degree - a, -1, -1)]


class CurveSpec:
    """a reduced curve given by its irreducible components"""

    def __init__(self, components: Sequence[MultiPoly], label: str = ''):
        """components must be pairwise non-proportional"""
        if not components:
            raise ArrangementValueError("a curve needs at least one component")
        for i, first in enumerate(components):
            for j in range(i + 1, len(components)):
                if first.is_proportional(components[j]):
                    raise RepeatedComponentError(i, j)
        self.components: tuple[MultiPoly, ...] = tuple(components)
        self.field: NumberField = components[0].field
        self.label: str = label
        self.f: MultiPoly = product(components, self.field)
        self.d: int = self.f.degree
        self.r_components: int = len(components)
        self._gradient: Optional[tuple[MultiPoly, MultiPoly, MultiPoly]] = None

    @property
    def gradient(self) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
        """cached partials f_x, f_y, f_z"""
        if self._gradient is None:
            self._gradient = self.f.gradient()
        return self._gradient

    def __str__(self) -> str:
        """short description"""
        return f"{self.label or 'curve'} (d={self.d}, {self.r_components} components over {self.field.label})"


def defining_poly(components: Sequence[MultiPoly], label: str = '') -> CurveSpec:
    """expanded product of the components"""
    curve: CurveSpec = CurveSpec(components, label)
    LOGGER.debug(f"defining polynomial of {curve}: {len(curve.f.terms)} terms")
    return curve


def curve_from_arrangement(arr: Arrangement) -> CurveSpec:
    """product of the linear forms of a line arrangement"""
    return defining_poly([MultiPoly.linear_form(line.coords) for line in arr.lines], arr.label)


@dataclass
class SyzygyWitness:
    """a*f_x + b*f_y + c*f_z = 0 with a, b, c homogeneous of degree r"""
    r: int
    a: MultiPoly
    b: MultiPoly
    c: MultiPoly

    @property
    def triple(self) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
        """(a, b, c)"""
        return self.a, self.b, self.c

    def is_trivial(self) -> bool:
        """all three zero"""
        return self.a.is_zero() and self.b.is_zero() and self.c.is_zero()

    def verify(self, curve: CurveSpec) -> bool:
        """exact polynomial identity"""
        f_x, f_y, f_z = curve.gradient
        return not self.is_trivial() and (self.a * f_x + self.b * f_y + self.c * f_z).is_zero()

    def digest(self) -> str:
        """sha256 of the canonical binary encoding"""
        return witness_digest(self.r, self.triple)


def syzygy_matrix(curve: CurveSpec, r: int) -> SparseMatrix:
    """coefficient system of a*f_x + b*f_y + c*f_z = 0 in degree r"""
    if not 0 <= r <= curve.d - 1:
        raise ArrangementValueError(f"syzygy degree {r} outside 0..{curve.d - 1}")
    unknowns: list[Exponent] = monomials(r)
    rows: dict[Exponent, int] = {e: i for i, e in enumerate(monomials(r + curve.d - 1))}
    matrix: SparseMatrix = SparseMatrix(curve.field, len(rows), 3 * len(unknowns))
    for block, partial in enumerate(curve.gradient):
        for position, (u, v, w) in enumerate(unknowns):
            column: int = block * len(unknowns) + position
            for (a, b, c), coefficient in partial.terms.items():
                matrix.set(rows[(a + u, b + v, c + w)], column, coefficient)
    return matrix


def witness_from_vector(curve: CurveSpec, r: int, vector: Sequence[FieldElement]) -> SyzygyWitness:
    """split a kernel vector into the triple (a, b, c)"""
    unknowns: list[Exponent] = monomials(r)
    size: int = len(unknowns)
    polys: list[MultiPoly] = [MultiPoly(curve.field, {e: vector[block * size + i] for i, e in enumerate(unknowns)})
                              for block in range(3)]
    return SyzygyWitness(r, polys[0], polys[1], polys[2])


def syzygy_space_dim(curve: CurveSpec, r: int) -> int:
    """exact dimension of the degree r syzygies"""
    # verified kernel vectors bound the dimension from below, the modular rank from above
    return syzygy_matrix(curve, r).exact_kernel(good_primes(curve.field)).dimension


@dataclass
class ProbeRecord:
    """modular ranks observed at one degree"""
    r: int
    unknowns: int
    ranks: dict[int, int] = dataclass_field(default_factory=dict)

    @property
    def empty(self) -> bool:
        """full column rank at some prime certifies no syzygy"""
        return any(rank == self.unknowns for rank in self.ranks.values())


def probe_degree(curve: CurveSpec, r: int, primes: Sequence[GoodPrime]) -> ProbeRecord:
    """ranks at two primes, a third when they disagree"""
    matrix: SparseMatrix = syzygy_matrix(curve, r)
    record: ProbeRecord = ProbeRecord(r, matrix.ncols)
    for prime in primes[:2]:
        record.ranks[prime.prime] = matrix.rank_mod(prime)
    if len(set(record.ranks.values())) > 1 and len(primes) > 2:
        LOGGER.warning(f"{curve}: degree {r} ranks disagree across primes {record.ranks}, consulting a third")
        record.ranks[primes[2].prime] = matrix.rank_mod(primes[2])
    LOGGER.debug(f"{curve}: degree {r} probe ranks {record.ranks} of {record.unknowns} unknowns")
    return record


@dataclass
class MdrResult:
    """minimal syzygy degree search up to a bound"""
    bound: int
    r: Optional[int] = None
    witness: Optional[SyzygyWitness] = None
    dimension: int = 0
    exact: bool = True
    probes: list[ProbeRecord] = dataclass_field(default_factory=list)
    primes_used: list[int] = dataclass_field(default_factory=list)

    @property
    def undetermined(self) -> bool:
        """no syzygy up to the bound"""
        return self.r is None


def mdr(curve: CurveSpec, bound: Optional[int] = None, modular_only: bool = False) -> MdrResult:
    """smallest degree with a nonzero syzygy, searched up to bound"""
    limit: int = (curve.d - 1) // 2 if bound is None else bound
    if limit > curve.d - 1:
        raise ArrangementValueError(f"bound {limit} exceeds d - 1 = {curve.d - 1}")
    primes: tuple[GoodPrime, ...] = good_primes(curve.field)
    result: MdrResult = MdrResult(bound=limit, exact=not modular_only)
    known: dict[int, ProbeRecord] = {}

    def probe(r: int) -> ProbeRecord:
        if r not in known:
            known[r] = probe_degree(curve, r, primes)
            result.probes.append(known[r])
        return known[r]

    if limit < 0 or probe(limit).empty:
        LOGGER.info(f"{curve}: no syzygy up to degree {limit}")
        result.primes_used = sorted({p for record in result.probes for p in record.ranks})
        return result
    # syzygies persist upward (multiply by a linear form), so emptiness is monotone in r
    low, high = 0, limit
    while low < high:
        middle: int = (low + high) // 2
        if probe(middle).empty:
            low = middle + 1
        else:
            high = middle
    result.primes_used = sorted({p for record in result.probes for p in record.ranks})
    if modular_only:
        result.r = low
        result.dimension = probe(low).unknowns - min(probe(low).ranks.values())
        LOGGER.info(f"{curve}: modular mdr {low}")
        return result
    for r in range(low, limit + 1):
        matrix: SparseMatrix = syzygy_matrix(curve, r)
        kernel: KernelResult = matrix.exact_kernel(primes)
        if kernel.dimension == 0:
            LOGGER.warning(f"{curve}: degree {r} has no syzygy after exact lifting, moving up")
            continue
        witness: SyzygyWitness = witness_from_vector(curve, r, kernel.vectors[0])
        if not witness.verify(curve):
            raise ArithmeticError(f"{curve}: syzygy witness of degree {r} fails the polynomial identity")
        result.r, result.witness, result.dimension = r, witness, kernel.dimension
        if kernel.prime not in result.primes_used:
            result.primes_used.append(kernel.prime)
        LOGGER.info(f"{curve}: mdr {r}, syzygy space dimension {kernel.dimension}")
        return result
    return result


def tjurina_total(summary: Any) -> int:
    """sum of (m - 1)^2 over ordinary points of a lattice"""
    if not getattr(summary, 'all_ordinary', True):
        bad = next(p for p in summary.points if not p.ordinary)
        raise NonOrdinarySingularityError(bad.point)
    return sum(count * (k - 1) ** 2 for k, count in summary.nk.items())


@dataclass(frozen=True)
class ResolutionShape:
    """0 -> S(-t1) + S(-t2) -> S^3(-(d-1)) -> S"""
    twists: tuple[int, int]
    generator_twist: int

    def __str__(self) -> str:
        """rendered resolution"""
        return (f"0 -> S(-{self.twists[0]}) + S(-{self.twists[1]}) -> "
                f"S^3(-{self.generator_twist}) -> S")


def resolution_shape(d: int, d1: int, d2: int) -> ResolutionShape:
    """minimal resolution of the Milnor algebra of a free curve, larger twist first"""
    high, low = max(d1, d2) + d - 1, min(d1, d2) + d - 1
    return ResolutionShape((high, low), d - 1)


@dataclass(frozen=True)
class TeraoCheck:
    """b2 of the cone against the factorization (1+t)(1+d1 t)(1+d2 t)"""
    b2: int
    expected: int

    @property
    def holds(self) -> bool:
        """coefficients agree"""
        return self.b2 == self.expected


def terao_check(summary: LatticeSummary, d1: int, d2: int) -> TeraoCheck:
    """compare the second Betti number with the exponents"""
    b2: int = sum(count * (k - 1) for k, count in summary.nk.items())
    return TeraoCheck(b2, d1 * d2 + d1 + d2)


@dataclass
class FreenessCertificate:
    """verdict, exponents and the evidence behind them"""
    d: int
    tau: int
    verdict: Verdict
    d1: Optional[int] = None
    witness: Optional[SyzygyWitness] = None
    primes_used: list[int] = dataclass_field(default_factory=list)
    exact: bool = True
    terao: Optional[TeraoCheck] = None

    @property
    def d2(self) -> Optional[int]:
        """second exponent d - 1 - d1"""
        return None if self.d1 is None else self.d - 1 - self.d1

    @property
    def resolution(self) -> Optional[ResolutionShape]:
        """resolution of a free curve"""
        if self.verdict != Verdict.FREE or self.d1 is None or self.d2 is None:
            return None
        return resolution_shape(self.d, self.d1, self.d2)

    def describe(self) -> str:
        """Free(d1,d2) style text"""
        if self.verdict == Verdict.FREE:
            return f"Free({self.d1},{self.d2})"
        return self.verdict.label

    def to_dict(self) -> dict:
        """serializable form"""
        data: dict = {"d": self.d, "d1": self.d1, "d2": self.d2, "tau": self.tau,
                      "verdict": self.verdict.label, "witness_digest": self.witness.digest() if self.witness else None,
                      "primes_used": self.primes_used, "exact": self.exact}
        if self.resolution is not None:
            data["resolution"] = str(self.resolution)
        if self.terao is not None:
            data["terao"] = {"b2": self.terao.b2, "expected": self.terao.expected, "holds": self.terao.holds}
        return data


def verdict_from(d: int, d1: Optional[int], tau: int) -> Verdict:
    """the tau-maximality criterion"""
    if d1 is None:
        return Verdict.NOT_FREE
    if tau == (d - 1) ** 2 - d1 * (d - 1 - d1) and 2 * d1 <= d - 1:
        return Verdict.FREE
    if tau < (d - 1) ** 2 - d1 * (d - 1 - d1) and 2 * d1 < d - 1:
        return Verdict.NOT_FREE
    return Verdict.UNDETERMINED


def freeness_certificate(curve: CurveSpec, summary: Any, modular_only: bool = False) -> FreenessCertificate:
    """decide freeness from the minimal syzygy degree and the total Tjurina number"""
    tau: int = tjurina_total(summary)
    search: MdrResult = mdr(curve, modular_only=modular_only)
    verdict: Verdict = verdict_from(curve.d, search.r, tau)
    certificate: FreenessCertificate = FreenessCertificate(d=curve.d, tau=tau, verdict=verdict, d1=search.r,
                                                           witness=search.witness, primes_used=search.primes_used,
                                                           exact=search.exact)
    if verdict == Verdict.FREE and isinstance(summary, LatticeSummary) and search.r is not None:
        certificate.terao = terao_check(summary, search.r, curve.d - 1 - search.r)
        if not certificate.terao.holds:
            LOGGER.warning(f"{curve}: b2 {certificate.terao.b2} != {certificate.terao.expected} from the exponents")
    LOGGER.info(f"{curve}: {certificate.describe()}, tau={tau}")
    return certificate
