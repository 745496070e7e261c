"""exact freeness, rigidity and monodromy computations for line and conic-line arrangements"""
from . import version
from .arrangement import (Arrangement, AtLeast, ExactIn, LatticeSummary, gen_c8, gen_hesse, gen_ngon,
                          lambda_at_least, lambda_operator, lattice)
from .errors import *
from .exactcore import FieldElement, MultiPoly, NumberField, builtin_field
from .freeness import (CurveSpec, FreenessCertificate, curve_from_arrangement, defining_poly, freeness_certificate,
                       mdr)
from .projgeom import ProjLine, ProjPoint

PACKAGE_NAME: str = 'arrangement-freeness'

__versions__: str = version.get_version(PACKAGE_NAME)

__all__: list[str] = [
    'NumberField',  # Q[t]/(minpoly)
    'FieldElement',
    'MultiPoly',  # polynomials in x, y, z
    'builtin_field',
    'ProjPoint',
    'ProjLine',
    'Arrangement',  # deduplicated set of lines
    'ExactIn',  # selectors for the point-line operators
    'AtLeast',
    'LatticeSummary',
    'lattice',
    'lambda_operator',
    'lambda_at_least',
    'gen_hesse',
    'gen_c8',
    'gen_ngon',
    'CurveSpec',
    'defining_poly',
    'curve_from_arrangement',
    'mdr',
    'FreenessCertificate',
    'freeness_certificate',

    # exceptions
    'ArrangementError',
    'ArrangementValueError',
    'FieldMismatchError',
    'FieldDivisionByZeroError',
    'InexactDivisionError',
    'NotInFieldError',
    'DegenerateInputError',
    'NoGoodPrimeError',
]
