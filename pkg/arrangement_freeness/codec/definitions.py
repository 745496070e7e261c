"""shared enumerations for reports, records and exit codes"""

from enum import Enum, IntEnum

# pylint: disable=invalid-name

WITNESS_MAGIC: int = 0x5359  # 'SY'
WITNESS_FORMAT_VERSION: int = 0x0001


class ExitCode(IntEnum):
    """process exit codes of the command line"""

    SUCCESS = 0  # computed, even when a published value is inconsistent
    USAGE = 1
    COMPUTATION = 2


class Verdict(IntEnum):
    """freeness verdicts"""

    UNDETERMINED = 0
    FREE = 1
    NOT_FREE = 2

    @property
    def label(self) -> str:
        """text used in reports"""
        return {Verdict.UNDETERMINED: 'Undetermined', Verdict.FREE: 'Free', Verdict.NOT_FREE: 'NotFree'}[self]


class RigidityVerdict(IntEnum):
    """first-order rigidity verdicts"""

    INCONCLUSIVE = 0
    FIRST_ORDER_RIGID = 1

    @property
    def label(self) -> str:
        """text used in reports"""
        return 'FirstOrderRigid' if self == RigidityVerdict.FIRST_ORDER_RIGID else 'Inconclusive'


class Factorization(IntEnum):
    """shape of a pencil member"""

    IRREDUCIBLE = 0
    DEGENERATE = 1  # line times conic


class Component(IntEnum):
    """slot of a syzygy triple (a, b, c) paired with f_x, f_y, f_z"""

    A = 0
    B = 1
    C = 2


class Comparison(str, Enum):
    """outcome of comparing a computed value with a published one"""

    MATCH = 'MATCH'
    MISMATCH = 'MISMATCH'
    PUBLISHED_INCONSISTENT = 'PAPER-INCONSISTENT'  # the published value contradicts itself

    def __str__(self) -> str:
        """the report label"""
        return self.value
