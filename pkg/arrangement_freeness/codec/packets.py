"""canonical binary records for syzygy witnesses, hashed into certificate digests"""
import hashlib
import struct
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from datastruct import DataStruct  # mypy: disable-error-code="import-untyped"
from datastruct.fields import (  # mypy: disable-error-code="import-untyped"
    built, field)
from datastruct.utils.config import (Config, Endianness, datastruct_config,
                                     datastruct_get_config)

from ..errors import ArrangementValueError
from ..exactcore import MultiPoly
from .definitions import WITNESS_FORMAT_VERSION, WITNESS_MAGIC, Component


@dataclass
class BaseStruct(DataStruct):
    """big-endian records"""

    @classmethod
    @lru_cache()
    def config(cls) -> Config:
        datastruct_config(endianness=Endianness.NETWORK)
        config = Config(datastruct_get_config())
        config.update(getattr(cls, "_CONFIG", {}))
        return config

    @classmethod
    def new(cls, data: bytes):
        """decode a record"""
        return cls.unpack(data)

    @classmethod
    def packet_size(cls) -> int:
        """size of the fixed-format fields"""
        fmt: str = "".join([item[1].fmt for item in cls.classfields() if isinstance(item[1].fmt, str)])
        return struct.calcsize('>' + fmt)


@dataclass
class WitnessHeader(BaseStruct):
    """leads every witness encoding"""
    magic: int = field("H", default=WITNESS_MAGIC)
    version: int = field("H", default=WITNESS_FORMAT_VERSION)
    degree: int = field("H", default=0)  # r, the degree of a, b and c
    field_degree: int = field("H", default=1)
    term_count: int = field("I", default=0)


@dataclass
class TermHeader(BaseStruct):
    """one monomial of one slot, followed by its coefficient vector"""
    component: int = field("B", default=Component.A)
    ex: int = field("H", default=0)
    ey: int = field("H", default=0)
    ez: int = field("H", default=0)


@dataclass
class SignedInteger(BaseStruct):
    """length-prefixed two's complement big-endian integer"""
    length: int = built("H", lambda ctx: len(ctx.data))
    data: bytes = field(lambda ctx: ctx.length, default=b'')

    @classmethod
    def of(cls, value: int) -> 'SignedInteger':
        """encode an arbitrary precision integer"""
        width: int = max(1, (value.bit_length() + 8) // 8)
        return cls(data=value.to_bytes(width, 'big', signed=True))

    @property
    def value(self) -> int:
        """decoded integer"""
        return int.from_bytes(self.data, 'big', signed=True)


def encode_rational(value: Fraction) -> bytes:
    """numerator record then denominator record"""
    return SignedInteger.of(value.numerator).pack() + SignedInteger.of(value.denominator).pack()


def encode_witness(degree: int, triple: Sequence[MultiPoly]) -> bytes:
    """canonical bytes of (a, b, c): terms in descending order per slot"""
    field_degree: int = triple[0].field.degree
    chunks: list[bytes] = [WitnessHeader(degree=degree, field_degree=field_degree,
                                         term_count=sum(len(poly.terms) for poly in triple)).pack()]
    for slot, poly in zip(Component, triple):
        for exponent, coefficient in poly.sorted_terms():
            chunks.append(TermHeader(component=slot, ex=exponent[0], ey=exponent[1], ez=exponent[2]).pack())
            chunks.extend(encode_rational(c) for c in coefficient.coeffs)
    return b''.join(chunks)


def read_witness_header(data: bytes) -> WitnessHeader:
    """leading record of an encoded witness, checked for magic and version"""
    size: int = WitnessHeader.packet_size()
    if len(data) < size:
        raise ArrangementValueError(f"witness record needs {size} header bytes, got {len(data)}")
    header: WitnessHeader = WitnessHeader.new(data[:size])
    if header.magic != WITNESS_MAGIC or header.version != WITNESS_FORMAT_VERSION:
        raise ArrangementValueError(f"not a witness record: magic {header.magic:#06x}, version {header.version}")
    return header


def witness_digest(degree: int, triple: Sequence[MultiPoly]) -> str:
    """sha256 hex digest of the canonical encoding"""
    encoded: bytes = encode_witness(degree, triple)
    header: WitnessHeader = read_witness_header(encoded)
    if header.degree != degree or header.term_count != sum(len(poly.terms) for poly in triple):
        raise ArithmeticError(f"witness header {header} disagrees with the degree {degree} triple")
    return hashlib.sha256(encoded).hexdigest()
