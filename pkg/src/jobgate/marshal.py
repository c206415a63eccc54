"""Conversions between domain values and flat int32 payloads.

A payload is a plain Python list of signed 32-bit integers.  Text travels as
one code point per element; numbers travel as decimal text (shortest
round-trip form, so every finite double survives encode/decode bit-exactly).
Multi-field records use code 10 as the field separator.
"""

from __future__ import annotations

import math
import re
from typing import Sequence

MAX_CODE_POINT = 0x10FFFF
SURROGATE_LO = 0xD800
SURROGATE_HI = 0xDFFF
FIELD_SEPARATOR = 10

_DECIMAL_RE = re.compile(r"[+-]?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?\Z")


class MarshalError(ValueError):
    """Payload cannot be decoded (or a value cannot be encoded)."""


def _check_code_point(value: int) -> int:
    if not 0 <= value <= MAX_CODE_POINT:
        raise MarshalError(f"invalid code point {value}")
    if SURROGATE_LO <= value <= SURROGATE_HI:
        raise MarshalError(f"surrogate code point {value:#x}")
    return value


def encode_text(text: str) -> list[int]:
    """One code point per element, in order."""
    return [_check_code_point(ord(ch)) for ch in text]


def decode_text(payload: Sequence[int]) -> str:
    """Inverse of encode_text; rejects out-of-range or surrogate elements."""
    return "".join(chr(_check_code_point(v)) for v in payload)


def format_decimal(x: float) -> str:
    """Shortest decimal text that parses back to exactly x."""
    if not math.isfinite(x):
        raise MarshalError(f"non-finite value {x!r}")
    text = repr(float(x))
    if text.endswith(".0"):
        text = text[:-2]
    return text


def encode_decimal(x: float) -> list[int]:
    return encode_text(format_decimal(x))


def parse_decimal(text: str) -> float:
    if _DECIMAL_RE.match(text) is None:
        raise MarshalError(f"not a decimal literal: {text!r}")
    return float(text)


def decode_decimal(payload: Sequence[int]) -> float:
    return parse_decimal(decode_text(payload))


def encode_record(fields: Sequence[str]) -> list[int]:
    """Join text fields with separator code 10. Fields must not contain it."""
    if not fields:
        raise MarshalError("record needs at least one field")
    for field in fields:
        if "\n" in field:
            raise MarshalError(f"field contains separator: {field!r}")
    return encode_text("\n".join(fields))


def decode_record(payload: Sequence[int]) -> list[str]:
    return decode_text(payload).split("\n")
