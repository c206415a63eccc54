"""The three demonstration services registered behind the gate.

Job map: swap at base 0, version at base 40, polyroots at base 50; every
service answers stages 0-3.
"""

from __future__ import annotations

from typing import Sequence

from . import marshal, roots
from ._version import VERSION_LINE
from .gate import ComputeError, Gate, PayloadError, ServiceDescriptor

SWAP_BASE = 0
VERSION_BASE = 40
POLYROOTS_BASE = 50

RESIDUAL_BOUND = 1e-8
ROOT_DIGITS = ".17g"


def swap_handler(payload: list[int]) -> list[int]:
    """Element-wise reversal; length preserved."""
    return payload[::-1]


def version_handler(payload: list[int]) -> list[int]:
    """Version banner of the library; input is ignored."""
    return marshal.encode_text(VERSION_LINE)


def _parse_coefficients(payload: Sequence[int]) -> list[float]:
    try:
        fields = marshal.decode_record(payload)
        coefficients = [marshal.parse_decimal(field) for field in fields]
    except marshal.MarshalError as exc:
        raise PayloadError(str(exc)) from exc
    if len(coefficients) < 2:
        raise PayloadError("polynomial degree must be at least 1")
    if coefficients[-1] == 0:
        raise PayloadError("leading coefficient must be nonzero")
    return coefficients


def polyroots_handler(payload: list[int]) -> list[int]:
    """Roots of a polynomial given as decimal coefficient fields, c_0 first.

    Output is 2d decimal fields: real and imaginary part of each of the d
    roots, sorted ascending by (real, imaginary).
    """
    coefficients = _parse_coefficients(payload)
    zs = roots.durand_kerner(coefficients)
    scale = max(1.0, max(abs(c) for c in coefficients))
    for z in zs:
        if abs(roots.horner(coefficients, z)) / scale > RESIDUAL_BOUND:
            raise ComputeError("root iteration did not converge")
    zs.sort(key=lambda z: (z.real, z.imag))
    fields = []
    for z in zs:
        fields.append(format(z.real, ROOT_DIGITS))
        fields.append(format(z.imag, ROOT_DIGITS))
    return marshal.encode_record(fields)


def default_services() -> tuple[ServiceDescriptor, ...]:
    return (
        ServiceDescriptor("swap", SWAP_BASE, 4, swap_handler),
        ServiceDescriptor("version", VERSION_BASE, 4, version_handler),
        ServiceDescriptor("polyroots", POLYROOTS_BASE, 4, polyroots_handler),
    )


def build_gate() -> Gate:
    """A fresh gate with the shipped service set registered."""
    return Gate(default_services())
