"""Simultaneous root finding for univariate polynomials (Durand-Kerner).

Coefficients are given in ascending-power order.  The iteration refines all
roots at once from a non-real starting ray, which breaks the symmetry that
stalls real starting points on even polynomials.
"""

from __future__ import annotations

from typing import Sequence

UPDATE_TOL = 1e-12
MAX_SWEEPS = 1000
_START = 0.4 + 0.9j


def horner(coefficients: Sequence[complex], z: complex) -> complex:
    """Evaluate sum(c_k z^k) with coefficients in ascending-power order."""
    acc = 0j
    for c in reversed(coefficients):
        acc = acc * z + c
    return acc


def durand_kerner(
    coefficients: Sequence[complex],
    update_tol: float = UPDATE_TOL,
    max_sweeps: int = MAX_SWEEPS,
) -> list[complex]:
    """All complex roots of c_0 + c_1 x + ... + c_d x^d, d >= 1, c_d != 0.

    Sweeps until the largest per-root update drops below update_tol or the
    sweep budget runs out; in either case the current approximations are
    returned and the caller judges them by residual.
    """
    degree = len(coefficients) - 1
    if degree < 1:
        raise ValueError("degree must be at least 1")
    lead = coefficients[-1]
    if lead == 0:
        raise ValueError("leading coefficient must be nonzero")
    monic = [complex(c) / lead for c in coefficients]

    roots = [_START ** (k + 1) for k in range(degree)]
    for _ in range(max_sweeps):
        max_step = 0.0
        for k in range(degree):
            zk = roots[k]
            denom = 1.0 + 0j
            for j in range(degree):
                if j != k:
                    denom *= zk - roots[j]
            if denom == 0:
                # coincident approximations: nudge apart and retry next sweep
                roots[k] = zk + 1e-6 * (1 + 1j)
                max_step = float("inf")
                continue
            step = horner(monic, zk) / denom
            roots[k] = zk - step
            max_step = max(max_step, abs(step))
        if max_step < update_tol:
            break
    return roots
