"""Per-n parameter selection in the style of Selfridge's method A.

Each selector walks a fixed alternating discriminant sequence until it finds
D with Jacobi symbol (D/n) = -1, then derives the remaining parameters.
Perfect squares are rejected up front (no D with (D/n) = -1 exists for
them, so the walk would never terminate); a candidate sharing a nontrivial
factor with n short-circuits to a Composite verdict.

Deliberately NO trial-division prefilter: pseudoprimes for these selected
parameters routinely have small factors (323 = 17*19 heads the Lucas list),
so any divisibility shortcut would change the reported lists.
"""

from __future__ import annotations

from math import gcd, isqrt
from typing import Iterator

from .conic import ConicParams
from .modarith import MAX_MODULUS, jacobi
from .primality import (
    Outcome,
    Verdict,
    double_lucas_test,
    generalized_pell_test,
    lucas_test,
    matrix_test,
)
from .recurrence import LucasParams, MatrixParams

__all__ = [
    "CANDIDATE_CAP",
    "classic_candidates",
    "double_lucas_selfridge",
    "gen_pell_selfridge",
    "lucas_selfridge",
    "matrix_candidates",
    "matrix_selfridge",
    "selfridge_classic",
    "selfridge_gen_pell",
    "selfridge_matrix",
]

CANDIDATE_CAP = 10**6


def classic_candidates() -> Iterator[int]:
    """5, -7, 9, -11, 13, ...: |D| ascending by 2, alternating sign.

    Every candidate is ≡ 1 (mod 4), so (1 - D)/4 is an exact integer.
    """
    d = 5
    while True:
        yield d
        d = -(d + 2) if d > 0 else -(d - 2)


def matrix_candidates() -> Iterator[int]:
    """-7, 9, -15, 17, -23, 25, ...: the pairs (-(8k-1), 8k+1) for k >= 1.

    Every candidate is ≡ 1 (mod 8), so (1 - D)/8 is an exact integer.
    """
    k = 1
    while True:
        yield -(8 * k - 1)
        yield 8 * k + 1
        k += 1


def _pre(n: int) -> Verdict | None:
    if (not isinstance(n, int) or isinstance(n, bool) or n < 3
            or n > MAX_MODULUS or n % 2 == 0):
        return Verdict(Outcome.PARAMS_INVALID,
                       evidence="n must be odd, >= 3 and below 2**63",
                       stage="selector")
    r = isqrt(n)
    if r * r == n:
        # (D/n) is never -1 for a square; r is a nontrivial divisor.
        return Verdict(Outcome.COMPOSITE, evidence="perfect square",
                       factor=r, stage="selector")
    return None


def _find_d(n: int, candidates: Iterator[int]) -> int | Verdict:
    for tried, d in enumerate(candidates):
        if tried >= CANDIDATE_CAP:
            raise RuntimeError(
                f"no discriminant with (D/n) = -1 within {CANDIDATE_CAP} "
                f"candidates for n = {n}")
        j = jacobi(d, n)
        if j == -1:
            return d
        if j == 0:
            g = gcd(d, n)
            if 1 < g < n:
                return Verdict(Outcome.COMPOSITE,
                               evidence=f"gcd(D candidate, n) = {g}",
                               factor=g, jacobi_branch=0, stage="selector")
            # g == n: n divides the candidate (n is tiny); skip it.
    raise AssertionError("unreachable")


def selfridge_classic(n: int) -> LucasParams | Verdict:
    """Classic Selfridge parameters: P = 1, Q = (1 - D)/4.

    D is the first of 5, -7, 9, -11, ... with (D/n) = -1; the returned
    params satisfy P^2 - 4Q = D.
    """
    early = _pre(n)
    if early:
        return early
    d = _find_d(n, classic_candidates())
    if isinstance(d, Verdict):
        return d
    return LucasParams(1, (1 - d) // 4)


def selfridge_matrix(n: int) -> MatrixParams | Verdict:
    """Selfridge-style parameters for the matrix test: P = 1, R = 2.

    D runs over -7, 9, -15, 17, ... (≡ 1 mod 8) so Q = (1 - D)/8 is exact;
    the returned params satisfy P^2 - 4QR = D, hence the test always takes
    the (Δ/n) = -1 branch.
    """
    early = _pre(n)
    if early:
        return early
    d = _find_d(n, matrix_candidates())
    if isinstance(d, Verdict):
        return d
    return MatrixParams(1, (1 - d) // 8, 2)


def selfridge_gen_pell(n: int) -> ConicParams | Verdict:
    """Selfridge-style conic parameters: base point (3, 2), classic D walk.

    The base point norm is 9 - 4D mod n; a shared factor with n surfaces
    when the test runs.
    """
    early = _pre(n)
    if early:
        return early
    d = _find_d(n, classic_candidates())
    if isinstance(d, Verdict):
        return d
    return ConicParams(d, 3, 2)


def lucas_selfridge(n: int) -> Verdict:
    """Lucas test with classic Selfridge parameters (pseudoprimes: A217120)."""
    params = selfridge_classic(n)
    if isinstance(params, Verdict):
        return params
    return lucas_test(n, params)


def double_lucas_selfridge(n: int) -> Verdict:
    """Double Lucas test with classic Selfridge parameters (A212423)."""
    params = selfridge_classic(n)
    if isinstance(params, Verdict):
        return params
    return double_lucas_test(n, params)


def matrix_selfridge(n: int, variant: str = "v-companion") -> Verdict:
    """Matrix test with the adapted Selfridge parameters (P=1, R=2).

    Defaults to the "v-companion" variant: with R = 2 the u-companion
    congruences are failed by every prime, so only the v-companion variant
    is a primality test on this path.
    """
    params = selfridge_matrix(n)
    if isinstance(params, Verdict):
        return params
    return matrix_test(n, params, variant=variant)


def gen_pell_selfridge(n: int) -> Verdict:
    """Generalized Pell test with Selfridge-selected D and base point (3, 2)."""
    params = selfridge_gen_pell(n)
    if isinstance(params, Verdict):
        return params
    return generalized_pell_test(n, params)
