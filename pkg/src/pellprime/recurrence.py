"""2x2 modular matrix powers and degree-two linear recurrence evaluation.

Every sequence in this package (the Lucas sequence U, and the pair V~, U~
attached to a general companion-like matrix) is evaluated through one code
path: binary exponentiation of a 2x2 matrix mod n applied to the column
(1, 0).  Matrices are row-major 4-tuples (a, b, c, d) of reduced residues.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "IDENTITY",
    "LucasParams",
    "Mat2",
    "MatrixParams",
    "lucas_pair",
    "mat_apply",
    "mat_mul",
    "mat_pow",
    "tilde_pair",
]

Mat2 = tuple[int, int, int, int]

IDENTITY: Mat2 = (1, 0, 0, 1)


@dataclass(frozen=True)
class LucasParams:
    """Lucas sequence parameters: U_0=0, U_1=1, U_k = P*U_{k-1} - Q*U_{k-2}."""

    P: int
    Q: int

    @property
    def discriminant(self) -> int:
        return self.P * self.P - 4 * self.Q


@dataclass(frozen=True)
class MatrixParams:
    """Parameters of the matrix [[P, -Q], [R, 0]]; R must be nonzero.

    The attached sequences recur with t^2 - P*t + Q*R and start from
    U~_0 = 0, U~_1 = R and V~_0 = 1, V~_1 = P.  R = 1 recovers the plain
    Lucas sequence (with V~_k = U_{k+1}).
    """

    P: int
    Q: int
    R: int

    def __post_init__(self) -> None:
        if self.R == 0:
            raise ValueError("R must be nonzero")

    @property
    def discriminant(self) -> int:
        return self.P * self.P - 4 * self.Q * self.R


def mat_mul(A: Mat2, B: Mat2, n: int) -> Mat2:
    """Product of two 2x2 matrices mod n."""
    a, b, c, d = A
    e, f, g, h = B
    return (
        (a * e + b * g) % n,
        (a * f + b * h) % n,
        (c * e + d * g) % n,
        (c * f + d * h) % n,
    )


def mat_pow(M: Mat2, k: int, n: int) -> Mat2:
    """M**k mod n by binary exponentiation; k must be >= 0."""
    if k < 0:
        raise ValueError("matrix exponent must be non-negative")
    a, b, c, d = (x % n for x in M)
    ra, rb, rc, rd = 1 % n, 0, 0, 1 % n
    while k:
        if k & 1:
            ra, rb, rc, rd = (
                (ra * a + rb * c) % n,
                (ra * b + rb * d) % n,
                (rc * a + rd * c) % n,
                (rc * b + rd * d) % n,
            )
        k >>= 1
        if k:
            a, b, c, d = (
                (a * a + b * c) % n,
                (a * b + b * d) % n,
                (c * a + d * c) % n,
                (c * b + d * d) % n,
            )
    return (ra, rb, rc, rd)


def mat_apply(M: Mat2, v: tuple[int, int], n: int) -> tuple[int, int]:
    """M applied to a column vector mod n."""
    a, b, c, d = M
    x, y = v
    return ((a * x + b * y) % n, (c * x + d * y) % n)


def lucas_pair(params: LucasParams, k: int, n: int) -> tuple[int, int]:
    """(U_k, U_{k+1}) mod n for the Lucas sequence of params.

    Computed from [[P, -Q], [1, 0]]**k applied to (1, 0), whose entries are
    (U_{k+1}, U_k).
    """
    L: Mat2 = (params.P % n, -params.Q % n, 1 % n, 0)
    m = mat_pow(L, k, n)
    return (m[2], m[0])


def tilde_pair(params: MatrixParams, k: int, n: int) -> tuple[int, int]:
    """(V~_k, U~_k) mod n, i.e. [[P, -Q], [R, 0]]**k applied to (1, 0)."""
    M: Mat2 = (params.P % n, -params.Q % n, params.R % n, 0)
    m = mat_pow(M, k, n)
    return (m[0], m[2])
