"""The integral operator with triangle-indicator kernel on L^2(0, pi/2).

The operator sends f to the function v |-> integral of f over (0, pi/2 - v).
Two complementary views are implemented:

  * exact: applied to polynomials (VPiPoly) the operator stays polynomial,
    so its iterates on the constant 1 and their inner products with 1 are
    computed in exact rational arithmetic;
  * numeric: a midpoint-rule Nystrom matrix whose spectrum approximates the
    true eigenvalues 1/(4k+1) (eigenfunctions cos((4k+1)u)) and whose matrix
    powers approximate operator traces.

The kernel is the open triangle u + v < pi/2; boundary points count as 0,
which also fixes the behaviour of grid pairs that land exactly on the
boundary (midpoints with i + j + 1 = N sum to pi/2 in exact arithmetic).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exact_arith import PiPoly, VPiPoly

HALF_PI = math.pi / 2

# Degree of the exact operator iterates grows linearly; keep desk scale.
T_POWER_LIMIT = 40


def k1(u: float, v: float) -> int:
    """Indicator of the open triangle: 1 iff u + v < pi/2, boundary outside."""
    return 1 if u + v < HALF_PI else 0


def grid_midpoints(N: int) -> np.ndarray:
    """Midpoints u_j = (j + 1/2) (pi/2) / N of an N-cell grid on (0, pi/2)."""
    if N < 2:
        raise ValueError("grid size must be at least 2")
    return (np.arange(N) + 0.5) * (HALF_PI / N)


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Samples of a function at the N grid midpoints."""

    N: int
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float)
        if self.N < 2 or values.shape != (self.N,):
            raise ValueError("values must be a length-N vector with N >= 2")
        object.__setattr__(self, "values", values)

    @classmethod
    def ones(cls, N: int) -> GridFunction:
        return cls(N, np.ones(N))

    def midpoints(self) -> np.ndarray:
        return grid_midpoints(self.N)


@dataclass(frozen=True, eq=False)
class KernelMatrix:
    """Midpoint Nystrom matrix: entries w * k1(u_i, u_j) with weight w = (pi/2)/N."""

    N: int
    entries: np.ndarray

    @property
    def weight(self) -> float:
        return HALF_PI / self.N

    def apply(self, f: GridFunction) -> GridFunction:
        """Discrete operator application; approximates the integral transform."""
        if f.N != self.N:
            raise ValueError("grid sizes do not match")
        return GridFunction(self.N, self.entries @ f.values)


def nystrom_matrix(N: int) -> KernelMatrix:
    """Assemble the N x N midpoint discretization of the triangle kernel."""
    mids = grid_midpoints(N)
    w = HALF_PI / N
    entries = np.where(mids[:, None] + mids[None, :] < HALF_PI, w, 0.0)
    return KernelMatrix(N, entries)


def apply_T_poly(f: VPiPoly) -> VPiPoly:
    """Exact operator application to a polynomial: integral from 0 to pi/2 - v."""
    return f.integral_to_reflection()


def t_power_one(n: int) -> VPiPoly:
    """The n-th operator iterate applied to the constant 1, exactly.

    The result has v-degree n and vanishes at v = pi/2 for n >= 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > T_POWER_LIMIT:
        raise ValueError(f"exact iterates are capped at n <= {T_POWER_LIMIT}")
    result = VPiPoly.one()
    for _ in range(n):
        result = apply_T_poly(result)
    return result


def inner_product_one(n: int) -> PiPoly:
    """Exact inner product of 1 with the (n-1)-th operator iterate of 1.

    Equals the pure monomial (A(n)/n!) (pi/2)^n, which ties the operator
    route to the zigzag counts; the test suite checks that identity in
    exact arithmetic.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return t_power_one(n - 1).integral_to_half_pi()


def fourier_coeff_const(k: int) -> float:
    """Coefficient of cos((4k+1)u) in the orthogonal expansion of 1: (4/pi)/(4k+1)."""
    return (4.0 / math.pi) / (4 * k + 1)


def parseval_sum(n: int, K: int) -> float:
    """(pi/4) sum over |k| <= K of c_k^2 / (4k+1)^n for the constant function.

    Converges to (4/pi) S(n+2), the inner product of 1 with its (n+1)-th
    operator iterate, as K grows.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if K < 0:
        raise ValueError("K must be nonnegative")
    terms = [
        fourier_coeff_const(k) ** 2 / float(4 * k + 1) ** n
        for k in range(-K, K + 1)
    ]
    return (math.pi / 4) * math.fsum(terms)


def jacobi_eigenvalues(matrix: np.ndarray, tol: float = 1e-12, max_sweeps: int = 50) -> np.ndarray:
    """All eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.

    Self-contained: exploits only symmetry.  Sweeps the upper triangle until
    the off-diagonal Frobenius mass falls below tol times the matrix norm.
    Intended for moderate sizes; the LAPACK path is the fast production route.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T):
        raise ValueError("matrix must be symmetric")
    n = a.shape[0]
    norm = np.linalg.norm(a)
    if norm == 0.0:
        return np.zeros(n)
    for _ in range(max_sweeps):
        off = math.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= tol * norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
    return np.diag(a).copy()


def sym_eigenvalues(matrix: KernelMatrix, top: int, method: str = "lapack") -> list[float]:
    """The ``top`` eigenvalues of largest magnitude, descending by |lambda|.

    For the Nystrom matrix these approximate 1, -1/3, 1/5, -1/7, 1/9, ...
    method "lapack" uses numpy's symmetric solver; "jacobi" uses the
    self-contained rotation sweep (slow above a few hundred rows).
    """
    if not 1 <= top <= matrix.N:
        raise ValueError("top must be between 1 and N")
    if method == "lapack":
        eigenvalues = np.linalg.eigvalsh(matrix.entries)
    elif method == "jacobi":
        eigenvalues = jacobi_eigenvalues(matrix.entries)
    else:
        raise ValueError("method must be 'lapack' or 'jacobi'")
    order = np.argsort(-np.abs(eigenvalues), kind="stable")
    return [float(eigenvalues[i]) for i in order[:top]]


def exact_eigenvalue(rank: int) -> float:
    """The true eigenvalue with the rank-th largest magnitude: k = 0, -1, 1, -2, 2, ..."""
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    k = (rank + 1) // 2 * (1 if rank % 2 == 0 else -1)
    return 1.0 / (4 * k + 1)


def trace_power_nystrom(N: int, n: int) -> float:
    """Trace of the n-th power of the Nystrom matrix; approximates S(n).

    Requires n >= 2 (the operator itself is not trace class).  Computed by
    matrix powers, independently of any eigenvalue solve: with a + b = n,
    trace(M^n) = sum of the elementwise product of M^a and M^b, both
    symmetric.
    """
    if n < 2:
        raise ValueError("the trace route requires n >= 2")
    m = nystrom_matrix(N).entries
    a = n // 2
    b = n - a
    ma = np.linalg.matrix_power(m, a)
    mb = ma if b == a else np.linalg.matrix_power(m, b)
    return float(np.sum(ma * mb))


def eigenfunction_residual(k: int, N: int) -> float:
    """Discretization residual of the eigenrelation for cos((4k+1)u).

    For each grid midpoint v, integrates cos((4k+1)u) over (0, pi/2 - v)
    with an N-point midpoint rule and compares with cos((4k+1)v)/(4k+1);
    returns the maximum absolute mismatch, O(1/N^2) for this smooth
    integrand.
    """
    if N < 100:
        raise ValueError("use N >= 100 for a meaningful residual")
    m = 4 * k + 1
    v = grid_midpoints(N)
    widths = (HALF_PI - v) / N
    nodes = widths[:, None] * (np.arange(N)[None, :] + 0.5)
    quadrature = np.sum(np.cos(m * nodes), axis=1) * widths
    return float(np.max(np.abs(quadrature - np.cos(m * v) / m)))
