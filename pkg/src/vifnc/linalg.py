"""Dense least-squares core: QR solve with rank detection, cross products.

All operations are pure functions over validated inputs; nothing here keeps
state, so concurrent use is safe. The Belsley-style data this package
targets is near-singular by construction, which is why the solver goes
through an orthogonal decomposition instead of the normal equations: the
squared condition number of a Gram matrix would wipe out the digits the
replication targets depend on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonFiniteInput, TooFewObservations

#: A triangular-factor diagonal below this fraction of the largest diagonal
#: magnitude counts as a zero column (numerical rank test).
DEFAULT_RANK_RTOL = 1e-10


@dataclass(frozen=True)
class LeastSquaresSolution:
    """Output of :func:`solve_least_squares`.

    Attributes
    ----------
    coefficients : ndarray
        Minimum-norm least-squares solution, one entry per design column.
    rank : int
        Numerical rank from the R-diagonal tolerance test.
    residual_norm : float
        Euclidean norm of ``b - A @ coefficients``.
    rank_deficient : bool
        True when ``rank`` is below the number of columns. Deliberately a
        flag rather than an exception; callers decide how to react.
    """

    coefficients: np.ndarray
    rank: int
    residual_norm: float
    rank_deficient: bool


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce to a finite float64 2-d array; 1-d input becomes one column."""
    arr = np.asarray(a, dtype=float)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DimensionMismatch(
            f"{name} must be 2-d with at least one row and one column, got shape {arr.shape}"
        )
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput(f"{name} contains NaN or infinite entries")
    return arr


def as_vector(b, name: str = "vector") -> np.ndarray:
    """Coerce to a finite float64 1-d array."""
    arr = np.asarray(b, dtype=float).reshape(-1)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput(f"{name} contains NaN or infinite entries")
    return arr


def qr_rank(r_factor: np.ndarray, rtol: float = DEFAULT_RANK_RTOL) -> int:
    """Numerical rank of a QR triangular factor.

    A diagonal entry whose magnitude is below ``rtol`` times the largest
    diagonal magnitude is treated as zero. An all-zero factor has rank 0.
    """
    diag = np.abs(np.diag(r_factor))
    dmax = diag.max(initial=0.0)
    if dmax == 0.0:
        return 0
    return int(np.count_nonzero(diag >= rtol * dmax))


def solve_least_squares(
    A, b, rank_rtol: float = DEFAULT_RANK_RTOL
) -> LeastSquaresSolution:
    """Solve ``min ||A x - b||`` by Householder QR with rank detection.

    Parameters
    ----------
    A : array-like, shape (n, k)
        Design matrix, n >= k.
    b : array-like, shape (n,)
        Right-hand side.
    rank_rtol : float
        Relative tolerance of the R-diagonal rank test.

    Returns
    -------
    LeastSquaresSolution
        Full-rank systems are solved from the triangular factor and give
        the unique OLS estimator. A rank-deficient system is *flagged*
        and solved via SVD for the minimum-norm coefficients instead.

    Raises
    ------
    NonFiniteInput
        If ``A`` or ``b`` contains NaN or infinities.
    DimensionMismatch
        If row counts disagree.
    TooFewObservations
        If there are fewer rows than columns.
    """
    A = as_matrix(A, "A")
    b = as_vector(b, "b")
    n, k = A.shape
    if b.shape[0] != n:
        raise DimensionMismatch(f"A has {n} rows but b has {b.shape[0]} entries")
    if n < k:
        raise TooFewObservations(f"{n} observations for {k} design columns")

    Q, R = np.linalg.qr(A, mode="reduced")
    rank = qr_rank(R, rank_rtol)
    if rank == k:
        coef = np.linalg.solve(R, Q.T @ b)
    else:
        # Minimum-norm solution; rank is still reported from the QR test.
        coef, *_ = np.linalg.lstsq(A, b, rcond=None)
    residual_norm = float(np.linalg.norm(b - A @ coef))
    return LeastSquaresSolution(
        coefficients=coef,
        rank=rank,
        residual_norm=residual_norm,
        rank_deficient=rank < k,
    )


def cross_product(A, B) -> np.ndarray:
    """Return the cross-product matrix ``A.T @ B``.

    Both operands must have the same row count; 1-d inputs are treated as
    single columns, so ``cross_product(x, x)`` of an n-vector is the 1x1
    matrix holding the sum of squares.
    """
    A = as_matrix(A, "A")
    B = as_matrix(B, "B")
    if A.shape[0] != B.shape[0]:
        raise DimensionMismatch(
            f"row counts differ: A has {A.shape[0]}, B has {B.shape[0]}"
        )
    return A.T @ B
