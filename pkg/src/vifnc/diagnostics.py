"""Collinearity diagnostics: VIF, VIFnc, Stewart's index, and reports.

Two families of auxiliary regressions drive everything here. The centered
one (with intercept) yields the classical VIF and detects near-linear
relations among the regressors themselves ("essential" collinearity). The
non-centered one (through the origin) yields VIFnc, which instead reacts
to relations among low-variability columns, the constant included once it
is passed explicitly ("non-essential" collinearity).

Conventions that matter and are easy to get wrong:

* ``vifnc(j, regressors)`` regresses column j on exactly the named
  regressors, never adding a ones column. Passing a set that contains an
  explicit all-ones column is how the intercept trick works.
* ``stewart_k2`` in a report row is Stewart's index of the fitted design
  with column j removed, so it includes the intercept column whenever the
  model has one. For intercept models it therefore decomposes *exactly*
  as ``vif + n*mean^2/RSS``; for through-origin models it coincides
  exactly with ``vifnc``. The two identities pick out different designs
  and only agree when the remaining regressors span the constant.
* Perfect collinearity returns ``math.inf``, never raises.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConstantRegressor, NoConstantColumn, RankDeficient, ZeroColumn
from .linalg import DEFAULT_RANK_RTOL
from .ols import DataMatrix, FitResult, ModelSpec, fit

#: Auxiliary R-squared at or above 1 - PERFECT_TOL triggers the infinity
#: sentinel for VIF/VIFnc.
DEFAULT_PERFECT_TOL = 1e-12


class AuxiliaryMode(enum.Enum):
    """Whether an auxiliary regression carries an intercept."""

    CENTERED = "centered"
    NONCENTERED = "noncentered"


@dataclass(frozen=True)
class Thresholds:
    """Flagging thresholds for the report.

    The conventional VIF cutoff of 10 is the default for both; no
    canonical VIFnc threshold exists, which is why both stay configurable
    and the report carries a caveat saying so.
    """

    vif: float = 10.0
    vifnc: float = 10.0


@dataclass(frozen=True)
class CollinearityRow:
    """Per-regressor diagnostics.

    ``vif`` is None for an exactly constant column (centered VIF is
    undefined there), and ``nonessential_term`` / ``rss_aux_centered``
    are None with it. ``coef_variation`` is sd/|mean| of the column,
    reported as supporting evidence for the low-variability reading of
    non-essential collinearity; it takes no part in the flags.
    """

    variable: str
    mean: float
    vif: float | None
    vifnc: float
    stewart_k2: float
    nonessential_term: float | None
    rss_aux_centered: float | None
    rss_aux_noncentered: float
    coef_variation: float
    essential_suspect: bool
    nonessential_suspect: bool


@dataclass(frozen=True)
class VarianceFactor:
    """Variance of one coefficient as a multiple of sigma^2.

    ``ratio`` compares against the orthogonal-design reference variance
    and equals VIFnc of the column within its design. ``intercept_position``
    marks the constant column, whose variance factor falls outside the
    j = 2..k decomposition the centered theory covers.
    """

    variable: str
    var_over_sigma2: float
    var_orthogonal_over_sigma2: float
    ratio: float
    intercept_position: bool = False


@dataclass(frozen=True)
class CollinearityReport:
    rows: tuple[CollinearityRow, ...]
    thresholds: Thresholds


def _others(data: DataMatrix, j: str, regressors: Sequence[str] | None) -> tuple[str, ...]:
    if regressors is None:
        data.column(j)  # surface UnknownColumn for j itself
        return tuple(n for n in data.names if n != j)
    return tuple(regressors)


def auxiliary_regression(
    data: DataMatrix,
    j: str,
    regressors: Sequence[str] | None,
    mode: AuxiliaryMode,
    rank_rtol: float = DEFAULT_RANK_RTOL,
) -> FitResult:
    """Regress column ``j`` on ``regressors`` (default: every other column).

    The fit has an intercept exactly when ``mode`` is CENTERED.
    """
    spec = ModelSpec(
        dependent=j,
        regressors=_others(data, j, regressors),
        intercept=mode is AuxiliaryMode.CENTERED,
    )
    return fit(data, spec, rank_rtol=rank_rtol)


def _is_constant(x: np.ndarray) -> bool:
    return float(x.min()) == float(x.max())


def vif(
    data: DataMatrix,
    j: str,
    regressors: Sequence[str] | None = None,
    *,
    perfect_tol: float = DEFAULT_PERFECT_TOL,
) -> float:
    """Classical variance inflation factor of column ``j``.

    Computed as 1/(1 - R2) of the centered auxiliary regression of j on
    the given regressors, evaluated as TSS_centered/RSS for stability.

    Returns ``math.inf`` when the auxiliary R2 reaches 1 within
    ``perfect_tol``; raises :class:`ConstantRegressor` when column j is
    exactly constant.
    """
    x = data.column(j)
    if _is_constant(x):
        raise ConstantRegressor(f"column {j!r} is constant; centered VIF is undefined")
    aux = auxiliary_regression(data, j, regressors, AuxiliaryMode.CENTERED)
    if aux.rss <= perfect_tol * aux.tss_centered:
        return math.inf
    return aux.tss_centered / aux.rss


def vifnc(
    data: DataMatrix,
    j: str,
    regressors: Sequence[str] | None = None,
    *,
    perfect_tol: float = DEFAULT_PERFECT_TOL,
) -> float:
    """Non-centered variance inflation factor of column ``j``.

    1/(1 - R2nc) of the through-origin auxiliary regression of j on the
    given regressors, evaluated as sum(x^2)/RSS. No ones column is ever
    added here; include one in ``regressors`` explicitly to expose
    non-essential collinearity (the intercept trick).
    """
    x = data.column(j)
    tss = float(x @ x)
    if tss == 0.0:
        raise ZeroColumn(f"column {j!r} is identically zero")
    aux = auxiliary_regression(data, j, regressors, AuxiliaryMode.NONCENTERED)
    if aux.rss <= perfect_tol * tss:
        return math.inf
    return tss / aux.rss


def _stewart_from_arrays(
    x: np.ndarray, others: np.ndarray, perfect_tol: float
) -> float:
    """Stewart's index from cross products: x'x / (x'x - x'Z (Z'Z)^-1 Z'x)."""
    gram = others.T @ others
    q = others.T @ x
    k = gram.shape[0]
    if np.linalg.matrix_rank(gram, hermitian=True) < k:
        raise RankDeficient("cross-product matrix of the remaining columns is singular")
    sol = np.linalg.solve(gram, q)
    tss = float(x @ x)
    denom = tss - float(q @ sol)
    if denom <= perfect_tol * tss:
        return math.inf
    return tss / denom


def stewart_index(
    data: DataMatrix,
    j: str,
    regressors: Sequence[str] | None = None,
    *,
    perfect_tol: float = DEFAULT_PERFECT_TOL,
) -> float:
    """Stewart's collinearity index k_j^2 from cross products.

    Numerically independent route to the same quantity as
    :func:`vifnc`: the one goes through a QR fit, this one through the
    Gram system of the remaining columns.
    """
    others = _others(data, j, regressors)
    x = data.column(j)
    if float(x @ x) == 0.0:
        raise ZeroColumn(f"column {j!r} is identically zero")
    return _stewart_from_arrays(x, data.matrix(others), perfect_tol)


def stewart_decomposition(
    data: DataMatrix,
    j: str,
    regressors: Sequence[str] | None = None,
    *,
    perfect_tol: float = DEFAULT_PERFECT_TOL,
) -> tuple[float, float]:
    """Split Stewart's index into its VIF part and the mean-driven part.

    Returns ``(vif(j), n * mean(x_j)^2 / RSS_j)`` with RSS_j taken from
    the *centered* auxiliary regression. The parts sum exactly to
    Stewart's index of the design that augments ``regressors`` with the
    constant column, i.e. to ``vifnc`` computed with an explicit ones
    column among the regressors; the sum matches plain
    ``vifnc(data, j, regressors)`` only when the regressors already span
    the constant.
    """
    x = data.column(j)
    if _is_constant(x):
        raise ConstantRegressor(f"column {j!r} is constant; the decomposition is undefined")
    aux = auxiliary_regression(data, j, regressors, AuxiliaryMode.CENTERED)
    mean = float(x.mean())
    if aux.rss <= perfect_tol * aux.tss_centered:
        return math.inf, math.inf if mean != 0.0 else 0.0
    vif_part = aux.tss_centered / aux.rss
    nonessential_part = data.n * mean * mean / aux.rss
    return vif_part, nonessential_part


def variance_factors(
    data: DataMatrix,
    spec: ModelSpec,
    *,
    rank_rtol: float = DEFAULT_RANK_RTOL,
) -> list[VarianceFactor]:
    """Coefficient variances of the model as multiples of sigma^2.

    For each design column j: ``var_over_sigma2 = 1/RSS_j`` where RSS_j
    comes from regressing that column on every other design column (the
    ones column included when the model has an intercept), and
    ``var_orthogonal_over_sigma2 = 1/(x_j'x_j)`` is the orthogonal-design
    reference. Their ratio is the variance inflation relative to that
    reference and, for through-origin models, equals VIFnc of the column
    within the design.
    """
    design = data.matrix(spec.regressors)
    names = list(spec.regressors)
    if spec.intercept:
        design = np.column_stack([np.ones(data.n), design])
        names = ["intercept"] + names

    r = np.linalg.qr(design, mode="r")
    diag = np.abs(np.diag(r))
    if design.shape[1] > data.n or diag.min() < rank_rtol * diag.max():
        raise RankDeficient("model design is numerically rank deficient")

    out = []
    for idx, name in enumerate(names):
        x = design[:, idx]
        rest = np.delete(design, idx, axis=1)
        coef, *_ = np.linalg.lstsq(rest, x, rcond=None)
        resid = x - rest @ coef
        rss = float(resid @ resid)
        var = 1.0 / rss
        var_orth = 1.0 / float(x @ x)
        out.append(
            VarianceFactor(
                variable=name,
                var_over_sigma2=var,
                var_orthogonal_over_sigma2=var_orth,
                ratio=var / var_orth,
                intercept_position=(spec.intercept and idx == 0) or _is_constant(x),
            )
        )
    return out


def intercept_trick(
    data: DataMatrix,
    regressors: Sequence[str],
    *,
    perfect_tol: float = DEFAULT_PERFECT_TOL,
) -> list[tuple[str, float]]:
    """VIFnc of every regressor in a set containing an explicit ones column.

    This is the procedure that makes VIFnc see non-essential
    collinearity: treat the model as non-centered but keep the constant
    as an ordinary regressor, then run the through-origin auxiliary
    regressions within the set. The ones column must be present and
    unique; it is never synthesized here.
    """
    regressors = tuple(regressors)
    ones = [name for name in regressors if np.all(data.column(name) == 1.0)]
    if not ones:
        raise NoConstantColumn("the intercept trick needs an explicit all-ones regressor")
    if len(ones) > 1:
        raise ValueError(f"more than one all-ones regressor: {ones}")
    return [
        (j, vifnc(data, j, [o for o in regressors if o != j], perfect_tol=perfect_tol))
        for j in regressors
    ]


def full_report(
    data: DataMatrix,
    spec: ModelSpec,
    thresholds: Thresholds = Thresholds(),
    *,
    perfect_tol: float = DEFAULT_PERFECT_TOL,
) -> CollinearityReport:
    """One diagnostics row per regressor of ``spec``, in spec order.

    Auxiliary regressions for a row use the model's other regressors;
    ``stewart_k2`` uses the fitted design with the row's column removed
    (see the module docstring for how that interacts with the intercept).
    Flags are pure functions of the numbers and the thresholds:
    ``essential_suspect`` when vif >= thresholds.vif, and
    ``nonessential_suspect`` when vifnc >= thresholds.vifnc while vif
    stayed below its threshold (or was undefined).
    """
    if len(spec.regressors) < 2:
        raise ValueError("a collinearity report needs at least two regressors")
    for name in (spec.dependent, *spec.regressors):
        data.column(name)

    rows = []
    for j in spec.regressors:
        others = tuple(o for o in spec.regressors if o != j)
        x = data.column(j)
        mean = float(x.mean())
        sd = float(x.std(ddof=1))
        cv = math.inf if mean == 0.0 else sd / abs(mean)

        tss_unc = float(x @ x)
        if tss_unc == 0.0:
            raise ZeroColumn(f"column {j!r} is identically zero")
        aux_nc = auxiliary_regression(data, j, others, AuxiliaryMode.NONCENTERED)
        if aux_nc.rss <= perfect_tol * tss_unc:
            value_nc = math.inf
        else:
            value_nc = tss_unc / aux_nc.rss

        if _is_constant(x):
            value_vif = None
            rss_c = None
            term = None
        else:
            aux_c = auxiliary_regression(data, j, others, AuxiliaryMode.CENTERED)
            rss_c = aux_c.rss
            if aux_c.rss <= perfect_tol * aux_c.tss_centered:
                value_vif = math.inf
                term = math.inf if mean != 0.0 else 0.0
            else:
                value_vif = aux_c.tss_centered / aux_c.rss
                term = data.n * mean * mean / aux_c.rss

        design_others = data.matrix(others)
        if spec.intercept:
            design_others = np.column_stack([np.ones(data.n), design_others])
        k2 = _stewart_from_arrays(x, design_others, perfect_tol)

        essential = value_vif is not None and value_vif >= thresholds.vif
        nonessential = value_nc >= thresholds.vifnc and not essential
        rows.append(
            CollinearityRow(
                variable=j,
                mean=mean,
                vif=value_vif,
                vifnc=value_nc,
                stewart_k2=k2,
                nonessential_term=term,
                rss_aux_centered=rss_c,
                rss_aux_noncentered=aux_nc.rss,
                coef_variation=cv,
                essential_suspect=essential,
                nonessential_suspect=nonessential,
            )
        )
    return CollinearityReport(rows=tuple(rows), thresholds=thresholds)
