"""Seeded Monte Carlo harness for VIF/VIFnc threshold exploration.

No canonical VIFnc cutoff exists, so this module does the only honest
thing: generate designs whose collinearity structure is controlled,
collect the induced VIF and VIFnc distributions, and report percentiles
and threshold exceedance rates. Interpretation stays with the user.

Three design recipes:

* ``independent`` - three i.i.d. Normal(4, 16) columns, no built-in
  relation; the baseline noise floor of both diagnostics.
* ``essential`` - a proportional near-relation between two columns,
  ``x = lambda * z + noise``; both diagnostics should fire.
* ``nonessential`` - two near-constant columns ``base + noise``; VIFnc
  should fire while VIF stays quiet.

Each replication derives its own child seed from (master_seed, index), so
results never depend on execution order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .diagnostics import Thresholds, vif, vifnc
from .errors import ConfigError, VifncError
from .datasets import GeneratorSpec, derive_seed, generate_normal_column
from .ols import DataMatrix

KINDS = ("independent", "essential", "nonessential")


@dataclass(frozen=True)
class ScenarioSpec:
    """A simulation scenario; ``lam``/``noise_sd``/``base`` apply per kind.

    ``lam`` is the slope of the essential near-relation (config key
    ``lambda``), ``noise_sd`` the disturbance scale of either structured
    kind, ``base`` the common level of the non-essential columns.
    """

    kind: str
    n: int
    replications: int
    master_seed: int
    lam: float | None = None
    noise_sd: float | None = None
    base: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.n < 4:
            raise ValueError("need n >= 4")
        if self.replications < 1:
            raise ValueError("need replications >= 1")
        if self.kind == "essential":
            if self.lam is None or self.noise_sd is None:
                raise ValueError("essential scenario needs lambda and noise_sd")
        if self.kind == "nonessential":
            if self.base is None or self.noise_sd is None:
                raise ValueError("nonessential scenario needs base and noise_sd")
        if self.noise_sd is not None and not self.noise_sd > 0:
            raise ValueError("noise_sd must be positive")


@dataclass(frozen=True)
class DiagnosticStats:
    mean: float
    median: float
    p90: float
    p95: float
    p99: float
    max: float


@dataclass(frozen=True)
class MonteCarloSummary:
    """Distribution of both diagnostics over the successful replications.

    ``n_failed`` counts replications whose diagnostics degenerated
    (rank-deficient draw or perfect collinearity); they are disclosed,
    never silently dropped from the denominator story: percentiles and
    exceedance rates are over the ``n_success`` successes.
    """

    scenario: ScenarioSpec
    thresholds: Thresholds
    n_success: int
    n_failed: int
    vif_stats: DiagnosticStats
    vifnc_stats: DiagnosticStats
    vif_exceedance: float
    vifnc_exceedance: float


def _generate(spec: ScenarioSpec, seed: int) -> tuple[DataMatrix, str, tuple[str, ...]]:
    """Build one replication's design; returns (data, designated, others)."""
    def column(index: int, mean: float, variance: float) -> np.ndarray:
        return generate_normal_column(
            GeneratorSpec(n=spec.n, mean=mean, variance=variance, seed=derive_seed(seed, index))
        )

    if spec.kind == "independent":
        data = DataMatrix.from_columns(
            {"x1": column(0, 4.0, 16.0), "x2": column(1, 4.0, 16.0), "x3": column(2, 4.0, 16.0)}
        )
        return data, "x1", ("x2", "x3")
    if spec.kind == "essential":
        z = column(0, 4.0, 16.0)
        noise = column(1, 0.0, spec.noise_sd**2)
        data = DataMatrix.from_columns({"z": z, "x": spec.lam * z + noise})
        return data, "x", ("z",)
    a = spec.base + column(0, 0.0, spec.noise_sd**2)
    b = spec.base + column(1, 0.0, spec.noise_sd**2)
    data = DataMatrix.from_columns({"a": a, "b": b})
    return data, "a", ("b",)


def _stats(values: np.ndarray) -> DiagnosticStats:
    if values.size == 0:
        nan = float("nan")
        return DiagnosticStats(nan, nan, nan, nan, nan, nan)
    median, p90, p95, p99 = (float(v) for v in np.percentile(values, [50, 90, 95, 99]))
    return DiagnosticStats(
        mean=float(values.mean()),
        median=median,
        p90=p90,
        p95=p95,
        p99=p99,
        max=float(values.max()),
    )


def run_scenario(
    spec: ScenarioSpec,
    thresholds: Thresholds = Thresholds(),
    *,
    full_sweep: bool = False,
) -> MonteCarloSummary:
    """Run all replications and aggregate.

    Replication r uses child seed ``derive_seed(master_seed, r)``; the
    sample is collected in replication order and summarized at the end,
    so any execution schedule would give the same summary.

    By default only the structurally collinear column is diagnosed, which
    keeps the summary interpretable. ``full_sweep`` instead pools the
    diagnostics of every column (each against the rest) into the sample.
    A replication counts as failed when any requested diagnostic
    degenerates (rank-deficient draw or perfect collinearity); failures
    are disclosed in ``n_failed`` and excluded from the percentiles.
    """
    vifs: list[float] = []
    vifncs: list[float] = []
    succeeded = 0
    failed = 0
    for r in range(spec.replications):
        data, designated, _ = _generate(spec, derive_seed(spec.master_seed, r))
        targets = list(data.names) if full_sweep else [designated]
        try:
            pairs = []
            for name in targets:
                rest = tuple(o for o in data.names if o != name)
                pairs.append((vif(data, name, rest), vifnc(data, name, rest)))
        except VifncError:
            failed += 1
            continue
        if any(math.isinf(v) or math.isinf(w) for v, w in pairs):
            failed += 1
            continue
        succeeded += 1
        vifs.extend(v for v, _ in pairs)
        vifncs.extend(w for _, w in pairs)

    varr = np.asarray(vifs)
    warr = np.asarray(vifncs)
    return MonteCarloSummary(
        scenario=spec,
        thresholds=thresholds,
        n_success=succeeded,
        n_failed=failed,
        vif_stats=_stats(varr),
        vifnc_stats=_stats(warr),
        vif_exceedance=float((varr >= thresholds.vif).mean()) if len(vifs) else float("nan"),
        vifnc_exceedance=float((warr >= thresholds.vifnc).mean()) if len(vifs) else float("nan"),
    )


# ---------------------------------------------------------------------------
# Scenario configuration files: flat "key = value" lines, '#' comments.

_SCENARIO_KEYS = {"kind", "n", "replications", "master_seed", "lambda", "noise_sd", "base"}
_THRESHOLD_KEYS = {"vif_threshold", "vifnc_threshold"}
_REQUIRED_KEYS = ("kind", "n", "replications", "master_seed")


def parse_scenario_config(text: str) -> tuple[ScenarioSpec, Thresholds]:
    """Parse the flat key-value scenario format.

    Recognized keys: kind, n, replications, master_seed, lambda,
    noise_sd, base, vif_threshold, vifnc_threshold. Anything else, any
    missing required key, or an unparseable value raises
    :class:`ConfigError` naming the key.
    """
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _SCENARIO_KEYS | _THRESHOLD_KEYS:
            raise ConfigError(f"unknown key {key!r}")
        if key in entries:
            raise ConfigError(f"duplicate key {key!r}")
        entries[key] = value

    for key in _REQUIRED_KEYS:
        if key not in entries:
            raise ConfigError(f"missing key {key!r}")

    def as_int(key: str) -> int:
        try:
            return int(entries[key])
        except ValueError:
            raise ConfigError(f"key {key!r} must be an integer, got {entries[key]!r}") from None

    def as_float(key: str) -> float | None:
        if key not in entries:
            return None
        try:
            return float(entries[key])
        except ValueError:
            raise ConfigError(f"key {key!r} must be a number, got {entries[key]!r}") from None

    try:
        spec = ScenarioSpec(
            kind=entries["kind"],
            n=as_int("n"),
            replications=as_int("replications"),
            master_seed=as_int("master_seed"),
            lam=as_float("lambda"),
            noise_sd=as_float("noise_sd"),
            base=as_float("base"),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    thresholds = Thresholds(
        vif=as_float("vif_threshold") if "vif_threshold" in entries else 10.0,
        vifnc=as_float("vifnc_threshold") if "vifnc_threshold" in entries else 10.0,
    )
    return spec, thresholds


def load_scenario_config(path: str | Path) -> tuple[ScenarioSpec, Thresholds]:
    return parse_scenario_config(Path(path).read_text(encoding="utf-8"))
