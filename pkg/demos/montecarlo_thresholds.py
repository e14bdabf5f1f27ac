"""Explore what a VIFnc threshold would mean, by simulation.

Run with:
    python demos/montecarlo_thresholds.py

There is no canonical cutoff for VIFnc the way "VIF above 10" is folk
law for VIF. This demo generates designs with known collinearity
structure and looks at where the two diagnostics actually land, which is
the raw material a threshold choice would need.
"""

from vifnc import ScenarioSpec, Thresholds, run_scenario

SCENARIOS = [
    (
        "independent columns (noise floor)",
        ScenarioSpec(kind="independent", n=20, replications=500, master_seed=101),
    ),
    (
        "essential: x = 1.0*z + noise(sd 0.5)",
        ScenarioSpec(
            kind="essential", n=20, replications=500, master_seed=102,
            lam=1.0, noise_sd=0.5,
        ),
    ),
    (
        "nonessential: two columns at 1 +/- 0.002",
        ScenarioSpec(
            kind="nonessential", n=20, replications=500, master_seed=103,
            base=1.0, noise_sd=0.002,
        ),
    ),
]


def main():
    thresholds = Thresholds(vif=10.0, vifnc=10.0)
    for title, spec in SCENARIOS:
        summary = run_scenario(spec, thresholds)
        print("=" * 72)
        print(title)
        print("=" * 72)
        print(f"  replications: {summary.n_success} ok, {summary.n_failed} degenerate")
        print(f"  {'':<7} {'median':>12} {'p90':>12} {'p95':>12} {'p99':>12} "
              f"{'share >= 10':>12}")
        for name, stats, rate in (
            ("vif", summary.vif_stats, summary.vif_exceedance),
            ("vifnc", summary.vifnc_stats, summary.vifnc_exceedance),
        ):
            print(f"  {name:<7} {stats.median:>12.4g} {stats.p90:>12.4g} "
                  f"{stats.p95:>12.4g} {stats.p99:>12.4g} {rate:>12.3f}")
        print()

    print("Reading the three blocks together:")
    print("  - On independent designs both diagnostics idle near 1, so a")
    print("    threshold of 10 is conservative for either.")
    print("  - The essential relation drives VIF and VIFnc up together;")
    print("    either one catches it.")
    print("  - The near-constant pair is invisible to VIF yet pushes VIFnc")
    print("    past 1e5. Any threshold between the independent p99 and the")
    print("    nonessential median separates the regimes cleanly here, but")
    print("    where to put it in general stays an open question; rerun with")
    print("    your own n and noise scales before settling on a number.")
    print()
    print("Deterministic: rerunning this script reproduces every digit, and")
    print("the same scenarios are available via `vifnc montecarlo <config>`")
    print("(see demos/configs/).")


if __name__ == "__main__":
    main()
