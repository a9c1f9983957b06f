"""Hardware-software growth regimes: capital-driven takeoff vs human bottleneck.

Output combines hardware (capital doing physical work) and software (cognition
directing it) as CES complements.  When machine cognition scales with compute,
output becomes linear in capital and growth is set by accumulation: s * Y/K -
delta.  When human cognition stays essential, capital deepening saturates and
growth falls back to the pace of labor-augmenting technology.
"""

from tai_welfare import ProductionParams, asymptotic_growth_rate, failure_mode_path, simulate
from tai_welfare.hazards import expected_lifespan

params = ProductionParams(alpha=0.5, A=1e6)  # software side saturated: Y/K -> 1

print("full automation (AK regime): fitted growth vs s * Y/K - delta")
for s, delta in ((0.3, 0.05), (0.2, 0.02), (0.4, 0.1)):
    traj = simulate(params, 100.0, s, delta, 0.0, 200.0, 0.05)
    predicted = s * traj.Y[-1] / traj.K[-1] - delta
    print(f"  s={s:4.2f} delta={delta:4.2f}: fitted {asymptotic_growth_rate(traj):.4f}"
          f"  predicted {predicted:.4f}")
print()

print("bottlenecked regime: growth locks onto technology (1.75%), not saving")
for s in (0.2, 0.35):
    traj = simulate(ProductionParams(), 1.0, s, 0.05, 0.0175, 400.0, 0.05,
                    regime="bottlenecked")
    print(f"  s={s:4.2f}: fitted growth {asymptotic_growth_rate(traj):.5f}")
print()

print("failure-mode endpoints (expected lifespan in years):")
for mode, kw in (
    ("fm1", {}),
    ("fm2", {"switch_time": 50.0}),
    ("fm4", {"epsilon": 2e-4, "g_ai": 0.2}),
):
    _, hazard = failure_mode_path(mode, **kw)
    print(f"  {mode}: ET = {expected_lifespan(hazard):.2f}")

path, hazard = failure_mode_path("fm5", c0=1.0, g_ai=0.05, switch_time=10.0,
                                 crash_factor=0.01)
print(f"  fm5: the crash would cut consumption below subsistence "
      f"(clamped: {path.crash_clamped}), an existential-threat path")
