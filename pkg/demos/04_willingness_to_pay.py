"""Equivalent variation: the price of removing extinction risk.

EV is the factor by which consumption in a guaranteed cornucopia could be
scaled down and still match the welfare of a risky scenario; 1 - EV is then
the fraction of consumption worth paying, every period forever, to buy the
risk away.  Log utility makes the factor exact: EV = exp(-(W_safe - W_risky) rho).
"""

from tai_welfare import Preferences, ScenarioSpec, calibrate_c0, ev_panel, wtp_per_period
from tai_welfare.solvers import solve_epsilon_mounting

c0 = calibrate_c0()


def spec(g_ai, rho, theta=1.0):
    return ScenarioSpec(c0=c0, g_ai=g_ai, prefs=Preferences(rho=rho, theta_rra=theta))


print("certain extinction in 100 years (g_ai=0.05):")
for rho in (0.002, 0.01, 0.03, 0.05):
    r = ev_panel(spec(0.05, rho), "a", T=100.0)
    print(f"  rho = {rho:5.3f}: EV = {r.ev:.6g}   pay {r.wtp_fraction:.1%} of consumption")
print()

print("a 10% chance of immediate doom (g_ai=0.05):")
for rho in (0.002, 0.01, 0.03, 0.05):
    r = ev_panel(spec(0.05, rho), "b", p3=0.1)
    print(f"  rho = {rho:5.3f}: EV = {r.ev:.6g}   pay {r.wtp_fraction:.1%}")
print()

# the headline cell: fast growth, moderate discounting
cell = spec(0.3, 0.03)
b = ev_panel(cell, "b", p3=0.1)
c = ev_panel(cell, "c", p3=0.1, p4=0.1, T=50.0)
print(f"at g_ai=0.3, rho=0.03:")
print(f"  immediate 10% risk:              pay {b.wtp_fraction:.1%}  (EV = {b.ev:.3f})")
print(f"  plus 10% non-corrigibility risk: pay {c.wtp_fraction:.1%}  (EV = {c.ev:.3f})")
print(f"  per unit of consumption, that is {wtp_per_period(b, 1.0):.3f} and {wtp_per_period(c, 1.0):.3f}")
print()

print("mounting hazard with the in-pipeline indifference slope (g_ai=0.3, rho=0.03):")
eps = solve_epsilon_mounting(spec(0.3, 0.03, theta=1.0001)).value
d = ev_panel(cell, "d", epsilon=eps)
print(f"  eps* = {eps:.5g}: EV = {d.ev:.4g}, i.e. essentially all consumption")
