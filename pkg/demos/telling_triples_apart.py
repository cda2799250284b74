"""
Decide whether two triples differ only by a change of basing paths, and
compute the invariants that survive that ambiguity.

    python3 demos/telling_triples_apart.py
"""

from linkmap import fixtures
from linkmap.invariants import affine_norm_stat, gcd_profile, mu_bar, mu_bar_eq, profile_report, width
from linkmap.orbit import orbit_eq, verdict_report
from linkmap.triples import BasingShift, act

v = fixtures.XJX
w = act(BasingShift(2, -1, 3), v)
print("v =", v)
print("w = act((2, -1, 3), v) =", w)
print("orbit_eq(v, w):", verdict_report(orbit_eq(v, w)))
print()

for name, other in [("reflection", fixtures.XJX_REFLECTED), ("double pass", fixtures.XJJX)]:
    print(f"orbit_eq(v, {name}):", verdict_report(orbit_eq(v, other)))
print()

print("gcd profiles")
for name, t in [("v", fixtures.GCD_V), ("w", fixtures.GCD_W)]:
    print(f"  {name}: {profile_report(gcd_profile(t))}")
print("  verdict:", verdict_report(orbit_eq(fixtures.GCD_V, fixtures.GCD_W)))
print()

fa, fb = mu_bar(fixtures.XJX), mu_bar(fixtures.XJJX)
print("norm statistics:", affine_norm_stat(fa), affine_norm_stat(fb), "equal families:", mu_bar_eq(fa, fb))

for metric in ("L1", "Linf", "L2sq"):
    res = width(v, metric)
    print(f"{metric} width {res.value} at {res.witness.as_tuple()} (exhaustive: {res.exhaustive})")
