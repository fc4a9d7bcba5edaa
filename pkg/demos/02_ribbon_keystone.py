"""Count faces of the cover's ribbon graph and compare with Riemann-Hurwitz."""

from braidcover.invariants import rh_invariants
from braidcover.ribbon import build_cover_ribbon, surface_invariants

print(" d  n | faces-route (g, b) | formula (g, b)")
for d in range(2, 6):
    for n in range(2, 7):
        inv = surface_invariants(build_cover_ribbon(n, d))
        print(f"{d:2} {n:2} | {(inv.genus, inv.boundary)!s:>18} | {rh_invariants(d, n)}")
