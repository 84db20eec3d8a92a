#!/usr/bin/env python
# Temperature along a two-material bar, and what the far end can see of it.
import numpy as np

from thermoprobe import RodConfig, emit_profile, heat_flux, interface_angle, solve_forward

# 1 m bar, iron near the source, copper at the cooled end
bar = RodConfig(length=1.0, interface=0.5, source_temp=100.0, ambient_temp=25.0,
                convection=10.0, kappa_B=386.0)

profile = solve_forward(bar, 73.0)
print("slopes (C/m): left %.4f  right %.4f" % (profile.slope_left, profile.slope_right))
print("u(l) = %.4f   u(L) = %.4f" % (profile.interface_temperature, profile(bar.length)))
print("kink angle = %.5f rad" % interface_angle(bar, 73.0))

data = emit_profile(bar, 73.0, 11)
for x, u in data.rows():
    print("%5.2f  %8.4f" % (x, u))

# Swapping the two halves of a centred bar changes the profile but not the
# end temperature, so the end flux cannot tell Fe-Cu from Cu-Fe.
swapped = bar.replace(kappa_B=73.0)
print("u(L) Fe-Cu %.12f  Cu-Fe %.12f" % (profile(1.0), solve_forward(swapped, 386.0)(1.0)))

# Moving the interface breaks the symmetry.
off = bar.replace(interface=0.3)
print("interface at 0.3: q Fe-Cu %.4f  q Cu-Fe %.4f"
      % (heat_flux(off, 73.0), heat_flux(off.replace(kappa_B=73.0), 386.0)))

# Flux grows with the hidden conductivity but saturates.
for k in np.geomspace(1, 1e5, 6):
    print("kappa_A = %9.1f   q = %.4f" % (k, heat_flux(bar, k)))
