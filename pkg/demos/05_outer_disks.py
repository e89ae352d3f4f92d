"""Why the multiplier loop uses wider outer disks.

With D_inf = {|z| >= 1 + r} the fixed point 1 of gamma2 sits only r from
D_inf, and r shrinks with the multiplier of gamma2.  The disk D_1 has to
hold gamma2^-1(D_0) and miss D_inf; the inversive margin between those two
stays negative for every theta1, so no pair D_1, D_alpha exists.  With
D_inf = {|z| >= eps^-1/2} and D_0 = {|z| <= eps^3/2} the margin is positive.
"""

from dataclasses import replace

from hgschottky.loops import default_profile, outer_obstruction

base = default_profile("multiplier-gamma2")
print(" theta1   margin (1 + r)   margin (eps^-1/2)")
for th1 in (2.0, 4.0, 6.0, 8.0):
    p = replace(base, theta1=th1, theta2=th1)
    tight = outer_obstruction(replace(p, outer="tight"))
    wide = outer_obstruction(p)
    print(f" {th1:5.1f}   {tight:+14.4f}   {wide:+16.4f}")
