"""Print the four coefficient triangles at desk scale.

Each family polynomial P(m,k), Q(m,k), G(m,k), H(m,k) has nonnegative
palindromic integer coefficients; the top two entries of each row agree up
to a factor of 1 (P, Q) or 2 (G, H).
"""
from qfaulhaber import det_route

for family in ("P", "Q", "G", "H"):
    print(f"--- family {family} ---")
    for m in range(1, 6):
        for k in range(m):
            poly = det_route(family, m, k)
            print(f"{family}({m},{k}) = {poly.to_string('q')}")
    print()
