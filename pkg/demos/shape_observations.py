"""Survey the coefficient sequences for unimodality and log-concavity.

Every P and G entry at desk scale is log-concave (hence unimodal), while
the Q and H families already fail unimodality at m = 3: the middle
coefficients of Q(3,1) and H(3,1) dip below their neighbours.
"""
from qfaulhaber import det_route, shape_report

for family in ("P", "Q", "G", "H"):
    failures = []
    for m in range(1, 9):
        for k in range(m):
            poly = det_route(family, m, k)
            r = shape_report(poly)
            if not r.unimodal:
                failures.append((m, k, poly))
    if failures:
        print(f"family {family}: {len(failures)} entries fail unimodality, "
              f"first witnesses:")
        for m, k, poly in failures[:2]:
            print(f"  {family}({m},{k}) = {poly.to_string('q')}")
    else:
        print(f"family {family}: all entries with m <= 8 are unimodal")
