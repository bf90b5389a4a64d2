"""Sharp pointwise inequalities and global threshold reports.

For a trace-free shape operator in dimension 4,

    S^2/4  <=  |A^2|^2  <=  (7/12) S^2        (S = |A|^2)
    |trA^3|  <=  sqrt(S^3/3)

with equality exactly on the (l,l,-l,-l) and multiplicity-3 spectra.
Globally, constant-S minimal hypersurfaces obey integral thresholds on
the Weyl mass; weyl_threshold_report evaluates every threshold whose
hypotheses the supplied data satisfies, and s_quadratic inverts the
total-curvature identity for S.
"""

import math

import numpy as np

from hypercurv import bounds, classify, extrinsic


def main():
    print("pointwise margins (zero margin = equality case):")
    for label, lam in [
        ("balanced (2,2)", [1.0, 1.0, -1.0, -1.0]),
        ("multiplicity 3", [1.0, 1.0, 1.0, -3.0]),
        ("generic", [2.0, 0.5, -1.0, -1.5]),
    ]:
        rep = classify.sharp_inequalities(extrinsic.PointState(lam=lam))
        margins = {k: round(v, 10) for k, v in rep.margins.items()}
        print(f"  {label:16s} {margins}  equality: "
              + (", ".join(k for k, v in rep.equality.items() if v) or "none"))
    print()

    # global report for exact product-of-spheres data
    vol = 4.0 * math.pi ** 2
    mass = (64.0 / 3.0) * math.pi ** 2 * 4.0
    data = bounds.GlobalData(chi=4, vol=vol, S=4.0, weylL2=mass, c=1.0)
    print("threshold report for S^2 x S^2 data:")
    for name, entry in bounds.weyl_threshold_report(data).items():
        print(f"  {name:18s} applicable={entry['applicable']} "
              f"holds={entry['holds']} equality={entry['equality']}")
    print()

    print("pinching lower bound f along r = chi/vol:")
    for r in np.linspace(0.0, 0.35, 8):
        print(f"  f({r:.4f}) = {bounds.f_lower_bound(r):.6f}")
    print()

    quad = bounds.s_quadratic(1.0, 4, vol, 4.0)
    print(f"S recovered from (c=1, chi=4, vol=4pi^2, A2avg=4): {quad.s:.12f}"
          f"  (other root {quad.s_minus:.6f})")
    quad = bounds.s_quadratic(1.0, 0, 2 * math.pi ** 3, 28.0 / 3.0)
    print(f"S recovered from (c=1, chi=0, A2avg=28/3):          {quad.s:.12f}")


if __name__ == "__main__":
    main()
