"""Recovering the shape operator of an embedded hypersurface numerically.

Given only the embedding chart and its unit normal, central finite
differences of the normal along coordinate directions give the shape
operator in the induced metric; Richardson extrapolation removes the
leading h^2 error. The catalog immersions carry their exact principal
curvatures, so the extraction error is directly measurable.
"""

import dataclasses

import numpy as np

from hypercurv import immersions


def main():
    imm = immersions.get_immersion("clifford:4:2")
    params = np.array([0.9, 1.3, 1.1, 2.0])
    exact = np.sort(np.asarray(imm.spectrum))[::-1]
    print(f"exact principal curvatures: {exact}")
    print()
    print(f"{'h':>8s} {'plain FD error':>16s} {'Richardson error':>18s}")
    for h in (1e-2, 1e-3, 1e-4):
        errs = []
        for richardson in (False, True):
            A = immersions.numeric_second_fundamental_form(
                imm, params, h=h, richardson=richardson)
            lam = np.sort(np.linalg.eigvalsh(A))[::-1]
            errs.append(np.abs(lam - exact).max())
        print(f"{h:8.0e} {errs[0]:16.2e} {errs[1]:18.2e}")
    print()
    print("(at h = 1e-4 both are roundoff-limited; the h^2 advantage shows")
    print(" at step sizes where truncation still dominates)")
    print()

    # dropping the stored spectrum forces integrate() onto the per-node
    # extraction path; topology still comes out right on a coarse grid
    blind = dataclasses.replace(imm, spectrum=None)
    chi = immersions.integrate(blind, "cgbEuler", res=6)
    print(f"chi from per-node numeric extraction at res 6: {chi:.8f}")


if __name__ == "__main__":
    main()
