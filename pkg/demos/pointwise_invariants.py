"""Pointwise curvature invariants of a hypersurface from its shape operator.

Feed a shape operator (or just its principal curvatures) into PointState
and read off everything the Gauss equation determines: Ricci, scalar
curvature, the Weyl tensor with its self-dual/anti-self-dual split, and
the closed-form norm package used everywhere else in the library.
"""

import numpy as np

from hypercurv import extrinsic, lambda2


def show(label, state):
    pack = extrinsic.gauss_equations(state)
    print(f"--- {label} ---")
    print(f"  n = {state.n}, c = {state.c}, H = {state.H:+.6f}, S = {state.S:.6f}")
    print(f"  scal = {pack.scal:+.6f}, |ricTF| = {np.linalg.norm(pack.ricTF):.6f}")
    if state.n == 4:
        norms = extrinsic.closed_form_norms(state)
        print(f"  |W|^2  = {norms.Wsq:.10f}")
        print(f"  |W+|^2 = {norms.Wpmsq:.10f}  (half of |W|^2, a theorem in n = 4)")
        print(f"  cgb integrand = {extrinsic.cgb_integrand(state):+.10f}")
        print(f"  signature integrand = {extrinsic.signature_integrand(state):+.2e}")
    print()


def main():
    # round sphere of radius 1/2 in the unit 5-sphere: umbilic, lambda = sqrt(3)
    show("geodesic-ish sphere (umbilic)", extrinsic.PointState(lam=[3 ** 0.5] * 4))

    # minimal products of spheres: the two Clifford-type points
    show("S^1 x S^3 point", extrinsic.PointState(
        lam=[3 ** 0.5, -1 / 3 ** 0.5, -1 / 3 ** 0.5, -1 / 3 ** 0.5]))
    show("S^2 x S^2 point", extrinsic.PointState(lam=[1.0, 1.0, -1.0, -1.0]))

    # generic state from a random symmetric shape operator
    rng = np.random.default_rng(3)
    M = rng.uniform(-2, 2, (4, 4))
    show("random shape operator", extrinsic.PointState(A=0.5 * (M + M.T)))

    # the SD/ASD split of the Weyl operator seen directly on 2-forms
    state = extrinsic.PointState(lam=[1.0, 1.0, -1.0, -1.0])
    W = extrinsic.weyl_tensor(state)
    plus = lambda2.lambda2_spectrum(W, part="plus")
    minus = lambda2.lambda2_spectrum(W, part="minus")
    print("Weyl operator eigenvalues on self-dual 2-forms:     ", np.round(plus, 8))
    print("Weyl operator eigenvalues on anti-self-dual 2-forms:", np.round(minus, 8))
    print("(identical lists: the split carries equal weight on both sides)")


if __name__ == "__main__":
    main()
