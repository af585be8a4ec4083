#pragma once

#include <span>

#include "qgeom/logreal.hpp"
#include "qgeom/mathkernel.hpp"

namespace qgeom::statespace {

// Everything below concerns the state space S_d of d x d density matrices
// inside the affine space of trace-one self-adjoint matrices, an
// D = (d^2 - 1)-dimensional convex body under the Hilbert-Schmidt metric.
// p_d(eps) denotes the volume of its eps-neighborhood within that space.

// (2 pi)^{d(d-1)/2} / (1! 2! ... (d-1)!)
LogReal flag_manifold_volume(int d);

// vol_D(S_d) = sqrt(d) (2 pi)^{d(d-1)/2} Gamma(1)...Gamma(d) / Gamma(d^2)
LogReal volume(int d);

// vol_{D-1}(boundary) = sqrt(d-1) (2 pi)^{d(d-1)/2} Gamma(1)...Gamma(d+1) / (Gamma(d) Gamma(d^2-1))
LogReal surface(int d);

// p_d''(0) = (d-1) d^{3/2} (2 pi)^{d(d-1)/2} Gamma(1)...Gamma(d) / Gamma(d^2-2)
LogReal p2_at_zero(int d);

// p_d'''(0) = d (d-1)^{3/2} (2 pi)^{d(d-1)/2} Gamma(1)...Gamma(d+1) / (Gamma(d) Gamma(d^2-3))
LogReal p3_at_zero(int d);

// Independent evaluation path through the eigenvalue-density reduction:
// the derivatives reduce to Selberg integrals over the (d-2)-simplex,
// assembled with the flag-manifold factor.  Agrees with the closed forms.
LogReal p2_via_selberg(int d);
LogReal p3_via_selberg(int d);

// Same reduction for the volume itself: (1/d!) * I_Selberg(d,1,1,0,0) * flag volume.
LogReal volume_via_selberg(int d);

// Eigenvalue density f_d(x) = prod_{i<j} (x_i - x_j)^2.
double eigen_density(std::span<const double> x);

struct StateSpaceVolumes {
    BodyDims dims;
    LogReal vol_D;
    LogReal surface;
    LogReal p2_at_0;
    LogReal p3_at_0;
    IntrinsicVolumeTable table;
};

StateSpaceVolumes evaluate(int d);

// Table of V_N, Vtilde_N for N in {D, D-1, D-2, D-3}.
IntrinsicVolumeTable intrinsic_table(int d);

} // namespace qgeom::statespace
