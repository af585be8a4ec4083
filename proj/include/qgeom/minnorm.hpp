#pragma once

#include <span>
#include <vector>

namespace qgeom {

struct MinNormResult {
    std::vector<double> point; // the point of conv(P) closest to the target
    double distance = 0.0;
    double gap = 0.0; // Wolfe duality gap at termination
    int iterations = 0;
    bool converged = false;
};

// Wolfe's min-norm-point algorithm over the convex hull of `npoints`
// points of dimension `dim` (row-major), minimizing the distance to
// `target`.  Linear minimization over the hull is done by scanning the
// vertex list; the affine subproblems are solved exactly on the current
// corral.  Stops when the duality gap <w, w - u_j> falls below
// tol_gap * max(1, |w|^2), or at max_iter major iterations.
MinNormResult min_norm_point(std::span<const double> points, int npoints, int dim,
                             std::span<const double> target, double tol_gap = 1e-9,
                             int max_iter = 100000);

} // namespace qgeom
