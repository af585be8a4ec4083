#include "qgeom/minnorm.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace qgeom {

namespace {

// Solve the bordered system for the affine min-norm point over the corral:
//   [ G  1 ] [alpha]   [0]
//   [ 1^T 0 ] [ nu  ] = [1]
// where G is the Gram matrix of the corral points.  Gaussian elimination
// with partial pivoting; returns false when the system is numerically
// singular (affinely dependent corral).
bool affine_minimizer(const std::vector<double>& gram, int s, std::vector<double>& alpha) {
    int n = s + 1;
    std::vector<double> M(n * n, 0.0), rhs(n, 0.0);
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) M[i * n + j] = gram[i * s + j];
        M[i * n + s] = 1.0;
        M[s * n + i] = 1.0;
    }
    rhs[s] = 1.0;

    double scale = 1.0;
    for (int i = 0; i < s; ++i) scale = std::max(scale, std::fabs(gram[i * s + i]));

    std::vector<int> piv(n);
    for (int i = 0; i < n; ++i) piv[i] = i;
    for (int col = 0; col < n; ++col) {
        int best = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(M[r * n + col]) > std::fabs(M[best * n + col])) best = r;
        if (std::fabs(M[best * n + col]) < 1e-13 * scale) return false;
        if (best != col) {
            for (int k = 0; k < n; ++k) std::swap(M[col * n + k], M[best * n + k]);
            std::swap(rhs[col], rhs[best]);
        }
        double d = M[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            double f = M[r * n + col] / d;
            if (f == 0.0) continue;
            for (int k = col; k < n; ++k) M[r * n + k] -= f * M[col * n + k];
            rhs[r] -= f * rhs[col];
        }
    }
    alpha.assign(s, 0.0);
    std::vector<double> x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double v = rhs[i];
        for (int k = i + 1; k < n; ++k) v -= M[i * n + k] * x[k];
        x[i] = v / M[i * n + i];
    }
    std::copy(x.begin(), x.begin() + s, alpha.begin());
    return true;
}

} // namespace

MinNormResult min_norm_point(std::span<const double> points, int npoints, int dim,
                             std::span<const double> target, double tol_gap, int max_iter) {
    if (npoints <= 0) throw std::invalid_argument("min_norm_point: empty point set");

    // translated points u_i = p_i - target
    std::vector<double> u(static_cast<size_t>(npoints) * dim);
    for (int i = 0; i < npoints; ++i)
        for (int k = 0; k < dim; ++k)
            u[i * dim + k] = points[static_cast<size_t>(i) * dim + k] - target[k];

    auto dot_u = [&](int i, const std::vector<double>& w) {
        double s = 0.0;
        for (int k = 0; k < dim; ++k) s += u[i * dim + k] * w[k];
        return s;
    };

    // start from the vertex closest to the target
    int start = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < npoints; ++i) {
        double n2 = 0.0;
        for (int k = 0; k < dim; ++k) n2 += u[i * dim + k] * u[i * dim + k];
        if (n2 < best) { best = n2; start = i; }
    }

    std::vector<int> corral{start};
    std::vector<double> lambda{1.0};
    std::vector<double> w(u.begin() + start * dim, u.begin() + (start + 1) * dim);

    auto rebuild_w = [&]() {
        std::fill(w.begin(), w.end(), 0.0);
        for (size_t j = 0; j < corral.size(); ++j)
            for (int k = 0; k < dim; ++k) w[k] += lambda[j] * u[corral[j] * dim + k];
    };

    MinNormResult res;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        double wn = 0.0;
        for (int k = 0; k < dim; ++k) wn += w[k] * w[k];

        int jbest = 0;
        double mbest = std::numeric_limits<double>::infinity();
        for (int i = 0; i < npoints; ++i) {
            double v = dot_u(i, w);
            if (v < mbest) { mbest = v; jbest = i; }
        }
        double gap = wn - mbest;
        res.gap = gap;
        if (gap <= tol_gap * std::max(1.0, wn)) {
            res.converged = true;
            break;
        }
        if (std::find(corral.begin(), corral.end(), jbest) != corral.end()) {
            // no progress possible; accept current w with the certified gap
            break;
        }
        corral.push_back(jbest);
        lambda.push_back(0.0);

        // minor cycle: project onto the affine hull of the corral, trimming
        // until the affine minimizer is a convex combination
        for (;;) {
            int s = static_cast<int>(corral.size());
            std::vector<double> gram(static_cast<size_t>(s) * s);
            for (int i = 0; i < s; ++i)
                for (int j = i; j < s; ++j) {
                    double g = 0.0;
                    for (int k = 0; k < dim; ++k)
                        g += u[corral[i] * dim + k] * u[corral[j] * dim + k];
                    gram[i * s + j] = gram[j * s + i] = g;
                }
            std::vector<double> alpha;
            if (!affine_minimizer(gram, s, alpha)) {
                // dependent corral: drop the most recent addition
                corral.pop_back();
                lambda.pop_back();
                rebuild_w();
                break;
            }
            bool feasible = true;
            for (double a : alpha)
                if (a < -1e-12) { feasible = false; break; }
            if (feasible) {
                for (int j = 0; j < s; ++j) lambda[j] = std::max(alpha[j], 0.0);
                rebuild_w();
                break;
            }
            // step toward alpha until the first coefficient hits zero
            double theta = 1.0;
            for (int j = 0; j < s; ++j)
                if (alpha[j] < 0.0) theta = std::min(theta, lambda[j] / (lambda[j] - alpha[j]));
            std::vector<int> keep_idx;
            std::vector<double> keep_lam;
            for (int j = 0; j < s; ++j) {
                double l = (1.0 - theta) * lambda[j] + theta * alpha[j];
                if (l > 1e-12) {
                    keep_idx.push_back(corral[j]);
                    keep_lam.push_back(l);
                }
            }
            if (keep_idx.empty()) { // numerical corner, keep best single vertex
                keep_idx.push_back(corral[0]);
                keep_lam.push_back(1.0);
            }
            double lsum = 0.0;
            for (double l : keep_lam) lsum += l;
            for (double& l : keep_lam) l /= lsum;
            corral = std::move(keep_idx);
            lambda = std::move(keep_lam);
            rebuild_w();
        }
    }

    res.iterations = iter;
    res.point.resize(dim);
    double d2 = 0.0;
    for (int k = 0; k < dim; ++k) {
        res.point[k] = w[k] + target[k];
        d2 += w[k] * w[k];
    }
    res.distance = std::sqrt(d2);
    return res;
}

} // namespace qgeom
