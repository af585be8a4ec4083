#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qgeom/mathkernel.hpp"

namespace qgeom::montecarlo {

// --- deterministic counter-based sampling -------------------------------
//
// Every sample index owns its own stream derived from (seed, index), so the
// estimate is a plain integer reduction and does not depend on how samples
// are split across threads.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t index)
        : key_(splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)))), ctr_(0) {}

    std::uint64_t next_u64() { return splitmix64(key_ + 0x9E3779B97F4A7C15ULL * (++ctr_)); }

    // uniform in (0, 1)
    double next_unit() { return (next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54; }

    void normals(double* out, int n);

private:
    std::uint64_t key_;
    std::uint64_t ctr_;
};

// --- projections and distances ------------------------------------------

// Euclidean projection onto {y >= 0, sum y = 1} (sort-and-threshold).
std::vector<double> project_to_probability_simplex(std::span<const double> x);

// Orthonormal traceless Hermitian basis (generalized Gell-Mann):
// H = I/d + sum_k x_k B_k.  matrix_to_coords recovers x from H.
void coords_to_matrix(std::span<const double> x, int d, std::complex<double>* H);
std::vector<double> matrix_to_coords(std::span<const std::complex<double>> H, int d);

// Hilbert-Schmidt distance from the trace-one self-adjoint matrix encoded
// by x to the state space S_d: the closest density matrix shares the
// eigenbasis, so this reduces to projecting the eigenvalue vector onto the
// probability simplex.
double distance_to_statespace(std::span<const double> x, int d);

// Distance to the complementarity polytope P_d by Wolfe's min-norm-point
// iteration over its (d+1)d vertices (duality-gap tolerance 1e-9).
double distance_to_cpolytope(std::span<const double> x, int d);
std::vector<double> project_to_cpolytope(std::span<const double> x, int d);

// Distance to the spherical cone (positive orthant intersected with the
// ball of radius R_d) in the given ambient dimension.
double distance_to_spherical_cone(std::span<const double> x, int d, int dim);

struct ProjectionOracle {
    BodyKind body = BodyKind::StateSpace;
    int d = 2;
    int dim = 3;              // ambient dimension
    double circumradius = 0.0; // R_d = sqrt((d-1)/d) for all three bodies

    static ProjectionOracle state_space(int d);
    static ProjectionOracle cpolytope(int d);
    static ProjectionOracle spherical_cone(int d, int dim);

    double distance(std::span<const double> x) const;
};

// --- estimation -----------------------------------------------------------

struct MCEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
    long long samples = 0;
    std::uint64_t seed = 0;
    double epsilon = 0.0;
};

// Hit-or-miss estimate of vol(K_eps), sampling uniformly in the ambient
// ball of radius circumradius + eps.  Deterministic given (seed, samples)
// regardless of the number of worker threads (jobs <= 0 uses all cores).
MCEstimate estimate_neighborhood_volume(const ProjectionOracle& oracle, double epsilon,
                                        long long samples, std::uint64_t seed, int jobs = 0);

struct SteinerFit {
    std::vector<double> coefficients;                 // a_0 .. a_deg
    std::array<std::array<double, 4>, 4> covariance{}; // of a_0 .. a_3
    std::vector<double> eps_grid;
    double residual = 0.0; // weighted residual sum of squares
    std::vector<MCEstimate> estimates;

    double coefficient_sigma(int k) const;
};

// Default grid: `points` values geometric from 0.02 R to 0.5 R.
std::vector<double> default_eps_grid(double circumradius, int points = 12);

// Weighted least-squares fit of sum_k a_k eps^k, degree min(dim, grid size - 1),
// with inverse-variance weights; each grid point is estimated with an
// independent per-point seed derived from `seed`.  Throws std::runtime_error
// for an ill-conditioned design matrix.
SteinerFit fit_steiner_coefficients(const ProjectionOracle& oracle, std::span<const double> eps_grid,
                                    long long samples_per_point, std::uint64_t seed, int jobs = 0);

namespace detail {

// Hit-or-miss core shared by the oracle-based entry point and test bodies:
// counts samples, drawn uniformly in the ball of radius sampling_radius,
// whose distance to the body is <= epsilon (with a fixed boundary slack so
// that interior points register at epsilon = 0).
long long run_hit_count(int dim, double sampling_radius, double epsilon,
                        const std::function<double(const double*)>& dist, long long samples,
                        std::uint64_t seed, int jobs);

// Turn a hit count into the volume estimate for the given sampling ball.
MCEstimate assemble_estimate(int dim, double sampling_radius, double epsilon, long long hits,
                             long long samples, std::uint64_t seed);

} // namespace detail

} // namespace qgeom::montecarlo
