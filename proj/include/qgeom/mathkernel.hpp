#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "qgeom/logreal.hpp"

namespace qgeom {

// ln Gamma(x) for x > 0.  Stirling-de Moivre series with Bernoulli
// coefficients for x >= 12, recurrence shift below.  Relative error is
// well under 1e-13 on [1, 1e4]; throws std::domain_error for x <= 0.
double log_gamma(double x);

// Gamma(a) * Gamma(a+1) * ... * Gamma(b) as a LogReal (empty product for b < a).
LogReal gamma_product(int a, int b);

// chi_k: volume of the k-dimensional unit ball, chi_0 = 1.
LogReal ball_volume(int k);

// Area of the spherical triangle with side lengths a, b, c on the unit
// sphere, via L'Huilier's half-perimeter tangent formula.  Tangent
// arguments in [-1e-14, 0) are clamped to 0 so that degenerate triangles
// yield area 0; genuine violations of the triangle inequalities raise
// std::domain_error.
double spherical_triangle_area(double a, double b, double c);

struct BodyDims {
    int d = 0; // Hilbert-space dimension
    int D = 0; // ambient real dimension, always d^2 - 1

    static BodyDims from_d(int d) {
        if (d < 2) throw std::domain_error("BodyDims: d must be >= 2");
        return BodyDims{d, d * d - 1};
    }
};

enum class BodyKind { StateSpace, ComplementarityPolytope, SphericalCone };

// Intrinsic volumes V_N and unnormalized intrinsic volumes
// Vtilde_N = chi_{D-N} * V_N for a named body, N in {D, D-1, D-2, D-3}
// (a spherical cone carries a single entry at its own dimension).
struct IntrinsicVolumeTable {
    BodyKind body = BodyKind::StateSpace;
    BodyDims dims;

    struct Entry {
        int N = 0;
        LogReal V;
        LogReal Vtilde;
    };
    std::vector<Entry> entries; // descending in N

    const Entry& at(int N) const {
        for (const auto& e : entries)
            if (e.N == N) return e;
        throw std::out_of_range("IntrinsicVolumeTable: no entry for requested N");
    }
    bool has(int N) const {
        for (const auto& e : entries)
            if (e.N == N) return true;
        return false;
    }
};

// Fill both V_N and Vtilde_N from raw unnormalized coefficients.
IntrinsicVolumeTable normalize_table(const std::map<int, LogReal>& raw, BodyDims dims,
                                     BodyKind body = BodyKind::StateSpace);

} // namespace qgeom
