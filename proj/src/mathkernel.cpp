#include "qgeom/mathkernel.hpp"

#include <algorithm>
#include <cmath>

namespace qgeom {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764; // ln(2*pi)/2

// B_{2k} / (2k (2k-1)) for the Stirling-de Moivre tail; with the argument
// shifted to >= 12 the truncation error of seven terms is below 1e-16.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
};

double stirling_log_gamma(double x) {
    double logx = std::log(x);
    double v = (x - 0.5) * logx - x + kHalfLog2Pi;
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    double term = inv;
    for (double c : kStirling) {
        v += c * term;
        term *= inv2;
    }
    return v;
}

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
    if (x >= 12.0) return stirling_log_gamma(x);
    // shift up with Gamma(x+1) = x Gamma(x)
    double shift = 0.0;
    double y = x;
    while (y < 12.0) {
        shift += std::log(y);
        y += 1.0;
    }
    return stirling_log_gamma(y) - shift;
}

LogReal gamma_product(int a, int b) {
    LogReal p = LogReal::one();
    double acc = 0.0;
    for (int i = a; i <= b; ++i) acc += log_gamma(static_cast<double>(i));
    if (b >= a) p = LogReal::from_log(acc);
    return p;
}

LogReal ball_volume(int k) {
    if (k < 0) throw std::domain_error("ball_volume: k must be nonnegative");
    if (k == 0) return LogReal::one();
    double lv = 0.5 * k * std::log(kPi) - log_gamma(0.5 * k + 1.0);
    return LogReal::from_log(lv);
}

double spherical_triangle_area(double a, double b, double c) {
    const double tol = 1e-14;
    for (double s : {a, b, c})
        if (!(s > 0.0) || !(s < kPi))
            throw std::domain_error("spherical_triangle_area: sides must lie in (0, pi)");
    double s = 0.5 * (a + b + c);
    if (s > kPi + tol)
        throw std::domain_error("spherical_triangle_area: perimeter exceeds 2*pi");
    double args[4] = {std::min(s, kPi) / 2.0, (s - a) / 2.0, (s - b) / 2.0, (s - c) / 2.0};
    double prod = 1.0;
    for (double t : args) {
        if (t < 0.0) {
            if (t < -tol)
                throw std::domain_error("spherical_triangle_area: triangle inequality violated");
            t = 0.0;
        }
        prod *= std::tan(t);
    }
    if (prod < 0.0) prod = 0.0; // guard roundoff from the individual tangents
    return 4.0 * std::atan(std::sqrt(prod));
}

IntrinsicVolumeTable normalize_table(const std::map<int, LogReal>& raw, BodyDims dims,
                                     BodyKind body) {
    IntrinsicVolumeTable t;
    t.body = body;
    t.dims = dims;
    for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
        int N = it->first;
        if (N < 0 || N > dims.D)
            throw std::domain_error("normalize_table: N out of range");
        if (it->second.sign() < 0)
            throw std::domain_error("normalize_table: raw coefficients must be nonnegative");
        IntrinsicVolumeTable::Entry e;
        e.N = N;
        e.Vtilde = it->second;
        e.V = it->second / ball_volume(dims.D - N);
        t.entries.push_back(e);
    }
    return t;
}

} // namespace qgeom
