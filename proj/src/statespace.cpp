#include "qgeom/statespace.hpp"

#include <cmath>
#include <stdexcept>

#include "qgeom/selberg.hpp"

namespace qgeom::statespace {

namespace {

constexpr double kLog2Pi = 1.83787706640934548356065947281123527; // ln(2*pi)

void require_d(int d) {
    if (d < 2) throw std::domain_error("statespace: d must be >= 2");
}

double log_two_pi_power(int d) {
    return 0.5 * d * (d - 1) * kLog2Pi;
}

} // namespace

LogReal flag_manifold_volume(int d) {
    require_d(d);
    // Gamma(1)...Gamma(d) = 1! 2! ... (d-1)!
    return LogReal::from_log(log_two_pi_power(d)) / gamma_product(1, d);
}

LogReal volume(int d) {
    require_d(d);
    double lg = 0.5 * std::log(static_cast<double>(d)) + log_two_pi_power(d);
    return LogReal::from_log(lg) * gamma_product(1, d) / LogReal::from_log(log_gamma(d * d));
}

LogReal surface(int d) {
    require_d(d);
    double lg = 0.5 * std::log(static_cast<double>(d - 1)) + log_two_pi_power(d);
    return LogReal::from_log(lg) * gamma_product(1, d + 1) /
           LogReal::from_log(log_gamma(d) + log_gamma(d * d - 1.0));
}

LogReal p2_at_zero(int d) {
    require_d(d);
    double lg = std::log(static_cast<double>(d - 1)) + 1.5 * std::log(static_cast<double>(d)) +
                log_two_pi_power(d);
    return LogReal::from_log(lg) * gamma_product(1, d) / LogReal::from_log(log_gamma(d * d - 2.0));
}

LogReal p3_at_zero(int d) {
    require_d(d);
    double lg = std::log(static_cast<double>(d)) + 1.5 * std::log(static_cast<double>(d - 1)) +
                log_two_pi_power(d);
    return LogReal::from_log(lg) * gamma_product(1, d + 1) /
           LogReal::from_log(log_gamma(d) + log_gamma(d * d - 3.0));
}

LogReal volume_via_selberg(int d) {
    require_d(d);
    selberg::SelbergParams p{d, 1.0, 1.0, 0, 0};
    LogReal simplex_part = selberg::simplex_selberg(p);
    return simplex_part * flag_manifold_volume(d) / LogReal::from_log(log_gamma(d + 1.0));
}

LogReal p2_via_selberg(int d) {
    require_d(d);
    // The derivative localizes on the d facets of the eigenvalue simplex;
    // the directional derivative of f_d across a facet integrates to
    // 2 sqrt(d(d-1)) I_Selberg(d-1, 2, 1, 0, d-2).
    selberg::SelbergParams p{d - 1, 2.0, 1.0, 0, d - 2};
    LogReal integral = selberg::simplex_selberg(p);
    LogReal facet_factor = LogReal::from_double(2.0 * d * std::sqrt(static_cast<double>(d) * (d - 1)));
    return flag_manifold_volume(d) / LogReal::from_log(log_gamma(d + 1.0)) * facet_factor * integral;
}

LogReal p3_via_selberg(int d) {
    require_d(d);
    // Second normal derivative across a facet:
    //   2d I_Selberg(d-1,1,1,d-2,d-2) + 4d(d-2) I_Selberg(d-1,2,1,0,d-3),
    // the second term absent at d = 2.
    selberg::SelbergParams p1{d - 1, 1.0, 1.0, d - 2, d - 2};
    LogReal sum = LogReal::from_double(2.0 * d) * selberg::simplex_selberg(p1);
    if (d > 2) {
        selberg::SelbergParams p2{d - 1, 2.0, 1.0, 0, d - 3};
        sum += LogReal::from_double(4.0 * d * (d - 2)) * selberg::simplex_selberg(p2);
    }
    return flag_manifold_volume(d) / LogReal::from_log(log_gamma(d + 1.0)) *
           LogReal::from_double(static_cast<double>(d)) * sum;
}

double eigen_density(std::span<const double> x) {
    double v = 1.0;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j) {
            double diff = x[i] - x[j];
            v *= diff * diff;
        }
    return v;
}

IntrinsicVolumeTable intrinsic_table(int d) {
    return evaluate(d).table;
}

StateSpaceVolumes evaluate(int d) {
    require_d(d);
    StateSpaceVolumes out;
    out.dims = BodyDims::from_d(d);
    out.vol_D = volume(d);
    out.surface = surface(d);
    out.p2_at_0 = p2_at_zero(d);
    out.p3_at_0 = p3_at_zero(d);

    // Steiner coefficients a_k = p^{(k)}(0) / k!
    std::map<int, LogReal> raw;
    raw[out.dims.D] = out.vol_D;
    raw[out.dims.D - 1] = out.surface;
    raw[out.dims.D - 2] = out.p2_at_0 / LogReal::from_double(2.0);
    raw[out.dims.D - 3] = out.p3_at_0 / LogReal::from_double(6.0);
    out.table = normalize_table(raw, out.dims, BodyKind::StateSpace);
    return out;
}

} // namespace qgeom::statespace
