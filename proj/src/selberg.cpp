#include "qgeom/selberg.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "qgeom/mathkernel.hpp"

namespace qgeom::selberg {

namespace {

// Gauss-Legendre nodes/weights on [0, 1], Newton iteration on P_n.
void gauss_legendre_unit(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        x[i] = 0.5 * (1.0 - z);
        x[n - 1 - i] = 0.5 * (1.0 + z);
        w[i] = 1.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

double integrand(const SelbergParams& p, const double* x) {
    double v = 1.0;
    for (int i = 0; i < p.k; ++i) v *= x[i] * x[i];
    for (int i = p.k; i < p.m; ++i) v *= x[i];
    if (p.alpha != 1.0)
        for (int i = 0; i < p.n; ++i) v *= std::pow(x[i], p.alpha - 1.0);
    if (p.gamma != 0.0) {
        for (int i = 0; i < p.n; ++i)
            for (int j = i + 1; j < p.n; ++j) {
                double d2 = (x[i] - x[j]) * (x[i] - x[j]);
                v *= (p.gamma == 1.0) ? d2 : std::pow(d2, p.gamma);
            }
    }
    return v;
}

} // namespace

void SelbergParams::validate() const {
    if (n < 1) throw std::domain_error("SelbergParams: n must be >= 1");
    if (!(alpha > 0.0)) throw std::domain_error("SelbergParams: alpha must be positive");
    double bound = (n > 1) ? -std::min(1.0 / n, alpha / (n - 1)) : -1.0;
    if (!(gamma > bound)) throw std::domain_error("SelbergParams: gamma below admissible bound");
    if (k < 0 || k > m || m > n) throw std::domain_error("SelbergParams: need 0 <= k <= m <= n");
}

double SelbergParams::homogeneity_degree() const {
    return m + k + n * (alpha - 1.0 + gamma * (n - 1));
}

LogReal selberg_laguerre(const SelbergParams& p) {
    p.validate();
    LogReal v = LogReal::one();
    // monomial prefactors (empty products for k = 0 / m = 0)
    for (int j = 1; j <= p.k; ++j)
        v *= LogReal::from_double(p.alpha + 1.0 + p.gamma * (2.0 * p.n - p.m - j));
    for (int j = 1; j <= p.m; ++j)
        v *= LogReal::from_double(p.alpha + p.gamma * (p.n - j));
    // bare Selberg-Laguerre product
    double lg = 0.0;
    for (int j = 0; j < p.n; ++j)
        lg += log_gamma(1.0 + (1.0 + j) * p.gamma) + log_gamma(p.alpha + j * p.gamma) -
              log_gamma(1.0 + p.gamma);
    return v * LogReal::from_log(lg);
}

LogReal simplex_selberg(const SelbergParams& p) {
    p.validate();
    double h = p.homogeneity_degree();
    LogReal conv = LogReal::from_log(0.5 * std::log(static_cast<double>(p.n)) -
                                     log_gamma(p.n + h));
    return conv * selberg_laguerre(p);
}

LogReal simplex_integral_via_exponential(int h_degree, const LogReal& exponential_value, int n) {
    if (n < 1) throw std::domain_error("simplex_integral_via_exponential: n must be >= 1");
    if (h_degree < 0) throw std::domain_error("simplex_integral_via_exponential: degree must be >= 0");
    LogReal conv = LogReal::from_log(0.5 * std::log(static_cast<double>(n)) -
                                     log_gamma(static_cast<double>(n + h_degree)));
    return conv * exponential_value;
}

double simplex_quadrature_oracle(const SelbergParams& p) {
    p.validate();
    if (p.n == 2) {
        // segment from (1,0) to (0,1); arc length element sqrt(2) dt
        std::vector<double> xs, ws;
        gauss_legendre_unit(96, xs, ws);
        double s = 0.0;
        for (size_t i = 0; i < xs.size(); ++i) {
            double pt[2] = {xs[i], 1.0 - xs[i]};
            s += ws[i] * integrand(p, pt);
        }
        return std::sqrt(2.0) * s;
    }
    if (p.n == 3) {
        // Duffy map of the unit square onto {x1, x2 >= 0, x1 + x2 <= 1};
        // the simplex area element contributes sqrt(3).
        std::vector<double> xs, ws;
        gauss_legendre_unit(96, xs, ws);
        double s = 0.0;
        for (size_t i = 0; i < xs.size(); ++i) {
            for (size_t j = 0; j < xs.size(); ++j) {
                double x1 = xs[i];
                double x2 = xs[j] * (1.0 - x1);
                double pt[3] = {x1, x2, 1.0 - x1 - x2};
                s += ws[i] * ws[j] * (1.0 - x1) * integrand(p, pt);
            }
        }
        return std::sqrt(3.0) * s;
    }
    if (p.n == 4) {
        // uniform samples on the simplex via normalized exponentials
        const long long samples = 10'000'000;
        std::mt19937_64 rng(0x5e1be76ULL);
        std::uniform_real_distribution<double> unif(std::nextafter(0.0, 1.0), 1.0);
        double acc = 0.0;
        for (long long s = 0; s < samples; ++s) {
            double e[4], tot = 0.0;
            for (double& v : e) {
                v = -std::log(unif(rng));
                tot += v;
            }
            for (double& v : e) v /= tot;
            acc += integrand(p, e);
        }
        double mean = acc / static_cast<double>(samples);
        double simplex_measure = 2.0 / 6.0; // sqrt(4)/3!
        return mean * simplex_measure;
    }
    throw std::domain_error("simplex_quadrature_oracle: only n in {2,3,4} supported");
}

} // namespace qgeom::selberg
