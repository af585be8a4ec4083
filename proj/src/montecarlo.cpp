#include "qgeom/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "qgeom/cpolytope.hpp"
#include "qgeom/jacobi.hpp"
#include "qgeom/minnorm.hpp"

namespace qgeom::montecarlo {

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676655900577;

double circumradius_of(int d) { return std::sqrt((d - 1.0) / d); }

const cpolytope::PolytopeModel& cached_polytope(int d) {
    static std::mutex mtx;
    static std::map<int, cpolytope::PolytopeModel> cache;
    thread_local int last_d = -1;
    thread_local const cpolytope::PolytopeModel* last = nullptr;
    if (d == last_d) return *last;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, cpolytope::build_polytope(d)).first;
    last_d = d;
    last = &it->second;
    return *last;
}

} // namespace

void CounterRng::normals(double* out, int n) {
    int i = 0;
    while (i < n) {
        double u1 = next_unit();
        double u2 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = kTwoPi * u2;
        out[i++] = r * std::cos(a);
        if (i < n) out[i++] = r * std::sin(a);
    }
}

std::vector<double> project_to_probability_simplex(std::span<const double> x) {
    int n = static_cast<int>(x.size());
    if (n == 0) throw std::invalid_argument("project_to_probability_simplex: empty input");
    std::vector<double> u(x.begin(), x.end());
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cum = 0.0, tau = 0.0;
    for (int k = 0; k < n; ++k) {
        cum += u[k];
        double t = (cum - 1.0) / (k + 1);
        if (u[k] - t > 0.0) tau = t;
    }
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) y[i] = std::max(x[i] - tau, 0.0);
    return y;
}

void coords_to_matrix(std::span<const double> x, int d, std::complex<double>* H) {
    if (static_cast<int>(x.size()) != d * d - 1)
        throw std::invalid_argument("coords_to_matrix: expected d^2-1 coordinates");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < d * d; ++i) H[i] = 0.0;
    for (int i = 0; i < d; ++i) H[i * d + i] = 1.0 / d;
    int idx = 0;
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            double a = x[idx++]; // symmetric component
            double b = x[idx++]; // antisymmetric component
            H[j * d + k] += std::complex<double>(a, -b) * inv_sqrt2;
            H[k * d + j] += std::complex<double>(a, b) * inv_sqrt2;
        }
    for (int l = 1; l < d; ++l) {
        double c = x[idx++] / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int m = 0; m < l; ++m) H[m * d + m] += c;
        H[l * d + l] -= c * l;
    }
}

std::vector<double> matrix_to_coords(std::span<const std::complex<double>> H, int d) {
    if (static_cast<int>(H.size()) != d * d)
        throw std::invalid_argument("matrix_to_coords: expected d x d matrix");
    std::vector<double> x(d * d - 1);
    const double sqrt2 = std::sqrt(2.0);
    int idx = 0;
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            x[idx++] = sqrt2 * H[j * d + k].real();
            x[idx++] = -sqrt2 * H[j * d + k].imag();
        }
    for (int l = 1; l < d; ++l) {
        double acc = 0.0;
        for (int m = 0; m < l; ++m) acc += H[m * d + m].real();
        acc -= l * H[l * d + l].real();
        x[idx++] = acc / std::sqrt(static_cast<double>(l) * (l + 1));
    }
    return x;
}

double distance_to_statespace(std::span<const double> x, int d) {
    if (d < 2 || d > 16) throw std::domain_error("distance_to_statespace: d out of range");
    thread_local std::vector<std::complex<double>> H;
    thread_local std::vector<double> ev;
    H.resize(static_cast<size_t>(d) * d);
    ev.resize(d);
    coords_to_matrix(x, d, H.data());
    if (jacobi_hermitian(H.data(), d, ev.data()) < 0)
        throw std::runtime_error("distance_to_statespace: eigensolver did not converge");
    std::vector<double> proj = project_to_probability_simplex({ev.data(), ev.size()});
    double s = 0.0;
    for (int i = 0; i < d; ++i) {
        double diff = ev[i] - proj[i];
        s += diff * diff;
    }
    return std::sqrt(s);
}

std::vector<double> project_to_cpolytope(std::span<const double> x, int d) {
    const auto& model = cached_polytope(d);
    if (static_cast<int>(x.size()) != model.D)
        throw std::invalid_argument("project_to_cpolytope: wrong ambient dimension");
    MinNormResult r = min_norm_point({model.vertices.data(), model.vertices.size()},
                                     model.num_vertices(), model.D, x, 1e-9);
    return r.point;
}

double distance_to_cpolytope(std::span<const double> x, int d) {
    const auto& model = cached_polytope(d);
    if (static_cast<int>(x.size()) != model.D)
        throw std::invalid_argument("distance_to_cpolytope: wrong ambient dimension");
    MinNormResult r = min_norm_point({model.vertices.data(), model.vertices.size()},
                                     model.num_vertices(), model.D, x, 1e-9);
    return r.distance;
}

double distance_to_spherical_cone(std::span<const double> x, int d, int dim) {
    if (static_cast<int>(x.size()) != dim)
        throw std::invalid_argument("distance_to_spherical_cone: wrong dimension");
    double R = circumradius_of(d);
    double neg2 = 0.0, pos2 = 0.0;
    for (double v : x) {
        if (v < 0.0) neg2 += v * v;
        else pos2 += v * v;
    }
    double n = std::sqrt(pos2);
    if (n <= R) return std::sqrt(neg2);
    return std::sqrt(neg2 + (n - R) * (n - R));
}

ProjectionOracle ProjectionOracle::state_space(int d) {
    if (d < 2) throw std::domain_error("ProjectionOracle: d must be >= 2");
    return {BodyKind::StateSpace, d, d * d - 1, circumradius_of(d)};
}

ProjectionOracle ProjectionOracle::cpolytope(int d) {
    if (d < 2) throw std::domain_error("ProjectionOracle: d must be >= 2");
    return {BodyKind::ComplementarityPolytope, d, d * d - 1, circumradius_of(d)};
}

ProjectionOracle ProjectionOracle::spherical_cone(int d, int dim) {
    if (d < 2 || dim < 1) throw std::domain_error("ProjectionOracle: invalid cone family");
    return {BodyKind::SphericalCone, d, dim, circumradius_of(d)};
}

double ProjectionOracle::distance(std::span<const double> x) const {
    switch (body) {
        case BodyKind::StateSpace: return distance_to_statespace(x, d);
        case BodyKind::ComplementarityPolytope: return distance_to_cpolytope(x, d);
        case BodyKind::SphericalCone: return distance_to_spherical_cone(x, d, dim);
    }
    throw std::logic_error("unreachable");
}

namespace detail {

long long run_hit_count(int dim, double sampling_radius, double epsilon,
                        const std::function<double(const double*)>& dist, long long samples,
                        std::uint64_t seed, int jobs) {
    if (samples < 1) throw std::invalid_argument("run_hit_count: samples must be >= 1");
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
    jobs = static_cast<int>(std::min<long long>(jobs, std::max<long long>(1, samples / 1024)));

    // slack so that points of the body itself register as hits at eps = 0
    const double cut = epsilon * (1.0 + 1e-12) + 1e-13;
    const double inv_dim = 1.0 / dim;

    std::vector<long long> partial(jobs, 0);
    auto worker = [&](int t, long long lo, long long hi) {
        std::vector<double> x(dim);
        long long hits = 0;
        for (long long i = lo; i < hi; ++i) {
            CounterRng rng(seed, static_cast<std::uint64_t>(i));
            rng.normals(x.data(), dim);
            double n2 = 0.0;
            for (double v : x) n2 += v * v;
            double nrm = std::sqrt(n2);
            if (nrm == 0.0) nrm = 1.0;
            double r = sampling_radius * std::pow(rng.next_unit(), inv_dim) / nrm;
            for (double& v : x) v *= r;
            if (dist(x.data()) <= cut) ++hits;
        }
        partial[t] = hits;
    };

    if (jobs == 1) {
        worker(0, 0, samples);
    } else {
        std::vector<std::thread> pool;
        long long chunk = (samples + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            long long lo = t * chunk;
            long long hi = std::min<long long>(samples, lo + chunk);
            if (lo >= hi) { partial[t] = 0; continue; }
            pool.emplace_back(worker, t, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return std::accumulate(partial.begin(), partial.end(), 0LL);
}

MCEstimate assemble_estimate(int dim, double sampling_radius, double epsilon, long long hits,
                             long long samples, std::uint64_t seed) {
    double log_ball = ball_volume(dim).log_magnitude() + dim * std::log(sampling_radius);
    double box = std::exp(log_ball);
    double p = static_cast<double>(hits) / static_cast<double>(samples);
    MCEstimate e;
    e.value = box * p;
    e.stderr_ = box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    e.samples = samples;
    e.seed = seed;
    e.epsilon = epsilon;
    return e;
}

} // namespace detail

MCEstimate estimate_neighborhood_volume(const ProjectionOracle& oracle, double epsilon,
                                        long long samples, std::uint64_t seed, int jobs) {
    if (epsilon < 0.0) throw std::invalid_argument("estimate_neighborhood_volume: epsilon must be >= 0");
    double sampling_radius = oracle.circumradius + epsilon;
    const int dim = oracle.dim;

    std::function<double(const double*)> dist;
    switch (oracle.body) {
        case BodyKind::StateSpace:
            dist = [d = oracle.d, dim](const double* x) {
                return distance_to_statespace({x, static_cast<size_t>(dim)}, d);
            };
            break;
        case BodyKind::ComplementarityPolytope:
            dist = [d = oracle.d, dim](const double* x) {
                return distance_to_cpolytope({x, static_cast<size_t>(dim)}, d);
            };
            break;
        case BodyKind::SphericalCone:
            dist = [d = oracle.d, dim](const double* x) {
                return distance_to_spherical_cone({x, static_cast<size_t>(dim)}, d, dim);
            };
            break;
    }
    long long hits = detail::run_hit_count(dim, sampling_radius, epsilon, dist, samples, seed, jobs);
    return detail::assemble_estimate(dim, sampling_radius, epsilon, hits, samples, seed);
}

std::vector<double> default_eps_grid(double circumradius, int points) {
    if (points < 2) throw std::invalid_argument("default_eps_grid: need at least 2 points");
    double lo = 0.02 * circumradius, hi = 0.5 * circumradius;
    std::vector<double> grid(points);
    double ratio = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i) grid[i] = lo * std::exp(ratio * i);
    return grid;
}

double SteinerFit::coefficient_sigma(int k) const {
    return std::sqrt(covariance[k][k]);
}

SteinerFit fit_steiner_coefficients(const ProjectionOracle& oracle, std::span<const double> eps_grid,
                                    long long samples_per_point, std::uint64_t seed, int jobs) {
    const int npts = static_cast<int>(eps_grid.size());
    if (npts < 8) throw std::invalid_argument("fit_steiner_coefficients: need >= 8 grid points");
    for (int i = 0; i < npts; ++i) {
        if (!(eps_grid[i] > 0.0))
            throw std::invalid_argument("fit_steiner_coefficients: grid values must be positive");
        for (int j = i + 1; j < npts; ++j)
            if (eps_grid[i] == eps_grid[j])
                throw std::invalid_argument("fit_steiner_coefficients: grid values must be distinct");
    }

    SteinerFit fit;
    fit.eps_grid.assign(eps_grid.begin(), eps_grid.end());
    for (int i = 0; i < npts; ++i) {
        std::uint64_t point_seed = splitmix64(seed ^ (0xA24BAED4963EE407ULL * (i + 1)));
        fit.estimates.push_back(
            estimate_neighborhood_volume(oracle, eps_grid[i], samples_per_point, point_seed, jobs));
    }

    const int q = std::min(oracle.dim, npts - 1) + 1; // coefficients a_0..a_{q-1}
    std::vector<double> A(static_cast<size_t>(npts) * q), b(npts);
    for (int i = 0; i < npts; ++i) {
        const MCEstimate& e = fit.estimates[i];
        double sigma = e.stderr_;
        if (sigma <= 0.0) {
            double log_ball = ball_volume(oracle.dim).log_magnitude() +
                              oracle.dim * std::log(oracle.circumradius + e.epsilon);
            sigma = std::exp(log_ball) / static_cast<double>(e.samples);
        }
        double w = 1.0 / sigma;
        double pw = 1.0;
        for (int j = 0; j < q; ++j) {
            A[i * q + j] = w * pw;
            pw *= eps_grid[i];
        }
        b[i] = w * e.value;
    }

    // column scaling, Householder QR, back substitution
    std::vector<double> scale(q);
    for (int j = 0; j < q; ++j) {
        double s = 0.0;
        for (int i = 0; i < npts; ++i) s += A[i * q + j] * A[i * q + j];
        s = std::sqrt(s);
        if (s == 0.0) throw std::runtime_error("fit_steiner_coefficients: ill-conditioned design matrix");
        scale[j] = s;
        for (int i = 0; i < npts; ++i) A[i * q + j] /= s;
    }
    for (int k = 0; k < q; ++k) {
        double nrm = 0.0;
        for (int i = k; i < npts; ++i) nrm += A[i * q + k] * A[i * q + k];
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12)
            throw std::runtime_error("fit_steiner_coefficients: ill-conditioned design matrix");
        double alpha = (A[k * q + k] > 0.0) ? -nrm : nrm;
        std::vector<double> v(npts - k);
        v[0] = A[k * q + k] - alpha;
        for (int i = k + 1; i < npts; ++i) v[i - k] = A[i * q + k];
        double vtv = 0.0;
        for (double t : v) vtv += t * t;
        if (vtv > 0.0) {
            for (int j = k; j < q; ++j) {
                double dotp = 0.0;
                for (int i = k; i < npts; ++i) dotp += v[i - k] * A[i * q + j];
                double f = 2.0 * dotp / vtv;
                for (int i = k; i < npts; ++i) A[i * q + j] -= f * v[i - k];
            }
            double dotb = 0.0;
            for (int i = k; i < npts; ++i) dotb += v[i - k] * b[i];
            double f = 2.0 * dotb / vtv;
            for (int i = k; i < npts; ++i) b[i] -= f * v[i - k];
        }
    }
    double rmax = 0.0;
    for (int j = 0; j < q; ++j) rmax = std::max(rmax, std::fabs(A[j * q + j]));
    for (int j = 0; j < q; ++j)
        if (std::fabs(A[j * q + j]) < 1e-12 * rmax)
            throw std::runtime_error("fit_steiner_coefficients: ill-conditioned design matrix");

    std::vector<double> z(q);
    for (int i = q - 1; i >= 0; --i) {
        double v = b[i];
        for (int j = i + 1; j < q; ++j) v -= A[i * q + j] * z[j];
        z[i] = v / A[i * q + i];
    }
    fit.coefficients.resize(q);
    for (int j = 0; j < q; ++j) fit.coefficients[j] = z[j] / scale[j];

    fit.residual = 0.0;
    for (int i = q; i < npts; ++i) fit.residual += b[i] * b[i];

    // covariance of the leading coefficients: C = R^{-1} R^{-T}, unscaled
    std::vector<double> Rinv(static_cast<size_t>(q) * q, 0.0);
    for (int j = 0; j < q; ++j) {
        Rinv[j * q + j] = 1.0 / A[j * q + j];
        for (int i = j - 1; i >= 0; --i) {
            double s = 0.0;
            for (int k = i + 1; k <= j; ++k) s += A[i * q + k] * Rinv[k * q + j];
            Rinv[i * q + j] = -s / A[i * q + i];
        }
    }
    int top = std::min(q, 4);
    for (int i = 0; i < top; ++i)
        for (int j = 0; j < top; ++j) {
            double c = 0.0;
            for (int k = std::max(i, j); k < q; ++k) c += Rinv[i * q + k] * Rinv[j * q + k];
            fit.covariance[i][j] = c / (scale[i] * scale[j]);
        }
    return fit;
}

} // namespace qgeom::montecarlo
