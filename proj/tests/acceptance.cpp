// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.  Each check pins its reference constants and tolerances
// in place.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "qgeom/cpolytope.hpp"
#include "qgeom/feasibility.hpp"
#include "qgeom/montecarlo.hpp"
#include "qgeom/selberg.hpp"
#include "qgeom/statespace.hpp"
#include "support/octahedron.hpp"
#include "support/oracles.hpp"

using namespace qgeom;
using testsupport::rel_err;

namespace {

const double kPi = M_PI;
const double kPi3 = kPi * kPi * kPi;

struct Criterion {
    int id;
    std::string label;
    bool ok = true;
    std::vector<std::string> failures;
    double seconds = 0.0;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

std::vector<Criterion> g_results;

template <class Fn>
void run_criterion(int id, const std::string& label, double budget_seconds, Fn&& body) {
    Criterion c{id, label};
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.seconds > budget_seconds) {
        c.ok = false;
        char buf[128];
        std::snprintf(buf, sizeof(buf), "runtime %.2f s exceeds the %.0f s budget", c.seconds,
                      budget_seconds);
        c.failures.push_back(buf);
    }
    std::printf("%s  [%d] %-58s (%.2f s)\n", c.ok ? "PASS" : "FAIL", c.id, c.label.c_str(),
                c.seconds);
    for (const auto& f : c.failures) std::printf("        - %s\n", f.c_str());
    std::fflush(stdout);
    g_results.push_back(std::move(c));
}

std::string fnum(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

int main() {
    std::printf("acceptance suite (%u hardware threads)\n",
                std::thread::hardware_concurrency());

    // 1. d = 3 state-space coefficients against the pinned expansion data.
    run_criterion(1, "d=3 state-space coefficients (1e-12 relative)", 1.0, [](Criterion& c) {
        struct Pin {
            const char* name;
            double got;
            double expected;
        } pins[] = {
            {"volume", statespace::volume(3).to_double(), std::sqrt(3.0) * kPi3 / 5040.0},
            {"surface", statespace::surface(3).to_double(), std::sqrt(2.0) * kPi3 / 105.0},
            {"eps^2 coefficient", (statespace::p2_at_zero(3) / LogReal::from_double(2.0)).to_double(),
             kPi3 / (5.0 * std::sqrt(3.0))},
            {"eps^3 coefficient", (statespace::p3_at_zero(3) / LogReal::from_double(6.0)).to_double(),
             2.0 * std::sqrt(2.0) * kPi3 / 5.0},
        };
        for (const auto& p : pins) {
            double re = rel_err(p.got, p.expected);
            c.require(re <= 1e-12, std::string(p.name) + ": got " + fnum(p.got) + ", pinned " +
                                       fnum(p.expected) + " (rel err " + fnum(re) + ")");
        }
    });

    // 2. d = 2 intrinsic volumes equal the 3-ball of radius 1/sqrt(2).
    run_criterion(2, "d=2 Bloch-ball equivalence (1e-12 relative)", 1.0, [](Criterion& c) {
        auto t = statespace::intrinsic_table(2);
        double expected[4] = {kPi * std::sqrt(2.0) / 3.0, kPi, 2.0 * std::sqrt(2.0), 1.0};
        for (int N = 3; N >= 0; --N) {
            double got = t.at(N).V.to_double();
            double re = rel_err(got, expected[3 - N]);
            c.require(re <= 1e-12, "V_" + std::to_string(N) + ": got " + fnum(got) +
                                       ", expected " + fnum(expected[3 - N]));
        }
    });

    // 3. Octahedron: closed forms vs explicit-coordinate geometry.
    run_criterion(3, "octahedron equivalence from explicit coordinates (1e-10)", 1.0, [](Criterion& c) {
        auto oct = testsupport::octahedron_steiner_from_model();
        double pinned[4] = {std::sqrt(2.0) / 3.0, 2.0 * std::sqrt(3.0), 6.0 * std::acos(1.0 / 3.0),
                            4.0 * kPi / 3.0};
        double closed[4] = {cpolytope::closed_form_volume(2).to_double(),
                            cpolytope::closed_form_surface(2).to_double(),
                            cpolytope::vtilde_Dm2(2).to_double(),
                            cpolytope::vtilde_Dm3(2).to_double()};
        double geom[4] = {oct.a0, oct.a1, oct.a2, oct.a3};
        const char* names[4] = {"volume", "surface", "a_2", "a_3"};
        for (int i = 0; i < 4; ++i) {
            c.require(rel_err(closed[i], pinned[i]) <= 1e-10,
                      std::string(names[i]) + " closed form vs pinned constant");
            c.require(rel_err(geom[i], closed[i]) <= 1e-10,
                      std::string(names[i]) + ": geometry " + fnum(geom[i]) + " vs closed " +
                          fnum(closed[i]));
        }
    });

    // 4. Closed forms equal the face assemblies, d = 2..6.
    run_criterion(4, "face assembly identity for d = 2..6 (1e-10 relative)", 5.0, [](Criterion& c) {
        for (int d = 2; d <= 6; ++d) {
            double r2 = relative_error(cpolytope::vtilde_Dm2(d), cpolytope::assembled_vtilde(2, d));
            double r3 = relative_error(cpolytope::vtilde_Dm3(d), cpolytope::assembled_vtilde(3, d));
            c.require(r2 <= 1e-10, "d=" + std::to_string(d) + " codim-2 (rel err " + fnum(r2) + ")");
            c.require(r3 <= 1e-10, "d=" + std::to_string(d) + " codim-3 (rel err " + fnum(r3) + ")");
        }
    });

    // 5. Selberg evaluator vs quadrature, and the derivative assemblies.
    run_criterion(5, "Selberg consistency (quadrature 1e-8, assemblies 1e-10)", 30.0, [](Criterion& c) {
        for (int n : {2, 3}) {
            for (int alpha = 1; alpha <= 3; ++alpha) {
                for (int gamma = 0; gamma <= 3; ++gamma) {
                    for (int m = 0; m <= n; ++m) {
                        for (int k = 0; k <= m; ++k) {
                            selberg::SelbergParams p{n, static_cast<double>(alpha),
                                                     static_cast<double>(gamma), k, m};
                            double closed = selberg::simplex_selberg(p).to_double();
                            double quad = selberg::simplex_quadrature_oracle(p);
                            double re = rel_err(closed, quad);
                            c.require(re <= 1e-8,
                                      "quadrature mismatch at n=" + std::to_string(n) +
                                          " alpha=" + std::to_string(alpha) +
                                          " gamma=" + std::to_string(gamma) +
                                          " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                          " (rel err " + fnum(re) + ")");
                        }
                    }
                }
            }
        }
        for (int d = 2; d <= 6; ++d) {
            double r2 = relative_error(statespace::p2_at_zero(d), statespace::p2_via_selberg(d));
            c.require(r2 <= 1e-10, "p''(0) assembly at d=" + std::to_string(d));
        }
        for (int d = 2; d <= 6; ++d) {
            double r3 = relative_error(statespace::p3_at_zero(d), statespace::p3_via_selberg(d));
            c.require(r3 <= 1e-10, "p'''(0) assembly at d=" + std::to_string(d));
        }
    });

    // 6. Monte-Carlo verification of the first four coefficients.
    run_criterion(6, "Monte-Carlo Steiner fits: |z| <= 3 on >= 11/12 seeds", 600.0, [](Criterion& c) {
        struct BodySpec {
            const char* name;
            montecarlo::ProjectionOracle oracle;
            double closed[4];
        };
        auto table_of = [](const IntrinsicVolumeTable& t, int D, double* out) {
            for (int i = 0; i < 4; ++i) out[i] = t.at(D - i).Vtilde.to_double();
        };
        std::vector<BodySpec> bodies;
        {
            BodySpec s2{"S_2", montecarlo::ProjectionOracle::state_space(2), {}};
            table_of(statespace::intrinsic_table(2), 3, s2.closed);
            BodySpec s3{"S_3", montecarlo::ProjectionOracle::state_space(3), {}};
            table_of(statespace::intrinsic_table(3), 8, s3.closed);
            BodySpec p2{"P_2", montecarlo::ProjectionOracle::cpolytope(2), {}};
            table_of(cpolytope::intrinsic_table(2), 3, p2.closed);
            bodies = {s2, s3, p2};
        }
        const long long samples = 1000000;
        const int reps = 12;
        const std::uint64_t base_seed = 20250811ULL;
        for (const auto& body : bodies) {
            auto grid = montecarlo::default_eps_grid(body.oracle.circumradius, 12);
            int within[4] = {0, 0, 0, 0};
            for (int r = 0; r < reps; ++r) {
                auto fit = montecarlo::fit_steiner_coefficients(body.oracle, grid, samples,
                                                                base_seed + r, 0);
                for (int k = 0; k < 4; ++k) {
                    double sigma = fit.coefficient_sigma(k);
                    double z = sigma > 0.0 ? (fit.coefficients[k] - body.closed[k]) / sigma : 0.0;
                    if (std::fabs(z) <= 3.0) ++within[k];
                }
            }
            for (int k = 0; k < 4; ++k) {
                c.require(within[k] >= 11, std::string(body.name) + " a_" + std::to_string(k) +
                                               ": only " + std::to_string(within[k]) +
                                               "/12 repetitions within 3 sigma");
            }
        }
    });

    // 7. Monotonicity table: V_N(P_d) <= V_N(S_d).
    run_criterion(7, "V_N(P_d) <= V_N(S_d) for d = 2..8, N = D..D-3", 1.0, [](Criterion& c) {
        for (int d = 2; d <= 8; ++d) {
            auto rows = feasibility::compare_polytope_statespace(d);
            for (const auto& row : rows)
                c.require(!row.violates, "violated at d=" + std::to_string(d) +
                                             ", N=" + std::to_string(row.N));
        }
    });

    // 8. Spherical-cone exclusions.
    run_criterion(8, "spherical-cone exclusions (d=6 all, d=5 k<=2, d=7..12 all)", 1.0,
                  [](Criterion& c) {
        auto r6 = feasibility::exclusion_report(6);
        for (const auto& row : r6)
            c.require(row.excluded, "d=6 k=" + std::to_string(row.k) + " not excluded");
        auto r5 = feasibility::exclusion_report(5);
        for (int k = 0; k <= 2; ++k)
            c.require(r5[k].excluded,
                      "d=5 k=" + std::to_string(k) + ": expected exclusion, got V(C)=" +
                          fnum(r5[k].cone_value.to_double()) +
                          " <= V(S)=" + fnum(r5[k].statespace_value.to_double()));
        c.require(!r5[3].excluded, "d=5 k=3 unexpectedly excluded");
        for (int d = 7; d <= 12; ++d) {
            auto r = feasibility::exclusion_report(d);
            for (const auto& row : r)
                c.require(row.excluded,
                          "d=" + std::to_string(d) + " k=" + std::to_string(row.k) + " not excluded");
        }
    });

    // 9. Feasibility gate on the canonical prescriptions.
    run_criterion(9, "feasibility gate: SIC/MUB pass, d+1 orthonormal fails PSD", 5.0, [](Criterion& c) {
        for (int d = 2; d <= 5; ++d) {
            auto sic = feasibility::check_trivial_requirements(
                feasibility::generate_prescription(feasibility::PrescriptionKind::Sic, d));
            c.require(sic.all_ok(), "SIC(" + std::to_string(d) + ") failed a trivial requirement");
            auto mub = feasibility::check_trivial_requirements(
                feasibility::generate_prescription(feasibility::PrescriptionKind::Mub, d));
            c.require(mub.all_ok(), "MUB(" + std::to_string(d) + ") failed a trivial requirement");
        }
        for (int d = 2; d <= 6; ++d) {
            auto over = feasibility::check_trivial_requirements(
                feasibility::generate_prescription(feasibility::PrescriptionKind::OrthoSet, d, d + 1));
            c.require(!over.psd_ok, "OrthoSet(d+1) at d=" + std::to_string(d) + " passed PSD");
            double err = std::fabs(over.min_eigenvalue + 1.0 / d);
            c.require(err <= 1e-10, "OrthoSet(d+1) at d=" + std::to_string(d) +
                                        ": min eigenvalue " + fnum(over.min_eigenvalue) +
                                        " vs -1/d (err " + fnum(err) + ")");
        }
    });

    int failed = 0;
    for (const auto& c : g_results) failed += c.ok ? 0 : 1;
    std::printf("%d of %zu criteria passed\n", static_cast<int>(g_results.size()) - failed,
                g_results.size());
    return failed == 0 ? 0 : 1;
}
