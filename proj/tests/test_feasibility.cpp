#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "qgeom/feasibility.hpp"
#include "qgeom/statespace.hpp"
#include "support/oracles.hpp"

using namespace qgeom;
namespace fs = qgeom::feasibility;
using testsupport::rel_err;

TEST_CASE("SIC prescription at d = 2: spectrum, verdicts, tight sum bound") {
    auto p = fs::generate_prescription(fs::PrescriptionKind::Sic, 2);
    REQUIRE(p.n == 4);
    CHECK(p.at(0, 0) == 1.0);
    CHECK(p.at(0, 1) == doctest::Approx(1.0 / 3.0));

    auto r = fs::check_trivial_requirements(p);
    CHECK(r.diag_ok);
    CHECK(r.nonneg_ok);
    CHECK(r.psd_ok);
    CHECK(r.rank == 3);
    CHECK(r.rank_ok);
    CHECK(r.sum == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(r.sum_bound == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(r.sum_ok);
    CHECK(r.all_ok());
    // G = M - J/2 has the aI + bJ spectrum {2/3, 2/3, 2/3, 0}
    CHECK(std::fabs(r.min_eigenvalue) <= 1e-12);
}

TEST_CASE("orthonormal prescriptions") {
    // a full basis passes; G = I - J/d is a scaled projection of rank d-1
    for (int d = 2; d <= 5; ++d) {
        auto p = fs::generate_prescription(fs::PrescriptionKind::OrthoSet, d);
        auto r = fs::check_trivial_requirements(p);
        CHECK(r.all_ok());
        CHECK(r.rank == d - 1);
    }
    // d+1 pairwise orthogonal unit vectors cannot exist: min eigenvalue -1/d
    for (int d = 2; d <= 6; ++d) {
        auto p = fs::generate_prescription(fs::PrescriptionKind::OrthoSet, d, d + 1);
        auto r = fs::check_trivial_requirements(p);
        CHECK_FALSE(r.psd_ok);
        CHECK_FALSE(r.all_ok());
        CHECK(std::fabs(r.min_eigenvalue + 1.0 / d) <= 1e-10);
        // the sum bound detects it too: sum = n < n^2/d for n = d+1
        CHECK_FALSE(r.sum_ok);
    }
}

TEST_CASE("MUB prescriptions pass with rank exactly d^2 - 1") {
    for (int d = 2; d <= 5; ++d) {
        auto p = fs::generate_prescription(fs::PrescriptionKind::Mub, d);
        REQUIRE(p.n == d * (d + 1));
        // block pattern: identity within a basis, 1/d across bases
        CHECK(p.at(0, 1) == 0.0);
        CHECK(p.at(0, d) == doctest::Approx(1.0 / d));
        auto r = fs::check_trivial_requirements(p);
        CHECK(r.all_ok());
        CHECK(r.rank == d * d - 1);
        // tight sum bound: n + n(n-d)/d = n^2/d exactly
        CHECK(r.sum == doctest::Approx(r.sum_bound).epsilon(1e-13));
    }
}

TEST_CASE("gram vectors realize G when PSD") {
    for (auto kind : {fs::PrescriptionKind::Sic, fs::PrescriptionKind::Mub}) {
        for (int d = 2; d <= 4; ++d) {
            auto p = fs::generate_prescription(kind, d);
            auto r = fs::check_trivial_requirements(p);
            REQUIRE(r.psd_ok);
            REQUIRE(static_cast<int>(r.gram_vectors.size()) == p.n * p.n);
            for (int i = 0; i < p.n; ++i)
                for (int j = 0; j < p.n; ++j) {
                    double g = 0.0;
                    for (int k = 0; k < p.n; ++k)
                        g += r.gram_vectors[i * p.n + k] * r.gram_vectors[j * p.n + k];
                    CHECK(std::fabs(g - (p.at(i, j) - 1.0 / d)) <= 1e-10);
                }
            // squared norms 1 - 1/d on the diagonal
            for (int i = 0; i < p.n; ++i) {
                double g = 0.0;
                for (int k = 0; k < p.n; ++k)
                    g += r.gram_vectors[i * p.n + k] * r.gram_vectors[i * p.n + k];
                CHECK(std::fabs(g - (1.0 - 1.0 / d)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("aI + bJ spectral shortcut matches the dense solver") {
    // M = (1-b) I + b J gives G with eigenvalues 1-b-1/d+n(b-1/d)/... use
    // direct analytic values: G = (1-b)I + (b-1/d)J
    int n = 6, d = 3;
    double b = 0.4;
    fs::PrescriptionMatrix p;
    p.n = n;
    p.d = d;
    p.M.assign(static_cast<size_t>(n) * n, b);
    for (int i = 0; i < n; ++i) p.at(i, i) = 1.0;
    auto r = fs::check_trivial_requirements(p);
    double lam_j = (1.0 - b) + n * (b - 1.0 / d); // J-direction eigenvalue
    double lam_perp = 1.0 - b;
    CHECK(std::fabs(r.min_eigenvalue - std::min(lam_j, lam_perp)) <= 1e-12);
}

TEST_CASE("sum bound cases") {
    fs::PrescriptionMatrix ones;
    ones.n = 5;
    ones.d = 3;
    ones.M.assign(25, 1.0);
    auto s = fs::sum_bound(ones);
    CHECK(s.sum == doctest::Approx(25.0));
    CHECK(s.bound == doctest::Approx(25.0 / 3.0));
    CHECK(s.ok);
}

TEST_CASE("cone intrinsic volumes") {
    auto f = fs::ConeFamily::make(2, 0);
    CHECK(f.dim == 3);
    // octant of the 3-ball of radius 1/sqrt(2)
    CHECK(rel_err(fs::cone_intrinsic_volume(f).to_double(), M_PI / (12.0 * std::sqrt(2.0))) <= 1e-13);

    // orthant-fraction construction identity for a few (d, k)
    for (int d : {2, 3, 6}) {
        for (int k = 0; k <= 3; ++k) {
            auto fam = fs::ConeFamily::make(d, k);
            LogReal direct = fs::cone_intrinsic_volume(fam);
            LogReal expect = ball_volume(fam.dim) *
                             LogReal::from_double(fam.circumradius).pow(fam.dim) /
                             LogReal::from_double(2.0).pow(fam.dim);
            CHECK(relative_error(direct, expect) <= 1e-13);
        }
    }
    CHECK_THROWS_AS(fs::ConeFamily::make(2, 4), std::domain_error);
}

TEST_CASE("exclusion reports across dimensions") {
    // d = 6: all four hypothetical configurations are excluded
    auto r6 = fs::exclusion_report(6);
    REQUIRE(r6.size() == 4);
    for (const auto& row : r6) CHECK(row.excluded);

    // d = 5: the cone value sits below the state-space value at k = 2 and 3,
    // so only k = 0, 1 are excluded
    auto r5 = fs::exclusion_report(5);
    CHECK(r5[0].excluded);
    CHECK(r5[1].excluded);
    CHECK_FALSE(r5[2].excluded);
    CHECK_FALSE(r5[3].excluded);

    // every larger dimension keeps all four exclusions
    for (int d = 7; d <= 12; ++d) {
        auto r = fs::exclusion_report(d);
        for (const auto& row : r) {
            CAPTURE(d);
            CHECK(row.excluded);
        }
    }
}

TEST_CASE("polytope vs state space comparison table") {
    for (int d = 2; d <= 8; ++d) {
        auto rows = fs::compare_polytope_statespace(d);
        REQUIRE(rows.size() == 4);
        for (const auto& row : rows) {
            CAPTURE(d);
            CAPTURE(row.N);
            CHECK_FALSE(row.violates);
            CHECK(row.ratio <= 1.0 + 1e-12);
        }
    }
    auto rows2 = fs::compare_polytope_statespace(2);
    CHECK(rows2[0].N == 3);
    CHECK(rows2[0].ratio == doctest::Approx(1.0 / M_PI).epsilon(1e-13));
    CHECK(rows2[3].N == 0);
    CHECK(rows2[3].ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("JSON and CSV interchange") {
    auto sic = fs::generate_prescription(fs::PrescriptionKind::Sic, 2);
    std::string json = "{\"d\": 2, \"M\": [";
    for (int i = 0; i < sic.n; ++i) {
        json += (i ? ",[" : "[");
        for (int j = 0; j < sic.n; ++j) {
            json += (j ? "," : "");
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", sic.at(i, j));
            json += buf;
        }
        json += "]";
    }
    json += "]}";
    auto parsed = fs::parse_prescription_json(json);
    CHECK(parsed.n == 4);
    CHECK(parsed.d == 2);
    for (int i = 0; i < 16; ++i) CHECK(parsed.M[i] == doctest::Approx(sic.M[i]).epsilon(1e-15));

    CHECK_THROWS(fs::parse_prescription_json("{\"d\": 2}"));
    CHECK_THROWS(fs::parse_prescription_json("not json"));
    CHECK_THROWS(fs::parse_prescription_json("{\"d\": 2, \"M\": [[1, 0], [0]]}"));

    // CSV round trip through a temp file
    std::string path = "test_prescription_tmp.csv";
    {
        std::ofstream out(path);
        out << "1,0.5\n0.5,1\n";
    }
    auto csv = fs::load_prescription_csv(path, 2);
    CHECK(csv.n == 2);
    CHECK(csv.at(0, 1) == doctest::Approx(0.5));
    std::remove(path.c_str());

    auto report = fs::check_trivial_requirements(parsed);
    std::string rj = fs::gram_report_json(parsed, report);
    CHECK(rj.find("\"schema\":\"qgeom/1\"") != std::string::npos);
    CHECK(rj.find("\"all_ok\":true") != std::string::npos);
    // emission is deterministic
    CHECK(rj == fs::gram_report_json(parsed, report));
}

TEST_CASE("input validation") {
    fs::PrescriptionMatrix bad;
    bad.n = 2;
    bad.d = 2;
    bad.M = {1.0, 0.3, 0.2, 1.0}; // not symmetric
    CHECK_THROWS_AS(fs::check_trivial_requirements(bad), std::invalid_argument);
    CHECK_THROWS_AS(fs::generate_prescription(fs::PrescriptionKind::Sic, 1), std::domain_error);
    CHECK_THROWS_AS(fs::exclusion_report(1), std::domain_error);
}
