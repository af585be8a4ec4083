#include <doctest.h>

#include <cmath>

#include "qgeom/statespace.hpp"
#include "support/oracles.hpp"

using namespace qgeom;
namespace ss = qgeom::statespace;
using testsupport::rel_err;

namespace {
const double kPi = M_PI;
const double kPi3 = kPi * kPi * kPi;
}

TEST_CASE("d = 2 closed forms equal the Bloch ball of radius 1/sqrt(2)") {
    double r = 1.0 / std::sqrt(2.0);
    CHECK(rel_err(ss::volume(2).to_double(), 4.0 / 3.0 * kPi * r * r * r) <= 1e-14);
    CHECK(rel_err(ss::surface(2).to_double(), 4.0 * kPi * r * r) <= 1e-14);
    // Steiner polynomial of the ball: (4/3) pi (r+e)^3
    CHECK(rel_err(ss::p2_at_zero(2).to_double(), 8.0 * kPi * r) <= 1e-14);
    CHECK(rel_err(ss::p3_at_zero(2).to_double(), 8.0 * kPi) <= 1e-14);
}

TEST_CASE("d = 2 intrinsic volume table is the 3-ball table") {
    auto t = ss::intrinsic_table(2);
    CHECK(rel_err(t.at(3).V.to_double(), kPi * std::sqrt(2.0) / 3.0) <= 1e-12);
    CHECK(rel_err(t.at(2).V.to_double(), kPi) <= 1e-12);
    CHECK(rel_err(t.at(1).V.to_double(), 2.0 * std::sqrt(2.0)) <= 1e-12);
    CHECK(rel_err(t.at(0).V.to_double(), 1.0) <= 1e-12);
    // vol_{D-1}(boundary) = 2 V_{D-1}
    CHECK(relative_error(ss::surface(2), t.at(2).V * LogReal::from_double(2.0)) <= 1e-14);
}

TEST_CASE("d = 3 derivative coefficients match the eps-expansion data") {
    // eps, eps^2, eps^3 coefficients of the d = 3 neighborhood polynomial
    CHECK(rel_err(ss::surface(3).to_double(), std::sqrt(2.0) * kPi3 / 105.0) <= 1e-12);
    CHECK(rel_err(ss::p2_at_zero(3).to_double(), 2.0 * kPi3 / (5.0 * std::sqrt(3.0))) <= 1e-12);
    CHECK(rel_err(ss::p3_at_zero(3).to_double(), 6.0 * 2.0 * std::sqrt(2.0) * kPi3 / 5.0) <= 1e-12);
}

TEST_CASE("d = 3 volume: closed form, flag/Selberg assembly and known value agree") {
    // the assembly through the eigenvalue-density reduction is an
    // independent code path
    CHECK(relative_error(ss::volume(3), ss::volume_via_selberg(3)) <= 1e-12);
    CHECK(rel_err(ss::volume(3).to_double(), std::sqrt(3.0) * kPi3 / 2520.0) <= 1e-12);
}

TEST_CASE("flag manifold volumes") {
    CHECK(rel_err(ss::flag_manifold_volume(2).to_double(), 2.0 * kPi) <= 1e-14);
    CHECK(rel_err(ss::flag_manifold_volume(3).to_double(), std::pow(2.0 * kPi, 3) / 2.0) <= 1e-14);
    // assembled d = 2 volume reproduces the closed form
    CHECK(relative_error(ss::volume(2), ss::volume_via_selberg(2)) <= 1e-13);
}

TEST_CASE("Selberg assemblies of the derivatives match the closed forms") {
    for (int d = 2; d <= 6; ++d) {
        CAPTURE(d);
        CHECK(relative_error(ss::p2_at_zero(d), ss::p2_via_selberg(d)) <= 1e-10);
        CHECK(relative_error(ss::p3_at_zero(d), ss::p3_via_selberg(d)) <= 1e-10);
    }
}

TEST_CASE("volumes stay positive and decrease in d") {
    LogReal prev;
    for (int d = 2; d <= 8; ++d) {
        auto v = ss::evaluate(d);
        CHECK(v.vol_D.sign() == 1);
        CHECK(v.surface.sign() == 1);
        CHECK(v.p2_at_0.sign() == 1);
        CHECK(v.p3_at_0.sign() == 1);
        for (const auto& e : v.table.entries) CHECK(e.V.sign() == 1);
        if (d > 2) CHECK(v.vol_D < prev);
        prev = v.vol_D;
    }
    CHECK_THROWS_AS(ss::volume(1), std::domain_error);
}

TEST_CASE("table invariants: V and Vtilde conversions") {
    for (int d : {2, 3, 5}) {
        auto v = ss::evaluate(d);
        int D = v.dims.D;
        // V_{D-2} = p''(0) / (2 pi), V_{D-3} = p'''(0) / (8 pi)
        CHECK(relative_error(v.table.at(D - 2).V,
                             v.p2_at_0 / LogReal::from_double(2.0 * kPi)) <= 1e-14);
        CHECK(relative_error(v.table.at(D - 3).V,
                             v.p3_at_0 / LogReal::from_double(8.0 * kPi)) <= 1e-14);
        CHECK(relative_error(v.table.at(D).Vtilde, v.vol_D) <= 1e-15);
        CHECK(relative_error(v.table.at(D - 1).Vtilde, v.surface) <= 1e-15);
    }
}

TEST_CASE("eigen density is symmetric and nonnegative") {
    double x[4] = {0.4, 0.1, 0.3, 0.2};
    double ref = ss::eigen_density({x, 4});
    CHECK(ref > 0.0);
    std::swap(x[0], x[3]);
    CHECK(ss::eigen_density({x, 4}) == doctest::Approx(ref).epsilon(1e-14));
    double y[3] = {0.5, 0.5, 0.0};
    CHECK(ss::eigen_density({y, 3}) == 0.0);
}
