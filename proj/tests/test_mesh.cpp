#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "sprd/errors.hpp"
#include "sprd/mesh.hpp"

using namespace sprd;

TEST_CASE("transition parameter") {
    CHECK(transition_parameter(0x1p-6, 0.9, 64) == 0.25);
    // 2 sqrt(2^-14/0.9) ln 64, evaluated at 30 digits: 0.06849762013416915631...
    CHECK(transition_parameter(0x1p-14, 0.9, 64) == doctest::Approx(0.0684976201341692).epsilon(1e-14));
    // epsilon chosen so the formula equals exactly 1/4 in exact arithmetic
    const double N = 64;
    const double eps = 0.9 * std::pow(0.25 / (2.0 * std::log(N)), 2);
    CHECK(transition_parameter(eps, 0.9, 64) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("clamped mesh is uniform") {
    const auto m = build_space_mesh(0x1p-6, 0.9, 64);
    CHECK(m.sigma() == 0.25);
    CHECK(m.is_uniform());
    for (int j = 1; j <= 64; ++j) CHECK(m.width(j) == 1.0 / 64);
}

TEST_CASE("unclamped mesh widths") {
    const auto m = build_space_mesh(0x1p-14, 0.9, 64);
    // 4 sigma / 64 and 2 (1 - 2 sigma) / 64 from the 30-digit sigma
    CHECK(m.h_layer() == doctest::Approx(0.00428110125838557).epsilon(1e-13));
    CHECK(m.H_interior() == doctest::Approx(0.0269688987416144).epsilon(1e-13));
    CHECK(m[16] == m.sigma());
    CHECK(m[48] == 1.0 - m.sigma());
    CHECK(m[0] == 0.0);
    CHECK(m[64] == 1.0);
}

TEST_CASE("N must be a multiple of 4 and at least 8") {
    CHECK_THROWS_AS(build_space_mesh(0.01, 0.9, 30), ArgumentError);
    CHECK_THROWS_AS(build_space_mesh(0.01, 0.9, 4), ArgumentError);
    CHECK_NOTHROW(build_space_mesh(0.01, 0.9, 8));
}

TEST_CASE("time mesh") {
    const auto a = build_time_mesh(1.0, 4);
    REQUIRE(a.levels().size() == 5);
    CHECK(a[0] == 0.0);
    CHECK(a[1] == 0.25);
    CHECK(a[2] == 0.5);
    CHECK(a[3] == 0.75);
    CHECK(a[4] == 1.0);
    CHECK(build_time_mesh(1.0, 256).tau() == 1.0 / 256);
    const auto b = build_time_mesh(2.0, 2);
    CHECK(b[1] == 1.0);
    CHECK(b[2] == 2.0);
    CHECK_THROWS_AS(build_time_mesh(1.0, 0), ArgumentError);
}

TEST_CASE("layer functions") {
    const double eps = 0x1p-12, alpha = 0.9;
    CHECK(layer_functions(0.0, eps, alpha).BL == 1.0);
    const int N = 64;
    const double s = 2.0 * std::sqrt(eps / alpha) * std::log(double(N));
    CHECK(layer_functions(s, eps, alpha).BL == doctest::Approx(1.0 / (N * N)).epsilon(1e-12));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double x = u(rng);
        const auto v = layer_functions(x, eps, alpha);
        const auto w = layer_functions(1.0 - x, eps, alpha);
        CHECK(v.B == doctest::Approx(w.B).epsilon(1e-12));
        CHECK(v.BR == doctest::Approx(w.BL).epsilon(1e-12));
    }
}

TEST_CASE("property: layer functions are monotone") {
    const double eps = 0x1p-8, alpha = 0.9;
    const int n = 400;
    for (int i = 0; i < n; ++i) {
        const double x0 = double(i) / n, x1 = double(i + 1) / n;
        const auto a = layer_functions(x0, eps, alpha);
        const auto b = layer_functions(x1, eps, alpha);
        CHECK(b.BL < a.BL);
        CHECK(b.BR > a.BR);
        if (x1 <= 0.5) CHECK(b.B < a.B);
        if (x0 >= 0.5) CHECK(b.B > a.B);
    }
}

TEST_CASE("property: doubling N keeps the three-region structure") {
    for (int N = 16; N <= 1024; N *= 2) {
        const auto m = build_space_mesh(0x1p-16, 1.0, N);
        REQUIRE(m.sigma() < 0.25);
        CHECK(m[N / 4] == m.sigma());
        CHECK(m[3 * N / 4] == 1.0 - m.sigma());
        for (int j = 1; j <= N; ++j) {
            const double expected = (j <= N / 4 || j > 3 * N / 4) ? m.h_layer() : m.H_interior();
            CHECK(std::fabs(m.width(j) - expected) < 1e-14);
        }
    }
}

TEST_CASE("points CSV") {
    std::ostringstream os;
    write_points_csv(os, build_space_mesh(0x1p-6, 0.9, 8).points());
    CHECK(os.str() == "0\n0.125\n0.25\n0.375\n0.5\n0.625\n0.75\n0.875\n1\n");
}
