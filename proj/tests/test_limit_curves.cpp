#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rsktraj/limit_curves.hpp"

using namespace rsktraj;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("limit_curves") {

TEST_CASE("semicircle cdf endpoints and midpoint") {
    CHECK(f_sc(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(f_sc(2.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f_sc(-2.0) == doctest::Approx(0.0).scale(1).epsilon(1e-15));
    double expected = 0.5 + (std::sqrt(3.0) / 4.0 + kPi / 6.0) / kPi;
    CHECK(f_sc(1.0) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(f_sc(1.0) == doctest::Approx(0.804498).epsilon(1e-6));
    CHECK_THROWS_AS(f_sc(2.1), std::invalid_argument);
    CHECK_THROWS_AS(f_sc(-2.1), std::invalid_argument);
}

TEST_CASE("semicircle cdf strictly increases") {
    double prev = f_sc(-2.0);
    for (int k = 1; k <= 400; ++k) {
        double y = -2.0 + 4.0 * k / 400.0;
        double cur = f_sc(y);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("omega_star values and symmetry") {
    CHECK(omega_star(0.0) == doctest::Approx(4.0 / kPi).epsilon(1e-15));
    CHECK(omega_star(2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(omega_star(-2.0) == doctest::Approx(2.0).epsilon(1e-15));
    // Value from the formula; the curve is even in y.
    double expected = (2.0 / kPi) * (std::sqrt(3.0) + kPi / 6.0);
    CHECK(omega_star(1.0) == doctest::Approx(expected).epsilon(1e-15));
    for (double y : {0.3, 0.9, 1.7})
        CHECK(omega_star(y) == doctest::Approx(omega_star(-y)).epsilon(1e-15));
    CHECK_THROWS_AS(omega_star(2.0001), std::invalid_argument);
}

TEST_CASE("omega_star stays above the diagonal |y|") {
    for (int k = 0; k <= 100; ++k) {
        double y = -2.0 + 4.0 * k / 100.0;
        CHECK(omega_star(y) >= std::abs(y));
    }
}

TEST_CASE("u inverts f_sc to 1e-12 on a 1000-point grid") {
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        double x = static_cast<double>(k) / 999.0;
        worst = std::max(worst, std::abs(f_sc(u(x)) - x));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("u endpoints are exact") {
    CHECK(u(0.0) == -2.0);
    CHECK(u(1.0) == 2.0);
    CHECK(u(0.5) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    CHECK_THROWS_AS(u(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(u(1.1), std::invalid_argument);
}

TEST_CASE("u respects the inversion config") {
    InversionConfig strict{1e-14, 400};
    CHECK(std::abs(f_sc(u(0.3, strict)) - 0.3) <= 1e-14);
    InversionConfig hopeless{1e-30, 3};
    CHECK_THROWS_AS(u(0.3, hopeless), std::runtime_error);
}

TEST_CASE("v composes omega_star with u") {
    for (double x : {0.05, 0.3, 0.5, 0.77, 0.99})
        CHECK(v(x) == omega_star(u(x)));
}

TEST_CASE("g endpoints match the limit shape corners") {
    CurvePoint g0 = g(0.0);
    CHECK(g0.x == doctest::Approx(0.0).scale(1).epsilon(1e-9));
    CHECK(g0.y == doctest::Approx(2.0).epsilon(1e-9));
    CurvePoint g1 = g(1.0);
    CHECK(g1.x == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(g1.y == doctest::Approx(0.0).scale(1).epsilon(1e-9));
    CurvePoint gm = g(0.5);
    CHECK(gm.x == doctest::Approx(2.0 / kPi).epsilon(1e-9));
    CHECK(gm.y == doctest::Approx(2.0 / kPi).epsilon(1e-9));
}

TEST_CASE("g is increasing under prec along the grid") {
    CurvePoint prev = g(0.0);
    for (int k = 1; k <= 200; ++k) {
        CurvePoint cur = g(static_cast<double>(k) / 200.0);
        CHECK(prec(prev, cur));
        prev = cur;
    }
}

TEST_CASE("g moves continuously") {
    for (double x : {0.1, 0.35, 0.6, 0.85}) {
        CurvePoint a = g(x), b = g(x + 1e-7);
        CHECK(norm(b - a) < 1e-4);
    }
}

TEST_CASE("h endpoint, domain, and asymptote") {
    CurvePoint h1 = h(1.0);
    CurvePoint g1 = g(1.0);
    CHECK(h1.x == g1.x);
    CHECK(h1.y == g1.y);
    CHECK_THROWS_AS(h(0.99), std::invalid_argument);

    double t = 1e4;
    CurvePoint ht = h(t);
    CHECK(std::abs(ht.x * std::sqrt(t) - 1.0) <= 1e-2);
    CHECK(std::abs(ht.y / (2.0 * std::sqrt(t)) - 1.0) <= 1e-2);
}

TEST_CASE("h is monotone componentwise on [1,3]") {
    CurvePoint prev = h(1.0);
    for (int k = 1; k <= 200; ++k) {
        CurvePoint cur = h(1.0 + 2.0 * k / 200.0);
        CHECK(cur.x < prev.x);
        CHECK(cur.y > prev.y);
        prev = cur;
    }
}

TEST_CASE("prec partial order") {
    CHECK(prec({0.0, 2.0}, {2.0, 0.0}));
    CHECK(prec({1.0, 1.0}, {1.0, 1.0}));
    CHECK_FALSE(prec({2.0, 0.0}, {0.0, 2.0}));
    CHECK_FALSE(prec({0.0, 0.0}, {1.0, 1.0}));  // y increased
    CHECK(norm(CurvePoint{3.0, 4.0}) == doctest::Approx(5.0));
}

}  // TEST_SUITE
