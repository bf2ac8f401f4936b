#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rsktraj/asymptotics.hpp"
#include "rsktraj/limit_curves.hpp"
#include "rsktraj/power_series.hpp"

using namespace rsktraj;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Errors of a truncated expansion against a reference, on a halving grid.
// Each halving must shrink the error by 2^{-order} up to a factor of two.
void check_dyadic_order(const std::vector<double>& args, double order,
                        double (*reference)(double), double (*series)(double)) {
    std::vector<double> errs;
    for (double a : args) errs.push_back(std::abs(reference(a) - series(a)));
    double target = std::pow(2.0, -order);
    for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
        double ratio = errs[i + 1] / errs[i];
        CHECK(ratio >= target / 2.0);
        CHECK(ratio <= target * 2.0);
    }
}

double u_exact(double x) { return u(x, {1e-14, 400}); }
double vu_sum_numeric(double x) {
    double uu = u_exact(x);
    return omega_star(uu) + uu;
}
double vu_sum_series(double x) { return vu_sum_expansion().evaluate(x); }
double h1_numeric(double t) { return h(t).x; }
double h2_numeric(double t) { return h(t).y; }

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("rational arithmetic stays reduced") {
    CHECK(Rational(15, 6) == Rational(5, 2));
    CHECK(Rational(-3, -9) == Rational(1, 3));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0, 1));
    CHECK(Rational(5, 2).value() == 2.5);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("stored f series coefficients are the printed rationals") {
    SeriesExpansion f = f_series();
    REQUIRE(f.terms.size() == 3);
    CHECK(f.terms[0].exponent == Rational(1, 1));
    CHECK(f.terms[0].coefficient == SeriesCoefficient{Rational(1, 1), 0, 0});
    CHECK(f.terms[1].exponent == Rational(3, 1));
    CHECK(f.terms[1].coefficient == SeriesCoefficient{Rational(-1, 40), 0, 0});
    CHECK(f.terms[2].exponent == Rational(5, 1));
    CHECK(f.terms[2].coefficient == SeriesCoefficient{Rational(-39, 22400), 0, 0});
    CHECK(f.truncation_order == Rational(7, 1));
    CHECK(f.is_valid());

    SeriesExpansion fi = f_inverse_series();
    REQUIRE(fi.terms.size() == 3);
    CHECK(fi.terms[0].coefficient == SeriesCoefficient{Rational(1, 1), 0, 0});
    CHECK(fi.terms[1].coefficient == SeriesCoefficient{Rational(1, 40), 0, 0});
    CHECK(fi.terms[2].coefficient == SeriesCoefficient{Rational(81, 22400), 0, 0});
    CHECK(fi.truncation_order == Rational(7, 1));
}

TEST_CASE("stored curve expansions are the printed rationals") {
    SeriesExpansion fsc = fsc_inverse_expansion();
    REQUIRE(fsc.terms.size() == 4);
    CHECK(fsc.terms[0].exponent == Rational(0, 1));
    CHECK(fsc.terms[0].coefficient == SeriesCoefficient{Rational(-2, 1), 0, 0});
    CHECK(fsc.terms[1].exponent == Rational(2, 3));
    CHECK(fsc.terms[1].coefficient == SeriesCoefficient{Rational(1, 1), 2, 0});
    CHECK(fsc.terms[2].exponent == Rational(4, 3));
    CHECK(fsc.terms[2].coefficient == SeriesCoefficient{Rational(1, 20), 4, 0});
    CHECK(fsc.terms[3].exponent == Rational(2, 1));
    CHECK(fsc.terms[3].coefficient == SeriesCoefficient{Rational(11, 1400), 6, 0});
    CHECK(fsc.truncation_order == Rational(8, 3));

    SeriesExpansion os = omega_shift_series();
    REQUIRE(os.terms.size() == 3);
    CHECK(os.terms[0].coefficient == SeriesCoefficient{Rational(4, 3), 0, -1});
    CHECK(os.terms[1].coefficient == SeriesCoefficient{Rational(1, 30), 0, -1});
    CHECK(os.terms[2].coefficient == SeriesCoefficient{Rational(3, 1120), 0, -1});
    CHECK(os.truncation_order == Rational(9, 1));

    SeriesExpansion vs = vu_sum_expansion();
    REQUIRE(vs.terms.size() == 3);
    CHECK(vs.terms[0].exponent == Rational(1, 1));
    CHECK(vs.terms[0].coefficient == SeriesCoefficient{Rational(2, 1), 0, 0});
    CHECK(vs.terms[1].exponent == Rational(5, 3));
    CHECK(vs.terms[1].coefficient == SeriesCoefficient{Rational(1, 5), 2, 0});
    CHECK(vs.terms[2].exponent == Rational(7, 3));
    CHECK(vs.terms[2].coefficient == SeriesCoefficient{Rational(1, 28), 4, 0});
    CHECK(vs.truncation_order == Rational(3, 1));
}

TEST_CASE("stored H expansions are the printed rationals") {
    SeriesExpansion h1 = h1_expansion();
    REQUIRE(h1.terms.size() == 3);
    CHECK(h1.terms[0].exponent == Rational(1, 2));
    CHECK(h1.terms[0].coefficient == SeriesCoefficient{Rational(1, 1), 0, 0});
    CHECK(h1.terms[1].exponent == Rational(7, 6));
    CHECK(h1.terms[1].coefficient == SeriesCoefficient{Rational(1, 10), 2, 0});
    CHECK(h1.terms[2].exponent == Rational(11, 6));
    CHECK(h1.terms[2].coefficient == SeriesCoefficient{Rational(1, 56), 4, 0});
    CHECK(h1.truncation_order == Rational(15, 6));

    SeriesExpansion h2 = h2_expansion();
    REQUIRE(h2.terms.size() == 7);
    CHECK(h2.terms[0].exponent == Rational(-1, 2));
    CHECK(h2.terms[0].coefficient == SeriesCoefficient{Rational(2, 1), 0, 0});
    CHECK(h2.terms[1].exponent == Rational(1, 6));
    CHECK(h2.terms[1].coefficient == SeriesCoefficient{Rational(-1, 1), 2, 0});
    CHECK(h2.terms[2].exponent == Rational(1, 2));
    CHECK(h2.terms[2].coefficient == SeriesCoefficient{Rational(1, 1), 0, 0});
    CHECK(h2.terms[3].exponent == Rational(5, 6));
    CHECK(h2.terms[3].coefficient == SeriesCoefficient{Rational(-1, 20), 4, 0});
    CHECK(h2.terms[4].exponent == Rational(7, 6));
    CHECK(h2.terms[4].coefficient == SeriesCoefficient{Rational(1, 10), 2, 0});
    CHECK(h2.terms[5].exponent == Rational(3, 2));
    CHECK(h2.terms[5].coefficient == SeriesCoefficient{Rational(-11, 1400), 6, 0});
    CHECK(h2.terms[6].exponent == Rational(11, 6));
    CHECK(h2.terms[6].coefficient == SeriesCoefficient{Rational(1, 56), 4, 0});
    CHECK(h2.truncation_order == Rational(13, 6));
    CHECK(h2.is_valid());
}

TEST_CASE("coefficient values carry the transcendental factors") {
    SeriesCoefficient c{Rational(1, 20), 4, 0};
    CHECK(c.value() == doctest::Approx(std::pow(1.5 * kPi, 4.0 / 3.0) / 20.0).epsilon(1e-15));
    SeriesCoefficient d{Rational(4, 3), 0, -1};
    CHECK(d.value() == doctest::Approx(4.0 / (3.0 * kPi)).epsilon(1e-15));
}

TEST_CASE("power series utilities") {
    using power_series::Coeffs;
    Coeffs a{0.0, 1.0, 1.0};           // x + x^2
    Coeffs b{0.0, 2.0};                // 2x
    CHECK(power_series::truncated_product(a, b, 3) == Coeffs{0.0, 0.0, 2.0, 2.0});
    CHECK(power_series::compose(b, a, 2) == Coeffs{0.0, 2.0, 2.0});
    CHECK(power_series::evaluate(a, 2.0) == 6.0);

    Coeffs inv = power_series::invert(a, 3);
    Coeffs round = power_series::compose(a, inv, 3);
    CHECK(round[0] == doctest::Approx(0.0));
    CHECK(round[1] == doctest::Approx(1.0));
    CHECK(std::abs(round[2]) <= 1e-14);
    CHECK(std::abs(round[3]) <= 1e-14);
}

TEST_CASE("compositional inverse of f reproduces the printed series") {
    auto computed = power_series::invert(f_series().dense_coeffs(6), 6);
    auto stored = f_inverse_series().dense_coeffs(6);
    REQUIRE(computed.size() == stored.size());
    for (std::size_t k = 0; k < stored.size(); ++k)
        CHECK(std::abs(computed[k] - stored[k]) <= 1e-14);

    // And composing the two gives the identity through order 5.
    auto round = power_series::compose(f_series().dense_coeffs(5), stored, 5);
    for (std::size_t k = 0; k <= 5; ++k)
        CHECK(std::abs(round[k] - (k == 1 ? 1.0 : 0.0)) <= 1e-14);
}

TEST_CASE("f_aux matches its Taylor series near zero") {
    CHECK(f_aux(2.0) == doctest::Approx(std::cbrt(1.5 * kPi)).epsilon(1e-15));
    CHECK(f_aux(0.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(f_aux(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(f_aux(2.1), std::invalid_argument);
    // Measured |f_aux - series| / t^7 levels off near 1.95e-4.
    for (double t : {0.05, 0.1, 0.2, 0.4})
        CHECK(std::abs(f_aux(t) - f_series().evaluate(t)) <= 2.5e-4 * std::pow(t, 7.0));
}

TEST_CASE("omega shift series agrees with the direct evaluation") {
    // Measured |direct - series| / t^9 levels off near 1.1e-4.
    for (double t : {0.1, 0.2, 0.4, 0.8}) {
        double direct = omega_star(t * t - 2.0) + t * t - 2.0;
        CHECK(std::abs(direct - omega_shift_series().evaluate(t)) <= 1.5e-4 * std::pow(t, 9.0));
    }
}

TEST_CASE("vu_diff series agrees with the direct evaluation") {
    // Measured |direct - series| / x^{8/3} stays below 0.16.
    for (double x : {0.05, 0.1, 0.2}) {
        double uu = u_exact(x);
        double direct = omega_star(uu) - uu;
        CHECK(std::abs(direct - vu_diff_expansion().evaluate(x)) <=
              0.2 * std::pow(x, 8.0 / 3.0));
    }
}

TEST_CASE("fsc inverse expansion has error order 8/3") {
    check_dyadic_order({0.08, 0.04, 0.02, 0.01, 0.005}, 8.0 / 3.0, u_exact,
                       fsc_inverse_series);
}

TEST_CASE("vu sum expansion has error order 3") {
    check_dyadic_order({0.4, 0.2, 0.1, 0.05, 0.025}, 3.0, vu_sum_numeric, vu_sum_series);
}

TEST_CASE("h1 expansion has error order 15/6 in 1/T") {
    check_dyadic_order({4.0, 8.0, 16.0, 32.0, 64.0}, 15.0 / 6.0, h1_numeric, h1_asym);
}

TEST_CASE("h2 expansion has error order 13/6 in 1/T") {
    check_dyadic_order({4.0, 8.0, 16.0, 32.0, 64.0}, 13.0 / 6.0, h2_numeric, h2_asym);
}

TEST_CASE("series error report columns and scaling") {
    auto rows = series_error_report({4.0, 8.0, 16.0});
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
        CHECK(r.h1_abs_err == std::abs(r.h1_series - r.h1_numeric));
        CHECK(r.h2_abs_err == std::abs(r.h2_series - r.h2_numeric));
        CHECK(r.h1_scaled_err ==
              doctest::Approx(r.h1_abs_err * std::pow(r.t, 15.0 / 6.0)).epsilon(1e-12));
        CHECK(r.h2_scaled_err ==
              doctest::Approx(r.h2_abs_err * std::pow(r.t, 13.0 / 6.0)).epsilon(1e-12));
        // Measured scaled errors sit near 0.1; boundedness is the claim.
        CHECK(r.h1_scaled_err < 0.2);
        CHECK(r.h2_scaled_err < 0.2);
    }
    CHECK(series_error_report({}).empty());
    CHECK_THROWS_AS(series_error_report({3.9}), std::invalid_argument);
}

TEST_CASE("dense coefficient extraction guards exponents") {
    CHECK_THROWS_AS(fsc_inverse_expansion().dense_coeffs(6), std::invalid_argument);
    auto dense = f_series().dense_coeffs(6);
    REQUIRE(dense.size() == 7);
    CHECK(dense[1] == 1.0);
    CHECK(dense[3] == -1.0 / 40.0);
    CHECK(dense[5] == doctest::Approx(-39.0 / 22400.0).epsilon(1e-16));
    CHECK_THROWS_AS(f_series().dense_coeffs(4), std::invalid_argument);
}

}  // TEST_SUITE
