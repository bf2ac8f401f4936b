#pragma once

#include <cstdint>
#include <vector>

#include "rsktraj/power_series.hpp"

namespace rsktraj {

// Exact rational, kept reduced with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

// Series coefficient: rational * (3*pi/2)^(pi32_thirds/3) * pi^pi_power.
// The rational part is stored exactly; the transcendental factors are the
// only shapes the expansions here need.
struct SeriesCoefficient {
    Rational rational;
    int pi32_thirds = 0;
    int pi_power = 0;

    double value() const;
    bool operator==(const SeriesCoefficient&) const = default;
};

enum class SeriesVariable { x, y, t, inv_T };

struct SeriesTerm {
    Rational exponent;
    SeriesCoefficient coefficient;
};

// Fractional-power expansion: exponents strictly increase and the first
// omitted exponent is truncation_order.
struct SeriesExpansion {
    std::vector<SeriesTerm> terms;
    Rational truncation_order;
    SeriesVariable variable = SeriesVariable::x;

    double evaluate(double arg) const;
    bool is_valid() const;

    // Dense integer-exponent coefficient vector; throws if any exponent
    // is fractional or above max_order.
    power_series::Coeffs dense_coeffs(std::size_t max_order) const;
};

// f(x) = cbrt((3*pi/2) * F_sc(x^2 - 2)) on [0, 2], strictly increasing.
double f_aux(double x);

// Taylor series of f_aux at zero: x - (1/40)x^3 - (39/22400)x^5, O(x^7).
SeriesExpansion f_series();

// Inverse series y + (1/40)y^3 + (81/22400)y^5, O(y^7). On first use the
// stored coefficients are checked against an order-7 compositional
// inversion of f_series; a mismatch throws std::logic_error.
SeriesExpansion f_inverse_series();

// F_sc^{-1}(x) = -2 + ((3pi/2)x)^{2/3} + (1/20)((3pi/2)x)^{4/3}
//                   + (11/1400)((3pi/2)x)^{6/3}, O(x^{8/3}).
SeriesExpansion fsc_inverse_expansion();
double fsc_inverse_series(double x);

// Omega_star(t^2-2) + t^2 - 2 = (4/3pi)t^3 + (1/30pi)t^5 + (3/1120pi)t^7, O(t^9).
SeriesExpansion omega_shift_series();

// v(x)+u(x) = 2x + (1/5)(3pi/2)^{2/3}x^{5/3} + (1/28)(3pi/2)^{4/3}x^{7/3}, O(x^3).
SeriesExpansion vu_sum_expansion();

// v(x)-u(x): the sum expansion plus 4 - 2*F_sc^{-1}(x) terms, O(x^{8/3}).
SeriesExpansion vu_diff_expansion();

// Asymptotic expansions of H in powers of 1/T; valid for large T (the
// error-order sweeps in the report use T >= 4).
SeriesExpansion h1_expansion();
SeriesExpansion h2_expansion();
double h1_asym(double t);
double h2_asym(double t);

// One row of the series-vs-numeric validation table.
struct SeriesErrorRow {
    double t = 0.0;
    double h1_numeric = 0.0, h1_series = 0.0, h1_abs_err = 0.0, h1_scaled_err = 0.0;
    double h2_numeric = 0.0, h2_series = 0.0, h2_abs_err = 0.0, h2_scaled_err = 0.0;
};

// Scaled errors are abs_err * T^{15/6} (H1) and abs_err * T^{13/6} (H2);
// bounded scaled error over a dyadic grid demonstrates the stated orders.
// Throws std::invalid_argument if any grid point is below 4.
std::vector<SeriesErrorRow> series_error_report(const std::vector<double>& t_grid);

}  // namespace rsktraj
