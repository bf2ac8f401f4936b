#include "rsktraj/asymptotics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rsktraj/limit_curves.hpp"

namespace rsktraj {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kThreeHalvesPi = 1.5 * kPi;
}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

double SeriesCoefficient::value() const {
    double out = rational.value();
    if (pi32_thirds != 0) out *= std::pow(kThreeHalvesPi, pi32_thirds / 3.0);
    if (pi_power != 0) out *= std::pow(kPi, pi_power);
    return out;
}

double SeriesExpansion::evaluate(double arg) const {
    double acc = 0.0;
    for (const auto& term : terms)
        acc += term.coefficient.value() * std::pow(arg, term.exponent.value());
    return acc;
}

bool SeriesExpansion::is_valid() const {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        double e = terms[i].exponent.value();
        if (i + 1 < terms.size() && !(e < terms[i + 1].exponent.value())) return false;
        if (!(e < truncation_order.value())) return false;
    }
    return true;
}

power_series::Coeffs SeriesExpansion::dense_coeffs(std::size_t max_order) const {
    power_series::Coeffs out(max_order + 1, 0.0);
    for (const auto& term : terms) {
        if (term.exponent.den != 1 || term.exponent.num < 0 ||
            static_cast<std::size_t>(term.exponent.num) > max_order)
            throw std::invalid_argument("dense_coeffs: exponent not representable");
        out[static_cast<std::size_t>(term.exponent.num)] = term.coefficient.value();
    }
    return out;
}

double f_aux(double x) {
    if (!(x >= 0.0 && x <= 2.0)) throw std::invalid_argument("f_aux: x outside [0,2]");
    return std::cbrt(kThreeHalvesPi * f_sc(x * x - 2.0));
}

SeriesExpansion f_series() {
    return SeriesExpansion{
        {{Rational{1, 1}, {Rational{1, 1}}},
         {Rational{3, 1}, {Rational{-1, 40}}},
         {Rational{5, 1}, {Rational{-39, 22400}}}},
        Rational{7, 1},
        SeriesVariable::x};
}

namespace {

SeriesExpansion make_f_inverse_series() {
    return SeriesExpansion{
        {{Rational{1, 1}, {Rational{1, 1}}},
         {Rational{3, 1}, {Rational{1, 40}}},
         {Rational{5, 1}, {Rational{81, 22400}}}},
        Rational{7, 1},
        SeriesVariable::y};
}

}  // namespace

SeriesExpansion f_inverse_series() {
    // Cross-check the printed coefficients by generic compositional inversion.
    static const bool checked = [] {
        auto computed = power_series::invert(f_series().dense_coeffs(6), 6);
        auto stored = make_f_inverse_series().dense_coeffs(6);
        for (std::size_t k = 0; k < stored.size(); ++k)
            if (std::abs(computed[k] - stored[k]) > 1e-14)
                throw std::logic_error("f_inverse_series: printed coefficients disagree with inversion");
        return true;
    }();
    (void)checked;
    return make_f_inverse_series();
}

SeriesExpansion fsc_inverse_expansion() {
    return SeriesExpansion{
        {{Rational{0, 1}, {Rational{-2, 1}}},
         {Rational{2, 3}, {Rational{1, 1}, 2}},
         {Rational{4, 3}, {Rational{1, 20}, 4}},
         {Rational{2, 1}, {Rational{11, 1400}, 6}}},
        Rational{8, 3},
        SeriesVariable::x};
}

double fsc_inverse_series(double x) { return fsc_inverse_expansion().evaluate(x); }

SeriesExpansion omega_shift_series() {
    return SeriesExpansion{
        {{Rational{3, 1}, {Rational{4, 3}, 0, -1}},
         {Rational{5, 1}, {Rational{1, 30}, 0, -1}},
         {Rational{7, 1}, {Rational{3, 1120}, 0, -1}}},
        Rational{9, 1},
        SeriesVariable::t};
}

SeriesExpansion vu_sum_expansion() {
    return SeriesExpansion{
        {{Rational{1, 1}, {Rational{2, 1}}},
         {Rational{5, 3}, {Rational{1, 5}, 2}},
         {Rational{7, 3}, {Rational{1, 28}, 4}}},
        Rational{3, 1},
        SeriesVariable::x};
}

SeriesExpansion vu_diff_expansion() {
    return SeriesExpansion{
        {{Rational{0, 1}, {Rational{4, 1}}},
         {Rational{2, 3}, {Rational{-2, 1}, 2}},
         {Rational{1, 1}, {Rational{2, 1}}},
         {Rational{4, 3}, {Rational{-1, 10}, 4}},
         {Rational{5, 3}, {Rational{1, 5}, 2}},
         {Rational{2, 1}, {Rational{-11, 700}, 6}},
         {Rational{7, 3}, {Rational{1, 28}, 4}}},
        Rational{8, 3},
        SeriesVariable::x};
}

SeriesExpansion h1_expansion() {
    return SeriesExpansion{
        {{Rational{1, 2}, {Rational{1, 1}}},
         {Rational{7, 6}, {Rational{1, 10}, 2}},
         {Rational{11, 6}, {Rational{1, 56}, 4}}},
        Rational{15, 6},
        SeriesVariable::inv_T};
}

SeriesExpansion h2_expansion() {
    return SeriesExpansion{
        {{Rational{-1, 2}, {Rational{2, 1}}},
         {Rational{1, 6}, {Rational{-1, 1}, 2}},
         {Rational{1, 2}, {Rational{1, 1}}},
         {Rational{5, 6}, {Rational{-1, 20}, 4}},
         {Rational{7, 6}, {Rational{1, 10}, 2}},
         {Rational{9, 6}, {Rational{-11, 1400}, 6}},
         {Rational{11, 6}, {Rational{1, 56}, 4}}},
        Rational{13, 6},
        SeriesVariable::inv_T};
}

double h1_asym(double t) { return h1_expansion().evaluate(1.0 / t); }

double h2_asym(double t) { return h2_expansion().evaluate(1.0 / t); }

std::vector<SeriesErrorRow> series_error_report(const std::vector<double>& t_grid) {
    for (double t : t_grid)
        if (!(t >= 4.0)) throw std::invalid_argument("series_error_report: grid point below T=4");
    std::vector<SeriesErrorRow> rows;
    rows.reserve(t_grid.size());
    const double h1_order = Rational{15, 6}.value();
    const double h2_order = Rational{13, 6}.value();
    for (double t : t_grid) {
        CurvePoint numeric = h(t);
        SeriesErrorRow row;
        row.t = t;
        row.h1_numeric = numeric.x;
        row.h1_series = h1_asym(t);
        row.h1_abs_err = std::abs(row.h1_series - row.h1_numeric);
        row.h1_scaled_err = row.h1_abs_err * std::pow(t, h1_order);
        row.h2_numeric = numeric.y;
        row.h2_series = h2_asym(t);
        row.h2_abs_err = std::abs(row.h2_series - row.h2_numeric);
        row.h2_scaled_err = row.h2_abs_err * std::pow(t, h2_order);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace rsktraj
