#include "rsktraj/limit_curves.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rsktraj {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require_y_domain(double y, const char* what) {
    if (!(y >= -2.0 && y <= 2.0)) throw std::invalid_argument(std::string(what) + ": y outside [-2,2]");
}

// Semicircle density, the derivative of f_sc.
double f_sc_prime(double y) { return std::sqrt(4.0 - y * y) / (2.0 * kPi); }

}  // namespace

double norm(CurvePoint p) { return std::hypot(p.x, p.y); }

CurvePoint operator-(CurvePoint a, CurvePoint b) { return {a.x - b.x, a.y - b.y}; }

double f_sc(double y) {
    require_y_domain(y, "f_sc");
    return 0.5 + (y * std::sqrt(4.0 - y * y) / 4.0 + std::asin(y / 2.0)) / kPi;
}

double omega_star(double y) {
    require_y_domain(y, "omega_star");
    return 2.0 / kPi * (std::sqrt(4.0 - y * y) + y * std::asin(y / 2.0));
}

double u(double x, const InversionConfig& cfg) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("u: x outside [0,1]");
    if (!(cfg.abs_tolerance > 0.0)) throw std::invalid_argument("u: abs_tolerance must be positive");
    if (x == 0.0) return -2.0;
    if (x == 1.0) return 2.0;

    double lo = -2.0, hi = 2.0;  // f_sc(lo) <= x <= f_sc(hi)
    double y = 0.0;
    for (std::size_t iter = 0; iter < cfg.max_iterations; ++iter) {
        double r = f_sc(y) - x;
        if (std::abs(r) <= cfg.abs_tolerance) return y;
        (r > 0.0 ? hi : lo) = y;
        double d = f_sc_prime(y);
        double step = y - r / d;
        // Newton when it stays inside the bracket, bisection otherwise.
        y = (d > 0.0 && step > lo && step < hi) ? step : 0.5 * (lo + hi);
    }
    throw std::runtime_error("u: inversion did not converge within max_iterations");
}

double v(double x, const InversionConfig& cfg) { return omega_star(u(x, cfg)); }

CurvePoint g(double x, const InversionConfig& cfg) {
    double ux = u(x, cfg);
    double vx = omega_star(ux);
    return {(vx + ux) / 2.0, (vx - ux) / 2.0};
}

CurvePoint h(double t, const InversionConfig& cfg) {
    if (!(t >= 1.0)) throw std::invalid_argument("h: T must be >= 1");
    CurvePoint p = g(1.0 / t, cfg);
    double s = std::sqrt(t);
    return {s * p.x, s * p.y};
}

bool prec(CurvePoint p, CurvePoint q) { return p.x <= q.x && p.y >= q.y; }

}  // namespace rsktraj
