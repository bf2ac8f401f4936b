#pragma once

#include <cstddef>

namespace rsktraj {

// Point in the nonnegative quadrant. For box positions the first
// coordinate is the (scaled) column and the second the (scaled) row.
struct CurvePoint {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const CurvePoint&) const = default;
};

double norm(CurvePoint p);
CurvePoint operator-(CurvePoint a, CurvePoint b);

// Controls the numeric inversion of the semicircle CDF.
struct InversionConfig {
    double abs_tolerance = 1e-12;
    std::size_t max_iterations = 200;
};

// CDF of Wigner's semicircle law on [-2, 2].
double f_sc(double y);

// Logan-Shepp-Vershik-Kerov limit-shape curve on [-2, 2], range [4/pi, 2].
double omega_star(double y);

// u(x) = F_SC^{-1}(x) via bracketed bisection refined by Newton steps; the
// residual |f_sc(u) - x| is driven below cfg.abs_tolerance. Endpoints are
// returned exactly since the density vanishes there.
double u(double x, const InversionConfig& cfg = {});

// v(x) = omega_star(u(x)).
double v(double x, const InversionConfig& cfg = {});

// Limit position of the new box for insertion value x, in (column, row)
// scale: G(x) = ((v+u)/2, (v-u)/2). Increasing under prec.
CurvePoint g(double x, const InversionConfig& cfg = {});

// Limit trajectory of a marked box at time ratio T >= 1: H(T) = sqrt(T) G(1/T).
CurvePoint h(double t, const InversionConfig& cfg = {});

// Partial order: (x1,y1) prec (x2,y2) iff x1 <= x2 and y1 >= y2.
bool prec(CurvePoint p, CurvePoint q);

}  // namespace rsktraj
