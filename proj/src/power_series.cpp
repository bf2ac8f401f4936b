#include "rsktraj/power_series.hpp"

#include <stdexcept>

namespace rsktraj::power_series {

Coeffs truncated_product(const Coeffs& a, const Coeffs& b, std::size_t order) {
    Coeffs out(order + 1, 0.0);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

Coeffs compose(const Coeffs& outer, const Coeffs& inner, std::size_t order) {
    if (!inner.empty() && inner[0] != 0.0)
        throw std::invalid_argument("compose: inner series must have zero constant term");
    // Horner on the outer coefficients.
    Coeffs out(order + 1, 0.0);
    for (std::size_t k = outer.size(); k-- > 0;) {
        out = truncated_product(out, inner, order);
        out[0] += outer[k];
    }
    return out;
}

Coeffs invert(const Coeffs& f, std::size_t order) {
    if (f.size() < 2 || f[0] != 0.0 || f[1] == 0.0)
        throw std::invalid_argument("invert: need f(0)=0 and f'(0)!=0");
    Coeffs g(order + 1, 0.0);
    g[1] = 1.0 / f[1];
    for (std::size_t k = 2; k <= order; ++k) {
        // Adding g_k x^k changes [x^k] f(g) by f_1 g_k; cancel the residual.
        Coeffs fg = compose(f, g, k);
        g[k] = -fg[k] / f[1];
    }
    return g;
}

double evaluate(const Coeffs& c, double x) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

}  // namespace rsktraj::power_series
