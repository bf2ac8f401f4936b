#pragma once

#include <cstddef>
#include <vector>

namespace rsktraj {

// Dense truncated power series: c[k] is the coefficient of x^k. All
// operations drop terms of exponent > order.
namespace power_series {

using Coeffs = std::vector<double>;

Coeffs truncated_product(const Coeffs& a, const Coeffs& b, std::size_t order);

// outer(inner(x)) truncated; inner must have zero constant term.
Coeffs compose(const Coeffs& outer, const Coeffs& inner, std::size_t order);

// Compositional inverse g of f with f(0)=0, f'(0)!=0, solved coefficient by
// coefficient so that f(g(x)) = x through the given order.
Coeffs invert(const Coeffs& f, std::size_t order);

double evaluate(const Coeffs& c, double x);

}  // namespace power_series

}  // namespace rsktraj
