#pragma once

#include <cstdint>

namespace ioc {

struct LegendrePair {
    double p = 1.0;   // P_n(t)
    double dp = 0.0;  // P_n'(t)
};

/// P_n(t) and P_n'(t) for t >= 1 by the three-term recurrence and its
/// derivative. Throws DomainError for t < 1 or n < 0.
LegendrePair legendre_pair(std::int64_t n, double t);

/// Modified Bessel function I_0 by its power series with a certified tail.
/// Throws DomainError for t < 0 and OverflowError for t > 700.
double bessel_i0(double t);

/// S_{n,-1}(t) from its Chebyshev-weight integral representation, evaluated
/// by (n+1)-point Gauss-Chebyshev quadrature (exact for this polynomial
/// integrand). Requires 0 <= n <= 10^4 and t in [0, 1].
double ioc_binomial_quadrature(std::int64_t n, double t);

}  // namespace ioc
