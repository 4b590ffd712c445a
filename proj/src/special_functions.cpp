#include "ioc/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ioc/family.hpp"

namespace ioc {

LegendrePair legendre_pair(std::int64_t n, double t) {
    if (n < 0) {
        throw DomainError("legendre_pair: degree must be nonnegative");
    }
    if (!(t >= 1.0) || !std::isfinite(t)) {
        std::ostringstream os;
        os << "legendre_pair: t=" << t << " is below 1";
        throw DomainError(os.str());
    }
    if (n == 0) {
        return {1.0, 0.0};
    }
    // (k+1) P_{k+1} = (2k+1) t P_k - k P_{k-1}, differentiated for P'. Unlike
    // n (t P_n - P_{n-1}) / (t^2 - 1) this has no 0/0 as t -> 1, where it
    // reproduces P_n'(1) = n (n+1) / 2 exactly.
    double p_prev = 1.0;
    double p = t;
    double dp_prev = 0.0;
    double dp = 1.0;
    for (std::int64_t k = 1; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const double p_next = ((2.0 * kd + 1.0) * t * p - kd * p_prev) / (kd + 1.0);
        const double dp_next = ((2.0 * kd + 1.0) * (p + t * dp) - kd * dp_prev) / (kd + 1.0);
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
    }
    return {p, dp};
}

double bessel_i0(double t) {
    if (!(t >= 0.0)) {
        throw DomainError("bessel_i0: argument must be nonnegative");
    }
    if (t > 700.0) {
        throw OverflowError("bessel_i0: argument above 700 overflows binary64");
    }
    const double quarter_sq = 0.25 * t * t;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 100000; ++k) {
        const double ratio = quarter_sq / ((k + 1.0) * (k + 1.0));
        term *= ratio;
        sum += term;
        // Ratios decrease from here on, so the tail is below term * r / (1 - r).
        const double next_ratio = quarter_sq / ((k + 2.0) * (k + 2.0));
        if (next_ratio < 1.0 && term * next_ratio / (1.0 - next_ratio) <= 0.25e-16 * sum) {
            return sum;
        }
    }
    throw TruncationError("bessel_i0: series did not converge");
}

double ioc_binomial_quadrature(std::int64_t n, double t) {
    if (n < 0 || n > 10'000) {
        throw ParameterError("ioc_binomial_quadrature: n must lie in [0, 10^4]");
    }
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("ioc_binomial_quadrature: t must lie in [0, 1]");
    }
    // x = (1 + u) / 2 turns dx / sqrt(x (1 - x)) into the Chebyshev weight
    // du / sqrt(1 - u^2); the m-node rule carries weight pi / m per node.
    const double a = (1.0 - 2.0 * t) * (1.0 - 2.0 * t);
    const std::int64_t m = n + 1;
    const double nd = static_cast<double>(n);
    double sum = 0.0;
    for (std::int64_t i = 1; i <= m; ++i) {
        const double u = std::cos((2.0 * static_cast<double>(i) - 1.0) * std::numbers::pi /
                                  (2.0 * static_cast<double>(m)));
        const double g = 0.5 * (1.0 + u) + 0.5 * (1.0 - u) * a;
        sum += std::pow(g, nd);
    }
    return sum / static_cast<double>(m);
}

}  // namespace ioc
