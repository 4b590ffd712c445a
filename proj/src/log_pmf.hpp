#pragma once

// Saddle-point log densities (C. Loader, "Fast and accurate computation of
// binomial probabilities", 2000). Absolute error in the log is a few ulps of
// O(1) quantities, independent of the size of the arguments.

#include <cmath>
#include <limits>
#include <numbers>

namespace ioc::detail {

inline constexpr double kLnSqrt2Pi = 0.918938533204672741780329736406;

/// log(n!) - log(sqrt(2 pi n) (n/e)^n), for real n > 0.
inline double stirlerr(double n) {
    constexpr double s0 = 1.0 / 12.0;
    constexpr double s1 = 1.0 / 360.0;
    constexpr double s2 = 1.0 / 1260.0;
    constexpr double s3 = 1.0 / 1680.0;
    constexpr double s4 = 1.0 / 1188.0;
    if (n <= 15.0) {
        return std::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n - kLnSqrt2Pi;
    }
    const double nn = n * n;
    if (n > 500.0) return (s0 - s1 / nn) / n;
    if (n > 80.0) return (s0 - (s1 - s2 / nn) / nn) / n;
    if (n > 35.0) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
    return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

/// Deviance term x log(x/np) + np - x, without cancellation near x = np.
inline double bd0(double x, double np) {
    if (std::abs(x - np) < 0.1 * (x + np)) {
        double v = (x - np) / (x + np);
        double s = (x - np) * v;
        double ej = 2.0 * x * v;
        v = v * v;
        for (int j = 1; j < 1000; ++j) {
            ej *= v;
            const double next = s + ej / (2 * j + 1);
            if (next == s) {
                return next;
            }
            s = next;
        }
        return s;
    }
    return x * std::log(x / np) + np - x;
}

/// log of C(n, x) p^x q^(n-x) with p + q = 1 supplied separately.
inline double log_binom_raw(double x, double n, double p, double q) {
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();
    if (p == 0.0) return x == 0.0 ? 0.0 : neg_inf;
    if (q == 0.0) return x == n ? 0.0 : neg_inf;
    if (x == 0.0) {
        if (n == 0.0) return 0.0;
        return p < 0.1 ? -bd0(n, n * q) - n * p : n * std::log(q);
    }
    if (x == n) {
        return q < 0.1 ? -bd0(n, n * p) - n * q : n * std::log(p);
    }
    if (x < 0.0 || x > n) return neg_inf;
    const double lc =
        stirlerr(n) - stirlerr(x) - stirlerr(n - x) - bd0(x, n * p) - bd0(n - x, n * q);
    const double lf = 2.0 * kLnSqrt2Pi + std::log(x) + std::log1p(-x / n);
    return lc - 0.5 * lf;
}

/// log of lambda^k e^{-lambda} / k!.
inline double log_pois_raw(double k, double lambda) {
    if (lambda == 0.0) return k == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
    if (k == 0.0) return -lambda;
    return -stirlerr(k) - bd0(k, lambda) - kLnSqrt2Pi - 0.5 * std::log(k);
}

/// log of C(r+k-1, k) prob^r (1-prob)^k; q = 1 - prob supplied separately.
inline double log_nbinom_raw(double k, double r, double prob, double q) {
    return std::log(r / (r + k)) + log_binom_raw(r, r + k, prob, q);
}

}  // namespace ioc::detail
