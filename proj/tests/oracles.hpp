#pragma once

// Reference values computed by routes that share no code with the library:
// exact rational polynomials for the binomial case, plain long-double
// forward recurrences for the infinite series.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline mpz_class choose(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

inline mpq_class pow_q(const mpq_class& base, long e) {
    mpq_class out = 1;
    for (long i = 0; i < e; ++i) out *= base;
    return out;
}

/// C(l,k) x^k (1-x)^(l-k).
inline mpq_class binom_pmf(long l, long k, const mpq_class& x) {
    return mpq_class(choose(l, k)) * pow_q(x, k) * pow_q(1 - x, l - k);
}

/// Coefficients a_j of S_{l,-1}(x) = sum_j a_j x^j, expanded exactly from
/// sum_k C(l,k)^2 x^(2k) (1-x)^(2l-2k).
inline std::vector<mpq_class> binom_ioc_poly(long l) {
    std::vector<mpq_class> a(static_cast<std::size_t>(2 * l + 1), 0);
    for (long k = 0; k <= l; ++k) {
        const mpz_class w = choose(l, k) * choose(l, k);
        const long m = 2 * l - 2 * k;
        for (long i = 0; i <= m; ++i) {
            mpz_class term = w * choose(m, i);
            if (i % 2 == 1) term = -term;
            a[static_cast<std::size_t>(2 * k + i)] += term;
        }
    }
    return a;
}

/// d-th derivative of the polynomial at x.
inline mpq_class poly_derivative(const std::vector<mpq_class>& a, int d, const mpq_class& x) {
    mpq_class out = 0;
    for (std::size_t j = a.size(); j-- > static_cast<std::size_t>(d);) {
        mpq_class coef = a[j];
        for (int i = 0; i < d; ++i) coef *= static_cast<long>(j) - i;
        out = out * x + coef;
    }
    return out;
}

struct Triple {
    long double s = 0, s1 = 0, s2 = 0;
};

/// S, S', S'' of the Poisson (c = 0) or negative-binomial (c > 0) member by
/// forward recurrence on p_k and the derivatives of log p_k written in the
/// (k/x, c(r+k)/(1+cx)) form. Summation runs until the squared terms have
/// passed the mode and dropped below 1e-40 of the sum.
inline Triple series_triple(double n, double c, double x) {
    const long double lx = x;
    long double p;
    if (c == 0.0) {
        p = std::exp(-static_cast<long double>(n) * lx);
    } else {
        const long double r = static_cast<long double>(n) / c;
        p = std::pow(1.0L + c * lx, -r);
    }
    Triple out;
    for (long k = 0; k < 2'000'000; ++k) {
        long double l1, l2;
        if (c == 0.0) {
            l1 = k / lx - n;
            l2 = -k / (lx * lx);
        } else {
            const long double r = static_cast<long double>(n) / c;
            l1 = k / lx - c * (r + k) / (1.0L + c * lx);
            l2 = -k / (lx * lx) + c * c * (r + k) / ((1.0L + c * lx) * (1.0L + c * lx));
        }
        const long double dp = p * l1;
        const long double ddp = p * (l1 * l1 + l2);
        out.s += p * p;
        out.s1 += 2 * p * dp;
        out.s2 += 2 * (dp * dp + p * ddp);
        long double next;
        if (c == 0.0) {
            next = p * (n * lx) / (k + 1);
        } else {
            const long double r = static_cast<long double>(n) / c;
            next = p * (r + k) / (k + 1) * (c * lx / (1.0L + c * lx));
        }
        if (next < p && p * p < 1e-40L * out.s && k > 10) break;
        p = next;
    }
    return out;
}

/// sum_k (t/2)^(2k) / (k!)^2 in long double.
inline long double bessel_i0(double t) {
    const long double q = static_cast<long double>(t) * t / 4.0L;
    long double term = 1, sum = 1;
    for (long k = 1; k < 100'000; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        sum += term;
        if (term < 1e-30L * sum) break;
    }
    return sum;
}

/// P_n(t) = 2^-n sum_k C(n,k)^2 (t-1)^(n-k) (t+1)^k, exactly.
inline mpq_class legendre(long n, const mpq_class& t) {
    mpq_class out = 0;
    for (long k = 0; k <= n; ++k) {
        out += mpq_class(choose(n, k) * choose(n, k)) * pow_q(t - 1, n - k) * pow_q(t + 1, k);
    }
    return out / pow_q(2, n);
}

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace oracle
