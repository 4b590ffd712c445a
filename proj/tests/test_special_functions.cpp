#include <doctest.h>

#include <cmath>

#include "ioc/distribution.hpp"
#include "ioc/special_functions.hpp"
#include "oracles.hpp"

TEST_CASE("Legendre values and derivatives") {
    auto a = ioc::legendre_pair(5, 1.0);
    CHECK(a.p == 1.0);
    CHECK(a.dp == 15.0);
    auto b = ioc::legendre_pair(2, 2.0);
    CHECK(b.p == 5.5);
    CHECK(b.dp == 6.0);
    auto c = ioc::legendre_pair(1, 3.0);
    CHECK(c.p == 3.0);
    CHECK(c.dp == 1.0);
    auto d = ioc::legendre_pair(0, 7.0);
    CHECK(d.p == 1.0);
    CHECK(d.dp == 0.0);
}

TEST_CASE("Legendre near t = 1 is continuous") {
    for (long n : {3L, 20L, 100L}) {
        // P^(k)(1) = (n+k)! / ((n-k)! 2^k k!).
        const double d1 = n * (n + 1) / 2.0;
        const double d2 = (n - 1) * n * (n + 1) * (n + 2) / 8.0;
        const double d3 = d2 * (n - 2) * (n + 3) / 6.0;
        for (double step : {1e-15, 1e-13, 1e-12, 1e-11, 1e-9}) {
            const double t = 1.0 + step;
            const auto v = ioc::legendre_pair(n, t);
            CHECK(std::abs(v.dp - (d1 + d2 * (t - 1.0) + d3 * (t - 1.0) * (t - 1.0) / 2)) <= 1e-12 * d1);
        }
    }
}

TEST_CASE("Legendre against the explicit exact sum") {
    for (long n : {1L, 2L, 7L, 30L, 80L}) {
        for (const mpq_class& t : {mpq_class(1), mpq_class(101, 100), mpq_class(5, 4), mpq_class(3), mpq_class(10)}) {
            const mpq_class p = oracle::legendre(n, t);
            const mpq_class pm1 = oracle::legendre(n - 1, t);
            // (t^2 - 1) P' = n (t P_n - P_{n-1}); at t = 1, P' = n(n+1)/2.
            const mpq_class dp = t == 1 ? mpq_class(n * (n + 1), 2) : mpq_class(n * (t * p - pm1) / (t * t - 1));
            const auto got = ioc::legendre_pair(n, t.get_d());
            CAPTURE(n);
            CAPTURE(t.get_d());
            CHECK(oracle::rel_diff(got.p, p.get_d()) < 1e-12);
            CHECK(oracle::rel_diff(got.dp, dp.get_d()) < 1e-12);
        }
    }
}

TEST_CASE("Legendre domain") {
    CHECK_THROWS_AS(ioc::legendre_pair(3, 0.999), ioc::DomainError);
    CHECK_THROWS_AS(ioc::legendre_pair(-1, 2.0), ioc::DomainError);
}

TEST_CASE("Bessel I0") {
    CHECK(ioc::bessel_i0(0.0) == 1.0);
    CHECK(ioc::bessel_i0(1.0) == doctest::Approx(1.2660658778).epsilon(1e-9));
    for (double t : {0.1, 1.0, 2.0, 7.5, 20.0, 50.0}) {
        CHECK(oracle::rel_diff(ioc::bessel_i0(t), static_cast<double>(oracle::bessel_i0(t))) <= 1e-13);
    }
    CHECK(std::isfinite(ioc::bessel_i0(700.0)));
    CHECK_THROWS_AS(ioc::bessel_i0(700.5), ioc::OverflowError);
    CHECK_THROWS_AS(ioc::bessel_i0(-1.0), ioc::DomainError);
}

TEST_CASE("Bessel identity with the Poisson member") {
    for (double n : {1.0, 2.0, 5.0}) {
        const double x = 1.0 / n;
        const double lhs = std::exp(2 * n * x) * ioc::index_of_coincidence(ioc::FamilyParams(n, 0.0), x);
        CHECK(oracle::rel_diff(lhs, ioc::bessel_i0(2.0)) <= 1e-12);
    }
}

TEST_CASE("Gauss-Chebyshev quadrature") {
    CHECK(ioc::ioc_binomial_quadrature(1, 0.25) == doctest::Approx(0.625).epsilon(1e-15));
    for (long n : {0L, 1L, 9L, 200L}) {
        CHECK(ioc::ioc_binomial_quadrature(n, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    }
    const double series = ioc::index_of_coincidence(ioc::FamilyParams(6.0, -1.0), 0.37);
    CHECK(oracle::rel_diff(ioc::ioc_binomial_quadrature(6, 0.37), series) <= 1e-11);

    const auto poly = oracle::binom_ioc_poly(45);
    for (const mpq_class& t : {mpq_class(1, 10), mpq_class(1, 2), mpq_class(17, 20)}) {
        CHECK(oracle::rel_diff(ioc::ioc_binomial_quadrature(45, t.get_d()),
                               oracle::poly_derivative(poly, 0, t).get_d()) <= 1e-12);
    }

    CHECK_THROWS_AS(ioc::ioc_binomial_quadrature(-1, 0.5), ioc::ParameterError);
    CHECK_THROWS_AS(ioc::ioc_binomial_quadrature(10'001, 0.5), ioc::ParameterError);
    CHECK_THROWS_AS(ioc::ioc_binomial_quadrature(3, 1.5), ioc::DomainError);
}
