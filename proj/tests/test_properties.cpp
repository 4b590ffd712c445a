// Randomized invariants over (c, n, x) drawn from a fixed-seed generator.
// Each case reports its draw on failure so it can be replayed directly.

#include <doctest.h>

#include <cmath>
#include <random>

#include "ioc/bounds.hpp"
#include "ioc/distribution.hpp"
#include "ioc/special_functions.hpp"

using ioc::FamilyParams;

namespace {

struct Draw {
    FamilyParams params;
    double x;
};

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    Draw next() {
        std::uniform_int_distribution<int> kind(0, 2);
        switch (kind(rng_)) {
            case 0: {
                const double c = -std::exp(uniform(-2.0, 1.5));
                const auto l = std::uniform_int_distribution<std::int64_t>(1, 120)(rng_);
                const auto p = FamilyParams::from_trials(l, c);
                return {p, uniform(0.0, 1.0) * p.domain().upper};
            }
            case 1:
                return {FamilyParams(std::exp(uniform(-3.0, 3.5)), 0.0), std::exp(uniform(-8.0, 1.6))};
            default: {
                const double c = std::exp(uniform(-4.0, 1.5));
                const double n = c * (1.0 + std::exp(uniform(-3.0, 3.0)));
                return {FamilyParams(n, c), std::exp(uniform(-8.0, 1.6))};
            }
        }
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

constexpr int kDraws = 400;

}  // namespace

TEST_CASE("S lies in (0, 1], is convex and log-convex, and solves the ODE") {
    Generator gen(20261016);
    for (int i = 0; i < kDraws; ++i) {
        const Draw d = gen.next();
        CAPTURE(d.params.to_string());
        CAPTURE(d.x);
        const auto t = ioc::ioc_triple(d.params, d.x);
        CHECK(t.s > 0.0);
        CHECK(t.s <= 1.0 + 1e-15);
        CHECK(t.s2 >= -1e-10);
        CHECK(t.s * t.s2 - t.s1 * t.s1 >= -1e-10 * std::max(1.0, t.s1 * t.s1));
        if (d.params.c() >= 0.0) CHECK(t.s1 <= 1e-10);
        CHECK(std::abs(ioc::heun_residual(d.params, d.x)) <= 1e-8);
        CHECK(std::abs(ioc::pmf_normalization(d.params, d.x) - 1.0) <= 1e-12);
    }
}

TEST_CASE("upper bounds dominate S and entropy bounds follow") {
    Generator gen(7);
    for (int i = 0; i < kDraws; ++i) {
        const Draw d = gen.next();
        CAPTURE(d.params.to_string());
        CAPTURE(d.x);
        const double s = ioc::index_of_coincidence(d.params, d.x);
        const auto report = ioc::make_bound_report(d.params, d.x, s);
        for (const auto& b : report.bounds) {
            CAPTURE(b.id);
            CHECK(b.margin >= -1e-10 * std::max(1.0, s));
        }
        const auto e = ioc::entropies(d.params, d.x);
        CHECK(e.shannon >= e.renyi2 - 1e-12);
        for (auto id : {ioc::UpperBoundId::Basic, ioc::UpperBoundId::LogConvexTight, ioc::UpperBoundId::Poisson,
                        ioc::UpperBoundId::BinomialUpper}) {
            if (!ioc::upper_bound_value(id, d.params, d.x)) continue;
            const auto lb = ioc::entropy_lower_bounds(d.params, d.x, id);
            CHECK(e.renyi2 >= lb.renyi - 1e-9);
            CHECK(e.tsallis2 >= lb.tsallis - 1e-9);
        }
    }
}

TEST_CASE("binomial members are symmetric and match quadrature") {
    Generator gen(99);
    for (int i = 0; i < kDraws; ++i) {
        std::mt19937_64 pick(i);
        const auto l = std::uniform_int_distribution<std::int64_t>(1, 200)(pick);
        const double t = gen.uniform(0.0, 1.0);
        const FamilyParams p = FamilyParams::from_trials(l, -1.0);
        CAPTURE(l);
        CAPTURE(t);
        const double s = ioc::index_of_coincidence(p, t);
        CHECK(std::abs(s - ioc::index_of_coincidence(p, 1.0 - t)) <= 4e-13);
        CHECK(std::abs(s - ioc::ioc_binomial_quadrature(l, t)) <= 1e-11 * s);
    }
}

TEST_CASE("ratio bound holds on the near half and reverses on the far half") {
    Generator gen(4242);
    for (int i = 0; i < kDraws; ++i) {
        const Draw d = gen.next();
        CAPTURE(d.params.to_string());
        CAPTURE(d.x);
        const auto t = ioc::ioc_triple(d.params, d.x);
        const double ratio = t.s1 / t.s;
        const double bound = ioc::ratio_bound(d.params, d.x);
        const double slack = 1e-9 * std::max(1.0, std::abs(bound));
        const bool far_half = d.params.c() < 0.0 && d.x > 0.5 * d.params.domain().upper;
        if (far_half) {
            CHECK(ratio >= bound - slack);
        } else {
            CHECK(ratio <= bound + slack);
        }
    }
}

TEST_CASE("Legendre brackets") {
    Generator gen(31337);
    for (int i = 0; i < kDraws; ++i) {
        std::mt19937_64 pick(i + 1);
        const auto n = std::uniform_int_distribution<std::int64_t>(2, 150)(pick);
        const double t = 1.0 + std::exp(gen.uniform(-20.0, 3.0));
        CAPTURE(n);
        CAPTURE(t);
        const auto lp = ioc::legendre_pair(n, t);
        const auto rb = ioc::legendre_ratio_bounds(n, t);
        const double ratio = lp.dp / lp.p;
        CHECK(ratio >= rb.lower * (1 - 1e-10));
        CHECK(ratio <= rb.upper_sharp * (1 + 1e-10));
        CHECK(rb.upper_sharp <= rb.upper_coarse * (1 + 1e-10));
        const auto vb = ioc::legendre_value_bounds(n, t);
        CHECK(lp.p <= vb.strong * (1 + 1e-10));
        CHECK(vb.strong <= vb.weak * (1 + 1e-10));
    }
}
