#include <doctest.h>

#include <cmath>
#include <limits>

#include "ioc/family.hpp"

using ioc::FamilyParams;

TEST_CASE("family constraint on n and c") {
    CHECK_NOTHROW(FamilyParams(2.0, 1.0));
    CHECK_NOTHROW(FamilyParams(0.5, 0.0));
    CHECK_NOTHROW(FamilyParams(3.0, -1.0));
    CHECK_NOTHROW(FamilyParams(6.0, -2.0));
    CHECK_NOTHROW(FamilyParams(2.0, -0.5));

    CHECK_THROWS_AS(FamilyParams(1.0, 1.0), ioc::ParameterError);
    CHECK_THROWS_AS(FamilyParams(0.5, 2.0), ioc::ParameterError);
    CHECK_THROWS_AS(FamilyParams(0.0, 0.0), ioc::ParameterError);
    CHECK_THROWS_AS(FamilyParams(-1.0, -1.0), ioc::ParameterError);
    CHECK_THROWS_AS(FamilyParams(3.0, -0.7), ioc::ParameterError);
    CHECK_THROWS_AS(FamilyParams(std::nan(""), 1.0), ioc::ParameterError);
    CHECK_THROWS_AS(FamilyParams(1.0, std::numeric_limits<double>::infinity()), ioc::ParameterError);
}

TEST_CASE("trials are recovered for c < 0 only") {
    CHECK(FamilyParams(6.0, -2.0).trials() == 3);
    CHECK(FamilyParams(2.0, -0.5).trials() == 4);
    CHECK_FALSE(FamilyParams(2.0, 1.0).trials().has_value());
    CHECK_FALSE(FamilyParams(2.0, 0.0).trials().has_value());

    const FamilyParams p = FamilyParams::from_trials(7, -0.1);
    CHECK(p.trials() == 7);
    CHECK(p.n() == doctest::Approx(0.7));
    CHECK_THROWS_AS(FamilyParams::from_trials(0, -1.0), ioc::ParameterError);
    CHECK_THROWS_AS(FamilyParams::from_trials(3, 1.0), ioc::ParameterError);
}

TEST_CASE("domain of the family") {
    const auto bounded = FamilyParams(3.0, -1.0).domain();
    CHECK(bounded.bounded());
    CHECK(bounded.upper == 1.0);
    CHECK(bounded.contains(0.0));
    CHECK(bounded.contains(1.0));
    CHECK_FALSE(bounded.contains(1.01));
    CHECK_FALSE(bounded.contains(-0.01));

    const auto half = FamilyParams(6.0, -2.0).domain();
    CHECK(half.upper == 0.5);
    CHECK(half.length() == 0.5);

    const auto open = FamilyParams(2.0, 1.0).domain();
    CHECK_FALSE(open.bounded());
    CHECK(open.contains(1e300));
    CHECK_FALSE(open.contains(-1e-3));

    CHECK_THROWS_AS(FamilyParams(3.0, -1.0).require_in_domain(1.5), ioc::DomainError);
    CHECK_THROWS_AS(FamilyParams(3.0, 1.0).require_in_domain(-0.5), ioc::DomainError);
    CHECK_THROWS_AS(FamilyParams(3.0, 1.0).require_in_domain(std::nan("")), ioc::DomainError);
    CHECK_NOTHROW(FamilyParams(3.0, -1.0).require_in_domain(1.0));
}

TEST_CASE("evaluation settings are validated") {
    ioc::EvalConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.rel_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ioc::ParameterError);
    cfg = {};
    cfg.max_terms = 10;
    CHECK_THROWS_AS(cfg.validate(), ioc::ParameterError);
    cfg = {};
    cfg.deriv_step = -1e-5;
    CHECK_THROWS_AS(cfg.validate(), ioc::ParameterError);
}

TEST_CASE("parameters describe themselves") {
    const std::string s = FamilyParams(6.0, -2.0).to_string();
    CHECK(s.find("n=6") != std::string::npos);
    CHECK(s.find("c=-2") != std::string::npos);
    CHECK(s.find("l=3") != std::string::npos);
}
