#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ioc/harness/config.hpp"
#include "ioc/harness/grid.hpp"
#include "ioc/harness/report.hpp"
#include "ioc/harness/sweep.hpp"
#include "ioc/harness/verify.hpp"

using namespace ioc::harness;

TEST_CASE("linspace includes both ends") {
    const auto g = linspace(1.0, 2.0, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 1.0);
    CHECK(g.back() == 2.0);
    CHECK(g[2] == doctest::Approx(1.5));
}

TEST_CASE("x grid covers the domain and its midpoint") {
    const auto g = x_grid(ioc::FamilyParams(6.0, -2.0), 43, 5.0);
    REQUIRE(g.size() == 43);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 0.5);
    CHECK(g[21] == doctest::Approx(0.25).epsilon(1e-15));
    for (std::size_t i = 1; i + 1 < g.size(); ++i) {
        CHECK(g[i] > g[i - 1]);
    }
    const auto h = x_grid(ioc::FamilyParams(2.0, 1.0), 11, 5.0);
    CHECK(h.back() == 5.0);
}

TEST_CASE("parallel map preserves index order") {
    for (int workers : {1, 2, 7}) {
        const auto out = parallel_map<std::size_t>(1000, workers, [](std::size_t i) { return i * i; });
        for (std::size_t i = 0; i < out.size(); ++i) {
            REQUIRE(out[i] == i * i);
        }
    }
}

TEST_CASE("parallel map rethrows a task failure") {
    auto bad = [](std::size_t i) -> int {
        if (i == 17) throw std::runtime_error("boom");
        return 0;
    };
    CHECK_THROWS_AS(parallel_map<int>(50, 3, bad), std::runtime_error);
    CHECK_THROWS_AS(parallel_map<int>(50, 1, bad), std::runtime_error);
}

TEST_CASE("records pass by margin and tolerance") {
    CHECK(make_record("s", "a", 0, 1, 0, 1, 1, -1e-12, 1e-10).pass);
    CHECK_FALSE(make_record("s", "a", 0, 1, 0, 1, 1, -1e-9, 1e-10).pass);
    CHECK_FALSE(make_record("s", "a", 0, 1, 0, 1, 1, std::nan(""), 1.0).pass);
    CHECK(make_record("s", "a", 0, 1, 0, 1, 1, 0.0, 0.0).pass);
}

TEST_CASE("report ordering and serialization") {
    std::vector<CheckRecord> recs{
        make_record("b", "z", 1.0, 2.0, 0.5, 1, 1, 0.0, 0.0),
        make_record("a", "y", 1.0, 2.0, 0.5, 1, 1, -1.0, 0.0),
        make_record("a", "x", kNoValue, 2.0, kNoValue, kNoValue, 1, 0.5, 0.0),
    };
    const SuiteReport report(recs);
    CHECK(report.records()[0].check == "x");
    CHECK(report.records()[1].check == "y");
    CHECK(report.records()[2].suite == "b");
    CHECK(report.failures() == 1);
    CHECK_FALSE(report.all_pass());
    CHECK(report.summary().at("a").worst_margin == -1.0);

    const auto j = report.to_json();
    CHECK(j["records"].size() == 3);
    CHECK(j["records"][0]["c"].is_null());
    CHECK(j["records"][0]["observed"].is_null());
    CHECK(j["summary"]["a"]["fail"] == 1);
    CHECK(report.to_json(true)["records"].size() == 1);
}

TEST_CASE("suite names") {
    for (Suite s : all_suites()) {
        CHECK(parse_suite(to_string(s)) == s);
    }
    CHECK(parse_suite_list("all") == all_suites());
    CHECK(parse_suite_list("ode, bessel") == std::set<Suite>{Suite::Ode, Suite::Bessel});
    CHECK_THROWS_AS(parse_suite("nope"), ioc::ParameterError);
    CHECK_THROWS_AS(parse_suite_list(" , "), ioc::ParameterError);
}

TEST_CASE("families respect the constraint") {
    SweepConfig cfg;
    cfg.c_list = {2.0, -0.5, 0.0};
    cfg.n_list = {1.0, 3.0};
    cfg.l_list = {1, 2};
    const auto fams = cfg.families();
    REQUIRE(fams.size() == 5);
    CHECK(fams[0].c() == -0.5);
    CHECK(fams[0].n() == 0.5);
    CHECK(fams[1].n() == 1.0);
    CHECK(fams[2].c() == 0.0);
    CHECK(fams[4].c() == 2.0);
    CHECK(fams[4].n() == 3.0);

    cfg.n_explicit = true;
    cfg.c_list = {-0.5};
    cfg.n_list = {1.0, 1.25, 3.0};
    CHECK(cfg.families().size() == 2);
}

TEST_CASE("JSON configuration overlays defaults") {
    SweepConfig cfg;
    apply_json_config(cfg, R"({"c": [1.5], "n": [4], "x_points": 9, "suites": ["ode"],
                               "tol": 0.001, "workers": 2, "eval": {"rel_tol": 1e-12}})");
    CHECK(cfg.c_list == std::vector<double>{1.5});
    CHECK(cfg.n_explicit);
    CHECK(cfg.x_points == 9);
    CHECK(cfg.suites == std::set<Suite>{Suite::Ode});
    CHECK(cfg.tol_override == 0.001);
    CHECK(cfg.workers == 2);
    CHECK(cfg.eval.rel_tol == 1e-12);
    CHECK_NOTHROW(cfg.validate());

    CHECK_THROWS_AS(apply_json_config(cfg, "{not json"), ioc::ParameterError);
    CHECK_THROWS_AS(apply_json_config(cfg, "[1, 2]"), ioc::ParameterError);
    CHECK_THROWS_AS(apply_json_config(cfg, R"({"x_points": "many"})"), ioc::ParameterError);
    CHECK_THROWS_AS(apply_json_config(cfg, R"({"suites": ["bogus"]})"), ioc::ParameterError);

    SweepConfig bad;
    bad.x_points = 2;
    CHECK_THROWS_AS(bad.validate(), ioc::ParameterError);
    bad = {};
    bad.identities_max_n = 501;
    CHECK_THROWS_AS(bad.validate(), ioc::ParameterError);
}

TEST_CASE("verify on a small grid") {
    SweepConfig cfg;
    cfg.c_list = {-1.0, 1.0};
    cfg.n_list = {3.0};
    cfg.l_list = {3};
    cfg.x_points = 7;
    cfg.suites = {Suite::Normalization, Suite::Ode, Suite::Bounds};
    cfg.workers = 2;
    const SuiteReport report = run_verify(cfg);
    CHECK(report.all_pass());
    CHECK(report.summary().count("ode") == 1);
    CHECK(report.summary().count("identities") == 0);

    cfg.tol_override = 0.0;
    const SuiteReport strict = run_verify(cfg);
    CHECK(strict.summary().at("ode").fail > 0);
}

TEST_CASE("sweep CSV layout") {
    SweepConfig cfg;
    cfg.c_list = {-1.0, 0.0, 1.0};
    cfg.n_list = {2.0};
    cfg.l_list = {2};
    cfg.x_points = 3;
    std::ostringstream out;
    write_sweep_csv(cfg, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == kSweepHeader);
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 15);
    }
    CHECK(rows == 9);
}

TEST_CASE("single-point evaluation document") {
    const auto j = evaluate_point(ioc::FamilyParams(3.0, -1.0), 0.5);
    CHECK(j["S"].get<double>() == doctest::Approx(0.3125));
    CHECK(j["params"]["l"] == 3);
    CHECK(j["pass"] == true);
    CHECK(j["bounds"].size() >= 3);
    CHECK_THROWS_AS(evaluate_point(ioc::FamilyParams(3.0, -1.0), 1.5), ioc::DomainError);
}
