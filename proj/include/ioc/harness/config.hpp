#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ioc/family.hpp"

namespace ioc::harness {

enum class Suite {
    Normalization,
    Convexity,
    LogConvexity,
    Ode,
    Bounds,
    Legendre,
    Bessel,
    Identities,
    Entropy,
};

std::string to_string(Suite suite);
/// Throws ParameterError for an unknown name.
Suite parse_suite(const std::string& name);
std::set<Suite> all_suites();
/// Comma-separated list; "all" selects every suite.
std::set<Suite> parse_suite_list(const std::string& list);

struct SweepConfig {
    std::vector<double> c_list{-1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
    /// Used for c >= 0. For c < 0 it is used only when n_explicit is set,
    /// keeping the n with integer l = -n/c.
    std::vector<double> n_list{1.0, 2.0, 3.0, 5.0, 10.0, 25.0};
    bool n_explicit = false;
    /// Trial counts for c < 0 when n_explicit is false.
    std::vector<std::int64_t> l_list = default_trials();
    /// Points per domain including both ends.
    int x_points = 43;
    /// Right end of the grid when I_c is unbounded.
    double x_max = 5.0;
    std::set<Suite> suites = all_suites();
    int identities_max_n = 120;
    int legendre_max_n = 100;
    int quadrature_max_n = 200;
    /// Replaces every per-check tolerance when set.
    std::optional<double> tol_override;
    /// 0 selects std::thread::hardware_concurrency().
    int workers = 0;
    EvalConfig eval;

    static std::vector<std::int64_t> default_trials();

    void validate() const;
    /// Every admissible (n, c) member, ordered by c then n.
    [[nodiscard]] std::vector<FamilyParams> families() const;
    [[nodiscard]] int worker_count() const;
};

/// Overlay the keys present in a JSON document onto cfg. Recognized keys:
/// c, n, l, x_points, x_max, suites, max_n, legendre_max_n,
/// quadrature_max_n, tol, workers, eval{rel_tol, max_terms, deriv_step}.
void apply_json_config(SweepConfig& cfg, const std::string& json_text);

}  // namespace ioc::harness
