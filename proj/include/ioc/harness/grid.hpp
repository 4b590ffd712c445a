#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ioc/family.hpp"

namespace ioc::harness {

/// Uniform grid on [0, L] with `points` nodes including both ends, where L is
/// -1/c for c < 0 and x_max otherwise. Interior nodes are kept at least
/// 1e-6 * L away from the ends, which are evaluated by their analytic limits.
std::vector<double> x_grid(const FamilyParams& params, int points, double x_max);

/// Uniform grid on [lo, hi] with `points` nodes including both ends.
std::vector<double> linspace(double lo, double hi, int points);

/// Runs task(i) for i in [0, count) on `workers` threads. Results come back in
/// index order regardless of scheduling.
template <class Result>
std::vector<Result> parallel_map(std::size_t count, int workers,
                                 const std::function<Result(std::size_t)>& task);

}  // namespace ioc::harness

#include "ioc/harness/grid_impl.hpp"
