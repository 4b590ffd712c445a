#pragma once

#include "ioc/harness/config.hpp"
#include "ioc/harness/report.hpp"

namespace ioc::harness {

/// Check tolerances. An inequality passes when its violation is at most
/// max(tol * |bound|, kAbsoluteFloor); residual margins are the negated
/// absolute residual.
namespace tolerance {
inline constexpr double kAbsoluteFloor = 1e-14;
inline constexpr double kInequality = 1e-10;
inline constexpr double kRatio = 1e-10;
inline constexpr double kConvexity = 1e-10;
inline constexpr double kMonotone = 1e-10;
inline constexpr double kHeun = 1e-8;
inline constexpr double kFiniteDifference = 1e-6;
inline constexpr double kEntropyBound = 1e-9;
inline constexpr double kConcavity = 1e-8;
inline constexpr double kQuadrature = 1e-11;
inline constexpr double kBesselIdentity = 1e-10;
inline constexpr double kLegendreLink = 1e-8;
inline constexpr double kBonnet = 1e-10;
/// Strict inequality: the margin itself must reach 1e-12.
inline constexpr double kStrictExponent = -1e-12;
}  // namespace tolerance

/// Runs the selected suites over the configured grid. Evaluation failures
/// become failing "evaluation_error" records; the sweep is never aborted.
/// Output is independent of the worker count.
SuiteReport run_verify(const SweepConfig& cfg);

}  // namespace ioc::harness
