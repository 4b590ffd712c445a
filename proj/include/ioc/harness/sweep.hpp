#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "ioc/family.hpp"
#include "ioc/harness/config.hpp"

namespace ioc::harness {

inline constexpr const char* kSweepHeader =
    "c,n,x,S,S1,S2,renyi2,tsallis2,shannon,bound_basic,bound_tight,bound_loose,bound_poisson,"
    "lower_44,upper_44,lower_int";

/// One CSV row per grid point of every family in cfg, values with 17
/// significant digits, inapplicable cells empty.
void write_sweep_csv(const SweepConfig& cfg, std::ostream& out);

/// Values, derivatives, entropies, Heun residual and every applicable bound
/// with its margin at one point.
nlohmann::json evaluate_point(const FamilyParams& params, double x, const EvalConfig& cfg = {});

}  // namespace ioc::harness
