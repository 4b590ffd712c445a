#include <cmath>

#include "ioc/bounds.hpp"
#include "ioc/distribution.hpp"
#include "ioc/harness/sweep.hpp"

namespace ioc::harness {

nlohmann::json evaluate_point(const FamilyParams& params, double x, const EvalConfig& cfg) {
    const IocTriple tr = ioc_triple(params, x, cfg);
    const EntropyValues ent = entropies(params, x, cfg);
    const BoundReport report = make_bound_report(params, x, tr.s);

    nlohmann::json out;
    out["params"] = {{"n", params.n()}, {"c", params.c()}};
    if (params.trials()) {
        out["params"]["l"] = *params.trials();
    }
    out["x"] = x;
    out["S"] = tr.s;
    out["S1"] = tr.s1;
    out["S2"] = tr.s2;
    out["renyi2"] = ent.renyi2;
    out["tsallis2"] = ent.tsallis2;
    out["shannon"] = ent.shannon;
    out["heun_residual"] = heun_residual(params, x, cfg);
    out["ratio_bound"] = {{"log_derivative", tr.s1 / tr.s}, {"bound", ratio_bound(params, x)}};
    out["bounds"] = nlohmann::json::array();
    for (const BoundCheck& b : report.bounds) {
        out["bounds"].push_back({{"id", b.id},
                                 {"direction", b.direction == BoundDirection::Upper ? "upper" : "lower"},
                                 {"bound", b.bound},
                                 {"margin", b.margin}});
    }
    out["pass"] = report.pass;
    return out;
}

}  // namespace ioc::harness
