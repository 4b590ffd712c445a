#include "ioc/harness/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "ioc/bounds.hpp"
#include "ioc/distribution.hpp"
#include "ioc/harness/grid.hpp"

namespace ioc::harness {

namespace {

std::string cell(std::optional<double> v) {
    if (!v) return {};
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *v);
    return buf;
}

std::string sweep_row(const FamilyParams& p, double x, const EvalConfig& ev) {
    const IocTriple tr = ioc_triple(p, x, ev);
    const EntropyValues ent = entropies(p, x, ev);
    const double c = p.c();
    std::optional<double> tight, loose, poisson, lower44, upper44, lower_int;
    if (std::abs(c) < kPoissonRouting) {
        poisson = bound_poisson(p.n(), x);
    } else {
        const LogConvexBound lc = bound_logconvex(p, x);
        tight = lc.tight;
        loose = lc.loose;
    }
    if (c == -1.0) {
        const Bracket br = binom_ioc_bounds(*p.trials(), x);
        lower44 = br.lower;
        upper44 = br.upper;
        lower_int = binom_ioc_integral_lower(*p.trials(), x);
    }
    const std::optional<double> cells[] = {c,          p.n(),      x,        tr.s,     tr.s1,
                                           tr.s2,      ent.renyi2, ent.tsallis2, ent.shannon,
                                           bound_basic(p, x), tight, loose,   poisson,  lower44,
                                           upper44,    lower_int};
    std::string row;
    for (std::size_t i = 0; i < std::size(cells); ++i) {
        if (i) row += ',';
        row += cell(cells[i]);
    }
    return row;
}

}  // namespace

void write_sweep_csv(const SweepConfig& cfg, std::ostream& out) {
    cfg.validate();
    struct Point {
        FamilyParams params;
        double x;
    };
    std::vector<Point> points;
    for (const FamilyParams& p : cfg.families()) {
        for (double x : x_grid(p, cfg.x_points, cfg.x_max)) {
            points.push_back({p, x});
        }
    }
    const std::vector<std::string> rows = parallel_map<std::string>(
        points.size(), cfg.worker_count(),
        [&](std::size_t i) { return sweep_row(points[i].params, points[i].x, cfg.eval); });
    out << kSweepHeader << '\n';
    for (const auto& row : rows) {
        out << row << '\n';
    }
}

}  // namespace ioc::harness
