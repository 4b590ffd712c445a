#include "ioc/harness/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "ioc/bounds.hpp"
#include "ioc/distribution.hpp"
#include "ioc/harness/grid.hpp"
#include "ioc/identities.hpp"
#include "ioc/special_functions.hpp"

namespace ioc::harness {

namespace {

using Records = std::vector<CheckRecord>;

struct Task {
    std::string suite;  // reported when the task throws
    double c;
    double n;
    double x;
    std::function<Records()> run;
};

// Suites evaluated over the (c, n, x) grid.
bool is_grid_suite(Suite s) {
    return s == Suite::Normalization || s == Suite::Convexity || s == Suite::LogConvexity ||
           s == Suite::Ode || s == Suite::Bounds || s == Suite::Entropy;
}

double rel_scale(double v) { return std::max(1.0, std::abs(v)); }

// Margin divisor for an inequality against `bound`: relative, except that
// violations up to tolerance::kAbsoluteFloor are accepted when tol > 0.
double bound_scale(double bound, double tol) {
    const double floor = tol > 0.0 ? tolerance::kAbsoluteFloor / tol : std::numeric_limits<double>::min();
    return std::max(std::abs(bound), floor);
}

// Collects records for one (suite, c, n, x) coordinate.
class Recorder {
public:
    Recorder(Records& out, std::string suite, double c, double n, double x)
        : out_(out), suite_(std::move(suite)), c_(c), n_(n), x_(x) {}

    void upper(const std::string& check, double value, double bound, double tol) {
        out_.push_back(make_record(suite_, check, c_, n_, x_, value, bound,
                                   (bound - value) / bound_scale(bound, tol), tol));
    }
    void lower(const std::string& check, double value, double bound, double tol) {
        out_.push_back(make_record(suite_, check, c_, n_, x_, value, bound,
                                   (value - bound) / bound_scale(bound, tol), tol));
    }
    void residual(const std::string& check, double observed, double target, double residual,
                  double tol) {
        out_.push_back(
            make_record(suite_, check, c_, n_, x_, observed, target, -std::abs(residual), tol));
    }
    void margin(const std::string& check, double observed, double target, double margin, double tol) {
        out_.push_back(make_record(suite_, check, c_, n_, x_, observed, target, margin, tol));
    }
    Recorder at(double x) const { return Recorder(out_, suite_, c_, n_, x); }

private:
    Records& out_;
    std::string suite_;
    double c_;
    double n_;
    double x_;
};

// Finite-difference derivative of f at x staying inside [0, hi].
double fd_derivative(const std::function<double(double)>& f, double x, double h, double hi) {
    if (x - h >= 0.0 && x + h <= hi) {
        return (f(x + h) - f(x - h)) / (2.0 * h);
    }
    if (x - h < 0.0) {
        return (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h);
    }
    return (3.0 * f(x) - 4.0 * f(x - h) + f(x - 2.0 * h)) / (2.0 * h);
}

class Battery {
public:
    explicit Battery(const SweepConfig& cfg) : cfg_(cfg) {}

    std::vector<Task> build() {
        const bool per_family =
            std::any_of(cfg_.suites.begin(), cfg_.suites.end(), [](Suite s) { return is_grid_suite(s); });
        for (const FamilyParams& p : per_family ? cfg_.families() : std::vector<FamilyParams>{}) {
            const std::vector<double> grid = x_grid(p, cfg_.x_points, cfg_.x_max);
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double x = grid[i];
                tasks_.push_back({"evaluation", p.c(), p.n(), x, [this, p, x] { return point_checks(p, x); }});
            }
            tasks_.push_back({"evaluation", p.c(), p.n(), kNoValue,
                              [this, p, grid] { return family_checks(p, grid); }});
        }
        if (enabled(Suite::Normalization)) add_oracle_tasks();
        if (enabled(Suite::Bessel)) add_bessel_tasks();
        if (enabled(Suite::Legendre)) add_legendre_tasks();
        if (enabled(Suite::Identities)) add_identity_tasks();
        return std::move(tasks_);
    }

private:
    bool enabled(Suite s) const { return cfg_.suites.count(s) != 0; }

    Recorder rec(Records& out, Suite s, const FamilyParams& p, double x) const {
        return Recorder(out, to_string(s), p.c(), p.n(), x);
    }

    Records point_checks(const FamilyParams& p, double x) const {
        Records out;
        const EvalConfig& ev = cfg_.eval;
        const IocTriple tr = ioc_triple(p, x, ev);
        const double c = p.c();
        const double upper = p.domain().bounded() ? p.domain().upper : cfg_.x_max;
        const double half = 0.5 * upper;

        if (enabled(Suite::Normalization)) {
            Recorder r = rec(out, Suite::Normalization, p, x);
            const double total = pmf_normalization(p, x, ev);
            r.residual("pmf_sum", total, 1.0, total - 1.0, 10.0 * ev.rel_tol);
            r.margin("s_unit_interval", tr.s, 1.0, tr.s > 0.0 ? 1.0 - tr.s : -1.0, 1e-14);
            if (x == 0.0) {
                r.residual("origin_value", tr.s, 1.0, tr.s - 1.0, 0.0);
            }
            if (c < 0.0) {
                const double mirrored = index_of_coincidence(p, std::max(0.0, upper - x), ev);
                r.residual("symmetry", tr.s, mirrored, tr.s - mirrored, 4.0 * ev.rel_tol);
                const Reduction red = reduce_negative_c(p, x);
                if (c != -1.0) {
                    const double reduced = index_of_coincidence(red.params, red.x, ev);
                    r.residual("reduction", tr.s, reduced, (tr.s - reduced) / reduced, 2.0 * ev.rel_tol);
                }
                if (*p.trials() <= 10'000) {
                    const double quad = ioc_binomial_quadrature(*p.trials(), red.x);
                    r.residual("quadrature", tr.s, quad, (tr.s - quad) / quad, tolerance::kQuadrature);
                }
            }
        }

        if (enabled(Suite::Convexity)) {
            Recorder r = rec(out, Suite::Convexity, p, x);
            r.margin("convex", tr.s2, 0.0, tr.s2, tolerance::kConvexity);
            if (c >= 0.0) {
                r.margin("nonincreasing", tr.s1, 0.0, -tr.s1, tolerance::kMonotone);
            }
            const double h = ev.deriv_step;
            const double hi = p.domain().bounded() ? upper : std::numeric_limits<double>::infinity();
            auto s_at = [&](double z) { return index_of_coincidence(p, z, ev); };
            auto s1_at = [&](double z) { return ioc_triple(p, z, ev).s1; };
            const double fd1 = fd_derivative(s_at, x, h, hi);
            r.residual("fd_first", tr.s1, fd1, (tr.s1 - fd1) / rel_scale(tr.s1),
                       tolerance::kFiniteDifference);
            const double fd2 = fd_derivative(s1_at, x, h, hi);
            r.residual("fd_second", tr.s2, fd2, (tr.s2 - fd2) / rel_scale(tr.s2),
                       tolerance::kFiniteDifference);
            if (c >= 0.0 && x >= 0.1 && x <= 5.0) {
                auto s2_at = [&](double z) { return ioc_triple(p, z, ev).s2; };
                const double d3 = (s2_at(x + h) - s2_at(x - h)) / (2.0 * h);
                const double h4 = 100.0 * h;
                const double d4 = (s2_at(x + h4) - 2.0 * tr.s2 + s2_at(x - h4)) / (h4 * h4);
                r.margin("completely_monotone_3", d3, 0.0, -d3 / rel_scale(d3),
                         tolerance::kFiniteDifference);
                r.margin("completely_monotone_4", d4, 0.0, d4 / rel_scale(d4),
                         tolerance::kFiniteDifference);
            }
        }

        if (enabled(Suite::LogConvexity)) {
            Recorder r = rec(out, Suite::LogConvexity, p, x);
            const double det = tr.s * tr.s2 - tr.s1 * tr.s1;
            r.margin("log_convex", det, 0.0, det / std::max(1.0, tr.s1 * tr.s1), tolerance::kConvexity);
        }

        if (enabled(Suite::Ode)) {
            Recorder r = rec(out, Suite::Ode, p, x);
            const double res = heun_residual(p, x, ev);
            r.residual("heun", res, 0.0, res, tolerance::kHeun);
        }

        if (enabled(Suite::Bounds)) {
            Recorder r = rec(out, Suite::Bounds, p, x);
            const BoundReport report = make_bound_report(p, x, tr.s);
            for (const BoundCheck& b : report.bounds) {
                if (b.direction == BoundDirection::Upper) {
                    r.upper(b.id, tr.s, b.bound, tolerance::kInequality);
                } else {
                    r.lower(b.id, tr.s, b.bound, tolerance::kInequality);
                }
            }
            const double basic = bound_basic(p, x);
            if (std::abs(c) < kPoissonRouting) {
                r.upper("order_poisson_le_basic", bound_poisson(p.n(), x), basic, tolerance::kInequality);
            } else {
                const LogConvexBound lc = bound_logconvex(p, x);
                r.upper("order_tight_le_basic", lc.tight, basic, tolerance::kInequality);
                if (lc.loose) {
                    r.upper("order_tight_le_loose", lc.tight, *lc.loose, tolerance::kInequality);
                }
            }
            if (c < 0.0) {
                const double binom_upper = *upper_bound_value(UpperBoundId::BinomialUpper, p, x);
                r.upper("order_binomial_upper_le_basic", binom_upper, basic, tolerance::kInequality);
            }

            const double log_deriv = tr.s1 / tr.s;
            const double rb = ratio_bound(p, x);
            if (c < 0.0 && x > half) {
                r.lower("ratio_logconvex_mirrored", log_deriv, rb, tolerance::kRatio);
            } else {
                r.upper("ratio_logconvex", log_deriv, rb, tolerance::kRatio);
            }
            if (c < 0.0) {
                const Reduction red = reduce_negative_c(p, x);
                if (red.x <= 0.5) {
                    const std::int64_t l = *p.trials();
                    const IocTriple bt = ioc_triple(red.params, red.x, ev);
                    const double ratio = bt.s1 / bt.s;
                    const Bracket br = binom_ratio_bounds(l, red.x);
                    const double basic_ratio = ratio_bound_basic_binom(l, red.x);
                    r.lower("binom_ratio_lower", ratio, br.lower, tolerance::kRatio);
                    r.upper("binom_ratio_upper", ratio, br.upper, tolerance::kRatio);
                    r.upper("binom_ratio_basic", ratio, basic_ratio, tolerance::kRatio);
                    r.upper("order_binom_ratio_upper_le_basic", br.upper, basic_ratio, tolerance::kRatio);
                }
            }
        }

        if (enabled(Suite::Entropy)) {
            Recorder r = rec(out, Suite::Entropy, p, x);
            const EntropyValues ent = entropies(p, x, ev);
            for (auto id : {UpperBoundId::Basic, UpperBoundId::LogConvexTight, UpperBoundId::LogConvexLoose,
                            UpperBoundId::Poisson, UpperBoundId::BinomialUpper}) {
                if (!upper_bound_value(id, p, x)) continue;
                const EntropyLowerBounds lb = entropy_lower_bounds(p, x, id);
                r.margin("renyi_lower_" + to_string(id), ent.renyi2, lb.renyi, ent.renyi2 - lb.renyi,
                         tolerance::kEntropyBound);
                r.margin("tsallis_lower_" + to_string(id), ent.tsallis2, lb.tsallis,
                         ent.tsallis2 - lb.tsallis, tolerance::kEntropyBound);
            }
            r.margin("shannon_ge_renyi2", ent.shannon, ent.renyi2, ent.shannon - ent.renyi2,
                     tolerance::kInequality);
        }
        return out;
    }

    Records family_checks(const FamilyParams& p, const std::vector<double>& grid) const {
        Records out;
        const double c = p.c();
        if (enabled(Suite::Entropy)) {
            std::vector<EntropyValues> ent;
            ent.reserve(grid.size());
            for (double x : grid) {
                ent.push_back(entropies(p, x, cfg_.eval));
            }
            // The clamped interior keeps the grid uniform to within 1e-6 of its
            // step, far below the second-difference tolerance.
            Recorder r = rec(out, Suite::Entropy, p, kNoValue);
            for (std::size_t i = 1; i < grid.size(); ++i) {
                Recorder ri = r.at(grid[i]);
                if (c >= 0.0) {
                    const double d = ent[i].renyi2 - ent[i - 1].renyi2;
                    ri.margin("renyi_increasing", d, 0.0, d, tolerance::kMonotone);
                }
                if (i + 1 < grid.size()) {
                    const double d2r = ent[i + 1].renyi2 - 2.0 * ent[i].renyi2 + ent[i - 1].renyi2;
                    const double d2t = ent[i + 1].tsallis2 - 2.0 * ent[i].tsallis2 + ent[i - 1].tsallis2;
                    if (c >= 0.0) {
                        ri.margin("renyi_concave", d2r, 0.0, -d2r, tolerance::kConcavity);
                    }
                    ri.margin("tsallis_concave", d2t, 0.0, -d2t, tolerance::kConcavity);
                }
            }
        }
        if (enabled(Suite::Bounds) && c >= kPoissonRouting) {
            Recorder r = rec(out, Suite::Bounds, p, kNoValue);
            const AsymptoticExponent ae = asymptotic_exponent(p);
            r.margin("exponent_below_baseline", ae.gamma, ae.baseline, ae.baseline - ae.gamma,
                     tolerance::kStrictExponent);
            auto scaled = [&](double t) { return bound_logconvex(p, t).tight / std::pow(t, ae.gamma); };
            const double ref = scaled(1e2);
            for (double t : {1e3, 1e4}) {
                const double v = scaled(t);
                r.at(t).margin("tight_decay_rate", v, 2.0 * ref, (2.0 * ref - v) / (2.0 * ref), 0.0);
            }
        }
        return out;
    }

    void add_oracle_tasks() {
        const std::vector<double> ts = linspace(0.0, 1.0, 21);
        for (int l = 1; l <= cfg_.quadrature_max_n; ++l) {
            tasks_.push_back({"normalization", -1.0, double(l), kNoValue, [this, l, ts] {
                                  Records out;
                                  const FamilyParams p = FamilyParams::from_trials(l, -1.0);
                                  for (double t : ts) {
                                      const double s = index_of_coincidence(p, t, cfg_.eval);
                                      const double q = ioc_binomial_quadrature(l, t);
                                      Recorder(out, "normalization", -1.0, l, t)
                                          .residual("quadrature_oracle", s, q, (s - q) / q,
                                                    tolerance::kQuadrature);
                                  }
                                  return out;
                              }});
        }
        for (double c : {-0.5, -2.0}) {
            for (std::int64_t l : cfg_.l_list) {
                if (l < 1) continue;
                tasks_.push_back({"normalization", c, -c * double(l), kNoValue, [this, c, l] {
                                      Records out;
                                      const FamilyParams p = FamilyParams::from_trials(l, c);
                                      for (double t : linspace(0.0, -1.0 / c, 21)) {
                                          const double s = index_of_coincidence(p, t, cfg_.eval);
                                          const Reduction red = reduce_negative_c(p, t);
                                          const double s_red =
                                              index_of_coincidence(red.params, red.x, cfg_.eval);
                                          Recorder(out, "normalization", c, p.n(), t)
                                              .residual("reduction_oracle", s, s_red, (s - s_red) / s_red,
                                                        2.0 * cfg_.eval.rel_tol);
                                      }
                                      return out;
                                  }});
            }
        }
    }

    void add_bessel_tasks() {
        tasks_.push_back({"bessel", kNoValue, kNoValue, kNoValue, [] {
                              Records out;
                              for (double t : linspace(0.0, 10.0, 101)) {
                                  const double i0 = bessel_i0(t);
                                  const double b = bound_bessel(t);
                                  Recorder r(out, "bessel", kNoValue, kNoValue, t);
                                  r.upper("bessel_bound", i0, b, tolerance::kInequality);
                                  const double ratio = b / i0;
                                  r.margin("bessel_bound_ratio", ratio, 1.0, std::min(ratio - 1.0, 3.0 - ratio),
                                           tolerance::kInequality);
                              }
                              return out;
                          }});
        for (double n : {1.0, 2.0, 5.0}) {
            tasks_.push_back({"bessel", 0.0, n, kNoValue, [this, n] {
                                  Records out;
                                  const FamilyParams p(n, 0.0);
                                  for (double x : linspace(0.0, 10.0, 41)) {
                                      const double s = index_of_coincidence(p, x, cfg_.eval);
                                      const double lhs = std::exp(2.0 * n * x + std::log(s));
                                      const double i0 = bessel_i0(2.0 * n * x);
                                      Recorder(out, "bessel", 0.0, n, x)
                                          .residual("bessel_identity", lhs, i0, (lhs - i0) / i0,
                                                    tolerance::kBesselIdentity);
                                  }
                                  return out;
                              }});
        }
    }

    void add_legendre_tasks() {
        const std::vector<double> ts = linspace(1.0, 10.0, 41);
        for (int n = 1; n <= cfg_.legendre_max_n; ++n) {
            tasks_.push_back({"legendre", kNoValue, double(n), kNoValue, [n, ts] {
                                  Records out;
                                  for (double t : ts) {
                                      Recorder r(out, "legendre", kNoValue, n, t);
                                      const LegendrePair lp = legendre_pair(n, t);
                                      const double ratio = lp.dp / lp.p;
                                      const LegendreRatioBounds rb = legendre_ratio_bounds(n, t);
                                      r.lower("legendre_ratio_lower", ratio, rb.lower, tolerance::kInequality);
                                      r.upper("legendre_ratio_upper_sharp", ratio, rb.upper_sharp,
                                              tolerance::kInequality);
                                      r.upper("legendre_ratio_upper_coarse", ratio, rb.upper_coarse,
                                              tolerance::kInequality);
                                      r.upper("order_legendre_sharp_le_coarse", rb.upper_sharp,
                                              rb.upper_coarse, tolerance::kInequality);
                                      if (n >= 2) {
                                          const LegendreValueBounds vb = legendre_value_bounds(n, t);
                                          // Relative to the bound itself: P_n grows like (2t)^n.
                                          r.margin("legendre_value_strong", lp.p, vb.strong,
                                                   (vb.strong - lp.p) / vb.strong, tolerance::kInequality);
                                          r.margin("legendre_value_weak", lp.p, vb.weak,
                                                   (vb.weak - lp.p) / vb.weak, tolerance::kInequality);
                                          r.margin("order_legendre_strong_le_weak", vb.strong, vb.weak,
                                                   (vb.weak - vb.strong) / vb.weak, tolerance::kInequality);
                                      }
                                      const double p_prev = legendre_pair(n - 1, t).p;
                                      const double lhs = (t - 1.0) * (t + 1.0) * lp.dp;
                                      const double rhs = n * (t * lp.p - p_prev);
                                      const double scale = std::max(
                                          {1.0, std::abs(lhs), n * t * std::abs(lp.p), n * std::abs(p_prev)});
                                      r.residual("bonnet_derivative", lhs, rhs, (lhs - rhs) / scale,
                                                 tolerance::kBonnet);
                                  }
                                  return out;
                              }});
        }
        for (std::int64_t l : cfg_.l_list) {
            if (l < 1) continue;
            tasks_.push_back({"legendre", -1.0, double(l), kNoValue, [this, l] {
                                  Records out;
                                  const FamilyParams p = FamilyParams::from_trials(l, -1.0);
                                  for (double x : x_grid(p, cfg_.x_points, cfg_.x_max)) {
                                      if (!(x > 0.0 && x < 0.5)) continue;
                                      const double res = legendre_ioc_link(l, x, cfg_.eval);
                                      Recorder(out, "legendre", -1.0, double(l), x)
                                          .residual("legendre_ioc_link", res, 0.0, res, tolerance::kLegendreLink);
                                  }
                                  return out;
                              }});
        }
    }

    void add_identity_tasks() {
        for (int n = 0; n <= cfg_.identities_max_n; ++n) {
            tasks_.push_back({"identities", kNoValue, double(n), kNoValue, [n] {
                                  Records out;
                                  for (int k = 0; k <= n; ++k) {
                                      Recorder r(out, "identities", kNoValue, n, k);
                                      const IdentityCheck one = identity_one(n, k);
                                      r.margin("identity_one", one.lhs.to_double(), one.rhs.to_double(),
                                               one.equal ? 0.0 : -1.0, 0.0);
                                      const IdentityCheck two = identity_two(n, k);
                                      r.margin("identity_two", two.lhs.to_double(), two.rhs.to_double(),
                                               two.equal ? 0.0 : -1.0, 0.0);
                                  }
                                  return out;
                              }});
        }
    }

    const SweepConfig& cfg_;
    std::vector<Task> tasks_;
};

}  // namespace

SuiteReport run_verify(const SweepConfig& cfg) {
    cfg.validate();
    Battery battery(cfg);
    const std::vector<Task> tasks = battery.build();
    std::vector<Records> chunks = parallel_map<Records>(tasks.size(), cfg.worker_count(), [&](std::size_t i) {
        const Task& task = tasks[i];
        try {
            return task.run();
        } catch (const std::exception& e) {
            CheckRecord r = make_record(task.suite, "evaluation_error", task.c, task.n, task.x, kNoValue,
                                        kNoValue, kNoValue, 0.0);
            r.detail = e.what();
            return Records{r};
        }
    });
    Records all;
    for (auto& chunk : chunks) {
        for (auto& r : chunk) {
            if (cfg.tol_override) {
                r.tol = *cfg.tol_override;
                r.pass = !std::isnan(r.margin) && r.margin >= -r.tol;
            }
            all.push_back(std::move(r));
        }
    }
    return SuiteReport(std::move(all));
}

}  // namespace ioc::harness
