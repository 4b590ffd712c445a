#include "ioc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ioc/special_functions.hpp"

namespace ioc {

namespace {

bool poisson_like(double c) { return std::abs(c) < kPoissonRouting; }

void require_binomial_point(double x, double hi, const char* what) {
    if (!(x >= 0.0 && x <= hi)) {
        std::ostringstream os;
        os << what << ": x=" << x << " outside [0, " << hi << "]";
        throw DomainError(os.str());
    }
}

void require_degree(std::int64_t n, std::int64_t min, const char* what) {
    if (n < min) {
        std::ostringstream os;
        os << what << ": n=" << n << " must be at least " << min;
        throw ParameterError(os.str());
    }
}

double sqrt_t2_minus_1(double t) { return std::sqrt((t - 1.0) * (t + 1.0)); }

void require_legendre_arg(double t, const char* what) {
    if (!(t >= 1.0) || !std::isfinite(t)) {
        std::ostringstream os;
        os << what << ": t=" << t << " is below 1";
        throw DomainError(os.str());
    }
}

}  // namespace

BoundInputs BoundInputs::at(const FamilyParams& params, double t) {
    params.require_in_domain(t);
    const double n = params.n();
    const double c = params.c();
    BoundInputs in;
    const double one_plus_ct = std::max(0.0, 1.0 + c * t);
    in.X = t * one_plus_ct;
    in.Xp = 1.0 + 2.0 * c * t;
    in.T = in.X;
    in.rho = std::hypot(n, c);
    in.R = std::sqrt(16.0 * in.rho * in.rho * in.T * in.T + 8.0 * c * in.T + 1.0);
    return in;
}

double bound_basic(const FamilyParams& params, double t) {
    const BoundInputs in = BoundInputs::at(params, t);
    const double n = params.n();
    const double n_plus_c = n + params.c();
    if (std::abs(n_plus_c) <= 1e-12 * n) {
        return std::exp(-2.0 * n * in.X);
    }
    return std::exp(-n / (2.0 * n_plus_c) * std::log1p(4.0 * n_plus_c * in.X));
}

double ratio_bound(const FamilyParams& params, double x) {
    const BoundInputs in = BoundInputs::at(params, x);
    const double n = params.n();
    const double c = params.c();
    const double disc =
        std::sqrt(1.0 + 8.0 * c * in.X + 16.0 * in.rho * in.rho * in.X * in.X);
    return -4.0 * n * in.Xp / (disc + 1.0 + 4.0 * (n + c) * in.X);
}

LogConvexBound bound_logconvex(const FamilyParams& params, double t) {
    const double n = params.n();
    const double c = params.c();
    if (poisson_like(c)) {
        params.require_in_domain(t);
        return {bound_poisson(n, t), std::nullopt};
    }
    const BoundInputs in = BoundInputs::at(params, t);
    const double rho = in.rho;
    const double T = in.T;
    const double R = in.R;
    const double log_tight_sq = std::numbers::ln2 - std::log(1.0 + 4.0 * c * T + R) -
                                (n / c) * std::log(R + 4.0 * n * T) +
                                (rho / c) * std::log((rho * R + 4.0 * rho * rho * T + c) / (rho + c));
    LogConvexBound out;
    out.tight = std::exp(0.5 * log_tight_sq);
    if (c > 0.0) {
        const double log_loose_sq = -std::log1p(4.0 * c * T) - (n / c) * std::log1p(4.0 * (n + c) * T) +
                                    (rho / c) * std::log1p(8.0 * rho * T);
        out.loose = std::exp(0.5 * log_loose_sq);
    }
    return out;
}

AsymptoticExponent asymptotic_exponent(const FamilyParams& params) {
    const double n = params.n();
    const double c = params.c();
    if (!(c > 0.0)) {
        throw DomainError("asymptotic_exponent: requires c > 0, got " + params.to_string());
    }
    return {(std::hypot(n, c) - n - c) / c, -n / (n + c)};
}

double bound_poisson(double n, double t) {
    if (!(t >= 0.0)) {
        throw DomainError("bound_poisson: t must be nonnegative");
    }
    const double a = 4.0 * n * t;
    const double root = std::hypot(1.0, a);
    // sqrt(1 + a^2) - 1 - a, rationalized.
    const double exponent = -2.0 * a / (root + 1.0 + a);
    return std::exp(0.5 * (std::numbers::ln2 + exponent - std::log1p(root)));
}

double bound_bessel(double t) {
    if (!(t >= 0.0)) {
        throw DomainError("bound_bessel: t must be nonnegative");
    }
    const double root = std::hypot(1.0, 2.0 * t);
    const double exponent = 4.0 * t * t / (root + 1.0);
    return std::exp(0.5 * (std::numbers::ln2 + exponent - std::log1p(root)));
}

Bracket binom_ratio_bounds(std::int64_t n, double x) {
    require_degree(n, 1, "binom_ratio_bounds");
    require_binomial_point(x, 0.5, "binom_ratio_bounds");
    const double nd = static_cast<double>(n);
    const double X = x * (1.0 - x);
    const double Xp = 1.0 - 2.0 * x;
    return {-2.0 * nd * Xp / (1.0 + (nd - 3.0) * X),
            -2.0 * nd * (nd + 1.0) * Xp / (nd + 1.0 + (4.0 * nd * nd - 2.0 * nd - 4.0) * X)};
}

Bracket binom_ioc_bounds(std::int64_t n, double t) {
    require_degree(n, 1, "binom_ioc_bounds");
    require_binomial_point(t, 1.0, "binom_ioc_bounds");
    const double nd = static_cast<double>(n);
    const double T = t * (1.0 - t);
    Bracket out;
    if (n == 3) {
        out.lower = std::exp(-6.0 * T);
    } else {
        out.lower = std::exp(-2.0 * nd / (nd - 3.0) * std::log1p((nd - 3.0) * T));
    }
    const double denom = 2.0 * nd * nd - nd - 2.0;
    out.upper = std::exp(-nd * (nd + 1.0) / denom *
                         std::log1p((4.0 * nd * nd - 2.0 * nd - 4.0) * T / (nd + 1.0)));
    return out;
}

double binom_ioc_integral_lower(std::int64_t n, double t) {
    require_degree(n, 1, "binom_ioc_integral_lower");
    require_binomial_point(t, 1.0, "binom_ioc_integral_lower");
    const double T = std::min(0.25, t * (1.0 - t));
    if (T == 0.0) {
        return 2.0 / std::numbers::pi;
    }
    const double m = static_cast<double>(n) + 1.0;
    return -std::expm1(m * std::log1p(-4.0 * T)) / (2.0 * std::numbers::pi * m * T);
}

double ratio_bound_basic_binom(std::int64_t n, double x) {
    require_degree(n, 1, "ratio_bound_basic_binom");
    require_binomial_point(x, 0.5, "ratio_bound_basic_binom");
    const double nd = static_cast<double>(n);
    const double X = x * (1.0 - x);
    return -2.0 * nd * (1.0 - 2.0 * x) / (1.0 + 4.0 * (nd - 1.0) * X);
}

LegendreRatioBounds legendre_ratio_bounds(std::int64_t n, double t) {
    require_degree(n, 1, "legendre_ratio_bounds");
    require_legendre_arg(t, "legendre_ratio_bounds");
    const double nd = static_cast<double>(n);
    const double s = sqrt_t2_minus_1(t);
    return {nd * (nd + 1.0) / (2.0 * t + (nd - 1.0) * s),
            nd * nd * (2.0 * nd + 1.0) / ((nd + 1.0) * t + (2.0 * nd * nd - 1.0) * s),
            2.0 * nd * nd / (t + (2.0 * nd - 1.0) * s)};
}

LegendreValueBounds legendre_value_bounds(std::int64_t n, double t) {
    require_degree(n, 2, "legendre_value_bounds");
    require_legendre_arg(t, "legendre_value_bounds");
    const double nd = static_cast<double>(n);
    const double s = sqrt_t2_minus_1(t);
    const double log_base = std::log(t + s);
    const double weak = nd * (2.0 * nd - 1.0) / (2.0 * (nd - 1.0)) * log_base -
                        nd / (2.0 * (nd - 1.0)) * std::log(t + (2.0 * nd - 1.0) * s);
    const double denom = 2.0 * nd * nd - nd - 2.0;
    const double strong = nd * (2.0 * nd * nd - 1.0) / denom * log_base -
                          nd * (nd + 1.0) / denom *
                              std::log(t + (2.0 * nd * nd - 1.0) * s / (nd + 1.0));
    return {std::exp(strong), std::exp(weak)};
}

double legendre_ioc_link(std::int64_t n, double x, const EvalConfig& cfg) {
    require_degree(n, 1, "legendre_ioc_link");
    if (!(x > 0.0 && x < 0.5)) {
        std::ostringstream os;
        os << "legendre_ioc_link: x=" << x << " must lie in (0, 1/2)";
        throw DomainError(os.str());
    }
    const double nd = static_cast<double>(n);
    const double X = x * (1.0 - x);
    const double Xp = 1.0 - 2.0 * x;
    // 1 - 2X = x^2 + (1-x)^2 and 1 - 4X = X'^2.
    const double t = (x * x + (1.0 - x) * (1.0 - x)) / Xp;
    const LegendrePair pair = legendre_pair(n, t);
    const IocTriple tr = ioc_triple(FamilyParams::from_trials(n, -1.0), x, cfg);
    const double lhs = pair.dp / pair.p;
    const double rhs = nd * Xp / (2.0 * X) + Xp * Xp / (4.0 * X) * (tr.s1 / tr.s);
    return (lhs - rhs) / std::abs(lhs);
}

std::string to_string(UpperBoundId id) {
    switch (id) {
        case UpperBoundId::Basic: return "basic";
        case UpperBoundId::LogConvexTight: return "logconvex_tight";
        case UpperBoundId::LogConvexLoose: return "logconvex_loose";
        case UpperBoundId::Poisson: return "poisson";
        case UpperBoundId::BinomialUpper: return "binomial_upper";
    }
    return "unknown";
}

std::optional<UpperBoundId> parse_upper_bound_id(const std::string& name) {
    for (auto id : {UpperBoundId::Basic, UpperBoundId::LogConvexTight, UpperBoundId::LogConvexLoose,
                    UpperBoundId::Poisson, UpperBoundId::BinomialUpper}) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

std::optional<double> upper_bound_value(UpperBoundId id, const FamilyParams& params, double t) {
    const double c = params.c();
    switch (id) {
        case UpperBoundId::Basic:
            return bound_basic(params, t);
        case UpperBoundId::LogConvexTight:
            if (poisson_like(c)) return std::nullopt;
            return bound_logconvex(params, t).tight;
        case UpperBoundId::LogConvexLoose:
            if (poisson_like(c) || c < 0.0) return std::nullopt;
            return bound_logconvex(params, t).loose;
        case UpperBoundId::Poisson:
            if (!poisson_like(c)) return std::nullopt;
            params.require_in_domain(t);
            return bound_poisson(params.n(), t);
        case UpperBoundId::BinomialUpper: {
            if (!(c < 0.0)) return std::nullopt;
            const Reduction red = reduce_negative_c(params, t);
            return binom_ioc_bounds(*params.trials(), red.x).upper;
        }
    }
    return std::nullopt;
}

EntropyLowerBounds entropy_lower_bounds(const FamilyParams& params, double t, UpperBoundId id) {
    const std::optional<double> bound = upper_bound_value(id, params, t);
    if (!bound) {
        throw ParameterError("entropy_lower_bounds: bound '" + to_string(id) +
                             "' does not apply to " + params.to_string());
    }
    return {-std::log(*bound), 1.0 - *bound};
}

BoundReport make_bound_report(const FamilyParams& params, double x, double value) {
    BoundReport report;
    report.x = x;
    report.value = value;
    auto add = [&](std::string id, BoundDirection dir, double bound) {
        const double margin = dir == BoundDirection::Upper ? bound - value : value - bound;
        report.bounds.push_back({std::move(id), dir, bound, margin});
        if (margin < -kBoundReportSlack * std::max(1.0, std::abs(bound))) {
            report.pass = false;
        }
    };
    for (auto id : {UpperBoundId::Basic, UpperBoundId::LogConvexTight, UpperBoundId::LogConvexLoose,
                    UpperBoundId::Poisson, UpperBoundId::BinomialUpper}) {
        if (const auto b = upper_bound_value(id, params, x)) {
            add(to_string(id), BoundDirection::Upper, *b);
        }
    }
    if (params.c() < 0.0) {
        const Reduction red = reduce_negative_c(params, x);
        const std::int64_t l = *params.trials();
        add("binomial_lower", BoundDirection::Lower, binom_ioc_bounds(l, red.x).lower);
        add("integral_lower", BoundDirection::Lower, binom_ioc_integral_lower(l, red.x));
    }
    return report;
}

}  // namespace ioc
