#include "ioc/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "log_pmf.hpp"

namespace ioc {

namespace {

enum class Kind { Binomial, Poisson, NegativeBinomial };

enum class Site { Origin, FarEnd, Interior };

// Everything about (params, x) the term loops need, computed once per point.
struct PointState {
    Kind kind = Kind::Poisson;
    Site site = Site::Interior;
    double n = 0.0;
    double c = 0.0;
    double x = 0.0;
    double X = 0.0;   // x (1 + c x)
    double Xp = 1.0;  // 1 + 2 c x
    // Binomial: l trials with success probability u = -c x, v = 1 + c x.
    std::int64_t l = 0;
    double u = 0.0;
    double v = 1.0;
    // Poisson mean n x.
    double mean = 0.0;
    // Negative binomial: r = n / c, failure probability q = c x / (1 + c x),
    // prob = 1 / (1 + c x).
    double r = 0.0;
    double prob = 1.0;
    double q = 0.0;
};

// Below this X the termwise quotients lose all meaning; the analytic origin
// limit is exact to O(X) there.
constexpr double kTinyX = 1e-150;

PointState make_state(const FamilyParams& params, double x) {
    params.require_in_domain(x);
    PointState st;
    st.n = params.n();
    st.c = params.c();
    st.x = x;
    if (st.c < 0.0) {
        st.kind = Kind::Binomial;
        st.l = *params.trials();
        st.u = std::min(1.0, -st.c * x);
        st.v = std::max(0.0, 1.0 + st.c * x);
        st.X = x * st.v;
        st.Xp = st.v - st.u;
        if (st.v == 0.0 || st.u == 1.0) {
            st.site = Site::FarEnd;
            st.X = 0.0;
            return st;
        }
    } else if (st.c == 0.0) {
        st.kind = Kind::Poisson;
        st.mean = st.n * x;
        st.X = x;
        st.Xp = 1.0;
    } else {
        st.kind = Kind::NegativeBinomial;
        st.r = st.n / st.c;
        const double cx = st.c * x;
        st.prob = 1.0 / (1.0 + cx);
        st.q = cx / (1.0 + cx);
        st.X = x * (1.0 + cx);
        st.Xp = 1.0 + 2.0 * cx;
    }
    if (x == 0.0 || st.X < kTinyX) {
        st.site = Site::Origin;
        st.X = 0.0;
    }
    return st;
}

double log_term(const PointState& st, std::int64_t k) {
    const double kd = static_cast<double>(k);
    switch (st.kind) {
        case Kind::Binomial:
            if (k > st.l) return -std::numeric_limits<double>::infinity();
            return detail::log_binom_raw(kd, static_cast<double>(st.l), st.u, st.v);
        case Kind::Poisson:
            return detail::log_pois_raw(kd, st.mean);
        case Kind::NegativeBinomial:
            return detail::log_nbinom_raw(kd, st.r, st.prob, st.q);
    }
    return 0.0;
}

// k - n x. For the binomial the smaller of u, v is used so the difference
// keeps full relative precision near both ends of I_c.
double centered(const PointState& st, std::int64_t k) {
    const double kd = static_cast<double>(k);
    if (st.kind == Kind::Binomial) {
        const double l = static_cast<double>(st.l);
        return st.u <= 0.5 ? kd - l * st.u : (kd - l) + l * st.v;
    }
    return kd - st.n * st.x;
}

// X^2 p''/p = 2(k - nx)^2 - k(1 + 2cx) + n c x^2 - (k - nx)^2, so that
// X^2 (p^2)''/2 = p^2 * bracket with bracket = 2(k-nx)^2 - k(1+2cx) + n c x^2.
// The binomial form is written in whichever orientation avoids cancellation.
double curvature_bracket(const PointState& st, std::int64_t k, double d) {
    const double kd = static_cast<double>(k);
    if (st.kind == Kind::Binomial) {
        const double l = static_cast<double>(st.l);
        if (st.u <= 0.5) {
            return 2.0 * d * d - kd * st.Xp - l * st.u * st.u;
        }
        return 2.0 * d * d + (l - kd) * st.Xp - l * st.v * st.v;
    }
    return 2.0 * d * d - kd * st.Xp + st.n * st.c * st.x * st.x;
}

// Upper envelope of |bracket| with nonnegative coefficients in d = k - nx.
double bracket_envelope(const PointState& st, std::int64_t k, double d) {
    return 2.0 * d * d + static_cast<double>(k) * (1.0 + 2.0 * std::abs(st.c) * st.x) +
           st.n * std::abs(st.c) * st.x * st.x;
}

// sup_{j >= k} p_{j+1} / p_j for the infinite families.
double sup_ratio_from(const PointState& st, std::int64_t k) {
    const double kd = static_cast<double>(k);
    if (st.kind == Kind::Poisson) {
        return st.mean / (kd + 1.0);
    }
    // q (r + j) / (j + 1) is monotone in j with limit q.
    return std::max(st.q * (st.r + kd) / (kd + 1.0), st.q);
}

// sum_{i >= 1} s^i (1 + i b)^2.
double weighted_geometric_tail(double s, double b) {
    const double one_minus = 1.0 - s;
    return s / one_minus + 2.0 * b * s / (one_minus * one_minus) +
           b * b * s * (1.0 + s) / (one_minus * one_minus * one_minus);
}

[[noreturn]] void truncation_failure(const PointState& st, std::int64_t max_terms) {
    std::ostringstream os;
    os.precision(17);
    os << "series for (n=" << st.n << ", c=" << st.c << ") at x=" << st.x
       << " not certified within max_terms=" << max_terms;
    throw TruncationError(os.str());
}

struct CoincidenceSums {
    double s = 0.0;
    double d1 = 0.0;    // sum p^2 (k - nx)
    double d2 = 0.0;    // sum p^2 bracket
    double abs1 = 0.0;  // sum p^2 |k - nx|
    double abs2 = 0.0;  // sum p^2 |bracket|
    std::int64_t last = 0;
};

CoincidenceSums accumulate_coincidence(const PointState& st, const EvalConfig& cfg) {
    CoincidenceSums acc;
    const bool finite = st.kind == Kind::Binomial;
    for (std::int64_t k = 0;; ++k) {
        if (finite && k > st.l) {
            acc.last = st.l;
            return acc;
        }
        if (k >= cfg.max_terms) {
            truncation_failure(st, cfg.max_terms);
        }
        const double p = std::exp(log_term(st, k));
        const double p2 = p * p;
        const double d = centered(st, k);
        const double bracket = curvature_bracket(st, k, d);
        acc.s += p2;
        acc.d1 += p2 * d;
        acc.d2 += p2 * bracket;
        acc.abs1 += p2 * std::abs(d);
        acc.abs2 += p2 * std::abs(bracket);
        if (finite || d < 1.0) {
            continue;
        }
        const double rho = sup_ratio_from(st, k);
        const double s = rho * rho;
        if (!(s < 1.0)) {
            continue;
        }
        const double g = weighted_geometric_tail(s, 1.0 / d);
        const double tail_s = p2 * s / (1.0 - s);
        const double tail_1 = p2 * d * g;
        const double tail_2 = p2 * bracket_envelope(st, k, d) * g;
        if (tail_s <= cfg.rel_tol * acc.s && tail_1 <= cfg.rel_tol * acc.abs1 &&
            tail_2 <= cfg.rel_tol * acc.abs2) {
            acc.last = k;
            return acc;
        }
    }
}

IocTriple endpoint_triple(const PointState& st) {
    const double curvature = 6.0 * st.n * st.n + 2.0 * st.n * st.c;
    if (st.site == Site::Origin) {
        return {1.0, -2.0 * st.n, curvature};
    }
    return {1.0, 2.0 * st.n, curvature};
}

IocTriple triple_at(const PointState& st, const EvalConfig& cfg) {
    if (st.site != Site::Interior) {
        return endpoint_triple(st);
    }
    const CoincidenceSums acc = accumulate_coincidence(st, cfg);
    return {acc.s, 2.0 * acc.d1 / st.X, 2.0 * acc.d2 / (st.X * st.X)};
}

}  // namespace

double pmf_term(const FamilyParams& params, std::int64_t k, double x) {
    const PointState st = make_state(params, x);
    if (k < 0) {
        throw DomainError("pmf_term: k must be nonnegative");
    }
    if (st.site == Site::Origin && x == 0.0) {
        return k == 0 ? 1.0 : 0.0;
    }
    if (st.site == Site::FarEnd) {
        return k == st.l ? 1.0 : 0.0;
    }
    return std::exp(log_term(st, k));
}

double pmf_normalization(const FamilyParams& params, double x, const EvalConfig& cfg) {
    cfg.validate();
    const PointState st = make_state(params, x);
    if (x == 0.0 || st.site == Site::FarEnd) {
        return 1.0;
    }
    double sum = 0.0;
    if (st.kind == Kind::Binomial) {
        for (std::int64_t k = 0; k <= st.l; ++k) {
            sum += std::exp(log_term(st, k));
        }
        return sum;
    }
    for (std::int64_t k = 0; k < cfg.max_terms; ++k) {
        const double p = std::exp(log_term(st, k));
        sum += p;
        const double rho = sup_ratio_from(st, k);
        if (rho < 1.0 && p * rho / (1.0 - rho) <= cfg.rel_tol * sum) {
            return sum;
        }
    }
    truncation_failure(st, cfg.max_terms);
}

double index_of_coincidence(const FamilyParams& params, double x, const EvalConfig& cfg) {
    return ioc_triple(params, x, cfg).s;
}

IocTriple ioc_triple(const FamilyParams& params, double x, const EvalConfig& cfg) {
    cfg.validate();
    return triple_at(make_state(params, x), cfg);
}

double heun_residual(const FamilyParams& params, double x, const EvalConfig& cfg) {
    cfg.validate();
    const PointState st = make_state(params, x);
    const IocTriple tr = triple_at(st, cfg);
    const double term1 = st.X * st.Xp * tr.s2;
    const double term2 = (4.0 * (st.n + st.c) * st.X + 1.0) * tr.s1;
    const double term3 = 2.0 * st.n * st.Xp * tr.s;
    const double scale = std::max({std::abs(term1), std::abs(term2), std::abs(term3), 1.0});
    return (term1 + term2 + term3) / scale;
}

EntropyValues entropies(const FamilyParams& params, double x, const EvalConfig& cfg) {
    cfg.validate();
    const PointState st = make_state(params, x);
    if (st.site != Site::Interior) {
        return {};
    }
    const CoincidenceSums acc = accumulate_coincidence(st, cfg);
    // TODO: replace the 3K cutoff with a certified tail bound on -p log p.
    const std::int64_t stop = st.kind == Kind::Binomial ? st.l : 3 * std::max<std::int64_t>(acc.last, 1);
    double shannon = 0.0;
    for (std::int64_t k = 0; k <= stop; ++k) {
        const double lp = log_term(st, k);
        const double p = std::exp(lp);
        if (p > 0.0) {
            shannon -= p * lp;
        }
    }
    return {-std::log(acc.s), 1.0 - acc.s, shannon};
}

Reduction reduce_negative_c(const FamilyParams& params, double t) {
    if (!(params.c() < 0.0)) {
        throw ParameterError("reduce_negative_c: requires c < 0, got " + params.to_string());
    }
    params.require_in_domain(t);
    const double x = std::min(1.0, -params.c() * t);
    return {FamilyParams::from_trials(*params.trials(), -1.0), x};
}

}  // namespace ioc
