#pragma once

// Closed-form bounds on the index of coincidence S_{n,c}, on the logarithmic
// derivative S'/S, on Legendre polynomials, and on I_0; plus the conversion
// of an upper bound on S into lower bounds on the order-2 entropies.
//
// Every bound is evaluated as a sum of logarithms and exponentiated once, so
// exponents such as rho / c stay finite for small |c|. Values of |c| below
// kPoissonRouting use the c = 0 formulas.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ioc/distribution.hpp"
#include "ioc/family.hpp"

namespace ioc {

inline constexpr double kPoissonRouting = 1e-8;

/// Auxiliary quantities at t: X = x(1+cx), X' = 1+2cx, T = t+ct^2 (= X),
/// rho = sqrt(n^2+c^2), R = sqrt(16 rho^2 T^2 + 8cT + 1).
struct BoundInputs {
    double X = 0.0;
    double Xp = 1.0;
    double T = 0.0;
    double rho = 0.0;
    double R = 1.0;

    static BoundInputs at(const FamilyParams& params, double t);
};

/// (4(n+c)X + 1)^{-n/(2(n+c))}; the n + c = 0 member is its limit e^{-2nX}.
double bound_basic(const FamilyParams& params, double t);

/// Upper bound on S'/S from log-convexity combined with the Heun equation,
/// written as -4n X' / (sqrt(1 + 8cX + 16 rho^2 X^2) + 1 + 4(n+c)X), which
/// is finite at X = 0 (value -2n) and X' = 0 (value 0). For c < 0 the
/// inequality holds as stated on [0, -1/(2c)] and reverses on the mirrored
/// half, since both S'/S and this expression are odd about the midpoint.
double ratio_bound(const FamilyParams& params, double x);

struct LogConvexBound {
    double tight = 1.0;
    std::optional<double> loose;  // only for c > 0
};

/// Square roots of the two-tier bound on S^2 obtained by integrating the
/// ratio bound. For c < 0 only the tight expression is available. |c| below
/// kPoissonRouting returns bound_poisson as the tight member.
LogConvexBound bound_logconvex(const FamilyParams& params, double t);

struct AsymptoticExponent {
    double gamma = 0.0;     // (rho - n - c) / c, the decay rate of the tight bound
    double baseline = 0.0;  // -n / (n + c), the decay rate of bound_basic
};

/// Requires c > 0.
AsymptoticExponent asymptotic_exponent(const FamilyParams& params);

/// sqrt(2 exp(sqrt(1+16n^2t^2) - 1 - 4nt) / (1 + sqrt(1+16n^2t^2))).
double bound_poisson(double n, double t);

/// sqrt(2 exp(sqrt(1+4t^2) - 1) / (sqrt(1+4t^2) + 1)) >= I_0(t).
double bound_bessel(double t);

struct Bracket {
    double lower = 0.0;
    double upper = 0.0;
};

/// Two-sided bound on S'_{n,-1}/S_{n,-1} on [0, 1/2].
Bracket binom_ratio_bounds(std::int64_t n, double x);

/// Two-sided bound on S_{n,-1}(t), t in [0, 1]. For n = 3 the lower member is
/// e^{-6T}.
Bracket binom_ioc_bounds(std::int64_t n, double t);

/// (1 - (1 - 4T)^{n+1}) / (2 pi (n+1) T) <= S_{n,-1}(t); 2/pi at T = 0.
double binom_ioc_integral_lower(std::int64_t n, double t);

/// -2n X' / (1 + 4(n-1)X), the ratio inequality behind bound_basic at c = -1.
double ratio_bound_basic_binom(std::int64_t n, double x);

struct LegendreRatioBounds {
    double lower = 0.0;
    double upper_sharp = 0.0;   // n^2(2n+1) / ((n+1)t + (2n^2-1) sqrt(t^2-1))
    double upper_coarse = 0.0;  // 2n^2 / (t + (2n-1) sqrt(t^2-1))
};

LegendreRatioBounds legendre_ratio_bounds(std::int64_t n, double t);

struct LegendreValueBounds {
    double strong = 1.0;
    double weak = 1.0;
};

/// Upper bounds on P_n(t) for n >= 2, t >= 1.
LegendreValueBounds legendre_value_bounds(std::int64_t n, double t);

/// Relative residual of the identity linking P_n'/P_n at t = (1-2X)/X' to
/// S'_{n,-1}/S_{n,-1} at x, for x in (0, 1/2).
double legendre_ioc_link(std::int64_t n, double x, const EvalConfig& cfg = {});

enum class UpperBoundId { Basic, LogConvexTight, LogConvexLoose, Poisson, BinomialUpper };

std::string to_string(UpperBoundId id);
std::optional<UpperBoundId> parse_upper_bound_id(const std::string& name);

/// Value of the named upper bound on S at t, or nullopt when it does not
/// apply to these parameters. The binomial bound applies to every c < 0
/// through S_{n,c}(t) = S_{l,-1}(-ct).
std::optional<double> upper_bound_value(UpperBoundId id, const FamilyParams& params, double t);

struct EntropyLowerBounds {
    double renyi = 0.0;
    double tsallis = 0.0;
};

/// Throws ParameterError when the bound does not apply to params.
EntropyLowerBounds entropy_lower_bounds(const FamilyParams& params, double t, UpperBoundId id);

enum class BoundDirection { Upper, Lower };

struct BoundCheck {
    std::string id;
    BoundDirection direction = BoundDirection::Upper;
    double bound = 0.0;
    double margin = 0.0;  // bound - value for upper bounds, value - bound for lower
};

struct BoundReport {
    double x = 0.0;
    double value = 0.0;
    std::vector<BoundCheck> bounds;
    bool pass = true;
};

/// Margin slack used by BoundReport::pass.
inline constexpr double kBoundReportSlack = 1e-10;

/// Every bound on S that applies at (params, x), against value = S(x).
BoundReport make_bound_report(const FamilyParams& params, double x, double value);

}  // namespace ioc
