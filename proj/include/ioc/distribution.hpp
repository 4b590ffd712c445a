#pragma once

// The probability family p_{n,k}^{[c]}(x), its index of coincidence
// S_{n,c}(x) = sum_k p_{n,k}^{[c]}(x)^2 with the first two derivatives, the
// order-2 Renyi/Tsallis entropies and the Shannon entropy.
//
// Infinite series (c >= 0) are truncated only once a geometric tail bound,
// built from the supremum of the remaining term ratios, certifies the
// requested relative tolerance. All functions are pure.

#include <cstdint>

#include "ioc/family.hpp"

namespace ioc {

/// S, S' and S'' at one point.
struct IocTriple {
    double s = 1.0;
    double s1 = 0.0;
    double s2 = 0.0;
};

struct EntropyValues {
    double renyi2 = 0.0;
    double tsallis2 = 0.0;
    double shannon = 0.0;
};

/// Binomial member (n = l, c = -1) and the mapped point -c*t.
struct Reduction {
    FamilyParams params;
    double x;
};

/// p_{n,k}^{[c]}(x), evaluated in log space.
double pmf_term(const FamilyParams& params, std::int64_t k, double x);

/// Truncated sum_k p_{n,k}^{[c]}(x); finite for c < 0.
double pmf_normalization(const FamilyParams& params, double x, const EvalConfig& cfg = {});

double index_of_coincidence(const FamilyParams& params, double x, const EvalConfig& cfg = {});

/// Termwise derivatives use p' = p (k - n x) / X with X = x (1 + c x). The
/// endpoints x = 0 and x = -1/c return the analytic limits
/// S = 1, S' = -+2n, S'' = 6n^2 + 2nc.
IocTriple ioc_triple(const FamilyParams& params, double x, const EvalConfig& cfg = {});

/// Left side of x(1+cx)(1+2cx)S'' + (4(n+c)x(1+cx)+1)S' + 2n(1+2cx)S,
/// divided by max(|term1|, |term2|, |term3|, 1).
double heun_residual(const FamilyParams& params, double x, const EvalConfig& cfg = {});

/// Shannon entropy is summed to three times the index-of-coincidence cutoff.
EntropyValues entropies(const FamilyParams& params, double x, const EvalConfig& cfg = {});

/// S_{n,c}(t) = S_{l,-1}(-c t) for c < 0.
Reduction reduce_negative_c(const FamilyParams& params, double t);

}  // namespace ioc
