#pragma once

// Two binomial-sum identities that follow from comparing expansions of the
// index of coincidence, checked in exact arithmetic:
//
//   sum_{j=k}^{n} C(j,k) C(2j,j) C(2n-2j,n-j) = 4^{n-k} C(n,k) C(2k,k)
//   sum_{i=0}^{n-j} (-1/4)^i C(n-j,i) C(2i+2j,i+j)
//       = 4^{j-n} C(2j,j) C(2n-2j,n-j) / C(n,j)

#include <gmpxx.h>

#include "ioc/exact_rational.hpp"

namespace ioc {

inline constexpr int kIdentityMaxN = 500;

struct IdentityCheck {
    ExactRational lhs;
    ExactRational rhs;
    bool equal = false;
};

/// Exact C(n, k) for 0 <= k <= n <= 2 * kIdentityMaxN, zero for k outside
/// [0, n]. Rows are memoized on first use; safe to call concurrently.
mpz_class binomial_exact(int n, int k);

/// Requires 0 <= k <= n <= kIdentityMaxN.
IdentityCheck identity_one(int n, int k);

/// Requires 0 <= j <= n <= kIdentityMaxN.
IdentityCheck identity_two(int n, int j);

}  // namespace ioc
