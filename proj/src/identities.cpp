#include "ioc/identities.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <vector>

#include "ioc/family.hpp"

namespace ioc {

namespace {

constexpr int kMaxRow = 2 * kIdentityMaxN;

using Row = std::vector<mpz_class>;

// Pascal rows built by C(n, k+1) = C(n, k) (n - k) / (k + 1), each division
// exact. A row is immutable once published.
class BinomialTable {
public:
    const Row& row(int n) {
        {
            std::shared_lock lock(mutex_);
            if (rows_[n]) {
                return *rows_[n];
            }
        }
        auto built = std::make_unique<Row>(static_cast<std::size_t>(n) + 1);
        (*built)[0] = 1;
        for (int k = 0; k < n; ++k) {
            (*built)[k + 1] = (*built)[k] * (n - k);
            mpz_divexact_ui((*built)[k + 1].get_mpz_t(), (*built)[k + 1].get_mpz_t(),
                            static_cast<unsigned long>(k + 1));
        }
        std::unique_lock lock(mutex_);
        if (!rows_[n]) {
            rows_[n] = std::move(built);
        }
        return *rows_[n];
    }

private:
    std::shared_mutex mutex_;
    std::vector<std::unique_ptr<Row>> rows_ = std::vector<std::unique_ptr<Row>>(kMaxRow + 1);
};

BinomialTable& table() {
    static BinomialTable instance;
    return instance;
}

void require_triangle(int n, int k, const char* what) {
    if (n < 0 || n > kIdentityMaxN || k < 0 || k > n) {
        std::ostringstream os;
        os << what << ": need 0 <= k <= n <= " << kIdentityMaxN << ", got n=" << n << ", k=" << k;
        throw ParameterError(os.str());
    }
}

mpz_class power_of_four(int e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 4, static_cast<unsigned long>(e));
    return out;
}

}  // namespace

mpz_class binomial_exact(int n, int k) {
    if (n < 0 || n > kMaxRow) {
        std::ostringstream os;
        os << "binomial_exact: n=" << n << " outside [0, " << kMaxRow << "]";
        throw ParameterError(os.str());
    }
    if (k < 0 || k > n) {
        return 0;
    }
    return table().row(n)[k];
}

IdentityCheck identity_one(int n, int k) {
    require_triangle(n, k, "identity_one");
    mpz_class lhs = 0;
    for (int j = k; j <= n; ++j) {
        lhs += binomial_exact(j, k) * binomial_exact(2 * j, j) * binomial_exact(2 * n - 2 * j, n - j);
    }
    const mpz_class rhs = power_of_four(n - k) * binomial_exact(n, k) * binomial_exact(2 * k, k);
    IdentityCheck out{ExactRational(lhs), ExactRational(rhs), false};
    out.equal = out.lhs == out.rhs;
    return out;
}

IdentityCheck identity_two(int n, int j) {
    require_triangle(n, j, "identity_two");
    const int m = n - j;
    ExactRational lhs;
    for (int i = 0; i <= m; ++i) {
        mpz_class num = binomial_exact(m, i) * binomial_exact(2 * i + 2 * j, i + j);
        if (i % 2 == 1) {
            num = -num;
        }
        lhs += ExactRational(std::move(num), power_of_four(i));
    }
    const ExactRational rhs(binomial_exact(2 * j, j) * binomial_exact(2 * m, m),
                            power_of_four(m) * binomial_exact(n, j));
    IdentityCheck out{lhs, rhs, false};
    out.equal = out.lhs == out.rhs;
    return out;
}

}  // namespace ioc
