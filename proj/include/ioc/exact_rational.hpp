#pragma once

#include <gmpxx.h>

#include <string>

namespace ioc {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value);  // NOLINT(google-explicit-constructor)
    explicit ExactRational(mpz_class integer);
    /// Throws ParameterError on a zero denominator.
    ExactRational(mpz_class numerator, mpz_class denominator);

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

    [[nodiscard]] double to_double() const { return value_.get_d(); }
    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string to_string() const;

    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    /// Throws ParameterError on division by zero.
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.value_ == b.value_;
    }

private:
    mpq_class value_{0};
};

}  // namespace ioc
