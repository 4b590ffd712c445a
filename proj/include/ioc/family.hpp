#pragma once

// Parameters of the family p_{n,k}^{[c]}: binomial (c < 0), Poisson (c = 0),
// negative binomial (c > 0), plus the evaluation settings shared by every
// series in the library.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ioc {

/// Point or parameter lies outside the admissible domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// (n, c) pair violating the family constraints.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A series hit EvalConfig::max_terms before its tail bound certified convergence.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Series/quadrature tolerances. Defaults are the ones every tolerance in the
/// test suites is stated against.
struct EvalConfig {
    double rel_tol = 1e-13;
    std::int64_t max_terms = 10'000'000;
    double deriv_step = 1e-5;

    void validate() const;
};

/// Closed interval I_c = [0, upper]; upper is +inf when c >= 0.
struct Domain {
    double lower = 0.0;
    double upper = 0.0;

    [[nodiscard]] bool bounded() const;
    [[nodiscard]] bool contains(double x) const;
    [[nodiscard]] double length() const;
};

class FamilyParams {
public:
    /// c >= 0 requires n > c; c < 0 requires n = -c * l for an integer l >= 1
    /// (checked to 1e-12 relative).
    FamilyParams(double n, double c);

    /// Binomial-type member with n = -c * l.
    static FamilyParams from_trials(std::int64_t l, double c);

    [[nodiscard]] double n() const { return n_; }
    [[nodiscard]] double c() const { return c_; }
    /// Number of trials; present iff c < 0.
    [[nodiscard]] std::optional<std::int64_t> trials() const { return l_; }

    [[nodiscard]] Domain domain() const;
    /// Throws DomainError when x is not in I_c.
    void require_in_domain(double x) const;

    [[nodiscard]] std::string to_string() const;

private:
    double n_;
    double c_;
    std::optional<std::int64_t> l_;
};

}  // namespace ioc
