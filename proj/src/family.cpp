#include "ioc/family.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace ioc {

namespace {

// Roundoff slack accepted at the finite endpoint of I_c.
constexpr double kEndpointSlack = 1e-14;

}  // namespace

void EvalConfig::validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw ParameterError("EvalConfig: rel_tol must lie in (0, 1)");
    }
    if (max_terms < 64) {
        throw ParameterError("EvalConfig: max_terms must be at least 64");
    }
    if (!(deriv_step > 0.0) || !std::isfinite(deriv_step)) {
        throw ParameterError("EvalConfig: deriv_step must be positive");
    }
}

bool Domain::bounded() const { return std::isfinite(upper); }

bool Domain::contains(double x) const {
    if (!std::isfinite(x) || x < lower) {
        return false;
    }
    return !bounded() || x <= upper * (1.0 + kEndpointSlack);
}

double Domain::length() const { return upper - lower; }

FamilyParams::FamilyParams(double n, double c) : n_(n), c_(c) {
    if (!std::isfinite(n) || !std::isfinite(c) || !(n > 0.0)) {
        throw ParameterError("family parameters: n must be a positive finite real");
    }
    if (c >= 0.0) {
        if (!(n > c)) {
            std::ostringstream os;
            os << "family parameters: n > c is required for c >= 0 (n=" << n << ", c=" << c << ")";
            throw ParameterError(os.str());
        }
        return;
    }
    const double l = n / -c;
    const double rounded = std::round(l);
    if (rounded < 1.0 || std::abs(l - rounded) > 1e-12 * std::max(1.0, l) ||
        rounded > static_cast<double>(std::numeric_limits<std::int32_t>::max())) {
        std::ostringstream os;
        os << "family parameters: c < 0 requires n = -c*l with integer l >= 1 (n=" << n << ", c=" << c
           << ")";
        throw ParameterError(os.str());
    }
    l_ = static_cast<std::int64_t>(rounded);
}

FamilyParams FamilyParams::from_trials(std::int64_t l, double c) {
    if (l < 1 || !(c < 0.0)) {
        throw ParameterError("family parameters: from_trials needs l >= 1 and c < 0");
    }
    return FamilyParams(-c * static_cast<double>(l), c);
}

Domain FamilyParams::domain() const {
    if (c_ < 0.0) {
        return {0.0, -1.0 / c_};
    }
    return {0.0, std::numeric_limits<double>::infinity()};
}

void FamilyParams::require_in_domain(double x) const {
    if (!domain().contains(x)) {
        std::ostringstream os;
        os << "x=" << x << " is outside I_c for " << to_string();
        throw DomainError(os.str());
    }
}

std::string FamilyParams::to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << "(n=" << n_ << ", c=" << c_;
    if (l_) {
        os << ", l=" << *l_;
    }
    os << ")";
    return os.str();
}

}  // namespace ioc
