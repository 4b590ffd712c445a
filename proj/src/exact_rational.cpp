#include "ioc/exact_rational.hpp"

#include <utility>

#include "ioc/family.hpp"

namespace ioc {

ExactRational::ExactRational(long value) : value_(value) {}

ExactRational::ExactRational(mpz_class integer) : value_(std::move(integer)) {}

ExactRational::ExactRational(mpz_class numerator, mpz_class denominator) {
    if (denominator == 0) {
        throw ParameterError("ExactRational: zero denominator");
    }
    value_ = mpq_class(std::move(numerator), std::move(denominator));
    value_.canonicalize();
}

std::string ExactRational::to_string() const { return value_.get_str(); }

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.value_ == 0) {
        throw ParameterError("ExactRational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

}  // namespace ioc
