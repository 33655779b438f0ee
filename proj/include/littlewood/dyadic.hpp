// littlewood - exact powers of two with rational exponents.

#pragma once

#include "littlewood/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace littlewood {

/// Raised when an exact dyadic computation leaves the representable set
/// 2^r (for example, a sum whose terms do not collapse to a single power).
struct NotDyadicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The value 2^r with exact rational r. Multiplication and powering are
/// closed; general addition is not and lives with the callers that can
/// justify it (see mixed_norm_exact).
class DyadicScalar {
public:
    explicit DyadicScalar(Rational log2) : log2_(std::move(log2)) {}

    const Rational& log2() const { return log2_; }

    double value() const { return std::pow(2.0, to_double(log2_)); }

    DyadicScalar pow(const Rational& t) const { return DyadicScalar(log2_ * t); }

    friend DyadicScalar operator*(const DyadicScalar& a, const DyadicScalar& b)
    {
        return DyadicScalar(a.log2_ + b.log2_);
    }

    friend bool operator==(const DyadicScalar& a, const DyadicScalar& b)
    {
        return a.log2_ == b.log2_;
    }

private:
    Rational log2_;
};

} // namespace littlewood
