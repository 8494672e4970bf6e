/**
 * @file scalar.hpp
 * @brief Exact rational scalar built on GMP.
 *
 * Always stored in lowest terms with positive denominator (canonical mpq).
 * No implicit floating-point anywhere; to_double() is an explicit, lossy view.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qappell/error.hpp"

namespace qappell {

class Scalar {
public:
    // ---- constructors ----
    Scalar() : v_(0) {}
    Scalar(int n) : v_(n) {}
    Scalar(long n) : v_(static_cast<signed long>(n)) {}
    Scalar(long num, long den);
    explicit Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "num" or "num/den" (optional leading '-' or '+'); exact, base 10.
    static Scalar from_string(std::string_view text);

    // ---- queries ----
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// "num/den" in lowest terms, or just "num" when den = 1. Round-trips losslessly.
    std::string str() const;
    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

    // ---- comparison ----
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

    // ---- arithmetic ----
    friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.v_)); }
    friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.v_ + b.v_)); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.v_ - b.v_)); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.v_ * b.v_)); }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
        return Scalar(mpq_class(a.v_ / b.v_));
    }

    Scalar& operator+=(const Scalar& b) { v_ += b.v_; return *this; }
    Scalar& operator-=(const Scalar& b) { v_ -= b.v_; return *this; }
    Scalar& operator*=(const Scalar& b) { v_ *= b.v_; return *this; }
    Scalar& operator/=(const Scalar& b) { *this = *this / b; return *this; }

    Scalar reciprocal() const;
    /// Integer power; negative exponents require a nonzero base.
    Scalar pow(long e) const;
    Scalar abs() const { return Scalar(mpq_class(::abs(v_))); }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    mpq_class v_;
};

} // namespace qappell
