/**
 * @file poly.hpp
 * @brief Dense univariate polynomials in x over Scalar.
 *
 * coeffs[i] is the coefficient of x^i; trailing zeros are trimmed and the
 * zero polynomial is the empty coefficient vector (degree() == -1).
 */
#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "qappell/qcontext.hpp"

namespace qappell {

class Poly {
public:
    Poly() = default;
    explicit Poly(Scalar constant);
    explicit Poly(std::vector<Scalar> coeffs);
    Poly(std::initializer_list<Scalar> coeffs);

    static Poly monomial(unsigned degree, Scalar c = Scalar(1));
    static Poly variable() { return monomial(1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    Scalar leading_coeff() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator-(const Poly& a);
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& c, const Poly& p);
    friend Poly operator*(const Poly& p, const Scalar& c) { return c * p; }

    Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
    Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
    Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }

    /// p(c*x): coefficient i scaled by c^i.
    Poly dilate(const Scalar& c) const;

    /// Horner evaluation, exact.
    Scalar evaluate(const Scalar& x) const;

    /// Human-readable form, e.g. "1/2*x^2 - 3*x + 7/2"; "0" for the zero polynomial.
    std::string str(const std::string& var = "x") const;

    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void trim();

    std::vector<Scalar> coeffs_;
};

/// D_q p, with D_q x^n = [n]_q x^{n-1} applied coefficientwise.
Poly q_derivative(const QContext& ctx, const Poly& p);

/// D_{q^{-1}} p: the same rule with q replaced by 1/q, i.e. [n]_{1/q} = q^{1-n} [n]_q.
Poly q_inverse_derivative(const QContext& ctx, const Poly& p);

/// k-fold application of D_q (or of D_{q^{-1}} when inverse is set).
Poly q_derivative_power(const QContext& ctx, const Poly& p, unsigned k, bool inverse = false);

} // namespace qappell
