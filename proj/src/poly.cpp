#include "qappell/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qappell {

Poly::Poly(Scalar constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::monomial(unsigned degree, Scalar c) {
    if (c.is_zero()) return Poly();
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = std::move(c);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Poly operator-(const Poly& a) {
    std::vector<Scalar> v;
    v.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) v.push_back(-c);
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
}

Poly operator*(const Scalar& c, const Poly& p) {
    if (c.is_zero()) return Poly();
    std::vector<Scalar> v;
    v.reserve(p.coeffs_.size());
    for (const auto& pc : p.coeffs_) v.push_back(c * pc);
    return Poly(std::move(v));
}

Poly Poly::dilate(const Scalar& c) const {
    std::vector<Scalar> v;
    v.reserve(coeffs_.size());
    Scalar ci(1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        v.push_back(coeffs_[i] * ci);
        ci *= c;
    }
    return Poly(std::move(v));
}

Scalar Poly::evaluate(const Scalar& x) const {
    Scalar acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + coeffs_[i];
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Scalar& c = coeffs_[i];
        if (c.is_zero()) continue;
        Scalar mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = mag.is_one() && i > 0;
        if (!unit) os << mag.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

Poly q_derivative(const QContext& ctx, const Poly& p) {
    if (p.degree() < 1) return Poly();
    std::vector<Scalar> v(p.coeffs().size() - 1, Scalar(0));
    for (std::size_t n = 1; n < p.coeffs().size(); ++n)
        v[n - 1] = ctx.q_number(static_cast<unsigned>(n)) * p.coeffs()[n];
    return Poly(std::move(v));
}

Poly q_inverse_derivative(const QContext& ctx, const Poly& p) {
    if (p.degree() < 1) return Poly();
    std::vector<Scalar> v(p.coeffs().size() - 1, Scalar(0));
    for (std::size_t n = 1; n < p.coeffs().size(); ++n) {
        // [n]_{1/q} = q^{1-n} [n]_q
        Scalar qn = ctx.q_power(1 - static_cast<long>(n)) * ctx.q_number(static_cast<unsigned>(n));
        v[n - 1] = qn * p.coeffs()[n];
    }
    return Poly(std::move(v));
}

Poly q_derivative_power(const QContext& ctx, const Poly& p, unsigned k, bool inverse) {
    Poly r = p;
    for (unsigned i = 0; i < k; ++i)
        r = inverse ? q_inverse_derivative(ctx, r) : q_derivative(ctx, r);
    return r;
}

} // namespace qappell
