#include "qappell/scalar.hpp"

#include <cctype>
#include <ostream>

namespace qappell {

Scalar::Scalar(long num, long den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    v_ = mpq_class(static_cast<signed long>(num), static_cast<signed long>(den));
    v_.canonicalize();
}

static bool looks_like_rational(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
    if (digits == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
    return digits > 0 && i == s.size();
}

Scalar Scalar::from_string(std::string_view text) {
    // trim surrounding whitespace
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view s = text.substr(b, e - b);

    if (!looks_like_rational(s))
        throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");

    mpq_class v;
    if (v.set_str(std::string(s), 10) != 0)
        throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
    if (v.get_den() == 0)
        throw Error(ErrorCode::DivisionByZero, "zero denominator: '" + std::string(text) + "'");
    v.canonicalize();
    return Scalar(std::move(v));
}

std::string Scalar::str() const {
    return v_.get_str();
}

Scalar Scalar::reciprocal() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Scalar(std::move(r));
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return Scalar(1);
    if (e < 0) return reciprocal().pow(-e);
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(v_.get_mpq_t()), static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(v_.get_mpq_t()), static_cast<unsigned long>(e));
    // base canonical => power canonical
    return Scalar(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.v_;
}

} // namespace qappell
