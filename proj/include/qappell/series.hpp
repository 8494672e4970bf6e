/**
 * @file series.hpp
 * @brief Truncated formal power series in t over Scalar or Poly coefficients.
 *
 * A TruncSeries<R> of order N stores the plain coefficients c_0..c_N of
 * t^0..t^N; all arithmetic is exact modulo t^{N+1}. Operations never
 * re-truncate silently: combining series of different orders is an error.
 *
 * The exponential view a_n = c_n * [n]_q! is available through
 * to_exponential / from_exponential; in that normalization the Cauchy
 * product becomes the q-binomial convolution
 *     c_n = sum_k [n k]_q a_k b_{n-k},
 * which exp_convolution implements directly as an independent route.
 */
#pragma once

#include <vector>

#include "qappell/poly.hpp"

namespace qappell {

// Minimal ring interface used by the series template.
template <class R>
struct RingOps;

template <>
struct RingOps<Scalar> {
    static Scalar zero() { return Scalar(0); }
    static Scalar one() { return Scalar(1); }
    static bool is_zero(const Scalar& s) { return s.is_zero(); }
    static bool is_unit(const Scalar& s) { return !s.is_zero(); }
    static Scalar invert(const Scalar& s) { return s.reciprocal(); }
};

template <>
struct RingOps<Poly> {
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Scalar(1)); }
    static bool is_zero(const Poly& p) { return p.is_zero(); }
    // Units of Scalar[x] are the nonzero constants.
    static bool is_unit(const Poly& p) { return p.degree() == 0; }
    static Poly invert(const Poly& p) { return Poly(p.coeff(0).reciprocal()); }
};

template <class R>
class TruncSeries {
public:
    explicit TruncSeries(unsigned order) : coeffs_(order + 1, RingOps<R>::zero()) {}

    TruncSeries(unsigned order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() > order + 1)
            throw Error(ErrorCode::InvalidArgument, "more coefficients than the truncation order admits");
        coeffs_.resize(order + 1, RingOps<R>::zero());
    }

    static TruncSeries one(unsigned order) {
        TruncSeries s(order);
        s.coeffs_[0] = RingOps<R>::one();
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const R& coeff(std::size_t n) const { return coeffs_[n]; }
    void set_coeff(std::size_t n, R v) { coeffs_[n] = std::move(v); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_order(b);
        TruncSeries r(a.order());
        for (std::size_t n = 0; n < a.coeffs_.size(); ++n)
            r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_order(b);
        TruncSeries r(a.order());
        for (std::size_t n = 0; n < a.coeffs_.size(); ++n)
            r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
        return r;
    }

    /// Cauchy product truncated at the common order.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_order(b);
        TruncSeries r(a.order());
        for (std::size_t n = 0; n < a.coeffs_.size(); ++n) {
            R acc = RingOps<R>::zero();
            for (std::size_t k = 0; k <= n; ++k)
                acc = acc + a.coeffs_[k] * b.coeffs_[n - k];
            r.coeffs_[n] = acc;
        }
        return r;
    }

    /// Multiplicative inverse mod t^{N+1}; requires a unit constant term.
    TruncSeries reciprocal() const {
        if (!RingOps<R>::is_unit(coeffs_[0]))
            throw Error(ErrorCode::NonUnitConstantTerm, "series reciprocal requires a unit constant term");
        R c0inv = RingOps<R>::invert(coeffs_[0]);
        TruncSeries r(order());
        r.coeffs_[0] = c0inv;
        for (std::size_t n = 1; n < coeffs_.size(); ++n) {
            R acc = RingOps<R>::zero();
            for (std::size_t k = 1; k <= n; ++k)
                acc = acc + coeffs_[k] * r.coeffs_[n - k];
            r.coeffs_[n] = RingOps<R>::zero() - acc * c0inv;
        }
        return r;
    }

    /// S^m for any integer m; m < 0 goes through reciprocal().
    TruncSeries int_pow(long m) const {
        if (m < 0) return reciprocal().int_pow(-m);
        TruncSeries r = one(order());
        TruncSeries base = *this;
        unsigned long e = static_cast<unsigned long>(m);
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    /// t |-> c*t substitution: coefficient n scaled by c^n.
    TruncSeries scale_argument(const Scalar& c) const {
        TruncSeries r(order());
        Scalar cn(1);
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            r.coeffs_[n] = coeffs_[n] * cn;
            cn *= c;
        }
        return r;
    }

private:
    void require_same_order(const TruncSeries& other) const {
        if (coeffs_.size() != other.coeffs_.size())
            throw Error(ErrorCode::OrderMismatch, "series truncation orders differ");
    }

    std::vector<R> coeffs_;
};

/// D_{q,t} S: c_n |-> [n]_q c_n with the degree shifted down.
template <class R>
TruncSeries<R> q_derivative_t(const QContext& ctx, const TruncSeries<R>& s) {
    TruncSeries<R> r(s.order());
    for (std::size_t n = 1; n <= s.order(); ++n)
        r.set_coeff(n - 1, s.coeff(n) * ctx.q_number(static_cast<unsigned>(n)));
    return r;
}

/// t * D_{q,t} S: c_n |-> [n]_q c_n in place (no degree shift, no truncation loss).
template <class R>
TruncSeries<R> t_q_derivative_t(const QContext& ctx, const TruncSeries<R>& s) {
    TruncSeries<R> r(s.order());
    for (std::size_t n = 0; n <= s.order(); ++n)
        r.set_coeff(n, s.coeff(n) * ctx.q_number(static_cast<unsigned>(n)));
    return r;
}

/// t * S mod t^{N+1} (the top coefficient of S falls outside the window).
template <class R>
TruncSeries<R> shift_up(const TruncSeries<R>& s) {
    TruncSeries<R> r(s.order());
    for (std::size_t n = 1; n <= s.order(); ++n)
        r.set_coeff(n, s.coeff(n - 1));
    return r;
}

// ---- exponential-normalization view: a_n = c_n [n]_q! ----

inline std::vector<Scalar> to_exponential(const QContext& ctx, const TruncSeries<Scalar>& s) {
    std::vector<Scalar> a(s.order() + 1, Scalar(0));
    for (std::size_t n = 0; n <= s.order(); ++n)
        a[n] = s.coeff(n) * ctx.q_factorial(static_cast<unsigned>(n));
    return a;
}

inline TruncSeries<Scalar> from_exponential(const QContext& ctx, const std::vector<Scalar>& a) {
    if (a.empty()) throw Error(ErrorCode::InvalidArgument, "empty coefficient list");
    TruncSeries<Scalar> s(static_cast<unsigned>(a.size()) - 1);
    for (std::size_t n = 0; n < a.size(); ++n)
        s.set_coeff(n, a[n] / ctx.q_factorial(static_cast<unsigned>(n)));
    return s;
}

/// q-binomial convolution of exponential coefficient vectors:
/// result_n = sum_k [n k]_q a_k b_{n-k}.
std::vector<Scalar> exp_convolution(const QContext& ctx, const std::vector<Scalar>& a,
                                    const std::vector<Scalar>& b);

/// Exponential coefficients alpha_0..alpha_N of t * D_{q,t}S / S,
/// i.e. t D_{q,t}S / S = sum alpha_n t^n / [n]_q!. Requires S(0) invertible.
/// alpha_0 is always 0.
std::vector<Scalar> alpha_coefficients(const QContext& ctx, const TruncSeries<Scalar>& s);

// ---- stock series ----

/// e_q(t) = sum t^k / [k]_q!, truncated at order N.
TruncSeries<Scalar> small_qexp_series(const QContext& ctx, unsigned N);

/// E_q(t) = sum q^{k(k-1)/2} t^k / [k]_q!, truncated at order N.
TruncSeries<Scalar> big_qexp_series(const QContext& ctx, unsigned N);

/// E_q(xt) as a series in t with Poly coefficients: q^{n(n-1)/2} x^n / [n]_q!.
TruncSeries<Poly> big_qexp_xt_series(const QContext& ctx, unsigned N);

/// Embeds a Scalar-coefficient series as constant Poly coefficients.
TruncSeries<Poly> lift_to_poly(const TruncSeries<Scalar>& s);

} // namespace qappell
