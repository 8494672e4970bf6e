#include "qappell/series.hpp"

namespace qappell {

std::vector<Scalar> exp_convolution(const QContext& ctx, const std::vector<Scalar>& a,
                                    const std::vector<Scalar>& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::OrderMismatch, "coefficient lists have different lengths");
    std::vector<Scalar> r(a.size(), Scalar(0));
    for (std::size_t n = 0; n < a.size(); ++n) {
        Scalar acc(0);
        for (std::size_t k = 0; k <= n; ++k)
            acc += ctx.q_binomial(static_cast<unsigned>(n), static_cast<long>(k)) * a[k] * b[n - k];
        r[n] = acc;
    }
    return r;
}

std::vector<Scalar> alpha_coefficients(const QContext& ctx, const TruncSeries<Scalar>& s) {
    TruncSeries<Scalar> num = t_q_derivative_t(ctx, s);
    TruncSeries<Scalar> quotient = num * s.reciprocal();
    return to_exponential(ctx, quotient);
}

TruncSeries<Scalar> small_qexp_series(const QContext& ctx, unsigned N) {
    TruncSeries<Scalar> s(N);
    for (unsigned k = 0; k <= N; ++k)
        s.set_coeff(k, ctx.small_qexp_coeff(k));
    return s;
}

TruncSeries<Scalar> big_qexp_series(const QContext& ctx, unsigned N) {
    TruncSeries<Scalar> s(N);
    for (unsigned k = 0; k <= N; ++k)
        s.set_coeff(k, ctx.big_qexp_coeff(k));
    return s;
}

TruncSeries<Poly> big_qexp_xt_series(const QContext& ctx, unsigned N) {
    TruncSeries<Poly> s(N);
    for (unsigned n = 0; n <= N; ++n)
        s.set_coeff(n, Poly::monomial(n, ctx.big_qexp_coeff(n)));
    return s;
}

TruncSeries<Poly> lift_to_poly(const TruncSeries<Scalar>& s) {
    TruncSeries<Poly> r(s.order());
    for (std::size_t n = 0; n <= s.order(); ++n)
        r.set_coeff(n, Poly(s.coeff(n)));
    return r;
}

} // namespace qappell
