#include "qappell/appell.hpp"

#include <utility>

namespace qappell {

CheckOutcome is_type2_appell(const std::vector<Poly>& polys, const QContext& ctx) {
    for (std::size_t n = 0; n < polys.size(); ++n) {
        if (polys[n].degree() != static_cast<int>(n))
            return {false, n};
        if (n == 0) continue;
        Poly lhs = q_derivative(ctx, polys[n]);
        Poly rhs = ctx.q_number(static_cast<unsigned>(n)) * polys[n - 1].dilate(ctx.q());
        if (lhs != rhs)
            return {false, n};
    }
    return {true, 0};
}

AppellSeq::AppellSeq(QContext ctx, std::vector<Scalar> coeffs, std::string name)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)), name_(std::move(name)) {
    if (coeffs_.empty() || coeffs_[0].is_zero())
        throw Error(ErrorCode::ZeroLeadingCoefficient, "determining coefficient a_0 must be nonzero");
}

AppellSeq AppellSeq::from_polynomials(const QContext& ctx, const std::vector<Poly>& polys,
                                      std::string name) {
    if (polys.empty())
        throw Error(ErrorCode::InvalidArgument, "empty polynomial list");
    CheckOutcome chk = is_type2_appell(polys, ctx);
    if (!chk.ok)
        throw Error(ErrorCode::InvalidArgument,
                    "defining relation fails at index " + std::to_string(chk.first_failure));
    // a_n = f_n(0): only the k = n term of the coefficient sum has x-degree 0.
    std::vector<Scalar> a;
    a.reserve(polys.size());
    for (const Poly& p : polys)
        a.push_back(p.coeff(0));
    AppellSeq seq(ctx, std::move(a), std::move(name));
    for (std::size_t n = 0; n < polys.size(); ++n)
        if (seq.polynomial(n) != polys[n])
            throw Error(ErrorCode::InvalidArgument,
                        "polynomials are not reproduced by their determining coefficients");
    return seq;
}

const Scalar& AppellSeq::coeff(std::size_t k) const {
    if (k >= coeffs_.size())
        throw Error(ErrorCode::InsufficientCoefficients,
                    "coefficient index " + std::to_string(k) + " beyond stored order " +
                        std::to_string(coeffs_.size() - 1));
    return coeffs_[k];
}

Poly AppellSeq::polynomial(std::size_t n) const {
    if (n >= coeffs_.size())
        throw Error(ErrorCode::InsufficientCoefficients,
                    "polynomial(" + std::to_string(n) + ") needs a_0..a_" + std::to_string(n) +
                        " but only " + std::to_string(coeffs_.size()) + " coefficients are stored");
    std::vector<Scalar> c(n + 1, Scalar(0));
    for (std::size_t k = 0; k <= n; ++k) {
        long m = static_cast<long>(n - k);
        c[n - k] = ctx_.q_binomial(static_cast<unsigned>(n), static_cast<long>(k)) *
                   ctx_.q_binom2_power(m) * coeffs_[k];
    }
    return Poly(std::move(c));
}

Poly AppellSeq::operator_form_polynomial(std::size_t n) const {
    if (n >= coeffs_.size())
        throw Error(ErrorCode::InsufficientCoefficients,
                    "operator_form_polynomial(" + std::to_string(n) + ") beyond stored order");
    Poly acc;
    Poly dkxn = Poly::monomial(static_cast<unsigned>(n)); // D_q^k x^n, k = 0, 1, ...
    for (std::size_t k = 0; k <= n; ++k) {
        Scalar w = coeffs_[k] * ctx_.q_binom2_power(static_cast<long>(n - k)) /
                   ctx_.q_factorial(static_cast<unsigned>(k));
        acc += w * dkxn;
        dkxn = q_derivative(ctx_, dkxn);
    }
    return acc;
}

std::vector<Poly> AppellSeq::genfun_polynomials(std::size_t N) const {
    if (N >= coeffs_.size())
        throw Error(ErrorCode::InsufficientCoefficients, "generating-function extraction beyond stored order");
    unsigned order = static_cast<unsigned>(N);
    std::vector<Scalar> head(coeffs_.begin(), coeffs_.begin() + N + 1);
    TruncSeries<Poly> a = lift_to_poly(from_exponential(ctx_, head));
    TruncSeries<Poly> product = a * big_qexp_xt_series(ctx_, order);
    std::vector<Poly> out;
    out.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        out.push_back(product.coeff(n) * ctx_.q_factorial(static_cast<unsigned>(n)));
    return out;
}

std::vector<Poly> AppellSeq::polynomials() const {
    std::vector<Poly> out;
    out.reserve(coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        out.push_back(polynomial(n));
    return out;
}

AlphaStream AppellSeq::alpha_stream() const {
    return AlphaStream{alpha_coefficients(ctx_, from_exponential(ctx_, coeffs_))};
}

bool AppellSeq::recursion_check(std::size_t n) const {
    if (n == 0 || n >= coeffs_.size())
        throw Error(ErrorCode::InvalidArgument, "recursion check needs 1 <= n <= stored order");
    const std::vector<Scalar> alpha = alpha_stream().alpha;
    Scalar qinv = ctx_.q().reciprocal();

    Poly lhs = polynomial(n).dilate(qinv);

    Poly sum;
    for (std::size_t k = 0; k <= n; ++k)
        sum += (ctx_.q_binomial(static_cast<unsigned>(n), static_cast<long>(k)) * alpha[k]) *
               polynomial(n - k);
    Poly rhs = ctx_.q_number(static_cast<unsigned>(n)).reciprocal() * sum +
               Poly::monomial(1, qinv) * polynomial(n - 1);
    return lhs == rhs;
}

bool AppellSeq::q_difference_check(std::size_t n) const {
    if (n >= coeffs_.size())
        throw Error(ErrorCode::InvalidArgument, "q-difference check beyond stored order");
    const std::vector<Scalar> alpha = alpha_stream().alpha;
    Scalar qinv = ctx_.q().reciprocal();
    Poly fn = polynomial(n);

    Poly lhs;
    Poly dk = fn; // D_{1/q}^k f_n
    for (std::size_t k = 0; k <= n; ++k) {
        Scalar w = ctx_.q_binom2_power(static_cast<long>(k)) * alpha[k] /
                   ctx_.q_factorial(static_cast<unsigned>(k));
        lhs += w * dk;
        dk = q_inverse_derivative(ctx_, dk);
    }
    lhs += Poly::monomial(1, qinv) * q_inverse_derivative(ctx_, fn);
    lhs -= ctx_.q_number(static_cast<unsigned>(n)) * fn.dilate(qinv);
    return lhs.is_zero();
}

std::vector<Scalar> AppellSeq::power_representation(std::size_t n) const {
    if (n >= coeffs_.size())
        throw Error(ErrorCode::InsufficientCoefficients, "power representation beyond stored order");
    const std::vector<Scalar> b = seq_inverse(*this).coeffs();
    Scalar scale = ctx_.q_binom2_power(static_cast<long>(n)).reciprocal();
    std::vector<Scalar> c(n + 1, Scalar(0));
    for (std::size_t k = 0; k <= n; ++k)
        c[k] = scale * ctx_.q_binomial(static_cast<unsigned>(n), static_cast<long>(k)) * b[k];
    return c;
}

AppellSeq seq_add(const AppellSeq& f, const AppellSeq& g) {
    if (!(f.ctx() == g.ctx()))
        throw Error(ErrorCode::InvalidArgument, "sequences use different q");
    if (f.coeffs().size() != g.coeffs().size())
        throw Error(ErrorCode::OrderMismatch, "sequences store different truncation orders");
    if ((f.coeff(0) + g.coeff(0)).is_zero())
        throw Error(ErrorCode::DegenerateSum, "a_0 coefficients cancel; the sum is not a polynomial set");
    std::vector<Scalar> c(f.coeffs().size(), Scalar(0));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = f.coeffs()[k] + g.coeffs()[k];
    return AppellSeq(f.ctx(), std::move(c));
}

AppellSeq seq_star(const AppellSeq& f, const AppellSeq& g) {
    if (!(f.ctx() == g.ctx()))
        throw Error(ErrorCode::InvalidArgument, "sequences use different q");
    if (f.coeffs().size() != g.coeffs().size())
        throw Error(ErrorCode::OrderMismatch, "sequences store different truncation orders");
    return AppellSeq(f.ctx(), exp_convolution(f.ctx(), f.coeffs(), g.coeffs()));
}

Poly star_componentwise(const AppellSeq& f, const AppellSeq& g, std::size_t n) {
    Poly fn = f.polynomial(n);
    Poly acc;
    for (std::size_t k = 0; k <= n; ++k) {
        Scalar w = fn.coeff(k) * f.ctx().q_binom2_power(static_cast<long>(k)).reciprocal();
        if (!w.is_zero())
            acc += w * g.polynomial(k);
    }
    return acc;
}

AppellSeq seq_inverse(const AppellSeq& f) {
    TruncSeries<Scalar> a = from_exponential(f.ctx(), f.coeffs());
    return AppellSeq(f.ctx(), to_exponential(f.ctx(), a.reciprocal()));
}

AppellSeq seq_int_pow(const AppellSeq& f, long m) {
    TruncSeries<Scalar> a = from_exponential(f.ctx(), f.coeffs());
    return AppellSeq(f.ctx(), to_exponential(f.ctx(), a.int_pow(m)));
}

} // namespace qappell
