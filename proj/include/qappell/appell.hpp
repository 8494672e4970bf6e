/**
 * @file appell.hpp
 * @brief q-Appell sequences of type II and their group structure.
 *
 * A polynomial set {f_n} is q-Appell of type II when
 *     D_q f_n(x) = [n]_q f_{n-1}(q x).
 * Such a set is determined by a coefficient sequence (a_k), a_0 != 0, through
 *     f_n(x) = sum_{k=0}^n [n k]_q q^{(n-k)(n-k-1)/2} a_k x^{n-k},
 * equivalently by the generating relation A(t) E_q(xt) = sum f_n(x) t^n/[n]_q!
 * with determining function A(t) = sum a_n t^n/[n]_q!, and equivalently by the
 * operator form f_n = (sum_k a_k q^{(n-k)(n-k-1)/2}/[k]_q! D_q^k) x^n.
 *
 * An AppellSeq stores the determining coefficients (exponential normalization)
 * as the source of truth; polynomials are generated on demand. Under the star
 * product (multiplication of determining functions) the truncated sequences
 * form a commutative group whose identity is I = {q^{n(n-1)/2} x^n}.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qappell/series.hpp"

namespace qappell {

/// Exponential coefficients of t D_{q,t}A(t) / A(t); alpha[0] is always 0.
struct AlphaStream {
    std::vector<Scalar> alpha;
};

/// Diagnostic result of a family-wide check: ok, or the first index that fails.
struct CheckOutcome {
    bool ok = true;
    std::size_t first_failure = 0;
};

/// True iff D_q f_n = [n]_q f_{n-1}(qx) for every provided n >= 1
/// (and every f_n has exact degree n).
CheckOutcome is_type2_appell(const std::vector<Poly>& polys, const QContext& ctx);

class AppellSeq {
public:
    /// Stores the determining coefficients a_0..a_N verbatim; a_0 must be nonzero.
    AppellSeq(QContext ctx, std::vector<Scalar> coeffs, std::string name = "");

    /// Recovers an AppellSeq from its polynomials. Validates the defining
    /// relation, reads off a_n = f_n(0) and checks the reconstruction
    /// reproduces the input exactly.
    static AppellSeq from_polynomials(const QContext& ctx, const std::vector<Poly>& polys,
                                      std::string name = "");

    const QContext& ctx() const { return ctx_; }
    const std::string& name() const { return name_; }

    /// Highest degree n for which polynomial(n) is available.
    std::size_t max_degree() const { return coeffs_.size() - 1; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& coeff(std::size_t k) const;

    /// f_n via the explicit coefficient sum.
    Poly polynomial(std::size_t n) const;

    /// f_n via the q-derivative operator sum (terms with k > n vanish on x^n).
    Poly operator_form_polynomial(std::size_t n) const;

    /// f_0..f_N extracted from the product A(t) * E_q(xt) mod t^{N+1}.
    std::vector<Poly> genfun_polynomials(std::size_t N) const;

    /// All polynomials f_0..f_{max_degree()}.
    std::vector<Poly> polynomials() const;

    AlphaStream alpha_stream() const;

    /// Checks f_n(x/q) = (1/[n]_q) sum_k [n k]_q alpha_k f_{n-k}(x) + x/q f_{n-1}(x)
    /// exactly; n >= 1.
    bool recursion_check(std::size_t n) const;

    /// Checks sum_k q^{k(k-1)/2}/[k]_q! alpha_k D_{1/q}^k f_n
    ///        + (x/q) D_{1/q} f_n - [n]_q f_n(x/q) = 0 exactly.
    bool q_difference_check(std::size_t n) const;

    /// Coefficients c_0..c_n with x^n = sum_k c_k f_{n-k}(x), where
    /// c_k = q^{-n(n-1)/2} [n k]_q b_k and (b_k) determines the star-inverse.
    std::vector<Scalar> power_representation(std::size_t n) const;

    friend bool operator==(const AppellSeq& a, const AppellSeq& b) {
        return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
    }

private:
    QContext ctx_;
    std::vector<Scalar> coeffs_;
    std::string name_;
};

/// Componentwise sum; defined only when a_0(f) + a_0(g) != 0.
AppellSeq seq_add(const AppellSeq& f, const AppellSeq& g);

/// Star product: determining functions multiply, i.e. the coefficients
/// combine by q-binomial convolution.
AppellSeq seq_star(const AppellSeq& f, const AppellSeq& g);

/// The same product computed componentwise from the polynomials of f:
/// (f*g)_n(x) = sum_k alpha(n,k) q^{-k(k-1)/2} g_k(x), where
/// f_n(x) = sum_k alpha(n,k) x^k. Independent route used for cross-checks.
Poly star_componentwise(const AppellSeq& f, const AppellSeq& g, std::size_t n);

/// Star-inverse: determining function A(t)^{-1}.
AppellSeq seq_inverse(const AppellSeq& f);

/// Iterated star power, m may be negative.
AppellSeq seq_int_pow(const AppellSeq& f, long m);

inline AppellSeq operator+(const AppellSeq& f, const AppellSeq& g) { return seq_add(f, g); }
inline AppellSeq operator*(const AppellSeq& f, const AppellSeq& g) { return seq_star(f, g); }

} // namespace qappell
