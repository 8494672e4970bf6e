/**
 * @file qcontext.hpp
 * @brief The deformation parameter q and all q-combinatorial quantities.
 *
 * q is an exact rational outside {0, 1, -1}; this guarantees q^n != 1 for all
 * n >= 1, so every q-number [n]_q with n >= 1 is nonzero and every q-factorial
 * is invertible. All operations are pure; a QContext is an immutable value.
 */
#pragma once

#include "qappell/scalar.hpp"

namespace qappell {

class QContext {
public:
    explicit QContext(Scalar q);

    const Scalar& q() const { return q_; }

    /// q^e for any integer e (negative exponents allowed, q != 0).
    Scalar q_power(long e) const { return q_.pow(e); }

    /// q^{n(n-1)/2}, the weight carried by the k-th coefficient of E_q.
    Scalar q_binom2_power(long n) const { return q_.pow(n * (n - 1) / 2); }

    /// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
    Scalar q_number(unsigned n) const;

    /// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
    Scalar q_factorial(unsigned n) const;

    /// [n k]_q = [n]_q! / ([k]_q! [n-k]_q!) for 0 <= k <= n, else 0.
    Scalar q_binomial(unsigned n, long k) const;

    /// (a;q)_n = (1 - a)(1 - aq)...(1 - aq^{n-1}); (a;q)_0 = 1.
    Scalar q_pochhammer(const Scalar& a, unsigned n) const;

    /// Coefficient of x^k in E_q(x): q^{k(k-1)/2} / [k]_q!.
    Scalar big_qexp_coeff(unsigned k) const;

    /// Coefficient of x^k in e_q(x): 1 / [k]_q!.
    Scalar small_qexp_coeff(unsigned k) const;

    friend bool operator==(const QContext& a, const QContext& b) { return a.q_ == b.q_; }

private:
    Scalar q_;
};

} // namespace qappell
