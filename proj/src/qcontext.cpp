#include "qappell/qcontext.hpp"

namespace qappell {

QContext::QContext(Scalar q) : q_(std::move(q)) {
    if (q_.is_zero() || q_ == Scalar(1) || q_ == Scalar(-1))
        throw Error(ErrorCode::InvalidQ, "q must not be 0, 1, or -1");
}

Scalar QContext::q_number(unsigned n) const {
    Scalar sum(0), p(1);
    for (unsigned i = 0; i < n; ++i) {
        sum += p;
        p *= q_;
    }
    return sum;
}

Scalar QContext::q_factorial(unsigned n) const {
    Scalar prod(1);
    for (unsigned k = 1; k <= n; ++k)
        prod *= q_number(k);
    return prod;
}

Scalar QContext::q_binomial(unsigned n, long k) const {
    if (k < 0 || k > static_cast<long>(n)) return Scalar(0);
    return q_factorial(n) / (q_factorial(static_cast<unsigned>(k)) * q_factorial(n - static_cast<unsigned>(k)));
}

Scalar QContext::q_pochhammer(const Scalar& a, unsigned n) const {
    Scalar prod(1), aq = a;
    for (unsigned k = 0; k < n; ++k) {
        prod *= Scalar(1) - aq;
        aq *= q_;
    }
    return prod;
}

Scalar QContext::big_qexp_coeff(unsigned k) const {
    return q_binom2_power(static_cast<long>(k)) / q_factorial(k);
}

Scalar QContext::small_qexp_coeff(unsigned k) const {
    return q_factorial(k).reciprocal();
}

} // namespace qappell
