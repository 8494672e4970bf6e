/**
 * @file families.hpp
 * @brief Stock q-Appell families: q-Bernoulli, q-Euler, the identity set,
 *        and the modified Al-Salam-Carlitz II polynomials.
 *
 * All generating functions use the exponential normalization t^n/[n]_q!
 * throughout:
 *   - q-Bernoulli numbers of order m: (t/(E_q(t)-1))^m = sum B_n^(m) t^n/[n]_q!
 *   - q-Euler numbers of order m:     (2/(E_q(t)+1))^m = sum E_n^(m) t^n/[n]_q!
 * and the polynomial families attach the factor E_q(xt).
 */
#pragma once

#include "qappell/appell.hpp"

namespace qappell {

/// B_0^(m)..B_N^(m); any integer order m (m = 0 gives (1, 0, ..., 0)).
std::vector<Scalar> bernoulli_numbers(const QContext& ctx, long order, std::size_t N);

/// The q-Bernoulli polynomials as an AppellSeq determined by bernoulli_numbers.
AppellSeq bernoulli_polys(const QContext& ctx, long order, std::size_t N);

std::vector<Scalar> euler_numbers(const QContext& ctx, long order, std::size_t N);
AppellSeq euler_polys(const QContext& ctx, long order, std::size_t N);

/// The star-product identity I = {q^{n(n-1)/2} x^n}, determining function 1.
AppellSeq identity_family(const QContext& ctx, std::size_t N);

/// Modified Al-Salam-Carlitz II polynomials: a q^{n(n-1)/2}-rescaled
/// Al-Salam-Carlitz II family, generated by the three-term recurrence
///   R_0 = 1,  R_1 = x - (alpha+beta),
///   R_{n+1} = (q^n x - (alpha+beta)) R_n - alpha*beta (1-q^n) R_{n-1}.
/// Of the two circulating coefficient patterns for this recurrence, this is
/// the one that preserves the defining relation D_q R_n = [n]_q R_{n-1}(qx);
/// construction asserts that property and throws if it ever failed.
std::vector<Poly> asc2_modified(const QContext& ctx, const Scalar& alpha, const Scalar& beta,
                                std::size_t N);

} // namespace qappell
