#pragma once

#include <cstdint>
#include <vector>

#include "exactmath/intpoly.hpp"

namespace bv::exactmath {

/// k-th cyclotomic polynomial, obtained by dividing x^k - 1 by Phi_d for
/// every proper divisor d of k. Results are memoized.
IntPoly cyclotomic(std::uint64_t k);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(std::vector<std::vector<BigInt>> m);

/// |res(P, Q)| via the Bareiss determinant of the Sylvester matrix.
BigInt resultant(IntPoly const &p, IntPoly const &q);

/// Closed form of |res(Phi_a, Phi_b)|: with a < b, l^phi(a) if b/a is a power
/// l^k of a prime l (k >= 1), 1 otherwise. Symmetric; a == b is rejected.
/// The exponent phi(min) is 1 exactly when min(a, b) <= 2.
BigInt cyclotomic_resultant(std::uint64_t a, std::uint64_t b);

/// |res(prod Phi_ai, prod Phi_bj)| by bimultiplicativity of the closed form.
BigInt cyclotomic_product_resultant(std::vector<std::uint64_t> const &lhs,
                                    std::vector<std::uint64_t> const &rhs);

BigInt eval_poly(IntPoly const &p, BigInt const &q);

/// Writes P = s * prod Phi_k (s = +-1) and returns the multiset of k in
/// increasing order. Throws std::domain_error if P is not of that shape.
std::vector<std::uint64_t> cyclotomic_factors(IntPoly const &p);

/// prod Phi_k over the given indices.
IntPoly cyclotomic_product(std::vector<std::uint64_t> const &indices);

} // namespace bv::exactmath
