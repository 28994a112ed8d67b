#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bv::exactmath {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree order. The zero polynomial has no coefficients;
/// any other value has a nonzero leading coefficient.
class IntPoly
{
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly constant(BigInt c);
  static IntPoly monomial(BigInt c, unsigned degree);
  /// x^k - c
  static IntPoly binomial(unsigned k, BigInt c);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::vector<BigInt> const &coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t i) const;
  BigInt const &leading() const;
  bool is_monic() const;

  BigInt eval(BigInt const &x) const;
  IntPoly pow(unsigned e) const;
  /// P(-x)
  IntPoly reflect() const;
  IntPoly derivative() const;

  /// Division by a monic polynomial; remainder has smaller degree.
  std::pair<IntPoly, IntPoly> divmod_monic(IntPoly const &divisor) const;
  /// Throws std::domain_error if the division leaves a remainder.
  IntPoly exact_div(IntPoly const &divisor) const;

  std::string to_string(char var = 'x') const;

  IntPoly &operator+=(IntPoly const &rhs);
  IntPoly &operator-=(IntPoly const &rhs);
  IntPoly &operator*=(IntPoly const &rhs);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly lhs, IntPoly const &rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, IntPoly const &rhs) { return lhs -= rhs; }
  friend IntPoly operator*(IntPoly const &lhs, IntPoly const &rhs);
  friend bool operator==(IntPoly const &, IntPoly const &) = default;

private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

} // namespace bv::exactmath
