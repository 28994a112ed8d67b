#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace bv::gf {

/// Raw element of a finite field: the integer sum d_i p^i encoding the
/// residue sum d_i x^i modulo the field's defining polynomial.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<Field const>;

/// Largest field order for which log/exp tables are built.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/// F_{p^e} with a deterministic modulus: the monic irreducible of degree e
/// whose coefficient encoding sum c_i p^i (i < e) is smallest.
class Field
{
public:
  Field(unsigned p, unsigned e);

  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  std::uint32_t q() const { return q_; }
  /// Ascending coefficients, monic, size e + 1.
  std::vector<unsigned> const &modulus() const { return modulus_; }
  /// Smallest-encoded element of multiplicative order q - 1.
  Elem primitive() const { return primitive_; }
  std::string name() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t n) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }
  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const;

  /// Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
  std::uint64_t order(Elem a) const;

  bool contains(Elem a) const { return a < q_; }

private:
  unsigned p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_;
  Elem primitive_ = 1;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

/// Memoized; throws std::invalid_argument for composite p or e == 0 and
/// CapExceeded above kMaxFieldOrder.
FieldPtr make_field(unsigned p, unsigned e);
/// Field of the given prime-power order.
FieldPtr make_field_of_order(std::uint64_t q);

/// Value-like field element carrying its owner. Mixing owners throws.
class FieldElement
{
public:
  FieldElement(FieldPtr field, Elem value);

  FieldPtr const &field() const { return field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(FieldElement const &rhs) const;
  FieldElement operator-(FieldElement const &rhs) const;
  FieldElement operator*(FieldElement const &rhs) const;
  FieldElement operator/(FieldElement const &rhs) const;
  FieldElement pow(std::uint64_t n) const;
  FieldElement inverse() const;
  std::uint64_t order() const;

  friend bool operator==(FieldElement const &a, FieldElement const &b)
  { return a.field_ == b.field_ && a.value_ == b.value_; }

private:
  void check_same(FieldElement const &rhs) const;

  FieldPtr field_;
  Elem value_;
};

} // namespace bv::gf
