#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "exactmath/intpoly.hpp"

namespace bv::tori {

using exactmath::BigInt;
using exactmath::IntPoly;

/// Element of the hyperoctahedral group (Z/2)^r x| S_r, acting on the
/// coordinate vectors by e_i -> sign[i] e_perm[i]. Equivalently a
/// permutation of {1..r, 1'..r'} preserving the pairs {i, i'}.
class SignedPerm
{
public:
  SignedPerm() = default;
  SignedPerm(std::vector<unsigned> perm, std::vector<int> signs);

  static SignedPerm identity(unsigned r);
  /// Cycle notation on the points 1..r and 1'..r', e.g. "(1,2,3,1',2',3')"
  /// or "(1 2)(1' 2')". The pairing must be respected.
  static SignedPerm parse(std::string_view text, unsigned r);

  unsigned rank() const { return static_cast<unsigned>(perm_.size()); }
  unsigned perm(unsigned i) const { return perm_[i]; }
  int sign(unsigned i) const { return signs_[i]; }
  /// Number of -1 signs is even (the type-D subgroup).
  bool is_even() const;

  struct Cycle
  {
    unsigned length;
    int sign; // product of signs along the cycle
  };
  std::vector<Cycle> cycles() const;

  /// Signed permutation matrix (rows are images of basis vectors).
  std::vector<std::vector<int>> matrix() const;
  std::string to_string() const;

  friend SignedPerm operator*(SignedPerm const &a, SignedPerm const &b);
  friend bool operator==(SignedPerm const &, SignedPerm const &) = default;

private:
  std::vector<unsigned> perm_;
  std::vector<int> signs_;
};

/// prod over cycles of (x^L - sign): the monic det(xM - I) up to sign.
IntPoly cycle_polynomial(SignedPerm const &w);

/// |det(s q M - I)| computed as an exact integer determinant, s = twist.
BigInt torus_det(SignedPerm const &w, BigInt const &q, int twist = 1);

enum class Ambient { Symmetric, B, D };

/// Order of the centralizer of w in S_r (signs ignored, w must be unsigned),
/// in the hyperoctahedral group, or in its even-sign subgroup, from the
/// cycle type.
BigInt centralizer_order(SignedPerm const &w, Ambient ambient);

/// Centralizer by enumeration: candidates commuting on the permutation part
/// first, then every sign vector. Needs r <= 8.
std::vector<SignedPerm> centralizer_elements(SignedPerm const &w, Ambient ambient);

/// Invariant factors d_1 | d_2 | ... of a finite abelian group given by its
/// element orders; empty for the trivial group.
std::vector<std::uint64_t> invariant_factors(std::vector<std::uint64_t> const &element_orders);

std::uint64_t element_order(SignedPerm const &w);

} // namespace bv::tori
