#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "grp/group.hpp"

namespace bv::chars {

using Complex = std::complex<double>;

/// a[i][j][k] = #{(x, y) in C_i x C_j : xy = z} for a fixed z in C_k.
class ClassMultCoeffs
{
public:
  explicit ClassMultCoeffs(grp::FiniteGroup const &g);

  std::size_t classes() const { return r_; }
  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * r_ + j) * r_ + k]; }

private:
  std::size_t r_;
  std::vector<std::uint64_t> a_;
};

/// Irreducible characters by class. Row 0 is the trivial character; the
/// remaining rows are sorted by degree.
struct CharacterTable
{
  std::uint64_t group_order = 0;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> class_orders; // element order per class
  std::vector<std::uint64_t> degrees;
  std::vector<std::vector<Complex>> values; // values[chi][class]

  std::uint64_t seed = 0;
  unsigned attempts = 0;
  /// max |<chi_i, chi_j> - delta_ij| over pairs, inner product normalized by |G|.
  double orthogonality_residual = 0;

  std::size_t size() const { return degrees.size(); }
};

inline constexpr std::uint64_t kDefaultTableSeed = 0x5eedULL;
inline constexpr unsigned kMaxTableAttempts = 32;

/// Burnside's method: common eigenvectors of the class matrices, found as the
/// eigenvectors of a seeded random combination. Throws NumericalError when no
/// attempt separates the characters or validation fails.
CharacterTable character_table(grp::FiniteGroup const &g, std::uint64_t seed = kDefaultTableSeed);

/// Recomputes the orthogonality residual and checks sum of squared degrees.
void validate(CharacterTable const &t);

/// #{(x, y, z) in C_i x C_j x C_k : xy = z} from the character sum. Throws
/// NumericalError if the sum is more than 1e-3 from an integer.
std::uint64_t frobenius_triple_count(CharacterTable const &t, std::size_t i, std::size_t j, std::size_t k);

/// Sum of chi(1)^-t over nontrivial irreducibles.
double character_zeta(CharacterTable const &t, double s);
/// Throws std::invalid_argument for the trivial group.
std::uint64_t min_nontrivial_degree(CharacterTable const &t);

/// Plain-text form: header lines, then one row of "re,im" pairs per character.
void write_table(std::ostream &os, CharacterTable const &t);
CharacterTable read_table(std::istream &is);

} // namespace bv::chars
