#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bv::grp {

using Point = std::uint16_t;

/// Permutation of {0, ..., n-1}; printed 1-based in cycle notation.
///
/// Composition is left-to-right: (s * t)(i) = t(s(i)). Matrices act on row
/// vectors, so matrix products match this convention.
class Perm
{
public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  /// Parses "(1,2,3)(4,5)" or "(1 2 3)(4 5)"; "()" is the identity. Points are
  /// 1-based. Throws ParseError naming the offending token.
  static Perm from_cycles(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<Point const> images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  std::uint64_t order() const;
  /// Extends with fixed points.
  Perm padded(std::size_t degree) const;
  std::string to_cycles() const;

  friend Perm operator*(Perm const &s, Perm const &t);
  friend bool operator==(Perm const &, Perm const &) = default;

private:
  std::vector<Point> images_;
};

/// FNV-1a over the image array, finalized with a bit mixer.
std::uint64_t hash_images(std::span<Point const> images);

} // namespace bv::grp
