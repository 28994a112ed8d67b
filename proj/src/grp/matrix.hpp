#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gf/fqpoly.hpp"
#include "grp/perm.hpp"

namespace bv::grp {

/// Dense n x n matrix over a finite field, row-major.
struct Matrix
{
  unsigned n = 0;
  std::vector<gf::Elem> a;

  gf::Elem operator()(unsigned i, unsigned j) const { return a[i * n + j]; }
  gf::Elem &operator()(unsigned i, unsigned j) { return a[i * n + j]; }

  static Matrix identity(unsigned n);
  friend bool operator==(Matrix const &, Matrix const &) = default;
};

Matrix mat_mul(gf::Field const &f, Matrix const &x, Matrix const &y);
gf::Elem determinant(gf::Field const &f, Matrix m);
/// Characteristic polynomial det(xI - M), via Hessenberg reduction.
gf::FqPoly characteristic_polynomial(gf::FieldPtr const &f, Matrix m);
/// Companion matrix of a monic polynomial (last row holds -c_0 .. -c_{n-1}).
Matrix companion(gf::FqPoly const &monic_poly);
/// Block diagonal sum.
Matrix direct_sum(Matrix const &x, Matrix const &y);
/// Apply the field automorphism x -> x^power entrywise.
Matrix entrywise_pow(gf::Field const &f, Matrix const &m, std::uint64_t power);
Matrix transpose(Matrix const &m);

/// "[[a,b],[c,d]]" with entries as field-element encodings.
std::string format_matrix(Matrix const &m);
Matrix parse_matrix(std::string_view text, gf::Field const &f);

/// Faithful permutation action of a matrix group on row vectors of F_q^n
/// (linear), or on normalized representatives of 1-spaces (projective).
class MatrixAction
{
public:
  MatrixAction(gf::FieldPtr field, unsigned n, bool projective);

  gf::FieldPtr const &field() const { return field_; }
  unsigned dimension() const { return n_; }
  bool projective() const { return projective_; }
  std::size_t degree() const { return projective_ ? points_.size() : vector_count_; }

  Perm perm_of(Matrix const &m) const;
  /// Linear action only: rows are the images of the basis vectors.
  Matrix matrix_of(Perm const &p) const;

private:
  std::vector<gf::Elem> decode(std::uint64_t v) const;
  std::uint64_t encode(std::vector<gf::Elem> const &v) const;
  std::uint64_t normalize(std::vector<gf::Elem> v) const;

  gf::FieldPtr field_;
  unsigned n_;
  bool projective_;
  std::uint64_t vector_count_;
  std::vector<std::uint64_t> points_;
  std::vector<std::int32_t> point_index_;
};

} // namespace bv::grp
