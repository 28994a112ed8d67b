#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gf/field.hpp"

namespace bv::gf {

/// Polynomial over a finite field, ascending coefficients, trimmed.
class FqPoly
{
public:
  explicit FqPoly(FieldPtr field, std::vector<Elem> coeffs = {});

  static FqPoly monomial(FieldPtr field, Elem c, unsigned degree);
  /// x - a
  static FqPoly linear(FieldPtr field, Elem a);

  FieldPtr const &field() const { return field_; }
  std::vector<Elem> const &coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  Elem eval(Elem x) const;
  FqPoly monic() const;
  FqPoly derivative() const;
  std::pair<FqPoly, FqPoly> divmod(FqPoly const &d) const;

  bool is_squarefree() const;
  /// Ben-Or: gcd(f, x^{q^i} - x) == 1 for all i <= deg/2.
  bool is_irreducible() const;

  std::string to_string(char var = 'x') const;

  friend FqPoly operator+(FqPoly const &a, FqPoly const &b);
  friend FqPoly operator-(FqPoly const &a, FqPoly const &b);
  friend FqPoly operator*(FqPoly const &a, FqPoly const &b);
  friend bool operator==(FqPoly const &a, FqPoly const &b)
  { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

/// Monic gcd.
FqPoly gcd(FqPoly a, FqPoly b);
/// base^e mod m
FqPoly powmod(FqPoly base, std::uint64_t e, FqPoly const &m);

/// Explicit embedding of F_{p^s} into F_{p^t} (s | t), sending x to the
/// smallest-encoded root of the small field's modulus.
class Embedding
{
public:
  Embedding(FieldPtr small, FieldPtr big);

  FieldPtr const &small() const { return small_; }
  FieldPtr const &big() const { return big_; }
  Elem to_big(Elem a) const { return forward_[a]; }
  std::optional<Elem> to_small(Elem b) const;

private:
  FieldPtr small_;
  FieldPtr big_;
  std::vector<Elem> forward_;
  std::vector<std::int64_t> backward_;
};

/// a^((Q-1)/(q-1)) with Q = |owner|, q = p^sub_degree; the result lies in
/// the subfield but is returned as an owner element.
FieldElement relative_norm(FieldElement const &a, unsigned sub_degree);
/// Same norm, pulled back into the small field of the embedding.
FieldElement relative_norm(FieldElement const &a, Embedding const &emb);

/// Least d >= 1 with a^(q^d) == a.
unsigned degree_over(FieldElement const &a, std::uint64_t q);

/// alpha in F_{q^n} of norm one with F_q(alpha) = F_{q^n}, built as
/// gamma^(q-1) for the first primitive gamma (in encoding order) that works.
FieldElement norm_one_generator(std::uint64_t q, unsigned n);

/// Monic minimal polynomial of a over base (base must embed in a's field).
FqPoly minimal_polynomial(FieldElement const &a, FieldPtr const &base);

} // namespace bv::gf
