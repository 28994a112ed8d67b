#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tori/signed_perm.hpp"

namespace bv::tori {

/// The sixteen cases with their own Weyl-element choice.
enum class TypeCase {
  A, A2, B, C, D0mod4, D2mod4, Dodd, D2even, D2odd, D4_3, E6, E6_2, E7, E8, F4, G2
};

std::string case_name(TypeCase c);
std::vector<TypeCase> all_cases();
/// Smallest rank at which the case is defined (fixed rank for exceptional types).
unsigned min_rank(TypeCase c);
bool rank_allowed(TypeCase c, unsigned r);

/// Resolves a type name ("A", "2A", "B", "C", "D", "2D", "3D4", "E6", "2E6",
/// "E7", "E8", "F4", "G2") and rank to its case; D and 2D split by r.
TypeCase resolve_case(std::string const &type, unsigned r);

struct WeylData
{
  SignedPerm w;
  Ambient ambient;
  /// Centralizer order and, when abelian and small enough to enumerate,
  /// its invariant factors.
  BigInt centralizer_order;
  std::optional<std::vector<std::uint64_t>> structure;
};

struct TorusPair
{
  TypeCase type_case;
  std::string type; // user-facing name
  unsigned rank;
  IntPoly order1, order2;
  /// Classical types only. A-types act on r+1 points; the trivial summand is
  /// divided out when evaluating torus orders.
  std::optional<WeylData> w1, w2;
  int twist = 1; // -1: evaluate at -q (2A)
};

/// Throws std::invalid_argument for an unknown type or a rank outside the case.
TorusPair torus_pair_for(std::string const &type, unsigned r);

/// |Z(G)| of the simply connected group.
BigInt center_order(TypeCase c, unsigned r, std::uint64_t q);

/// |T_i| from the Weyl element (det(s q w - 1), reduced for A-types).
BigInt torus_order_from_weyl(TorusPair const &pair, int which, std::uint64_t q);

struct CenterCertificate
{
  std::uint64_t q;
  BigInt order1, order2, gcd, center, resultant;
  bool divides;           // gcd | |Z(G)|
  bool resultant_divides; // gcd | res(order1, order2)
};

/// Throws std::invalid_argument if q is not a prime power.
CenterCertificate gcd_divides_center(TorusPair const &pair, std::uint64_t q);

/// Weyl centralizer with order from the cycle type and structure by
/// enumeration for rank <= 8.
WeylData weyl_data(SignedPerm const &w, Ambient ambient);

} // namespace bv::tori
