#pragma once

#include <string>
#include <string_view>

#include "grp/group.hpp"

namespace bv::grp {

enum class GroupKind { Alternating, Symmetric, SL, PSL, SU, File };

/// Which group a computation targets: G itself or G / Z(G).
enum class Level { Group, Quotient };

Level parse_level(std::string_view text);
std::string to_string(Level level);

/// "A5", "S6", "SL(2,7)", "PSL(2,7)", "SU(3,3)" or "@path" (one generator in
/// cycle notation per line; blank lines and '#' comments ignored).
struct GroupSpec
{
  GroupKind kind = GroupKind::Alternating;
  unsigned n = 0;
  unsigned q = 0;
  std::string path;

  static GroupSpec parse(std::string_view text);
  std::string canonical() const;
  friend bool operator==(GroupSpec const &, GroupSpec const &) = default;
};

/// Builds the group at the requested level. For SL and SU the quotient is
/// realized on projective points; other groups fall back to the coset action.
GroupPtr build_group(GroupSpec const &spec, Level level = Level::Group, std::size_t cap = kDefaultGroupCap);

/// Matrix notation for linear matrix groups, cycle notation otherwise.
std::string format_element(FiniteGroup const &g, Index x);
/// Inverse of format_element; throws ParseError if the text is malformed or
/// the element is not in g.
Index parse_element(FiniteGroup const &g, std::string_view text);

/// Degree-n matrix group generated by `gens` over F_q, as a linear or
/// projective permutation group.
GroupPtr matrix_group(gf::FieldPtr const &f, unsigned n, std::vector<Matrix> const &gens, bool projective,
                      std::string name, std::size_t cap = kDefaultGroupCap);

} // namespace bv::grp
