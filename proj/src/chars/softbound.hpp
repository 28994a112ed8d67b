#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chars/chartable.hpp"

namespace bv::chars {

inline constexpr double kBoundMargin = 1e-6;

/// Check of |chi(a')| <= (4/sqrt 3)^n [N(A):A] for a' in A minus the union of
/// n proper subgroups A_i that absorb every element of A with a nonabelian
/// centralizer.
struct SoftBoundReport
{
  bool applicable = false;
  std::string reason; // why not applicable
  grp::Index a = 0;
  grp::Subgroup A;
  std::vector<grp::Subgroup> excluded;
  std::size_t n = 0;
  std::size_t index = 0; // [N(A):A]
  double bound = 0;
  std::vector<grp::Index> regular_part; // A minus the excluded subgroups
  double max_abs = 0;
  std::vector<std::pair<grp::Index, std::size_t>> witnesses; // (a', chi) at the max
  std::size_t violations = 0;
  std::size_t checked = 0;

  bool holds() const { return applicable && violations == 0; }
};

/// A is taken as Z(a), the unique maximal abelian subgroup through an
/// abstractly regular a. The A_i are picked greedily: most uncovered
/// non-regular elements first, then larger order.
SoftBoundReport verify_soft_bound(grp::FiniteGroup const &g, CharacterTable const &t, grp::Index a);

/// max over chi and x in `elements` of |chi(x)|.
double max_abs_value(grp::FiniteGroup const &g, CharacterTable const &t, std::vector<grp::Index> const &elements);

} // namespace bv::chars
